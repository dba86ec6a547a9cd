//! Multigraded Hilbert series numerators of monomial ideals.
//!
//! The numerator `N(I)` satisfies `sum of monomials in I = N(I) / prod(1 - x_i)`.
//! It is computed through the numerator `K(I) = 1 - N(I)` of `S/I` with the
//! pivot recursion
//!
//! ```text
//! K(I) = K(I + <p>) + p * K(I : p)
//! ```
//!
//! where `p` is a power of the variable occurring in most generators.
//! Variable-disjoint components are split off and multiplied, and results
//! are memoized on the canonical generator list.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::One;

use crate::ideal::{minimal_subset, MonomialIdeal};
use crate::monomial::Monomial;
use crate::polynomial::MultigradedPolynomial;

/// Multigraded numerator `N(I)` of the Hilbert series of the ideal `I`.
///
/// The zero ideal gives `0`, the unit ideal gives `1`.
pub fn hilbert_numerator(ideal: &MonomialIdeal) -> MultigradedPolynomial {
    let n = ideal.num_vars();
    let mut engine = Engine::new(n);
    let k = engine.quotient_numerator(ideal.generators().to_vec());
    let mut out = MultigradedPolynomial::one(n);
    out.sub_assign(&k);
    out
}

/// Numerator `K(I)` of the Hilbert series of `S/I`.
pub fn quotient_numerator(ideal: &MonomialIdeal) -> MultigradedPolynomial {
    Engine::new(ideal.num_vars()).quotient_numerator(ideal.generators().to_vec())
}

/// Total-degree specialization of [`hilbert_numerator`], as coefficients of
/// `t^0, t^1, ...`.
pub fn graded_numerator(ideal: &MonomialIdeal) -> Vec<BigInt> {
    hilbert_numerator(ideal).total_degree_specialization()
}

struct Engine {
    num_vars: usize,
    memo: HashMap<Vec<Monomial>, MultigradedPolynomial>,
    memo_words: usize,
}

/// Once the cached keys and values hold this many exponents in total, the
/// memo stops growing (about 200 MB).
const MEMO_WORD_BUDGET: usize = 50_000_000;

impl Engine {
    fn new(num_vars: usize) -> Self {
        Self { num_vars, memo: HashMap::new(), memo_words: 0 }
    }

    /// `gens` must be minimal; order does not matter.
    fn quotient_numerator(&mut self, mut gens: Vec<Monomial>) -> MultigradedPolynomial {
        let n = self.num_vars;
        if gens.is_empty() {
            return MultigradedPolynomial::one(n);
        }
        if gens.iter().any(Monomial::is_one) {
            return MultigradedPolynomial::zero(n);
        }
        if gens.len() == 1 {
            return one_minus(&gens[0]);
        }
        if gens.len() == 2 {
            let mut k = one_minus(&gens[0]);
            k.add_term(gens[1].clone(), -BigInt::one());
            k.add_term(gens[0].lcm(&gens[1]), BigInt::one());
            return k;
        }
        gens.sort_unstable_by(|a, b| b.cmp(a));
        if let Some(hit) = self.memo.get(&gens) {
            return hit.clone();
        }

        let components = split_components(&gens, n);
        let result = if components.len() > 1 {
            let mut acc = MultigradedPolynomial::one(n);
            for comp in components {
                let k = self.quotient_numerator(comp);
                acc = acc.mul(&k);
            }
            acc
        } else {
            let pivot = choose_pivot(&gens, n);
            // I + <p>
            let mut plus: Vec<Monomial> = gens.iter().filter(|g| !pivot.divides(g)).cloned().collect();
            plus.push(pivot.clone());
            // I : p
            let colon = minimal_subset(gens.iter().map(|g| g.colon(&pivot)).collect());
            let mut k = self.quotient_numerator(plus);
            let tail = self.quotient_numerator(colon).shift(&pivot);
            k.add_assign(&tail);
            k
        };
        let words = (gens.len() + result.len()) * n;
        if self.memo_words + words <= MEMO_WORD_BUDGET {
            self.memo_words += words;
            self.memo.insert(gens, result.clone());
        }
        result
    }
}

fn one_minus(m: &Monomial) -> MultigradedPolynomial {
    let mut k = MultigradedPolynomial::one(m.num_vars());
    k.add_term(m.clone(), -BigInt::one());
    k
}

/// Groups generators into classes connected through shared variables.
fn split_components(gens: &[Monomial], n: usize) -> Vec<Vec<Monomial>> {
    // union-find over variables
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for g in gens {
        let mut support = g.support();
        if let Some(first) = support.next() {
            let root = find(&mut parent, first);
            for v in support {
                let r = find(&mut parent, v);
                if r != root {
                    parent[r] = root;
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Monomial>> = HashMap::new();
    for g in gens {
        let first = g.support().next().expect("non-unit generator");
        let root = find(&mut parent, first);
        groups.entry(root).or_default().push(g.clone());
    }
    let mut out: Vec<Vec<Monomial>> = groups.into_values().collect();
    out.sort();
    out
}

/// Power `x^e` of the most frequent variable, `e` the median exponent of `x`
/// over the non-pure-power generators containing it.
fn choose_pivot(gens: &[Monomial], n: usize) -> Monomial {
    let mut counts = vec![0usize; n];
    for g in gens {
        for v in g.support() {
            counts[v] += 1;
        }
    }
    let var = (0..n).max_by_key(|&v| (counts[v], std::cmp::Reverse(v))).expect("non-empty ring");
    let mut exps: Vec<u32> = gens
        .iter()
        .filter(|g| g.exponent(var) > 0 && g.support_size() > 1)
        .map(|g| g.exponent(var))
        .collect();
    exps.sort_unstable();
    let e = exps.get(exps.len().saturating_sub(1) / 2).copied().unwrap_or(1);
    Monomial::var_power(n, var, e)
}
