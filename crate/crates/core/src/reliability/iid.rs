//! Reliability polynomials of systems with identical, permutable components.
//!
//! When the j-reliability ideal is invariant under permuting variables and
//! every component has the same distribution, only the specialization
//! `x_i^a -> P_a = Pr(c >= a)` of the Hilbert numerator matters. It is
//! computed orbit by orbit from the identity
//!
//! ```text
//! K(S/I)_a = sum over F in supp(a) of (-1)^|F| [x^(a - F) not in I]
//! ```
//!
//! which never materializes the multigraded numerator.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::reliability::system::SystemSpec;
use crate::scalar::Scalar;

/// A polynomial in `P_1, ..., P_top`; a term's key counts how many
/// components sit at each level `1..=top`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IidPolynomial {
    top: u32,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl IidPolynomial {
    pub fn top(&self) -> u32 {
        self.top
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    /// Value at `at_least[a - 1] = Pr(c >= a)`; missing levels count as 0.
    pub fn evaluate<T: Scalar>(&self, at_least: &[T]) -> T {
        let p = |a: usize| at_least.get(a).cloned().unwrap_or_else(T::zero);
        let mut total = T::zero();
        for (counts, c) in &self.terms {
            let mut v = T::from_bigint(c);
            for (a, &k) in counts.iter().enumerate() {
                for _ in 0..k {
                    v = v * p(a);
                }
            }
            total = total + v;
        }
        total
    }
}

/// Specialization of the Hilbert numerator of a permutation-invariant ideal
/// at identical components.
pub fn symmetric_numerator(ideal: &MonomialIdeal) -> Result<IidPolynomial> {
    let n = ideal.num_vars();
    if !is_symmetric(ideal) {
        return Err(Error::NotSymmetric);
    }
    let top = ideal.caps().into_iter().max().unwrap_or(0);
    if ideal.is_zero() {
        return Ok(IidPolynomial { top, terms: BTreeMap::new() });
    }
    let mut reps: Vec<Vec<u32>> = ideal.generators().iter().map(sorted_desc).collect();
    reps.sort();
    reps.dedup();

    // an entry matching no generator exponent can be lowered without
    // changing membership, which makes the alternating sum vanish
    let mut values: Vec<u32> = reps.iter().flatten().copied().collect();
    values.push(0);
    values.sort_unstable_by(|a, b| b.cmp(a));
    values.dedup();
    let mut vectors = Vec::new();
    sorted_vectors(n, &values, &mut Vec::with_capacity(n), &mut vectors);
    let factorial: Vec<i128> = (0..=n as i128).scan(1i128, |f, k| {
        if k > 0 {
            *f *= k;
        }
        Some(*f)
    }).collect();

    let terms: BTreeMap<Vec<u32>, BigInt> = vectors
        .par_iter()
        .filter_map(|a| {
            let k = koszul_coefficient(a, &reps);
            if k == 0 {
                return None;
            }
            // multiplicities of each value, zeros included
            let mut counts = vec![0u32; top as usize + 1];
            for &v in a {
                counts[v as usize] += 1;
            }
            let orbit = counts.iter().fold(factorial[n], |acc, &c| acc / factorial[c as usize]);
            let coeff = -(k as i128) * orbit;
            let key = counts[1..].to_vec();
            // the constant term of N(I) = 1 - K(S/I) cancels against 1
            if key.iter().all(|&c| c == 0) {
                return None;
            }
            Some((key, BigInt::from(coeff)))
        })
        .collect::<Vec<_>>()
        .into_iter()
        .collect();
    Ok(IidPolynomial { top, terms })
}

fn sorted_desc(m: &Monomial) -> Vec<u32> {
    let mut v = m.exponents().to_vec();
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

/// Membership of the orbit of a sorted (non-increasing) vector.
fn member(b: &[u32], reps: &[Vec<u32>]) -> bool {
    reps.iter().any(|r| r.iter().zip(b).all(|(x, y)| x <= y))
}

/// `K(S/I)` at the sorted vector `a`: subsets that lower equal entries are
/// interchangeable, so they are counted with binomial weights.
fn koszul_coefficient(a: &[u32], reps: &[Vec<u32>]) -> i64 {
    // runs of equal positive values: (start, length)
    let mut runs: Vec<(usize, usize)> = Vec::new();
    let mut i = 0;
    while i < a.len() && a[i] > 0 {
        let start = i;
        while i < a.len() && a[i] == a[start] {
            i += 1;
        }
        runs.push((start, i - start));
    }
    // every lowered vector lies between `a - 1_supp` and `a`; if both ends
    // agree on membership the alternating sum vanishes
    let floor_member = reps.iter().any(|r| r.iter().zip(a).all(|(&x, &y)| x < y || x == 0));
    if !runs.is_empty() && (floor_member || !member(a, reps)) {
        return 0;
    }
    let mut choice = vec![0usize; runs.len()];
    let mut b = a.to_vec();
    let mut total = 0i64;
    loop {
        // lowering the last `t` entries of a run keeps the vector sorted
        b.copy_from_slice(a);
        let mut weight = 1i64;
        let mut lowered = 0usize;
        for (&(start, len), &t) in runs.iter().zip(&choice) {
            for x in &mut b[start + len - t..start + len] {
                *x -= 1;
            }
            weight *= binomial(len, t);
            lowered += t;
        }
        if !member(&b, reps) {
            total += if lowered.is_multiple_of(2) { weight } else { -weight };
        }
        let mut g = 0;
        loop {
            if g == runs.len() {
                return total;
            }
            if choice[g] < runs[g].1 {
                choice[g] += 1;
                break;
            }
            choice[g] = 0;
            g += 1;
        }
    }
}

fn binomial(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// Non-increasing vectors of length `n` over `values` (given descending).
fn sorted_vectors(n: usize, values: &[u32], prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if prefix.len() == n {
        out.push(prefix.clone());
        return;
    }
    for (i, &v) in values.iter().enumerate() {
        prefix.push(v);
        sorted_vectors(n, &values[i..], prefix, out);
        prefix.pop();
    }
}

/// The generating set is mapped onto itself by a transposition and by a
/// cyclic shift, which together generate all permutations.
fn is_symmetric(ideal: &MonomialIdeal) -> bool {
    let n = ideal.num_vars();
    if n < 2 {
        return true;
    }
    let permuted = |perm: &dyn Fn(usize) -> usize| {
        ideal.map_generators(n, |g| {
            let mut e = vec![0; n];
            for (v, &x) in g.exponents().iter().enumerate() {
                e[perm(v)] = x;
            }
            Monomial::new(e)
        })
    };
    let swap = |v: usize| match v {
        0 => 1,
        1 => 0,
        v => v,
    };
    let shift = |v: usize| (v + 1) % n;
    &permuted(&swap) == ideal && &permuted(&shift) == ideal
}

/// `R_{S,j}` as i.i.d. polynomials for `j = 1..=m`.
pub fn iid_reliability_polynomials(system: &SystemSpec) -> Result<Vec<IidPolynomial>> {
    (1..=system.levels()).map(|j| symmetric_numerator(&system.j_reliability_ideal(j)?)).collect()
}
