//! Independent brute-force oracles shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use proptest::prelude::*;

use depolar::polar::{OrderedSupportPoset, PathPartition};
use depolar::{polarize_ideal, Monomial, MonomialIdeal, MultigradedPolynomial, Rational};

/// Numerator of the Hilbert series of `I` by inclusion-exclusion over all
/// subsets of generators.
pub fn taylor_numerator(ideal: &MonomialIdeal) -> MultigradedPolynomial {
    let gens = ideal.generators();
    assert!(gens.len() <= 16, "Taylor oracle is exponential");
    let n = ideal.num_vars();
    let mut terms = Vec::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut lcm = Monomial::one(n);
        for (i, g) in gens.iter().enumerate() {
            if mask >> i & 1 == 1 {
                lcm = lcm.lcm(g);
            }
        }
        let sign = if mask.count_ones() % 2 == 1 { 1 } else { -1 };
        terms.push((lcm, BigInt::from(sign)));
    }
    MultigradedPolynomial::from_terms(n, terms)
}

/// Every set partition of `items`.
pub fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![Vec::new()];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.push(vec![first]);
        out.push(q);
    }
    out
}

/// Sorts each block bottom-first and the blocks themselves.
pub fn canonical(poset: &OrderedSupportPoset, p: &PathPartition) -> Vec<Vec<usize>> {
    let mut blocks: Vec<Vec<usize>> = p
        .blocks
        .iter()
        .map(|b| {
            let mut b = b.clone();
            b.sort_by(|&x, &y| {
                if poset.precedes(x, y) {
                    std::cmp::Ordering::Less
                } else if poset.precedes(y, x) {
                    std::cmp::Ordering::Greater
                } else {
                    x.cmp(&y)
                }
            });
            b
        })
        .collect();
    blocks.sort();
    blocks
}

/// All path partitions, by filtering set partitions with the literal path
/// definition.
pub fn brute_path_partitions(poset: &OrderedSupportPoset) -> BTreeSet<Vec<Vec<usize>>> {
    assert!(poset.len() <= 9);
    set_partitions(poset.vars())
        .into_iter()
        .filter(|p| p.iter().all(|b| poset.is_path(b)))
        .map(|p| canonical(poset, &PathPartition::new(p)))
        .collect()
}

/// All chain partitions, by filtering set partitions.
pub fn brute_chain_partitions(poset: &OrderedSupportPoset) -> BTreeSet<Vec<Vec<usize>>> {
    assert!(poset.len() <= 9);
    set_partitions(poset.vars())
        .into_iter()
        .filter(|p| {
            p.iter().all(|b| b.iter().enumerate().all(|(i, &x)| b[i + 1..].iter().all(|&y| poset.comparable(x, y))))
        })
        .map(|p| canonical(poset, &PathPartition::new(p)))
        .collect()
}

/// Largest antichain by exhaustive search.
pub fn brute_width(poset: &OrderedSupportPoset) -> usize {
    let vars = poset.vars();
    assert!(vars.len() <= 16);
    (0u32..1 << vars.len())
        .filter(|&mask| {
            let set: Vec<usize> = (0..vars.len()).filter(|&i| mask >> i & 1 == 1).map(|i| vars[i]).collect();
            set.iter().enumerate().all(|(i, &a)| set[i + 1..].iter().all(|&b| !poset.comparable(a, b)))
        })
        .map(|mask| mask.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// A form shared exactly by ideals equal up to renaming of variables.
pub fn canonical_form(ideal: &MonomialIdeal) -> (usize, Vec<Vec<u32>>) {
    let n = ideal.num_vars();
    assert!(n <= 8);
    let best = permutations(n)
        .into_iter()
        .map(|perm| {
            let mut gens: Vec<Vec<u32>> = ideal
                .generators()
                .iter()
                .map(|g| perm.iter().map(|&v| g.exponent(v)).collect())
                .collect();
            gens.sort();
            gens
        })
        .min()
        .unwrap_or_default();
    (n, best)
}

/// Every depolarization of a squarefree ideal using all of its variables,
/// found by merging variables along arbitrary set partitions and keeping
/// the results whose polarization is a renaming of the input.
pub fn brute_depolarizations(ideal: &MonomialIdeal) -> BTreeSet<(usize, Vec<Vec<u32>>)> {
    let n = ideal.num_vars();
    assert!(n <= 7 && ideal.support().len() == n);
    let target = canonical_form(ideal);
    let vars: Vec<usize> = (0..n).collect();
    let mut out = BTreeSet::new();
    for blocks in set_partitions(&vars) {
        let gens: Vec<Monomial> = ideal
            .generators()
            .iter()
            .map(|g| Monomial::new(blocks.iter().map(|b| b.iter().map(|&v| g.exponent(v)).sum()).collect()))
            .collect();
        let j = MonomialIdeal::new(blocks.len(), gens).unwrap();
        if j.len() != ideal.len() {
            continue;
        }
        let (p, _) = polarize_ideal(&j).unwrap();
        if p.num_vars() == n && canonical_form(&p) == target {
            out.insert(canonical_form(&j));
        }
    }
    out
}

/// `Pr(phi >= j)` for identical components by summing over state counts.
pub fn iid_composition_reliability(
    n: usize,
    row: &[Rational],
    j: u32,
    phi: impl Fn(&[u32]) -> u32,
) -> Rational {
    let m = row.len() - 1;
    let mut total = Rational::from_integer(0.into());
    let mut counts = vec![0usize; m + 1];
    compositions(n, 0, &mut counts, &mut |c| {
        let state: Vec<u32> = c.iter().enumerate().flat_map(|(s, &k)| std::iter::repeat_n(s as u32, k)).collect();
        if phi(&state) < j {
            return;
        }
        let mut w = Rational::from_integer(multinomial(n, c));
        for (s, &k) in c.iter().enumerate() {
            for _ in 0..k {
                w *= &row[s];
            }
        }
        total += w;
    });
    total
}

fn compositions(left: usize, at: usize, counts: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
    if at + 1 == counts.len() {
        counts[at] = left;
        f(counts);
        return;
    }
    for k in 0..=left {
        counts[at] = k;
        compositions(left - k, at + 1, counts, f);
    }
}

fn multinomial(n: usize, counts: &[usize]) -> BigInt {
    let fact = |k: usize| (1..=k).fold(BigInt::from(1), |a, i| a * i);
    counts.iter().fold(fact(n), |a, &k| a / fact(k))
}

/// Random proper ideals in at most `max_vars` variables with exponents up
/// to `max_exp`.
pub fn arb_ideal(max_vars: usize, max_exp: u32, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    (1..=max_vars)
        .prop_flat_map(move |n| {
            let gen = proptest::collection::vec(0..=max_exp, n);
            (Just(n), proptest::collection::vec(gen, 1..=max_gens))
        })
        .prop_filter_map("proper", |(n, gens)| {
            let ideal = MonomialIdeal::new(n, gens.into_iter().map(Monomial::new)).ok()?;
            ideal.require_proper().ok()?;
            Some(ideal)
        })
}

/// Random squarefree ideals that use every variable.
pub fn arb_squarefree(max_vars: usize, max_gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    arb_ideal(max_vars, 1, max_gens).prop_filter("full support", |i| i.support().len() == i.num_vars())
}
