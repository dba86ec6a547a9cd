//! Exact reliability from Hilbert numerators, and truncation bounds.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hilbert::hilbert_numerator;
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::mvtree::{mayer_vietoris_tree, PivotStrategy};
use crate::polynomial::MultigradedPolynomial;
use crate::reliability::probability::{ProbabilityTable, SlotMap};
use crate::reliability::system::SystemSpec;
use crate::scalar::Scalar;

/// Probability of the event described by a monomial: per component, the
/// slots covered must be exactly `1..=k`, worth `Pr(c >= k)`.
pub fn monomial_probability<T: Scalar>(m: &Monomial, probs: &ProbabilityTable<T>, slots: &SlotMap) -> Result<T> {
    let comps = slots.num_components();
    let mut count = vec![0u32; comps];
    let mut top = vec![0u32; comps];
    for v in m.support() {
        let e = m.exponent(v);
        let list = slots.slots(v);
        if e as usize > list.len() {
            return Err(Error::CapExceeded { var: v, exponent: e, cap: list.len() as u32 });
        }
        for &(c, s) in &list[..e as usize] {
            count[c] += 1;
            top[c] = top[c].max(s);
        }
    }
    let mut value = T::one();
    for c in 0..comps {
        if count[c] != top[c] {
            return Err(Error::NonPrefixSlots { component: c });
        }
        if count[c] > 0 {
            value = value * probs.at_least(c, count[c]);
        }
    }
    Ok(value)
}

/// Evaluates a Hilbert numerator at a probability table.
pub fn evaluate<T: Scalar>(h: &MultigradedPolynomial, probs: &ProbabilityTable<T>, slots: &SlotMap) -> Result<T> {
    if h.num_vars() != slots.num_vars() {
        return Err(Error::ArityMismatch { expected: slots.num_vars(), found: h.num_vars() });
    }
    let mut total = T::zero();
    for (m, c) in h.sorted_terms() {
        total = total + T::from_bigint(c) * monomial_probability(m, probs, slots)?;
    }
    Ok(total)
}

/// Reliability of a system at one level.
#[derive(Debug, Clone, PartialEq)]
pub struct ReliabilityReport<T> {
    pub level: u32,
    /// `R_{S,j} = Pr(phi >= j)`.
    pub reliability: T,
    /// `r_{S,j} = Pr(phi = j)`.
    pub point_mass: T,
    pub bounds: Option<Vec<Bound<T>>>,
}

/// `R_{S,j}` through the Hilbert numerator of the j-reliability ideal;
/// `R_{S,0} = 1` and levels above the top are impossible.
pub fn level_reliability<T: Scalar>(system: &SystemSpec, probs: &ProbabilityTable<T>, j: u32) -> Result<T> {
    probs.check_states(system.states())?;
    if j == 0 {
        return Ok(T::one());
    }
    if j > system.levels() {
        return Ok(T::zero());
    }
    let ideal = system.j_reliability_ideal(j)?;
    evaluate(&hilbert_numerator(&ideal), probs, &SlotMap::direct(system.states()))
}

pub fn reliability<T: Scalar>(system: &SystemSpec, probs: &ProbabilityTable<T>, j: u32) -> Result<ReliabilityReport<T>> {
    if j > system.levels() {
        return Err(Error::LevelOutOfRange { level: j, max: system.levels() });
    }
    let r = level_reliability(system, probs, j)?;
    let above = level_reliability(system, probs, j + 1)?;
    Ok(ReliabilityReport { level: j, point_mass: r.clone() - above, reliability: r, bounds: None })
}

/// Reports for every level `0..=m`, computing each numerator once.
pub fn reliability_levels<T: Scalar>(system: &SystemSpec, probs: &ProbabilityTable<T>) -> Result<Vec<ReliabilityReport<T>>> {
    let values = (0..=system.levels() + 1).map(|j| level_reliability(system, probs, j)).collect::<Result<Vec<T>>>()?;
    Ok((0..=system.levels())
        .map(|j| ReliabilityReport {
            level: j,
            reliability: values[j as usize].clone(),
            point_mass: values[j as usize].clone() - values[j as usize + 1].clone(),
            bounds: None,
        })
        .collect())
}

/// Which side of the exact value a truncation is expected on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Upper,
    Lower,
}

/// A truncated alternating sum through homological degree `depth`.
#[derive(Debug, Clone, PartialEq)]
pub struct Bound<T> {
    pub depth: usize,
    pub value: T,
    /// Upper after even depths, lower after odd ones.
    pub direction: Direction,
    /// Whether the value really lies on the claimed side of the exact value.
    pub holds: bool,
}

/// Resolution whose ranks feed the ladder.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Ladder {
    #[default]
    MayerVietoris,
    /// Full Taylor complex (inclusion-exclusion); limited to 20 generators.
    Taylor,
}

/// Multidegrees per homological degree of the chosen resolution.
pub fn ladder_multidegrees(ideal: &MonomialIdeal, ladder: Ladder) -> Result<BTreeMap<(usize, Monomial), u64>> {
    if ideal.is_zero() {
        return Ok(BTreeMap::new());
    }
    match ladder {
        Ladder::MayerVietoris => Ok(mayer_vietoris_tree(ideal, &PivotStrategy::Last)?.multidegree_counts()),
        Ladder::Taylor => {
            let gens = ideal.generators();
            if gens.len() > 20 {
                return Err(Error::GeneratorLimit { limit: 20, found: gens.len() });
            }
            let mut out = BTreeMap::new();
            for mask in 1u32..(1 << gens.len()) {
                let mut lcm = Monomial::one(ideal.num_vars());
                for (i, g) in gens.iter().enumerate() {
                    if mask >> i & 1 == 1 {
                        lcm = lcm.lcm(g);
                    }
                }
                *out.entry((mask.count_ones() as usize - 1, lcm)).or_insert(0) += 1;
            }
            Ok(out)
        }
    }
}

/// Partial sums of the alternating rank formula, one per homological
/// degree, each compared against `exact`.
pub fn bounds_for_ideal<T: Scalar>(
    ideal: &MonomialIdeal,
    probs: &ProbabilityTable<T>,
    slots: &SlotMap,
    ladder: Ladder,
    exact: &T,
) -> Result<Vec<Bound<T>>> {
    let mut per_depth: Vec<T> = Vec::new();
    for ((d, mu), count) in ladder_multidegrees(ideal, ladder)? {
        while per_depth.len() <= d {
            per_depth.push(T::zero());
        }
        let v = monomial_probability(&mu, probs, slots)? * T::from_bigint(&count.into());
        per_depth[d] = per_depth[d].clone() + v;
    }
    let tol = T::tolerance();
    let mut acc = T::zero();
    Ok(per_depth
        .into_iter()
        .enumerate()
        .map(|(depth, v)| {
            acc = if depth % 2 == 0 { acc.clone() + v } else { acc.clone() - v };
            let direction = if depth % 2 == 0 { Direction::Upper } else { Direction::Lower };
            let holds = match direction {
                Direction::Upper => acc.clone() + tol.clone() >= *exact,
                Direction::Lower => acc.clone() <= exact.clone() + tol.clone(),
            };
            Bound { depth, value: acc.clone(), direction, holds }
        })
        .collect())
}

/// Bounds ladder for `R_{S,j}`, optionally cut after `max_depth`.
pub fn bounds<T: Scalar>(
    system: &SystemSpec,
    probs: &ProbabilityTable<T>,
    j: u32,
    ladder: Ladder,
    max_depth: Option<usize>,
) -> Result<ReliabilityReport<T>> {
    let mut report = reliability(system, probs, j)?;
    let mut ladder = if j == 0 {
        Vec::new()
    } else {
        let ideal = system.j_reliability_ideal(j)?;
        bounds_for_ideal(&ideal, probs, &SlotMap::direct(system.states()), ladder, &report.reliability)?
    };
    if let Some(d) = max_depth {
        ladder.truncate(d + 1);
    }
    report.bounds = Some(ladder);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::reliability::system::SystemSource;
    use crate::scalar::{parse_rational, Rational};

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn parallel_pair() {
        let s = SystemSpec::new(vec![1, 1], 1, SystemSource::BinaryKOfN(1)).unwrap();
        let p = ProbabilityTable::iid(2, vec![q("0.1"), q("0.9")]).unwrap();
        let r = bounds(&s, &p, 1, Ladder::MayerVietoris, None).unwrap();
        assert_eq!(r.reliability, q("0.99"));
        let ladder = r.bounds.unwrap();
        assert_eq!(ladder[0].value, q("1.8"));
        assert_eq!(ladder[0].direction, Direction::Upper);
        assert_eq!(ladder.last().unwrap().value, q("0.99"));
        assert!(ladder.iter().all(|b| b.holds));
    }

    #[test]
    fn series_ladder_is_flat() {
        let s = SystemSpec::new(vec![1, 1, 1], 1, SystemSource::BinaryKOfN(3)).unwrap();
        let p = ProbabilityTable::iid(3, vec![q("0.5"), q("0.5")]).unwrap();
        let ladder = bounds(&s, &p, 1, Ladder::Taylor, None).unwrap().bounds.unwrap();
        assert_eq!(ladder.len(), 1);
        assert_eq!(ladder[0].value, q("0.125"));
    }

    #[test]
    fn non_prefix_slots_are_rejected() {
        let slots = SlotMap::new(vec![vec![(0, 1)], vec![(0, 2)]], 1).unwrap();
        assert!(SlotMap::new(vec![vec![(0, 1)], vec![(0, 1)]], 1).is_err());
        let p = ProbabilityTable::new(vec![vec![q("0.2"), q("0.3"), q("0.5")]]).unwrap();
        let m = Monomial::new(vec![0, 1]);
        assert_eq!(monomial_probability(&m, &p, &slots), Err(Error::NonPrefixSlots { component: 0 }));
        assert_eq!(monomial_probability(&Monomial::new(vec![1, 1]), &p, &slots).unwrap(), q("0.5"));
    }

    #[test]
    fn float_evaluation() {
        let s = SystemSpec::new(vec![1, 1], 1, SystemSource::BinaryKOfN(1)).unwrap();
        let p = ProbabilityTable::iid(2, vec![0.1f64, 0.9]).unwrap();
        assert!((reliability(&s, &p, 1).unwrap().reliability - 0.99).abs() < 1e-12);
    }
}
