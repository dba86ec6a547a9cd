//! Component state distributions and slot layouts for evaluation.

use crate::error::{Error, Result};
use crate::polar::DepolarizationRecord;
use crate::polarize::VariableMap;
use crate::scalar::{Rational, Scalar};

/// Independent component distributions, held as point masses
/// `p_{i,a} = Pr(c_i = a)` and cumulative `P_{i,a} = Pr(c_i >= a)`.
#[derive(Debug, Clone, PartialEq)]
pub struct ProbabilityTable<T> {
    points: Vec<Vec<T>>,
    cumulative: Vec<Vec<T>>,
}

impl<T: Scalar> ProbabilityTable<T> {
    /// `points[i][a]` is the probability that component `i` is in state `a`.
    pub fn new(points: Vec<Vec<T>>) -> Result<Self> {
        let tol = T::tolerance();
        for (i, row) in points.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::InvalidProbabilities(format!("component {} has no states", i + 1)));
            }
            if row.iter().any(|p| *p < T::zero() - tol.clone()) {
                return Err(Error::InvalidProbabilities(format!("component {} has a negative probability", i + 1)));
            }
            let sum = row.iter().fold(T::zero(), |acc, p| acc + p.clone());
            let gap = if sum > T::one() { sum.clone() - T::one() } else { T::one() - sum.clone() };
            if gap > tol {
                return Err(Error::InvalidProbabilities(format!("row of component {} sums to {sum:?}", i + 1)));
            }
        }
        let cumulative = points
            .iter()
            .map(|row| {
                let mut acc = T::zero();
                let mut cum: Vec<T> = row
                    .iter()
                    .rev()
                    .map(|p| {
                        acc = acc.clone() + p.clone();
                        acc.clone()
                    })
                    .collect();
                cum.reverse();
                cum[0] = T::one();
                cum
            })
            .collect();
        Ok(Self { points, cumulative })
    }

    /// Table from `Pr(c_i >= a)` for `a = 1..=m_i`.
    pub fn from_at_least(rows: Vec<Vec<T>>) -> Result<Self> {
        let points = rows
            .into_iter()
            .map(|row| {
                let mut full = vec![T::one()];
                full.extend(row);
                full.push(T::zero());
                full.windows(2).map(|w| w[0].clone() - w[1].clone()).collect()
            })
            .collect();
        Self::new(points)
    }

    /// The same distribution for each of `n` components.
    pub fn iid(n: usize, row: Vec<T>) -> Result<Self> {
        Self::new(vec![row; n])
    }

    pub fn num_components(&self) -> usize {
        self.points.len()
    }

    /// Top state of every component.
    pub fn states(&self) -> Vec<u32> {
        self.points.iter().map(|r| r.len() as u32 - 1).collect()
    }

    pub fn point(&self, i: usize, a: u32) -> T {
        self.points[i].get(a as usize).cloned().unwrap_or_else(T::zero)
    }

    /// `Pr(c_i >= a)`; zero above the top state.
    pub fn at_least(&self, i: usize, a: u32) -> T {
        self.cumulative[i].get(a as usize).cloned().unwrap_or_else(T::zero)
    }

    pub fn points(&self) -> &[Vec<T>] {
        &self.points
    }

    /// Checks the table against a system's component state ranges.
    pub fn check_states(&self, states: &[u32]) -> Result<()> {
        if self.states() != states {
            return Err(Error::InvalidProbabilities(format!(
                "table has top states {:?}, system has {states:?}",
                self.states()
            )));
        }
        Ok(())
    }
}

impl ProbabilityTable<Rational> {
    /// Converts an exact table to another scalar type.
    pub fn to_scalar<U: Scalar>(&self) -> ProbabilityTable<U> {
        let conv = |rows: &[Vec<Rational>]| -> Vec<Vec<U>> {
            rows.iter().map(|r| r.iter().map(U::from_rational).collect()).collect()
        };
        ProbabilityTable { points: conv(&self.points), cumulative: conv(&self.cumulative) }
    }
}

/// For every ring variable, the `(component, slot)` pairs it stands for, in
/// order; a power `v^e` covers the first `e` pairs. Slots are 1-based: the
/// slots `1..=k` of a component together mean "state at least `k`".
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlotMap {
    slots: Vec<Vec<(usize, u32)>>,
    components: usize,
}

impl SlotMap {
    /// Every `(component, slot)` pair may occur once, with slots from 1.
    pub fn new(slots: Vec<Vec<(usize, u32)>>, components: usize) -> Result<Self> {
        let mut seen = std::collections::HashSet::new();
        for &(c, s) in slots.iter().flatten() {
            if c >= components || s == 0 || !seen.insert((c, s)) {
                return Err(Error::InvalidProbabilities(format!("slot ({c}, {s}) is repeated or out of range")));
            }
        }
        Ok(Self { slots, components })
    }

    /// Variable `i` is component `i`; `x_i^a` means state at least `a`.
    pub fn direct(states: &[u32]) -> Self {
        let slots = states.iter().enumerate().map(|(i, &m)| (1..=m).map(|s| (i, s)).collect()).collect();
        Self { slots, components: states.len() }
    }

    /// Slot variables of a polarization: `x_{i,l}` is slot `l` of component `i`.
    pub fn from_polarization(map: &VariableMap) -> Self {
        let slots = map
            .inverse()
            .into_iter()
            .map(|entry| entry.map(|(i, pos)| vec![(i, pos as u32 + 1)]).unwrap_or_default())
            .collect();
        Self { slots, components: map.source_vars() }
    }

    /// Layout of a ring whose variable `j` merges the variables
    /// `merge.image(j)` of this map's ring, in order.
    pub fn merged(&self, merge: &VariableMap) -> Self {
        let slots = merge
            .images()
            .iter()
            .map(|block| block.iter().flat_map(|&v| self.slots[v].iter().copied()).collect())
            .collect();
        Self { slots, components: self.components }
    }

    /// Layout for a depolarization of the polarization described by `polar`.
    pub fn for_depolarization(polar: &VariableMap, record: &DepolarizationRecord) -> Self {
        Self::from_polarization(polar).merged(&record.map)
    }

    pub fn num_vars(&self) -> usize {
        self.slots.len()
    }

    pub fn num_components(&self) -> usize {
        self.components
    }

    pub fn slots(&self, var: usize) -> &[(usize, u32)] {
        &self.slots[var]
    }
}
