//! Polarization of monomials and monomial ideals.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Assignment of an ordered list of target variables to every source
/// variable.
///
/// For a polarization, `images[i]` lists the slot variables
/// `x_{i,1}, ..., x_{i,cap_i}` in the polarized ring; a source exponent `b`
/// selects the first `b` of them. For a depolarization, `images[j]` lists the
/// squarefree variables merged into `y_j`, in path order. Every target index
/// occurs exactly once across all lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct VariableMap {
    images: Vec<Vec<usize>>,
    target_vars: usize,
}

impl VariableMap {
    pub fn new(images: Vec<Vec<usize>>, target_vars: usize) -> Result<Self> {
        let mut seen = vec![false; target_vars];
        for &t in images.iter().flatten() {
            if t >= target_vars || std::mem::replace(&mut seen[t], true) {
                return Err(Error::InvalidPartition(format!("target variable {t} is repeated or out of range")));
            }
        }
        Ok(Self { images, target_vars })
    }

    /// Slot layout of the polarization with the given caps: slots of each
    /// base variable are contiguous.
    pub fn from_caps(caps: &[u32]) -> Self {
        let mut next = 0;
        let images = caps
            .iter()
            .map(|&c| {
                let slots: Vec<usize> = (next..next + c as usize).collect();
                next += c as usize;
                slots
            })
            .collect();
        Self { images, target_vars: next }
    }

    pub fn identity(num_vars: usize) -> Self {
        Self { images: (0..num_vars).map(|i| vec![i]).collect(), target_vars: num_vars }
    }

    pub fn source_vars(&self) -> usize {
        self.images.len()
    }

    pub fn target_vars(&self) -> usize {
        self.target_vars
    }

    pub fn images(&self) -> &[Vec<usize>] {
        &self.images
    }

    pub fn image(&self, source: usize) -> &[usize] {
        &self.images[source]
    }

    /// For every target variable, the `(source variable, 0-based position)`
    /// pair mapped onto it.
    pub fn inverse(&self) -> Vec<Option<(usize, usize)>> {
        let mut inv = vec![None; self.target_vars];
        for (s, targets) in self.images.iter().enumerate() {
            for (pos, &t) in targets.iter().enumerate() {
                inv[t] = Some((s, pos));
            }
        }
        inv
    }

    /// Caps implied by the layout (length of each image list).
    pub fn caps(&self) -> Vec<u32> {
        self.images.iter().map(|t| t.len() as u32).collect()
    }

    /// Squarefree image of `m`: exponent `b` of source variable `i` turns on
    /// the first `b` targets of `i`.
    pub fn apply(&self, m: &Monomial) -> Result<Monomial> {
        if m.num_vars() != self.images.len() {
            return Err(Error::ArityMismatch { expected: self.images.len(), found: m.num_vars() });
        }
        let mut out = vec![0u32; self.target_vars];
        for (i, &b) in m.exponents().iter().enumerate() {
            let slots = &self.images[i];
            if b as usize > slots.len() {
                return Err(Error::CapExceeded { var: i, exponent: b, cap: slots.len() as u32 });
            }
            for &t in &slots[..b as usize] {
                out[t] = 1;
            }
        }
        Ok(Monomial::new(out))
    }

    /// Collapses a target monomial back onto the source ring by counting the
    /// targets present for each source variable.
    pub fn collapse(&self, m: &Monomial) -> Monomial {
        Monomial::new(
            self.images
                .iter()
                .map(|targets| targets.iter().map(|&t| m.exponent(t)).sum())
                .collect(),
        )
    }
}

/// Polarization of `m` with respect to `caps`.
pub fn polarize_monomial(m: &Monomial, caps: &[u32]) -> Result<Monomial> {
    VariableMap::from_caps(caps).apply(m)
}

/// Polarization `I^P` of a proper ideal, together with its slot layout.
///
/// Caps are the maximum exponents over `G(I)`; variables absent from every
/// generator get no slots.
pub fn polarize_ideal(ideal: &MonomialIdeal) -> Result<(MonomialIdeal, VariableMap)> {
    ideal.require_proper()?;
    let map = VariableMap::from_caps(&ideal.caps());
    let gens = ideal.generators().iter().map(|g| map.apply(g)).collect::<Result<Vec<_>>>()?;
    let polar = MonomialIdeal::new(map.target_vars(), gens)?;
    debug_assert_eq!(polar.len(), ideal.len());
    Ok((polar, map))
}
