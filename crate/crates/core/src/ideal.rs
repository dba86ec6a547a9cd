use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::monomial::Monomial;

/// A monomial ideal, held as its minimal generating set.
///
/// Generators are pairwise incomparable under divisibility and kept in
/// descending lexicographic order of their exponent vectors, so two ideals
/// are equal exactly when their structures are equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MonomialIdeal {
    num_vars: usize,
    generators: Vec<Monomial>,
}

/// Reduces `gens` to the minimal generating set of the ideal they generate.
///
/// An empty input gives the zero ideal; a unit monomial gives `<1>`. Both are
/// representable and can be detected with [`MonomialIdeal::is_zero`] and
/// [`MonomialIdeal::is_improper`].
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>, num_vars: usize) -> Result<MonomialIdeal> {
    let gens: Vec<Monomial> = gens.into_iter().collect();
    if let Some(bad) = gens.iter().find(|g| g.num_vars() != num_vars) {
        return Err(Error::ArityMismatch { expected: num_vars, found: bad.num_vars() });
    }
    Ok(MonomialIdeal::from_unchecked(num_vars, gens))
}

pub(crate) fn minimal_subset(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|g| g.degree());
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort_by(|a, b| b.cmp(a));
    kept
}

impl MonomialIdeal {
    /// Builds the ideal generated by `gens`, minimalizing them.
    pub fn new(num_vars: usize, gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        minimalize(gens, num_vars)
    }

    /// Convenience constructor from raw exponent vectors.
    pub fn from_exponents(num_vars: usize, gens: &[&[u32]]) -> Result<Self> {
        Self::new(num_vars, gens.iter().map(|e| Monomial::new(e.to_vec())))
    }

    /// Minimalizes without arity checks; callers guarantee matching lengths.
    pub(crate) fn from_unchecked(num_vars: usize, gens: Vec<Monomial>) -> Self {
        Self { num_vars, generators: minimal_subset(gens) }
    }

    /// Wraps generators that are already minimal and canonically sorted.
    pub(crate) fn from_minimal_sorted(num_vars: usize, generators: Vec<Monomial>) -> Self {
        debug_assert!(generators.windows(2).all(|w| w[0] > w[1]));
        Self { num_vars, generators }
    }

    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, generators: Vec::new() }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn generators(&self) -> &[Monomial] {
        &self.generators
    }

    pub fn len(&self) -> usize {
        self.generators.len()
    }

    pub fn is_empty(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn is_improper(&self) -> bool {
        self.generators.iter().any(Monomial::is_one)
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// Errors on the zero ideal and on `<1>`.
    pub fn require_proper(&self) -> Result<()> {
        if self.is_zero() {
            Err(Error::ZeroIdeal)
        } else if self.is_improper() {
            Err(Error::ImproperIdeal)
        } else {
            Ok(())
        }
    }

    pub fn contains(&self, m: &Monomial) -> bool {
        self.generators.iter().any(|g| g.divides(m))
    }

    /// Maximum exponent of each variable over the generators.
    pub fn caps(&self) -> Vec<u32> {
        let mut caps = vec![0; self.num_vars];
        for g in &self.generators {
            for (c, &e) in caps.iter_mut().zip(g.exponents()) {
                *c = (*c).max(e);
            }
        }
        caps
    }

    /// Variables dividing at least one generator.
    pub fn support(&self) -> Vec<usize> {
        let caps = self.caps();
        (0..self.num_vars).filter(|&i| caps[i] > 0).collect()
    }

    /// Least common multiple of all generators.
    pub fn lcm(&self) -> Monomial {
        Monomial::new(self.caps())
    }

    pub fn sum(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let gens = self.generators.iter().chain(&other.generators).cloned().collect();
        Self::from_unchecked(self.num_vars, gens)
    }

    pub fn with_generator(&self, m: Monomial) -> MonomialIdeal {
        if self.contains(&m) {
            return self.clone();
        }
        let mut gens: Vec<Monomial> = self.generators.iter().filter(|g| !m.divides(g)).cloned().collect();
        gens.push(m);
        gens.sort_by(|a, b| b.cmp(a));
        Self::from_minimal_sorted(self.num_vars, gens)
    }

    /// The ideal quotient `I : m`.
    pub fn colon(&self, m: &Monomial) -> MonomialIdeal {
        Self::from_unchecked(self.num_vars, self.generators.iter().map(|g| g.colon(m)).collect())
    }

    pub fn intersection(&self, other: &MonomialIdeal) -> MonomialIdeal {
        let mut gens = Vec::with_capacity(self.len() * other.len());
        for a in &self.generators {
            for b in &other.generators {
                gens.push(a.lcm(b));
            }
        }
        Self::from_unchecked(self.num_vars, gens)
    }

    /// The saturation `I : x_var^inf`.
    pub fn saturate_var(&self, var: usize) -> MonomialIdeal {
        Self::from_unchecked(self.num_vars, self.generators.iter().map(|g| g.drop_var(var)).collect())
    }

    /// Ideal whose generators are `lcm(g, pivot)` over `g` in this ideal, i.e.
    /// `I ∩ <pivot>`.
    pub fn lcm_with(&self, pivot: &Monomial) -> MonomialIdeal {
        Self::from_unchecked(self.num_vars, self.generators.iter().map(|g| g.lcm(pivot)).collect())
    }

    /// Same generators with the one at `index` removed.
    pub fn without(&self, index: usize) -> MonomialIdeal {
        let mut gens = self.generators.clone();
        gens.remove(index);
        Self::from_minimal_sorted(self.num_vars, gens)
    }

    /// Applies `f` to every generator and re-minimalizes in a ring of
    /// `num_vars` variables.
    pub fn map_generators(&self, num_vars: usize, f: impl FnMut(&Monomial) -> Monomial) -> MonomialIdeal {
        Self::from_unchecked(num_vars, self.generators.iter().map(f).collect())
    }
}
