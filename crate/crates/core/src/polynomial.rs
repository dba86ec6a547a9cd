use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::monomial::Monomial;

/// Integer-coefficient polynomial indexed by multidegree.
///
/// Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct MultigradedPolynomial {
    num_vars: usize,
    terms: HashMap<Monomial, BigInt>,
}

impl MultigradedPolynomial {
    pub fn zero(num_vars: usize) -> Self {
        Self { num_vars, terms: HashMap::new() }
    }

    pub fn one(num_vars: usize) -> Self {
        Self::monomial(Monomial::one(num_vars), BigInt::one())
    }

    pub fn monomial(m: Monomial, coeff: BigInt) -> Self {
        let mut p = Self::zero(m.num_vars());
        p.add_term(m, coeff);
        p
    }

    pub fn from_terms(num_vars: usize, terms: impl IntoIterator<Item = (Monomial, BigInt)>) -> Self {
        let mut p = Self::zero(num_vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> BigInt {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigInt)> {
        self.terms.iter()
    }

    /// Terms in print order: ascending total degree, then descending
    /// lexicographic multidegree.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &BigInt)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
        terms
    }

    pub fn add_term(&mut self, m: Monomial, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::hash_map::Entry;
        match self.terms.entry(m) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coeff;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
        }
    }

    pub fn add_assign(&mut self, other: &MultigradedPolynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub fn sub_assign(&mut self, other: &MultigradedPolynomial) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), -c);
        }
    }

    pub fn neg(&self) -> MultigradedPolynomial {
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    /// Product with a single monomial.
    pub fn shift(&self, by: &Monomial) -> MultigradedPolynomial {
        Self {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(m, c)| (m.mul(by), c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &MultigradedPolynomial) -> MultigradedPolynomial {
        let mut out = Self::zero(self.num_vars);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                out.add_term(a.mul(b), ca * cb);
            }
        }
        out
    }

    /// Coefficients of the total-degree specialization `x^mu -> t^|mu|`,
    /// indexed by degree.
    pub fn total_degree_specialization(&self) -> Vec<BigInt> {
        let max = self.terms.keys().map(Monomial::degree).max().unwrap_or(0) as usize;
        let mut out = vec![BigInt::zero(); max + 1];
        for (m, c) in &self.terms {
            out[m.degree() as usize] += c;
        }
        while out.len() > 1 && out.last().is_some_and(Zero::is_zero) {
            out.pop();
        }
        out
    }

    /// Renames variables: variable `i` of this ring becomes the monomial
    /// `images[i]` of a ring with `num_vars` variables.
    pub fn substitute(&self, num_vars: usize, images: &[Monomial]) -> MultigradedPolynomial {
        let mut out = Self::zero(num_vars);
        for (m, c) in &self.terms {
            let mut acc = vec![0u32; num_vars];
            for (i, &e) in m.exponents().iter().enumerate() {
                for (a, &b) in acc.iter_mut().zip(images[i].exponents()) {
                    *a += e * b;
                }
            }
            out.add_term(Monomial::new(acc), c.clone());
        }
        out
    }

    /// Formats with the given variable names, e.g. `x*y + y^2 - 2*x*y^2`.
    pub fn display_with<'a>(&'a self, names: &'a [String]) -> impl fmt::Display + 'a {
        PolyDisplay { poly: self, names }
    }
}

struct PolyDisplay<'a> {
    poly: &'a MultigradedPolynomial,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let negative = c.is_negative();
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let abs = c.abs();
            let mono = crate::io::format_monomial(m, self.names);
            if m.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn cancellation_drops_terms() {
        let mut p = MultigradedPolynomial::monomial(m(&[1, 0]), 1.into());
        p.add_term(m(&[1, 0]), (-1).into());
        assert!(p.is_zero());
    }

    #[test]
    fn specialization_and_display() {
        // x + y - xy
        let p = MultigradedPolynomial::from_terms(
            2,
            [(m(&[1, 0]), 1.into()), (m(&[0, 1]), 1.into()), (m(&[1, 1]), (-1).into())],
        );
        assert_eq!(p.total_degree_specialization(), vec![0.into(), 2.into(), (-1).into()]);
        let names = vec!["x".to_string(), "y".to_string()];
        assert_eq!(p.display_with(&names).to_string(), "x + y - x*y");
    }

    #[test]
    fn product() {
        let a = MultigradedPolynomial::from_terms(1, [(m(&[0]), 1.into()), (m(&[1]), (-1).into())]);
        let sq = a.mul(&a);
        assert_eq!(sq.coefficient(&m(&[1])), (-2).into());
        assert_eq!(sq.coefficient(&m(&[2])), 1.into());
    }
}
