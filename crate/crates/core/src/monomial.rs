use serde::{Deserialize, Serialize};

/// A monomial `x_1^a_1 ... x_n^a_n`, stored as its dense exponent vector.
///
/// The all-zero vector is the unit monomial. Ordering is lexicographic on
/// the exponent vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial {
    exponents: Vec<u32>,
}

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Self { exponents }
    }

    pub fn one(num_vars: usize) -> Self {
        Self { exponents: vec![0; num_vars] }
    }

    /// The variable `x_var` in a ring with `num_vars` variables.
    pub fn var(num_vars: usize, var: usize) -> Self {
        Self::var_power(num_vars, var, 1)
    }

    pub fn var_power(num_vars: usize, var: usize, exponent: u32) -> Self {
        let mut exponents = vec![0; num_vars];
        exponents[var] = exponent;
        Self { exponents }
    }

    /// Squarefree monomial on the given variable indices.
    pub fn from_support(num_vars: usize, vars: impl IntoIterator<Item = usize>) -> Self {
        let mut exponents = vec![0; num_vars];
        for v in vars {
            exponents[v] = 1;
        }
        Self { exponents }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn into_exponents(self) -> Vec<u32> {
        self.exponents
    }

    pub fn exponent(&self, var: usize) -> u32 {
        self.exponents[var]
    }

    pub fn num_vars(&self) -> usize {
        self.exponents.len()
    }

    pub fn degree(&self) -> u64 {
        self.exponents.iter().map(|&e| u64::from(e)).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exponents.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exponents.iter().all(|&e| e <= 1)
    }

    /// Indices of the variables dividing this monomial.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
    }

    pub fn support_size(&self) -> usize {
        self.exponents.iter().filter(|&&e| e > 0).count()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        debug_assert_eq!(self.num_vars(), other.num_vars());
        self.exponents.iter().zip(&other.exponents).all(|(a, b)| a <= b)
    }

    /// True if the supports are disjoint.
    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.exponents.iter().zip(&other.exponents).all(|(&a, &b)| a == 0 || b == 0)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a.max(b)).collect(),
        }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a.min(b)).collect(),
        }
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a + b).collect(),
        }
    }

    /// `self / other`, or `None` when `other` does not divide `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        other.divides(self).then(|| Monomial {
            exponents: self.exponents.iter().zip(&other.exponents).map(|(&a, &b)| a - b).collect(),
        })
    }

    /// `self / gcd(self, other)`: the generator of `<self> : other`.
    pub fn colon(&self, other: &Monomial) -> Monomial {
        Monomial {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(&a, &b)| a.saturating_sub(b))
                .collect(),
        }
    }

    /// Sets the exponent of `var` to zero.
    pub fn drop_var(&self, var: usize) -> Monomial {
        let mut exponents = self.exponents.clone();
        exponents[var] = 0;
        Monomial { exponents }
    }
}

impl From<Vec<u32>> for Monomial {
    fn from(exponents: Vec<u32>) -> Self {
        Self::new(exponents)
    }
}
