//! Quasi-stability (Borel type) of monomial ideals.

use crate::ideal::MonomialIdeal;

/// `I : x_j^inf == I : (x_1, ..., x_j)^inf` for every `j`.
pub fn is_quasi_stable(ideal: &MonomialIdeal) -> bool {
    if ideal.is_zero() || ideal.is_improper() {
        return true;
    }
    let mut prefix: Option<MonomialIdeal> = None;
    for j in 0..ideal.num_vars() {
        let single = ideal.saturate_var(j);
        let joint = match prefix {
            None => single.clone(),
            Some(p) => p.intersection(&single),
        };
        if joint != single {
            return false;
        }
        prefix = Some(joint);
    }
    true
}
