//! Ideals with a prescribed support poset.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polar::poset::support_poset;

/// Outcome of [`ideal_from_cover_sets`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverSetsReport {
    pub ideal: MonomialIdeal,
    /// Every variable divides some `m_sigma`.
    pub every_variable_used: bool,
    /// Containment of the `sigma` sets of two variables reverses
    /// containment of their `C` sets.
    pub incidence_condition: bool,
    /// The support poset of `ideal` has exactly the prescribed sets.
    pub poset_matches: bool,
}

impl CoverSetsReport {
    pub fn verified(&self) -> bool {
        self.every_variable_used && self.incidence_condition && self.poset_matches
    }

    /// Names of the checks that failed.
    pub fn failures(&self) -> Vec<&'static str> {
        let mut out = Vec::new();
        if !self.every_variable_used {
            out.push("some variable divides no m_sigma");
        }
        if !self.incidence_condition {
            out.push("sigma-incidence does not reverse C-inclusion");
        }
        if !self.poset_matches {
            out.push("support poset of the result differs from C");
        }
        out
    }
}

/// Builds `I_Sigma = <m_sigma : sigma in Sigma>` with `m_i = prod_{j in C_i} x_j`
/// and `m_sigma = lcm(m_i : i in sigma)`; indices are 0-based.
pub fn ideal_from_cover_sets(cover: &[BTreeSet<usize>], sigma: &[BTreeSet<usize>]) -> Result<CoverSetsReport> {
    let n = cover.len();
    for (i, c) in cover.iter().enumerate() {
        if !c.contains(&i) {
            return Err(Error::CoverSets(format!("{i} is not in C_{i}")));
        }
        if let Some(k) = c.iter().find(|&&k| k >= n) {
            return Err(Error::CoverSets(format!("C_{i} contains {k}, outside 0..{n}")));
        }
    }
    for (i, ci) in cover.iter().enumerate() {
        for (j, cj) in cover.iter().enumerate() {
            if cj.contains(&i) && !ci.is_subset(cj) {
                return Err(Error::CoverSets(format!("transitivity fails: {i} in C_{j} but C_{i} not inside C_{j}")));
            }
        }
    }
    if let Some(s) = sigma.iter().find(|s| s.is_empty() || s.iter().any(|&i| i >= n)) {
        return Err(Error::CoverSets(format!("sigma {s:?} is empty or out of range")));
    }
    let m_sigma: Vec<BTreeSet<usize>> = sigma.iter().map(|s| s.iter().flat_map(|&i| cover[i].iter().copied()).collect()).collect();
    let incidence: Vec<BTreeSet<usize>> =
        (0..n).map(|i| (0..m_sigma.len()).filter(|&s| m_sigma[s].contains(&i)).collect()).collect();
    let every_variable_used = incidence.iter().all(|s| !s.is_empty());
    let incidence_condition = (0..n).all(|i| {
        (0..n).all(|j| !incidence[i].is_subset(&incidence[j]) || cover[j].is_subset(&cover[i]))
    });
    let ideal = MonomialIdeal::new(n, m_sigma.iter().map(|s| Monomial::from_support(n, s.iter().copied())))?;
    let poset_matches = !ideal.is_zero()
        && !ideal.is_improper()
        && support_poset(&ideal).is_ok_and(|p| p.len() == n && (0..n).all(|i| p.set_of(i) == Some(&cover[i])));
    Ok(CoverSetsReport { ideal, every_variable_used, incidence_condition, poset_matches })
}

/// The squarefree ideal built from path lengths, with its generator groups.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DisjointPathsIdeal {
    pub ideal: MonomialIdeal,
    /// `paths[i][j]` is the 0-based variable `a_{i,j}`.
    pub paths: Vec<Vec<usize>>,
    /// Full path products.
    pub g1: Vec<Monomial>,
    /// Prefix products times a first element of another path.
    pub g2: Vec<Monomial>,
    /// Pairwise products of the first elements in `g3_candidates`.
    pub g3: Vec<Monomial>,
    pub g3_candidates: Vec<usize>,
}

/// An ideal whose support poset is the disjoint union of paths with lengths
/// `lengths` (non-increasing, each between 1 and the number of paths).
///
/// Path `i` occupies consecutive variables. Fails when the lengths break the
/// hypotheses, or when the construction does not realise the poset.
pub fn ideal_from_disjoint_paths(lengths: &[usize]) -> Result<DisjointPathsIdeal> {
    let n = lengths.len();
    if n == 0 {
        return Err(Error::PathLengths("no paths given".into()));
    }
    if lengths.windows(2).any(|w| w[0] < w[1]) {
        return Err(Error::PathLengths(format!("lengths {lengths:?} are not non-increasing")));
    }
    if let Some(&m) = lengths.iter().find(|&&m| m == 0 || m > n) {
        return Err(Error::PathLengths(format!("length {m} outside 1..={n}")));
    }
    if n == 1 || (n == 2 && lengths[0] != lengths[1]) {
        return Err(Error::PathLengths(format!(
            "lengths {lengths:?}: with fewer than three paths of unequal lengths no monomial ideal has this support poset"
        )));
    }
    let total: usize = lengths.iter().sum();
    let mut paths = Vec::with_capacity(n);
    let mut next = 0;
    for &m in lengths {
        paths.push((next..next + m).collect::<Vec<usize>>());
        next += m;
    }
    let mono = |vars: &[usize]| Monomial::from_support(total, vars.iter().copied());

    let g1: Vec<Monomial> = paths.iter().filter(|p| p.len() > 1).map(|p| mono(p)).collect();
    let mut g2 = Vec::new();
    let mut b_count = vec![0usize; n];
    for (i, path) in paths.iter().enumerate() {
        for j in 2..path.len() {
            // 1-based (i + j - 1) mod n, folded into 1..=n
            let target = (i + j - 1) % n;
            b_count[target] += 1;
            let mut vars = path[..j].to_vec();
            vars.push(paths[target][0]);
            g2.push(mono(&vars));
        }
    }
    let g3_candidates: Vec<usize> = (0..n)
        .filter(|&i| if lengths[i] == 1 { b_count[i] <= 1 } else { b_count[i] == 0 })
        .map(|i| paths[i][0])
        .collect();
    let mut g3 = Vec::new();
    for (k, &a) in g3_candidates.iter().enumerate() {
        for &b in &g3_candidates[k + 1..] {
            let m = mono(&[a, b]);
            if !g1.iter().chain(&g2).any(|g| m.divides(g)) {
                g3.push(m);
            }
        }
    }
    let ideal = MonomialIdeal::new(total, g1.iter().chain(&g2).chain(&g3).cloned())?;
    let realised = ideal.len() == g1.len() + g2.len() + g3.len()
        && ideal.support().len() == total
        && support_poset(&ideal).is_ok_and(|p| {
            paths.iter().all(|path| {
                path.iter().enumerate().all(|(j, &v)| p.set_of(v).is_some_and(|c| c.iter().eq(path[..=j].iter())))
            })
        });
    if !realised {
        return Err(Error::PathLengths(format!("the construction does not realise lengths {lengths:?}")));
    }
    Ok(DisjointPathsIdeal { ideal, paths, g1, g2, g3, g3_candidates })
}
