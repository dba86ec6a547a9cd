//! Multi-state coherent systems and their j-reliability ideals.

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

/// Where the minimal j-paths of a system come from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SystemSource {
    /// `paths[j - 1]` lists the minimal j-paths as state vectors.
    Paths(Vec<Vec<Vec<u32>>>),
    /// Multi-state k-out-of-n with `(k_1, ..., k_m)`: level at least `j` iff
    /// for some `l >= j` at least `k_l` components are in state `l` or above.
    MsKOfN(Vec<usize>),
    /// The level is the sum of the component states.
    Flow,
    /// Binary; works iff `k` consecutive components work.
    Consecutive(usize),
    /// Binary; works iff at least `k` components work.
    BinaryKOfN(usize),
}

/// A coherent system: component state ranges, system levels and paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SystemSpec {
    states: Vec<u32>,
    levels: u32,
    source: SystemSource,
}

impl SystemSpec {
    /// Validates and builds a system; `states[i]` is the top state of
    /// component `i`.
    pub fn new(states: Vec<u32>, levels: u32, source: SystemSource) -> Result<Self> {
        let n = states.len();
        let bad = |msg: String| Err(Error::InvalidSystem(msg));
        if n == 0 {
            return bad("a system needs at least one component".into());
        }
        if levels == 0 {
            return bad("a system needs at least one level above 0".into());
        }
        let binary = states.iter().all(|&m| m == 1);
        match &source {
            SystemSource::Paths(paths) => {
                if paths.len() != levels as usize {
                    return bad(format!("{} path blocks for {levels} levels", paths.len()));
                }
                for (j, block) in paths.iter().enumerate() {
                    for p in block {
                        if p.len() != n {
                            return bad(format!("level {}: path {p:?} has {} entries, expected {n}", j + 1, p.len()));
                        }
                        if let Some(i) = (0..n).find(|&i| p[i] > states[i]) {
                            return bad(format!("level {}: path {p:?} exceeds top state of component {}", j + 1, i + 1));
                        }
                    }
                    for (a, p) in block.iter().enumerate() {
                        for q in &block[a + 1..] {
                            if dominates(p, q) || dominates(q, p) {
                                return bad(format!("level {}: paths {p:?} and {q:?} are comparable", j + 1));
                            }
                        }
                    }
                    if j > 0 {
                        let lower = &paths[j - 1];
                        if let Some(p) = block.iter().find(|p| !lower.iter().any(|q| dominates(p, q))) {
                            return bad(format!("level {}: path {p:?} does not reach level {}", j + 1, j));
                        }
                    }
                }
            }
            SystemSource::MsKOfN(k) => {
                if k.len() != levels as usize {
                    return bad(format!("{} k-values for {levels} levels", k.len()));
                }
                if let Some(&kl) = k.iter().find(|&&kl| kl == 0 || kl > n) {
                    return bad(format!("k = {kl} outside 1..={n}"));
                }
            }
            SystemSource::Flow => {
                let total: u32 = states.iter().sum();
                if levels != total {
                    return bad(format!("flow system has {total} levels above 0, not {levels}"));
                }
            }
            SystemSource::Consecutive(k) | SystemSource::BinaryKOfN(k) => {
                if !binary || levels != 1 {
                    return bad("this family needs binary components and one level".into());
                }
                if *k == 0 || *k > n {
                    return bad(format!("k = {k} outside 1..={n}"));
                }
            }
        }
        Ok(Self { states, levels, source })
    }

    pub fn num_components(&self) -> usize {
        self.states.len()
    }

    pub fn states(&self) -> &[u32] {
        &self.states
    }

    pub fn levels(&self) -> u32 {
        self.levels
    }

    pub fn source(&self) -> &SystemSource {
        &self.source
    }

    /// Number of state vectors.
    pub fn state_space(&self) -> u128 {
        self.states.iter().map(|&m| m as u128 + 1).product()
    }

    /// The structure function, evaluated straight from the definition of the
    /// system rather than through its ideals.
    pub fn structure_level(&self, x: &[u32]) -> u32 {
        match &self.source {
            SystemSource::Paths(paths) => {
                (1..=self.levels).rev().find(|&j| paths[j as usize - 1].iter().any(|p| dominates(x, p))).unwrap_or(0)
            }
            SystemSource::MsKOfN(k) => (1..=self.levels)
                .rev()
                .find(|&l| x.iter().filter(|&&s| s >= l).count() >= k[l as usize - 1])
                .unwrap_or(0),
            SystemSource::Flow => x.iter().sum(),
            SystemSource::Consecutive(k) => {
                let mut run = 0;
                for &s in x {
                    run = if s > 0 { run + 1 } else { 0 };
                    if run >= *k {
                        return 1;
                    }
                }
                0
            }
            SystemSource::BinaryKOfN(k) => (x.iter().filter(|&&s| s > 0).count() >= *k) as u32,
        }
    }

    /// The ideal of state vectors reaching level `j`, generated by the
    /// minimal j-paths.
    pub fn j_reliability_ideal(&self, j: u32) -> Result<MonomialIdeal> {
        if j == 0 || j > self.levels {
            return Err(Error::LevelOutOfRange { level: j, max: self.levels });
        }
        let n = self.num_components();
        match &self.source {
            SystemSource::Paths(paths) => {
                MonomialIdeal::new(n, paths[j as usize - 1].iter().map(|p| Monomial::new(p.clone())))
            }
            SystemSource::MsKOfN(k) => Ok(ms_ideal(k, &self.states, j)),
            SystemSource::Flow => flow_network_ideal(&self.states, j),
            SystemSource::Consecutive(k) => Ok(consecutive_k_of_n_ideal(*k, n)),
            SystemSource::BinaryKOfN(k) => Ok(binary_k_of_n_ideal(*k, n)),
        }
    }
}

/// `x` is componentwise at least `p`.
fn dominates(x: &[u32], p: &[u32]) -> bool {
    x.iter().zip(p).all(|(a, b)| a >= b)
}

/// j-reliability ideal of the multi-state k-out-of-n system with
/// `k = (k_1, ..., k_m)` and `n` components in states `0..=m`.
pub fn ms_k_of_n_ideal(k: &[usize], n: usize, j: u32) -> MonomialIdeal {
    ms_ideal(k, &vec![k.len() as u32; n], j)
}

fn ms_ideal(k: &[usize], states: &[u32], j: u32) -> MonomialIdeal {
    let n = states.len();
    let mut gens = Vec::new();
    for l in j..=k.len() as u32 {
        let able: Vec<usize> = (0..n).filter(|&i| states[i] >= l).collect();
        for subset in subsets(&able, k[l as usize - 1]) {
            let mut e = vec![0; n];
            for i in subset {
                e[i] = l;
            }
            gens.push(Monomial::new(e));
        }
    }
    MonomialIdeal::new(n, gens).expect("arity is consistent")
}

/// All `size`-element subsets of `items`, in lexicographic order.
fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(size);
    fn rec(items: &[usize], size: usize, start: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if current.len() == size {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < size - current.len() {
                break;
            }
            current.push(items[i]);
            rec(items, size, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, size, 0, &mut current, &mut out);
    out
}

/// j-reliability ideal of a flow network with component capacities `caps`:
/// exponent vectors of total degree `j` bounded by the capacities.
pub fn flow_network_ideal(caps: &[u32], j: u32) -> Result<MonomialIdeal> {
    let total: u32 = caps.iter().sum();
    if j == 0 || j > total {
        return Err(Error::LevelOutOfRange { level: j, max: total });
    }
    let n = caps.len();
    let mut gens = Vec::new();
    let mut e = vec![0u32; n];
    fn rec(caps: &[u32], i: usize, left: u32, e: &mut Vec<u32>, gens: &mut Vec<Monomial>) {
        if i == caps.len() {
            if left == 0 {
                gens.push(Monomial::new(e.clone()));
            }
            return;
        }
        let rest: u32 = caps[i + 1..].iter().sum();
        for s in left.saturating_sub(rest)..=caps[i].min(left) {
            e[i] = s;
            rec(caps, i + 1, left - s, e, gens);
        }
        e[i] = 0;
    }
    rec(caps, 0, j, &mut e, &mut gens);
    MonomialIdeal::new(n, gens)
}

/// `<x_1 ... x_k, ..., x_{n-k+1} ... x_n>`.
pub fn consecutive_k_of_n_ideal(k: usize, n: usize) -> MonomialIdeal {
    let gens = (0..=n - k).map(|s| Monomial::from_support(n, s..s + k));
    MonomialIdeal::new(n, gens).expect("arity is consistent")
}

/// All squarefree monomials of degree `k` in `n` variables.
pub fn binary_k_of_n_ideal(k: usize, n: usize) -> MonomialIdeal {
    let all: Vec<usize> = (0..n).collect();
    let gens = subsets(&all, k).into_iter().map(|s| Monomial::from_support(n, s));
    MonomialIdeal::new(n, gens).expect("arity is consistent")
}
