//! Multigraded Betti numbers over the rationals.
//!
//! Betti multidegrees lie in the lcm-lattice. For each lattice element `mu`
//! the number `beta_{i,mu}(I)` is the dimension of reduced homology
//! `H_{i-1}` of a simplicial complex attached to `mu`. Two homotopy
//! equivalent choices are available:
//!
//! * crosscut complex of the lower interval: vertices are the generators
//!   dividing `mu`, faces are the sets whose lcm is strictly below `mu`;
//! * upper Koszul complex: vertices are the variables of `mu`, faces are the
//!   squarefree `F` with `mu / x^F` in `I`.
//!
//! `Auto` takes whichever has fewer vertices.

use std::collections::{BTreeMap, HashMap, HashSet};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ComplexChoice {
    #[default]
    Auto,
    Crosscut,
    Koszul,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BettiOptions {
    pub max_generators: usize,
    pub complex: ComplexChoice,
}

impl Default for BettiOptions {
    fn default() -> Self {
        Self { max_generators: 20, complex: ComplexChoice::Auto }
    }
}

/// Nonzero multigraded Betti numbers `beta_{i,mu}` of an ideal.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct BettiTable {
    entries: BTreeMap<(usize, Monomial), u64>,
}

impl BettiTable {
    pub fn entries(&self) -> &BTreeMap<(usize, Monomial), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, mu: &Monomial) -> u64 {
        self.entries.get(&(i, mu.clone())).copied().unwrap_or(0)
    }

    /// Graded Betti numbers `beta_{i,j}` keyed by `(i, j)`.
    pub fn graded(&self) -> BTreeMap<(usize, u64), u64> {
        let mut out = BTreeMap::new();
        for ((i, mu), b) in &self.entries {
            *out.entry((*i, mu.degree())).or_insert(0) += b;
        }
        out
    }

    /// Total Betti numbers `beta_i`.
    pub fn totals(&self) -> Vec<u64> {
        let mut out = Vec::new();
        for ((i, _), b) in &self.entries {
            if out.len() <= *i {
                out.resize(i + 1, 0);
            }
            out[*i] += b;
        }
        out
    }

    /// Projective dimension of the ideal (so `pd(R/I) = pd(I) + 1`).
    pub fn proj_dim(&self) -> usize {
        self.entries.keys().map(|(i, _)| *i).max().unwrap_or(0)
    }

    /// Castelnuovo-Mumford regularity of the ideal, `max(|mu| - i)`.
    pub fn regularity(&self) -> u64 {
        self.entries.keys().map(|(i, mu)| mu.degree() - *i as u64).max().unwrap_or(0)
    }

    /// Maps every multidegree through `f`.
    pub fn map_multidegrees(&self, mut f: impl FnMut(&Monomial) -> Monomial) -> BettiTable {
        BettiTable { entries: self.entries.iter().map(|((i, mu), b)| ((*i, f(mu)), *b)).collect() }
    }
}

/// All lcms of non-empty subsets of `G(I)`.
pub fn lcm_lattice(ideal: &MonomialIdeal) -> Vec<Monomial> {
    let mut seen: HashSet<Monomial> = HashSet::new();
    for g in ideal.generators() {
        let fresh: Vec<Monomial> = seen.iter().map(|l| l.lcm(g)).collect();
        seen.insert(g.clone());
        seen.extend(fresh);
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.cmp(a)));
    out
}

pub fn betti_numbers(ideal: &MonomialIdeal) -> Result<BettiTable> {
    betti_numbers_with(ideal, BettiOptions::default())
}

pub fn betti_numbers_with(ideal: &MonomialIdeal, options: BettiOptions) -> Result<BettiTable> {
    ideal.require_proper()?;
    if ideal.len() > options.max_generators {
        return Err(Error::GeneratorLimit { limit: options.max_generators, found: ideal.len() });
    }
    let mut entries = BTreeMap::new();
    for mu in lcm_lattice(ideal) {
        let atoms: Vec<&Monomial> = ideal.generators().iter().filter(|g| g.divides(&mu)).collect();
        let vars: Vec<usize> = mu.support().collect();
        let use_koszul = match options.complex {
            ComplexChoice::Crosscut => false,
            ComplexChoice::Koszul => vars.len() <= 64,
            ComplexChoice::Auto => vars.len() < atoms.len() && vars.len() <= 64,
        };
        let faces = if use_koszul {
            koszul_faces(ideal, &mu, &vars)
        } else {
            crosscut_faces(&atoms, &mu)
        };
        for (k, dim) in reduced_homology(&faces).into_iter().enumerate() {
            // index k holds H_{k-1}
            if dim > 0 {
                entries.insert((k, mu.clone()), dim);
            }
        }
    }
    Ok(BettiTable { entries })
}

pub fn proj_dim(ideal: &MonomialIdeal) -> Result<usize> {
    Ok(betti_numbers(ideal)?.proj_dim())
}

pub fn regularity(ideal: &MonomialIdeal) -> Result<u64> {
    Ok(betti_numbers(ideal)?.regularity())
}

/// Faces grouped by size (bitmasks over vertex positions); `faces[0]` holds
/// the empty face.
type Faces = Vec<Vec<u64>>;

fn crosscut_faces(atoms: &[&Monomial], mu: &Monomial) -> Faces {
    let mut faces: Faces = vec![vec![0]];
    fn dfs(atoms: &[&Monomial], mu: &Monomial, start: usize, mask: u64, size: usize, acc: &Monomial, faces: &mut Faces) {
        for i in start..atoms.len() {
            let l = acc.lcm(atoms[i]);
            if &l == mu {
                continue;
            }
            let m = mask | (1 << i);
            if faces.len() <= size + 1 {
                faces.push(Vec::new());
            }
            faces[size + 1].push(m);
            dfs(atoms, mu, i + 1, m, size + 1, &l, faces);
        }
    }
    dfs(atoms, mu, 0, 0, 0, &Monomial::one(mu.num_vars()), &mut faces);
    faces
}

fn koszul_faces(ideal: &MonomialIdeal, mu: &Monomial, vars: &[usize]) -> Faces {
    let mut faces: Faces = Vec::new();
    if !ideal.contains(mu) {
        return faces;
    }
    faces.push(vec![0]);
    fn dfs(ideal: &MonomialIdeal, vars: &[usize], start: usize, mask: u64, size: usize, cur: &Monomial, faces: &mut Faces) {
        for i in start..vars.len() {
            let mut e = cur.exponents().to_vec();
            e[vars[i]] -= 1;
            let next = Monomial::new(e);
            if !ideal.contains(&next) {
                continue;
            }
            let m = mask | (1 << i);
            if faces.len() <= size + 1 {
                faces.push(Vec::new());
            }
            faces[size + 1].push(m);
            dfs(ideal, vars, i + 1, m, size + 1, &next, faces);
        }
    }
    dfs(ideal, vars, 0, 0, 0, mu, &mut faces);
    faces
}

/// `out[k] = dim H_{k-1}` of the complex, augmented at the empty face.
fn reduced_homology(faces: &Faces) -> Vec<u64> {
    let sizes = faces.len();
    // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces
    let mut ranks = vec![0u64; sizes + 1];
    for s in 1..sizes {
        ranks[s] = boundary_rank(&faces[s], &faces[s - 1]);
    }
    (0..sizes)
        .map(|s| faces[s].len() as u64 - ranks[s] - ranks[s + 1])
        .collect()
}

fn boundary_rank(upper: &[u64], lower: &[u64]) -> u64 {
    if upper.is_empty() || lower.is_empty() {
        return 0;
    }
    let index: HashMap<u64, usize> = lower.iter().enumerate().map(|(i, &f)| (f, i)).collect();
    let rows: Vec<Vec<BigInt>> = upper
        .iter()
        .map(|&face| {
            let mut row = vec![BigInt::zero(); lower.len()];
            let mut sign = 1i64;
            for bit in 0..64 {
                if face & (1 << bit) != 0 {
                    row[index[&(face & !(1 << bit))]] = BigInt::from(sign);
                    sign = -sign;
                }
            }
            row
        })
        .collect();
    rank(rows)
}

/// Rank over the rationals by fraction-free elimination.
pub(crate) fn rank(mut rows: Vec<Vec<BigInt>>) -> u64 {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, p);
        let pivot_row = rows[rank].clone();
        let pv = pivot_row[col].clone();
        for row in rows.iter_mut().skip(rank + 1) {
            if row[col].is_zero() {
                continue;
            }
            let a = row[col].clone();
            let mut g = BigInt::zero();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x = &*x * &pv - &a * y;
                g = g.gcd(x);
            }
            if !g.is_zero() && g.abs() != BigInt::from(1) {
                for x in row.iter_mut() {
                    *x /= &g;
                }
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank as u64
}
