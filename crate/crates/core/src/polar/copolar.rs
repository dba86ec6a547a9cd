//! Variable-renaming isomorphisms and copolarity.

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::Monomial;
use crate::polarize::{polarize_ideal, VariableMap};

/// Default bound on backtracking steps.
pub const DEFAULT_SEARCH_LIMIT: u64 = 10_000_000;

/// Finds a bijection between the supports of `a` and `b` carrying the
/// minimal generators of `a` onto those of `b`, exponents included.
///
/// The result maps each support variable of `a` to a one-element image in
/// `b`'s ring. Variables outside the support map to nothing.
pub fn isomorphism(a: &MonomialIdeal, b: &MonomialIdeal, limit: u64) -> Result<Option<VariableMap>> {
    let sa = a.support();
    let sb = b.support();
    if sa.len() != sb.len() || a.len() != b.len() {
        return Ok(None);
    }
    let mut da: Vec<u64> = a.generators().iter().map(Monomial::degree).collect();
    let mut db: Vec<u64> = b.generators().iter().map(Monomial::degree).collect();
    da.sort_unstable();
    db.sort_unstable();
    if da != db {
        return Ok(None);
    }
    let (ca, cb) = refine_colors(a, &sa, b, &sb);
    let mut hist_a = ca.clone();
    let mut hist_b = cb.clone();
    hist_a.sort_unstable();
    hist_b.sort_unstable();
    if hist_a != hist_b {
        return Ok(None);
    }

    // assign variables of `a` in order of scarcity, connected ones first
    let mut order: Vec<usize> = (0..sa.len()).collect();
    let class_size = |c: u32| cb.iter().filter(|&&x| x == c).count();
    order.sort_by_key(|&p| (class_size(ca[p]), p));
    let pos_a: BTreeMap<usize, usize> = sa.iter().enumerate().map(|(p, &v)| (v, p)).collect();
    let rank: Vec<usize> = {
        let mut r = vec![0; sa.len()];
        for (k, &p) in order.iter().enumerate() {
            r[p] = k;
        }
        r
    };
    // generators to check once their last variable is assigned
    let mut due: Vec<Vec<usize>> = vec![Vec::new(); sa.len()];
    for (g, m) in a.generators().iter().enumerate() {
        let last = m.support().map(|v| rank[pos_a[&v]]).max().expect("proper ideal");
        due[last].push(g);
    }
    let targets: HashSet<&Monomial> = b.generators().iter().collect();
    let mut search = Search {
        a,
        b_num_vars: b.num_vars(),
        sa: &sa,
        sb: &sb,
        ca: &ca,
        cb: &cb,
        order: &order,
        due: &due,
        targets: &targets,
        assign: vec![usize::MAX; sa.len()],
        used: vec![false; sb.len()],
        steps: 0,
        limit,
    };
    if !search.run(0)? {
        return Ok(None);
    }
    let mut images = vec![Vec::new(); a.num_vars()];
    for (p, &q) in search.assign.iter().enumerate() {
        images[sa[p]] = vec![sb[q]];
    }
    VariableMap::new(images, b.num_vars()).map(Some)
}

struct Search<'s> {
    a: &'s MonomialIdeal,
    b_num_vars: usize,
    sa: &'s [usize],
    sb: &'s [usize],
    ca: &'s [u32],
    cb: &'s [u32],
    order: &'s [usize],
    due: &'s [Vec<usize>],
    targets: &'s HashSet<&'s Monomial>,
    assign: Vec<usize>,
    used: Vec<bool>,
    steps: u64,
    limit: u64,
}

impl Search<'_> {
    fn run(&mut self, k: usize) -> Result<bool> {
        if k == self.order.len() {
            return Ok(true);
        }
        let p = self.order[k];
        for q in 0..self.sb.len() {
            if self.used[q] || self.cb[q] != self.ca[p] {
                continue;
            }
            self.steps += 1;
            if self.steps > self.limit {
                return Err(Error::Inconclusive(self.limit));
            }
            self.assign[p] = q;
            self.used[q] = true;
            if self.due[k].iter().all(|&g| self.image_is_generator(g)) && self.run(k + 1)? {
                return Ok(true);
            }
            self.used[q] = false;
            self.assign[p] = usize::MAX;
        }
        Ok(false)
    }

    fn image_is_generator(&self, g: usize) -> bool {
        let m = &self.a.generators()[g];
        let mut out = vec![0u32; self.b_num_vars];
        for (p, &v) in self.sa.iter().enumerate() {
            let e = m.exponent(v);
            if e > 0 {
                out[self.sb[self.assign[p]]] = e;
            }
        }
        self.targets.contains(&Monomial::new(out))
    }
}

/// Joint colour refinement of the support variables of two ideals; equal
/// colours are necessary for a variable pairing.
fn refine_colors(a: &MonomialIdeal, sa: &[usize], b: &MonomialIdeal, sb: &[usize]) -> (Vec<u32>, Vec<u32>) {
    let mut ca = vec![0u32; sa.len()];
    let mut cb = vec![0u32; sb.len()];
    let mut classes = 1;
    loop {
        let mut keys: BTreeMap<Vec<u64>, u32> = BTreeMap::new();
        let ka: Vec<Vec<u64>> = sa.iter().enumerate().map(|(p, &v)| key(a, sa, &ca, p, v)).collect();
        let kb: Vec<Vec<u64>> = sb.iter().enumerate().map(|(p, &v)| key(b, sb, &cb, p, v)).collect();
        for k in ka.iter().chain(&kb) {
            let next = keys.len() as u32;
            keys.entry(k.clone()).or_insert(next);
        }
        ca = ka.iter().map(|k| keys[k]).collect();
        cb = kb.iter().map(|k| keys[k]).collect();
        if keys.len() == classes {
            return (ca, cb);
        }
        classes = keys.len();
    }
}

fn key(ideal: &MonomialIdeal, support: &[usize], colors: &[u32], p: usize, v: usize) -> Vec<u64> {
    let mut incident: Vec<Vec<u64>> = ideal
        .generators()
        .iter()
        .filter(|g| g.exponent(v) > 0)
        .map(|g| {
            let mut others: Vec<u64> = support
                .iter()
                .enumerate()
                .filter(|&(_, &u)| u != v && g.exponent(u) > 0)
                .map(|(q, &u)| ((colors[q] as u64) << 32) | g.exponent(u) as u64)
                .collect();
            others.sort_unstable();
            let mut item = vec![g.exponent(v) as u64, others.len() as u64];
            item.extend(others);
            item
        })
        .collect();
    incident.sort();
    let mut k = vec![colors[p] as u64, incident.len() as u64];
    for item in incident {
        k.extend(item);
    }
    k
}

/// A bijection between the slot variables of the polarizations of `a` and
/// `b` that carries one minimal generating set onto the other, if any.
pub fn copolar_bijection(a: &MonomialIdeal, b: &MonomialIdeal) -> Result<Option<VariableMap>> {
    copolar_bijection_with(a, b, DEFAULT_SEARCH_LIMIT)
}

pub fn copolar_bijection_with(a: &MonomialIdeal, b: &MonomialIdeal, limit: u64) -> Result<Option<VariableMap>> {
    let (pa, _) = polarize_ideal(a)?;
    let (pb, _) = polarize_ideal(b)?;
    isomorphism(&pa, &pb, limit)
}
