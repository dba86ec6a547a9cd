//! Partitions of an ordered support poset into paths.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::polar::matching::max_matching;
use crate::polar::poset::OrderedSupportPoset;

/// Disjoint paths covering the poset, each listed from bottom to top.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct PathPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl PathPartition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Self {
        Self { blocks }
    }

    pub fn singletons(vars: &[usize]) -> Self {
        Self { blocks: vars.iter().map(|&v| vec![v]).collect() }
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Same blocks regardless of listing order.
    pub fn canonical(&self) -> Self {
        let mut blocks = self.blocks.clone();
        blocks.sort();
        Self { blocks }
    }

    /// Checks that the blocks partition the poset and that consecutive
    /// entries of each block are cover pairs.
    pub fn validate(&self, poset: &OrderedSupportPoset) -> Result<()> {
        self.check(poset, true)
    }

    /// Like [`validate`](Self::validate), but blocks only need to be chains
    /// listed bottom first.
    pub fn validate_chains(&self, poset: &OrderedSupportPoset) -> Result<()> {
        self.check(poset, false)
    }

    fn check(&self, poset: &OrderedSupportPoset, paths: bool) -> Result<()> {
        let mut seen = BTreeSet::new();
        for (b, block) in self.blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidPartition(format!("block {b} is empty")));
            }
            for &v in block {
                if poset.position_of(v).is_none() {
                    return Err(Error::InvalidPartition(format!("block {b} {block:?}: variable {v} is not in the support")));
                }
                if !seen.insert(v) {
                    return Err(Error::InvalidPartition(format!("block {b} {block:?}: variable {v} used twice")));
                }
            }
            if paths {
                if let Some(w) = block.windows(2).find(|w| !poset.is_cover(w[0], w[1])) {
                    return Err(Error::InvalidPartition(format!(
                        "block {b} {block:?} is not a path: {} is not covered by {}",
                        w[0], w[1]
                    )));
                }
            } else if let Some(w) = block.windows(2).find(|w| !poset.precedes(w[0], w[1])) {
                return Err(Error::InvalidPartition(format!(
                    "block {b} {block:?} is not a chain: {} is not below {}",
                    w[0], w[1]
                )));
            }
        }
        if seen.len() != poset.len() {
            let missing: Vec<usize> = poset.vars().iter().copied().filter(|v| !seen.contains(v)).collect();
            return Err(Error::InvalidPartition(format!("variables {missing:?} are not covered")));
        }
        Ok(())
    }

    /// Every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &PathPartition) -> bool {
        let sets: Vec<BTreeSet<usize>> = coarser.blocks.iter().map(|b| b.iter().copied().collect()).collect();
        self.blocks.iter().all(|b| sets.iter().any(|s| b.iter().all(|v| s.contains(v))))
    }
}

/// A partition into the fewest possible paths: a minimum vertex-disjoint
/// path cover of the Hasse diagram.
pub fn min_path_partition(poset: &OrderedSupportPoset) -> PathPartition {
    let n = poset.len();
    let adj: Vec<Vec<usize>> = (0..n).map(|p| poset.up_positions(p).to_vec()).collect();
    let next = max_matching(&adj, n);
    let mut has_prev = vec![false; n];
    for q in next.iter().flatten() {
        has_prev[*q] = true;
    }
    let vars = poset.vars();
    let mut blocks = Vec::new();
    for start in poset.linear_extension() {
        if has_prev[start] {
            continue;
        }
        let mut block = vec![vars[start]];
        let mut cur = start;
        while let Some(q) = next[cur] {
            block.push(vars[q]);
            cur = q;
        }
        blocks.push(block);
    }
    PathPartition { blocks }
}

/// A partition into the fewest possible chains; by Dilworth's theorem it
/// has as many blocks as the poset's width.
pub fn min_chain_partition(poset: &OrderedSupportPoset) -> PathPartition {
    let below = strictly_below(poset);
    let n = poset.len();
    let mut adj = vec![Vec::new(); n];
    for (p, qs) in below.iter().enumerate() {
        for &q in qs {
            adj[q].push(p);
        }
    }
    let next = max_matching(&adj, n);
    let mut prev = vec![None; n];
    for (q, p) in next.iter().enumerate() {
        if let Some(p) = p {
            prev[*p] = Some(q);
        }
    }
    assemble(poset, &poset.linear_extension(), &prev)
}

/// Every path partition of the poset, in a deterministic order.
pub fn all_path_partitions(poset: &OrderedSupportPoset) -> Vec<PathPartition> {
    let down: Vec<Vec<usize>> = (0..poset.len()).map(|p| poset.down_positions(p).to_vec()).collect();
    enumerate(poset, &down)
}

/// Every chain partition of the poset, blocks listed bottom first, in a
/// deterministic order. Path partitions are among them.
pub fn all_chain_partitions(poset: &OrderedSupportPoset) -> Vec<PathPartition> {
    enumerate(poset, &strictly_below(poset))
}

fn strictly_below(poset: &OrderedSupportPoset) -> Vec<Vec<usize>> {
    let vars = poset.vars();
    (0..vars.len())
        .map(|p| (0..vars.len()).filter(|&q| poset.precedes(vars[q], vars[p])).collect())
        .collect()
}

/// Walks a linear extension; each element either starts a block or extends
/// the block whose current top is one of its `candidates`.
fn enumerate(poset: &OrderedSupportPoset, candidates: &[Vec<usize>]) -> Vec<PathPartition> {
    let order = poset.linear_extension();
    let n = poset.len();
    let mut prev: Vec<Option<usize>> = vec![None; n];
    let mut used_as_prev = vec![false; n];
    let mut out = Vec::new();
    extend(poset, candidates, &order, 0, &mut prev, &mut used_as_prev, &mut out);
    out
}

fn extend(
    poset: &OrderedSupportPoset,
    candidates: &[Vec<usize>],
    order: &[usize],
    idx: usize,
    prev: &mut Vec<Option<usize>>,
    used: &mut Vec<bool>,
    out: &mut Vec<PathPartition>,
) {
    if idx == order.len() {
        out.push(assemble(poset, order, prev));
        return;
    }
    let p = order[idx];
    prev[p] = None;
    extend(poset, candidates, order, idx + 1, prev, used, out);
    for &q in &candidates[p] {
        if !used[q] {
            used[q] = true;
            prev[p] = Some(q);
            extend(poset, candidates, order, idx + 1, prev, used, out);
            prev[p] = None;
            used[q] = false;
        }
    }
}

fn assemble(poset: &OrderedSupportPoset, order: &[usize], prev: &[Option<usize>]) -> PathPartition {
    let n = prev.len();
    let mut next = vec![None; n];
    for (p, q) in prev.iter().enumerate() {
        if let Some(q) = q {
            next[*q] = Some(p);
        }
    }
    let vars = poset.vars();
    let mut blocks = Vec::new();
    for &start in order {
        if prev[start].is_some() {
            continue;
        }
        let mut block = vec![vars[start]];
        let mut cur = start;
        while let Some(q) = next[cur] {
            block.push(vars[q]);
            cur = q;
        }
        blocks.push(block);
    }
    PathPartition { blocks }
}
