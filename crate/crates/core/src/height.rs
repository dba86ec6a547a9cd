use crate::error::Result;
use crate::ideal::MonomialIdeal;

/// Height of a proper monomial ideal: the least number of variables meeting
/// the support of every generator (a minimum transversal of the support
/// hypergraph), found by branch and bound.
pub fn height(ideal: &MonomialIdeal) -> Result<usize> {
    ideal.require_proper()?;
    let mut edges: Vec<Vec<usize>> = ideal.generators().iter().map(|g| g.support().collect()).collect();
    edges.sort_by_key(Vec::len);
    let mut best = ideal.support().len();
    let mut chosen = vec![false; ideal.num_vars()];
    search(&edges, &mut chosen, 0, &mut best);
    Ok(best)
}

fn search(edges: &[Vec<usize>], chosen: &mut [bool], size: usize, best: &mut usize) {
    let open: Vec<&Vec<usize>> = edges.iter().filter(|e| !e.iter().any(|&v| chosen[v])).collect();
    if open.is_empty() {
        *best = (*best).min(size);
        return;
    }
    if size + disjoint_lower_bound(&open) >= *best {
        return;
    }
    let edge = open[0];
    for &v in edge {
        chosen[v] = true;
        search(edges, chosen, size + 1, best);
        chosen[v] = false;
    }
}

/// Greedy set of pairwise disjoint open edges; each needs its own vertex.
fn disjoint_lower_bound(open: &[&Vec<usize>]) -> usize {
    let mut used: Vec<usize> = Vec::new();
    let mut count = 0;
    for e in open {
        if e.iter().all(|v| !used.contains(v)) {
            used.extend(e.iter().copied());
            count += 1;
        }
    }
    count
}
