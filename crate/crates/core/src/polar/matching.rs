//! Maximum bipartite matching by augmenting paths.

/// Maximum matching in the bipartite graph with `left` vertices whose
/// neighbours (right-side indices below `right`) are listed in `adj`.
/// Returns `mate[l] = Some(r)` for matched left vertices.
pub(crate) fn max_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    let mut match_right: Vec<Option<usize>> = vec![None; right];
    for l in 0..adj.len() {
        let mut visited = vec![false; right];
        augment(l, adj, &mut match_right, &mut visited);
    }
    let mut mate = vec![None; adj.len()];
    for (r, l) in match_right.iter().enumerate() {
        if let Some(l) = l {
            mate[*l] = Some(r);
        }
    }
    mate
}

fn augment(l: usize, adj: &[Vec<usize>], match_right: &mut [Option<usize>], visited: &mut [bool]) -> bool {
    for &r in &adj[l] {
        if visited[r] {
            continue;
        }
        visited[r] = true;
        if match_right[r].is_none_or(|other| augment(other, adj, match_right, visited)) {
            match_right[r] = Some(l);
            return true;
        }
    }
    false
}
