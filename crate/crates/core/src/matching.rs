use alloc::vec;
use alloc::vec::Vec;

/// Maximum bipartite matching by augmenting paths (Kuhn).
///
/// `adj[i]` lists the right-side indices compatible with left index `i`.
/// Returns `mate[i]`, the right index matched to left `i`.
pub(crate) fn max_matching(adj: &[Vec<usize>], right: usize) -> Vec<Option<usize>> {
    fn augment(u: usize, adj: &[Vec<usize>], seen: &mut [bool], owner: &mut [Option<usize>]) -> bool {
        for &v in &adj[u] {
            if seen[v] {
                continue;
            }
            seen[v] = true;
            if owner[v].is_none_or(|w| augment(w, adj, seen, owner)) {
                owner[v] = Some(u);
                return true;
            }
        }
        false
    }

    let mut owner = vec![None; right];
    for u in 0..adj.len() {
        let mut seen = vec![false; right];
        augment(u, adj, &mut seen, &mut owner);
    }
    let mut mate = vec![None; adj.len()];
    for (v, u) in owner.iter().enumerate() {
        if let Some(u) = *u {
            mate[u] = Some(v);
        }
    }
    mate
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_perfect_matching_needing_augmentation() {
        // Greedy 0->0 blocks 1; augmenting path reroutes 0 to 1.
        let adj = vec![vec![0, 1], vec![0]];
        assert_eq!(max_matching(&adj, 2), vec![Some(1), Some(0)]);
    }

    #[test]
    fn reports_deficiency() {
        let adj = vec![vec![0], vec![0], vec![1]];
        let m = max_matching(&adj, 2);
        assert_eq!(m.iter().filter(|x| x.is_some()).count(), 2);
    }
}
