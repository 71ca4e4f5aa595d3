//! Brute-force reference implementations for cross-checking the search code
//! on small graphs. Only adjacency queries are borrowed from the core crate.

use std::collections::BTreeSet;

use bchrom_core::Graph;

/// Every labelled graph on `n` vertices, in edge-mask order.
///
/// # Panics
/// If `n > 8`.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    assert!(n <= 8, "too many labelled graphs on {n} vertices");
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::from_edges(n, edges).expect("pairs in range")
    })
}

/// Call `f(labels, blocks)` for every set partition of `0..n`, given as a
/// restricted growth string.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&[usize], usize)) {
    fn rec(i: usize, blocks: usize, a: &mut Vec<usize>, f: &mut dyn FnMut(&[usize], usize)) {
        if i == a.len() {
            f(a, blocks);
            return;
        }
        for c in 0..=blocks {
            a[i] = c;
            rec(i + 1, blocks.max(c + 1), a, f);
        }
    }
    rec(0, 0, &mut vec![0; n], &mut f);
}

pub fn is_proper(g: &Graph, colors: &[usize]) -> bool {
    (0..g.n()).all(|u| (u + 1..g.n()).all(|v| !g.has_edge(u, v) || colors[u] != colors[v]))
}

/// Colours seen in the neighbourhood of `v`, as a bitmask.
fn neighbour_colors(g: &Graph, colors: &[usize], v: usize) -> u128 {
    (0..g.n()).filter(|&w| g.has_edge(v, w)).fold(0, |m, w| m | 1 << colors[w])
}

/// Proper, uses exactly colours `0..k`, and every class has a vertex seeing
/// all other classes.
pub fn is_b_partition(g: &Graph, colors: &[usize], k: usize) -> bool {
    if k > 128 || colors.len() != g.n() || colors.iter().any(|&c| c >= k) || !is_proper(g, colors) {
        return false;
    }
    let all = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    (0..k).all(|c| (0..g.n()).any(|v| colors[v] == c && neighbour_colors(g, colors, v) | 1 << c == all))
}

/// Check a b-colouring certificate with designated representatives.
pub fn check_certificate(g: &Graph, colors: &[usize], reps: &[usize]) -> bool {
    let k = reps.len();
    if !is_b_partition(g, colors, k) {
        return false;
    }
    let all = if k == 128 { u128::MAX } else { (1u128 << k) - 1 };
    reps.iter()
        .enumerate()
        .all(|(c, &r)| r < g.n() && colors[r] == c && neighbour_colors(g, colors, r) | 1 << c == all)
}

/// b-chromatic number by trying every set partition.
pub fn phi(g: &Graph) -> usize {
    let mut best = 0;
    for_each_partition(g.n(), |a, k| {
        if k > best && is_b_partition(g, a, k) {
            best = k;
        }
    });
    best
}

/// Chromatic number by trying every set partition.
pub fn chi(g: &Graph) -> usize {
    let mut best = g.n();
    for_each_partition(g.n(), |a, k| {
        if k < best && is_proper(g, a) {
            best = k;
        }
    });
    best
}

/// Clique number by enumerating cliques in increasing vertex order.
pub fn omega(g: &Graph) -> usize {
    fn rec(g: &Graph, cand: &[usize]) -> usize {
        (0..cand.len())
            .map(|i| {
                let rest: Vec<usize> =
                    cand[i + 1..].iter().copied().filter(|&w| g.has_edge(cand[i], w)).collect();
                1 + rec(g, &rest)
            })
            .max()
            .unwrap_or(0)
    }
    rec(g, &(0..g.n()).collect::<Vec<_>>())
}

pub fn is_clique(g: &Graph, vs: &[usize]) -> bool {
    vs.iter().enumerate().all(|(i, &u)| vs[i + 1..].iter().all(|&v| g.has_edge(u, v)))
}

/// Some vertex has `t` pairwise non-adjacent neighbours.
pub fn has_induced_star(g: &Graph, t: usize) -> bool {
    fn rec(g: &Graph, nbrs: &[usize], chosen: &mut Vec<usize>, t: usize) -> bool {
        if chosen.len() == t {
            return true;
        }
        for (i, &w) in nbrs.iter().enumerate() {
            if chosen.iter().all(|&c| !g.has_edge(c, w)) {
                chosen.push(w);
                if rec(g, &nbrs[i + 1..], chosen, t) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    (0..g.n()).any(|v| {
        let nbrs: Vec<usize> = (0..g.n()).filter(|&w| g.has_edge(v, w)).collect();
        rec(g, &nbrs, &mut Vec::new(), t)
    })
}

/// A block is a single vertex or splits into two non-empty parts with every
/// cross pair adjacent.
fn is_biclique_block(g: &Graph, block: &[usize]) -> bool {
    let s = block.len();
    if s == 1 {
        return true;
    }
    // block[0] always on the left
    (0..1u32 << (s - 1)).any(|m| {
        let left = |i: usize| i == 0 || m >> (i - 1) & 1 == 1;
        let right_count = (0..s).filter(|&i| !left(i)).count();
        right_count > 0
            && (0..s).all(|i| (0..s).all(|j| !left(i) || left(j) || g.has_edge(block[i], block[j])))
    })
}

/// Fewest vertex-disjoint bicliques covering the vertices, by trying every
/// set partition.
///
/// # Panics
/// If `n > 16`.
pub fn biclique_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "set-partition oracle limited to 16 vertices");
    let valid: Vec<bool> = (0..1usize << n)
        .map(|m| {
            let block: Vec<usize> = (0..n).filter(|&v| m >> v & 1 == 1).collect();
            !block.is_empty() && is_biclique_block(g, &block)
        })
        .collect();
    let mut best = n;
    let mut masks = vec![0usize; n];
    for_each_partition(n, |a, k| {
        if k >= best {
            return;
        }
        masks[..k].fill(0);
        for (v, &c) in a.iter().enumerate() {
            masks[c] |= 1 << v;
        }
        if masks[..k].iter().all(|&m| valid[m]) {
            best = k;
        }
    });
    best
}

/// Whether `left` and `right` can be paired off along non-edges, by trying
/// every bijection.
fn has_perfect_anti_matching(g: &Graph, left: &[usize], right: &[usize]) -> bool {
    fn rec(g: &Graph, left: &[usize], right: &[usize], used: &mut Vec<bool>) -> bool {
        let Some((&u, rest)) = left.split_first() else { return true };
        for j in 0..right.len() {
            if !used[j] && !g.has_edge(u, right[j]) {
                used[j] = true;
                if rec(g, rest, right, used) {
                    return true;
                }
                used[j] = false;
            }
        }
        false
    }
    left.len() == right.len() && rec(g, left, right, &mut vec![false; right.len()])
}

const A1: u8 = 0;
const B1: u8 = 1;
const C1: u8 = 2;
const A2: u8 = 3;
const B2: u8 = 4;
const C2: u8 = 5;

fn ab_compatible(g: &Graph, u: usize, lu: u8, v: usize, lv: u8) -> bool {
    let (x, y) = match (lu < 3, lv < 3) {
        (true, true) | (false, false) => return g.has_edge(u, v),
        (true, false) => (lu, lv),
        (false, true) => (lv, lu),
    };
    let needs_edge = (x == A1 && (y == A2 || y == B2)) || (x == C1 && y == A2);
    !needs_edge || g.has_edge(u, v)
}

/// Every `b` for which some six-part labelling satisfies the `A_b`
/// conditions, found by exhaustive labelling with pairwise pruning.
pub fn ab_values(g: &Graph) -> BTreeSet<usize> {
    fn rec(g: &Graph, v: usize, label: &mut Vec<u8>, out: &mut BTreeSet<usize>) {
        let n = g.n();
        if v == n {
            let part = |l: u8| -> Vec<usize> { (0..n).filter(|&w| label[w] == l).collect() };
            if has_perfect_anti_matching(g, &part(B1), &part(B2))
                && has_perfect_anti_matching(g, &part(C1), &part(C2))
            {
                out.insert(label.iter().filter(|&&l| l < 3 || l == A2).count());
            }
            return;
        }
        let lonely = (0..n).all(|w| w == v || g.has_edge(v, w));
        for l in A1..=C2 {
            // matched parts need a non-neighbour
            if lonely && !matches!(l, A1 | A2) {
                continue;
            }
            if (0..v).all(|u| ab_compatible(g, u, label[u], v, l)) {
                label.push(l);
                rec(g, v + 1, label, out);
                label.pop();
            }
        }
    }
    let mut out = BTreeSet::new();
    rec(g, 0, &mut Vec::with_capacity(g.n()), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts_are_bell_numbers() {
        for (n, bell) in [(0, 1), (1, 1), (3, 5), (5, 52), (7, 877)] {
            let mut count = 0;
            for_each_partition(n, |_, _| count += 1);
            assert_eq!(count, bell);
        }
    }

    #[test]
    fn graph_counts() {
        assert_eq!(all_graphs(4).count(), 64);
        assert_eq!(all_graphs(0).count(), 1);
    }

    #[test]
    fn small_values() {
        assert_eq!(phi(&Graph::cycle(5)), 3);
        assert_eq!(phi(&Graph::path(4)), 2);
        assert_eq!(phi(&Graph::complete(4)), 4);
        assert_eq!(chi(&Graph::cycle(5)), 3);
        assert_eq!(omega(&Graph::petersen()), 2);
        assert!(has_induced_star(&Graph::star(3), 3));
        assert!(!has_induced_star(&Graph::cycle(6), 3));
        assert_eq!(biclique_number(&Graph::path(4)), 2);
        assert_eq!(biclique_number(&Graph::empty(3)), 3);
        assert_eq!(biclique_number(&Graph::complete_bipartite(2, 3)), 1);
    }

    #[test]
    fn ab_values_of_small_cobipartite_graphs() {
        // complement of a perfect matching on 4 vertices is C4
        assert_eq!(ab_values(&Graph::cycle(4)).into_iter().max(), Some(2));
        assert_eq!(ab_values(&Graph::complete(3)).into_iter().collect::<Vec<_>>(), vec![3]);
    }
}
