//! Extremal constructions with b-colouring certificates.
//!
//! Each generator returns the graph, a certificate with `claimed_phi`
//! colours (the lower bound), and `claimed_phi`. The matching upper bound
//! comes from [`crate::bounds`], so equality needs no search.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bcolor::{BColoringCertificate, Coloring};
use crate::{Error, Graph, Result};

pub type Extremal = (Graph, BColoringCertificate, usize);

fn certify(g: Graph, colors: Vec<usize>, reps: Vec<usize>) -> Result<Extremal> {
    let cert = BColoringCertificate { coloring: Coloring::new(colors)?, reps };
    cert.validate(&g)
        .map_err(|e| Error::Internal(format!("generated certificate does not validate: {e}")))?;
    let b = cert.num_colors();
    Ok((g, cert, b))
}

/// Chain of `(t-1)(k-1)+1` copies of a hub whose neighbourhood is `t-1`
/// disjoint `(k-1)`-cliques. `K_{1,t}`-free with chromatic number `k` and
/// b-chromatic number `(t-1)(k-1)+1`.
///
/// Copy `i` occupies ids `i*s .. (i+1)*s` with `s = (t-1)(k-1)+1`: the hub
/// first, then the cliques in order. Consecutive copies are joined by one
/// edge from the first vertex of clique 0 in copy `i` to the first vertex of
/// clique 1 in copy `i+1`, so no vertex carries two chain edges.
pub fn gen_k1t_extremal(t: usize, k: usize) -> Result<Extremal> {
    if t < 3 || k < 2 {
        return Err(Error::InvalidArgument(format!("need t >= 3 and k >= 2 (t = {t}, k = {k})")));
    }
    let b = (t - 1) * (k - 1) + 1;
    let size = b;
    let copies = b;
    let hub = |i: usize| i * size;
    let clique_vertex = |i: usize, j: usize, r: usize| i * size + 1 + j * (k - 1) + r;

    let mut edges = Vec::new();
    for i in 0..copies {
        for j in 0..t - 1 {
            for r in 0..k - 1 {
                let u = clique_vertex(i, j, r);
                edges.push((hub(i), u));
                for r2 in r + 1..k - 1 {
                    edges.push((u, clique_vertex(i, j, r2)));
                }
            }
        }
    }
    let chain: Vec<(usize, usize)> =
        (0..copies - 1).map(|i| (clique_vertex(i, 0, 0), clique_vertex(i + 1, 1, 0))).collect();
    edges.extend(&chain);
    let g = Graph::from_edges(copies * size, edges)?;

    // Hub i gets colour i; its neighbours take the other colours in cyclic
    // order starting after i.
    let mut colors = vec![0; g.n()];
    for i in 0..copies {
        colors[hub(i)] = i;
        for p in 0..size - 1 {
            colors[hub(i) + 1 + p] = (i + 1 + p) % b;
        }
    }
    repair_chain_conflicts(&g, &chain, &mut colors, size)?;
    let reps = (0..copies).map(hub).collect();
    certify(g, colors, reps)
}

/// Resolve a monochromatic chain edge by swapping the colour of its
/// endpoint in the later copy with another non-hub vertex of that copy.
fn repair_chain_conflicts(
    g: &Graph,
    chain: &[(usize, usize)],
    colors: &mut [usize],
    size: usize,
) -> Result<()> {
    let conflicted = |colors: &[usize]| chain.iter().any(|&(u, v)| colors[u] == colors[v]);
    for &(u, w) in chain {
        if colors[u] != colors[w] {
            continue;
        }
        let base = w / size * size;
        let fixed = (base + 1..base + size).filter(|&x| x != w).find(|&x| {
            colors.swap(w, x);
            let ok = !g.neighbors(w).iter().any(|y| colors[y] == colors[w])
                && !g.neighbors(x).iter().any(|y| colors[y] == colors[x]);
            colors.swap(w, x);
            ok
        });
        match fixed {
            Some(x) => colors.swap(w, x),
            None => return Err(Error::Internal(format!("cannot repair chain edge {u}-{w}"))),
        }
    }
    if conflicted(colors) {
        return Err(Error::Internal("chain conflicts remain after repair".into()));
    }
    Ok(())
}

/// Cliques `A_1..A_k` (size `w/(2k-1)`) and `B_1..B_k`, `C_1..C_k` (size
/// `(k-1)w/(2k-1)`): the union of the `A_i` is a clique, every `A_i` is
/// complete to every `B_j`, `A_i` is complete to `C_i`, and `B_i` is
/// complete to `C_j` exactly when `i != j`. Clique number `w`, clique
/// partition number `k`, b-chromatic number `k^2 w / (2k-1)`.
///
/// Ids run through `A_1..A_k`, then `B_1..B_k`, then `C_1..C_k`.
pub fn gen_clique_partition_extremal(k: usize, w: usize) -> Result<Extremal> {
    if k < 2 || w < 1 || !w.is_multiple_of(2 * k - 1) {
        return Err(Error::InvalidArgument(format!(
            "need k >= 2 and w a positive multiple of 2k-1 (k = {k}, w = {w})"
        )));
    }
    let sa = w / (2 * k - 1);
    let sb = (k - 1) * sa;
    let a = |i: usize| i * sa..(i + 1) * sa;
    let b_base = k * sa;
    let b = move |i: usize| b_base + i * sb..b_base + (i + 1) * sb;
    let c_base = b_base + k * sb;
    let c = move |i: usize| c_base + i * sb..c_base + (i + 1) * sb;
    let n = c_base + k * sb;

    let mut edges = Vec::new();
    let mut join = |s: core::ops::Range<usize>, t: core::ops::Range<usize>| {
        for u in s {
            for v in t.clone() {
                if u < v {
                    edges.push((u, v));
                }
            }
        }
    };
    join(0..b_base, 0..b_base);
    for i in 0..k {
        join(b(i), b(i));
        join(c(i), c(i));
        join(a(i), b_base..c_base);
        join(a(i), c(i));
        for j in (0..k).filter(|&j| j != i) {
            join(b(i), c(j));
        }
    }
    let g = Graph::from_edges(n, edges)?;

    // A and B rainbow; C_i copies B_i position by position.
    let mut colors: Vec<usize> = (0..c_base).collect();
    colors.extend((0..k).flat_map(b));
    certify(g, colors, (0..c_base).collect())
}

/// `K_{p-1,p-1}` minus a `(p-2)`-matching plus `p-2` pendant vertices:
/// bipartite on `3p-4` vertices with biclique number `p-1`, maximum degree
/// `p-1` and b-chromatic number `p`.
///
/// Ids: `x_0..x_{p-2}` are `0..p-1`, `y_0..y_{p-2}` are `p-1..2p-2`, and the
/// pendant `z_j` (`j = 1..p-2`) is `2p-3+j`. The matching removed is
/// `x_j y_j` for `j >= 1`, and `z_j` hangs off `y_j`. Colours: `x_0` gets 0,
/// `y_0` and every `z_j` get 1, `x_j` and `y_j` get `j+1`.
pub fn gen_bipartite_extremal(p: usize) -> Result<Extremal> {
    if p < 3 {
        return Err(Error::InvalidArgument(format!("need p >= 3 (p = {p})")));
    }
    let side = p - 1;
    let x = |j: usize| j;
    let y = |j: usize| side + j;
    let z = |j: usize| 2 * side + j - 1;
    let n = 3 * p - 4;

    let mut edges = Vec::new();
    for i in 0..side {
        for j in 0..side {
            if i != j || i == 0 {
                edges.push((x(i), y(j)));
            }
        }
    }
    for j in 1..side {
        edges.push((z(j), y(j)));
    }
    let g = Graph::from_edges(n, edges)?;

    let mut colors = vec![0; n];
    colors[y(0)] = 1;
    for j in 1..side {
        colors[x(j)] = j + 1;
        colors[y(j)] = j + 1;
        colors[z(j)] = 1;
    }
    let mut reps = vec![x(0), y(0)];
    reps.extend((1..side).map(y));
    certify(g, colors, reps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bounds::{bipartite_value, bound_k1t, clique_partition_value};
    use crate::invariants::{
        biclique_cover_number, chromatic_number, clique_number, clique_partition_number, m_bound,
    };
    use crate::Budget;

    #[test]
    fn k1t_family() {
        for (t, k, n, phi) in [(3, 2, 9, 3), (3, 3, 25, 5), (4, 2, 16, 4)] {
            let (g, cert, claimed) = gen_k1t_extremal(t, k).unwrap();
            assert_eq!((g.n(), claimed), (n, phi));
            cert.validate(&g).unwrap();
            assert_eq!(cert.num_colors(), phi);
            assert!(g.is_k1t_free(t));
            let mut b = Budget::unlimited();
            assert_eq!(chromatic_number(&g, &mut b).unwrap().0, k);
            assert_eq!(bound_k1t(&g, t, &mut b).unwrap(), Some(phi));
        }
        assert!(gen_k1t_extremal(2, 3).is_err());
        assert!(gen_k1t_extremal(3, 1).is_err());
    }

    #[test]
    fn k1t_chain_is_connected_and_sparse() {
        let (g, _, _) = gen_k1t_extremal(3, 2).unwrap();
        // Three stars with two extra edges.
        assert_eq!(g.edge_count(), 3 * 2 + 2);
        assert!((0..g.n()).all(|v| g.degree(v) <= 2));
    }

    #[test]
    fn clique_partition_family() {
        for (k, w, n, phi) in [(2, 3, 6, 4), (2, 6, 12, 8), (3, 5, 15, 9)] {
            let (g, cert, claimed) = gen_clique_partition_extremal(k, w).unwrap();
            assert_eq!((g.n(), claimed), (n, phi));
            cert.validate(&g).unwrap();
            let mut b = Budget::unlimited();
            assert_eq!(clique_number(&g, &mut b).unwrap(), w);
            assert_eq!(clique_partition_number(&g, &mut b).unwrap(), k);
            assert_eq!(clique_partition_value(k, w), phi);
        }
        assert!(gen_clique_partition_extremal(2, 4).is_err());
        assert!(gen_clique_partition_extremal(1, 3).is_err());
    }

    #[test]
    fn clique_partition_small_edges() {
        // a1=0 a2=1 b1=2 b2=3 c1=4 c2=5
        let (g, _, _) = gen_clique_partition_extremal(2, 3).unwrap();
        let mut e: Vec<_> = g.edges().collect();
        e.sort();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 5), (2, 5), (3, 4)]);
    }

    #[test]
    fn bipartite_family() {
        for p in 3..=5 {
            let (g, cert, claimed) = gen_bipartite_extremal(p).unwrap();
            assert_eq!(g.n(), 3 * p - 4);
            assert_eq!(claimed, p);
            cert.validate(&g).unwrap();
            assert_eq!(g.max_degree(), p - 1);
            assert!(m_bound(&g) <= p);
            let bp = g.is_bipartite().unwrap();
            let (t, _) = biclique_cover_number(&g, &bp, &mut Budget::unlimited()).unwrap();
            assert_eq!(t, p - 1);
            assert_eq!(bipartite_value(g.n(), t), p);
        }
        assert_eq!(
            gen_bipartite_extremal(3).unwrap().0,
            Graph::from_edges(5, [(4, 3), (3, 0), (0, 2), (2, 1)]).unwrap()
        );
        assert!(gen_bipartite_extremal(2).is_err());
    }
}
