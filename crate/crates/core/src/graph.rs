//! Simple undirected graphs on dense vertex ids `0..n`.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result, VertexSet};

/// Immutable simple undirected graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph { adj: vec![VertexSet::new(n); n] }
    }

    /// Build from an edge list. Duplicate edges collapse; self-loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::empty(n);
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Self {
        Graph::empty(n).complement()
    }

    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three vertices");
        Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// `K_{a,b}` with sides `0..a` and `a..a+b`.
    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        Graph::from_edges(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v))))
            .expect("valid complete bipartite graph")
    }

    /// `K_{1,leaves}` centred at vertex 0.
    pub fn star(leaves: usize) -> Self {
        Graph::complete_bipartite(1, leaves)
    }

    /// Outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
    pub fn petersen() -> Self {
        let outer = (0..5).map(|i| (i, (i + 1) % 5));
        let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
        let spokes = (0..5).map(|i| (i, i + 5));
        Graph::from_edges(10, outer.chain(inner).chain(spokes)).expect("valid Petersen graph")
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// Degrees sorted non-increasing.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let full = VertexSet::full(n);
        let adj = (0..n)
            .map(|v| {
                let mut row = full.difference(&self.adj[v]);
                row.remove(v);
                row
            })
            .collect();
        Graph { adj }
    }

    /// Subgraph induced by `vertices`, relabelled in increasing id order.
    ///
    /// Returns the subgraph and the map from new ids to original ids.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Result<(Graph, Vec<usize>)> {
        let n = self.n();
        if let Some(&v) = vertices.iter().find(|&&v| v >= n) {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let mut map: Vec<usize> = vertices.to_vec();
        map.sort_unstable();
        map.dedup();
        let m = map.len();
        let adj = map
            .iter()
            .map(|&u| VertexSet::from_iter(m, (0..m).filter(|&j| self.has_edge(u, map[j]))))
            .collect();
        Ok((Graph { adj }, map))
    }

    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        vertices
            .iter()
            .enumerate()
            .all(|(i, &u)| vertices[i + 1..].iter().all(|&v| u != v && self.has_edge(u, v)))
    }

    pub fn is_independent(&self, vertices: &[usize]) -> bool {
        vertices.iter().enumerate().all(|(i, &u)| vertices[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Two-colour the graph by breadth-first layering.
    ///
    /// The lowest id of every component goes to `x`, so isolated vertices
    /// land in `x`. Returns `None` when an odd cycle exists.
    pub fn is_bipartite(&self) -> Option<Bipartition> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for w in self.adj[u].iter() {
                    match side[w] {
                        None => {
                            side[w] = Some(!su);
                            queue.push_back(w);
                        }
                        Some(sw) if sw == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let (x, y) = (0..n).partition(|&v| side[v] == Some(false));
        Some(Bipartition { x, y })
    }

    /// True iff no vertex has `t` pairwise non-adjacent neighbours, i.e. the
    /// graph has no induced `K_{1,t}`.
    pub fn is_k1t_free(&self, t: usize) -> bool {
        (0..self.n()).all(|v| !self.has_independent_subset(self.adj[v].clone(), t))
    }

    /// Does `candidates` contain an independent set of size `need`?
    pub(crate) fn has_independent_subset(&self, mut candidates: VertexSet, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        if candidates.len() < need {
            return false;
        }
        while let Some(v) = candidates.first() {
            candidates.remove(v);
            if candidates.len() + 1 < need {
                return false;
            }
            let rest = candidates.difference(&self.adj[v]);
            if self.has_independent_subset(rest, need - 1) {
                return true;
            }
        }
        false
    }
}

impl core::fmt::Debug for Graph {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Split of the vertex set into two sides.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Bipartition {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl Bipartition {
    /// Side membership: `false` for `x`, `true` for `y`.
    pub fn sides(&self, n: usize) -> Result<Vec<bool>> {
        let mut side = vec![None; n];
        for (s, part) in [(false, &self.x), (true, &self.y)] {
            for &v in part {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if side[v].is_some() {
                    return Err(Error::InvalidBipartition(alloc::format!("vertex {v} listed twice")));
                }
                side[v] = Some(s);
            }
        }
        side.into_iter()
            .enumerate()
            .map(|(v, s)| {
                s.ok_or_else(|| Error::InvalidBipartition(alloc::format!("vertex {v} is on neither side")))
            })
            .collect()
    }

    /// Check that the sides partition the vertices and carry no inner edge.
    pub fn validate(&self, g: &Graph) -> Result<Vec<bool>> {
        let side = self.sides(g.n())?;
        if let Some((u, v)) = g.edges().find(|&(u, v)| side[u] == side[v]) {
            return Err(Error::InvalidBipartition(alloc::format!("edge {u}-{v} lies inside one side")));
        }
        Ok(side)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (0..=max_n).prop_flat_map(|n| {
            let pairs = n * n.saturating_sub(1) / 2;
            proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
                let mut edges = Vec::new();
                let mut k = 0;
                for u in 0..n {
                    for v in u + 1..n {
                        if bits[k] {
                            edges.push((u, v));
                        }
                        k += 1;
                    }
                }
                Graph::from_edges(n, edges).unwrap()
            })
        })
    }

    fn has_odd_cycle(g: &Graph) -> bool {
        // Closed walk of odd length exists iff an odd cycle exists; track
        // parity reachability from every start vertex.
        let n = g.n();
        for s in 0..n {
            let mut reach = vec![[false; 2]; n];
            reach[s][0] = true;
            let mut stack = vec![(s, 0usize)];
            while let Some((u, p)) = stack.pop() {
                for w in g.neighbors(u).iter() {
                    let q = p ^ 1;
                    if !reach[w][q] {
                        reach[w][q] = true;
                        stack.push((w, q));
                    }
                }
            }
            if reach[s][1] {
                return true;
            }
        }
        false
    }

    fn brute_has_star(g: &Graph, t: usize) -> bool {
        fn choose(pool: &[usize], t: usize, start: usize, acc: &mut Vec<usize>, g: &Graph) -> bool {
            if acc.len() == t {
                return g.is_independent(acc);
            }
            for i in start..pool.len() {
                acc.push(pool[i]);
                if choose(pool, t, i + 1, acc, g) {
                    return true;
                }
                acc.pop();
            }
            false
        }
        (0..g.n()).any(|c| {
            let nb = g.neighbors(c).to_vec();
            choose(&nb, t, 0, &mut Vec::new(), g)
        })
    }

    #[test]
    fn rejects_bad_edges() {
        assert_eq!(Graph::from_edges(3, [(0, 3)]), Err(Error::VertexOutOfRange { vertex: 3, n: 3 }));
        assert_eq!(Graph::from_edges(3, [(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_examples() {
        assert_eq!(Graph::complete(3).complement(), Graph::empty(3));
        // C5 is self-complementary: its complement is 2-regular and connected.
        let c = Graph::cycle(5).complement();
        assert_eq!(c.edge_count(), 5);
        assert!((0..5).all(|v| c.degree(v) == 2));
        assert_eq!(c, Graph::from_edges(5, [(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap());
    }

    #[test]
    fn induced_subgraph_examples() {
        let (p, map) = Graph::cycle(5).induced_subgraph(&[1, 2, 3]).unwrap();
        assert_eq!(p, Graph::path(3));
        assert_eq!(map, vec![1, 2, 3]);

        let g = Graph::petersen();
        let all: Vec<usize> = (0..10).collect();
        assert_eq!(g.induced_subgraph(&all).unwrap().0, g);

        assert_eq!(Graph::complete(5).induced_subgraph(&[4, 0, 2]).unwrap().0, Graph::complete(3));
        assert!(Graph::complete(5).induced_subgraph(&[5]).is_err());
    }

    #[test]
    fn bipartite_examples() {
        let bp = Graph::cycle(6).is_bipartite().unwrap();
        assert_eq!(bp, Bipartition { x: vec![0, 2, 4], y: vec![1, 3, 5] });
        assert!(Graph::cycle(5).is_bipartite().is_none());
        let bp = Graph::empty(3).is_bipartite().unwrap();
        assert_eq!(bp, Bipartition { x: vec![0, 1, 2], y: vec![] });
    }

    #[test]
    fn bipartition_validation() {
        let g = Graph::path(3);
        assert!(Bipartition { x: vec![0, 2], y: vec![1] }.validate(&g).is_ok());
        assert!(Bipartition { x: vec![0, 1], y: vec![2] }.validate(&g).is_err());
        assert!(Bipartition { x: vec![0], y: vec![1] }.validate(&g).is_err());
        assert!(Bipartition { x: vec![0, 1], y: vec![1, 2] }.validate(&g).is_err());
    }

    #[test]
    fn star_freeness_examples() {
        assert!(!Graph::star(3).is_k1t_free(3));
        assert!(Graph::cycle(5).is_k1t_free(3));
        // Every Petersen neighbourhood is an independent triple.
        let p = Graph::petersen();
        assert!((0..10).all(|v| p.is_independent(&p.neighbors(v).to_vec())));
        assert!(brute_has_star(&p, 3));
        assert!(!p.is_k1t_free(3));
        assert!(p.is_k1t_free(4));
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(12)) {
            let c = g.complement();
            prop_assert_eq!(c.complement(), g.clone());
            let n = g.n();
            prop_assert_eq!(g.edge_count() + c.edge_count(), n * n.saturating_sub(1) / 2);
        }

        #[test]
        fn bipartite_iff_no_odd_cycle(g in arb_graph(8)) {
            match g.is_bipartite() {
                Some(bp) => {
                    prop_assert!(!has_odd_cycle(&g));
                    prop_assert!(bp.validate(&g).is_ok());
                }
                None => prop_assert!(has_odd_cycle(&g)),
            }
        }

        #[test]
        fn star_free_matches_enumeration(g in arb_graph(8), t in 2usize..5) {
            prop_assert_eq!(g.is_k1t_free(t), !brute_has_star(&g, t));
        }
    }
}
