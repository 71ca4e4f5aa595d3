//! Exact classical invariants: chromatic, clique, independence, clique
//! partition and biclique cover numbers, plus the degree bound `m(G)`.
//!
//! The searches visit vertices in a fixed order (descending degree, ties by
//! id) so witnesses are reproducible.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::bcolor::Coloring;
use crate::{Bipartition, Budget, Error, Graph, Result, VertexSet};

/// Vertices by descending degree, ties broken by id.
pub(crate) fn degree_order(g: &Graph) -> Vec<usize> {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    order
}

/// Maximum clique as a sorted vertex list.
pub fn maximum_clique(g: &Graph, budget: &mut Budget) -> Result<Vec<usize>> {
    let order = degree_order(g);
    let mut best = Vec::new();
    let mut current = Vec::new();
    expand_clique(g, &order, &mut current, g.vertex_set(), &mut best, budget)?;
    best.sort_unstable();
    Ok(best)
}

/// Greedy sequential colouring of `p` used as the clique bound.
///
/// Returns vertices with their colour number (1-based), sorted by colour.
fn color_bound(g: &Graph, order: &[usize], p: &VertexSet) -> Vec<(usize, usize)> {
    let mut uncolored = p.clone();
    let mut out = Vec::with_capacity(p.len());
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut available = uncolored.clone();
        for &v in order {
            if available.contains(v) {
                out.push((v, color));
                uncolored.remove(v);
                available.remove(v);
                available.difference_with(g.neighbors(v));
            }
        }
    }
    out
}

fn expand_clique(
    g: &Graph,
    order: &[usize],
    current: &mut Vec<usize>,
    mut p: VertexSet,
    best: &mut Vec<usize>,
    budget: &mut Budget,
) -> Result<()> {
    budget.tick()?;
    let colored = color_bound(g, order, &p);
    for &(v, c) in colored.iter().rev() {
        if current.len() + c <= best.len() {
            return Ok(());
        }
        current.push(v);
        let next = p.intersection(g.neighbors(v));
        if next.is_empty() {
            if current.len() > best.len() {
                *best = current.clone();
            }
        } else {
            expand_clique(g, order, current, next, best, budget)?;
        }
        current.pop();
        p.remove(v);
    }
    Ok(())
}

/// `omega(G)`: order of the largest complete subgraph.
pub fn clique_number(g: &Graph, budget: &mut Budget) -> Result<usize> {
    maximum_clique(g, budget).map(|c| c.len())
}

/// `alpha(G)`, computed as the clique number of the complement.
pub fn independence_number(g: &Graph, budget: &mut Budget) -> Result<usize> {
    clique_number(&g.complement(), budget)
}

/// `chi(G)` together with an optimal proper colouring.
///
/// The empty graph has chromatic number 0.
pub fn chromatic_number(g: &Graph, budget: &mut Budget) -> Result<(usize, Coloring)> {
    let n = g.n();
    if n == 0 {
        return Ok((0, Coloring::new(Vec::new())?));
    }
    let clique = maximum_clique(g, budget)?;
    let greedy = dsatur_greedy(g);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    for k in clique.len()..upper {
        if let Some(colors) = k_coloring(g, k, &clique, budget)? {
            return Ok((k, Coloring::new(colors)?));
        }
    }
    Ok((upper, Coloring::new(normalize(&greedy))?))
}

/// Relabel colours by order of first appearance.
fn normalize(colors: &[usize]) -> Vec<usize> {
    let mut map = BTreeMap::new();
    colors
        .iter()
        .map(|&c| {
            let next = map.len();
            *map.entry(c).or_insert(next)
        })
        .collect()
}

fn dsatur_greedy(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut color = vec![usize::MAX; n];
    let mut seen: Vec<VertexSet> = vec![VertexSet::new(n + 1); n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| color[v] == usize::MAX)
            .max_by(|&a, &b| {
                seen[a].len().cmp(&seen[b].len()).then(g.degree(a).cmp(&g.degree(b))).then(b.cmp(&a))
            })
            .unwrap();
        let c = (0..=n).find(|&c| !seen[v].contains(c)).unwrap();
        color[v] = c;
        for w in g.neighbors(v).iter() {
            seen[w].insert(c);
        }
    }
    color
}

struct KColoring<'a> {
    g: &'a Graph,
    k: usize,
    color: Vec<usize>,
    // forbidden[v * k + c]: number of neighbours of v currently coloured c
    forbidden: Vec<u32>,
}

impl KColoring<'_> {
    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = c;
        for w in self.g.neighbors(v).iter() {
            self.forbidden[w * self.k + c] += 1;
        }
    }

    fn unassign(&mut self, v: usize) {
        let c = self.color[v];
        self.color[v] = usize::MAX;
        for w in self.g.neighbors(v).iter() {
            self.forbidden[w * self.k + c] -= 1;
        }
    }

    fn saturation(&self, v: usize) -> usize {
        self.forbidden[v * self.k..(v + 1) * self.k].iter().filter(|&&x| x > 0).count()
    }

    fn search(&mut self, used: usize, remaining: usize, budget: &mut Budget) -> Result<bool> {
        if remaining == 0 {
            return Ok(true);
        }
        budget.tick()?;
        let n = self.g.n();
        let v = (0..n)
            .filter(|&v| self.color[v] == usize::MAX)
            .max_by(|&a, &b| {
                self.saturation(a)
                    .cmp(&self.saturation(b))
                    .then(self.g.degree(a).cmp(&self.g.degree(b)))
                    .then(b.cmp(&a))
            })
            .unwrap();
        let limit = (used + 1).min(self.k);
        for c in 0..limit {
            if self.forbidden[v * self.k + c] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(used.max(c + 1), remaining - 1, budget)? {
                return Ok(true);
            }
            self.unassign(v);
        }
        Ok(false)
    }
}

/// Proper `k`-colouring with `clique` precoloured `0..clique.len()`.
fn k_coloring(g: &Graph, k: usize, clique: &[usize], budget: &mut Budget) -> Result<Option<Vec<usize>>> {
    let n = g.n();
    if clique.len() > k {
        return Ok(None);
    }
    let mut state = KColoring { g, k, color: vec![usize::MAX; n], forbidden: vec![0; n * k] };
    for (c, &v) in clique.iter().enumerate() {
        state.assign(v, c);
    }
    if state.search(clique.len(), n - clique.len(), budget)? {
        Ok(Some(state.color))
    } else {
        Ok(None)
    }
}

/// `theta(G)`: fewest cliques partitioning the vertices, i.e. the chromatic
/// number of the complement.
pub fn clique_partition_number(g: &Graph, budget: &mut Budget) -> Result<usize> {
    chromatic_number(&g.complement(), budget).map(|(k, _)| k)
}

/// `m(G) = max { i : d(x_i) >= i - 1 }` over the non-increasing degree
/// sequence; 0 for the empty graph.
pub fn m_bound(g: &Graph) -> usize {
    g.degree_sequence()
        .iter()
        .enumerate()
        .filter(|&(i, &d)| d >= i)
        .map(|(i, _)| i + 1)
        .next_back()
        .unwrap_or(0)
}

/// Vertex-disjoint complete bipartite blocks covering the vertices.
///
/// Each block is `(s1, s2)` with `s1` non-empty. When `s2` is non-empty the
/// block is `s1 x s2` with `s1` on the `x` side; otherwise `s1` is a single
/// vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BicliqueCover {
    pub blocks: Vec<(Vec<usize>, Vec<usize>)>,
}

impl BicliqueCover {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn validate(&self, g: &Graph, bp: &Bipartition) -> Result<()> {
        let side = bp.validate(g)?;
        let n = g.n();
        let mut covered = vec![false; n];
        let bad = |msg: alloc::string::String| Err(Error::InvalidArgument(msg));
        for (i, (s1, s2)) in self.blocks.iter().enumerate() {
            for &v in s1.iter().chain(s2) {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if covered[v] {
                    return bad(alloc::format!("vertex {v} covered twice"));
                }
                covered[v] = true;
            }
            if s1.is_empty() {
                return bad(alloc::format!("block {i} has an empty first part"));
            }
            if s2.is_empty() {
                if s1.len() != 1 {
                    return bad(alloc::format!("block {i} is one-sided with {} vertices", s1.len()));
                }
                continue;
            }
            if s1.iter().any(|&u| side[u]) || s2.iter().any(|&v| !side[v]) {
                return bad(alloc::format!("block {i} does not respect the bipartition"));
            }
            if let Some((u, v)) =
                s1.iter().flat_map(|&u| s2.iter().map(move |&v| (u, v))).find(|&(u, v)| !g.has_edge(u, v))
            {
                return bad(alloc::format!("block {i} misses edge {u}-{v}"));
            }
        }
        if let Some(v) = covered.iter().position(|&c| !c) {
            return bad(alloc::format!("vertex {v} is not covered"));
        }
        Ok(())
    }
}

/// Largest graph accepted by [`biclique_cover_number`].
pub const BICLIQUE_MAX_VERTICES: usize = 64;

/// Biclique number `t`: the fewest vertex-disjoint bicliques (single
/// vertices allowed) covering a bipartite graph, with a witness cover.
///
/// Exhaustive over blocks containing the lowest uncovered vertex, memoised
/// on the uncovered set.
pub fn biclique_cover_number(
    g: &Graph,
    bp: &Bipartition,
    budget: &mut Budget,
) -> Result<(usize, BicliqueCover)> {
    let side = bp.validate(g)?;
    let n = g.n();
    if n > BICLIQUE_MAX_VERTICES {
        return Err(Error::TooLarge { n, max: BICLIQUE_MAX_VERTICES });
    }
    let nbr: Vec<u64> = (0..n).map(|v| g.neighbors(v).iter().fold(0u64, |m, w| m | 1 << w)).collect();
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut solver = BicliqueSolver { nbr, memo: BTreeMap::new() };
    let value = solver.solve(full, budget)?;

    let mut blocks = Vec::with_capacity(value);
    let mut rest = full;
    while rest != 0 {
        let block = solver.memo[&rest].1;
        let (mut s1, mut s2): (Vec<usize>, Vec<usize>) = bits(block).partition(|&v| !side[v]);
        if s1.is_empty() {
            core::mem::swap(&mut s1, &mut s2);
        }
        blocks.push((s1, s2));
        rest &= !block;
    }
    Ok((value, BicliqueCover { blocks }))
}

fn bits(mut m: u64) -> impl Iterator<Item = usize> {
    core::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let v = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(v)
        }
    })
}

/// Iterate all submasks of `m`, including 0 and `m` itself.
fn submasks(m: u64) -> impl Iterator<Item = u64> {
    let mut next = Some(m);
    core::iter::from_fn(move || {
        let s = next?;
        next = if s == 0 { None } else { Some((s - 1) & m) };
        Some(s)
    })
}

struct BicliqueSolver {
    nbr: Vec<u64>,
    // uncovered set -> (optimal block count, first block of an optimal cover)
    memo: BTreeMap<u64, (usize, u64)>,
}

impl BicliqueSolver {
    fn solve(&mut self, rest: u64, budget: &mut Budget) -> Result<usize> {
        if rest == 0 {
            return Ok(0);
        }
        if let Some(&(value, _)) = self.memo.get(&rest) {
            return Ok(value);
        }
        budget.tick()?;
        let v = rest.trailing_zeros() as usize;
        let vbit = 1u64 << v;
        let mut best_block = vbit;
        let mut best = 1 + self.solve(rest & !vbit, budget)?;
        let opposite = self.nbr[v] & rest;
        for partners in submasks(opposite).filter(|&s| s != 0) {
            let common = bits(partners).fold(rest, |m, y| m & self.nbr[y]);
            let extra = common & !vbit;
            for same_side in submasks(extra) {
                if best == 1 {
                    break;
                }
                let block = vbit | same_side | partners;
                let value = 1 + self.solve(rest & !block, budget)?;
                if value < best {
                    best = value;
                    best_block = block;
                }
            }
        }
        self.memo.insert(rest, (best, best_block));
        Ok(best)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn unlimited() -> Budget {
        Budget::unlimited()
    }

    #[test]
    fn chromatic_examples() {
        let b = &mut unlimited();
        assert_eq!(chromatic_number(&Graph::complete(4), b).unwrap().0, 4);
        assert_eq!(chromatic_number(&Graph::cycle(5), b).unwrap().0, 3);
        assert_eq!(chromatic_number(&Graph::empty(0), b).unwrap().0, 0);
        assert_eq!(chromatic_number(&Graph::empty(4), b).unwrap().0, 1);
        let (k, c) = chromatic_number(&Graph::petersen(), b).unwrap();
        assert_eq!(k, 3);
        assert_eq!(c.num_colors(), 3);
        assert!(crate::bcolor::is_proper(&Graph::petersen(), &c).unwrap());
    }

    #[test]
    fn petersen_is_not_two_colorable() {
        // Exhaustive refutation over all 2^10 two-colourings.
        let g = Graph::petersen();
        let proper = (0u32..1 << 10).any(|m| g.edges().all(|(u, v)| (m >> u & 1) != (m >> v & 1)));
        assert!(!proper);
    }

    #[test]
    fn clique_examples() {
        let b = &mut unlimited();
        assert_eq!(clique_number(&Graph::complete(5), b).unwrap(), 5);
        assert_eq!(clique_number(&Graph::cycle(5), b).unwrap(), 2);
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        assert_eq!(clique_number(&g, b).unwrap(), 3);
    }

    #[test]
    fn independence_examples() {
        let b = &mut unlimited();
        assert_eq!(independence_number(&Graph::complete(6), b).unwrap(), 1);
        assert_eq!(independence_number(&Graph::cycle(5), b).unwrap(), 2);
        assert_eq!(independence_number(&Graph::petersen(), b).unwrap(), 4);
    }

    #[test]
    fn clique_partition_examples() {
        let b = &mut unlimited();
        assert_eq!(clique_partition_number(&Graph::complete(5), b).unwrap(), 1);
        assert_eq!(clique_partition_number(&Graph::cycle(5), b).unwrap(), 3);
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        // Two disjoint triangles {a1,b2,c1} and {a2,b1,c2}; ids a1=0 a2=1 b1=2 b2=3 c1=4 c2=5.
        assert!(g.is_clique(&[0, 3, 4]) && g.is_clique(&[1, 2, 5]));
        assert_eq!(clique_partition_number(&g, b).unwrap(), 2);
    }

    #[test]
    fn m_bound_examples() {
        assert_eq!(m_bound(&Graph::star(5)), 2);
        assert_eq!(m_bound(&Graph::complete(6)), 6);
        assert_eq!(m_bound(&Graph::petersen()), 4);
        assert_eq!(m_bound(&Graph::empty(3)), 1);
        assert_eq!(m_bound(&Graph::empty(0)), 0);
    }

    #[test]
    fn biclique_examples() {
        let b = &mut unlimited();
        let p5 = Graph::path(5);
        let bp = p5.is_bipartite().unwrap();
        let (t, cover) = biclique_cover_number(&p5, &bp, b).unwrap();
        assert_eq!(t, 2);
        cover.validate(&p5, &bp).unwrap();

        let k33 = Graph::complete_bipartite(3, 3);
        let bp = k33.is_bipartite().unwrap();
        assert_eq!(biclique_cover_number(&k33, &bp, b).unwrap().0, 1);

        let e3 = Graph::empty(3);
        let bp = e3.is_bipartite().unwrap();
        let (t, cover) = biclique_cover_number(&e3, &bp, b).unwrap();
        assert_eq!(t, 3);
        cover.validate(&e3, &bp).unwrap();
    }

    #[test]
    fn biclique_rejects_invalid_bipartition() {
        let g = Graph::path(3);
        let bp = Bipartition { x: vec![0, 1], y: vec![2] };
        assert!(biclique_cover_number(&g, &bp, &mut unlimited()).is_err());
    }

    #[test]
    fn cover_validation_catches_errors() {
        let g = Graph::path(3);
        let bp = g.is_bipartite().unwrap();
        let two_sided = BicliqueCover { blocks: vec![(vec![0, 2], vec![])] };
        assert!(two_sided.validate(&g, &bp).is_err());
        let ok = BicliqueCover { blocks: vec![(vec![0, 2], vec![1])] };
        assert!(ok.validate(&g, &bp).is_ok());
        let missing = BicliqueCover { blocks: vec![(vec![0], vec![1])] };
        assert!(missing.validate(&g, &bp).is_err());
    }

    #[test]
    fn budget_exhaustion_is_an_error() {
        let mut b = Budget::nodes(3);
        assert!(matches!(
            chromatic_number(&Graph::petersen(), &mut b),
            Err(Error::BudgetExceeded { limit: 3 })
        ));
    }

    #[test]
    fn submask_enumeration() {
        let v: Vec<u64> = submasks(0b101).collect();
        assert_eq!(v, vec![0b101, 0b100, 0b001, 0]);
    }
}
