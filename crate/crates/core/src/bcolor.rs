//! Colourings, representatives and the exact b-chromatic search.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::invariants::{chromatic_number, m_bound};
use crate::{Budget, Error, Graph, Result};

/// Surjective map from vertices onto colours `0..num_colors`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl Coloring {
    /// Every colour below the maximum must be used.
    pub fn new(colors: Vec<usize>) -> Result<Self> {
        let num_colors = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; num_colors];
        for &c in &colors {
            used[c] = true;
        }
        if let Some(c) = used.iter().position(|&u| !u) {
            return Err(Error::InvalidColoring(format!("color {c} is unused")));
        }
        Ok(Coloring { colors, num_colors })
    }

    #[inline]
    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of vertices coloured.
    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    /// Colour classes, each sorted by vertex id.
    pub fn classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].push(v);
        }
        classes
    }

    /// Histogram `h[j]` = number of colour classes with exactly `j` vertices.
    pub fn class_sizes(&self) -> Vec<usize> {
        let sizes: Vec<usize> = self.classes().iter().map(Vec::len).collect();
        let mut hist = vec![0; sizes.iter().max().map_or(1, |&m| m + 1)];
        for s in sizes {
            hist[s] += 1;
        }
        hist
    }

    fn check_len(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::InvalidColoring(format!(
                "coloring covers {} vertices, graph has {}",
                self.len(),
                g.n()
            )));
        }
        Ok(())
    }

    /// Number of distinct colours among the neighbours of `v`, other than its own.
    fn foreign_colors(&self, g: &Graph, v: usize, seen: &mut [bool]) -> usize {
        seen.iter_mut().for_each(|s| *s = false);
        let own = self.colors[v];
        let mut count = 0;
        for w in g.neighbors(v).iter() {
            let c = self.colors[w];
            if c != own && !seen[c] {
                seen[c] = true;
                count += 1;
            }
        }
        count
    }
}

/// No edge is monochromatic.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool> {
    c.check_len(g)?;
    Ok(g.edges().all(|(u, v)| c.color(u) != c.color(v)))
}

/// Per colour, the vertices of that colour adjacent to every other colour.
pub fn representatives(g: &Graph, c: &Coloring) -> Result<Vec<Vec<usize>>> {
    if !is_proper(g, c)? {
        return Err(Error::InvalidColoring("coloring is not proper".into()));
    }
    let b = c.num_colors();
    let mut seen = vec![false; b];
    let mut reps = vec![Vec::new(); b];
    for v in 0..g.n() {
        if c.foreign_colors(g, v, &mut seen) + 1 == b {
            reps[c.color(v)].push(v);
        }
    }
    Ok(reps)
}

/// A b-colouring together with one representative per colour.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BColoringCertificate {
    pub coloring: Coloring,
    /// `reps[c]` is a vertex of colour `c` seeing all other colours.
    pub reps: Vec<usize>,
}

impl BColoringCertificate {
    pub fn num_colors(&self) -> usize {
        self.coloring.num_colors()
    }

    /// Re-check properness and every designated representative.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let c = &self.coloring;
        if !is_proper(g, c)? {
            return Err(Error::InvalidColoring("coloring is not proper".into()));
        }
        let b = c.num_colors();
        if self.reps.len() != b {
            return Err(Error::InvalidColoring(format!(
                "{} representatives for {b} colors",
                self.reps.len()
            )));
        }
        let mut seen = vec![false; b];
        for (color, &r) in self.reps.iter().enumerate() {
            if r >= g.n() {
                return Err(Error::VertexOutOfRange { vertex: r, n: g.n() });
            }
            if c.color(r) != color {
                return Err(Error::InvalidColoring(format!(
                    "representative {r} of color {color} has color {}",
                    c.color(r)
                )));
            }
            if c.foreign_colors(g, r, &mut seen) + 1 != b {
                return Err(Error::InvalidColoring(format!(
                    "vertex {r} does not see all colors other than {color}"
                )));
            }
        }
        Ok(())
    }
}

/// Certificate if `c` is a proper colouring with exactly `b` colours in
/// which every class has a representative (the lowest-id one is chosen).
pub fn is_b_coloring(g: &Graph, c: &Coloring, b: usize) -> Option<BColoringCertificate> {
    if c.num_colors() != b {
        return None;
    }
    let reps = representatives(g, c).ok()?;
    let reps = reps.iter().map(|r| r.first().copied()).collect::<Option<Vec<_>>>()?;
    Some(BColoringCertificate { coloring: c.clone(), reps })
}

/// Largest colour count handled by [`exists_b_coloring`].
pub const MAX_COLORS: usize = 64;

/// Search state: per-vertex colour (or `NONE`) and domain bitmask.
#[derive(Clone)]
struct State {
    color: Vec<usize>,
    domain: Vec<u64>,
}

const NONE: usize = usize::MAX;

struct BSearch<'a> {
    g: &'a Graph,
    k: usize,
    candidates: Vec<usize>,
    reps: Vec<usize>,
}

impl BSearch<'_> {
    /// Colour `v` with `c` and remove `c` from the neighbours' domains.
    /// Fails if an uncoloured neighbour runs out of colours.
    fn assign(&self, s: &mut State, v: usize, c: usize) -> bool {
        s.color[v] = c;
        s.domain[v] = 1 << c;
        for w in self.g.neighbors(v).iter() {
            s.domain[w] &= !(1u64 << c);
            if s.color[w] == NONE && s.domain[w] == 0 {
                return false;
            }
        }
        true
    }

    /// Colours rep `r` still has to see, and which neighbours could supply
    /// colour `d`.
    fn supporters(&self, s: &State, r: usize, d: usize) -> Option<Vec<usize>> {
        let mut out = Vec::new();
        for w in self.g.neighbors(r).iter() {
            if s.color[w] == d {
                return None;
            }
            if s.color[w] == NONE && s.domain[w] >> d & 1 == 1 {
                out.push(w);
            }
        }
        Some(out)
    }

    fn reps_still_feasible(&self, s: &State) -> bool {
        self.reps.iter().all(|&r| {
            let own = s.color[r];
            (0..self.k)
                .filter(|&d| d != own)
                .all(|d| self.supporters(s, r, d).is_none_or(|sup| !sup.is_empty()))
        })
    }

    /// Choose representatives `r_0 < r_1 < ...`, giving `r_c` colour `c`.
    fn pick_reps(&mut self, s: &State, start: usize, budget: &mut Budget) -> Result<Option<State>> {
        let c = self.reps.len();
        if c == self.k {
            return self.satisfy_reps(s.clone(), budget);
        }
        let need = self.k - c;
        for i in start..self.candidates.len() {
            if self.candidates.len() - i < need {
                break;
            }
            let v = self.candidates[i];
            if s.color[v] != NONE || s.domain[v] >> c & 1 == 0 {
                continue;
            }
            budget.tick()?;
            let mut next = s.clone();
            if !self.assign(&mut next, v, c) {
                continue;
            }
            self.reps.push(v);
            if self.reps_still_feasible(&next) {
                if let Some(done) = self.pick_reps(&next, i + 1, budget)? {
                    return Ok(Some(done));
                }
            }
            self.reps.pop();
        }
        Ok(None)
    }

    /// Give every representative a neighbour of each other colour.
    fn satisfy_reps(&self, s: State, budget: &mut Budget) -> Result<Option<State>> {
        budget.tick()?;
        // Most constrained (rep, colour) demand first.
        let mut demand: Option<(usize, Vec<usize>)> = None;
        for &r in &self.reps {
            let own = s.color[r];
            for d in (0..self.k).filter(|&d| d != own) {
                if let Some(sup) = self.supporters(&s, r, d) {
                    if sup.is_empty() {
                        return Ok(None);
                    }
                    if demand.as_ref().is_none_or(|(_, best)| sup.len() < best.len()) {
                        demand = Some((d, sup));
                    }
                }
            }
        }
        let Some((d, sup)) = demand else {
            return self.complete(s, budget);
        };
        // Branch i: sup[i] takes d, sup[..i] do not.
        let mut base = s;
        for &w in &sup {
            let mut next = base.clone();
            if self.assign(&mut next, w, d) && self.reps_still_feasible(&next) {
                if let Some(done) = self.satisfy_reps(next, budget)? {
                    return Ok(Some(done));
                }
            }
            base.domain[w] &= !(1u64 << d);
            if base.domain[w] == 0 {
                break;
            }
        }
        Ok(None)
    }

    /// Extend to a proper colouring of all vertices.
    fn complete(&self, s: State, budget: &mut Budget) -> Result<Option<State>> {
        budget.tick()?;
        let next_vertex =
            (0..self.g.n()).filter(|&v| s.color[v] == NONE).min_by_key(|&v| (s.domain[v].count_ones(), v));
        let Some(v) = next_vertex else {
            return Ok(Some(s));
        };
        let mut dom = s.domain[v];
        while dom != 0 {
            let c = dom.trailing_zeros() as usize;
            dom &= dom - 1;
            let mut next = s.clone();
            if self.assign(&mut next, v, c) {
                if let Some(done) = self.complete(next, budget)? {
                    return Ok(Some(done));
                }
            }
        }
        Ok(None)
    }
}

/// Exact search for a b-colouring with exactly `k` colours.
///
/// Representatives are fixed first (one per colour, increasing vertex ids,
/// degree at least `k - 1`), then each representative is given a rainbow
/// neighbourhood, then the rest of the graph is coloured properly.
pub fn exists_b_coloring(g: &Graph, k: usize, budget: &mut Budget) -> Result<Option<BColoringCertificate>> {
    let n = g.n();
    if k == 0 {
        return Ok((n == 0).then(|| BColoringCertificate {
            coloring: Coloring { colors: Vec::new(), num_colors: 0 },
            reps: Vec::new(),
        }));
    }
    if k > n {
        return Ok(None);
    }
    if k > MAX_COLORS {
        return Err(Error::TooLarge { n: k, max: MAX_COLORS });
    }
    let candidates: Vec<usize> = (0..n).filter(|&v| g.degree(v) + 1 >= k).collect();
    if candidates.len() < k {
        return Ok(None);
    }
    let all = if k == 64 { u64::MAX } else { (1u64 << k) - 1 };
    let start = State { color: vec![NONE; n], domain: vec![all; n] };
    let mut search = BSearch { g, k, candidates, reps: Vec::with_capacity(k) };
    let Some(done) = search.pick_reps(&start, 0, budget)? else {
        return Ok(None);
    };
    let cert = BColoringCertificate { coloring: Coloring::new(done.color)?, reps: search.reps };
    cert.validate(g)
        .map_err(|e| Error::Internal(format!("b-coloring search produced a bad certificate: {e}")))?;
    Ok(Some(cert))
}

/// `phi(G)` with a certificate.
///
/// Scans `k` downward from `m(G)`; the first feasible `k` is the maximum.
/// At `k = chi(G)` the optimal colouring is itself a b-colouring, so the
/// scan always terminates with a certificate.
pub fn b_chromatic_number(g: &Graph, budget: &mut Budget) -> Result<(usize, BColoringCertificate)> {
    if g.n() == 0 {
        let cert = exists_b_coloring(g, 0, budget)?.expect("empty graph");
        return Ok((0, cert));
    }
    let (chi, optimal) = chromatic_number(g, budget)?;
    for k in (chi + 1..=m_bound(g)).rev() {
        if let Some(cert) = exists_b_coloring(g, k, budget)? {
            return Ok((k, cert));
        }
    }
    let cert = is_b_coloring(g, &optimal, chi)
        .ok_or_else(|| Error::Internal("optimal coloring lacks a representative in some class".into()))?;
    Ok((chi, cert))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators;

    fn col(v: &[usize]) -> Coloring {
        Coloring::new(v.to_vec()).unwrap()
    }

    /// All colourings with exactly `k` colours via restricted growth strings.
    fn brute_b_colorable(g: &Graph, k: usize) -> bool {
        fn rec(g: &Graph, k: usize, v: usize, used: usize, colors: &mut Vec<usize>) -> bool {
            let n = g.n();
            if v == n {
                return used == k && is_b_coloring(g, &Coloring::new(colors.clone()).unwrap(), k).is_some();
            }
            if k - used > n - v {
                return false;
            }
            for c in 0..(used + 1).min(k) {
                colors.push(c);
                if rec(g, k, v + 1, used.max(c + 1), colors) {
                    return true;
                }
                colors.pop();
            }
            false
        }
        rec(g, k, 0, 0, &mut Vec::new())
    }

    #[test]
    fn coloring_requires_surjectivity() {
        assert!(Coloring::new(vec![0, 2]).is_err());
        let c = col(&[0, 1, 0, 2]);
        assert_eq!(c.num_colors(), 3);
        assert_eq!(c.class_sizes(), vec![0, 2, 1]);
    }

    #[test]
    fn properness() {
        let k3 = Graph::complete(3);
        assert!(is_proper(&k3, &col(&[0, 1, 2])).unwrap());
        assert!(!is_proper(&k3, &col(&[0, 1, 0])).unwrap());
        assert!(is_proper(&k3, &col(&[0, 1])).is_err());
    }

    #[test]
    fn representative_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(representatives(&k3, &col(&[0, 1, 2])).unwrap(), vec![vec![0], vec![1], vec![2]]);
        let p3 = Graph::path(3);
        assert_eq!(representatives(&p3, &col(&[0, 1, 0])).unwrap(), vec![vec![0, 2], vec![1]]);
        assert!(representatives(&k3, &col(&[0, 0, 1])).is_err());

        let (g, cert, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        // Vertex layout a1 a2 b1 b2 c1 c2: A and B vertices are the representatives.
        let reps = representatives(&g, &cert.coloring).unwrap();
        let mut all: Vec<usize> = reps.into_iter().flatten().collect();
        all.sort_unstable();
        assert_eq!(all, vec![0, 1, 2, 3]);
    }

    #[test]
    fn b_coloring_checks() {
        assert!(is_b_coloring(&Graph::complete(4), &col(&[0, 1, 2, 3]), 4).is_some());
        assert!(is_b_coloring(&Graph::complete(4), &col(&[0, 1, 2, 3]), 3).is_none());
        let k33 = Graph::complete_bipartite(3, 3);
        assert!(is_b_coloring(&k33, &col(&[0, 0, 1, 2, 2, 2]), 3).is_none());
        assert!(is_b_coloring(&k33, &col(&[0, 1, 0, 2, 2, 2]), 3).is_none());
        let (g, cert, p) = generators::gen_bipartite_extremal(3).unwrap();
        assert!(is_b_coloring(&g, &cert.coloring, p).is_some());
    }

    #[test]
    fn existence_examples() {
        let b = &mut Budget::unlimited();
        let c5 = Graph::cycle(5);
        assert!(brute_b_colorable(&c5, 3));
        assert!(exists_b_coloring(&c5, 3, b).unwrap().is_some());

        let k33 = Graph::complete_bipartite(3, 3);
        assert!(!brute_b_colorable(&k33, 3));
        assert!(exists_b_coloring(&k33, 3, b).unwrap().is_none());

        let cert = exists_b_coloring(&Graph::complete(4), 4, b).unwrap().unwrap();
        assert_eq!(cert.coloring.colors(), &[0, 1, 2, 3]);
    }

    #[test]
    fn phi_examples() {
        let b = &mut Budget::unlimited();
        for n in 1..7 {
            assert_eq!(b_chromatic_number(&Graph::complete(n), b).unwrap().0, n);
        }
        let p5 = Graph::path(5);
        let expected = (1..=4).rev().find(|&k| brute_b_colorable(&p5, k)).unwrap();
        assert_eq!(expected, 3);
        assert_eq!(b_chromatic_number(&p5, b).unwrap().0, 3);

        let (g, _, claimed) = generators::gen_k1t_extremal(3, 2).unwrap();
        let (phi, cert) = b_chromatic_number(&g, b).unwrap();
        assert_eq!((phi, claimed), (3, 3));
        cert.validate(&g).unwrap();
    }

    #[test]
    fn exists_matches_brute_force_on_small_graphs() {
        let b = &mut Budget::unlimited();
        // Every labelled graph on 5 vertices.
        let pairs: Vec<(usize, usize)> = (0..5).flat_map(|u| (u + 1..5).map(move |v| (u, v))).collect();
        for mask in 0u32..1 << pairs.len() {
            let g = Graph::from_edges(
                5,
                pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e),
            )
            .unwrap();
            for k in 1..=5 {
                let fast = exists_b_coloring(&g, k, b).unwrap();
                assert_eq!(fast.is_some(), brute_b_colorable(&g, k), "mask {mask} k {k}");
            }
        }
    }

    #[test]
    fn edge_cases() {
        let b = &mut Budget::unlimited();
        assert!(exists_b_coloring(&Graph::empty(3), 1, b).unwrap().is_some());
        assert!(exists_b_coloring(&Graph::path(2), 1, b).unwrap().is_none());
        assert!(exists_b_coloring(&Graph::path(2), 3, b).unwrap().is_none());
        assert_eq!(b_chromatic_number(&Graph::empty(0), b).unwrap().0, 0);
        assert_eq!(b_chromatic_number(&Graph::empty(4), b).unwrap().0, 1);
    }

    #[test]
    fn certificate_validation_rejects_tampering() {
        let g = Graph::complete(3);
        let mut cert = is_b_coloring(&g, &col(&[0, 1, 2]), 3).unwrap();
        cert.validate(&g).unwrap();
        cert.reps.swap(0, 1);
        assert!(cert.validate(&g).is_err());
    }
}
