//! Six-part decompositions of co-bipartite graphs.
//!
//! A co-bipartite graph `G` splits into two cliques `X` and `Y`. It belongs
//! to the family `A_b` when `X = A1 + B1 + C1` and `Y = A2 + B2 + C2` with
//!
//! 1. every `A1` vertex adjacent to all of `A2 + B2`, and every `A2` vertex
//!    adjacent to all of `C1`;
//! 2. a perfect anti-matching (pairs of non-adjacent vertices) between `B1`
//!    and `B2`;
//! 3. a perfect anti-matching between `C1` and `C2`;
//!
//! and `b = |X| + |A2|`. Such a decomposition is exactly a b-colouring with
//! `b` colours: colour `X + A2` rainbow and let each anti-matched pair share
//! a colour. `B2` and `C1` then hold the representatives of the shared colours.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::bcolor::{exists_b_coloring, BColoringCertificate, Coloring};
use crate::invariants::clique_number;
use crate::matching::max_matching;
use crate::{Bipartition, Budget, Error, Graph, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ABDecomposition {
    /// Clique sides of `G` (a bipartition of the complement).
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub a1: Vec<usize>,
    pub b1: Vec<usize>,
    pub c1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b2: Vec<usize>,
    pub c2: Vec<usize>,
    /// Anti-matching `B1 -> B2` as `(b1 vertex, b2 vertex)` pairs.
    pub m_b: Vec<(usize, usize)>,
    /// Anti-matching `C1 -> C2`.
    pub m_c: Vec<(usize, usize)>,
    pub b: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Part {
    A1,
    B1,
    C1,
    A2,
    B2,
    C2,
}

impl ABDecomposition {
    fn parts(&self) -> [(Part, &Vec<usize>); 6] {
        [
            (Part::A1, &self.a1),
            (Part::B1, &self.b1),
            (Part::C1, &self.c1),
            (Part::A2, &self.a2),
            (Part::B2, &self.b2),
            (Part::C2, &self.c2),
        ]
    }

    /// Part label of every vertex. Errors when the sets do not partition
    /// the vertices consistently with `x` and `y`.
    fn labels(&self, n: usize) -> Result<Vec<Part>> {
        let bad = |msg: alloc::string::String| Err(Error::InvalidDecomposition(msg));
        let sides = Bipartition { x: self.x.clone(), y: self.y.clone() }
            .sides(n)
            .map_err(|e| Error::InvalidDecomposition(format!("{e}")))?;
        let mut label = vec![None; n];
        for (part, set) in self.parts() {
            let in_y = matches!(part, Part::A2 | Part::B2 | Part::C2);
            for &v in set {
                if v >= n {
                    return Err(Error::VertexOutOfRange { vertex: v, n });
                }
                if label[v].is_some() {
                    return bad(format!("vertex {v} lies in two parts"));
                }
                if sides[v] != in_y {
                    return bad(format!("vertex {v} is in {part:?} but on the other side"));
                }
                label[v] = Some(part);
            }
        }
        match label.iter().position(Option::is_none) {
            Some(v) => bad(format!("vertex {v} is in no part")),
            None => Ok(label.into_iter().flatten().collect()),
        }
    }

    /// Build a decomposition from the six parts, finding both anti-matchings
    /// by maximum matching. `None` if either anti-matching is not perfect or
    /// the properties fail.
    #[allow(clippy::too_many_arguments)]
    pub fn from_parts(
        g: &Graph,
        x: Vec<usize>,
        y: Vec<usize>,
        a1: Vec<usize>,
        b1: Vec<usize>,
        c1: Vec<usize>,
        a2: Vec<usize>,
        b2: Vec<usize>,
        c2: Vec<usize>,
    ) -> Result<Option<Self>> {
        let Some(m_b) = perfect_anti_matching(g, &b1, &b2) else {
            return Ok(None);
        };
        let Some(m_c) = perfect_anti_matching(g, &c1, &c2) else {
            return Ok(None);
        };
        let b = x.len() + a2.len();
        let d = ABDecomposition { x, y, a1, b1, c1, a2, b2, c2, m_b, m_c, b };
        Ok(verify_ab_decomposition(g, &d)?.then_some(d))
    }

    /// The b-colouring the decomposition describes: `A1, B1, C1, A2` get
    /// distinct colours in that order, `B2` and `C2` copy their partners.
    pub fn coloring(&self, g: &Graph) -> Result<BColoringCertificate> {
        if !verify_ab_decomposition(g, self)? {
            return Err(Error::InvalidDecomposition("decomposition does not verify".into()));
        }
        let mut colors = vec![usize::MAX; g.n()];
        let mut reps = Vec::with_capacity(self.b);
        for &v in self.a1.iter().chain(&self.b1).chain(&self.c1).chain(&self.a2) {
            colors[v] = reps.len();
            reps.push(v);
        }
        for &(u, v) in &self.m_b {
            colors[v] = colors[u];
            reps[colors[u]] = v;
        }
        for &(u, v) in &self.m_c {
            colors[v] = colors[u];
        }
        let cert = BColoringCertificate { coloring: Coloring::new(colors)?, reps };
        cert.validate(g)?;
        Ok(cert)
    }
}

fn perfect_anti_matching(g: &Graph, left: &[usize], right: &[usize]) -> Option<Vec<(usize, usize)>> {
    if left.len() != right.len() {
        return None;
    }
    let adj: Vec<Vec<usize>> =
        left.iter().map(|&u| (0..right.len()).filter(|&j| !g.has_edge(u, right[j])).collect()).collect();
    max_matching(&adj, right.len())
        .into_iter()
        .enumerate()
        .map(|(i, m)| m.map(|j| (left[i], right[j])))
        .collect()
}

/// `pairs` is a bijection from `from` onto `to` using only non-edges.
fn is_perfect_anti_matching(g: &Graph, pairs: &[(usize, usize)], from: &[usize], to: &[usize]) -> bool {
    let mut dom: Vec<usize> = pairs.iter().map(|p| p.0).collect();
    let mut img: Vec<usize> = pairs.iter().map(|p| p.1).collect();
    dom.sort_unstable();
    img.sort_unstable();
    let mut from = from.to_vec();
    let mut to = to.to_vec();
    from.sort_unstable();
    to.sort_unstable();
    dom == from && img == to && pairs.iter().all(|&(u, v)| !g.has_edge(u, v))
}

/// Check every defining property of the family.
///
/// Errors if the sets overlap or fail to cover the vertices; returns
/// `false` if they partition correctly but a property fails.
pub fn verify_ab_decomposition(g: &Graph, d: &ABDecomposition) -> Result<bool> {
    d.labels(g.n())?;
    let complete = |s: &[usize], t: &[usize]| s.iter().all(|&u| t.iter().all(|&v| g.has_edge(u, v)));
    Ok(g.is_clique(&d.x)
        && g.is_clique(&d.y)
        && complete(&d.a1, &d.a2)
        && complete(&d.a1, &d.b2)
        && complete(&d.a2, &d.c1)
        && is_perfect_anti_matching(g, &d.m_b, &d.b1, &d.b2)
        && is_perfect_anti_matching(g, &d.m_c, &d.c1, &d.c2)
        && d.b == d.x.len() + d.a2.len())
}

/// Clique bipartition of a co-bipartite graph.
fn clique_sides(g: &Graph) -> Result<Bipartition> {
    g.complement().is_bipartite().ok_or(Error::NotCoBipartite)
}

/// Read the decomposition off a b-colouring of a co-bipartite graph.
///
/// Classes have at most two vertices, one per clique side. Singletons form
/// `A1`/`A2`. A pair whose designated representative lies in `Y` goes to
/// `B1`/`B2`, otherwise to `C1`/`C2`.
pub fn extract_decomposition(
    g: &Graph,
    sides: &Bipartition,
    cert: &BColoringCertificate,
) -> Result<ABDecomposition> {
    let in_y = sides.sides(g.n())?;
    let mut d = ABDecomposition {
        x: sides.x.clone(),
        y: sides.y.clone(),
        a1: Vec::new(),
        b1: Vec::new(),
        c1: Vec::new(),
        a2: Vec::new(),
        b2: Vec::new(),
        c2: Vec::new(),
        m_b: Vec::new(),
        m_c: Vec::new(),
        b: sides.x.len(),
    };
    for (color, class) in cert.coloring.classes().iter().enumerate() {
        match class[..] {
            [v] if in_y[v] => d.a2.push(v),
            [v] => d.a1.push(v),
            [u, v] if in_y[u] != in_y[v] => {
                let (x, y) = if in_y[v] { (u, v) } else { (v, u) };
                if in_y[cert.reps[color]] {
                    d.b1.push(x);
                    d.b2.push(y);
                    d.m_b.push((x, y));
                } else {
                    d.c1.push(x);
                    d.c2.push(y);
                    d.m_c.push((x, y));
                }
            }
            _ => {
                return Err(Error::Internal(format!(
                    "color class {class:?} is not an independent set of a co-bipartite graph"
                )))
            }
        }
    }
    for set in [&mut d.a1, &mut d.b1, &mut d.c1, &mut d.a2, &mut d.b2, &mut d.c2] {
        set.sort_unstable();
    }
    d.m_b.sort_unstable();
    d.m_c.sort_unstable();
    d.b += d.a2.len();
    if !verify_ab_decomposition(g, &d)? {
        return Err(Error::Internal(format!("extracted decomposition fails verification: {d:?}")));
    }
    Ok(d)
}

/// A verified decomposition witnessing `G` in `A_b`, if one exists.
pub fn is_in_ab(g: &Graph, b: usize, budget: &mut Budget) -> Result<Option<ABDecomposition>> {
    let sides = clique_sides(g)?;
    match exists_b_coloring(g, b, budget)? {
        Some(cert) => extract_decomposition(g, &sides, &cert).map(Some),
        None => Ok(None),
    }
}

/// `phi(G)` as the largest `k` with `G` in `A_k`, scanning down from
/// `floor(4 omega / 3)`.
pub fn phi_via_ab(g: &Graph, budget: &mut Budget) -> Result<(usize, Option<ABDecomposition>)> {
    clique_sides(g)?;
    let omega = clique_number(g, budget)?;
    for k in (1..=4 * omega / 3).rev() {
        if let Some(d) = is_in_ab(g, k, budget)? {
            return Ok((k, Some(d)));
        }
    }
    if g.n() == 0 {
        return Ok((0, None));
    }
    Err(Error::Internal("no A_k membership found for a non-empty co-bipartite graph".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bcolor::b_chromatic_number;
    use crate::generators;

    fn b() -> Budget {
        Budget::unlimited()
    }

    // Construction vertex ids: a1=0 a2=1 b1=2 b2=3 c1=4 c2=5.
    fn preprop_decomposition() -> ABDecomposition {
        ABDecomposition {
            x: vec![0, 3, 4],
            y: vec![1, 2, 5],
            a1: vec![0],
            b1: vec![4],
            c1: vec![3],
            a2: vec![1],
            b2: vec![2],
            c2: vec![5],
            m_b: vec![(4, 2)],
            m_c: vec![(3, 5)],
            b: 4,
        }
    }

    fn k2_decomposition() -> ABDecomposition {
        ABDecomposition {
            x: vec![0],
            y: vec![1],
            a1: vec![0],
            a2: vec![1],
            b1: vec![],
            c1: vec![],
            b2: vec![],
            c2: vec![],
            m_b: vec![],
            m_c: vec![],
            b: 2,
        }
    }

    #[test]
    fn verify_examples() {
        assert!(verify_ab_decomposition(&Graph::complete(2), &k2_decomposition()).unwrap());
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        let d = preprop_decomposition();
        assert!(verify_ab_decomposition(&g, &d).unwrap());
        let mut bad = d.clone();
        bad.m_b = vec![(4, 5)];
        assert!(!verify_ab_decomposition(&g, &bad).unwrap());
        let mut wrong_b = d.clone();
        wrong_b.b = 5;
        assert!(!verify_ab_decomposition(&g, &wrong_b).unwrap());
    }

    #[test]
    fn verify_rejects_malformed_sets() {
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        let mut overlap = preprop_decomposition();
        overlap.a1.push(3);
        assert!(verify_ab_decomposition(&g, &overlap).is_err());
        let mut missing = preprop_decomposition();
        missing.c2.clear();
        assert!(verify_ab_decomposition(&g, &missing).is_err());
        let mut wrong_side = preprop_decomposition();
        wrong_side.a1 = vec![];
        wrong_side.a2 = vec![0, 1];
        assert!(verify_ab_decomposition(&g, &wrong_side).is_err());
    }

    #[test]
    fn membership_examples() {
        // The complement of K2 is edgeless, so both vertices land in X.
        let d = is_in_ab(&Graph::complete(2), 2, &mut b()).unwrap().unwrap();
        assert_eq!((d.a1.clone(), d.b), (vec![0, 1], 2));
        assert!(verify_ab_decomposition(&Graph::complete(2), &d).unwrap());

        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        let d = is_in_ab(&g, 4, &mut b()).unwrap().unwrap();
        assert!(verify_ab_decomposition(&g, &d).unwrap());
        assert_eq!(d.b, 4);
        assert_eq!(d.a1.len() + d.a2.len(), 2);
        assert!(is_in_ab(&g, 5, &mut b()).unwrap().is_none());
    }

    #[test]
    fn decomposition_coloring_is_b_coloring() {
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        let cert = preprop_decomposition().coloring(&g).unwrap();
        assert_eq!(cert.num_colors(), 4);
        cert.validate(&g).unwrap();
    }

    #[test]
    fn from_parts_finds_matchings() {
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        let d = ABDecomposition::from_parts(
            &g,
            vec![0, 3, 4],
            vec![1, 2, 5],
            vec![0],
            vec![4],
            vec![3],
            vec![1],
            vec![2],
            vec![5],
        )
        .unwrap()
        .unwrap();
        assert_eq!(d, preprop_decomposition());
        // b1 and c2 are adjacent: no anti-matching.
        let none = ABDecomposition::from_parts(
            &g,
            vec![0, 3, 4],
            vec![1, 2, 5],
            vec![0],
            vec![4],
            vec![3],
            vec![1],
            vec![5],
            vec![2],
        )
        .unwrap();
        assert!(none.is_none());
    }

    #[test]
    fn phi_via_characterization() {
        for n in 1..6 {
            assert_eq!(phi_via_ab(&Graph::complete(n), &mut b()).unwrap().0, n);
        }
        let (g, _, _) = generators::gen_clique_partition_extremal(2, 3).unwrap();
        assert_eq!(phi_via_ab(&g, &mut b()).unwrap().0, 4);
        let p4c = Graph::path(4).complement();
        assert_eq!(phi_via_ab(&p4c, &mut b()).unwrap().0, 2);
        assert_eq!(b_chromatic_number(&p4c, &mut b()).unwrap().0, 2);
    }

    #[test]
    fn rejects_non_cobipartite() {
        assert_eq!(is_in_ab(&Graph::empty(3), 1, &mut b()), Err(Error::NotCoBipartite));
        assert_eq!(phi_via_ab(&Graph::empty(3), &mut b()).map(|r| r.0), Err(Error::NotCoBipartite));
    }
}
