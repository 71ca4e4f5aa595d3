//! Upper bounds on the b-chromatic number and their hypotheses.
//!
//! All real-valued bounds are floored, since `phi` is an integer.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::bcolor::b_chromatic_number;
use crate::invariants::{
    biclique_cover_number, chromatic_number, clique_number, clique_partition_number, m_bound,
};
use crate::{Budget, Error, Graph, Result};

/// `(t-1)(chi-1)+1` when the graph has no induced `K_{1,t}`.
pub fn bound_k1t(g: &Graph, t: usize, budget: &mut Budget) -> Result<Option<usize>> {
    if t < 3 {
        return Err(Error::InvalidArgument(format!(
            "star bound needs t >= 3 (t = {t}); K_{{1,2}}-free graphs are disjoint cliques"
        )));
    }
    if !g.is_k1t_free(t) {
        return Ok(None);
    }
    let (chi, _) = chromatic_number(g, budget)?;
    Ok(Some(k1t_value(t, chi)))
}

fn k1t_value(t: usize, chi: usize) -> usize {
    (t - 1) * chi.saturating_sub(1) + 1
}

/// `floor(k^2 w / (2k - 1))` for a clique partition number `k` and clique
/// number `w`; 0 when `k = 0`.
pub fn clique_partition_value(k: usize, omega: usize) -> usize {
    if k == 0 {
        return 0;
    }
    k * k * omega / (2 * k - 1)
}

/// Clique-partition bound; applies to every graph.
pub fn bound_clique_partition(g: &Graph, budget: &mut Budget) -> Result<usize> {
    let k = clique_partition_number(g, budget)?;
    let omega = clique_number(g, budget)?;
    Ok(clique_partition_value(k, omega))
}

/// `floor(4w/3)` when the complement is bipartite.
pub fn bound_cobipartite(g: &Graph, budget: &mut Budget) -> Result<Option<usize>> {
    if g.complement().is_bipartite().is_none() {
        return Ok(None);
    }
    Ok(Some(4 * clique_number(g, budget)? / 3))
}

/// `floor((n - t + 4) / 2)` with `t` the biclique number, for bipartite graphs.
pub fn bound_bipartite(g: &Graph, budget: &mut Budget) -> Result<Option<usize>> {
    let Some(bp) = g.is_bipartite() else {
        return Ok(None);
    };
    let (t, _) = biclique_cover_number(g, &bp, budget)?;
    Ok(Some(bipartite_value(g.n(), t)))
}

pub fn bipartite_value(n: usize, t: usize) -> usize {
    (n + 4 - t) / 2
}

/// One evaluated bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundRecord {
    pub name: String,
    pub applicable: bool,
    pub hypothesis: String,
    pub value: Option<usize>,
}

/// Exact invariants gathered while evaluating the bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invariants {
    pub n: usize,
    pub edges: usize,
    pub max_degree: usize,
    pub chi: usize,
    pub omega: usize,
    pub theta: usize,
    pub m: usize,
    pub biclique_number: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundsReport {
    pub invariants: Invariants,
    pub bounds: Vec<BoundRecord>,
    pub exact_phi: Option<usize>,
    /// Names of bounds below the exact value. Always empty unless a bound is wrong.
    pub violations: Vec<String>,
}

impl BoundsReport {
    pub fn bound(&self, name: &str) -> Option<&BoundRecord> {
        self.bounds.iter().find(|b| b.name == name)
    }

    pub fn value(&self, name: &str) -> Option<usize> {
        self.bound(name).and_then(|b| b.value)
    }

    /// Smallest applicable bound.
    pub fn tightest(&self) -> Option<&BoundRecord> {
        self.bounds.iter().filter(|b| b.value.is_some()).min_by_key(|b| b.value)
    }
}

pub const K1T: [&str; 3] = ["k1t_free_t3", "k1t_free_t4", "k1t_free_t5"];
pub const CLAW_FREE: &str = "claw_free_2chi_minus_1";
pub const CLIQUE_PARTITION: &str = "clique_partition";
pub const COBIPARTITE: &str = "cobipartite";
pub const BIPARTITE: &str = "bipartite_biclique";
pub const M_BOUND: &str = "m_degree";
pub const DELTA_PLUS_ONE: &str = "max_degree_plus_one";

fn record(name: &str, value: Option<usize>, hypothesis: String) -> BoundRecord {
    BoundRecord { name: name.into(), applicable: value.is_some(), hypothesis, value }
}

/// Evaluate every bound; with `compute_exact`, also compute `phi` and list
/// every bound it exceeds.
pub fn bounds_report(g: &Graph, compute_exact: bool, budget: &mut Budget) -> Result<BoundsReport> {
    let n = g.n();
    let (chi, _) = chromatic_number(g, budget)?;
    let omega = clique_number(g, budget)?;
    let theta = clique_partition_number(g, budget)?;
    let m = m_bound(g);
    let max_degree = g.max_degree();
    let bipartition = g.is_bipartite();
    let biclique_number = match &bipartition {
        Some(bp) => Some(biclique_cover_number(g, bp, budget)?.0),
        None => None,
    };
    let cobipartite = g.complement().is_bipartite().is_some();

    let mut bounds = Vec::new();
    for (i, name) in K1T.iter().enumerate() {
        let t = i + 3;
        let free = g.is_k1t_free(t);
        bounds.push(record(
            name,
            free.then(|| k1t_value(t, chi)),
            format!("K_{{1,{t}}}-free: {free}; chi = {chi}"),
        ));
    }
    let claw_free = g.is_k1t_free(3);
    bounds.push(record(
        CLAW_FREE,
        claw_free.then(|| (2 * chi).saturating_sub(1)),
        format!("claw-free: {claw_free}; chi = {chi}"),
    ));
    bounds.push(record(
        CLIQUE_PARTITION,
        Some(clique_partition_value(theta, omega)),
        format!("theta = {theta}, omega = {omega}"),
    ));
    bounds.push(record(
        COBIPARTITE,
        cobipartite.then_some(4 * omega / 3),
        format!("complement bipartite: {cobipartite}; omega = {omega}"),
    ));
    bounds.push(record(
        BIPARTITE,
        biclique_number.map(|t| bipartite_value(n, t)),
        match biclique_number {
            Some(t) => format!("bipartite; n = {n}, biclique number t = {t}"),
            None => "not bipartite".into(),
        },
    ));
    bounds.push(record(M_BOUND, Some(m), format!("m(G) = {m}")));
    bounds.push(record(
        DELTA_PLUS_ONE,
        Some(if n == 0 { 0 } else { max_degree + 1 }),
        format!("max degree = {max_degree}"),
    ));

    let exact_phi = if compute_exact { Some(b_chromatic_number(g, budget)?.0) } else { None };
    let violations = match exact_phi {
        Some(phi) => {
            bounds.iter().filter(|b| b.value.is_some_and(|v| phi > v)).map(|b| b.name.clone()).collect()
        }
        None => Vec::new(),
    };

    Ok(BoundsReport {
        invariants: Invariants {
            n,
            edges: g.edge_count(),
            max_degree,
            chi,
            omega,
            theta,
            m,
            biclique_number,
        },
        bounds,
        exact_phi,
        violations,
    })
}
