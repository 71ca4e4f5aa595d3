//! Theorem fuzzing: sample a random family, compute exact `phi`, and check
//! it against every applicable bound.

use bchrom_core::ab_family::phi_via_ab;
use bchrom_core::bounds::{bounds_report, BoundsReport};
use bchrom_core::invariants::m_bound;
use bchrom_core::{Budget, Graph};
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::random::{self, random_bipartite, random_cobipartite, random_graph, random_tree};
use crate::report::GraphJson;
use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    General,
    Bipartite,
    Cobipartite,
    K1tFree,
    Tree,
}

impl Family {
    /// Largest vertex count a campaign may request.
    pub fn max_vertices(self) -> usize {
        match self {
            Family::General | Family::K1tFree => 10,
            Family::Bipartite => 14,
            Family::Cobipartite => 12,
            Family::Tree => 16,
        }
    }
}

fn default_t() -> usize {
    3
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FuzzConfig {
    pub family: Family,
    pub n_min: usize,
    pub n_max: usize,
    pub edge_probability: f64,
    pub samples: usize,
    pub seed: u64,
    /// Node budget per graph; `None` uses the caller's default.
    #[serde(default)]
    pub budget: Option<u64>,
    /// Star size for the `k1t-free` family.
    #[serde(default = "default_t")]
    pub t: usize,
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<(), Error> {
        let cap = self.family.max_vertices();
        let bad = |m: String| Err(Error::Invalid(m));
        if self.n_min < 1 || self.n_min > self.n_max {
            return bad(format!("need 1 <= n_min <= n_max, got {}..={}", self.n_min, self.n_max));
        }
        if self.n_max > cap {
            return bad(format!("n_max {} exceeds the {:?} cap of {cap}", self.n_max, self.family));
        }
        if !(0.0..=1.0).contains(&self.edge_probability) {
            return bad(format!("edge probability {} outside [0, 1]", self.edge_probability));
        }
        if self.family == Family::K1tFree && self.t < 3 {
            return bad(format!("t = {} must be at least 3", self.t));
        }
        Ok(())
    }

    /// Seed of sample `i`, derived from the campaign seed alone.
    pub fn sample_seed(&self, i: usize) -> u64 {
        // splitmix64 step
        let mut z = self.seed.wrapping_add((i as u64 + 1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Sample `i`, or `None` when rejection sampling found no star-free graph.
    pub fn sample(&self, i: usize) -> Option<Graph> {
        let seed = self.sample_seed(i);
        let mut rng = random::rng(seed);
        let n = rng.gen_range(self.n_min..=self.n_max);
        let p = self.edge_probability;
        let graph_seed = rng.gen();
        Some(match self.family {
            Family::General => random_graph(n, p, graph_seed),
            Family::Tree => random_tree(n, graph_seed),
            Family::Bipartite | Family::Cobipartite => {
                let n1 = if n == 1 { 1 } else { rng.gen_range(1..n) };
                if self.family == Family::Bipartite {
                    random_bipartite(n1, n - n1, p, graph_seed)
                } else {
                    random_cobipartite(n1, n - n1, p, graph_seed)
                }
            }
            Family::K1tFree => random::random_k1t_free(n, p, self.t, graph_seed, 10_000)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Outcome {
    Passed(BoundsReport),
    /// At least one bound or family property failed; the names are listed.
    Violation(BoundsReport, Vec<String>),
    Skipped(String),
}

/// Exact `phi` and every bound. A budget overrun is a skip, never a pass.
pub fn check_theorems(g: &Graph, budget: Option<u64>) -> Result<Outcome, Error> {
    let mut b = budget.map_or_else(Budget::unlimited, Budget::nodes);
    match bounds_report(g, true, &mut b) {
        Ok(r) if r.violations.is_empty() => Ok(Outcome::Passed(r)),
        Ok(r) => {
            let v = r.violations.clone();
            Ok(Outcome::Violation(r, v))
        }
        Err(e @ (bchrom_core::Error::BudgetExceeded { .. } | bchrom_core::Error::TooLarge { .. })) => {
            Ok(Outcome::Skipped(e.to_string()))
        }
        Err(e) => Err(e.into()),
    }
}

/// [`check_theorems`] plus the checks specific to a family.
pub fn check_family(g: &Graph, family: Family, budget: Option<u64>) -> Result<Outcome, Error> {
    let outcome = check_theorems(g, budget)?;
    let (report, mut violations) = match outcome {
        Outcome::Passed(r) => (r, Vec::new()),
        Outcome::Violation(r, v) => (r, v),
        skipped => return Ok(skipped),
    };
    let phi = report.exact_phi.expect("exact phi requested");
    match family {
        Family::Tree => {
            let m = m_bound(g);
            if phi + 1 < m || phi > m {
                violations.push("tree_within_one_of_m".into());
            }
        }
        Family::Cobipartite => {
            let mut b = budget.map_or_else(Budget::unlimited, Budget::nodes);
            match phi_via_ab(g, &mut b) {
                Ok((k, _)) if k == phi => {}
                Ok(_) => violations.push("ab_characterization".into()),
                Err(bchrom_core::Error::BudgetExceeded { limit }) => {
                    return Ok(Outcome::Skipped(format!("A_b scan exceeded {limit} nodes")))
                }
                Err(e) => return Err(e.into()),
            }
        }
        Family::K1tFree | Family::General | Family::Bipartite => {}
    }
    Ok(if violations.is_empty() { Outcome::Passed(report) } else { Outcome::Violation(report, violations) })
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Finding {
    pub index: usize,
    pub seed: u64,
    pub graph: GraphJson,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CampaignSummary {
    pub config: FuzzConfig,
    pub passed: usize,
    pub skipped: Vec<Finding>,
    pub violations: Vec<Finding>,
}

impl CampaignSummary {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Run a campaign in parallel; results are merged in sample order.
pub fn run_campaign(config: &FuzzConfig, default_budget: Option<u64>) -> Result<CampaignSummary, Error> {
    config.validate()?;
    let budget = config.budget.or(default_budget);
    let outcomes: Vec<(usize, Option<Graph>, Result<Outcome, Error>)> = (0..config.samples)
        .into_par_iter()
        .map(|i| match config.sample(i) {
            Some(g) => {
                let o = check_family(&g, config.family, budget);
                (i, Some(g), o)
            }
            None => (i, None, Ok(Outcome::Skipped("no star-free sample found".into()))),
        })
        .collect();

    let mut summary =
        CampaignSummary { config: config.clone(), passed: 0, skipped: Vec::new(), violations: Vec::new() };
    for (i, g, outcome) in outcomes {
        let finding = |detail: String| Finding {
            index: i,
            seed: config.sample_seed(i),
            graph: g.as_ref().map_or(GraphJson { n: 0, edges: Vec::new() }, GraphJson::from),
            detail,
        };
        match outcome? {
            Outcome::Passed(_) => summary.passed += 1,
            Outcome::Skipped(why) => summary.skipped.push(finding(why)),
            Outcome::Violation(r, names) => summary.violations.push(finding(format!(
                "phi = {:?} exceeds {}",
                r.exact_phi,
                names.join(", ")
            ))),
        }
    }
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn config(family: Family) -> FuzzConfig {
        FuzzConfig {
            family,
            n_min: 3,
            n_max: 7,
            edge_probability: 0.5,
            samples: 20,
            seed: 11,
            budget: None,
            t: 3,
        }
    }

    #[test]
    fn c5_passes() {
        let o = check_theorems(&Graph::cycle(5), None).unwrap();
        assert!(matches!(o, Outcome::Passed(r) if r.exact_phi == Some(3)));
    }

    #[test]
    fn small_graphs_have_no_violations() {
        for n in 0..=5 {
            for g in crate::oracle::all_graphs(n) {
                let o = check_theorems(&g, None).unwrap();
                assert!(matches!(o, Outcome::Passed(_)), "{:?}", GraphJson::from(&g));
            }
        }
    }

    #[test]
    fn smallest_clique_partition_extremal_is_tight_twice() {
        let (g, _, _) = bchrom_core::generators::gen_clique_partition_extremal(2, 3).unwrap();
        let Outcome::Passed(r) = check_theorems(&g, None).unwrap() else { panic!("not passed") };
        assert_eq!(r.exact_phi, Some(4));
        assert_eq!(r.value(bchrom_core::bounds::CLIQUE_PARTITION), Some(4));
        assert_eq!(r.value(bchrom_core::bounds::COBIPARTITE), Some(4));
    }

    #[test]
    fn tiny_budget_skips() {
        let o = check_theorems(&Graph::petersen(), Some(5)).unwrap();
        assert!(matches!(o, Outcome::Skipped(_)));
    }

    #[test]
    fn campaigns_are_clean_and_deterministic() {
        for family in [Family::General, Family::Bipartite, Family::Cobipartite, Family::K1tFree, Family::Tree]
        {
            let c = config(family);
            let a = run_campaign(&c, None).unwrap();
            assert!(a.is_clean(), "{family:?}: {:?}", a.violations);
            assert_eq!(a.passed + a.skipped.len(), c.samples);
            let b = run_campaign(&c, None).unwrap();
            assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
        }
    }

    #[test]
    fn samples_respect_family() {
        let c = config(Family::Bipartite);
        for i in 0..20 {
            let g = c.sample(i).unwrap();
            assert!((3..=7).contains(&g.n()));
            assert!(g.is_bipartite().is_some());
        }
    }

    #[test]
    fn config_validation() {
        let mut c = config(Family::General);
        c.n_max = 50;
        assert!(c.validate().is_err());
        let mut c = config(Family::General);
        c.edge_probability = 2.0;
        assert!(c.validate().is_err());
        let mut c = config(Family::K1tFree);
        c.t = 2;
        assert!(c.validate().is_err());
        let text =
            r#"{"family":"cobipartite","n_min":2,"n_max":6,"edge_probability":0.4,"samples":5,"seed":1}"#;
        let c: FuzzConfig = serde_json::from_str(text).unwrap();
        assert_eq!((c.family, c.t, c.budget), (Family::Cobipartite, 3, None));
    }
}
