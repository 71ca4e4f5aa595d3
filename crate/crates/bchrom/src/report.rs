//! JSON report schema.
//!
//! ```json
//! { "graph": { "n": 5, "edges": [[0, 1], ...] },
//!   "results": [ { "name": "phi", "value": 3 }, ... ],
//!   "certificates": { "b_coloring": { "colors": [...], "representatives": [...] } },
//!   "meta": { "seed": null, "budget": 50000000, "versions": { "bchrom": "0.1.0" } } }
//! ```
//!
//! Maps are ordered and no timestamps are written, so identical inputs give
//! byte-identical reports.

use std::collections::BTreeMap;

use bchrom_core::ab_family::{verify_ab_decomposition, ABDecomposition};
use bchrom_core::bcolor::{BColoringCertificate, Coloring};
use bchrom_core::bounds::BoundsReport;
use bchrom_core::Graph;
use serde::{Deserialize, Serialize};

use crate::Error;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }
}

impl GraphJson {
    pub fn to_graph(&self) -> Result<Graph, Error> {
        Ok(Graph::from_edges(self.n, self.edges.iter().map(|&[u, v]| (u, v)))?)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateJson {
    pub colors: Vec<usize>,
    pub representatives: Vec<usize>,
}

impl From<&BColoringCertificate> for CertificateJson {
    fn from(c: &BColoringCertificate) -> Self {
        CertificateJson { colors: c.coloring.colors().to_vec(), representatives: c.reps.clone() }
    }
}

impl CertificateJson {
    /// Rebuild and revalidate against `g`.
    pub fn to_certificate(&self, g: &Graph) -> Result<BColoringCertificate, Error> {
        let cert = BColoringCertificate {
            coloring: Coloring::new(self.colors.clone())?,
            reps: self.representatives.clone(),
        };
        cert.validate(g)?;
        Ok(cert)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DecompositionJson {
    pub b: usize,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
    pub a1: Vec<usize>,
    pub b1: Vec<usize>,
    pub c1: Vec<usize>,
    pub a2: Vec<usize>,
    pub b2: Vec<usize>,
    pub c2: Vec<usize>,
    pub m_b: Vec<[usize; 2]>,
    pub m_c: Vec<[usize; 2]>,
}

impl From<&ABDecomposition> for DecompositionJson {
    fn from(d: &ABDecomposition) -> Self {
        let pairs = |m: &[(usize, usize)]| m.iter().map(|&(u, v)| [u, v]).collect();
        DecompositionJson {
            b: d.b,
            x: d.x.clone(),
            y: d.y.clone(),
            a1: d.a1.clone(),
            b1: d.b1.clone(),
            c1: d.c1.clone(),
            a2: d.a2.clone(),
            b2: d.b2.clone(),
            c2: d.c2.clone(),
            m_b: pairs(&d.m_b),
            m_c: pairs(&d.m_c),
        }
    }
}

impl DecompositionJson {
    /// Rebuild and verify against `g`.
    pub fn to_decomposition(&self, g: &Graph) -> Result<ABDecomposition, Error> {
        let pairs = |m: &[[usize; 2]]| m.iter().map(|&[u, v]| (u, v)).collect();
        let d = ABDecomposition {
            x: self.x.clone(),
            y: self.y.clone(),
            a1: self.a1.clone(),
            b1: self.b1.clone(),
            c1: self.c1.clone(),
            a2: self.a2.clone(),
            b2: self.b2.clone(),
            c2: self.c2.clone(),
            m_b: pairs(&self.m_b),
            m_c: pairs(&self.m_c),
            b: self.b,
        };
        if !verify_ab_decomposition(g, &d)? {
            return Err(Error::Invalid("decomposition does not satisfy the family properties".into()));
        }
        Ok(d)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResultEntry {
    pub name: String,
    pub value: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub applicable: Option<bool>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl ResultEntry {
    pub fn value(name: &str, value: usize) -> Self {
        ResultEntry { name: name.into(), value: Some(value), applicable: None, detail: None }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Meta {
    pub seed: Option<u64>,
    pub budget: Option<u64>,
    pub versions: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub graph: GraphJson,
    pub results: Vec<ResultEntry>,
    pub certificates: BTreeMap<String, serde_json::Value>,
    pub meta: Meta,
}

pub const B_COLORING: &str = "b_coloring";
pub const AB_DECOMPOSITION: &str = "ab_decomposition";

impl Report {
    pub fn new(g: &Graph, seed: Option<u64>, budget: Option<u64>) -> Self {
        let versions = BTreeMap::from([("bchrom".to_string(), env!("CARGO_PKG_VERSION").to_string())]);
        Report {
            graph: g.into(),
            results: Vec::new(),
            certificates: BTreeMap::new(),
            meta: Meta { seed, budget, versions },
        }
    }

    pub fn push(&mut self, entry: ResultEntry) {
        self.results.push(entry);
    }

    pub fn result(&self, name: &str) -> Option<&ResultEntry> {
        self.results.iter().find(|r| r.name == name)
    }

    pub fn add_coloring(&mut self, cert: &BColoringCertificate) {
        let v = serde_json::to_value(CertificateJson::from(cert)).expect("serializable");
        self.certificates.insert(B_COLORING.into(), v);
    }

    pub fn add_decomposition(&mut self, d: &ABDecomposition) {
        let v = serde_json::to_value(DecompositionJson::from(d)).expect("serializable");
        self.certificates.insert(AB_DECOMPOSITION.into(), v);
    }

    /// Invariants, every bound, the exact value and the violation list.
    pub fn add_bounds(&mut self, r: &BoundsReport) {
        let inv = &r.invariants;
        for (name, v) in [
            ("n", Some(inv.n)),
            ("edges", Some(inv.edges)),
            ("max_degree", Some(inv.max_degree)),
            ("chi", Some(inv.chi)),
            ("omega", Some(inv.omega)),
            ("theta", Some(inv.theta)),
            ("m", Some(inv.m)),
            ("biclique_number", inv.biclique_number),
        ] {
            self.push(ResultEntry { name: name.into(), value: v, applicable: None, detail: None });
        }
        for b in &r.bounds {
            self.push(ResultEntry {
                name: format!("bound.{}", b.name),
                value: b.value,
                applicable: Some(b.applicable),
                detail: Some(b.hypothesis.clone()),
            });
        }
        if let Some(phi) = r.exact_phi {
            self.push(ResultEntry::value("phi", phi));
            self.push(ResultEntry {
                name: "violations".into(),
                value: Some(r.violations.len()),
                applicable: None,
                detail: (!r.violations.is_empty()).then(|| r.violations.join(",")),
            });
        }
    }

    /// Decode the stored certificates and revalidate them against the
    /// stored graph.
    pub fn revalidate(&self) -> Result<(), Error> {
        let g = self.graph.to_graph()?;
        if let Some(v) = self.certificates.get(B_COLORING) {
            let c: CertificateJson = serde_json::from_value(v.clone())?;
            c.to_certificate(&g)?;
        }
        if let Some(v) = self.certificates.get(AB_DECOMPOSITION) {
            let d: DecompositionJson = serde_json::from_value(v.clone())?;
            d.to_decomposition(&g)?;
        }
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, Error> {
        Ok(serde_json::from_str(text)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use bchrom_core::ab_family::phi_via_ab;
    use bchrom_core::bcolor::b_chromatic_number;
    use bchrom_core::generators::gen_clique_partition_extremal;
    use bchrom_core::Budget;

    #[test]
    fn certificate_roundtrip_revalidates() {
        let (g, _, _) = gen_clique_partition_extremal(2, 3).unwrap();
        let (phi, cert) = b_chromatic_number(&g, &mut Budget::unlimited()).unwrap();
        let (_, d) = phi_via_ab(&g, &mut Budget::unlimited()).unwrap();
        let mut r = Report::new(&g, Some(1), None);
        r.push(ResultEntry::value("phi", phi));
        r.add_coloring(&cert);
        r.add_decomposition(&d.unwrap());
        let text = r.to_json();
        let back = Report::from_json(&text).unwrap();
        assert_eq!(back, r);
        back.revalidate().unwrap();
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn tampered_certificate_fails() {
        let g = Graph::complete(3);
        let cj = CertificateJson { colors: vec![0, 1, 1], representatives: vec![0, 1] };
        assert!(cj.to_certificate(&g).is_err());
        let gj = GraphJson { n: 2, edges: vec![[0, 2]] };
        assert!(gj.to_graph().is_err());
    }
}
