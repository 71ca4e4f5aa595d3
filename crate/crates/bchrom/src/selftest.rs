//! Built-in acceptance suites. Each suite samples from a fixed seed, compares
//! the search code with the brute-force [`oracle`](crate::oracle) or with an
//! exact claim, and reports a single pass/fail verdict.

use std::time::{Duration, Instant};

use bchrom_core::ab_family::{is_in_ab, phi_via_ab, verify_ab_decomposition};
use bchrom_core::bcolor::{b_chromatic_number, exists_b_coloring, BColoringCertificate};
use bchrom_core::generators::{gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal};
use bchrom_core::invariants::{
    biclique_cover_number, chromatic_number, clique_number, clique_partition_number, m_bound, maximum_clique,
};
use bchrom_core::{Budget, Graph};
use rand::Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::oracle;
use crate::random::{self, random_bipartite, random_cobipartite, random_graph};
use crate::report::Report;

#[derive(Debug, Clone, Serialize)]
pub struct CriterionResult {
    pub id: usize,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl std::fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let verdict = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{verdict} [{}] {} ({:.1}s): {}", self.id, self.name, self.seconds, self.detail)
    }
}

pub const SANDWICH_LIMIT: Duration = Duration::from_secs(300);
pub const COBIPARTITE_LIMIT: Duration = Duration::from_secs(600);

type Suite = fn() -> Result<String, String>;

pub const SUITES: [(&str, Suite); 7] = [
    ("sandwich chi <= phi <= m <= max degree + 1", sandwich),
    ("star-free bound and star-free extremal graphs", star_free),
    ("clique-partition bound and extremal graphs", clique_partition),
    ("co-bipartite family characterisation", cobipartite),
    ("bipartite biclique bound and extremal graphs", bipartite),
    ("brute-force oracle equivalence", oracle_equivalence),
    ("certificate JSON round trip", round_trip),
];

/// Run suite `id` (1-based).
///
/// # Panics
/// If `id` is not in `1..=7`.
pub fn run(id: usize) -> CriterionResult {
    let (name, suite) = SUITES[id - 1];
    let start = Instant::now();
    let outcome = suite();
    let elapsed = start.elapsed();
    let limit = match id {
        1 => Some(SANDWICH_LIMIT),
        4 => Some(COBIPARTITE_LIMIT),
        _ => None,
    };
    let (mut passed, mut detail) = match outcome {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    if let Some(limit) = limit.filter(|&l| elapsed > l) {
        passed = false;
        detail = format!("{detail}; exceeded the {}s limit", limit.as_secs());
    }
    CriterionResult { id, name, passed, detail, seconds: elapsed.as_secs_f64() }
}

pub fn run_all() -> Vec<CriterionResult> {
    (1..=SUITES.len()).map(run).collect()
}

fn unlimited() -> Budget {
    Budget::unlimited()
}

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn core<T>(r: bchrom_core::Result<T>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn describe(g: &Graph) -> String {
    format!("n = {}, edges = {:?}", g.n(), g.edges().collect::<Vec<_>>())
}

fn certificate_ok(g: &Graph, cert: &BColoringCertificate) -> bool {
    oracle::check_certificate(g, cert.coloring.colors(), &cert.reps)
}

/// `count` graphs `G(n, p)` with `n` in `lo..=hi` and `p` in `[0.15, 0.85]`.
fn random_graphs(seed: u64, count: usize, lo: usize, hi: usize) -> Vec<Graph> {
    let mut rng = random::rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let p = rng.gen_range(0.15..=0.85);
            random_graph(n, p, rng.gen())
        })
        .collect()
}

/// Random graphs on `lo..=hi` vertices built by `make(n1, n2, p, seed)`.
fn random_two_sided(
    seed: u64,
    count: usize,
    lo: usize,
    hi: usize,
    make: fn(usize, usize, f64, u64) -> Graph,
) -> Vec<Graph> {
    let mut rng = random::rng(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(lo..=hi);
            let n1 = rng.gen_range(1..n);
            let p = rng.gen_range(0.15..=0.85);
            make(n1, n - n1, p, rng.gen())
        })
        .collect()
}

/// Find the first failure in parallel, reporting failures in input order.
fn all_ok<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<(), String> + Sync) -> Result<(), String> {
    let errors: Vec<String> = items.par_iter().filter_map(|x| f(x).err()).collect();
    match errors.first() {
        None => Ok(()),
        Some(e) => Err(format!("{} failures; first: {e}", errors.len())),
    }
}

fn sandwich() -> Result<String, String> {
    let mut graphs: Vec<Graph> = oracle::all_graphs(5).collect();
    graphs.extend(random_graphs(0x51, 300, 6, 9));
    all_ok(&graphs, |g| {
        let b = &mut unlimited();
        let (chi, witness) = core(chromatic_number(g, b))?;
        let (phi, cert) = core(b_chromatic_number(g, b))?;
        let m = m_bound(g);
        check(oracle::is_proper(g, witness.colors()) && witness.num_colors() == chi, || {
            format!("bad chromatic witness on {}", describe(g))
        })?;
        check(certificate_ok(g, &cert) && cert.num_colors() == phi, || {
            format!("bad b-colouring certificate on {}", describe(g))
        })?;
        check(chi <= phi && phi <= m && m <= g.max_degree() + 1, || {
            format!("chi {chi}, phi {phi}, m {m}, max degree {} on {}", g.max_degree(), describe(g))
        })
    })?;
    Ok(format!("{} graphs, zero violations", graphs.len()))
}

fn star_free() -> Result<String, String> {
    let mut rng = random::rng(0x52);
    let mut graphs = Vec::new();
    let mut drawn = 0;
    while graphs.len() < 200 {
        let n = rng.gen_range(3..=9);
        let p = rng.gen_range(0.3..=0.95);
        let g = random_graph(n, p, rng.gen());
        drawn += 1;
        if g.is_k1t_free(3) != !oracle::has_induced_star(&g, 3) {
            return Err(format!("claw test disagrees with oracle on {}", describe(&g)));
        }
        if g.is_k1t_free(3) {
            graphs.push(g);
        }
    }
    all_ok(&graphs, |g| {
        let b = &mut unlimited();
        let (chi, _) = core(chromatic_number(g, b))?;
        let (phi, _) = core(b_chromatic_number(g, b))?;
        check(phi < 2 * chi, || format!("phi {phi} > 2 chi - 1 = {} on {}", 2 * chi - 1, describe(g)))
    })?;

    let mut claims = Vec::new();
    for (t, k) in [(3, 2), (3, 3), (4, 2)] {
        let (g, cert, claimed) = core(gen_k1t_extremal(t, k))?;
        let b = (t - 1) * (k - 1) + 1;
        check(claimed == b && cert.num_colors() == b && certificate_ok(&g, &cert), || {
            format!("({t},{k}): certificate does not give {b} colours")
        })?;
        // chi = k: a k-clique below, a proper k-colouring above
        let clique = core(maximum_clique(&g, &mut unlimited()))?;
        let (chi, witness) = core(chromatic_number(&g, &mut unlimited()))?;
        check(
            oracle::is_clique(&g, &clique)
                && clique.len() == k
                && oracle::omega(&g) == k
                && chi == k
                && witness.num_colors() == k
                && oracle::is_proper(&g, witness.colors()),
            || format!("({t},{k}): chromatic number {chi}, expected {k}"),
        )?;
        check(!oracle::has_induced_star(&g, t) && oracle::has_induced_star(&g, t - 1), || {
            format!("({t},{k}): not exactly K_1,{t}-free")
        })?;
        let upper = (t - 1) * (chi - 1) + 1;
        check(upper == b, || format!("({t},{k}): bound {upper} != {b}"))?;
        claims.push(format!("({t},{k}) phi = {b}"));
    }
    Ok(format!(
        "{} claw-free graphs from {drawn} draws, zero violations; {}",
        graphs.len(),
        claims.join(", ")
    ))
}

fn clique_partition() -> Result<String, String> {
    let graphs = random_graphs(0x53, 300, 1, 9);
    all_ok(&graphs, |g| {
        let b = &mut unlimited();
        let theta = core(clique_partition_number(g, b))?;
        let omega = core(clique_number(g, b))?;
        check(theta == oracle::chi(&g.complement()) && omega == oracle::omega(g), || {
            format!("theta {theta} or omega {omega} disagrees with oracle on {}", describe(g))
        })?;
        let (phi, _) = core(b_chromatic_number(g, b))?;
        let bound = if theta == 0 { 0 } else { theta * theta * omega / (2 * theta - 1) };
        check(phi <= bound, || format!("phi {phi} > {bound} on {}", describe(g)))
    })?;

    let mut claims = Vec::new();
    for (k, w) in [(2, 3), (2, 6), (3, 5)] {
        let (g, cert, claimed) = core(gen_clique_partition_extremal(k, w))?;
        let value = k * k * w / (2 * k - 1);
        check(k * k * w % (2 * k - 1) == 0 && claimed == value, || format!("({k},{w}): claim {claimed}"))?;
        check(cert.num_colors() == value && certificate_ok(&g, &cert), || {
            format!("({k},{w}): certificate does not give {value} colours")
        })?;
        check(oracle::omega(&g) == w && core(clique_number(&g, &mut unlimited()))? == w, || {
            format!("({k},{w}): clique number is not {w}")
        })?;
        // theta = k: an independent k-set below, a k-clique partition above
        let co = g.complement();
        let (theta, cover) = core(chromatic_number(&co, &mut unlimited()))?;
        check(
            theta == k
                && cover.num_colors() == k
                && oracle::is_proper(&co, cover.colors())
                && oracle::omega(&co) >= k,
            || format!("({k},{w}): clique partition number {theta}, expected {k}"),
        )?;
        claims.push(format!("({k},{w}) phi = {value}"));
    }
    Ok(format!("{} graphs, zero violations; {}", graphs.len(), claims.join(", ")))
}

fn cobipartite() -> Result<String, String> {
    let graphs = random_two_sided(0x54, 200, 2, 10, random_cobipartite);
    all_ok(&graphs, |g| {
        let b = &mut unlimited();
        let (chi, _) = core(chromatic_number(g, b))?;
        let achievable = oracle::ab_values(g);
        for k in chi..=g.max_degree() + 1 {
            let coloring = core(exists_b_coloring(g, k, b))?;
            let decomposition = core(is_in_ab(g, k, b))?;
            if let Some(c) = &coloring {
                check(certificate_ok(g, c) && c.num_colors() == k, || {
                    format!("bad {k}-certificate on {}", describe(g))
                })?;
            }
            if let Some(d) = &decomposition {
                check(d.b == k && core(verify_ab_decomposition(g, d))?, || {
                    format!("bad decomposition for b = {k} on {}", describe(g))
                })?;
                let c = core(d.coloring(g))?;
                check(certificate_ok(g, &c), || {
                    format!("decomposition colouring invalid on {}", describe(g))
                })?;
            }
            let (x, y, z) = (coloring.is_some(), decomposition.is_some(), achievable.contains(&k));
            check(x == y && y == z, || {
                format!("b = {k}: b-colouring {x}, decomposition {y}, oracle {z} on {}", describe(g))
            })?;
        }
        let (phi, _) = core(b_chromatic_number(g, b))?;
        let (via_ab, _) = core(phi_via_ab(g, b))?;
        let omega = core(clique_number(g, b))?;
        check(via_ab == phi && achievable.last() == Some(&phi), || {
            format!(
                "phi {phi}, via decomposition {via_ab}, oracle {:?} on {}",
                achievable.last(),
                describe(g)
            )
        })?;
        check(phi <= 4 * omega / 3, || format!("phi {phi} > 4 omega / 3 on {}", describe(g)))
    })?;
    Ok(format!("{} graphs, zero disagreements", graphs.len()))
}

fn bipartite() -> Result<String, String> {
    let graphs = random_two_sided(0x55, 200, 2, 12, random_bipartite);
    all_ok(&graphs, |g| {
        let b = &mut unlimited();
        let bp = g.is_bipartite().ok_or_else(|| format!("not bipartite: {}", describe(g)))?;
        let (t, cover) = core(biclique_cover_number(g, &bp, b))?;
        check(cover.validate(g, &bp).is_ok() && cover.len() == t, || {
            format!("bad biclique cover on {}", describe(g))
        })?;
        if g.n() <= 9 {
            let brute = oracle::biclique_number(g);
            check(t == brute, || format!("biclique number {t}, oracle {brute} on {}", describe(g)))?;
        }
        let (phi, _) = core(b_chromatic_number(g, b))?;
        let bound = (g.n() + 4 - t) / 2;
        check(phi <= bound, || format!("phi {phi} > {bound} on {}", describe(g)))
    })?;

    let mut claims = Vec::new();
    for p in [3, 4, 5] {
        let (g, cert, claimed) = core(gen_bipartite_extremal(p))?;
        let bp = g.is_bipartite().ok_or_else(|| format!("p = {p}: not bipartite"))?;
        let (t, _) = core(biclique_cover_number(&g, &bp, &mut unlimited()))?;
        let n = g.n();
        check(n == 3 * p - 4 && t == p - 1 && oracle::biclique_number(&g) == p - 1, || {
            format!("p = {p}: n = {n}, t = {t}")
        })?;
        check(claimed == p && cert.num_colors() == p && certificate_ok(&g, &cert), || {
            format!("p = {p}: certificate does not give {p} colours")
        })?;
        check(g.max_degree() == p - 1 && (n + 4 - t) / 2 == p, || {
            format!("p = {p}: max degree {}, bound {}", g.max_degree(), (n + 4 - t) / 2)
        })?;
        claims.push(format!("p = {p} phi = {p}"));
    }
    Ok(format!("{} graphs, zero violations; {}", graphs.len(), claims.join(", ")))
}

fn oracle_equivalence() -> Result<String, String> {
    let mut graphs: Vec<Graph> = (0..=6).flat_map(oracle::all_graphs).collect();
    let exhaustive = graphs.len();
    graphs.extend(random_graphs(0x56, 100, 7, 8));
    all_ok(&graphs, |g| {
        let (phi, _) = core(b_chromatic_number(g, &mut unlimited()))?;
        let brute = oracle::phi(g);
        check(phi == brute, || format!("phi {phi}, oracle {brute} on {}", describe(g)))
    })?;

    let mut bipartite: Vec<Graph> =
        (0..=6).flat_map(oracle::all_graphs).filter(|g| g.is_bipartite().is_some()).collect();
    let exhaustive_bipartite = bipartite.len();
    let mut rng = random::rng(0x57);
    bipartite.extend((0..200).map(|_| {
        let n1 = rng.gen_range(1..7);
        let p = rng.gen_range(0.15..=0.85);
        random_bipartite(n1, 7 - n1, p, rng.gen())
    }));
    all_ok(&bipartite, |g| {
        let bp = g.is_bipartite().expect("bipartite by construction");
        let (t, _) = core(biclique_cover_number(g, &bp, &mut unlimited()))?;
        let brute = oracle::biclique_number(g);
        check(t == brute, || format!("biclique number {t}, oracle {brute} on {}", describe(g)))
    })?;
    Ok(format!(
        "phi on {exhaustive} exhaustive + 100 sampled graphs; biclique number on \
         {exhaustive_bipartite} exhaustive + 200 sampled bipartite graphs"
    ))
}

/// Reports for a fixed corpus: every extremal instance, sampled graphs with
/// their optimal certificate, and sampled co-bipartite graphs with their
/// decomposition.
pub fn certificate_corpus(seed: u64) -> Result<Vec<Report>, String> {
    let mut reports = Vec::new();
    let extremal = [
        gen_k1t_extremal(3, 2),
        gen_k1t_extremal(3, 3),
        gen_k1t_extremal(4, 2),
        gen_clique_partition_extremal(2, 3),
        gen_clique_partition_extremal(2, 6),
        gen_clique_partition_extremal(3, 5),
        gen_bipartite_extremal(3),
        gen_bipartite_extremal(4),
        gen_bipartite_extremal(5),
    ];
    for e in extremal {
        let (g, cert, _) = core(e)?;
        let mut r = Report::new(&g, Some(seed), None);
        r.add_coloring(&cert);
        reports.push(r);
    }
    for g in random_graphs(seed, 30, 1, 9) {
        let b = &mut unlimited();
        let bounds = core(bchrom_core::bounds::bounds_report(&g, true, b))?;
        let (_, cert) = core(b_chromatic_number(&g, b))?;
        let mut r = Report::new(&g, Some(seed), None);
        r.add_bounds(&bounds);
        r.add_coloring(&cert);
        reports.push(r);
    }
    for g in random_two_sided(seed ^ 0xC0B1, 30, 2, 10, random_cobipartite) {
        let (phi, d) = core(phi_via_ab(&g, &mut unlimited()))?;
        let d = d.ok_or_else(|| format!("no decomposition for phi = {phi} on {}", describe(&g)))?;
        let mut r = Report::new(&g, Some(seed), None);
        r.push(crate::report::ResultEntry::value("phi", phi));
        r.add_coloring(&core(d.coloring(&g))?);
        r.add_decomposition(&d);
        reports.push(r);
    }
    Ok(reports)
}

fn round_trip() -> Result<String, String> {
    let first = certificate_corpus(0x58)?;
    let second = certificate_corpus(0x58)?;
    let mut decompositions = 0;
    for (a, b) in first.iter().zip(&second) {
        let text = a.to_json();
        check(text == b.to_json(), || "reports differ between two runs".into())?;
        let parsed = Report::from_json(&text).map_err(|e| e.to_string())?;
        parsed.revalidate().map_err(|e| format!("revalidation failed: {e}"))?;
        check(parsed.to_json() == text, || "re-serialised report differs".into())?;
        decompositions += usize::from(parsed.certificates.contains_key(crate::report::AB_DECOMPOSITION));

        // copying a colour across an edge must be rejected
        if let Some(&[u, v]) = parsed.graph.edges.first() {
            let mut bad = parsed.clone();
            if let Some(serde_json::Value::Array(colors)) =
                bad.certificates.get_mut(crate::report::B_COLORING).and_then(|c| c.get_mut("colors"))
            {
                colors[v] = colors[u].clone();
                check(bad.revalidate().is_err(), || "corrupted certificate accepted".into())?;
            }
        }
    }
    Ok(format!(
        "{} reports ({decompositions} with decompositions) revalidated and byte-identical",
        first.len()
    ))
}
