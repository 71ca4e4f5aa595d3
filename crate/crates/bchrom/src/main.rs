use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bchrom::dimacs::{parse_dimacs, write_dimacs};
use bchrom::fuzz::{run_campaign, FuzzConfig};
use bchrom::report::{Report, ResultEntry};
use bchrom::{selftest, Error};
use bchrom_core::ab_family::{is_in_ab, phi_via_ab, ABDecomposition};
use bchrom_core::bcolor::{b_chromatic_number, BColoringCertificate};
use bchrom_core::bounds::bounds_report;
use bchrom_core::generators::{gen_bipartite_extremal, gen_clique_partition_extremal, gen_k1t_extremal};
use bchrom_core::invariants::m_bound;
use bchrom_core::{Budget, Graph};
use clap::{Args, Parser, Subcommand};

#[derive(Parser)]
#[command(name = "bchrom", version, about = "Exact b-chromatic numbers with certificates")]
struct Cli {
    /// Write a machine-readable JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Search budget in nodes (default: $BCHROM_BUDGET or 50000000).
    #[arg(long, global = true, value_name = "NODES")]
    budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exact b-chromatic number with a certificate.
    Phi {
        /// DIMACS file, or `-` for standard input.
        #[arg(default_value = "-")]
        file: String,
    },
    /// Evaluate every upper bound.
    Bounds {
        #[arg(default_value = "-")]
        file: String,
        /// Also compute the exact value and report violated bounds.
        #[arg(long)]
        exact: bool,
    },
    /// Decide membership of a co-bipartite graph in the six-part family.
    CertifyAb(CertifyAb),
    /// Write an extremal graph in DIMACS format with a certificate sidecar.
    Generate {
        #[command(subcommand)]
        family: Family,
        /// Output file; the certificate goes to `<FILE>.json`.
        #[arg(short, long, global = true)]
        output: Option<PathBuf>,
    },
    /// Run a fuzzing campaign described by a JSON config.
    Fuzz {
        #[arg(long)]
        config: PathBuf,
    },
    /// Revalidate the certificates stored in a JSON report.
    Verify { report: PathBuf },
    /// Run the built-in acceptance suites.
    Selftest,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct Target {
    /// Number of colours to certify.
    #[arg(long = "b")]
    b: Option<usize>,
    /// Find the largest certified value.
    #[arg(long)]
    max: bool,
}

#[derive(Args)]
struct CertifyAb {
    #[arg(default_value = "-")]
    file: String,
    #[command(flatten)]
    target: Target,
}

#[derive(Subcommand)]
enum Family {
    /// Star-free graph with chromatic number K.
    K1t { t: usize, k: usize },
    /// Clique-partition extremal graph; W must be a multiple of 2K-1.
    Cliquepart { k: usize, w: usize },
    /// Bipartite extremal graph on 3P-4 vertices.
    Bipartite { p: usize },
}

/// Exit status 1 carries a message; status 2 is for bad input.
enum Failure {
    Check(String),
    Input(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse(_) | Error::Io(_) | Error::Json(_) => Failure::Input(e.to_string()),
            Error::Core(
                bchrom_core::Error::NotCoBipartite
                | bchrom_core::Error::TooLarge { .. }
                | bchrom_core::Error::InvalidArgument(_),
            ) => Failure::Input(e.to_string()),
            _ => Failure::Check(e.to_string()),
        }
    }
}

impl From<bchrom_core::Error> for Failure {
    fn from(e: bchrom_core::Error) -> Self {
        Error::from(e).into()
    }
}

fn read_graph(file: &str) -> Result<Graph, Error> {
    let text = if file == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s)?;
        s
    } else {
        std::fs::read_to_string(file).map_err(|e| std::io::Error::new(e.kind(), format!("{file}: {e}")))?
    };
    Ok(parse_dimacs(&text)?)
}

fn write_file(path: &Path, text: &str) -> Result<(), Error> {
    std::fs::write(path, text)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())).into())
}

fn print_certificate(cert: &BColoringCertificate) {
    let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    println!("colors: {}", join(cert.coloring.colors()));
    println!("representatives: {}", join(&cert.reps));
}

fn print_decomposition(d: &ABDecomposition) {
    for (name, part) in
        [("A1", &d.a1), ("B1", &d.b1), ("C1", &d.c1), ("A2", &d.a2), ("B2", &d.b2), ("C2", &d.c2)]
    {
        println!("{name}: {part:?}");
    }
    println!("B anti-matching: {:?}", d.m_b);
    println!("C anti-matching: {:?}", d.m_c);
}

fn run(cli: Cli) -> Result<(), Failure> {
    let budget_nodes = cli.budget.unwrap_or_else(bchrom::default_budget);
    let budget = &mut Budget::nodes(budget_nodes);
    let mut report: Option<Report> = None;
    let mut verdict = Ok(());

    match cli.command {
        Command::Phi { file } => {
            let g = read_graph(&file)?;
            let (phi, cert) = b_chromatic_number(&g, budget)?;
            println!("phi = {phi}");
            print_certificate(&cert);
            let mut r = Report::new(&g, None, Some(budget_nodes));
            r.push(ResultEntry::value("phi", phi));
            r.push(ResultEntry::value("m", m_bound(&g)));
            r.add_coloring(&cert);
            report = Some(r);
        }
        Command::Bounds { file, exact } => {
            let g = read_graph(&file)?;
            let b = bounds_report(&g, exact, budget)?;
            let inv = &b.invariants;
            println!(
                "n = {}, edges = {}, max degree = {}, chi = {}, omega = {}, theta = {}, m = {}",
                inv.n, inv.edges, inv.max_degree, inv.chi, inv.omega, inv.theta, inv.m
            );
            if let Some(t) = inv.biclique_number {
                println!("biclique number = {t}");
            }
            for rec in &b.bounds {
                match rec.value {
                    Some(v) => println!("{:<24} {v:>4}   ({})", rec.name, rec.hypothesis),
                    None => println!("{:<24} {:>4}   ({})", rec.name, "-", rec.hypothesis),
                }
            }
            if let Some(phi) = b.exact_phi {
                println!("phi = {phi}");
                if !b.violations.is_empty() {
                    verdict = Err(Failure::Check(format!("violated: {}", b.violations.join(", "))));
                }
            }
            let mut r = Report::new(&g, None, Some(budget_nodes));
            r.add_bounds(&b);
            report = Some(r);
        }
        Command::CertifyAb(CertifyAb { file, target }) => {
            let g = read_graph(&file)?;
            let (b, d) = match target.b {
                Some(b) => (b, is_in_ab(&g, b, budget)?),
                None => phi_via_ab(&g, budget)?,
            };
            let mut r = Report::new(&g, None, Some(budget_nodes));
            match &d {
                Some(d) => {
                    if target.max {
                        println!("phi = {b}");
                    }
                    println!("in A_{b}: yes");
                    print_decomposition(d);
                    r.add_coloring(&d.coloring(&g)?);
                    r.add_decomposition(d);
                }
                None => println!("in A_{b}: no"),
            }
            r.push(ResultEntry {
                name: if target.max { "phi".into() } else { "in_ab".into() },
                value: Some(if target.max { b } else { usize::from(d.is_some()) }),
                applicable: None,
                detail: Some(format!("b = {b}")),
            });
            report = Some(r);
        }
        Command::Generate { family, output } => {
            let ((g, cert, phi), label) = match family {
                Family::K1t { t, k } => (gen_k1t_extremal(t, k)?, format!("k1t t={t} k={k}")),
                Family::Cliquepart { k, w } => {
                    (gen_clique_partition_extremal(k, w)?, format!("cliquepart k={k} w={w}"))
                }
                Family::Bipartite { p } => (gen_bipartite_extremal(p)?, format!("bipartite p={p}")),
            };
            let dimacs = write_dimacs(&g, &format!("bchrom generate {label}\nphi = {phi}"));
            let mut r = Report::new(&g, None, None);
            r.push(ResultEntry::value("phi", phi));
            r.add_coloring(&cert);
            match output {
                Some(path) => {
                    write_file(&path, &dimacs)?;
                    let mut sidecar = path.into_os_string();
                    sidecar.push(".json");
                    write_file(Path::new(&sidecar), &r.to_json())?;
                    eprintln!("phi = {phi}; wrote {} vertices", g.n());
                }
                None => print!("{dimacs}"),
            }
            report = Some(r);
        }
        Command::Fuzz { config } => {
            let text = std::fs::read_to_string(&config)
                .map_err(|e| Failure::Input(format!("{}: {e}", config.display())))?;
            let config: FuzzConfig =
                serde_json::from_str(&text).map_err(|e| Failure::Input(format!("config: {e}")))?;
            config.validate().map_err(|e| Failure::Input(e.to_string()))?;
            let summary = run_campaign(&config, Some(budget_nodes))?;
            println!(
                "{} samples: {} passed, {} skipped (budget), {} violations",
                config.samples,
                summary.passed,
                summary.skipped.len(),
                summary.violations.len()
            );
            for v in &summary.violations {
                println!("violation at sample {} (seed {}): {}", v.index, v.seed, v.detail);
                println!("  n = {}, edges = {:?}", v.graph.n, v.graph.edges);
            }
            if !summary.is_clean() {
                verdict = Err(Failure::Check("theorem violations found".into()));
            }
            if let Some(path) = &cli.json {
                let mut s = serde_json::to_string_pretty(&summary).map_err(Error::from)?;
                s.push('\n');
                write_file(path, &s)?;
            }
        }
        Command::Verify { report: path } => {
            let text = std::fs::read_to_string(&path)
                .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?;
            let r = Report::from_json(&text)?;
            r.revalidate().map_err(|e| Failure::Check(format!("invalid: {e}")))?;
            println!("valid: {} certificate(s)", r.certificates.len());
        }
        Command::Selftest => {
            let results = selftest::run_all();
            for r in &results {
                println!("{r}");
            }
            if let Some(path) = &cli.json {
                let mut s = serde_json::to_string_pretty(&results).map_err(Error::from)?;
                s.push('\n');
                write_file(path, &s)?;
            }
            if results.iter().any(|r| !r.passed) {
                verdict = Err(Failure::Check("self-test failed".into()));
            }
        }
    }

    if let (Some(r), Some(path)) = (report, &cli.json) {
        write_file(path, &r.to_json())?;
    }
    verdict
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
