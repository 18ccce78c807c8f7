//! `nilgraph`: adapted complex structures on graph Lie algebras from the
//! command line.
//!
//! Exit status: 0 affirmative verdict, 1 negative verdict, 2 input error,
//! 3 search budget exceeded.

mod report;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use nilgraph::algebra::GraphLieAlgebra;
use nilgraph::complex::AdaptedMap;
use nilgraph::error::SearchError;
use nilgraph::hermitian::Metric;
use nilgraph::search::{SearchOptions, DEFAULT_BUDGET};
use nilgraph::Graph;

#[derive(Parser)]
#[command(name = "nilgraph", version, about = "Adapted complex structures on graph Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Degrees, components, girth, forest flag and obstructions.
    Analyze { graph: PathBuf },
    /// Decide whether the graph carries an adapted complex structure.
    Find {
        graph: PathBuf,
        /// List every map found (requires --oracle).
        #[arg(long)]
        all: bool,
        /// Use the brute-force enumeration instead of the structured search.
        #[arg(long)]
        oracle: bool,
        /// Skip the forest, cycle and obstruction shortcuts.
        #[arg(long)]
        generic: bool,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Write the certificate to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Check a certificate and describe the structure.
    Verify {
        graph: PathBuf,
        cert: PathBuf,
        /// Check every basis pair instead of vertex pairs only.
        #[arg(long)]
        full: bool,
    },
    /// Basic subgraph of an integrable structure.
    Basic { graph: PathBuf, cert: PathBuf },
    /// Expand a basic decomposition along a wedge plan.
    Expand {
        basicspec: PathBuf,
        plan: PathBuf,
        #[arg(long)]
        dot: bool,
        /// Write the graph here and print a summary instead.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the certificate to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Emit a named graph family.
    Family {
        name: String,
        params: Vec<usize>,
        #[arg(long)]
        dot: bool,
        /// Write the graph here and print a summary instead.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Write the family's certificate to this file.
        #[arg(long)]
        cert: Option<PathBuf>,
    },
    /// Hermitian checks for a Gram matrix.
    Metric { graph: PathBuf, cert: PathBuf, gram: PathBuf, check: MetricCheck },
    /// Decide every labelled graph up to a vertex count.
    Census {
        #[arg(long)]
        max_vertices: usize,
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: u64,
        #[arg(long, default_value_t = 1)]
        workers: usize,
        /// Skip graphs whose degree profile was already seen (heuristic).
        #[arg(long)]
        dedup: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricCheck {
    Balanced,
    Skt,
    Hermitian,
    Pd,
}

/// Affirmative or negative verdict of a successful run.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Verdict {
    Yes,
    No,
}

#[derive(Debug)]
enum Failure {
    Input(String),
    Budget(String),
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BudgetExceeded { .. } => Failure::Budget(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

type Outcome = Result<(String, Verdict), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    Graph::parse(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_structure(graph: &Path, cert: &Path) -> Result<(GraphLieAlgebra, AdaptedMap), Failure> {
    let alg = GraphLieAlgebra::new(load_graph(graph)?);
    let j = AdaptedMap::parse_certificate(&alg, &read(cert)?)
        .map_err(|e| Failure::Input(format!("{}: {e}", cert.display())))?;
    Ok((alg, j))
}

fn load_metric(alg: &GraphLieAlgebra, path: &Path) -> Result<Metric, Failure> {
    Metric::parse(alg, &read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn run(cmd: Command, echo: &str) -> Outcome {
    match cmd {
        Command::Analyze { graph } => Ok((report::analyze(echo, &load_graph(&graph)?), Verdict::Yes)),
        Command::Find { graph, all, oracle, generic, budget, workers, cert } => {
            if all && !oracle {
                return Err(Failure::Input("--all requires --oracle".into()));
            }
            if workers == 0 {
                return Err(Failure::Input("--workers must be at least 1".into()));
            }
            let g = load_graph(&graph)?;
            let (text, found) = if oracle {
                report::find_oracle(echo, &g, all)?
            } else {
                let opts = SearchOptions { budget, workers, generic_only: generic };
                report::find(echo, &g, &opts)?
            };
            if let (Some(path), Some(j)) = (cert, &found) {
                write(&path, &j.to_certificate(&GraphLieAlgebra::new(g)))?;
            }
            Ok((text, if found.is_some() { Verdict::Yes } else { Verdict::No }))
        }
        Command::Verify { graph, cert, full } => {
            let (alg, j) = load_structure(&graph, &cert)?;
            Ok(report::verify(echo, &alg, &j, full))
        }
        Command::Basic { graph, cert } => {
            let (alg, j) = load_structure(&graph, &cert)?;
            Ok(report::basic(echo, &alg, &j))
        }
        Command::Expand { basicspec, plan, dot, output, cert } => {
            let (g, j) = report::expand(&basicspec, &read(&basicspec)?, &plan, &read(&plan)?)?;
            emit_artifacts(echo, &g, Some(&j), dot, output, cert)
        }
        Command::Family { name, params, dot, output, cert } => {
            let (g, j) = report::family(&name, &params)?;
            if cert.is_some() && j.is_none() {
                let msg = format!("# vertices numbered from 1\nno certificate is available for family {name}\n");
                return Ok((msg, Verdict::No));
            }
            emit_artifacts(echo, &g, j.as_ref(), dot, output, cert)
        }
        Command::Metric { graph, cert, gram, check } => {
            let (alg, j) = load_structure(&graph, &cert)?;
            let metric = load_metric(&alg, &gram)?;
            match check {
                MetricCheck::Balanced => report::balanced(echo, &alg, &j, &metric),
                MetricCheck::Skt => Ok(report::skt(echo, &alg, &j, &metric)),
                MetricCheck::Hermitian => Ok(report::hermitian(echo, &j, &metric)),
                MetricCheck::Pd => Ok(report::pd(echo, &metric)),
            }
        }
        Command::Census { max_vertices, budget, workers, dedup } => {
            if workers == 0 {
                return Err(Failure::Input("--workers must be at least 1".into()));
            }
            let opts = SearchOptions { budget, workers, generic_only: false };
            Ok((report::census(echo, max_vertices, &opts, dedup)?, Verdict::Yes))
        }
    }
}

/// Prints the graph (text or DOT) unless `output` is given, in which case
/// the graph goes to that file and a summary is printed.
fn emit_artifacts(
    echo: &str,
    g: &Graph,
    j: Option<&AdaptedMap>,
    dot: bool,
    output: Option<PathBuf>,
    cert: Option<PathBuf>,
) -> Outcome {
    let body = if dot { g.to_dot() } else { g.to_text() };
    if let (Some(path), Some(j)) = (&cert, j) {
        write(path, &j.to_certificate(&GraphLieAlgebra::new(g.clone())))?;
    }
    let Some(path) = output else {
        return Ok((body, Verdict::Yes));
    };
    write(&path, &body)?;
    let mut s = report::header(echo);
    s.push_str(&format!("graph: {} vertices, {} edges -> {}\n", g.n(), g.m(), path.display()));
    match (&cert, j) {
        (Some(c), Some(_)) => s.push_str(&format!("certificate: {}\n", c.display())),
        (_, Some(_)) => s.push_str("certificate: available (pass --cert to write it)\n"),
        (_, None) => s.push_str("certificate: none\n"),
    }
    Ok((s, Verdict::Yes))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let echo: Vec<String> = std::env::args().skip(1).collect();
    match run(cli.command, &echo.join(" ")) {
        Ok((text, verdict)) => {
            print!("{text}");
            ExitCode::from(if verdict == Verdict::Yes { 0 } else { 1 })
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Budget(msg)) => {
            eprintln!("inconclusive: {msg}");
            ExitCode::from(3)
        }
    }
}
