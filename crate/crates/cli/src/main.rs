use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use startrans::autgroup::{automorphism_group, AutError};
use startrans::cosetgraph::{self, CosetError};
use startrans::families::{self, ConstructedInstance, FamilyError};
use startrans::graph::{io as graph_io, Graph, GraphError};
use startrans::group::io::{parse_generators, parse_image_line, serialize_generators, GensParseError};
use startrans::group::GroupError;
use startrans::localsym::LocalSymError;
use startrans::suites;
use startrans::{analyze, CheckConfig, Limits, PermGroup};

mod text;

#[derive(Parser)]
#[command(name = "startrans", version, about = "Star and edge-star transitivity of graphs")]
struct Cli {
    /// Largest graph or group degree accepted.
    #[arg(long, global = true)]
    max_vertices: Option<usize>,
    /// Cap for the local s-arc transitivity search.
    #[arg(long, global = true)]
    max_s: Option<usize>,
    /// Reserved; every command is deterministic.
    #[arg(long, global = true)]
    seed: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph family and write it in edge-list format.
    Construct {
        /// cycle, path, complete, complete-bipartite, spider, odd, johnson,
        /// hamming, pg, gq, gf3 or s-squared.
        family: String,
        params: Vec<usize>,
        /// Graph file; standard output when absent.
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Where to write the generators of the attached group.
        #[arg(long)]
        gens: Option<PathBuf>,
    },
    /// Decide both properties and report the stabiliser structure.
    Analyze {
        graph: PathBuf,
        /// Generator file; the full automorphism group when absent.
        #[arg(long)]
        group: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        report: ReportFormat,
    },
    /// Print the order and generators of the automorphism group.
    Autgroup { graph: PathBuf },
    /// Build a coset graph from generator files.
    Cosetgraph {
        #[command(subcommand)]
        kind: CosetKind,
    },
    /// Run a named verification suite.
    Verify {
        /// small-valency, vertex-transitive, vertex-intransitive, coset or all.
        suite: String,
    },
}

#[derive(Subcommand)]
enum CosetKind {
    /// Cos(G, H, g) on the cosets of H.
    Sabidussi {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        subgroup: PathBuf,
        /// The element g as a line of images.
        #[arg(long, allow_hyphen_values = true)]
        element: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        gens: Option<PathBuf>,
    },
    /// Bipartite coset graph on the cosets of L and of R.
    Bipartite {
        #[arg(long)]
        group: PathBuf,
        #[arg(long)]
        left: PathBuf,
        #[arg(long)]
        right: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        #[arg(long)]
        gens: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ReportFormat {
    Json,
    Text,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Graph { path: PathBuf, source: GraphError },
    #[error("{path}: {source}")]
    Gens { path: PathBuf, source: GensParseError },
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("{family} takes {expected} parameter(s), got {found}")]
    Params { family: String, expected: usize, found: usize },
    #[error("unknown suite `{0}`; expected one of small-valency, vertex-transitive, vertex-intransitive, coset, all")]
    UnknownSuite(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Coset(#[from] CosetError),
    #[error(transparent)]
    Group(#[from] GroupError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    LocalSym(#[from] LocalSymError),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

/// What a successful command found.
enum Finding {
    Clean,
    Falsification,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli) {
        Ok(Finding::Clean) => ExitCode::SUCCESS,
        Ok(Finding::Falsification) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn limits(cli: &Cli) -> Limits {
    let mut limits = Limits::default();
    if let Some(n) = cli.max_vertices {
        limits.max_vertices = n;
        limits.max_group_degree = n;
        limits.autgroup_vertices = limits.autgroup_vertices.min(n);
    }
    if let Some(s) = cli.max_s {
        limits.max_s = s;
    }
    limits
}

fn run(cli: Cli) -> Result<Finding, CliError> {
    let limits = limits(&cli);
    let cfg = CheckConfig {
        limits: limits.clone(),
        ..CheckConfig::default()
    };
    match cli.command {
        Command::Construct { family, params, output, gens } => {
            let inst = construct(&family, &params, &limits)?;
            emit_instance(&inst, output.as_deref(), gens.as_deref())?;
            Ok(Finding::Clean)
        }
        Command::Analyze { graph, group, report } => {
            let g = read_graph(&graph)?;
            let grp = group.map(|p| read_group(&p)).transpose()?;
            let result = analyze(&g, grp.as_ref(), &cfg)?;
            match report {
                ReportFormat::Json => emit(&format!("{}\n", serde_json::to_string_pretty(&result)?)),
                ReportFormat::Text => emit(&text::report(&result)),
            }
            Ok(if result.is_falsification() {
                Finding::Falsification
            } else {
                Finding::Clean
            })
        }
        Command::Autgroup { graph } => {
            let g = read_graph(&graph)?;
            let aut = automorphism_group(&g, &limits)?;
            emit(&format!("# order {}\n{}", aut.order(), serialize_generators(g.n(), aut.generators())));
            Ok(Finding::Clean)
        }
        Command::Cosetgraph { kind } => {
            let (inst, output, gens) = match kind {
                CosetKind::Sabidussi { group, subgroup, element, output, gens } => {
                    let g = read_group(&group)?;
                    let h = read_group(&subgroup)?;
                    let x = parse_image_line(&element, g.degree()).map_err(|source| CliError::Gens {
                        path: PathBuf::from("--element"),
                        source,
                    })?;
                    (cosetgraph::sabidussi(&g, &h, &x, &limits)?, output, gens)
                }
                CosetKind::Bipartite { group, left, right, output, gens } => {
                    let g = read_group(&group)?;
                    let l = read_group(&left)?;
                    let r = read_group(&right)?;
                    (cosetgraph::bipartite_coset(&g, &l, &r, &limits)?, output, gens)
                }
            };
            emit_instance(&inst, output.as_deref(), gens.as_deref())?;
            Ok(Finding::Clean)
        }
        Command::Verify { suite } => {
            let items = suites::suite(&suite).ok_or(CliError::UnknownSuite(suite))?;
            let mut failures = 0;
            for item in &items {
                let r = item.run(&cfg);
                emit(&format!(
                    "{} [{}] {}\n    expected: {}\n    observed: {}\n",
                    if r.passed { "PASS" } else { "FAIL" },
                    r.suite,
                    r.name,
                    r.expectation,
                    r.observed
                ));
                failures += usize::from(!r.passed);
            }
            emit(&format!("{} of {} items passed\n", items.len() - failures, items.len()));
            Ok(if failures == 0 {
                Finding::Clean
            } else {
                Finding::Falsification
            })
        }
    }
}

fn construct(family: &str, params: &[usize], limits: &Limits) -> Result<ConstructedInstance, CliError> {
    let arity = match family {
        "gq" => 0,
        "complete-bipartite" | "johnson" | "hamming" => 2,
        "cycle" | "path" | "complete" | "spider" | "odd" | "pg" | "gf3" | "s-squared" => 1,
        _ => return Err(CliError::UnknownFamily(family.to_string())),
    };
    if params.len() != arity {
        return Err(CliError::Params {
            family: family.to_string(),
            expected: arity,
            found: params.len(),
        });
    }
    let p = |i: usize| params[i];
    let inst = match family {
        "cycle" => families::cycle(p(0)),
        "path" => families::path(p(0)),
        "complete" => families::complete(p(0)),
        "complete-bipartite" => families::complete_bipartite(p(0), p(1)),
        "spider" => families::spider(p(0)),
        "odd" => families::odd_graph(p(0), limits),
        "johnson" => families::johnson_incidence(p(0), p(1), limits),
        "hamming" => families::hamming_clique_incidence(p(0), p(1), limits),
        "pg" => families::pg_incidence(p(0)),
        "gq" => families::hermitian_gq(),
        "gf3" => families::gf3_translate_graph(p(0), limits),
        "s-squared" => families::s_squared_example(p(0), limits),
        _ => unreachable!("arity table covers every family"),
    }?;
    if inst.graph.n() > limits.max_vertices {
        return Err(CliError::Usage(format!(
            "{} has {} vertices, above --max-vertices {}",
            inst.name,
            inst.graph.n(),
            limits.max_vertices
        )));
    }
    Ok(inst)
}

fn emit_instance(inst: &ConstructedInstance, output: Option<&Path>, gens: Option<&Path>) -> Result<(), CliError> {
    let mut body = format!("# {}\n", inst.name);
    for note in &inst.notes {
        body.push_str(&format!("# {note}\n"));
    }
    body.push_str(&graph_io::serialize(&inst.graph));
    match output {
        Some(path) => write(path, &body)?,
        None => emit(&body),
    }
    if let Some(path) = gens {
        let grp = inst
            .group
            .as_ref()
            .ok_or_else(|| CliError::Usage(format!("{} has no attached group", inst.name)))?;
        write(path, &serialize_generators(inst.graph.n(), grp.generators()))?;
    }
    Ok(())
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn write(path: &Path, contents: &str) -> Result<(), CliError> {
    fs::write(path, contents).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })
}

fn read_graph(path: &Path) -> Result<Graph, CliError> {
    graph_io::parse(&read(path)?).map_err(|source| CliError::Graph {
        path: path.to_path_buf(),
        source,
    })
}

fn read_group(path: &Path) -> Result<PermGroup, CliError> {
    let (degree, gens) = parse_generators(&read(path)?).map_err(|source| CliError::Gens {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(PermGroup::from_generators(degree, gens)?)
}
