//! The command-line verbs and their execution.

use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use distlat::embed::{embed, induced_cover, tighten_factors, EmbedOptions};
use distlat::gpa::{construct_gpa_with_lattice, extract_arcs, normalize_arcs, reduced_complement};
use distlat::oracle::{OracleOptions, MAX_ORACLE_VERTICES};
use distlat::recognize::RecognizeOptions;
use distlat::{ChainCover, Lattice, RecognitionResult, ReflexiveGraph};
use rand::rngs::StdRng;
use rand::SeedableRng;
use thiserror::Error;

use crate::corpus;
use crate::format::{self, emit_graph, Input, ParseError, PosetFile};
use crate::parallel;
use crate::report::{self, downset_label, to_json, EmbeddingReport, LatticeJson, RecognizeReport, VerifyReport};

pub const EXIT_OK: u8 = 0;
pub const EXIT_NO: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Debug, Parser)]
#[command(name = "distlat", version, about = "Distributive lattice graphs: construct, recognise, embed")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CoverChoice {
    /// Induced cover, then greedy tightening of the factors.
    Auto,
    /// One chain per arc of the reduced complement, plus singletons.
    Induced,
    /// A greedy chain decomposition.
    Decomposition,
    /// Chains read from `--cover-file`.
    File,
    /// A random cover drawn with `--seed`.
    Random,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Build G(P, A) from a poset file.
    Construct {
        input: PathBuf,
        /// Also write a DOT drawing with the downset lattice covers.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Decide whether a graph admits a compatible distributive lattice.
    Recognize {
        input: PathBuf,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// Try every ordered pair as (0, 1).
        #[arg(long)]
        no_prune: bool,
        /// Largest non-R-thin component settled by exhaustive search.
        #[arg(long, default_value_t = MAX_ORACLE_VERTICES)]
        oracle_fallback: usize,
        /// Write a DOT drawing, with lattice covers when the answer is yes.
        #[arg(long, value_name = "PATH")]
        dot: Option<PathBuf>,
    },
    /// Check a lattice against a graph, or D(P) against G(P, A).
    Verify {
        #[arg(long, requires = "lattice", conflicts_with = "poset")]
        graph: Option<PathBuf>,
        /// A lattice order in the poset format.
        #[arg(long, requires = "graph")]
        lattice: Option<PathBuf>,
        #[arg(long, required_unless_present = "graph")]
        poset: Option<PathBuf>,
        /// Also test the majority term as a polymorphism (cubic in edges).
        #[arg(long)]
        majority: bool,
    },
    /// Embed G(P, A) into a product of path-like factor graphs.
    Embed {
        input: PathBuf,
        #[arg(long, value_enum, default_value_t = CoverChoice::Auto)]
        cover: CoverChoice,
        #[arg(long, value_name = "PATH", required_if_eq("cover", "file"))]
        cover_file: Option<PathBuf>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Keep vertex intervals that contain no product vertex.
        #[arg(long)]
        keep_empty: bool,
    },
    /// Quotient a graph by equal closed neighbourhoods.
    Reduce { input: PathBuf },
    /// List every compatible lattice of a small graph by brute force.
    Oracle {
        input: PathBuf,
        #[arg(long, default_value_t = MAX_ORACLE_VERTICES)]
        max_n: usize,
        /// Include non-distributive lattices.
        #[arg(long)]
        all: bool,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("{path}:{source}")]
    Parse { path: PathBuf, source: ParseError },
    #[error("{path}: expected a {expected} file")]
    WrongFormat { path: PathBuf, expected: &'static str },
    #[error("{0}")]
    Invalid(String),
}

/// Exit code and the document for stdout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: u8,
    pub stdout: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { code: EXIT_OK, stdout }
    }
}

fn read(path: &Path) -> Result<String, CliError> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn write(path: &Path, text: &str) -> Result<(), CliError> {
    fs::write(path, text).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn read_input(path: &Path) -> Result<Input, CliError> {
    format::parse_input(&read(path)?).map_err(|source| CliError::Parse {
        path: path.to_owned(),
        source,
    })
}

pub fn read_graph(path: &Path) -> Result<ReflexiveGraph, CliError> {
    match read_input(path)? {
        Input::Graph(g) => Ok(g),
        Input::Poset(_) => Err(CliError::WrongFormat {
            path: path.to_owned(),
            expected: "graph",
        }),
    }
}

pub fn read_poset(path: &Path) -> Result<PosetFile, CliError> {
    match read_input(path)? {
        Input::Poset(p) => Ok(p),
        Input::Graph(_) => Err(CliError::WrongFormat {
            path: path.to_owned(),
            expected: "poset",
        }),
    }
}

fn invalid(e: impl std::fmt::Display) -> CliError {
    CliError::Invalid(e.to_string())
}

pub fn run(command: &Command) -> Result<Outcome, CliError> {
    match command {
        Command::Construct { input, dot } => construct(input, dot.as_deref()),
        Command::Recognize {
            input,
            jobs,
            no_prune,
            oracle_fallback,
            dot,
        } => {
            let graph = read_graph(input)?;
            let options = RecognizeOptions {
                prune_candidates: !no_prune,
                oracle_fallback_max: *oracle_fallback,
            };
            let result = parallel::recognize(&graph, options, (*jobs).max(1));
            if let Some(path) = dot {
                write(path, &report::dot(&graph, result.lattice(), None))?;
            }
            let code = match result {
                RecognitionResult::Yes(_) => EXIT_OK,
                RecognitionResult::No(_) => EXIT_NO,
                RecognitionResult::Inconclusive(_) => EXIT_INCONCLUSIVE,
            };
            Ok(Outcome {
                code,
                stdout: to_json(&RecognizeReport::from(&result)),
            })
        }
        Command::Verify {
            graph,
            lattice,
            poset,
            majority,
        } => verify(graph.as_deref(), lattice.as_deref(), poset.as_deref(), *majority),
        Command::Embed {
            input,
            cover,
            cover_file,
            seed,
            keep_empty,
        } => embed_command(input, *cover, cover_file.as_deref(), *seed, *keep_empty),
        Command::Reduce { input } => {
            let graph = read_graph(input)?;
            let (reduced, _) = graph.r_thin_reduction();
            let mut out = String::new();
            for (c, members) in graph.r_thin_classes().iter().enumerate() {
                let list: Vec<String> = members.iter().map(|v| v.to_string()).collect();
                let _ = writeln!(out, "# class {c}: {}", list.join(" "));
            }
            out.push_str(&emit_graph(&reduced));
            Ok(Outcome::ok(out))
        }
        Command::Oracle { input, max_n, all, jobs } => {
            let graph = read_graph(input)?;
            let limit = (*max_n).min(MAX_ORACLE_VERTICES);
            if graph.len() > limit {
                return Err(CliError::Invalid(format!(
                    "graph has {} vertices; the oracle runs up to {limit}",
                    graph.len()
                )));
            }
            let options = OracleOptions {
                distributive_only: !all,
                hasse_prune: true,
            };
            let found = parallel::oracle(&graph, options, (*jobs).max(1)).map_err(invalid)?;
            let list: Vec<LatticeJson> = found.iter().map(LatticeJson::from).collect();
            Ok(Outcome::ok(to_json(&list)))
        }
    }
}

fn construct(input: &Path, dot: Option<&Path>) -> Result<Outcome, CliError> {
    let PosetFile { poset, arcs } = read_poset(input)?;
    let (graph, dl) = construct_gpa_with_lattice(&poset, &arcs).map_err(invalid)?;
    let labels: Vec<String> = dl.downsets.iter().map(|&d| downset_label(d)).collect();
    let mut out = String::new();
    for (v, label) in labels.iter().enumerate() {
        let _ = writeln!(out, "# vertex {v}: {label}");
    }
    out.push_str(&emit_graph(&graph));
    if let Some(path) = dot {
        write(path, &report::dot(&graph, Some(&dl.lattice), Some(&labels)))?;
    }
    Ok(Outcome::ok(out))
}

fn verify(graph: Option<&Path>, lattice: Option<&Path>, poset: Option<&Path>, majority: bool) -> Result<Outcome, CliError> {
    let report = match (graph, lattice, poset) {
        (Some(g), Some(l), _) => {
            let graph = read_graph(g)?;
            let order = read_poset(l)?.poset;
            let lattice = Lattice::from_order_auto(order).map_err(|e| invalid(format!("{}: {e}", l.display())))?;
            if lattice.len() != graph.len() {
                return Err(CliError::Invalid(format!(
                    "graph has {} vertices but the lattice has {} elements",
                    graph.len(),
                    lattice.len()
                )));
            }
            VerifyReport::new(&graph, &lattice, majority)
        }
        (_, _, Some(p)) => {
            let PosetFile { poset, arcs } = read_poset(p)?;
            let (graph, dl) = construct_gpa_with_lattice(&poset, &arcs).map_err(invalid)?;
            let mut report = VerifyReport::new(&graph, &dl.lattice, majority);
            let recovered = extract_arcs(&graph, &dl.lattice)
                .ok()
                .and_then(|x| x.arcs_on(&poset, &dl))
                .is_some_and(|a| normalize_arcs(&poset, &a) == normalize_arcs(&poset, &arcs));
            report.arcs_recovered = Some(recovered);
            report
        }
        _ => return Err(CliError::Invalid("give --graph and --lattice, or --poset".into())),
    };
    Ok(Outcome {
        code: if report.compatible { EXIT_OK } else { EXIT_NO },
        stdout: to_json(&report),
    })
}

fn embed_command(
    input: &Path,
    choice: CoverChoice,
    cover_file: Option<&Path>,
    seed: u64,
    keep_empty: bool,
) -> Result<Outcome, CliError> {
    let PosetFile { poset, arcs } = read_poset(input)?;
    let reduced = reduced_complement(&poset, &arcs);
    let cover = match choice {
        CoverChoice::Auto | CoverChoice::Induced => induced_cover(&poset, &reduced).map_err(invalid)?,
        CoverChoice::Decomposition => ChainCover::greedy_decomposition(&poset),
        CoverChoice::Random => corpus::random_cover(&mut StdRng::seed_from_u64(seed), &poset),
        CoverChoice::File => {
            let path = cover_file.ok_or_else(|| CliError::Invalid("--cover file needs --cover-file".into()))?;
            format::parse_cover(&read(path)?, &poset).map_err(|source| CliError::Parse {
                path: path.to_owned(),
                source,
            })?
        }
    };
    let options = EmbedOptions { omit_empty: !keep_empty };
    let emb = embed(&poset, &arcs, &cover, options).map_err(invalid)?;
    let report = if choice == CoverChoice::Auto {
        let graph = emb.reconstruct_graph();
        let t = tighten_factors(&emb, &graph);
        EmbeddingReport::new(&t.embedding).with_tightening(&t.contractions, &t.obstructions)
    } else {
        EmbeddingReport::new(&emb)
    };
    Ok(Outcome::ok(to_json(&report)))
}
