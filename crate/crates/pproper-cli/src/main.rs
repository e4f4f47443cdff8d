//! `pproper`: batch front end.
//!
//! Exit status: 0 found / proper / certified, 1 none / conflict / absent,
//! 2 precondition or parameter error, 3 refusal (a size cap was hit),
//! 4 I/O or parse error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;

use pproper::adversary::{self, AdversaryError, WitnessOutcome};
use pproper::cn::{certify_limited, CnError, DEFAULT_MAX_EDGES};
use pproper::constructive::{self, ConstructError, ExactAbsoluteLabeller};
use pproper::io;
use pproper::label::{colours, verify};
use pproper::solver::{solve_with, SolveStatus, SolverConfig, SolverError};
use pproper::survey::{survey_row, Family, SurveyConfig};
use pproper::{parse_edge_list, Graph, Label, Labelling, ListAssignment, Mode};

#[derive(Parser)]
#[command(name = "pproper", version, about = "Product- and sum-proper list edge-labellings")]
struct Cli {
    /// Worker threads for the parallel searches (default: rayon's choice).
    #[arg(long, global = true)]
    threads: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Exhaustively search for a proper labelling.
    Solve {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, default_value = "product")]
        mode: Mode,
        /// Search node cap.
        #[arg(long)]
        cap: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Check a labelling for totality, list membership and properness.
    Verify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long)]
        labelling: PathBuf,
        #[arg(long, default_value = "product")]
        mode: Mode,
    },
    /// Run a constructive labeller.
    Construct {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long)]
        lists: PathBuf,
        #[arg(long, value_enum)]
        algorithm: Algorithm,
        /// Target list size of the inner problem for from-sum.
        #[arg(long, default_value_t = 3)]
        k: usize,
        /// Vouch that the graph is planar (required by planar16).
        #[arg(long)]
        assume_planar: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Look for a polynomial certificate with all exponents below k.
    Certify {
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, default_value = "product")]
        mode: Mode,
        #[arg(long)]
        k: u32,
        /// Largest edge count to expand.
        #[arg(long, default_value_t = DEFAULT_MAX_EDGES)]
        cap: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Build and check an infeasible instance.
    Adversary {
        #[arg(long, value_enum)]
        kind: Kind,
        /// Input graph for all-ones and plus-minus-one.
        #[arg(long)]
        graph: Option<PathBuf>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, allow_hyphen_values = true)]
        a: Option<Label>,
        #[arg(long, allow_hyphen_values = true)]
        b: Option<Label>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Per-length feasibility table for paths or cycles.
    Survey {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        /// Comma-separated labels, e.g. "-3,-2,-1,1,2,3".
        #[arg(long, allow_hyphen_values = true, default_value = "-3,-2,-1,1,2,3")]
        universe: String,
        #[arg(long)]
        k: usize,
        /// Largest number of list assignments enumerated per row.
        #[arg(long)]
        cap: Option<u64>,
    },
    /// Print the registry of known bounds.
    Bounds,
}

#[derive(Clone, Copy, ValueEnum)]
enum Algorithm {
    Path,
    Cycle,
    Tree,
    Planar16,
    Subcubic,
    FromSum,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    AllOnes,
    PlusMinusOne,
    BadTree8,
    BadPath,
    BadOddCycle,
}

/// A failure with its exit status.
struct Fail(u8, String);

type Outcome = Result<u8, Fail>;

fn io_fail(e: impl std::fmt::Display) -> Fail {
    Fail(4, e.to_string())
}

fn read(path: &Path) -> Result<String, Fail> {
    fs::read_to_string(path).map_err(|e| Fail(4, format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<Graph, Fail> {
    parse_edge_list(&read(path)?).map_err(|e| Fail(4, format!("{}: {e}", path.display())))
}

fn read_lists(path: &Path) -> Result<ListAssignment, Fail> {
    io::parse_lists(&read(path)?).map_err(|e| Fail(4, format!("{}: {e}", path.display())))
}

fn read_labelling(path: &Path) -> Result<Labelling, Fail> {
    io::parse_labelling(&read(path)?).map_err(|e| Fail(4, format!("{}: {e}", path.display())))
}

fn emit(value: &Value, out: Option<&Path>) -> Result<(), Fail> {
    let text = serde_json::to_string_pretty(value).map_err(io_fail)? + "\n";
    match out {
        Some(p) => fs::write(p, text).map_err(|e| Fail(4, format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn solver_fail(e: SolverError) -> Fail {
    match e {
        SolverError::NodeCap(_) | SolverError::EnumerationCap { .. } => Fail(3, e.to_string()),
        _ => Fail(2, e.to_string()),
    }
}

fn construct_fail(e: ConstructError) -> Fail {
    match e {
        ConstructError::Solver(s) => solver_fail(s),
        ConstructError::Invariant(_) => Fail(1, e.to_string()),
        _ => Fail(2, e.to_string()),
    }
}

fn adversary_fail(e: AdversaryError) -> Fail {
    match e {
        AdversaryError::Solver(s) => solver_fail(s),
        AdversaryError::NotInfeasible(_) => Fail(1, e.to_string()),
        AdversaryError::InvalidParameter(_) => Fail(2, e.to_string()),
    }
}

fn solver_config(threads: Option<usize>) -> SolverConfig {
    SolverConfig {
        parallel: threads.is_none_or(|t| t > 1),
        ..SolverConfig::default()
    }
}

fn run(cli: Cli) -> Outcome {
    let threads = cli.threads;
    match cli.command {
        Command::Solve {
            graph,
            lists,
            mode,
            cap,
            out,
        } => {
            let g = read_graph(&graph)?;
            let la = read_lists(&lists)?;
            let mut cfg = solver_config(threads);
            if let Some(c) = cap {
                cfg.node_cap = c;
            }
            let res = solve_with(&g, &la, mode, &cfg).map_err(solver_fail)?;
            match res.status {
                SolveStatus::Found(lab) => {
                    eprintln!("FOUND after {} nodes", res.nodes_explored);
                    emit(&io::labelling_to_value(&lab), out.as_deref())?;
                    Ok(0)
                }
                SolveStatus::None => {
                    eprintln!("NONE after {} nodes", res.nodes_explored);
                    Ok(1)
                }
            }
        }
        Command::Verify {
            graph,
            lists,
            labelling,
            mode,
        } => {
            let g = read_graph(&graph)?;
            let la = read_lists(&lists)?;
            let lab = read_labelling(&labelling)?;
            let bad = verify(&g, &la, &lab, mode).map_err(|e| Fail(2, e.to_string()))?;
            if bad.is_empty() {
                println!("proper");
                return Ok(0);
            }
            let c = colours(&g, &lab, mode);
            for e in &bad {
                println!("conflict {e}: {} and {}", c[&e.u()], c[&e.v()]);
            }
            Ok(1)
        }
        Command::Construct {
            graph,
            lists,
            algorithm,
            k,
            assume_planar,
            out,
        } => {
            let g = read_graph(&graph)?;
            let la = read_lists(&lists)?;
            let lab = match algorithm {
                Algorithm::Path => constructive::label_path(&g, &la),
                Algorithm::Cycle => constructive::label_cycle(&g, &la),
                Algorithm::Tree => constructive::label_tree(&g, &la),
                Algorithm::Subcubic => constructive::label_subcubic(&g, &la),
                Algorithm::Planar16 if !assume_planar => {
                    return Err(Fail(
                        2,
                        "planar16 does not test planarity; pass --assume-planar to vouch for it"
                            .into(),
                    ))
                }
                Algorithm::Planar16 => constructive::label_planar_girth16(&g, &la),
                Algorithm::FromSum => {
                    let inner = ExactAbsoluteLabeller {
                        config: solver_config(threads),
                    };
                    constructive::product_from_sum(&g, &la, k, &inner)
                }
            }
            .map_err(construct_fail)?;
            emit(&io::labelling_to_value(&lab), out.as_deref())?;
            Ok(0)
        }
        Command::Certify {
            graph,
            mode,
            k,
            cap,
            out,
        } => {
            let g = read_graph(&graph)?;
            match certify_limited(&g, mode, k, cap) {
                Ok(Some(c)) => {
                    emit(&io::certificate_to_value(&c), out.as_deref())?;
                    Ok(0)
                }
                Ok(None) => {
                    eprintln!("ABSENT");
                    Ok(1)
                }
                Err(e @ CnError::TooLarge { .. }) => Err(Fail(3, e.to_string())),
                Err(e) => Err(Fail(2, e.to_string())),
            }
        }
        Command::Adversary {
            kind,
            graph,
            n,
            a,
            b,
            out,
        } => {
            let need_graph = || match &graph {
                Some(p) => read_graph(p),
                None => Err(Fail(2, "this generator needs --graph".into())),
            };
            let need = |x: Option<Label>, name: &str| {
                x.ok_or_else(|| Fail(2, format!("this generator needs --{name}")))
            };
            let need_n = || n.ok_or_else(|| Fail(2, "this generator needs --n".into()));
            let outcome = match kind {
                Kind::AllOnes => adversary::all_ones(&need_graph()?).map(WitnessOutcome::Witness),
                Kind::PlusMinusOne => adversary::plus_minus_one(&need_graph()?),
                Kind::BadTree8 => adversary::bad_tree8(&need(a, "a")?).map(WitnessOutcome::Witness),
                Kind::BadPath => adversary::bad_path(need_n()?, &need(a, "a")?, &need(b, "b")?)
                    .map(WitnessOutcome::Witness),
                Kind::BadOddCycle => {
                    adversary::bad_odd_cycle(need_n()?, &need(a, "a")?, &need(b, "b")?)
                }
            }
            .map_err(adversary_fail)?;
            match outcome {
                WitnessOutcome::Witness(w) => {
                    eprintln!("WITNESS {}", w.claim);
                    emit(&io::witness_to_value(&w), out.as_deref())?;
                    Ok(0)
                }
                WitnessOutcome::NotAWitness(lab) => {
                    eprintln!("NOT A WITNESS: the lists admit a proper labelling");
                    emit(&io::labelling_to_value(&lab), out.as_deref())?;
                    Ok(1)
                }
            }
        }
        Command::Survey {
            family,
            n_min,
            n_max,
            universe,
            k,
            cap,
        } => {
            let universe = universe
                .split(',')
                .map(|s| s.parse::<Label>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| Fail(2, e.to_string()))?;
            let mut cfg = SurveyConfig::new(universe, k);
            cfg.solver = solver_config(threads);
            if let Some(c) = cap {
                cfg.exhaustive_limit = c;
            }
            for n in n_min..=n_max {
                println!("{}", survey_row(family, n, &cfg));
            }
            Ok(0)
        }
        Command::Bounds => {
            print!("{}", pproper::bounds::render());
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(t).build_global() {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Fail(code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
