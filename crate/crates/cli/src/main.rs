mod commands;
mod report;

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use alliance_core::solvers::DEFAULT_ORACLE_CAP;
use alliance_core::Error;
use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};

use commands::{CheckArgs, Finished, Generated, ProductArgs, VerifyArgs};

#[derive(Parser)]
#[command(name = "alliance", version, about = "Offensive k-alliances in graphs: exact search, bounds and checks")]
struct Cli {
    /// Add `wall_time_ms` to the report. It is not part of the digest.
    #[arg(long, global = true)]
    timing: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
pub struct GraphInput {
    /// Edge-list file: `n m` then one `u v` pair per line.
    #[arg(long)]
    graph: Option<PathBuf>,

    /// Generator expression such as `hypercube:3` or `product:cycle:4,complete:4`.
    #[arg(long = "gen", value_name = "SPEC")]
    generator: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodName {
    Oracle,
    Bnb,
    Greedy,
}

impl MethodName {
    fn registry_name(self) -> &'static str {
        match self {
            MethodName::Oracle => "oracle",
            MethodName::Bnb => "bnb",
            MethodName::Greedy => "greedy",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum PredicateName {
    Dominating,
    Offensive,
    GlobalOffensive,
    RDependent,
    TauDominating,
}

impl PredicateName {
    fn as_str(self) -> &'static str {
        match self {
            PredicateName::Dominating => "dominating",
            PredicateName::Offensive => "offensive",
            PredicateName::GlobalOffensive => "global-offensive",
            PredicateName::RDependent => "r-dependent",
            PredicateName::TauDominating => "tau-dominating",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Complete,
    Cycle,
    Path,
    Bipartite,
}

impl FamilyName {
    fn as_str(self) -> &'static str {
        match self {
            FamilyName::Complete => "complete",
            FamilyName::Cycle => "cycle",
            FamilyName::Path => "path",
            FamilyName::Bipartite => "bipartite",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Minimum (global) offensive k-alliance.
    Solve {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, value_enum, default_value = "oracle")]
        method: MethodName,
        /// Drop the domination requirement.
        #[arg(long, conflicts_with = "global")]
        offensive: bool,
        /// Require domination (the default).
        #[arg(long)]
        global: bool,
        /// Largest order the exhaustive oracle accepts.
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Test a vertex set against a predicate and list violating vertices.
    #[command(group(ArgGroup::new("members_src").required(true).args(["set", "members"])))]
    Check {
        #[command(flatten)]
        input: GraphInput,
        /// File of vertex indices separated by whitespace or commas.
        #[arg(long)]
        set: Option<PathBuf>,
        /// Comma-separated vertex indices.
        #[arg(long, value_delimiter = ',')]
        members: Option<Vec<usize>>,
        #[arg(long, value_enum)]
        predicate: PredicateName,
        #[arg(short, allow_negative_numbers = true)]
        k: Option<i64>,
        #[arg(short)]
        r: Option<i64>,
        /// Fraction in (0, 1], e.g. `1/2`.
        #[arg(long)]
        tau: Option<String>,
    },
    /// Every lower and upper bound on γₖᵒ, with the exact value when within the cap.
    Bounds {
        #[command(flatten)]
        input: GraphInput,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Closed form for a graph family, compared with exhaustive search.
    Family {
        #[arg(value_enum)]
        family: FamilyName,
        /// Order, or `r t` for the complete bipartite graph.
        #[arg(required = true, num_args = 1..=2)]
        sizes: Vec<usize>,
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Alliances in a Cartesian product built from alliances in its factors.
    Product {
        #[arg(long, value_name = "SPEC")]
        left: String,
        #[arg(long, value_name = "SPEC")]
        right: String,
        /// Threshold in the left factor.
        #[arg(short, allow_negative_numbers = true)]
        k: i64,
        /// Threshold in the right factor; adds the offensive construction.
        #[arg(long, allow_negative_numbers = true)]
        k2: Option<i64>,
        #[arg(long, value_enum, default_value = "oracle")]
        method: MethodName,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Run the verification checks; exits 1 if any check fails.
    #[command(group(ArgGroup::new("what").required(true).multiple(true).args(["corpus", "family", "case"])))]
    Verify {
        /// `random:n_max=9,count=200,seed=42` or `regular`. Repeatable.
        #[arg(long)]
        corpus: Vec<String>,
        /// `complete:10`, `cycle:12`, `path:12` or `bipartite:rmax=6`. Repeatable.
        #[arg(long)]
        family: Vec<String>,
        /// Named case, e.g. `c4xk4`. Repeatable.
        #[arg(long)]
        case: Vec<String>,
        /// Run only these corpus checks (comma-separated names).
        #[arg(long, value_delimiter = ',')]
        checks: Option<Vec<String>>,
        #[arg(long, default_value_t = DEFAULT_ORACLE_CAP)]
        cap: usize,
    },
    /// Write a generated graph as an edge list.
    Gen {
        spec: String,
        /// Write here and print a report instead of the edge list.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Output {
    Report(Finished),
    Text(String),
}

fn run(cli: Cli, argv: Vec<String>) -> anyhow::Result<Output> {
    let done = match cli.command {
        Command::Solve { input, k, method, offensive, global: _, cap } => {
            commands::solve(argv, &input, k, !offensive, method, cap)?
        }
        Command::Check { input, set, members, predicate, k, r, tau } => {
            let members = match (set, members) {
                (Some(path), _) => commands::read_set_file(&path)?,
                (None, Some(m)) => m,
                (None, None) => unreachable!("clap requires one of --set, --members"),
            };
            commands::check(argv, CheckArgs { input: &input, members, name: predicate, k, r, tau: tau.as_deref() })?
        }
        Command::Bounds { input, k, cap } => commands::bounds(argv, &input, k, cap)?,
        Command::Family { family, sizes, k, cap } => commands::family(argv, family, &sizes, k, cap)?,
        Command::Product { left, right, k, k2, method, cap } => {
            commands::product(argv, ProductArgs { left: &left, right: &right, k, k2, method, cap })?
        }
        Command::Verify { corpus, family, case, checks, cap } => commands::verify(
            argv,
            VerifyArgs { corpora: &corpus, families: &family, cases: &case, checks: checks.as_deref(), cap },
        )?,
        Command::Gen { spec, out } => match commands::generate(argv, &spec, out.as_ref())? {
            Generated::EdgeList(text) => return Ok(Output::Text(text)),
            Generated::Written(done) => done,
        },
    };
    Ok(Output::Report(done))
}

/// 2 for unreadable or malformed input, 3 for a well-formed request the
/// mathematics rejects (k out of range, oracle cap, no closed form), 1 for a
/// failed internal verification.
fn exit_code(err: &anyhow::Error) -> u8 {
    for cause in err.chain() {
        if let Some(e) = cause.downcast_ref::<Error>() {
            return match e {
                Error::Parse { .. }
                | Error::InvalidEdge { .. }
                | Error::InvalidParameter(_)
                | Error::InvalidTau(_)
                | Error::NegativeR(_) => 2,
                Error::VerificationFailed(_) => 1,
                _ => 3,
            };
        }
    }
    2
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).filter(|a| a != "--timing").collect();
    let cli = Cli::parse();
    let timing = cli.timing;
    let start = Instant::now();
    match run(cli, argv) {
        Ok(Output::Text(text)) => {
            // a closed pipe is not an error for a filter-style command
            let _ = io::stdout().lock().write_all(text.as_bytes());
            ExitCode::SUCCESS
        }
        Ok(Output::Report(mut done)) => {
            if timing {
                done.report.wall_time_ms = Some(start.elapsed().as_secs_f64() * 1e3);
            }
            let json = serde_json::to_string_pretty(&done.report.to_json()).expect("serializable");
            let _ = writeln!(io::stdout().lock(), "{json}");
            ExitCode::from(done.code)
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
