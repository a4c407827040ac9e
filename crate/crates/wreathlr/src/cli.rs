//! Command-line driver.
//!
//! Partition syntax: `[3,2,1]` or `[]`; multipartitions are bracketed lists
//! of partitions, e.g. `[[2],[1,1],[]]`.

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};

use wreathlr_core::text::{parse_multipartition, parse_partition};
use wreathlr_core::{
    build_quiver, enumerate_lr_tableaux, induce_one_step, lr_coefficient, lr_expand,
    multipartitions_of, restrict_one_step, wreath_lr_expand, Decomposition, MultiPartition,
    Partition,
};

use crate::formats;
use crate::oracle::{BuiltinGroup, WreathOracle, DEFAULT_BUDGET};

const PARTITION_GRAMMAR: &str = "\
Partition syntax: a bracketed weakly decreasing list of positive integers,
e.g. `[3,2,1]`; the empty partition is `[]`. A multipartition is a bracketed
list of partitions with one entry per irreducible of F, e.g. `[[2],[1,1],[]]`.";

#[derive(Parser)]
#[command(name = "wreathlr", version, about = "Littlewood-Richardson coefficients, their wreath-product generalization, branching rules and quivers", after_help = PARTITION_GRAMMAR)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Classical LR coefficient c^gamma_{lambda,delta}, or the full
    /// expansion of the product when gamma is omitted.
    Lr {
        lambda: String,
        delta: String,
        gamma: Option<String>,
    },
    /// Wreath-product LR expansion of Phi_Lambda * Phi_Delta.
    WreathLr {
        lambda: String,
        delta: String,
        /// Emit the decomposition as JSON.
        #[arg(long)]
        json: bool,
    },
    /// One-step branching of Phi_Lambda between F wr S_n and F wr S_{n+1}.
    Branch {
        direction: Direction,
        lambda: String,
        /// Dimensions of the irreducibles of F, trivial first, e.g. `1,2,1`.
        #[arg(long, value_delimiter = ',', required = true)]
        dims: Vec<u32>,
        /// Emit the decomposition as JSON.
        #[arg(long)]
        json: bool,
    },
    /// The ordinary quiver of F wr FI_n for a group with l irreducibles.
    Quiver(QuiverArgs),
    /// Check a combinatorial rule against brute-force character theory.
    Verify(VerifyArgs),
    /// List the LR tableaux of shape gamma/lambda with content delta.
    Tableaux {
        gamma: String,
        lambda: String,
        delta: String,
    },
}

#[derive(Args)]
struct QuiverArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    l: usize,
    /// Emit the quiver in DOT format.
    #[arg(long, conflicts_with = "json")]
    dot: bool,
    /// Emit the quiver as JSON.
    #[arg(long)]
    json: bool,
    /// Print the number of connected components.
    #[arg(long)]
    components: bool,
}

#[derive(Args)]
struct VerifyArgs {
    /// Builtin base group: C2, C3, C4, C5, C6 or S3.
    #[arg(long, conflicts_with = "group_file")]
    group: Option<String>,
    /// JSON file with a custom group and its irreducibles.
    #[arg(long)]
    group_file: Option<String>,
    #[arg(long, value_enum)]
    mode: VerifyMode,
    /// Weight for the branch, quiver-arrows and orthonormality modes.
    #[arg(long)]
    n: Option<u32>,
    /// Left weight for the lr mode.
    #[arg(long)]
    k: Option<u32>,
    /// Right weight for the lr mode.
    #[arg(long)]
    r: Option<u32>,
    /// Cap on the order of any constructed group.
    #[arg(long, default_value_t = DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Clone, Copy, ValueEnum)]
enum VerifyMode {
    Lr,
    Branch,
    QuiverArrows,
    Orthonormality,
}

#[derive(Clone, Copy, ValueEnum)]
enum Direction {
    Up,
    Down,
}

/// Failure modes of a run, with their process exit codes.
pub enum CliError {
    /// Bad input: exit code 1.
    Validation(String),
    /// A verification run found a mismatch: exit code 2.
    VerificationFailed,
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(msg) => write!(f, "error: {msg}"),
            CliError::VerificationFailed => write!(f, "verification failed"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 1,
            CliError::VerificationFailed => 2,
        }
    }
}

fn validation(e: impl fmt::Display) -> CliError {
    CliError::Validation(e.to_string())
}

fn partition(input: &str) -> Result<Partition, CliError> {
    parse_partition(input).map_err(validation)
}

fn multipartition(input: &str) -> Result<MultiPartition, CliError> {
    parse_multipartition(input).map_err(validation)
}

fn print_decomposition(d: &Decomposition, json: bool) {
    if json {
        println!("{}", formats::decomposition_to_json(d));
    } else if d.is_empty() {
        println!("0");
    } else {
        println!("{d}");
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Lr {
            lambda,
            delta,
            gamma,
        } => {
            let lambda = partition(&lambda)?;
            let delta = partition(&delta)?;
            match gamma {
                Some(gamma) => {
                    println!("{}", lr_coefficient(&lambda, &delta, &partition(&gamma)?));
                }
                None => {
                    for (gamma, mult) in lr_expand(&lambda, &delta) {
                        println!("{mult} x {gamma}");
                    }
                }
            }
            Ok(())
        }
        Command::WreathLr {
            lambda,
            delta,
            json,
        } => {
            let d = wreath_lr_expand(&multipartition(&lambda)?, &multipartition(&delta)?)
                .map_err(validation)?;
            print_decomposition(&d, json);
            Ok(())
        }
        Command::Branch {
            direction,
            lambda,
            dims,
            json,
        } => {
            let lambda = multipartition(&lambda)?;
            let d = match direction {
                Direction::Up => induce_one_step(&lambda, &dims),
                Direction::Down => restrict_one_step(&lambda, &dims),
            }
            .map_err(validation)?;
            print_decomposition(&d, json);
            Ok(())
        }
        Command::Quiver(args) => {
            if args.l == 0 {
                return Err(CliError::Validation(
                    "the component count --l must be positive".to_string(),
                ));
            }
            let q = build_quiver(args.n, args.l);
            if args.dot {
                print!("{}", formats::quiver_to_dot(&q));
            } else if args.json {
                println!("{}", formats::quiver_to_json(&q));
            } else {
                println!(
                    "{} vertices, {} arrows",
                    q.vertices().len(),
                    q.arrows().len()
                );
                for (i, mp) in q.vertices().iter().enumerate() {
                    println!("v{i}: {mp}");
                }
                for &(src, dst) in q.arrows() {
                    println!("v{src} -> v{dst}");
                }
            }
            if args.components {
                println!("connected components: {}", q.connected_components());
            }
            Ok(())
        }
        Command::Verify(args) => verify(args),
        Command::Tableaux {
            gamma,
            lambda,
            delta,
        } => {
            let tableaux = enumerate_lr_tableaux(
                &partition(&gamma)?,
                &partition(&lambda)?,
                &partition(&delta)?,
            )
            .map_err(validation)?;
            println!("{} tableaux", tableaux.len());
            for t in &tableaux {
                println!("{t}");
            }
            Ok(())
        }
    }
}

fn verify(args: VerifyArgs) -> Result<(), CliError> {
    let mut oracle = match (&args.group, &args.group_file) {
        (Some(name), None) => {
            let name = BuiltinGroup::from_str(name).map_err(validation)?;
            WreathOracle::from_builtin(name, args.budget).map_err(validation)?
        }
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(validation)?;
            let value: serde_json::Value = serde_json::from_str(&text).map_err(validation)?;
            let (group, irreps) = formats::group_from_json(&value).map_err(validation)?;
            WreathOracle::new(group, irreps, args.budget).map_err(validation)?
        }
        _ => {
            return Err(CliError::Validation(
                "exactly one of --group and --group-file is required".to_string(),
            ))
        }
    };
    let l = oracle.l();
    let need = |opt: Option<u32>, flag: &str| {
        opt.ok_or_else(|| CliError::Validation(format!("--{flag} is required for this mode")))
    };
    let mut reports = Vec::new();
    match args.mode {
        VerifyMode::Lr => {
            let k = need(args.k, "k")?;
            let r = need(args.r, "r")?;
            for lambda in multipartitions_of(k, l) {
                for delta in multipartitions_of(r, l) {
                    reports.push(
                        oracle
                            .verify_wreath_lr(&lambda, &delta)
                            .map_err(validation)?,
                    );
                }
            }
        }
        VerifyMode::Branch => {
            let n = need(args.n, "n")?;
            for lambda in multipartitions_of(n, l) {
                reports.push(oracle.verify_induce_one_step(&lambda).map_err(validation)?);
                if n >= 1 {
                    reports.push(
                        oracle
                            .verify_restrict_one_step(&lambda)
                            .map_err(validation)?,
                    );
                }
            }
        }
        VerifyMode::QuiverArrows => {
            let n = need(args.n, "n")?;
            for lambda in multipartitions_of(n, l) {
                reports.push(oracle.verify_quiver_arrows(&lambda).map_err(validation)?);
            }
        }
        VerifyMode::Orthonormality => {
            let n = need(args.n, "n")?;
            reports.push(oracle.verify_orthonormality(n).map_err(validation)?);
        }
    }
    let mut all_passed = true;
    for report in &reports {
        print!("{report}");
        all_passed &= report.passed;
    }
    println!(
        "{} of {} checks passed",
        reports.iter().filter(|r| r.passed).count(),
        reports.len()
    );
    if all_passed {
        Ok(())
    } else {
        Err(CliError::VerificationFailed)
    }
}
