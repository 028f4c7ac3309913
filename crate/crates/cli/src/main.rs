//! `bwbcalc`: cohomology of bundles on projective space and E₁-page
//! verdicts for the A₂ jet loci.
//!
//! Exit codes: 0 success, 1 reproduction mismatch, 2 usage or input error.

mod grid;
mod report;
mod reproduce;
mod text;

use std::path::PathBuf;
use std::process::ExitCode;

use bwbcalc::{BundleExpr, Partition, Stage};
use clap::{ArgAction, Parser, Subcommand, ValueEnum};
use serde_json::Value;

#[derive(Parser, Debug)]
#[command(
    name = "bwbcalc",
    version,
    about = "Borel-Weil-Bott cohomology and E1-page analysis"
)]
struct Cli {
    /// Output format. Defaults to $BWBCALC_FORMAT, then text.
    #[arg(
        long,
        global = true,
        value_enum,
        env = "BWBCALC_FORMAT",
        default_value = "text"
    )]
    format: Format,
    /// Shorthand for --format json.
    #[arg(long, global = true)]
    json: bool,
    /// Also write the JSON report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    output: Option<PathBuf>,
    /// Show more detail in text output (repeatable).
    #[arg(short, long, global = true, action = ArgAction::Count)]
    verbose: u8,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Cohomology of Σ^λQ ⊗ L^m on P^{n-1}.
    Bwb {
        #[arg(long)]
        n: usize,
        /// Comma-separated parts; "" is the empty partition.
        #[arg(long, value_parser = parse_partition, default_value = "")]
        lambda: Partition,
        #[arg(long, allow_negative_numbers = true, default_value_t = 0)]
        m: i64,
    },
    /// Normalize a bundle expression and compute its cohomology.
    Decompose {
        #[arg(long)]
        n: usize,
        /// Prefix-form expression, e.g. "tensor Q (sym 2 Q) L^5".
        #[arg(value_parser = parse_expr)]
        expr: BundleExpr,
    },
    /// List the terms of a resolution complex.
    Resolve {
        #[command(flatten)]
        params: ParamArgs,
        #[arg(long, value_enum, default_value = "base")]
        stage: StageArg,
        /// Include the E1 page.
        #[arg(long)]
        page: bool,
    },
    /// Decide whether higher cohomology of F_l vanishes.
    Rationality {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        #[arg(long, required_unless_present = "sweep")]
        l: Option<usize>,
        /// Sweep every l from 0 to LMAX instead of a single l.
        #[arg(long, value_name = "LMAX", conflicts_with = "l")]
        sweep: Option<usize>,
    },
    /// Decide whether anything can obstruct the edge map onto H^0(F_l).
    Normality {
        #[command(flatten)]
        params: ParamArgs,
    },
    /// Rerun a known case and check the expected verdict.
    Reproduce {
        #[arg(value_enum)]
        case: reproduce::Case,
    },
}

#[derive(clap::Args, Debug)]
struct ParamArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    k: usize,
    #[arg(long)]
    l: usize,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum StageArg {
    #[value(alias = "1")]
    Fiber,
    #[value(alias = "2")]
    Base,
}

impl From<StageArg> for Stage {
    fn from(s: StageArg) -> Stage {
        match s {
            StageArg::Fiber => Stage::Fiber,
            StageArg::Base => Stage::Base,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: bwbcalc::Error| e.to_string())
}

fn parse_expr(s: &str) -> Result<BundleExpr, String> {
    s.parse().map_err(|e: bwbcalc::Error| e.to_string())
}

enum Outcome {
    Ok(Value),
    Mismatch(Value),
}

fn run(cli: &Cli) -> bwbcalc::Result<Outcome> {
    Ok(match &cli.command {
        Command::Bwb { n, lambda, m } => Outcome::Ok(report::bwb(*n, lambda, *m)?),
        Command::Decompose { n, expr } => Outcome::Ok(report::decompose(expr, *n)?),
        Command::Resolve {
            params,
            stage,
            page,
        } => Outcome::Ok(report::resolve(
            params.n,
            params.k,
            params.l,
            (*stage).into(),
            *page,
        )?),
        Command::Rationality { n, k, l, sweep } => Outcome::Ok(match (sweep, l) {
            (Some(l_max), _) => report::sweep(*n, *k, *l_max)?,
            (None, l) => report::rationality(*n, *k, l.unwrap_or_default())?,
        }),
        Command::Normality { params } => {
            Outcome::Ok(report::normality(params.n, params.k, params.l)?)
        }
        Command::Reproduce { case } => {
            let (passed, value) = reproduce::run(*case)?;
            if passed {
                Outcome::Ok(value)
            } else {
                Outcome::Mismatch(value)
            }
        }
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match run(&cli) {
        Ok(outcome) => outcome,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let (value, code) = match outcome {
        Outcome::Ok(v) => (v, ExitCode::SUCCESS),
        Outcome::Mismatch(v) => (v, ExitCode::from(1)),
    };
    let json = serde_json::to_string_pretty(&value).expect("reports serialize");
    if let Some(path) = &cli.output {
        if let Err(e) = std::fs::write(path, format!("{json}\n")) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    if cli.json || cli.format == Format::Json {
        println!("{json}");
    } else {
        print!("{}", text::render(&value, cli.verbose));
    }
    code
}
