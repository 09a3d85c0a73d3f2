//! `dombound`: explore dominance posets, Schur expansions of Chern monomials
//! and the chain lower bound from the command line.
//!
//! Exit status: 0 success, 1 verification failure or incomparable
//! endpoints, 2 usage error, 3 resource limit.

mod render;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use dombound::{Error, Execution, Partition, VerifyMode};

#[derive(Parser, Debug)]
#[command(name = "dombound", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output to PATH instead of stdout.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hasse diagram of Γ(n, r) from its maximum to (1^n).
    Hasse {
        #[arg(long)]
        n: u32,
        #[arg(long = "rank", short = 'r', alias = "r")]
        rank: Option<u32>,
    },
    /// Saturated chains between two comparable partitions.
    Chains {
        #[arg(long, value_parser = parse_partition)]
        from: Partition,
        #[arg(long, value_parser = parse_partition)]
        to: Partition,
        #[arg(long = "rank", short = 'r', alias = "r")]
        rank: Option<u32>,
        /// Only chains of maximal length.
        #[arg(long)]
        longest_only: bool,
        /// Fail instead of listing more than this many chains.
        #[arg(long, default_value_t = dombound::DEFAULT_CHAIN_LIMIT)]
        limit: usize,
    },
    /// The bound B(λ) with an attaining longest chain.
    Bound {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
    },
    /// Schur expansion of the monomial c_λ and its weight.
    Expand {
        #[arg(value_parser = parse_partition)]
        partition: Partition,
        #[arg(long = "rank", short = 'r', alias = "r")]
        rank: Option<u32>,
    },
    /// Run a verification sweep.
    Verify {
        #[arg(value_enum)]
        mode: Mode,
        #[arg(long)]
        n: Option<u32>,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long = "rank", short = 'r', alias = "r")]
        rank: Option<u32>,
        /// Run the sweep on one thread.
        #[arg(long)]
        sequential: bool,
        /// Include elapsed_ms in JSON output (otherwise null).
        #[arg(long)]
        timing: bool,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Mode {
    WeightBound,
    Dominance,
    CoverSteps,
}

impl From<Mode> for VerifyMode {
    fn from(m: Mode) -> Self {
        match m {
            Mode::WeightBound => VerifyMode::WeightBound,
            Mode::Dominance => VerifyMode::Dominance,
            Mode::CoverSteps => VerifyMode::CoverSteps,
        }
    }
}

fn parse_partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Domain(Error),
    Io(std::io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

const EXIT_VERIFY: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_LIMIT: u8 = 3;

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::NotComparable { .. } => EXIT_VERIFY,
        Error::LimitExceeded { .. } | Error::ArithmeticOverflow => EXIT_LIMIT,
        _ => EXIT_USAGE,
    }
}

struct Output {
    text: String,
    pass: bool,
}

fn run(cli: &Cli) -> Result<Output, Failure> {
    let format = cli.format;
    let no_dot = || {
        if format == Format::Dot {
            Err(Failure::Usage("--format dot is only available for hasse".into()))
        } else {
            Ok(())
        }
    };
    let text = match &cli.command {
        Command::Hasse { n, rank } => {
            if *n == 0 || *rank == Some(0) {
                return Err(Failure::Usage("n and rank must be positive".into()));
            }
            let r = rank.unwrap_or(*n);
            let top = dombound::max_element(*n, r);
            let bottom = dombound::min_element(*n);
            let iv = dombound::build_interval(&top, &bottom, r)?;
            match format {
                Format::Text => render::hasse_text(&iv, *n),
                Format::Json => render::json(&iv),
                Format::Dot => iv.to_dot(),
            }
        }
        Command::Chains {
            from,
            to,
            rank,
            longest_only,
            limit,
        } => {
            no_dot()?;
            let r = rank.unwrap_or(from.size());
            let iv = dombound::build_interval(from, to, r)?;
            let chains = if *longest_only {
                iv.longest_chains(Some(*limit))?
            } else {
                iv.maximal_chains(Some(*limit))?
            };
            match format {
                Format::Json => render::chains_json(&iv, *longest_only, &chains),
                _ => render::chains_text(&iv, *longest_only, &chains),
            }
        }
        Command::Bound { partition } => {
            no_dot()?;
            let cert = dombound::compute_b(partition)?;
            match format {
                Format::Json => render::json(&cert),
                _ => render::bound_text(&cert),
            }
        }
        Command::Expand { partition, rank } => {
            no_dot()?;
            let r = rank.unwrap_or(partition.size().max(1));
            let e = dombound::expand_monomial(partition, r)?;
            let w = e.weight()?;
            match format {
                Format::Json => render::expansion_json(partition, &e, w),
                _ => format!("c({partition}) = {e}\nW = {w}\n"),
            }
        }
        Command::Verify {
            mode,
            n,
            k,
            rank,
            sequential,
            timing,
        } => {
            no_dot()?;
            let degree = k.or(*n).ok_or_else(|| Failure::Usage("verify needs --n or --k".into()))?;
            let r = rank.unwrap_or(degree);
            let exec = if *sequential {
                Execution::Sequential
            } else {
                Execution::Parallel
            };
            let report = dombound::verify::run((*mode).into(), degree, r, exec)?;
            let text = match format {
                Format::Json => render::report_json(&report, *timing),
                _ => render::report_text(&report),
            };
            return Ok(Output {
                text,
                pass: report.all_pass,
            });
        }
    };
    Ok(Output { text, pass: true })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = run(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => fs::write(path, &out.text).map_err(Failure::Io)?,
            None => print!("{}", out.text),
        }
        Ok(out.pass)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(EXIT_VERIFY),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Domain(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
