//! `parideal`: enumeration, counting, verification suites and
//! classification from the command line.
//!
//! Exit codes: 0 success, 1 a verification claim failed, 2 usage error,
//! 3 scale cap exceeded. `PARIDEAL_THREADS` caps the worker pool.

mod output;

use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use parideal::poset::{enumerate_j_antichains_with, NodeSet};
use parideal::suites::{run_suite, Caps, Suite};
use parideal::{Error, Exec, RootSystem, RootSystemSpec};

#[derive(Parser)]
#[command(
    name = "parideal",
    version,
    about = "Ad-nilpotent ideals of parabolic subalgebras"
)]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Pretty, global = true)]
    format: Format,

    /// Run on the current thread only.
    #[arg(long, global = true)]
    sequential: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Pretty,
}

#[derive(Args)]
struct SystemArgs {
    /// Cartan type: A, B, C, D, E, F or G.
    #[arg(long = "type")]
    family: String,
    #[arg(long)]
    rank: usize,
}

impl SystemArgs {
    fn build(&self) -> parideal::Result<RootSystem> {
        let spec: RootSystemSpec = format!("{}{}", self.family.trim(), self.rank).parse()?;
        Ok(RootSystem::new(spec))
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the positive roots.
    Roots {
        #[command(flatten)]
        system: SystemArgs,
        /// Also print ε-coordinates (classical types).
        #[arg(long)]
        epsilon: bool,
    },
    /// Enumerate J-antichains.
    Antichains {
        #[command(flatten)]
        system: SystemArgs,
        /// Node labels of J, comma separated (1-based).
        #[arg(long = "J", value_delimiter = ',')]
        j: Vec<usize>,
        /// Only antichains whose ideal is abelian.
        #[arg(long)]
        abelian: bool,
        /// Only antichains of this size.
        #[arg(long)]
        size: Option<usize>,
    },
    /// Run a verification suite.
    Verify {
        #[arg(long, value_parser = parse_suite)]
        suite: Suite,
        #[command(flatten)]
        system: SystemArgs,
        /// Rank limit for suites that walk every J.
        #[arg(long)]
        max_rank: Option<usize>,
        /// Root-count limit for the subset exhaustion and classification.
        #[arg(long)]
        max_roots: Option<usize>,
    },
    /// List every set S satisfying the equivalent conditions, with labels.
    Classify {
        #[command(flatten)]
        system: SystemArgs,
        #[arg(long)]
        max_roots: Option<usize>,
    },
}

fn parse_suite(s: &str) -> Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

enum Failure {
    Usage(String),
    Scale(String),
    Io(io::Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::ScaleCap(_) => Failure::Scale(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Failure::Io(e)
    }
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var("PARIDEAL_THREADS") else {
        return Ok(());
    };
    let n: usize = value
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| {
            Failure::Usage(format!(
                "PARIDEAL_THREADS must be a positive integer, got `{value}`"
            ))
        })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure::Usage(e.to_string()))
}

/// Returns whether every checked claim passed.
fn run(cli: Cli, out: &mut dyn Write) -> Result<bool, Failure> {
    configure_threads()?;
    let exec = if cli.sequential {
        Exec::Sequential
    } else {
        Exec::default()
    };
    match cli.command {
        Command::Roots { system, epsilon } => {
            let rs = system.build()?;
            output::roots(out, cli.format, &rs, epsilon)?;
            Ok(true)
        }
        Command::Antichains {
            system,
            j,
            abelian,
            size,
        } => {
            let rs = system.build()?;
            let j = NodeSet::from_labels(rs.rank(), &j)?;
            let list = enumerate_j_antichains_with(&rs, &j, abelian, size, exec);
            output::antichains(out, cli.format, &rs, &j, abelian, size, &list)?;
            Ok(true)
        }
        Command::Verify {
            suite,
            system,
            max_rank,
            max_roots,
        } => {
            let rs = system.build()?;
            let mut caps = Caps::default();
            if let Some(r) = max_rank {
                caps.max_rank = r;
            }
            if let Some(r) = max_roots {
                caps.theorem2_max_roots = r;
                caps.classification_max_roots = r;
            }
            let report = run_suite(&rs, suite, &caps, exec)?;
            output::report(out, cli.format, &report)?;
            Ok(report.passed)
        }
        Command::Classify { system, max_roots } => {
            let rs = system.build()?;
            let cap = max_roots.unwrap_or(Caps::default().classification_max_roots);
            if rs.num_roots() > cap {
                return Err(Failure::Scale(format!(
                    "scale cap exceeded: {} has {} roots, classification is capped at {cap}",
                    rs.spec(),
                    rs.num_roots()
                )));
            }
            let c = parideal::irreducible::classify(&rs, exec)?;
            output::classification(out, cli.format, &rs, &c)?;
            Ok(c.claims.iter().all(|r| r.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let result = run(cli, &mut out).and_then(|ok| {
        out.flush()?;
        Ok(ok)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Scale(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
        Err(Failure::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(Failure::Io(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
