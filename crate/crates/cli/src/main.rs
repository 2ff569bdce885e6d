//! Command-line front end: compare acts, print preference matrices, query
//! nonmonotonic entailment, run verification suites, search for
//! counterexamples, and replay the built-in demos.
//!
//! Exit codes: 0 success/pass, 1 counterexample found (or search
//! exhausted), 2 usage or input errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ordec_cli::commands::{self, RuleArg};
use ordec_core::harness::SearchBounds;

#[derive(Debug, Parser)]
#[command(
    name = "ordec",
    version,
    about = "Ordinal decision engine: act comparison from comparative uncertainty, and exhaustive small-model axiom checks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Comparison rule
    #[arg(long, global = true, value_enum)]
    rule: Option<RuleArg>,

    /// Conditioning event literal, e.g. '{rotten}' (compare only)
    #[arg(long, global = true)]
    condition: Option<String>,

    /// Largest state-space size for sweeps and searches
    #[arg(long, global = true)]
    states: Option<usize>,

    /// Largest plausibility level (levels range over 0..=N)
    #[arg(long, global = true)]
    levels: Option<u8>,

    /// Number of consequences, ranks drawn from 0..N
    #[arg(long, global = true)]
    ranks: Option<u32>,

    /// Largest act tuple examined by searches
    #[arg(long, global = true)]
    acts: Option<usize>,

    /// Hard cap on enumerated instances per check
    #[arg(long, global = true)]
    ceiling: Option<u64>,

    /// Use the equal-plausibility profile (demo omelette)
    #[arg(long, global = true)]
    equal_pi: bool,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compare two acts from a problem file
    Compare {
        file: PathBuf,
        act1: String,
        act2: String,
    },
    /// Print the full pairwise preference matrix of a problem file
    Matrix { file: PathBuf },
    /// Nonmonotonic entailment between two event literals
    Nm {
        file: PathBuf,
        context: String,
        conclusion: String,
    },
    /// Run a verification suite over bounds, or on a problem file
    Check {
        #[arg(long)]
        suite: String,
        file: Option<PathBuf>,
    },
    /// Search for a counterexample witness within bounds
    Search { property: String },
    /// Replay a built-in worked example (omelette, condorcet)
    Demo { name: String },
}

impl Cli {
    fn bounds(&self) -> SearchBounds {
        let defaults = SearchBounds::default();
        SearchBounds {
            max_states: self.states.unwrap_or(defaults.max_states),
            max_levels: self.levels.unwrap_or(defaults.max_levels),
            max_ranks: self.ranks.unwrap_or(defaults.max_ranks),
            max_acts: self.acts.unwrap_or(defaults.max_acts),
            ceiling: self.ceiling.unwrap_or(defaults.ceiling),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::Compare { file, act1, act2 } => {
            commands::compare(file, act1, act2, cli.rule, cli.condition.as_deref())
        }
        Command::Matrix { file } => commands::matrix(file, cli.rule),
        Command::Nm {
            file,
            context,
            conclusion,
        } => commands::nm(file, context, conclusion),
        Command::Check { suite, file } => {
            commands::check(suite, file.as_deref(), &cli.bounds(), cli.rule)
        }
        Command::Search { property } => commands::search(property, &cli.bounds()),
        Command::Demo { name } => commands::demo(name, cli.rule, cli.equal_pi),
    };
    match outcome {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}
