//! `homlat`: homomorphism orders and homomorphism lattices of finite
//! algebras, from the command line.

mod commands;
mod dot;
mod error;
mod files;
mod fixtures;
mod verify;

use clap::{Parser, Subcommand};
use commands::budget_from;
use error::CliError;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "homlat",
    about = "Homomorphism orders and lattices of finite algebras",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the covering forest of a poset
    Forest {
        /// Poset file (or builtin:NAME)
        poset: String,
        /// Emit the forest order as a DOT Hasse diagram
        #[arg(long)]
        dot: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
        /// Accept redundant (non-cover) pairs and reduce them
        #[arg(long)]
        reduce: bool,
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Synthesize the quasi-primal algebra of a non-empty poset
    Synth {
        /// Poset file (or builtin:NAME)
        poset: String,
        /// Accept redundant (non-cover) pairs and reduce them
        #[arg(long)]
        reduce: bool,
        /// Write the algebra file here instead of stdout
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Compute the homomorphism lattice of a quasi-primal algebra
    Homlattice {
        /// Algebra file (or builtin:NAME)
        algebra: String,
        /// Assert quasi-primality of a foreign algebra (not checked)
        #[arg(long)]
        assume_quasiprimal: bool,
        /// Emit the lattice as a DOT Hasse diagram
        #[arg(long)]
        dot: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Run a verification pipeline
    Verify {
        #[command(subcommand)]
        suite: VerifySuite,
    },
    /// Compute the congruence lattice of an algebra
    Con {
        /// Algebra file (or builtin:NAME)
        algebra: String,
        /// Emit the lattice as a DOT Hasse diagram
        #[arg(long)]
        dot: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Search for a homomorphism between two algebras
    Hom {
        /// Source algebra file (or builtin:NAME)
        source: String,
        /// Target algebra file (or builtin:NAME)
        target: String,
        /// Print the exact number of homomorphisms instead
        #[arg(long)]
        count: bool,
        /// Machine-readable output
        #[arg(long)]
        json: bool,
    },
    /// Compute the core (minimal retract) of an algebra
    Core {
        /// Algebra file (or builtin:NAME)
        algebra: String,
        /// Print the core as an algebra file
        #[arg(long)]
        json: bool,
    },
    /// List builtin fixtures, or print one as a file
    Fixtures {
        /// Fixture name
        name: Option<String>,
    },
}

#[derive(Subcommand)]
enum VerifySuite {
    /// Synthesize and check the lattice round trip on all small posets
    Roundtrip {
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Reproduce the worked figures
    Figures {
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
    /// Check the worked examples
    Examples {
        /// Override all enumeration caps
        #[arg(long)]
        budget: Option<usize>,
    },
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Forest {
            poset,
            dot,
            json,
            reduce,
            budget,
        } => commands::cmd_forest(&poset, dot, json, reduce, budget),
        Command::Synth {
            poset,
            reduce,
            output,
            budget,
        } => commands::cmd_synth(&poset, reduce, output.as_deref(), budget),
        Command::Homlattice {
            algebra,
            assume_quasiprimal,
            dot,
            json,
            budget,
        } => commands::cmd_homlattice(&algebra, assume_quasiprimal, dot, json, budget),
        Command::Verify { suite } => match suite {
            VerifySuite::Roundtrip { budget } => verify::run_roundtrip(&budget_from(budget)),
            VerifySuite::Figures { budget } => verify::run_figures(&budget_from(budget)),
            VerifySuite::Examples { budget } => verify::run_examples(&budget_from(budget)),
        },
        Command::Con {
            algebra,
            dot,
            json,
            budget,
        } => commands::cmd_con(&algebra, dot, json, budget),
        Command::Hom {
            source,
            target,
            count,
            json,
        } => commands::cmd_hom(&source, &target, count, json),
        Command::Core { algebra, json } => commands::cmd_core(&algebra, json),
        Command::Fixtures { name } => commands::cmd_fixtures(name.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(output) => {
            print!("{output}");
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {}", err.message());
            ExitCode::from(err.exit_code())
        }
    }
}
