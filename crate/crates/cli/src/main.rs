//! `z2tk`: batch driver for the verification suite.
//!
//! Exit codes: 0 success, 2 a checked claim failed, 64 bad arguments,
//! 70 internal error, 74 output could not be written.

mod commands;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use z2susy::mech::LagrangianId;
use z2susy::modtools::ProbeBlock;
use z2susy::GaussianRational;

pub const EXIT_FAILURE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_SOFTWARE: u8 = 70;
pub const EXIT_IO: u8 = 74;

#[derive(Parser, Debug)]
#[command(name = "z2tk", version, about = "Exact verification of the Z2xZ2-graded N=2 supersymmetry algebra")]
pub struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum RepName {
    #[value(name = "DE")]
    De,
    #[value(name = "DEl")]
    Del,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check the 21 defining relations and the Casimir on D(E) or D(E,lam).
    VerifyRelations {
        #[arg(long, value_enum)]
        rep: RepName,
    },
    /// Change to the block bases, check closure and diff the action tables.
    Decompose {
        #[arg(long, value_enum, default_value = "DEl")]
        rep: RepName,
        /// Also extract the two 4-dim irreps on the lam = E^2 locus.
        #[arg(long = "lambda-eq-E2")]
        lambda_eq_e2: bool,
    },
    /// Closure dimension of c1*v1 + c2*v2 in D1 or D2 over a panel.
    Probe(ProbeArgs),
    /// Intertwiner dimensions between the blocks.
    Intertwine(PointArgs),
    /// Invariance, equations of motion and Noether charges.
    Mechanics(MechanicsArgs),
    /// Print the generator matrices of D(E) or D(E,lam).
    Dump {
        #[arg(long, value_enum)]
        rep: RepName,
    },
    /// Run every acceptance check and aggregate the findings.
    All,
}

#[derive(Args, Debug)]
pub struct PointArgs {
    /// Specialize E to this Gaussian rational (`a/b+c/d*i`).
    #[arg(long = "E", allow_hyphen_values = true)]
    pub e: Option<GaussianRational>,
    /// Specialize lam to this Gaussian rational.
    #[arg(long = "lambda", allow_hyphen_values = true)]
    pub lambda: Option<GaussianRational>,
}

#[derive(Args, Debug)]
pub struct ProbeArgs {
    /// D1 or D2; both when absent.
    #[arg(long)]
    pub block: Option<ProbeBlock>,
    #[command(flatten)]
    pub point: PointArgs,
    /// Seed coefficients `c1,c2`; the reference seed when absent.
    #[arg(long, allow_hyphen_values = true)]
    pub seed: Option<String>,
}

#[derive(Args, Debug)]
pub struct MechanicsArgs {
    /// Catalogue Lagrangian: L0, L1, L2, L3, L4 or Lg.
    #[arg(long = "L", conflicts_with = "action1")]
    pub lagrangian: Option<LagrangianId>,
    /// Build L = Z Q10d Q10 Q01d Q01 g.
    #[arg(long)]
    pub action1: bool,
    /// The degree-(1,1) prepotential for --action1.
    #[arg(long, requires = "action1", default_value = "mu*x*xbar")]
    pub g: String,
    /// Report charges after eliminating auxiliary variables.
    #[arg(long = "on-shell")]
    pub on_shell: bool,
}

/// What a command produced.
pub struct Outcome {
    pub ok: bool,
    pub json: serde_json::Value,
    pub text: String,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let outcome = match commands::run(&cli.command) {
        Ok(o) => o,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(EXIT_USAGE);
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            return ExitCode::from(EXIT_SOFTWARE);
        }
    };
    let body = match cli.format {
        Format::Json => {
            let envelope = serde_json::json!({
                "command": commands::name(&cli.command),
                "ok": outcome.ok,
                "report": outcome.json,
            });
            serde_json::to_string_pretty(&envelope).expect("report serializes") + "\n"
        }
        Format::Text => outcome.text,
    };
    let written = match &cli.output {
        Some(path) => std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display())),
        None => {
            print!("{body}");
            Ok(())
        }
    };
    if let Err(msg) = written {
        eprintln!("error: {msg}");
        return ExitCode::from(EXIT_IO);
    }
    if outcome.ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAILURE)
    }
}
