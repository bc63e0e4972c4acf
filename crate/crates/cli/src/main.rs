use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use chern_descent_cli::commands::{
    cmd_chain, cmd_check, cmd_verify, render_human, ChainOptions, CheckOptions, Target,
    VerifyOptions, MAX_VERIFY_BOUND,
};
use chern_descent_cli::{exit, CliError};
use chern_descent_core::gate::{Assumptions, Theorem};

#[derive(Parser)]
#[command(
    name = "chern-descent",
    version,
    about = "Exact Chern-character descent along chains of minimal rational curves"
)]
struct Cli {
    /// Emit the machine-readable JSON report instead of tables.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check the coefficient identities and composition sums.
    Verify {
        /// Highest chain level whose coefficients are checked.
        #[arg(long, default_value_t = 12, value_name = "I")]
        max_i: usize,
        /// Highest n for the composition-sum identity.
        #[arg(long, default_value_t = 12, value_name = "N")]
        max_n: usize,
        #[arg(long, hide = true)]
        inject_flipped_b1: bool,
    },
    /// Descend a chain of manifolds and report N.
    Chain {
        #[command(flatten)]
        target: TargetArgs,
        /// Comma-separated degrees of the minimal families, one per step.
        #[arg(long, value_delimiter = ',', value_name = "D1,D2,...")]
        degrees: Option<Vec<u32>>,
    },
    /// Test a theorem's Chern-character hypothesis and its proof certificate.
    Check {
        #[command(flatten)]
        target: TargetArgs,
        #[arg(long, value_enum)]
        theorem: TheoremArg,
        /// Order to test; when omitted the largest passing order is reported.
        #[arg(long)]
        m: Option<usize>,
        /// Assume (for --input) that X is covered by lines.
        #[arg(long)]
        degree_one_cover: bool,
        /// Assume (for --input) that every minimal family in the chain has degree 1.
        #[arg(long)]
        all_degree_one: bool,
    },
}

#[derive(Args)]
struct TargetArgs {
    /// projective_space N | quadric N | grassmannian K M
    #[arg(
        value_name = "MANIFOLD",
        conflicts_with = "input",
        required_unless_present = "input"
    )]
    words: Vec<String>,
    /// Split Chern vector file: a dimension line, then r_1 .. r_n.
    #[arg(long, value_name = "FILE")]
    input: Option<PathBuf>,
}

impl TargetArgs {
    fn target(&self) -> Result<Target, CliError> {
        match &self.input {
            Some(path) => Ok(Target::File(path.clone())),
            None => Target::from_words(&self.words),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum TheoremArg {
    Thm4,
    Thm5,
    #[value(name = "thm5-strong")]
    Thm5Strong,
}

impl From<TheoremArg> for Theorem {
    fn from(t: TheoremArg) -> Theorem {
        match t {
            TheoremArg::Thm4 => Theorem::Thm4,
            TheoremArg::Thm5 => Theorem::Thm5,
            TheoremArg::Thm5Strong => Theorem::Thm5Strong,
        }
    }
}

fn run(cli: &Cli) -> Result<chern_descent_cli::report::RunReport, CliError> {
    match &cli.command {
        Command::Verify {
            max_i,
            max_n,
            inject_flipped_b1,
        } => cmd_verify(&VerifyOptions {
            max_i: *max_i,
            max_n: *max_n,
            flip_b1: *inject_flipped_b1,
        }),
        Command::Chain { target, degrees } => cmd_chain(&ChainOptions {
            target: target.target()?,
            degrees: degrees.clone(),
        }),
        Command::Check {
            target,
            theorem,
            m,
            degree_one_cover,
            all_degree_one,
        } => cmd_check(&CheckOptions {
            target: target.target()?,
            theorem: (*theorem).into(),
            m: *m,
            assumptions: Assumptions {
                degree_one_cover: *degree_one_cover,
                every_family_degree_one: *all_degree_one,
            },
        }),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(report) => {
            if cli.json {
                print!("{}", report.to_json());
            } else {
                print!("{}", render_human(&report));
            }
            ExitCode::from(report.exit_status as u8)
        }
        Err(err) => {
            eprintln!("error: {err}");
            if matches!(err, CliError::Usage(_)) && err.to_string().contains("--max-") {
                eprintln!("(both bounds are capped at {MAX_VERIFY_BOUND})");
            }
            ExitCode::from(exit::USAGE as u8)
        }
    }
}
