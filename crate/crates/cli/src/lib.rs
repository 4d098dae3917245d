//! Command-line interface for the root-space library.
//!
//! Every command is deterministic: the same invocation always produces
//! byte-identical output.  Exit codes: 0 on success, 1 when a verification
//! or enumeration refuses/fails, 2 for usage and parse errors.

pub mod commands;
pub mod render;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use commands::{usage, CmdError};

/// Captured result of one invocation.
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

#[derive(Parser)]
#[command(
    name = "rootspace",
    version,
    about = "Root-space structure of the compact classical Lie algebras",
    disable_help_subcommand = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the full bracket table over the named basis
    Table {
        /// Family: su, so, or sp (so takes the matrix dimension)
        family: String,
        /// Parameter: su N, sp N, or the matrix dimension for so
        n: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Print the root spaces, dual roots, and root functionals
    Roots {
        family: String,
        n: usize,
        /// Emit the root system as JSON
        #[arg(long)]
        json: bool,
    },
    /// Compute the Weyl group order and optionally list the elements
    Weyl {
        family: String,
        n: usize,
        /// Largest group order that will be enumerated
        #[arg(long, default_value_t = 50_000)]
        cap: usize,
        /// List every element as a permutation of the roots
        #[arg(long)]
        elements: bool,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Find a base and expand every positive root over it
    Base {
        family: String,
        n: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Draw the Dynkin diagram, classify, and compare systems
    Dynkin {
        /// Family: su, so, or sp (omit when using --file)
        family: Option<String>,
        /// Parameter (omit when using --file)
        n: Option<usize>,
        /// Load the root system from a JSON file instead
        #[arg(long, value_name = "PATH", conflicts_with_all = ["family", "n"])]
        file: Option<String>,
        /// Compare against a second algebra
        #[arg(long, num_args = 2, value_names = ["FAMILY", "N"])]
        compare: Option<Vec<String>>,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Run the verification suites against one algebra
    Verify {
        family: String,
        n: usize,
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Catalog the rank-2 root systems and their equivalences
    Rank2 {
        /// Emit JSON instead of text
        #[arg(long)]
        json: bool,
    },
}

/// Parses and runs one invocation; never panics, never touches the process.
pub fn execute(args: &[&str]) -> Outcome {
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code: 0,
                },
                _ => Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code: 2,
                },
            };
        }
    };
    match run(cli.command) {
        Ok((stdout, code)) => Outcome { stdout, stderr: String::new(), code },
        Err(e) => Outcome {
            stdout: String::new(),
            stderr: format!("error: {}\n", e.message),
            code: e.code,
        },
    }
}

fn run(cmd: Command) -> Result<(String, i32), CmdError> {
    match cmd {
        Command::Table { family, n, json } => {
            let alg = commands::resolve_algebra(&family, n)?;
            commands::cmd_table(&alg, json).map(|s| (s, 0))
        }
        Command::Roots { family, n, json } => {
            let alg = commands::resolve_algebra(&family, n)?;
            commands::cmd_roots(&alg, json).map(|s| (s, 0))
        }
        Command::Weyl { family, n, cap, elements, json } => {
            let alg = commands::resolve_algebra(&family, n)?;
            commands::cmd_weyl(&alg, cap, elements, json).map(|s| (s, 0))
        }
        Command::Base { family, n, json } => {
            let alg = commands::resolve_algebra(&family, n)?;
            commands::cmd_base(&alg, json).map(|s| (s, 0))
        }
        Command::Dynkin { family, n, file, compare, json } => {
            let primary = match (family, n, file) {
                (Some(f), Some(n), None) => commands::source_from_family(&f, n)?,
                (None, None, Some(path)) => commands::source_from_file(&path)?,
                _ => {
                    return Err(usage(
                        "dynkin needs either FAMILY N or --file PATH",
                    ))
                }
            };
            let cmp = match compare {
                None => None,
                Some(v) => {
                    let n: usize = v[1].parse().map_err(|_| {
                        usage(format!("--compare parameter '{}' is not a number", v[1]))
                    })?;
                    Some(commands::source_from_family(&v[0], n)?)
                }
            };
            commands::cmd_dynkin(primary, cmp, json).map(|s| (s, 0))
        }
        Command::Verify { family, n, json } => {
            let alg = commands::resolve_algebra(&family, n)?;
            commands::cmd_verify(&alg, json)
        }
        Command::Rank2 { json } => commands::cmd_rank2(json).map(|s| (s, 0)),
    }
}
