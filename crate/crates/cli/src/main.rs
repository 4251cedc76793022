mod commands;
mod input;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

#[derive(Parser)]
#[command(name = "geodex", version, about = "Arc and geodesic transitivity, primitivity and normal quotients of finite graphs")]
struct Cli {
    /// Output format. `graph6` and `sparse6` apply to `atlas get` only.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Graph6,
    Sparse6,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false)]
pub struct Input {
    /// Catalog name, e.g. foster, K3,3 or C8.
    #[arg(long)]
    atlas: Option<String>,
    /// Graph file: edge-list JSON, graph6, sparse6 or an LCF string.
    #[arg(long)]
    graph: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Browse the catalog of named graphs.
    Atlas {
        #[command(subcommand)]
        action: AtlasAction,
    },
    /// Girth, diameter, intersection array and shape.
    Analyze {
        #[command(flatten)]
        input: Input,
    },
    /// Automorphism group.
    Aut {
        #[command(flatten)]
        input: Input,
    },
    /// Arc and geodesic transitivity degrees of a group action.
    Transitivity {
        #[command(flatten)]
        input: Input,
        /// Group file (JSON); defaults to the full automorphism group.
        #[arg(long)]
        group: Option<PathBuf>,
        /// Also test this level and run the stabilizer check when s >= 4.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        s: Option<u64>,
        /// Scan every geodesic level instead of stopping once b_s <= 1.
        #[arg(long)]
        no_shortcut: bool,
    },
    /// Normal quotient by N, with the girth bound check.
    Quotient {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        group: Option<PathBuf>,
        /// Group file for N, or `minimal:<i>` for the i-th minimal normal
        /// subgroup of G. Without it the minimal normal subgroups are listed.
        #[arg(long)]
        normal: Option<String>,
        /// Defaults to girth/2 + 1, the level whose girth window holds.
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        s: Option<u64>,
        /// Also run the full reduction and emit its verdict.
        #[arg(long)]
        reduce: bool,
    },
    /// Run the built-in checks; exits 1 if any fails.
    Verify {
        #[arg(value_enum, default_value_t = Suite::Claims)]
        suite: Suite,
    },
}

#[derive(Subcommand)]
enum AtlasAction {
    List,
    Get { name: String },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Suite {
    Claims,
    #[value(name = "paper")]
    Full,
}

/// A failure carrying its exit code.
pub struct Failure {
    pub kind: &'static str,
    pub message: String,
    pub code: u8,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure { kind: "usage", message: message.into(), code: 2 }
    }

    pub fn input(message: impl ToString) -> Self {
        Failure { kind: "input", message: message.to_string(), code: 1 }
    }

    pub fn failed(message: impl Into<String>) -> Self {
        Failure { kind: "failed", message: message.into(), code: 1 }
    }
}

fn wants_json(args: &[String]) -> bool {
    args.windows(2).any(|w| w[0] == "--format" && w[1] == "json") || args.iter().any(|a| a == "--format=json")
}

fn emit_failure(json: bool, f: &Failure) {
    if json {
        println!("{}", json!({ "error": { "kind": f.kind, "message": f.message } }));
    } else {
        eprintln!("error: {}", f.message);
    }
}

fn main() -> ExitCode {
    let args: Vec<String> = std::env::args().collect();
    let json = wants_json(&args);
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(err) => {
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            if json {
                emit_failure(true, &Failure::usage(err.kind().to_string()));
            } else {
                let _ = err.print();
            }
            return ExitCode::from(2);
        }
    };
    let format = cli.format;
    if matches!(format, Format::Graph6 | Format::Sparse6)
        && !matches!(&cli.command, Command::Atlas { action: AtlasAction::Get { .. } })
    {
        emit_failure(false, &Failure::usage("--format graph6|sparse6 applies to `atlas get` only"));
        return ExitCode::from(2);
    }
    let outcome = match cli.command {
        Command::Atlas { action: AtlasAction::List } => commands::atlas_list(format),
        Command::Atlas { action: AtlasAction::Get { name } } => commands::atlas_get(&name, format),
        Command::Analyze { input } => commands::analyze(&input, format),
        Command::Aut { input } => commands::aut(&input, format),
        Command::Transitivity { input, group, s, no_shortcut } => {
            commands::transitivity(&input, group.as_deref(), s.map(|s| s as usize), no_shortcut, format)
        }
        Command::Quotient { input, group, normal, s, reduce } => commands::quotient(
            &input,
            group.as_deref(),
            normal.as_deref(),
            s.map(|s| s as usize),
            reduce,
            format,
        ),
        Command::Verify { suite: _ } => commands::verify(format),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            emit_failure(format == Format::Json, &f);
            ExitCode::from(f.code)
        }
    }
}
