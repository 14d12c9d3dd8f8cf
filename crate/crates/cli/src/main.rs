//! `nacyc` command-line front end.

mod commands;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use nacyc::classify::Window;
use nacyc::Error;
use serde_json::json;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Parser, Debug)]
#[command(name = "nacyc", version, about = "Nonassociative cyclic algebras over finite and local fields")]
pub struct Cli {
    #[command(flatten)]
    pub opts: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalOpts {
    /// Default digit count for local-field literals.
    #[arg(long, global = true, default_value_t = 12)]
    pub precision: usize,
    /// Enumeration window `vmin,vmax,digits`.
    #[arg(long, global = true, allow_hyphen_values = true, default_value = "0,0,1", value_parser = commands::parse_window)]
    pub window: Window,
    #[arg(long, global = true, value_enum, default_value_t = Output::Text)]
    pub output: Output,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Output {
    Text,
    Machine,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Describe a base field.
    FieldInfo {
        #[arg(long)]
        field: String,
    },
    /// Cyclic extensions.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Arithmetic in a cyclic algebra.
    #[command(subcommand)]
    Alg(AlgCmd),
    /// Canonical parameters, equivalence and enumeration.
    #[command(subcommand)]
    Classify(ClassifyCmd),
    /// Exhaustive checks over small finite fields.
    #[command(subcommand)]
    Oracle(OracleCmd),
}

/// Field and extension selection shared by most commands.
#[derive(Args, Debug, Clone)]
pub struct ExtArgs {
    /// Base field: `Qp:<p>`, `Laurent:<q>` or `GF:<q>`.
    #[arg(long)]
    pub field: String,
    /// Extension: `unram:<m>`, `sqrt:<c>`, `kummer:<b>` or `as:<c>`.
    #[arg(long, allow_hyphen_values = true)]
    pub ext: String,
    /// Degree (needed for `kummer:` beyond 2).
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug, Clone)]
pub struct AlgArgs {
    #[command(flatten)]
    pub ext: ExtArgs,
    /// Generator power `j`, the algebra uses `sigma^j`.
    #[arg(long, default_value_t = 1)]
    pub j: usize,
    /// Parameter `a` in K.
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
}

#[derive(Subcommand, Debug)]
pub enum ExtCmd {
    /// Build an extension and print its data.
    Make(ExtArgs),
    /// All cyclic extensions of degree `m` supported over the field.
    List {
        #[arg(long)]
        field: String,
        #[arg(long)]
        m: usize,
    },
    /// Norm-group representatives, membership tests and norms.
    Norms {
        #[command(flatten)]
        ext: ExtArgs,
        /// Base-field element to test for membership in the norm group.
        #[arg(long, allow_hyphen_values = true)]
        x: Vec<String>,
        /// Extension element whose norm is printed.
        #[arg(long, allow_hyphen_values = true)]
        y: Vec<String>,
    },
}

#[derive(Subcommand, Debug)]
pub enum AlgCmd {
    /// Product `x y`.
    Mul {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
    /// Associator `(x y) z - x (y z)`.
    Assoc {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, allow_hyphen_values = true)]
        y: String,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
    },
    /// Bases of the nuclei and the center.
    Nuclei {
        #[command(flatten)]
        alg: AlgArgs,
    },
    /// Decide whether the algebra is a division algebra.
    Division {
        #[command(flatten)]
        alg: AlgArgs,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Theorem,
    Alternative,
}

#[derive(Subcommand, Debug)]
pub enum ClassifyCmd {
    /// Canonical representative of `a`.
    Canon {
        #[command(flatten)]
        alg: AlgArgs,
        /// Quaternion parametrization.
        #[arg(long, value_enum, default_value_t = Mode::Theorem)]
        mode: Mode,
    },
    /// Whether `a` and `b` give isomorphic algebras for the same extension.
    Equiv {
        #[command(flatten)]
        alg: AlgArgs,
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Isomorphism test for two algebras over the same field.
    Iso {
        #[arg(long)]
        field: String,
        #[arg(long, allow_hyphen_values = true)]
        ext1: String,
        #[arg(long, allow_hyphen_values = true)]
        ext2: String,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long, default_value_t = 1)]
        j1: usize,
        #[arg(long, default_value_t = 1)]
        j2: usize,
        #[arg(long, allow_hyphen_values = true)]
        a1: String,
        #[arg(long, allow_hyphen_values = true)]
        a2: String,
    },
    /// Class representatives inside the window.
    Enumerate {
        #[command(flatten)]
        ext: ExtArgs,
        #[arg(long, default_value_t = 1)]
        j: usize,
        #[arg(long, value_enum, default_value_t = Mode::Theorem)]
        mode: Mode,
    },
    /// Types of degree-four algebras over a local field.
    Degree4 {
        #[arg(long)]
        field: String,
    },
}

#[derive(Subcommand, Debug)]
pub enum OracleCmd {
    /// Run an exhaustive check.
    Verify {
        /// One of sigma_distinct, classify_iso, steele, nuclei, petit_division.
        theorem: String,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
    },
    /// Partition the proper parameters by brute force and by the criterion.
    Classes {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        m: usize,
    },
}

/// Exit status for a library error.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Syntax { .. } | Error::ContextMismatch(_) => 3,
        Error::UnsupportedCase(_) | Error::WildCase(_) | Error::ResidualCharTwo | Error::MissingRootsOfUnity => 4,
        Error::InsufficientPrecision(_)
        | Error::InsufficientInputPrecision
        | Error::PrecisionExhausted
        | Error::NormTestInconclusive(_) => 5,
        Error::TooLarge(_) => 6,
        _ => 1,
    }
}

fn error_kind(e: &Error) -> &'static str {
    match exit_code(e) {
        3 => "syntax",
        4 => "unsupported",
        5 => "precision",
        6 => "too-large",
        _ => "error",
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let machine = cli.opts.output == Output::Machine;
    match commands::run(&cli) {
        Ok(report) => {
            if machine {
                let mut out = json!({ "schema_version": SCHEMA_VERSION, "command": report.command });
                out["result"] = report.json;
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            } else {
                print!("{}", report.text);
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            if machine {
                let out = json!({
                    "schema_version": SCHEMA_VERSION,
                    "error": { "kind": error_kind(&e), "message": e.to_string() },
                });
                println!("{}", serde_json::to_string_pretty(&out).expect("json"));
            }
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
