use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod report;

/// Exact Poisson bracket workbench.
#[derive(Parser, Debug)]
#[command(name = "poisson-lab", version, about)]
struct Cli {
    /// Emit TOML instead of plain text.
    #[arg(long, global = true)]
    machine: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct StructureArgs {
    /// Structure definition file.
    #[arg(long, short = 's')]
    structure: PathBuf,

    /// Load without checking the Jacobi identity.
    #[arg(long)]
    skip_jacobi: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Bracket of two expressions.
    Bracket {
        #[command(flatten)]
        structure: StructureArgs,
        /// Variables in the order their factors are printed.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Jacobiator of three expressions, or a check of all coordinate triples.
    Jacobi {
        #[arg(long, short = 's')]
        structure: PathBuf,
        #[arg(num_args = 0..=3, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Constant term of the iterated Laurent expansion of {f, g}.
    ConstantTerm {
        #[command(flatten)]
        structure: StructureArgs,
        /// Iterated order, innermost variable first.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// One coefficient of the iterated Laurent expansion of an expression.
    Coeff {
        #[command(flatten)]
        structure: StructureArgs,
        /// Exponent vector, e.g. `1,-2`.
        #[arg(long, allow_hyphen_values = true, value_delimiter = ',')]
        index: Vec<i32>,
        /// Iterated order, innermost variable first.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Windowed iterated Laurent expansion.
    Expand {
        #[arg(long, value_delimiter = ',', required = true)]
        vars: Vec<String>,
        /// Iterated order, innermost variable first.
        #[arg(long, value_delimiter = ',')]
        order: Vec<String>,
        /// Bounds such as `x:-4..0,y:0..3`.
        #[arg(long, allow_hyphen_values = true)]
        window: String,
        #[arg(allow_hyphen_values = true)]
        expr: String,
    },
    /// Close a set of functions under the bracket.
    Closure {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(long, default_value_t = poisson_lab::lie::DEFAULT_MAX_DIM)]
        max_dim: usize,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Test whether functions form log-canonical coordinates.
    CheckLogCanonical {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(required = true, allow_hyphen_values = true)]
        exprs: Vec<String>,
    },
    /// Canonical pair for {x, y} = x^a y^b.
    CanonicalPair { a: u32, b: u32 },
    /// Transform a pair between the equivalent witness conditions.
    Witness {
        #[command(flatten)]
        structure: StructureArgs,
        #[arg(allow_hyphen_values = true)]
        f: String,
        #[arg(allow_hyphen_values = true)]
        g: String,
    },
    /// Show a built-in example structure; lists the names when omitted.
    Gallery { name: Option<String> },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(cli.command) {
        Ok(report) => {
            if cli.machine {
                print!("{}", report.to_toml());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}
