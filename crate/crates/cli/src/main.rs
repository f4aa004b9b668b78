use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod run;

#[derive(Parser, Debug)]
#[command(name = "latsum", version, about = "Weighted lattice-point sums, reciprocity and Todd operators for lattice polytopes")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Json)]
    pub format: Format,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Pretty,
}

#[derive(Args, Debug, Clone)]
pub struct Input {
    /// Polytope JSON file: {"vertices": [[...], ...]}.
    #[arg(long)]
    pub polytope: PathBuf,
}

#[derive(Args, Debug, Clone)]
pub struct WeightedInput {
    #[command(flatten)]
    pub input: Input,

    /// Weight JSON file: {"vars": n, "terms": [...]}. Defaults to 1.
    #[arg(long)]
    pub phi: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Dimension, facets, f-vector and simplicity.
    Info(Input),
    /// Ehrhart polynomials of every face, closed and relatively open.
    Ehrhart(Input),
    /// Weighted sum polynomials of every face.
    Wsum(WeightedInput),
    /// The generating function G(q, y).
    Gfun {
        #[command(flatten)]
        args: WeightedInput,
        /// Check G(q, y) = (-y)^(n+d) G(-q, 1/y).
        #[arg(long)]
        check_reciprocity: bool,
        /// Also print the coefficient of each power of y.
        #[arg(long)]
        profile: bool,
    },
    /// Todd operator applied to the symbolic integral (simple polytopes only).
    Todd {
        #[command(flatten)]
        args: WeightedInput,
        /// Compare against G(q, y) computed by counting.
        #[arg(long)]
        verify: bool,
    },
    /// Face-poset f- and g-polynomials and the dual g-polynomial of every face.
    Gpoly(Input),
    /// Seeded random lattice polytopes.
    Corpus {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 2)]
        dim: usize,
        #[arg(long, default_value_t = 3)]
        max_coord: i64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = run::run(&cli);
    print!("{}", outcome.render(cli.format));
    ExitCode::from(outcome.status())
}
