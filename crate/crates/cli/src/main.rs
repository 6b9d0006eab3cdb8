use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use splice_indices::indices::IndexKind;
use splice_indices_cli::commands::{
    cmd_bench, cmd_compute, cmd_splice, cmd_verify, BenchArgs, IndexSelection, InputFormat,
    InputOptions, SpliceArgs, SpliceMethod, VariantChoice, VerifyArgs,
};
use splice_indices_cli::dist;
use splice_indices_cli::error::CliError;

/// Distance-based topological indices of connected graphs (Szeged,
/// edge-Szeged, edge-PI, vertex-PI, eccentric connectivity) and their
/// closed-form decompositions over splice constructions.
#[derive(Parser)]
#[command(name = "splice-indices", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    All,
    Sz,
    Sze,
    Pi,
    Piv,
    Ecc,
}

impl IndexArg {
    fn selection(self) -> IndexSelection {
        match self {
            IndexArg::All => IndexSelection::All,
            IndexArg::Sz => IndexSelection::One(IndexKind::Szeged),
            IndexArg::Sze => IndexSelection::One(IndexKind::EdgeSzeged),
            IndexArg::Pi => IndexSelection::One(IndexKind::PiEdge),
            IndexArg::Piv => IndexSelection::One(IndexKind::PiVertex),
            IndexArg::Ecc => IndexSelection::One(IndexKind::EccentricConnectivity),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Edgelist,
    Graph6,
}

#[derive(Clone, Copy, ValueEnum)]
enum MethodArg {
    Direct,
    /// Closed forms with the oracle-validated coefficients.
    Formula,
    /// Closed forms evaluated verbatim as printed (errata demonstration).
    FormulaPrinted,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Printed,
    Corrected,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the indices of one graph.
    Compute {
        file: PathBuf,
        /// Which index to print (human output; JSON always carries all five).
        #[arg(long, value_enum, default_value_t = IndexArg::All)]
        index: IndexArg,
        /// Emit a JSON report instead of plain text.
        #[arg(long)]
        json: bool,
        /// Input file format.
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        /// Treat input vertex ids as 1-based (edge-list input only).
        #[arg(long)]
        one_based: bool,
    },
    /// Splice two graphs and report the composite's indices.
    Splice {
        file1: PathBuf,
        file2: PathBuf,
        /// Glue vertex in the first graph.
        #[arg(long)]
        u1: usize,
        /// Glue vertex in the second graph.
        #[arg(long)]
        u2: usize,
        /// Write the composite as an edge list under the deterministic
        /// labeling.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = MethodArg::Direct)]
        method: MethodArg,
        /// Print direct and formula values side by side with match flags.
        #[arg(long)]
        compare: bool,
        #[arg(long)]
        json: bool,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        #[arg(long)]
        one_based: bool,
    },
    /// Compare the closed forms against direct computation over generated
    /// splices.
    Verify {
        /// Randomized trials after the exhaustive phase.
        #[arg(long, default_value_t = 0)]
        trials: u64,
        /// Maximum component size for randomized trials.
        #[arg(long, default_value_t = 12)]
        max_n: usize,
        /// Exhaustive phase over all components up to this size (0 skips,
        /// at most 7).
        #[arg(long, default_value_t = 4)]
        exhaustive_limit: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = VariantArg::Corrected)]
        variant: VariantArg,
        #[arg(long)]
        json: bool,
    },
    /// Time the direct path against the formula path on one splice.
    Bench {
        file1: PathBuf,
        file2: PathBuf,
        #[arg(long)]
        u1: usize,
        #[arg(long)]
        u2: usize,
        /// Repetitions per method (median is reported).
        #[arg(long, default_value_t = 5)]
        repeat: u32,
        #[arg(long, value_enum, default_value_t = FormatArg::Edgelist)]
        format: FormatArg,
        #[arg(long)]
        one_based: bool,
    },
}

fn input_options(format: FormatArg, one_based: bool) -> InputOptions {
    InputOptions {
        format: match format {
            FormatArg::Edgelist => InputFormat::EdgeList,
            FormatArg::Graph6 => InputFormat::Graph6,
        },
        one_based,
    }
}

fn run(cli: Cli) -> Result<String, CliError> {
    match cli.command {
        Command::Compute {
            file,
            index,
            json,
            format,
            one_based,
        } => cmd_compute(
            &file,
            index.selection(),
            json,
            input_options(format, one_based),
            dist::thread_cap(),
        ),
        Command::Splice {
            file1,
            file2,
            u1,
            u2,
            out,
            method,
            compare,
            json,
            format,
            one_based,
        } => cmd_splice(&SpliceArgs {
            file1: &file1,
            file2: &file2,
            u1,
            u2,
            out: out.as_deref(),
            method: match method {
                MethodArg::Direct => SpliceMethod::Direct,
                MethodArg::Formula => SpliceMethod::Formula,
                MethodArg::FormulaPrinted => SpliceMethod::FormulaPrinted,
            },
            compare,
            json,
            options: input_options(format, one_based),
        }),
        Command::Verify {
            trials,
            max_n,
            exhaustive_limit,
            seed,
            variant,
            json,
        } => cmd_verify(&VerifyArgs {
            trials,
            max_n,
            exhaustive_limit,
            seed,
            variant: match variant {
                VariantArg::Printed => VariantChoice::Printed,
                VariantArg::Corrected => VariantChoice::Corrected,
                VariantArg::Both => VariantChoice::Both,
            },
            json,
        }),
        Command::Bench {
            file1,
            file2,
            u1,
            u2,
            repeat,
            format,
            one_based,
        } => cmd_bench(&BenchArgs {
            file1: &file1,
            file2: &file2,
            u1,
            u2,
            repeat,
            options: input_options(format, one_based),
        }),
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
            eprintln!("error: {err}");
            ExitCode::from(err.exit_code() as u8)
        }
    }
}
