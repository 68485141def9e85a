//! `fca`: characteristic attribute sets, lattice indices and randomized
//! comparisons for binary formal contexts.
//!
//! Exit codes: 0 success, 2 unreadable or malformed input, 3 context too
//! large for an exhaustive pass, 4 internal error.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context as _;
use clap::{Args, Parser, Subcommand, ValueEnum};

use fca_core::context::{parse_burmeister, parse_dense_csv_with, write_burmeister, CsvOptions};
use fca_core::descmap::{export_description_lattice_context, write_grouped_csv};
use fca_core::{report, Error, FormalContext, Metric, RandomizationStrategy};

#[derive(Parser)]
#[command(name = "fca", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Class totals, size histograms and lattice indices.
    Analyze {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Every attribute subset grouped by its class memberships.
    Describe {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Also write the grouped rows as a CXT context.
        #[arg(long, value_name = "PATH")]
        lattice_out: Option<PathBuf>,
    },
    /// Real metric values against their distribution over randomized copies.
    Randomize {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
        #[arg(long, value_enum, default_value_t = StrategyArg::Column)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 100)]
        trials: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Comma-separated metric names, or `all`.
        #[arg(long, default_value = "all")]
        metrics: String,
    },
    /// Linearity and distributivity of the concept lattice.
    Indices {
        #[command(flatten)]
        input: InputArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Args)]
struct InputArgs {
    /// Context file, `.cxt` or dense 0/1 `.csv`.
    input: PathBuf,
    /// Input format; guessed from the extension when omitted.
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Keep only the first N attributes.
    #[arg(long, value_name = "N")]
    max_attrs: Option<usize>,
    /// Leading id columns of a CSV table; the first names the object.
    #[arg(long, value_name = "N", default_value_t = 1)]
    id_cols: usize,
}

#[derive(Args)]
struct OutputArgs {
    #[arg(long, value_enum, default_value_t = Emit::Json)]
    emit: Emit,
    /// Write to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Cxt,
    Csv,
}

#[derive(Clone, Copy, PartialEq, ValueEnum)]
enum Emit {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Density,
    Column,
}

impl From<StrategyArg> for RandomizationStrategy {
    fn from(s: StrategyArg) -> Self {
        match s {
            StrategyArg::Density => RandomizationStrategy::Density,
            StrategyArg::Column => RandomizationStrategy::ColumnPermutation,
        }
    }
}

struct Loaded {
    name: String,
    ctx: FormalContext,
}

fn load(args: &InputArgs) -> anyhow::Result<Loaded> {
    let format = args.format.unwrap_or_else(|| guess_format(&args.input));
    let text = fs::read_to_string(&args.input)
        .map_err(Error::from)
        .with_context(|| format!("reading {}", args.input.display()))?;
    let ctx = match format {
        Format::Cxt => {
            let ctx = parse_burmeister(&text)?;
            match args.max_attrs {
                Some(n) => ctx.truncate_attributes(n),
                None => ctx,
            }
        }
        Format::Csv => parse_dense_csv_with(
            &text,
            &CsvOptions {
                max_attrs: args.max_attrs,
                id_columns: args.id_cols,
            },
        )?,
    };
    let name = args
        .input
        .file_stem()
        .map(|s| s.to_string_lossy().into_owned())
        .unwrap_or_default();
    Ok(Loaded { name, ctx })
}

fn guess_format(path: &Path) -> Format {
    match path.extension().and_then(|e| e.to_str()) {
        Some(e) if e.eq_ignore_ascii_case("csv") => Format::Csv,
        _ => Format::Cxt,
    }
}

fn json<T: serde::Serialize>(value: &T) -> anyhow::Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

fn emit(output: &OutputArgs, text: &str) -> anyhow::Result<()> {
    match &output.out {
        Some(path) => write_file(path, text),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn write_file(path: &Path, text: &str) -> anyhow::Result<()> {
    fs::write(path, text)
        .map_err(Error::from)
        .with_context(|| format!("writing {}", path.display()))
}

fn run(cli: Cli) -> anyhow::Result<()> {
    match cli.command {
        Command::Analyze { input, output } => {
            let Loaded { name, ctx } = load(&input)?;
            let r = report::analyze(&ctx, &name);
            let text = match output.emit {
                Emit::Json => json(&r)?,
                Emit::Csv => r.to_csv(),
            };
            emit(&output, &text)
        }
        Command::Describe {
            input,
            output,
            lattice_out,
        } => {
            let Loaded { name, ctx } = load(&input)?;
            let r = report::descriptions(&ctx, &name)?;
            if let Some(path) = lattice_out {
                let grid = export_description_lattice_context(&r.rows);
                write_file(&path, &write_burmeister(&grid))?;
            }
            let text = match output.emit {
                Emit::Json => json(&r)?,
                Emit::Csv => write_grouped_csv(&r.rows),
            };
            emit(&output, &text)
        }
        Command::Randomize {
            input,
            output,
            strategy,
            trials,
            seed,
            metrics,
        } => {
            let Loaded { name, ctx } = load(&input)?;
            let metrics = Metric::parse_list(&metrics)?;
            let r = report::randomization(&ctx, &name, strategy.into(), trials, seed, &metrics)?;
            let text = match output.emit {
                Emit::Json => json(&r)?,
                Emit::Csv => r.to_csv(),
            };
            emit(&output, &text)
        }
        Command::Indices { input, output } => {
            let Loaded { name, ctx } = load(&input)?;
            let r = report::indices(&ctx, &name);
            let text = match output.emit {
                Emit::Json => json(&r)?,
                Emit::Csv => format!(
                    "concepts,linearity,distributivity\n{},{},{}\n",
                    r.concepts, r.linearity, r.distributivity
                ),
            };
            emit(&output, &text)
        }
    }
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Capacity { .. }) => 3,
        Some(Error::DuplicateIntent(_)) => 4,
        Some(_) => 2,
        None => 4,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match std::panic::catch_unwind(|| run(cli)) {
        Ok(Ok(())) => ExitCode::SUCCESS,
        Ok(Err(err)) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
        Err(_) => ExitCode::from(4),
    }
}
