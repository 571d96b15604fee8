use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use mathieu::Category;
use mathieu_cli::reference::{self, EMBEDDED};
use mathieu_cli::verify::{verify, DEFAULT_TOLERANCE};
use mathieu_cli::{evaluate, tables, CliError, Function, Request, TableId};

#[derive(Parser)]
#[command(name = "mathieu", version, about = "Angular and radial Mathieu functions")]
#[command(allow_negative_numbers = true)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate one function for the first nmax orders
    Eval(EvalArgs),
    /// Regenerate a published table as CSV
    Table {
        #[arg(value_enum)]
        table: TableId,
    },
    /// Recompute every reference value and report deviations
    Verify {
        #[arg(long, default_value_t = DEFAULT_TOLERANCE)]
        tolerance_abs: f64,
        /// Reference data file instead of the built-in copy
        #[arg(long)]
        data: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(clap::Args)]
#[command(allow_negative_numbers = true)]
struct EvalArgs {
    #[arg(long = "fn", value_enum)]
    function: Function,
    /// Function code: 1 even-even, 2 even-odd, 3 odd-even, 4 odd-odd
    #[arg(long, value_parser = clap::value_parser!(u8).range(1..=4))]
    kf: u8,
    #[arg(long)]
    q: f64,
    /// Radial coordinate, for radial functions and Shyp
    #[arg(long)]
    u: Option<f64>,
    /// Angular coordinate in radians, for S and dS
    #[arg(long)]
    v: Option<f64>,
    /// Second parameter of the correlation factor C
    #[arg(long)]
    qprime: Option<f64>,
    #[arg(long, default_value_t = 25)]
    nmax: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

fn run(cli: Cli) -> Result<ExitCode, CliError> {
    match cli.command {
        Command::Eval(args) => {
            let req = Request {
                function: args.function,
                category: Category::from_code(args.kf)?,
                q: args.q,
                u: args.u,
                v: args.v,
                qprime: args.qprime,
                nmax: args.nmax,
            };
            let report = evaluate(&req)?;
            let text = match args.format {
                Format::Csv => report.to_csv()?,
                Format::Json => report.to_json()?,
            };
            print!("{text}");
        }
        Command::Table { table } => print!("{}", tables::render(table)?),
        Command::Verify { tolerance_abs, data } => {
            if !(tolerance_abs >= 0.0) {
                return Err(CliError::Usage(format!(
                    "--tolerance-abs must be non-negative, got {tolerance_abs}"
                )));
            }
            let text = match data {
                Some(path) => std::fs::read_to_string(path)?,
                None => EMBEDDED.to_string(),
            };
            let outcome = verify(&reference::parse(&text)?, tolerance_abs)?;
            println!("{outcome}");
            if !outcome.passed() {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
