use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

mod commands;

#[derive(Parser, Debug)]
#[command(name = "cosint", version, about = "Exact tables and checks for the integrals of x^p cos^k x on [0, pi/2]")]
struct Cli {
    #[command(flatten)]
    output: OutputArgs,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct OutputArgs {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    /// Significant digits for floating-point columns (1..=17)
    #[arg(long, default_value_t = 15, global = true)]
    precision: usize,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum FamilyArg {
    #[value(name = "W", alias = "w")]
    W,
    #[value(name = "I", alias = "i")]
    I,
    #[value(name = "J", alias = "j")]
    J,
    #[value(name = "all")]
    All,
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum SeriesArg {
    #[value(name = "inv_sqrt")]
    InvSqrt,
    #[value(name = "inv_3_2")]
    InvThreeHalves,
    #[value(name = "j_even")]
    JEven,
    #[value(name = "w_even")]
    WEven,
    #[value(name = "w_odd_recip")]
    WOddRecip,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Exact values of W_k, I_k or J_k with every route cross-checked
    Table {
        #[arg(value_enum)]
        family: FamilyArg,
        k_from: usize,
        k_to: usize,
    },
    /// The rational coefficients of I_k: (a, b) for even k, (c, d) for odd k
    Coeffs { k_from: usize, k_to: usize },
    /// Leading coefficients of the power series identities
    Series {
        #[arg(value_enum)]
        which: SeriesArg,
        n_terms: usize,
    },
    /// Modified sawtooth wave geometry and exact average sector areas
    Sawtooth {
        /// Ramp angle x in radians, 0 < x < pi/2
        #[arg(long, allow_negative_numbers = true)]
        angle: f64,
        #[arg(long, default_value_t = 3)]
        teeth: usize,
        #[arg(long, default_value_t = 0)]
        avg_upto: usize,
        /// Emit the geometry as SVG
        #[arg(long, conflicts_with = "csv")]
        svg: bool,
        /// Emit the geometry as CSV (default)
        #[arg(long)]
        csv: bool,
    },
    /// Route-equality and quadrature-oracle checks
    Verify {
        #[arg(value_name = "KMAX")]
        kmax_pos: Option<usize>,
        #[arg(value_name = "TOL", allow_negative_numbers = true)]
        tol_pos: Option<f64>,
        #[arg(long, conflicts_with = "kmax_pos")]
        kmax: Option<usize>,
        #[arg(long, conflicts_with = "tol_pos", allow_negative_numbers = true)]
        tol: Option<f64>,
        /// Upper index for the exact route-equality checks
        #[arg(long, default_value_t = 200)]
        route_kmax: usize,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Failed(String),
    Io(io::Error),
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        CliError::Io(e)
    }
}

impl From<cosint::Error> for CliError {
    fn from(e: cosint::Error) -> Self {
        match e {
            cosint::Error::RouteMismatch { .. } => CliError::Failed(e.to_string()),
            other => CliError::Usage(other.to_string()),
        }
    }
}

pub struct Output {
    pub format: Format,
    pub precision: usize,
    pub sink: Box<dyn Write>,
}

impl Output {
    pub fn float(&self, v: f64) -> String {
        format!("{:.*e}", self.precision - 1, v)
    }
}

fn open(args: &OutputArgs) -> Result<Output, CliError> {
    if !(1..=17).contains(&args.precision) {
        return Err(CliError::Usage(format!(
            "--precision must be in 1..=17, got {}",
            args.precision
        )));
    }
    let sink: Box<dyn Write> = match &args.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    Ok(Output {
        format: args.format,
        precision: args.precision,
        sink,
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    let mut out = open(&cli.output)?;
    let result = match cli.command {
        Command::Table { family, k_from, k_to } => commands::table(&mut out, family, k_from, k_to),
        Command::Coeffs { k_from, k_to } => commands::coeffs(&mut out, k_from, k_to),
        Command::Series { which, n_terms } => commands::series(&mut out, which, n_terms),
        Command::Sawtooth {
            angle,
            teeth,
            avg_upto,
            svg,
            csv: _,
        } => commands::sawtooth(&mut out, angle, teeth, avg_upto, svg),
        Command::Verify {
            kmax_pos,
            tol_pos,
            kmax,
            tol,
            route_kmax,
        } => {
            let k_max = kmax.or(kmax_pos).unwrap_or(30);
            let tol = tol.or(tol_pos).unwrap_or(1e-9);
            commands::verify(&mut out, k_max, tol, route_kmax)
        }
    };
    out.sink.flush()?;
    result
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Failed(msg)) => {
            eprintln!("cosint: {msg}");
            ExitCode::from(1)
        }
        Err(CliError::Usage(msg)) => {
            eprintln!("cosint: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Io(e)) => {
            eprintln!("cosint: {e}");
            ExitCode::from(2)
        }
    }
}
