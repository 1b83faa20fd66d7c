use std::fs::{File, OpenOptions};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use tverberg::ReportRecord;

mod commands;

#[derive(Parser)]
#[command(name = "tverberg", version, about = "Exact tolerated-Tverberg workbench")]
struct Cli {
    /// Seed for search strategies.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Candidate budget for searches; enumeration budget elsewhere.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Append JSON-lines records to this file (also used to resume `search-c`).
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Table,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Partition,
    Set,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum BoundKind {
    Lemma32,
    EvenD,
    Prop41,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Strategy {
    Clustered,
    Figure2,
    Grid,
    RandomRational,
}

#[derive(Subcommand)]
pub enum Cmd {
    /// Moment-curve points from parameters.
    Gen {
        #[arg(short, long = "dim")]
        d: usize,
        /// Comma-separated rationals.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, conflicts_with_all = ["file", "n"])]
        alphas: Vec<String>,
        /// A one-dimensional otps file of parameters.
        #[arg(long, conflicts_with = "n")]
        file: Option<PathBuf>,
        /// Use the parameters 1..n.
        #[arg(short)]
        n: Option<usize>,
        /// Write the points as otps.
        #[arg(long)]
        write: Option<PathBuf>,
    },
    /// Order-type homogeneity of an otps file.
    Homog {
        file: PathBuf,
        /// Also find the largest homogeneous subset (order inherited).
        #[arg(long)]
        largest: bool,
        #[arg(long, default_value_t = tverberg_core::order_type::DEFAULT_SUBSET_CAP)]
        cap: usize,
    },
    /// Facets of the cyclic polytope by Gale's evenness criterion.
    Facets {
        #[arg(short, long = "dim")]
        d: usize,
        #[arg(short)]
        n: usize,
    },
    /// Is the cyclic polytope floor(d/2)-neighborly?
    Neighborly {
        #[arg(short, long = "dim")]
        d: usize,
        #[arg(short)]
        n: usize,
    },
    /// Crossings of the polygonal path through a point set with a hyperplane.
    Crossings {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required = true)]
        normal: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        offset: String,
    },
    /// Do the hulls of the blocks share a point?
    Intersect {
        file: PathBuf,
        /// Block label (0-based) of each point, comma-separated.
        #[arg(long, value_delimiter = ',', conflicts_with = "alternating")]
        blocks: Vec<usize>,
        /// Alternating partition into r blocks.
        #[arg(long)]
        alternating: Option<usize>,
    },
    /// Tolerance of a partition or of the whole set.
    Tolerance {
        file: PathBuf,
        #[arg(short)]
        r: usize,
        #[arg(long, value_enum, default_value_t = Mode::Partition)]
        mode: Mode,
        /// Block labels for partition mode; alternating if omitted.
        #[arg(long, value_delimiter = ',')]
        blocks: Vec<usize>,
    },
    /// Closed-form bounds.
    Bounds {
        #[arg(value_enum)]
        kind: BoundKind,
        #[arg(short, long = "dim")]
        d: u64,
        #[arg(short)]
        r: u64,
        #[arg(short)]
        n: Option<u64>,
    },
    /// Search moment-curve sets whose alternating partition has no common point.
    SearchC {
        #[arg(short, long = "dim")]
        d: usize,
        #[arg(short)]
        r: usize,
        #[arg(long)]
        n_min: usize,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = Strategy::Clustered)]
        strategy: Strategy,
        /// Evaluate candidates on one thread.
        #[arg(long)]
        sequential: bool,
    },
    /// Exact tolerance t(n, 1, r) on the line.
    TLine {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        r: usize,
    },
    /// Least n on the line with tolerance at least t.
    NLine {
        #[arg(short)]
        t: usize,
        #[arg(short)]
        r: usize,
    },
    /// Rebuild and replay the 16-point counterexample in R^3.
    VerifyFigure2 {
        /// Check this otps file instead of the built-in parameters.
        #[arg(long)]
        file: Option<PathBuf>,
    },
    /// Replay every certificate in a JSON-lines report.
    Verify { file: PathBuf },
}

/// Failure before any claim could be evaluated.
#[derive(Debug)]
pub enum Failure {
    Input(String),
    Guard(String),
}

impl From<tverberg_core::Error> for Failure {
    fn from(e: tverberg_core::Error) -> Failure {
        match e {
            tverberg_core::Error::ResourceGuard { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

impl From<tverberg::ParseError> for Failure {
    fn from(e: tverberg::ParseError) -> Failure {
        Failure::Input(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Failure {
        Failure::Input(e.to_string())
    }
}

pub struct Ctx {
    pub seed: u64,
    pub budget: Option<u64>,
    pub out: Option<PathBuf>,
    format: Format,
    sink: Option<File>,
    started: Instant,
    pub failed: bool,
}

impl Ctx {
    /// Prints the record and appends it to `--out` right away, so long
    /// scans leave a usable checkpoint if interrupted.
    pub fn emit(&mut self, mut record: ReportRecord) -> Result<(), Failure> {
        record.timing_ms = self.started.elapsed().as_millis() as u64;
        self.started = Instant::now();
        self.failed |= !record.passed;
        match self.format {
            Format::Json => println!("{}", record.to_line()),
            Format::Table => println!("{}", record.to_table_row()),
        }
        if let Some(f) = self.sink.as_mut() {
            writeln!(f, "{}", record.to_line())?;
            f.flush()?;
        }
        Ok(())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut ctx = Ctx {
        seed: cli.seed,
        budget: cli.budget,
        out: cli.out.clone(),
        format: cli.format,
        sink: None,
        started: Instant::now(),
        failed: false,
    };
    let result = (|| {
        if let Some(path) = &cli.out {
            ctx.sink = Some(OpenOptions::new().create(true).append(true).open(path)?);
        }
        commands::run(&cli.cmd, &mut ctx)
    })();
    match result {
        Ok(()) if ctx.failed => ExitCode::from(1),
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Guard(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(3)
        }
    }
}
