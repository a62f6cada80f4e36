use std::fs::File;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use catcomplex::output::OutputDocument;
use catcomplex::report::{self, FitStatistic, MetricSelector, Totals};
use catcomplex::stats::{parse_structure_ref, HumanDataset, METRIC_EPSILON};
use catcomplex::{Aggregator, CategoryStructure, Error, ErrorKind};
use clap::{Parser, Subcommand, ValueEnum};

/// Complexity metrics for Boolean category structures.
#[derive(Parser)]
#[command(name = "catcomplex", version)]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Decimal places for TSV output (round half to even).
    #[arg(long, global = true, default_value_t = 2)]
    precision: u32,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Tsv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Metrics for one structure, given as bitstrings ("000,001") or a catalog id ("3[4]-II").
    Metric {
        structure: String,
        /// Number of dimensions; inferred from the first stimulus when omitted.
        #[arg(long)]
        dims: Option<usize>,
        #[arg(long, value_enum, default_value_t = MetricArg::All)]
        metric: MetricArg,
        /// Add a row for every level u(0..d).
        #[arg(long)]
        per_level: bool,
    },
    /// Every structure class of size P over D dimensions.
    Enumerate {
        #[arg(long)]
        dims: usize,
        #[arg(long)]
        p: usize,
        /// Form totals from levels rounded to the display precision.
        #[arg(long)]
        level_rounded_totals: bool,
    },
    /// Reproduce a published table.
    Tables {
        #[arg(value_enum)]
        table: TableArg,
        /// Form totals from levels rounded to the display precision.
        #[arg(long)]
        level_rounded_totals: bool,
        /// Tie tolerance for induced orders.
        #[arg(long, default_value_t = METRIC_EPSILON)]
        epsilon: f64,
    },
    /// Compare a metric with human error rates from a CSV file.
    Fit {
        #[arg(long, value_enum)]
        metric: FitMetricArg,
        /// CSV with header `structure,error_rate`.
        #[arg(long)]
        data: PathBuf,
        #[arg(long, value_enum)]
        stat: StatArg,
        /// Tie tolerance for the metric's induced order.
        #[arg(long, default_value_t = METRIC_EPSILON)]
        epsilon: f64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum MetricArg {
    Umin,
    Umean,
    Boolc,
    Gist,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum FitMetricArg {
    Umin,
    Umean,
    Boolc,
    Gist,
}

#[derive(Clone, Copy, ValueEnum)]
enum TableArg {
    ShjMin,
    ShjMean,
    Sweep,
}

#[derive(Clone, Copy, ValueEnum)]
enum StatArg {
    R2,
    Spearman,
    Order,
}

impl From<MetricArg> for MetricSelector {
    fn from(m: MetricArg) -> Self {
        match m {
            MetricArg::Umin => Self::Umin,
            MetricArg::Umean => Self::Umean,
            MetricArg::Boolc => Self::Boolc,
            MetricArg::Gist => Self::Gist,
            MetricArg::All => Self::All,
        }
    }
}

impl From<FitMetricArg> for MetricSelector {
    fn from(m: FitMetricArg) -> Self {
        match m {
            FitMetricArg::Umin => Self::Umin,
            FitMetricArg::Umean => Self::Umean,
            FitMetricArg::Boolc => Self::Boolc,
            FitMetricArg::Gist => Self::Gist,
        }
    }
}

impl From<StatArg> for FitStatistic {
    fn from(s: StatArg) -> Self {
        match s {
            StatArg::R2 => Self::R2,
            StatArg::Spearman => Self::Spearman,
            StatArg::Order => Self::Order,
        }
    }
}

fn parse_structure(text: &str, dims: Option<usize>) -> catcomplex::Result<CategoryStructure> {
    match dims {
        Some(d) if !text.contains('[') => CategoryStructure::parse(text, d),
        _ => parse_structure_ref(text),
    }
}

fn totals(cli: &Cli, level_rounded: bool) -> Totals {
    if level_rounded {
        Totals::LevelRounded(cli.precision)
    } else {
        Totals::Exact
    }
}

fn run(cli: &Cli) -> anyhow::Result<OutputDocument> {
    let doc = match &cli.command {
        Command::Metric {
            structure,
            dims,
            metric,
            per_level,
        } => {
            let s = parse_structure(structure, *dims)?;
            report::metric_document(&s, (*metric).into(), *per_level)?
        }
        Command::Enumerate {
            dims,
            p,
            level_rounded_totals,
        } => report::enumerate_document(*dims, *p, totals(cli, *level_rounded_totals))?,
        Command::Tables {
            table,
            level_rounded_totals,
            epsilon,
        } => {
            let totals = totals(cli, *level_rounded_totals);
            match table {
                TableArg::ShjMin => report::shj_table(Aggregator::Min, totals, *epsilon)?,
                TableArg::ShjMean => report::shj_table(Aggregator::Mean, totals, *epsilon)?,
                TableArg::Sweep => report::sweep_table(totals)?,
            }
        }
        Command::Fit {
            metric,
            data,
            stat,
            epsilon,
        } => {
            let file = File::open(data)
                .map_err(|e| Error::Io(e.to_string()))
                .with_context(|| format!("cannot open {}", data.display()))?;
            let dataset = HumanDataset::from_csv(data.display().to_string(), file)
                .with_context(|| format!("in {}", data.display()))?;
            report::fit_document(&dataset, (*metric).into(), (*stat).into(), *epsilon)?
        }
    };
    Ok(doc)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>().map(Error::kind) {
        Some(ErrorKind::Parse) => 3,
        Some(ErrorKind::Range) => 4,
        Some(ErrorKind::Data) => 5,
        None => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(doc) => {
            match cli.format {
                Format::Tsv => print!("{}", doc.to_tsv(cli.precision)),
                Format::Json => println!("{}", doc.to_json()),
            }
            ExitCode::SUCCESS
        }
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
