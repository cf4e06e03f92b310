//! Command-line front end for `burnside-core`.
//!
//! `burnside <command> --group <spec>` prints one report; `burnside
//! report-all` runs every check over the default catalog and exits nonzero
//! if any of them fails.
//!
//! Exit codes: 0 success, 1 failed check, 2 budget exceeded, 3 malformed
//! input (including bad command-line arguments), 4 any other error.

mod report;
mod verify;

use std::io::Write;
use std::path::PathBuf;

use burnside_core::burnside::MarksTable;
use burnside_core::cache::{marks_table, MarksCache};
use burnside_core::catalog::{build_catalog, display_name, extended_entries, parse_construction};
use burnside_core::group::PermGroup;
use burnside_core::invariants::{certify, picard, units};
use burnside_core::{Budgets, Config, Error, Exec, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

pub use report::{render, ClassInfo, Envelope, GroupInfo, MarksReport, Render};
pub use verify::{verify_entry, CatalogReport, GroupVerdict, NamedCheck, PicardSummary};

#[derive(Parser, Debug)]
#[command(
    name = "burnside",
    version,
    about = "Tables of marks, unit groups and Picard groups of Burnside rings"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Directory for cached tables of marks.
    #[arg(long, global = true, value_name = "DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Always recompute tables of marks.
    #[arg(long, global = true)]
    pub no_cache: bool,

    /// Maximum group order produced from the generators.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_elements: Option<u64>,

    /// Maximum number of subgroups held during subgroup enumeration.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_subgroups: Option<u64>,

    /// Maximum size of a quotient ring enumerated element by element.
    #[arg(long, global = true, value_name = "N", value_parser = clap::value_parser!(u64).range(1..))]
    pub budget_enum: Option<u64>,

    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, value_name = "THREADS", value_parser = clap::value_parser!(u64).range(1..))]
    pub parallel: Option<u64>,

    /// Write the report to this file instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Table of marks with class metadata.
    Marks(GroupArg),
    /// Unit group of the Burnside ring.
    Units(GroupArg),
    /// Picard group as a cokernel of unit groups.
    Picard(GroupArg),
    /// Certificate for the vanishing of the Brauer group.
    Certify(GroupArg),
    /// Every check over the default catalog.
    ReportAll {
        /// Also run the optional checks on groups outside the catalog (A5).
        #[arg(long)]
        extended: bool,
    },
}

#[derive(Args, Debug)]
pub struct GroupArg {
    /// Catalog name (`S3`, `C2xC4`) or `family:params` (`cyclic:6`,
    /// `dihedral:4`, `product:cyclic:2,cyclic:4`, `file:group.json`).
    #[arg(long, value_name = "SPEC")]
    pub group: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// Everything a command needs besides its group argument.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub config: Config,
    pub cache: Option<MarksCache>,
    pub format: Format,
    pub threads: Option<usize>,
}

impl RunConfig {
    pub fn from_cli(cli: &Cli) -> Self {
        let defaults = Budgets::default();
        let budgets = Budgets {
            elements: cli.budget_elements.map_or(defaults.elements, |v| v as usize),
            subgroups: cli.budget_subgroups.map_or(defaults.subgroups, |v| v as usize),
            enumeration: cli.budget_enum.unwrap_or(defaults.enumeration),
            ..defaults
        };
        let threads = cli.parallel.map(|t| t as usize);
        let exec = if threads == Some(1) { Exec::Sequential } else { Exec::Parallel };
        let cache = (!cli.no_cache).then(|| {
            MarksCache::new(
                cli.cache_dir
                    .clone()
                    .unwrap_or_else(|| std::env::temp_dir().join("burnside-marks")),
            )
        });
        RunConfig {
            config: Config { budgets, exec },
            cache,
            format: cli.format,
            threads,
        }
    }
}

/// Maps an error to the process exit code.
pub fn exit_code(err: &Error) -> u8 {
    match err {
        Error::CheckFailed { .. } => 1,
        Error::BudgetExceeded { .. } => 2,
        Error::MalformedInput(_) | Error::InvalidPerm(_) | Error::InvalidSubgroup(_) | Error::Json(_) => 3,
        _ => 4,
    }
}

/// Output of a successful run and the exit code it should end with.
#[derive(Debug)]
pub struct Outcome {
    pub output: String,
    pub status: u8,
}

fn load_group(spec: &str, rc: &RunConfig) -> Result<(GroupInfo, PermGroup)> {
    let construction = parse_construction(spec)?;
    let group = construction.build(&rc.config)?;
    if let Some(expected) = construction.expected_order() {
        if expected != group.order() {
            return Err(Error::CheckFailed {
                check: "construction_order".into(),
                detail: format!("{spec} built a group of order {} instead of {expected}", group.order()),
            });
        }
    }
    Ok((GroupInfo::new(display_name(spec), &group, None), group))
}

/// Runs one command and renders its report.
pub fn run(command: &Command, rc: &RunConfig) -> Result<Outcome> {
    let cfg = &rc.config;
    let single = |spec: &str| -> Result<(GroupInfo, PermGroup, MarksTable)> {
        let (mut info, group) = load_group(spec, rc)?;
        let marks = marks_table(&group, cfg, rc.cache.as_ref())?;
        info.classes = Some(marks.class_count());
        Ok((info, group, marks))
    };
    let (rendered, status) = match command {
        Command::Marks(g) => {
            let (info, group, marks) = single(&g.group)?;
            let report = MarksReport::new(&group, &marks);
            (render(&Envelope::new("marks", info, report), rc.format)?, 0)
        }
        Command::Units(g) => {
            let (info, _, marks) = single(&g.group)?;
            let report = units(&marks, cfg)?;
            (render(&Envelope::new("units", info, report), rc.format)?, 0)
        }
        Command::Picard(g) => {
            let (info, _, marks) = single(&g.group)?;
            let report = picard(&marks, cfg)?;
            (render(&Envelope::new("picard", info, report), rc.format)?, 0)
        }
        Command::Certify(g) => {
            let (info, _, marks) = single(&g.group)?;
            let cert = certify(&marks, cfg)?;
            let status = if cert.passed() { 0 } else { 1 };
            (render(&Envelope::new("certify", info, cert), rc.format)?, status)
        }
        Command::ReportAll { extended } => {
            let mut entries = build_catalog();
            if *extended {
                entries.extend(extended_entries());
            }
            let verdicts = burnside_core::par::map_slice(cfg.exec, &entries, |e| verify_entry(e, rc));
            let report = CatalogReport::new(verdicts);
            let status = if report.passed { 0 } else { 1 };
            (render(&report, rc.format)?, status)
        }
    };
    Ok(Outcome {
        output: rendered,
        status,
    })
}

#[cfg(feature = "parallel")]
fn in_pool<T: Send>(threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match threads {
        Some(n) if n > 1 => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(n)
                .build()
                .map_err(|e| Error::Internal(e.to_string()))?;
            Ok(pool.install(f))
        }
        _ => Ok(f()),
    }
}

#[cfg(not(feature = "parallel"))]
fn in_pool<T: Send>(_threads: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    Ok(f())
}

/// Runs `cli` and writes its report to `--out` or stdout. Returns the exit
/// code for a run that produced a report.
pub fn execute(cli: &Cli) -> Result<u8> {
    let rc = RunConfig::from_cli(cli);
    let outcome = in_pool(rc.threads, || run(&cli.command, &rc))??;
    match &cli.out {
        Some(path) => std::fs::write(path, &outcome.output)?,
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.output.as_bytes())?;
            stdout.flush()?;
        }
    }
    Ok(outcome.status)
}
