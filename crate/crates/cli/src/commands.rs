//! Command implementations and the error-to-exit-code policy.
//!
//! Exit codes follow the usage=64 / data=65 convention with exit 2 reserved
//! for mathematically invalid construction parameters, so shell pipelines
//! can tell user error from precondition failure from a genuine FAIL
//! (exit 1).

use std::fs;
use std::path::{Path, PathBuf};

use mocs_core::constructions::{
    build_gcs_theorem1, build_mocs_corollary1, build_mocs_theorem2, Method,
};
use mocs_core::correlation::ZeroTestMode;
use mocs_core::enumeration::{enumerate_existence, ExistenceRecord};
use mocs_core::tables::{check_against_table, PaperTable};
use mocs_core::verification::{verify_gcs, verify_mocs};

use crate::args::{Command, MethodArg, ModeArg};
use crate::family_file::{parse_parts_spec, parts_spec, FamilyFile, ParseError};

/// Anything that aborts a command, with its exit code.
#[derive(Debug)]
pub enum CliError {
    /// Malformed arguments or refused parameters (exit 64).
    Usage(String),
    /// Unreadable or unparseable input data (exit 65).
    Data { path: PathBuf, error: ParseError },
    /// Input file cannot be opened (exit 66).
    MissingInput { path: PathBuf, error: std::io::Error },
    /// A mathematically invalid parameter set (exit 2).
    Precondition(mocs_core::Error),
    /// Output could not be written (exit 74).
    WriteFailed { path: PathBuf, error: std::io::Error },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 64,
            CliError::Data { .. } => 65,
            CliError::MissingInput { .. } => 66,
            CliError::Precondition(_) => 2,
            CliError::WriteFailed { .. } => 74,
        }
    }

    pub fn message(&self) -> String {
        match self {
            CliError::Usage(msg) => msg.clone(),
            CliError::Data { path, error } => format!("{}: {error}", path.display()),
            CliError::MissingInput { path, error } => format!("{}: {error}", path.display()),
            CliError::Precondition(err) => format!("invalid parameters: {err}"),
            CliError::WriteFailed { path, error } => format!("{}: {error}", path.display()),
        }
    }
}

/// Run a command; the result is the process exit code.
pub fn dispatch(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Construct { q, m, t, parts, g, method, out } => {
            construct(q, m, t, &parts, g.as_deref(), method, out.as_deref())
        }
        Command::Verify { path, mode, tolerance } => verify(&path, mode, tolerance),
        Command::Enumerate { q, max_m, max_length, check_table, machine } => {
            enumerate(q, max_m, max_length, check_table, machine)
        }
    }
}

fn construct(
    q: u32,
    m: u32,
    t: u32,
    parts: &str,
    g: Option<&str>,
    method: MethodArg,
    out: Option<&Path>,
) -> Result<i32, CliError> {
    let parts = parse_parts_spec(parts).map_err(CliError::Usage)?;
    let g: Vec<u32> = match g {
        None => Vec::new(),
        Some(spec) => spec
            .split(',')
            .map(|v| v.trim().parse::<u32>())
            .collect::<Result<_, _>>()
            .map_err(|_| CliError::Usage(format!("bad --g value `{spec}`")))?,
    };
    let plan = mocs_core::constructions::PartitionPlan::new(m, parts, t)
        .map_err(CliError::Precondition)?;

    let file = match method {
        MethodArg::Gcs => {
            let set = build_gcs_theorem1(q, &plan, &g).map_err(CliError::Precondition)?;
            FamilyFile::from_set(q, plan, g, set)
        }
        MethodArg::Mocs => {
            let family =
                build_mocs_theorem2(q, &plan, &g).map_err(CliError::Precondition)?;
            FamilyFile::from_family(family)
        }
        MethodArg::MocsCor => {
            let family =
                build_mocs_corollary1(q, &plan, &g).map_err(CliError::Precondition)?;
            FamilyFile::from_family(family)
        }
    };

    let summary = format!(
        "(M, N, L) = ({}, {}, {})",
        file.set_size(),
        file.flock_size(),
        file.length()
    );
    let text = file.to_text();
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|error| CliError::WriteFailed {
                path: path.to_path_buf(),
                error,
            })?;
            println!("{summary}");
        }
        None => {
            print!("{text}");
            eprintln!("{summary}");
        }
    }
    Ok(0)
}

fn resolve_mode(mode: Option<ModeArg>, tolerance: f64) -> Result<ZeroTestMode, CliError> {
    let arg = match mode {
        Some(arg) => arg,
        None => match std::env::var("MOCS_FORGE_MODE") {
            Err(_) => ModeArg::Exact,
            Ok(value) => match value.trim().to_ascii_lowercase().as_str() {
                "exact" | "" => ModeArg::Exact,
                "float" => ModeArg::Float,
                other => {
                    return Err(CliError::Usage(format!(
                        "MOCS_FORGE_MODE must be `exact` or `float`, got `{other}`"
                    )))
                }
            },
        },
    };
    Ok(match arg {
        ModeArg::Exact => ZeroTestMode::Exact,
        ModeArg::Float => ZeroTestMode::Float { tolerance },
    })
}

fn verify(path: &Path, mode: Option<ModeArg>, tolerance: f64) -> Result<i32, CliError> {
    let mode = resolve_mode(mode, tolerance)?;
    let text = fs::read_to_string(path).map_err(|error| CliError::MissingInput {
        path: path.to_path_buf(),
        error,
    })?;
    let file = FamilyFile::parse(&text).map_err(|error| CliError::Data {
        path: path.to_path_buf(),
        error,
    })?;

    let report = match file.method {
        Method::Gcs => {
            if file.set_size() != 1 {
                return Err(CliError::Data {
                    path: path.to_path_buf(),
                    error: ParseError {
                        line: 1,
                        col: 1,
                        message: format!("gcs file must hold one set, found {}", file.set_size()),
                    },
                });
            }
            verify_gcs(&file.sets[0], mode)
        }
        Method::Mocs | Method::MocsCor => {
            let family = file.into_family().map_err(|e| CliError::Data {
                path: path.to_path_buf(),
                error: ParseError { line: 1, col: 1, message: e.to_string() },
            })?;
            verify_mocs(&family, mode)
        }
    };
    println!("{report}");
    Ok(if report.passed { 0 } else { 1 })
}

fn witness_spec(record: &ExistenceRecord) -> String {
    format!(
        "q={} m={} t={} parts={}",
        record.q,
        record.witness.m(),
        record.witness.t(),
        parts_spec(&record.witness)
    )
}

fn enumerate(
    q: u32,
    max_m: u32,
    max_length: u64,
    check_table: Option<u32>,
    machine: bool,
) -> Result<i32, CliError> {
    let table = match check_table {
        None => None,
        Some(idx) => Some(PaperTable::from_index(idx).ok_or_else(|| {
            CliError::Usage(format!("--check-table must be 1 or 2, got {idx}"))
        })?),
    };
    let records = enumerate_existence(q, max_m, max_length)
        .map_err(|e| CliError::Usage(format!("refused: {e}")))?;

    if machine {
        for r in &records {
            println!(
                "{} {} {} {} {}",
                r.set_size,
                r.flock_size,
                r.length,
                r.construction,
                witness_spec(r)
            );
        }
    } else {
        println!("{:>4} {:>4} {:>5}  {:<12} witness", "M", "N", "L", "construction");
        for r in &records {
            println!(
                "{:>4} {:>4} {:>5}  {:<12} {}",
                r.set_size,
                r.flock_size,
                r.length,
                r.construction.tag(),
                witness_spec(r)
            );
        }
        println!("{} cells, every witness verified", records.len());
    }

    if let Some(table) = table {
        let check = check_against_table(&records, table);
        if !check.beyond_table.is_empty() {
            println!("beyond-table cells (achieved, outside the table grid):");
            for (m, n, l, c) in &check.beyond_table {
                println!("  ({m},{n}) length {l} via {c}");
            }
        }
        if check.matched() {
            println!("table cells matched");
        } else {
            println!("table mismatches:");
            for mismatch in &check.mismatches {
                println!("  {mismatch}");
            }
            return Ok(1);
        }
    }
    Ok(0)
}
