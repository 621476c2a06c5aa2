//! `nilcone`: batch front end for the semistable nilpotent cone computations.
//!
//! Exit status is 0 on success, 1 on usage or domain errors and 2 when an
//! internal invariant fails (including a failed `verify` suite).

mod cache;
mod render;

use std::fs;
use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use nilcone::chains::{kappa_census_with, kappa_with, C0Policy};
use nilcone::kac::{count_abs_indec, crosscheck, kac_polynomial, kac_polynomial_from_oracle};
use nilcone::polytope::{build_system, census, enumerate_lattice_points, variable_bounds};
use nilcone::verify::{self, VerifyOptions, SUITES};
use nilcone::{is_semistable_regions, GenusContext, JordanRecord, JordanType, SCHEMA_VERSION};

use cache::{Cache, CacheKey};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Domain(#[from] nilcone::Error),
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Failed(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
    #[error("csv: {0}")]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Domain(e) if e.is_internal() => 2,
            CliError::Failed(_) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Parser)]
#[command(name = "nilcone", version, about = "Semistable components of the global nilpotent cone, computed exactly")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Neither read nor write the result cache.
    #[arg(long, global = true)]
    no_cache: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct Triple {
    #[arg(long)]
    g: i64,
    #[arg(long)]
    r: i64,
    #[arg(long, allow_negative_numbers = true)]
    d: i64,
}

#[derive(Debug, Args)]
struct TypeInput {
    /// Path to a Jordan-type JSON file, or `-` for standard input.
    #[arg(long, conflicts_with = "json")]
    input: Option<PathBuf>,
    /// The Jordan type inline, e.g. '{"g":2,"r":[0,1],"d":[1,1]}'.
    #[arg(long)]
    json: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum PolytopeQuery {
    Bounds,
    Count,
    Points,
}

/// What a (C0) transposition inside kappa may change.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Policy {
    /// Nothing else.
    Strict,
    /// Only the check-region conditions, which later mutations revisit.
    KeepEstablished,
}

impl From<Policy> for C0Policy {
    fn from(p: Policy) -> Self {
        match p {
            Policy::Strict => C0Policy::Strict,
            Policy::KeepEstablished => C0Policy::KeepEstablished,
        }
    }
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Semistable Jordan types of class (r, d), counted per partition of r.
    Census {
        #[command(flatten)]
        t: Triple,
        /// Also list the degree vectors.
        #[arg(long)]
        points: bool,
    },
    /// Semistability of one Jordan type.
    CheckType {
        #[command(flatten)]
        input: TypeInput,
    },
    /// The chain type assigned to a semistable Jordan type.
    Kappa {
        #[command(flatten)]
        input: TypeInput,
        #[arg(long, value_enum, default_value = "strict")]
        c0_policy: Policy,
    },
    /// Chain types of every semistable Jordan type of class (r, d).
    KappaCensus {
        #[command(flatten)]
        t: Triple,
        #[arg(long, value_enum, default_value = "strict")]
        c0_policy: Policy,
    },
    /// The inequality system for one partition.
    Polytope {
        #[arg(long)]
        g: i64,
        /// Multiplicities r_1,...,r_s.
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true)]
        rvec: Vec<i64>,
        #[arg(long, allow_negative_numbers = true)]
        d: i64,
        #[arg(value_enum)]
        query: PolytopeQuery,
    },
    /// The Kac polynomial of the g-loop quiver in dimension r.
    Kac {
        #[arg(long)]
        g: i64,
        #[arg(long)]
        r: i64,
        /// Print only A(1).
        #[arg(long)]
        at_one: bool,
        /// Count absolutely indecomposables over F_q by brute force instead.
        #[arg(long)]
        oracle: Option<u64>,
        /// Interpolate the polynomial from brute-force counts.
        #[arg(long, conflicts_with = "oracle")]
        interpolate: bool,
    },
    /// Census total against A_{g,r}(1).
    Crosscheck {
        #[command(flatten)]
        t: Triple,
    },
    /// Run self-check suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
        #[arg(long, default_value_t = VerifyOptions::default().seed)]
        seed: u64,
    },
}

fn read_type(input: &TypeInput) -> Result<JordanType, CliError> {
    let text = match (&input.input, &input.json) {
        (_, Some(j)) => j.clone(),
        (Some(p), None) if p.as_os_str() == "-" => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            s
        }
        (Some(p), None) => fs::read_to_string(p)?,
        (None, None) => return Err(CliError::Usage("give a Jordan type with --input or --json".into())),
    };
    let rec: JordanRecord = serde_json::from_str(&text).map_err(|e| CliError::Usage(format!("bad Jordan type: {e}")))?;
    Ok(JordanType::from_record(&rec)?)
}

fn genus(g: i64) -> Result<GenusContext, CliError> {
    Ok(GenusContext::new(g)?)
}

/// Looks up `key` unless caching is off; otherwise computes and stores.
fn cached(
    cache: Option<&Cache>,
    key: CacheKey,
    compute: impl FnOnce() -> Result<Value, CliError>,
) -> Result<Value, CliError> {
    if let Some(c) = cache {
        if let Some(hit) = c.get(&key) {
            return Ok(hit);
        }
    }
    let value = compute()?;
    if let Some(c) = cache {
        // the cache is an optimization; a write failure is not fatal
        if let Err(e) = c.put(key, &value) {
            eprintln!("warning: could not write cache: {e}");
        }
    }
    Ok(value)
}

fn key(g: i64, r: i64, d: Option<i64>, command: &str) -> CacheKey {
    CacheKey { g, r, d, command: command.into(), version: SCHEMA_VERSION }
}

fn run(cli: Cli) -> Result<String, CliError> {
    let cache = if cli.no_cache { None } else { Cache::from_env() };
    let cache = cache.as_ref();
    let fmt = cli.format;
    match cli.command {
        Command::Census { t, points } => {
            let ctx = genus(t.g)?;
            let name = if points { "census+points" } else { "census" };
            let v = cached(cache, key(t.g, t.r, Some(t.d), name), || {
                Ok(serde_json::to_value(census(ctx, t.r, t.d, points)?)?)
            })?;
            render::census(&v, fmt)
        }
        Command::CheckType { input } => {
            let jt = read_type(&input)?;
            render::single(&serde_json::to_value(is_semistable_regions(&jt)?)?, fmt)
        }
        Command::Kappa { input, c0_policy } => {
            let jt = read_type(&input)?;
            render::single(&serde_json::to_value(kappa_with(&jt, c0_policy.into())?)?, fmt)
        }
        Command::KappaCensus { t, c0_policy } => {
            let ctx = genus(t.g)?;
            let name = match c0_policy {
                Policy::Strict => "kappa-census",
                Policy::KeepEstablished => "kappa-census+keep-established",
            };
            let v = cached(cache, key(t.g, t.r, Some(t.d), name), || {
                Ok(serde_json::to_value(kappa_census_with(ctx, t.r, t.d, c0_policy.into())?)?)
            })?;
            render::kappa_census(&v, fmt)
        }
        Command::Polytope { g, rvec, d, query } => {
            let sys = build_system(genus(g)?, &rvec, d)?;
            match query {
                PolytopeQuery::Bounds => match variable_bounds(&sys) {
                    Ok(b) => render::bounds(&b, fmt),
                    Err(nilcone::Error::Infeasible) => render::single(&json!({ "feasible": false }), fmt),
                    Err(e) => Err(e.into()),
                },
                PolytopeQuery::Count => Ok(format!("{}\n", enumerate_lattice_points(&sys)?.len())),
                PolytopeQuery::Points => render::points(&enumerate_lattice_points(&sys)?, fmt),
            }
        }
        Command::Kac { g, r, at_one, oracle, interpolate } => {
            if let Some(q) = oracle {
                let n = count_abs_indec(g, r, q)?;
                return render::single(&json!({ "g": g, "r": r, "q": q, "count": n }), fmt);
            }
            let a = if interpolate { kac_polynomial_from_oracle(g, r)? } else { kac_polynomial(g, r)? };
            if at_one {
                return Ok(format!("{}\n", a.at_one()));
            }
            render::kac(&a, fmt)
        }
        Command::Crosscheck { t } => {
            let ctx = genus(t.g)?;
            let v = cached(cache, key(t.g, t.r, Some(t.d), "crosscheck"), || {
                Ok(serde_json::to_value(crosscheck(ctx, t.r, t.d)?)?)
            })?;
            let out = render::single(&v, fmt)?;
            if v["equal"] != Value::Bool(true) {
                print!("{out}");
                return Err(CliError::Failed(format!(
                    "census total {} differs from A(1) = {}",
                    v["census_total"], v["kac_at_one"]
                )));
            }
            Ok(out)
        }
        Command::Verify { suite, seed } => {
            let corrupt = std::env::var_os("NILCONE_FAULT").is_some_and(|v| !v.is_empty() && v != "0");
            let opts = VerifyOptions { seed, corrupt };
            let reports = verify::run(&suite, opts).ok_or_else(|| {
                CliError::Usage(format!("unknown suite {suite:?}; choose all or one of {}", SUITES.join(", ")))
            })?;
            let out = render::verify(&reports, fmt)?;
            if let Some(bad) = reports.iter().find(|r| !r.passed) {
                print!("{out}");
                return Err(CliError::Failed(format!(
                    "suite {} failed: {}",
                    bad.suite,
                    bad.failure.as_deref().unwrap_or("unknown")
                )));
            }
            Ok(out)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(out) => {
            print!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
