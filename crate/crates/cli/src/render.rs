//! JSON and CSV rendering of command results.

use num_rational::BigRational;
use serde_json::Value;

use nilcone::class::fmt_rational;
use nilcone::kac::KacPolynomial;
use nilcone::verify::SuiteReport;

use crate::{CliError, Format};

fn pretty(v: &Value) -> Result<String, CliError> {
    let mut s = serde_json::to_string_pretty(v)?;
    s.push('\n');
    Ok(s)
}

fn csv_out(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(&row)?;
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.into_error()))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn join(v: &Value) -> String {
    v.as_array()
        .map(|a| a.iter().map(Value::to_string).collect::<Vec<_>>().join(","))
        .unwrap_or_default()
}

/// Objects with no tabular form; CSV is refused.
pub fn single(v: &Value, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => pretty(v),
        Format::Csv => Err(CliError::Usage("this command has no CSV form; use --format json".into())),
    }
}

pub fn census(v: &Value, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => pretty(v),
        Format::Csv => {
            let parts = v["partitions"].as_array().cloned().unwrap_or_default();
            let with_points = parts.iter().any(|p| p.get("points").is_some());
            if with_points {
                let rows = parts.iter().flat_map(|p| {
                    let part = join(&p["partition"]);
                    p["points"].as_array().cloned().unwrap_or_default().into_iter().map(move |pt| vec![part.clone(), join(&pt)])
                });
                return csv_out(&["partition", "degrees"], rows);
            }
            let rows = parts.iter().map(|p| vec![join(&p["partition"]), p["count"].to_string()]);
            csv_out(&["partition", "count"], rows)
        }
    }
}

pub fn kappa_census(v: &Value, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => pretty(v),
        Format::Csv => {
            let entries = v["entries"].as_array().cloned().unwrap_or_default();
            let rows = entries.iter().map(|e| {
                vec![join(&e["jordan"]["r"]), join(&e["jordan"]["d"]), join(&e["flag"]), join(&e["n"]), join(&e["p"])]
            });
            csv_out(&["r", "d", "flag", "n", "p"], rows)
        }
    }
}

pub fn bounds(b: &[(BigRational, BigRational)], fmt: Format) -> Result<String, CliError> {
    let rows: Vec<Vec<String>> =
        b.iter().enumerate().map(|(i, (lo, hi))| vec![format!("d_{}", i + 2), fmt_rational(lo), fmt_rational(hi)]).collect();
    match fmt {
        Format::Json => {
            let v: Vec<Value> =
                rows.iter().map(|r| serde_json::json!({ "variable": r[0], "lo": r[1], "hi": r[2] })).collect();
            pretty(&serde_json::json!({ "feasible": true, "bounds": v }))
        }
        Format::Csv => csv_out(&["variable", "lo", "hi"], rows),
    }
}

pub fn points(pts: &[Vec<i64>], fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => pretty(&serde_json::to_value(pts)?),
        Format::Csv => {
            let s = pts.first().map_or(0, Vec::len);
            let header: Vec<String> = (1..=s).map(|k| format!("d_{k}")).collect();
            let header: Vec<&str> = header.iter().map(String::as_str).collect();
            csv_out(&header, pts.iter().map(|p| p.iter().map(i64::to_string).collect()))
        }
    }
}

pub fn kac(a: &KacPolynomial, fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => pretty(&serde_json::json!({
            "g": a.g,
            "r": a.r,
            "coeffs": a.coeffs(),
            "polynomial": a.to_string(),
            "at_one": a.at_one(),
        })),
        Format::Csv => csv_out(
            &["power", "coefficient"],
            a.coeffs().iter().enumerate().map(|(i, c)| vec![i.to_string(), c.to_string()]),
        ),
    }
}

pub fn verify(reports: &[SuiteReport], fmt: Format) -> Result<String, CliError> {
    match fmt {
        Format::Json => {
            let passed = reports.iter().all(|r| r.passed);
            pretty(&serde_json::json!({ "passed": passed, "suites": reports }))
        }
        Format::Csv => csv_out(
            &["suite", "passed", "checks", "failure"],
            reports.iter().map(|r| {
                vec![r.suite.clone(), r.passed.to_string(), r.checks.to_string(), r.failure.clone().unwrap_or_default()]
            }),
        ),
    }
}
