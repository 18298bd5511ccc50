//! Rendering of results as JSON, CSV, or a human-readable table.
//!
//! The JSON shape is `{"result": ..., "meta": {...}}`; identical inputs and
//! seeds produce byte-identical output (coefficients are emitted as exact
//! JSON integers via serde_json's arbitrary-precision numbers).

use std::fmt::Write as _;
use std::str::FromStr;

use clap::ValueEnum;
use num_bigint::BigInt;
use serde_json::{json, Map, Number, Value};

use colorlie::{EstimateMethod, GrowthClassification, GrowthEstimate};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Default)]
pub struct Meta {
    pub truncation: Option<usize>,
    pub seed: Option<u64>,
    pub window: Option<(usize, usize)>,
}

#[derive(Debug)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug)]
pub enum Payload {
    Scalar(BigInt),
    Series(Vec<BigInt>),
    Estimate(GrowthEstimate),
    Checks(Vec<Check>),
}

pub fn render(payload: &Payload, meta: &Meta, format: OutputFormat) -> String {
    match format {
        OutputFormat::Json => render_json(payload, meta),
        OutputFormat::Csv => render_csv(payload),
        OutputFormat::Table => render_table(payload, meta),
    }
}

fn method_name(m: EstimateMethod) -> &'static str {
    match m {
        EstimateMethod::RootTest => "root_test",
        EstimateMethod::RatioTest => "ratio_test",
    }
}

fn classification_name(c: GrowthClassification) -> &'static str {
    match c {
        GrowthClassification::Exponential => "exponential",
        GrowthClassification::PolynomiallyBounded => "polynomially_bounded",
        GrowthClassification::Intermediate => "intermediate",
        GrowthClassification::Inconclusive => "inconclusive",
    }
}

/// Exact JSON integer from a big integer.
fn big_number(v: &BigInt) -> Value {
    Value::Number(Number::from_str(&v.to_string()).expect("decimal integer"))
}

fn estimate_value(e: &GrowthEstimate) -> Value {
    json!({
        "rate": e.rate,
        "method": method_name(e.method),
        "window": [e.window.0, e.window.1],
        "classification": classification_name(e.classification),
    })
}

fn render_json(payload: &Payload, meta: &Meta) -> String {
    let result = match payload {
        Payload::Scalar(v) => big_number(v),
        Payload::Series(coeffs) => Value::Array(coeffs.iter().map(big_number).collect()),
        Payload::Estimate(e) => estimate_value(e),
        Payload::Checks(checks) => json!({
            "passed": checks.iter().all(|c| c.passed),
            "checks": checks.iter().map(|c| json!({
                "name": c.name,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
        }),
    };
    let mut meta_map = Map::new();
    if let Some(t) = meta.truncation {
        meta_map.insert("truncation".into(), json!(t));
    }
    if let Some(s) = meta.seed {
        meta_map.insert("seed".into(), json!(s));
    }
    if let Some((a, b)) = meta.window {
        meta_map.insert("window".into(), json!([a, b]));
    }
    let doc = json!({ "result": result, "meta": Value::Object(meta_map) });
    let mut text = serde_json::to_string(&doc).expect("serializable document");
    text.push('\n');
    text
}

fn csv_quote(text: &str) -> String {
    format!("\"{}\"", text.replace('"', "\"\""))
}

fn render_csv(payload: &Payload) -> String {
    let mut out = String::new();
    match payload {
        Payload::Scalar(v) => {
            out.push_str("result\n");
            let _ = writeln!(out, "{v}");
        }
        Payload::Series(coeffs) => {
            out.push_str("degree,coefficient\n");
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{n},{c}");
            }
        }
        Payload::Estimate(e) => {
            out.push_str("rate,method,window_start,window_end,classification\n");
            let _ = writeln!(
                out,
                "{},{},{},{},{}",
                e.rate,
                method_name(e.method),
                e.window.0,
                e.window.1,
                classification_name(e.classification)
            );
        }
        Payload::Checks(checks) => {
            out.push_str("check,passed,detail\n");
            for c in checks {
                let _ = writeln!(
                    out,
                    "{},{},{}",
                    csv_quote(&c.name),
                    c.passed,
                    csv_quote(&c.detail)
                );
            }
        }
    }
    out
}

fn render_table(payload: &Payload, meta: &Meta) -> String {
    let mut out = String::new();
    match payload {
        Payload::Scalar(v) => {
            let _ = writeln!(out, "{v}");
        }
        Payload::Series(coeffs) => {
            out.push_str("degree  coefficient\n");
            for (n, c) in coeffs.iter().enumerate() {
                let _ = writeln!(out, "{n:>6}  {c}");
            }
        }
        Payload::Estimate(e) => {
            let _ = writeln!(out, "rate:            {}", e.rate);
            let _ = writeln!(out, "method:          {}", method_name(e.method));
            let _ = writeln!(out, "window:          {}..{}", e.window.0, e.window.1);
            let _ = writeln!(
                out,
                "classification:  {}",
                classification_name(e.classification)
            );
        }
        Payload::Checks(checks) => {
            for c in checks {
                let mark = if c.passed { "ok  " } else { "FAIL" };
                let _ = writeln!(out, "[{mark}] {}: {}", c.name, c.detail);
            }
            let all = checks.iter().all(|c| c.passed);
            let _ = writeln!(
                out,
                "{} of {} checks passed{}",
                checks.iter().filter(|c| c.passed).count(),
                checks.len(),
                if all { "" } else { " -- MISMATCH" }
            );
        }
    }
    if let Some((a, b)) = meta.window {
        if matches!(payload, Payload::Scalar(_) | Payload::Series(_)) {
            let _ = writeln!(out, "window: {a}..{b}");
        }
    }
    out
}
