//! Rendering of results as plain text, quoted CSV or JSON.

use clap::ValueEnum;
use habiro::asym::RatioSample;
use habiro::families::FamilySpec;
use habiro::signcheck::{PositivityVerdict, RemarkCertificate};
use num_bigint::BigInt;
use serde_json::{json, Value};

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
    Plain,
}

fn csv_row<S: AsRef<str>>(cells: &[S]) -> String {
    let q: Vec<String> = cells
        .iter()
        .map(|c| format!("\"{}\"", c.as_ref().replace('"', "\"\"")))
        .collect();
    q.join(",") + "\n"
}

fn json_line(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("serializable") + "\n"
}

fn params_string(spec: &FamilySpec) -> String {
    let p: Vec<String> = spec.params().iter().map(|(k, v)| format!("{k}={v}")).collect();
    p.join(" ")
}

fn header(spec: &FamilySpec) -> String {
    let p = params_string(spec);
    if p.is_empty() {
        spec.name().to_string()
    } else {
        format!("{} {p}", spec.name())
    }
}

pub fn coefficients(format: Format, spec: &FamilySpec, transform: &str, coeffs: &[BigInt]) -> String {
    match format {
        Format::Plain => {
            let v: Vec<String> = coeffs.iter().map(|c| c.to_string()).collect();
            v.join(", ") + "\n"
        }
        Format::Csv => {
            let mut s = csv_row(&["n", "coefficient"]);
            for (i, c) in coeffs.iter().enumerate() {
                s += &csv_row(&[i.to_string(), c.to_string()]);
            }
            s
        }
        Format::Json => json_line(&json!({
            "family": spec.name(),
            "params": spec.params(),
            "transform": transform,
            "N": coeffs.len().saturating_sub(1),
            "coefficients": coeffs.iter().map(|c| c.to_string()).collect::<Vec<_>>(),
        })),
    }
}

pub enum CrossCheck {
    Pass { n: usize },
    Mismatch { index: usize, direct: String, theta: String },
}

impl CrossCheck {
    pub fn passed(&self) -> bool {
        matches!(self, CrossCheck::Pass { .. })
    }

    pub fn render(&self, format: Format, spec: &FamilySpec) -> String {
        match (format, self) {
            (Format::Plain, CrossCheck::Pass { n }) => format!("{}: pass (0..={n})\n", header(spec)),
            (Format::Plain, CrossCheck::Mismatch { index, direct, theta }) => {
                format!("{}: mismatch at n={index}: direct={direct} theta={theta}\n", header(spec))
            }
            (Format::Csv, CrossCheck::Pass { n }) => {
                csv_row(&["family", "params", "result", "n", "direct", "theta"])
                    + &csv_row(&[spec.name(), &params_string(spec), "pass", &n.to_string(), "", ""])
            }
            (Format::Csv, CrossCheck::Mismatch { index, direct, theta }) => {
                csv_row(&["family", "params", "result", "n", "direct", "theta"])
                    + &csv_row(&[
                        spec.name(),
                        &params_string(spec),
                        "mismatch",
                        &index.to_string(),
                        direct,
                        theta,
                    ])
            }
            (Format::Json, CrossCheck::Pass { n }) => json_line(&json!({
                "family": spec.name(),
                "params": spec.params(),
                "result": "pass",
                "N": n,
            })),
            (Format::Json, CrossCheck::Mismatch { index, direct, theta }) => json_line(&json!({
                "family": spec.name(),
                "params": spec.params(),
                "result": "mismatch",
                "index": index,
                "direct": direct,
                "theta": theta,
            })),
        }
    }
}

fn verdict_name(v: &PositivityVerdict) -> String {
    serde_json::to_value(v.verdict)
        .ok()
        .and_then(|x| x.as_str().map(str::to_string))
        .unwrap_or_default()
}

pub fn verdicts(format: Format, specs: &[FamilySpec], vs: &[PositivityVerdict]) -> String {
    match format {
        Format::Plain => specs
            .iter()
            .zip(vs)
            .map(|(s, v)| {
                let n = v.n_used.map_or_else(|| "-".into(), |n| n.to_string());
                let mut line = format!("{}: N_used={n} {}", header(s), verdict_name(v));
                if let Some(note) = &v.note {
                    line += &format!(" ({note})");
                }
                line + "\n"
            })
            .collect(),
        Format::Csv => {
            let mut s = csv_row(&["family", "params", "N_used", "verdict"]);
            for (spec, v) in specs.iter().zip(vs) {
                let n = v.n_used.map(|n| n.to_string()).unwrap_or_default();
                s += &csv_row(&[spec.name().to_string(), params_string(spec), n, verdict_name(v)]);
            }
            s
        }
        Format::Json => json_line(&serde_json::to_value(vs).expect("serializable")),
    }
}

pub fn ratios(format: Format, spec: &FamilySpec, transform: &str, rows: &[RatioSample]) -> String {
    let cells = |r: &RatioSample| {
        [
            r.n.to_string(),
            r.digits.to_string(),
            format!("{:.12e}", r.log_ratio.mid_f64()),
            format!("{:.15}", r.ratio.mid_f64()),
        ]
    };
    match format {
        Format::Csv | Format::Plain => {
            let mut s = csv_row(&["n", "digits", "log_ratio", "ratio"]);
            for r in rows {
                s += &csv_row(&cells(r));
            }
            s
        }
        Format::Json => {
            let v: Vec<Value> = rows
                .iter()
                .map(|r| {
                    let [n, d, l, q] = cells(r);
                    json!({"n": n, "digits": d, "log_ratio": l, "ratio": q})
                })
                .collect();
            json_line(&json!({
                "family": spec.name(),
                "params": spec.params(),
                "transform": transform,
                "samples": v,
            }))
        }
    }
}

pub fn remark(format: Format, cert: &RemarkCertificate) -> String {
    match format {
        Format::Json => json_line(&serde_json::to_value(cert).expect("serializable")),
        Format::Plain | Format::Csv => {
            let mut s = format!(
                "certified: c = {}, d = {}, l = c m + d for m = {} (mod {})\n",
                cert.c, cert.d, cert.m0, cert.modulus
            );
            for (m, l, n) in &cert.samples {
                s += &format!("  m={m} l={l} N={n}\n");
            }
            s
        }
    }
}
