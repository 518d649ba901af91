use std::fs::File;
use std::io::{self, Write};
use std::path::Path;
use std::str::FromStr;

use serde_json::Value;

use crate::error::{Error, Result};

use super::summary::GrowthReport;

/// Significant digits for every real number written out.
pub const SIGNIFICANT_DIGITS: usize = 12;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum OutputFormat {
    #[default]
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidArgument(format!(
                "unsupported format '{other}'"
            ))),
        }
    }
}

/// Formats `x` with `digits` significant digits, dropping trailing zeros:
/// `2.0 → "2"`, `1/3 → "0.333333333333"`.
pub fn format_sig(x: f64, digits: usize) -> String {
    if x == 0.0 {
        return "0".into();
    }
    if !x.is_finite() {
        return x.to_string();
    }
    let sci = format!("{:.*e}", digits.max(1) - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("scientific notation");
    let exp: i32 = exp.parse().expect("integer exponent");
    let (sign, mantissa) = match mantissa.strip_prefix('-') {
        Some(m) => ("-", m),
        None => ("", mantissa),
    };
    let sig: String = mantissa.chars().filter(char::is_ascii_digit).collect();

    let trim = |int: String, frac: String| {
        let frac = frac.trim_end_matches('0');
        if frac.is_empty() {
            format!("{sign}{int}")
        } else {
            format!("{sign}{int}.{frac}")
        }
    };
    if (-5..16).contains(&exp) {
        if exp >= 0 {
            let split = exp as usize + 1;
            if split >= sig.len() {
                format!("{sign}{sig}{}", "0".repeat(split - sig.len()))
            } else {
                trim(sig[..split].to_string(), sig[split..].to_string())
            }
        } else {
            trim(
                "0".into(),
                format!("{}{sig}", "0".repeat((-exp - 1) as usize)),
            )
        }
    } else {
        let head = trim(sig[..1].to_string(), sig[1..].to_string());
        format!("{head}e{exp}")
    }
}

fn round_sig(x: f64) -> f64 {
    format_sig(x, SIGNIFICANT_DIGITS).parse().unwrap_or(x)
}

/// Rounds every floating-point number in `value` to [`SIGNIFICANT_DIGITS`].
pub fn round_reals(value: &mut Value) {
    match value {
        Value::Number(n) if n.is_f64() => {
            if let Some(r) = n
                .as_f64()
                .map(round_sig)
                .and_then(serde_json::Number::from_f64)
            {
                *n = r;
            }
        }
        Value::Array(items) => items.iter_mut().for_each(round_reals),
        Value::Object(map) => map.values_mut().for_each(round_reals),
        _ => {}
    }
}

fn write_out(dest: Option<&Path>, bytes: &[u8]) -> Result<()> {
    match dest {
        Some(path) => {
            let io_err = |source| Error::Io {
                path: path.display().to_string(),
                source,
            };
            let mut file = File::create(path).map_err(io_err)?;
            file.write_all(bytes).map_err(io_err)
        }
        None => io::stdout().write_all(bytes).map_err(|source| Error::Io {
            path: "<stdout>".into(),
            source,
        }),
    }
}

fn csv_cell(value: &Value) -> String {
    match value {
        Value::Null => String::new(),
        Value::String(s) => s.clone(),
        Value::Number(n) => match n.as_f64() {
            Some(f) if n.is_f64() => format_sig(f, SIGNIFICANT_DIGITS),
            _ => n.to_string(),
        },
        other => other.to_string(),
    }
}

fn csv_bytes(header: &[String], rows: &[Vec<String>]) -> Result<Vec<u8>> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    let csv_err = |e: csv::Error| Error::Invariant(format!("csv encoding failed: {e}"));
    writer.write_record(header).map_err(csv_err)?;
    for row in rows {
        writer.write_record(row).map_err(csv_err)?;
    }
    writer
        .into_inner()
        .map_err(|e| Error::Invariant(format!("csv encoding failed: {e}")))
}

fn json_bytes(value: &Value) -> Vec<u8> {
    let mut value = value.clone();
    round_reals(&mut value);
    let mut out = serde_json::to_vec_pretty(&value).expect("JSON values always serialize");
    out.push(b'\n');
    out
}

/// Writes summary rows. JSON is an array of full records; CSV has one row
/// per pair with the four rates. Existing files are overwritten.
pub fn emit_report(
    reports: &[GrowthReport],
    format: OutputFormat,
    dest: Option<&Path>,
) -> Result<()> {
    let bytes = match format {
        OutputFormat::Json => {
            let value =
                serde_json::to_value(reports).map_err(|e| Error::Invariant(e.to_string()))?;
            json_bytes(&value)
        }
        OutputFormat::Csv => {
            let header =
                ["pair", "s_max", "s_ave", "s_gen", "lambda", "s_ave_exact"].map(String::from);
            let rows: Vec<Vec<String>> = reports
                .iter()
                .map(|r| {
                    vec![
                        r.pair.clone(),
                        format_sig(r.s_max, SIGNIFICANT_DIGITS),
                        format_sig(r.s_ave, SIGNIFICANT_DIGITS),
                        format_sig(r.s_gen, SIGNIFICANT_DIGITS),
                        format_sig(r.lambda, SIGNIFICANT_DIGITS),
                        r.s_ave_exact
                            .as_ref()
                            .map(ToString::to_string)
                            .unwrap_or_default(),
                    ]
                })
                .collect();
            csv_bytes(&header, &rows)?
        }
    };
    write_out(dest, &bytes)
}

/// Writes an arbitrary record. In CSV an array of objects becomes one row per
/// element and a single object one row; nested values are embedded as JSON.
pub fn emit_value(value: &Value, format: OutputFormat, dest: Option<&Path>) -> Result<()> {
    let bytes = match format {
        OutputFormat::Json => json_bytes(value),
        OutputFormat::Csv => {
            let objects: Vec<&serde_json::Map<String, Value>> = match value {
                Value::Array(items) => items.iter().filter_map(Value::as_object).collect(),
                Value::Object(map) => vec![map],
                _ => Vec::new(),
            };
            let header: Vec<String> = objects
                .first()
                .map(|o| o.keys().cloned().collect())
                .unwrap_or_default();
            let rows: Vec<Vec<String>> = objects
                .iter()
                .map(|o| {
                    header
                        .iter()
                        .map(|k| o.get(k).map(csv_cell).unwrap_or_default())
                        .collect()
                })
                .collect();
            csv_bytes(&header, &rows)?
        }
    };
    write_out(dest, &bytes)
}
