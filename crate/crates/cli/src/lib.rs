//! Report builders behind the `schubertq` binary.
//!
//! Every command produces a [`Report`]: a JSON [`OutputEnvelope`], a flat
//! [`Table`] used for `csv` and `table` output, and a verification flag that
//! decides the exit code.

use std::fmt::Write as _;

use serde::Serialize;
use serde_json::{json, Value};

use schubertq::glbc::{glbc_table, Verdict};
use schubertq::qh::{c1_matrix, pieri};
use schubertq::spectral::{
    closed_form_spectrum, evaluation_points, perron_root, property_o_check, rietsch_check, verify_eigenpairs,
    MAX_VERIFY_RANK,
};
use schubertq::{tolerance, Basis, IntMatrix, Space, StrictPartition};

pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

const PERRON_TOL: f64 = 1e-10;
const PERRON_MAX_ITER: usize = 200_000;
const LEMMA_SLACK: f64 = 1e-12;

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFICATION: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OutputEnvelope {
    pub command: String,
    pub space: Space,
    pub n: u32,
    pub payload: Value,
    pub tool_version: String,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub envelope: OutputEnvelope,
    pub table: Table,
    /// Replaces the table in `table` format when set.
    pub text: Option<String>,
    /// Lines printed below the table in `table` format.
    pub notes: Vec<String>,
    pub verified: bool,
}

impl Report {
    pub fn exit_code(&self) -> i32 {
        if self.verified {
            EXIT_OK
        } else {
            EXIT_VERIFICATION
        }
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.envelope).expect("envelope serializes");
                s.push('\n');
                s
            }
            Format::Csv => render_csv(&self.table),
            Format::Table => {
                let mut s = match &self.text {
                    Some(t) => format!("{t}\n"),
                    None => render_table(&self.table),
                };
                for note in &self.notes {
                    let _ = writeln!(s, "{note}");
                }
                s
            }
        }
    }
}

/// Rounds to 12 significant digits; `-0.0` becomes `0.0`.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return x + 0.0;
    }
    format!("{x:.11e}").parse::<f64>().expect("formatted float parses") + 0.0
}

/// Text form of [`sig12`]; scientific outside `[1e-4, 1e15)`.
pub fn fmt_float(x: f64) -> String {
    let y = sig12(x);
    if y != 0.0 && y.is_finite() && !(1e-4..1e15).contains(&y.abs()) {
        format!("{y:e}")
    } else {
        y.to_string()
    }
}

/// Zeroes values below `1e-12 · max(1, scale)`, which are round-off.
fn chop(x: f64, scale: f64) -> f64 {
    if x.abs() <= 1e-12 * scale.max(1.0) {
        0.0
    } else {
        x
    }
}

fn float_value(x: f64) -> Value {
    json!(sig12(x))
}

fn opt_float(x: Option<f64>) -> Value {
    x.map_or(Value::Null, float_value)
}

fn opt_text(x: Option<f64>) -> String {
    x.map_or_else(|| "-".to_string(), fmt_float)
}

/// Parses `--lambda`: comma-separated parts, empty for `∅`.
pub fn parse_partition(text: &str, n: u32) -> Result<StrictPartition, String> {
    let trimmed = text.trim();
    let parts = if trimmed.is_empty() {
        Vec::new()
    } else {
        trimmed
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<u32>()
                    .map_err(|_| format!("invalid part `{}` in --lambda `{text}`", p.trim()))
            })
            .collect::<Result<Vec<_>, _>>()?
    };
    StrictPartition::new(parts, n).map_err(|e| e.to_string())
}

fn envelope(command: &str, space: Space, n: u32, payload: Value) -> OutputEnvelope {
    OutputEnvelope {
        command: command.to_string(),
        space,
        n,
        payload,
        tool_version: TOOL_VERSION.to_string(),
    }
}

fn usage(e: schubertq::Error) -> String {
    e.to_string()
}

fn strings(xs: &[u32]) -> Vec<String> {
    xs.iter().map(u32::to_string).collect()
}

pub fn cmd_basis(space: Space, n: u32) -> Result<Report, String> {
    let basis = Basis::new(n).map_err(usage)?;
    let elements: Vec<Value> = basis
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| {
            json!({
                "index": i.to_string(),
                "partition": p.to_string(),
                "parts": strings(p.parts()),
                "weight": p.weight().to_string(),
            })
        })
        .collect();
    let rows = basis
        .elements()
        .iter()
        .enumerate()
        .map(|(i, p)| vec![i.to_string(), p.to_string(), p.weight().to_string()])
        .collect();
    Ok(Report {
        envelope: envelope(
            "basis",
            space,
            n,
            json!({ "count": basis.len().to_string(), "elements": elements }),
        ),
        table: Table {
            headers: vec!["index".into(), "partition".into(), "weight".into()],
            rows,
        },
        text: None,
        notes: Vec::new(),
        verified: true,
    })
}

pub fn cmd_pieri(space: Space, n: u32, k: u32, lambda: &str) -> Result<Report, String> {
    let lambda = parse_partition(lambda, n)?;
    let product = pieri(space, k, &lambda).map_err(usage)?;
    let shown = product.to_string();
    let terms: Vec<Value> = product
        .terms
        .iter()
        .map(|t| {
            json!({
                "coeff": t.coeff.to_string(),
                "partition": t.partition.to_string(),
                "parts": strings(t.partition.parts()),
                "q_degree": t.q_degree.to_string(),
            })
        })
        .collect();
    let rows = product
        .terms
        .iter()
        .map(|t| vec![t.coeff.to_string(), t.partition.to_string(), t.q_degree.to_string()])
        .collect();
    Ok(Report {
        envelope: envelope(
            "pieri",
            space,
            n,
            json!({
                "k": k.to_string(),
                "lambda": lambda.to_string(),
                "product": shown,
                "terms": terms,
            }),
        ),
        table: Table {
            headers: vec!["coeff".into(), "partition".into(), "q_degree".into()],
            rows,
        },
        text: Some(shown),
        notes: Vec::new(),
        verified: true,
    })
}

pub fn cmd_matrix(space: Space, n: u32) -> Result<Report, String> {
    let op = c1_matrix(space, n).map_err(usage)?;
    let basis = Basis::new(n).map_err(usage)?;
    let labels: Vec<String> = basis.elements().iter().map(ToString::to_string).collect();
    let rows: Vec<Vec<String>> = op
        .matrix
        .rows()
        .iter()
        .map(|r| r.iter().map(i64::to_string).collect())
        .collect();
    let mut headers = vec!["row".to_string()];
    headers.extend(labels.iter().cloned());
    let table_rows = labels
        .iter()
        .zip(&rows)
        .map(|(l, r)| std::iter::once(l.clone()).chain(r.iter().cloned()).collect())
        .collect();
    Ok(Report {
        envelope: envelope(
            "matrix",
            space,
            n,
            json!({
                "basis": labels,
                "c1_coefficient": space.c1_coefficient(n).to_string(),
                "dim": op.dim().to_string(),
                "rows": rows,
            }),
        ),
        table: Table {
            headers,
            rows: table_rows,
        },
        text: None,
        notes: Vec::new(),
        verified: true,
    })
}

/// Recovers the matrix from `matrix --format json` output.
pub fn parse_matrix_json(text: &str) -> Result<IntMatrix, String> {
    let v: Value = serde_json::from_str(text).map_err(|e| e.to_string())?;
    let rows = v["payload"]["rows"].as_array().ok_or("missing payload.rows")?;
    let parsed = rows
        .iter()
        .map(|r| {
            r.as_array()
                .ok_or("row is not an array")?
                .iter()
                .map(|x| {
                    x.as_str()
                        .ok_or("entry is not a string")?
                        .parse::<i64>()
                        .map_err(|_| "entry is not an integer")
                })
                .collect::<Result<Vec<i64>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    IntMatrix::from_rows(&parsed).map_err(|e| e.to_string())
}

/// Recovers the matrix from `matrix --format csv` output.
pub fn parse_matrix_csv(text: &str) -> Result<IntMatrix, String> {
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let mut rows = Vec::new();
    for record in reader.records() {
        let record = record.map_err(|e| e.to_string())?;
        let row = record
            .iter()
            .skip(1)
            .map(|x| x.parse::<i64>().map_err(|_| format!("entry `{x}` is not an integer")))
            .collect::<Result<Vec<i64>, _>>()?;
        rows.push(row);
    }
    IntMatrix::from_rows(&rows).map_err(|e| e.to_string())
}

pub fn cmd_spectrum(space: Space, n: u32, tol: f64) -> Result<Report, String> {
    let spectrum = closed_form_spectrum(space, n).map_err(usage)?;
    let points = evaluation_points(space, n).map_err(usage)?;
    let scale = spectrum.delta0;
    let (residual, perron) = if n <= MAX_VERIFY_RANK {
        let check = verify_eigenpairs(space, n, tol).map_err(usage)?;
        let m = c1_matrix(space, n).map_err(usage)?;
        let root = perron_root(&m.matrix, PERRON_TOL, PERRON_MAX_ITER).map_err(usage)?;
        (Some(check.max_residual), Some(root))
    } else {
        (None, None)
    };
    let verified = residual.is_none_or(|r| r <= tol)
        && perron.is_none_or(|p| (p - spectrum.delta0).abs() <= tolerance::PERRON_VS_CLOSED);

    let values: Vec<Value> = points
        .iter()
        .zip(&spectrum.values)
        .map(|((idx, _), z)| {
            json!({
                "im": float_value(chop(z.im, scale)),
                "index": idx.to_string(),
                "re": float_value(chop(z.re, scale)),
            })
        })
        .collect();
    let rows = points
        .iter()
        .zip(&spectrum.values)
        .map(|((idx, _), z)| {
            vec![
                idx.to_string(),
                fmt_float(chop(z.re, scale)),
                fmt_float(chop(z.im, scale)),
            ]
        })
        .collect();
    Ok(Report {
        envelope: envelope(
            "spectrum",
            space,
            n,
            json!({
                "delta0": float_value(spectrum.delta0),
                "max_eigen_residual": opt_float(residual),
                "perron_root": opt_float(perron),
                "tol": float_value(tol),
                "values": values,
                "verified": verified,
            }),
        ),
        table: Table {
            headers: vec!["index".into(), "re".into(), "im".into()],
            rows,
        },
        text: None,
        notes: vec![
            format!("delta0 = {}", fmt_float(spectrum.delta0)),
            format!("perron root = {}", opt_text(perron)),
            format!("max eigen residual = {} (tol {})", opt_text(residual), fmt_float(tol)),
        ],
        verified,
    })
}

fn verdict_name(v: Verdict) -> &'static str {
    match v {
        Verdict::Strict => "strict",
        Verdict::Equality => "eq",
        Verdict::Fail => "fail",
    }
}

pub fn cmd_glbc(space: Space, n_max: u32) -> Result<Report, String> {
    let reports = glbc_table(space, n_max).map_err(usage)?;
    let verified = reports.iter().all(|r| {
        r.verdict != Verdict::Fail
            && r.delta0_numeric
                .is_none_or(|d| (d - r.delta0_closed).abs() <= tolerance::PERRON_VS_CLOSED)
            && r.lemma_margin.is_none_or(|m| m >= -LEMMA_SLACK)
    });
    let rows_json: Vec<Value> = reports
        .iter()
        .map(|r| {
            json!({
                "bound": r.bound.to_string(),
                "delta0": float_value(r.delta0_closed),
                "delta0_numeric": opt_float(r.delta0_numeric),
                "dim": r.dim.to_string(),
                "lemma_margin": opt_float(r.lemma_margin),
                "n": r.n.to_string(),
                "verdict": verdict_name(r.verdict),
            })
        })
        .collect();
    let rows = reports
        .iter()
        .map(|r| {
            vec![
                r.n.to_string(),
                r.dim.to_string(),
                r.bound.to_string(),
                fmt_float(r.delta0_closed),
                opt_text(r.delta0_numeric),
                verdict_name(r.verdict).to_string(),
                opt_text(r.lemma_margin),
            ]
        })
        .collect();
    Ok(Report {
        envelope: envelope(
            "glbc",
            space,
            n_max,
            json!({ "n_max": n_max.to_string(), "rows": rows_json, "verified": verified }),
        ),
        table: Table {
            headers: [
                "n",
                "dim",
                "bound",
                "delta0",
                "delta0_numeric",
                "verdict",
                "lemma_margin",
            ]
            .map(String::from)
            .to_vec(),
            rows,
        },
        text: None,
        notes: Vec::new(),
        verified,
    })
}

pub fn cmd_property_o(space: Space, n: u32, tol: f64) -> Result<Report, String> {
    let r = property_o_check(space, n, tol).map_err(usage)?;
    let peripheral: Vec<Value> = r
        .peripheral
        .iter()
        .map(|z| json!({ "im": float_value(chop(z.im, r.delta0)), "re": float_value(chop(z.re, r.delta0)) }))
        .collect();
    let items = [
        ("delta0_is_eigenvalue", r.is_eigenvalue),
        ("delta0_is_simple", r.simple),
        ("peripheral_are_root_of_unity_rotations", r.rotations_by_roots_of_unity),
    ];
    Ok(Report {
        envelope: envelope(
            "property-o",
            space,
            n,
            json!({
                "delta0": float_value(r.delta0),
                "delta0_is_eigenvalue": r.is_eigenvalue,
                "delta0_is_simple": r.simple,
                "fano_index": r.fano_index.to_string(),
                "passed": r.passed(),
                "peripheral": peripheral,
                "peripheral_are_root_of_unity_rotations": r.rotations_by_roots_of_unity,
                "tol": float_value(tol),
            }),
        ),
        table: Table {
            headers: vec!["item".into(), "result".into()],
            rows: items
                .iter()
                .map(|(name, ok)| vec![(*name).to_string(), if *ok { "pass" } else { "fail" }.to_string()])
                .collect(),
        },
        text: None,
        notes: vec![
            format!("delta0 = {}", fmt_float(r.delta0)),
            format!("fano index = {}", r.fano_index),
            format!("peripheral eigenvalues = {}", r.peripheral.len()),
        ],
        verified: r.passed(),
    })
}

/// The maximization runs over the OG index sets, so the envelope reports `og`.
pub fn cmd_rietsch(n: u32) -> Result<Report, String> {
    let r = rietsch_check(n).map_err(usage)?;
    let maximizers: Vec<String> = r.maximizers.iter().map(ToString::to_string).collect();
    Ok(Report {
        envelope: envelope(
            "rietsch",
            Space::Og,
            n,
            json!({
                "expected": float_value(r.expected),
                "maximizers": maximizers,
                "passed": r.passed,
                "value_im": float_value(chop(r.value_im, r.expected)),
                "value_re": float_value(r.value_re),
            }),
        ),
        table: Table {
            headers: vec![
                "maximizer".into(),
                "value_re".into(),
                "value_im".into(),
                "expected".into(),
            ],
            rows: maximizers
                .iter()
                .map(|m| {
                    vec![
                        m.clone(),
                        fmt_float(r.value_re),
                        fmt_float(chop(r.value_im, r.expected)),
                        fmt_float(r.expected),
                    ]
                })
                .collect(),
        },
        text: None,
        notes: Vec::new(),
        verified: r.passed,
    })
}

pub fn render_csv(table: &Table) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(&table.headers).expect("in-memory write");
    for row in &table.rows {
        w.write_record(row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
}

pub fn render_table(table: &Table) -> String {
    let cols = table.headers.len();
    let mut widths: Vec<usize> = table.headers.iter().map(|h| h.chars().count()).collect();
    for row in &table.rows {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    let mut line = |cells: &[String]| {
        let mut s = String::new();
        for (i, cell) in cells.iter().enumerate() {
            if i > 0 {
                s.push_str("  ");
            }
            s.push_str(cell);
            if i + 1 < cols {
                s.extend(std::iter::repeat_n(' ', widths[i] - cell.chars().count()));
            }
        }
        out.push_str(s.trim_end());
        out.push('\n');
    };
    line(&table.headers);
    for row in &table.rows {
        line(row);
    }
    out
}
