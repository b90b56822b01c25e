//! File formats and structured (JSON) output.
//!
//! Matrices are accepted either as plain text (`rows cols` then `p/q`
//! entries) or as a structured object `{"rows": r, "cols": c, "entries":
//! ["p/q", ...]}`. Jordan specs are structured lists
//! `[{"lambda": "p/q", "blocks": [[size, multiplicity], ...]}, ...]`.
//! Rationals travel as strings so nothing is ever rounded.

use eigenscheme::eigen::{EigenvalueBlocks, JordanSpec};
use eigenscheme::matrix::{parse_matrix_text, QMatrix};
use eigenscheme::rat::{parse_rat, Rat};
use eigenscheme::ring::MonomialOrder;
use eigenscheme::{Error, Ideal, Result};
use serde_json::{json, Value};

pub fn read_matrix_file(path: &std::path::Path) -> Result<QMatrix> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let trimmed = text.trim_start();
    if trimmed.starts_with('{') {
        let value: Value = serde_json::from_str(trimmed)
            .map_err(|e| Error::Parse(format!("bad structured matrix: {e}")))?;
        matrix_from_json(&value)
    } else {
        parse_matrix_text(&text)
    }
}

fn rat_from_value(v: &Value) -> Result<Rat> {
    match v {
        Value::String(s) => parse_rat(s),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(i.into()))
            } else {
                Err(Error::Parse(format!("non-integer numeric entry {n}")))
            }
        }
        other => Err(Error::Parse(format!("expected rational, got {other}"))),
    }
}

pub fn matrix_from_json(value: &Value) -> Result<QMatrix> {
    let rows = value["rows"]
        .as_u64()
        .ok_or_else(|| Error::Parse("matrix needs a numeric \"rows\" field".into()))?
        as usize;
    let cols = value["cols"]
        .as_u64()
        .ok_or_else(|| Error::Parse("matrix needs a numeric \"cols\" field".into()))?
        as usize;
    let entries = value["entries"]
        .as_array()
        .ok_or_else(|| Error::Parse("matrix needs an \"entries\" array".into()))?;
    if entries.len() != rows * cols {
        return Err(Error::Parse(format!(
            "expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    let mut data = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = Vec::with_capacity(cols);
        for c in 0..cols {
            row.push(rat_from_value(&entries[r * cols + c])?);
        }
        data.push(row);
    }
    QMatrix::from_rows(data)
}

pub fn read_spec_file(path: &std::path::Path) -> Result<JordanSpec> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))?;
    let value: Value = serde_json::from_str(&text)
        .map_err(|e| Error::Parse(format!("bad structured spec: {e}")))?;
    spec_from_json(&value)
}

pub fn spec_from_json(value: &Value) -> Result<JordanSpec> {
    let list = value
        .as_array()
        .ok_or_else(|| Error::Parse("spec must be a list of eigenvalue entries".into()))?;
    let mut eigenvalues = Vec::new();
    for entry in list {
        let lambda = rat_from_value(&entry["lambda"])?;
        let blocks_v = entry["blocks"]
            .as_array()
            .ok_or_else(|| Error::Parse("eigenvalue entry needs a \"blocks\" array".into()))?;
        let mut blocks = Vec::new();
        for b in blocks_v {
            let pair = b
                .as_array()
                .filter(|p| p.len() == 2)
                .ok_or_else(|| Error::Parse("each block must be [size, multiplicity]".into()))?;
            let size = pair[0]
                .as_u64()
                .ok_or_else(|| Error::Parse("block size must be a positive integer".into()))?;
            let mult = pair[1]
                .as_u64()
                .ok_or_else(|| Error::Parse("block multiplicity must be a positive integer".into()))?;
            blocks.push((size as usize, mult as usize));
        }
        eigenvalues.push(EigenvalueBlocks::new(lambda, blocks));
    }
    JordanSpec::new(eigenvalues)
}

pub fn spec_to_json(spec: &JordanSpec) -> Value {
    Value::Array(
        spec.eigenvalues()
            .iter()
            .map(|eb| {
                json!({
                    "lambda": eb.lambda.to_string(),
                    "blocks": eb
                        .blocks
                        .iter()
                        .map(|b| json!([b.size, b.multiplicity]))
                        .collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

pub fn spec_to_text(spec: &JordanSpec) -> String {
    spec.eigenvalues()
        .iter()
        .map(|eb| {
            let blocks: Vec<String> = eb
                .blocks
                .iter()
                .map(|b| format!("({},{})", b.size, b.multiplicity))
                .collect();
            format!("lambda={} blocks=[{}]", eb.lambda, blocks.join(","))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

pub fn ideal_strings(ideal: &Ideal, order: &MonomialOrder) -> Vec<String> {
    ideal
        .generators()
        .iter()
        .map(|g| g.to_string_with_order(order))
        .collect()
}
