//! Point files: JSON documents (also exported state) and CSV tables.

use std::fs;
use std::path::{Path, PathBuf};

use escalier_core::scalar::parse_scalar;
use escalier_core::trie::find_duplicate;
use escalier_core::{FieldSpec, Point};
use serde::Deserialize;
use serde_json::Value;

use crate::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Deserialize)]
struct JsonInput {
    field: Option<String>,
    n: Option<usize>,
    points: Vec<Vec<Value>>,
}

/// A parsed point set, in file order.
#[derive(Debug, Clone)]
pub struct PointSet {
    pub field: FieldSpec,
    pub n: usize,
    pub points: Vec<Point>,
}

/// Raw coordinate text per point, before field parsing.
struct RawSet {
    field: Option<String>,
    n: Option<usize>,
    rows: Vec<Vec<String>>,
}

pub fn resolve_format(path: &Path, format: Option<Format>) -> Format {
    format.unwrap_or_else(|| match path.extension().and_then(|e| e.to_str()) {
        Some(ext) if ext.eq_ignore_ascii_case("csv") => Format::Csv,
        _ => Format::Json,
    })
}

pub fn parse_field(text: &str) -> Result<FieldSpec, CliError> {
    FieldSpec::parse(text).map_err(|e| CliError::Input(format!("field '{text}': {e}")))
}

pub fn load(path: &PathBuf, format: Option<Format>, field: Option<FieldSpec>) -> Result<PointSet, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    let raw = match resolve_format(path, format) {
        Format::Json => raw_json(&text)?,
        Format::Csv => raw_csv(&text)?,
    };
    let field = match (field, raw.field.as_deref()) {
        (Some(f), _) => f,
        (None, Some(text)) => parse_field(text)?,
        (None, None) => FieldSpec::RATIONALS,
    };
    build(raw, field)
}

fn coordinate_text(v: &Value, point: usize, coord: usize) -> Result<String, CliError> {
    match v {
        Value::String(s) => Ok(s.clone()),
        Value::Number(n) => Ok(n.to_string()),
        other => Err(CliError::Input(format!(
            "point {point}, coordinate {coord}: expected a string or integer, found {other}"
        ))),
    }
}

fn raw_json(text: &str) -> Result<RawSet, CliError> {
    let doc: JsonInput = serde_json::from_str(text).map_err(|e| CliError::Input(format!("invalid JSON input: {e}")))?;
    let mut rows = Vec::with_capacity(doc.points.len());
    for (i, p) in doc.points.iter().enumerate() {
        let row = p
            .iter()
            .enumerate()
            .map(|(j, v)| coordinate_text(v, i + 1, j + 1))
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    Ok(RawSet {
        field: doc.field,
        n: doc.n,
        rows,
    })
}

fn raw_csv(text: &str) -> Result<RawSet, CliError> {
    let mut reader = csv::ReaderBuilder::new().trim(csv::Trim::All).from_reader(text.as_bytes());
    let header = reader
        .headers()
        .map_err(|e| CliError::Input(format!("invalid CSV header: {e}")))?
        .clone();
    for (j, h) in header.iter().enumerate() {
        if h != format!("x{}", j + 1) {
            return Err(CliError::Input(format!("CSV header column {} is '{h}', expected 'x{}'", j + 1, j + 1)));
        }
    }
    let mut rows = Vec::new();
    for (i, record) in reader.records().enumerate() {
        let record = record.map_err(|e| CliError::Input(format!("point {}: {e}", i + 1)))?;
        rows.push(record.iter().map(str::to_string).collect());
    }
    Ok(RawSet {
        field: None,
        n: Some(header.len()),
        rows,
    })
}

fn build(raw: RawSet, field: FieldSpec) -> Result<PointSet, CliError> {
    if raw.rows.is_empty() {
        return Err(CliError::Input("at least one point required".into()));
    }
    let n = raw.n.unwrap_or(raw.rows[0].len());
    if n == 0 {
        return Err(CliError::Input("points need at least one coordinate".into()));
    }
    let mut points = Vec::with_capacity(raw.rows.len());
    for (i, row) in raw.rows.iter().enumerate() {
        if row.len() != n {
            return Err(CliError::Input(format!(
                "point {}: expected {n} coordinates, found {}",
                i + 1,
                row.len()
            )));
        }
        let coords = row
            .iter()
            .enumerate()
            .map(|(j, c)| {
                parse_scalar(c, field)
                    .map_err(|e| CliError::Input(format!("point {}, coordinate {}: '{c}': {e}", i + 1, j + 1)))
            })
            .collect::<Result<Vec<_>, _>>()?;
        points.push(Point::new(coords).map_err(|e| CliError::Input(format!("point {}: {e}", i + 1)))?);
    }
    if let Some((i, j)) = find_duplicate(&points) {
        return Err(CliError::Input(format!("point {} duplicates point {}", i + 1, j + 1)));
    }
    Ok(PointSet { field, n, points })
}

/// Coordinates rendered for output.
pub fn render_point(p: &Point) -> Vec<String> {
    p.coords().iter().map(|c| c.render()).collect()
}
