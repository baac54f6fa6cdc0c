//! Matrix files: `{"n": 2, "data": [[[re, im], [re, im]], [[re, im], [re, im]]]}`.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use sectormeans::numerics::ComplexMatrix;
use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Debug, thiserror::Error)]
pub enum MatrixFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("malformed matrix file at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("malformed matrix file: {0}")]
    Schema(String),
    #[error("row {row} has {found} entries, expected {expected}")]
    RaggedRow { row: usize, expected: usize, found: usize },
    #[error("data has {found} rows but n = {expected}")]
    RowCount { expected: usize, found: usize },
    #[error("entry ({row}, {col}) must be a pair [re, im] of finite numbers")]
    BadEntry { row: usize, col: usize },
    #[error("invalid matrix: {0}")]
    Invalid(#[from] sectormeans::Error),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MatrixFile {
    pub n: usize,
    pub data: Vec<Vec<[f64; 2]>>,
}

impl MatrixFile {
    pub fn from_matrix(m: &ComplexMatrix) -> Self {
        let n = m.dim();
        let data = (0..n)
            .map(|i| (0..n).map(|j| {
                let z = m.get(i, j);
                [z.re, z.im]
            }).collect())
            .collect();
        Self { n, data }
    }

    pub fn to_matrix(&self) -> Result<ComplexMatrix, MatrixFileError> {
        let entries: Vec<Complex64> = self.data.iter().flatten().map(|&[re, im]| Complex64::new(re, im)).collect();
        Ok(ComplexMatrix::from_row_major(self.n, &entries)?)
    }
}

fn entry(value: &Value, row: usize, col: usize) -> Result<[f64; 2], MatrixFileError> {
    let bad = || MatrixFileError::BadEntry { row, col };
    match value.as_array().map(Vec::as_slice) {
        Some([re, im]) => {
            let (re, im) = (re.as_f64().ok_or_else(bad)?, im.as_f64().ok_or_else(bad)?);
            if re.is_finite() && im.is_finite() {
                Ok([re, im])
            } else {
                Err(bad())
            }
        }
        _ => Err(bad()),
    }
}

/// Parses a matrix file's contents, naming the offending row or entry on failure.
pub fn parse_matrix_str(text: &str) -> Result<ComplexMatrix, MatrixFileError> {
    let root: Value = serde_json::from_str(text).map_err(|e| MatrixFileError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let obj = root
        .as_object()
        .ok_or_else(|| MatrixFileError::Schema("top level must be an object with keys n and data".into()))?;
    let n = obj
        .get("n")
        .and_then(Value::as_u64)
        .filter(|&n| n > 0)
        .ok_or_else(|| MatrixFileError::Schema("field n must be a positive integer".into()))? as usize;
    let rows = obj
        .get("data")
        .and_then(Value::as_array)
        .ok_or_else(|| MatrixFileError::Schema("field data must be an array of rows".into()))?;
    if rows.len() != n {
        return Err(MatrixFileError::RowCount {
            expected: n,
            found: rows.len(),
        });
    }
    let mut data = Vec::with_capacity(n);
    for (i, row) in rows.iter().enumerate() {
        let row = row
            .as_array()
            .ok_or_else(|| MatrixFileError::Schema(format!("row {i} is not an array")))?;
        if row.len() != n {
            return Err(MatrixFileError::RaggedRow {
                row: i,
                expected: n,
                found: row.len(),
            });
        }
        data.push(row.iter().enumerate().map(|(j, v)| entry(v, i, j)).collect::<Result<Vec<_>, _>>()?);
    }
    MatrixFile { n, data }.to_matrix()
}

pub fn parse_matrix(path: &Path) -> Result<ComplexMatrix, MatrixFileError> {
    let text = fs::read_to_string(path).map_err(|source| MatrixFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_matrix_str(&text)
}

pub fn matrix_to_string(m: &ComplexMatrix) -> String {
    serde_json::to_string(&MatrixFile::from_matrix(m)).expect("finite matrices serialize")
}

pub fn write_matrix(m: &ComplexMatrix, path: &Path) -> Result<(), MatrixFileError> {
    let mut text = matrix_to_string(m);
    text.push('\n');
    fs::write(path, text).map_err(|source| MatrixFileError::Io {
        path: path.display().to_string(),
        source,
    })
}
