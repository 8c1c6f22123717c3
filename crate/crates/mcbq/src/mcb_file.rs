//! The mc-biquandle text format: `n` lines of `4n` integers, each line one
//! row of the block matrix `[▷̲ˢ | ▷̄ˢ | ▷̲ᵐ | ▷̄ᵐ]`, entries 1-based.
//! Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::path::Path;

use mcbq_core::algebra::AlgebraError;
use mcbq_core::{Endomorphism, OperationTables};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum McbFileError {
    #[error("{path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Table(#[from] AlgebraError),
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_mcb(text: &str) -> Result<OperationTables, McbFileError> {
    let mut rows: Vec<(usize, Vec<usize>)> = Vec::new();
    for (line, l) in content_lines(text) {
        let row = l
            .split_whitespace()
            .map(|t| {
                t.parse::<usize>().map_err(|_| McbFileError::Parse {
                    line,
                    message: format!("not an integer: {t:?}"),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push((line, row));
    }
    let n = rows.len();
    if n == 0 {
        return Err(McbFileError::Parse {
            line: 1,
            message: "no table rows".into(),
        });
    }
    let mut tables: [Vec<usize>; 4] = Default::default();
    for (line, row) in &rows {
        if row.len() != 4 * n {
            return Err(McbFileError::Parse {
                line: *line,
                message: format!(
                    "expected {} entries for order {n}, found {}",
                    4 * n,
                    row.len()
                ),
            });
        }
        for (k, table) in tables.iter_mut().enumerate() {
            for &v in &row[k * n..(k + 1) * n] {
                if v == 0 || v > n {
                    return Err(McbFileError::Parse {
                        line: *line,
                        message: format!("entry {v} is outside 1..={n}"),
                    });
                }
                table.push(v - 1);
            }
        }
    }
    Ok(OperationTables::new(n, tables)?)
}

/// Canonical text: single spaces, one line per row.
pub fn write_mcb(tables: &OperationTables) -> String {
    tables.to_string()
}

pub fn read_mcb_file(path: &Path) -> Result<OperationTables, McbFileError> {
    parse_mcb(&read(path)?)
}

/// One endomorphism per line in `[f(1),…,f(n)]` notation.
pub fn parse_endos(text: &str, order: usize) -> Result<Vec<Endomorphism>, McbFileError> {
    content_lines(text)
        .map(|(line, l)| {
            Endomorphism::parse(l, order).map_err(|e| McbFileError::Parse {
                line,
                message: e.to_string(),
            })
        })
        .collect()
}

pub fn read_endos_file(path: &Path, order: usize) -> Result<Vec<Endomorphism>, McbFileError> {
    parse_endos(&read(path)?, order)
}

pub(crate) fn read(path: &Path) -> Result<String, McbFileError> {
    fs::read_to_string(path).map_err(|source| McbFileError::Io {
        path: path.display().to_string(),
        source,
    })
}
