//! Link tables: one link per line as `name<TAB>gauss code[<TAB>components]`.
//!
//! Lines starting with `#` are comments. A comment of the form
//! `# PD <name> <code>` records the planar diagram code an entry was
//! converted from and is attached to that entry as its source.

use std::path::Path;

use mcbq_core::diagram::DiagramError;
use mcbq_core::{parse_gauss, LinkDiagram};
use thiserror::Error;

use crate::mcb_file::{self, McbFileError};

const BUILTIN: &str = include_str!("../data/links.tsv");

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinkTableEntry {
    pub name: String,
    pub gauss: String,
    pub components: usize,
    pub source: Option<String>,
}

impl LinkTableEntry {
    pub fn diagram(&self) -> LinkDiagram {
        parse_gauss(&self.gauss).expect("table entries are validated on load")
    }
}

#[derive(Debug, Error)]
pub enum LinkTableError {
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("line {line}: {source}")]
    Code { line: usize, source: DiagramError },
    #[error(transparent)]
    File(#[from] McbFileError),
}

pub fn parse_link_table(text: &str) -> Result<Vec<LinkTableEntry>, LinkTableError> {
    let mut entries = Vec::new();
    let mut sources: Vec<(String, String)> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim_end();
        if l.trim().is_empty() {
            continue;
        }
        if let Some(comment) = l.strip_prefix('#') {
            if let Some(rest) = comment.trim().strip_prefix("PD ") {
                if let Some((name, code)) = rest.trim().split_once(char::is_whitespace) {
                    sources.push((name.to_string(), code.trim().to_string()));
                }
            }
            continue;
        }
        let fields: Vec<&str> = l.split('\t').collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(LinkTableError::Format {
                line,
                message: format!(
                    "expected 2 or 3 tab-separated fields, found {}",
                    fields.len()
                ),
            });
        }
        let name = fields[0].trim().to_string();
        let gauss = fields[1].trim().to_string();
        let diagram =
            parse_gauss(&gauss).map_err(|source| LinkTableError::Code { line, source })?;
        let components = match fields.get(2) {
            Some(c) => {
                let c: usize = c.trim().parse().map_err(|_| LinkTableError::Format {
                    line,
                    message: format!("bad component count {c:?}"),
                })?;
                if c != diagram.component_count() {
                    return Err(LinkTableError::Format {
                        line,
                        message: format!(
                            "{name}: declared {c} components, code has {}",
                            diagram.component_count()
                        ),
                    });
                }
                c
            }
            None => diagram.component_count(),
        };
        let source = sources
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, code)| code.clone());
        entries.push(LinkTableEntry {
            name,
            gauss,
            components,
            source,
        });
    }
    Ok(entries)
}

pub fn read_link_table(path: &Path) -> Result<Vec<LinkTableEntry>, LinkTableError> {
    parse_link_table(&mcb_file::read(path)?)
}

/// The shipped table of prime links with up to seven crossings.
pub fn builtin_table() -> Vec<LinkTableEntry> {
    parse_link_table(BUILTIN).expect("shipped link table is valid")
}

pub fn builtin(name: &str) -> Option<LinkTableEntry> {
    builtin_table()
        .into_iter()
        .find(|e| e.name.eq_ignore_ascii_case(name))
}
