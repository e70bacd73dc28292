//! Knot tables: UTF-8 lines `name<TAB>word[<TAB>crossings]`, with `#`
//! comment lines and blank lines ignored.

use std::collections::HashSet;
use std::path::Path;

use thiserror::Error;

use crate::braid::{parse_braid_word, BraidWord};

const BUNDLED: &str = include_str!("../data/knots.tsv");

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableEntry {
    pub name: String,
    pub word: BraidWord,
    pub crossing_hint: Option<u32>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct KnotTable {
    pub entries: Vec<TableEntry>,
}

#[derive(Debug, Error)]
pub enum TableError {
    #[error("reading {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: duplicate entry {name:?}")]
    Duplicate { line: usize, name: String },
}

impl KnotTable {
    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn get(&self, name: &str) -> Option<&TableEntry> {
        self.entries.iter().find(|e| e.name == name)
    }
}

pub fn parse_table(text: &str) -> Result<KnotTable, TableError> {
    let mut entries = Vec::new();
    let mut names = HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let syntax = |message: String| TableError::Syntax { line, message };
        let mut fields = raw.split('\t');
        let name = fields.next().unwrap_or_default().trim();
        let word = fields
            .next()
            .ok_or_else(|| syntax("expected name<TAB>word".into()))?;
        let hint = fields.next();
        if fields.next().is_some() {
            return Err(syntax("too many fields".into()));
        }
        if name.is_empty() {
            return Err(syntax("empty name".into()));
        }
        let word = parse_braid_word(word).map_err(|e| syntax(e.to_string()))?;
        let crossing_hint = hint
            .map(|h| {
                h.trim()
                    .parse()
                    .map_err(|_| syntax(format!("bad crossing count {h:?}")))
            })
            .transpose()?;
        if !names.insert(name.to_string()) {
            return Err(TableError::Duplicate {
                line,
                name: name.to_string(),
            });
        }
        entries.push(TableEntry {
            name: name.to_string(),
            word,
            crossing_hint,
        });
    }
    Ok(KnotTable { entries })
}

pub fn load_table(path: impl AsRef<Path>) -> Result<KnotTable, TableError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| TableError::Io {
        path: path.display().to_string(),
        source,
    })?;
    parse_table(&text)
}

/// The small table shipped with the crate.
pub fn bundled_table() -> KnotTable {
    parse_table(BUNDLED).expect("bundled table parses")
}

/// Raw text of the bundled table.
pub fn bundled_table_text() -> &'static str {
    BUNDLED
}
