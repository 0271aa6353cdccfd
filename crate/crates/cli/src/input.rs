//! Word files and symbol rendering.
//!
//! A word file holds one word per line; commands read the first line. In
//! ASCII mode each byte is a letter; the bytes used across all inputs of one
//! invocation get ids `1, 2, ...` in increasing byte order, so comparisons of
//! words agree with byte order. In ints mode a line is a list of
//! space-separated positive ids.

use std::fs;
use std::path::Path;

use bounded_subseq::{Symbol, SymbolTable, Word};
use clap::ValueEnum;
use serde_json::{json, Value};

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum AlphabetMode {
    Ascii,
    Ints,
}

/// Reads words under one alphabet; all words of an invocation end up with
/// the same alphabet size.
pub struct Reader {
    mode: AlphabetMode,
    table: SymbolTable,
    max_id: Symbol,
    raw: Vec<Raw>,
}

enum Raw {
    Bytes(Vec<u8>),
    Ids(Vec<Symbol>),
}

impl Reader {
    pub fn new(mode: AlphabetMode) -> Self {
        Reader {
            mode,
            table: SymbolTable::new(),
            max_id: 0,
            raw: Vec::new(),
        }
    }

    pub fn mode(&self) -> AlphabetMode {
        self.mode
    }

    pub fn table(&self) -> &SymbolTable {
        &self.table
    }

    /// Parses one line and returns a handle for [`Reader::word`].
    pub fn push_line(&mut self, line: &str) -> Result<usize, CliError> {
        let line = line.trim_end_matches(['\r', '\n']);
        let raw = match self.mode {
            AlphabetMode::Ascii => {
                let mut seen: Vec<u8> = self
                    .table
                    .bytes()
                    .iter()
                    .chain(line.as_bytes())
                    .copied()
                    .collect();
                seen.sort_unstable();
                seen.dedup();
                self.table = SymbolTable::new();
                self.table.intern_all(&seen);
                Raw::Bytes(line.as_bytes().to_vec())
            }
            AlphabetMode::Ints => {
                let ids = line
                    .split_whitespace()
                    .map(|tok| match tok.parse::<Symbol>() {
                        Ok(s) if s >= 1 => Ok(s),
                        _ => Err(CliError::Input(format!("invalid symbol id {tok:?}"))),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                if let Some(&m) = ids.iter().max() {
                    self.max_id = self.max_id.max(m);
                }
                Raw::Ids(ids)
            }
        };
        self.raw.push(raw);
        Ok(self.raw.len() - 1)
    }

    pub fn push_file(&mut self, path: &Path) -> Result<usize, CliError> {
        let text = fs::read_to_string(path)
            .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
        let line = text.lines().next().unwrap_or("");
        self.push_line(line)
    }

    /// Alphabet size covering everything read so far.
    pub fn sigma(&self) -> u32 {
        match self.mode {
            AlphabetMode::Ascii => (self.table.len() as u32).max(1),
            AlphabetMode::Ints => self.max_id.max(1),
        }
    }

    pub fn word(&self, handle: usize) -> Word {
        let symbols = match &self.raw[handle] {
            Raw::Bytes(b) => b
                .iter()
                .map(|&c| self.table.get(c).expect("byte was seen"))
                .collect(),
            Raw::Ids(ids) => ids.clone(),
        };
        Word::new(symbols, self.sigma()).expect("ids within the alphabet")
    }

    pub fn render(&self, w: &Word) -> Value {
        render_with(self.mode, &self.table, w)
    }

    /// The byte of every id, in id order (ASCII mode only).
    pub fn mapping(&self) -> Option<Value> {
        match self.mode {
            AlphabetMode::Ascii => Some(json!(self
                .table
                .bytes()
                .iter()
                .map(|&b| (b as char).to_string())
                .collect::<Vec<_>>())),
            AlphabetMode::Ints => None,
        }
    }
}

pub fn render_with(mode: AlphabetMode, table: &SymbolTable, w: &Word) -> Value {
    match mode {
        AlphabetMode::Ascii if w.symbols().iter().all(|&s| table.byte_of(s).is_some()) => {
            json!(table.render(w))
        }
        _ => json!(w.symbols()),
    }
}

/// Line format for word files: raw bytes in ASCII mode, ids otherwise.
pub fn word_line(mode: AlphabetMode, table: &SymbolTable, w: &Word) -> String {
    match render_with(mode, table, w) {
        Value::String(s) => s,
        _ => w
            .symbols()
            .iter()
            .map(|s| s.to_string())
            .collect::<Vec<_>>()
            .join(" "),
    }
}
