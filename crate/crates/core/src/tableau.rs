//! Left-justified fillings of Young diagrams by letters of the barred
//! alphabet.
//!
//! A [`Tableau`] only guarantees a well-formed shape and in-rank letters;
//! semistandardness and the KN conditions are predicates (see [`crate::kn`]),
//! since the tensor model works with arbitrary column-strict fillings.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::entry::Entry;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "TableauJson", into = "TableauJson")]
pub struct Tableau {
    rank: u8,
    rows: Vec<Vec<Entry>>,
}

#[derive(Serialize, Deserialize)]
struct TableauJson {
    n: u8,
    shape: Vec<usize>,
    rows: Vec<Vec<Entry>>,
}

impl TryFrom<TableauJson> for Tableau {
    type Error = Error;

    fn try_from(json: TableauJson) -> Result<Self> {
        let tableau = Tableau::new(json.n, json.rows)?;
        if tableau.shape() != json.shape {
            return Err(Error::MalformedTableau(format!(
                "declared shape {:?} does not match rows {:?}",
                json.shape,
                tableau.shape()
            )));
        }
        Ok(tableau)
    }
}

impl From<Tableau> for TableauJson {
    fn from(t: Tableau) -> Self {
        TableauJson { n: t.rank, shape: t.shape(), rows: t.rows }
    }
}

impl Tableau {
    pub fn new(rank: u8, rows: Vec<Vec<Entry>>) -> Result<Self> {
        if rows.len() > rank as usize {
            return Err(Error::MalformedTableau(format!(
                "{} rows exceed rank {rank}",
                rows.len()
            )));
        }
        for (i, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::MalformedTableau(format!("row {} is empty", i + 1)));
            }
            if i > 0 && row.len() > rows[i - 1].len() {
                return Err(Error::MalformedTableau("row lengths must weakly decrease".into()));
            }
            if let Some(e) = row.iter().find(|e| !e.fits_rank(rank)) {
                return Err(Error::EntryOutOfRank { value: e.value().into(), rank });
            }
        }
        Ok(Tableau { rank, rows })
    }

    pub fn empty(rank: u8) -> Self {
        Tableau { rank, rows: Vec::new() }
    }

    /// Build from columns listed left to right, each top to bottom.
    pub fn from_columns(rank: u8, columns: &[Vec<Entry>]) -> Result<Self> {
        let height = columns.first().map_or(0, Vec::len);
        let mut rows = vec![Vec::with_capacity(columns.len()); height];
        for (j, column) in columns.iter().enumerate() {
            if column.is_empty() || (j > 0 && column.len() > columns[j - 1].len()) {
                return Err(Error::MalformedTableau("column heights must weakly decrease".into()));
            }
            for (i, &e) in column.iter().enumerate() {
                rows[i].push(e);
            }
        }
        Tableau::new(rank, rows)
    }

    /// Parse rows written as `"1 2 2b"` strings.
    pub fn parse_rows(rank: u8, rows: &[&str]) -> Result<Self> {
        let rows = rows
            .iter()
            .map(|r| r.split_whitespace().map(|s| Entry::parse(s, rank)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Tableau::new(rank, rows)
    }

    pub fn rank(&self) -> u8 {
        self.rank
    }

    pub fn rows(&self) -> &[Vec<Entry>] {
        &self.rows
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(Vec::len).collect()
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Entry at 0-based `(row, column)`, if the box exists.
    pub fn get(&self, row: usize, column: usize) -> Option<Entry> {
        self.rows.get(row).and_then(|r| r.get(column)).copied()
    }

    pub fn column_height(&self, column: usize) -> usize {
        self.rows.iter().take_while(|r| r.len() > column).count()
    }

    /// Column `j` (0-based) read top to bottom.
    pub fn column(&self, column: usize) -> Vec<Entry> {
        self.rows.iter().map_while(|r| r.get(column).copied()).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Entry>> {
        (0..self.num_columns()).map(|j| self.column(j)).collect()
    }

    pub fn entries(&self) -> impl Iterator<Item = Entry> + '_ {
        self.rows.iter().flatten().copied()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::to_value(self).expect("tableau serialization cannot fail")
    }

    /// A `ytableau` environment with barred letters as `\overline{k}`.
    pub fn to_latex(&self) -> String {
        if self.rows.is_empty() {
            return "\\begin{ytableau}\n\\none\n\\end{ytableau}".to_string();
        }
        let body = self
            .rows
            .iter()
            .map(|row| row.iter().map(|e| latex_letter(*e)).collect::<Vec<_>>().join(" & "))
            .collect::<Vec<_>>()
            .join(" \\\\\n");
        format!("\\begin{{ytableau}}\n{body}\n\\end{{ytableau}}")
    }
}

fn latex_letter(e: Entry) -> String {
    if e.is_barred() {
        format!("\\overline{{{}}}", e.index())
    } else {
        e.index().to_string()
    }
}

/// Rows on separate lines, letters padded to a common width.
impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "(empty)");
        }
        let width = self.entries().map(|e| e.to_string().len()).max().unwrap_or(1);
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line = row.iter().map(|e| format!("{:<width$}", e.to_string())).collect::<Vec<_>>();
            write!(f, "{}", line.join(" ").trim_end())?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(Entry::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "Tableau[n={}; {}]", self.rank, rows.join(" / "))
    }
}
