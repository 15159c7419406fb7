//! Exact rank of the Verma vectors and the coordinate-list export.

use std::collections::HashMap;
use std::io::{self, Write};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::index::IndexKey;
use super::verma_vectors::{map_verma_vectors, Budget};
use crate::error::Result;
use crate::weight::HighestWeight;

/// A sparse integer row: `(column, value)` with strictly increasing columns
/// and no zeros. Its pivot is the last (largest) column.
pub type SparseRow = Vec<(u64, BigInt)>;

/// Row echelon form built one row at a time by fraction-free elimination.
#[derive(Default)]
pub struct IntegerEchelon {
    pivots: HashMap<u64, SparseRow>,
}

impl IntegerEchelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots and keeps it if something
    /// nonzero remains. Returns whether the rank grew.
    pub fn insert(&mut self, mut row: SparseRow) -> bool {
        row.retain(|(_, c)| !c.is_zero());
        debug_assert!(row.windows(2).all(|w| w[0].0 < w[1].0));
        loop {
            let Some((lead, beta)) = row.last().cloned() else { return false };
            let Some(pivot) = self.pivots.get(&lead) else {
                make_primitive(&mut row);
                self.pivots.insert(lead, row);
                return true;
            };
            let alpha = &pivot.last().expect("pivot rows are nonzero").1;
            let g = alpha.gcd(&beta);
            row = combine(&row, &(alpha / &g), pivot, &(&beta / &g));
        }
    }
}

/// `x·r − y·p`, dropping zeros.
fn combine(r: &SparseRow, x: &BigInt, p: &SparseRow, y: &BigInt) -> SparseRow {
    let mut out = Vec::with_capacity(r.len() + p.len());
    let (mut i, mut j) = (0, 0);
    while i < r.len() || j < p.len() {
        let (col, value) = match (r.get(i), p.get(j)) {
            (Some(a), Some(b)) if a.0 == b.0 => {
                i += 1;
                j += 1;
                (a.0, &a.1 * x - &b.1 * y)
            }
            (Some(a), Some(b)) if a.0 < b.0 => {
                i += 1;
                (a.0, &a.1 * x)
            }
            (Some(a), None) => {
                i += 1;
                (a.0, &a.1 * x)
            }
            (_, Some(b)) => {
                j += 1;
                (b.0, -(&b.1 * y))
            }
            (None, None) => unreachable!(),
        };
        if !value.is_zero() {
            out.push((col, value));
        }
    }
    out
}

/// Divides by the gcd of the entries and makes the pivot positive.
fn make_primitive(row: &mut SparseRow) {
    let mut g = BigInt::zero();
    for (_, c) in row.iter() {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    if row.last().is_some_and(|t| t.1.is_negative()) {
        g = -g;
    }
    if !g.is_one() && !g.is_zero() {
        for (_, c) in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

/// Rank of the matrix whose rows are the Verma vectors of `L(λ)`.
pub fn independence_rank(hw: HighestWeight, budget: Budget) -> Result<usize> {
    let rows = map_verma_vectors(hw, budget, |_, v| Ok(to_row(v.terms())))?;
    let mut echelon = IntegerEchelon::new();
    for row in rows {
        echelon.insert(row);
    }
    Ok(echelon.rank())
}

fn to_row(terms: &[(IndexKey, BigInt)]) -> SparseRow {
    terms.iter().map(|(k, c)| (k.raw(), c.clone())).collect()
}

/// The Verma vectors as a sparse matrix over the tensor basis. Rows follow
/// lexicographic tuple order; columns follow the tableau order, largest
/// tableau first. Both are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VermaMatrix {
    pub rows: usize,
    pub cols: u128,
    pub entries: Vec<(usize, u128, BigInt)>,
}

impl VermaMatrix {
    pub fn build(hw: HighestWeight, budget: Budget) -> Result<Self> {
        let ambient = hw.into();
        let cols = super::index::Ambient::dimension(ambient);
        let per_row = map_verma_vectors(hw, budget, |_, v| {
            Ok(v.terms()
                .iter()
                .rev()
                .map(|(k, c)| (cols - k.ascending_position(ambient), c.clone()))
                .collect::<Vec<_>>())
        })?;
        let rows = per_row.len();
        let entries = per_row
            .into_iter()
            .enumerate()
            .flat_map(|(r, row)| row.into_iter().map(move |(col, c)| (r + 1, col, c)))
            .collect();
        Ok(VermaMatrix { rows, cols, entries })
    }

    /// Header `rows cols nnz`, then one `row col value` line per entry.
    pub fn write_coordinate_list<W: Write>(&self, w: &mut W) -> io::Result<()> {
        writeln!(w, "{} {} {}", self.rows, self.cols, self.entries.len())?;
        for (r, c, v) in &self.entries {
            writeln!(w, "{r} {c} {v}")?;
        }
        Ok(())
    }
}
