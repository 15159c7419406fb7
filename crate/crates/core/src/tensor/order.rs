//! Total order on boxes and on same-shape tableaux.
//!
//! Boxes are ordered right to left by column, then top to bottom. Two
//! tableaux compare by their entries at the first box where they differ.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// Order on 1-based `(row, column)` positions: `(i, j) < (i', j')` iff
/// `j > j'`, or `j = j'` and `i < i'`.
pub fn pair_order(a: (usize, usize), b: (usize, usize)) -> Ordering {
    b.1.cmp(&a.1).then(a.0.cmp(&b.0))
}

/// Boxes of a shape in increasing [`pair_order`], 1-based.
pub fn admissible_pairs(shape: &[usize]) -> Vec<(usize, usize)> {
    let width = shape.first().copied().unwrap_or(0);
    (1..=width)
        .rev()
        .flat_map(|j| (1..=shape.len()).filter(move |&i| shape[i - 1] >= j).map(move |i| (i, j)))
        .collect()
}

pub fn tableau_order(y: &Tableau, z: &Tableau) -> Result<Ordering> {
    let shape = y.shape();
    if shape != z.shape() {
        return Err(Error::ShapeMismatch);
    }
    for (i, j) in admissible_pairs(&shape) {
        let (a, b) = (y.get(i - 1, j - 1), z.get(i - 1, j - 1));
        if a != b {
            return Ok(a.cmp(&b));
        }
    }
    Ok(Ordering::Equal)
}
