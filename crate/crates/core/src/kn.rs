//! Kashiwara-Nakashima tableaux.
//!
//! [`is_kn`] decides the KN conditions for any rank `n`; [`is_kn_sp4`] is a
//! separately written rank-2 checker using the short list of forbidden local
//! patterns. The two are compared exhaustively in the tests.

use crate::entry::Entry;
use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::tensor::order::tableau_order;
use crate::weight::{HighestWeight, WeightVec};

/// Rows weakly increase left to right, columns strictly increase downwards.
pub fn is_semistandard(t: &Tableau) -> bool {
    let rows_ok = t.rows().iter().all(|row| row.windows(2).all(|w| w[0] <= w[1]));
    rows_ok && is_column_strict(t)
}

pub fn is_column_strict(t: &Tableau) -> bool {
    t.rows()
        .windows(2)
        .all(|pair| pair[1].iter().zip(&pair[0]).all(|(below, above)| above < below))
}

/// 1-based row of `letter` in a strictly increasing column.
fn row_of(column: &[Entry], letter: Entry) -> Option<usize> {
    column.iter().position(|&e| e == letter).map(|p| p + 1)
}

/// For a column holding `i` in the `p`-th box from the top and `ī` in the
/// `q`-th box from the bottom, `p + q ≤ i`.
pub fn check_one_bar_pairs(t: &Tableau) -> bool {
    t.columns().iter().all(|column| {
        let height = column.len();
        (1..=t.rank()).all(|i| {
            match (row_of(column, Entry::unbarred(i)), row_of(column, Entry::barred(i))) {
                (Some(p), Some(bar_row)) => p + (height - bar_row + 1) <= i as usize,
                _ => true,
            }
        })
    })
}

/// The adjacent-column condition.
///
/// For adjacent columns `L | R` and `i ≤ j`, two placements are constrained,
/// with rows `p ≤ q < r ≤ s`:
///
/// * `i` at `p` in `L`; `j`, `j̄`, `ī` at `q`, `r`, `s` in `R`;
/// * `i`, `j`, `j̄` at `p`, `q`, `r` in `L`; `ī` at `s` in `R`.
///
/// Each match must satisfy `(q − p) + (s − r) < j − i`. Coinciding boxes
/// (`i = j`) are matches too.
pub fn check_adjacent_columns(t: &Tableau) -> bool {
    let columns = t.columns();
    let n = t.rank();
    columns.windows(2).all(|pair| {
        let (left, right) = (&pair[0], &pair[1]);
        (1..=n).all(|i| {
            (i..=n).all(|j| {
                let bound = (j - i) as usize;
                let (ui, uj) = (Entry::unbarred(i), Entry::unbarred(j));
                let (bi, bj) = (Entry::barred(i), Entry::barred(j));
                let first = (row_of(left, ui), row_of(right, uj), row_of(right, bj), row_of(right, bi));
                let second = (row_of(left, ui), row_of(left, uj), row_of(left, bj), row_of(right, bi));
                [first, second].into_iter().all(|placement| match placement {
                    (Some(p), Some(q), Some(r), Some(s)) if p <= q && q < r && r <= s => {
                        (q - p) + (s - r) < bound
                    }
                    _ => true,
                })
            })
        })
    })
}

pub fn is_kn(t: &Tableau) -> bool {
    is_semistandard(t) && check_one_bar_pairs(t) && check_adjacent_columns(t)
}

fn is_two_two_bar(column: &[Entry]) -> bool {
    column == [Entry::TWO, Entry::TWO_BAR]
}

/// The rank-2 specialisation: semistandard, no column holding both `1` and
/// `1̄`, and neither of the two forbidden adjacent patterns
///
/// ```text
///   2 | 2         2  | .
///   . | 2̄         2̄  | 2̄
/// ```
pub fn is_kn_sp4(t: &Tableau) -> Result<bool> {
    if t.rank() != 2 {
        return Err(Error::UnsupportedRank(t.rank()));
    }
    if !is_semistandard(t) {
        return Ok(false);
    }
    let columns = t.columns();
    if columns.iter().any(|c| c.contains(&Entry::ONE) && c.contains(&Entry::ONE_BAR)) {
        return Ok(false);
    }
    let forbidden = columns.windows(2).any(|pair| {
        let (left, right) = (&pair[0], &pair[1]);
        let pattern_a = left[0] == Entry::TWO && is_two_two_bar(right);
        let pattern_b = is_two_two_bar(left) && right.get(1) == Some(&Entry::TWO_BAR);
        pattern_a || pattern_b
    });
    Ok(!forbidden)
}

/// Every KN tableau of shape `(m1 + m2, m2)` over `{1, 2, 2̄, 1̄}`, largest
/// first under [`tableau_order`].
pub fn enumerate_kn4(hw: HighestWeight) -> Vec<Tableau> {
    let m2 = hw.m2 as usize;
    let width = (hw.m1 + hw.m2) as usize;
    if width == 0 {
        return vec![Tableau::empty(2)];
    }

    let tall: Vec<Vec<Entry>> = Entry::SP4
        .iter()
        .flat_map(|&a| Entry::SP4.iter().filter(move |&&b| a < b).map(move |&b| vec![a, b]))
        .filter(|c| !(c[0] == Entry::ONE && c[1] == Entry::ONE_BAR))
        .collect();
    let short: Vec<Vec<Entry>> = Entry::SP4.iter().map(|&a| vec![a]).collect();

    let compatible = |left: &[Entry], right: &[Entry]| -> bool {
        let rows_ok = left.iter().zip(right).all(|(l, r)| l <= r);
        let pattern_a = left[0] == Entry::TWO && is_two_two_bar(right);
        let pattern_b = is_two_two_bar(left) && right.get(1) == Some(&Entry::TWO_BAR);
        rows_ok && !pattern_a && !pattern_b
    };

    // columns are chosen right to left; `stack` holds them in that order
    fn extend(
        stack: &mut Vec<Vec<Entry>>,
        width: usize,
        m2: usize,
        tall: &[Vec<Entry>],
        short: &[Vec<Entry>],
        compatible: &dyn Fn(&[Entry], &[Entry]) -> bool,
        out: &mut Vec<Tableau>,
    ) {
        if stack.len() == width {
            let columns: Vec<Vec<Entry>> = stack.iter().rev().cloned().collect();
            out.push(Tableau::from_columns(2, &columns).expect("enumerated shape is well formed"));
            return;
        }
        let j = width - 1 - stack.len();
        let candidates = if j < m2 { tall } else { short };
        for column in candidates {
            if stack.last().is_none_or(|right| compatible(column, right)) {
                stack.push(column.clone());
                extend(stack, width, m2, tall, short, compatible, out);
                stack.pop();
            }
        }
    }

    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(width), width, m2, &tall, &short, &compatible, &mut out);
    out.sort_by(|x, y| tableau_order(y, x).expect("same shape"));
    debug_assert!(out.windows(2).all(|w| w[0] != w[1]));
    out
}

/// `Σ (k_i − k_ī) ε_i`, where `k_x` counts the occurrences of `x`.
pub fn tableau_weight(t: &Tableau) -> WeightVec {
    let mut coords = vec![0i64; t.rank() as usize];
    for e in t.entries() {
        let slot = &mut coords[e.index() as usize - 1];
        if e.is_barred() {
            *slot -= 1;
        } else {
            *slot += 1;
        }
    }
    WeightVec::new(coords)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(rank: u8, rows: &[&str]) -> Tableau {
        Tableau::parse_rows(rank, rows).unwrap()
    }

    #[test]
    fn rank_three_examples() {
        let good = t(3, &["1 3", "2 3b", "3 1b"]);
        assert!(is_semistandard(&good));
        assert!(check_one_bar_pairs(&good));
        assert!(check_adjacent_columns(&good));
        assert!(is_kn(&good));
        assert_eq!(tableau_weight(&good).coords(), &[0, 1, 1]);

        let bad = t(3, &["2 3", "3 3b", "3b 2b"]);
        assert!(is_semistandard(&bad));
        assert!(check_one_bar_pairs(&bad));
        assert!(!check_adjacent_columns(&bad));
        assert!(!is_kn(&bad));
    }

    #[test]
    fn semistandard_edges() {
        assert!(!is_semistandard(&t(2, &["1 1", "1 2"])));
        assert!(!is_semistandard(&t(2, &["2 1"])));
        assert!(is_semistandard(&t(2, &["1 1 2b", "2 2b"])));
        assert!(is_kn(&Tableau::empty(3)));
        assert!(is_kn_sp4(&Tableau::empty(2)).unwrap());
    }

    #[test]
    fn one_bar_pairs() {
        assert!(check_one_bar_pairs(&t(2, &["2", "2b"])));
        assert!(!check_one_bar_pairs(&t(2, &["1", "1b"])));
        assert!(check_adjacent_columns(&t(2, &["1"])));
    }

    #[test]
    fn sp4_checker() {
        assert!(is_kn_sp4(&t(2, &["1 2 2b", "2b 1b"])).unwrap());
        assert!(!is_kn_sp4(&t(2, &["2 2", "2 2b"])).unwrap());
        // left column (2, 2̄) next to a column with 2̄ in row 2
        let b = t(2, &["2 2", "2b 2b"]);
        assert!(!is_kn_sp4(&b).unwrap());
        assert!(!is_kn(&b));
        assert!(!is_kn_sp4(&t(2, &["1 1", "2 1b"])).unwrap());
        assert_eq!(is_kn_sp4(&t(3, &["1"])), Err(Error::UnsupportedRank(3)));
    }

    #[test]
    fn weights() {
        assert_eq!(tableau_weight(&Tableau::empty(2)).coords(), &[0, 0]);
        assert_eq!(tableau_weight(&t(2, &["1 2 2b", "2b 1b"])).coords(), &[0, -1]);
    }

    #[test]
    fn small_enumerations() {
        assert_eq!(enumerate_kn4(HighestWeight::new(0, 0)), vec![Tableau::empty(2)]);
        assert_eq!(enumerate_kn4(HighestWeight::new(0, 1)).len(), 5);
        assert_eq!(enumerate_kn4(HighestWeight::new(1, 0)).len(), 4);
        assert_eq!(enumerate_kn4(HighestWeight::new(1, 2)).len(), 40);
        // smallest element is the highest weight tableau, of weight λ
        for (m1, m2) in [(0, 1), (2, 0), (1, 2), (3, 3)] {
            let hw = HighestWeight::new(m1, m2);
            let lowest = enumerate_kn4(hw).pop().unwrap();
            assert_eq!(tableau_weight(&lowest), hw.as_weight());
        }
    }

    /// Every filling of the shape, generated without any pruning.
    fn all_fillings(shape: &[usize]) -> Vec<Tableau> {
        let boxes: usize = shape.iter().sum();
        let mut out = Vec::new();
        for code in 0..4usize.pow(boxes as u32) {
            let mut c = code;
            let rows = shape
                .iter()
                .map(|&len| {
                    (0..len)
                        .map(|_| {
                            let e = Entry::SP4[c % 4];
                            c /= 4;
                            e
                        })
                        .collect()
                })
                .collect();
            out.push(Tableau::new(2, rows).unwrap());
        }
        out
    }

    #[test]
    fn enumeration_is_exactly_the_kn_fillings() {
        for l1 in 0..=4usize {
            for l2 in 0..=l1 {
                let shape: Vec<usize> = [l1, l2].into_iter().filter(|&l| l > 0).collect();
                let hw = HighestWeight::new((l1 - l2) as u32, l2 as u32);
                let listed = enumerate_kn4(hw);
                let brute: Vec<Tableau> =
                    all_fillings(&shape).into_iter().filter(|t| is_kn_sp4(t).unwrap()).collect();
                assert_eq!(listed.len(), brute.len(), "shape {shape:?}");
                for t in &brute {
                    assert!(listed.contains(t));
                }
            }
        }
    }
}
