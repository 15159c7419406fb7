//! The Verma index system of `L(λ)` and its bijection with KN tableaux.
//!
//! A tuple `a = (a1, a2, a3, a4)` indexes the monomial
//! `f1^{a4} f2^{a3} f1^{a2} f2^{a1} v_λ`; it is valid when
//!
//! ```text
//! 0 ≤ a1 ≤ m2
//! 0 ≤ a2 ≤ m1 + 2·a1
//! 0 ≤ a3 ≤ min((a2 + m1) / 2, a2)
//! 0 ≤ a4 ≤ min(m1, a3)
//! ```
//!
//! All half-integers are handled by doubling; nothing is rounded.

use serde_json::json;

use crate::entry::Entry;
use crate::error::{Error, Result};
use crate::kn::{is_kn_sp4, tableau_weight};
use crate::tableau::Tableau;
use crate::weight::{HighestWeight, VermaTuple, WeightVec};

pub fn is_valid_tuple(a: VermaTuple, hw: HighestWeight) -> bool {
    let (m1, m2) = (u64::from(hw.m1), u64::from(hw.m2));
    let [a1, a2, a3, a4] = a.to_array().map(u64::from);
    a1 <= m2 && a2 <= m1 + 2 * a1 && 2 * a3 <= a2 + m1 && a3 <= a2 && a4 <= m1.min(a3)
}

/// All valid tuples in lexicographic order.
pub fn enumerate_tuples(hw: HighestWeight) -> Vec<VermaTuple> {
    let (m1, m2) = (hw.m1, hw.m2);
    let mut out = Vec::new();
    for a1 in 0..=m2 {
        for a2 in 0..=m1 + 2 * a1 {
            for a3 in 0..=((a2 + m1) / 2).min(a2) {
                for a4 in 0..=m1.min(a3) {
                    out.push(VermaTuple::new(a1, a2, a3, a4));
                }
            }
        }
    }
    out
}

/// Which of the three shapes `T(a)` takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TupleCase {
    /// `a2 ≥ m1`, `a2 − m1` odd.
    OddExcess,
    /// `a2 ≥ m1`, `a2 − m1` even.
    EvenExcess,
    /// `a2 < m1`.
    Deficit,
}

pub fn classify(a: VermaTuple, hw: HighestWeight) -> TupleCase {
    if a.a2 < hw.m1 {
        TupleCase::Deficit
    } else if (a.a2 - hw.m1) % 2 == 1 {
        TupleCase::OddExcess
    } else {
        TupleCase::EvenExcess
    }
}

fn run(letter: Entry, count: i64, what: &str, a: VermaTuple) -> Result<Vec<Entry>> {
    if count < 0 {
        return Err(Error::Internal(format!("negative count {count} of {what} for tuple {a}")));
    }
    Ok(vec![letter; count as usize])
}

/// The KN tableau `T(a)` attached to a valid tuple.
pub fn tuple_to_tableau(a: VermaTuple, hw: HighestWeight) -> Result<Tableau> {
    if !is_valid_tuple(a, hw) {
        return Err(Error::InvalidTuple { tuple: a, hw });
    }
    let (m1, m2) = (i64::from(hw.m1), i64::from(hw.m2));
    let [a1, a2, a3, a4] = a.to_array().map(i64::from);

    // (ones, twos, two_bars, one_bars) in row 1; (twos, two_bars, one_bars) in row 2
    let (top, bottom) = match classify(a, hw) {
        TupleCase::OddExcess => {
            let h = (a2 - m1 - 1) / 2;
            ((m2 - h - 1, m1 - a3 + h + 1, a3 - a4, a4), (m2 - a1, a1 - h, h))
        }
        TupleCase::EvenExcess => {
            let h = (a2 - m1) / 2;
            ((m2 - h, m1 - a3 + h, a3 - a4, a4), (m2 - a1, a1 - h, h))
        }
        TupleCase::Deficit => ((m1 + m2 - a2, a2 - a3, a3 - a4, a4), (m2 - a1, a1, 0)),
    };

    let mut row1 = run(Entry::ONE, top.0, "1 in row 1", a)?;
    row1.extend(run(Entry::TWO, top.1, "2 in row 1", a)?);
    row1.extend(run(Entry::TWO_BAR, top.2, "2̄ in row 1", a)?);
    row1.extend(run(Entry::ONE_BAR, top.3, "1̄ in row 1", a)?);
    let mut row2 = run(Entry::TWO, bottom.0, "2 in row 2", a)?;
    row2.extend(run(Entry::TWO_BAR, bottom.1, "2̄ in row 2", a)?);
    row2.extend(run(Entry::ONE_BAR, bottom.2, "1̄ in row 2", a)?);

    let rows: Vec<Vec<Entry>> = [row1, row2].into_iter().filter(|r| !r.is_empty()).collect();
    let tableau = Tableau::new(2, rows)?;
    if tableau.shape() != expected_shape(hw) {
        return Err(Error::Internal(format!("T{a} has shape {:?}", tableau.shape())));
    }
    if cfg!(debug_assertions) && !is_kn_sp4(&tableau)? {
        return Err(Error::Internal(format!("T{a} = {tableau:?} is not KN")));
    }
    Ok(tableau)
}

fn expected_shape(hw: HighestWeight) -> Vec<usize> {
    let (l1, l2) = hw.partition();
    [l1, l2].into_iter().filter(|&l| l > 0).map(|l| l as usize).collect()
}

/// Counting map from a KN tableau back to its tuple:
/// `a1 = #{row 2 > 2}`, `a2 = #{row 1 > 1} + #{row 2 > 2̄}`,
/// `a3 = #{row 1 > 2}`, `a4 = #{row 1 > 2̄}`.
pub fn tableau_to_tuple(t: &Tableau) -> Result<VermaTuple> {
    if !is_kn_sp4(t)? {
        return Err(Error::NotKn);
    }
    let empty = Vec::new();
    let row1 = t.rows().first().unwrap_or(&empty);
    let row2 = t.rows().get(1).unwrap_or(&empty);
    let above = |row: &[Entry], bound: Entry| row.iter().filter(|&&e| e > bound).count() as u32;
    Ok(VermaTuple::new(
        above(row2, Entry::TWO),
        above(row1, Entry::ONE) + above(row2, Entry::TWO_BAR),
        above(row1, Entry::TWO),
        above(row1, Entry::TWO_BAR),
    ))
}

/// Highest weight read off the shape of a rank-2 tableau.
pub fn highest_weight_of(t: &Tableau) -> HighestWeight {
    let shape = t.shape();
    let l1 = shape.first().copied().unwrap_or(0) as u32;
    let l2 = shape.get(1).copied().unwrap_or(0) as u32;
    HighestWeight::new(l1 - l2, l2)
}

/// `(m1 + m2 − a2 − a4) ε1 + (m2 − 2a1 + a2 − 2a3 + a4) ε2`.
pub fn verma_weight(a: VermaTuple, hw: HighestWeight) -> WeightVec {
    let (m1, m2) = (i64::from(hw.m1), i64::from(hw.m2));
    let [a1, a2, a3, a4] = a.to_array().map(i64::from);
    WeightVec::new(vec![m1 + m2 - a2 - a4, m2 - 2 * a1 + a2 - 2 * a3 + a4])
}

/// The monomial as written left to right, e.g. `"f2 f1^3 f2^2 v"`; factors
/// with exponent zero are dropped.
pub fn monomial_string(a: VermaTuple) -> String {
    let mut parts: Vec<String> = [(1, a.a4), (2, a.a3), (1, a.a2), (2, a.a1)]
        .into_iter()
        .filter(|&(_, e)| e > 0)
        .map(|(g, e)| if e == 1 { format!("f{g}") } else { format!("f{g}^{e}") })
        .collect();
    parts.push("v".to_string());
    parts.join(" ")
}

/// One basis element, as emitted by the `basis` command.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasisRecord {
    pub tuple: VermaTuple,
    pub tableau: Tableau,
    pub weight: WeightVec,
}

impl BasisRecord {
    pub fn monomial(&self) -> String {
        monomial_string(self.tuple)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "tuple": self.tuple,
            "monomial": self.monomial(),
            "tableau": self.tableau.to_json(),
            "weight": self.weight,
        })
    }
}

/// Every basis element in lexicographic tuple order. The tableau weight and
/// the closed-form weight are checked against each other.
pub fn basis_records(hw: HighestWeight) -> Result<Vec<BasisRecord>> {
    enumerate_tuples(hw)
        .into_iter()
        .map(|tuple| {
            let tableau = tuple_to_tableau(tuple, hw)?;
            let weight = verma_weight(tuple, hw);
            if tableau_weight(&tableau) != weight {
                return Err(Error::Verification {
                    tuple,
                    reason: format!("tableau weight {:?} differs from {:?}", tableau_weight(&tableau), weight),
                });
            }
            Ok(BasisRecord { tuple, tableau, weight })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hw(m1: u32, m2: u32) -> HighestWeight {
        HighestWeight::new(m1, m2)
    }

    fn tab(rows: &[&str]) -> Tableau {
        Tableau::parse_rows(2, rows).unwrap()
    }

    #[test]
    fn validity() {
        assert!(is_valid_tuple(VermaTuple::new(2, 3, 1, 0), hw(1, 2)));
        assert!(is_valid_tuple(VermaTuple::ZERO, hw(0, 0)));
        assert!(is_valid_tuple(VermaTuple::ZERO, hw(7, 3)));
        assert!(!is_valid_tuple(VermaTuple::new(0, 2, 2, 0), hw(1, 0)));
        // the half-integer bound: a3 ≤ (a2 + m1)/2 with a2 + m1 odd
        assert!(is_valid_tuple(VermaTuple::new(1, 2, 1, 1), hw(1, 1)));
        assert!(!is_valid_tuple(VermaTuple::new(1, 2, 2, 0), hw(1, 1)));
    }

    #[test]
    fn enumerations() {
        assert_eq!(enumerate_tuples(hw(1, 2)).len(), 40);
        assert_eq!(enumerate_tuples(hw(0, 0)), vec![VermaTuple::ZERO]);
        assert_eq!(
            enumerate_tuples(hw(1, 0)),
            vec![
                VermaTuple::new(0, 0, 0, 0),
                VermaTuple::new(0, 1, 0, 0),
                VermaTuple::new(0, 1, 1, 0),
                VermaTuple::new(0, 1, 1, 1),
            ]
        );
        let tuples = enumerate_tuples(hw(3, 2));
        assert!(tuples.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn bijection_examples() {
        let h = hw(1, 2);
        assert_eq!(tuple_to_tableau(VermaTuple::new(2, 3, 1, 0), h).unwrap(), tab(&["1 2 2b", "2b 1b"]));
        assert_eq!(tuple_to_tableau(VermaTuple::new(0, 1, 1, 1), h).unwrap(), tab(&["1 1 1b", "2 2"]));
        for (m1, m2) in [(0, 0), (3, 0), (0, 3), (2, 4)] {
            let t = tuple_to_tableau(VermaTuple::ZERO, hw(m1, m2)).unwrap();
            assert!(t.rows().first().is_none_or(|r| r.iter().all(|&e| e == Entry::ONE)));
            assert!(t.rows().get(1).is_none_or(|r| r.iter().all(|&e| e == Entry::TWO)));
            assert_eq!(tableau_to_tuple(&t).unwrap(), VermaTuple::ZERO);
        }
        assert_eq!(tableau_to_tuple(&tab(&["2 2b 2b", "2b 1b"])).unwrap(), VermaTuple::new(2, 4, 2, 0));
        assert_eq!(tableau_to_tuple(&tab(&["1 2 2b", "2b 1b"])).unwrap(), VermaTuple::new(2, 3, 1, 0));
        assert_eq!(tableau_to_tuple(&tab(&["1 1", "1b 1b"])), Err(Error::NotKn));
        assert!(matches!(
            tuple_to_tableau(VermaTuple::new(0, 2, 2, 0), hw(1, 0)),
            Err(Error::InvalidTuple { .. })
        ));
    }

    #[test]
    fn weights() {
        assert_eq!(verma_weight(VermaTuple::ZERO, hw(4, 3)), hw(4, 3).as_weight());
        assert_eq!(verma_weight(VermaTuple::new(2, 3, 1, 0), hw(1, 2)).coords(), &[0, -1]);
        assert_eq!(verma_weight(VermaTuple::new(0, 1, 1, 1), hw(1, 2)).coords(), &[1, 2]);
        assert_eq!(tableau_weight(&tab(&["1 1 1b", "2 2"])).coords(), &[1, 2]);
    }

    #[test]
    fn monomials() {
        assert_eq!(monomial_string(VermaTuple::ZERO), "v");
        assert_eq!(monomial_string(VermaTuple::new(2, 3, 1, 0)), "f2 f1^3 f2^2 v");
        assert_eq!(monomial_string(VermaTuple::new(0, 1, 1, 1)), "f1 f2 f1 v");
    }

    #[test]
    fn exactly_one_case_per_tuple() {
        for m1 in 0..=4 {
            for m2 in 0..=4 {
                for a in enumerate_tuples(hw(m1, m2)) {
                    let cases = [
                        a.a2 >= m1 && (a.a2 - m1) % 2 == 1,
                        a.a2 >= m1 && (a.a2 - m1) % 2 == 0,
                        a.a2 < m1,
                    ];
                    assert_eq!(cases.iter().filter(|&&c| c).count(), 1);
                }
            }
        }
    }

    #[test]
    fn record_json() {
        let records = basis_records(hw(1, 2)).unwrap();
        let r = records.iter().find(|r| r.tuple == VermaTuple::new(2, 3, 1, 0)).unwrap();
        assert_eq!(
            r.to_json().to_string(),
            r#"{"tuple":[2,3,1,0],"monomial":"f2 f1^3 f2^2 v","tableau":{"n":2,"shape":[3,2],"rows":[["1","2","2b"],["2b","1b"]]},"weight":[0,-1]}"#
        );
    }
}
