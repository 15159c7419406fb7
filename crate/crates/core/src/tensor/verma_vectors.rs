//! Verma vectors `f1^{a4} f2^{a3} f1^{a2} f2^{a1} v_λ` inside `W` and the
//! leading-term certificate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde_json::json;

use super::index::{u_of_tableau, Ambient, TensorIndex, MAX_LETTERS};
use super::vector::{act, ExactVector, Generator};
use crate::entry::Entry;
use crate::error::{Error, Result};
use crate::tableau::Tableau;
use crate::verma::{is_valid_tuple, tuple_to_tableau};
use crate::weight::{HighestWeight, VermaTuple};

/// Upper bound on `dim W` accepted by the expensive operations.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget(pub u128);

impl Budget {
    pub const DEFAULT: Budget = Budget(10_000_000);

    pub fn check(self, ambient: Ambient) -> Result<()> {
        let required = ambient.dimension();
        if required > self.0 {
            return Err(Error::BudgetExceeded { required, budget: self.0 });
        }
        if ambient.letters() > MAX_LETTERS {
            return Err(Error::TooManyFactors(ambient.letters()));
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::DEFAULT
    }
}

/// `v_λ = ε1^{⊗m1} ⊗ (ε1 ∧ ε2)^{⊗m2}`.
pub fn highest_weight_vector(hw: HighestWeight) -> Result<ExactVector> {
    let ix = TensorIndex::new(vec![Entry::ONE; hw.m1 as usize], vec![(Entry::ONE, Entry::TWO); hw.m2 as usize])?;
    ExactVector::basis(&ix)
}

fn apply(g: Generator, times: u32, v: ExactVector) -> ExactVector {
    (0..times).fold(v, |v, _| act(g, &v))
}

pub fn verma_vector(a: VermaTuple, hw: HighestWeight, budget: Budget) -> Result<ExactVector> {
    if !is_valid_tuple(a, hw) {
        return Err(Error::InvalidTuple { tuple: a, hw });
    }
    budget.check(hw.into())?;
    let v = highest_weight_vector(hw)?;
    let v = apply(Generator::F2, a.a1, v);
    let v = apply(Generator::F1, a.a2, v);
    let v = apply(Generator::F2, a.a3, v);
    Ok(apply(Generator::F1, a.a4, v))
}

/// Applies `f` to every Verma vector of `L(λ)`, returning the results in
/// lexicographic tuple order.
///
/// Vectors sharing a prefix `(a1, a2, a3)` are obtained from one another by
/// a single extra `f` application; the `(a1, a2)` prefixes run in parallel.
pub fn map_verma_vectors<R, F>(hw: HighestWeight, budget: Budget, f: F) -> Result<Vec<R>>
where
    R: Send,
    F: Fn(VermaTuple, &ExactVector) -> Result<R> + Sync,
{
    budget.check(hw.into())?;
    let (m1, m2) = (hw.m1, hw.m2);
    let prefixes: Vec<(u32, u32)> =
        (0..=m2).flat_map(|a1| (0..=m1 + 2 * a1).map(move |a2| (a1, a2))).collect();
    let chunks: Vec<Vec<R>> = prefixes
        .into_par_iter()
        .map(|(a1, a2)| {
            let mut out = Vec::new();
            let base = apply(Generator::F1, a2, apply(Generator::F2, a1, highest_weight_vector(hw)?));
            let mut v3 = base;
            for a3 in 0..=((a2 + m1) / 2).min(a2) {
                if a3 > 0 {
                    v3 = act(Generator::F2, &v3);
                }
                let mut v4 = v3.clone();
                for a4 in 0..=m1.min(a3) {
                    if a4 > 0 {
                        v4 = act(Generator::F1, &v4);
                    }
                    out.push(f(VermaTuple::new(a1, a2, a3, a4), &v4)?);
                }
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(chunks.into_iter().flatten().collect())
}

/// `a1! · a2! · a3! · a4!`.
pub fn factorial_product(a: VermaTuple) -> BigInt {
    a.to_array().iter().flat_map(|&k| 1..=k).fold(BigInt::one(), |acc, k| acc * k)
}

/// Per-tuple outcome of the triangularity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularRecord {
    pub tuple: VermaTuple,
    pub leading_tableau: Tableau,
    pub leading_coeff: BigInt,
    pub num_terms: usize,
}

impl TriangularRecord {
    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "tuple": self.tuple,
            "leading_tableau": self.leading_tableau.to_json(),
            "leading_coeff": self.leading_coeff.to_string(),
            "num_terms": self.num_terms,
        })
    }
}

/// Checks one Verma vector: its largest tableau is `T(a)`, all its
/// coefficients are positive, and the coefficient of `T(a)` is
/// `a1!a2!a3!a4!`.
pub fn check_vector(a: VermaTuple, hw: HighestWeight, v: &ExactVector) -> Result<TriangularRecord> {
    let fail = |reason: String| Error::Verification { tuple: a, reason };
    let expected = tuple_to_tableau(a, hw)?;
    let expected_key = u_of_tableau(&expected)?.key()?;
    let (leading_tableau, leading_coeff) = v.leading_term().map_err(|_| fail("vector is zero".into()))?;
    if leading_tableau != expected {
        let reason = if v.coefficient_of_key(expected_key).is_zero() {
            format!("T(a) has coefficient 0; leading tableau is {leading_tableau:?}")
        } else {
            format!("tableau {leading_tableau:?} above T(a) has nonzero coefficient")
        };
        return Err(fail(reason));
    }
    if let Some((key, c)) = v.terms().iter().find(|t| !t.1.is_positive()) {
        let ix = TensorIndex::from_key(*key, v.ambient());
        return Err(fail(format!("coefficient {c} at {ix:?} is not positive")));
    }
    let expected_coeff = factorial_product(a);
    if leading_coeff != expected_coeff {
        return Err(fail(format!("leading coefficient {leading_coeff}, expected {expected_coeff}")));
    }
    Ok(TriangularRecord { tuple: a, leading_tableau, leading_coeff, num_terms: v.len() })
}

/// Runs [`check_vector`] on every Verma vector; the records come in
/// lexicographic tuple order.
pub fn check_triangular(hw: HighestWeight, budget: Budget) -> Result<Vec<TriangularRecord>> {
    map_verma_vectors(hw, budget, |a, v| check_vector(a, hw, v))
}

pub fn certificate_json(records: &[TriangularRecord]) -> serde_json::Value {
    serde_json::Value::Array(records.iter().map(TriangularRecord::to_json).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tensor::index::tableau_of_index;
    use crate::verma::enumerate_tuples;

    fn hw(m1: u32, m2: u32) -> HighestWeight {
        HighestWeight::new(m1, m2)
    }

    #[test]
    fn highest_weight_vectors() {
        let v = highest_weight_vector(hw(1, 2)).unwrap();
        let (ix, c) = v.iter().next().unwrap();
        assert_eq!(ix.word(), &[Entry::ONE]);
        assert_eq!(ix.wedges(), &[(Entry::ONE, Entry::TWO); 2]);
        assert_eq!(*c, BigInt::one());
        assert_eq!(v.len(), 1);
        assert_eq!(verma_vector(VermaTuple::ZERO, hw(1, 2), Budget::DEFAULT).unwrap(), v);
    }

    #[test]
    fn natural_representation() {
        let v = verma_vector(VermaTuple::new(0, 1, 1, 1), hw(1, 0), Budget::DEFAULT).unwrap();
        assert_eq!(v.len(), 1);
        let (ix, c) = v.iter().next().unwrap();
        assert_eq!(ix.word(), &[Entry::ONE_BAR]);
        assert_eq!(*c, BigInt::one());
    }

    #[test]
    fn rejects_invalid_and_oversized() {
        assert_eq!(
            verma_vector(VermaTuple::new(1, 0, 0, 0), hw(1, 0), Budget::DEFAULT),
            Err(Error::InvalidTuple { tuple: VermaTuple::new(1, 0, 0, 0), hw: hw(1, 0) })
        );
        let err = verma_vector(VermaTuple::ZERO, hw(12, 0), Budget::DEFAULT).unwrap_err();
        assert!(err.is_resource());
        assert!(verma_vector(VermaTuple::ZERO, hw(12, 0), Budget(u128::MAX)).is_ok());
        assert_eq!(Budget(u128::MAX).check(Ambient::new(33, 0)), Err(Error::TooManyFactors(33)));
    }

    #[test]
    fn shared_prefixes_match_direct_computation() {
        for (m1, m2) in [(0, 0), (1, 1), (2, 1), (1, 2), (3, 0)] {
            let h = hw(m1, m2);
            let streamed = map_verma_vectors(h, Budget::DEFAULT, |a, v| Ok((a, v.clone()))).unwrap();
            let tuples: Vec<_> = streamed.iter().map(|p| p.0).collect();
            assert_eq!(tuples, enumerate_tuples(h));
            for (a, v) in streamed {
                assert_eq!(v, verma_vector(a, h, Budget::DEFAULT).unwrap(), "{a}");
            }
        }
    }

    #[test]
    fn example_leading_term() {
        let h = hw(1, 2);
        let a = VermaTuple::new(2, 3, 1, 0);
        let v = verma_vector(a, h, Budget::DEFAULT).unwrap();
        let (t, _) = v.leading_term().unwrap();
        assert_eq!(t, Tableau::parse_rows(2, &["1 2 2b", "2b 1b"]).unwrap());
        assert_eq!(t, tuple_to_tableau(a, h).unwrap());
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial_product(VermaTuple::ZERO), BigInt::one());
        assert_eq!(factorial_product(VermaTuple::new(2, 3, 1, 0)), BigInt::from(12));
        let big = factorial_product(VermaTuple::new(25, 0, 0, 0));
        assert_eq!(big.to_string(), "15511210043330985984000000");
    }

    /// Leading coefficient of `f2^{a1} v_λ` at `λ = m2·ω2` is `a1!`.
    #[test]
    fn pure_f2_powers() {
        for m2 in 0..=5 {
            for a1 in 0..=m2 {
                let v = verma_vector(VermaTuple::new(a1, 0, 0, 0), hw(0, m2), Budget::DEFAULT).unwrap();
                let expected: BigInt = (1..=a1).fold(BigInt::one(), |acc, k| acc * k);
                assert_eq!(v.leading_term().unwrap().1, expected);
            }
        }
    }

    /// The leading coefficient read off a full expansion, located by
    /// scanning every basis tableau rather than by key order.
    #[test]
    fn leading_coefficients_by_brute_force() {
        use crate::tensor::order::tableau_order;
        for (m1, m2) in [(1, 1), (1, 2)] {
            let h = hw(m1, m2);
            for a in enumerate_tuples(h) {
                let v = verma_vector(a, h, Budget::DEFAULT).unwrap();
                let mut best: Option<(Tableau, BigInt)> = None;
                for (ix, c) in v.iter() {
                    let t = tableau_of_index(&ix);
                    let better = match &best {
                        None => true,
                        Some((b, _)) => tableau_order(&t, b).unwrap().is_gt(),
                    };
                    if better {
                        best = Some((t, c.clone()));
                    }
                }
                let (t, c) = best.unwrap();
                assert_eq!(t, tuple_to_tableau(a, h).unwrap());
                assert_eq!(c, factorial_product(a), "{a} at {h}");
            }
        }
    }

    #[test]
    fn certificates() {
        let records = check_triangular(hw(1, 0), Budget::DEFAULT).unwrap();
        assert_eq!(records.len(), 4);
        assert!(records.iter().all(|r| r.leading_coeff == BigInt::one() && r.num_terms == 1));
        assert_eq!(check_triangular(hw(0, 1), Budget::DEFAULT).unwrap().len(), 5);
        let records = check_triangular(hw(1, 2), Budget::DEFAULT).unwrap();
        assert_eq!(records.len(), 40);
        let json = certificate_json(&records[..1]).to_string();
        assert_eq!(
            json,
            r#"[{"tuple":[0,0,0,0],"leading_tableau":{"n":2,"shape":[3,2],"rows":[["1","1","1"],["2","2"]]},"leading_coeff":"1","num_terms":1}]"#
        );
    }

    #[test]
    fn certificate_rejects_wrong_vectors() {
        let h = hw(1, 1);
        let a = VermaTuple::new(1, 1, 0, 0);
        let v = verma_vector(a, h, Budget::DEFAULT).unwrap();
        let other = verma_vector(VermaTuple::new(1, 2, 0, 0), h, Budget::DEFAULT).unwrap();
        assert!(check_vector(a, h, &v).is_ok());
        assert!(matches!(check_vector(a, h, &other), Err(Error::Verification { .. })));
        assert!(matches!(check_vector(a, h, &v.scale(&BigInt::from(-1))), Err(Error::Verification { .. })));
        assert!(matches!(check_vector(a, h, &v.scale(&BigInt::from(2))), Err(Error::Verification { .. })));
        assert!(matches!(check_vector(a, h, &ExactVector::zero(h.into())), Err(Error::Verification { .. })));
    }
}
