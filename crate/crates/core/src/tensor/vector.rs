//! Sparse exact vectors of `W` and the action of the Chevalley generators.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::slice::ParallelSliceMut;

use super::index::{code_of, entry_of, tableau_of_index, Ambient, IndexKey, TensorIndex};
use crate::entry::Entry;
use crate::error::{Error, Result};
use crate::tableau::Tableau;

/// Chevalley generators of `sp(4)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Generator {
    E1,
    E2,
    F1,
    F2,
    H1,
    H2,
}

impl Generator {
    pub const ALL: [Generator; 6] =
        [Generator::E1, Generator::E2, Generator::F1, Generator::F2, Generator::H1, Generator::H2];

    pub fn is_diagonal(self) -> bool {
        matches!(self, Generator::H1 | Generator::H2)
    }

    /// Image of a letter code, or `None` when the letter is killed.
    #[inline]
    fn on_code(self, code: u64) -> Option<(u64, i64)> {
        // codes: 0 = 1, 1 = 2, 2 = 2̄, 3 = 1̄
        use Generator::*;
        match (self, code) {
            (F1, 0) => Some((1, 1)),
            (F1, 2) => Some((3, 1)),
            (F2, 1) => Some((2, 1)),
            (E1, 1) => Some((0, 1)),
            (E1, 3) => Some((2, 1)),
            (E2, 2) => Some((1, 1)),
            (H1, c) => Some((c, if c % 2 == 0 { 1 } else { -1 })),
            (H2, 1) => Some((1, 1)),
            (H2, 2) => Some((2, -1)),
            _ => None,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Generator::E1 => "e1",
            Generator::E2 => "e2",
            Generator::F1 => "f1",
            Generator::F2 => "f2",
            Generator::H1 => "h1",
            Generator::H2 => "h2",
        };
        f.write_str(name)
    }
}

/// The action on a single basis letter of `V`. Letters outside the rank-2
/// alphabet are killed.
pub fn act_on_letter(g: Generator, x: Entry) -> Vec<(Entry, i64)> {
    if !x.fits_rank(2) {
        return Vec::new();
    }
    g.on_code(code_of(x)).into_iter().map(|(c, k)| (entry_of(c), k)).collect()
}

/// An element of `W` with integer coefficients, stored as terms sorted by
/// key with no zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct ExactVector {
    ambient: Ambient,
    terms: Vec<(IndexKey, BigInt)>,
}

impl ExactVector {
    pub fn zero(ambient: Ambient) -> Self {
        ExactVector { ambient, terms: Vec::new() }
    }

    pub fn basis(ix: &TensorIndex) -> Result<Self> {
        Ok(ExactVector { ambient: ix.ambient(), terms: vec![(ix.key()?, BigInt::one())] })
    }

    /// Sums the given terms. Every index must belong to `ambient`.
    pub fn from_terms<I>(ambient: Ambient, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (TensorIndex, BigInt)>,
    {
        let mut packed = Vec::new();
        for (ix, c) in terms {
            if ix.ambient() != ambient {
                return Err(Error::AmbientMismatch);
            }
            packed.push((ix.key()?, c));
        }
        Ok(ExactVector { ambient, terms: normalize(packed) })
    }

    /// Sums pure tensors given in a raw form whose wedge pairs may be out of
    /// order or repeated, applying `x ∧ y = −y ∧ x` and `x ∧ x = 0`.
    pub fn from_raw<I>(ambient: Ambient, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (RawTensor, BigInt)>,
    {
        let mut canonical = Vec::new();
        for (raw, c) in terms {
            if let Some((ix, sign)) = raw.canonicalize()? {
                canonical.push((ix, if sign < 0 { -c } else { c }));
            }
        }
        Self::from_terms(ambient, canonical)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_zero()
    }

    /// Terms in increasing key order.
    pub fn terms(&self) -> &[(IndexKey, BigInt)] {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (TensorIndex, &BigInt)> + '_ {
        self.terms.iter().map(|(k, c)| (TensorIndex::from_key(*k, self.ambient), c))
    }

    pub fn coefficient_of_key(&self, key: IndexKey) -> BigInt {
        match self.terms.binary_search_by_key(&key, |t| t.0) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn coefficient(&self, ix: &TensorIndex) -> BigInt {
        match ix.key() {
            Ok(key) if ix.ambient() == self.ambient => self.coefficient_of_key(key),
            _ => BigInt::zero(),
        }
    }

    /// The term whose tableau is largest, with its coefficient.
    pub fn leading_term(&self) -> Result<(Tableau, BigInt)> {
        let (key, c) = self.terms.last().ok_or(Error::ZeroVector)?;
        Ok((tableau_of_index(&TensorIndex::from_key(*key, self.ambient)), c.clone()))
    }

    pub fn add(&self, other: &ExactVector) -> Result<ExactVector> {
        self.combine(other, BigInt::one())
    }

    pub fn sub(&self, other: &ExactVector) -> Result<ExactVector> {
        self.combine(other, -BigInt::one())
    }

    pub fn scale(&self, k: &BigInt) -> ExactVector {
        if k.is_zero() {
            return ExactVector::zero(self.ambient);
        }
        let terms = self.terms.iter().map(|(key, c)| (*key, c * k)).collect();
        ExactVector { ambient: self.ambient, terms }
    }

    fn combine(&self, other: &ExactVector, k: BigInt) -> Result<ExactVector> {
        if self.ambient != other.ambient {
            return Err(Error::AmbientMismatch);
        }
        let mut all = self.terms.clone();
        all.extend(other.terms.iter().map(|(key, c)| (*key, c * &k)));
        Ok(ExactVector { ambient: self.ambient, terms: normalize(all) })
    }
}

impl fmt::Debug for ExactVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.iter().map(|(ix, c)| format!("{c}·{ix:?}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Sorts by key, merges equal keys and drops zeros.
fn normalize(mut terms: Vec<(IndexKey, BigInt)>) -> Vec<(IndexKey, BigInt)> {
    if terms.len() > 1 << 15 {
        terms.par_sort_unstable_by_key(|t| t.0);
    } else {
        terms.sort_unstable_by_key(|t| t.0);
    }
    let mut out: Vec<(IndexKey, BigInt)> = Vec::with_capacity(terms.len());
    for (key, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == key => last.1 += c,
            _ => {
                if let Some(last) = out.last() {
                    if last.1.is_zero() {
                        out.pop();
                    }
                }
                out.push((key, c));
            }
        }
    }
    if out.last().is_some_and(|t| t.1.is_zero()) {
        out.pop();
    }
    out
}

/// The derivation action of `g` on `v`: the sum over every tensor slot of
/// the single-letter action, with wedge pairs re-canonicalised.
pub fn act(g: Generator, v: &ExactVector) -> ExactVector {
    let ambient = v.ambient;
    let letters = ambient.letters();
    let m1 = ambient.m1 as usize;

    if g.is_diagonal() {
        let terms = v
            .terms
            .iter()
            .filter_map(|(key, c)| {
                let eigen: i64 = (0..letters).map(|s| g.on_code(key.code(s, letters)).map_or(0, |x| x.1)).sum();
                (eigen != 0).then(|| (*key, c * eigen))
            })
            .collect();
        return ExactVector { ambient, terms };
    }

    let mut out = Vec::with_capacity(v.terms.len() * 2);
    for (key, c) in &v.terms {
        for slot in 0..letters {
            let Some((code, k)) = g.on_code(key.code(slot, letters)) else { continue };
            let mut image = key.with_code(slot, letters, code);
            let mut sign = k;
            if slot >= m1 {
                let (first, second) = if (slot - m1).is_multiple_of(2) { (slot, slot + 1) } else { (slot - 1, slot) };
                let (a, b) = (image.code(first, letters), image.code(second, letters));
                if a == b {
                    continue;
                }
                if a > b {
                    image = image.with_code(first, letters, b).with_code(second, letters, a);
                    sign = -sign;
                }
            }
            out.push((image, if sign == 1 { c.clone() } else { c * sign }));
        }
    }
    ExactVector { ambient, terms: normalize(out) }
}

/// A pure tensor before canonicalisation: wedge pairs may be unordered or
/// repeated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawTensor {
    pub word: Vec<Entry>,
    pub wedges: Vec<(Entry, Entry)>,
}

impl RawTensor {
    /// The canonical index and the sign relating it to `self`, or `None`
    /// when a wedge pair repeats a letter.
    pub fn canonicalize(&self) -> Result<Option<(TensorIndex, i32)>> {
        let mut sign = 1;
        let mut wedges = Vec::with_capacity(self.wedges.len());
        for &(a, b) in &self.wedges {
            match a.cmp(&b) {
                std::cmp::Ordering::Equal => return Ok(None),
                std::cmp::Ordering::Less => wedges.push((a, b)),
                std::cmp::Ordering::Greater => {
                    sign = -sign;
                    wedges.push((b, a));
                }
            }
        }
        Ok(Some((TensorIndex::new(self.word.clone(), wedges)?, sign)))
    }

    /// Leibniz expansion of `g` on the raw tensor, letter by letter, with no
    /// canonicalisation.
    pub fn act(&self, g: Generator) -> Vec<(RawTensor, i64)> {
        let mut out = Vec::new();
        for t in 0..self.word.len() {
            for (x, k) in act_on_letter(g, self.word[t]) {
                let mut r = self.clone();
                r.word[t] = x;
                out.push((r, k));
            }
        }
        for s in 0..self.wedges.len() {
            for second in [false, true] {
                let (a, b) = self.wedges[s];
                for (x, k) in act_on_letter(g, if second { b } else { a }) {
                    let mut r = self.clone();
                    r.wedges[s] = if second { (a, x) } else { (x, b) };
                    out.push((r, k));
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weight::HighestWeight;
    use proptest::prelude::*;
    use Entry as E;

    /// Generators as 4×4 matrices on `ε1..ε4`, built from elementary matrices.
    fn matrix(g: Generator) -> [[i64; 4]; 4] {
        let mut m = [[0i64; 4]; 4];
        let mut put = |i: usize, j: usize, k: i64| m[i - 1][j - 1] += k;
        match g {
            Generator::E1 => {
                put(1, 2, 1);
                put(4, 3, -1);
            }
            Generator::F1 => {
                put(2, 1, 1);
                put(3, 4, -1);
            }
            Generator::H1 => {
                put(1, 1, 1);
                put(2, 2, -1);
                put(3, 3, -1);
                put(4, 4, 1);
            }
            Generator::E2 => put(2, 4, 1),
            Generator::F2 => put(4, 2, 1),
            Generator::H2 => {
                put(2, 2, 1);
                put(4, 4, -1);
            }
        }
        m
    }

    /// Letter `1, 2, 2̄, 1̄` in the coordinates `ε1..ε4`.
    fn standard(x: Entry) -> [i64; 4] {
        match x.value() {
            1 => [1, 0, 0, 0],
            2 => [0, 1, 0, 0],
            -2 => [0, 0, 0, 1],
            _ => [0, 0, -1, 0],
        }
    }

    #[test]
    fn letter_table_matches_matrices() {
        for g in Generator::ALL {
            let m = matrix(g);
            for x in Entry::SP4 {
                let col = standard(x);
                let expected: Vec<i64> = (0..4).map(|i| (0..4).map(|j| m[i][j] * col[j]).sum()).collect();
                let mut got = [0i64; 4];
                for (y, k) in act_on_letter(g, x) {
                    for (i, v) in standard(y).iter().enumerate() {
                        got[i] += k * v;
                    }
                }
                assert_eq!(got.to_vec(), expected, "{g} on {x}");
            }
        }
        assert_eq!(act_on_letter(Generator::F1, E::ONE), vec![(E::TWO, 1)]);
        assert_eq!(act_on_letter(Generator::F1, E::TWO_BAR), vec![(E::ONE_BAR, 1)]);
        assert_eq!(act_on_letter(Generator::F2, E::ONE), vec![]);
    }

    fn hw_vector(m1: u32, m2: u32) -> ExactVector {
        let ix = TensorIndex::new(vec![E::ONE; m1 as usize], vec![(E::ONE, E::TWO); m2 as usize]).unwrap();
        ExactVector::basis(&ix).unwrap()
    }

    #[test]
    fn f2_on_two_wedges() {
        let v = act(Generator::F2, &hw_vector(0, 2));
        let a = TensorIndex::new(vec![], vec![(E::ONE, E::TWO_BAR), (E::ONE, E::TWO)]).unwrap();
        let b = TensorIndex::new(vec![], vec![(E::ONE, E::TWO), (E::ONE, E::TWO_BAR)]).unwrap();
        let expected =
            ExactVector::from_terms(Ambient::new(0, 2), [(a, BigInt::one()), (b, BigInt::one())]).unwrap();
        assert_eq!(v, expected);
    }

    #[test]
    fn highest_weight_vector_is_maximal() {
        for m1 in 0..4 {
            for m2 in 0..4 {
                let v = hw_vector(m1, m2);
                assert!(act(Generator::E1, &v).is_zero());
                assert!(act(Generator::E2, &v).is_zero());
                assert_eq!(act(Generator::H1, &v), v.scale(&BigInt::from(m1)));
                assert_eq!(act(Generator::H2, &v), v.scale(&BigInt::from(m2)));
                let (t, c) = v.leading_term().unwrap();
                assert_eq!(crate::kn::tableau_weight(&t), HighestWeight::new(m1, m2).as_weight());
                assert_eq!(c, BigInt::one());
            }
        }
    }

    #[test]
    fn zero_has_no_leading_term() {
        assert_eq!(ExactVector::zero(Ambient::new(1, 1)).leading_term(), Err(Error::ZeroVector));
    }

    #[test]
    fn linear_combinations() {
        let v = act(Generator::F1, &act(Generator::F2, &hw_vector(1, 1)));
        assert!(v.sub(&v).unwrap().is_zero());
        assert_eq!(v.add(&v).unwrap(), v.scale(&BigInt::from(2)));
        assert_eq!(v.add(&hw_vector(1, 0)), Err(Error::AmbientMismatch));
    }

    fn letter() -> impl Strategy<Value = Entry> {
        (0usize..4).prop_map(|i| Entry::SP4[i])
    }

    fn raw_tensor() -> impl Strategy<Value = RawTensor> {
        (0usize..3, 0usize..3).prop_flat_map(|(m1, m2)| {
            (prop::collection::vec(letter(), m1), prop::collection::vec((letter(), letter()), m2))
                .prop_map(|(word, wedges)| RawTensor { word, wedges })
        })
    }

    fn generator() -> impl Strategy<Value = Generator> {
        (0usize..6).prop_map(|i| Generator::ALL[i])
    }

    proptest! {
        /// Acting then canonicalising agrees with canonicalising then acting,
        /// including on swapped and repeated wedge letters.
        #[test]
        fn action_respects_wedge_relations(raw in raw_tensor(), g in generator()) {
            let ambient = Ambient::new(raw.word.len() as u32, raw.wedges.len() as u32);
            let before = ExactVector::from_raw(ambient, [(raw.clone(), BigInt::one())]).unwrap();
            let after = ExactVector::from_raw(
                ambient,
                raw.act(g).into_iter().map(|(r, k)| (r, BigInt::from(k))),
            ).unwrap();
            prop_assert_eq!(act(g, &before), after);
        }
    }
}
