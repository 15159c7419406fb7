//! Pure tensors of `W = V^{⊗m1} ⊗ (Λ²V)^{⊗m2}` and their column-strict
//! tableaux.
//!
//! A basis tensor `ε_{i1} ⊗ … ⊗ ε_{i_m1} ⊗ (ε_{j1} ∧ ε_{k1}) ⊗ … ` with
//! `j_s < k_s` corresponds to the two-row tableau
//!
//! ```text
//! j_m2 … j1 i_m1 … i1
//! k_m2 … k1
//! ```
//!
//! Internally a tensor is packed into an [`IndexKey`]: its `m1 + 2·m2`
//! letters, read in tensor order (`i1, …, i_m1, j1, k1, j2, k2, …`), are
//! the base-4 digits of the key, most significant first. Reading the
//! tableau boxes right to left by column and top to bottom within a column
//! visits exactly that sequence, so comparing keys numerically is the same
//! as comparing tableaux in the box-scan order.

use std::fmt;

use crate::entry::Entry;
use crate::error::{Error, Result};
use crate::kn::is_column_strict;
use crate::tableau::Tableau;
use crate::weight::{HighestWeight, WeightVec};

/// The shape `(m1, m2)` of the tensor space.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Ambient {
    pub m1: u32,
    pub m2: u32,
}

/// Largest number of tensor letters a key can hold.
pub const MAX_LETTERS: usize = 32;

impl Ambient {
    pub fn new(m1: u32, m2: u32) -> Self {
        Ambient { m1, m2 }
    }

    pub fn highest_weight(self) -> HighestWeight {
        HighestWeight::new(self.m1, self.m2)
    }

    /// Letters per pure tensor, `m1 + 2·m2`.
    pub fn letters(self) -> usize {
        self.m1 as usize + 2 * self.m2 as usize
    }

    /// `dim W = 4^{m1} · 6^{m2}`, saturating at `u128::MAX`.
    pub fn dimension(self) -> u128 {
        let pow = |base: u128, exp: u32| {
            (0..exp).try_fold(1u128, |acc, _| acc.checked_mul(base)).unwrap_or(u128::MAX)
        };
        pow(4, self.m1).saturating_mul(pow(6, self.m2))
    }

    /// Every key of the basis, in increasing order.
    pub fn basis_keys(self) -> Vec<IndexKey> {
        let mut keys = vec![IndexKey(0)];
        for _ in 0..self.m1 {
            keys = keys.iter().flat_map(|k| (0..4u64).map(move |c| IndexKey(k.0 << 2 | c))).collect();
        }
        for _ in 0..self.m2 {
            keys = keys
                .iter()
                .flat_map(|k| WEDGE_CODES.iter().map(move |&(a, b)| IndexKey(k.0 << 4 | a << 2 | b)))
                .collect();
        }
        keys
    }
}

impl From<HighestWeight> for Ambient {
    fn from(hw: HighestWeight) -> Self {
        Ambient::new(hw.m1, hw.m2)
    }
}

/// Strictly increasing letter pairs, in increasing order.
const WEDGE_CODES: [(u64, u64); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

pub(crate) fn code_of(e: Entry) -> u64 {
    match e.value() {
        1 => 0,
        2 => 1,
        -2 => 2,
        -1 => 3,
        _ => unreachable!("letter {e} is not in the rank-2 alphabet"),
    }
}

pub(crate) fn entry_of(code: u64) -> Entry {
    Entry::SP4[code as usize]
}

/// A packed pure tensor. Only meaningful together with its [`Ambient`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexKey(pub(crate) u64);

impl IndexKey {
    pub fn raw(self) -> u64 {
        self.0
    }

    /// Letter code (0..4) in tensor slot `slot`.
    #[inline]
    pub(crate) fn code(self, slot: usize, letters: usize) -> u64 {
        (self.0 >> (2 * (letters - 1 - slot))) & 3
    }

    #[inline]
    pub(crate) fn with_code(self, slot: usize, letters: usize, code: u64) -> IndexKey {
        let shift = 2 * (letters - 1 - slot);
        IndexKey((self.0 & !(3 << shift)) | (code << shift))
    }

    /// Position among all basis keys of the ambient, counting from 0 in
    /// increasing order.
    pub fn ascending_position(self, ambient: Ambient) -> u128 {
        let letters = ambient.letters();
        let mut position = 0u128;
        for slot in 0..ambient.m1 as usize {
            position = position * 4 + u128::from(self.code(slot, letters));
        }
        for s in 0..ambient.m2 as usize {
            let slot = ambient.m1 as usize + 2 * s;
            let pair = (self.code(slot, letters), self.code(slot + 1, letters));
            let digit = WEDGE_CODES.iter().position(|&p| p == pair).expect("canonical wedge");
            position = position * 6 + digit as u128;
        }
        position
    }
}

/// A pure tensor in readable form: `m1` letters for the `V` factors and
/// `m2` strictly increasing pairs for the `Λ²V` factors, both in tensor
/// order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TensorIndex {
    word: Vec<Entry>,
    wedges: Vec<(Entry, Entry)>,
}

impl TensorIndex {
    pub fn new(word: Vec<Entry>, wedges: Vec<(Entry, Entry)>) -> Result<Self> {
        let letters = word.iter().chain(wedges.iter().flat_map(|(a, b)| [a, b]));
        if let Some(e) = letters.into_iter().find(|e| !e.fits_rank(2)) {
            return Err(Error::EntryOutOfRank { value: e.value().into(), rank: 2 });
        }
        if wedges.iter().any(|(a, b)| a >= b) {
            return Err(Error::NotColumnStrict);
        }
        Ok(TensorIndex { word, wedges })
    }

    pub fn word(&self) -> &[Entry] {
        &self.word
    }

    pub fn wedges(&self) -> &[(Entry, Entry)] {
        &self.wedges
    }

    pub fn ambient(&self) -> Ambient {
        Ambient::new(self.word.len() as u32, self.wedges.len() as u32)
    }

    pub fn letters(&self) -> impl Iterator<Item = Entry> + '_ {
        self.word.iter().copied().chain(self.wedges.iter().flat_map(|&(a, b)| [a, b]))
    }

    pub fn key(&self) -> Result<IndexKey> {
        let ambient = self.ambient();
        if ambient.letters() > MAX_LETTERS {
            return Err(Error::TooManyFactors(ambient.letters()));
        }
        Ok(IndexKey(self.letters().fold(0u64, |acc, e| acc << 2 | code_of(e))))
    }

    pub fn from_key(key: IndexKey, ambient: Ambient) -> Self {
        let letters = ambient.letters();
        let word = (0..ambient.m1 as usize).map(|t| entry_of(key.code(t, letters))).collect();
        let wedges = (0..ambient.m2 as usize)
            .map(|s| {
                let slot = ambient.m1 as usize + 2 * s;
                (entry_of(key.code(slot, letters)), entry_of(key.code(slot + 1, letters)))
            })
            .collect();
        TensorIndex { word, wedges }
    }

    /// Letter-count weight `Σ (k_i − k_ī) ε_i`.
    pub fn weight(&self) -> WeightVec {
        let mut c = [0i64; 2];
        for e in self.letters() {
            c[e.index() as usize - 1] += if e.is_barred() { -1 } else { 1 };
        }
        WeightVec::new(c.to_vec())
    }
}

impl fmt::Debug for TensorIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.word.iter().map(|e| format!("ε{e}")).collect();
        parts.extend(self.wedges.iter().map(|(a, b)| format!("(ε{a}∧ε{b})")));
        if parts.is_empty() {
            return write!(f, "1");
        }
        write!(f, "{}", parts.join("⊗"))
    }
}

/// The pure tensor `u(Y)` of a column-strict rank-2 tableau.
pub fn u_of_tableau(y: &Tableau) -> Result<TensorIndex> {
    if y.rank() != 2 {
        return Err(Error::UnsupportedRank(y.rank()));
    }
    if !is_column_strict(y) {
        return Err(Error::NotColumnStrict);
    }
    let empty = Vec::new();
    let top = y.rows().first().unwrap_or(&empty);
    let bottom = y.rows().get(1).unwrap_or(&empty);
    let m2 = bottom.len();
    let word = top[m2..].iter().rev().copied().collect();
    let wedges = (0..m2).rev().map(|j| (top[j], bottom[j])).collect();
    TensorIndex::new(word, wedges)
}

/// Inverse of [`u_of_tableau`].
pub fn tableau_of_index(ix: &TensorIndex) -> Tableau {
    let mut top: Vec<Entry> = ix.wedges.iter().rev().map(|w| w.0).collect();
    top.extend(ix.word.iter().rev());
    let bottom: Vec<Entry> = ix.wedges.iter().rev().map(|w| w.1).collect();
    let rows = [top, bottom].into_iter().filter(|r| !r.is_empty()).collect();
    Tableau::new(2, rows).expect("tensor indices give well-formed tableaux")
}
