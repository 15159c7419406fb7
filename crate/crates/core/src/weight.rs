//! Highest weights, ε-coordinate weights and Verma exponent tuples.

use std::fmt;
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

/// `λ = m1·ω1 + m2·ω2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HighestWeight {
    pub m1: u32,
    pub m2: u32,
}

impl HighestWeight {
    pub fn new(m1: u32, m2: u32) -> Self {
        HighestWeight { m1, m2 }
    }

    pub fn partition(self) -> (u32, u32) {
        partition_of(self)
    }

    pub fn as_weight(self) -> WeightVec {
        let (l1, l2) = self.partition();
        WeightVec::new(vec![l1.into(), l2.into()])
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}ω1+{}ω2", self.m1, self.m2)
    }
}

/// The partition `(λ1, λ2) = (m1 + m2, m2)`.
pub fn partition_of(hw: HighestWeight) -> (u32, u32) {
    (hw.m1 + hw.m2, hw.m2)
}

/// A weight in ε-coordinates, `Σ c_i ε_i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(Vec<i64>);

impl WeightVec {
    pub fn new(coords: Vec<i64>) -> Self {
        WeightVec(coords)
    }

    pub fn zero(rank: usize) -> Self {
        WeightVec(vec![0; rank])
    }

    /// `ε_i` (1-based).
    pub fn epsilon(i: usize, rank: usize) -> Self {
        let mut w = WeightVec::zero(rank);
        w.0[i - 1] = 1;
        w
    }

    /// Simple root `α_i` of type `C_n`: `ε_i − ε_{i+1}` for `i < n`, `2ε_n`.
    pub fn simple_root(i: usize, rank: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        if i < rank {
            WeightVec::epsilon(i, rank) - WeightVec::epsilon(i + 1, rank)
        } else {
            let mut w = WeightVec::zero(rank);
            w.0[rank - 1] = 2;
            w
        }
    }

    /// Fundamental weight `ω_i = ε_1 + … + ε_i`.
    pub fn fundamental(i: usize, rank: usize) -> Self {
        assert!(i >= 1 && i <= rank);
        let mut w = WeightVec::zero(rank);
        w.0[..i].iter_mut().for_each(|c| *c = 1);
        w
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn c1(&self) -> i64 {
        self.0[0]
    }

    pub fn c2(&self) -> i64 {
        self.0[1]
    }

    /// Coordinates in the fundamental weights, for display:
    /// `Σ c_i ε_i = Σ (c_i − c_{i+1}) ω_i` with `c_{n+1} = 0`.
    pub fn to_fundamental(&self) -> Vec<i64> {
        let n = self.0.len();
        (0..n)
            .map(|i| self.0[i] - self.0.get(i + 1).copied().unwrap_or(0))
            .collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        WeightVec(self.0.iter().map(|c| c * k).collect())
    }
}

impl Add for WeightVec {
    type Output = WeightVec;

    fn add(self, rhs: WeightVec) -> WeightVec {
        assert_eq!(self.0.len(), rhs.0.len());
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for WeightVec {
    type Output = WeightVec;

    fn sub(self, rhs: WeightVec) -> WeightVec {
        assert_eq!(self.0.len(), rhs.0.len());
        WeightVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

/// Exponents of the monomial `f1^{a4} f2^{a3} f1^{a2} f2^{a1}`.
///
/// The derived order is lexicographic in `(a1, a2, a3, a4)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VermaTuple {
    pub a1: u32,
    pub a2: u32,
    pub a3: u32,
    pub a4: u32,
}

impl VermaTuple {
    pub const ZERO: VermaTuple = VermaTuple { a1: 0, a2: 0, a3: 0, a4: 0 };

    pub fn new(a1: u32, a2: u32, a3: u32, a4: u32) -> Self {
        VermaTuple { a1, a2, a3, a4 }
    }

    pub fn to_array(self) -> [u32; 4] {
        [self.a1, self.a2, self.a3, self.a4]
    }
}

impl From<[u32; 4]> for VermaTuple {
    fn from(a: [u32; 4]) -> Self {
        VermaTuple::new(a[0], a[1], a[2], a[3])
    }
}

impl fmt::Display for VermaTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a1, self.a2, self.a3, self.a4)
    }
}

impl Serialize for VermaTuple {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

impl<'de> Deserialize<'de> for VermaTuple {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        <[u32; 4]>::deserialize(d).map(VermaTuple::from)
    }
}
