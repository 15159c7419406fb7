//! Letters of the barred alphabet `1 < 2 < … < n < n̄ < … < 2̄ < 1̄`.
//!
//! A letter `i` is stored as `+i` and `ī` as `-i`. The order does not
//! depend on `n`: every unbarred letter precedes every barred one, unbarred
//! letters increase with their index and barred letters decrease with it.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Entry(i8);

impl Entry {
    pub const ONE: Entry = Entry(1);
    pub const TWO: Entry = Entry(2);
    pub const TWO_BAR: Entry = Entry(-2);
    pub const ONE_BAR: Entry = Entry(-1);

    /// The `sp(4)` alphabet in increasing order.
    pub const SP4: [Entry; 4] = [Entry::ONE, Entry::TWO, Entry::TWO_BAR, Entry::ONE_BAR];

    pub fn new(value: i64, rank: u8) -> Result<Self> {
        if value == 0 || value.unsigned_abs() > u64::from(rank) {
            return Err(Error::EntryOutOfRank { value, rank });
        }
        Ok(Entry(value as i8))
    }

    pub fn unbarred(index: u8) -> Self {
        assert!(index >= 1 && index <= i8::MAX as u8);
        Entry(index as i8)
    }

    pub fn barred(index: u8) -> Self {
        assert!(index >= 1 && index <= i8::MAX as u8);
        Entry(-(index as i8))
    }

    /// Signed encoding: `i ↦ i`, `ī ↦ -i`.
    pub fn value(self) -> i8 {
        self.0
    }

    /// `i` for both `i` and `ī`.
    pub fn index(self) -> u8 {
        self.0.unsigned_abs()
    }

    pub fn is_barred(self) -> bool {
        self.0 < 0
    }

    /// `i ↔ ī`.
    pub fn bar(self) -> Self {
        Entry(-self.0)
    }

    pub fn fits_rank(self, rank: u8) -> bool {
        self.index() <= rank
    }

    /// Position of the letter in the chain `1 < … < n < n̄ < … < 1̄`,
    /// counted from 1.
    pub fn order_key(self, rank: u8) -> u8 {
        if self.0 > 0 {
            self.index()
        } else {
            2 * rank + 1 - self.index()
        }
    }

    /// Every letter of rank `n`, in increasing order.
    pub fn alphabet(rank: u8) -> Vec<Entry> {
        (1..=rank)
            .map(Entry::unbarred)
            .chain((1..=rank).rev().map(Entry::barred))
            .collect()
    }

    /// Parse with an explicit rank check.
    pub fn parse(text: &str, rank: u8) -> Result<Self> {
        let entry: Entry = text.parse()?;
        if !entry.fits_rank(rank) {
            return Err(Error::EntryOutOfRank { value: entry.0.into(), rank });
        }
        Ok(entry)
    }
}

impl Ord for Entry {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.0 < 0, self.0).cmp(&(other.0 < 0, other.0))
    }
}

impl PartialOrd for Entry {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Compare two letters of the rank-`n` alphabet.
pub fn entry_compare(x: Entry, y: Entry, rank: u8) -> Result<Ordering> {
    for e in [x, y] {
        if !e.fits_rank(rank) {
            return Err(Error::EntryOutOfRank { value: e.0.into(), rank });
        }
    }
    Ok(x.cmp(&y))
}

impl fmt::Display for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_barred() {
            write!(f, "{}b", self.index())
        } else {
            write!(f, "{}", self.index())
        }
    }
}

impl fmt::Debug for Entry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Rank-free parse: `"k"` or `"kb"` with `1 ≤ k ≤ 127`.
impl FromStr for Entry {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::ParseEntry(s.to_string());
        let (digits, barred) = match s.strip_suffix('b') {
            Some(d) => (d, true),
            None => (s, false),
        };
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) || digits.starts_with('0') {
            return Err(bad());
        }
        let index: u8 = digits.parse().map_err(|_| bad())?;
        if index == 0 || index > i8::MAX as u8 {
            return Err(bad());
        }
        Ok(if barred { Entry::barred(index) } else { Entry::unbarred(index) })
    }
}

impl Serialize for Entry {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Entry {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}
