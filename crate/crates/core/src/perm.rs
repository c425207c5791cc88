//! The permutation value type: one-line notation over `{1..n}`, inversion
//! statistics, parity, the three classical symmetries, direct/skew sums, and
//! the structural edits (swaps, max-insertion) that parity arguments lean on.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A permutation of `{1, 2, …, n}` in one-line notation.
///
/// Positions and values are 1-indexed throughout the public contract. The
/// empty permutation (`n = 0`) is legal: it is even, has no inversions, and is
/// the identity of [`direct_sum`](Permutation::direct_sum). All values are
/// immutable after construction; every operation returns a fresh permutation.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    entries: Vec<u32>,
}

impl Permutation {
    /// The identity permutation `1 2 … n`.
    pub fn identity(n: usize) -> Self {
        Permutation {
            entries: (1..=n as u32).collect(),
        }
    }

    /// Builds a permutation from one-line notation, validating that the word
    /// is a bijection on `{1..n}`. Duplicates, gaps, and zero are rejected
    /// with the offending value named.
    pub fn from_word(word: &[u32]) -> Result<Self> {
        let n = word.len();
        let mut seen = vec![false; n + 1];
        for &v in word {
            if v == 0 || v as usize > n {
                return Err(Error::ValueOutOfRange { value: v, n });
            }
            if seen[v as usize] {
                return Err(Error::DuplicateValue(v));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation {
            entries: word.to_vec(),
        })
    }

    /// Wraps entries already known to form a bijection on `{1..n}`.
    pub(crate) fn from_entries_unchecked(entries: Vec<u32>) -> Self {
        debug_assert!(Permutation::from_word(&entries).is_ok());
        Permutation { entries }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One-line notation, 1-indexed values at 0-indexed slice positions.
    pub fn entries(&self) -> &[u32] {
        &self.entries
    }

    fn pairs_total(&self) -> u64 {
        let n = self.len() as u64;
        n * n.saturating_sub(1) / 2
    }

    /// Number of inversions τ(π): pairs `i < j` with `π_i > π_j`.
    ///
    /// Merge-counting, O(n log n). The quadratic pair count lives in the test
    /// suite as the oracle this must match exactly.
    pub fn inversions(&self) -> u64 {
        let mut work = self.entries.clone();
        let mut buf = vec![0u32; work.len()];
        merge_count(&mut work, &mut buf)
    }

    /// Number of noninversions θ(π) = C²_n − τ(π).
    pub fn noninversions(&self) -> u64 {
        self.pairs_total() - self.inversions()
    }

    /// τ, θ, and the pair total C²_n in one bundle; τ + θ = C²_n always.
    pub fn inversion_stats(&self) -> InversionStats {
        let tau = self.inversions();
        let pairs_total = self.pairs_total();
        InversionStats {
            tau,
            theta: pairs_total - tau,
            pairs_total,
        }
    }

    /// Even iff τ(π) is even; even permutations form the alternating group.
    pub fn parity(&self) -> Parity {
        Parity::from_count(self.inversions())
    }

    /// Reversal: entry `i` of the result is `π_{n+1−i}`.
    pub fn reverse(&self) -> Permutation {
        Permutation {
            entries: self.entries.iter().rev().copied().collect(),
        }
    }

    /// Complement: entry `i` of the result is `n+1−π_i`.
    pub fn complement(&self) -> Permutation {
        let n = self.len() as u32;
        Permutation {
            entries: self.entries.iter().map(|&v| n + 1 - v).collect(),
        }
    }

    /// Group-theoretic inverse: the result `q` satisfies `q_{π_i} = i`.
    pub fn invert(&self) -> Permutation {
        let mut entries = vec![0u32; self.len()];
        for (i, &v) in self.entries.iter().enumerate() {
            entries[v as usize - 1] = i as u32 + 1;
        }
        Permutation { entries }
    }

    /// Direct sum σ⊕π: σ followed by π shifted up by `σ.len()`.
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let l = self.len() as u32;
        let entries = self
            .entries
            .iter()
            .copied()
            .chain(other.entries.iter().map(|&v| v + l))
            .collect();
        Permutation { entries }
    }

    /// Skew sum σ⊖π: σ shifted up by `π.len()`, followed by π.
    /// τ(σ⊖π) = τ(σ) + τ(π) + `σ.len()·π.len()`.
    pub fn skew_sum(&self, other: &Permutation) -> Permutation {
        let m = other.len() as u32;
        let entries = self
            .entries
            .iter()
            .map(|&v| v + m)
            .chain(other.entries.iter().copied())
            .collect();
        Permutation { entries }
    }

    /// Exchanges the entries at positions `i < j` (1-indexed). The result
    /// always has the opposite parity.
    pub fn swap_positions(&self, i: usize, j: usize) -> Result<Permutation> {
        let n = self.len();
        for position in [i, j] {
            if position < 1 || position > n {
                return Err(Error::PositionOutOfRange { position, n });
            }
        }
        if i >= j {
            return Err(Error::InvalidPositionPair { i, j });
        }
        let mut entries = self.entries.clone();
        entries.swap(i - 1, j - 1);
        Ok(Permutation { entries })
    }

    /// Inserts `n+1` after position `i` (`i = 0` puts it first), giving a
    /// permutation of length `n+1` with τ increased by exactly `n − i`.
    pub fn insert_max(&self, i: usize) -> Result<Permutation> {
        let n = self.len();
        if i > n {
            return Err(Error::InsertIndexOutOfRange { index: i, n });
        }
        let mut entries = Vec::with_capacity(n + 1);
        entries.extend_from_slice(&self.entries[..i]);
        entries.push(n as u32 + 1);
        entries.extend_from_slice(&self.entries[i..]);
        Ok(Permutation { entries })
    }

    /// Lengths of a longest increasing and a longest decreasing subsequence,
    /// via patience sorting. Lengths only; witnesses are not part of the
    /// contract. Errors on the empty permutation.
    pub fn lis_lds(&self) -> Result<(usize, usize)> {
        if self.is_empty() {
            return Err(Error::EmptyPermutation);
        }
        // Values are distinct, so the longest decreasing subsequence is the
        // longest increasing subsequence of the reversed word.
        let lis = lis_length(self.entries.iter().copied());
        let lds = lis_length(self.entries.iter().rev().copied());
        Ok((lis, lds))
    }
}

fn lis_length(values: impl Iterator<Item = u32>) -> usize {
    let mut tails: Vec<u32> = Vec::new();
    for v in values {
        let slot = tails.partition_point(|&t| t < v);
        if slot == tails.len() {
            tails.push(v);
        } else {
            tails[slot] = v;
        }
    }
    tails.len()
}

fn merge_count(a: &mut [u32], buf: &mut [u32]) -> u64 {
    let n = a.len();
    if n <= 1 {
        return 0;
    }
    let mid = n / 2;
    let mut inv = {
        let (left, right) = a.split_at_mut(mid);
        merge_count(left, &mut buf[..mid]) + merge_count(right, &mut buf[mid..])
    };
    let (mut i, mut j) = (0, mid);
    for slot in buf[..n].iter_mut() {
        if j >= n || (i < mid && a[i] <= a[j]) {
            *slot = a[i];
            i += 1;
        } else {
            // a[j] jumps over everything left of the midpoint boundary
            inv += (mid - i) as u64;
            *slot = a[j];
            j += 1;
        }
    }
    a.copy_from_slice(&buf[..n]);
    inv
}

impl PartialOrd for Permutation {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Permutation {
    /// Canonical pattern order: by length first, then entries lexicographically.
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.entries.cmp(&other.entries))
    }
}

impl fmt::Display for Permutation {
    /// Digit string for `n ≤ 9` ("24153"), comma-separated otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.len() <= 9 {
            for v in &self.entries {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let words: Vec<String> = self.entries.iter().map(|v| v.to_string()).collect();
            f.write_str(&words.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Accepts both textual forms, auto-detected by the presence of commas.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains(',') {
            let mut word = Vec::new();
            for token in s.split(',') {
                let token = token.trim();
                let v: u32 = token
                    .parse()
                    .map_err(|_| Error::InvalidToken(token.to_string()))?;
                word.push(v);
            }
            Permutation::from_word(&word)
        } else if s.is_empty() {
            Ok(Permutation::identity(0))
        } else {
            let mut word = Vec::new();
            for ch in s.chars() {
                let d = ch
                    .to_digit(10)
                    .ok_or_else(|| Error::InvalidToken(s.to_string()))?;
                word.push(d);
            }
            Permutation::from_word(&word)
        }
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Even/odd classification by inversion count.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn from_count(count: u64) -> Self {
        if count % 2 == 0 {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    pub fn flipped(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
        }
    }

    pub fn is_even(self) -> bool {
        self == Parity::Even
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        })
    }
}

/// Inversion count τ, noninversion count θ, and the pair total C²_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InversionStats {
    pub tau: u64,
    pub theta: u64,
    pub pairs_total: u64,
}
