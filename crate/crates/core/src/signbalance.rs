//! Sign-balance verdicts: even/odd tallies with their imbalance, balance
//! reports over a range of lengths, and the Catalan reference values behind
//! the classical excess law for S_n(321).

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{self, AvoidanceClassQuery, Backend};
use crate::error::{Error, Result};
use crate::patterns::PatternSet;
use crate::perm::Parity;

/// Even and odd member tallies of some set of permutations.
///
/// The empty tally (0, 0) counts as balanced. Merging is component-wise
/// addition, so partial counts from independent subtrees combine in any
/// order.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct SignedCount {
    pub even: u64,
    pub odd: u64,
}

impl SignedCount {
    pub fn record(&mut self, parity: Parity) {
        match parity {
            Parity::Even => self.even += 1,
            Parity::Odd => self.odd += 1,
        }
    }

    pub fn total(self) -> u64 {
        self.even + self.odd
    }

    /// even − odd; positive means an excess of even members.
    pub fn imbalance(self) -> i64 {
        i64::try_from(self.even as i128 - self.odd as i128)
            .expect("imbalance exceeds the 64-bit guard")
    }

    pub fn is_balanced(self) -> bool {
        self.even == self.odd
    }
}

impl std::ops::AddAssign for SignedCount {
    fn add_assign(&mut self, other: Self) {
        self.even += other.even;
        self.odd += other.odd;
    }
}

/// True iff the pattern set itself has equally many even and odd members.
pub fn pattern_set_is_sign_balanced(set: &PatternSet) -> bool {
    let mut count = SignedCount::default();
    for pattern in set.iter() {
        count.record(pattern.parity());
    }
    count.is_balanced()
}

/// One length's tallies inside a balance report.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BalanceRow {
    pub n: usize,
    pub even: u64,
    pub odd: u64,
    pub imbalance: i64,
    pub balanced: bool,
}

/// Per-n sign-balance results for S_n(R) over a contiguous range. The range
/// travels with the report so no claim drifts beyond what was computed.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BalanceReport {
    pub patterns: PatternSet,
    pub n_lo: usize,
    pub n_hi: usize,
    pub rows: Vec<BalanceRow>,
    /// Least n in range with a nonzero imbalance, if any.
    pub first_unbalanced: Option<usize>,
}

impl BalanceReport {
    pub fn all_balanced(&self) -> bool {
        self.first_unbalanced.is_none()
    }

    /// Fixed header, one row per n; byte-stable for a given input.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,even,odd,imbalance,balanced\n");
        for row in &self.rows {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                row.n, row.even, row.odd, row.imbalance, row.balanced
            ));
        }
        out
    }
}

/// One row per n over `n_lo..=n_hi` (2 ≤ n_lo ≤ n_hi). Rows are computed
/// independently, in parallel when a pool is available, and assembled in
/// order.
pub fn balance_over_range(set: &PatternSet, n_lo: usize, n_hi: usize) -> Result<BalanceReport> {
    balance_over_range_with(set, n_lo, n_hi, Backend::Pruned)
}

pub fn balance_over_range_with(
    set: &PatternSet,
    n_lo: usize,
    n_hi: usize,
    backend: Backend,
) -> Result<BalanceReport> {
    if n_lo < 2 || n_lo > n_hi {
        return Err(Error::InvalidRange { lo: n_lo, hi: n_hi });
    }
    let rows = (n_lo..=n_hi)
        .into_par_iter()
        .map(|n| {
            let query = AvoidanceClassQuery::new(n, set.clone())?;
            let count = enumeration::signed_count_with(&query, backend)?;
            Ok(BalanceRow {
                n,
                even: count.even,
                odd: count.odd,
                imbalance: count.imbalance(),
                balanced: count.is_balanced(),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let first_unbalanced = rows.iter().find(|row| !row.balanced).map(|row| row.n);
    Ok(BalanceReport {
        patterns: set.clone(),
        n_lo,
        n_hi,
        rows,
        first_unbalanced,
    })
}

/// The m-th Catalan number (C₀ = 1), exact in 64 bits for m ≤ 30.
pub fn catalan(m: u32) -> Result<u64> {
    if m > 30 {
        return Err(Error::CatalanIndexTooLarge(m));
    }
    // C_m = C(2m, m) / (m + 1); the running product is C(m+k, k) at each
    // step, so every division is exact.
    let m = m as u128;
    let mut binom: u128 = 1;
    for k in 1..=m {
        binom = binom * (m + k) / k;
    }
    Ok((binom / (m + 1)) as u64)
}

/// The classical excess law for the single pattern 321: S_n(321) is balanced
/// for even n, and for odd n the even members outnumber the odd ones by
/// C_{(n−1)/2}. Returns whether the computed imbalance matches.
pub fn check_catalan_excess_321(n: usize) -> Result<bool> {
    check_catalan_excess_321_with(n, Backend::Pruned)
}

pub fn check_catalan_excess_321_with(n: usize, backend: Backend) -> Result<bool> {
    if n < 2 {
        return Err(Error::RangeTooSmall {
            minimum: 2,
            requested: n,
        });
    }
    let query = AvoidanceClassQuery::new(n, "321".parse()?)?;
    let count = enumeration::signed_count_with(&query, backend)?;
    let expected: i64 = if n % 2 == 0 {
        0
    } else {
        catalan(((n - 1) / 2) as u32)? as i64
    };
    Ok(count.imbalance() == expected)
}
