//! Two routes to the avoidance class S_n(R): a brute-force filter over all of
//! S_n (the oracle) and a pruned prefix-DFS with incremental inversion
//! tracking (the workhorse). Both emit members in lexicographic order and
//! must agree wherever the oracle's factorial guard admits the query.

use crate::error::{Error, Result};
use crate::patterns::{self, PatternSet};
use crate::perm::{Parity, Permutation};
use crate::signbalance::SignedCount;

/// Brute force is capped at n! with n ≤ 10 by default (3.6M permutations).
pub const DEFAULT_ORACLE_GUARD: usize = 10;

/// The pruned enumerator refuses to emit more members than this.
pub const DEFAULT_MEMBER_CAP: u64 = 100_000_000;

/// Which enumeration route backs a computation.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub enum Backend {
    #[default]
    Pruned,
    Oracle {
        guard: usize,
    },
}

/// S_n(R) as a query: the length n ≥ 1 and the canonical pattern set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AvoidanceClassQuery {
    n: usize,
    patterns: PatternSet,
}

impl AvoidanceClassQuery {
    pub fn new(n: usize, patterns: PatternSet) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroLengthQuery);
        }
        Ok(AvoidanceClassQuery { n, patterns })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn patterns(&self) -> &PatternSet {
        &self.patterns
    }
}

/// Bookkeeping for one DFS run; `emitted ≤ nodes_visited` always.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct EnumerationStats {
    pub emitted: u64,
    pub nodes_visited: u64,
    pub pruned: u64,
}

struct Dfs<'a, F> {
    n: usize,
    patterns: &'a [&'a Permutation],
    member_cap: u64,
    stats: EnumerationStats,
    prefix: Vec<u32>,
    used: Vec<bool>,
    visit: F,
}

impl<F: FnMut(&[u32], u64)> Dfs<'_, F> {
    /// Extends the prefix left to right over unused values in ascending
    /// order, so completed members stream out in lexicographic order. A
    /// branch is cut as soon as the prefix contains a pattern; since the
    /// prefix minus its last entry is already clean, only occurrences using
    /// the final position need checking.
    fn run(&mut self, tau: u64) -> Result<()> {
        for v in 1..=self.n as u32 {
            if self.used[v as usize] {
                continue;
            }
            // appending v creates one inversion per larger value already placed
            let added = self.prefix.iter().filter(|&&w| w > v).count() as u64;
            self.prefix.push(v);
            self.used[v as usize] = true;
            self.stats.nodes_visited += 1;

            let cut = self
                .patterns
                .iter()
                .any(|p| patterns::contains_occurrence_using_last(&self.prefix, p));
            if cut {
                self.stats.pruned += 1;
            } else if self.prefix.len() == self.n {
                self.stats.emitted += 1;
                if self.stats.emitted > self.member_cap {
                    return Err(Error::OutputCapExceeded {
                        cap: self.member_cap,
                    });
                }
                (self.visit)(&self.prefix, tau + added);
            } else {
                self.run(tau + added)?;
            }

            self.used[v as usize] = false;
            self.prefix.pop();
        }
        Ok(())
    }
}

fn factorial_at_most(n: usize, cap: u64) -> Option<u64> {
    let mut product: u64 = 1;
    for k in 2..=n as u64 {
        product = product.checked_mul(k)?;
        if product > cap {
            return None;
        }
    }
    Some(product)
}

/// Streams every member of S_n(R) in lexicographic order to `visit`, along
/// with its inversion count tracked incrementally during the DFS. Errors out
/// (discarding partial results) once more than `member_cap` members emerge.
pub fn enumerate_streaming<F: FnMut(&[u32], u64)>(
    query: &AvoidanceClassQuery,
    member_cap: u64,
    visit: F,
) -> Result<EnumerationStats> {
    if query.patterns().has_empty_pattern() {
        // The empty pattern occurs in everything: the class is empty.
        return Ok(EnumerationStats::default());
    }
    if query.patterns().is_empty() && factorial_at_most(query.n(), member_cap).is_none() {
        // Unrestricted query: the output size is n! exactly, known up front.
        return Err(Error::OutputCapExceeded { cap: member_cap });
    }
    let pattern_refs: Vec<&Permutation> = query.patterns().iter().collect();
    let mut dfs = Dfs {
        n: query.n(),
        patterns: &pattern_refs,
        member_cap,
        stats: EnumerationStats::default(),
        prefix: Vec::with_capacity(query.n()),
        used: vec![false; query.n() + 1],
        visit,
    };
    dfs.run(0)?;
    Ok(dfs.stats)
}

/// All of S_n(R) by pruned DFS, materialized in lexicographic order.
pub fn enumerate_pruned(query: &AvoidanceClassQuery) -> Result<Vec<Permutation>> {
    enumerate_pruned_capped(query, DEFAULT_MEMBER_CAP)
}

pub fn enumerate_pruned_capped(
    query: &AvoidanceClassQuery,
    member_cap: u64,
) -> Result<Vec<Permutation>> {
    let mut members = Vec::new();
    enumerate_streaming(query, member_cap, |entries, _| {
        members.push(Permutation::from_entries_unchecked(entries.to_vec()));
    })?;
    Ok(members)
}

/// All of S_n(R) by filtering every permutation of S_n, in lexicographic
/// order. Definitional, so it doubles as the oracle for the pruned route;
/// guarded at n ≤ `guard` because it always walks all n! candidates.
pub fn enumerate_oracle(query: &AvoidanceClassQuery) -> Result<Vec<Permutation>> {
    enumerate_oracle_guarded(query, DEFAULT_ORACLE_GUARD)
}

pub fn enumerate_oracle_guarded(
    query: &AvoidanceClassQuery,
    guard: usize,
) -> Result<Vec<Permutation>> {
    if query.n() > guard {
        return Err(Error::OracleGuardExceeded {
            n: query.n(),
            guard,
        });
    }
    let mut members = Vec::new();
    let mut current: Vec<u32> = (1..=query.n() as u32).collect();
    loop {
        if patterns::slice_avoids_all(&current, query.patterns()) {
            members.push(Permutation::from_entries_unchecked(current.clone()));
        }
        if !next_permutation(&mut current) {
            break;
        }
    }
    Ok(members)
}

/// In-place lexicographic successor; false once the word is the last one.
fn next_permutation(word: &mut [u32]) -> bool {
    if word.len() < 2 {
        return false;
    }
    let mut i = word.len() - 1;
    while i > 0 && word[i - 1] >= word[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = word.len() - 1;
    while word[j] <= word[i - 1] {
        j -= 1;
    }
    word.swap(i - 1, j);
    word[i..].reverse();
    true
}

/// Even/odd tallies over S_n(R), with inversions tracked incrementally by
/// the DFS rather than recomputed per member.
pub fn signed_count(query: &AvoidanceClassQuery) -> Result<SignedCount> {
    signed_count_capped(query, DEFAULT_MEMBER_CAP)
}

pub fn signed_count_capped(query: &AvoidanceClassQuery, member_cap: u64) -> Result<SignedCount> {
    let mut count = SignedCount::default();
    enumerate_streaming(query, member_cap, |_, tau| {
        count.record(Parity::from_count(tau));
    })?;
    Ok(count)
}

/// Signed count via the chosen backend; the oracle route recomputes every
/// member's inversions from scratch.
pub fn signed_count_with(query: &AvoidanceClassQuery, backend: Backend) -> Result<SignedCount> {
    match backend {
        Backend::Pruned => signed_count(query),
        Backend::Oracle { guard } => {
            let mut count = SignedCount::default();
            for member in enumerate_oracle_guarded(query, guard)? {
                count.record(member.parity());
            }
            Ok(count)
        }
    }
}

/// |S_n(R)|, counted without materializing members.
pub fn class_cardinality(query: &AvoidanceClassQuery) -> Result<u64> {
    class_cardinality_capped(query, DEFAULT_MEMBER_CAP)
}

pub fn class_cardinality_capped(query: &AvoidanceClassQuery, member_cap: u64) -> Result<u64> {
    let stats = enumerate_streaming(query, member_cap, |_, _| {})?;
    Ok(stats.emitted)
}

pub fn class_cardinality_with(query: &AvoidanceClassQuery, backend: Backend) -> Result<u64> {
    match backend {
        Backend::Pruned => class_cardinality(query),
        Backend::Oracle { guard } => Ok(enumerate_oracle_guarded(query, guard)?.len() as u64),
    }
}

/// Members whose maximum entry sits at the given 1-indexed position. The
/// slices over all positions partition the class. Rejects mixed lengths.
pub fn slice_by_max_position(members: &[Permutation], position: usize) -> Result<Vec<Permutation>> {
    let Some(first) = members.first() else {
        return Ok(Vec::new());
    };
    let n = first.len();
    if members.iter().any(|m| m.len() != n) {
        return Err(Error::MixedLengths);
    }
    if position < 1 || position > n {
        return Err(Error::PositionOutOfRange { position, n });
    }
    Ok(members
        .iter()
        .filter(|m| m.entries()[position - 1] == n as u32)
        .cloned()
        .collect())
}
