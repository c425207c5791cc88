//! Pattern containment: occurrence search with witnesses, sequence
//! standardization, pattern sets with their symmetry maps, and the
//! prefix-containment check that makes pruned enumeration sound.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::perm::Permutation;

/// The three classical symmetries, lifted to pattern sets element-wise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SymmetryOp {
    Reverse,
    Complement,
    Inverse,
}

impl SymmetryOp {
    pub const ALL: [SymmetryOp; 3] = [
        SymmetryOp::Reverse,
        SymmetryOp::Complement,
        SymmetryOp::Inverse,
    ];

    pub fn apply(self, perm: &Permutation) -> Permutation {
        match self {
            SymmetryOp::Reverse => perm.reverse(),
            SymmetryOp::Complement => perm.complement(),
            SymmetryOp::Inverse => perm.invert(),
        }
    }
}

impl fmt::Display for SymmetryOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SymmetryOp::Reverse => "reverse",
            SymmetryOp::Complement => "complement",
            SymmetryOp::Inverse => "inverse",
        })
    }
}

/// A finite set of patterns defining an avoidance class. Mixed lengths are
/// allowed; avoidance is the conjunction over all members.
///
/// Stored deduplicated in canonical order (by length, then entries), so equal
/// sets compare equal and render identically across runs. The empty set
/// defines the unrestricted class.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PatternSet {
    patterns: Vec<Permutation>,
}

impl PatternSet {
    pub fn new(patterns: impl IntoIterator<Item = Permutation>) -> Self {
        let mut patterns: Vec<Permutation> = patterns.into_iter().collect();
        patterns.sort();
        patterns.dedup();
        PatternSet { patterns }
    }

    pub fn empty() -> Self {
        PatternSet {
            patterns: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.patterns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.patterns.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Permutation> {
        self.patterns.iter()
    }

    pub fn contains(&self, perm: &Permutation) -> bool {
        self.patterns.binary_search(perm).is_ok()
    }

    pub fn is_superset_of(&self, other: &PatternSet) -> bool {
        other.iter().all(|p| self.contains(p))
    }

    /// True when the length-0 pattern is a member; it is contained in every
    /// permutation, so the class is empty for every n.
    pub fn has_empty_pattern(&self) -> bool {
        self.patterns.first().is_some_and(|p| p.is_empty())
    }

    /// Element-wise symmetry image, re-canonicalized.
    pub fn transform(&self, op: SymmetryOp) -> PatternSet {
        PatternSet::new(self.patterns.iter().map(|p| op.apply(p)))
    }
}

impl fmt::Display for PatternSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.patterns.iter().map(|p| p.to_string()).collect();
        f.write_str(&words.join(","))
    }
}

impl FromStr for PatternSet {
    type Err = Error;

    /// Comma-separated permutation words ("1324,2143"); whitespace tolerated.
    /// An empty string denotes the empty set.
    fn from_str(s: &str) -> Result<Self> {
        if s.trim().is_empty() {
            return Ok(PatternSet::empty());
        }
        let mut patterns = Vec::new();
        for token in s.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::InvalidToken(token.to_string()));
            }
            patterns.push(token.parse::<Permutation>()?);
        }
        Ok(PatternSet::new(patterns))
    }
}

impl Serialize for PatternSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// A strictly increasing list of 1-indexed host positions certifying that the
/// host contains a pattern.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OccurrenceWitness {
    indices: Vec<usize>,
}

impl OccurrenceWitness {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// The host values at the witness positions, in order.
    pub fn values(&self, host: &Permutation) -> Vec<u32> {
        self.indices
            .iter()
            .map(|&i| host.entries()[i - 1])
            .collect()
    }
}

/// Replaces a sequence of distinct values by the unique permutation with the
/// same relative order; idempotent on permutations.
pub fn standardize(word: &[u32]) -> Result<Permutation> {
    let mut sorted = word.to_vec();
    sorted.sort_unstable();
    for pair in sorted.windows(2) {
        if pair[0] == pair[1] {
            return Err(Error::DuplicateValue(pair[0]));
        }
    }
    let entries = word
        .iter()
        .map(|v| sorted.binary_search(v).unwrap() as u32 + 1)
        .collect();
    Ok(Permutation::from_entries_unchecked(entries))
}

fn order_relation_matches(a: u32, b: u32, pa: u32, pb: u32) -> bool {
    (a < b) == (pa < pb)
}

/// Backtracking occurrence search over candidate index assignments. Positions
/// are tried left to right at every level, so the first complete assignment is
/// the lexicographically least index sequence.
fn search_occurrence(values: &[u32], pattern: &[u32], chosen: &mut Vec<usize>) -> bool {
    let role = chosen.len();
    if role == pattern.len() {
        return true;
    }
    let start = chosen.last().map_or(0, |&p| p + 1);
    let slack = pattern.len() - role - 1;
    let mut pos = start;
    while pos + slack < values.len() {
        let v = values[pos];
        let feasible = chosen
            .iter()
            .enumerate()
            .all(|(s, &q)| order_relation_matches(values[q], v, pattern[s], pattern[role]));
        if feasible {
            chosen.push(pos);
            if search_occurrence(values, pattern, chosen) {
                return true;
            }
            chosen.pop();
        }
        pos += 1;
    }
    false
}

/// Finds the lexicographically least occurrence of `pattern` in `host`, or
/// `None` when the host avoids it. The empty pattern occurs in everything
/// with the empty witness.
pub fn find_occurrence(host: &Permutation, pattern: &Permutation) -> Option<OccurrenceWitness> {
    if pattern.len() > host.len() {
        return None;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    if search_occurrence(host.entries(), pattern.entries(), &mut chosen) {
        Some(OccurrenceWitness {
            indices: chosen.iter().map(|&p| p + 1).collect(),
        })
    } else {
        None
    }
}

pub(crate) fn slice_contains_pattern(values: &[u32], pattern: &Permutation) -> bool {
    if pattern.len() > values.len() {
        return false;
    }
    let mut chosen = Vec::with_capacity(pattern.len());
    search_occurrence(values, pattern.entries(), &mut chosen)
}

/// True iff the host avoids every pattern in the set.
pub fn avoids_all(host: &Permutation, set: &PatternSet) -> bool {
    slice_avoids_all(host.entries(), set)
}

pub(crate) fn slice_avoids_all(values: &[u32], set: &PatternSet) -> bool {
    !set.iter()
        .any(|pattern| slice_contains_pattern(values, pattern))
}

/// Number of index subsets of the host forming occurrences of the pattern.
///
/// Deliberately naive — every subset is enumerated and checked whole — so it
/// can serve as the independent oracle for the backtracking search.
pub fn count_occurrences(host: &Permutation, pattern: &Permutation) -> u64 {
    fn order_isomorphic(values: &[u32], pattern: &[u32]) -> bool {
        for s in 0..values.len() {
            for t in s + 1..values.len() {
                if !order_relation_matches(values[s], values[t], pattern[s], pattern[t]) {
                    return false;
                }
            }
        }
        true
    }

    fn walk(host: &[u32], pattern: &[u32], picked: &mut Vec<u32>, start: usize) -> u64 {
        if picked.len() == pattern.len() {
            return order_isomorphic(picked, pattern) as u64;
        }
        let mut total = 0;
        let slack = pattern.len() - picked.len() - 1;
        let mut pos = start;
        while pos + slack < host.len() {
            picked.push(host[pos]);
            total += walk(host, pattern, picked, pos + 1);
            picked.pop();
            pos += 1;
        }
        total
    }

    if pattern.len() > host.len() {
        return 0;
    }
    let mut picked = Vec::with_capacity(pattern.len());
    walk(host.entries(), pattern.entries(), &mut picked, 0)
}

/// True iff the standardization of the prefix (a left factor of some
/// permutation's one-line notation) contains a member of the set. Containment
/// in a prefix persists under every extension, which is what lets enumeration
/// cut a branch as soon as this turns true.
pub fn extends_containment(prefix: &[u32], set: &PatternSet) -> Result<bool> {
    let standardized = standardize(prefix)?;
    Ok(!avoids_all(&standardized, set))
}

/// Containment test restricted to occurrences that use the final element of
/// `values`. Sound as an incremental filter when the prefix minus its last
/// entry is already known to avoid the pattern. The empty pattern has no
/// occurrence through the last position, so it yields `false` here; callers
/// handle it up front.
pub fn contains_occurrence_using_last(values: &[u32], pattern: &Permutation) -> bool {
    let k = pattern.len();
    if k == 0 || k > values.len() {
        return false;
    }
    let pat = pattern.entries();
    let last_value = values[values.len() - 1];
    let head = &values[..values.len() - 1];

    // Roles 0..k-1 map to increasing positions of `head`; role k-1 is pinned
    // to the final element.
    fn assign(
        head: &[u32],
        pat: &[u32],
        last_value: u32,
        chosen: &mut Vec<u32>,
        start: usize,
    ) -> bool {
        let role = chosen.len();
        let pinned = pat.len() - 1;
        if role == pinned {
            return true;
        }
        let slack = pinned - role - 1;
        let mut pos = start;
        while pos + slack < head.len() {
            let v = head[pos];
            let feasible = order_relation_matches(v, last_value, pat[role], pat[pinned])
                && chosen
                    .iter()
                    .enumerate()
                    .all(|(s, &w)| order_relation_matches(w, v, pat[s], pat[role]));
            if feasible {
                chosen.push(v);
                if assign(head, pat, last_value, chosen, pos + 1) {
                    return true;
                }
                chosen.pop();
            }
            pos += 1;
        }
        false
    }

    let mut chosen = Vec::with_capacity(k - 1);
    assign(head, pat, last_value, &mut chosen, 0)
}
