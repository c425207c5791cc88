//! The claim catalog: each named sign-balance statement becomes a
//! machine-checkable verification returning a verdict with failure witnesses,
//! plus a scanner producing conjecture data over all pairs of length-4
//! patterns. Verdicts for independent pattern sets run in parallel and are
//! assembled in canonical order, so re-running a verification yields an
//! identical verdict.

use std::collections::{BTreeMap, BTreeSet};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::enumeration::{self, AvoidanceClassQuery, Backend};
use crate::error::{Error, Result};
use crate::patterns::{PatternSet, SymmetryOp};
use crate::perm::{Parity, Permutation};
use crate::signbalance::{self, SignedCount};

/// One failed expectation inside a verification run.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FailureWitness {
    pub patterns: String,
    pub n: usize,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one named verification: the range checked, any failure
/// witnesses (capped, with the overflow counted), and the elapsed time.
/// `passed` holds exactly when no witness was recorded at all.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationVerdict {
    pub name: String,
    pub passed: bool,
    pub range: (usize, usize),
    pub witnesses: Vec<FailureWitness>,
    pub suppressed_witnesses: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

impl VerificationVerdict {
    /// Drops the timing field so serialized verdicts are byte-stable.
    pub fn without_timing(mut self) -> Self {
        self.elapsed_ms = None;
        self
    }
}

/// Keeps reports readable: at most this many witnesses per verdict.
const WITNESS_CAP: usize = 20;

#[derive(Debug, Default)]
pub(crate) struct WitnessSink {
    witnesses: Vec<FailureWitness>,
    suppressed: u64,
}

impl WitnessSink {
    pub(crate) fn push(&mut self, witness: FailureWitness) {
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(witness);
        } else {
            self.suppressed += 1;
        }
    }

    fn extend(&mut self, witnesses: Vec<FailureWitness>) {
        for w in witnesses {
            self.push(w);
        }
    }

    fn into_verdict(
        self,
        name: &str,
        range: (usize, usize),
        started: Instant,
    ) -> VerificationVerdict {
        VerificationVerdict {
            name: name.to_string(),
            passed: self.witnesses.is_empty() && self.suppressed == 0,
            range,
            witnesses: self.witnesses,
            suppressed_witnesses: self.suppressed,
            elapsed_ms: Some(started.elapsed().as_millis() as u64),
        }
    }
}

fn witness(
    patterns: &PatternSet,
    n: usize,
    expected: impl Into<String>,
    actual: impl Into<String>,
) -> FailureWitness {
    FailureWitness {
        patterns: patterns.to_string(),
        n,
        expected: expected.into(),
        actual: actual.into(),
    }
}

fn pattern_set(words: &[&str]) -> PatternSet {
    PatternSet::new(words.iter().map(|w| w.parse::<Permutation>().unwrap()))
}

fn signed(n: usize, set: &PatternSet, backend: Backend) -> Result<SignedCount> {
    let query = AvoidanceClassQuery::new(n, set.clone())?;
    enumeration::signed_count_with(&query, backend)
}

/// The six length-3 patterns in canonical order.
pub fn s3_patterns() -> Vec<Permutation> {
    ["123", "132", "213", "231", "312", "321"]
        .iter()
        .map(|w| w.parse().unwrap())
        .collect()
}

/// All 63 nonempty subsets of the length-3 patterns, in a fixed order.
pub fn s3_subsets() -> Vec<PatternSet> {
    let base = s3_patterns();
    (1u32..64)
        .map(|mask| {
            PatternSet::new(
                base.iter()
                    .enumerate()
                    .filter(|(i, _)| mask & (1 << i) != 0)
                    .map(|(_, p)| p.clone()),
            )
        })
        .collect()
}

/// All 276 unordered pairs of distinct length-4 patterns, in canonical order.
pub fn length4_pairs() -> Vec<PatternSet> {
    let mut all: Vec<Permutation> = Vec::new();
    let mut word = vec![1u32, 2, 3, 4];
    loop {
        all.push(Permutation::from_word(&word).unwrap());
        if !next_lex(&mut word) {
            break;
        }
    }
    let mut pairs = Vec::new();
    for i in 0..all.len() {
        for j in i + 1..all.len() {
            pairs.push(PatternSet::new([all[i].clone(), all[j].clone()]));
        }
    }
    pairs.sort();
    pairs
}

fn next_lex(word: &mut [u32]) -> bool {
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

/// Closure of a pattern set under reverse, complement, and inverse. Every
/// member of the orbit provably has the same balance behavior for every n.
pub fn symmetry_orbit(set: &PatternSet) -> BTreeSet<PatternSet> {
    let mut orbit = BTreeSet::new();
    let mut frontier = vec![set.clone()];
    orbit.insert(set.clone());
    while let Some(current) = frontier.pop() {
        for op in SymmetryOp::ALL {
            let image = current.transform(op);
            if orbit.insert(image.clone()) {
                frontier.push(image);
            }
        }
    }
    orbit
}

/// The balance-for-all-n criterion over length-3 pattern sets: S_n(R) stays
/// balanced for every n > 1 exactly when R itself is sign-balanced and R is
/// not {132, 213, 231, 312}. Every other R must fail somewhere at n ≤ 4, so
/// n_max ≥ 4 is a hard precondition.
pub fn verify_theorem_1_2(n_max: usize) -> Result<VerificationVerdict> {
    verify_theorem_1_2_with(n_max, Backend::Pruned)
}

pub fn verify_theorem_1_2_with(n_max: usize, backend: Backend) -> Result<VerificationVerdict> {
    if n_max < 4 {
        return Err(Error::RangeTooSmall {
            minimum: 4,
            requested: n_max,
        });
    }
    let started = Instant::now();
    let excluded = pattern_set(&["132", "213", "231", "312"]);
    let per_set = s3_subsets()
        .into_par_iter()
        .map(|set| {
            let mut found = Vec::new();
            let expect_balanced_throughout =
                signbalance::pattern_set_is_sign_balanced(&set) && set != excluded;
            if expect_balanced_throughout {
                for n in 2..=n_max {
                    let count = signed(n, &set, backend)?;
                    if !count.is_balanced() {
                        found.push(witness(
                            &set,
                            n,
                            "balanced",
                            format!("imbalance {}", count.imbalance()),
                        ));
                    }
                }
            } else {
                let mut first_failure = None;
                for n in 2..=n_max {
                    if !signed(n, &set, backend)?.is_balanced() {
                        first_failure = Some(n);
                        break;
                    }
                }
                match first_failure {
                    None => found.push(witness(
                        &set,
                        n_max,
                        "some unbalanced n in range",
                        "balanced throughout",
                    )),
                    Some(n) if n > 4 => found.push(witness(
                        &set,
                        n,
                        "failure witness at n <= 4",
                        format!("first failure at n = {n}"),
                    )),
                    Some(_) => {}
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sink = WitnessSink::default();
    for found in per_set {
        sink.extend(found);
    }
    Ok(sink.into_verdict("thm1.2", (2, n_max), started))
}

/// The twelve pairs of length-4 patterns asserted sign-balanced for every
/// n > 1, grouped in three symmetry orbits of four.
pub const BALANCED_LENGTH4_PAIRS: [(&str, &str); 12] = [
    ("1234", "3214"),
    ("4321", "4123"),
    ("4321", "2341"),
    ("1234", "1432"),
    ("1243", "2143"),
    ("3421", "3412"),
    ("4312", "3412"),
    ("2134", "2143"),
    ("1423", "1432"),
    ("3241", "2341"),
    ("4132", "4123"),
    ("2314", "3214"),
];

pub fn verify_theorem_1_3(n_max: usize) -> Result<VerificationVerdict> {
    verify_theorem_1_3_with(n_max, Backend::Pruned)
}

pub fn verify_theorem_1_3_with(n_max: usize, backend: Backend) -> Result<VerificationVerdict> {
    if n_max < 2 {
        return Err(Error::RangeTooSmall {
            minimum: 2,
            requested: n_max,
        });
    }
    let started = Instant::now();
    let rows: Vec<(PatternSet, usize)> = BALANCED_LENGTH4_PAIRS
        .iter()
        .flat_map(|(a, b)| {
            let set = pattern_set(&[a, b]);
            (2..=n_max).map(move |n| (set.clone(), n))
        })
        .collect();
    let per_row = rows
        .into_par_iter()
        .map(|(set, n)| {
            let count = signed(n, &set, backend)?;
            Ok(if count.is_balanced() {
                None
            } else {
                Some(witness(
                    &set,
                    n,
                    "imbalance 0",
                    format!("imbalance {}", count.imbalance()),
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sink = WitnessSink::default();
    sink.extend(per_row.into_iter().flatten().collect());
    Ok(sink.into_verdict("thm1.3", (2, n_max), started))
}

// The three max-position slices of S_5(1324, 2143), split even/odd.
const X3_EVEN: [&str; 9] = [
    "12534", "13542", "14523", "23514", "24531", "34512", "41532", "42513", "43521",
];
const X3_ODD: [&str; 8] = [
    "12543", "14532", "23541", "24513", "34521", "41523", "42531", "43512",
];
const X4_EVEN: [&str; 7] = [
    "12453", "23451", "31452", "34251", "41253", "42351", "43152",
];
const X4_ODD: [&str; 6] = ["12354", "13452", "32451", "34152", "41352", "43251"];
const X5_EVEN: [&str; 7] = [
    "12345", "23145", "31245", "32415", "34125", "42135", "43215",
];
const X5_ODD: [&str; 7] = [
    "21345", "23415", "32145", "34215", "41235", "42315", "43125",
];

/// The counterexample pair: S_n(1324, 2143) is balanced for n = 2, 3, 4 but
/// not at n = 5, where the max-position slices at i = 3, 4 each carry an even
/// excess of one and the slice at i = 5 is balanced; the reversal-image class
/// S_5(4231, 3412) is unbalanced by the same amount.
pub fn verify_example_3_9() -> Result<VerificationVerdict> {
    verify_example_3_9_with(Backend::Pruned)
}

pub fn verify_example_3_9_with(backend: Backend) -> Result<VerificationVerdict> {
    let started = Instant::now();
    let mut sink = WitnessSink::default();
    let pair = pattern_set(&["1324", "2143"]);

    for n in 2..=4 {
        let count = signed(n, &pair, backend)?;
        if !count.is_balanced() {
            sink.push(witness(
                &pair,
                n,
                "balanced",
                format!("imbalance {}", count.imbalance()),
            ));
        }
    }

    let members = match backend {
        Backend::Pruned => {
            enumeration::enumerate_pruned(&AvoidanceClassQuery::new(5, pair.clone())?)?
        }
        Backend::Oracle { guard } => enumeration::enumerate_oracle_guarded(
            &AvoidanceClassQuery::new(5, pair.clone())?,
            guard,
        )?,
    };

    let expectations: [(usize, &[&str], &[&str]); 3] = [
        (3, &X3_EVEN, &X3_ODD),
        (4, &X4_EVEN, &X4_ODD),
        (5, &X5_EVEN, &X5_ODD),
    ];
    for (position, even_listed, odd_listed) in expectations {
        let slice = enumeration::slice_by_max_position(&members, position)?;
        let mut even: BTreeSet<String> = BTreeSet::new();
        let mut odd: BTreeSet<String> = BTreeSet::new();
        for member in &slice {
            match member.parity() {
                Parity::Even => even.insert(member.to_string()),
                Parity::Odd => odd.insert(member.to_string()),
            };
        }
        let expected_even: BTreeSet<String> = even_listed.iter().map(|s| s.to_string()).collect();
        let expected_odd: BTreeSet<String> = odd_listed.iter().map(|s| s.to_string()).collect();
        if even != expected_even {
            sink.push(witness(
                &pair,
                5,
                format!("even part of slice at {position} as listed"),
                format!("{even:?}"),
            ));
        }
        if odd != expected_odd {
            sink.push(witness(
                &pair,
                5,
                format!("odd part of slice at {position} as listed"),
                format!("{odd:?}"),
            ));
        }
    }

    for position in [1, 2] {
        let slice = enumeration::slice_by_max_position(&members, position)?;
        let mut count = SignedCount::default();
        for member in &slice {
            count.record(member.parity());
        }
        if !count.is_balanced() {
            sink.push(witness(
                &pair,
                5,
                format!("slice at {position} balanced"),
                format!("imbalance {}", count.imbalance()),
            ));
        }
    }

    let total = signed(5, &pair, backend)?;
    if total.imbalance() != 2 {
        sink.push(witness(
            &pair,
            5,
            "imbalance 2",
            format!("imbalance {}", total.imbalance()),
        ));
    }

    let reversed_pair = pair.transform(SymmetryOp::Reverse);
    let mirrored = signed(5, &reversed_pair, backend)?;
    if mirrored.imbalance() != 2 {
        sink.push(witness(
            &reversed_pair,
            5,
            "imbalance 2",
            format!("imbalance {}", mirrored.imbalance()),
        ));
    }

    Ok(sink.into_verdict("ex3.9", (2, 5), started))
}

/// The Simion–Schmidt cardinalities for every 4-subset R of the length-3
/// patterns: |S_n(R)| = 2 with members drawn from a fixed nine-element pool
/// when R does not cover {123, 321}, and 0 from n = 5 on (with the stated
/// small-n values) when it does.
pub fn verify_lemma_2_7_counts(n_max: usize) -> Result<VerificationVerdict> {
    verify_lemma_2_7_counts_with(n_max, Backend::Pruned)
}

pub fn verify_lemma_2_7_counts_with(n_max: usize, backend: Backend) -> Result<VerificationVerdict> {
    if n_max < 5 {
        return Err(Error::RangeTooSmall {
            minimum: 5,
            requested: n_max,
        });
    }
    let started = Instant::now();
    let both_monotone = pattern_set(&["123", "321"]);
    let exceptional_at_4 = [
        pattern_set(&["123", "321", "132", "213"]),
        pattern_set(&["123", "321", "231", "312"]),
    ];
    let four_subsets: Vec<PatternSet> = s3_subsets().into_iter().filter(|r| r.len() == 4).collect();

    let per_set = four_subsets
        .into_par_iter()
        .map(|set| {
            let mut found = Vec::new();
            let cardinality = |n: usize| -> Result<u64> {
                enumeration::class_cardinality_with(
                    &AvoidanceClassQuery::new(n, set.clone())?,
                    backend,
                )
            };
            if set.is_superset_of(&both_monotone) {
                let expect_at = |n: usize| -> u64 {
                    match n {
                        1 => 1,
                        2 => 2,
                        4 if exceptional_at_4.contains(&set) => 1,
                        4 => 0,
                        _ => 0, // n >= 5
                    }
                };
                for n in [1, 2, 4].into_iter().chain(5..=n_max) {
                    let got = cardinality(n)?;
                    let want = expect_at(n);
                    if got != want {
                        found.push(witness(
                            &set,
                            n,
                            format!("cardinality {want}"),
                            format!("cardinality {got}"),
                        ));
                    }
                }
            } else {
                for n in 2..=n_max {
                    let members =
                        enumeration::enumerate_pruned(&AvoidanceClassQuery::new(n, set.clone())?)?;
                    if members.len() != 2 {
                        found.push(witness(
                            &set,
                            n,
                            "cardinality 2",
                            format!("cardinality {}", members.len()),
                        ));
                        continue;
                    }
                    let pool = special_two_pool(n);
                    for member in &members {
                        if !pool.contains(member) {
                            found.push(witness(
                                &set,
                                n,
                                "members from the identity/shift/drop pool",
                                format!("unexpected member {member}"),
                            ));
                        }
                    }
                }
            }
            Ok(found)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sink = WitnessSink::default();
    for found in per_set {
        sink.extend(found);
    }
    Ok(sink.into_verdict("ss-counts", (1, n_max), started))
}

/// The identity, 23⋯n1, n(n−1)⋯312, closed under reversal and complement
/// (reverse∘complement is the 180° rotation, so each base contributes at
/// most four images).
fn special_two_pool(n: usize) -> BTreeSet<Permutation> {
    let mut pool = BTreeSet::new();
    let mut base = vec![Permutation::identity(n)];
    if n >= 2 {
        let shift: Vec<u32> = (2..=n as u32).chain([1]).collect();
        base.push(Permutation::from_word(&shift).unwrap());
    }
    if n >= 3 {
        let drop: Vec<u32> = (3..=n as u32).rev().chain([1, 2]).collect();
        base.push(Permutation::from_word(&drop).unwrap());
    }
    for perm in base {
        pool.insert(perm.reverse());
        pool.insert(perm.complement());
        pool.insert(perm.reverse().complement());
        pool.insert(perm);
    }
    pool
}

/// The even part of S_4(123, 321) is exactly {2143, 3412}, the odd part
/// exactly {3142, 2413}, and the class is empty from n = 5 on.
pub fn verify_prop_3_5() -> Result<VerificationVerdict> {
    verify_prop_3_5_with(Backend::Pruned)
}

pub fn verify_prop_3_5_with(backend: Backend) -> Result<VerificationVerdict> {
    let started = Instant::now();
    let mut sink = WitnessSink::default();
    let set = pattern_set(&["123", "321"]);

    let members = match backend {
        Backend::Pruned => {
            enumeration::enumerate_pruned(&AvoidanceClassQuery::new(4, set.clone())?)?
        }
        Backend::Oracle { guard } => enumeration::enumerate_oracle_guarded(
            &AvoidanceClassQuery::new(4, set.clone())?,
            guard,
        )?,
    };
    let mut even: BTreeSet<String> = BTreeSet::new();
    let mut odd: BTreeSet<String> = BTreeSet::new();
    for member in &members {
        match member.parity() {
            Parity::Even => even.insert(member.to_string()),
            Parity::Odd => odd.insert(member.to_string()),
        };
    }
    let expected_even: BTreeSet<String> = ["2143", "3412"].map(String::from).into();
    let expected_odd: BTreeSet<String> = ["3142", "2413"].map(String::from).into();
    if even != expected_even {
        sink.push(witness(
            &set,
            4,
            "even part {2143, 3412}",
            format!("{even:?}"),
        ));
    }
    if odd != expected_odd {
        sink.push(witness(
            &set,
            4,
            "odd part {3142, 2413}",
            format!("{odd:?}"),
        ));
    }

    for n in 5..=9 {
        let cardinality = enumeration::class_cardinality_with(
            &AvoidanceClassQuery::new(n, set.clone())?,
            backend,
        )?;
        if cardinality != 0 {
            sink.push(witness(
                &set,
                n,
                "empty class",
                format!("cardinality {cardinality}"),
            ));
        }
    }

    Ok(sink.into_verdict("prop3.5", (4, 9), started))
}

/// The Catalan excess law for S_n(321) over 2..=n_max (n_max ≤ 12).
pub fn verify_catalan_excess(n_max: usize) -> Result<VerificationVerdict> {
    verify_catalan_excess_with(n_max, Backend::Pruned)
}

pub fn verify_catalan_excess_with(n_max: usize, backend: Backend) -> Result<VerificationVerdict> {
    if n_max < 2 {
        return Err(Error::RangeTooSmall {
            minimum: 2,
            requested: n_max,
        });
    }
    if n_max > 12 {
        return Err(Error::RangeTooLarge {
            maximum: 12,
            requested: n_max,
        });
    }
    let started = Instant::now();
    let set = pattern_set(&["321"]);
    let per_n = (2..=n_max)
        .into_par_iter()
        .map(|n| {
            Ok(if signbalance::check_catalan_excess_321_with(n, backend)? {
                None
            } else {
                let count = signed(n, &set, backend)?;
                Some(witness(
                    &set,
                    n,
                    "Catalan excess law",
                    format!("imbalance {}", count.imbalance()),
                ))
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sink = WitnessSink::default();
    sink.extend(per_n.into_iter().flatten().collect());
    Ok(sink.into_verdict("catalan321", (2, n_max), started))
}

/// Conjecture data for one unordered pair of length-4 patterns.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairScanRow {
    pub pair: PatternSet,
    pub set_balanced: bool,
    /// Greatest checked n with every imbalance zero so far.
    pub balanced_through: usize,
    /// Least n in range with a nonzero imbalance, if any.
    pub first_unbalanced: Option<usize>,
    /// Identifier of the pair's orbit under reverse/complement/inverse.
    pub orbit_id: usize,
}

/// Scans all 276 unordered pairs of distinct length-4 patterns for balance
/// through n_max (n_max ≥ 5). Rows report data only — "balanced through
/// n_max", never "balanced for all n".
pub fn scan_pairs_length4(n_max: usize) -> Result<Vec<PairScanRow>> {
    scan_pairs_length4_with(n_max, Backend::Pruned)
}

pub fn scan_pairs_length4_with(n_max: usize, backend: Backend) -> Result<Vec<PairScanRow>> {
    if n_max < 5 {
        return Err(Error::RangeTooSmall {
            minimum: 5,
            requested: n_max,
        });
    }
    let pairs = length4_pairs();
    // Orbit ids in order of each orbit's least member.
    let mut orbit_ids: BTreeMap<PatternSet, usize> = BTreeMap::new();
    let mut next_id = 0;
    for pair in &pairs {
        if orbit_ids.contains_key(pair) {
            continue;
        }
        for member in symmetry_orbit(pair) {
            orbit_ids.insert(member, next_id);
        }
        next_id += 1;
    }

    pairs
        .into_par_iter()
        .map(|pair| {
            let orbit_id = orbit_ids[&pair];
            let set_balanced = signbalance::pattern_set_is_sign_balanced(&pair);
            let mut first_unbalanced = None;
            for n in 2..=n_max {
                if !signed(n, &pair, backend)?.is_balanced() {
                    first_unbalanced = Some(n);
                    break;
                }
            }
            let balanced_through = first_unbalanced.map_or(n_max, |n| n - 1);
            Ok(PairScanRow {
                pair,
                set_balanced,
                balanced_through,
                first_unbalanced,
                orbit_id,
            })
        })
        .collect()
}

/// Fixed header, one row per pair; byte-stable for a given input. The pair
/// column is quoted because pattern sets render comma-separated.
pub fn scan_rows_to_csv(rows: &[PairScanRow]) -> String {
    let mut out = String::from("pair,set_balanced,balanced_through,first_unbalanced,orbit_id\n");
    for row in rows {
        let first = row
            .first_unbalanced
            .map_or(String::new(), |n| n.to_string());
        out.push_str(&format!(
            "\"{}\",{},{},{},{}\n",
            row.pair, row.set_balanced, row.balanced_through, first, row.orbit_id
        ));
    }
    out
}

/// Orbit id → members, for the scanner's sidecar.
pub fn scan_orbit_map(rows: &[PairScanRow]) -> BTreeMap<usize, Vec<String>> {
    let mut map: BTreeMap<usize, Vec<String>> = BTreeMap::new();
    for row in rows {
        map.entry(row.orbit_id)
            .or_default()
            .push(row.pair.to_string());
    }
    map
}

/// Plain-text table over a batch of verdicts, one line per verdict followed
/// by its witnesses.
pub fn verdict_table(verdicts: &[VerificationVerdict]) -> String {
    let mut out = String::new();
    for verdict in verdicts {
        let status = if verdict.passed { "PASS" } else { "FAIL" };
        let elapsed = verdict
            .elapsed_ms
            .map_or(String::new(), |ms| format!("  ({ms} ms)"));
        out.push_str(&format!(
            "{:<12} {}  n = {}..={}{}\n",
            verdict.name, status, verdict.range.0, verdict.range.1, elapsed
        ));
        for w in &verdict.witnesses {
            out.push_str(&format!(
                "    patterns {} at n = {}: expected {}, got {}\n",
                w.patterns, w.n, w.expected, w.actual
            ));
        }
        if verdict.suppressed_witnesses > 0 {
            out.push_str(&format!(
                "    … and {} more witnesses suppressed\n",
                verdict.suppressed_witnesses
            ));
        }
    }
    out
}
