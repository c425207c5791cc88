//! Acceptance suite: one test per criterion, each printing a pass/fail line
//! with its runtime and asserting the stated budget. Everything is exact
//! integer or set equality — tolerance zero throughout.
//!
//! Run with `cargo test -p signbal --test acceptance -- --nocapture` to see
//! the per-criterion lines.

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::prelude::*;
use rand_chacha::ChaCha8Rng;

use signbal::enumeration::{self, AvoidanceClassQuery};
use signbal::experiments::{self, BALANCED_LENGTH4_PAIRS};
use signbal::patterns::{self, PatternSet, SymmetryOp};
use signbal::perm::{Parity, Permutation};
use signbal::signbalance::{self, SignedCount};

fn perm(s: &str) -> Permutation {
    s.parse().unwrap()
}

fn set(s: &str) -> PatternSet {
    s.parse().unwrap()
}

fn query(n: usize, patterns: &PatternSet) -> AvoidanceClassQuery {
    AvoidanceClassQuery::new(n, patterns.clone()).unwrap()
}

fn class(n: usize, patterns: &PatternSet) -> Vec<Permutation> {
    enumeration::enumerate_pruned(&query(n, patterns)).unwrap()
}

fn signed(n: usize, patterns: &PatternSet) -> SignedCount {
    enumeration::signed_count(&query(n, patterns)).unwrap()
}

fn report(criterion: u32, label: &str, started: Instant, budget: Duration) {
    let elapsed = started.elapsed();
    println!(
        "acceptance criterion {criterion} ({label}): PASS in {:.2}s (budget {:.0}s)",
        elapsed.as_secs_f64(),
        budget.as_secs_f64()
    );
    assert!(
        elapsed < budget,
        "criterion {criterion} took {elapsed:?}, budget {budget:?}"
    );
}

fn names(members: &[Permutation]) -> BTreeSet<String> {
    members.iter().map(|m| m.to_string()).collect()
}

#[test]
fn criterion_01_prop_3_5_goldens() {
    let started = Instant::now();

    let r = set("123,321");
    let members = class(4, &r);
    let even: BTreeSet<String> = members
        .iter()
        .filter(|m| m.parity() == Parity::Even)
        .map(|m| m.to_string())
        .collect();
    let odd: BTreeSet<String> = members
        .iter()
        .filter(|m| m.parity() == Parity::Odd)
        .map(|m| m.to_string())
        .collect();
    assert_eq!(even, ["2143", "3412"].map(String::from).into());
    assert_eq!(odd, ["3142", "2413"].map(String::from).into());
    assert!(class(5, &r).is_empty());

    let verdict = experiments::verify_prop_3_5().unwrap();
    assert!(verdict.passed, "{verdict:?}");

    report(1, "prop3.5 goldens", started, Duration::from_secs(1));
}

#[test]
fn criterion_02_theorem_1_2_suite() {
    let started = Instant::now();

    let verdict = experiments::verify_theorem_1_2(9).unwrap();
    assert!(verdict.passed, "{verdict:?}");

    // The 63 nonempty subsets split 18 expected-balanced (19 sign-balanced
    // sets minus the excluded one) against 45 expected to fail by n = 4.
    let subsets = experiments::s3_subsets();
    assert_eq!(subsets.len(), 63);
    let excluded = set("132,213,231,312");
    let mut expected_balanced = 0;
    let mut expected_failing = 0;
    for r in &subsets {
        if signbalance::pattern_set_is_sign_balanced(r) && *r != excluded {
            expected_balanced += 1;
            for n in 2..=9 {
                assert!(signed(n, r).is_balanced(), "r={r} n={n}");
            }
        } else {
            expected_failing += 1;
            let first_fail = (2..=9).find(|&n| !signed(n, r).is_balanced());
            match first_fail {
                Some(n) if n <= 4 => {}
                other => panic!("r={r}: expected failure witness at n <= 4, got {other:?}"),
            }
        }
    }
    assert_eq!(expected_balanced, 18);
    assert_eq!(expected_failing, 45);
    assert_eq!(
        subsets
            .iter()
            .filter(|r| signbalance::pattern_set_is_sign_balanced(r))
            .count(),
        19
    );

    report(2, "thm1.2 suite", started, Duration::from_secs(30));
}

#[test]
fn criterion_03_theorem_1_3_suite() {
    let started = Instant::now();

    let verdict = experiments::verify_theorem_1_3(9).unwrap();
    assert!(verdict.passed, "{verdict:?}");
    for (a, b) in BALANCED_LENGTH4_PAIRS {
        let pair = PatternSet::new([perm(a), perm(b)]);
        for n in 2..=9 {
            assert_eq!(signed(n, &pair).imbalance(), 0, "pair {pair} n={n}");
        }
    }

    report(3, "thm1.3 suite", started, Duration::from_secs(120));
}

#[test]
fn criterion_04_example_3_9_goldens() {
    let started = Instant::now();

    let pair = set("1324,2143");
    for n in 2..=4 {
        assert!(signed(n, &pair).is_balanced(), "n={n}");
    }

    let members = class(5, &pair);
    let slice_at = |i: usize| enumeration::slice_by_max_position(&members, i).unwrap();
    let tally = |members: &[Permutation]| {
        let mut count = SignedCount::default();
        for m in members {
            count.record(m.parity());
        }
        count
    };

    let x3 = slice_at(3);
    assert_eq!(x3.len(), 17);
    assert_eq!(tally(&x3).imbalance(), 1);
    assert_eq!(
        names(&x3),
        [
            "12534", "13542", "14523", "23514", "24531", "34512", "41532", "42513", "43521",
            "12543", "14532", "23541", "24513", "34521", "41523", "42531", "43512",
        ]
        .map(String::from)
        .into()
    );

    let x4 = slice_at(4);
    assert_eq!(x4.len(), 13);
    assert_eq!(tally(&x4).imbalance(), 1);
    assert_eq!(
        names(&x4),
        [
            "12453", "23451", "31452", "34251", "41253", "42351", "43152", "12354", "13452",
            "32451", "34152", "41352", "43251",
        ]
        .map(String::from)
        .into()
    );

    let x5 = slice_at(5);
    assert_eq!(x5.len(), 14);
    assert_eq!(tally(&x5).imbalance(), 0);
    assert_eq!(
        names(&x5),
        [
            "12345", "23145", "31245", "32415", "34125", "42135", "43215", "21345", "23415",
            "32145", "34215", "41235", "42315", "43125",
        ]
        .map(String::from)
        .into()
    );

    assert_eq!(signed(5, &pair).imbalance(), 2);
    assert!(!signed(5, &set("4231,3412")).is_balanced());

    let verdict = experiments::verify_example_3_9().unwrap();
    assert!(verdict.passed, "{verdict:?}");

    report(4, "ex3.9 goldens", started, Duration::from_secs(1));
}

#[test]
fn criterion_05_lemma_2_7_suite() {
    let started = Instant::now();

    let verdict = experiments::verify_lemma_2_7_counts(9).unwrap();
    assert!(verdict.passed, "{verdict:?}");

    assert_eq!(
        names(&class(4, &set("123,321,132,213"))),
        ["3412"].map(String::from).into()
    );
    assert_eq!(
        names(&class(6, &set("132,213,231,312"))),
        ["123456", "654321"].map(String::from).into()
    );
    assert!(class(5, &set("123,321,132,231")).is_empty());

    report(5, "Simion-Schmidt counts", started, Duration::from_secs(10));
}

#[test]
fn criterion_06_catalan_excess() {
    let started = Instant::now();

    // Two independent routes to the reference values.
    let mut by_recurrence = [1u64; 6];
    for m in 1..6 {
        by_recurrence[m] = (0..m)
            .map(|i| by_recurrence[i] * by_recurrence[m - 1 - i])
            .sum();
    }
    assert_eq!(&by_recurrence[1..], &[1, 2, 5, 14, 42]);
    for (m, &expected) in by_recurrence.iter().enumerate() {
        assert_eq!(signbalance::catalan(m as u32).unwrap(), expected);
    }

    let r = set("321");
    for n in 2..=11usize {
        assert!(signbalance::check_catalan_excess_321(n).unwrap(), "n={n}");
        let expected = if n % 2 == 0 {
            0
        } else {
            by_recurrence
                .get((n - 1) / 2)
                .copied()
                .unwrap_or_else(|| signbalance::catalan(((n - 1) / 2) as u32).unwrap())
                as i64
        };
        assert_eq!(signed(n, &r).imbalance(), expected, "n={n}");
    }

    let verdict = experiments::verify_catalan_excess(11).unwrap();
    assert!(verdict.passed, "{verdict:?}");

    report(
        6,
        "Catalan excess for 321",
        started,
        Duration::from_secs(60),
    );
}

#[test]
fn criterion_07_oracle_equivalence() {
    let started = Instant::now();

    // (a) every subset of the length-3 patterns, including the empty set
    let mut subsets = experiments::s3_subsets();
    subsets.push(PatternSet::empty());
    for r in &subsets {
        for n in 1..=8 {
            let q = query(n, r);
            assert_eq!(
                enumeration::enumerate_pruned(&q).unwrap(),
                enumeration::enumerate_oracle(&q).unwrap(),
                "r={r} n={n}"
            );
        }
    }

    // (b) 50 length-4 pairs sampled with a fixed seed
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_ba11);
    let pairs = experiments::length4_pairs();
    assert_eq!(pairs.len(), 276);
    let sampled = pairs.choose_multiple(&mut rng, 50);
    for r in sampled {
        for n in 1..=7 {
            let q = query(n, r);
            assert_eq!(
                enumeration::enumerate_pruned(&q).unwrap(),
                enumeration::enumerate_oracle(&q).unwrap(),
                "r={r} n={n}"
            );
        }
    }

    report(7, "oracle equivalence", started, Duration::from_secs(60));
}

#[test]
fn criterion_08_lemma_property_suites() {
    let started = Instant::now();
    let mut trials: u64 = 0;

    fn all_perms(n: usize) -> Vec<Permutation> {
        let mut out = vec![vec![]];
        for v in 1..=n as u32 {
            let mut next = Vec::new();
            for shorter in out {
                for slot in 0..=shorter.len() {
                    let mut longer = shorter.clone();
                    longer.insert(slot, v);
                    next.push(longer);
                }
            }
            out = next;
        }
        out.into_iter()
            .map(|word| Permutation::from_word(&word).unwrap())
            .collect()
    }

    let check_one = |p: &Permutation, trials: &mut u64| {
        let n = p.len();
        let stats = p.inversion_stats();

        // θ + τ = C²_n
        assert_eq!(
            stats.tau + stats.theta,
            (n * n.saturating_sub(1) / 2) as u64
        );
        *trials += 1;

        // complement/reverse parity law, driven by the parity of C²_n
        let flip = (n * n.saturating_sub(1) / 2) % 2 == 1;
        let expected = if flip {
            p.parity().flipped()
        } else {
            p.parity()
        };
        assert_eq!(p.complement().parity(), expected, "{p:?}");
        assert_eq!(p.reverse().parity(), expected, "{p:?}");
        *trials += 1;

        // Erdős–Szekeres for every (m, k) the length admits
        if n >= 1 {
            let (lis, lds) = p.lis_lds().unwrap();
            for m in 1..n {
                for k in 1..n {
                    if m * k + 1 <= n {
                        assert!(lis >= m + 1 || lds >= k + 1, "{p:?} m={m} k={k}");
                        *trials += 1;
                    }
                }
            }
        }
    };

    let check_swap = |p: &Permutation, i: usize, j: usize, trials: &mut u64| {
        let swapped = p.swap_positions(i, j).unwrap();
        assert_eq!(swapped.parity(), p.parity().flipped(), "{p:?} swap {i},{j}");
        *trials += 1;
    };

    let check_insert = |p: &Permutation, i: usize, trials: &mut u64| {
        let grown = p.insert_max(i).unwrap();
        assert_eq!(
            grown.inversions(),
            p.inversions() + (p.len() - i) as u64,
            "{p:?} insert at {i}"
        );
        *trials += 1;
    };

    let check_skew = |s: &Permutation, t: &Permutation, trials: &mut u64| {
        assert_eq!(
            s.skew_sum(t).inversions(),
            s.inversions() + t.inversions() + (s.len() * t.len()) as u64
        );
        assert_eq!(
            s.direct_sum(t).inversions(),
            s.inversions() + t.inversions()
        );
        *trials += 1;
    };

    // Exhaustive for n ≤ 7: element-wise lemmas over every permutation, with
    // every swap pair and insertion slot at n ≤ 5.
    for n in 0..=7 {
        for p in all_perms(n) {
            check_one(&p, &mut trials);
            if n <= 5 {
                for i in 1..=n {
                    for j in i + 1..=n {
                        check_swap(&p, i, j, &mut trials);
                    }
                }
                for i in 0..=n {
                    check_insert(&p, i, &mut trials);
                }
            }
        }
    }
    for s in all_perms(3) {
        for t in all_perms(4) {
            check_skew(&s, &t, &mut trials);
        }
    }

    // Randomized for 8 ≤ n ≤ 20, fixed seed.
    let mut rng = ChaCha8Rng::seed_from_u64(0xc0ffee);
    let random_perm = |rng: &mut ChaCha8Rng, n: usize| {
        let mut word: Vec<u32> = (1..=n as u32).collect();
        word.shuffle(rng);
        Permutation::from_word(&word).unwrap()
    };
    let s3_subsets = experiments::s3_subsets();
    let length4_pairs = experiments::length4_pairs();
    for _ in 0..1200 {
        let n = rng.gen_range(8..=20);
        let p = random_perm(&mut rng, n);
        check_one(&p, &mut trials);

        let i = rng.gen_range(1..n);
        let j = rng.gen_range(i + 1..=n);
        check_swap(&p, i, j, &mut trials);
        check_insert(&p, rng.gen_range(0..=n), &mut trials);

        let skew_len = rng.gen_range(8..=20);
        let s = random_perm(&mut rng, skew_len);
        check_skew(&s, &p, &mut trials);

        // Element-wise form of the set identities: p avoids the transformed
        // set exactly when the transformed p avoids the original set.
        let r = [
            s3_subsets.choose(&mut rng).unwrap(),
            length4_pairs.choose(&mut rng).unwrap(),
        ];
        for r in r {
            for op in SymmetryOp::ALL {
                assert_eq!(
                    patterns::avoids_all(&p, &r.transform(op)),
                    patterns::avoids_all(&op.apply(&p), r),
                    "{p:?} r={r} op={op}"
                );
                trials += 1;
            }
        }
    }

    assert!(trials >= 10_000, "only {trials} trials ran");
    println!("  lemma suites: {trials} checks, zero violations");
    report(8, "lemma property suites", started, Duration::from_secs(60));
}

#[test]
fn criterion_09_determinism_under_parallelism() {
    let started = Instant::now();

    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            let verdict = experiments::verify_theorem_1_3(9).unwrap().without_timing();
            let counts: Vec<SignedCount> = (2..=9).map(|n| signed(n, &set("1243,2143"))).collect();
            let report = signbalance::balance_over_range(&set("1234,3214"), 2, 9).unwrap();
            (
                serde_json::to_string(&verdict).unwrap(),
                counts,
                serde_json::to_string(&report).unwrap(),
            )
        })
    };

    let sequential = run(1);
    let parallel = run(4);
    assert_eq!(sequential.0, parallel.0, "verdict bytes differ");
    assert_eq!(sequential.1, parallel.1, "signed counts differ");
    assert_eq!(sequential.2, parallel.2, "balance report bytes differ");

    report(
        9,
        "determinism under parallelism",
        started,
        Duration::from_secs(300),
    );
}

#[test]
fn criterion_10_scanner_sanity() {
    let started = Instant::now();

    let rows = experiments::scan_pairs_length4(7).unwrap();
    assert_eq!(rows.len(), 276);

    for (a, b) in BALANCED_LENGTH4_PAIRS {
        let pair = PatternSet::new([perm(a), perm(b)]);
        let row = rows.iter().find(|row| row.pair == pair).unwrap();
        assert_eq!(row.first_unbalanced, None, "{pair}");
        assert_eq!(row.balanced_through, 7, "{pair}");
    }

    let failing = rows
        .iter()
        .find(|row| row.pair == set("1324,2143"))
        .unwrap();
    assert_eq!(failing.first_unbalanced, Some(5));

    // Balance verdicts are constant on symmetry orbits.
    let orbit_map = experiments::scan_orbit_map(&rows);
    for (orbit_id, members) in &orbit_map {
        let rows_in_orbit: Vec<_> = rows
            .iter()
            .filter(|row| row.orbit_id == *orbit_id)
            .collect();
        assert_eq!(rows_in_orbit.len(), members.len());
        let reference = rows_in_orbit[0];
        for row in &rows_in_orbit {
            assert_eq!(
                row.first_unbalanced, reference.first_unbalanced,
                "orbit {orbit_id}"
            );
            assert_eq!(
                row.balanced_through, reference.balanced_through,
                "orbit {orbit_id}"
            );
            assert_eq!(row.set_balanced, reference.set_balanced, "orbit {orbit_id}");
        }
    }

    report(
        10,
        "length-4 pair scanner",
        started,
        Duration::from_secs(600),
    );
}
