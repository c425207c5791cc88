//! Command-line surface over the library: containment queries, class
//! enumeration and counting, balance reports, the named verifications, the
//! length-4 pair scanner, and subsequence statistics.
//!
//! Exit codes: 0 on success (and on verified claims), 1 when a verification
//! fails, a counterexample turns up in a balance report, or an enumeration
//! guard trips (the report or a structured error object is still written),
//! 2 on usage errors.

mod render;

use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use signbal::enumeration::{self, AvoidanceClassQuery, Backend, DEFAULT_ORACLE_GUARD};
use signbal::experiments::{self, VerificationVerdict};
use signbal::patterns::{self, PatternSet};
use signbal::perm::Permutation;
use signbal::signbalance;
use signbal::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
    Csv,
}

#[derive(Parser, Debug)]
#[command(
    name = "signbal",
    version,
    about = "Pattern-avoidance enumeration and sign-balance reports for permutation classes"
)]
struct Cli {
    #[command(subcommand)]
    command: CliCommand,

    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Table)]
    format: Format,

    /// Write the report to this file (atomically) instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,

    /// Worker threads; 1 forces fully sequential execution.
    /// Defaults to the logical core count.
    #[arg(long, global = true)]
    parallelism: Option<usize>,

    /// Force the brute-force enumeration backend. Guarded at n! for
    /// n <= SIGNBAL_GUARD_N (default 10).
    #[arg(long, global = true)]
    oracle: bool,

    /// Omit timing fields so identical requests produce identical bytes.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug)]
enum CliCommand {
    /// Search a host permutation for occurrences of each pattern.
    Contains {
        /// Host permutation: digit string for n <= 9 ("24153"),
        /// comma-separated values otherwise ("10,2,1,...").
        #[arg(long)]
        host: String,
        /// Comma-separated pattern words, e.g. "132,4321".
        #[arg(long)]
        patterns: String,
    },
    /// List the members of S_n(patterns) in lexicographic order.
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-separated pattern words; empty means the unrestricted class.
        #[arg(long, default_value = "")]
        patterns: String,
    },
    /// Report |S_n(patterns)| without materializing members.
    Count {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value = "")]
        patterns: String,
    },
    /// Even/odd tallies of S_n(patterns) for every n in a range.
    /// Exits 1 when any row is unbalanced.
    Balance {
        #[arg(long, default_value = "")]
        patterns: String,
        #[arg(long, default_value_t = 2)]
        n_lo: usize,
        #[arg(long)]
        n_max: usize,
    },
    /// Run a named verification and report a verdict with witnesses.
    #[command(after_help = "\
targets:
  thm1.2      every nonempty set R of length-3 patterns: the class S_n(R) is
              balanced for all checked n exactly when R is sign-balanced and
              R != {132,213,231,312} (default n-max 9)
  thm1.3      the twelve listed pairs of length-4 patterns give balanced
              classes at every checked n (default n-max 8)
  ex3.9       S_n(1324,2143) is balanced for n = 2..4 and unbalanced at
              n = 5, with the three max-position slices matched exactly
  ss-counts   cardinalities of S_n(R) for every 4-subset R of the length-3
              patterns, including the two-member pool (default n-max 9)
  prop3.5     the even/odd split of S_4(123,321) and emptiness from n = 5
  catalan321  imbalance of S_n(321) follows the Catalan excess law
              (default n-max 11)
  all         every target above, in this order")]
    Verify {
        #[arg(value_enum)]
        target: VerifyTarget,
        /// Range override for the range-taking targets.
        #[arg(long)]
        n_max: Option<usize>,
    },
    /// Scan all 276 unordered pairs of length-4 patterns for balance
    /// through n-max. CSV output gets an orbit sidecar next to --output.
    Scan {
        #[arg(long, default_value_t = 8)]
        n_max: usize,
    },
    /// Longest increasing/decreasing subsequence lengths of a permutation.
    Lis {
        #[arg(long)]
        perm: String,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VerifyTarget {
    #[value(name = "thm1.2")]
    Thm1_2,
    #[value(name = "thm1.3")]
    Thm1_3,
    #[value(name = "ex3.9")]
    Ex3_9,
    #[value(name = "ss-counts")]
    SsCounts,
    #[value(name = "prop3.5")]
    Prop3_5,
    #[value(name = "catalan321")]
    Catalan321,
    #[value(name = "all")]
    All,
}

/// A fully validated request; everything stringly-typed has been parsed.
#[derive(Debug)]
struct Request {
    action: Action,
    format: Format,
    output: Option<PathBuf>,
    parallelism: usize,
    backend: Backend,
    no_timing: bool,
}

#[derive(Debug)]
enum Action {
    Contains {
        host: Permutation,
        patterns: PatternSet,
    },
    Enumerate {
        n: usize,
        patterns: PatternSet,
    },
    Count {
        n: usize,
        patterns: PatternSet,
    },
    Balance {
        patterns: PatternSet,
        n_lo: usize,
        n_hi: usize,
    },
    Verify {
        target: VerifyTarget,
        n_max: Option<usize>,
    },
    Scan {
        n_max: usize,
    },
    Lis {
        perm: Permutation,
    },
}

/// What a command produced: the report body, an optional sidecar, and the
/// exit code the report implies.
struct Outcome {
    body: String,
    sidecar: Option<String>,
    exit: u8,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Outcome {
            body,
            sidecar: None,
            exit: 0,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse(); // usage problems exit 2 via clap
    ExitCode::from(run(cli))
}

fn run(cli: Cli) -> u8 {
    let guard = match oracle_guard_from_env() {
        Ok(guard) => guard,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };
    let request = match build_request(cli, guard) {
        Ok(request) => request,
        Err(message) => {
            eprintln!("error: {message}");
            return 2;
        }
    };

    let pool = match rayon::ThreadPoolBuilder::new()
        .num_threads(request.parallelism)
        .build()
    {
        Ok(pool) => pool,
        Err(e) => {
            eprintln!(
                "error: failed to start {} worker threads: {e}",
                request.parallelism
            );
            return 1;
        }
    };

    match pool.install(|| execute(&request)) {
        Ok(outcome) => {
            if let Err(e) = deliver(&request, &outcome) {
                eprintln!("error: {e}");
                return 1;
            }
            outcome.exit
        }
        Err(error) => {
            emit_structured_error(&error);
            1
        }
    }
}

fn oracle_guard_from_env() -> Result<usize, String> {
    match std::env::var("SIGNBAL_GUARD_N") {
        Ok(raw) => raw
            .trim()
            .parse::<usize>()
            .map_err(|_| format!("SIGNBAL_GUARD_N must be a non-negative integer, got {raw:?}")),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_ORACLE_GUARD),
        Err(std::env::VarError::NotUnicode(_)) => {
            Err("SIGNBAL_GUARD_N is not valid unicode".to_string())
        }
    }
}

fn build_request(cli: Cli, oracle_guard: usize) -> Result<Request, String> {
    let parallelism = match cli.parallelism {
        Some(0) => return Err("--parallelism must be at least 1".to_string()),
        Some(k) => k,
        None => std::thread::available_parallelism().map_or(1, |c| c.get()),
    };
    let backend = if cli.oracle {
        Backend::Oracle {
            guard: oracle_guard,
        }
    } else {
        Backend::Pruned
    };

    let parse_perm = |flag: &str, raw: &str| -> Result<Permutation, String> {
        raw.parse().map_err(|e: Error| format!("{flag}: {e}"))
    };
    let parse_patterns = |raw: &str| -> Result<PatternSet, String> {
        raw.parse().map_err(|e: Error| format!("--patterns: {e}"))
    };

    let action = match cli.command {
        CliCommand::Contains { host, patterns } => Action::Contains {
            host: parse_perm("--host", &host)?,
            patterns: parse_patterns(&patterns)?,
        },
        CliCommand::Enumerate { n, patterns } => {
            if n == 0 {
                return Err("--n must be at least 1".to_string());
            }
            Action::Enumerate {
                n,
                patterns: parse_patterns(&patterns)?,
            }
        }
        CliCommand::Count { n, patterns } => {
            if n == 0 {
                return Err("--n must be at least 1".to_string());
            }
            Action::Count {
                n,
                patterns: parse_patterns(&patterns)?,
            }
        }
        CliCommand::Balance {
            patterns,
            n_lo,
            n_max,
        } => {
            if n_lo < 2 || n_lo > n_max {
                return Err(format!("invalid range: --n-lo {n_lo} --n-max {n_max}"));
            }
            Action::Balance {
                patterns: parse_patterns(&patterns)?,
                n_lo,
                n_hi: n_max,
            }
        }
        CliCommand::Verify { target, n_max } => Action::Verify { target, n_max },
        CliCommand::Scan { n_max } => {
            if n_max < 5 {
                return Err(format!("--n-max must be at least 5 for scan, got {n_max}"));
            }
            Action::Scan { n_max }
        }
        CliCommand::Lis { perm } => Action::Lis {
            perm: parse_perm("--perm", &perm)?,
        },
    };

    Ok(Request {
        action,
        format: cli.format,
        output: cli.output,
        parallelism,
        backend,
        no_timing: cli.no_timing,
    })
}

fn execute(request: &Request) -> Result<Outcome, Error> {
    match &request.action {
        Action::Contains { host, patterns } => {
            let results: Vec<render::ContainsResult> = patterns
                .iter()
                .map(|pattern| (pattern.clone(), patterns::find_occurrence(host, pattern)))
                .collect();
            let body = match request.format {
                Format::Table => render::contains_table(host, &results),
                Format::Json => render::to_json_string(&render::contains_json(host, &results)),
                Format::Csv => render::contains_csv(host, &results),
            };
            Ok(Outcome::ok(body))
        }

        Action::Enumerate { n, patterns } => {
            let query = AvoidanceClassQuery::new(*n, patterns.clone())?;
            let members = match request.backend {
                Backend::Pruned => enumeration::enumerate_pruned(&query)?,
                Backend::Oracle { guard } => enumeration::enumerate_oracle_guarded(&query, guard)?,
            };
            let body = match request.format {
                Format::Table => render::enumerate_table(&members),
                Format::Json => render::to_json_string(&render::enumerate_json(
                    *n,
                    &patterns.to_string(),
                    &members,
                )),
                Format::Csv => render::enumerate_csv(&members),
            };
            Ok(Outcome::ok(body))
        }

        Action::Count { n, patterns } => {
            let query = AvoidanceClassQuery::new(*n, patterns.clone())?;
            let cardinality = enumeration::class_cardinality_with(&query, request.backend)?;
            let body = match request.format {
                Format::Table => format!("{cardinality}\n"),
                Format::Json => render::to_json_string(&render::count_json(
                    *n,
                    &patterns.to_string(),
                    cardinality,
                )),
                Format::Csv => render::count_csv(*n, &patterns.to_string(), cardinality),
            };
            Ok(Outcome::ok(body))
        }

        Action::Balance {
            patterns,
            n_lo,
            n_hi,
        } => {
            let report =
                signbalance::balance_over_range_with(patterns, *n_lo, *n_hi, request.backend)?;
            let body = match request.format {
                Format::Table => render::balance_table(&report),
                Format::Json => render::to_json_string(&render::balance_json(&report)),
                Format::Csv => report.to_csv(),
            };
            Ok(Outcome {
                body,
                sidecar: None,
                exit: if report.all_balanced() { 0 } else { 1 },
            })
        }

        Action::Verify { target, n_max } => {
            let mut verdicts = run_verify(*target, *n_max, request.backend)?;
            if request.no_timing {
                verdicts = verdicts
                    .into_iter()
                    .map(VerificationVerdict::without_timing)
                    .collect();
            }
            let body = match request.format {
                Format::Table => experiments::verdict_table(&verdicts),
                Format::Json => render::to_json_string(&render::verify_json(&verdicts)),
                Format::Csv => render::verify_csv(&verdicts),
            };
            let all_passed = verdicts.iter().all(|v| v.passed);
            Ok(Outcome {
                body,
                sidecar: None,
                exit: if all_passed { 0 } else { 1 },
            })
        }

        Action::Scan { n_max } => {
            let rows = experiments::scan_pairs_length4_with(*n_max, request.backend)?;
            let (body, sidecar) = match request.format {
                Format::Table => (
                    render::scan_table(&rows),
                    Some(render::orbit_sidecar_json(&rows)),
                ),
                Format::Json => (
                    render::to_json_string(&render::scan_json(*n_max, &rows)),
                    None, // orbits are embedded in the object
                ),
                Format::Csv => (
                    experiments::scan_rows_to_csv(&rows),
                    Some(render::orbit_sidecar_json(&rows)),
                ),
            };
            Ok(Outcome {
                body,
                sidecar,
                exit: 0,
            })
        }

        Action::Lis { perm } => {
            let (lis, lds) = perm.lis_lds()?;
            let body = match request.format {
                Format::Table => render::lis_table(perm, lis, lds),
                Format::Json => render::to_json_string(&render::lis_json(perm, lis, lds)),
                Format::Csv => render::lis_csv(perm, lis, lds),
            };
            Ok(Outcome::ok(body))
        }
    }
}

fn run_verify(
    target: VerifyTarget,
    n_max: Option<usize>,
    backend: Backend,
) -> Result<Vec<VerificationVerdict>, Error> {
    let one = |t: VerifyTarget| -> Result<VerificationVerdict, Error> {
        match t {
            VerifyTarget::Thm1_2 => {
                experiments::verify_theorem_1_2_with(n_max.unwrap_or(9), backend)
            }
            VerifyTarget::Thm1_3 => {
                experiments::verify_theorem_1_3_with(n_max.unwrap_or(8), backend)
            }
            VerifyTarget::Ex3_9 => experiments::verify_example_3_9_with(backend),
            VerifyTarget::SsCounts => {
                experiments::verify_lemma_2_7_counts_with(n_max.unwrap_or(9), backend)
            }
            VerifyTarget::Prop3_5 => experiments::verify_prop_3_5_with(backend),
            VerifyTarget::Catalan321 => {
                experiments::verify_catalan_excess_with(n_max.unwrap_or(11), backend)
            }
            VerifyTarget::All => unreachable!("expanded by the caller"),
        }
    };
    match target {
        VerifyTarget::All => [
            VerifyTarget::Thm1_2,
            VerifyTarget::Thm1_3,
            VerifyTarget::Ex3_9,
            VerifyTarget::SsCounts,
            VerifyTarget::Prop3_5,
            VerifyTarget::Catalan321,
        ]
        .iter()
        .map(|&t| one(t))
        .collect(),
        single => Ok(vec![one(single)?]),
    }
}

fn deliver(request: &Request, outcome: &Outcome) -> Result<(), std::io::Error> {
    match &request.output {
        Some(path) => {
            write_atomic(path, &outcome.body)?;
            if let Some(sidecar) = &outcome.sidecar {
                write_atomic(&sidecar_path(path), sidecar)?;
            }
            Ok(())
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(outcome.body.as_bytes())
        }
    }
}

/// `<stem>.orbits.json` next to the main output file.
fn sidecar_path(path: &Path) -> PathBuf {
    let stem = path
        .file_stem()
        .map_or_else(|| "scan".to_string(), |s| s.to_string_lossy().into_owned());
    path.with_file_name(format!("{stem}.orbits.json"))
}

/// Write-temp-then-rename, so readers never observe a partial report.
fn write_atomic(path: &Path, content: &str) -> Result<(), std::io::Error> {
    let dir = match path.parent() {
        Some(parent) if !parent.as_os_str().is_empty() => parent,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(content.as_bytes())?;
    tmp.persist(path).map_err(|e| e.error)?;
    Ok(())
}

fn emit_structured_error(error: &Error) {
    let object = json!({
        "schema_version": render::SCHEMA_VERSION,
        "error": {
            "kind": error_kind(error),
            "message": error.to_string(),
        },
    });
    eprintln!(
        "{}",
        serde_json::to_string_pretty(&object).expect("error serialization")
    );
}

fn error_kind(error: &Error) -> &'static str {
    match error {
        Error::DuplicateValue(_) => "duplicate_value",
        Error::ValueOutOfRange { .. } => "value_out_of_range",
        Error::PositionOutOfRange { .. } => "position_out_of_range",
        Error::InvalidPositionPair { .. } => "invalid_position_pair",
        Error::InsertIndexOutOfRange { .. } => "insert_index_out_of_range",
        Error::EmptyPermutation => "empty_permutation",
        Error::InvalidToken(_) => "invalid_token",
        Error::MixedLengths => "mixed_lengths",
        Error::ZeroLengthQuery => "zero_length_query",
        Error::OracleGuardExceeded { .. } => "oracle_guard_exceeded",
        Error::OutputCapExceeded { .. } => "output_cap_exceeded",
        Error::InvalidRange { .. } => "invalid_range",
        Error::RangeTooSmall { .. } => "range_too_small",
        Error::RangeTooLarge { .. } => "range_too_large",
        Error::CatalanIndexTooLarge(_) => "catalan_index_too_large",
    }
}
