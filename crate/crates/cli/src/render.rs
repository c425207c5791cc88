//! Report bodies for each command in the three output formats. JSON carries a
//! schema_version field; CSV has a fixed header row; everything is
//! byte-stable for a given request (timing excluded via --no-timing).

use serde_json::{json, Value};

use signbal::experiments::{self, PairScanRow, VerificationVerdict};
use signbal::patterns::OccurrenceWitness;
use signbal::perm::Permutation;
use signbal::signbalance::BalanceReport;

pub const SCHEMA_VERSION: u32 = 1;

/// RFC-4180 style quoting, applied only when the field needs it.
pub fn csv_field(field: &str) -> String {
    if field.contains(',') || field.contains('"') {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

pub fn to_json_string(value: &Value) -> String {
    let mut body = serde_json::to_string_pretty(value).expect("report serialization");
    body.push('\n');
    body
}

pub type ContainsResult = (Permutation, Option<OccurrenceWitness>);

pub fn contains_table(host: &Permutation, results: &[ContainsResult]) -> String {
    let mut out = format!("host {host}\n");
    for (pattern, witness) in results {
        match witness {
            Some(w) => {
                let indices: Vec<String> = w.indices().iter().map(|i| i.to_string()).collect();
                let values: Vec<String> = w.values(host).iter().map(|v| v.to_string()).collect();
                out.push_str(&format!(
                    "{pattern}: occurrence at positions {} (values {})\n",
                    indices.join(","),
                    values.join(" ")
                ));
            }
            None => out.push_str(&format!("{pattern}: avoided\n")),
        }
    }
    out
}

pub fn contains_json(host: &Permutation, results: &[ContainsResult]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "host": host.to_string(),
        "results": results
            .iter()
            .map(|(pattern, witness)| {
                json!({
                    "pattern": pattern.to_string(),
                    "contained": witness.is_some(),
                    "indices": witness.as_ref().map(|w| w.indices().to_vec()),
                    "values": witness.as_ref().map(|w| w.values(host)),
                })
            })
            .collect::<Vec<_>>(),
    })
}

pub fn contains_csv(host: &Permutation, results: &[ContainsResult]) -> String {
    let mut out = String::from("pattern,contained,indices,values\n");
    for (pattern, witness) in results {
        let (indices, values) = match witness {
            Some(w) => (
                w.indices()
                    .iter()
                    .map(|i| i.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
                w.values(host)
                    .iter()
                    .map(|v| v.to_string())
                    .collect::<Vec<_>>()
                    .join(" "),
            ),
            None => (String::new(), String::new()),
        };
        out.push_str(&format!(
            "{},{},{},{}\n",
            csv_field(&pattern.to_string()),
            witness.is_some(),
            indices,
            values
        ));
    }
    out
}

pub fn enumerate_table(members: &[Permutation]) -> String {
    let mut out = String::new();
    for member in members {
        out.push_str(&member.to_string());
        out.push('\n');
    }
    out
}

pub fn enumerate_json(n: usize, patterns: &str, members: &[Permutation]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "patterns": patterns,
        "count": members.len(),
        "members": members.iter().map(|m| m.to_string()).collect::<Vec<_>>(),
    })
}

pub fn enumerate_csv(members: &[Permutation]) -> String {
    let mut out = String::from("permutation\n");
    for member in members {
        out.push_str(&csv_field(&member.to_string()));
        out.push('\n');
    }
    out
}

pub fn count_json(n: usize, patterns: &str, cardinality: u64) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "n": n,
        "patterns": patterns,
        "cardinality": cardinality,
    })
}

pub fn count_csv(n: usize, patterns: &str, cardinality: u64) -> String {
    format!(
        "n,patterns,cardinality\n{},{},{}\n",
        n,
        csv_field(patterns),
        cardinality
    )
}

pub fn balance_table(report: &BalanceReport) -> String {
    let mut out = format!(
        "patterns {}  n = {}..={}\n{:>3} {:>10} {:>10} {:>10}  balanced\n",
        report.patterns, report.n_lo, report.n_hi, "n", "even", "odd", "imbalance"
    );
    for row in &report.rows {
        out.push_str(&format!(
            "{:>3} {:>10} {:>10} {:>10}  {}\n",
            row.n,
            row.even,
            row.odd,
            row.imbalance,
            if row.balanced { "yes" } else { "no" }
        ));
    }
    match report.first_unbalanced {
        Some(n) => out.push_str(&format!("first unbalanced at n = {n}\n")),
        None => out.push_str("all rows balanced\n"),
    }
    out
}

pub fn balance_json(report: &BalanceReport) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "report": report,
    })
}

pub fn verify_json(verdicts: &[VerificationVerdict]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "verdicts": verdicts,
    })
}

pub fn verify_csv(verdicts: &[VerificationVerdict]) -> String {
    let mut out = String::from("name,passed,range_lo,range_hi,witnesses,suppressed\n");
    for verdict in verdicts {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            csv_field(&verdict.name),
            verdict.passed,
            verdict.range.0,
            verdict.range.1,
            verdict.witnesses.len(),
            verdict.suppressed_witnesses
        ));
    }
    out
}

pub fn scan_table(rows: &[PairScanRow]) -> String {
    let mut out = format!(
        "{:<12} {:>12} {:>16} {:>16} {:>8}\n",
        "pair", "set_balanced", "balanced_through", "first_unbalanced", "orbit"
    );
    for row in rows {
        out.push_str(&format!(
            "{:<12} {:>12} {:>16} {:>16} {:>8}\n",
            row.pair.to_string(),
            row.set_balanced,
            row.balanced_through,
            row.first_unbalanced
                .map_or(String::from("-"), |n| n.to_string()),
            row.orbit_id
        ));
    }
    out
}

pub fn scan_json(n_max: usize, rows: &[PairScanRow]) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "n_max": n_max,
        "rows": rows,
        "orbits": experiments::scan_orbit_map(rows),
    })
}

pub fn orbit_sidecar_json(rows: &[PairScanRow]) -> String {
    to_json_string(&json!({
        "schema_version": SCHEMA_VERSION,
        "orbits": experiments::scan_orbit_map(rows),
    }))
}

pub fn lis_table(perm: &Permutation, lis: usize, lds: usize) -> String {
    format!("perm {perm}\nlis {lis}\nlds {lds}\n")
}

pub fn lis_json(perm: &Permutation, lis: usize, lds: usize) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "perm": perm.to_string(),
        "lis": lis,
        "lds": lds,
    })
}

pub fn lis_csv(perm: &Permutation, lis: usize, lds: usize) -> String {
    format!(
        "perm,lis,lds\n{},{},{}\n",
        csv_field(&perm.to_string()),
        lis,
        lds
    )
}
