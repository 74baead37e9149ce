//! Renderings of command results in each output format.

use std::collections::BTreeMap;

use clap::ValueEnum;
use lcsq_core::verify::{CheckResult, VerificationReport};
use lcsq_core::{BQuotientCharacter, Decomposition, Lemma, Partition};
use serde_json::{json, Map, Value};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

/// One result in all three formats.
pub struct Rendered {
    json: Value,
    csv: Vec<Vec<String>>,
    text: String,
    pub failing: Vec<String>,
}

impl Rendered {
    pub fn to_format(&self, format: Format) -> String {
        match format {
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("values serialize");
                s.push('\n');
                s
            }
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).expect("in-memory write");
                }
                String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 input")
            }
            Format::Text => self.text.clone(),
        }
    }
}

/// `[k_1,...,k_n]` with trailing zeros up to `n`.
pub fn partition_key(d: &Partition, n: usize) -> String {
    let parts: Vec<String> = d.padded(n).iter().map(usize::to_string).collect();
    format!("[{}]", parts.join(","))
}

fn instance_json(m: usize, n: usize, deg_max: usize) -> Value {
    json!({ "m": m, "n": n, "deg_max": deg_max })
}

fn positive_degrees(series: &[u64]) -> &[u64] {
    series.get(1..).unwrap_or(&[])
}

pub fn dims(m: usize, n: usize, deg_max: usize, series: &[u64]) -> Rendered {
    let dims = positive_degrees(series);
    let mut csv = vec![vec!["degree".to_string(), "dim".to_string()]];
    csv.extend(
        dims.iter()
            .enumerate()
            .map(|(i, d)| vec![(i + 1).to_string(), d.to_string()]),
    );
    let text: Vec<String> = dims.iter().map(u64::to_string).collect();
    Rendered {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "instance": instance_json(m, n, deg_max),
            "first_degree": 1,
            "dims": dims,
        }),
        csv,
        text: format!("{}\n", text.join(", ")),
        failing: Vec::new(),
    }
}

fn multiplicities(dec: &Decomposition, n: usize) -> Map<String, Value> {
    dec.multiplicities
        .iter()
        .map(|(d, k)| (partition_key(d, n), json!(k)))
        .collect()
}

fn decomposition_json(dec: &Decomposition, n: usize) -> Value {
    json!({
        "multiplicities": multiplicities(dec, n),
        "deg_reliable": dec.deg_reliable,
        "remainder_zero": dec.is_complete(),
    })
}

pub fn decomposition(m: usize, n: usize, deg_max: usize, dec: &Decomposition) -> Rendered {
    let mut csv = vec![vec!["partition".to_string(), "multiplicity".to_string()]];
    let mut text = String::new();
    for (d, k) in &dec.multiplicities {
        csv.push(vec![partition_key(d, n), k.to_string()]);
        text.push_str(&format!("F{} x {k}\n", partition_key(d, n)));
    }
    if dec.multiplicities.is_empty() {
        text.push_str("0\n");
    }
    text.push_str(&format!("reliable through degree {}\n", dec.deg_reliable));
    Rendered {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "instance": instance_json(m, n, deg_max),
            "deg_reliable": dec.deg_reliable,
            "remainder_zero": dec.is_complete(),
            "decomposition": multiplicities(dec, n),
        }),
        csv,
        text,
        failing: Vec::new(),
    }
}

fn checks_json(checks: &BTreeMap<String, CheckResult>) -> Value {
    serde_json::to_value(checks).expect("checks serialize")
}

fn report_json(r: &VerificationReport) -> Value {
    let i = r.instance;
    json!({
        "schema_version": SCHEMA_VERSION,
        "instance": instance_json(i.m, i.n, i.deg_max),
        "first_degree": 1,
        "dims": positive_degrees(&r.dims()),
        "decomposition": r.decomposition.as_ref().map(|d| decomposition_json(d, i.n)),
        "bound": r.bound_value,
        "domination_ok": r.domination_ok,
        "checks": checks_json(&r.lemma_results),
        "pass": r.passed(),
    })
}

fn check_lines(prefix: &str, checks: &BTreeMap<String, CheckResult>, text: &mut String) {
    for (name, c) in checks {
        text.push_str(&format!("{prefix}{name}: {} ({})\n", c.status, c.details));
    }
}

fn failing_names(scope: &str, checks: &BTreeMap<String, CheckResult>) -> Vec<String> {
    checks
        .iter()
        .filter(|(_, c)| c.is_fail())
        .map(|(name, _)| format!("{scope}{name}"))
        .collect()
}

pub fn verification(
    reports: &[VerificationReport],
    lemmas: Option<&BTreeMap<String, CheckResult>>,
    pass: bool,
) -> Rendered {
    let mut csv = vec![vec![
        "scope".to_string(),
        "check".to_string(),
        "status".to_string(),
        "details".to_string(),
    ]];
    let mut text = String::new();
    let mut failing = Vec::new();
    for r in reports {
        let i = r.instance;
        let scope = format!("({},{},{})", i.m, i.n, i.deg_max);
        text.push_str(&format!(
            "instance {scope}: {}\n",
            if r.passed() { "pass" } else { "fail" }
        ));
        check_lines("  ", &r.lemma_results, &mut text);
        for (name, c) in &r.lemma_results {
            csv.push(vec![
                scope.clone(),
                name.clone(),
                c.status.to_string(),
                c.details.clone(),
            ]);
        }
        failing.extend(failing_names(&format!("{scope} "), &r.lemma_results));
    }
    if let Some(l) = lemmas {
        text.push_str("suites:\n");
        check_lines("  ", l, &mut text);
        for (name, c) in l {
            csv.push(vec![
                "suite".to_string(),
                name.clone(),
                c.status.to_string(),
                c.details.clone(),
            ]);
        }
        failing.extend(failing_names("", l));
    }
    text.push_str(if pass { "pass\n" } else { "fail\n" });
    let json = if let ([r], None) = (reports, lemmas) {
        report_json(r)
    } else {
        json!({
            "schema_version": SCHEMA_VERSION,
            "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
            "checks": lemmas.map(checks_json),
            "pass": pass,
        })
    };
    Rendered {
        json,
        csv,
        text,
        failing,
    }
}

pub fn lemma(lemma: Lemma, checks: &BTreeMap<String, CheckResult>, pass: bool) -> Rendered {
    let mut csv = vec![vec![
        "check".to_string(),
        "status".to_string(),
        "details".to_string(),
    ]];
    csv.extend(
        checks
            .iter()
            .map(|(name, c)| vec![name.clone(), c.status.to_string(), c.details.clone()]),
    );
    let mut text = String::new();
    check_lines("", checks, &mut text);
    text.push_str(if pass { "pass\n" } else { "fail\n" });
    Rendered {
        json: json!({
            "schema_version": SCHEMA_VERSION,
            "lemma": lemma.name(),
            "checks": checks_json(checks),
            "pass": pass,
        }),
        csv,
        text,
        failing: failing_names("", checks),
    }
}

pub fn fixture_name(m: usize, n: usize, deg_max: usize) -> String {
    format!("b_m{m}_n{n}_d{deg_max}.json")
}

/// Golden file for one instance: oracle-checked dimensions, the
/// multigraded character and its decomposition.
pub fn fixture(b: &BQuotientCharacter, dec: &Decomposition) -> String {
    let multigraded: Vec<Value> = b
        .coefficients
        .iter()
        .map(|(md, c)| json!({ "multidegree": md.0, "dim": c }))
        .collect();
    let value = json!({
        "schema_version": SCHEMA_VERSION,
        "instance": instance_json(b.m, b.n, b.deg_max),
        "first_degree": 1,
        "dims": positive_degrees(&b.total_degree_series()),
        "multigraded": multigraded,
        "decomposition": multiplicities(dec, b.n),
        "deg_reliable": dec.deg_reliable,
    });
    let mut s = serde_json::to_string_pretty(&value).expect("values serialize");
    s.push('\n');
    s
}

pub fn written(paths: &[String]) -> Rendered {
    let mut csv = vec![vec!["path".to_string()]];
    csv.extend(paths.iter().map(|p| vec![p.clone()]));
    Rendered {
        json: json!({ "schema_version": SCHEMA_VERSION, "written": paths }),
        csv,
        text: paths.iter().map(|p| format!("wrote {p}\n")).collect(),
        failing: Vec::new(),
    }
}
