//! Table and JSON renderings. JSON objects have sorted keys, so output is
//! byte-for-byte reproducible.

use std::fmt::Write;

use serde_json::{json, Value};
use toricount::counting::OrbitRecord;
use toricount::khovanskii::DefectReport;
use toricount::oracle::SuiteSummary;
use toricount::problem::JsonInt;
use toricount::{BigInt, ComponentReport, Covector, Fan, KResult, PointSet};

const SCHEMA_VERSION: u32 = 1;

fn int(v: &BigInt) -> Value {
    serde_json::to_value(JsonInt(v.clone())).expect("integer")
}

fn tuple(c: &Covector) -> Value {
    Value::Array(c.coords().iter().map(int).collect())
}

fn points(p: &PointSet) -> Value {
    Value::Array(p.points().iter().map(tuple).collect())
}

fn k_json(k: &KResult) -> Value {
    json!({
        "value": int(&k.value),
        "case": k.case.to_string(),
        "j0": k.j0,
        "lattice_l": k.lattice_l.as_ref().map(|b| b.iter().map(tuple).collect::<Vec<_>>()),
    })
}

fn record_json(r: &OrbitRecord) -> Value {
    json!({
        "cone": r.cone.0,
        "rays": r.rays,
        "dim": r.dim,
        "degenerate": r.degenerate,
        "d": r.d_value,
        "in_s": r.in_s,
        "restricted": r.restricted.iter().map(|(i, s)| json!({
            "system": i,
            "witness": tuple(&s.witness),
            "support": points(&s.points),
        })).collect::<Vec<_>>(),
        "k": r.k.as_ref().map(k_json),
        "contribution": int(&r.k_contribution),
    })
}

pub fn count_json(fan: &Fan, report: &ComponentReport, explain: bool) -> String {
    let contributions: Vec<Value> = report
        .selected()
        .map(|r| json!({"cone": r.cone.0, "rays": r.rays, "contribution": int(&r.k_contribution)}))
        .collect();
    let mut v = json!({
        "schema": "toricount.count",
        "version": SCHEMA_VERSION,
        "rank": report.rank,
        "rays": fan.rays().len(),
        "systems": report.systems,
        "total": int(&report.total),
        "contributions": contributions,
    });
    if explain {
        v["records"] = Value::Array(report.records.iter().map(record_json).collect());
    }
    serde_json::to_string_pretty(&v).expect("json")
}

fn set_str<T: std::fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn count_table(fan: &Fan, report: &ComponentReport, explain: bool) -> String {
    let mut out = String::new();
    writeln!(out, "total: {}", report.total).unwrap();
    if !explain {
        return out;
    }
    let header = [
        "cone",
        "rays",
        "dim",
        "D",
        "d",
        "S",
        "K",
        "restricted supports",
    ];
    let mut rows: Vec<[String; 8]> = Vec::new();
    for r in &report.records {
        let restricted: Vec<String> = r
            .restricted
            .iter()
            .map(|(i, s)| format!("{i}:{s}"))
            .collect();
        rows.push([
            r.cone.to_string(),
            set_str(r.rays.iter().map(|&i| &fan.rays()[i])),
            r.dim.to_string(),
            set_str(&r.degenerate),
            r.d_value.to_string(),
            if r.in_s { "yes" } else { "no" }.to_string(),
            match &r.k {
                Some(k) => format!("{} ({})", k.value, k.case),
                None => "-".to_string(),
            },
            restricted.join(" "),
        ]);
    }
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for row in &rows {
        for (w, c) in widths.iter_mut().zip(row) {
            *w = (*w).max(c.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count())))
            .collect();
        padded.join("  ").trim_end().to_string()
    };
    writeln!(out, "{}", line(header.to_vec())).unwrap();
    for row in &rows {
        writeln!(out, "{}", line(row.iter().map(String::as_str).collect())).unwrap();
    }
    out
}

pub fn khovanskii_json(k: &KResult, table: Option<&[DefectReport]>) -> String {
    let mut v = json!({
        "schema": "toricount.khovanskii",
        "version": SCHEMA_VERSION,
        "result": k_json(k),
    });
    if let Some(t) = table {
        v["defects"] = serde_json::to_value(t).expect("json");
    }
    serde_json::to_string_pretty(&v).expect("json")
}

pub fn khovanskii_table(k: &KResult, table: Option<&[DefectReport]>) -> String {
    let mut out = String::new();
    writeln!(out, "case: {}", k.case).unwrap();
    if let Some(j0) = &k.j0 {
        writeln!(out, "J0: {}", set_str(j0)).unwrap();
    }
    if let Some(l) = &k.lattice_l {
        writeln!(out, "L basis: {}", set_str(l)).unwrap();
    }
    writeln!(out, "K: {}", k.value).unwrap();
    if let Some(t) = table {
        for row in t {
            writeln!(out, "  delta{} = {}", set_str(&row.subset), row.defect).unwrap();
        }
    }
    out
}

pub fn suite_json(s: &SuiteSummary) -> String {
    let mut v = serde_json::to_value(s).expect("json");
    v["schema"] = json!("toricount.oracle");
    v["version"] = json!(SCHEMA_VERSION);
    v["ok"] = json!(s.all_passed());
    serde_json::to_string_pretty(&v).expect("json")
}

pub fn suite_table(s: &SuiteSummary) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{}: {} ({}/{} passed, seed {}, {} retries)",
        s.suite,
        if s.all_passed() { "pass" } else { "FAIL" },
        s.passed,
        s.cases,
        s.seed,
        s.retries
    )
    .unwrap();
    for f in &s.failures {
        writeln!(out, "  {f}").unwrap();
    }
    out
}
