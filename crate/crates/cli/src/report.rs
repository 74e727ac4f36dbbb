//! Deterministic md/csv/json rendering of check reports, the property table
//! and classification reports.

use std::fmt::Write as _;

use reflex_core::classify::{ClassificationReport, SeedRecord};
use reflex_core::kan::Side;
use reflex_core::monoidal::{Instance, Witness};
use reflex_core::{CheckReport, Graph, PropertyTable};
use serde::{Deserialize, Serialize};

use crate::files::{GraphFile, NamedGraph, SeedFile};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Md,
    Csv,
    Json,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedGraphJson {
    pub role: String,
    pub graph: GraphFile,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessJson {
    pub instance: String,
    pub inputs: Vec<NamedGraphJson>,
    /// Expected isomorphic, found not to be.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub compared: Option<[GraphFile; 2]>,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckJson {
    pub property: String,
    pub label: String,
    pub passed: bool,
    /// `no counterexample within <scope>` or `fail`.
    pub verdict: String,
    pub checked: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<WitnessJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<CheckJson>,
}

fn graph_file(g: &Graph) -> GraphFile {
    NamedGraph::numbered(g.clone()).to_file()
}

fn side_word(side: Side) -> &'static str {
    match side {
        Side::Left => "left",
        Side::Right => "right",
    }
}

/// One-line description and the input graphs of an instance.
pub fn describe_instance(instance: &Instance) -> (String, Vec<(&'static str, &Graph)>) {
    match instance {
        Instance::Unit { candidate, side, x } => (format!("{} unit {candidate}", side_word(*side)), vec![("X", x)]),
        Instance::Associativity { x, y, z } => ("associator".into(), vec![("X", x), ("Y", y), ("Z", z)]),
        Instance::Symmetry { x, y } => ("swap".into(), vec![("X", x), ("Y", y)]),
        Instance::Adjunction { kind, x, y, z } => {
            (format!("adjunction against the {kind} hom"), vec![("X", x), ("Y", y), ("Z", z)])
        }
        Instance::Coproduct { variable, x, y, z } => {
            (format!("coproduct Y+Z in the {variable} variable"), vec![("X", x), ("Y", y), ("Z", z)])
        }
        Instance::Pushout { variable, x, y, z, ya, za } => (
            format!("pushout of Y <- I_0 -> Z at vertices {ya}, {za} in the {variable} variable"),
            vec![("X", x), ("Y", y), ("Z", z)],
        ),
    }
}

pub fn witness_json(w: &Witness) -> WitnessJson {
    let (instance, inputs) = describe_instance(&w.instance);
    WitnessJson {
        instance,
        inputs: inputs
            .into_iter()
            .map(|(role, g)| NamedGraphJson { role: role.into(), graph: graph_file(g) })
            .collect(),
        compared: w.compared.as_ref().map(|(a, b)| [graph_file(a), graph_file(b)]),
        detail: w.detail.clone(),
    }
}

pub fn check_json(r: &CheckReport, scope: &str) -> CheckJson {
    CheckJson {
        property: r.property.name().into(),
        label: r.label.clone(),
        passed: r.passed,
        verdict: if r.passed { format!("no counterexample within {scope}") } else { "fail".into() },
        checked: r.checked,
        witness: r.witness.as_ref().map(witness_json),
        parts: r.parts.iter().map(|p| check_json(p, scope)).collect(),
    }
}

/// Plain text for a check, with its witness when it failed.
pub fn check_text(r: &CheckReport, scope: &str) -> String {
    let mut out = String::new();
    if r.passed {
        let _ = writeln!(out, "{}: pass ({} instances, no counterexample within {scope})", r.label, r.checked);
    } else {
        let _ = writeln!(out, "{}: FAIL after {} instances", r.label, r.checked);
        if let Some(w) = &r.witness {
            out.push_str(&witness_text(w));
        }
    }
    out
}

pub fn witness_text(w: &Witness) -> String {
    let (instance, inputs) = describe_instance(&w.instance);
    let mut out = format!("  witness: {instance}\n");
    for (role, g) in inputs {
        let _ = writeln!(out, "    {role} = {g:?}");
    }
    if let Some((a, b)) = &w.compared {
        let _ = writeln!(out, "    compared {a:?}\n        with {b:?}");
    }
    let _ = writeln!(out, "    {}", w.detail);
    out
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRowJson {
    pub name: String,
    pub monoidal: String,
    pub symmetric: String,
    pub closed: String,
    pub checks: Vec<CheckJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableJson {
    pub max_n: usize,
    pub rows: Vec<TableRowJson>,
}

pub fn table_json(t: &PropertyTable) -> TableJson {
    let scope = format!("graphs on at most {} vertices", t.max_n);
    TableJson {
        max_n: t.max_n,
        rows: t
            .rows
            .iter()
            .map(|r| TableRowJson {
                name: r.kind.name().into(),
                monoidal: r.monoidal.to_string(),
                symmetric: r.symmetric.to_string(),
                closed: r.closed.to_string(),
                checks: r.reports.iter().map(|c| check_json(c, &scope)).collect(),
            })
            .collect(),
    }
}

pub fn render_table(t: &PropertyTable, format: Format) -> String {
    match format {
        Format::Md => {
            let mut out = String::from("| Name | Monoidal | Symmetric | Closed |\n|---|---|---|---|\n");
            for r in &t.rows {
                let _ = writeln!(out, "| {} | {} | {} | {} |", r.kind.name(), r.monoidal, r.symmetric, r.closed);
            }
            out
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["Name", "Monoidal", "Symmetric", "Closed"]).expect("in-memory write");
            for r in &t.rows {
                let cells =
                    [r.kind.name().to_string(), r.monoidal.to_string(), r.symmetric.to_string(), r.closed.to_string()];
                w.write_record(&cells).expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8 cells")
        }
        Format::Json => to_json(&table_json(t)),
    }
}

pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedRecordJson {
    pub index: usize,
    pub description: String,
    pub seed: SeedFile,
    pub functorial: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub violation: Option<String>,
    pub checks: Vec<CheckJson>,
    pub survived: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_as: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassificationJson {
    pub seeds: Vec<SeedRecordJson>,
    pub survivors: Vec<usize>,
}

/// Classification report with one seed file per record, in record order.
pub struct Classified<'a> {
    pub report: &'a ClassificationReport,
    pub files: &'a [SeedFile],
}

const CHECK_COLUMNS: [&str; 5] = ["unit", "associativity", "symmetry", "adjunction-count", "cocontinuity"];

fn check_cell(r: &SeedRecord, property: &str) -> &'static str {
    match r.checks.iter().find(|c| c.property.name() == property) {
        None => "-",
        Some(c) if c.passed => "pass",
        Some(_) => "fail",
    }
}

pub fn render_classification(c: &Classified, format: Format) -> String {
    let scope = "the test graphs";
    match format {
        Format::Json => to_json(&ClassificationJson {
            seeds: c
                .report
                .records
                .iter()
                .zip(c.files)
                .enumerate()
                .map(|(index, (r, file))| SeedRecordJson {
                    index,
                    description: r.description.clone(),
                    seed: file.clone(),
                    functorial: r.functoriality.is_ok(),
                    violation: r.functoriality.as_ref().err().map(|e| e.to_string()),
                    checks: r.checks.iter().map(|k| check_json(k, scope)).collect(),
                    survived: r.survived(),
                    certified_as: r.certificate.as_ref().map(|k| k.kind.name().to_string()),
                })
                .collect(),
            survivors: c.report.survivors.clone(),
        }),
        Format::Md | Format::Csv => {
            let mut out = format!("| # | Seed | Functorial | {} | Certificate |\n", CHECK_COLUMNS.join(" | "));
            out.push_str(&"|---".repeat(CHECK_COLUMNS.len() + 4));
            out.push_str("|\n");
            if c.report.records.is_empty() {
                return out;
            }
            for (i, r) in c.report.records.iter().enumerate() {
                let functorial = match &r.functoriality {
                    Ok(()) => "pass".to_string(),
                    Err(e) => format!("fail: {e}"),
                };
                let checks: Vec<&str> = CHECK_COLUMNS.iter().map(|p| check_cell(r, p)).collect();
                let cert = r.certificate.as_ref().map_or("-", |k| k.kind.name());
                let _ = writeln!(out, "| {i} | {} | {functorial} | {} | {cert} |", r.description, checks.join(" | "));
            }
            let _ = writeln!(out, "\nSurvivors: {}", c.report.survivors.len());
            for &i in &c.report.survivors {
                let r = &c.report.records[i];
                match &r.certificate {
                    Some(k) => {
                        let _ = writeln!(
                            out,
                            "- #{i} {}: certified as {} on {} test pairs",
                            r.description,
                            k.kind.name(),
                            k.pairs
                        );
                    }
                    None => {
                        let _ = writeln!(out, "- #{i} {}: not certified against Box or Categorical", r.description);
                    }
                }
            }
            let failed: Vec<(usize, &SeedRecord)> =
                c.report.records.iter().enumerate().filter(|(_, r)| r.functoriality.is_ok() && !r.survived()).collect();
            if !failed.is_empty() {
                out.push_str("\nFirst failing check of each functorial non-survivor:\n");
                for (i, r) in failed {
                    if let Some(k) = r.checks.iter().find(|k| !k.passed) {
                        let _ = write!(out, "- #{i} ");
                        out.push_str(&check_text(k, scope));
                    }
                }
            }
            out
        }
    }
}
