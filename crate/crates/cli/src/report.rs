//! Report envelope and output rendering (json / csv / md).

use brace_core::counting::{BraceCensus, CensusRow, HgsCensus};
use clap::ValueEnum;
use serde::{Deserialize, Serialize};

/// Versioned schema tag carried by every report.
pub const SCHEMA_VERSION: &str = "v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Format {
    Json,
    Csv,
    Md,
}

/// Echo of the effective configuration, embedded in each report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub group: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub p_set: Option<Vec<usize>>,
    pub format: Format,
    pub bound: usize,
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Report {
    pub schema: String,
    pub command: String,
    pub config: RunConfig,
    pub timing_ms: u128,
    pub payload: Payload,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Payload {
    GroupInfo(GroupInfo),
    Regular(BraceCensus),
    Braces(BracesPayload),
    Hgs(HgsPayload),
    Verify(VerifyReport),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub label: String,
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    pub center_order: usize,
    pub order_census: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub abelian_invariants: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order12_type: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub automorphism_order: Option<usize>,
}

/// Census plus the class list behind it; `total` is the number of brace
/// isomorphism classes of size n·p.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracesPayload {
    pub n: usize,
    pub p: usize,
    pub total: usize,
    pub rows: Vec<CensusRow>,
    pub classes: Vec<TauClassDoc>,
}

/// Serialized (F, τ) class: the fields published for downstream tooling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TauClassDoc {
    pub additive: String,
    #[serde(rename = "F_label")]
    pub f_label: String,
    pub f_class_length: usize,
    pub kernel_order: usize,
    pub kernel_label: String,
    pub orbit_size: usize,
    pub tau_values: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HgsPayload {
    pub tables: Vec<HgsCensus>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub passed: bool,
    pub items: Vec<VerifyItem>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifyItem {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

pub fn render(report: &Report, format: Format) -> String {
    match format {
        Format::Json => serde_json::to_string_pretty(report).expect("report serializes"),
        Format::Md => render_md(report),
        Format::Csv => render_csv(report),
    }
}

fn census_md(census_rows: &[CensusRow], title: &str) -> String {
    let mut additive = Vec::new();
    let mut multiplicative = Vec::new();
    for row in census_rows {
        if !additive.contains(&row.additive) {
            additive.push(row.additive.clone());
        }
        if !multiplicative.contains(&row.multiplicative) {
            multiplicative.push(row.multiplicative.clone());
        }
    }
    let mut out = String::new();
    out.push_str(&format!("**{title}**\n\n"));
    out.push_str(&format!("| E \\ F | {} |\n", multiplicative.join(" | ")));
    out.push_str(&format!("|---{}|\n", "|---".repeat(multiplicative.len())));
    for e in &additive {
        let cells: Vec<String> = multiplicative
            .iter()
            .map(|m| {
                census_rows
                    .iter()
                    .find(|r| &r.additive == e && &r.multiplicative == m)
                    .map_or("0".to_string(), |r| r.count.to_string())
            })
            .collect();
        out.push_str(&format!("| {e} | {} |\n", cells.join(" | ")));
    }
    out
}

fn hgs_md(table: &HgsCensus) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "**Hopf-Galois structures of type {} (p = {})**\n\n",
        table.n_label, table.p
    ));
    out.push_str(&format!(
        "| F \\ Ker τ | {} |\n",
        table.kernel_columns.join(" | ")
    ));
    out.push_str(&format!(
        "|---{}|\n",
        "|---".repeat(table.kernel_columns.len())
    ));
    for row in &table.rows {
        let cells: Vec<String> = row
            .cells
            .iter()
            .map(|c| c.map_or("-".to_string(), |v| v.to_string()))
            .collect();
        out.push_str(&format!("| {} | {} |\n", row.f_label, cells.join(" | ")));
    }
    out
}

fn render_md(report: &Report) -> String {
    let mut out = String::new();
    match &report.payload {
        Payload::GroupInfo(info) => {
            out.push_str(&format!("**Group {}**\n\n", info.label));
            out.push_str(&format!("- order: {}\n", info.order));
            out.push_str(&format!("- abelian: {}\n", info.abelian));
            out.push_str(&format!("- exponent: {}\n", info.exponent));
            out.push_str(&format!("- center order: {}\n", info.center_order));
            let census: Vec<String> = info
                .order_census
                .iter()
                .map(|(o, c)| format!("{o}^{c}"))
                .collect();
            out.push_str(&format!("- element orders: {}\n", census.join(" ")));
            if let Some(inv) = &info.abelian_invariants {
                out.push_str(&format!("- abelian invariants: {inv:?}\n"));
            }
            if let Some(t) = &info.order12_type {
                out.push_str(&format!("- isomorphism type: {t}\n"));
            }
            if let Some(a) = info.automorphism_order {
                out.push_str(&format!("- automorphism group order: {a}\n"));
            }
        }
        Payload::Regular(census) => {
            out.push_str(&census_md(
                &census.rows,
                &format!("Regular subgroups of Hol(E), |E| = {}", census.n),
            ));
            out.push_str(&format!("\nTotal: {}\n", census.total));
        }
        Payload::Braces(payload) => {
            out.push_str(&census_md(
                &payload.rows,
                &format!("Left braces of size {}·{}", payload.n, payload.p),
            ));
            out.push_str(&format!("\nTotal: {}\n\n", payload.total));
            out.push_str("| E | F | Ker τ order | Ker τ type | class length |\n");
            out.push_str("|---|---|---|---|---|\n");
            for class in &payload.classes {
                out.push_str(&format!(
                    "| {} | {} | {} | {} | {} |\n",
                    class.additive,
                    class.f_label,
                    class.kernel_order,
                    class.kernel_label,
                    class.f_class_length * class.orbit_size,
                ));
            }
        }
        Payload::Hgs(payload) => {
            for table in &payload.tables {
                out.push_str(&hgs_md(table));
                out.push('\n');
            }
        }
        Payload::Verify(verify) => {
            for item in &verify.items {
                let mark = if item.passed { "PASS" } else { "FAIL" };
                out.push_str(&format!("- [{mark}] {}: {}\n", item.name, item.detail));
            }
            out.push_str(&format!(
                "\n{} of {} checks passed\n",
                verify.items.iter().filter(|i| i.passed).count(),
                verify.items.len()
            ));
        }
    }
    out.push_str(&format!("\n_({} ms, schema {})_\n", report.timing_ms, report.schema));
    out
}

fn render_csv(report: &Report) -> String {
    let mut out = String::new();
    match &report.payload {
        Payload::GroupInfo(info) => {
            out.push_str("key,value\n");
            out.push_str(&format!("label,{}\n", info.label));
            out.push_str(&format!("order,{}\n", info.order));
            out.push_str(&format!("abelian,{}\n", info.abelian));
            out.push_str(&format!("exponent,{}\n", info.exponent));
            out.push_str(&format!("center_order,{}\n", info.center_order));
            if let Some(t) = &info.order12_type {
                out.push_str(&format!("order12_type,{t}\n"));
            }
            if let Some(a) = info.automorphism_order {
                out.push_str(&format!("automorphism_order,{a}\n"));
            }
        }
        Payload::Regular(census) => {
            out.push_str("additive,multiplicative,kernel,count\n");
            for row in &census.rows {
                out.push_str(&format!(
                    "{},{},,{}\n",
                    row.additive, row.multiplicative, row.count
                ));
            }
        }
        Payload::Braces(payload) => {
            out.push_str("additive,multiplicative,kernel,count\n");
            // Long format: one row per (E, F, kernel) with the number of
            // classes in that bucket.
            let mut keys: Vec<(String, String, String)> = Vec::new();
            for class in &payload.classes {
                let key = (
                    class.additive.clone(),
                    class.f_label.clone(),
                    class.kernel_label.clone(),
                );
                if !keys.contains(&key) {
                    keys.push(key);
                }
            }
            for (e, f, k) in keys {
                let count = payload
                    .classes
                    .iter()
                    .filter(|c| c.additive == e && c.f_label == f && c.kernel_label == k)
                    .count();
                out.push_str(&format!("{e},{f},{k},{count}\n"));
            }
        }
        Payload::Hgs(payload) => {
            out.push_str("n_type,multiplicative,kernel,count\n");
            for table in &payload.tables {
                for row in &table.rows {
                    for (kernel, cell) in table.kernel_columns.iter().zip(&row.cells) {
                        if let Some(v) = cell {
                            out.push_str(&format!(
                                "{},{},{},{}\n",
                                table.n_label, row.f_label, kernel, v
                            ));
                        }
                    }
                }
            }
        }
        Payload::Verify(verify) => {
            out.push_str("item,passed,detail\n");
            for item in &verify.items {
                out.push_str(&format!(
                    "{},{},{}\n",
                    item.name,
                    item.passed,
                    item.detail.replace(',', ";")
                ));
            }
        }
    }
    out
}
