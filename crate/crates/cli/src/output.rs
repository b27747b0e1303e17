//! Report serialization: a flat JSON object per report (one line each in
//! machine mode) and a line-oriented text rendering of the same values.

use serde::{Deserialize, Serialize};

use betti_core::{BettiTable, GorensteinSymmetry, InvariantReport, PolyReport};

use crate::document::LoadedDocument;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictDocument {
    pub theorem: String,
    pub status: String,
}

/// Every report field flattened to plain scalars and lists. Series terms
/// are decimal strings because they can exceed any fixed-width integer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub input_digest: String,
    pub name: String,
    pub global_dimension: u32,
    pub char_poly: Vec<i64>,
    pub top_degree: u32,
    pub hilbert_prefix: Vec<String>,
    pub hilbert_negative_at: Option<u32>,
    pub hilbert_gap_at: Option<u32>,
    pub gk: Option<u32>,
    pub multiplicity_at_one: u32,
    pub cyclotomic_indices: Option<Vec<u32>>,
    pub weighted: Option<Vec<(u32, u32)>>,
    pub monotonic: Option<bool>,
    pub pure: Option<bool>,
    pub gorenstein_holds: Option<bool>,
    pub as_index: Option<u32>,
    pub gorenstein_failure: Option<String>,
    pub minimal: Option<bool>,
    pub self_reciprocal: Option<bool>,
    pub generators: u32,
    pub sign_changes: u32,
    pub verdicts: Vec<VerdictDocument>,
    pub consistent: bool,
    pub notes: Vec<String>,
}

fn poly_to_i64(poly: &betti_core::IntPoly) -> Vec<i64> {
    poly.coeffs()
        .iter()
        .map(|c| i64::try_from(c).expect("table-scale coefficient fits i64"))
        .collect()
}

fn verdict_documents(verdicts: &[betti_core::Verdict]) -> Vec<VerdictDocument> {
    verdicts
        .iter()
        .map(|v| VerdictDocument {
            theorem: v.theorem.as_str().to_string(),
            status: v.status.as_str().to_string(),
        })
        .collect()
}

fn series_strings(prefix: &betti_core::SeriesPrefix) -> Vec<String> {
    prefix.terms().iter().map(|t| t.to_string()).collect()
}

pub fn from_table_report(
    doc: &LoadedDocument,
    report: &InvariantReport,
    input_digest: String,
) -> ReportDocument {
    let (gorenstein_holds, as_index, gorenstein_failure) = match &report.gorenstein {
        GorensteinSymmetry::Holds { as_index } => (Some(true), Some(*as_index as u32), None),
        GorensteinSymmetry::Fails(reason) => (Some(false), None, Some(reason.to_string())),
    };
    ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input_digest,
        name: doc.name.clone(),
        global_dimension: report.gldim as u32,
        char_poly: poly_to_i64(&report.char_poly),
        top_degree: report.top_degree as u32,
        hilbert_prefix: series_strings(&report.hilbert),
        hilbert_negative_at: report.hilbert.first_negative().map(|i| i as u32),
        hilbert_gap_at: report.hilbert.gap_index().map(|i| i as u32),
        gk: report.gk.finite().map(|m| m as u32),
        multiplicity_at_one: report.char_poly.multiplicity_at_one() as u32,
        cyclotomic_indices: report
            .factorization
            .as_ref()
            .map(|f| f.cyclotomic_indices.iter().map(|&n| n as u32).collect()),
        weighted: report
            .weighted
            .as_ref()
            .map(|w| w.iter().map(|&(i, n)| (i as u32, n as u32)).collect()),
        monotonic: Some(report.monotonic),
        pure: Some(report.pure),
        gorenstein_holds,
        as_index,
        gorenstein_failure,
        minimal: Some(report.minimal),
        self_reciprocal: None,
        generators: report.generators as u32,
        sign_changes: report.sign_change_count as u32,
        verdicts: verdict_documents(&report.verdicts),
        consistent: report.is_consistent(),
        notes: report.inconsistencies(),
    }
}

pub fn from_poly_report(
    doc: &LoadedDocument,
    report: &PolyReport,
    input_digest: String,
) -> ReportDocument {
    let mut notes = report.inconsistencies();
    if report.monotonic_excluded {
        notes.push(format!(
            "{} sign changes exceed global dimension {}: no monotonic table has this polynomial",
            report.sign_change_count, report.gldim
        ));
    }
    ReportDocument {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        input_digest,
        name: doc.name.clone(),
        global_dimension: report.gldim as u32,
        char_poly: poly_to_i64(&report.char_poly),
        top_degree: report.top_degree as u32,
        hilbert_prefix: series_strings(&report.hilbert),
        hilbert_negative_at: report.hilbert.first_negative().map(|i| i as u32),
        hilbert_gap_at: report.hilbert.gap_index().map(|i| i as u32),
        gk: report.gk.finite().map(|m| m as u32),
        multiplicity_at_one: report.multiplicity_at_one as u32,
        cyclotomic_indices: report
            .factorization
            .as_ref()
            .map(|f| f.cyclotomic_indices.iter().map(|&n| n as u32).collect()),
        weighted: report
            .weighted
            .as_ref()
            .map(|w| w.iter().map(|&(i, n)| (i as u32, n as u32)).collect()),
        monotonic: if report.monotonic_excluded {
            Some(false)
        } else {
            None
        },
        pure: None,
        gorenstein_holds: None,
        as_index: None,
        gorenstein_failure: None,
        minimal: None,
        self_reciprocal: Some(report.self_reciprocal),
        generators: report.generator_count_hint as u32,
        sign_changes: report.sign_change_count as u32,
        verdicts: verdict_documents(&report.verdicts),
        consistent: report.is_consistent(),
        notes,
    }
}

/// Text rendering of the same values the JSON carries, one `key: value`
/// pair per line.
pub fn render_text(doc: &ReportDocument, table: Option<&BettiTable>) -> String {
    let mut out = String::new();
    let mut line = |text: String| {
        out.push_str(&text);
        out.push('\n');
    };
    line(format!("name: {}", doc.name));
    line(format!("global dimension: {}", doc.global_dimension));
    if let Some(table) = table {
        line(format!("rows: {table}"));
    }
    line(format!(
        "characteristic polynomial: {}",
        betti_core::IntPoly::from_ints(&doc.char_poly)
    ));
    line(format!("coefficients: {:?}", doc.char_poly));
    line(format!("top degree: {}", doc.top_degree));
    match (&doc.gk, &doc.cyclotomic_indices) {
        (Some(gk), Some(indices)) => {
            line(format!("gk dimension: {gk}"));
            line(format!(
                "factorization: {}",
                betti_core::CycFactorization {
                    multiplicity_at_one: *gk as usize,
                    cyclotomic_indices: indices.iter().map(|&n| n as usize).collect(),
                }
            ));
        }
        _ => line("gk dimension: infinite".to_string()),
    }
    line(format!("multiplicity at one: {}", doc.multiplicity_at_one));
    let shown = doc.hilbert_prefix.len().min(12);
    line(format!(
        "hilbert prefix: {}{}",
        doc.hilbert_prefix[..shown].join(", "),
        if doc.hilbert_prefix.len() > shown {
            ", ..."
        } else {
            ""
        }
    ));
    if let Some(index) = doc.hilbert_negative_at {
        line(format!("hilbert negative at: {index}"));
    }
    if let Some(index) = doc.hilbert_gap_at {
        line(format!("hilbert gap at: {index}"));
    }
    if let Some(weighted) = &doc.weighted {
        let factors: Vec<String> = weighted
            .iter()
            .map(|(i, n)| {
                let base = if *i == 1 {
                    "(1-t)".to_string()
                } else {
                    format!("(1-t^{i})")
                };
                if *n == 1 {
                    base
                } else {
                    format!("{base}^{n}")
                }
            })
            .collect();
        line(format!("weighted series: 1/({})", factors.join("")));
    }
    match doc.monotonic {
        Some(value) => line(format!("monotonic: {value}")),
        None => line("monotonic: unknown".to_string()),
    }
    match doc.pure {
        Some(value) => line(format!("pure: {value}")),
        None => line("pure: unknown".to_string()),
    }
    match (doc.gorenstein_holds, doc.as_index, &doc.gorenstein_failure) {
        (Some(true), Some(l), _) => line(format!("gorenstein: holds, l = {l}")),
        (Some(false), _, Some(reason)) => line(format!("gorenstein: fails ({reason})")),
        _ => line("gorenstein: unknown".to_string()),
    }
    match doc.minimal {
        Some(value) => line(format!("minimal: {value}")),
        None => line("minimal: unknown".to_string()),
    }
    if let Some(value) = doc.self_reciprocal {
        line(format!("self reciprocal: {value}"));
    }
    line(format!("generators: {}", doc.generators));
    line(format!("sign changes: {}", doc.sign_changes));
    for verdict in &doc.verdicts {
        line(format!("verdict {}: {}", verdict.theorem, verdict.status));
    }
    line(format!("consistent: {}", doc.consistent));
    for note in &doc.notes {
        line(format!("note: {note}"));
    }
    out
}
