//! The bundled table corpus and its expected invariants. The documents
//! ship inside the binary so the `corpus` check needs no files on disk.

use betti_core::{analyze, analyze_polynomial, GkDimension, TheoremId, VerdictStatus};

use crate::document::{parse_document, LoadedDocument};

pub struct CorpusEntry {
    pub name: &'static str,
    pub json: &'static str,
}

pub const ENTRIES: [CorpusEntry; 6] = [
    CorpusEntry {
        name: "dim3-1331",
        json: include_str!("../corpus/dim3-1331.json"),
    },
    CorpusEntry {
        name: "dim3-1221",
        json: include_str!("../corpus/dim3-1221.json"),
    },
    CorpusEntry {
        name: "dim4-12221",
        json: include_str!("../corpus/dim4-12221.json"),
    },
    CorpusEntry {
        name: "dim4-13431",
        json: include_str!("../corpus/dim4-13431.json"),
    },
    CorpusEntry {
        name: "dim4-14641",
        json: include_str!("../corpus/dim4-14641.json"),
    },
    CorpusEntry {
        name: "dim5-two-generator",
        json: include_str!("../corpus/dim5-two-generator.json"),
    },
];

/// Expected invariants for one corpus entry. `None` marks quantities the
/// entry does not determine (table predicates of the bare polynomial).
#[derive(Clone, Debug)]
pub struct Expectation {
    pub name: &'static str,
    pub char_poly: &'static [i64],
    pub gk: u32,
    pub top_degree: u32,
    pub as_index: Option<u32>,
    pub monotonic: Option<bool>,
    pub pure: Option<bool>,
    pub generators: u32,
    pub sign_changes: u32,
    pub parity: VerdictStatus,
    pub koszul: Option<VerdictStatus>,
}

pub fn expectations() -> Vec<Expectation> {
    vec![
        Expectation {
            name: "dim3-1331",
            char_poly: &[1, -3, 3, -1],
            gk: 3,
            top_degree: 3,
            as_index: Some(3),
            monotonic: Some(true),
            pure: Some(true),
            generators: 3,
            sign_changes: 3,
            parity: VerdictStatus::Pass,
            koszul: Some(VerdictStatus::Pass),
        },
        Expectation {
            name: "dim3-1221",
            char_poly: &[1, -2, 0, 2, -1],
            gk: 3,
            top_degree: 4,
            as_index: Some(4),
            monotonic: Some(true),
            pure: Some(true),
            generators: 2,
            sign_changes: 3,
            parity: VerdictStatus::Pass,
            koszul: Some(VerdictStatus::NotApplicable),
        },
        Expectation {
            name: "dim4-12221",
            char_poly: &[1, -2, 0, 1, 1, 0, -2, 1],
            gk: 4,
            top_degree: 7,
            as_index: Some(7),
            monotonic: Some(true),
            pure: Some(false),
            generators: 2,
            sign_changes: 4,
            parity: VerdictStatus::Pass,
            koszul: Some(VerdictStatus::NotApplicable),
        },
        Expectation {
            name: "dim4-13431",
            char_poly: &[1, -3, 2, 2, -3, 1],
            gk: 4,
            top_degree: 5,
            as_index: Some(5),
            monotonic: Some(true),
            pure: Some(false),
            generators: 3,
            sign_changes: 4,
            parity: VerdictStatus::Pass,
            koszul: Some(VerdictStatus::NotApplicable),
        },
        Expectation {
            name: "dim4-14641",
            char_poly: &[1, -4, 6, -4, 1],
            gk: 4,
            top_degree: 4,
            as_index: Some(4),
            monotonic: Some(true),
            pure: Some(true),
            generators: 4,
            sign_changes: 4,
            parity: VerdictStatus::Pass,
            koszul: Some(VerdictStatus::Pass),
        },
        Expectation {
            name: "dim5-two-generator",
            char_poly: &[1, -2, 0, 1, 1, -1, 0, 1, -1, -1, 0, 2, -1],
            gk: 5,
            top_degree: 12,
            as_index: None,
            monotonic: None,
            pure: None,
            generators: 2,
            sign_changes: 7,
            parity: VerdictStatus::Pass,
            koszul: None,
        },
    ]
}

/// Field-level differences between the analysis of one entry and its
/// expectation; empty means the entry checks out.
pub fn check_entry(entry: &LoadedDocument, expected: &Expectation, terms: usize) -> Vec<String> {
    let mut diffs = Vec::new();
    let mut diff = |field: &str, got: String, want: String| {
        if got != want {
            diffs.push(format!("field {field}: expected {want}, got {got}"));
        }
    };

    let poly_coeffs: Vec<i64> = entry
        .poly
        .coeffs()
        .iter()
        .map(|c| i64::try_from(c).unwrap_or(i64::MAX))
        .collect();
    diff(
        "char_poly",
        format!("{poly_coeffs:?}"),
        format!("{:?}", expected.char_poly),
    );

    match &entry.table {
        Some(table) => {
            let report = analyze(table, terms);
            diff("gk", report.gk.to_string(), expected.gk.to_string());
            diff(
                "top_degree",
                report.top_degree.to_string(),
                expected.top_degree.to_string(),
            );
            if let Some(as_index) = expected.as_index {
                diff(
                    "as_index",
                    format!("{:?}", report.gorenstein.as_index()),
                    format!("{:?}", Some(as_index as usize)),
                );
            }
            if let Some(monotonic) = expected.monotonic {
                diff(
                    "monotonic",
                    report.monotonic.to_string(),
                    monotonic.to_string(),
                );
            }
            if let Some(pure) = expected.pure {
                diff("pure", report.pure.to_string(), pure.to_string());
            }
            diff(
                "generators",
                report.generators.to_string(),
                expected.generators.to_string(),
            );
            diff(
                "sign_changes",
                report.sign_change_count.to_string(),
                expected.sign_changes.to_string(),
            );
            diff(
                "parity",
                report.verdict(TheoremId::Parity).to_string(),
                expected.parity.to_string(),
            );
            if let Some(koszul) = expected.koszul {
                diff(
                    "koszul",
                    report.verdict(TheoremId::KoszulCorollary).to_string(),
                    koszul.to_string(),
                );
            }
            if !report.is_consistent() {
                diffs.push(format!(
                    "entry is inconsistent: {}",
                    report.inconsistencies().join("; ")
                ));
            }
        }
        None => match analyze_polynomial(&entry.poly, entry.gldim, terms) {
            Ok(report) => {
                diff(
                    "gk",
                    match report.gk {
                        GkDimension::Finite(m) => m.to_string(),
                        GkDimension::Infinite => "infinite".to_string(),
                    },
                    expected.gk.to_string(),
                );
                diff(
                    "top_degree",
                    report.top_degree.to_string(),
                    expected.top_degree.to_string(),
                );
                diff(
                    "generators",
                    report.generator_count_hint.to_string(),
                    expected.generators.to_string(),
                );
                diff(
                    "sign_changes",
                    report.sign_change_count.to_string(),
                    expected.sign_changes.to_string(),
                );
                diff(
                    "parity",
                    report.verdict(TheoremId::Parity).to_string(),
                    expected.parity.to_string(),
                );
                if !report.is_consistent() {
                    diffs.push(format!(
                        "entry is inconsistent: {}",
                        report.inconsistencies().join("; ")
                    ));
                }
            }
            Err(err) => diffs.push(format!("analysis failed: {err}")),
        },
    }
    diffs
}

/// Runs the corpus check; returns one line per entry plus an overall flag.
pub fn run(expectations: &[Expectation], terms: usize) -> (bool, Vec<String>) {
    let mut ok = true;
    let mut lines = Vec::new();
    for entry in &ENTRIES {
        let expected = expectations.iter().find(|e| e.name == entry.name);
        let loaded = parse_document(entry.json);
        match (loaded, expected) {
            (Ok(doc), Some(expected)) => {
                let diffs = check_entry(&doc, expected, terms);
                if diffs.is_empty() {
                    lines.push(format!("{}: OK", entry.name));
                } else {
                    ok = false;
                    lines.push(format!("{}: MISMATCH", entry.name));
                    for diff in diffs {
                        lines.push(format!("  {diff}"));
                    }
                }
            }
            (Err(err), _) => {
                ok = false;
                lines.push(format!("{}: unreadable ({err})", entry.name));
            }
            (_, None) => {
                ok = false;
                lines.push(format!("{}: no expectation on file", entry.name));
            }
        }
    }
    (ok, lines)
}
