//! `betti` — exact invariants of connected graded algebras from the Betti
//! data of a minimal free resolution.
//!
//! Exit codes: 0 all applicable verdicts pass and the data is consistent;
//! 1 a verdict failed, the series is inconsistent, or a corpus entry
//! mismatched; 2 malformed input; 3 search budget exceeded.

mod corpus;
mod document;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use betti_core::{
    analyze, analyze_polynomial, enumerate_tables, Candidate, Constraints, EnumerateError,
    SearchSpec,
};

use document::{digest, parse_document};

#[derive(Parser)]
#[command(
    name = "betti",
    version,
    about = "Invariants of graded algebras from Betti tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze a table document and report every invariant and verdict
    Analyze {
        /// Path to a JSON table document
        path: PathBuf,
        /// Series prefix length
        #[arg(long, default_value_t = 64)]
        terms: usize,
        /// Output format: human text or line-delimited JSON
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Enumerate candidate tables of one global dimension over a bounded
    /// grid, applying the structural necessary conditions
    Enumerate {
        #[arg(long)]
        gldim: usize,
        /// Largest top shift to search
        #[arg(long, default_value_t = 8)]
        l_max: usize,
        /// Largest rank per homological degree
        #[arg(long, default_value_t = 6)]
        mult_max: usize,
        /// Series prefix length; defaults to max(64, 2 * l_max)
        #[arg(long)]
        terms: Option<usize>,
        /// Require row 1 to sit entirely in shift 1
        #[arg(long)]
        degree_one: bool,
        /// Require row 2 to sit entirely in shift 2
        #[arg(long)]
        quadratic: bool,
        /// Search only Gorenstein-symmetric tables
        #[arg(long)]
        gorenstein: bool,
        /// Keep only monotonic tables
        #[arg(long)]
        monotonic: bool,
    },
    /// Check the bundled reference tables against their expected invariants
    Corpus,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match cli.command {
        Command::Analyze {
            path,
            terms,
            format,
        } => cmd_analyze(&path, terms, format),
        Command::Enumerate {
            gldim,
            l_max,
            mult_max,
            terms,
            degree_one,
            quadratic,
            gorenstein,
            monotonic,
        } => {
            let mut spec = SearchSpec::new(gldim);
            spec.l_max = l_max;
            spec.mult_max = mult_max;
            spec.terms = terms.unwrap_or_else(|| 64.max(2 * l_max));
            spec.constraints = Constraints {
                degree_one,
                quadratic,
                require_gorenstein: gorenstein,
                require_monotonic: monotonic,
                require_cyclotomic: true,
                require_positive_nogap: true,
            };
            cmd_enumerate(&spec)
        }
        Command::Corpus => cmd_corpus(),
    };
    ExitCode::from(code)
}

fn cmd_analyze(path: &PathBuf, terms: usize, format: Format) -> u8 {
    let bytes = match std::fs::read(path) {
        Ok(bytes) => bytes,
        Err(err) => {
            eprintln!("error: cannot read {}: {err}", path.display());
            return 2;
        }
    };
    let text = match String::from_utf8(bytes) {
        Ok(text) => text,
        Err(err) => {
            eprintln!("error: {} is not UTF-8: {err}", path.display());
            return 2;
        }
    };
    let doc = match parse_document(&text) {
        Ok(doc) => doc,
        Err(err) => {
            eprintln!("error: {}: {err}", path.display());
            return 2;
        }
    };
    let terms = terms.max(1);
    let input_digest = digest(text.as_bytes());

    let report_doc = match &doc.table {
        Some(table) => {
            let report = analyze(table, terms);
            output::from_table_report(&doc, &report, input_digest)
        }
        None => match analyze_polynomial(&doc.poly, doc.gldim, terms) {
            Ok(report) => output::from_poly_report(&doc, &report, input_digest),
            Err(err) => {
                eprintln!("error: {}: {err}", path.display());
                return 2;
            }
        },
    };

    match format {
        Format::Text => print!("{}", output::render_text(&report_doc, doc.table.as_ref())),
        Format::Json => println!(
            "{}",
            serde_json::to_string(&report_doc).expect("report serializes")
        ),
    }
    let failed = report_doc
        .verdicts
        .iter()
        .any(|verdict| verdict.status == "fail");
    if failed || !report_doc.consistent {
        1
    } else {
        0
    }
}

fn candidate_summary(candidate: &Candidate) -> String {
    let report = &candidate.report;
    let mut flags = Vec::new();
    if report.monotonic {
        flags.push("monotonic");
    }
    if report.pure {
        flags.push("pure");
    }
    let gorenstein = match report.gorenstein.as_index() {
        Some(l) => format!("l={l}"),
        None => "asymmetric".to_string(),
    };
    format!(
        "[{}]  p = {}  gk={} {} n1={}{}{}",
        candidate.table,
        report.char_poly,
        report.gk,
        gorenstein,
        report.generators,
        if flags.is_empty() { "" } else { " " },
        flags.join(" ")
    )
}

fn cmd_enumerate(spec: &SearchSpec) -> u8 {
    match enumerate_tables(spec) {
        Ok(candidates) => {
            for candidate in &candidates {
                println!("{}", candidate_summary(candidate));
            }
            println!("{} candidate(s)", candidates.len());
            0
        }
        Err(EnumerateError::InvalidSpec(err)) => {
            eprintln!("error: {err}");
            2
        }
        Err(err @ EnumerateError::BudgetExceeded { .. }) => {
            eprintln!("error: {err}");
            3
        }
    }
}

fn cmd_corpus() -> u8 {
    let (ok, lines) = corpus::run(&corpus::expectations(), 64);
    for line in lines {
        println!("{line}");
    }
    if ok {
        0
    } else {
        1
    }
}
