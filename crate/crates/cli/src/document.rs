//! The on-disk table document: a single JSON object per table.
//!
//! Either `shifts` (rows of the Betti table) or `raw_polynomial`
//! (coefficients of a bare characteristic polynomial) must be present;
//! when both are, they must agree.

use std::fmt;

use serde::{Deserialize, Serialize};

use betti_core::{BettiTable, BigInt, IntPoly};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TableDocument {
    #[serde(default)]
    pub name: Option<String>,
    pub global_dimension: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shifts: Option<Vec<Vec<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub raw_polynomial: Option<Vec<i64>>,
}

/// A validated document: the table when shifts were given, and in every
/// case the characteristic polynomial to analyze.
#[derive(Debug, Clone)]
pub struct LoadedDocument {
    pub name: String,
    pub gldim: usize,
    pub table: Option<BettiTable>,
    pub poly: IntPoly,
}

#[derive(Debug)]
pub enum DocumentError {
    Json(serde_json::Error),
    Invalid(String),
}

impl fmt::Display for DocumentError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocumentError::Json(err) => write!(f, "malformed JSON: {err}"),
            DocumentError::Invalid(reason) => write!(f, "invalid document: {reason}"),
        }
    }
}

impl std::error::Error for DocumentError {}

pub fn parse_document(text: &str) -> Result<LoadedDocument, DocumentError> {
    let document: TableDocument = serde_json::from_str(text).map_err(DocumentError::Json)?;
    load_document(document)
}

pub fn load_document(document: TableDocument) -> Result<LoadedDocument, DocumentError> {
    let gldim = document.global_dimension as usize;
    let name = document.name.clone().unwrap_or_default();

    let table = match &document.shifts {
        Some(shifts) => {
            let rows: Vec<Vec<usize>> = shifts
                .iter()
                .map(|row| row.iter().map(|&s| s as usize).collect())
                .collect();
            let table = BettiTable::new(rows)
                .map_err(|err| DocumentError::Invalid(format!("field 'shifts': {err}")))?;
            if table.gldim() != gldim {
                return Err(DocumentError::Invalid(format!(
                    "field 'global_dimension': {} rows imply global dimension {}, document says {gldim}",
                    shifts.len(),
                    table.gldim()
                )));
            }
            Some(table)
        }
        None => None,
    };

    let raw = match &document.raw_polynomial {
        Some(coeffs) => {
            let poly = IntPoly::from_ints(coeffs);
            if poly.constant_term() != BigInt::from(1) {
                return Err(DocumentError::Invalid(
                    "field 'raw_polynomial': constant term must be 1".to_string(),
                ));
            }
            Some(poly)
        }
        None => None,
    };

    let poly = match (&table, raw) {
        (Some(table), Some(raw)) => {
            let computed = table.characteristic_polynomial();
            if computed != raw {
                return Err(DocumentError::Invalid(format!(
                    "fields 'shifts' and 'raw_polynomial' disagree: shifts give {computed}, document says {raw}"
                )));
            }
            computed
        }
        (Some(table), None) => table.characteristic_polynomial(),
        (None, Some(raw)) => raw,
        (None, None) => {
            return Err(DocumentError::Invalid(
                "one of 'shifts' or 'raw_polynomial' is required".to_string(),
            ))
        }
    };

    Ok(LoadedDocument {
        name,
        gldim,
        table,
        poly,
    })
}

/// FNV-1a over the raw document bytes, as a stable input fingerprint.
pub fn digest(bytes: &[u8]) -> String {
    let mut hash: u64 = 0xcbf2_9ce4_8422_2325;
    for &byte in bytes {
        hash ^= u64::from(byte);
        hash = hash.wrapping_mul(0x0000_0100_0000_01b3);
    }
    format!("{hash:016x}")
}
