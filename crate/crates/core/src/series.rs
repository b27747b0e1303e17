//! Formal power-series inversion of integer polynomials.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPoly;

/// The first `N` coefficients of `1 / p(t)` for a polynomial `p` with
/// constant term 1, together with gap diagnostics.
///
/// A *gap* is a zero coefficient followed by a later nonzero one. For a
/// connected algebra generated in degree one the dimension sequence can
/// never recover after hitting zero, so a gap certifies that no such
/// algebra realizes the series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesPrefix {
    terms: Vec<BigInt>,
    source: IntPoly,
    gap_index: Option<usize>,
}

impl SeriesPrefix {
    pub fn terms(&self) -> &[BigInt] {
        &self.terms
    }

    /// The inverted polynomial.
    pub fn source(&self) -> &IntPoly {
        &self.source
    }

    /// Index of the first zero term that is followed by a nonzero one.
    pub fn gap_index(&self) -> Option<usize> {
        self.gap_index
    }

    /// Index of the first negative term, if any.
    pub fn first_negative(&self) -> Option<usize> {
        self.terms.iter().position(|t| t.is_negative())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesError {
    /// Inversion needs constant term exactly 1 (the dimension of the ground
    /// field in degree zero).
    ConstantTermNotOne(BigInt),
}

impl fmt::Display for SeriesError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SeriesError::ConstantTermNotOne(c) => {
                write!(f, "series inversion requires constant term 1, got {c}")
            }
        }
    }
}

impl std::error::Error for SeriesError {}

/// First `terms` coefficients of the formal inverse `1 / p(t)`.
///
/// Uses the convolution recurrence: `a_0 = 1` and
/// `a_n = -sum_{k=1..min(n, deg p)} p_k * a_{n-k}`.
pub fn series_inverse(p: &IntPoly, terms: usize) -> Result<SeriesPrefix, SeriesError> {
    assert!(terms >= 1, "a series prefix has at least one term");
    if !p.constant_term().is_one() {
        return Err(SeriesError::ConstantTermNotOne(p.constant_term()));
    }
    let degree = p.degree().expect("constant term 1 means nonzero");
    let mut coefficients = Vec::with_capacity(terms);
    coefficients.push(BigInt::one());
    for n in 1..terms {
        let mut acc = BigInt::zero();
        for k in 1..=degree.min(n) {
            acc += p.coeff(k) * &coefficients[n - k];
        }
        coefficients.push(-acc);
    }
    let gap_index = find_gap(&coefficients);
    Ok(SeriesPrefix {
        terms: coefficients,
        source: p.clone(),
        gap_index,
    })
}

fn find_gap(terms: &[BigInt]) -> Option<usize> {
    let last_nonzero = terms.iter().rposition(|t| !t.is_zero())?;
    terms[..last_nonzero].iter().position(|t| t.is_zero())
}
