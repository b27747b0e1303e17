//! Betti tables of minimal free resolutions and their per-table invariants.

use std::fmt;

use crate::cyclotomic::cyclotomic_factorization;
use crate::poly::IntPoly;
use crate::series::{series_inverse, SeriesPrefix};

/// The shift multisets of a finite minimal free resolution of the trivial
/// module: row `i` lists the twists of the free summands in homological
/// degree `i`, sorted ascending.
///
/// Structural invariants, enforced at construction: row 0 is exactly `{0}`
/// (the free cover of the ground field), every later row is nonempty, and
/// every shift in rows `i >= 1` is strictly positive (minimality).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BettiTable {
    rows: Vec<Vec<usize>>,
    name: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableError {
    NoRows,
    /// Row 0 must be the single shift 0.
    BadBaseRow,
    EmptyRow {
        degree: usize,
    },
    /// Rows past degree 0 must have strictly positive shifts.
    ZeroShift {
        degree: usize,
    },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::NoRows => write!(f, "a table needs at least homological degree 0"),
            TableError::BadBaseRow => write!(f, "row 0 must be exactly [0]"),
            TableError::EmptyRow { degree } => {
                write!(f, "row {degree} has no shifts")
            }
            TableError::ZeroShift { degree } => {
                write!(f, "row {degree} contains a non-positive shift")
            }
        }
    }
}

impl std::error::Error for TableError {}

/// Growth class of the coefficient sequence of the reciprocal series.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GkDimension {
    Finite(usize),
    Infinite,
}

impl GkDimension {
    pub fn is_finite(&self) -> bool {
        matches!(self, GkDimension::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match self {
            GkDimension::Finite(m) => Some(*m),
            GkDimension::Infinite => None,
        }
    }
}

impl fmt::Display for GkDimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GkDimension::Finite(m) => write!(f, "{m}"),
            GkDimension::Infinite => write!(f, "infinite"),
        }
    }
}

/// Outcome of the palindromic-resolution check: ranks mirror across the
/// table and shifts in mirrored rows pair up to a common top twist `l`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinSymmetry {
    Holds { as_index: usize },
    Fails(GorensteinFailure),
}

impl GorensteinSymmetry {
    pub fn holds(&self) -> bool {
        matches!(self, GorensteinSymmetry::Holds { .. })
    }

    pub fn as_index(&self) -> Option<usize> {
        match self {
            GorensteinSymmetry::Holds { as_index } => Some(*as_index),
            GorensteinSymmetry::Fails(_) => None,
        }
    }
}

/// First violated clause of the symmetry check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GorensteinFailure {
    TopRowNotSingleton {
        rank: usize,
    },
    RankAsymmetry {
        degree: usize,
        rank: usize,
        mirror_rank: usize,
    },
    PairingMismatch {
        degree: usize,
        position: usize,
        sum: usize,
        as_index: usize,
    },
}

impl fmt::Display for GorensteinFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GorensteinFailure::TopRowNotSingleton { rank } => {
                write!(f, "top row has rank {rank}, expected a single shift")
            }
            GorensteinFailure::RankAsymmetry {
                degree,
                rank,
                mirror_rank,
            } => write!(
                f,
                "rank {rank} in degree {degree} differs from mirrored rank {mirror_rank}"
            ),
            GorensteinFailure::PairingMismatch {
                degree,
                position,
                sum,
                as_index,
            } => write!(
                f,
                "pairing in degree {degree} position {position} sums to {sum}, expected {as_index}"
            ),
        }
    }
}

impl BettiTable {
    /// Builds a table from raw rows; each row is sorted into ascending
    /// order, so callers may pass multisets in any order.
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableError> {
        if rows.is_empty() {
            return Err(TableError::NoRows);
        }
        if rows[0] != [0] {
            return Err(TableError::BadBaseRow);
        }
        let mut rows = rows;
        for (degree, row) in rows.iter_mut().enumerate() {
            if row.is_empty() {
                return Err(TableError::EmptyRow { degree });
            }
            if degree > 0 && row.contains(&0) {
                return Err(TableError::ZeroShift { degree });
            }
            row.sort_unstable();
        }
        Ok(BettiTable { rows, name: None })
    }

    pub fn named(name: impl Into<String>, rows: Vec<Vec<usize>>) -> Result<Self, TableError> {
        let mut table = BettiTable::new(rows)?;
        table.name = Some(name.into());
        Ok(table)
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    /// Global dimension: the length of the resolution.
    pub fn gldim(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn row(&self, degree: usize) -> &[usize] {
        &self.rows[degree]
    }

    /// Rank of the free module in the given homological degree.
    pub fn rank(&self, degree: usize) -> usize {
        self.rows[degree].len()
    }

    pub fn total_rank(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    /// Rank of row 1, the minimal number of algebra generators.
    pub fn generators(&self) -> usize {
        self.rows.get(1).map_or(0, Vec::len)
    }

    pub fn max_shift(&self) -> usize {
        self.rows
            .iter()
            .filter_map(|row| row.last().copied())
            .max()
            .unwrap_or(0)
    }

    /// The alternating shift sum `sum_i (-1)^i sum_s t^{shift}` over the
    /// rows; its reciprocal is the Hilbert series of any algebra realizing
    /// the table.
    pub fn characteristic_polynomial(&self) -> IntPoly {
        let mut coeffs = vec![num_bigint::BigInt::from(0); self.max_shift() + 1];
        for (degree, row) in self.rows.iter().enumerate() {
            let sign = if degree % 2 == 0 { 1 } else { -1 };
            for &shift in row {
                coeffs[shift] += sign;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    /// First `terms` coefficients of the reciprocal of the characteristic
    /// polynomial, i.e. the dimension sequence a realizing algebra would
    /// have. Negative entries or a gap mean no such algebra exists.
    pub fn hilbert_prefix(&self, terms: usize) -> SeriesPrefix {
        series_inverse(&self.characteristic_polynomial(), terms)
            .expect("characteristic polynomial has constant term 1")
    }

    /// Finite iff the characteristic polynomial factors into cyclotomics;
    /// the value is then the multiplicity of `t = 1`.
    pub fn gk_dimension(&self) -> GkDimension {
        match cyclotomic_factorization(&self.characteristic_polynomial()) {
            Ok(factorization) => GkDimension::Finite(factorization.multiplicity_at_one),
            Err(_) => GkDimension::Infinite,
        }
    }

    /// Every row's largest shift is at most the next row's smallest.
    pub fn is_monotonic(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[0].last() <= pair[1].first())
    }

    /// Every row is generated in a single degree.
    pub fn is_pure(&self) -> bool {
        self.rows.iter().all(|row| row.first() == row.last())
    }

    /// Row minima strictly increase, as they must in any minimal
    /// resolution.
    pub fn is_minimal(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[0].first() < pair[1].first())
    }

    /// Row maxima strictly increase; holds whenever the table is
    /// Gorenstein-symmetric and minimal.
    pub fn maxima_strictly_increase(&self) -> bool {
        self.rows
            .windows(2)
            .all(|pair| pair[0].last() < pair[1].last())
    }

    /// Checks the palindromic shape: the top row is a single shift `l`,
    /// mirrored rows have equal rank, and ascending position `s` pairs
    /// with descending position so that each pair of shifts sums to `l`.
    pub fn gorenstein_symmetry(&self) -> GorensteinSymmetry {
        let d = self.gldim();
        let top = self.row(d);
        if top.len() != 1 {
            return GorensteinSymmetry::Fails(GorensteinFailure::TopRowNotSingleton {
                rank: top.len(),
            });
        }
        let as_index = top[0];
        for degree in 0..=d {
            let rank = self.rank(degree);
            let mirror_rank = self.rank(d - degree);
            if rank != mirror_rank {
                return GorensteinSymmetry::Fails(GorensteinFailure::RankAsymmetry {
                    degree,
                    rank,
                    mirror_rank,
                });
            }
        }
        for degree in 0..=d {
            let row = self.row(degree);
            let mirror = self.row(d - degree);
            let n = row.len();
            for s in 0..n {
                let sum = row[s] + mirror[n - 1 - s];
                if sum != as_index {
                    return GorensteinSymmetry::Fails(GorensteinFailure::PairingMismatch {
                        degree,
                        position: s + 1,
                        sum,
                        as_index,
                    });
                }
            }
        }
        GorensteinSymmetry::Holds { as_index }
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (degree, row) in self.rows.iter().enumerate() {
            if degree > 0 {
                write!(f, " | ")?;
            }
            write!(f, "[")?;
            for (k, shift) in row.iter().enumerate() {
                if k > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{shift}")?;
            }
            write!(f, "]")?;
        }
        Ok(())
    }
}
