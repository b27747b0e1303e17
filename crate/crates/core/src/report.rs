//! Invariant reports: every computed quantity for one table, plus pass/fail
//! verdicts for the structural theorems that relate them.
//!
//! Verdicts are three-valued. A theorem whose hypotheses the table does not
//! meet is `NotApplicable`, never a vacuous pass; an applicable theorem
//! either passes or fails. A failing verdict means the table cannot come
//! from an algebra of the hypothesized class.

use std::fmt;

use num_traits::Signed;

use crate::betti::{BettiTable, GkDimension, GorensteinSymmetry};
use crate::cyclotomic::{cyclotomic_factorization, CycFactorization};
use crate::poly::IntPoly;
use crate::series::{series_inverse, SeriesError, SeriesPrefix};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TheoremId {
    /// Global dimension and finite GK dimension agree mod 2 for
    /// Gorenstein-symmetric tables.
    Parity,
    /// Monotonic tables with finite GK dimension have GK dimension at most
    /// the global dimension.
    GkBound,
    /// Monotonic tables with GK dimension equal to the global dimension
    /// have at most that many generators.
    GeneratorBound,
    /// Monotonic tables whose series is that of a weighted polynomial ring
    /// have at most `gldim` generators.
    WeightedGeneratorBound,
    /// Gorenstein-symmetric tables have a self-reciprocal characteristic
    /// polynomial with sign `(-1)^gldim`.
    SelfReciprocity,
    /// Koszul-shaped Gorenstein tables with GK dimension at least
    /// `gldim - 1` have characteristic polynomial `(1 - t)^gldim`.
    KoszulCorollary,
}

impl TheoremId {
    pub const ALL: [TheoremId; 6] = [
        TheoremId::Parity,
        TheoremId::GkBound,
        TheoremId::GeneratorBound,
        TheoremId::WeightedGeneratorBound,
        TheoremId::SelfReciprocity,
        TheoremId::KoszulCorollary,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            TheoremId::Parity => "parity",
            TheoremId::GkBound => "gk-bound",
            TheoremId::GeneratorBound => "generator-bound",
            TheoremId::WeightedGeneratorBound => "weighted-generator-bound",
            TheoremId::SelfReciprocity => "self-reciprocity",
            TheoremId::KoszulCorollary => "koszul-corollary",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VerdictStatus {
    Pass,
    Fail,
    NotApplicable,
}

impl VerdictStatus {
    pub fn as_str(&self) -> &'static str {
        match self {
            VerdictStatus::Pass => "pass",
            VerdictStatus::Fail => "fail",
            VerdictStatus::NotApplicable => "not-applicable",
        }
    }

    fn applicable(pass: bool) -> VerdictStatus {
        if pass {
            VerdictStatus::Pass
        } else {
            VerdictStatus::Fail
        }
    }
}

impl fmt::Display for VerdictStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub theorem: TheoremId,
    pub status: VerdictStatus,
}

/// All computed invariants and theorem verdicts for one table.
#[derive(Clone, Debug)]
pub struct InvariantReport {
    pub gldim: usize,
    pub char_poly: IntPoly,
    /// Largest shift in the table. Coincides with the top twist `l` when
    /// the table is Gorenstein-symmetric, but is tracked separately so we
    /// never call it `l` otherwise.
    pub top_degree: usize,
    pub hilbert: SeriesPrefix,
    pub gk: GkDimension,
    pub factorization: Option<CycFactorization>,
    /// Weighted-polynomial-ring decomposition of the characteristic
    /// polynomial, when one exists.
    pub weighted: Option<Vec<(usize, usize)>>,
    pub monotonic: bool,
    pub pure: bool,
    pub gorenstein: GorensteinSymmetry,
    pub minimal: bool,
    pub generators: usize,
    pub sign_change_count: usize,
    pub verdicts: Vec<Verdict>,
}

impl InvariantReport {
    pub fn verdict(&self, theorem: TheoremId) -> VerdictStatus {
        self.verdicts
            .iter()
            .find(|v| v.theorem == theorem)
            .map(|v| v.status)
            .unwrap_or(VerdictStatus::NotApplicable)
    }

    /// Reasons this table cannot come from a graded algebra of the
    /// hypothesized class: failed verdicts and series pathologies.
    pub fn inconsistencies(&self) -> Vec<String> {
        let mut reasons = Vec::new();
        for verdict in &self.verdicts {
            if verdict.status == VerdictStatus::Fail {
                reasons.push(format!("verdict {} failed", verdict.theorem));
            }
        }
        if let Some(index) = self.hilbert.first_negative() {
            reasons.push(format!("series coefficient at index {index} is negative"));
        }
        if let Some(index) = self.hilbert.gap_index() {
            reasons.push(format!(
                "series has a gap at index {index} (zero followed by nonzero)"
            ));
        }
        reasons
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies().is_empty()
    }
}

/// Whether every row `i` is generated purely in shift `i`.
pub fn is_koszul_shaped(table: &BettiTable) -> bool {
    table
        .rows()
        .iter()
        .enumerate()
        .all(|(degree, row)| row.iter().all(|&shift| shift == degree))
}

/// Computes every invariant and verdict for one table.
pub fn analyze(table: &BettiTable, terms: usize) -> InvariantReport {
    let gldim = table.gldim();
    let char_poly = table.characteristic_polynomial();
    let hilbert = table.hilbert_prefix(terms);
    let factorization = cyclotomic_factorization(&char_poly).ok();
    let gk = match &factorization {
        Some(f) => GkDimension::Finite(f.multiplicity_at_one),
        None => GkDimension::Infinite,
    };
    let weighted = char_poly.weighted_decompose().ok();
    let monotonic = table.is_monotonic();
    let pure = table.is_pure();
    let gorenstein = table.gorenstein_symmetry();
    let minimal = table.is_minimal();
    let generators = table.generators();
    let sign_change_count = char_poly.sign_changes();

    let mut verdicts = Vec::with_capacity(TheoremId::ALL.len());

    let parity = match (gorenstein.holds(), gk.finite()) {
        (true, Some(m)) => VerdictStatus::applicable(m % 2 == gldim % 2),
        _ => VerdictStatus::NotApplicable,
    };
    verdicts.push(Verdict {
        theorem: TheoremId::Parity,
        status: parity,
    });

    let gk_bound = match (monotonic, gk.finite()) {
        (true, Some(m)) => VerdictStatus::applicable(m <= gldim),
        _ => VerdictStatus::NotApplicable,
    };
    verdicts.push(Verdict {
        theorem: TheoremId::GkBound,
        status: gk_bound,
    });

    let generator_bound = match (monotonic, gk.finite()) {
        (true, Some(m)) if m == gldim => VerdictStatus::applicable(generators <= gldim),
        _ => VerdictStatus::NotApplicable,
    };
    verdicts.push(Verdict {
        theorem: TheoremId::GeneratorBound,
        status: generator_bound,
    });

    let weighted_bound = match (monotonic, &weighted) {
        (true, Some(_)) => VerdictStatus::applicable(generators <= gldim),
        _ => VerdictStatus::NotApplicable,
    };
    verdicts.push(Verdict {
        theorem: TheoremId::WeightedGeneratorBound,
        status: weighted_bound,
    });

    let self_reciprocity = match gorenstein.as_index() {
        Some(as_index) => VerdictStatus::applicable(char_poly.is_self_reciprocal(as_index, gldim)),
        None => VerdictStatus::NotApplicable,
    };
    verdicts.push(Verdict {
        theorem: TheoremId::SelfReciprocity,
        status: self_reciprocity,
    });

    let koszul = match gk.finite() {
        Some(m) if is_koszul_shaped(table) && gorenstein.holds() && m + 1 >= gldim => {
            let binomial_power = if gldim == 0 {
                IntPoly::one()
            } else {
                IntPoly::one_minus_power(1).pow(gldim)
            };
            VerdictStatus::applicable(char_poly == binomial_power)
        }
        _ => VerdictStatus::NotApplicable,
    };
    verdicts.push(Verdict {
        theorem: TheoremId::KoszulCorollary,
        status: koszul,
    });

    InvariantReport {
        gldim,
        char_poly,
        top_degree: table.max_shift(),
        hilbert,
        gk,
        factorization,
        weighted,
        monotonic,
        pure,
        gorenstein,
        minimal,
        generators,
        sign_change_count,
        verdicts,
    }
}

/// Analysis of a bare characteristic polynomial when no table is known.
///
/// Table-shape predicates cannot be evaluated, but the polynomial still
/// determines the GK dimension, the sign-change count, self-reciprocity
/// across its own degree, and hence the parity verdict. More sign changes
/// than the stated global dimension rule out any monotonic table with this
/// polynomial.
#[derive(Clone, Debug)]
pub struct PolyReport {
    pub gldim: usize,
    pub char_poly: IntPoly,
    pub top_degree: usize,
    pub hilbert: SeriesPrefix,
    pub gk: GkDimension,
    pub factorization: Option<CycFactorization>,
    pub weighted: Option<Vec<(usize, usize)>>,
    pub multiplicity_at_one: usize,
    pub sign_change_count: usize,
    /// Self-reciprocity across the polynomial's own degree with sign
    /// `(-1)^gldim` — the shadow of Gorenstein symmetry visible from the
    /// polynomial alone.
    pub self_reciprocal: bool,
    /// Negated linear coefficient: the generator count of any degree-one
    /// generated algebra with this series.
    pub generator_count_hint: usize,
    /// True when the sign changes exceed the global dimension, which no
    /// monotonic table allows.
    pub monotonic_excluded: bool,
    pub verdicts: Vec<Verdict>,
}

impl PolyReport {
    pub fn verdict(&self, theorem: TheoremId) -> VerdictStatus {
        self.verdicts
            .iter()
            .find(|v| v.theorem == theorem)
            .map(|v| v.status)
            .unwrap_or(VerdictStatus::NotApplicable)
    }

    pub fn inconsistencies(&self) -> Vec<String> {
        let mut reasons = Vec::new();
        for verdict in &self.verdicts {
            if verdict.status == VerdictStatus::Fail {
                reasons.push(format!("verdict {} failed", verdict.theorem));
            }
        }
        if let Some(index) = self.hilbert.first_negative() {
            reasons.push(format!("series coefficient at index {index} is negative"));
        }
        if let Some(index) = self.hilbert.gap_index() {
            reasons.push(format!(
                "series has a gap at index {index} (zero followed by nonzero)"
            ));
        }
        reasons
    }

    pub fn is_consistent(&self) -> bool {
        self.inconsistencies().is_empty()
    }
}

/// Analyzes a bare polynomial against a stated global dimension.
pub fn analyze_polynomial(
    poly: &IntPoly,
    gldim: usize,
    terms: usize,
) -> Result<PolyReport, SeriesError> {
    let hilbert = series_inverse(poly, terms)?;
    let top_degree = poly.degree().expect("unit constant term");
    let factorization = cyclotomic_factorization(poly).ok();
    let gk = match &factorization {
        Some(f) => GkDimension::Finite(f.multiplicity_at_one),
        None => GkDimension::Infinite,
    };
    let weighted = poly.weighted_decompose().ok();
    let multiplicity_at_one = poly.multiplicity_at_one();
    let sign_change_count = poly.sign_changes();
    let self_reciprocal = poly.is_self_reciprocal(top_degree, gldim);
    let linear = poly.coeff(1);
    let generator_count_hint = if linear.is_negative() {
        usize::try_from(-linear).unwrap_or(usize::MAX)
    } else {
        0
    };
    let monotonic_excluded = sign_change_count > gldim;

    let parity = match (self_reciprocal, gk.finite()) {
        (true, Some(m)) => VerdictStatus::applicable(m % 2 == gldim % 2),
        _ => VerdictStatus::NotApplicable,
    };
    let verdicts = vec![Verdict {
        theorem: TheoremId::Parity,
        status: parity,
    }];

    Ok(PolyReport {
        gldim,
        char_poly: poly.clone(),
        top_degree,
        hilbert,
        gk,
        factorization,
        weighted,
        multiplicity_at_one,
        sign_change_count,
        self_reciprocal,
        generator_count_hint,
        monotonic_excluded,
        verdicts,
    })
}
