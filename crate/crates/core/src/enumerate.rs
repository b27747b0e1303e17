//! Exhaustive search for Betti tables of a given global dimension passing
//! the necessary structural filters.
//!
//! The filters are necessary conditions only: survivors are candidate
//! resolution shapes, not certified algebras. Filters run in cost order —
//! strictly increasing row minima, strictly increasing row maxima, the
//! optional monotonicity check, cyclotomic factorization, and finally
//! series positivity with gap detection.
//!
//! Search partitions expand in parallel; a single-threaded merge sorts
//! survivors into the canonical `(top degree, total rank, shifts)` order
//! and removes duplicates, so output is identical for any worker count.

use std::fmt;

use rayon::prelude::*;

use crate::betti::{BettiTable, TableError};
use crate::cyclotomic::cyclotomic_factorization;
use crate::report::{analyze, InvariantReport};

/// Structural requirements imposed during the search.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    /// Row 1 consists of shift 1 only (degree-one generated).
    pub degree_one: bool,
    /// Row 2 consists of shift 2 only (quadratic relations).
    pub quadratic: bool,
    /// Generate only Gorenstein-symmetric tables, by mirroring a lower
    /// half.
    pub require_gorenstein: bool,
    pub require_monotonic: bool,
    /// Keep only tables whose characteristic polynomial factors into
    /// cyclotomics (finite GK dimension).
    pub require_cyclotomic: bool,
    /// Keep only tables whose series prefix is nonnegative with no gap.
    pub require_positive_nogap: bool,
}

/// Grid bounds and constraint flags for one enumeration run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchSpec {
    pub gldim: usize,
    /// Largest admitted top shift.
    pub l_max: usize,
    /// Largest admitted rank per homological degree.
    pub mult_max: usize,
    /// Series prefix length used by the positivity filter; must reach past
    /// twice the top shift so gap detection can see beyond the numerator.
    pub terms: usize,
    pub constraints: Constraints,
    /// Upper bound on the number of tables the run may assemble.
    pub budget: u64,
}

pub const DEFAULT_L_MAX: usize = 8;
pub const DEFAULT_MULT_MAX: usize = 6;
pub const DEFAULT_TERMS: usize = 64;
pub const DEFAULT_BUDGET: u64 = 1_000_000;

impl SearchSpec {
    pub fn new(gldim: usize) -> Self {
        SearchSpec {
            gldim,
            l_max: DEFAULT_L_MAX,
            mult_max: DEFAULT_MULT_MAX,
            terms: DEFAULT_TERMS,
            constraints: Constraints::default(),
            budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_constraints(mut self, constraints: Constraints) -> Self {
        self.constraints = constraints;
        self
    }

    pub fn validate(&self) -> Result<(), SearchSpecError> {
        if self.gldim == 0 {
            return Err(SearchSpecError::ZeroDimension);
        }
        if self.mult_max == 0 {
            return Err(SearchSpecError::ZeroMultMax);
        }
        if self.l_max < self.gldim {
            return Err(SearchSpecError::LMaxBelowGldim {
                l_max: self.l_max,
                gldim: self.gldim,
            });
        }
        let floor = 2 * self.l_max;
        if self.terms < floor {
            return Err(SearchSpecError::TermsBelowFloor {
                terms: self.terms,
                floor,
            });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchSpecError {
    ZeroDimension,
    ZeroMultMax,
    LMaxBelowGldim { l_max: usize, gldim: usize },
    TermsBelowFloor { terms: usize, floor: usize },
}

impl fmt::Display for SearchSpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SearchSpecError::ZeroDimension => write!(f, "global dimension must be at least 1"),
            SearchSpecError::ZeroMultMax => write!(f, "mult_max must be at least 1"),
            SearchSpecError::LMaxBelowGldim { l_max, gldim } => write!(
                f,
                "l_max {l_max} is below the global dimension {gldim}; strictly increasing minima force a top shift of at least {gldim}"
            ),
            SearchSpecError::TermsBelowFloor { terms, floor } => write!(
                f,
                "terms {terms} is below the floor {floor} (twice l_max) needed for gap detection"
            ),
        }
    }
}

impl std::error::Error for SearchSpecError {}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum EnumerateError {
    InvalidSpec(SearchSpecError),
    /// The grid holds more candidate tables than the budget admits. The
    /// run refuses up front rather than truncating silently.
    BudgetExceeded {
        estimate: u128,
        budget: u64,
    },
}

impl fmt::Display for EnumerateError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EnumerateError::InvalidSpec(err) => write!(f, "invalid search spec: {err}"),
            EnumerateError::BudgetExceeded { estimate, budget } => {
                if *estimate == u128::MAX {
                    write!(
                        f,
                        "search grid overflows any countable size, exceeding the budget of {budget}; shrink l_max or mult_max, or raise the budget"
                    )
                } else {
                    write!(
                        f,
                        "search grid holds about {estimate} candidate tables, exceeding the budget of {budget}; shrink l_max or mult_max, or raise the budget"
                    )
                }
            }
        }
    }
}

impl std::error::Error for EnumerateError {}

impl From<SearchSpecError> for EnumerateError {
    fn from(err: SearchSpecError) -> Self {
        EnumerateError::InvalidSpec(err)
    }
}

/// A surviving table together with its full invariant report.
#[derive(Clone, Debug)]
pub struct Candidate {
    pub table: BettiTable,
    pub report: InvariantReport,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletionError {
    /// The lower half must cover homological degrees `0..=gldim/2`.
    WrongRowCount {
        expected: usize,
        got: usize,
    },
    /// With even global dimension the middle row must pair with itself.
    MiddleRowNotSelfPaired {
        position: usize,
        sum: usize,
        as_index: usize,
    },
    /// A lower-half shift at or above the top twist would mirror to a
    /// non-positive shift.
    ShiftOutOfRange {
        degree: usize,
        shift: usize,
    },
    Table(TableError),
}

impl fmt::Display for CompletionError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CompletionError::WrongRowCount { expected, got } => {
                write!(f, "lower half must have {expected} rows, got {got}")
            }
            CompletionError::MiddleRowNotSelfPaired {
                position,
                sum,
                as_index,
            } => write!(
                f,
                "middle row position {position} pairs to {sum}, expected {as_index}"
            ),
            CompletionError::ShiftOutOfRange { degree, shift } => {
                write!(f, "shift {shift} in row {degree} cannot be mirrored")
            }
            CompletionError::Table(err) => write!(f, "{err}"),
        }
    }
}

impl std::error::Error for CompletionError {}

impl From<TableError> for CompletionError {
    fn from(err: TableError) -> Self {
        CompletionError::Table(err)
    }
}

/// Completes a lower half `rows 0..=gldim/2` to a full Gorenstein-symmetric
/// table with top twist `as_index`, mirroring each shift to
/// `as_index - shift`.
pub fn symmetric_completion(
    lower_rows: &[Vec<usize>],
    gldim: usize,
    as_index: usize,
) -> Result<BettiTable, CompletionError> {
    let expected = gldim / 2 + 1;
    if lower_rows.len() != expected {
        return Err(CompletionError::WrongRowCount {
            expected,
            got: lower_rows.len(),
        });
    }
    for (degree, row) in lower_rows.iter().enumerate().skip(1) {
        if let Some(&shift) = row.iter().find(|&&shift| shift >= as_index) {
            return Err(CompletionError::ShiftOutOfRange { degree, shift });
        }
    }
    if gldim % 2 == 0 && gldim > 0 {
        let mut middle = lower_rows[gldim / 2].clone();
        middle.sort_unstable();
        let n = middle.len();
        for s in 0..n {
            let sum = middle[s] + middle[n - 1 - s];
            if sum != as_index {
                return Err(CompletionError::MiddleRowNotSelfPaired {
                    position: s + 1,
                    sum,
                    as_index,
                });
            }
        }
    }
    let mut rows = lower_rows.to_vec();
    for degree in expected..=gldim {
        let mirror = &lower_rows[gldim - degree];
        rows.push(mirror.iter().map(|&shift| as_index - shift).collect());
    }
    Ok(BettiTable::new(rows)?)
}

/// Enumerates all tables in the spec's grid passing every enabled filter,
/// in canonical order.
pub fn enumerate_tables(spec: &SearchSpec) -> Result<Vec<Candidate>, EnumerateError> {
    spec.validate()?;
    let estimate = estimate_tables(spec);
    if estimate > u128::from(spec.budget) {
        return Err(EnumerateError::BudgetExceeded {
            estimate,
            budget: spec.budget,
        });
    }

    let partitions = build_partitions(spec);
    let mut candidates: Vec<Candidate> = partitions
        .par_iter()
        .flat_map_iter(|partition| expand_partition(partition, spec))
        .collect();

    candidates.sort_by(|a, b| {
        let ka = (a.table.max_shift(), a.table.total_rank());
        let kb = (b.table.max_shift(), b.table.total_rank());
        ka.cmp(&kb).then_with(|| a.table.rows().cmp(b.table.rows()))
    });
    candidates.dedup_by(|a, b| a.table.rows() == b.table.rows());
    Ok(candidates)
}

/// One unit of parallel work: a fixed choice for the first free row, plus
/// the option lists for the remaining free rows.
struct Partition {
    /// Top twist, for the symmetric mode; unused otherwise.
    as_index: usize,
    first: Vec<usize>,
    rest: Vec<Vec<Vec<usize>>>,
    symmetric: bool,
}

fn build_partitions(spec: &SearchSpec) -> Vec<Partition> {
    let mut partitions = Vec::new();
    if spec.constraints.require_gorenstein {
        for as_index in spec.gldim..=spec.l_max {
            let slots = symmetric_slots(spec, as_index);
            push_partitions(&mut partitions, slots, as_index, true);
        }
    } else {
        let slots = free_slots(spec);
        push_partitions(&mut partitions, slots, 0, false);
    }
    partitions
}

fn push_partitions(
    partitions: &mut Vec<Partition>,
    slots: Vec<Vec<Vec<usize>>>,
    as_index: usize,
    symmetric: bool,
) {
    if slots.is_empty() {
        partitions.push(Partition {
            as_index,
            first: Vec::new(),
            rest: Vec::new(),
            symmetric,
        });
        return;
    }
    if slots.iter().any(Vec::is_empty) {
        return;
    }
    let (first_slot, rest) = slots.split_first().expect("nonempty");
    for first in first_slot {
        partitions.push(Partition {
            as_index,
            first: first.clone(),
            rest: rest.to_vec(),
            symmetric,
        });
    }
}

/// Option lists for the free rows of a symmetric table with top twist
/// `as_index`: strictly-lower rows `1..=(gldim-1)/2`, then the self-paired
/// middle row when the dimension is even.
fn symmetric_slots(spec: &SearchSpec, as_index: usize) -> Vec<Vec<Vec<usize>>> {
    let d = spec.gldim;
    let mut slots = Vec::new();
    for degree in 1..=(d.saturating_sub(1)) / 2 {
        slots.push(row_options(spec, degree, as_index.saturating_sub(1)));
    }
    if d % 2 == 0 {
        slots.push(middle_row_options(spec, d / 2, as_index));
    }
    slots
}

/// Option lists for all rows `1..=gldim` in the unconstrained mode.
fn free_slots(spec: &SearchSpec) -> Vec<Vec<Vec<usize>>> {
    (1..=spec.gldim)
        .map(|degree| row_options(spec, degree, spec.l_max))
        .collect()
}

/// Ascending multisets over `1..=top` of size `1..=mult_max`, narrowed by
/// the degree-one and quadratic constraints where they pin a row.
fn row_options(spec: &SearchSpec, degree: usize, top: usize) -> Vec<Vec<usize>> {
    if spec.constraints.degree_one && degree == 1 {
        if top < 1 {
            return Vec::new();
        }
        return (1..=spec.mult_max).map(|n| vec![1; n]).collect();
    }
    if spec.constraints.quadratic && degree == 2 {
        if top < 2 {
            return Vec::new();
        }
        return (1..=spec.mult_max).map(|n| vec![2; n]).collect();
    }
    ascending_multisets(top, spec.mult_max)
}

/// Self-paired rows for the middle degree: multisets of pairs `(a, l - a)`
/// plus copies of the center `l / 2` when `l` is even.
fn middle_row_options(spec: &SearchSpec, degree: usize, as_index: usize) -> Vec<Vec<usize>> {
    let pair_values: Vec<usize> = (1..=(as_index.saturating_sub(1)) / 2).collect();
    let center = (as_index % 2 == 0).then_some(as_index / 2);
    let mut rows = Vec::new();
    let max_pairs = spec.mult_max / 2;
    let mut pair_choice = Vec::new();
    collect_pair_rows(
        &pair_values,
        0,
        max_pairs,
        &mut pair_choice,
        center,
        spec.mult_max,
        as_index,
        &mut rows,
    );
    // constraint narrowing mirrors row_options
    if spec.constraints.degree_one && degree == 1 {
        rows.retain(|row| row.iter().all(|&s| s == 1));
    }
    if spec.constraints.quadratic && degree == 2 {
        rows.retain(|row| row.iter().all(|&s| s == 2));
    }
    rows
}

#[allow(clippy::too_many_arguments)]
fn collect_pair_rows(
    pair_values: &[usize],
    start: usize,
    pairs_left: usize,
    chosen: &mut Vec<usize>,
    center: Option<usize>,
    mult_max: usize,
    as_index: usize,
    rows: &mut Vec<Vec<usize>>,
) {
    let used = 2 * chosen.len();
    let center_budget = mult_max - used;
    match center {
        Some(c) => {
            let min_j = usize::from(chosen.is_empty());
            for j in min_j..=center_budget {
                let mut row: Vec<usize> = Vec::with_capacity(used + j);
                for &a in chosen.iter() {
                    row.push(a);
                    row.push(as_index - a);
                }
                row.extend(std::iter::repeat_n(c, j));
                row.sort_unstable();
                rows.push(row);
            }
        }
        None => {
            if !chosen.is_empty() {
                let mut row: Vec<usize> = Vec::with_capacity(used);
                for &a in chosen.iter() {
                    row.push(a);
                    row.push(as_index - a);
                }
                row.sort_unstable();
                rows.push(row);
            }
        }
    }
    if pairs_left == 0 {
        return;
    }
    for (offset, &a) in pair_values.iter().enumerate().skip(start) {
        chosen.push(a);
        collect_pair_rows(
            pair_values,
            offset,
            pairs_left - 1,
            chosen,
            center,
            mult_max,
            as_index,
            rows,
        );
        chosen.pop();
    }
}

fn expand_partition(partition: &Partition, spec: &SearchSpec) -> Vec<Candidate> {
    let mut survivors = Vec::new();
    let mut chosen: Vec<Vec<usize>> = vec![vec![0]];
    if !partition.first.is_empty() {
        chosen.push(partition.first.clone());
    }
    descend(partition, spec, &mut chosen, 0, &mut survivors);
    survivors
}

fn descend(
    partition: &Partition,
    spec: &SearchSpec,
    chosen: &mut Vec<Vec<usize>>,
    depth: usize,
    survivors: &mut Vec<Candidate>,
) {
    // prune: minima and maxima must strictly increase along chosen rows
    if chosen.len() >= 2 {
        let prev = &chosen[chosen.len() - 2];
        let last = &chosen[chosen.len() - 1];
        if prev.first() >= last.first() || prev.last() >= last.last() {
            return;
        }
    }
    if depth == partition.rest.len() {
        if let Some(candidate) = assemble(partition, spec, chosen) {
            survivors.push(candidate);
        }
        return;
    }
    for row in &partition.rest[depth] {
        chosen.push(row.clone());
        descend(partition, spec, chosen, depth + 1, survivors);
        chosen.pop();
    }
}

fn assemble(partition: &Partition, spec: &SearchSpec, chosen: &[Vec<usize>]) -> Option<Candidate> {
    let table = if partition.symmetric {
        symmetric_completion(chosen, spec.gldim, partition.as_index).ok()?
    } else {
        BettiTable::new(chosen.to_vec()).ok()?
    };
    passes_filters(&table, spec).then(|| Candidate {
        report: analyze(&table, spec.terms),
        table,
    })
}

fn constraints_hold(table: &BettiTable, constraints: &Constraints) -> bool {
    if constraints.degree_one {
        if let Some(row) = table.rows().get(1) {
            if row.iter().any(|&s| s != 1) {
                return false;
            }
        }
    }
    if constraints.quadratic {
        if let Some(row) = table.rows().get(2) {
            if row.iter().any(|&s| s != 2) {
                return false;
            }
        }
    }
    true
}

fn passes_filters(table: &BettiTable, spec: &SearchSpec) -> bool {
    if !constraints_hold(table, &spec.constraints) {
        return false;
    }
    if !table.is_minimal() || !table.maxima_strictly_increase() {
        return false;
    }
    if spec.constraints.require_monotonic && !table.is_monotonic() {
        return false;
    }
    if spec.constraints.require_cyclotomic
        && cyclotomic_factorization(&table.characteristic_polynomial()).is_err()
    {
        return false;
    }
    if spec.constraints.require_positive_nogap {
        let prefix = table.hilbert_prefix(spec.terms);
        if prefix.first_negative().is_some() || prefix.gap_index().is_some() {
            return false;
        }
    }
    true
}

/// A-priori count of tables the grid would assemble, ignoring pruning;
/// saturates instead of overflowing.
fn estimate_tables(spec: &SearchSpec) -> u128 {
    if spec.constraints.require_gorenstein {
        let mut total: u128 = 0;
        for as_index in spec.gldim..=spec.l_max {
            total = total.saturating_add(estimate_symmetric(spec, as_index));
        }
        total
    } else {
        (1..=spec.gldim)
            .map(|degree| estimate_row(spec, degree, spec.l_max))
            .fold(1u128, u128::saturating_mul)
    }
}

fn estimate_symmetric(spec: &SearchSpec, as_index: usize) -> u128 {
    let d = spec.gldim;
    let mut product: u128 = 1;
    for degree in 1..=(d.saturating_sub(1)) / 2 {
        product = product.saturating_mul(estimate_row(spec, degree, as_index.saturating_sub(1)));
    }
    if d % 2 == 0 {
        product = product.saturating_mul(estimate_middle_row(spec, d / 2, as_index));
    }
    product
}

fn estimate_row(spec: &SearchSpec, degree: usize, top: usize) -> u128 {
    if spec.constraints.degree_one && degree == 1 {
        return if top >= 1 { spec.mult_max as u128 } else { 0 };
    }
    if spec.constraints.quadratic && degree == 2 {
        return if top >= 2 { spec.mult_max as u128 } else { 0 };
    }
    count_multisets(top, spec.mult_max)
}

fn estimate_middle_row(spec: &SearchSpec, degree: usize, as_index: usize) -> u128 {
    if spec.constraints.degree_one && degree == 1 {
        return if as_index == 2 {
            spec.mult_max as u128
        } else {
            0
        };
    }
    if spec.constraints.quadratic && degree == 2 {
        return if as_index == 4 {
            spec.mult_max as u128
        } else {
            0
        };
    }
    let pair_kinds = (as_index.saturating_sub(1)) / 2;
    let has_center = as_index % 2 == 0;
    let mut total: u128 = 0;
    for pairs in 0..=spec.mult_max / 2 {
        let ways = count_multisets_exact(pair_kinds, pairs);
        if ways == 0 {
            continue;
        }
        let occupied = 2 * pairs;
        if has_center {
            let center_choices = (spec.mult_max - occupied + 1) as u128;
            total = total.saturating_add(ways.saturating_mul(center_choices));
        } else if pairs > 0 {
            total = total.saturating_add(ways);
        }
    }
    if has_center {
        // the empty row (no pairs, no center copies) was counted once
        total = total.saturating_sub(1);
    }
    total
}

/// Number of multisets of size `1..=max_size` over an alphabet of `kinds`
/// symbols, saturating.
fn count_multisets(kinds: usize, max_size: usize) -> u128 {
    (1..=max_size)
        .map(|size| count_multisets_exact(kinds, size))
        .fold(0u128, u128::saturating_add)
}

fn count_multisets_exact(kinds: usize, size: usize) -> u128 {
    if size == 0 {
        return 1;
    }
    if kinds == 0 {
        return 0;
    }
    binomial_saturating((kinds + size - 1) as u128, size as u128)
}

fn binomial_saturating(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut result: u128 = 1;
    for i in 0..k {
        result = result.saturating_mul(n - i);
        if result == u128::MAX {
            return u128::MAX;
        }
        result /= i + 1;
    }
    result
}

/// All ascending multisets over `1..=top` of size `1..=max_size`.
fn ascending_multisets(top: usize, max_size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn recurse(
        top: usize,
        max_size: usize,
        lowest: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if !current.is_empty() {
            out.push(current.clone());
        }
        if current.len() == max_size {
            return;
        }
        for value in lowest..=top {
            current.push(value);
            recurse(top, max_size, value, current, out);
            current.pop();
        }
    }
    recurse(top, max_size, 1, &mut current, &mut out);
    out
}
