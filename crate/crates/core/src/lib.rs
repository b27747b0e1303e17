//! Exact-arithmetic invariants of connected graded algebras, computed from
//! the Betti data of a minimal free resolution.
//!
//! The central object is a [`BettiTable`]: for each homological degree of a
//! finite minimal free resolution of the trivial module, the multiset of
//! twist degrees of its free summands. From that data alone the library
//! computes, over exact integers:
//!
//! * the characteristic polynomial (the alternating shift sum, whose
//!   reciprocal is the Hilbert series),
//! * a prefix of the Hilbert series, with negativity and gap diagnostics,
//! * the Gelfand-Kirillov dimension via cyclotomic factorization of the
//!   characteristic polynomial (finite iff every root is a root of unity,
//!   and then equal to the multiplicity of `t = 1`),
//! * monotonicity, purity, minimality, and Gorenstein-symmetry predicates,
//! * pass/fail verdicts for the structural theorems relating those
//!   invariants (parity of global and GK dimension, GK and generator
//!   bounds for monotonic tables, self-reciprocity, the Koszul
//!   specialization).
//!
//! The [`enumerate`] module searches a bounded grid for all tables of a
//! given global dimension passing the necessary structural filters, which
//! reproduces the classified resolution shapes in low dimension.
//!
//! All values are immutable and every operation is a pure function; the
//! cyclotomic memo table is the only shared mutable state and is safe for
//! concurrent use.

pub mod betti;
pub mod cyclotomic;
pub mod enumerate;
pub mod poly;
pub mod report;
pub mod series;

pub use betti::{BettiTable, GkDimension, GorensteinFailure, GorensteinSymmetry, TableError};
pub use cyclotomic::{
    cyclotomic, cyclotomic_factorization, totient, CycFactorization, NotRootsOfUnity,
};
pub use enumerate::{
    enumerate_tables, symmetric_completion, Candidate, CompletionError, Constraints,
    EnumerateError, SearchSpec, SearchSpecError,
};
pub use poly::{IntPoly, NotWeighted};
pub use report::{
    analyze, analyze_polynomial, InvariantReport, PolyReport, TheoremId, Verdict, VerdictStatus,
};
pub use series::{series_inverse, SeriesError, SeriesPrefix};

pub use num_bigint::BigInt;
