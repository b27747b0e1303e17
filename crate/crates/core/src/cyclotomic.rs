//! Cyclotomic polynomials and factorization into cyclotomic parts.
//!
//! A polynomial with constant term 1 has every root on the unit circle
//! exactly when it is a product `(1 - t)^m * prod Phi_{n_j}(t)` of
//! cyclotomic polynomials. [`cyclotomic_factorization`] finds that product
//! by trial division, which simultaneously decides the root-of-unity
//! question and extracts the multiplicity `m` of `t = 1` — the pole order
//! of the reciprocal series at 1.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, LazyLock, Mutex};

use num_traits::One;

use crate::poly::IntPoly;

static CYCLOTOMIC_CACHE: LazyLock<Mutex<HashMap<usize, Arc<IntPoly>>>> =
    LazyLock::new(|| Mutex::new(HashMap::new()));

/// The `n`-th cyclotomic polynomial, monic; the base case is `t - 1`.
///
/// Computed as `(t^n - 1)` divided by the product of all lower cyclotomic
/// polynomials at divisors of `n`. Results are memoized process-wide; the
/// cache tolerates concurrent callers (a race recomputes, then inserts the
/// same value).
pub fn cyclotomic(n: usize) -> IntPoly {
    assert!(n >= 1, "cyclotomic polynomials are indexed from 1");
    if let Some(hit) = CYCLOTOMIC_CACHE.lock().expect("cache poisoned").get(&n) {
        return (**hit).clone();
    }
    let value = if n == 1 {
        IntPoly::from_ints(&[-1, 1])
    } else {
        let mut quotient = &IntPoly::monomial(1, n) - &IntPoly::one();
        for d in 1..n {
            if n % d == 0 {
                quotient = quotient
                    .exact_div(&cyclotomic(d))
                    .expect("t^n - 1 is divisible by every lower cyclotomic factor");
            }
        }
        quotient
    };
    CYCLOTOMIC_CACHE
        .lock()
        .expect("cache poisoned")
        .insert(n, Arc::new(value.clone()));
    value
}

/// Euler's totient.
pub fn totient(n: usize) -> usize {
    assert!(n >= 1);
    let mut remaining = n;
    let mut result = n;
    let mut p = 2;
    while p * p <= remaining {
        if remaining % p == 0 {
            while remaining % p == 0 {
                remaining /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if remaining > 1 {
        result -= result / remaining;
    }
    result
}

/// A factorization `p = (1 - t)^m * prod_j Phi_{n_j}(t)` with every
/// `n_j > 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CycFactorization {
    /// Exponent of the `(1 - t)` factor.
    pub multiplicity_at_one: usize,
    /// Indices of the remaining cyclotomic factors, ascending, repeats kept.
    pub cyclotomic_indices: Vec<usize>,
}

impl CycFactorization {
    /// Multiplies the factors back out.
    pub fn reassemble(&self) -> IntPoly {
        let mut product = IntPoly::one_minus_power(1).pow(self.multiplicity_at_one);
        for &n in &self.cyclotomic_indices {
            product = &product * &cyclotomic(n);
        }
        product
    }

    /// Degree of the reassembled polynomial.
    pub fn degree(&self) -> usize {
        self.multiplicity_at_one
            + self
                .cyclotomic_indices
                .iter()
                .map(|&n| totient(n))
                .sum::<usize>()
    }
}

impl fmt::Display for CycFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.multiplicity_at_one {
            0 => {}
            1 => parts.push("(1-t)".to_string()),
            m => parts.push(format!("(1-t)^{m}")),
        }
        let mut run: Option<(usize, usize)> = None;
        for &n in self.cyclotomic_indices.iter().chain(std::iter::once(&0)) {
            match run {
                Some((index, count)) if index == n => run = Some((index, count + 1)),
                Some((index, count)) => {
                    if count == 1 {
                        parts.push(format!("Phi_{index}"));
                    } else {
                        parts.push(format!("Phi_{index}^{count}"));
                    }
                    run = (n != 0).then_some((n, 1));
                }
                None => run = (n != 0).then_some((n, 1)),
            }
        }
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join(" "))
        }
    }
}

/// Returned by [`cyclotomic_factorization`] when some root lies off the
/// roots of unity, i.e. when the reciprocal series grows faster than any
/// polynomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotRootsOfUnity;

impl fmt::Display for NotRootsOfUnity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial has a root that is not a root of unity")
    }
}

impl std::error::Error for NotRootsOfUnity {}

/// Factors `p` (constant term 1) into `(1 - t)^m * prod Phi_{n_j}` or
/// reports that no such factorization exists.
///
/// Strips the `(1 - t)` power first, then trial-divides the residual by
/// `Phi_n` for every candidate `n` with `totient(n) <= deg`, repeating per
/// index while divisible. Candidates run up to `2 * deg^2`, which covers
/// every `n` whose totient can fit because `n <= 2 * totient(n)^2`.
pub fn cyclotomic_factorization(p: &IntPoly) -> Result<CycFactorization, NotRootsOfUnity> {
    assert!(
        p.constant_term().is_one(),
        "cyclotomic factorization requires constant term 1"
    );
    let multiplicity = p.multiplicity_at_one();
    let mut residual = p
        .exact_div(&IntPoly::one_minus_power(1).pow(multiplicity))
        .expect("multiplicity_at_one certifies divisibility");
    let mut indices = Vec::new();
    let residual_degree = residual.degree().expect("unit constant term");
    if residual_degree > 0 {
        let candidate_bound = 2 * residual_degree * residual_degree;
        for n in 2..=candidate_bound {
            if totient(n) > residual.degree().expect("unit constant term") {
                continue;
            }
            let factor = cyclotomic(n);
            while let Some(quotient) = residual.exact_div(&factor) {
                indices.push(n);
                residual = quotient;
            }
            if residual.is_one() {
                break;
            }
        }
    }
    if residual.is_one() {
        Ok(CycFactorization {
            multiplicity_at_one: multiplicity,
            cyclotomic_indices: indices,
        })
    } else {
        Err(NotRootsOfUnity)
    }
}
