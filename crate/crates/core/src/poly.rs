//! Dense univariate polynomials with exact integer coefficients.
//!
//! Coefficients are arbitrary precision and stored by ascending degree with
//! no trailing zeros; the zero polynomial stores nothing. Every operation is
//! exact — there is no rounding and no silent wraparound anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_traits::{One, Signed, Zero};

/// A univariate polynomial over the integers.
///
/// The degree of the zero polynomial is `None`; for every other value the
/// leading stored coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

/// Returned by [`IntPoly::weighted_decompose`] when the polynomial is not a
/// product of factors `(1 - t^i)^{n_i}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct NotWeighted;

impl fmt::Display for NotWeighted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "polynomial is not a product of factors (1 - t^i)^n")
    }
}

impl std::error::Error for NotWeighted {}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPoly::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        IntPoly::from_coeffs(vec![c.into()])
    }

    /// Builds a polynomial from ascending-degree coefficients, trimming
    /// trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigInt>) -> Self {
        let mut poly = IntPoly { coeffs };
        poly.trim();
        poly
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// `c * t^degree`.
    pub fn monomial(coeff: impl Into<BigInt>, degree: usize) -> Self {
        let coeff = coeff.into();
        if coeff.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = coeff;
        IntPoly { coeffs }
    }

    /// `1 - t^k` for `k >= 1`.
    pub fn one_minus_power(k: usize) -> Self {
        assert!(k >= 1, "1 - t^0 is the zero polynomial");
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[0] = BigInt::one();
        coeffs[k] = -BigInt::one();
        IntPoly { coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `t^k`; zero beyond the stored degree.
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn constant_term(&self) -> BigInt {
        self.coeff(0)
    }

    /// Exact evaluation by Horner's rule.
    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = IntPoly::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact quotient in `Z[t]`: returns `q` with `divisor * q == self`, or
    /// `None` when no such polynomial exists.
    pub fn exact_div(&self, divisor: &IntPoly) -> Option<IntPoly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(IntPoly::zero());
        }
        let n = self.degree().expect("nonzero");
        let m = divisor.degree().expect("nonzero");
        if n < m {
            return None;
        }
        let lead = &divisor.coeffs[m];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); n - m + 1];
        for k in (0..=n - m).rev() {
            let top = rem[k + m].clone();
            if top.is_zero() {
                continue;
            }
            if !(&top % lead).is_zero() {
                return None;
            }
            let q = &top / lead;
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= &q * dc;
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(IntPoly::from_coeffs(quot))
        } else {
            None
        }
    }

    /// Largest `k` such that `(1 - t)^k` divides the polynomial exactly.
    pub fn multiplicity_at_one(&self) -> usize {
        assert!(!self.is_zero(), "every power of 1 - t divides zero");
        let linear = IntPoly::one_minus_power(1);
        let mut current = self.clone();
        let mut multiplicity = 0;
        while let Some(quotient) = current.exact_div(&linear) {
            multiplicity += 1;
            current = quotient;
        }
        multiplicity
    }

    /// Number of sign alternations in the coefficient sequence, skipping
    /// zero coefficients.
    pub fn sign_changes(&self) -> usize {
        let mut changes = 0;
        let mut last: Option<Sign> = None;
        for c in &self.coeffs {
            if c.is_zero() {
                continue;
            }
            let sign = c.sign();
            if let Some(prev) = last {
                if prev != sign {
                    changes += 1;
                }
            }
            last = Some(sign);
        }
        changes
    }

    /// Whether reversing the coefficients across the degree window
    /// `[0, window]` reproduces `(-1)^parity` times the polynomial, i.e.
    /// `t^window * p(1/t) == (-1)^parity * p(t)`.
    pub fn is_self_reciprocal(&self, window: usize, parity: usize) -> bool {
        if let Some(d) = self.degree() {
            assert!(d <= window, "degree exceeds the reversal window");
        }
        let negate = parity % 2 == 1;
        (0..=window).all(|k| {
            let mirrored = self.coeff(window - k);
            let original = self.coeff(k);
            if negate {
                mirrored == -original
            } else {
                mirrored == original
            }
        })
    }

    /// Decomposes the polynomial as a product `prod (1 - t^i)^{n_i}`,
    /// returning the `(i, n_i)` pairs by ascending `i`.
    ///
    /// Works greedily from the lowest degree: each stage's lowest nonzero
    /// coefficient determines the next factor, so the decomposition is
    /// unique when it exists. Requires constant term 1.
    pub fn weighted_decompose(&self) -> Result<Vec<(usize, usize)>, NotWeighted> {
        assert!(
            self.constant_term().is_one(),
            "weighted decomposition requires constant term 1"
        );
        let mut current = self.clone();
        let mut factors = Vec::new();
        while !current.is_one() {
            let weight = (1..current.coeffs.len())
                .find(|&k| !current.coeffs[k].is_zero())
                .expect("non-unit polynomial with constant term 1 has a nonzero coefficient");
            let lowest = current.coeffs[weight].clone();
            if lowest.sign() != Sign::Minus {
                return Err(NotWeighted);
            }
            let count = usize::try_from(-lowest).map_err(|_| NotWeighted)?;
            let degree = current.degree().expect("nonzero");
            if weight * count > degree {
                return Err(NotWeighted);
            }
            let divisor = IntPoly::one_minus_power(weight).pow(count);
            current = current.exact_div(&divisor).ok_or(NotWeighted)?;
            factors.push((weight, count));
        }
        Ok(factors)
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;

    fn add(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;

    fn sub(self, rhs: &IntPoly) -> IntPoly {
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len().max(rhs.coeffs.len())];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k] += c;
        }
        for (k, c) in rhs.coeffs.iter().enumerate() {
            coeffs[k] -= c;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;

    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;

    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Add for IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: IntPoly) -> IntPoly {
        &self + &rhs
    }
}

impl Sub for IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: IntPoly) -> IntPoly {
        &self - &rhs
    }
}

impl Mul for IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: IntPoly) -> IntPoly {
        &self * &rhs
    }
}

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let magnitude = c.abs();
            if first {
                if c.sign() == Sign::Minus {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.sign() == Sign::Minus {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            match k {
                0 => write!(f, "{magnitude}")?,
                _ => {
                    if !magnitude.is_one() {
                        write!(f, "{magnitude}")?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{k}")?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}
