//! Independent oracles for the integration suites. Everything here
//! recomputes expected values by a different route than the library:
//! schoolbook long division for series, synthetic division for root
//! multiplicity, root-squaring with Kronecker's coefficient bound for the
//! root-of-unity decision, and brute-force counting for weighted series.

#![allow(dead_code, unused_imports)] // each test target uses its own subset

pub mod rng;

use std::collections::HashSet;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use betti_core::{BettiTable, IntPoly};

pub use rng::TestRng;

pub fn big(values: &[i64]) -> Vec<BigInt> {
    values.iter().map(|&v| BigInt::from(v)).collect()
}

pub fn table(rows: &[&[usize]]) -> BettiTable {
    BettiTable::new(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
}

/// Plain convolution on coefficient vectors, written without IntPoly.
pub fn convolve(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    while out.last().is_some_and(Zero::is_zero) {
        out.pop();
    }
    out
}

/// Schoolbook long division of 1 by `p` (constant term 1): repeatedly take
/// the lowest remaining term as the next series coefficient and subtract
/// the shifted multiple of `p`.
pub fn series_by_long_division(p: &IntPoly, terms: usize) -> Vec<BigInt> {
    assert!(p.constant_term().is_one());
    let degree = p.degree().unwrap();
    let mut remainder = vec![BigInt::zero(); terms + degree];
    remainder[0] = BigInt::one();
    let mut quotient = Vec::with_capacity(terms);
    for k in 0..terms {
        let coefficient = remainder[k].clone();
        for j in 0..=degree {
            let sub = &coefficient * p.coeff(j);
            remainder[k + j] -= sub;
        }
        quotient.push(coefficient);
    }
    quotient
}

/// Multiplicity of `t = 1` by repeated synthetic division: `q_k = p_k +
/// q_{k-1}` divides by `(1 - t)` with remainder `p_top + q_top`.
pub fn multiplicity_at_one_synthetic(p: &IntPoly) -> usize {
    let mut coeffs: Vec<BigInt> = p.coeffs().to_vec();
    let mut multiplicity = 0;
    loop {
        if coeffs.len() <= 1 {
            // nonzero constant: no further factor
            return multiplicity;
        }
        let mut quotient = Vec::with_capacity(coeffs.len() - 1);
        let mut carry = BigInt::zero();
        for c in &coeffs[..coeffs.len() - 1] {
            carry = c + &carry;
            quotient.push(carry.clone());
        }
        let remainder = coeffs.last().unwrap() + &carry;
        if !remainder.is_zero() {
            return multiplicity;
        }
        multiplicity += 1;
        coeffs = quotient;
    }
}

/// Decides whether every complex root of `p` is a root of unity, by
/// root-squaring. A monic integer polynomial with unit constant term either
/// has all roots on the unit circle — in which case squaring cycles through
/// a finite set (Kronecker) — or has a root of modulus above 1, in which
/// case some coefficient eventually exceeds the binomial bound attained by
/// unit-modulus root sets.
pub fn all_roots_of_unity(p: &IntPoly) -> bool {
    assert!(!p.is_zero() && !p.constant_term().is_zero());
    let mut coeffs: Vec<BigInt> = p.coeffs().to_vec();
    let lead = coeffs.last().unwrap();
    if lead.abs() != BigInt::one() || coeffs[0].abs() != BigInt::one() {
        return false;
    }
    if lead.is_negative() {
        for c in &mut coeffs {
            *c = -std::mem::take(c);
        }
    }
    let degree = coeffs.len() - 1;
    let bounds: Vec<BigInt> = (0..=degree).map(|i| binomial(degree, i)).collect();
    let mut seen: HashSet<Vec<BigInt>> = HashSet::new();
    for _ in 0..10_000 {
        if !seen.insert(coeffs.clone()) {
            return true;
        }
        if coeffs
            .iter()
            .zip(&bounds)
            .any(|(c, bound)| &c.abs() > bound)
        {
            return false;
        }
        coeffs = graeffe(&coeffs);
    }
    unreachable!("root-squaring neither cycled nor escaped the coefficient bound");
}

/// Root-squaring step: returns the monic polynomial whose roots are the
/// squares of the input's roots.
fn graeffe(coeffs: &[BigInt]) -> Vec<BigInt> {
    let degree = coeffs.len() - 1;
    let mirrored: Vec<BigInt> = coeffs
        .iter()
        .enumerate()
        .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
        .collect();
    let product = convolve(coeffs, &mirrored);
    let sign = if degree % 2 == 0 { 1 } else { -1 };
    (0..=degree)
        .map(|k| {
            let c = product.get(2 * k).cloned().unwrap_or_else(BigInt::zero);
            if sign < 0 {
                -c
            } else {
                c
            }
        })
        .collect()
}

fn binomial(n: usize, k: usize) -> BigInt {
    let mut result = BigInt::one();
    for i in 0..k.min(n - k) {
        result = result * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    result
}

/// Number of monomials of total weight `n` in variables of the given
/// weights with the given multiplicities, counted by direct recursion.
pub fn count_weighted_monomials(weights: &[(usize, usize)], n: usize) -> u64 {
    let mut variables = Vec::new();
    for &(weight, count) in weights {
        for _ in 0..count {
            variables.push(weight);
        }
    }
    fn recurse(variables: &[usize], remaining: usize) -> u64 {
        match variables.split_first() {
            None => u64::from(remaining == 0),
            Some((&weight, rest)) => {
                let mut total = 0;
                let mut used = 0;
                while used <= remaining {
                    total += recurse(rest, remaining - used);
                    used += weight;
                }
                total
            }
        }
    }
    recurse(&variables, n)
}
