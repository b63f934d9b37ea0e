//! Real polynomials in the monomial basis.
//!
//! [`Poly`] is the exchange format of the crate: every family member,
//! derivative and normalized polynomial can be materialized as one. Parity
//! metadata is enforced exactly, so a polynomial tagged even has odd-indexed
//! coefficients equal to `0.0` (not merely small).

use serde::{Deserialize, Serialize};
use std::ops::{Add, Mul, Neg, Sub};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
    None,
}

impl Parity {
    /// Parity of the degree-`n` member of a symmetric family.
    pub fn of_degree(n: usize) -> Self {
        if n.is_multiple_of(2) {
            Parity::Even
        } else {
            Parity::Odd
        }
    }

    /// Parity after one differentiation.
    pub fn flip(self) -> Self {
        match self {
            Parity::Even => Parity::Odd,
            Parity::Odd => Parity::Even,
            Parity::None => Parity::None,
        }
    }

    fn admits(self, i: usize) -> bool {
        match self {
            Parity::Even => i.is_multiple_of(2),
            Parity::Odd => i % 2 == 1,
            Parity::None => true,
        }
    }

    fn merge(self, other: Self) -> Self {
        if self == other {
            self
        } else {
            Parity::None
        }
    }
}

/// Falling factorial `i (i-1) ... (i-k+1)`.
pub(crate) fn falling(i: usize, k: usize) -> f64 {
    (0..k).fold(1.0, |acc, j| acc * (i - j) as f64)
}

/// Evaluation of a polynomial and its derivatives, independent of the basis
/// it is stored in. The root finder and the extremal analysis work against
/// this trait so that well-conditioned representations can be used where
/// the monomial basis loses accuracy.
pub trait PolyEval {
    fn degree(&self) -> usize;

    fn parity(&self) -> Parity;

    /// Value of the `k`-th derivative at `x`, together with the sum of the
    /// absolute values of the terms that produced it. The second number
    /// bounds the rounding error of the first (up to a small multiple of
    /// machine epsilon).
    fn derivative_at(&self, k: usize, x: f64) -> (f64, f64);

    /// The `k`-th derivative in monomial form. Used for root bounds only.
    fn derivative_poly(&self, k: usize) -> Poly;

    fn value(&self, x: f64) -> f64 {
        self.derivative_at(0, x).0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Poly {
    coeffs: Vec<f64>,
    parity: Parity,
}

impl Poly {
    /// Builds a polynomial from ascending coefficients. Trailing exact zeros
    /// are dropped so that the leading coefficient is nonzero.
    pub fn new(coeffs: Vec<f64>) -> Self {
        Self::with_parity(coeffs, Parity::None)
    }

    /// Builds a polynomial and forces the given parity by zeroing every
    /// coefficient of the wrong parity.
    pub fn with_parity(mut coeffs: Vec<f64>, parity: Parity) -> Self {
        for (i, c) in coeffs.iter_mut().enumerate() {
            if !parity.admits(i) {
                *c = 0.0;
            }
        }
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        Poly { coeffs, parity }
    }

    pub fn zero() -> Self {
        Poly {
            coeffs: vec![0.0],
            parity: Parity::None,
        }
    }

    pub fn constant(c: f64) -> Self {
        Poly::with_parity(vec![c], Parity::Even)
    }

    /// `x^n`.
    pub fn monomial(n: usize) -> Self {
        let mut c = vec![0.0; n + 1];
        c[n] = 1.0;
        Poly::with_parity(c, Parity::of_degree(n))
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn parity(&self) -> Parity {
        self.parity
    }

    pub fn leading(&self) -> f64 {
        self.coeffs[self.degree()]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0.0)
    }

    /// Imposes `parity`, returning the largest magnitude that was zeroed.
    pub fn enforce_parity(&mut self, parity: Parity) -> f64 {
        let mut dropped = 0.0f64;
        for (i, c) in self.coeffs.iter_mut().enumerate() {
            if !parity.admits(i) {
                dropped = dropped.max(c.abs());
                *c = 0.0;
            }
        }
        self.parity = parity;
        *self = Poly::with_parity(std::mem::take(&mut self.coeffs), parity);
        dropped
    }

    /// Horner evaluation.
    pub fn eval(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::zero();
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| i as f64 * c)
            .collect();
        Poly::with_parity(c, self.parity.flip())
    }

    pub fn nth_derivative(&self, k: usize) -> Poly {
        if k > self.degree() {
            return Poly::zero();
        }
        let c = self
            .coeffs
            .iter()
            .enumerate()
            .skip(k)
            .map(|(i, &c)| falling(i, k) * c)
            .collect();
        let parity = if k.is_multiple_of(2) {
            self.parity
        } else {
            self.parity.flip()
        };
        Poly::with_parity(c, parity)
    }

    pub fn scaled(&self, s: f64) -> Poly {
        Poly::with_parity(self.coeffs.iter().map(|c| c * s).collect(), self.parity)
    }

    /// Largest absolute coefficient difference, padding the shorter with zeros.
    pub fn max_abs_diff(&self, other: &Poly) -> f64 {
        let n = self.coeffs.len().max(other.coeffs.len());
        (0..n)
            .map(|i| {
                let a = self.coeffs.get(i).copied().unwrap_or(0.0);
                let b = other.coeffs.get(i).copied().unwrap_or(0.0);
                (a - b).abs()
            })
            .fold(0.0, f64::max)
    }

    fn combine(&self, other: &Poly, s: f64) -> Poly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| {
                self.coeffs.get(i).copied().unwrap_or(0.0)
                    + s * other.coeffs.get(i).copied().unwrap_or(0.0)
            })
            .collect();
        Poly::with_parity(c, self.parity.merge(other.parity))
    }
}

impl PolyEval for Poly {
    fn degree(&self) -> usize {
        Poly::degree(self)
    }

    fn parity(&self) -> Parity {
        self.parity
    }

    fn derivative_at(&self, k: usize, x: f64) -> (f64, f64) {
        if k > self.degree() {
            return (0.0, 0.0);
        }
        let ax = x.abs();
        let mut v = 0.0;
        let mut s = 0.0;
        for i in (k..self.coeffs.len()).rev() {
            let c = self.coeffs[i] * falling(i, k);
            v = v * x + c;
            s = s * ax + c.abs();
        }
        (v, s)
    }

    fn derivative_poly(&self, k: usize) -> Poly {
        self.nth_derivative(k)
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.combine(rhs, 1.0)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.combine(rhs, -1.0)
    }
}

impl Mul<f64> for &Poly {
    type Output = Poly;
    fn mul(self, rhs: f64) -> Poly {
        self.scaled(rhs)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scaled(-1.0)
    }
}

/// `(P(x), P'(x), ..., P^(k)(x))` by Horner's scheme with derivative
/// propagation in a single pass over the coefficients. Orders above the
/// degree evaluate to zero.
pub fn poly_eval(p: &Poly, x: f64, korders: usize) -> Vec<f64> {
    let mut d = vec![0.0; korders + 1];
    for &c in p.coeffs().iter().rev() {
        for j in (1..=korders).rev() {
            d[j] = d[j] * x + d[j - 1];
        }
        d[0] = d[0] * x + c;
    }
    let mut fact = 1.0;
    for (j, v) in d.iter_mut().enumerate().skip(1) {
        fact *= j as f64;
        *v *= fact;
    }
    d
}

/// Cauchy's bound `1 + max_{i<n} |c_i / c_n|`: every root of `p` has modulus
/// at most this value.
pub fn cauchy_bound(p: &Poly) -> f64 {
    let n = p.degree();
    let lead = p.leading().abs();
    1.0 + p.coeffs()[..n]
        .iter()
        .map(|c| (c / lead).abs())
        .fold(0.0, f64::max)
}

/// Half-width of an interval holding every zero of `p`, assuming they are
/// all real (Laguerre–Samuelson): with mean `μ` and spread `σ` of the
/// zeros, all of them lie in `μ ± σ sqrt(n - 1)`. Only the top three
/// coefficients enter. Returns `None` when they are inconsistent with real
/// zeros.
pub fn real_zero_bound(p: &Poly) -> Option<f64> {
    let n = p.degree();
    if n < 2 {
        return None;
    }
    let c = p.coeffs();
    let a1 = c[n - 1] / c[n];
    let a2 = c[n - 2] / c[n];
    let nf = n as f64;
    let mean = -a1 / nf;
    let var = (a1 * a1 - 2.0 * a2) / nf - mean * mean;
    if !(var >= -1e-14 * (mean * mean).max(1.0)) {
        return None;
    }
    Some(mean.abs() + (var.max(0.0) * (nf - 1.0)).sqrt())
}
