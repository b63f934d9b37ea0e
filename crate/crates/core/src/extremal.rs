//! Extremal quantities of Gegenbauer–Sobolev polynomials.
//!
//! For `Q_n` with zeros `x_1 < ... < x_n`, `N` is the largest value of
//! `|Q_n|` between `x_1` and `x_n`, and `M` is the first point past `x_n`
//! where `|Q_n|` climbs back to `N`. On `[-M, M]` the normalized
//! `q = Q_n / Q_n(M)` has sup norm one attained at both ends, and every
//! derivative `q^(k)`, `1 <= k <= n`, is then largest in absolute value at
//! `±M`. This module computes `N`, `M`, `q`, and checks that dominance
//! derivative by derivative.

use crate::error::{domain, Error, Result};
use crate::poly::{Poly, PolyEval};
use crate::roots::{bracketed_root, derivative_cascade};
use crate::series::GegenbauerSeries;
use crate::sobolev::sobolev_family;
use serde::Serialize;

/// Relative slack allowed when comparing interior extrema against the
/// endpoint value of a derivative.
pub const DOMINANCE_RTOL: f64 = 1e-10;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExtremalProfile {
    pub a: f64,
    pub b: f64,
    /// `a`, the zeros of `P'` in `[a, b]`, then `b`.
    pub tpoints: Vec<f64>,
    /// `|P(t)|` at each of `tpoints`.
    pub hvalues: Vec<f64>,
}

/// `h(P)`: values of `|P|` at the ends of `[a, b]` and at the critical
/// points of `P`. Fails if `P` has a zero outside `[a, b]`.
pub fn extremal_profile<P: PolyEval>(p: &P, a: f64, b: f64) -> Result<ExtremalProfile> {
    if p.degree() == 0 {
        return Err(domain("extremal_profile", "degree must be at least 1"));
    }
    if !(a < b) {
        return Err(domain(
            "extremal_profile",
            format!("need a < b, got [{a}, {b}]"),
        ));
    }
    let cascade = derivative_cascade(p)?;
    let tol = 1e-12 * a.abs().max(b.abs()).max(1.0);
    if let Some(&z) = cascade
        .zeros(0)
        .iter()
        .find(|&&z| z < a - tol || z > b + tol)
    {
        return Err(Error::ZeroOutsideInterval { zero: z, a, b });
    }
    let mut tpoints = vec![a];
    tpoints.extend(
        cascade
            .zeros(1)
            .iter()
            .copied()
            .filter(|&t| t >= a && t <= b),
    );
    tpoints.push(b);
    let hvalues = tpoints.iter().map(|&t| p.value(t).abs()).collect();
    Ok(ExtremalProfile {
        a,
        b,
        tpoints,
        hvalues,
    })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MValue {
    pub n: usize,
    pub alpha: f64,
    pub lambda: f64,
    /// `N`, the largest interior value of `|Q_n|`.
    #[serde(rename = "N")]
    pub big_n: f64,
    #[serde(rename = "M")]
    pub m: f64,
    pub largest_zero: f64,
    /// `||Q_n(M)| - N|`.
    pub residual: f64,
}

/// `(N, M, x_n, residual)` for an oscillating polynomial of degree >= 2.
pub fn extremal_point<P: PolyEval>(p: &P) -> Result<(f64, f64, f64, f64)> {
    let n = p.degree();
    if n < 2 {
        return Err(domain(
            "compute_M",
            "need degree >= 2 for an interior extremum",
        ));
    }
    let cascade = derivative_cascade(p)?;
    let big_n = cascade
        .zeros(1)
        .iter()
        .map(|&t| p.value(t).abs())
        .fold(0.0, f64::max);
    let zeros = cascade.zeros(0);
    let last = zeros[n - 1];

    // Past its last zero P has the sign of its leading coefficient and is
    // strictly monotone, so s P(t) - N has exactly one root there.
    let s = p.derivative_at(n, 0.0).0.signum();
    let g = |t: f64| s * p.value(t) - big_n;
    let dg = |t: f64| s * p.derivative_at(1, t).0;
    let mut step = (last - zeros[n - 2]).max(1e-3);
    while g(last + step) < 0.0 {
        step *= 2.0;
    }
    let m = bracketed_root(g, dg, last, last + step, -big_n);
    let residual = (p.value(m).abs() - big_n).abs();
    Ok((big_n, m, last, residual))
}

/// `N` and `M` for `Q_n` with parameters `alpha`, `lambda`.
pub fn compute_m(n: usize, alpha: f64, lambda: f64) -> Result<MValue> {
    Ok(with_family(n, alpha, lambda)?.1)
}

fn with_family(n: usize, alpha: f64, lambda: f64) -> Result<(GegenbauerSeries, MValue)> {
    if n < 2 {
        return Err(domain("compute_M", format!("need n >= 2, got {n}")));
    }
    let mut fam = sobolev_family(n, alpha, lambda)?;
    let q = fam.series.swap_remove(n);
    let (big_n, m, largest_zero, residual) = extremal_point(&q)?;
    let mvalue = MValue {
        n,
        alpha,
        lambda,
        big_n,
        m,
        largest_zero,
        residual,
    };
    Ok((q, mvalue))
}

/// `q = Q_n / Q_n(M)` in the Gegenbauer basis, with the `MValue` it was
/// normalized by.
#[derive(Debug, Clone)]
pub struct Normalized {
    pub q: GegenbauerSeries,
    pub mvalue: MValue,
}

pub fn normalized(n: usize, alpha: f64, lambda: f64) -> Result<Normalized> {
    let (big_q, mvalue) = with_family(n, alpha, lambda)?;
    Ok(Normalized {
        q: big_q.scaled(1.0 / big_q.value(mvalue.m)),
        mvalue,
    })
}

/// `q = Q_n / Q_n(M)` in monomial form.
pub fn normalized_q(n: usize, alpha: f64, lambda: f64) -> Result<Poly> {
    normalized(n, alpha, lambda)?.q.to_poly()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceRow {
    pub k: usize,
    /// `|q^(k)(E)|` with `E` the interval half-width.
    pub endpoint_value: f64,
    /// Largest `|q^(k)|` over critical points of `q^(k)` inside `(-E, E)`;
    /// zero when there are none, and the constant itself for `k = n`.
    pub interior_max: f64,
    pub margin: f64,
    pub pass: bool,
    /// `k = 0` is reported but not part of the verdict: interior extrema
    /// may tie with the endpoint there.
    pub gated: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DominanceReport {
    pub n: usize,
    pub alpha: f64,
    pub lambda: f64,
    #[serde(rename = "M")]
    pub m: f64,
    /// `M`, or the user-supplied `K >= M`.
    pub half_width: f64,
    pub rows: Vec<DominanceRow>,
}

impl DominanceReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().filter(|r| r.gated).all(|r| r.pass)
    }
}

/// Checks that every derivative of `q` peaks in absolute value at the ends
/// of `[-M, M]`, or of `[-K, K]` when `half_width` is given.
pub fn endpoint_dominance_report(
    n: usize,
    alpha: f64,
    lambda: f64,
    half_width: Option<f64>,
) -> Result<DominanceReport> {
    let Normalized { q, mvalue } = normalized(n, alpha, lambda)?;
    let e = match half_width {
        Some(k) if !(k >= mvalue.m) => {
            return Err(Error::IntervalTooSmall { k, m: mvalue.m });
        }
        Some(k) => k,
        None => mvalue.m,
    };
    Ok(DominanceReport {
        n,
        alpha,
        lambda,
        m: mvalue.m,
        half_width: e,
        rows: dominance_rows(&q, e)?,
    })
}

/// Per-derivative endpoint comparison for any polynomial on `[-e, e]`.
pub fn dominance_rows<P: PolyEval>(q: &P, e: f64) -> Result<Vec<DominanceRow>> {
    let n = q.degree();
    let cascade = derivative_cascade(q)?;
    Ok((0..=n)
        .map(|k| {
            let endpoint_value = q.derivative_at(k, e).0.abs();
            let interior_max = if k == n {
                q.derivative_at(n, 0.0).0.abs()
            } else {
                cascade
                    .zeros(k + 1)
                    .iter()
                    .filter(|t| t.abs() < e)
                    .map(|&t| q.derivative_at(k, t).0.abs())
                    .fold(0.0, f64::max)
            };
            DominanceRow {
                k,
                endpoint_value,
                interior_max,
                margin: endpoint_value - interior_max,
                pass: interior_max <= endpoint_value * (1.0 + DOMINANCE_RTOL),
                gated: k >= 1,
            }
        })
        .collect())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FirstHalfReport {
    pub a: f64,
    pub b: f64,
    /// Zeros of `P''`, ascending.
    pub tau: Vec<f64>,
    /// `|P'(a)|`.
    pub endpoint_slope: f64,
    /// `|P'(a)| - |P'(τ_j)|` for `j = 1 ..= ⌊(n-1)/2⌋`.
    pub margins: Vec<f64>,
    pub pass: bool,
}

/// The local extrema of `P'` in the first half of `[a, b]` stay below
/// `|P'(a)|`, for oscillating `P` of degree >= 3 with
/// `max_[a,b] |P| = |P(a)| = 1`.
pub fn bn_first_half_check<P: PolyEval>(p: &P, a: f64, b: f64) -> Result<FirstHalfReport> {
    let n = p.degree();
    if n < 3 {
        return Err(domain(
            "bn_first_half_check",
            format!("need degree >= 3, got {n}"),
        ));
    }
    let profile = extremal_profile(p, a, b)?;
    let at_a = profile.hvalues[0];
    let sup = profile.hvalues.iter().copied().fold(0.0, f64::max);
    if (at_a - 1.0).abs() > 1e-10 || sup > 1.0 + 1e-10 {
        return Err(Error::NotNormalized { at_a, sup });
    }
    let cascade = derivative_cascade(p)?;
    let tau = cascade.zeros(2).to_vec();
    let endpoint_slope = p.derivative_at(1, a).0.abs();
    let margins: Vec<f64> = tau
        .iter()
        .take((n - 1) / 2)
        .map(|&t| endpoint_slope - p.derivative_at(1, t).0.abs())
        .collect();
    let pass = margins.iter().all(|&m| m > 1e-12);
    Ok(FirstHalfReport {
        a,
        b,
        tau,
        endpoint_slope,
        margins,
        pass,
    })
}
