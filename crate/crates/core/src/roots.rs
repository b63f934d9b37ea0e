//! Real zeros of oscillating polynomials by the derivative cascade.
//!
//! Every derivative of a polynomial with only real zeros again has only real
//! zeros, and by Rolle's theorem the zeros of `P^(k+1)` separate those of
//! `P^(k)`. Starting from the linear `P^(n-1)` and walking down, each level
//! is therefore a set of guaranteed brackets for the next. The same pass
//! yields the critical points of every derivative order.

use crate::error::{domain, Error, Result};
use crate::gegenbauer::{check_alpha, gegenbauer_values};
use crate::poly::{cauchy_bound, real_zero_bound, Parity, Poly, PolyEval};
use crate::quadrature::gauss_gegenbauer;
use log::warn;
use serde::Serialize;

/// Bracket width at which bisection stops.
pub const ROOT_WIDTH: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ZeroSet {
    pub zeros: Vec<f64>,
    pub residuals: Vec<f64>,
    /// Half-width of the outer search interval.
    pub bound: f64,
}

impl ZeroSet {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }
}

/// Zeros of every derivative of a polynomial of degree `n`:
/// `levels[k]` holds the `n - k` zeros of `P^(k)`, ascending.
#[derive(Debug, Clone, PartialEq)]
pub struct Cascade {
    pub levels: Vec<Vec<f64>>,
    pub bounds: Vec<f64>,
}

impl Cascade {
    pub fn degree(&self) -> usize {
        self.levels.len()
    }

    /// Zeros of `P^(k)`; empty for `k >= n`.
    pub fn zeros(&self, k: usize) -> &[f64] {
        self.levels.get(k).map(Vec::as_slice).unwrap_or(&[])
    }
}

/// Finds a zero of `f` in `[l, r]` given `f(l)` and `f(r)` of opposite sign
/// (or one of them zero). Bisection down to [`ROOT_WIDTH`], then guarded
/// Newton steps that must stay inside the final bracket.
pub(crate) fn bracketed_root(
    f: impl Fn(f64) -> f64,
    df: impl Fn(f64) -> f64,
    mut l: f64,
    mut r: f64,
    mut fl: f64,
) -> f64 {
    loop {
        let mid = 0.5 * (l + r);
        if r - l <= ROOT_WIDTH || mid <= l || mid >= r {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (fl < 0.0) {
            l = mid;
            fl = fm;
        } else {
            r = mid;
        }
    }
    let mut x = 0.5 * (l + r);
    let mut fx = f(x);
    for _ in 0..3 {
        let d = df(x);
        if d == 0.0 || fx == 0.0 {
            break;
        }
        let next = x - fx / d;
        if !(next >= l && next <= r) {
            break;
        }
        let fnext = f(next);
        if fnext.abs() >= fx.abs() {
            break;
        }
        x = next;
        fx = fnext;
    }
    x
}

/// Outer search half-width: the Cauchy bound, tightened by the
/// real-zero spread bound when that one applies. The Cauchy bound of a
/// high-order derivative can be orders of magnitude too wide, and evaluating
/// there overflows.
fn search_bound(p: &Poly) -> f64 {
    let cauchy = cauchy_bound(p);
    match real_zero_bound(p) {
        Some(b) => cauchy.min(b * (1.0 + 1e-8) + 1e-12),
        None => cauchy,
    }
}

fn symmetrize(z: &mut [f64]) {
    let m = z.len();
    for i in 0..m / 2 {
        let a = 0.5 * (z[m - 1 - i] - z[i]);
        z[i] = -a;
        z[m - 1 - i] = a;
    }
    if m % 2 == 1 {
        z[m / 2] = 0.0;
    }
}

/// Runs the cascade on `p` and returns the zeros of all derivative orders.
///
/// Raw derivative values must stay finite, which limits the degree to 170
/// for monic inputs of unit scale (`170!` is the largest finite factorial).
///
/// Fails with [`Error::BracketFailure`] when a Rolle bracket shows no sign
/// change, i.e. when `p` is not oscillating.
pub fn derivative_cascade<P: PolyEval>(p: &P) -> Result<Cascade> {
    let n = p.degree();
    if n == 0 {
        return Err(domain("real_zeros_cascade", "degree must be at least 1"));
    }
    let symmetric = p.parity() != Parity::None;
    let mut levels = vec![Vec::new(); n];
    let mut bounds = vec![0.0; n];

    // P^(n-1)(x) = a + b x, which is odd whenever P has a parity
    let b = p.derivative_at(n, 0.0).0;
    let a = p.derivative_at(n - 1, 0.0).0;
    let top = if symmetric { 0.0 } else { -a / b };
    levels[n - 1] = vec![top];
    bounds[n - 1] = cauchy_bound(&p.derivative_poly(n - 1));

    for k in (0..n - 1).rev() {
        let bound = search_bound(&p.derivative_poly(k));
        bounds[k] = bound;
        let f = |x: f64| p.derivative_at(k, x).0;
        let df = |x: f64| p.derivative_at(k + 1, x).0;

        let mut edges = Vec::with_capacity(n - k + 1);
        edges.push(-bound);
        edges.extend(levels[k + 1].iter().copied());
        edges.push(bound);

        let mut zeros = Vec::with_capacity(n - k);
        for w in edges.windows(2) {
            let (l, r) = (w[0].min(w[1]), w[1]);
            let (fl, sl) = p.derivative_at(k, l);
            let (fr, sr) = p.derivative_at(k, r);
            let root = if fl == 0.0 {
                l
            } else if fr == 0.0 {
                r
            } else if (fl < 0.0) != (fr < 0.0) {
                bracketed_root(f, df, l, r, fl)
            } else if fl.abs() <= 4.0 * f64::EPSILON * sl * (n as f64) {
                // tangency at a bracket end: a multiple root of P^(k)
                l
            } else if fr.abs() <= 4.0 * f64::EPSILON * sr * (n as f64) {
                r
            } else {
                return Err(Error::BracketFailure {
                    order: k,
                    left: l,
                    right: r,
                });
            };
            zeros.push(root);
        }
        if symmetric {
            symmetrize(&mut zeros);
        }
        if let Some(gap) = zeros
            .windows(2)
            .map(|w| w[1] - w[0])
            .reduce(f64::min)
            .filter(|&g| g < 1e-12)
        {
            warn!("derivative order {k}: zeros separated by only {gap:e}");
        }
        levels[k] = zeros;
    }
    if symmetric {
        symmetrize(&mut levels[n - 1]);
    }
    Ok(Cascade { levels, bounds })
}

/// Real zeros of an oscillating polynomial, ascending.
pub fn real_zeros_cascade<P: PolyEval>(p: &P) -> Result<ZeroSet> {
    let c = derivative_cascade(p)?;
    let zeros = c.levels[0].clone();
    let residuals = zeros.iter().map(|&z| p.value(z).abs()).collect();
    Ok(ZeroSet {
        zeros,
        residuals,
        bound: c.bounds[0],
    })
}

/// Zeros of `C_n^(α)` as the nodes of the `n`-point Gauss rule (the
/// eigenvalues of the Jacobi matrix). Residuals use recurrence evaluation.
pub fn gegenbauer_zeros(n: usize, alpha: f64) -> Result<ZeroSet> {
    check_alpha("gegenbauer_zeros", alpha)?;
    if n == 0 {
        return Err(domain("gegenbauer_zeros", "degree must be at least 1"));
    }
    let q = gauss_gegenbauer(n, alpha)?;
    let residuals = q
        .nodes
        .iter()
        .map(|&x| gegenbauer_values(n, alpha, x)[n].abs())
        .collect();
    Ok(ZeroSet {
        zeros: q.nodes,
        residuals,
        bound: 1.0,
    })
}

/// Whether two zero sets strictly alternate when merged.
pub fn strictly_interlace(a: &[f64], b: &[f64]) -> bool {
    if a.len().abs_diff(b.len()) > 1 {
        return false;
    }
    let mut merged: Vec<(f64, u8)> = a
        .iter()
        .map(|&x| (x, 0))
        .chain(b.iter().map(|&x| (x, 1)))
        .collect();
    merged.sort_by(|x, y| x.0.total_cmp(&y.0));
    merged
        .windows(2)
        .all(|w| w[0].1 != w[1].1 && w[0].0 < w[1].0)
}

/// Interlacing for zero sets symmetric about the origin: the positive zeros
/// of the two sets strictly alternate. (Two symmetric sets of the same size
/// can never alternate over the whole line, since the reflection sends the
/// smallest element of one set to the largest of the same set.)
pub fn symmetric_interlace(a: &[f64], b: &[f64]) -> bool {
    let pos = |z: &[f64]| z.iter().copied().filter(|&x| x > 0.0).collect::<Vec<_>>();
    strictly_interlace(&pos(a), &pos(b))
}

/// How the zeros of two symmetric polynomials of the same degree relate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Interlacing {
    /// Positive zeros strictly alternate.
    Strict,
    /// The zero sets agree to `1e-12`: the polynomials coincide.
    Coincident,
    Violated,
}

pub fn interlacing_verdict(a: &[f64], b: &[f64]) -> Interlacing {
    if a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() <= 1e-12) {
        Interlacing::Coincident
    } else if symmetric_interlace(a, b) {
        Interlacing::Strict
    } else {
        Interlacing::Violated
    }
}
