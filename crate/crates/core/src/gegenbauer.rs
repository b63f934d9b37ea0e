//! Monic Gegenbauer polynomials `C_n^(α)`, orthogonal for the weight
//! `(1 - x²)^(α - 1/2)` on `[-1, 1]`.
//!
//! Closed forms for the recurrence coefficients, norms, values at one and
//! even moments live here, together with the structure relation that shifts
//! the parameter from `α` to `α - 1`.

use crate::error::{domain, Result};
use crate::poly::{Parity, Poly};
use crate::special::{log_beta, log_gamma};
use std::f64::consts::PI;

pub(crate) fn check_alpha(op: &'static str, alpha: f64) -> Result<()> {
    if alpha > -0.5 && alpha.is_finite() {
        Ok(())
    } else {
        Err(domain(op, format!("alpha must exceed -1/2, got {alpha}")))
    }
}

/// Recurrence coefficient `γ_n` of `x C_n = C_{n+1} + γ_n C_{n-1}`.
///
/// The removable singularity at `α = 0, n = 1` is cancelled before dividing:
/// `γ_1 = 1 / (2 (1 + α))`.
pub fn recurrence_gamma(n: usize, alpha: f64) -> Result<f64> {
    check_alpha("recurrence_gamma", alpha)?;
    if n == 0 {
        return Err(domain("recurrence_gamma", "n must be at least 1"));
    }
    Ok(gamma_unchecked(n, alpha))
}

#[inline]
pub(crate) fn gamma_unchecked(n: usize, alpha: f64) -> f64 {
    if n == 1 {
        return 0.5 / (1.0 + alpha);
    }
    if alpha == 0.0 {
        return 0.25;
    }
    let n = n as f64;
    n * (n + 2.0 * alpha - 1.0) / (4.0 * (n + alpha) * (n + alpha - 1.0))
}

/// Coefficient `ξ_n` of the structure relation
/// `C_{n+2}^(α-1) = C_{n+2}^(α) - ξ_n C_n^(α)`.
///
/// Diverges at `α = 0, n = 0` (there is no monic `C_2^(-1)`), and is
/// negative for `n = 0, α < 0`.
pub fn structure_xi(n: usize, alpha: f64) -> f64 {
    let nf = n as f64;
    (nf + 2.0) * (nf + 1.0) / (4.0 * (nf + alpha + 1.0) * (nf + alpha))
}

/// Even moment `∫ x^{2k} (1 - x²)^(α - 1/2) dx = B(k + 1/2, α + 1/2)`.
pub fn moment(k: usize, alpha: f64) -> Result<f64> {
    check_alpha("moment", alpha)?;
    Ok(log_beta(k as f64 + 0.5, alpha + 0.5)?.exp())
}

/// `‖C_n^(α)‖²` with respect to the Gegenbauer weight, evaluated in log space.
///
/// `α = 0` uses the Chebyshev values `π` (n = 0) and `π 2^{1-2n}` (n ≥ 1);
/// `n = 0` uses the total mass `B(1/2, α + 1/2)` for every α.
pub fn gegenbauer_norm_sq(n: usize, alpha: f64) -> Result<f64> {
    check_alpha("gegenbauer_norm_sq", alpha)?;
    if n == 0 {
        return moment(0, alpha);
    }
    if alpha == 0.0 {
        return Ok(PI * (1.0 - 2.0 * n as f64).exp2());
    }
    let nf = n as f64;
    let ln = PI.ln()
        + (1.0 - 2.0 * alpha - 2.0 * nf) * std::f64::consts::LN_2
        + log_gamma(nf + 1.0)?
        + log_gamma(nf + 2.0 * alpha)?
        - log_gamma(nf + alpha + 1.0)?
        - log_gamma(nf + alpha)?;
    Ok(ln.exp())
}

/// `C_n^(α)(1)`, the classical value `Γ(n+2α) / (n! Γ(2α))` divided by the
/// leading coefficient `2^n Γ(n+α) / (n! Γ(α))`.
///
/// The ratio `Γ(α) / Γ(2α)` is rewritten with the duplication formula so
/// that every gamma argument stays positive, which also covers `α ≤ 0`.
pub fn gegenbauer_at_one(n: usize, alpha: f64) -> Result<f64> {
    check_alpha("gegenbauer_at_one", alpha)?;
    if n == 0 {
        return Ok(1.0);
    }
    let nf = n as f64;
    let ln = log_gamma(nf + 2.0 * alpha)? + 0.5 * PI.ln()
        - (nf + 2.0 * alpha - 1.0) * std::f64::consts::LN_2
        - log_gamma(alpha + 0.5)?
        - log_gamma(nf + alpha)?;
    Ok(ln.exp())
}

/// Values `C_0(x), ..., C_{nmax}(x)` by the three-term recurrence.
///
/// This is the reference evaluation route: it stays accurate where Horner's
/// scheme on monomial coefficients loses digits to cancellation.
pub fn gegenbauer_values(nmax: usize, alpha: f64, x: f64) -> Vec<f64> {
    let mut out = Vec::with_capacity(nmax + 1);
    fill_values(nmax, alpha, x, &mut out);
    out
}

pub(crate) fn fill_values(nmax: usize, alpha: f64, x: f64, out: &mut Vec<f64>) {
    out.clear();
    out.push(1.0);
    if nmax == 0 {
        return;
    }
    out.push(x);
    for n in 1..nmax {
        let next = x * out[n] - gamma_unchecked(n, alpha) * out[n - 1];
        out.push(next);
    }
}

/// The monic family `C_0, ..., C_{nmax}` with its recurrence data.
#[derive(Debug, Clone)]
pub struct GegenbauerFamily {
    pub alpha: f64,
    pub nmax: usize,
    pub polys: Vec<Poly>,
    /// `gammas[i]` holds `γ_{i+1}`.
    pub gammas: Vec<f64>,
    pub norms_mu: Vec<f64>,
}

impl GegenbauerFamily {
    pub fn gamma(&self, n: usize) -> f64 {
        self.gammas[n - 1]
    }
}

pub fn gegenbauer_family(nmax: usize, alpha: f64) -> Result<GegenbauerFamily> {
    check_alpha("gegenbauer_family", alpha)?;
    let gammas: Vec<f64> = (1..=nmax).map(|n| gamma_unchecked(n, alpha)).collect();

    let mut polys = vec![Poly::constant(1.0)];
    if nmax >= 1 {
        polys.push(Poly::monomial(1));
    }
    for n in 1..nmax {
        let (cur, prev) = (polys[n].coeffs(), polys[n - 1].coeffs());
        let mut c = vec![0.0; n + 2];
        for (i, &a) in cur.iter().enumerate() {
            c[i + 1] += a;
        }
        for (i, &a) in prev.iter().enumerate() {
            c[i] -= gammas[n - 1] * a;
        }
        polys.push(Poly::with_parity(c, Parity::of_degree(n + 1)));
    }

    let norms_mu = (0..=nmax)
        .map(|n| gegenbauer_norm_sq(n, alpha))
        .collect::<Result<Vec<_>>>()?;

    Ok(GegenbauerFamily {
        alpha,
        nmax,
        polys,
        gammas,
        norms_mu,
    })
}

/// `C_n^(α-1)` from the structure relation `C_n^(α) - ξ_{n-2} C_{n-2}^(α)`.
pub fn shifted_family_poly(n: usize, fam: &GegenbauerFamily) -> Result<Poly> {
    if n < 2 {
        return Err(domain("shifted_family_poly", "defined for n >= 2"));
    }
    if n > fam.nmax {
        return Err(domain(
            "shifted_family_poly",
            format!("family holds degrees up to {}, asked for {n}", fam.nmax),
        ));
    }
    if n == 2 && fam.alpha == 0.0 {
        return Err(domain(
            "shifted_family_poly",
            "C_2 with parameter -1 does not exist (xi_0 diverges at alpha = 0)",
        ));
    }
    let xi = structure_xi(n - 2, fam.alpha);
    let mut p = &fam.polys[n] - &fam.polys[n - 2].scaled(xi);
    p.enforce_parity(Parity::of_degree(n));
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn recurrence_gamma_examples() {
        assert!((recurrence_gamma(1, 1.0).unwrap() - 0.25).abs() < 1e-16);
        assert_eq!(recurrence_gamma(3, 0.0).unwrap(), 0.25);
        assert!((recurrence_gamma(2, 0.5).unwrap() - 4.0 / 15.0).abs() < 1e-16);
        assert_eq!(recurrence_gamma(1, 0.0).unwrap(), 0.5);
        assert!(recurrence_gamma(0, 1.0).is_err());
        assert!(recurrence_gamma(2, -0.5).is_err());
    }

    #[test]
    fn legendre_gamma_is_n_squared_over_odd_product() {
        for n in 1..30 {
            let nf = n as f64;
            let want = nf * nf / ((2.0 * nf - 1.0) * (2.0 * nf + 1.0));
            assert!((recurrence_gamma(n, 0.5).unwrap() - want).abs() < 1e-16);
        }
    }

    #[test]
    fn family_examples() {
        let f = gegenbauer_family(2, 1.0).unwrap();
        assert_eq!(f.polys[2].coeffs(), &[-0.25, 0.0, 1.0]);

        let t = gegenbauer_family(3, 0.0).unwrap();
        assert_eq!(t.polys[3].coeffs(), &[0.0, -0.75, 0.0, 1.0]);

        let one = gegenbauer_family(1, 7.3).unwrap();
        assert_eq!(one.polys[1].coeffs(), &[0.0, 1.0]);
        assert_eq!(one.polys[1].parity(), Parity::Odd);
    }

    #[test]
    fn shifted_examples() {
        let f = gegenbauer_family(4, 1.0).unwrap();
        assert_eq!(
            shifted_family_poly(2, &f).unwrap().coeffs(),
            &[-0.5, 0.0, 1.0]
        );
        assert_eq!(
            shifted_family_poly(3, &f).unwrap().coeffs(),
            &[0.0, -0.75, 0.0, 1.0]
        );
        assert!(shifted_family_poly(1, &f).is_err());
        assert!(shifted_family_poly(5, &f).is_err());
        let cheb = gegenbauer_family(4, 0.0).unwrap();
        assert!(shifted_family_poly(2, &cheb).is_err());
        assert!(shifted_family_poly(3, &cheb).is_ok());
    }

    #[test]
    fn shifted_to_legendre_weight() {
        // α = 3/2 shifts to the Legendre weight; monic P_4 = x⁴ - 6/7 x² + 3/35.
        let f = gegenbauer_family(4, 1.5).unwrap();
        let p = shifted_family_poly(4, &f).unwrap();
        let want = [3.0 / 35.0, 0.0, -6.0 / 7.0, 0.0, 1.0];
        for (a, b) in p.coeffs().iter().zip(want) {
            assert!((a - b).abs() < 1e-15);
        }
    }

    #[test]
    fn norm_examples() {
        assert!((gegenbauer_norm_sq(1, 0.5).unwrap() - 2.0 / 3.0).abs() < 1e-14);
        assert!((gegenbauer_norm_sq(0, 0.5).unwrap() - 2.0).abs() < 1e-14);
        assert!((gegenbauer_norm_sq(2, 1.0).unwrap() - PI / 32.0).abs() < 1e-15);
        assert!((gegenbauer_norm_sq(0, 0.0).unwrap() - PI).abs() < 1e-14);
        assert!((gegenbauer_norm_sq(3, 0.0).unwrap() - PI / 32.0).abs() < 1e-16);
        // stays finite deep into the range where factorials overflow
        let big = gegenbauer_norm_sq(200, 2.5).unwrap();
        assert!(big.is_finite() && big > 0.0);
    }

    #[test]
    fn value_at_one_examples() {
        assert!((gegenbauer_at_one(3, 0.0).unwrap() - 0.25).abs() < 1e-15);
        assert!((gegenbauer_at_one(2, 1.0).unwrap() - 0.75).abs() < 1e-14);
        assert_eq!(gegenbauer_at_one(0, 2.2).unwrap(), 1.0);
    }

    #[test]
    fn moment_examples() {
        assert!((moment(0, 0.5).unwrap() - 2.0).abs() < 1e-14);
        assert!((moment(1, 0.5).unwrap() - 2.0 / 3.0).abs() < 1e-14);
        assert!((moment(1, 1.0).unwrap() - PI / 8.0).abs() < 1e-15);
        assert!(moment(1, -0.5).is_err());
    }

    #[test]
    fn recurrence_values_match_closed_form_chebyshev() {
        for &x in &[-0.9, -0.3, 0.0, 0.41, 0.999] {
            let v = gegenbauer_values(20, 0.0, x);
            let theta = f64::acos(x);
            for (n, &c) in v.iter().enumerate().skip(1) {
                let t = (n as f64 * theta).cos() * (1.0 - n as f64).exp2();
                assert!((c - t).abs() < 1e-15);
            }
        }
    }
}
