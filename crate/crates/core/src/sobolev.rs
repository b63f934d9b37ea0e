//! Monic Gegenbauer–Sobolev polynomials `Q_n` for
//! `⟨f, g⟩_S = ∫ f g dμ + λ ∫ f' g' dμ`.
//!
//! [`sobolev_family`] builds them from the connection formula
//! `Q_n = C_n^(α-1) + d_{n-2} Q_{n-2}` with
//! `d_n = ξ_n ‖C_n^(α)‖²_μ / ‖Q_n‖²_S`, working on Gegenbauer-basis
//! coefficients. [`stieltjes_sobolev_oracle`] is an independent
//! construction by orthogonalization in the monomial basis, used to
//! cross-check the first.

use crate::error::{domain, Error, Result};
use crate::gegenbauer::{
    check_alpha, gegenbauer_at_one, gegenbauer_family, gegenbauer_norm_sq, structure_xi,
};
use crate::poly::{Parity, Poly};
use crate::quadrature::{gauss_gegenbauer, sobolev_inner, Quadrature};
use crate::series::GegenbauerSeries;

fn check_lambda(op: &'static str, lambda: f64) -> Result<()> {
    if lambda >= 0.0 && lambda.is_finite() {
        Ok(())
    } else {
        Err(domain(
            op,
            format!("lambda must be finite and >= 0, got {lambda}"),
        ))
    }
}

#[derive(Debug, Clone)]
pub struct SobolevFamily {
    pub alpha: f64,
    pub lambda: f64,
    pub nmax: usize,
    /// Monomial coefficients of `Q_0, ..., Q_nmax`.
    pub polys: Vec<Poly>,
    /// The same polynomials in the monic `C^(α)` basis.
    pub series: Vec<GegenbauerSeries>,
    /// `‖Q_n‖²_S`.
    pub snorms: Vec<f64>,
    /// `d_0, ..., d_{nmax-2}`. `d_0 = ξ_0` diverges at `α = 0`, where it is
    /// stored as `+∞`; `Q_2 = C_2^(α)` for every α regardless.
    pub dcoeffs: Vec<f64>,
    quad: Quadrature,
}

impl SobolevFamily {
    /// `⟨Q_m, Q_n⟩_S`, evaluated through the Gegenbauer-basis form.
    pub fn inner(&self, m: usize, n: usize) -> f64 {
        sobolev_inner(&self.series[m], &self.series[n], self.lambda, &self.quad)
            .expect("family quadrature covers every pair of members")
    }

    /// `|⟨Q_m, Q_n⟩_S| / (‖Q_m‖_S ‖Q_n‖_S)`.
    pub fn orthogonality_residual(&self, m: usize, n: usize) -> f64 {
        self.inner(m, n).abs() / (self.snorms[m] * self.snorms[n]).sqrt()
    }

    /// Largest residual over all distinct pairs.
    pub fn max_orthogonality_residual(&self) -> f64 {
        let mut worst = 0.0f64;
        for m in 0..=self.nmax {
            for n in m + 1..=self.nmax {
                worst = worst.max(self.orthogonality_residual(m, n));
            }
        }
        worst
    }

    /// `Q_0(1), ..., Q_nmax(1)` from the connection formula evaluated at
    /// `x = 1`, where every term is a product of positive factors when
    /// `α >= 1/2`. At `α = 1/2` the true values fall far below the rounding
    /// level of any expanded form, since `C_n^(-1/2)(1) = 0`.
    pub fn values_at_one(&self) -> Vec<f64> {
        let mut out: Vec<f64> = vec![1.0; (self.nmax + 1).min(2)];
        for n in 2..=self.nmax {
            let v = if n == 2 {
                gegenbauer_at_one(2, self.alpha).expect("alpha checked at construction")
            } else {
                shifted_at_one(n, self.alpha) + self.dcoeffs[n - 2] * out[n - 2]
            };
            out.push(v);
        }
        out
    }

    /// The quadrature rule the family was normalized with (exact through
    /// degree `2 nmax + 3`).
    pub fn quadrature(&self) -> &Quadrature {
        &self.quad
    }
}

/// `C_n^(α-1)(1)` for `n >= 3`, as the product
/// `∏_{k=1}^{n-1} (2β + k) / (2 (β + k))` with `β = α - 1`. At `α = 0` the
/// product has a removable 0·∞ and the structure relation is used instead.
fn shifted_at_one(n: usize, alpha: f64) -> f64 {
    if alpha == 0.0 {
        let xi = structure_xi(n - 2, 0.0);
        return (1.0 - 2.0 * n as f64).exp2() - xi * (3.0 - 2.0 * n as f64).exp2();
    }
    let beta = alpha - 1.0;
    (1..n)
        .map(|k| (2.0 * beta + k as f64) / (2.0 * (beta + k as f64)))
        .product()
}

/// Builds `Q_0, ..., Q_nmax` by the connection formula.
pub fn sobolev_family(nmax: usize, alpha: f64, lambda: f64) -> Result<SobolevFamily> {
    check_alpha("sobolev_family", alpha)?;
    check_lambda("sobolev_family", lambda)?;

    let quad = gauss_gegenbauer(nmax + 2, alpha)?;
    let geg = gegenbauer_family(nmax, alpha)?;
    let snorm = |s: &GegenbauerSeries| sobolev_inner(s, s, lambda, &quad);

    let mut series = vec![GegenbauerSeries::basis(0, alpha)];
    if nmax >= 1 {
        series.push(GegenbauerSeries::basis(1, alpha));
    }
    let mut snorms = series.iter().map(snorm).collect::<Result<Vec<_>>>()?;
    let mut dcoeffs = Vec::with_capacity(nmax.saturating_sub(1));

    for n in 2..=nmax {
        let xi = structure_xi(n - 2, alpha);
        let q = if n == 2 {
            // ‖Q_0‖_S = ‖C_0‖_μ makes d_0 = ξ_0 exactly, so the two ξ_0 terms
            // cancel and Q_2 = C_2^(α); this also covers α = 0 where ξ_0 = ∞.
            dcoeffs.push(if alpha == 0.0 { f64::INFINITY } else { xi });
            GegenbauerSeries::basis(2, alpha)
        } else {
            let d = xi * gegenbauer_norm_sq(n - 2, alpha)? / snorms[n - 2];
            dcoeffs.push(d);
            let mut b = vec![0.0; n + 1];
            b[n] = 1.0;
            b[n - 2] = -xi;
            for (j, &c) in series[n - 2].coeffs().iter().enumerate() {
                b[j] += d * c;
            }
            GegenbauerSeries::new(alpha, b)
        };
        snorms.push(snorm(&q)?);
        series.push(q);
    }

    let polys = series
        .iter()
        .enumerate()
        .map(|(n, s)| {
            let mut p = s.to_poly_with(&geg);
            let dropped = p.enforce_parity(Parity::of_degree(n));
            debug_assert!(dropped <= 1e-13, "parity drift {dropped:e} at n = {n}");
            p
        })
        .collect();

    Ok(SobolevFamily {
        alpha,
        lambda,
        nmax,
        polys,
        series,
        snorms,
        dcoeffs,
        quad,
    })
}

/// `16 λ n² d_n`, which tends to 1 as `n → ∞`.
pub fn dn_asymptotic_ratio(n: usize, fam: &SobolevFamily) -> Result<f64> {
    if fam.lambda == 0.0 {
        return Err(domain("dn_asymptotic_ratio", "undefined for lambda = 0"));
    }
    if n == 0 || n + 2 > fam.nmax {
        return Err(domain(
            "dn_asymptotic_ratio",
            format!("need 1 <= n <= nmax - 2 = {}, got {n}", fam.nmax as i64 - 2),
        ));
    }
    let nf = n as f64;
    Ok(16.0 * fam.lambda * nf * nf * fam.dcoeffs[n])
}

/// Output of the orthogonalization oracle.
#[derive(Debug, Clone)]
pub struct StieltjesFamily {
    pub alpha: f64,
    pub lambda: f64,
    pub nmax: usize,
    pub polys: Vec<Poly>,
    pub snorms: Vec<f64>,
    pub max_residual: f64,
}

/// Degree cap of the oracle in binary64.
pub const ORACLE_MAX_DEGREE: usize = 25;

/// Builds the monic Sobolev-orthogonal sequence without the connection
/// formula: each candidate `x Q_{k-1}` is orthogonalized against every
/// earlier member by modified Gram–Schmidt, run twice. Coefficients,
/// nodal values and nodal derivatives are carried side by side, so the
/// inner products never go through Horner's scheme.
pub fn stieltjes_sobolev_oracle(nmax: usize, alpha: f64, lambda: f64) -> Result<StieltjesFamily> {
    check_alpha("stieltjes_sobolev_oracle", alpha)?;
    check_lambda("stieltjes_sobolev_oracle", lambda)?;
    if nmax > ORACLE_MAX_DEGREE {
        return Err(domain(
            "stieltjes_sobolev_oracle",
            format!("nmax {nmax} exceeds the oracle cap {ORACLE_MAX_DEGREE}"),
        ));
    }
    let quad = gauss_gegenbauer(nmax + 2, alpha)?;
    let m = quad.len();

    struct Member {
        coeffs: Vec<f64>,
        values: Vec<f64>,
        slopes: Vec<f64>,
    }
    let inner = |a: &Member, b: &Member| -> f64 {
        (0..m)
            .map(|i| {
                quad.weights[i] * (a.values[i] * b.values[i] + lambda * a.slopes[i] * b.slopes[i])
            })
            .sum()
    };

    let mut members = vec![Member {
        coeffs: vec![1.0],
        values: vec![1.0; m],
        slopes: vec![0.0; m],
    }];
    let mut snorms = vec![inner(&members[0], &members[0])];

    for k in 1..=nmax {
        let prev = &members[k - 1];
        let mut coeffs = vec![0.0; k + 1];
        coeffs[1..].copy_from_slice(&prev.coeffs);
        let mut cand = Member {
            coeffs,
            values: (0..m).map(|i| quad.nodes[i] * prev.values[i]).collect(),
            slopes: (0..m)
                .map(|i| prev.values[i] + quad.nodes[i] * prev.slopes[i])
                .collect(),
        };
        for _pass in 0..2 {
            for (j, q) in members.iter().enumerate() {
                let c = inner(&cand, q) / snorms[j];
                for (a, b) in cand.coeffs.iter_mut().zip(&q.coeffs) {
                    *a -= c * b;
                }
                for i in 0..m {
                    cand.values[i] -= c * q.values[i];
                    cand.slopes[i] -= c * q.slopes[i];
                }
            }
        }
        snorms.push(inner(&cand, &cand));
        members.push(cand);
    }

    let mut max_residual = 0.0f64;
    for a in 0..=nmax {
        for b in a + 1..=nmax {
            let r = inner(&members[a], &members[b]).abs() / (snorms[a] * snorms[b]).sqrt();
            if r > 1e-9 {
                return Err(Error::LossOfOrthogonality {
                    m: a,
                    n: b,
                    residual: r,
                });
            }
            max_residual = max_residual.max(r);
        }
    }

    let polys = members
        .into_iter()
        .enumerate()
        .map(|(n, q)| Poly::with_parity(q.coeffs, Parity::of_degree(n)))
        .collect();

    Ok(StieltjesFamily {
        alpha,
        lambda,
        nmax,
        polys,
        snorms,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gegenbauer::moment;

    #[test]
    fn base_cases() {
        let f = sobolev_family(1, 0.7, 2.0).unwrap();
        assert_eq!(f.polys[0].coeffs(), &[1.0]);
        assert_eq!(f.polys[1].coeffs(), &[0.0, 1.0]);
        let mu0 = moment(0, 0.7).unwrap();
        assert!((f.snorms[0] - mu0).abs() < 1e-14 * mu0);
        let s1 = moment(1, 0.7).unwrap() + 2.0 * mu0;
        assert!((f.snorms[1] - s1).abs() < 1e-14 * s1);
        assert!(f.dcoeffs.is_empty());
    }

    #[test]
    fn second_member_is_lambda_independent() {
        let f = sobolev_family(2, 1.0, 7.0).unwrap();
        assert_eq!(f.polys[2].coeffs(), &[-0.25, 0.0, 1.0]);
        assert!((f.dcoeffs[0] - 0.25).abs() < 1e-16);
    }

    #[test]
    fn chebyshev_parameter_has_divergent_first_coefficient() {
        let f = sobolev_family(6, 0.0, 1.0).unwrap();
        assert_eq!(f.dcoeffs[0], f64::INFINITY);
        assert!(f.dcoeffs[1..].iter().all(|&d| d.is_finite() && d > 0.0));
        assert_eq!(f.polys[2].coeffs(), &[-0.5, 0.0, 1.0]);
    }

    #[test]
    fn ratio_rejects_bad_input() {
        let f = sobolev_family(6, 1.0, 0.0).unwrap();
        assert!(dn_asymptotic_ratio(2, &f).is_err());
        let g = sobolev_family(6, 1.0, 1.0).unwrap();
        assert!(dn_asymptotic_ratio(0, &g).is_err());
        assert!(dn_asymptotic_ratio(5, &g).is_err());
        assert!(dn_asymptotic_ratio(4, &g).is_ok());
    }

    #[test]
    fn oracle_examples() {
        let o = stieltjes_sobolev_oracle(1, 0.3, 4.0).unwrap();
        assert_eq!(o.polys[1].coeffs(), &[0.0, 1.0]);
        let o = stieltjes_sobolev_oracle(2, 1.0, 1.0).unwrap();
        let c = moment(1, 1.0).unwrap() / moment(0, 1.0).unwrap();
        assert!((o.polys[2].coeffs()[0] + c).abs() < 1e-15);
        let o = stieltjes_sobolev_oracle(10, 1.0, 1.0).unwrap();
        assert!(o.max_residual <= 1e-10);
        assert!(stieltjes_sobolev_oracle(26, 1.0, 1.0).is_err());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(sobolev_family(4, -0.5, 1.0).is_err());
        assert!(sobolev_family(4, 1.0, -1e-3).is_err());
        assert!(sobolev_family(4, 1.0, f64::NAN).is_err());
    }
}
