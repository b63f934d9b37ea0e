//! Polynomials expanded in the monic Gegenbauer basis.
//!
//! A [`GegenbauerSeries`] stores `P = Σ b_j C_j^(α)`. Values come from the
//! three-term recurrence and derivatives from
//! `d^k/dx^k C_j^(α) = j (j-1) ... (j-k+1) C_{j-k}^(α+k)`, so every
//! evaluation is a short, well-conditioned sum. Monomial coefficients of the
//! families in this crate grow like `(1 + √2)^n / 2^n` while the values
//! shrink like `2^-n`; past degree ~15 Horner's scheme on those coefficients
//! no longer resolves zeros or orthogonality residuals to 1e-12, and this
//! representation does.

use crate::error::Result;
use crate::gegenbauer::{fill_values, gegenbauer_family, GegenbauerFamily};
use crate::poly::{falling, Parity, Poly, PolyEval};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GegenbauerSeries {
    alpha: f64,
    coeffs: Vec<f64>,
    parity: Parity,
}

impl GegenbauerSeries {
    pub fn new(alpha: f64, mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs[coeffs.len() - 1] == 0.0 {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        let odd_mass = coeffs.iter().skip(1).step_by(2).any(|&c| c != 0.0);
        let even_mass = coeffs.iter().step_by(2).any(|&c| c != 0.0);
        let parity = match (even_mass, odd_mass) {
            (_, false) => Parity::Even,
            (false, true) => Parity::Odd,
            (true, true) => Parity::None,
        };
        GegenbauerSeries {
            alpha,
            coeffs,
            parity,
        }
    }

    /// The single basis element `C_n^(α)`.
    pub fn basis(n: usize, alpha: f64) -> Self {
        let mut c = vec![0.0; n + 1];
        c[n] = 1.0;
        Self::new(alpha, c)
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn scaled(&self, s: f64) -> Self {
        Self::new(self.alpha, self.coeffs.iter().map(|c| c * s).collect())
    }

    /// Monomial form, using the coefficient tables of `fam` (which must share
    /// `alpha` and reach at least this degree).
    pub fn to_poly_with(&self, fam: &GegenbauerFamily) -> Poly {
        debug_assert_eq!(fam.alpha, self.alpha);
        let n = self.coeffs.len() - 1;
        let mut out = vec![0.0; n + 1];
        for (j, &b) in self.coeffs.iter().enumerate() {
            if b == 0.0 {
                continue;
            }
            for (i, &c) in fam.polys[j].coeffs().iter().enumerate() {
                out[i] += b * c;
            }
        }
        Poly::with_parity(out, self.parity)
    }

    pub fn to_poly(&self) -> Result<Poly> {
        let fam = gegenbauer_family(self.coeffs.len() - 1, self.alpha)?;
        Ok(self.to_poly_with(&fam))
    }
}

impl PolyEval for GegenbauerSeries {
    fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    fn parity(&self) -> Parity {
        self.parity
    }

    fn derivative_at(&self, k: usize, x: f64) -> (f64, f64) {
        let n = self.coeffs.len() - 1;
        if k > n {
            return (0.0, 0.0);
        }
        let mut basis = Vec::with_capacity(n - k + 1);
        fill_values(n - k, self.alpha + k as f64, x, &mut basis);
        let mut v = 0.0;
        let mut s = 0.0;
        for (j, &b) in self.coeffs.iter().enumerate().skip(k) {
            let t = b * falling(j, k) * basis[j - k];
            v += t;
            s += t.abs();
        }
        (v, s)
    }

    fn derivative_poly(&self, k: usize) -> Poly {
        // Only used for root bounds; the family tables are cheap at these degrees.
        self.to_poly()
            .map(|p| p.nth_derivative(k))
            .unwrap_or_else(|_| Poly::zero())
    }
}
