//! Gauss–Gegenbauer quadrature and the Sobolev inner product
//! `⟨f, g⟩_S = ∫ f g dμ + λ ∫ f' g' dμ` with `dμ = (1 - x²)^(α - 1/2) dx`.

use crate::error::{domain, Error, Result};
use crate::gegenbauer::{check_alpha, gamma_unchecked, moment};
use crate::poly::PolyEval;
use crate::tridiag::symmetric_tridiagonal_eigenvalues;

#[derive(Debug, Clone, PartialEq)]
pub struct Quadrature {
    pub alpha: f64,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
    /// Polynomials up to this degree are integrated exactly (up to rounding).
    pub exact_degree: usize,
}

impl Quadrature {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// `Σ w_i f(x_i)` in ascending node order.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&x, &w)| w * f(x))
            .sum()
    }
}

/// `m`-point Gauss rule for the Gegenbauer weight with parameter `alpha`.
///
/// Nodes are the eigenvalues of the Jacobi matrix (zero diagonal,
/// off-diagonal `√γ_k`). Weights come from the Christoffel function,
/// `w_i = μ₀ / Σ_{k<m} p̂_k(x_i)²` with `p̂_k` orthonormal for `μ / μ₀`, so
/// no eigenvectors are needed. The rule is symmetrized exactly.
pub fn gauss_gegenbauer(m: usize, alpha: f64) -> Result<Quadrature> {
    check_alpha("gauss_gegenbauer", alpha)?;
    if m == 0 {
        return Err(domain("gauss_gegenbauer", "need at least one node"));
    }
    let mu0 = moment(0, alpha)?;
    let sqrt_gamma: Vec<f64> = (1..m).map(|k| gamma_unchecked(k, alpha).sqrt()).collect();
    let mut nodes = symmetric_tridiagonal_eigenvalues(&vec![0.0; m], &sqrt_gamma);

    for i in 0..m / 2 {
        let x = 0.5 * (nodes[m - 1 - i] - nodes[i]);
        nodes[i] = -x;
        nodes[m - 1 - i] = x;
    }
    if m % 2 == 1 {
        nodes[m / 2] = 0.0;
    }

    let mut weights: Vec<f64> = nodes
        .iter()
        .map(|&x| {
            let mut prev = 0.0;
            let mut cur = 1.0;
            let mut sum = 1.0;
            for k in 1..m {
                // √γ_k p̂_k = x p̂_{k-1} - √γ_{k-1} p̂_{k-2}
                let back = if k >= 2 {
                    sqrt_gamma[k - 2] * prev
                } else {
                    0.0
                };
                let next = (x * cur - back) / sqrt_gamma[k - 1];
                prev = cur;
                cur = next;
                sum += cur * cur;
            }
            mu0 / sum
        })
        .collect();
    for i in 0..m / 2 {
        let w = 0.5 * (weights[i] + weights[m - 1 - i]);
        weights[i] = w;
        weights[m - 1 - i] = w;
    }

    Ok(Quadrature {
        alpha,
        nodes,
        weights,
        exact_degree: 2 * m - 1,
    })
}

fn check_degree(quad: &Quadrature, needed: usize) -> Result<()> {
    if needed > quad.exact_degree {
        Err(Error::QuadratureTooSmall {
            needed,
            exact: quad.exact_degree,
        })
    } else {
        Ok(())
    }
}

/// `∫ f g dμ` by the rule `quad`.
pub fn inner_mu<F: PolyEval, G: PolyEval>(f: &F, g: &G, quad: &Quadrature) -> Result<f64> {
    check_degree(quad, f.degree() + g.degree())?;
    Ok(quad.integrate(|x| f.value(x) * g.value(x)))
}

/// `⟨f, g⟩_S = ∫ f g dμ + λ ∫ f' g' dμ` by the rule `quad`.
pub fn sobolev_inner<F: PolyEval, G: PolyEval>(
    f: &F,
    g: &G,
    lambda: f64,
    quad: &Quadrature,
) -> Result<f64> {
    if !(lambda >= 0.0) {
        return Err(domain(
            "sobolev_inner",
            format!("lambda must be >= 0, got {lambda}"),
        ));
    }
    check_degree(quad, f.degree() + g.degree())?;
    Ok(quad.integrate(|x| {
        f.value(x) * g.value(x) + lambda * f.derivative_at(1, x).0 * g.derivative_at(1, x).0
    }))
}
