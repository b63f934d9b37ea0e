//! Gegenbauer and Gegenbauer–Sobolev orthogonal polynomials: construction,
//! quadrature, certified real zeros, and the endpoint extremal analysis of
//! their derivatives.
//!
//! The Sobolev family is orthogonal for
//! `⟨f, g⟩_S = ∫ f g dμ + λ ∫ f' g' dμ`, `dμ = (1 - x²)^(α - 1/2) dx` on
//! `[-1, 1]`, with `α > -1/2` and `λ >= 0`.

// `!(a < b)` style guards are kept on purpose: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod extremal;
pub mod gegenbauer;
pub mod poly;
pub mod quadrature;
pub mod roots;
pub mod series;
pub mod sobolev;
pub mod special;
pub mod tridiag;

pub use error::{Error, Result};
pub use extremal::{
    bn_first_half_check, compute_m, dominance_rows, endpoint_dominance_report, extremal_point,
    extremal_profile, normalized, normalized_q, DominanceReport, DominanceRow, ExtremalProfile,
    FirstHalfReport, MValue, Normalized, DOMINANCE_RTOL,
};
pub use gegenbauer::{
    gegenbauer_at_one, gegenbauer_family, gegenbauer_norm_sq, gegenbauer_values, moment,
    recurrence_gamma, shifted_family_poly, structure_xi, GegenbauerFamily,
};
pub use poly::{cauchy_bound, poly_eval, real_zero_bound, Parity, Poly, PolyEval};
pub use quadrature::{gauss_gegenbauer, inner_mu, sobolev_inner, Quadrature};
pub use roots::{
    derivative_cascade, gegenbauer_zeros, interlacing_verdict, real_zeros_cascade,
    strictly_interlace, symmetric_interlace, Cascade, Interlacing, ZeroSet,
};
pub use series::GegenbauerSeries;
pub use sobolev::{
    dn_asymptotic_ratio, sobolev_family, stieltjes_sobolev_oracle, SobolevFamily, StieltjesFamily,
    ORACLE_MAX_DEGREE,
};
pub use special::log_gamma;
