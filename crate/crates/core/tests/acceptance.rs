//! End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
//! the process exits non-zero if any criterion fails.

use sobopoly_core::{
    compute_m, dn_asymptotic_ratio, endpoint_dominance_report, gauss_gegenbauer, gegenbauer_family,
    gegenbauer_values, gegenbauer_zeros, interlacing_verdict, normalized, real_zeros_cascade,
    sobolev_family, stieltjes_sobolev_oracle, structure_xi, GegenbauerSeries, Interlacing,
    PolyEval,
};
use std::time::Instant;

const ALPHAS: [f64; 5] = [-0.25, 0.0, 0.5, 1.0, 2.5];
const LAMBDAS: [f64; 4] = [0.0, 0.5, 1.0, 10.0];

const FIG1_M: f64 = 0.9926198253;
const FIG2_M: f64 = 1.091516326;
const M_TOL: f64 = 1e-7;
const REDUCTION_TOL: f64 = 1e-12;
const ORACLE_TOL: f64 = 1e-10;
const ORTHO_TOL: f64 = 1e-10;
const CHEB_ZERO_TOL: f64 = 1e-12;
const CHEB_M_TOL: f64 = 1e-12;
const CHEB_SLOPE_RTOL: f64 = 1e-9;
const DN_BRACKET: (f64, f64) = (0.995, 1.005);
const STRUCTURE_TOL: f64 = 1e-10;
const STRUCTURE_FACTOR: f64 = 1e6;

type Check = (&'static str, fn() -> Outcome);

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn max_coeff_diff(a: &[f64], b: &[f64]) -> f64 {
    (0..a.len().max(b.len()))
        .map(|i| (a.get(i).unwrap_or(&0.0) - b.get(i).unwrap_or(&0.0)).abs())
        .fold(0.0, f64::max)
}

fn figure_m(n: usize, alpha: f64, lambda: f64, want: f64) -> Outcome {
    let m = compute_m(n, alpha, lambda).unwrap();
    let err = (m.m - want).abs();
    outcome(
        err <= M_TOL,
        format!(
            "M = {:.13}, expected {want}, |diff| = {err:.3e} (tol {M_TOL:e})",
            m.m
        ),
    )
}

fn dominance_grid() -> Outcome {
    let mut tuples = 0;
    let mut failures = Vec::new();
    for n in 3..=12 {
        for &alpha in &ALPHAS {
            for &lambda in &LAMBDAS {
                tuples += 1;
                let r = endpoint_dominance_report(n, alpha, lambda, None).unwrap();
                let wide = endpoint_dominance_report(n, alpha, lambda, Some(2.0 * r.m)).unwrap();
                if !r.passed() {
                    failures.push(format!("({n},{alpha},{lambda}) on [-M,M]"));
                }
                if !wide.passed() {
                    failures.push(format!("({n},{alpha},{lambda}) on [-2M,2M]"));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{tuples} tuples x 2 intervals, failures: {failures:?}"),
    )
}

fn lambda_zero_reduction() -> Outcome {
    let mut worst = 0.0f64;
    for &alpha in &ALPHAS {
        let fam = sobolev_family(15, alpha, 0.0).unwrap();
        let geg = gegenbauer_family(15, alpha).unwrap();
        for n in 0..=15 {
            worst = worst.max(max_coeff_diff(fam.polys[n].coeffs(), geg.polys[n].coeffs()));
        }
    }
    outcome(
        worst <= REDUCTION_TOL,
        format!("max coeff diff {worst:.3e}"),
    )
}

fn oracle_equivalence() -> Outcome {
    let mut worst = 0.0f64;
    for &alpha in &ALPHAS {
        for &lambda in &LAMBDAS {
            let fam = sobolev_family(15, alpha, lambda).unwrap();
            let oracle = stieltjes_sobolev_oracle(15, alpha, lambda).unwrap();
            for n in 0..=15 {
                worst = worst.max(max_coeff_diff(
                    fam.polys[n].coeffs(),
                    oracle.polys[n].coeffs(),
                ));
            }
        }
    }
    outcome(worst <= ORACLE_TOL, format!("max coeff diff {worst:.3e}"))
}

fn orthogonality() -> Outcome {
    let mut worst = 0.0f64;
    for &alpha in &ALPHAS {
        for &lambda in &LAMBDAS {
            worst = worst.max(
                sobolev_family(20, alpha, lambda)
                    .unwrap()
                    .max_orthogonality_residual(),
            );
        }
    }
    outcome(
        worst <= ORTHO_TOL,
        format!("max relative residual {worst:.3e}"),
    )
}

fn chebyshev() -> Outcome {
    let mut zero_err = 0.0f64;
    for n in 1..=25 {
        let z = real_zeros_cascade(&GegenbauerSeries::basis(n, 0.0)).unwrap();
        for (i, &x) in z.zeros.iter().enumerate() {
            let j = (n - i) as f64;
            let want = ((2.0 * j - 1.0) * std::f64::consts::PI / (2.0 * n as f64)).cos();
            zero_err = zero_err.max((x - want).abs());
        }
    }
    let mut m_err = 0.0f64;
    let mut slope_err = 0.0f64;
    for n in 2..=20 {
        let q = normalized(n, 0.0, 0.0).unwrap();
        m_err = m_err.max((q.mvalue.m - 1.0).abs());
        let n2 = (n * n) as f64;
        for x in [-1.0, 1.0] {
            slope_err = slope_err.max((q.q.derivative_at(1, x).0.abs() - n2).abs() / n2);
        }
    }
    outcome(
        zero_err <= CHEB_ZERO_TOL && m_err <= CHEB_M_TOL && slope_err <= CHEB_SLOPE_RTOL,
        format!("zeros {zero_err:.3e}, |M - 1| {m_err:.3e}, slope rel {slope_err:.3e}"),
    )
}

fn interlacing_and_location() -> Outcome {
    let mut failures = Vec::new();
    let (mut strict, mut coincident) = (0, 0);
    for &alpha in &ALPHAS {
        for &lambda in &LAMBDAS {
            let fam = sobolev_family(20, alpha, lambda).unwrap();
            for n in 1..=20 {
                let q = real_zeros_cascade(&fam.series[n]).unwrap().zeros;
                let c = gegenbauer_zeros(n, alpha).unwrap().zeros;
                // Q_n = C_n exactly when lambda = 0 or n <= 2
                let identical = lambda == 0.0 || n <= 2;
                let want = if identical {
                    Interlacing::Coincident
                } else {
                    Interlacing::Strict
                };
                let got = interlacing_verdict(&q, &c);
                if got != want {
                    failures.push(format!("interlace ({n},{alpha},{lambda}): {got:?}"));
                } else if identical {
                    coincident += 1;
                } else {
                    strict += 1;
                }
                let outside = q.iter().filter(|x| x.abs() > 1.0).count();
                let allowed = if alpha >= 0.5 { 0 } else { 2 };
                let outer_only = outside == 0 || (q[0].abs() > 1.0 && q[n - 1].abs() > 1.0);
                if outside > allowed || !outer_only {
                    failures.push(format!(
                        "location ({n},{alpha},{lambda}): {outside} outside"
                    ));
                }
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!("{strict} strict, {coincident} coincident, failures: {failures:?}"),
    )
}

fn sign_at_one() -> Outcome {
    let mut least = f64::INFINITY;
    for &alpha in ALPHAS.iter().filter(|&&a| a >= 0.5) {
        for &lambda in &LAMBDAS {
            let fam = sobolev_family(20, alpha, lambda).unwrap();
            for v in fam.values_at_one() {
                least = least.min(v);
            }
        }
    }
    outcome(least > 0.0, format!("min Q_n(1) = {least:.3e}"))
}

fn dn_asymptotics() -> Outcome {
    let fam = sobolev_family(42, 1.0, 1.0).unwrap();
    let r10 = dn_asymptotic_ratio(10, &fam).unwrap();
    let r40 = dn_asymptotic_ratio(40, &fam).unwrap();
    let in_bracket = r40 >= DN_BRACKET.0 && r40 <= DN_BRACKET.1;
    outcome(
        in_bracket && (r40 - 1.0).abs() < (r10 - 1.0).abs(),
        format!("ratio(10) = {r10:.12}, ratio(40) = {r40:.12}, bracket {DN_BRACKET:?}"),
    )
}

/// Largest relative `μ_{α-1}` inner product of `C_n^(α) + sign ξ C_{n-2}^(α)`
/// against `C_j^(α-1)`, `j < n`.
fn shifted_residual(alpha: f64, nmax: usize, sign: f64) -> f64 {
    let quad = gauss_gegenbauer(nmax + 1, alpha - 1.0).unwrap();
    let at: Vec<(Vec<f64>, Vec<f64>)> = quad
        .nodes
        .iter()
        .map(|&x| {
            (
                gegenbauer_values(nmax, alpha, x),
                gegenbauer_values(nmax, alpha - 1.0, x),
            )
        })
        .collect();
    let integrate =
        |f: &dyn Fn(usize) -> f64| -> f64 { (0..quad.len()).map(|i| quad.weights[i] * f(i)).sum() };
    let mut worst = 0.0f64;
    for n in 2..=nmax {
        let xi = structure_xi(n - 2, alpha);
        let cand = |i: usize| at[i].0[n] + sign * xi * at[i].0[n - 2];
        let cand_norm = integrate(&|i| cand(i) * cand(i)).sqrt();
        for j in 0..n {
            let cj_norm = integrate(&|i| at[i].1[j] * at[i].1[j]).sqrt();
            let ip = integrate(&|i| cand(i) * at[i].1[j]);
            worst = worst.max(ip.abs() / (cand_norm * cj_norm));
        }
    }
    worst
}

fn structure_sign() -> Outcome {
    let mut minus_worst = 0.0f64;
    let mut plus_least = f64::INFINITY;
    for alpha in [1.0, 1.5, 2.5] {
        minus_worst = minus_worst.max(shifted_residual(alpha, 20, -1.0));
        plus_least = plus_least.min(shifted_residual(alpha, 20, 1.0));
    }
    outcome(
        minus_worst <= STRUCTURE_TOL
            && plus_least >= STRUCTURE_FACTOR * STRUCTURE_TOL.max(minus_worst),
        format!("minus form {minus_worst:.3e}, plus form {plus_least:.3e}"),
    )
}

fn main() {
    let start = Instant::now();
    let criteria: Vec<Check> = vec![
        ("1 figure-1 M value", || figure_m(4, 1.0, 1.0, FIG1_M)),
        ("2 figure-2 M value", || figure_m(7, -0.25, 0.5, FIG2_M)),
        ("3 endpoint dominance grid", dominance_grid),
        ("4 lambda = 0 reduction", lambda_zero_reduction),
        ("5 oracle equivalence", oracle_equivalence),
        ("6 Sobolev orthogonality", orthogonality),
        ("7 Chebyshev closed forms", chebyshev),
        ("8 interlacing and zero location", interlacing_and_location),
        ("9 sign at one", sign_at_one),
        ("10 d_n asymptotics", dn_asymptotics),
        ("11 structure relation sign", structure_sign),
    ];
    let mut failed = 0;
    for (name, check) in criteria {
        let o = check();
        if !o.pass {
            failed += 1;
        }
        println!(
            "criterion {name}: {} ({})",
            if o.pass { "PASS" } else { "FAIL" },
            o.detail
        );
    }
    println!(
        "acceptance: {} of 11 passed in {:.1?}",
        11 - failed,
        start.elapsed()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
