//! Eigenvalues of real symmetric tridiagonal matrices by Sturm-sequence
//! bisection.

/// Number of eigenvalues strictly less than `x`, from the signs of the
/// pivots of the LDLᵀ factorization of `T - x I`.
fn sturm_count(diag: &[f64], off: &[f64], x: f64) -> usize {
    let mut count = 0;
    let mut q = 1.0f64;
    for i in 0..diag.len() {
        let e2 = if i == 0 { 0.0 } else { off[i - 1] * off[i - 1] };
        q = diag[i] - x - if i == 0 { 0.0 } else { e2 / q };
        if q == 0.0 {
            q = -f64::EPSILON * (x.abs() + 1.0);
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

/// All eigenvalues of the symmetric tridiagonal matrix with diagonal `diag`
/// and sub/super-diagonal `off`, in ascending order. Each eigenvalue is
/// bisected until its bracket no longer shrinks in binary64, which puts
/// it within a few ulps of `‖T‖`.
///
/// # Panics
/// Panics if `off.len() + 1 != diag.len()` (for non-empty `diag`).
pub fn symmetric_tridiagonal_eigenvalues(diag: &[f64], off: &[f64]) -> Vec<f64> {
    let m = diag.len();
    if m == 0 {
        return Vec::new();
    }
    assert_eq!(off.len() + 1, m, "off-diagonal must have length m - 1");

    // Gershgorin interval.
    let mut lo = f64::INFINITY;
    let mut hi = f64::NEG_INFINITY;
    for i in 0..m {
        let r =
            if i > 0 { off[i - 1].abs() } else { 0.0 } + if i + 1 < m { off[i].abs() } else { 0.0 };
        lo = lo.min(diag[i] - r);
        hi = hi.max(diag[i] + r);
    }
    let pad = f64::EPSILON * (lo.abs().max(hi.abs()) + 1.0) * m as f64;
    lo -= pad;
    hi += pad;

    (0..m)
        .map(|k| {
            // smallest x with sturm_count(x) > k
            let (mut a, mut b) = (lo, hi);
            loop {
                let mid = 0.5 * (a + b);
                if mid <= a || mid >= b {
                    break;
                }
                if sturm_count(diag, off, mid) > k {
                    b = mid;
                } else {
                    a = mid;
                }
            }
            0.5 * (a + b)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_by_one() {
        assert_eq!(symmetric_tridiagonal_eigenvalues(&[2.5], &[]), vec![2.5]);
    }

    #[test]
    fn discrete_laplacian() {
        // eigenvalues 2 - 2 cos(kπ/(m+1))
        let m = 12;
        let ev = symmetric_tridiagonal_eigenvalues(&vec![2.0; m], &vec![-1.0; m - 1]);
        for (k, &e) in ev.iter().enumerate() {
            let want = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (m + 1) as f64).cos();
            assert!((e - want).abs() < 1e-14, "{k}: {e} vs {want}");
        }
    }

    #[test]
    fn clustered_spectrum_with_tiny_coupling() {
        let ev = symmetric_tridiagonal_eigenvalues(&[1.0, 1.0, 3.0], &[1e-9, 0.0]);
        assert!((ev[0] - (1.0 - 1e-9)).abs() < 1e-15);
        assert!((ev[1] - (1.0 + 1e-9)).abs() < 1e-15);
        assert!((ev[2] - 3.0).abs() < 1e-15);
    }
}
