//! Recovering a multiset of complex numbers from its power sums.
//!
//! Two independent routes to the same monic polynomial: Newton's identities,
//! and the first-row cofactor expansion of the `(d+1)×(d+1)` determinant
//! whose first row is `z^d, ..., z, 1` and whose row `k` is
//! `s_k, s_{k-1}, ..., s_1, k, 0, ..., 0`, divided by `d!`. Roots are taken
//! from the Newton polynomial via its companion matrix.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::linalg::{determinant, eigenvalues, ComplexMatrix, ONE, ZERO};
use crate::spectra::multiset::{power_sums_of, refine_multiple_values};

/// Largest degree accepted by [`roots_from_power_sums`].
pub const MAX_DEGREE: usize = 32;

/// Power sums `s_1..s_L` of an unknown multiset of `degree` values.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerSums {
    sums: Vec<Complex64>,
    degree: usize,
    /// Absolute error estimate per sum.
    errors: Vec<f64>,
}

impl PowerSums {
    pub fn new(sums: Vec<Complex64>, degree: usize) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidArgument("power-sum degree must be at least 1".into()));
        }
        if sums.len() < degree {
            return Err(Error::InvalidArgument(format!("{} power sums given for degree {degree}", sums.len())));
        }
        if sums.iter().any(|s| !s.re.is_finite() || !s.im.is_finite()) {
            return Err(Error::InvalidArgument("power sums must be finite".into()));
        }
        let errors = sums.iter().map(|s| 4.0 * f64::EPSILON * s.norm()).collect();
        Ok(PowerSums { sums, degree, errors })
    }

    /// Attaches absolute error estimates, e.g. `ε·Σ|a_g|·|χ(g)|` for sums
    /// obtained by applying a floating-point character to exact traces.
    pub fn with_errors(mut self, errors: Vec<f64>) -> Result<Self> {
        if errors.len() != self.sums.len() || errors.iter().any(|e| !(*e >= 0.0 && e.is_finite())) {
            return Err(Error::InvalidArgument("one finite non-negative error per power sum is required".into()));
        }
        self.errors = errors;
        Ok(self)
    }

    pub fn errors(&self) -> &[f64] {
        &self.errors
    }

    pub fn from_real(sums: &[f64], degree: usize) -> Result<Self> {
        Self::new(sums.iter().map(|&s| Complex64::new(s, 0.0)).collect(), degree)
    }

    /// `s_1..s_L`.
    pub fn sums(&self) -> &[Complex64] {
        &self.sums
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `max(1, max_k |s_k|)` over the first `degree` sums.
    pub fn magnitude(&self) -> f64 {
        self.sums[..self.degree].iter().map(|s| s.norm()).fold(1.0, f64::max)
    }
}

/// Monic polynomial coefficients `[1, c_1, ..., c_d]` (highest degree first),
/// via `k·e_k = Σ_{j=1..k} (−1)^{j−1} e_{k−j} s_j` and `c_k = (−1)^k e_k`.
pub fn newton_polynomial(p: &PowerSums) -> Vec<Complex64> {
    let d = p.degree;
    let s = &p.sums;
    let mut e = vec![ZERO; d + 1];
    e[0] = ONE;
    for k in 1..=d {
        let mut acc = ZERO;
        for j in 1..=k {
            let term = e[k - j] * s[j - 1];
            if j % 2 == 1 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        e[k] = acc / k as f64;
    }
    e.iter().enumerate().map(|(k, &ek)| if k % 2 == 0 { ek } else { -ek }).collect()
}

/// First-order forward error bounds for the coefficients of
/// [`newton_polynomial`], from the per-sum errors plus rounding in the
/// recurrence itself.
pub fn newton_error_bounds(p: &PowerSums) -> Vec<f64> {
    let d = p.degree;
    let s = &p.sums;
    let u = 4.0 * (d as f64 + 1.0) * f64::EPSILON;
    let e = newton_polynomial(p);
    let mut err = vec![0.0; d + 1];
    for k in 1..=d {
        let mut acc = 0.0;
        for j in 1..=k {
            let sj = s[j - 1].norm();
            acc += err[k - j] * sj + e[k - j].norm() * (p.errors[j - 1] + u * sj);
        }
        err[k] = acc / k as f64;
    }
    err
}

/// Sets trailing coefficients that are indistinguishable from zero to zero,
/// so that a multiple root at the origin comes out exact instead of as a
/// ring of radius `δ^(1/k)`.
fn deflate_trailing_zeros(coeffs: &mut [Complex64], bounds: &[f64]) {
    for k in (1..coeffs.len()).rev() {
        if coeffs[k].norm() > 10.0 * bounds[k] {
            break;
        }
        coeffs[k] = ZERO;
    }
}

/// Monic polynomial coefficients from `det C(z) / d!`, expanding along the
/// first row; each cofactor is a numeric determinant.
pub fn determinant_polynomial(p: &PowerSums) -> Vec<Complex64> {
    let d = p.degree;
    let s = &p.sums;
    // rows 1..=d of C(z); column j of row k is s_{k-j} (j < k), k (j == k), else 0
    let lower = |k: usize, j: usize| -> Complex64 {
        match j.cmp(&k) {
            std::cmp::Ordering::Less => s[k - j - 1],
            std::cmp::Ordering::Equal => Complex64::new(k as f64, 0.0),
            std::cmp::Ordering::Greater => ZERO,
        }
    };
    let factorial: f64 = (1..=d).map(|k| k as f64).product();
    (0..=d)
        .map(|j| {
            let minor = ComplexMatrix::from_fn(d, d, |a, b| {
                let col = if b < j { b } else { b + 1 };
                lower(a + 1, col)
            });
            let sign = if j % 2 == 0 { 1.0 } else { -1.0 };
            determinant(&minor) * sign / factorial
        })
        .collect()
}

/// Largest coefficientwise difference between the two polynomial routes.
pub fn polynomial_discrepancy(p: &PowerSums) -> f64 {
    newton_polynomial(p)
        .iter()
        .zip(determinant_polynomial(p))
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max)
}

/// Roots of a monic polynomial `[1, c_1, ..., c_d]` as companion-matrix
/// eigenvalues.
pub fn polynomial_roots(coeffs: &[Complex64]) -> Result<Vec<Complex64>> {
    let d = coeffs.len() - 1;
    let companion = ComplexMatrix::from_fn(d, d, |i, j| {
        if i == 0 {
            -coeffs[j + 1]
        } else if i == j + 1 {
            ONE
        } else {
            ZERO
        }
    });
    eigenvalues(&companion)
}

/// The unique multiset of `p.degree()` values whose power sums are `p`.
///
/// Both polynomial routes are computed and must agree within
/// `1e-8·max(1, |s|∞)^d`; the returned roots come from the Newton route,
/// with trailing coefficients below their rounding-error bound treated as
/// zero and multiple roots collapsed to their cluster mean. Every supplied power
/// sum (including any beyond the degree) is re-checked against the roots.
pub fn roots_from_power_sums(p: &PowerSums) -> Result<Vec<Complex64>> {
    let d = p.degree;
    if d > MAX_DEGREE {
        return Err(Error::SizeLimit(format!("degree {d} exceeds the power-sum limit of {MAX_DEGREE}")));
    }
    let newton = newton_polynomial(p);
    let via_det = determinant_polynomial(p);
    let bound = 1e-8 * p.magnitude().powi(d as i32);
    let gap = newton.iter().zip(&via_det).map(|(a, b)| (a - b).norm()).fold(0.0, f64::max);
    if !(gap <= bound) {
        return Err(Error::InconsistentPowerSums(format!(
            "Newton and determinant polynomials differ by {gap:.3e} (bound {bound:.3e})"
        )));
    }
    let mut deflated = newton.clone();
    deflate_trailing_zeros(&mut deflated, &newton_error_bounds(p));
    let raw = polynomial_roots(&deflated)?;
    let scale = raw.iter().map(|z| z.norm()).fold(0.0, f64::max);
    let roots = refine_multiple_values(&raw, &p.sums[..d], scale);

    let check = power_sums_of(&roots, p.sums.len());
    for (k, (got, want)) in check.iter().zip(&p.sums).enumerate() {
        let mag: f64 = 1.0 + roots.iter().map(|z| z.norm().powi(k as i32 + 1)).sum::<f64>();
        if (got - want).norm() > 1e-6 * mag.max(want.norm()) {
            return Err(Error::InconsistentPowerSums(format!(
                "s_{} = {want} but the recovered roots give {got}",
                k + 1
            )));
        }
    }
    Ok(roots)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn sorted(mut v: Vec<Complex64>) -> Vec<Complex64> {
        v.sort_by(|a, b| a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im)));
        v
    }

    fn assert_multiset(got: Vec<Complex64>, want: &[Complex64], tol: f64) {
        let (got, want) = (sorted(got), sorted(want.to_vec()));
        assert_eq!(got.len(), want.len());
        for (g, w) in got.iter().zip(&want) {
            assert!((g - w).norm() <= tol, "{got:?} vs {want:?}");
        }
    }

    #[test]
    fn worked_example_power_sums() {
        let p = PowerSums::from_real(&[0.0, 2.0, 0.0, 2.0], 4).unwrap();
        assert_eq!(newton_polynomial(&p), vec![ONE, ZERO, -ONE, ZERO, ZERO]);
        assert!(polynomial_discrepancy(&p) < 1e-12);
        let roots = roots_from_power_sums(&p).unwrap();
        assert_multiset(roots, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(-1.0, 0.0)], 1e-8);
    }

    #[test]
    fn single_value() {
        let p = PowerSums::from_real(&[5.0], 1).unwrap();
        assert_eq!(determinant_polynomial(&p), vec![ONE, c(-5.0, 0.0)]);
        assert_multiset(roots_from_power_sums(&p).unwrap(), &[c(5.0, 0.0)], 1e-14);
    }

    #[test]
    fn two_and_plus_minus_i() {
        // 2 + i - i = 2;  4 - 1 - 1 = 2;  8 - i + i = 8
        let p = PowerSums::from_real(&[2.0, 2.0, 8.0], 3).unwrap();
        assert_multiset(roots_from_power_sums(&p).unwrap(), &[c(2.0, 0.0), c(0.0, 1.0), c(0.0, -1.0)], 1e-10);
    }

    #[test]
    fn triple_root_is_recovered_exactly_enough() {
        let values = [c(1.5, 0.5); 3];
        let mut all = values.to_vec();
        all.push(c(-2.0, 0.0));
        let p = PowerSums::new(power_sums_of(&all, 4), 4).unwrap();
        assert_multiset(roots_from_power_sums(&p).unwrap(), &all, 1e-9);
    }

    #[test]
    fn inconsistent_extra_sums_rejected() {
        // s1, s2 of {1, -1} but s3 = 5 instead of 0
        let p = PowerSums::from_real(&[0.0, 2.0, 5.0], 2).unwrap();
        assert!(matches!(roots_from_power_sums(&p), Err(Error::InconsistentPowerSums(_))));
    }

    #[test]
    fn zero_roots_are_exact() {
        // five generic values padded with a five-fold zero
        let values = [c(2.7, 0.0), c(0.5, 1.6), c(0.5, -1.6), c(-1.0, 0.0), c(-0.3, 0.0)];
        let mut all = values.to_vec();
        all.extend([ZERO; 5]);
        let p = PowerSums::new(power_sums_of(&all, 10), 10).unwrap();
        let roots = roots_from_power_sums(&p).unwrap();
        assert_eq!(roots.iter().filter(|z| **z == ZERO).count(), 5, "{roots:?}");
        assert_multiset(roots, &all, 1e-9);
    }

    #[test]
    fn bad_inputs() {
        assert!(PowerSums::from_real(&[1.0], 2).is_err());
        assert!(PowerSums::from_real(&[], 0).is_err());
        let big = PowerSums::from_real(&[0.0; 33], 33).unwrap();
        assert!(matches!(roots_from_power_sums(&big), Err(Error::SizeLimit(_))));
    }
}
