//! Real 2x2 matrices, the Sp(2) generator triple, and a series matrix
//! exponential used as an independent oracle for the closed forms elsewhere
//! in the crate.
//!
//! Everything here is plain `f64` arithmetic on a four-field struct; there is
//! deliberately no eigendecomposition anywhere. The generator triple `J`,
//! `K1`, `K2` spans the algebra the rest of the crate lives in:
//!
//! ```text
//! J  = [0 -1; 1 0]   rotation generator        J^2  = -I
//! K1 = [1  0; 0 -1]  axis squeeze generator    K1^2 =  I
//! K2 = [0  1; 1 0]   45-degree squeeze gen.    K2^2 =  I
//! [J, K1] = 2 K2,  [J, K2] = -2 K1,  [K1, K2] = -2 J
//! ```
//!
//! These are the real forms of the pure-imaginary Pauli-like triple: all
//! exponentials of their real spans stay real.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// A real 2x2 matrix with named entries, row-major.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat2 {
    pub a11: f64,
    pub a12: f64,
    pub a21: f64,
    pub a22: f64,
}

/// Rotation generator: `exp(alpha * J)` is the rotation by `alpha`.
pub const J: Mat2 = Mat2::new(0.0, -1.0, 1.0, 0.0);

/// Axis squeeze generator: `exp(beta * K1) = diag(e^beta, e^-beta)`.
pub const K1: Mat2 = Mat2::new(1.0, 0.0, 0.0, -1.0);

/// 45-degree squeeze generator: `exp(w * K2) = [cosh w, sinh w; sinh w, cosh w]`.
pub const K2: Mat2 = Mat2::new(0.0, 1.0, 1.0, 0.0);

/// Default truncation tolerance for [`expm_series`], relative to the norm of
/// the (scaled) linear term.
pub const SERIES_TOL: f64 = 1e-14;

/// Default term cap for [`expm_series`]. Inputs in this crate have Frobenius
/// norm well under ~20, for which the scaled series settles in a few tens of
/// terms.
pub const SERIES_MAX_TERMS: usize = 64;

impl Mat2 {
    pub const IDENTITY: Mat2 = Mat2::new(1.0, 0.0, 0.0, 1.0);
    pub const ZERO: Mat2 = Mat2::new(0.0, 0.0, 0.0, 0.0);

    pub const fn new(a11: f64, a12: f64, a21: f64, a22: f64) -> Self {
        Mat2 { a11, a12, a21, a22 }
    }

    /// `a11 * a22 - a12 * a21`.
    pub fn det(&self) -> f64 {
        self.a11 * self.a22 - self.a12 * self.a21
    }

    pub fn transpose(&self) -> Mat2 {
        Mat2::new(self.a11, self.a21, self.a12, self.a22)
    }

    pub fn trace(&self) -> f64 {
        self.a11 + self.a22
    }

    /// Frobenius norm, the canonical matrix distance throughout the crate.
    pub fn frobenius_norm(&self) -> f64 {
        (self.a11 * self.a11 + self.a12 * self.a12 + self.a21 * self.a21 + self.a22 * self.a22)
            .sqrt()
    }

    /// Frobenius distance to `other`.
    pub fn distance(&self, other: &Mat2) -> f64 {
        (*self - *other).frobenius_norm()
    }

    pub fn scale(&self, c: f64) -> Mat2 {
        Mat2::new(c * self.a11, c * self.a12, c * self.a21, c * self.a22)
    }

    pub fn is_finite(&self) -> bool {
        self.a11.is_finite() && self.a12.is_finite() && self.a21.is_finite() && self.a22.is_finite()
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 * rhs.a11 + self.a12 * rhs.a21,
            self.a11 * rhs.a12 + self.a12 * rhs.a22,
            self.a21 * rhs.a11 + self.a22 * rhs.a21,
            self.a21 * rhs.a12 + self.a22 * rhs.a22,
        )
    }
}

impl Add for Mat2 {
    type Output = Mat2;

    fn add(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 + rhs.a11,
            self.a12 + rhs.a12,
            self.a21 + rhs.a21,
            self.a22 + rhs.a22,
        )
    }
}

impl Sub for Mat2 {
    type Output = Mat2;

    fn sub(self, rhs: Mat2) -> Mat2 {
        Mat2::new(
            self.a11 - rhs.a11,
            self.a12 - rhs.a12,
            self.a21 - rhs.a21,
            self.a22 - rhs.a22,
        )
    }
}

impl Neg for Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        self.scale(-1.0)
    }
}

/// Commutator `a b - b a`.
pub fn commutator(a: Mat2, b: Mat2) -> Mat2 {
    a * b - b * a
}

/// Matrix exponential by scaled Taylor series.
///
/// The argument is halved below unit Frobenius norm, the plain series
/// `sum a^n / n!` is truncated once the next term's norm drops under
/// `tol * ||a_scaled||`, and the result is squared back up. The scaling step
/// keeps the alternating-series cancellation bounded for arguments of norm
/// ~10 and leaves small arguments untouched, so nilpotent inputs still
/// truncate exactly after their last nonzero power.
///
/// This is the independent oracle for every closed-form exponential in the
/// crate: it never branches on the regime of `a`.
pub fn expm_series(a: &Mat2, tol: f64, max_terms: usize) -> Result<Mat2, Error> {
    let norm = a.frobenius_norm();
    let squarings = if norm > 1.0 {
        norm.log2().ceil() as u32
    } else {
        0
    };
    let scaled = a.scale(0.5f64.powi(squarings as i32));
    let threshold = tol * scaled.frobenius_norm();

    let mut sum = Mat2::IDENTITY;
    let mut term = scaled;
    let mut converged = false;
    let mut last_term_norm = term.frobenius_norm();
    for n in 1..=max_terms {
        let next = sum + term;
        last_term_norm = term.frobenius_norm();
        if last_term_norm <= threshold || next == sum {
            converged = true;
            break;
        }
        sum = next;
        term = (term * scaled).scale(1.0 / (n as f64 + 1.0));
    }
    if !converged {
        return Err(Error::SeriesDidNotConverge {
            max_terms,
            last_term_norm,
        });
    }

    let mut result = sum;
    for _ in 0..squarings {
        result = result * result;
    }
    Ok(result)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn assert_close(a: Mat2, b: Mat2, tol: f64) {
        let d = a.distance(&b);
        assert!(d <= tol, "matrices differ by {d:e} > {tol:e}\n{a:?}\n{b:?}");
    }

    #[test]
    fn mul_identity_is_neutral() {
        let x = Mat2::new(1.5, -2.0, 0.25, 3.0);
        assert_eq!(Mat2::IDENTITY * x, x);
        assert_eq!(x * Mat2::IDENTITY, x);
    }

    #[test]
    fn j_squared_is_minus_identity() {
        assert_eq!(J * J, -Mat2::IDENTITY);
    }

    #[test]
    fn lower_triangular_shears_compose_additively() {
        let a = Mat2::new(1.0, 0.0, 2.0, 1.0);
        let b = Mat2::new(1.0, 0.0, 3.0, 1.0);
        assert_eq!(a * b, Mat2::new(1.0, 0.0, 5.0, 1.0));
    }

    #[test]
    fn det_examples() {
        assert_eq!(Mat2::IDENTITY.det(), 1.0);
        assert_eq!(Mat2::new(2.0, 0.0, 0.0, 0.5).det(), 1.0);
        for alpha in [-2.0, -0.5, 0.0, 0.3, 1.7] {
            let r = crate::optics::rotation(alpha);
            assert!((r.det() - 1.0).abs() < 1e-15);
        }
    }

    #[test]
    fn generator_power_identities_are_exact() {
        // Integer-entry arithmetic: equality is exact, not approximate.
        assert_eq!(J * J, -Mat2::IDENTITY);
        assert_eq!(J * J * J, -J);
        assert_eq!(K1 * K1, Mat2::IDENTITY);
        assert_eq!(K2 * K2, Mat2::IDENTITY);
        assert_eq!(K2 * K2 * K2, K2);
    }

    #[test]
    fn commutators_close_on_the_basis() {
        assert_eq!(commutator(J, K1), K2.scale(2.0));
        assert_eq!(commutator(J, K2), K1.scale(-2.0));
        assert_eq!(commutator(K1, K2), J.scale(-2.0));
        assert_eq!(commutator(J, J), Mat2::ZERO);
    }

    #[test]
    fn expm_of_zero_is_identity() {
        let e = expm_series(&Mat2::ZERO, SERIES_TOL, SERIES_MAX_TERMS).unwrap();
        assert_eq!(e, Mat2::IDENTITY);
    }

    #[test]
    fn expm_of_rotation_generator_matches_analytic_rotation() {
        let mut alpha = -10.0;
        while alpha <= 10.0 {
            let e = expm_series(&J.scale(alpha), SERIES_TOL, SERIES_MAX_TERMS).unwrap();
            assert_close(e, crate::optics::rotation(alpha), 1e-12);
            alpha += 0.37;
        }
    }

    #[test]
    fn expm_of_nilpotent_truncates_after_linear_term() {
        // 2 gamma t = 0.8 keeps the norm under 1, so no scaling happens and
        // the series stops at exactly I + a.
        let a = Mat2::new(0.0, 0.0, 0.8, 0.0);
        let e = expm_series(&a, SERIES_TOL, SERIES_MAX_TERMS).unwrap();
        assert_eq!(e, Mat2::IDENTITY + a);

        // Larger shear goes through scaling and squaring but stays exact:
        // powers of two divide out and the square of I + N has no N^2 tail.
        let b = Mat2::new(0.0, 0.0, 12.5, 0.0);
        let e = expm_series(&b, SERIES_TOL, SERIES_MAX_TERMS).unwrap();
        assert_eq!(e, Mat2::IDENTITY + b);
    }

    #[test]
    fn expm_reports_non_convergence() {
        let a = Mat2::new(f64::NAN, 0.0, 0.0, 0.0);
        assert!(matches!(
            expm_series(&a, SERIES_TOL, SERIES_MAX_TERMS),
            Err(Error::SeriesDidNotConverge { .. })
        ));
    }

    #[test]
    fn expm_of_squeeze_generators() {
        let e = expm_series(&K1.scale(0.7), SERIES_TOL, SERIES_MAX_TERMS).unwrap();
        assert_close(e, Mat2::new(0.7f64.exp(), 0.0, 0.0, (-0.7f64).exp()), 1e-14);
        let e = expm_series(&K2.scale(1.3), SERIES_TOL, SERIES_MAX_TERMS).unwrap();
        assert_close(
            e,
            Mat2::new(1.3f64.cosh(), 1.3f64.sinh(), 1.3f64.sinh(), 1.3f64.cosh()),
            1e-13,
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_mat() -> impl Strategy<Value = Mat2> {
            let e = -3.0..3.0f64;
            (e.clone(), e.clone(), e.clone(), e).prop_map(|(a, b, c, d)| Mat2::new(a, b, c, d))
        }

        proptest! {
            #[test]
            fn exp_times_exp_of_negation_is_identity(a in small_mat()) {
                let e = expm_series(&a, SERIES_TOL, SERIES_MAX_TERMS).unwrap();
                let einv = expm_series(&(-a), SERIES_TOL, SERIES_MAX_TERMS).unwrap();
                prop_assert!((e * einv).distance(&Mat2::IDENTITY) < 1e-11);
            }

            #[test]
            fn det_of_exp_is_exp_of_trace(a in small_mat()) {
                let e = expm_series(&a, SERIES_TOL, SERIES_MAX_TERMS).unwrap();
                let expected = a.trace().exp();
                prop_assert!((e.det() - expected).abs() <= 1e-11 * expected.max(1.0));
            }

            #[test]
            fn commutator_is_antisymmetric(a in small_mat(), b in small_mat()) {
                prop_assert_eq!(commutator(a, b), -commutator(b, a));
            }
        }
    }
}
