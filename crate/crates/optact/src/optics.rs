//! Jones-vector states, the rotation and squeeze constructors, propagation
//! through a medium, and trajectory sampling.
//!
//! Every transfer matrix in this crate is real, so it acts on the real and
//! imaginary parts of the Jones components identically; the relative phase
//! between the components is preserved by rotations and squeezes.

use num_complex::Complex64;

use crate::mat2::Mat2;
use crate::medium::{transfer_closed, MediumParams};

/// A fully polarized transverse field: complex amplitudes along x and y.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct JonesState {
    pub ex: Complex64,
    pub ey: Complex64,
}

impl JonesState {
    pub const fn new(ex: Complex64, ey: Complex64) -> Self {
        JonesState { ex, ey }
    }

    /// State from amplitudes and phases: `ex = a e^(i phi1)`, `ey = b e^(i phi2)`.
    pub fn from_amp_phase(a: f64, b: f64, phi1: f64, phi2: f64) -> Self {
        JonesState {
            ex: Complex64::from_polar(a, phi1),
            ey: Complex64::from_polar(b, phi2),
        }
    }

    /// Horizontal linear state `(1, 0)`.
    pub fn linear_x() -> Self {
        JonesState::new(Complex64::new(1.0, 0.0), Complex64::new(0.0, 0.0))
    }

    /// Total intensity `|ex|^2 + |ey|^2`.
    pub fn intensity(&self) -> f64 {
        self.ex.norm_sqr() + self.ey.norm_sqr()
    }
}

/// Carrier metadata for the common factor `e^(i (k z - omega t))`.
///
/// The factor multiplies both components, so it never alters any polarization
/// summary; it is carried only for callers that want the full field. The
/// wavenumber here is the optical carrier's, unrelated to the medium's
/// regime wavenumber.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CarrierPhase {
    pub wavenumber: f64,
    pub angular_frequency: f64,
}

impl CarrierPhase {
    /// The unit-modulus factor `e^(i (k z - omega t))`.
    pub fn factor(&self, z: f64, t: f64) -> Complex64 {
        Complex64::from_polar(1.0, self.wavenumber * z - self.angular_frequency * t)
    }
}

/// Standard ellipsometry readout of a Jones state.
///
/// Azimuth lies in `(-pi/2, pi/2]`, the ellipticity angle in `[-pi/4, pi/4]`;
/// both are invariant under multiplication of the state by any unit-modulus
/// scalar. The sign convention makes `from_amp_phase(1/sqrt 2, 1/sqrt 2, 0, pi/2)`
/// come out at ellipticity `+pi/4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarizationSummary {
    pub intensity_x: f64,
    pub intensity_y: f64,
    pub intensity_total: f64,
    pub azimuth: f64,
    pub ellipticity_angle: f64,
}

/// Rotation by `alpha`: `[cos, -sin; sin, cos]`.
pub fn rotation(alpha: f64) -> Mat2 {
    let (s, c) = alpha.sin_cos();
    Mat2::new(c, -s, s, c)
}

/// Axis-aligned squeeze `diag(e^beta, e^-beta)`.
pub fn squeeze_axis(beta: f64) -> Mat2 {
    Mat2::new(beta.exp(), 0.0, 0.0, (-beta).exp())
}

/// Squeeze by `w` along the axis at angle `theta`:
/// `rotation(theta) * diag(e^w, e^-w) * rotation(-theta)`.
///
/// Evaluated as the literal conjugation product; the compressed single-matrix
/// form has `cosh w +- cos(2 theta) sinh w` on the diagonal and
/// `sin(2 theta) sinh w` off it. At `theta = pi/4` it reduces to
/// `[cosh w, sinh w; sinh w, cosh w]`, the form the medium's microscopic
/// steps use.
pub fn squeeze_at_angle(theta: f64, w: f64) -> Mat2 {
    rotation(theta) * squeeze_axis(w) * rotation(-theta)
}

/// Apply a real transfer matrix to a Jones state, component-wise over the
/// real and imaginary parts.
pub fn propagate(state: &JonesState, m: &Mat2) -> JonesState {
    JonesState::new(
        m.a11 * state.ex + m.a12 * state.ey,
        m.a21 * state.ex + m.a22 * state.ey,
    )
}

/// Stokes-style summary of a Jones state.
///
/// With `s0 = |ex|^2 + |ey|^2`, `s1 = |ex|^2 - |ey|^2`,
/// `s2 = 2 Re(ex conj(ey))`, `s3 = -2 Im(ex conj(ey))`:
/// azimuth is `atan2(s2, s1) / 2` and the ellipticity angle `asin(s3/s0) / 2`.
/// The null state yields all-zero intensities and zero angles by convention.
pub fn summarize(state: &JonesState) -> PolarizationSummary {
    let ix = state.ex.norm_sqr();
    let iy = state.ey.norm_sqr();
    let s0 = ix + iy;
    if s0 == 0.0 {
        return PolarizationSummary {
            intensity_x: 0.0,
            intensity_y: 0.0,
            intensity_total: 0.0,
            azimuth: 0.0,
            ellipticity_angle: 0.0,
        };
    }
    let cross = state.ex * state.ey.conj();
    let s1 = ix - iy;
    let s2 = 2.0 * cross.re;
    let s3 = -2.0 * cross.im;
    PolarizationSummary {
        intensity_x: ix,
        intensity_y: iy,
        intensity_total: s0,
        azimuth: 0.5 * s2.atan2(s1),
        ellipticity_angle: 0.5 * (s3 / s0).clamp(-1.0, 1.0).asin(),
    }
}

/// One sampled point of a trajectory through a medium.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    pub z: f64,
    pub state: JonesState,
    pub summary: PolarizationSummary,
}

/// Propagate `initial` to `samples` evenly spaced depths in `[0, z_max]`
/// (endpoints included), each through the closed-form transfer matrix.
///
/// Panics if `samples < 2`.
pub fn trajectory(
    params: &MediumParams,
    initial: &JonesState,
    z_max: f64,
    samples: usize,
) -> Vec<TrajectoryPoint> {
    assert!(
        samples >= 2,
        "a trajectory needs at least its two endpoints"
    );
    (0..samples)
        .map(|i| {
            let z = z_max * i as f64 / (samples - 1) as f64;
            let state = propagate(initial, &transfer_closed(params, z).matrix);
            TrajectoryPoint {
                z,
                state,
                summary: summarize(&state),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};

    fn assert_mat_close(a: Mat2, b: Mat2, tol: f64) {
        let d = a.distance(&b);
        assert!(d <= tol, "matrices differ by {d:e} > {tol:e}\n{a:?}\n{b:?}");
    }

    fn assert_state_close(a: &JonesState, b: &JonesState, tol: f64) {
        let d = ((a.ex - b.ex).norm_sqr() + (a.ey - b.ey).norm_sqr()).sqrt();
        assert!(d <= tol, "states differ by {d:e} > {tol:e}\n{a:?}\n{b:?}");
    }

    #[test]
    fn rotation_examples() {
        assert_eq!(rotation(0.0), Mat2::IDENTITY);
        assert_mat_close(rotation(PI), -Mat2::IDENTITY, 1e-15);
        assert_mat_close(rotation(FRAC_PI_2), Mat2::new(0.0, -1.0, 1.0, 0.0), 1e-15);
    }

    #[test]
    fn squeeze_axis_examples() {
        assert_eq!(squeeze_axis(0.0), Mat2::IDENTITY);
        assert_eq!(squeeze_axis(2.0f64.ln()), Mat2::new(2.0, 0.0, 0.0, 0.5));
        let b = 0.8;
        assert_mat_close(squeeze_axis(b) * squeeze_axis(-b), Mat2::IDENTITY, 1e-15);
    }

    #[test]
    fn squeeze_at_45_degrees_is_the_symmetric_cosh_sinh_form() {
        for w in [-1.5f64, -0.2, 0.0, 0.4, 2.0] {
            let expected = Mat2::new(w.cosh(), w.sinh(), w.sinh(), w.cosh());
            assert_mat_close(squeeze_at_angle(FRAC_PI_4, w), expected, 1e-15);
        }
    }

    #[test]
    fn squeeze_at_zero_angle_is_axis_aligned() {
        // Pins the conjugation product: the axis-aligned case must come back
        // diagonal, not cosh-diagonal.
        for w in [-0.7, 0.3, 1.1] {
            assert_mat_close(squeeze_at_angle(0.0, w), squeeze_axis(w), 1e-15);
        }
    }

    #[test]
    fn squeeze_with_zero_strength_is_identity() {
        for theta in [-1.0, 0.0, 0.6, 2.2] {
            assert_mat_close(squeeze_at_angle(theta, 0.0), Mat2::IDENTITY, 1e-15);
        }
    }

    #[test]
    fn squeeze_at_angle_is_symmetric_and_unimodular() {
        let m = squeeze_at_angle(0.83, 1.2);
        assert!((m.a12 - m.a21).abs() < 1e-15);
        assert!((m.det() - 1.0).abs() < 1e-14);
    }

    #[test]
    fn amp_phase_constructor_examples() {
        let s = JonesState::from_amp_phase(1.0, 0.0, 0.0, 0.0);
        assert_state_close(&s, &JonesState::linear_x(), 1e-15);

        let null = JonesState::from_amp_phase(0.0, 0.0, 1.0, -2.0);
        assert_eq!(null.intensity(), 0.0);

        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let circ = JonesState::from_amp_phase(inv_sqrt2, inv_sqrt2, 0.0, FRAC_PI_2);
        let summary = summarize(&circ);
        assert!((summary.ellipticity_angle - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn propagate_examples() {
        let s = JonesState::from_amp_phase(0.8, 0.6, 0.3, -1.1);
        assert_state_close(&propagate(&s, &Mat2::IDENTITY), &s, 0.0);

        let rotated = propagate(&JonesState::linear_x(), &rotation(FRAC_PI_2));
        let linear_y = JonesState::from_amp_phase(0.0, 1.0, 0.0, 0.0);
        assert_state_close(&rotated, &linear_y, 1e-15);

        let stretched = propagate(&JonesState::linear_x(), &squeeze_axis(0.5));
        assert!((stretched.ex.norm() - 0.5f64.exp()).abs() < 1e-15);
        assert_eq!(stretched.ey.norm(), 0.0);
    }

    #[test]
    fn summarize_examples() {
        let s = summarize(&JonesState::linear_x());
        assert_eq!(s.azimuth, 0.0);
        assert_eq!(s.ellipticity_angle, 0.0);
        assert_eq!(s.intensity_total, 1.0);

        let inv_sqrt2 = std::f64::consts::FRAC_1_SQRT_2;
        let diag = JonesState::from_amp_phase(inv_sqrt2, inv_sqrt2, 0.0, 0.0);
        let s = summarize(&diag);
        assert!((s.azimuth - FRAC_PI_4).abs() < 1e-15);
        assert!(s.ellipticity_angle.abs() < 1e-15);

        let left = JonesState::from_amp_phase(inv_sqrt2, inv_sqrt2, 0.0, -FRAC_PI_2);
        assert!((summarize(&left).ellipticity_angle + FRAC_PI_4).abs() < 1e-12);

        let null = summarize(&JonesState::from_amp_phase(0.0, 0.0, 0.0, 0.0));
        assert_eq!(null.intensity_total, 0.0);
        assert_eq!(null.azimuth, 0.0);
    }

    #[test]
    fn carrier_phase_never_alters_summaries() {
        let carrier = CarrierPhase {
            wavenumber: 7.0,
            angular_frequency: 3.0,
        };
        let s = JonesState::from_amp_phase(0.9, 0.45, 0.2, 1.3);
        let base = summarize(&s);
        for (z, t) in [(0.0, 0.0), (1.3, 0.2), (11.0, -4.0)] {
            let f = carrier.factor(z, t);
            let shifted = JonesState::new(s.ex * f, s.ey * f);
            let sum = summarize(&shifted);
            assert!((sum.azimuth - base.azimuth).abs() < 1e-12);
            assert!((sum.ellipticity_angle - base.ellipticity_angle).abs() < 1e-12);
            assert!((sum.intensity_total - base.intensity_total).abs() < 1e-12);
        }
    }

    #[test]
    fn trajectory_in_pure_rotator_advances_azimuth_linearly() {
        let params = MediumParams::new(1.0, 0.0, 0.0);
        let points = trajectory(&params, &JonesState::linear_x(), 2.0, 9);
        for p in &points {
            let expected = (p.z + FRAC_PI_2).rem_euclid(PI) - FRAC_PI_2;
            let mut diff = (p.summary.azimuth - expected).abs();
            diff = diff.min((diff - PI).abs());
            assert!(diff < 1e-12, "z = {}, azimuth {}", p.z, p.summary.azimuth);
            assert!((p.summary.intensity_total - 1.0).abs() < 1e-12);
        }
    }

    #[test]
    fn trajectory_in_isotropic_absorber_decays_exponentially() {
        let lambda = 0.4;
        let params = MediumParams::new(0.0, lambda, lambda);
        let initial = JonesState::from_amp_phase(0.6, 0.8, 0.0, 0.7);
        let base = summarize(&initial);
        for p in trajectory(&params, &initial, 3.0, 7) {
            let expected = base.intensity_total * (-2.0 * lambda * p.z).exp();
            assert!((p.summary.intensity_total - expected).abs() < 1e-12);
            assert!((p.summary.azimuth - base.azimuth).abs() < 1e-12);
            assert!((p.summary.ellipticity_angle - base.ellipticity_angle).abs() < 1e-12);
        }
    }

    #[test]
    fn trajectory_matches_the_product_oracle_pointwise() {
        let params = MediumParams::new(2.0, 0.1, 0.3);
        let initial = JonesState::from_amp_phase(1.0, 0.5, 0.0, 0.9);
        for p in trajectory(&params, &initial, 2.0, 6) {
            let oracle = propagate(
                &initial,
                &crate::medium::transfer_product(&params, p.z, 100_000),
            );
            assert_state_close(&p.state, &oracle, 1e-4);
        }
    }

    #[test]
    #[should_panic(expected = "at least its two endpoints")]
    fn trajectory_rejects_single_sample() {
        let params = MediumParams::new(1.0, 0.0, 0.0);
        trajectory(&params, &JonesState::linear_x(), 1.0, 1);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn any_state() -> impl Strategy<Value = JonesState> {
            let amp = 0.0..2.0f64;
            let ph = -PI..PI;
            (amp.clone(), amp, ph.clone(), ph)
                .prop_map(|(a, b, p1, p2)| JonesState::from_amp_phase(a, b, p1, p2))
        }

        proptest! {
            #[test]
            fn summaries_are_global_phase_invariant(s in any_state(), phase in -PI..PI) {
                prop_assume!(s.intensity() > 1e-12);
                let c = Complex64::from_polar(1.0, phase);
                let shifted = JonesState::new(s.ex * c, s.ey * c);
                let a = summarize(&s);
                let b = summarize(&shifted);
                prop_assert!((a.intensity_total - b.intensity_total).abs() < 1e-12);
                prop_assert!((a.azimuth - b.azimuth).abs() < 1e-9);
                prop_assert!((a.ellipticity_angle - b.ellipticity_angle).abs() < 1e-9);
            }

            #[test]
            fn propagation_is_real_linear(
                s1 in any_state(),
                s2 in any_state(),
                a in -2.0..2.0f64,
                b in -2.0..2.0f64,
                alpha in -3.0..3.0f64,
                w in -1.0..1.0f64,
            ) {
                let m = rotation(alpha) * squeeze_at_angle(0.4, w);
                let combined = JonesState::new(
                    a * s1.ex + b * s2.ex,
                    a * s1.ey + b * s2.ey,
                );
                let lhs = propagate(&combined, &m);
                let p1 = propagate(&s1, &m);
                let p2 = propagate(&s2, &m);
                let rhs = JonesState::new(a * p1.ex + b * p2.ex, a * p1.ey + b * p2.ey);
                prop_assert!((lhs.ex - rhs.ex).norm() < 1e-12);
                prop_assert!((lhs.ey - rhs.ey).norm() < 1e-12);
            }

            #[test]
            fn rotation_shifts_azimuth(s in any_state(), alpha in -1.5..1.5f64) {
                prop_assume!(s.intensity() > 1e-6);
                let before = summarize(&s);
                // Stay away from circular states, where azimuth degenerates.
                prop_assume!(before.ellipticity_angle.abs() < FRAC_PI_4 - 1e-3);
                let after = summarize(&propagate(&s, &rotation(alpha)));
                let diff = after.azimuth - before.azimuth - alpha;
                let wrapped = (diff + FRAC_PI_2).rem_euclid(PI) - FRAC_PI_2;
                prop_assert!(wrapped.abs() < 1e-6, "azimuth shift off by {wrapped}");
            }

            #[test]
            fn lossless_squeeze_free_trajectories_conserve_intensity(
                gamma in -2.0..2.0f64,
                z_max in 0.1..5.0f64,
            ) {
                let params = MediumParams::new(gamma, 0.0, 0.0);
                let initial = JonesState::from_amp_phase(0.7, 0.7, 0.1, -0.4);
                let i0 = initial.intensity();
                for p in trajectory(&params, &initial, z_max, 5) {
                    prop_assert!((p.summary.intensity_total - i0).abs() <= 1e-12);
                }
            }
        }
    }
}
