//! Four-by-four Lorentz transformations over `(x, y, z, t)`: boosts,
//! rotations, the light-like gauge matrix, the lift from unimodular 2x2
//! transfer matrices, and the little-group elements that leave a reference
//! four-momentum invariant.
//!
//! # The lift convention
//!
//! A four-vector `v = (x, y, z, t)` is identified with the coordinate matrix
//! `X = t I + x s1 + y s2 + z s3` (`s1, s2, s3` the Pauli matrices), on which
//! a real unimodular `M` acts by `X -> M X M^T`. Reading the transformed
//! coefficients back off `X` gives a 4x4 Lorentz matrix with two fixed
//! properties:
//!
//! * the `y` axis decouples exactly (the antisymmetric part of `X` maps to
//!   `det(M)` times itself), and
//! * 2x2 parameters double: the rotation by `alpha` lifts to the x-z rotation
//!   by `2 alpha`, and the squeeze `diag(e^eta, e^-eta)` lifts to the z-boost
//!   whose rapidity is `2 eta` — which is [`boost_z`]`(eta)` in the
//!   parameterization used here, where `boost_z(eta)` carries
//!   `cosh(2 eta)` / `sinh(2 eta)` entries.
//!
//! Since the generators involved are real, the action only ever needs the
//! symmetric (real) part of `X`; no complex arithmetic appears below.

use crate::error::Error;
use crate::mat2::Mat2;
use crate::mat4::{FourVector, Mat4};

/// How far `det` may stray from 1 before [`lift`] rejects its input.
pub const LIFT_DET_TOL: f64 = 1e-9;

/// Guard for the log-form `atanh`: inputs with `1 - |x|` below this saturate
/// to signed infinity instead of overflowing incidentally.
const ATANH_GUARD: f64 = 1e-16;

/// `atanh` in the explicit log form `ln((1+x)/(1-x)) / 2`, saturating to
/// signed infinity at `|x| >= 1 - 1e-16`. Valid `energy < momentum` ratios
/// always stay below the guard (the largest f64 under 1 is `1 - 2^-53`).
fn atanh_log(x: f64) -> f64 {
    if x.abs() >= 1.0 - ATANH_GUARD {
        return if x > 0.0 {
            f64::INFINITY
        } else {
            f64::NEG_INFINITY
        };
    }
    0.5 * ((1.0 + x) / (1.0 - x)).ln()
}

/// Boost along z with rapidity `2 eta`:
/// identity on `(x, y)`, `(z, t)` block `[cosh 2eta, sinh 2eta; sinh 2eta, cosh 2eta]`.
pub fn boost_z(eta: f64) -> Mat4 {
    let c = (2.0 * eta).cosh();
    let s = (2.0 * eta).sinh();
    Mat4::from_rows([
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, c, s],
        [0.0, 0.0, s, c],
    ])
}

/// Rotation by `angle` in the z-x plane: `x' = x cos + z sin`,
/// `z' = -x sin + z cos`, leaving `y` and `t` (hence any rest-frame
/// four-momentum) fixed.
pub fn rot_zx(angle: f64) -> Mat4 {
    let (s, c) = angle.sin_cos();
    Mat4::from_rows([
        [c, 0.0, s, 0.0],
        [0.0, 1.0, 0.0, 0.0],
        [-s, 0.0, c, 0.0],
        [0.0, 0.0, 0.0, 1.0],
    ])
}

/// Boost along x with rapidity `2 w`:
/// identity on `(y, z)`, `(x, t)` block `[cosh 2w, sinh 2w; sinh 2w, cosh 2w]`.
/// Leaves `(0, 0, p, 0)` invariant.
pub fn boost_x(w: f64) -> Mat4 {
    let c = (2.0 * w).cosh();
    let s = (2.0 * w).sinh();
    Mat4::from_rows([
        [c, 0.0, 0.0, s],
        [0.0, 1.0, 0.0, 0.0],
        [0.0, 0.0, 1.0, 0.0],
        [s, 0.0, 0.0, c],
    ])
}

/// The light-like gauge transformation: leaves every `(0, 0, p, p)`
/// invariant, and equals `lift([1, 2g; 0, 1])` — the lift of the transposed
/// exponential of the parabolic generator.
pub fn gauge_matrix(g: f64) -> Mat4 {
    let g2 = 2.0 * g * g;
    Mat4::from_rows([
        [1.0, 0.0, -2.0 * g, 2.0 * g],
        [0.0, 1.0, 0.0, 0.0],
        [2.0 * g, 0.0, 1.0 - g2, g2],
        [2.0 * g, 0.0, -g2, 1.0 + g2],
    ])
}

/// Lift a unimodular 2x2 matrix to its 4x4 Lorentz transformation under the
/// coordinate-matrix conjugation `X -> m X m^T` (see the module docs).
///
/// Overall scalars such as the attenuation factor `e^(-lambda z)` must be
/// stripped by the caller; inputs with `|det - 1| > 1e-9` are rejected.
pub fn lift(m: &Mat2) -> Result<Mat4, Error> {
    let det = m.det();
    let defect = (det - 1.0).abs();
    if defect > LIFT_DET_TOL || defect.is_nan() {
        return Err(Error::NotUnimodular {
            det,
            tol: LIFT_DET_TOL,
        });
    }

    // Images of the symmetric basis matrices s1, s3, I under S -> m S m^T,
    // read back as (x, z, t) coefficients. The antisymmetric (y) part maps to
    // det(m) times itself, exactly, so it never mixes.
    let read = |s: Mat2| {
        let img = *m * s * m.transpose();
        (
            0.5 * (img.a12 + img.a21),
            0.5 * (img.a11 - img.a22),
            0.5 * (img.a11 + img.a22),
        )
    };
    let cx = read(Mat2::new(0.0, 1.0, 1.0, 0.0));
    let cz = read(Mat2::new(1.0, 0.0, 0.0, -1.0));
    let ct = read(Mat2::IDENTITY);

    Ok(Mat4::from_rows([
        [cx.0, 0.0, cz.0, ct.0],
        [0.0, det, 0.0, 0.0],
        [cx.1, 0.0, cz.1, ct.1],
        [cx.2, 0.0, cz.2, ct.2],
    ]))
}

/// Rapidity `eta` with `tanh(2 eta) = p / sqrt(p^2 + m^2)`, so that
/// [`boost_z`]`(eta)` carries `(0, 0, 0, m)` to `(0, 0, p, sqrt(p^2 + m^2))`.
pub fn rapidity_massive(momentum: f64, mass: f64) -> f64 {
    0.5 * atanh_log(momentum / (momentum * momentum + mass * mass).sqrt())
}

/// Rapidity `eta` with `tanh(2 eta) = energy / momentum`, so that
/// [`boost_z`]`(-eta)` carries `(0, 0, p, E)` to its zero-energy frame.
/// Rejects `energy >= momentum` (not space-like).
pub fn rapidity_spacelike(momentum: f64, energy: f64) -> Result<f64, Error> {
    if !(energy >= 0.0 && energy < momentum) {
        return Err(Error::NotSpacelike { energy, momentum });
    }
    Ok(0.5 * atanh_log(energy / momentum))
}

/// Which of the three little groups, together with the data pinning its
/// reference four-momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum LittleGroupKind {
    /// Time-like: reference `(0, 0, p, sqrt(p^2 + m^2))`, little group a
    /// boosted rotation.
    Massive { mass: f64, momentum: f64 },
    /// Space-like (`0 <= energy < momentum`): reference `(0, 0, p, E)`,
    /// little group a boosted perpendicular boost.
    Spacelike { momentum: f64, energy: f64 },
    /// Light-like: reference `(0, 0, p, p)`, little group the gauge
    /// transformations.
    Lightlike { momentum: f64 },
}

impl LittleGroupKind {
    pub fn massive(mass: f64, momentum: f64) -> Result<Self, Error> {
        if !(mass.is_finite() && mass > 0.0) {
            return Err(Error::InvalidMass(mass));
        }
        if !(momentum.is_finite() && momentum >= 0.0) {
            return Err(Error::InvalidMomentum {
                requirement: "non-negative",
                value: momentum,
            });
        }
        Ok(LittleGroupKind::Massive { mass, momentum })
    }

    pub fn spacelike(momentum: f64, energy: f64) -> Result<Self, Error> {
        if !(momentum.is_finite() && momentum > 0.0) {
            return Err(Error::InvalidMomentum {
                requirement: "positive",
                value: momentum,
            });
        }
        if !(energy.is_finite() && energy >= 0.0 && energy < momentum) {
            return Err(Error::NotSpacelike { energy, momentum });
        }
        Ok(LittleGroupKind::Spacelike { momentum, energy })
    }

    pub fn lightlike(momentum: f64) -> Result<Self, Error> {
        if !(momentum.is_finite() && momentum > 0.0) {
            return Err(Error::InvalidMomentum {
                requirement: "positive",
                value: momentum,
            });
        }
        Ok(LittleGroupKind::Lightlike { momentum })
    }

    /// The four-momentum this kind's little group leaves invariant.
    pub fn reference_vector(&self) -> FourVector {
        match *self {
            LittleGroupKind::Massive { mass, momentum } => FourVector::new(
                0.0,
                0.0,
                momentum,
                (momentum * momentum + mass * mass).sqrt(),
            ),
            LittleGroupKind::Spacelike { momentum, energy } => {
                FourVector::new(0.0, 0.0, momentum, energy)
            }
            LittleGroupKind::Lightlike { momentum } => {
                FourVector::new(0.0, 0.0, momentum, momentum)
            }
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            LittleGroupKind::Massive { .. } => "massive",
            LittleGroupKind::Spacelike { .. } => "spacelike",
            LittleGroupKind::Lightlike { .. } => "lightlike",
        }
    }
}

/// One-parameter element of the little group of `kind`:
/// a boosted z-x rotation (massive), a boosted x-boost (space-like), or the
/// gauge matrix (light-like). Leaves `kind.reference_vector()` invariant.
pub fn little_group_element(kind: &LittleGroupKind, param: f64) -> Mat4 {
    match *kind {
        LittleGroupKind::Massive { mass, momentum } => {
            let eta = rapidity_massive(momentum, mass);
            boost_z(eta) * rot_zx(param) * boost_z(-eta)
        }
        LittleGroupKind::Spacelike { momentum, energy } => {
            let eta = 0.5 * atanh_log(energy / momentum);
            boost_z(eta) * boost_x(param) * boost_z(-eta)
        }
        LittleGroupKind::Lightlike { .. } => gauge_matrix(param),
    }
}

/// Euclidean norm of `l v - v`; zero when `l` leaves `v` invariant.
pub fn invariance_residual(l: &Mat4, v: &FourVector) -> f64 {
    (l.apply(v) - *v).euclidean_norm()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::mat4::minkowski;
    use crate::optics::{rotation, squeeze_at_angle, squeeze_axis};
    use std::f64::consts::FRAC_PI_2;

    fn assert_mat4_close(a: &Mat4, b: &Mat4, tol: f64) {
        let d = a.distance(b);
        assert!(d <= tol, "matrices differ by {d:e} > {tol:e}\n{a:?}\n{b:?}");
    }

    fn assert_vec_close(a: &FourVector, b: &FourVector, tol: f64) {
        let d = (*a - *b).euclidean_norm();
        assert!(d <= tol, "vectors differ by {d:e} > {tol:e}\n{a:?}\n{b:?}");
    }

    // tanh(2 eta) = 0.6 makes cosh(2 eta) = 1.25, sinh(2 eta) = 0.75.
    fn eta_345() -> f64 {
        0.5 * 0.6f64.atanh()
    }

    #[test]
    fn boost_z_examples() {
        assert_eq!(boost_z(0.0), Mat4::IDENTITY);
        let boosted = boost_z(eta_345()).apply(&FourVector::new(0.0, 0.0, 0.0, 1.0));
        assert_vec_close(&boosted, &FourVector::new(0.0, 0.0, 0.75, 1.25), 1e-14);
        let eta = 0.8;
        assert_mat4_close(&(boost_z(eta) * boost_z(-eta)), &Mat4::IDENTITY, 1e-13);
    }

    #[test]
    fn rot_zx_examples() {
        assert_eq!(rot_zx(0.0), Mat4::IDENTITY);
        let rest = FourVector::new(0.0, 0.0, 0.0, 1.7);
        for angle in [-2.0, -0.5, 0.3, 1.0, 3.0] {
            assert_vec_close(&rot_zx(angle).apply(&rest), &rest, 1e-15);
        }
        let turned = rot_zx(FRAC_PI_2).apply(&FourVector::new(1.0, 0.0, 0.0, 0.0));
        assert_vec_close(&turned, &FourVector::new(0.0, 0.0, -1.0, 0.0), 1e-15);
    }

    #[test]
    fn boost_x_examples() {
        assert_eq!(boost_x(0.0), Mat4::IDENTITY);
        let spacelike = FourVector::new(0.0, 0.0, 2.5, 0.0);
        for w in [-1.5, -0.2, 0.4, 2.0] {
            assert_vec_close(&boost_x(w).apply(&spacelike), &spacelike, 1e-15);
        }
        let boosted = boost_x(eta_345()).apply(&FourVector::new(0.0, 0.0, 0.0, 1.0));
        assert_vec_close(&boosted, &FourVector::new(0.75, 0.0, 0.0, 1.25), 1e-14);
    }

    #[test]
    fn gauge_examples() {
        assert_eq!(gauge_matrix(0.0), Mat4::IDENTITY);
        let lightlike = FourVector::new(0.0, 0.0, 2.0, 2.0);
        assert_vec_close(&gauge_matrix(0.5).apply(&lightlike), &lightlike, 1e-14);
        let composed = gauge_matrix(0.3) * gauge_matrix(0.7);
        assert_mat4_close(&composed, &gauge_matrix(1.0), 1e-12);
    }

    #[test]
    fn lift_of_identity_is_identity() {
        assert_mat4_close(&lift(&Mat2::IDENTITY).unwrap(), &Mat4::IDENTITY, 1e-15);
    }

    #[test]
    fn lift_doubles_the_rotation_angle() {
        for alpha in [-1.0, -0.3, 0.0, 0.3, 1.0, 2.2] {
            let lifted = lift(&rotation(alpha)).unwrap();
            assert_mat4_close(&lifted, &rot_zx(2.0 * alpha), 1e-13);
        }
    }

    #[test]
    fn lift_of_axis_squeeze_is_the_z_boost_with_doubled_rapidity() {
        // boost_z(eta) already carries rapidity 2 eta, matching the lift.
        for eta in [-1.0, -0.3, 0.0, 0.3, 1.0] {
            let lifted = lift(&squeeze_axis(eta)).unwrap();
            assert_mat4_close(&lifted, &boost_z(eta), 1e-12);
        }
    }

    #[test]
    fn lift_of_diagonal_squeeze_is_the_x_boost_with_doubled_rapidity() {
        for w in [-1.0, -0.3, 0.0, 0.3, 1.0] {
            let lifted = lift(&squeeze_at_angle(std::f64::consts::FRAC_PI_4, w)).unwrap();
            assert_mat4_close(&lifted, &boost_x(w), 1e-12);
        }
    }

    #[test]
    fn lift_of_upper_shear_is_the_gauge_matrix() {
        for g in [0.25, 0.5, 1.0, -0.4] {
            let shear = Mat2::new(1.0, 2.0 * g, 0.0, 1.0);
            assert_mat4_close(&lift(&shear).unwrap(), &gauge_matrix(g), 1e-13);
        }
    }

    #[test]
    fn lift_rejects_non_unimodular_input() {
        let doubled = Mat2::IDENTITY.scale(2.0);
        assert!(matches!(lift(&doubled), Err(Error::NotUnimodular { .. })));
        let nan = Mat2::new(f64::NAN, 0.0, 0.0, 1.0);
        assert!(lift(&nan).is_err());
    }

    #[test]
    fn lifted_matrices_are_lorentz_and_fix_y() {
        for (i, m) in [
            rotation(0.7),
            squeeze_axis(-0.9),
            squeeze_at_angle(0.3, 1.1),
            rotation(2.0) * squeeze_axis(0.4) * rotation(-0.2),
        ]
        .iter()
        .enumerate()
        {
            let l = lift(m).unwrap();
            assert!(l.lorentz_defect() <= 1e-12, "case {i}");
            let y = FourVector::new(0.0, 1.0, 0.0, 0.0);
            assert!(invariance_residual(&l, &y) <= 1e-12, "case {i}");
        }
    }

    #[test]
    fn rapidity_massive_examples() {
        assert_eq!(rapidity_massive(0.0, 1.0), 0.0);
        let eta = rapidity_massive(0.75, 1.0);
        assert!((eta - 0.25 * 4.0f64.ln()).abs() < 1e-15);
        let image = boost_z(eta).apply(&FourVector::new(0.0, 0.0, 0.0, 1.0));
        assert_vec_close(&image, &FourVector::new(0.0, 0.0, 0.75, 1.25), 1e-13);
    }

    #[test]
    fn rapidity_spacelike_examples() {
        assert_eq!(rapidity_spacelike(1.0, 0.0).unwrap(), 0.0);
        let eta = rapidity_spacelike(1.0, 0.6).unwrap();
        assert!((eta - 0.5 * 0.6f64.atanh()).abs() < 1e-15);

        // De-boosting (0, 0, p, E) kills the time component.
        let deboosted = boost_z(-eta).apply(&FourVector::new(0.0, 0.0, 1.0, 0.6));
        assert!(deboosted.t.abs() < 1e-15);

        // Probing the light cone: still finite one ulp-group away from it.
        // eta = ln(2e15) / 4, about 8.8.
        let eta = rapidity_spacelike(1.0, 1.0 - 1e-15).unwrap();
        assert!(eta.is_finite() && eta > 8.0);

        assert!(matches!(
            rapidity_spacelike(1.0, 1.2),
            Err(Error::NotSpacelike { .. })
        ));
        assert!(rapidity_spacelike(1.0, 1.0).is_err());
    }

    #[test]
    fn kind_constructors_validate() {
        assert!(LittleGroupKind::massive(1.0, 0.75).is_ok());
        assert!(LittleGroupKind::massive(0.0, 0.75).is_err());
        assert!(LittleGroupKind::massive(1.0, -0.1).is_err());
        assert!(LittleGroupKind::spacelike(1.0, 0.6).is_ok());
        assert!(LittleGroupKind::spacelike(1.0, 1.2).is_err());
        assert!(LittleGroupKind::lightlike(2.0).is_ok());
        assert!(LittleGroupKind::lightlike(0.0).is_err());
    }

    #[test]
    fn little_group_elements_fix_their_reference_vector() {
        let kinds = [
            LittleGroupKind::massive(1.0, 0.75).unwrap(),
            LittleGroupKind::spacelike(1.0, 0.6).unwrap(),
            LittleGroupKind::lightlike(2.0).unwrap(),
        ];
        for kind in &kinds {
            let reference = kind.reference_vector();
            assert_vec_close(
                &little_group_element(kind, 0.0).apply(&reference),
                &reference,
                1e-13,
            );
            for param in [-2.0, -1.0, 0.5, 1.0, 2.0] {
                let element = little_group_element(kind, param);
                assert!(
                    invariance_residual(&element, &reference) <= 1e-12,
                    "{} at param {param}",
                    kind.name()
                );
                assert!(element.lorentz_defect() <= 1e-12);
            }
        }
    }

    #[test]
    fn massive_reference_is_the_boosted_rest_vector() {
        let kind = LittleGroupKind::massive(1.0, 0.75).unwrap();
        assert_vec_close(
            &kind.reference_vector(),
            &FourVector::new(0.0, 0.0, 0.75, 1.25),
            1e-15,
        );
    }

    #[test]
    fn invariance_residual_examples() {
        let v = FourVector::new(0.3, -0.2, 1.0, 2.0);
        assert_eq!(invariance_residual(&Mat4::IDENTITY, &v), 0.0);
        let rest = FourVector::new(0.0, 0.0, 0.0, 1.0);
        assert!(invariance_residual(&boost_z(0.3), &rest) > 0.1);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        // Unimodular by construction: d = (1 + b c) / a.
        fn unimodular() -> impl Strategy<Value = Mat2> {
            (0.7..1.5f64, -1.0..1.0f64, -1.0..1.0f64, proptest::bool::ANY).prop_map(
                |(a, b, c, flip)| {
                    let a = if flip { -a } else { a };
                    Mat2::new(a, b, c, (1.0 + b * c) / a)
                },
            )
        }

        proptest! {
            #[test]
            fn lift_is_a_homomorphism(a in unimodular(), b in unimodular()) {
                let lhs = lift(&(a * b)).unwrap();
                let rhs = lift(&a).unwrap() * lift(&b).unwrap();
                prop_assert!(lhs.distance(&rhs) <= 1e-12);
            }

            #[test]
            fn little_group_elements_preserve_the_minkowski_form(
                param in -2.0..2.0f64,
                vx in -2.0..2.0f64,
                vz in -2.0..2.0f64,
                vt in -2.0..2.0f64,
            ) {
                let v = FourVector::new(vx, 0.4, vz, vt);
                for kind in [
                    LittleGroupKind::massive(1.0, 0.75).unwrap(),
                    LittleGroupKind::spacelike(1.0, 0.6).unwrap(),
                    LittleGroupKind::lightlike(2.0).unwrap(),
                ] {
                    let image = little_group_element(&kind, param).apply(&v);
                    let drift = (minkowski(&image, &image) - minkowski(&v, &v)).abs();
                    // Large boosts inflate the image; the form is quadratic in
                    // it, so the f64 floor scales with its squared norm.
                    let n = image.euclidean_norm();
                    let tol = (8.0 * f64::EPSILON * n * n).max(1e-12);
                    prop_assert!(drift <= tol, "{}: drift {drift:e}", kind.name());
                }
            }
        }
    }
}
