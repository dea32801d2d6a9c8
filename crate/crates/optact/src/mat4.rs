//! Real 4x4 matrices over Minkowski coordinates `(x, y, z, t)` and the
//! four-vectors they act on. Natural units, `c = 1`, metric `diag(1,1,1,-1)`.

use std::ops::{Mul, Sub};

/// A real 4x4 matrix, row-major over the coordinate order `(x, y, z, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Mat4 {
    rows: [[f64; 4]; 4],
}

/// A Minkowski four-vector `(x, y, z, t)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FourVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub t: f64,
}

impl Mat4 {
    pub const IDENTITY: Mat4 = Mat4 {
        rows: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, 1.0],
        ],
    };

    /// Metric tensor `g = diag(1, 1, 1, -1)`.
    pub const METRIC: Mat4 = Mat4 {
        rows: [
            [1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
        ],
    };

    pub const fn from_rows(rows: [[f64; 4]; 4]) -> Self {
        Mat4 { rows }
    }

    pub fn get(&self, row: usize, col: usize) -> f64 {
        self.rows[row][col]
    }

    pub fn transpose(&self) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out[j][i] = *v;
            }
        }
        Mat4::from_rows(out)
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.rows
            .iter()
            .flatten()
            .map(|v| v * v)
            .sum::<f64>()
            .sqrt()
    }

    pub fn distance(&self, other: &Mat4) -> f64 {
        (*self - *other).frobenius_norm()
    }

    /// Matrix-vector action on a four-vector.
    pub fn apply(&self, v: &FourVector) -> FourVector {
        let col = [v.x, v.y, v.z, v.t];
        let mut out = [0.0; 4];
        for (i, row) in self.rows.iter().enumerate() {
            out[i] = row[0] * col[0] + row[1] * col[1] + row[2] * col[2] + row[3] * col[3];
        }
        FourVector::new(out[0], out[1], out[2], out[3])
    }

    /// Frobenius norm of `L^T g L - g`; zero for exact Lorentz members.
    pub fn lorentz_defect(&self) -> f64 {
        (self.transpose() * Mat4::METRIC * *self - Mat4::METRIC).frobenius_norm()
    }

    pub fn is_finite(&self) -> bool {
        self.rows.iter().flatten().all(|v| v.is_finite())
    }
}

impl Mul for Mat4 {
    type Output = Mat4;

    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for (out_row, lhs_row) in out.iter_mut().zip(&self.rows) {
            for (j, cell) in out_row.iter_mut().enumerate() {
                *cell = (0..4).map(|k| lhs_row[k] * rhs.rows[k][j]).sum();
            }
        }
        Mat4::from_rows(out)
    }
}

impl Sub for Mat4 {
    type Output = Mat4;

    fn sub(self, rhs: Mat4) -> Mat4 {
        let mut out = [[0.0; 4]; 4];
        for (i, out_row) in out.iter_mut().enumerate() {
            for (j, cell) in out_row.iter_mut().enumerate() {
                *cell = self.rows[i][j] - rhs.rows[i][j];
            }
        }
        Mat4::from_rows(out)
    }
}

impl FourVector {
    pub const fn new(x: f64, y: f64, z: f64, t: f64) -> Self {
        FourVector { x, y, z, t }
    }

    /// Euclidean length of the raw component 4-tuple. Used for residuals,
    /// not a Lorentz-invariant quantity.
    pub fn euclidean_norm(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z + self.t * self.t).sqrt()
    }
}

impl Sub for FourVector {
    type Output = FourVector;

    fn sub(self, rhs: FourVector) -> FourVector {
        FourVector::new(
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
            self.t - rhs.t,
        )
    }
}

/// Minkowski bilinear form `x_u x_v + y_u y_v + z_u z_v - t_u t_v`.
pub fn minkowski(u: &FourVector, v: &FourVector) -> f64 {
    u.x * v.x + u.y * v.y + u.z * v.z - u.t * v.t
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_fixes_every_vector() {
        let v = FourVector::new(0.0, 0.0, 3.0, 5.0);
        assert_eq!(Mat4::IDENTITY.apply(&v), v);
    }

    #[test]
    fn lightlike_vectors_have_zero_norm() {
        for p in [0.5, 1.0, 2.0, 7.25] {
            let v = FourVector::new(0.0, 0.0, p, p);
            assert_eq!(minkowski(&v, &v), 0.0);
        }
    }

    #[test]
    fn rest_frame_norm_is_minus_mass_squared() {
        let m = 1.75;
        let v = FourVector::new(0.0, 0.0, 0.0, m);
        assert_eq!(minkowski(&v, &v), -m * m);
    }

    #[test]
    fn metric_is_its_own_lorentz_member() {
        assert_eq!(Mat4::METRIC.lorentz_defect(), 0.0);
        assert_eq!(Mat4::IDENTITY.lorentz_defect(), 0.0);
    }

    #[test]
    fn transpose_roundtrips() {
        let m = Mat4::from_rows([
            [1.0, 2.0, 3.0, 4.0],
            [5.0, 6.0, 7.0, 8.0],
            [9.0, 10.0, 11.0, 12.0],
            [13.0, 14.0, 15.0, 16.0],
        ]);
        assert_eq!(m.transpose().transpose(), m);
    }
}
