use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

use super::mat2::Mat2;

/// Dense complex 4x4 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat4 {
    pub e: [[C64; 4]; 4],
}

impl Mat4 {
    pub fn zero() -> Self {
        Mat4 { e: [[C64::ZERO; 4]; 4] }
    }

    pub fn identity() -> Self {
        let mut out = Mat4::zero();
        for i in 0..4 {
            out.e[i][i] = C64::ONE;
        }
        out
    }

    pub fn from_rows(rows: [[C64; 4]; 4]) -> Self {
        Mat4 { e: rows }
    }

    /// Assemble from 2x2 blocks [[tl, tr], [bl, br]].
    pub fn from_blocks(tl: Mat2, tr: Mat2, bl: Mat2, br: Mat2) -> Self {
        let mut out = Mat4::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = tl.e[i][j];
                out.e[i][j + 2] = tr.e[i][j];
                out.e[i + 2][j] = bl.e[i][j];
                out.e[i + 2][j + 2] = br.e[i][j];
            }
        }
        out
    }

    /// Extract the 2x2 block at block-row `bi`, block-column `bj` (0 or 1).
    pub fn block(&self, bi: usize, bj: usize) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = self.e[2 * bi + i][2 * bj + j];
            }
        }
        out
    }

    pub fn scale(&self, s: C64) -> Self {
        let mut out = *self;
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v *= s;
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for row in out.e.iter_mut() {
            for v in row.iter_mut() {
                *v = v.conj();
            }
        }
        out
    }

    pub fn transpose(&self) -> Self {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                out.e[i][j] = self.e[j][i];
            }
        }
        out
    }

    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    pub fn trace(&self) -> C64 {
        (0..4).map(|i| self.e[i][i]).sum()
    }

    pub fn max_abs(&self) -> f64 {
        self.e.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Mat4) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn mul_vec(&self, v: [C64; 4]) -> [C64; 4] {
        let mut out = [C64::ZERO; 4];
        for i in 0..4 {
            for j in 0..4 {
                out[i] += self.e[i][j] * v[j];
            }
        }
        out
    }

    /// Gauss-Jordan inverse with partial pivoting.
    pub fn inverse(&self) -> Result<Mat4> {
        let mut a = self.e;
        let mut inv = Mat4::identity().e;
        for col in 0..4 {
            let pivot = (col..4)
                .max_by(|&i, &j| a[i][col].norm().total_cmp(&a[j][col].norm()))
                .unwrap();
            if a[pivot][col].norm() < 1e-13 * self.max_abs().max(1.0) {
                return Err(Error::Numeric("4x4 inverse of a singular matrix".into()));
            }
            a.swap(col, pivot);
            inv.swap(col, pivot);
            let scale = C64::ONE / a[col][col];
            for j in 0..4 {
                a[col][j] *= scale;
                inv[col][j] *= scale;
            }
            for i in 0..4 {
                if i == col {
                    continue;
                }
                let f = a[i][col];
                if f == C64::ZERO {
                    continue;
                }
                for j in 0..4 {
                    let (acj, icj) = (a[col][j], inv[col][j]);
                    a[i][j] -= f * acj;
                    inv[i][j] -= f * icj;
                }
            }
        }
        Ok(Mat4 { e: inv })
    }
}

impl Add for Mat4 {
    type Output = Mat4;
    fn add(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for (i, row) in out.e.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += rhs.e[i][j];
            }
        }
        out
    }
}

impl Sub for Mat4 {
    type Output = Mat4;
    fn sub(self, rhs: Mat4) -> Mat4 {
        let mut out = self;
        for (i, row) in out.e.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v -= rhs.e[i][j];
            }
        }
        out
    }
}

impl Neg for Mat4 {
    type Output = Mat4;
    fn neg(self) -> Mat4 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for Mat4 {
    type Output = Mat4;
    fn mul(self, rhs: Mat4) -> Mat4 {
        let mut out = Mat4::zero();
        for i in 0..4 {
            for j in 0..4 {
                let mut s = C64::ZERO;
                for k in 0..4 {
                    s += self.e[i][k] * rhs.e[k][j];
                }
                out.e[i][j] = s;
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Mat4 {
    type Output = C64;
    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.e[idx.0][idx.1]
    }
}
