use std::fmt;
use std::ops::{Add, Index, Mul, Neg, Sub};

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Dense complex 2x2 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Mat2 {
    pub e: [[C64; 2]; 2],
}

impl Mat2 {
    pub fn new(a: C64, b: C64, c: C64, d: C64) -> Self {
        Mat2 { e: [[a, b], [c, d]] }
    }

    pub fn from_rows(rows: [[C64; 2]; 2]) -> Self {
        Mat2 { e: rows }
    }

    /// Matrix with real entries only.
    pub fn from_real(a: f64, b: f64, c: f64, d: f64) -> Self {
        Mat2::new(C64::new(a, 0.0), C64::new(b, 0.0), C64::new(c, 0.0), C64::new(d, 0.0))
    }

    pub fn zero() -> Self {
        Mat2::from_real(0.0, 0.0, 0.0, 0.0)
    }

    pub fn identity() -> Self {
        Mat2::from_real(1.0, 0.0, 0.0, 1.0)
    }

    pub fn diag(a: C64, d: C64) -> Self {
        Mat2::new(a, C64::ZERO, C64::ZERO, d)
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
        Mat2::new(self.e[0][0], self.e[1][0], self.e[0][1], self.e[1][1])
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Self {
        self.conj().transpose()
    }

    pub fn det(&self) -> C64 {
        self.e[0][0] * self.e[1][1] - self.e[0][1] * self.e[1][0]
    }

    pub fn trace(&self) -> C64 {
        self.e[0][0] + self.e[1][1]
    }

    pub fn inverse(&self) -> Result<Mat2> {
        let d = self.det();
        if d.norm() < 1e-14 * self.max_abs().max(1.0) {
            return Err(Error::Numeric("2x2 inverse of a singular matrix".into()));
        }
        let inv = C64::new(1.0, 0.0) / d;
        Ok(Mat2::new(self.e[1][1] * inv, -self.e[0][1] * inv, -self.e[1][0] * inv, self.e[0][0] * inv))
    }

    /// Largest entry magnitude.
    pub fn max_abs(&self) -> f64 {
        self.e.iter().flatten().map(|v| v.norm()).fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &Mat2) -> f64 {
        (*self - *other).max_abs()
    }

    pub fn is_finite(&self) -> bool {
        self.e.iter().flatten().all(|v| v.re.is_finite() && v.im.is_finite())
    }

    /// Apply to a column vector.
    pub fn mul_vec(&self, v: [C64; 2]) -> [C64; 2] {
        [
            self.e[0][0] * v[0] + self.e[0][1] * v[1],
            self.e[1][0] * v[0] + self.e[1][1] * v[1],
        ]
    }

    /// Singular values in descending order.
    ///
    /// Closed form from the eigenvalues of M†M: for a Hermitian
    /// [[a, b], [conj(b), c]] they are (a+c)/2 ± sqrt(((a-c)/2)^2 + |b|^2).
    pub fn singular_values(&self) -> [f64; 2] {
        let m = self.adjoint() * *self;
        let a = m.e[0][0].re;
        let c = m.e[1][1].re;
        let b2 = m.e[0][1].norm_sqr();
        let mid = 0.5 * (a + c);
        let rad = (0.25 * (a - c) * (a - c) + b2).sqrt();
        let hi = (mid + rad).max(0.0).sqrt();
        // The eigenvalue difference mid - rad cancels badly when the
        // matrix is nearly singular; sigma_min = |det| / sigma_max is the
        // same number without the cancellation.
        let lo = if hi > 0.0 { self.det().norm() / hi } else { 0.0 };
        [hi, lo.min(hi)]
    }

    /// Unit right singular vectors, ordered to match `singular_values`.
    ///
    /// When the two singular values coincide to machine precision any
    /// orthonormal pair is valid; the canonical basis is returned.
    pub fn right_singular_vectors(&self) -> [[C64; 2]; 2] {
        let m = self.adjoint() * *self;
        let a = m.e[0][0].re;
        let c = m.e[1][1].re;
        let b = m.e[0][1];
        let mid = 0.5 * (a + c);
        let rad = (0.25 * (a - c) * (a - c) + b.norm_sqr()).sqrt();
        let scale = a.abs().max(c.abs()).max(b.norm());
        if rad <= 1e-15 * scale.max(1.0) || scale == 0.0 {
            return [[C64::ONE, C64::ZERO], [C64::ZERO, C64::ONE]];
        }
        let lam_hi = mid + rad;
        // Eigenvector of the Hermitian M†M for eigenvalue lam: either column
        // of (M†M - lam) spans the orthogonal complement; pick the better
        // conditioned of the two closed forms.
        let pick = |lam: f64| -> [C64; 2] {
            let v1 = [b, C64::new(lam - a, 0.0)];
            let v2 = [C64::new(lam - c, 0.0), b.conj()];
            let n1 = v1[0].norm_sqr() + v1[1].norm_sqr();
            let n2 = v2[0].norm_sqr() + v2[1].norm_sqr();
            let v = if n1 >= n2 { v1 } else { v2 };
            let n = (v[0].norm_sqr() + v[1].norm_sqr()).sqrt();
            [v[0] / n, v[1] / n]
        };
        let hi = pick(lam_hi);
        let lo = [-hi[1].conj(), hi[0].conj()];
        [hi, lo]
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.e.iter().enumerate() {
            write!(f, "[{:+.6}{:+.6}i, {:+.6}{:+.6}i]", row[0].re, row[0].im, row[1].re, row[1].im)?;
            if i == 0 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl Add for Mat2 {
    type Output = Mat2;
    fn add(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for (i, row) in out.e.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v += rhs.e[i][j];
            }
        }
        out
    }
}

impl Sub for Mat2 {
    type Output = Mat2;
    fn sub(self, rhs: Mat2) -> Mat2 {
        let mut out = self;
        for (i, row) in out.e.iter_mut().enumerate() {
            for (j, v) in row.iter_mut().enumerate() {
                *v -= rhs.e[i][j];
            }
        }
        out
    }
}

impl Neg for Mat2 {
    type Output = Mat2;
    fn neg(self) -> Mat2 {
        self.scale(C64::new(-1.0, 0.0))
    }
}

impl Mul for Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: Mat2) -> Mat2 {
        let mut out = Mat2::zero();
        for i in 0..2 {
            for j in 0..2 {
                out.e[i][j] = self.e[i][0] * rhs.e[0][j] + self.e[i][1] * rhs.e[1][j];
            }
        }
        out
    }
}

impl Index<(usize, usize)> for Mat2 {
    type Output = C64;
    fn index(&self, idx: (usize, usize)) -> &C64 {
        &self.e[idx.0][idx.1]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn product_and_adjoint() {
        let a = Mat2::new(c(1.0, 1.0), c(0.0, 2.0), c(3.0, 0.0), c(-1.0, 1.0));
        let b = a.adjoint() * a;
        // Gram matrix is Hermitian with non-negative diagonal.
        assert!(b.e[0][1].conj().re - b.e[1][0].re < 1e-14);
        assert!(b.e[0][0].im.abs() < 1e-14 && b.e[0][0].re >= 0.0);
    }

    #[test]
    fn inverse_round_trip() {
        let a = Mat2::new(c(2.0, 1.0), c(0.5, -1.0), c(0.0, 3.0), c(1.0, 0.0));
        let inv = a.inverse().unwrap();
        assert!((a * inv).max_abs_diff(&Mat2::identity()) < 1e-14);
        assert!(Mat2::zero().inverse().is_err());
    }

    #[test]
    fn singular_values_of_diagonal() {
        let a = Mat2::diag(c(0.0, 3.0), c(-0.5, 0.0));
        let sv = a.singular_values();
        assert!((sv[0] - 3.0).abs() < 1e-14);
        assert!((sv[1] - 0.5).abs() < 1e-14);
    }

    #[test]
    fn right_singular_vectors_annihilate_smallest_direction() {
        let a = Mat2::new(c(1.0, 0.5), c(2.0, -1.0), c(0.5, 0.5), c(1.0, -0.5));
        let sv = a.singular_values();
        let vs = a.right_singular_vectors();
        for (s, v) in sv.iter().zip(vs.iter()) {
            let av = a.mul_vec(*v);
            let norm = (av[0].norm_sqr() + av[1].norm_sqr()).sqrt();
            assert!((norm - s).abs() < 1e-12, "|Av| = {norm}, sigma = {s}");
        }
        // Orthonormal pair.
        let dot = vs[0][0].conj() * vs[1][0] + vs[0][1].conj() * vs[1][1];
        assert!(dot.norm() < 1e-14);
    }
}
