//! Matrix kernel: Pauli and gamma matrices, the phase-quaternion form of a
//! U(2) element, and representation tags for the (1+1)-dimensional operator.
//!
//! Everything here is fixed-size 2x2 or 4x4 with closed-form arithmetic;
//! there is deliberately no general linear algebra.

mod mat2;
mod mat4;

pub use mat2::Mat2;
pub use mat4::Mat4;

pub use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Default absolute tolerance for algebraic identity checks.
pub const DEFAULT_TOL: f64 = 1e-12;

/// Spatial axis label, 1-indexed as x=1, y=2, z=3 in error messages and I/O.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Axis {
    X,
    Y,
    Z,
}

impl Axis {
    pub const ALL: [Axis; 3] = [Axis::X, Axis::Y, Axis::Z];

    pub fn index(self) -> u8 {
        match self {
            Axis::X => 1,
            Axis::Y => 2,
            Axis::Z => 3,
        }
    }

    pub fn from_index(j: u8) -> Result<Axis> {
        match j {
            1 => Ok(Axis::X),
            2 => Ok(Axis::Y),
            3 => Ok(Axis::Z),
            other => Err(Error::Argument(format!("axis must be 1, 2, or 3, got {other}"))),
        }
    }
}

/// The two massless species: `Right` propagates at +c (the a=1 operator
/// +c p, positive-helicity block), `Left` at -c (the a=2 operator -c p).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chirality {
    Right,
    Left,
}

impl Chirality {
    /// Sign relating wavenumber to energy: E = sign * hbar c k.
    pub fn sign(self) -> f64 {
        match self {
            Chirality::Right => 1.0,
            Chirality::Left => -1.0,
        }
    }

    pub fn from_index(a: u8) -> Result<Chirality> {
        match a {
            1 => Ok(Chirality::Right),
            2 => Ok(Chirality::Left),
            other => Err(Error::Argument(format!("particle type must be 1 or 2, got {other}"))),
        }
    }

    pub fn index(self) -> u8 {
        match self {
            Chirality::Right => 1,
            Chirality::Left => 2,
        }
    }
}

/// Sign of the plane-wave energy.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EnergySign {
    Positive,
    Negative,
}

impl EnergySign {
    pub fn value(self) -> f64 {
        match self {
            EnergySign::Positive => 1.0,
            EnergySign::Negative => -1.0,
        }
    }
}

/// Gamma-matrix representation of the (1+1)-dimensional Dirac operator.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Representation {
    Weyl,
    Dirac,
    Majorana,
    JackiwRebbi,
}

impl Representation {
    pub const ALL: [Representation; 4] = [
        Representation::Weyl,
        Representation::Dirac,
        Representation::Majorana,
        Representation::JackiwRebbi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Representation::Weyl => "weyl",
            Representation::Dirac => "dirac",
            Representation::Majorana => "majorana",
            Representation::JackiwRebbi => "jackiw-rebbi",
        }
    }

    pub fn from_name(s: &str) -> Result<Representation> {
        match s {
            "weyl" => Ok(Representation::Weyl),
            "dirac" => Ok(Representation::Dirac),
            "majorana" => Ok(Representation::Majorana),
            "jackiw-rebbi" | "jackiwrebbi" | "jr" => Ok(Representation::JackiwRebbi),
            other => Err(Error::Argument(format!(
                "unknown representation {other:?} (expected weyl, dirac, majorana, or jackiw-rebbi)"
            ))),
        }
    }
}

/// Pauli matrix for the given axis.
pub fn pauli(axis: Axis) -> Mat2 {
    match axis {
        Axis::X => Mat2::from_real(0.0, 1.0, 1.0, 0.0),
        Axis::Y => Mat2::new(
            C64::ZERO,
            C64::new(0.0, -1.0),
            C64::new(0.0, 1.0),
            C64::ZERO,
        ),
        Axis::Z => Mat2::from_real(1.0, 0.0, 0.0, -1.0),
    }
}

/// Parameters (mu, m) of a U(2) element in phase-quaternion form.
///
/// The parameter vector m must have unit Euclidean norm. The pair (mu, m)
/// and (mu + pi, -m) describe the same matrix up to an overall sign flip of
/// the construction; both are accepted and neither is canonicalized.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct UnitaryParams {
    pub mu: f64,
    pub m: [f64; 4],
}

impl UnitaryParams {
    pub fn new(mu: f64, m: [f64; 4]) -> Result<Self> {
        if !mu.is_finite() {
            return Err(Error::Argument(format!("mu must be finite, got {mu}")));
        }
        let norm2: f64 = m.iter().map(|v| v * v).sum();
        if !norm2.is_finite() || (norm2.sqrt() - 1.0).abs() > DEFAULT_TOL {
            return Err(Error::Argument(format!(
                "parameter vector (m0, m1, m2, m3) must have unit norm within {DEFAULT_TOL}, got norm {}",
                norm2.sqrt()
            )));
        }
        Ok(UnitaryParams { mu, m })
    }
}

/// Build the U(2) matrix
/// exp(i mu) * [[m0 - i m3, -m2 - i m1], [m2 - i m1, m0 + i m3]],
/// equivalently exp(i mu) (m0 - i m . sigma); its determinant is exp(2 i mu).
pub fn build_unitary(p: &UnitaryParams) -> Mat2 {
    let [m0, m1, m2, m3] = p.m;
    let phase = C64::new(p.mu.cos(), p.mu.sin());
    Mat2::new(
        phase * C64::new(m0, -m3),
        phase * C64::new(-m2, -m1),
        phase * C64::new(m2, -m1),
        phase * C64::new(m0, m3),
    )
}

/// Whether U†U = 1 within `tol` (entrywise).
pub fn is_unitary(u: &Mat2, tol: f64) -> bool {
    u.is_finite() && (u.adjoint() * *u).max_abs_diff(&Mat2::identity()) <= tol
}

/// Whether the matrix is real and orthogonal within `tol`.
pub fn is_real_orthogonal(u: &Mat2, tol: f64) -> bool {
    let imag = u.e.iter().flatten().map(|v| v.im.abs()).fold(0.0, f64::max);
    imag <= tol && is_unitary(u, tol)
}

/// The (gamma^0, gamma^1) pair of a (1+1)-dimensional representation.
///
/// Weyl: (sigma_x, -i sigma_y); Dirac: (sigma_z, i sigma_y);
/// Majorana: (sigma_y, -i sigma_z), for which both i gamma^mu are real;
/// Jackiw-Rebbi: (sigma_x, i sigma_z).
pub fn gamma_pair(rep: Representation) -> (Mat2, Mat2) {
    let i = C64::new(0.0, 1.0);
    match rep {
        Representation::Weyl => (pauli(Axis::X), pauli(Axis::Y).scale(-i)),
        Representation::Dirac => (pauli(Axis::Z), pauli(Axis::Y).scale(i)),
        Representation::Majorana => (pauli(Axis::Y), pauli(Axis::Z).scale(-i)),
        Representation::JackiwRebbi => (pauli(Axis::X), pauli(Axis::Z).scale(i)),
    }
}

/// The velocity-structure matrix gamma^0 gamma^1 of a representation.
///
/// This is the Pauli matrix whose axis labels the boundary-condition family
/// of the representation: sigma_z (Weyl), sigma_x (Dirac and Majorana),
/// sigma_y (Jackiw-Rebbi).
pub fn gamma0_gamma1(rep: Representation) -> Mat2 {
    let (g0, g1) = gamma_pair(rep);
    g0 * g1
}

/// Check the two-dimensional Clifford relations:
/// (gamma^0)^2 = 1, (gamma^1)^2 = -1, {gamma^0, gamma^1} = 0,
/// and Hermiticity pattern (gamma^mu)† = gamma^0 gamma^mu gamma^0.
pub fn is_clifford_pair(g0: &Mat2, g1: &Mat2, tol: f64) -> bool {
    let id = Mat2::identity();
    let sq0 = (*g0 * *g0).max_abs_diff(&id) <= tol;
    let sq1 = (*g1 * *g1).max_abs_diff(&(-id)) <= tol;
    let anti = (*g0 * *g1 + *g1 * *g0).max_abs() <= tol;
    let h0 = g0.adjoint().max_abs_diff(&(*g0 * *g0 * *g0)) <= tol;
    let h1 = g1.adjoint().max_abs_diff(&(*g0 * *g1 * *g0)) <= tol;
    sq0 && sq1 && anti && h0 && h1
}

/// The chiral 3+1 gamma set: gamma^mu, gamma^5, and the spin block Sigma.
#[derive(Clone, Copy, Debug)]
pub struct GammaSet4 {
    /// gamma^0..gamma^3.
    pub gamma: [Mat4; 4],
    /// gamma^5 = i gamma^0 gamma^1 gamma^2 gamma^3 = diag(1, 1, -1, -1).
    pub gamma5: Mat4,
    /// Sigma_j = gamma^5 gamma^0 gamma^j = diag(sigma_j, sigma_j).
    pub sigma: [Mat4; 3],
}

/// Construct the chiral (Weyl) 3+1 gamma set:
/// gamma^mu = [[0, -sbar^mu], [-s^mu, 0]] with s^mu = (1, sigma),
/// sbar^mu = (1, -sigma).
pub fn weyl_gamma_set() -> GammaSet4 {
    let id = Mat2::identity();
    let zero = Mat2::zero();
    let g0 = Mat4::from_blocks(zero, -id, -id, zero);
    let gj = |ax: Axis| Mat4::from_blocks(zero, pauli(ax), -pauli(ax), zero);
    let gamma = [g0, gj(Axis::X), gj(Axis::Y), gj(Axis::Z)];
    let i = C64::new(0.0, 1.0);
    let gamma5 = (gamma[0] * gamma[1] * gamma[2] * gamma[3]).scale(i);
    let sigma = [
        gamma5 * gamma[0] * gamma[1],
        gamma5 * gamma[0] * gamma[2],
        gamma5 * gamma[0] * gamma[3],
    ];
    GammaSet4 { gamma, gamma5, sigma }
}
