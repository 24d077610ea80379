//! Unitary changes between the four 2x2 representations.
//!
//! Each representation is reached from the Weyl form by a fixed unitary;
//! arbitrary pairs compose through Weyl. The defining property of a change
//! S from representation A to B is that conjugation carries the velocity
//! structure across: S (gamma^0 gamma^1)_A S† = (gamma^0 gamma^1)_B, so the
//! free Hamiltonians -i hbar c (gamma^0 gamma^1) d/dx map into each other.

use num_complex::Complex64 as C64;

use crate::algebra::{is_unitary, pauli, Axis, Mat2, Representation, DEFAULT_TOL};
use crate::error::{Error, Result};

/// A component transform psi_to = matrix * psi_from between representations.
#[derive(Clone, Copy, Debug)]
pub struct RepChange {
    pub from: Representation,
    pub to: Representation,
    pub matrix: Mat2,
}

/// Unitary mapping a representation's components into Weyl components.
///
/// Dirac -> Weyl: (sigma_x + sigma_z)/sqrt(2) (the Hadamard matrix).
/// Majorana -> Weyl: exp(-i pi/4)/sqrt(2) * [[1, 1], [i, -i]].
/// Jackiw-Rebbi -> Weyl: (1 - i sigma_x)/sqrt(2).
fn to_weyl_matrix(rep: Representation) -> Mat2 {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    match rep {
        Representation::Weyl => Mat2::identity(),
        Representation::Dirac => (pauli(Axis::X) + pauli(Axis::Z)).scale(C64::new(s, 0.0)),
        Representation::Majorana => {
            let phase = C64::new(std::f64::consts::FRAC_PI_4.cos(), -std::f64::consts::FRAC_PI_4.sin());
            let i = C64::new(0.0, 1.0);
            Mat2::new(C64::ONE, C64::ONE, i, -i).scale(phase * C64::new(s, 0.0))
        }
        Representation::JackiwRebbi => {
            (Mat2::identity() - pauli(Axis::X).scale(C64::new(0.0, 1.0))).scale(C64::new(s, 0.0))
        }
    }
}

/// Component transform between any two representations, composed through
/// the Weyl form: S(from -> to) = W(to)† W(from).
pub fn rep_change_matrix(from: Representation, to: Representation) -> RepChange {
    let matrix = to_weyl_matrix(to).adjoint() * to_weyl_matrix(from);
    RepChange { from, to, matrix }
}

/// Apply a component transform to a two-spinor.
pub fn transform_components(s: &Mat2, v: [C64; 2]) -> [C64; 2] {
    s.mul_vec(v)
}

/// Conjugate a Hamiltonian structure matrix: returns S h S†.
///
/// Rejects non-unitary S; conjugation by anything else would not preserve
/// the operator's self-adjointness.
pub fn conjugate_hamiltonian_matrix(s: &Mat2, h: &Mat2) -> Result<Mat2> {
    if !is_unitary(s, DEFAULT_TOL) {
        return Err(Error::Argument("conjugation matrix must be unitary".into()));
    }
    Ok(*s * *h * s.adjoint())
}
