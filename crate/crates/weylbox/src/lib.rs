//! Massless Dirac particles in a one-dimensional box.
//!
//! The crate implements the full pipeline for a relativistic massless
//! particle confined to the interval [0, l] in natural units (hbar = c = 1):
//!
//! * `algebra`: Pauli/gamma matrices and the phase-quaternion form of U(2);
//! * `representations`: changes between the Weyl, Dirac, Majorana, and
//!   Jackiw-Rebbi forms of the one-dimensional operator;
//! * `boundary`: the U(2)-parametrized families of boundary conditions that
//!   make the operator self-adjoint, their solution subspaces, confinement
//!   classification, and reality admissibility;
//! * `spectral`: quantization at the wavenumbers where the boundary matrix
//!   becomes singular, eigenfunctions, and an independent shooting check;
//! * `kinematics`: boosts, rotations, chirality and helicity of plane
//!   waves, and the classical velocity;
//! * `dynamics`: eigenbasis time evolution with norm, wall-current, and
//!   continuity diagnostics.
//!
//! With the default `parallel` feature the spectral scan fans out over
//! rayon; disabling it yields a dependency-free sequential build with
//! bit-identical results.

pub mod algebra;
pub mod boundary;
pub mod dynamics;
pub mod error;
pub mod kinematics;
pub mod representations;
pub mod spectral;

pub use error::{Error, Result};

/// Order-preserving map over a slice, parallel when the `parallel` feature
/// is enabled. Only used for independent per-element work so the output is
/// identical either way.
pub(crate) fn map_slice<T, U, F>(items: &[T], f: F) -> Vec<U>
where
    T: Sync,
    U: Send,
    F: Fn(&T) -> U + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        items.par_iter().map(f).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        items.iter().map(f).collect()
    }
}
