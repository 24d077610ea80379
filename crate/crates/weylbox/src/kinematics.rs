//! Lorentz transformations and free plane-wave kinematics.
//!
//! Coordinate transforms act on (t, x, y, z) rows; their spinor
//! counterparts act on four-component amplitudes in the chiral basis, or
//! two-component ones in one space dimension. Closed forms are used
//! throughout; the generator exponentials they equal are separately
//! available for cross-checking.

use num_complex::Complex64 as C64;

use crate::algebra::{
    gamma_pair, pauli, weyl_gamma_set, Axis, Chirality, EnergySign, Mat2, Mat4, Representation,
};
use crate::error::{Error, Result};
use crate::representations::rep_change_matrix;

fn re(x: f64) -> C64 {
    C64::new(x, 0.0)
}

fn im(x: f64) -> C64 {
    C64::new(0.0, x)
}

/// Generator K of coordinate boosts along `axis`: the closed-form boost
/// equals exp(i omega K).
pub fn boost_generator(axis: Axis) -> Mat4 {
    let z = Mat2::zero();
    let half = |m: Mat2| m.scale(im(0.5));
    match axis {
        Axis::X => Mat4::from_blocks(pauli(Axis::X).scale(im(1.0)), z, z, z),
        Axis::Y => {
            let b = half(Mat2::identity() + pauli(Axis::Z));
            Mat4::from_blocks(z, b, b, z)
        }
        Axis::Z => {
            let up = half(pauli(Axis::X) + pauli(Axis::Y).scale(im(1.0)));
            let dn = half(pauli(Axis::X) - pauli(Axis::Y).scale(im(1.0)));
            Mat4::from_blocks(z, up, dn, z)
        }
    }
}

/// Generator J of coordinate rotations about `axis`: the closed-form
/// rotation equals exp(i theta J).
pub fn rotation_generator(axis: Axis) -> Mat4 {
    let z = Mat2::zero();
    match axis {
        Axis::X => Mat4::from_blocks(z, z, z, pauli(Axis::Y)),
        Axis::Y => {
            let b = (Mat2::identity() - pauli(Axis::Z)).scale(im(0.5));
            Mat4::from_blocks(z, b, -b, z)
        }
        Axis::Z => {
            let up = (pauli(Axis::X) - pauli(Axis::Y).scale(im(1.0))).scale(im(-0.5));
            let dn = (pauli(Axis::X) + pauli(Axis::Y).scale(im(1.0))).scale(im(0.5));
            Mat4::from_blocks(z, up, dn, z)
        }
    }
}

/// Boost with rapidity omega along `axis`: (coordinate transform, spinor
/// transform). The spinor half is block diagonal,
/// diag(cosh(w/2) - sinh(w/2) sigma, cosh(w/2) + sinh(w/2) sigma),
/// and equals exp(-omega gamma^0 gamma^axis / 2).
pub fn boost_4d(axis: Axis, omega: f64) -> Result<(Mat4, Mat4)> {
    if !omega.is_finite() {
        return Err(Error::Argument(format!("rapidity must be finite, got {omega}")));
    }
    let j = axis.index() as usize;
    let (ch, sh) = (omega.cosh(), omega.sinh());
    let mut lambda = Mat4::identity();
    lambda.e[0][0] = re(ch);
    lambda.e[0][j] = re(-sh);
    lambda.e[j][0] = re(-sh);
    lambda.e[j][j] = re(ch);
    let (hc, hs) = ((0.5 * omega).cosh(), (0.5 * omega).sinh());
    let s = pauli(axis);
    let top = Mat2::identity().scale(re(hc)) - s.scale(re(hs));
    let bottom = Mat2::identity().scale(re(hc)) + s.scale(re(hs));
    let spinor = Mat4::from_blocks(top, Mat2::zero(), Mat2::zero(), bottom);
    Ok((lambda, spinor))
}

/// Rotation by theta about `axis`: (coordinate transform, spinor
/// transform). The spinor half is diag(b, b) with
/// b = cos(t/2) + i sin(t/2) sigma, the double cover: a full turn gives
/// minus the identity.
pub fn rotation_4d(axis: Axis, theta: f64) -> Result<(Mat4, Mat4)> {
    if !theta.is_finite() {
        return Err(Error::Argument(format!("angle must be finite, got {theta}")));
    }
    let (c, s) = (theta.cos(), theta.sin());
    let mut lambda = Mat4::identity();
    match axis {
        Axis::X => {
            lambda.e[2][2] = re(c);
            lambda.e[2][3] = re(s);
            lambda.e[3][2] = re(-s);
            lambda.e[3][3] = re(c);
        }
        Axis::Y => {
            lambda.e[1][1] = re(c);
            lambda.e[1][3] = re(-s);
            lambda.e[3][1] = re(s);
            lambda.e[3][3] = re(c);
        }
        Axis::Z => {
            lambda.e[1][1] = re(c);
            lambda.e[1][2] = re(s);
            lambda.e[2][1] = re(-s);
            lambda.e[2][2] = re(c);
        }
    }
    let b = Mat2::identity().scale(re((0.5 * theta).cos()))
        + pauli(axis).scale(im((0.5 * theta).sin()));
    let spinor = Mat4::from_blocks(b, Mat2::zero(), Mat2::zero(), b);
    Ok((lambda, spinor))
}

/// Largest deviation from the covariance relation
/// Lambda^mu_nu gamma^nu = S^{-1} gamma^mu S over all four mu.
pub fn covariance_residual(lambda: &Mat4, spinor: &Mat4) -> Result<f64> {
    let g = weyl_gamma_set();
    let s_inv = spinor.inverse()?;
    let mut worst: f64 = 0.0;
    for mu in 0..4 {
        let mut lhs = Mat4::zero();
        for (nu, gam) in g.gamma.iter().enumerate() {
            lhs = lhs + gam.scale(lambda.e[mu][nu]);
        }
        let rhs = s_inv * g.gamma[mu] * *spinor;
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    Ok(worst)
}

/// Boost in one space dimension: the 2x2 coordinate transform on (t, x)
/// and the two spinor scaling factors, which multiply the chiral
/// components and satisfy s_top * s_bottom = 1.
#[derive(Clone, Copy, Debug)]
pub struct Boost1D {
    pub lambda: [[f64; 2]; 2],
    pub s_top: f64,
    pub s_bottom: f64,
}

impl Boost1D {
    /// Spinor transform in the chiral (Weyl-form) components.
    pub fn spinor_matrix(&self) -> Mat2 {
        Mat2::diag(re(self.s_top), re(self.s_bottom))
    }
}

pub fn boost_1d(omega: f64) -> Result<Boost1D> {
    if !omega.is_finite() {
        return Err(Error::Argument(format!("rapidity must be finite, got {omega}")));
    }
    let (ch, sh) = (omega.cosh(), omega.sinh());
    Ok(Boost1D {
        lambda: [[ch, -sh], [-sh, ch]],
        s_top: (-0.5 * omega).exp(),
        s_bottom: (0.5 * omega).exp(),
    })
}

/// The 1d boost transported into another set of components.
pub fn boost_spinor_1d(rep: Representation, omega: f64) -> Result<Mat2> {
    let b = boost_1d(omega)?;
    let c = rep_change_matrix(Representation::Weyl, rep).matrix;
    Ok(c * b.spinor_matrix() * c.adjoint())
}

/// Largest deviation from the 1d covariance relation for the given
/// components.
pub fn covariance_residual_1d(rep: Representation, omega: f64) -> Result<f64> {
    let b = boost_1d(omega)?;
    let s = boost_spinor_1d(rep, omega)?;
    let s_inv = s.inverse()?;
    let (g0, g1) = gamma_pair(rep);
    let gammas = [g0, g1];
    let mut worst: f64 = 0.0;
    for mu in 0..2 {
        let lhs = gammas[0].scale(re(b.lambda[mu][0])) + gammas[1].scale(re(b.lambda[mu][1]));
        let rhs = s_inv * gammas[mu] * s;
        worst = worst.max(lhs.max_abs_diff(&rhs));
    }
    Ok(worst)
}

/// Four-component chirality projector (1 +- gamma5)/2.
pub fn chiral_projector(which: Chirality) -> Mat4 {
    let g5 = weyl_gamma_set().gamma5;
    (Mat4::identity() + g5.scale(re(which.sign()))).scale(re(0.5))
}

/// Two-component chirality projector (1 +- gamma0 gamma1)/2 in the given
/// components; in the Weyl form it selects the top or bottom component.
pub fn chiral_projector_1d(rep: Representation, which: Chirality) -> Mat2 {
    let v = crate::algebra::gamma0_gamma1(rep);
    (Mat2::identity() + v.scale(re(which.sign()))).scale(re(0.5))
}

fn sigma_dot(n: [f64; 3]) -> Mat2 {
    pauli(Axis::X).scale(re(n[0]))
        + pauli(Axis::Y).scale(re(n[1]))
        + pauli(Axis::Z).scale(re(n[2]))
}

fn unit3(p: [f64; 3]) -> Result<[f64; 3]> {
    let n = (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt();
    if !(n.is_finite() && n > 0.0) {
        return Err(Error::Argument("momentum must be a nonzero finite vector".into()));
    }
    Ok([p[0] / n, p[1] / n, p[2] / n])
}

/// Unit eigenvector of sigma . n with eigenvalue +1 (`positive` true) or
/// -1. Branches on the sign of n_z so the formula never hits its
/// coordinate singularity; `direction` is normalized internally.
pub fn helicity_eigenvector(direction: [f64; 3], positive: bool) -> Result<[C64; 2]> {
    let [nx, ny, nz] = unit3(direction)?;
    let v: [C64; 2] = if positive {
        if nz >= 0.0 {
            let d = (2.0 * (1.0 + nz)).sqrt();
            [re((1.0 + nz) / d), C64::new(nx, ny) / d]
        } else {
            let d = (2.0 * (1.0 - nz)).sqrt();
            [C64::new(nx, -ny) / d, re((1.0 - nz) / d)]
        }
    } else if nz <= 0.0 {
        let d = (2.0 * (1.0 - nz)).sqrt();
        [re((nz - 1.0) / d), C64::new(nx, ny) / d]
    } else {
        let d = (2.0 * (1.0 + nz)).sqrt();
        [C64::new(nx, -ny) / d, re(-(1.0 + nz) / d)]
    };
    Ok(v)
}

/// Free massless plane wave of one two-component kind.
///
/// The first kind obeys H = + sigma . p, the second H = - sigma . p; for a
/// given momentum each admits a positive- and a negative-energy branch
/// with E = (+-) |p|.
#[derive(Clone, Copy, Debug)]
pub struct PlaneWave3D {
    kind: Chirality,
    momentum: [f64; 3],
    energy_sign: EnergySign,
}

impl PlaneWave3D {
    pub fn new(kind: Chirality, momentum: [f64; 3], energy_sign: EnergySign) -> Result<Self> {
        unit3(momentum)?;
        Ok(PlaneWave3D { kind, momentum, energy_sign })
    }

    pub fn kind(&self) -> Chirality {
        self.kind
    }

    pub fn momentum(&self) -> [f64; 3] {
        self.momentum
    }

    pub fn energy_sign(&self) -> EnergySign {
        self.energy_sign
    }

    pub fn energy(&self) -> f64 {
        let p = self.momentum;
        self.energy_sign.value() * (p[0] * p[0] + p[1] * p[1] + p[2] * p[2]).sqrt()
    }

    /// Helicity carried by the amplitude: +sgn(E) for the first kind,
    /// -sgn(E) for the second.
    pub fn helicity(&self) -> f64 {
        self.kind.sign() * self.energy_sign.value()
    }

    /// The spinor amplitude: the helicity eigenvector its dispersion
    /// branch demands.
    pub fn amplitude(&self) -> [C64; 2] {
        helicity_eigenvector(self.momentum, self.helicity() > 0.0)
            .expect("constructor guarantees a valid direction")
    }
}

/// Helicity measured from the amplitude as the expectation of
/// sigma . p_hat, verified to be an eigenvalue relation.
pub fn helicity_eigenvalue(wave: &PlaneWave3D) -> Result<f64> {
    let n = unit3(wave.momentum())?;
    let amp = wave.amplitude();
    let sn = sigma_dot(n).mul_vec(amp);
    let lambda = (amp[0].conj() * sn[0] + amp[1].conj() * sn[1]).re;
    let res = ((sn[0] - amp[0] * lambda).norm_sqr() + (sn[1] - amp[1] * lambda).norm_sqr()).sqrt();
    if res > 1e-12 {
        return Err(Error::Numeric(format!(
            "amplitude is not a helicity eigenvector (residual {res:.2e})"
        )));
    }
    Ok(lambda)
}

/// Group velocity of the wave in units of the light speed: sgn(E) p_hat,
/// always of unit length whatever the energy sign.
pub fn classical_velocity_3d(wave: &PlaneWave3D) -> [f64; 3] {
    let n = unit3(wave.momentum()).expect("constructor guarantees a valid direction");
    let s = wave.energy_sign().value();
    [s * n[0], s * n[1], s * n[2]]
}

/// Spin expectation along the direction of motion. For the first kind
/// this is +1 for both energy signs, for the second -1: the screw sense is
/// a property of the kind, not of the branch.
pub fn spin_along_motion(wave: &PlaneWave3D) -> f64 {
    let v = classical_velocity_3d(wave);
    let amp = wave.amplitude();
    let sv = sigma_dot(v).mul_vec(amp);
    (amp[0].conj() * sv[0] + amp[1].conj() * sv[1]).re
}

/// Free one-component plane wave on the line. The kind fixes the
/// dispersion E = (+-) p, so the energy sign is determined by the
/// momentum.
#[derive(Clone, Copy, Debug)]
pub struct PlaneWave1D {
    kind: Chirality,
    momentum: f64,
}

impl PlaneWave1D {
    pub fn new(kind: Chirality, momentum: f64) -> Result<Self> {
        if !(momentum.is_finite() && momentum != 0.0) {
            return Err(Error::Argument(format!(
                "momentum must be finite and nonzero, got {momentum}"
            )));
        }
        Ok(PlaneWave1D { kind, momentum })
    }

    pub fn kind(&self) -> Chirality {
        self.kind
    }

    pub fn momentum(&self) -> f64 {
        self.momentum
    }

    pub fn energy(&self) -> f64 {
        self.kind.sign() * self.momentum
    }

    pub fn energy_sign(&self) -> EnergySign {
        if self.energy() > 0.0 {
            EnergySign::Positive
        } else {
            EnergySign::Negative
        }
    }
}

/// Velocity of the one-component wave in units of the light speed:
/// +1 for the first kind, -1 for the second, for every momentum.
pub fn classical_velocity_1d(wave: &PlaneWave1D) -> f64 {
    wave.energy() / wave.momentum()
}

/// Whether conjugation flips the sign of i sigma_axis, computed entry by
/// entry. True for the x and z axes, false for y: only those one-space-
/// dimension forms built on real-sigma axes admit real solutions.
pub fn axis_conjugation_flips(axis: Axis) -> bool {
    let m = pauli(axis).scale(im(1.0));
    m.conj().max_abs_diff(&(-m)) < 1e-15
}
