//! Time evolution of wave packets in the box.
//!
//! Evolution is spectral: an initial state is expanded over the
//! eigenfunctions of the chosen member and each coefficient rotates with
//! its own phase. Norm conservation, wall currents, and a discrete local
//! continuity check come out as diagnostics. A one-component variant uses
//! the closed-form phase-condition modes, where a right-moving packet
//! transports rigidly at the light speed.

use num_complex::Complex64 as C64;

use crate::algebra::{pauli, Chirality};
use crate::boundary::PhaseBC;
use crate::error::{Error, Result};
use crate::spectral::{
    eigenfunctions, find_spectrum, spectrum_1d_weyl, Mode1D, SampledSpinor, SpectralProblem,
};

/// Smallest fraction of the initial norm the retained modes must carry;
/// below this, evolution is refused unless forced.
pub const CAPTURE_MIN: f64 = 0.99;

/// Point diagnostics of an evolved state.
#[derive(Clone, Copy, Debug)]
pub struct Diagnostics {
    pub time: f64,
    pub norm: f64,
    pub current_at_0: f64,
    pub current_at_len: f64,
    /// Largest interior defect of d(rho)/dt + d(j)/dx by central
    /// differences; only filled when requested.
    pub continuity_residual: Option<f64>,
}

/// One-component wave sampled on a uniform grid over the box.
#[derive(Clone, Debug)]
pub struct SampledWave {
    pub grid: Vec<f64>,
    pub values: Vec<C64>,
}

impl SampledWave {
    pub fn norm_sq(&self) -> f64 {
        let mut acc = 0.0;
        for i in 1..self.grid.len() {
            acc += 0.5
                * (self.grid[i] - self.grid[i - 1])
                * (self.values[i].norm_sqr() + self.values[i - 1].norm_sqr());
        }
        acc
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }
}

fn uniform_grid(length: f64, n: usize) -> Result<Vec<f64>> {
    if !(length.is_finite() && length > 0.0) {
        return Err(Error::Argument(format!("length must be positive, got {length}")));
    }
    if n < 16 {
        return Err(Error::Argument(format!("need at least 16 grid points, got {n}")));
    }
    Ok((0..n).map(|i| length * i as f64 / (n - 1) as f64).collect())
}

/// Spacing of a uniform wall-to-wall grid; rejects anything else.
fn grid_spacing(grid: &[f64], length: f64) -> Result<f64> {
    if grid.len() < 16 {
        return Err(Error::Argument(format!("need at least 16 grid points, got {}", grid.len())));
    }
    let h = length / (grid.len() - 1) as f64;
    for (i, x) in grid.iter().enumerate() {
        if (x - i as f64 * h).abs() > 1e-9 * length {
            return Err(Error::Argument(
                "state must be sampled on the uniform wall-to-wall grid".into(),
            ));
        }
    }
    Ok(h)
}

/// Distance from `x` to `center` wrapped into [-length/2, length/2).
fn wrapped_offset(x: f64, center: f64, length: f64) -> f64 {
    let mut d = x - center;
    d -= length * (d / length).round();
    d
}

fn gaussian_profile(length: f64, center: f64, width: f64, grid: &[f64]) -> Result<Vec<f64>> {
    if !(width.is_finite() && width > 0.0 && width < 0.5 * length) {
        return Err(Error::Argument(format!(
            "width must lie in (0, length/2), got {width}"
        )));
    }
    if !center.is_finite() {
        return Err(Error::Argument("center must be finite".into()));
    }
    Ok(grid
        .iter()
        .map(|x| {
            let d = wrapped_offset(*x, center, length);
            (-d * d / (4.0 * width * width)).exp()
        })
        .collect())
}

/// Normalized periodic Gaussian packet (one component).
pub fn gaussian_wave(length: f64, center: f64, width: f64, n: usize) -> Result<SampledWave> {
    let grid = uniform_grid(length, n)?;
    let profile = gaussian_profile(length, center, width, &grid)?;
    let mut wave = SampledWave {
        grid,
        values: profile.iter().map(|g| C64::new(*g, 0.0)).collect(),
    };
    let norm = wave.norm();
    for v in wave.values.iter_mut() {
        *v /= norm;
    }
    Ok(wave)
}

/// Normalized Gaussian packet with equal chiral components (1, 1)/sqrt(2),
/// so both counter-moving branches carry half the weight.
pub fn gaussian_spinor(length: f64, center: f64, width: f64, n: usize) -> Result<SampledSpinor> {
    let grid = uniform_grid(length, n)?;
    let profile = gaussian_profile(length, center, width, &grid)?;
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let mut spinor = SampledSpinor {
        grid,
        values: profile
            .iter()
            .map(|g| [C64::new(g * s, 0.0), C64::new(g * s, 0.0)])
            .collect(),
    };
    let norm = spinor.norm();
    for v in spinor.values.iter_mut() {
        v[0] /= norm;
        v[1] /= norm;
    }
    Ok(spinor)
}

fn check_normalized(norm: f64) -> Result<()> {
    if (norm - 1.0).abs() > 1e-8 {
        return Err(Error::Argument(format!(
            "initial state must be unit-normalized, got norm {norm}"
        )));
    }
    Ok(())
}

fn check_captured(captured: f64, force: bool) -> Result<()> {
    if captured < CAPTURE_MIN && !force {
        return Err(Error::Consistency(format!(
            "retained modes carry only {captured:.6} of the initial norm; \
             widen the wave-number window or force evolution"
        )));
    }
    Ok(())
}

/// One eigenstate of the member, sampled on the evolution grid.
#[derive(Clone, Debug)]
pub struct BasisState {
    pub k: f64,
    pub energy: f64,
    pub spinor: SampledSpinor,
}

/// Spectral evolution of a two-component state under one family member.
#[derive(Clone, Debug)]
pub struct EvolutionRun {
    problem: SpectralProblem,
    states: Vec<BasisState>,
    coeff: Vec<C64>,
    grid: Vec<f64>,
    h: f64,
    captured: f64,
    index: Vec<usize>,
}

impl EvolutionRun {
    /// Expand `psi0` (unit norm, on the uniform wall-to-wall grid) over
    /// the eigenstates with wave number in [k_min, k_max].
    pub fn new(
        problem: SpectralProblem,
        k_min: f64,
        k_max: f64,
        psi0: &SampledSpinor,
        force: bool,
    ) -> Result<Self> {
        let h = grid_spacing(&psi0.grid, problem.length())?;
        check_normalized(psi0.norm())?;
        let pairs = find_spectrum(&problem, k_min, k_max)?;
        let mut states = Vec::new();
        for pair in &pairs {
            for spinor in eigenfunctions(&problem, &pair, psi0.grid.len())? {
                states.push(BasisState { k: pair.k, energy: pair.energy, spinor });
            }
        }
        let mut coeff = Vec::with_capacity(states.len());
        for s in &states {
            coeff.push(s.spinor.inner(psi0)?);
        }
        let captured: f64 = coeff.iter().map(|c| c.norm_sqr()).sum();
        check_captured(captured, force)?;
        let index: Vec<usize> = (0..psi0.grid.len()).collect();
        Ok(EvolutionRun {
            problem,
            states,
            coeff,
            grid: psi0.grid.clone(),
            h,
            captured,
            index,
        })
    }

    pub fn problem(&self) -> &SpectralProblem {
        &self.problem
    }

    pub fn states(&self) -> &[BasisState] {
        &self.states
    }

    pub fn captured_fraction(&self) -> f64 {
        self.captured
    }

    /// The state at time t (within the retained modes).
    pub fn evolve_at(&self, t: f64) -> SampledSpinor {
        let weights: Vec<C64> = self
            .coeff
            .iter()
            .zip(self.states.iter())
            .map(|(c, s)| c * C64::new(0.0, -s.energy * t).exp())
            .collect();
        let values = crate::map_slice(&self.index, |i| {
            let mut acc = [C64::ZERO; 2];
            for (w, s) in weights.iter().zip(self.states.iter()) {
                let v = &s.spinor.values[*i];
                acc[0] += w * v[0];
                acc[1] += w * v[1];
            }
            acc
        });
        SampledSpinor { grid: self.grid.clone(), values }
    }

    /// Largest interior defect of the continuity relation at time t, by
    /// central differences with time step h/2.
    pub fn continuity_residual(&self, t: f64) -> f64 {
        let dt = 0.5 * self.h;
        let now = self.evolve_at(t);
        let fwd = self.evolve_at(t + dt);
        let bwd = self.evolve_at(t - dt);
        let s = pauli(self.problem.axis());
        let rho = |w: &SampledSpinor, i: usize| w.values[i][0].norm_sqr() + w.values[i][1].norm_sqr();
        let j = |i: usize| {
            let v = &now.values[i];
            let sv = s.mul_vec(*v);
            (v[0].conj() * sv[0] + v[1].conj() * sv[1]).re
        };
        let mut worst: f64 = 0.0;
        for i in 1..self.grid.len() - 1 {
            let drho = (rho(&fwd, i) - rho(&bwd, i)) / (2.0 * dt);
            let dj = (j(i + 1) - j(i - 1)) / (2.0 * self.h);
            worst = worst.max((drho + dj).abs());
        }
        worst
    }

    pub fn diagnostics(&self, t: f64, with_continuity: bool) -> Diagnostics {
        let state = self.evolve_at(t);
        let (j0, jl) = state.wall_currents(self.problem.axis());
        Diagnostics {
            time: t,
            norm: state.norm(),
            current_at_0: j0,
            current_at_len: jl,
            continuity_residual: with_continuity.then(|| self.continuity_residual(t)),
        }
    }
}

/// Spectral evolution of the one-component particle under a phase member.
///
/// Modes are exp(i k_n x)/sqrt(length) with k_n = (eta + 2 pi n)/length;
/// for the first kind the packet is a rigid right-mover at the light
/// speed, for the second a rigid left-mover.
#[derive(Clone, Debug)]
pub struct WeylEvolution {
    bc: PhaseBC,
    length: f64,
    chirality: Chirality,
    modes: Vec<Mode1D>,
    coeff: Vec<C64>,
    grid: Vec<f64>,
    h: f64,
    captured: f64,
    index: Vec<usize>,
}

impl WeylEvolution {
    /// Expand `psi0` over `n_modes` phase-condition modes centered on
    /// k = 0.
    pub fn new(
        bc: PhaseBC,
        length: f64,
        chirality: Chirality,
        n_modes: usize,
        psi0: &SampledWave,
        force: bool,
    ) -> Result<Self> {
        if !(2..=4096).contains(&n_modes) {
            return Err(Error::Argument(format!(
                "mode count must lie in [2, 4096], got {n_modes}"
            )));
        }
        let h = grid_spacing(&psi0.grid, length)?;
        check_normalized(psi0.norm())?;
        let half = (n_modes / 2) as i64;
        let tau = std::f64::consts::TAU;
        let k_lo = (bc.eta() + tau * (-half) as f64) / length;
        let k_hi = (bc.eta() + tau * (n_modes as i64 - half - 1) as f64) / length;
        let modes = spectrum_1d_weyl(&bc, length, chirality, k_lo - 1e-9, k_hi + 1e-9)?;
        debug_assert_eq!(modes.len(), n_modes);
        let scale = 1.0 / length.sqrt();
        let mut coeff = Vec::with_capacity(modes.len());
        for m in &modes {
            // Trapezoid of conj(mode) * psi0; exact for these integrands
            // because mode differences complete full periods on the grid.
            let mut acc = C64::ZERO;
            for i in 0..psi0.grid.len() {
                let w = if i == 0 || i == psi0.grid.len() - 1 { 0.5 } else { 1.0 };
                let mode = C64::new(0.0, -m.k * psi0.grid[i]).exp() * scale;
                acc += mode * psi0.values[i] * w;
            }
            coeff.push(acc * h);
        }
        let captured: f64 = coeff.iter().map(|c| c.norm_sqr()).sum();
        check_captured(captured, force)?;
        let index: Vec<usize> = (0..psi0.grid.len()).collect();
        Ok(WeylEvolution {
            bc,
            length,
            chirality,
            modes,
            coeff,
            grid: psi0.grid.clone(),
            h,
            captured,
            index,
        })
    }

    pub fn bc(&self) -> &PhaseBC {
        &self.bc
    }

    pub fn modes(&self) -> &[Mode1D] {
        &self.modes
    }

    pub fn captured_fraction(&self) -> f64 {
        self.captured
    }

    /// Packet velocity in units of the light speed.
    pub fn velocity(&self) -> f64 {
        self.chirality.sign()
    }

    pub fn evolve_at(&self, t: f64) -> SampledWave {
        let scale = 1.0 / self.length.sqrt();
        let weights: Vec<C64> = self
            .coeff
            .iter()
            .zip(self.modes.iter())
            .map(|(c, m)| c * C64::new(0.0, -m.energy * t).exp() * scale)
            .collect();
        let values = crate::map_slice(&self.index, |i| {
            let x = self.grid[*i];
            let mut acc = C64::ZERO;
            for (w, m) in weights.iter().zip(self.modes.iter()) {
                acc += w * C64::new(0.0, m.k * x).exp();
            }
            acc
        });
        SampledWave { grid: self.grid.clone(), values }
    }

    pub fn continuity_residual(&self, t: f64) -> f64 {
        let dt = 0.5 * self.h;
        let now = self.evolve_at(t);
        let fwd = self.evolve_at(t + dt);
        let bwd = self.evolve_at(t - dt);
        let v = self.velocity();
        let mut worst: f64 = 0.0;
        for i in 1..self.grid.len() - 1 {
            let drho = (fwd.values[i].norm_sqr() - bwd.values[i].norm_sqr()) / (2.0 * dt);
            let dj = v * (now.values[i + 1].norm_sqr() - now.values[i - 1].norm_sqr())
                / (2.0 * self.h);
            worst = worst.max((drho + dj).abs());
        }
        worst
    }

    pub fn diagnostics(&self, t: f64, with_continuity: bool) -> Diagnostics {
        let state = self.evolve_at(t);
        let v = self.velocity();
        Diagnostics {
            time: t,
            norm: state.norm(),
            current_at_0: v * state.values.first().unwrap().norm_sqr(),
            current_at_len: v * state.values.last().unwrap().norm_sqr(),
            continuity_residual: with_continuity.then(|| self.continuity_residual(t)),
        }
    }
}
