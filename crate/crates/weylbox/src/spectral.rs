//! Discrete spectra of the interval operator under a family member.
//!
//! For wave number k the general solution of h psi = k psi with
//! h = -i sigma_axis d/dx is psi = A u+ exp(ikx) + B u- exp(-ikx), where
//! sigma_axis u(+-) = (+-) u(+-). Collecting the wall values of that ansatz
//! into the 4x2 map W(k), a member with constraint B = L - U R admits an
//! eigenfunction at k exactly when M(k) = B W(k) is singular. Quantization
//! is therefore root-finding on the smallest singular value of a 2x2
//! matrix, which this module does by a fixed-pitch scan plus golden-section
//! refinement, with an independent ODE-shooting check alongside.

use num_complex::Complex64 as C64;

use crate::algebra::{pauli, Axis, Chirality, Mat2};
use crate::boundary::{BoundarySpec, BoundaryVector, PhaseBC};
use crate::error::{Error, Result};

/// Scan pitch is pi / (SCAN_DENSITY * length): well under half the minimal
/// eigenvalue spacing of any unitary member, so every root gets a bracket.
pub const SCAN_DENSITY: f64 = 32.0;
/// A refined minimum counts as an eigenvalue when sigma_min is below this.
pub const ROOT_ACCEPT_TOL: f64 = 1e-10;
/// Both singular values below this means a two-dimensional root space.
pub const DEGENERACY_TOL: f64 = 1e-8;
/// Golden-section refinement stops at this bracket width.
pub const REFINE_WIDTH: f64 = 1e-12;
/// Roots closer than this are the same eigenvalue reported twice.
pub const DUPLICATE_K_TOL: f64 = 1e-9;
/// Fixed step count of the shooting integrator.
pub const SHOOTING_STEPS: usize = 2000;

/// Orthonormal eigenvectors of sigma_axis, returned as (u+, u-).
pub fn chiral_basis(axis: Axis) -> ([C64; 2], [C64; 2]) {
    let s = std::f64::consts::FRAC_1_SQRT_2;
    let r = |x: f64| C64::new(x, 0.0);
    let i = |x: f64| C64::new(0.0, x);
    match axis {
        Axis::Z => ([r(1.0), r(0.0)], [r(0.0), r(1.0)]),
        Axis::X => ([r(s), r(s)], [r(s), r(-s)]),
        Axis::Y => ([r(s), i(s)], [r(s), i(-s)]),
    }
}

/// The interval eigenproblem: operator -i sigma_axis d/dx on [0, length]
/// restricted by a family member, with the chirality fixing the sign
/// relating wave number and energy.
#[derive(Clone, Debug)]
pub struct SpectralProblem {
    bc: BoundarySpec,
    length: f64,
    chirality: Chirality,
}

impl SpectralProblem {
    pub fn new(bc: BoundarySpec, length: f64, chirality: Chirality) -> Result<Self> {
        if !(length.is_finite() && length > 0.0) {
            return Err(Error::Argument(format!("length must be positive, got {length}")));
        }
        Ok(SpectralProblem { bc, length, chirality })
    }

    pub fn bc(&self) -> &BoundarySpec {
        &self.bc
    }

    pub fn axis(&self) -> Axis {
        self.bc.axis()
    }

    pub fn length(&self) -> f64 {
        self.length
    }

    pub fn chirality(&self) -> Chirality {
        self.chirality
    }

    pub fn energy_of(&self, k: f64) -> f64 {
        self.chirality.sign() * k
    }
}

/// Wall-value matrix of the two plane-wave branches at wave number k,
/// columns ordered (coefficient of u+ e^{ikx}, coefficient of u- e^{-ikx}).
fn wave_columns(axis: Axis, k: f64, length: f64) -> [[C64; 2]; 4] {
    let (up, um) = chiral_basis(axis);
    let pl = C64::new(0.0, k * length).exp();
    let ml = C64::new(0.0, -k * length).exp();
    [
        [up[0] * pl, um[0] * ml],
        [up[1] * pl, um[1] * ml],
        [up[0], um[0]],
        [up[1], um[1]],
    ]
}

/// M(k) = (L - U R) W(k); the member admits an eigenfunction at k exactly
/// when this 2x2 matrix is singular.
pub fn boundary_matrix(prob: &SpectralProblem, k: f64) -> Mat2 {
    let w = wave_columns(prob.axis(), k, prob.length);
    let rows = prob.bc.constraint_rows();
    let mut m = Mat2::zero();
    for i in 0..2 {
        for j in 0..2 {
            m.e[i][j] = (0..4).map(|l| rows[i][l] * w[l][j]).sum();
        }
    }
    m
}

/// Smallest singular value of the boundary matrix at k.
pub fn sigma_min(prob: &SpectralProblem, k: f64) -> f64 {
    boundary_matrix(prob, k).singular_values()[1]
}

/// sigma_min sampled over a slice of wave numbers; runs data-parallel when
/// the `parallel` feature is enabled.
pub fn sigma_min_profile(prob: &SpectralProblem, ks: &[f64]) -> Vec<f64> {
    crate::map_slice(ks, |k| sigma_min(prob, *k))
}

/// Sequential twin of [`sigma_min_profile`], always compiled, for
/// benchmarking the parallel dispatch against a fixed baseline.
pub fn sigma_min_profile_seq(prob: &SpectralProblem, ks: &[f64]) -> Vec<f64> {
    ks.iter().map(|k| sigma_min(prob, *k)).collect()
}

/// One eigenvalue of the interval problem with its root-space data.
///
/// `branches` holds the (A, B) plane-wave coefficients of an orthonormal
/// basis of the root space; its length equals `degeneracy`.
#[derive(Clone, Debug)]
pub struct EigenPair {
    pub k: f64,
    pub energy: f64,
    pub degeneracy: usize,
    pub branches: Vec<[C64; 2]>,
}

fn golden_min(f: &impl Fn(f64) -> f64, mut a: f64, mut b: f64) -> (f64, f64) {
    const INVPHI: f64 = 0.618_033_988_749_894_9;
    let mut c = b - INVPHI * (b - a);
    let mut d = a + INVPHI * (b - a);
    let mut fc = f(c);
    let mut fd = f(d);
    for _ in 0..200 {
        if (b - a) <= REFINE_WIDTH {
            break;
        }
        if fc <= fd {
            b = d;
            d = c;
            fd = fc;
            c = b - INVPHI * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + INVPHI * (b - a);
            fd = f(d);
        }
    }
    let x = 0.5 * (a + b);
    (x, f(x))
}

/// All eigenvalues with wave number in [k_min, k_max], sorted ascending.
///
/// The profile is scanned one pitch beyond each end of the window so that
/// roots sitting exactly on the edges still produce interior brackets;
/// results are filtered back to the window afterwards.
pub fn find_spectrum(prob: &SpectralProblem, k_min: f64, k_max: f64) -> Result<Vec<EigenPair>> {
    if !(k_min.is_finite() && k_max.is_finite() && k_min < k_max) {
        return Err(Error::Argument(format!(
            "wave-number window must be finite with k_min < k_max, got [{k_min}, {k_max}]"
        )));
    }
    let step = std::f64::consts::PI / (SCAN_DENSITY * prob.length);
    let n_points = ((k_max - k_min) / step).ceil() as usize + 3;
    if n_points > 4_000_000 {
        return Err(Error::Argument(format!(
            "window [{k_min}, {k_max}] needs {n_points} scan points; narrow it or shorten the box"
        )));
    }
    let start = k_min - step;
    let ks: Vec<f64> = (0..n_points).map(|i| start + i as f64 * step).collect();
    let profile = sigma_min_profile(prob, &ks);

    let near_zero = profile.iter().filter(|s| **s < ROOT_ACCEPT_TOL).count();
    if (near_zero as f64) > 0.5 * (n_points as f64) {
        return Err(Error::Numeric(
            "boundary matrix is singular on most of the scan; wall data is numerically degenerate"
                .into(),
        ));
    }

    let f = |k: f64| sigma_min(prob, k);
    let mut roots: Vec<(f64, f64)> = Vec::new();
    for i in 1..n_points - 1 {
        if profile[i] <= profile[i - 1] && profile[i] <= profile[i + 1] {
            let (k_star, s_star) = golden_min(&f, ks[i - 1], ks[i + 1]);
            if s_star <= ROOT_ACCEPT_TOL {
                roots.push((k_star, s_star));
            }
        }
    }

    roots.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, f64)> = Vec::new();
    for (k, s) in roots {
        match merged.last_mut() {
            Some((k0, s0)) if (k - *k0).abs() <= DUPLICATE_K_TOL => {
                if s < *s0 {
                    *k0 = k;
                    *s0 = s;
                }
            }
            _ => merged.push((k, s)),
        }
    }

    let mut pairs = Vec::with_capacity(merged.len());
    for (k, _) in merged {
        if k < k_min - DUPLICATE_K_TOL || k > k_max + DUPLICATE_K_TOL {
            continue;
        }
        let m = boundary_matrix(prob, k);
        let sv = m.singular_values();
        let degeneracy = if sv[0] <= DEGENERACY_TOL { 2 } else { 1 };
        let vecs = m.right_singular_vectors();
        let branches = if degeneracy == 2 {
            vec![vecs[0], vecs[1]]
        } else {
            vec![vecs[1]]
        };
        pairs.push(EigenPair { k, energy: prob.energy_of(k), degeneracy, branches });
    }
    Ok(pairs)
}

/// Eigenfunction of one problem sampled on a uniform grid.
#[derive(Clone, Debug)]
pub struct SampledSpinor {
    pub grid: Vec<f64>,
    pub values: Vec<[C64; 2]>,
}

impl SampledSpinor {
    /// Trapezoid integral of the density. Eigenfunction densities are
    /// constant in x (the two plane-wave branches are pointwise
    /// orthogonal), so this is exact for them at any grid size.
    pub fn norm_sq(&self) -> f64 {
        trapezoid(&self.grid, |i| {
            self.values[i][0].norm_sqr() + self.values[i][1].norm_sqr()
        })
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Trapezoid approximation of the L2 inner product <self, other>.
    pub fn inner(&self, other: &SampledSpinor) -> Result<C64> {
        if self.grid.len() != other.grid.len()
            || self
                .grid
                .iter()
                .zip(other.grid.iter())
                .any(|(a, b)| (a - b).abs() > 1e-12)
        {
            return Err(Error::Argument("inner product requires identical grids".into()));
        }
        let re = trapezoid(&self.grid, |i| {
            let (a, b) = (&self.values[i], &other.values[i]);
            (a[0].conj() * b[0] + a[1].conj() * b[1]).re
        });
        let im = trapezoid(&self.grid, |i| {
            let (a, b) = (&self.values[i], &other.values[i]);
            (a[0].conj() * b[0] + a[1].conj() * b[1]).im
        });
        Ok(C64::new(re, im))
    }

    /// Probability current psi† sigma_axis psi at (x = 0, x = length).
    pub fn wall_currents(&self, axis: Axis) -> (f64, f64) {
        let s = pauli(axis);
        let j = |v: &[C64; 2]| -> f64 {
            let sv = s.mul_vec(*v);
            (v[0].conj() * sv[0] + v[1].conj() * sv[1]).re
        };
        (j(self.values.first().unwrap()), j(self.values.last().unwrap()))
    }

    /// Wall values collected in family order (top(l), bottom(l), top(0),
    /// bottom(0)).
    pub fn boundary_vector(&self) -> BoundaryVector {
        let first = self.values.first().unwrap();
        let last = self.values.last().unwrap();
        [last[0], last[1], first[0], first[1]]
    }
}

fn trapezoid(grid: &[f64], f: impl Fn(usize) -> f64) -> f64 {
    let mut acc = 0.0;
    for i in 1..grid.len() {
        acc += 0.5 * (grid[i] - grid[i - 1]) * (f(i) + f(i - 1));
    }
    acc
}

/// Unit-norm eigenfunctions for one eigenvalue, one per root-space branch,
/// sampled on `n_samples` uniform points including both walls.
///
/// The pair must belong to `prob`: its wave number is re-checked against
/// the boundary matrix before sampling.
pub fn eigenfunctions(
    prob: &SpectralProblem,
    pair: &EigenPair,
    n_samples: usize,
) -> Result<Vec<SampledSpinor>> {
    if n_samples < 16 {
        return Err(Error::Argument(format!(
            "need at least 16 sample points, got {n_samples}"
        )));
    }
    if pair.branches.is_empty() || pair.branches.len() != pair.degeneracy {
        return Err(Error::Consistency(
            "eigenvalue record carries no consistent root-space basis".into(),
        ));
    }
    if sigma_min(prob, pair.k) > DEGENERACY_TOL {
        return Err(Error::Consistency(format!(
            "wave number {} is not an eigenvalue of this problem",
            pair.k
        )));
    }
    let (up, um) = chiral_basis(prob.axis());
    let grid: Vec<f64> = (0..n_samples)
        .map(|i| prob.length * i as f64 / (n_samples - 1) as f64)
        .collect();
    let mut out = Vec::with_capacity(pair.branches.len());
    for [a, b] in &pair.branches {
        let scale = 1.0 / ((a.norm_sqr() + b.norm_sqr()) * prob.length).sqrt();
        let values: Vec<[C64; 2]> = grid
            .iter()
            .map(|x| {
                let ep = C64::new(0.0, pair.k * x).exp();
                let em = C64::new(0.0, -pair.k * x).exp();
                [
                    (a * up[0] * ep + b * um[0] * em) * scale,
                    (a * up[1] * ep + b * um[1] * em) * scale,
                ]
            })
            .collect();
        out.push(SampledSpinor { grid: grid.clone(), values });
    }
    Ok(out)
}

/// Shooting-method counterpart of [`boundary_matrix`]: the fundamental
/// matrix of psi' = i k sigma_axis psi is built by fixed-step RK4 and the
/// wall constraint applied to it. Initial values run over the chiral basis
/// so the singular values are directly comparable with the plane-wave
/// construction (equal up to integrator error).
pub fn shooting_matrix(prob: &SpectralProblem, k: f64) -> Result<Mat2> {
    let h = prob.length / SHOOTING_STEPS as f64;
    if !(h.is_finite() && h > 0.0) {
        return Err(Error::Numeric(format!("shooting step underflowed for length {}", prob.length)));
    }
    let a = pauli(prob.axis()).scale(C64::new(0.0, k));
    let mut phi = Mat2::identity();
    for _ in 0..SHOOTING_STEPS {
        let k1 = a * phi;
        let k2 = a * (phi + k1.scale(C64::new(0.5 * h, 0.0)));
        let k3 = a * (phi + k2.scale(C64::new(0.5 * h, 0.0)));
        let k4 = a * (phi + k3.scale(C64::new(h, 0.0)));
        phi = phi + (k1 + k2.scale(C64::new(2.0, 0.0)) + k3.scale(C64::new(2.0, 0.0)) + k4)
            .scale(C64::new(h / 6.0, 0.0));
    }
    if !phi.is_finite() {
        return Err(Error::Numeric("shooting integration diverged".into()));
    }
    let rows = prob.bc.constraint_rows();
    let (up, um) = chiral_basis(prob.axis());
    let mut m = Mat2::zero();
    for (j, w) in [up, um].iter().enumerate() {
        let end = phi.mul_vec(*w);
        let v: BoundaryVector = [end[0], end[1], w[0], w[1]];
        for i in 0..2 {
            m.e[i][j] = rows[i].iter().zip(v.iter()).map(|(r, x)| r * x).sum();
        }
    }
    Ok(m)
}

/// Smallest singular value of the shooting-method boundary matrix.
pub fn shooting_sigma_min(prob: &SpectralProblem, k: f64) -> Result<f64> {
    Ok(shooting_matrix(prob, k)?.singular_values()[1])
}

/// One mode of the one-component particle on the interval.
#[derive(Clone, Copy, Debug)]
pub struct Mode1D {
    pub n: i64,
    pub k: f64,
    pub energy: f64,
}

/// Closed-form spectrum of the one-component particle with phase boundary
/// condition: k_n = (eta + 2 pi n) / length for integer n, restricted to
/// [k_min, k_max], sorted ascending. All modes are simple.
pub fn spectrum_1d_weyl(
    bc: &PhaseBC,
    length: f64,
    chirality: Chirality,
    k_min: f64,
    k_max: f64,
) -> Result<Vec<Mode1D>> {
    if !(length.is_finite() && length > 0.0) {
        return Err(Error::Argument(format!("length must be positive, got {length}")));
    }
    if !(k_min.is_finite() && k_max.is_finite() && k_min < k_max) {
        return Err(Error::Argument(format!(
            "wave-number window must be finite with k_min < k_max, got [{k_min}, {k_max}]"
        )));
    }
    let tau = std::f64::consts::TAU;
    let n_lo = ((k_min * length - bc.eta()) / tau - 1e-12).ceil() as i64;
    let n_hi = ((k_max * length - bc.eta()) / tau + 1e-12).floor() as i64;
    let mut out = Vec::new();
    for n in n_lo..=n_hi {
        let k = (bc.eta() + tau * n as f64) / length;
        if k >= k_min - 1e-12 && k <= k_max + 1e-12 {
            out.push(Mode1D { n, k, energy: chirality.sign() * k });
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{build_unitary, Representation, UnitaryParams};
    use crate::boundary::{
        bc_dirac_rep, bc_via_transform, bc_weyl_axis, induced_family_unitary, mit_bag_spec,
        bc_1d_weyl,
    };
    use crate::representations::rep_change_matrix;
    use rand::prelude::*;
    use rand_chacha::ChaCha8Rng;
    use std::f64::consts::PI;

    fn problem(spec: BoundarySpec) -> SpectralProblem {
        SpectralProblem::new(spec, 1.0, Chirality::Right).unwrap()
    }

    fn assert_spectrum(found: &[EigenPair], expected: &[(f64, usize)]) {
        assert_eq!(
            found.len(),
            expected.len(),
            "found {:?}",
            found.iter().map(|p| p.k).collect::<Vec<_>>()
        );
        for (pair, (k, deg)) in found.iter().zip(expected) {
            assert!((pair.k - k).abs() < 1e-8, "expected k={k}, got {}", pair.k);
            assert_eq!(pair.degeneracy, *deg, "degeneracy at k={k}");
            assert_eq!(pair.branches.len(), *deg);
        }
    }

    fn random_unitary(rng: &mut impl Rng) -> Mat2 {
        let mut m = [0.0f64; 4];
        loop {
            for v in m.iter_mut() {
                *v = rng.random::<f64>() - 0.5;
            }
            let n: f64 = m.iter().map(|v| v * v).sum::<f64>().sqrt();
            if n > 1e-3 {
                for v in m.iter_mut() {
                    *v /= n;
                }
                break;
            }
        }
        build_unitary(&UnitaryParams::new(rng.random::<f64>() * PI, m).unwrap())
    }

    #[test]
    fn periodic_spectrum_is_two_pi_lattice_doubly_degenerate() {
        let prob = problem(bc_weyl_axis(Axis::Z, &pauli(Axis::X)).unwrap());
        let found = find_spectrum(&prob, -10.0, 10.0).unwrap();
        assert_spectrum(&found, &[(-2.0 * PI, 2), (0.0, 2), (2.0 * PI, 2)]);
        for p in &found {
            assert!((p.energy - p.k).abs() < 1e-12);
        }
    }

    #[test]
    fn antiperiodic_spectrum_is_odd_pi_lattice() {
        let prob = problem(bc_weyl_axis(Axis::Z, &(-pauli(Axis::X))).unwrap());
        let found = find_spectrum(&prob, -10.0, 10.0).unwrap();
        assert_spectrum(&found, &[(-3.0 * PI, 2), (-PI, 2), (PI, 2), (3.0 * PI, 2)]);
    }

    #[test]
    fn bag_spectrum_is_half_odd_lattice_simple() {
        let prob = problem(mit_bag_spec());
        let found = find_spectrum(&prob, -10.0, 10.0).unwrap();
        let expected: Vec<(f64, usize)> = [-5.0, -3.0, -1.0, 1.0, 3.0, 5.0]
            .iter()
            .map(|m| (m * PI / 2.0, 1))
            .collect();
        assert_spectrum(&found, &expected);
    }

    #[test]
    fn dirichlet_upper_spectrum_is_pi_lattice_including_zero() {
        let prob = problem(bc_weyl_axis(Axis::X, &(-Mat2::identity())).unwrap());
        let found = find_spectrum(&prob, -10.0, 10.0).unwrap();
        let expected: Vec<(f64, usize)> =
            (-3..=3).map(|n| (n as f64 * PI, 1)).collect();
        assert_spectrum(&found, &expected);
        // The k = 0 mode is a genuine constant eigenfunction living in the
        // lower component.
        let zero = found.iter().find(|p| p.k.abs() < 1e-9).unwrap();
        let funcs = eigenfunctions(&prob, zero, 64).unwrap();
        for f in &funcs {
            assert!((f.norm() - 1.0).abs() < 1e-10);
            for v in &f.values {
                assert!(v[0].norm() < 1e-9, "top component vanishes");
            }
        }
    }

    #[test]
    fn left_chirality_flips_energies() {
        let bc = mit_bag_spec();
        let prob = SpectralProblem::new(bc, 1.0, Chirality::Left).unwrap();
        let found = find_spectrum(&prob, 0.1, 5.0).unwrap();
        assert!(!found.is_empty());
        for p in &found {
            assert!((p.energy + p.k).abs() < 1e-12);
        }
    }

    #[test]
    fn roots_on_window_edges_are_kept() {
        let prob = problem(bc_weyl_axis(Axis::Z, &pauli(Axis::X)).unwrap());
        let found = find_spectrum(&prob, 0.0, 2.0 * PI).unwrap();
        assert_spectrum(&found, &[(0.0, 2), (2.0 * PI, 2)]);
    }

    #[test]
    fn length_rescales_the_lattice() {
        let spec = bc_weyl_axis(Axis::Z, &pauli(Axis::X)).unwrap();
        let prob = SpectralProblem::new(spec, 2.5, Chirality::Right).unwrap();
        let found = find_spectrum(&prob, 0.1, 6.0).unwrap();
        let expected: Vec<(f64, usize)> =
            (1..=2).map(|n| (n as f64 * 2.0 * PI / 2.5, 2)).collect();
        assert_spectrum(&found, &expected);
    }

    #[test]
    fn eigenfunctions_are_normalized_and_satisfy_the_walls() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..25 {
            let axis = Axis::ALL[rng.random_range(0..3)];
            let spec = bc_weyl_axis(axis, &random_unitary(&mut rng)).unwrap();
            let prob = problem(spec);
            let found = find_spectrum(&prob, -6.0, 6.0).unwrap();
            assert!(!found.is_empty());
            for pair in &found {
                let funcs = eigenfunctions(&prob, pair, 33).unwrap();
                assert_eq!(funcs.len(), pair.degeneracy);
                for f in &funcs {
                    assert!((f.norm() - 1.0).abs() < 1e-10);
                    assert!(prob.bc().residual(&f.boundary_vector()) < 1e-8);
                }
            }
        }
    }

    #[test]
    fn distinct_eigenfunctions_are_orthogonal() {
        let prob = problem(mit_bag_spec());
        let found = find_spectrum(&prob, -5.0, 5.0).unwrap();
        let n = 4097;
        let funcs: Vec<_> = found
            .iter()
            .flat_map(|p| eigenfunctions(&prob, p, n).unwrap())
            .collect();
        for i in 0..funcs.len() {
            for j in 0..i {
                assert!(funcs[i].inner(&funcs[j]).unwrap().norm() < 1e-5);
            }
            assert!((funcs[i].inner(&funcs[i]).unwrap().re - 1.0).abs() < 1e-10);
        }
    }

    #[test]
    fn stale_pair_is_rejected() {
        let periodic = problem(bc_weyl_axis(Axis::Z, &pauli(Axis::X)).unwrap());
        let bag = problem(mit_bag_spec());
        let pair = &find_spectrum(&periodic, 5.0, 7.0).unwrap()[0];
        let err = eigenfunctions(&bag, pair, 64).unwrap_err();
        assert!(matches!(err, Error::Consistency(_)));
        assert!(eigenfunctions(&periodic, pair, 8).is_err(), "grid too coarse");
    }

    #[test]
    fn shooting_oracle_agrees_with_plane_wave_matrix() {
        let mut rng = ChaCha8Rng::seed_from_u64(8);
        for _ in 0..60 {
            let axis = Axis::ALL[rng.random_range(0..3)];
            let spec = bc_weyl_axis(axis, &random_unitary(&mut rng)).unwrap();
            let prob = problem(spec);
            let k = (rng.random::<f64>() - 0.5) * 20.0;
            let direct = sigma_min(&prob, k);
            let shot = shooting_sigma_min(&prob, k).unwrap();
            assert!(
                (direct - shot).abs() < 1e-6,
                "axis {axis:?}, k={k}: {direct} vs {shot}"
            );
        }
    }

    #[test]
    fn shooting_confirms_closed_form_roots() {
        let prob = problem(mit_bag_spec());
        for n in [-2i32, -1, 0, 1, 2] {
            let k = (2 * n + 1) as f64 * PI / 2.0;
            assert!(shooting_sigma_min(&prob, k).unwrap() < 1e-6);
        }
    }

    #[test]
    fn transported_member_has_the_same_spectrum_as_its_induced_form() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for rep in [Representation::Dirac, Representation::Majorana, Representation::JackiwRebbi] {
            let u = random_unitary(&mut rng);
            let change = rep_change_matrix(rep, Representation::Weyl);
            let transported = problem(bc_via_transform(&u, &change).unwrap());
            let induced = induced_family_unitary(rep, &u).unwrap();
            let canonical = problem(bc_dirac_rep(rep, &induced).unwrap());
            let a = find_spectrum(&transported, -8.0, 8.0).unwrap();
            let b = find_spectrum(&canonical, -8.0, 8.0).unwrap();
            assert_eq!(a.len(), b.len(), "{rep:?}");
            for (pa, pb) in a.iter().zip(b.iter()) {
                assert!((pa.k - pb.k).abs() < 1e-8, "{rep:?}");
                assert_eq!(pa.degeneracy, pb.degeneracy);
            }
        }
    }

    #[test]
    fn random_members_have_clean_discrete_spectra() {
        let mut rng = ChaCha8Rng::seed_from_u64(10);
        for _ in 0..30 {
            let axis = Axis::ALL[rng.random_range(0..3)];
            let spec = bc_weyl_axis(axis, &random_unitary(&mut rng)).unwrap();
            let prob = problem(spec);
            let found = find_spectrum(&prob, -9.0, 9.0).unwrap();
            // Unitary members quantize with spacing bounded below; the
            // window always catches something and no root repeats.
            assert!(!found.is_empty());
            for w in found.windows(2) {
                assert!(w[1].k - w[0].k > 1e-6);
            }
            for p in &found {
                assert!(sigma_min(&prob, p.k) <= ROOT_ACCEPT_TOL);
            }
        }
    }

    #[test]
    fn bad_windows_are_rejected() {
        let prob = problem(mit_bag_spec());
        assert!(find_spectrum(&prob, 3.0, 1.0).is_err());
        assert!(find_spectrum(&prob, f64::NEG_INFINITY, 1.0).is_err());
        assert!(find_spectrum(&prob, -1e9, 1e9).is_err());
        assert!(SpectralProblem::new(mit_bag_spec(), -1.0, Chirality::Right).is_err());
    }

    #[test]
    fn one_component_lattice() {
        let bc = bc_1d_weyl(PI / 3.0).unwrap();
        let modes = spectrum_1d_weyl(&bc, 1.0, Chirality::Right, -10.0, 10.0).unwrap();
        for m in &modes {
            let expected = PI / 3.0 + std::f64::consts::TAU * m.n as f64;
            assert!((m.k - expected).abs() < 1e-12);
            assert!((m.energy - m.k).abs() < 1e-15);
        }
        assert_eq!(modes.len(), 3);
        assert!(modes.windows(2).all(|w| w[0].k < w[1].k));
        // Periodic member includes k = 0 and is symmetric.
        let per = spectrum_1d_weyl(&bc_1d_weyl(0.0).unwrap(), 1.0, Chirality::Left, -7.0, 7.0)
            .unwrap();
        assert_eq!(per.len(), 3);
        assert!((per[1].k).abs() < 1e-15);
        assert!((per[0].energy - std::f64::consts::TAU).abs() < 1e-12);
    }

    #[test]
    fn profile_twins_agree() {
        let prob = problem(mit_bag_spec());
        let ks: Vec<f64> = (0..200).map(|i| -5.0 + 0.05 * i as f64).collect();
        let a = sigma_min_profile(&prob, &ks);
        let b = sigma_min_profile_seq(&prob, &ks);
        assert_eq!(a, b);
    }
}
