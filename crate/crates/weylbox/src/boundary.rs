//! Boundary conditions that make the interval Hamiltonian self-adjoint.
//!
//! A boundary condition couples the wall values of the spinor through a
//! 2x2 unitary. With the boundary 4-vector ordered
//! v = (top(l), bottom(l), top(0), bottom(0)), every family member is the
//! linear relation L v = U R v, where the fixed 2x4 encodings L, R pick the
//! axis-dependent outgoing/incoming combinations and U ranges over U(2).
//! The admissible states form the two-dimensional null space of L - U R,
//! which is exactly the condition that the probability current through the
//! walls cancels for every pair of admissible states.
//!
//! Matrices are always derived from (mu, m0..m3) parameters or an explicit
//! unitary; the 2x4 encodings are never entered by hand from outside.

use num_complex::Complex64 as C64;

use crate::algebra::{
    is_real_orthogonal, is_unitary, pauli, Axis, Mat2, Mat4, Representation, DEFAULT_TOL,
};
use crate::error::{Error, Result};
use crate::representations::RepChange;

/// Tolerance for subspace comparisons (largest principal-angle sine).
pub const SUBSPACE_TOL: f64 = 1e-10;

/// Wall values ordered (top(l), bottom(l), top(0), bottom(0)).
pub type BoundaryVector = [C64; 4];

type Row = [C64; 4];

fn dot4(a: &BoundaryVector, b: &BoundaryVector) -> C64 {
    a.iter().zip(b.iter()).map(|(x, y)| x.conj() * y).sum()
}

fn norm4(a: &BoundaryVector) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

fn row_apply(row: &Row, v: &BoundaryVector) -> C64 {
    row.iter().zip(v.iter()).map(|(r, x)| r * x).sum()
}

/// Which family a spec belongs to: a Weyl-operator axis label, or the
/// representation whose velocity structure fixes the axis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BcContext {
    WeylAxis(Axis),
    DiracRep(Representation),
}

/// Boundary-condition family axis of a representation; equals the Pauli
/// axis of its velocity structure gamma^0 gamma^1.
pub fn rep_family_axis(rep: Representation) -> Axis {
    match rep {
        Representation::Weyl => Axis::Z,
        Representation::Dirac | Representation::Majorana => Axis::X,
        Representation::JackiwRebbi => Axis::Y,
    }
}

impl BcContext {
    pub fn axis(&self) -> Axis {
        match self {
            BcContext::WeylAxis(ax) => *ax,
            BcContext::DiracRep(rep) => rep_family_axis(*rep),
        }
    }

    pub fn label(&self) -> String {
        match self {
            BcContext::WeylAxis(ax) => format!("axis-{}", ax.index()),
            BcContext::DiracRep(rep) => format!("rep-{}", rep.name()),
        }
    }
}

/// One member of a self-adjoint boundary-condition family.
#[derive(Clone, Debug)]
pub struct BoundarySpec {
    context: BcContext,
    unitary: Mat2,
    lhs: [Row; 2],
    rhs: [Row; 2],
    basis: [BoundaryVector; 2],
}

/// The fixed (L, R) encodings of the three axis families.
///
/// Axis z: out = (top(l), bottom(0)),          in = (bottom(l), top(0)).
/// Axis x: out = (top+bottom at l, top-bottom at 0),
///         in  = (top-bottom at l, top+bottom at 0).
/// Axis y: out = (top - i bottom at l, bottom - i top at 0),
///         in  = (bottom - i top at l, top - i bottom at 0).
fn family_rows(axis: Axis) -> ([Row; 2], [Row; 2]) {
    let o = C64::ZERO;
    let l = C64::ONE;
    let mi = C64::new(0.0, -1.0);
    match axis {
        Axis::Z => (
            [[l, o, o, o], [o, o, o, l]],
            [[o, l, o, o], [o, o, l, o]],
        ),
        Axis::X => (
            [[l, l, o, o], [o, o, l, -l]],
            [[l, -l, o, o], [o, o, l, l]],
        ),
        Axis::Y => (
            [[l, mi, o, o], [o, o, mi, l]],
            [[mi, l, o, o], [o, o, l, mi]],
        ),
    }
}

/// Modified Gram-Schmidt with one re-orthogonalization sweep.
fn orthonormalize(vecs: &mut Vec<BoundaryVector>, v: BoundaryVector, tol: f64) -> Option<BoundaryVector> {
    let mut w = v;
    for _ in 0..2 {
        for q in vecs.iter() {
            let c = dot4(q, &w);
            for (wi, qi) in w.iter_mut().zip(q.iter()) {
                *wi -= c * qi;
            }
        }
    }
    let n = norm4(&w);
    if n <= tol {
        return None;
    }
    for wi in w.iter_mut() {
        *wi /= n;
    }
    vecs.push(w);
    Some(w)
}

/// Orthonormal basis of the null space of a 2x4 constraint, which must be
/// exactly two-dimensional.
fn null_basis(rows: &[Row; 2]) -> Result<[BoundaryVector; 2]> {
    // Null(B) is the orthogonal complement of the conjugated rows.
    let mut span: Vec<BoundaryVector> = Vec::with_capacity(4);
    for row in rows {
        let conj: BoundaryVector = [row[0].conj(), row[1].conj(), row[2].conj(), row[3].conj()];
        if orthonormalize(&mut span, conj, 1e-10).is_none() {
            return Err(Error::Numeric(
                "boundary constraint is rank-deficient; solution space is not two-dimensional".into(),
            ));
        }
    }
    // Greedily extend with the best-aligned canonical vectors.
    let mut basis: Vec<BoundaryVector> = Vec::with_capacity(2);
    while basis.len() < 2 {
        let mut best: Option<(f64, BoundaryVector)> = None;
        for j in 0..4 {
            let mut e = [C64::ZERO; 4];
            e[j] = C64::ONE;
            let mut w = e;
            for q in span.iter().chain(basis.iter()) {
                let c = dot4(q, &w);
                for (wi, qi) in w.iter_mut().zip(q.iter()) {
                    *wi -= c * qi;
                }
            }
            let n = norm4(&w);
            if best.as_ref().is_none_or(|(bn, _)| n > *bn) {
                best = Some((n, e));
            }
        }
        let (n, e) = best.unwrap();
        if n <= 1e-8 {
            return Err(Error::Numeric("null-space extraction lost rank".into()));
        }
        let mut all = span.clone();
        all.extend(basis.iter().copied());
        let q = orthonormalize(&mut all, e, 1e-8)
            .ok_or_else(|| Error::Numeric("null-space extraction lost rank".into()))?;
        basis.push(q);
    }
    Ok([basis[0], basis[1]])
}

impl BoundarySpec {
    fn assemble(context: BcContext, unitary: Mat2, lhs: [Row; 2], rhs: [Row; 2]) -> Result<Self> {
        if !is_unitary(&unitary, DEFAULT_TOL) {
            return Err(Error::Argument(format!(
                "family matrix must be unitary within {DEFAULT_TOL}"
            )));
        }
        let constraint = constraint_rows(&unitary, &lhs, &rhs);
        let basis = null_basis(&constraint)?;
        Ok(BoundarySpec { context, unitary, lhs, rhs, basis })
    }

    pub fn context(&self) -> BcContext {
        self.context
    }

    pub fn axis(&self) -> Axis {
        self.context.axis()
    }

    pub fn unitary(&self) -> &Mat2 {
        &self.unitary
    }

    /// The 2x4 rows of B = L - U R; admissible wall values satisfy B v = 0.
    pub fn constraint_rows(&self) -> [Row; 2] {
        constraint_rows(&self.unitary, &self.lhs, &self.rhs)
    }

    /// Orthonormal basis of the admissible two-dimensional wall subspace.
    pub fn solution_basis(&self) -> &[BoundaryVector; 2] {
        &self.basis
    }

    /// Residual of the constraint on a wall vector, max row magnitude.
    pub fn residual(&self, v: &BoundaryVector) -> f64 {
        self.constraint_rows()
            .iter()
            .map(|row| row_apply(row, v).norm())
            .fold(0.0, f64::max)
    }

    /// A wall vector drawn from the admissible subspace with the given
    /// coordinates in the stored orthonormal basis.
    pub fn subspace_vector(&self, coeff: [C64; 2]) -> BoundaryVector {
        let mut out = [C64::ZERO; 4];
        for (c, q) in coeff.iter().zip(self.basis.iter()) {
            for (o, qi) in out.iter_mut().zip(q.iter()) {
                *o += c * qi;
            }
        }
        out
    }
}

fn constraint_rows(unitary: &Mat2, lhs: &[Row; 2], rhs: &[Row; 2]) -> [Row; 2] {
    let mut out = [[C64::ZERO; 4]; 2];
    for i in 0..2 {
        for j in 0..4 {
            out[i][j] = lhs[i][j] - unitary.e[i][0] * rhs[0][j] - unitary.e[i][1] * rhs[1][j];
        }
    }
    out
}

/// Family member for the Weyl operator along `axis` with matrix `a`.
pub fn bc_weyl_axis(axis: Axis, a: &Mat2) -> Result<BoundarySpec> {
    let (lhs, rhs) = family_rows(axis);
    BoundarySpec::assemble(BcContext::WeylAxis(axis), *a, lhs, rhs)
}

/// Family member for the one-dimensional Dirac operator written in the
/// given representation. The wall combinations follow the representation's
/// velocity structure: the Weyl form pairs plain components, the Dirac and
/// Majorana forms pair sums and differences, the Jackiw-Rebbi form pairs
/// the circular combinations.
pub fn bc_dirac_rep(rep: Representation, u: &Mat2) -> Result<BoundarySpec> {
    let (lhs, rhs) = family_rows(rep_family_axis(rep));
    BoundarySpec::assemble(BcContext::DiracRep(rep), *u, lhs, rhs)
}

/// Transport the axis-z family member with `base_u` into the source
/// representation of `change` (which must target Weyl): wall values are
/// rewritten through the component transform, v_weyl = diag(S, S) v_source,
/// so the encodings become L diag(S, S) and R diag(S, S) with the same
/// unitary.
pub fn bc_via_transform(base_u: &Mat2, change: &RepChange) -> Result<BoundarySpec> {
    if change.to != Representation::Weyl {
        return Err(Error::Argument(
            "transport starts from the Weyl family; the component change must target weyl".into(),
        ));
    }
    let (lhs, rhs) = family_rows(Axis::Z);
    let t = Mat4::from_blocks(change.matrix, Mat2::zero(), Mat2::zero(), change.matrix);
    let map = |rows: [Row; 2]| -> [Row; 2] {
        let mut out = [[C64::ZERO; 4]; 2];
        for i in 0..2 {
            for j in 0..4 {
                out[i][j] = (0..4).map(|k| rows[i][k] * t.e[k][j]).sum();
            }
        }
        out
    };
    BoundarySpec::assemble(BcContext::DiracRep(change.from), *base_u, map(lhs), map(rhs))
}

/// The canonical-family matrix produced by transporting the axis-z member
/// with `base_u` into `rep`: the unitary U' for which bc_dirac_rep(rep, U')
/// has the same admissible subspace as bc_via_transform(base_u, ...).
///
/// The transported encodings factor exactly as L_t = D_L L_rep and
/// R_t = D_R R_rep with diagonal D's (unit-modulus up to a common scale),
/// giving U' = D_L^{-1} U D_R. For the Weyl, Dirac, and Jackiw-Rebbi
/// changes the D's are proportional to the identity and U' = U; the
/// Majorana change contributes a genuine diagonal phase twist.
pub fn induced_family_unitary(rep: Representation, base_u: &Mat2) -> Result<Mat2> {
    let change = crate::representations::rep_change_matrix(rep, Representation::Weyl);
    let transported = bc_via_transform(base_u, &change)?;
    let (lhs_c, rhs_c) = family_rows(rep_family_axis(rep));
    let diag_factor = |t: &[Row; 2], canon: &[Row; 2]| -> Result<Mat2> {
        let mut d = Mat2::zero();
        for i in 0..2 {
            // Row factorization t_i = d_i * canon_i; d_i from the
            // least-squares projection, then verified exactly.
            let num: C64 = canon[i].iter().zip(t[i].iter()).map(|(c, t)| c.conj() * t).sum();
            let den: f64 = canon[i].iter().map(|c| c.norm_sqr()).sum();
            let di = num / den;
            let res: f64 = canon[i]
                .iter()
                .zip(t[i].iter())
                .map(|(c, t)| (t - di * c).norm())
                .fold(0.0, f64::max);
            if res > 1e-12 {
                return Err(Error::Numeric(
                    "transported encoding is not a diagonal rescaling of the canonical one".into(),
                ));
            }
            d.e[i][i] = di;
        }
        Ok(d)
    };
    let dl = diag_factor(&transported.lhs, &lhs_c)?;
    let dr = diag_factor(&transported.rhs, &rhs_c)?;
    let induced = dl.inverse()? * *base_u * dr;
    if !is_unitary(&induced, 1e-10) {
        return Err(Error::Numeric("induced family matrix failed the unitarity check".into()));
    }
    Ok(induced)
}

/// Axis-z family written in the reversed pairing, relating the incoming
/// wall components (top(0), bottom(l)) to the outgoing ones
/// (top(l), bottom(0)) through `v`. The member with v = (A sigma_x)^{-1}
/// is the same subspace as the standard axis-z member with matrix A.
pub fn bc_axis3_incoming(v: &Mat2) -> Result<BoundarySpec> {
    let o = C64::ZERO;
    let l = C64::ONE;
    let lhs: [Row; 2] = [[o, o, l, o], [o, l, o, o]];
    let rhs: [Row; 2] = [[l, o, o, o], [o, o, o, l]];
    BoundarySpec::assemble(BcContext::WeylAxis(Axis::Z), *v, lhs, rhs)
}

/// The MIT-bag member of the axis-z family: A = i * identity, i.e. wall
/// conditions top(0) = -i bottom(0) and top(l) = +i bottom(l).
pub fn mit_bag_spec() -> BoundarySpec {
    let i = C64::new(0.0, 1.0);
    bc_weyl_axis(Axis::Z, &Mat2::identity().scale(i)).expect("constant member is always valid")
}

/// Largest principal-angle sine between the two admissible subspaces.
pub fn subspace_distance(a: &BoundarySpec, b: &BoundarySpec) -> Result<f64> {
    if a.axis() != b.axis() {
        return Err(Error::Argument(format!(
            "subspace comparison requires matching family axes, got {} vs {}",
            a.context.label(),
            b.context.label()
        )));
    }
    let residual = |q: &BoundaryVector, basis: &[BoundaryVector; 2]| -> f64 {
        let mut w = *q;
        for p in basis {
            let c = dot4(p, q);
            for (wi, pi) in w.iter_mut().zip(p.iter()) {
                *wi -= c * pi;
            }
        }
        norm4(&w)
    };
    let mut worst: f64 = 0.0;
    for q in a.basis.iter() {
        worst = worst.max(residual(q, &b.basis));
    }
    for q in b.basis.iter() {
        worst = worst.max(residual(q, &a.basis));
    }
    Ok(worst)
}

/// Whether two family members admit the same wall states within `tol`.
pub fn bc_equivalent(a: &BoundarySpec, b: &BoundarySpec, tol: f64) -> Result<bool> {
    Ok(subspace_distance(a, b)? <= tol)
}

/// Sesquilinear wall term (psi† sigma_j chi)(l) - (psi† sigma_j chi)(0).
///
/// Self-adjointness of the interval operator is exactly the statement that
/// this vanishes for every pair of admissible wall vectors.
pub fn boundary_term(psi: &BoundaryVector, chi: &BoundaryVector, axis: Axis) -> C64 {
    let s = pauli(axis);
    let at = |v: &BoundaryVector, off: usize| [v[off], v[off + 1]];
    let form = |p: [C64; 2], x: [C64; 2]| -> C64 {
        let sx = s.mul_vec(x);
        p[0].conj() * sx[0] + p[1].conj() * sx[1]
    };
    form(at(psi, 0), at(chi, 0)) - form(at(psi, 2), at(chi, 2))
}

/// Confinement label of a family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confinement {
    Confining,
    NonConfining,
}

impl Confinement {
    pub fn name(self) -> &'static str {
        match self {
            Confinement::Confining => "confining",
            Confinement::NonConfining => "non-confining",
        }
    }
}

/// Classification result with the wall-current form norms that produced it.
#[derive(Clone, Copy, Debug)]
pub struct ConfinementClass {
    pub label: Confinement,
    /// Largest entry of the current form restricted to the subspace at x=0.
    pub wall_current_norm_at_0: f64,
    /// Largest entry of the current form restricted to the subspace at x=l.
    pub wall_current_norm_at_len: f64,
}

/// Hermitian 2x2 forms of the wall current restricted to the admissible
/// subspace, returned as (at x=0, at x=l): entries q_a(w)† sigma_j q_b(w)
/// over the stored orthonormal basis.
pub fn wall_current_forms(spec: &BoundarySpec) -> (Mat2, Mat2) {
    let s = pauli(spec.axis());
    let form_at = |off: usize| -> Mat2 {
        let mut f = Mat2::zero();
        for a in 0..2 {
            for b in 0..2 {
                let qa = [spec.basis[a][off], spec.basis[a][off + 1]];
                let qb = s.mul_vec([spec.basis[b][off], spec.basis[b][off + 1]]);
                f.e[a][b] = qa[0].conj() * qb[0] + qa[1].conj() * qb[1];
            }
        }
        f
    };
    (form_at(2), form_at(0))
}

/// Classify whether the member confines: confining iff the wall current
/// vanishes identically on the admissible subspace at both walls.
pub fn classify_confinement(spec: &BoundarySpec, tol: f64) -> ConfinementClass {
    let (at_0, at_len) = wall_current_forms(spec);
    let n0 = at_0.max_abs();
    let nl = at_len.max_abs();
    let label = if n0 <= tol && nl <= tol {
        Confinement::Confining
    } else {
        Confinement::NonConfining
    };
    ConfinementClass { label, wall_current_norm_at_0: n0, wall_current_norm_at_len: nl }
}

/// Whether the member commutes with complex conjugation, so that real
/// admissible states exist: for the x and z families this holds iff the
/// matrix is real orthogonal; the y family combinations are intrinsically
/// complex and never admit reality.
pub fn reality_admissible(spec: &BoundarySpec) -> bool {
    match spec.axis() {
        Axis::X | Axis::Z => is_real_orthogonal(&spec.unitary, DEFAULT_TOL),
        Axis::Y => false,
    }
}

/// Boundary condition of the one-component Weyl particle on the interval:
/// value at l equals exp(i eta) times the value at 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhaseBC {
    eta: f64,
}

impl PhaseBC {
    pub fn new(eta: f64) -> Result<Self> {
        if !(0.0..std::f64::consts::TAU).contains(&eta) {
            return Err(Error::Argument(format!(
                "eta must lie in [0, 2*pi), got {eta}"
            )));
        }
        Ok(PhaseBC { eta })
    }

    pub fn eta(&self) -> f64 {
        self.eta
    }

    pub fn phase(&self) -> C64 {
        C64::new(self.eta.cos(), self.eta.sin())
    }

    /// Real states exist only for the periodic and antiperiodic members.
    pub fn reality_admissible(&self) -> bool {
        self.eta.abs() <= DEFAULT_TOL || (self.eta - std::f64::consts::PI).abs() <= DEFAULT_TOL
    }
}

/// One-component family member with phase `eta`.
pub fn bc_1d_weyl(eta: f64) -> Result<PhaseBC> {
    PhaseBC::new(eta)
}
