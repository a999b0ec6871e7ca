//! Constructors for the classical matrix Lie algebras, the representation
//! functors, and the machine-readable catalog.
//!
//! Representations are built in their natural flavor first: real matrices on
//! R^n, Gaussian-rational matrices on C^m, or realified quaternionic matrices
//! on R^{4q} (left-multiplication blocks). Realification to a `LinRep` in
//! gl(n, R) happens last. Generators always form a basis of the algebra over
//! R, so complex algebras carry both g and i*g generators while real algebras
//! acting complexly carry each generator once.

pub mod catalog;
pub mod clifford;
pub mod functors;

use crate::gint::Solver;
use crate::linrep::LinRep;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_rational::BigRational;
use num_traits::Zero;
use std::ops::Add;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("invalid parameters: {0}")]
    BadParams(String),
    #[error("functor not applicable: {0}")]
    Inapplicable(String),
    #[error("construction failed: {0}")]
    Construction(String),
}

/// The scalar flavor of the space a representation acts on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    /// R^dim, real matrices.
    Real,
    /// C^dim, Gaussian-rational matrices.
    Complex,
    /// H^dim realified to R^{4 dim} with left-multiplication blocks.
    Quat,
}

/// A matrix representation in its natural flavor. `mats` is a basis of the
/// represented algebra over R.
#[derive(Clone, Debug)]
pub struct Rep {
    pub flavor: Flavor,
    /// Dimension over the flavor field.
    pub fdim: usize,
    pub mats: Vec<Matrix>,
}

impl Rep {
    pub fn real(fdim: usize, mats: Vec<Matrix>) -> Self {
        Rep {
            flavor: Flavor::Real,
            fdim,
            mats,
        }
    }

    pub fn complex(fdim: usize, mats: Vec<Matrix>) -> Self {
        Rep {
            flavor: Flavor::Complex,
            fdim,
            mats,
        }
    }

    pub fn quat(fdim: usize, mats: Vec<Matrix>) -> Self {
        Rep {
            flavor: Flavor::Quat,
            fdim,
            mats,
        }
    }

    pub fn real_space_dim(&self) -> usize {
        match self.flavor {
            Flavor::Real => self.fdim,
            Flavor::Complex => 2 * self.fdim,
            Flavor::Quat => 4 * self.fdim,
        }
    }

    /// Matrix size as stored (quaternionic mats are already realified).
    pub fn stored_size(&self) -> usize {
        match self.flavor {
            Flavor::Real => self.fdim,
            Flavor::Complex => self.fdim,
            Flavor::Quat => 4 * self.fdim,
        }
    }

    pub fn dim(&self) -> usize {
        self.mats.len()
    }

    /// Realifies into gl(n, R); complex flavors record the standard complex
    /// structure.
    pub fn realify(&self) -> Result<LinRep, RepError> {
        match self.flavor {
            Flavor::Real | Flavor::Quat => {
                let n = self.stored_size();
                LinRep::new(n, self.mats.clone(), None)
                    .map_err(|e| RepError::Construction(e.to_string()))
            }
            Flavor::Complex => {
                let gens: Vec<Matrix> = self.mats.iter().map(realify_complex).collect();
                let j = crate::liecore::j_std(self.fdim);
                LinRep::new(2 * self.fdim, gens, Some(j))
                    .map_err(|e| RepError::Construction(e.to_string()))
            }
        }
    }
}

/// A + iB as a complex matrix becomes [[A, -B], [B, A]] on stacked (x, y).
pub fn realify_complex(m: &Matrix) -> Matrix {
    let k = m.rows();
    let mut out = Matrix::zeros(2 * k, 2 * k);
    for i in 0..k {
        for j in 0..k {
            let v = &m[(i, j)];
            if !v.re.is_zero() {
                let re = Scalar::new(v.re.clone(), BigRational::zero());
                out[(i, j)] = re.clone();
                out[(k + i, k + j)] = re;
            }
            if !v.im.is_zero() {
                let im = Scalar::new(v.im.clone(), BigRational::zero());
                out[(i, k + j)] = -&im;
                out[(k + i, j)] = im;
            }
        }
    }
    out
}

/// Multiplies a complex matrix by i.
pub fn times_i(m: &Matrix) -> Matrix {
    m.scale(&Scalar::i())
}

/// The standard elementary basis of gl(m) (real flavor).
pub fn gl_real_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(m * m);
    for i in 0..m {
        for j in 0..m {
            out.push(Matrix::elem(m, i, j));
        }
    }
    out
}

/// Real basis of gl(m, C): i E_ab and E_ab.
pub fn gl_complex_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::with_capacity(2 * m * m);
    for i in 0..m {
        for j in 0..m {
            let e = Matrix::elem(m, i, j);
            out.push(times_i(&e));
            out.push(e);
        }
    }
    out
}

/// Solves for the subspace of span(dirs) satisfying the linear conditions
/// produced by `cond` (any number of matrix-valued conditions per direction;
/// conditions must be R-linear in the direction). Returns a basis of the
/// solution space as matrix combinations of dirs.
pub fn solve_matrix_conditions(
    dirs: &[Matrix],
    cond: impl Fn(&Matrix) -> Vec<Matrix>,
) -> Vec<Matrix> {
    assert!(!dirs.is_empty());
    let per_dir: Vec<Vec<Matrix>> = dirs.iter().map(&cond).collect();
    let k = per_dir[0].len();
    let mut solver = Solver::new(dirs.len());
    let mut row = vec![Scalar::zero(); dirs.len()];
    for c in 0..k {
        let shape = (per_dir[0][c].rows(), per_dir[0][c].cols());
        for e in 0..shape.0 * shape.1 {
            // split complex-valued conditions into real and imaginary rows
            for part in 0..2 {
                let mut nonzero = false;
                for (d, slots) in per_dir.iter().enumerate() {
                    let v = &slots[c].entries()[e];
                    let r = if part == 0 {
                        Scalar::new(v.re.clone(), BigRational::zero())
                    } else {
                        Scalar::new(v.im.clone(), BigRational::zero())
                    };
                    if !r.is_zero() {
                        nonzero = true;
                    }
                    row[d] = r;
                }
                if nonzero {
                    solver.add_row(&row);
                }
            }
        }
    }
    let kern = solver.into_kernel();
    kern.iter()
        .map(|coeffs| {
            let mut acc = Matrix::zeros(dirs[0].rows(), dirs[0].cols());
            for (d, c) in coeffs.iter().enumerate() {
                if !c.is_zero() {
                    acc = (&acc).add(&dirs[d].scale(c));
                }
            }
            acc
        })
        .collect()
}

/// eta = diag(+1 x p, -1 x q).
pub fn eta(p: usize, q: usize) -> Matrix {
    Matrix::from_fn(p + q, p + q, |i, j| {
        if i != j {
            Scalar::zero()
        } else if i < p {
            Scalar::one()
        } else {
            Scalar::from_int(-1)
        }
    })
}

/// Standard symplectic form on R^{2m} or C^{2m}: Omega = [[0, I], [-I, 0]].
pub fn omega_std(m: usize) -> Matrix {
    let mut o = Matrix::zeros(2 * m, 2 * m);
    for k in 0..m {
        o[(k, m + k)] = Scalar::one();
        o[(m + k, k)] = Scalar::from_int(-1);
    }
    o
}

/// so(p, q): eta-antisymmetric real matrices, explicit basis.
pub fn so_pq_basis(p: usize, q: usize) -> Vec<Matrix> {
    let n = p + q;
    let et = eta(p, q);
    let mut out = Vec::new();
    for a in 0..n {
        for b in (a + 1)..n {
            let mut x = Matrix::zeros(n, n);
            x[(a, b)] = et[(b, b)].clone();
            x[(b, a)] = -&et[(a, a)];
            out.push(x);
        }
    }
    out
}

/// so(m, C): antisymmetric complex matrices, real basis {iM, M}.
pub fn so_m_c_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in (a + 1)..m {
            let mut x = Matrix::zeros(m, m);
            x[(a, b)] = Scalar::one();
            x[(b, a)] = Scalar::from_int(-1);
            out.push(times_i(&x));
            out.push(x);
        }
    }
    out
}

/// sl(m, R): traceless real matrices.
pub fn sl_real_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for i in 0..m {
        for j in 0..m {
            if i != j {
                out.push(Matrix::elem(m, i, j));
            }
        }
    }
    for i in 1..m {
        let mut x = Matrix::zeros(m, m);
        x[(0, 0)] = Scalar::one();
        x[(i, i)] = Scalar::from_int(-1);
        out.push(x);
    }
    out
}

/// sl(m, C): real basis {iX, X} of traceless complex matrices.
pub fn sl_complex_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for x in sl_real_basis(m) {
        out.push(times_i(&x));
        out.push(x);
    }
    out
}

/// sp(m, R) on R^{2m}: Omega-condition, solved exactly.
pub fn sp_real_basis(m: usize) -> Vec<Matrix> {
    let om = omega_std(m);
    let dirs = gl_real_basis(2 * m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        vec![(&x.transpose().mul_mat(&om)).add(&om.mul_mat(x))]
    });
    debug_assert_eq!(basis.len(), m * (2 * m + 1));
    basis
}

/// sp(m, C): real basis (dimension 2 m (2m + 1)).
pub fn sp_complex_basis(m: usize) -> Vec<Matrix> {
    sp_real_basis(m)
        .into_iter()
        .flat_map(|x| [times_i(&x), x])
        .collect()
}

/// su(p, q) on C^{p+q}: anti-hermitian wrt eta, traceless.
pub fn su_pq_basis(p: usize, q: usize) -> Vec<Matrix> {
    let m = p + q;
    let et = eta(p, q);
    let dirs = gl_complex_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        let herm = (&x.conj().transpose().mul_mat(&et)).add(&et.mul_mat(x));
        let mut t = Matrix::zeros(1, 1);
        t[(0, 0)] = x.trace();
        vec![herm, t]
    });
    debug_assert_eq!(basis.len(), m * m - 1);
    basis
}

/// u(p, q): anti-hermitian wrt eta.
pub fn u_pq_basis(p: usize, q: usize) -> Vec<Matrix> {
    let m = p + q;
    let et = eta(p, q);
    let dirs = gl_complex_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        vec![(&x.conj().transpose().mul_mat(&et)).add(&et.mul_mat(x))]
    });
    debug_assert_eq!(basis.len(), m * m);
    basis
}

// ---------------------------------------------------------------------------
// Quaternionic machinery. H^m is realified with coordinates (1, i, j, k) per
// slot; quaternion matrices act by left multiplication, quaternion scalars on
// the right.
// ---------------------------------------------------------------------------

/// 4x4 left-multiplication matrix of the quaternion units 1, i, j, k
/// (convention ij = k, jk = i, ki = j).
pub fn quat_left(unit: usize) -> Matrix {
    match unit {
        0 => Matrix::identity(4),
        1 => Matrix::from_i64(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]),
        2 => Matrix::from_i64(&[
            &[0, 0, -1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, -1, 0, 0],
        ]),
        3 => Matrix::from_i64(&[
            &[0, 0, 0, -1],
            &[0, 0, -1, 0],
            &[0, 1, 0, 0],
            &[1, 0, 0, 0],
        ]),
        _ => panic!("quaternion unit out of range"),
    }
}

/// 4x4 right-multiplication matrix of the quaternion units.
pub fn quat_right(unit: usize) -> Matrix {
    match unit {
        0 => Matrix::identity(4),
        1 => Matrix::from_i64(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, 1],
            &[0, 0, -1, 0],
        ]),
        2 => Matrix::from_i64(&[
            &[0, 0, -1, 0],
            &[0, 0, 0, -1],
            &[1, 0, 0, 0],
            &[0, 1, 0, 0],
        ]),
        3 => Matrix::from_i64(&[
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
        ]),
        _ => panic!("quaternion unit out of range"),
    }
}

/// Block matrix with the 4x4 block `blk` at slot (a, b) of an m x m
/// quaternionic matrix, realified.
pub fn quat_block(m: usize, a: usize, b: usize, blk: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(4 * m, 4 * m);
    for i in 0..4 {
        for j in 0..4 {
            if !blk[(i, j)].is_zero() {
                out[(4 * a + i, 4 * b + j)] = blk[(i, j)].clone();
            }
        }
    }
    out
}

/// Real basis of gl(m, H) as left-multiplication matrices (dimension 4 m^2).
pub fn gl_quat_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for u in 0..4 {
                out.push(quat_block(m, a, b, &quat_left(u)));
            }
        }
    }
    out
}

/// sl(m, H): real part of the trace vanishes (dimension 4 m^2 - 1).
pub fn sl_quat_basis(m: usize) -> Vec<Matrix> {
    let dirs = gl_quat_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        let mut t = Matrix::zeros(1, 1);
        t[(0, 0)] = x.trace(); // realified trace = 4 Re tr_H
        vec![t]
    });
    debug_assert_eq!(basis.len(), 4 * m * m - 1);
    basis
}

/// Right-multiplication of the whole space H^m by a quaternion unit.
pub fn quat_right_struct(m: usize, unit: usize) -> Matrix {
    let r = quat_right(unit);
    let blocks: Vec<&Matrix> = (0..m).map(|_| &r).collect();
    Matrix::block_diag(&blocks)
}

/// sp(p, q): quaternion-antihermitian wrt the diagonal signature form
/// (dimension (p+q)(2(p+q)+1)).
pub fn sp_pq_basis(p: usize, q: usize) -> Vec<Matrix> {
    let m = p + q;
    let mut h = Matrix::zeros(4 * m, 4 * m);
    for a in 0..m {
        let sgn = if a < p { 1 } else { -1 };
        for i in 0..4 {
            h[(4 * a + i, 4 * a + i)] = Scalar::from_int(sgn);
        }
    }
    let dirs = gl_quat_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        vec![(&x.transpose().mul_mat(&h)).add(&h.mul_mat(x))]
    });
    debug_assert_eq!(basis.len(), m * (2 * m + 1));
    basis
}

/// so(m, H) (a.k.a. so*(2m)) in left-multiplication form: antisymmetric wrt
/// the real part of the j-skew-hermitian form (dimension m(2m-1)).
pub fn so_quat_basis(m: usize) -> Vec<Matrix> {
    let lj = quat_left(2);
    let blocks: Vec<&Matrix> = (0..m).map(|_| &lj).collect();
    let g0 = Matrix::block_diag(&blocks);
    let dirs = gl_quat_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        vec![(&x.transpose().mul_mat(&g0)).add(&g0.mul_mat(x))]
    });
    debug_assert_eq!(basis.len(), m * (2 * m - 1));
    basis
}

/// sp(1) as right multiplications by pure quaternions on H (dimension 3).
pub fn sp1_right_basis() -> Vec<Matrix> {
    vec![quat_right(1), quat_right(2), quat_right(3)]
}

/// gl(m, H) acting by right multiplication w -> w X: block (b, a) holds the
/// right multiplication by entry X_{ab}. Used as the second factor of
/// quaternionic tensor products (right multiplications commute with the left
/// structure being contracted).
pub fn gl_quat_right_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for a in 0..m {
        for b in 0..m {
            for u in 0..4 {
                out.push(quat_block(m, b, a, &quat_right(u)));
            }
        }
    }
    out
}

/// sl(m, H) in right-multiplication form.
pub fn sl_quat_right_basis(m: usize) -> Vec<Matrix> {
    let dirs = gl_quat_right_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        let mut t = Matrix::zeros(1, 1);
        t[(0, 0)] = x.trace();
        vec![t]
    });
    debug_assert_eq!(basis.len(), 4 * m * m - 1);
    basis
}

/// gl(m, H) embedded in gl(2m, C): X = A + jB maps to
/// [[A, -conj B], [B, conj A]] on H^m = C^m + j C^m.
pub fn glmh_complex_embed(a: &Matrix, b: &Matrix) -> Matrix {
    let m = a.rows();
    let mut out = Matrix::zeros(2 * m, 2 * m);
    for i in 0..m {
        for j in 0..m {
            if !a[(i, j)].is_zero() {
                out[(i, j)] = a[(i, j)].clone();
                out[(m + i, m + j)] = a[(i, j)].conj();
            }
            if !b[(i, j)].is_zero() {
                out[(m + i, j)] = b[(i, j)].clone();
                out[(i, m + j)] = -&b[(i, j)].conj();
            }
        }
    }
    out
}

/// Real basis of gl(m, H) in the complex 2m x 2m picture.
pub fn gl_quat_complex_basis(m: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    let zero = Matrix::zeros(m, m);
    for i in 0..m {
        for j in 0..m {
            let e = Matrix::elem(m, i, j);
            let ie = times_i(&e);
            out.push(glmh_complex_embed(&e, &zero));
            out.push(glmh_complex_embed(&ie, &zero));
            out.push(glmh_complex_embed(&zero, &e));
            out.push(glmh_complex_embed(&zero, &ie));
        }
    }
    out
}

/// sl(m, H) in the complex picture: real trace part removed.
pub fn sl_quat_complex_basis(m: usize) -> Vec<Matrix> {
    let dirs = gl_quat_complex_basis(m);
    let basis = solve_matrix_conditions(&dirs, |x| {
        let mut t = Matrix::zeros(1, 1);
        t[(0, 0)] = x.trace(); // = 2 Re tr_H(X)
        vec![t]
    });
    debug_assert_eq!(basis.len(), 4 * m * m - 1);
    basis
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liecore;

    fn closed(n: usize, mats: &[Matrix]) -> bool {
        LinRep::new(n, mats.to_vec(), None)
            .map(|r| r.validate_closure().is_ok())
            .unwrap_or(false)
    }

    #[test]
    fn classical_dimensions() {
        assert_eq!(so_pq_basis(2, 1).len(), 3);
        assert_eq!(sp_real_basis(2).len(), 10);
        assert_eq!(su_pq_basis(2, 1).len(), 8);
        assert_eq!(u_pq_basis(1, 1).len(), 4);
        assert_eq!(sl_quat_basis(1).len(), 3);
        assert_eq!(sp_pq_basis(1, 1).len(), 10);
        assert_eq!(so_quat_basis(2).len(), 6);
        assert_eq!(sl_quat_complex_basis(2).len(), 15);
    }

    #[test]
    fn classical_closure() {
        assert!(closed(3, &so_pq_basis(2, 1)));
        assert!(closed(4, &sp_real_basis(2)));
        assert!(closed(4, &sl_quat_basis(1)));
        assert!(closed(8, &sp_pq_basis(1, 1)));
        assert!(closed(8, &so_quat_basis(2)));
        assert!(closed(4, &sp1_right_basis()));
    }

    #[test]
    fn quat_units_multiply_correctly() {
        let i = quat_left(1);
        let j = quat_left(2);
        let k = quat_left(3);
        assert_eq!(i.mul_mat(&j), k);
        assert_eq!(
            i.mul_mat(&i),
            Matrix::identity(4).scale(&Scalar::from_int(-1))
        );
        let ri = quat_right(1);
        let rj = quat_right(2);
        let rk = quat_right(3);
        // right multiplication reverses products: R_i R_j = R_{j i} = -R_k
        assert_eq!(ri.mul_mat(&rj), rk.scale(&Scalar::from_int(-1)));
        // left and right multiplications commute
        assert!(i.comm(&rj).is_zero());
        assert!(j.comm(&ri).is_zero());
    }

    #[test]
    fn realify_complex_gl2c() {
        let rep = Rep::complex(2, gl_complex_basis(2));
        let r = rep.realify().unwrap();
        assert_eq!(r.space_dim(), 4);
        assert_eq!(r.dim(), 8);
        assert!(r.validate_closure().is_ok());
        assert_eq!(
            liecore::real_class(&r, 7),
            liecore::RealClass::TotallyComplex
        );
    }

    #[test]
    fn sl1h_commutant_is_quaternionic() {
        let r = Rep::quat(1, sl_quat_basis(1)).realify().unwrap();
        assert_eq!(liecore::commutant(&r).dim(), 4);
    }

    #[test]
    fn su3_killing_is_definite() {
        let basis = su_pq_basis(3, 0);
        let k = liecore::killing_form(3, &basis);
        assert_eq!(liecore::signature(&k), (0, 8, 0));
    }

    #[test]
    fn complex_embedding_matches_quat_dims() {
        // sl(1, H) in the complex picture is su(2).
        let b = sl_quat_complex_basis(1);
        assert_eq!(b.len(), 3);
        assert!(closed(2, &b));
    }
}
