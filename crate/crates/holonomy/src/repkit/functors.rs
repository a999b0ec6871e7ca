//! Representation functors: duals, direct sums, tensor products over R, C
//! and H, symmetric and exterior powers, the primitive part of the third
//! exterior power, quaternionic (anti)hermitian squares, and real forms of
//! complex representations.

use super::{quat_right_struct, Flavor, Rep, RepError};
use crate::gint::Solver;
use crate::linrep::express_in_basis;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::Subspace;
use std::ops::{Add, Neg, Sub};

/// Dual representation g -> -g^T (same flavor).
pub fn dual(rep: &Rep) -> Rep {
    Rep {
        flavor: rep.flavor,
        fdim: rep.fdim,
        mats: rep.mats.iter().map(|m| (&m.transpose()).neg()).collect(),
    }
}

/// Direct sum of two representations of the same algebra: generators are
/// zipped pairwise. Flavors must agree.
pub fn direct_sum(a: &Rep, b: &Rep) -> Result<Rep, RepError> {
    if a.flavor != b.flavor || a.mats.len() != b.mats.len() {
        return Err(RepError::Inapplicable(
            "direct sum needs matching flavor and generator count".into(),
        ));
    }
    let mats = a
        .mats
        .iter()
        .zip(&b.mats)
        .map(|(x, y)| Matrix::block_diag(&[x, y]))
        .collect();
    Ok(Rep {
        flavor: a.flavor,
        fdim: a.fdim + b.fdim,
        mats,
    })
}

/// Tensor product of representations of two different algebra factors. The
/// result represents the direct-sum algebra: generators of `a` act as g x I,
/// generators of `b` as I x g. Real and complex flavors use the Kronecker
/// product (quaternionic tensor has its own function).
pub fn tensor_factors(a: &Rep, b: &Rep) -> Result<Rep, RepError> {
    if a.flavor != b.flavor || a.flavor == Flavor::Quat {
        return Err(RepError::Inapplicable(
            "tensor_factors needs two real or two complex representations".into(),
        ));
    }
    let ia = Matrix::identity(a.stored_size());
    let ib = Matrix::identity(b.stored_size());
    let mut mats = Vec::with_capacity(a.dim() + b.dim());
    for g in &a.mats {
        mats.push(g.kron(&ib));
    }
    for g in &b.mats {
        mats.push(ia.kron(g));
    }
    Ok(Rep {
        flavor: a.flavor,
        fdim: a.fdim * b.fdim,
        mats,
    })
}

/// Tensor of a representation with the trivial representation of another
/// factor (rho_0): pads with zero generators for the silent factor.
pub fn with_trivial_factor(rep: &Rep, silent_gens: usize, before: bool) -> Rep {
    let z = Matrix::zeros(rep.stored_size(), rep.stored_size());
    let zeros: Vec<Matrix> = (0..silent_gens).map(|_| z.clone()).collect();
    let mats = if before {
        zeros.into_iter().chain(rep.mats.iter().cloned()).collect()
    } else {
        rep.mats.iter().cloned().chain(zeros).collect()
    };
    Rep {
        flavor: rep.flavor,
        fdim: rep.fdim,
        mats,
    }
}

/// Quaternionic tensor product V x_H W = R^{4 r s}: realified real tensor
/// restricted to the subspace where the right structure of V matches the
/// left structure of W. The first factor acts h-linearly on V (left
/// multiplications), the second factor must commute with the left structure
/// of W (right multiplications).
pub fn tensor_quat(a: &Rep, b: &Rep) -> Result<Rep, RepError> {
    if a.flavor != Flavor::Quat || b.flavor != Flavor::Quat {
        return Err(RepError::Inapplicable(
            "quaternionic tensor needs quaternionic factors".into(),
        ));
    }
    let (r, s) = (a.fdim, b.fdim);
    let na = 4 * r;
    let nb = 4 * s;
    let ia = Matrix::identity(na);
    let ib = Matrix::identity(nb);
    // Invariant subspace: ker(R_u^V x I - I x L_u^W) for u = i, j.
    let mut solver = Solver::new(na * nb);
    for unit in [1usize, 2] {
        let rv = quat_right_struct(r, unit);
        let lw = left_struct(s, unit);
        let cond = (&rv.kron(&ib)).sub(&ia.kron(&lw));
        for i in 0..na * nb {
            let mut row = Vec::with_capacity(na * nb);
            let mut nonzero = false;
            for j in 0..na * nb {
                let v = cond[(i, j)].clone();
                if !v.is_zero() {
                    nonzero = true;
                }
                row.push(v);
            }
            if nonzero {
                solver.add_row(&row);
            }
        }
    }
    let basis_vecs = solver.into_kernel();
    if basis_vecs.len() != 4 * r * s {
        return Err(RepError::Construction(format!(
            "quaternionic tensor dimension {} != {}",
            basis_vecs.len(),
            4 * r * s
        )));
    }
    let sub = Subspace::from_vectors(na * nb, basis_vecs);
    let mut mats = Vec::with_capacity(a.dim() + b.dim());
    for g in &a.mats {
        mats.push(restrict_to(&sub, &g.kron(&ib))?);
    }
    for g in &b.mats {
        mats.push(restrict_to(&sub, &ia.kron(g))?);
    }
    Ok(Rep {
        flavor: Flavor::Real,
        fdim: 4 * r * s,
        mats,
    })
}

fn left_struct(m: usize, unit: usize) -> Matrix {
    let l = super::quat_left(unit);
    let blocks: Vec<&Matrix> = (0..m).map(|_| &l).collect();
    Matrix::block_diag(&blocks)
}

/// Restricts `g` to the invariant subspace `sub`, in the subspace basis.
pub fn restrict_to(sub: &Subspace, g: &Matrix) -> Result<Matrix, RepError> {
    let k = sub.dim();
    let mut rows = Vec::with_capacity(k);
    for b in sub.basis() {
        let img = g.mul_vec(b);
        let coords = express_in_basis(sub, &img)
            .ok_or_else(|| RepError::Construction("subspace not invariant".into()))?;
        rows.push(coords);
    }
    Ok(Matrix::from_rows(rows).transpose())
}

// ---------------------------------------------------------------------------
// Symmetric and exterior powers (derivation action on monomial bases).
// Packed index orders are lexicographic: multisets i1 <= ... <= ik for Sym,
// strict tuples i1 < ... < ik for Ext.
// ---------------------------------------------------------------------------

fn multisets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 0, &mut Vec::new(), &mut out);
    out
}

fn subsets(m: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(m: usize, k: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            cur.push(i);
            rec(m, k, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, k, 0, &mut Vec::new(), &mut out);
    out
}

/// k-th symmetric power with the derivation action.
pub fn sym_power(rep: &Rep, k: usize) -> Result<Rep, RepError> {
    if rep.flavor == Flavor::Quat {
        return Err(RepError::Inapplicable("Sym over H not supported".into()));
    }
    let m = rep.fdim;
    let basis = multisets(m, k);
    let index: std::collections::HashMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let dim = basis.len();
    let mats = rep
        .mats
        .iter()
        .map(|g| {
            let mut out = Matrix::zeros(dim, dim);
            for (col, mono) in basis.iter().enumerate() {
                // derivation: sum over slots, replace slot entry by g-image
                for slot in 0..k {
                    let src = mono[slot];
                    for tgt in 0..m {
                        let c = &g[(tgt, src)];
                        if c.is_zero() {
                            continue;
                        }
                        let mut new_mono = mono.clone();
                        new_mono[slot] = tgt;
                        new_mono.sort_unstable();
                        let row = index[&new_mono];
                        out[(row, col)] = (&out[(row, col)]).add(c);
                    }
                }
            }
            out
        })
        .collect();
    Ok(Rep {
        flavor: rep.flavor,
        fdim: dim,
        mats,
    })
}

/// k-th exterior power with the derivation action.
pub fn ext_power(rep: &Rep, k: usize) -> Result<Rep, RepError> {
    if rep.flavor == Flavor::Quat {
        return Err(RepError::Inapplicable("Ext over H not supported".into()));
    }
    let m = rep.fdim;
    if k > m {
        return Err(RepError::Inapplicable("exterior power beyond dimension".into()));
    }
    let basis = subsets(m, k);
    let index: std::collections::HashMap<Vec<usize>, usize> = basis
        .iter()
        .enumerate()
        .map(|(i, b)| (b.clone(), i))
        .collect();
    let dim = basis.len();
    let mats = rep
        .mats
        .iter()
        .map(|g| {
            let mut out = Matrix::zeros(dim, dim);
            for (col, tuple) in basis.iter().enumerate() {
                for slot in 0..k {
                    let src = tuple[slot];
                    for tgt in 0..m {
                        let c = &g[(tgt, src)];
                        if c.is_zero() {
                            continue;
                        }
                        if tuple.contains(&tgt) && tgt != src {
                            continue; // repeated index wedges to zero
                        }
                        let mut new_tuple = tuple.clone();
                        new_tuple[slot] = tgt;
                        // sort and count inversions for the sign
                        let (sorted, sign) = sort_with_sign(new_tuple);
                        let row = index[&sorted];
                        let term = if sign > 0 { c.clone() } else { c.neg() };
                        out[(row, col)] = (&out[(row, col)]).add(&term);
                    }
                }
            }
            out
        })
        .collect();
    Ok(Rep {
        flavor: rep.flavor,
        fdim: dim,
        mats,
    })
}

fn sort_with_sign(mut v: Vec<usize>) -> (Vec<usize>, i32) {
    let mut sign = 1;
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    (v, sign)
}

/// Primitive part of the third exterior power of a symplectic canonical
/// representation: the kernel of the contraction with the symplectic form.
pub fn ext3_primitive(rep: &Rep, omega: &Matrix) -> Result<Rep, RepError> {
    let full = ext_power(rep, 3)?;
    let m = rep.fdim;
    let basis = subsets(m, 3);
    // contraction C(e_a ^ e_b ^ e_c) = w(a,b) e_c - w(a,c) e_b + w(b,c) e_a
    let mut contraction = Matrix::zeros(m, basis.len());
    for (col, t) in basis.iter().enumerate() {
        let (a, b, c) = (t[0], t[1], t[2]);
        let terms = [
            (omega[(a, b)].clone(), c),
            ((&omega[(a, c)]).neg(), b),
            (omega[(b, c)].clone(), a),
        ];
        for (w, tgt) in terms {
            if !w.is_zero() {
                contraction[(tgt, col)] = (&contraction[(tgt, col)]).add(&w);
            }
        }
    }
    let (_, kernel) = contraction.rank_nullspace();
    let mats: Result<Vec<Matrix>, RepError> = full
        .mats
        .iter()
        .map(|g| restrict_to(&kernel, g))
        .collect();
    Ok(Rep {
        flavor: rep.flavor,
        fdim: kernel.dim(),
        mats: mats?,
    })
}

// ---------------------------------------------------------------------------
// Quaternionic and complex hermitian squares.
// ---------------------------------------------------------------------------

/// Basis of the symmetric (hermitian, s = +1) or antisymmetric (antihermitian,
/// s = -1) part of the realified quaternionic matrix space, inside the
/// left-multiplication image of gl(m, H).
fn quat_sym_space(m: usize, sign: i64) -> Subspace {
    let dirs = super::gl_quat_basis(m);
    let picked = super::solve_matrix_conditions(&dirs, |x| {
        vec![(&x.transpose().scale(&Scalar::from_int(-sign))).add(x)]
    });
    Subspace::from_vectors(
        16 * m * m,
        picked.iter().map(|p| p.entries().to_vec()).collect(),
    )
}

/// Herm(can) / Antiherm(can) of gl(m, H): the real space of quaternion
/// (anti)hermitian matrices with the action X . H = X H + H conj(X)^T,
/// realified as S -> L_X S + S L_X^T on symmetric (antisymmetric) L-images.
pub fn quat_hermitian_square(glmh: &Rep, hermitian: bool) -> Result<Rep, RepError> {
    if glmh.flavor != Flavor::Quat {
        return Err(RepError::Inapplicable(
            "hermitian squares need a quaternionic representation".into(),
        ));
    }
    let m = glmh.fdim;
    let sign = if hermitian { 1 } else { -1 };
    let space = quat_sym_space(m, sign);
    let expected = if hermitian {
        m * (2 * m - 1)
    } else {
        m * (2 * m + 1)
    };
    if space.dim() != expected {
        return Err(RepError::Construction(format!(
            "hermitian square dimension {} != {}",
            space.dim(),
            expected
        )));
    }
    let size = 4 * m;
    let mats = glmh
        .mats
        .iter()
        .map(|x| {
            let xt = x.transpose();
            let mut rows = Vec::with_capacity(space.dim());
            for b in space.basis() {
                let s = Matrix::from_vec(size, size, b.clone());
                let img = (&x.mul_mat(&s)).add(&s.mul_mat(&xt));
                let coords = express_in_basis(&space, img.entries())
                    .ok_or_else(|| RepError::Construction("hermitian space not invariant".into()))?;
                rows.push(coords);
            }
            Ok(Matrix::from_rows(rows).transpose())
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    Ok(Rep {
        flavor: Flavor::Real,
        fdim: expected,
        mats,
    })
}

/// Herm(can_p) for a complex-matrix algebra acting on complex hermitian
/// p x p matrices by X . H = X H + H conj(X)^T; a real representation of
/// real dimension p^2.
pub fn complex_hermitian_square(alg: &Rep) -> Result<Rep, RepError> {
    if alg.flavor != Flavor::Complex {
        return Err(RepError::Inapplicable(
            "complex hermitian square needs a complex representation".into(),
        ));
    }
    let p = alg.fdim;
    // real basis of hermitian matrices
    let mut basis: Vec<Matrix> = Vec::with_capacity(p * p);
    for a in 0..p {
        let mut d = Matrix::zeros(p, p);
        d[(a, a)] = Scalar::one();
        basis.push(d);
    }
    for a in 0..p {
        for b in (a + 1)..p {
            let mut s = Matrix::zeros(p, p);
            s[(a, b)] = Scalar::one();
            s[(b, a)] = Scalar::one();
            basis.push(s);
            let mut t = Matrix::zeros(p, p);
            t[(a, b)] = Scalar::i();
            t[(b, a)] = -&Scalar::i();
            basis.push(t);
        }
    }
    let space = Subspace::from_vectors(
        2 * p * p,
        basis
            .iter()
            .map(|h| split_complex_vec(h.entries()))
            .collect(),
    );
    let mats = alg
        .mats
        .iter()
        .map(|x| {
            let xstar = x.conj().transpose();
            let mut rows = Vec::with_capacity(basis.len());
            for h in &basis {
                let img = (&x.mul_mat(h)).add(&h.mul_mat(&xstar));
                let coords = express_in_basis(&space, &split_complex_vec(img.entries()))
                    .ok_or_else(|| {
                        RepError::Construction("hermitian space not preserved".into())
                    })?;
                rows.push(coords);
            }
            Ok(Matrix::from_rows(rows).transpose())
        })
        .collect::<Result<Vec<_>, RepError>>()?;
    Ok(Rep {
        flavor: Flavor::Real,
        fdim: p * p,
        mats,
    })
}

/// Splits a complex vector into stacked (re, im) real coordinates.
fn split_complex_vec(v: &[Scalar]) -> Vec<Scalar> {
    let mut out = Vec::with_capacity(2 * v.len());
    for x in v {
        out.push(Scalar::new(x.re.clone(), num_rational::BigRational::from_integer(0.into())));
    }
    for x in v {
        out.push(Scalar::new(x.im.clone(), num_rational::BigRational::from_integer(0.into())));
    }
    out
}

// ---------------------------------------------------------------------------
// Real forms of complex representations.
// ---------------------------------------------------------------------------

/// Restricts a complex representation with a known rational real structure to
/// its fixed real points. `sigma_complex` maps v -> M conj(v); the fixed
/// space of the realified involution is the real form. Errors when sigma
/// squares to anything but +I or fails equivariance.
pub fn real_form_from_structure(rep: &Rep, sigma_m: &Matrix) -> Result<Rep, RepError> {
    if rep.flavor != Flavor::Complex {
        return Err(RepError::Inapplicable("real form of a non-complex rep".into()));
    }
    let m = rep.fdim;
    // sigma(v) = M conj(v); realified: Sigma = realify(M) . diag(I, -I).
    let mut conj = Matrix::zeros(2 * m, 2 * m);
    for k in 0..m {
        conj[(k, k)] = Scalar::one();
        conj[(m + k, m + k)] = Scalar::from_int(-1);
    }
    let sigma = super::realify_complex(sigma_m).mul_mat(&conj);
    let id = Matrix::identity(2 * m);
    if sigma.mul_mat(&sigma) != id {
        return Err(RepError::Construction("real structure does not square to I".into()));
    }
    for g in &rep.mats {
        let gr = super::realify_complex(g);
        if !sigma.comm(&gr).is_zero() {
            return Err(RepError::Construction(
                "real structure is not equivariant".into(),
            ));
        }
    }
    // Fixed space: ker(Sigma - I).
    let (_, fixed) = (&sigma).sub(&id).rank_nullspace();
    if fixed.dim() != m {
        return Err(RepError::Construction(format!(
            "real form dimension {} != {}",
            fixed.dim(),
            m
        )));
    }
    let mats = rep
        .mats
        .iter()
        .map(|g| restrict_to(&fixed, &super::realify_complex(g)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Rep {
        flavor: Flavor::Real,
        fdim: m,
        mats,
    })
}

/// Searches for a rational real structure commuting with a complex
/// representation: an antilinear involution sigma(v) = M conj(v) with
/// M conj(M) = I. Equivariance (M conj(g) = g M for every generator) is
/// C-linear in M, so the candidate space is one kernel computation; the
/// normalization is a bounded search over Gaussian-rational rescalings.
/// Returns None when no rational structure is found within budget (in
/// particular when the invariant structure is quaternionic).
pub fn find_real_structure(rep: &Rep) -> Option<Matrix> {
    let m = rep.fdim;
    // Unknown complex matrix M, equations M conj(g) - g M = 0 streamed
    // entrywise: coefficient of M_ik is conj(g)_kj, of M_kj is -g_ik.
    let mut solver = Solver::new(m * m);
    let mut row = vec![Scalar::zero(); m * m];
    for g in &rep.mats {
        let gc = g.conj();
        for i in 0..m {
            for j in 0..m {
                let mut touched: Vec<usize> = Vec::new();
                for k in 0..m {
                    let a = &gc[(k, j)];
                    if !a.is_zero() {
                        let idx = i * m + k;
                        row[idx] = (&row[idx]).add(a);
                        touched.push(idx);
                    }
                    let b = &g[(i, k)];
                    if !b.is_zero() {
                        let idx = k * m + j;
                        let t = (&row[idx]).sub(b);
                        row[idx] = t;
                        touched.push(idx);
                    }
                }
                if touched.iter().any(|&t| !row[t].is_zero()) {
                    solver.add_row(&row);
                }
                for t in touched {
                    row[t] = Scalar::zero();
                }
            }
        }
    }
    let kernel = solver.into_kernel();
    if kernel.is_empty() {
        return None;
    }
    // sigma_M squared is v -> M conj(M) v. Need M' = c M with
    // M' conj(M') = c conj(c) M conj(M) = I, i.e. |c|^2 s = 1 for
    // M conj(M) = s I with s > 0.
    let scalar_square = |mm: &Matrix| -> Option<Scalar> {
        let prod = mm.mul_mat(&mm.conj());
        let s = prod[(0, 0)].clone();
        if s.is_zero() {
            return None;
        }
        for i in 0..m {
            for j in 0..m {
                let expect = if i == j { s.clone() } else { Scalar::zero() };
                if prod[(i, j)] != expect {
                    return None;
                }
            }
        }
        Some(s)
    };
    let mut candidates: Vec<Matrix> = kernel
        .iter()
        .map(|v| Matrix::from_vec(m, m, v.clone()))
        .collect();
    let firsts: Vec<Matrix> = candidates.clone();
    for i in 0..firsts.len().min(4) {
        for j in (i + 1)..firsts.len().min(4) {
            candidates.push((&firsts[i]).add(&firsts[j]));
            candidates.push((&firsts[i]).sub(&firsts[j]));
        }
    }
    for cand in &candidates {
        let Some(s) = scalar_square(cand) else { continue };
        // s must be real positive here (sigma^2 is +|.|: s = sigma^2 scalar)
        if !s.is_real() || s.re <= num_rational::BigRational::from_integer(0.into()) {
            continue;
        }
        // find Gaussian rational c with |c|^2 = 1/s: search small a/d + (b/d)i
        let target = s.re.recip();
        for d in 1i64..=24 {
            for a in 0..=24i64 {
                for b in 0..=a {
                    let norm = num_rational::BigRational::new(
                        (a * a + b * b).into(),
                        (d * d).into(),
                    );
                    if norm == target {
                        let c = Scalar::from_parts(a, d, b, d);
                        let normalized = cand.scale(&c);
                        debug_assert!(
                            normalized.mul_mat(&normalized.conj()) == Matrix::identity(m)
                        );
                        return Some(normalized);
                    }
                }
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::repkit::{gl_complex_basis, gl_real_basis, sl_quat_basis, sp1_right_basis};

    #[test]
    fn sym2_dimension_and_action() {
        let rep = Rep::real(3, gl_real_basis(3));
        let s = sym_power(&rep, 2).unwrap();
        assert_eq!(s.fdim, 6);
        let r = s.realify().unwrap();
        assert!(r.validate_closure().is_ok());
        assert_eq!(r.dim(), 9);
    }

    #[test]
    fn ext2_dimension() {
        let rep = Rep::real(5, gl_real_basis(5));
        let e = ext_power(&rep, 2).unwrap();
        assert_eq!(e.fdim, 10);
        assert!(e.realify().unwrap().validate_closure().is_ok());
    }

    #[test]
    fn sym_plus_ext_is_square() {
        for m in 2..=5 {
            let rep = Rep::real(m, gl_real_basis(m));
            let s = sym_power(&rep, 2).unwrap();
            let e = ext_power(&rep, 2).unwrap();
            assert_eq!(s.fdim + e.fdim, m * m);
        }
    }

    #[test]
    fn complex_sym2_of_gl_m_c() {
        let rep = Rep::complex(3, gl_complex_basis(3));
        let s = sym_power(&rep, 2).unwrap();
        assert_eq!(s.fdim, 6);
        let r = s.realify().unwrap();
        assert_eq!(r.space_dim(), 12);
        assert!(r.validate_closure().is_ok());
    }

    #[test]
    fn quaternionic_tensor_h1_h1() {
        // sl(1,H) x_H sp(1): R^4 with both side actions.
        let a = Rep::quat(1, sl_quat_basis(1));
        let b = Rep::quat(1, sp1_right_basis());
        let t = tensor_quat(&a, &b).unwrap();
        assert_eq!(t.fdim, 4);
        assert_eq!(t.flavor, Flavor::Real);
        let r = t.realify().unwrap();
        assert!(r.validate_closure().is_ok());
        assert_eq!(r.dim(), 6);
        // so(4) = sp(1) + sp(1); no invariant complex structure
        assert_eq!(
            crate::liecore::real_class(&r, 7),
            crate::liecore::RealClass::TotallyReal
        );
    }

    #[test]
    fn hermitian_squares_of_gl2h() {
        let glmh = Rep::quat(2, crate::repkit::gl_quat_basis(2));
        let h = quat_hermitian_square(&glmh, true).unwrap();
        assert_eq!(h.fdim, 6); // m(2m-1) = 6
        let a = quat_hermitian_square(&glmh, false).unwrap();
        assert_eq!(a.fdim, 10); // m(2m+1) = 10
        assert!(a.realify().unwrap().validate_closure().is_ok());
    }

    #[test]
    fn complex_hermitian_square_of_sl2c() {
        let alg = Rep::complex(2, crate::repkit::sl_complex_basis(2));
        let h = complex_hermitian_square(&alg).unwrap();
        assert_eq!(h.fdim, 4);
        let r = h.realify().unwrap();
        assert!(r.validate_closure().is_ok());
        assert_eq!(r.dim(), 6);
    }

    #[test]
    fn ext3_primitive_of_sp3() {
        let sp3 = Rep::complex(6, crate::repkit::sp_complex_basis(3));
        let om = crate::repkit::omega_std(3);
        let e = ext3_primitive(&sp3, &om).unwrap();
        assert_eq!(e.fdim, 14);
    }

    #[test]
    fn real_structure_of_complexified_real_rep() {
        // sl(2,R) viewed complex on C^2 has the obvious real structure M = I.
        let mats: Vec<Matrix> = crate::repkit::sl_real_basis(2);
        let rep = Rep::complex(2, mats);
        let m = find_real_structure(&rep).expect("real structure exists");
        let rf = real_form_from_structure(&rep, &m).unwrap();
        assert_eq!(rf.fdim, 2);
        assert!(rf.realify().unwrap().validate_closure().is_ok());
    }
}
