//! Structural analysis of linear Lie algebras: closure, center, derived
//! algebra, commutant, total-reducibility certification, invariant summands,
//! direct-product decomposition, real/complex classification and total
//! complexification.

mod realclass;
mod summands;

pub use realclass::{find_neg_square_direction, real_class, RealClass};
pub use summands::{
    decompose_direct_product, invariant_summands, is_totally_reducible, SplitBudget,
};

use crate::gint::Solver;
use crate::linrep::LinRep;
use crate::matrix::Matrix;
use crate::poly;
use crate::scalar::Scalar;
use crate::subspace::{MatSpan, Subspace};
use num_rational::BigRational;
use num_traits::Zero;
use std::ops::{Add, Div, Mul, Sub};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LieError {
    #[error("algebra is not reductive: center + derived algebra do not span it")]
    NotReductive,
    #[error("representation is not totally reducible")]
    NotTotallyReducible,
    #[error("undetermined: {0}")]
    Undetermined(String),
}

/// Smallest bracket-closed span containing the seed matrices.
pub fn lie_closure(seed: &[Matrix]) -> LinRep {
    let n = seed.first().map(|m| m.rows()).unwrap_or(0);
    for m in seed {
        assert!(
            m.is_square() && m.rows() == n,
            "seed matrices must be square of equal size"
        );
    }
    let mut span = MatSpan::new(n, seed);
    loop {
        let basis = span.basis_matrices();
        let mut grew = false;
        let mut vectors: Vec<Vec<Scalar>> = basis.iter().map(|m| m.entries().to_vec()).collect();
        for i in 0..basis.len() {
            for j in (i + 1)..basis.len() {
                let br = basis[i].comm(&basis[j]);
                if !br.is_zero() && !span.contains(&br) {
                    vectors.push(br.into_vec());
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
        span = MatSpan::from_subspace(n, Subspace::from_vectors(n * n, vectors));
    }
    LinRep::new(n, span.basis_matrices(), None).expect("canonical basis is independent")
}

/// The center {X in h : [X, g] = 0 for all g in h}, as a subspace of
/// matrices (row-major vectorization in gl(n)).
pub fn center(h: &LinRep) -> Subspace {
    let n = h.space_dim();
    let d = h.dim();
    if d == 0 {
        return Subspace::zero(n * n);
    }
    // Unknowns: coordinates in the generator basis. One vector equation
    // [sum_a x_a g_a, g_b] = 0 per generator b.
    let brackets: Vec<Vec<Matrix>> = h
        .gens()
        .iter()
        .map(|ga| h.gens().iter().map(|gb| ga.comm(gb)).collect())
        .collect();
    let mut solver = Solver::new(d);
    let mut row = vec![Scalar::zero(); d];
    for b in 0..d {
        for e in 0..n * n {
            let mut nonzero = false;
            for (a, slot) in row.iter_mut().enumerate() {
                let v = &brackets[a][b].entries()[e];
                if !v.is_zero() {
                    nonzero = true;
                }
                *slot = v.clone();
            }
            if nonzero {
                solver.add_row(&row);
            }
        }
    }
    let coords = solver.into_kernel();
    let vectors: Vec<Vec<Scalar>> = coords
        .iter()
        .map(|c| combine_gens(h, c).into_vec())
        .collect();
    Subspace::from_vectors(n * n, vectors)
}

/// Linear combination of generators with the given coordinates.
pub fn combine_gens(h: &LinRep, coords: &[Scalar]) -> Matrix {
    let n = h.space_dim();
    let mut acc = Matrix::zeros(n, n);
    for (g, c) in h.gens().iter().zip(coords) {
        if !c.is_zero() {
            acc = (&acc).add(&g.scale(c));
        }
    }
    acc
}

/// Span of all brackets [h, h].
pub fn derived_span(h: &LinRep) -> MatSpan {
    let n = h.space_dim();
    let mut vectors = Vec::new();
    for i in 0..h.dim() {
        for j in (i + 1)..h.dim() {
            let br = h.gens()[i].comm(&h.gens()[j]);
            if !br.is_zero() {
                vectors.push(br.into_vec());
            }
        }
    }
    MatSpan::from_subspace(n, Subspace::from_vectors(n * n, vectors))
}

/// Center/semisimple split of a reductive algebra.
#[derive(Clone, Debug)]
pub struct ReductiveSplit {
    pub center: Subspace,
    pub semisimple: Subspace,
}

impl ReductiveSplit {
    pub fn semisimple_matrices(&self, n: usize) -> Vec<Matrix> {
        self.semisimple
            .basis()
            .iter()
            .map(|v| Matrix::from_vec(n, n, v.clone()))
            .collect()
    }

    pub fn center_matrices(&self, n: usize) -> Vec<Matrix> {
        self.center
            .basis()
            .iter()
            .map(|v| Matrix::from_vec(n, n, v.clone()))
            .collect()
    }
}

/// Iterated derived algebra plus center. `NotReductive` when center and
/// derived algebra do not span h, when the derived part fails Cartan's
/// semisimplicity criterion, or when a center element acts non-semisimply
/// (the hyperplane constructions need centers acting as scalar blocks).
pub fn derived_and_split(h: &LinRep) -> Result<ReductiveSplit, LieError> {
    let n = h.space_dim();
    let z = center(h);
    let mut s = derived_span(h);
    loop {
        let basis = s.basis_matrices();
        let rep = match LinRep::new(n, basis, None) {
            Ok(r) => r,
            Err(_) => return Err(LieError::NotReductive),
        };
        let next = derived_span(&rep);
        if next.dim() == s.dim() {
            break;
        }
        s = next;
    }
    let sum = z.sum(s.subspace()).expect("same ambient");
    if z.dim() + s.dim() != h.dim() || sum.dim() != h.dim() {
        return Err(LieError::NotReductive);
    }
    if s.dim() > 0 {
        let k = killing_form(n, &s.basis_matrices());
        if k.rank() != s.dim() {
            return Err(LieError::NotReductive);
        }
    }
    for v in z.basis() {
        let m = Matrix::from_vec(n, n, v.clone());
        let mp = poly::minimal_polynomial(&m);
        if mp.gcd(&mp.derivative()).degree() > 0 {
            return Err(LieError::NotReductive);
        }
    }
    Ok(ReductiveSplit {
        center: z,
        semisimple: s.subspace().clone(),
    })
}

/// The commutant {M in gl(n) : [M, g] = 0 for all g in h}. Always contains
/// the identity.
pub fn commutant(h: &LinRep) -> Subspace {
    commutant_of_matrices(h.space_dim(), h.gens())
}

pub fn commutant_of_matrices(n: usize, mats: &[Matrix]) -> Subspace {
    if mats.is_empty() {
        return Subspace::full(n * n);
    }
    // Unknown M (n x n); equations (M g - g M)_{ij} = 0 streamed per
    // generator and entry. Coefficient of M_{ik} is g_{kj}, of M_{kj} is
    // -g_{ik}.
    let mut solver = Solver::new(n * n);
    let mut row = vec![Scalar::zero(); n * n];
    for g in mats {
        for i in 0..n {
            for j in 0..n {
                let mut touched: Vec<usize> = Vec::new();
                for k in 0..n {
                    let a = &g[(k, j)];
                    if !a.is_zero() {
                        let idx = i * n + k;
                        row[idx] = (&row[idx]).add(a);
                        touched.push(idx);
                    }
                    let b = &g[(i, k)];
                    if !b.is_zero() {
                        let idx = k * n + j;
                        row[idx] = (&row[idx]).sub(b);
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
    let kern = solver.into_kernel();
    Subspace::from_vectors(n * n, kern)
}

/// Total complexification h tensor C realized as a real algebra on R^{2n}
/// with its distinguished complex structure.
pub fn complexify_alg(h: &LinRep) -> LinRep {
    let n = h.space_dim();
    let j = j_std(n);
    let mut gens = Vec::with_capacity(2 * h.dim());
    for g in h.gens() {
        let gr = realify_real_matrix(g);
        gens.push(j.mul_mat(&gr));
        gens.push(gr);
    }
    let span = MatSpan::new(2 * n, &gens);
    let mut out = LinRep::new(2 * n, span.basis_matrices(), Some(j))
        .expect("complexified basis independent");
    out.meta = h.meta.clone();
    out
}

/// Standard complex structure on R^{2n} = C^n with stacked (x, y) coordinates.
pub fn j_std(n: usize) -> Matrix {
    let mut j = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        j[(k, n + k)] = Scalar::from_int(-1);
        j[(n + k, k)] = Scalar::one();
    }
    j
}

/// diag(g, g): the realification of a real matrix acting on C^n = R^{2n}.
pub fn realify_real_matrix(g: &Matrix) -> Matrix {
    Matrix::block_diag(&[g, g])
}

/// Report for the algorithmic clauses of the type III side condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemisimpleActionReport {
    /// Restriction of the representation to the semisimple part is reducible.
    pub clause_i: bool,
    /// The semisimple part is not a complex algebra but its action admits an
    /// invariant complex structure.
    pub clause_ii: bool,
}

/// Restricts the action to the semisimple factor and reports the two
/// algorithmically decidable clauses. The tensor-product clause is catalog
/// metadata, never decided here.
pub fn property_s_partial(h: &LinRep, seed: u64) -> Result<SemisimpleActionReport, LieError> {
    let split = derived_and_split(h)?;
    let n = h.space_dim();
    let s_rep = LinRep::new(n, split.semisimple_matrices(n), None)
        .expect("semisimple basis independent");
    let summands = invariant_summands(&s_rep, &SplitBudget::seeded(seed))?;
    let clause_i = summands.len() > 1;
    let clause_ii = real_class(&s_rep, seed) == RealClass::RealComplex;
    Ok(SemisimpleActionReport { clause_i, clause_ii })
}

/// Exact signature (positive, negative, zero inertia) of a rational
/// symmetric matrix, by congruence diagonalization.
pub fn signature(sym: &Matrix) -> (usize, usize, usize) {
    assert!(sym.is_square());
    let n = sym.rows();
    let mut m = sym.clone();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    let mut active: Vec<usize> = (0..n).collect();
    while !active.is_empty() {
        let diag_idx = active.iter().copied().find(|&i| !m[(i, i)].is_zero());
        let i = match diag_idx {
            Some(i) => i,
            None => {
                let mut found = None;
                'outer: for &i in &active {
                    for &j in &active {
                        if i != j && !m[(i, j)].is_zero() {
                            found = Some((i, j));
                            break 'outer;
                        }
                    }
                }
                let Some((i, j)) = found else {
                    zero += active.len();
                    break;
                };
                // congruence v_i := v_i + v_j creates a nonzero diagonal
                for k in 0..n {
                    let t = m[(j, k)].clone();
                    m[(i, k)] = (&m[(i, k)]).add(&t);
                }
                for k in 0..n {
                    let t = m[(k, j)].clone();
                    m[(k, i)] = (&m[(k, i)]).add(&t);
                }
                i
            }
        };
        let d = m[(i, i)].clone();
        debug_assert!(d.is_real());
        if d.re > BigRational::zero() {
            pos += 1;
        } else {
            neg += 1;
        }
        let others: Vec<usize> = active.iter().copied().filter(|&k| k != i).collect();
        for &r in &others {
            if m[(r, i)].is_zero() {
                continue;
            }
            let f = (&m[(r, i)]).div(&d);
            for &c in &others {
                let t = (&f).mul(&m[(i, c)]);
                m[(r, c)] = (&m[(r, c)]).sub(&t);
            }
            m[(r, i)] = Scalar::zero();
            m[(i, r)] = Scalar::zero();
        }
        active.retain(|&k| k != i);
    }
    (pos, neg, zero)
}

/// Killing form tr(ad X ad Y) of the algebra spanned by `mats`, expressed in
/// that basis. The span must be bracket-closed.
pub fn killing_form(n: usize, mats: &[Matrix]) -> Matrix {
    let d = mats.len();
    let span = MatSpan::new(n, mats);
    let mut ads: Vec<Matrix> = Vec::with_capacity(d);
    for x in mats {
        let mut ad = Matrix::zeros(d, d);
        for (b, y) in mats.iter().enumerate() {
            let br = x.comm(y);
            let coords = span
                .coordinates(&br)
                .expect("algebra must be bracket-closed");
            for (a, c) in coords.iter().enumerate() {
                ad[(a, b)] = c.clone();
            }
        }
        ads.push(ad);
    }
    Matrix::from_fn(d, d, |i, j| ads[i].mul_mat(&ads[j]).trace())
}

/// Minimal polynomial re-export point used by neighbors.
pub fn minimal_polynomial(m: &Matrix) -> poly::Poly {
    poly::minimal_polynomial(m)
}

#[cfg(test)]
pub(crate) mod testalg {
    use super::*;

    pub fn gl(n: usize) -> LinRep {
        let mut gens = Vec::new();
        for i in 0..n {
            for j in 0..n {
                gens.push(Matrix::elem(n, i, j));
            }
        }
        LinRep::new(n, gens, None).unwrap()
    }

    pub fn sl2() -> LinRep {
        let h = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let e = Matrix::elem(2, 0, 1);
        let f = Matrix::elem(2, 1, 0);
        LinRep::new(2, vec![h, e, f], None).unwrap()
    }

    pub fn so3() -> LinRep {
        let a = Matrix::from_i64(&[&[0, -1, 0], &[1, 0, 0], &[0, 0, 0]]);
        let b = Matrix::from_i64(&[&[0, 0, -1], &[0, 0, 0], &[1, 0, 0]]);
        let c = Matrix::from_i64(&[&[0, 0, 0], &[0, 0, -1], &[0, 1, 0]]);
        LinRep::new(3, vec![a, b, c], None).unwrap()
    }

    /// u(1) = span{J} on R^2.
    pub fn u1() -> LinRep {
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        LinRep::new(2, vec![j.clone()], Some(j)).unwrap()
    }

    /// {diag(u, -u)} on R^2.
    pub fn diag_trace_free() -> LinRep {
        LinRep::new(2, vec![Matrix::from_i64(&[&[1, 0], &[0, -1]])], None).unwrap()
    }

    /// gl(1, C) realified: {aI + bJ} on R^2.
    pub fn gl1c() -> LinRep {
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        LinRep::new(2, vec![Matrix::identity(2), j.clone()], Some(j)).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::testalg::*;
    use super::*;

    #[test]
    fn closure_spec_examples() {
        let r = lie_closure(&[Matrix::elem(2, 0, 1)]);
        assert_eq!(r.dim(), 1);
        let r = lie_closure(&[Matrix::elem(2, 0, 1), Matrix::elem(2, 1, 0)]);
        assert_eq!(r.dim(), 3);
        let r = lie_closure(so3().gens());
        assert_eq!(r.dim(), 3);
    }

    #[test]
    fn center_spec_examples() {
        assert_eq!(center(&gl(2)).dim(), 1);
        assert_eq!(center(&sl2()).dim(), 0);
        assert_eq!(center(&diag_trace_free()).dim(), 1);
    }

    #[test]
    fn derived_split_spec_examples() {
        let s = derived_and_split(&gl(2)).unwrap();
        assert_eq!((s.center.dim(), s.semisimple.dim()), (1, 3));
        let s = derived_and_split(&sl2()).unwrap();
        assert_eq!((s.center.dim(), s.semisimple.dim()), (0, 3));
        let nil = LinRep::new(2, vec![Matrix::elem(2, 0, 1)], None).unwrap();
        assert!(matches!(derived_and_split(&nil), Err(LieError::NotReductive)));
    }

    #[test]
    fn commutant_spec_examples() {
        let zero = LinRep::null_algebra(2);
        assert_eq!(commutant(&zero).dim(), 4);
        assert_eq!(commutant(&sl2()).dim(), 1);
    }

    #[test]
    fn complexification_of_sl2_is_six_dimensional() {
        let c = complexify_alg(&sl2());
        assert_eq!(c.space_dim(), 4);
        assert_eq!(c.dim(), 6);
        assert!(c.validate_closure().is_ok());
    }

    #[test]
    fn signature_basics() {
        let m = Matrix::from_i64(&[&[2, 0, 0], &[0, -3, 0], &[0, 0, 0]]);
        assert_eq!(signature(&m), (1, 1, 1));
        let h = Matrix::from_i64(&[&[0, 1], &[1, 0]]);
        assert_eq!(signature(&h), (1, 1, 0));
    }

    #[test]
    fn killing_form_signatures() {
        let k = killing_form(3, so3().gens());
        assert_eq!(signature(&k), (0, 3, 0));
        let k = killing_form(2, sl2().gens());
        assert_eq!(signature(&k), (2, 1, 0));
    }
}
