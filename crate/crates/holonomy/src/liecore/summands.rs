//! Invariant summands and direct-product decomposition.
//!
//! Total reducibility is decided exactly first: a module over a Lie algebra
//! is semisimple iff it is semisimple over the solvable radical, which for a
//! matrix algebra means the radical acts as a commuting family of matrices
//! with square-free minimal polynomials. The radical is the Killing-form
//! orthogonal of the derived algebra (Cartan's criterion), so the whole test
//! is linear algebra plus gcds.
//!
//! Once the module is known semisimple, every rational invariant splitting is
//! visible in the commutant: kernels of polynomial factors of commutant
//! elements, with equivariant projections supplying complements where a
//! nilpotent commutant element only exposes one side. Pieces are certified
//! atomic through the structure of their commutant (scalars, a field with
//! negative discriminant, or a definite quaternion algebra); anything the
//! bounded factorization cannot certify comes back `Undetermined` instead of
//! a guess.

use super::{commutant_of_matrices, derived_span, LieError};
use crate::gint::Solver;
use crate::linrep::{express_in_basis, LinRep};
use crate::matrix::Matrix;
use crate::poly::{self, Factorization, Poly};
use crate::scalar::Scalar;
use crate::subspace::{MatSpan, Subspace};
use num_rational::BigRational;
use num_traits::Signed;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use std::ops::{Add, Mul};

/// Retry budget and seed for the randomized splitting attempts. All
/// randomness flows from the seed, so runs are reproducible.
#[derive(Clone, Debug)]
pub struct SplitBudget {
    pub seed: u64,
    pub retries: usize,
}

impl SplitBudget {
    pub fn seeded(seed: u64) -> Self {
        SplitBudget { seed, retries: 8 }
    }
}

/// Exact total-reducibility test. Returns the offending radical behavior as
/// `false`; never guesses.
pub fn is_totally_reducible(h: &LinRep) -> bool {
    radical_obstruction(h).is_none()
}

/// None when totally reducible; otherwise a human-readable reason.
///
/// The radical of a faithful linear Lie algebra is the orthogonal of the
/// derived algebra under the representation trace form tr(x y): the radical
/// is always trace-orthogonal to brackets, and the trace form of a faithful
/// representation is nondegenerate on any semisimple part, so nothing else
/// survives. The module is then semisimple iff that radical acts as a
/// commuting family with square-free minimal polynomials.
fn radical_obstruction(h: &LinRep) -> Option<String> {
    let d = h.dim();
    if d == 0 {
        return None;
    }
    let der = derived_span(h);
    let mut solver = Solver::new(d);
    let mut row = vec![Scalar::zero(); d];
    for y in der.basis_matrices() {
        let mut nonzero = false;
        for (a, slot) in row.iter_mut().enumerate() {
            let t = trace_of_product(&h.gens()[a], &y);
            if !t.is_zero() {
                nonzero = true;
            }
            *slot = t;
        }
        if nonzero {
            solver.add_row(&row);
        }
    }
    let rad_coords = solver.into_kernel();
    let rad_mats: Vec<Matrix> = rad_coords
        .iter()
        .map(|c| super::combine_gens(h, c))
        .collect();
    // Semisimple action of the solvable radical: commuting matrices with
    // square-free minimal polynomials.
    for (i, x) in rad_mats.iter().enumerate() {
        for y in rad_mats.iter().skip(i + 1) {
            if !x.comm(y).is_zero() {
                return Some("radical acts non-commutatively".to_string());
            }
        }
    }
    for x in &rad_mats {
        let m = poly::minimal_polynomial(x);
        let mg = m.gcd(&m.derivative());
        if mg.degree() > 0 {
            return Some("radical element acts non-semisimply".to_string());
        }
    }
    None
}

/// Splitting engine state for one run.
struct Splitter<'a> {
    h: &'a LinRep,
    rng: ChaCha8Rng,
    retries: usize,
}

/// Finest rational invariant decomposition of the space. Errors:
/// `NotTotallyReducible` (certified via the radical) or `Undetermined` when a
/// piece can neither be split rationally nor certified irreducible over R.
pub fn invariant_summands(h: &LinRep, budget: &SplitBudget) -> Result<Vec<Subspace>, LieError> {
    let n = h.space_dim();
    if n == 0 {
        return Ok(Vec::new());
    }
    if let Some(_reason) = radical_obstruction(h) {
        return Err(LieError::NotTotallyReducible);
    }
    let mut splitter = Splitter {
        h,
        rng: ChaCha8Rng::seed_from_u64(budget.seed),
        retries: budget.retries,
    };
    let mut done: Vec<Subspace> = Vec::new();
    let mut queue = vec![Subspace::full(n)];
    while let Some(piece) = queue.pop() {
        match splitter.split_once(&piece)? {
            Some(parts) => queue.extend(parts),
            None => done.push(piece),
        }
    }
    // Canonical order: by pivot column of the first basis vector.
    done.sort_by_key(|s| {
        s.basis()
            .first()
            .and_then(|v| v.iter().position(|x| !x.is_zero()))
            .unwrap_or(usize::MAX)
    });
    Ok(done)
}

impl<'a> Splitter<'a> {
    /// Tries to split one invariant subspace; Ok(None) = certified atomic.
    fn split_once(&mut self, w: &Subspace) -> Result<Option<Vec<Subspace>>, LieError> {
        let k = w.dim();
        if k == 1 {
            return Ok(None);
        }
        let restricted = self
            .h
            .restricted_to(w.basis())
            .expect("invariant subspace restriction");
        let comm = commutant_of_matrices(k, restricted.gens());
        let cdim = comm.dim();
        if cdim == 1 {
            // Commutant is scalars: absolutely irreducible.
            return Ok(None);
        }
        let cbasis: Vec<Matrix> = comm
            .basis()
            .iter()
            .map(|v| Matrix::from_vec(k, k, v.clone()))
            .collect();

        // Candidate commutant elements: basis, pairwise sums, seeded random
        // small combinations.
        let mut candidates: Vec<Matrix> = cbasis.clone();
        for i in 0..cbasis.len() {
            for j in (i + 1)..cbasis.len() {
                candidates.push((&cbasis[i]).add(&cbasis[j]));
            }
        }
        for _ in 0..self.retries {
            let mut acc = Matrix::zeros(k, k);
            for b in &cbasis {
                let c = Scalar::from_int(self.rng.gen_range(-3i64..=3));
                if !c.is_zero() {
                    acc = (&acc).add(&b.scale(&c));
                }
            }
            candidates.push(acc);
        }

        let mut saw_unknown = false;
        for t in &candidates {
            if t.is_zero() {
                continue;
            }
            let m = poly::minimal_polynomial(t);
            if m.degree() == 1 {
                continue; // scalar
            }
            match self.split_by_minpoly(w, &restricted, t, &m)? {
                Some(parts) => return Ok(Some(parts)),
                None => {}
            }
            if matches!(poly::factor_squarefree(&squarefree_part(&m)), Factorization::Unknown) {
                saw_unknown = true;
            }
        }

        // No splitting element found. Certify atomicity or give up honestly.
        if saw_unknown {
            return Err(LieError::Undetermined(
                "commutant minimal polynomial too hard to factor".into(),
            ));
        }
        self.certify_atomic(&restricted, &comm, &cbasis)
            .map(|()| None)
    }

    /// Splits W along kernels of coprime factors of minpoly(T), or along a
    /// nilpotent kernel plus an equivariant complement.
    fn split_by_minpoly(
        &mut self,
        w: &Subspace,
        restricted: &LinRep,
        t: &Matrix,
        m: &Poly,
    ) -> Result<Option<Vec<Subspace>>, LieError> {
        let sf = poly::squarefree_decomposition(m);
        // Coprime power pieces m = prod p_i^{e_i}.
        let mut coprime_parts: Vec<Poly> = Vec::new();
        for (p, e) in &sf {
            let mut q = Poly::one();
            for _ in 0..*e {
                q = q.mul(p);
            }
            coprime_parts.push(q);
        }
        // Refine square-free parts further over Q when possible.
        let mut refined: Vec<Poly> = Vec::new();
        for part in &coprime_parts {
            let sfp = squarefree_part(part);
            if sfp.degree() < part.degree() {
                refined.push(part.clone());
                continue;
            }
            match poly::factor_squarefree(part) {
                Factorization::Split(fs) => refined.extend(fs),
                _ => refined.push(part.clone()),
            }
        }
        if refined.len() > 1 {
            let mut parts = Vec::new();
            for f in &refined {
                let ft = f.eval_matrix(t);
                let kern = kernel_in_ambient(w, &ft);
                if kern.dim() == 0 || kern.dim() == w.dim() {
                    return Ok(None); // degenerate; try other candidates
                }
                parts.push(kern);
            }
            let total: usize = parts.iter().map(|p| p.dim()).sum();
            if total == w.dim() {
                return Ok(Some(parts));
            }
            return Ok(None);
        }
        // Single part: m = p^e. If e > 1, ker p(T) is proper invariant; get a
        // complement by solving for an equivariant projection.
        if let Some((p, e)) = sf.first() {
            if *e > 1 {
                let pt = p.eval_matrix(t);
                let sub = kernel_in_ambient(w, &pt);
                if sub.dim() > 0 && sub.dim() < w.dim() {
                    let complement = self.equivariant_complement(w, restricted, &sub)?;
                    return Ok(Some(vec![sub, complement]));
                }
            }
        }
        Ok(None)
    }

    /// Solves for an h-equivariant projection of W onto the invariant
    /// subspace `sub` (ambient coordinates); its kernel is the invariant
    /// complement. Non-existence would certify non-total-reducibility, which
    /// the radical test has already excluded.
    fn equivariant_complement(
        &self,
        w: &Subspace,
        restricted: &LinRep,
        sub: &Subspace,
    ) -> Result<Subspace, LieError> {
        let k = w.dim();
        let sub_in_w: Vec<Vec<Scalar>> = sub
            .basis()
            .iter()
            .map(|v| express_in_basis(w, v).expect("sub inside W"))
            .collect();
        let target = Subspace::from_vectors(k, sub_in_w.clone());
        // P ranges over the commutant of the restricted action.
        let comm = commutant_of_matrices(k, restricted.gens());
        let cdim = comm.dim();
        if cdim == 0 {
            return Err(LieError::NotTotallyReducible);
        }
        let cmats: Vec<Matrix> = comm
            .basis()
            .iter()
            .map(|v| Matrix::from_vec(k, k, v.clone()))
            .collect();
        // Unknowns: coefficients x_c plus one homogenizing lambda.
        // Constraints: (sum_c x_c C_c) u = lambda u for sub basis u, and
        // (sum_c x_c C_c) e_i reduces to zero modulo sub.
        let mut sys = Solver::new(cdim + 1);
        let mut srow = vec![Scalar::zero(); cdim + 1];
        for u in &sub_in_w {
            let imgs: Vec<Vec<Scalar>> = cmats.iter().map(|c| c.mul_vec(u)).collect();
            for coord in 0..k {
                let mut nonzero = false;
                for (c, img) in imgs.iter().enumerate() {
                    srow[c] = img[coord].clone();
                    if !srow[c].is_zero() {
                        nonzero = true;
                    }
                }
                srow[cdim] = -&u[coord];
                if nonzero || !srow[cdim].is_zero() {
                    sys.add_row(&srow);
                }
                for v in srow.iter_mut() {
                    *v = Scalar::zero();
                }
            }
        }
        for i in 0..k {
            let ei: Vec<Scalar> = (0..k)
                .map(|j| if i == j { Scalar::one() } else { Scalar::zero() })
                .collect();
            let residues: Vec<Vec<Scalar>> = cmats
                .iter()
                .map(|c| target.reduce(&c.mul_vec(&ei)))
                .collect();
            for coord in 0..k {
                let mut nonzero = false;
                for (c, res) in residues.iter().enumerate() {
                    srow[c] = res[coord].clone();
                    if !srow[c].is_zero() {
                        nonzero = true;
                    }
                }
                if nonzero {
                    sys.add_row(&srow);
                }
                for v in srow.iter_mut() {
                    *v = Scalar::zero();
                }
            }
        }
        let sols = sys.into_kernel();
        let Some(sol) = sols.iter().find(|v| !v[cdim].is_zero()) else {
            return Err(LieError::NotTotallyReducible);
        };
        let lam_inv = sol[cdim].inv();
        let mut p = Matrix::zeros(k, k);
        for (c, coeff) in sol[..cdim].iter().enumerate() {
            if !coeff.is_zero() {
                p = (&p).add(&cmats[c].scale(&coeff.mul(&lam_inv)));
            }
        }
        let (_, ker) = p.rank_nullspace();
        let lifted: Vec<Vec<Scalar>> = ker
            .basis()
            .iter()
            .map(|coords| lift_to_ambient(w, coords))
            .collect();
        Ok(Subspace::from_vectors(w.ambient_dim(), lifted))
    }

    /// Certifies that a piece with commutant dimension > 1 is rationally
    /// atomic and R-irreducible; errors `Undetermined` otherwise.
    fn certify_atomic(
        &self,
        _restricted: &LinRep,
        comm: &Subspace,
        cbasis: &[Matrix],
    ) -> Result<(), LieError> {
        let cdim = comm.dim();
        // Commutative commutant: look for a primitive element.
        let commutative = cbasis
            .iter()
            .enumerate()
            .all(|(i, a)| cbasis.iter().skip(i + 1).all(|b| a.comm(b).is_zero()));
        if commutative {
            for t in cbasis {
                let m = poly::minimal_polynomial(t);
                if m.degree() == cdim {
                    // Q[T] = commutant; field iff minpoly irreducible.
                    match poly::factor_squarefree(&m) {
                        Factorization::Irreducible => {
                            // Field. R-irreducible iff the field embeds in C
                            // with a single place: degree 2 with negative
                            // discriminant (degree 1 is the scalar case).
                            if m.degree() == 2 {
                                let disc = quad_disc(&m);
                                if disc.is_negative() {
                                    return Ok(()); // commutant is C
                                }
                            }
                            return Err(LieError::Undetermined(
                                "rationally atomic but splits over R".into(),
                            ));
                        }
                        Factorization::Split(_) => {
                            // Should have split earlier; treat as undetermined.
                            return Err(LieError::Undetermined(
                                "commutant field certificate failed".into(),
                            ));
                        }
                        Factorization::Unknown => {
                            return Err(LieError::Undetermined(
                                "commutant minimal polynomial too hard to factor".into(),
                            ));
                        }
                    }
                }
            }
            return Err(LieError::Undetermined(
                "no primitive element found in commutative commutant".into(),
            ));
        }
        // Noncommutative: quaternion certificate. The commutant of an
        // R-irreducible piece is a definite quaternion algebra: dimension 4,
        // scalar center, representation trace form of signature (1, 3).
        if cdim == 4 {
            let n2 = cbasis[0].rows();
            let zdim = commutant_center_dim(n2, cbasis);
            if zdim == 1 {
                let gram = Matrix::from_fn(4, 4, |i, j| cbasis[i].mul_mat(&cbasis[j]).trace());
                let (pos, neg, zero) = super::signature(&gram);
                if (pos, neg, zero) == (1, 3, 0) {
                    return Ok(()); // commutant is the definite quaternions
                }
                if (pos, neg, zero) == (3, 1, 0) {
                    return Err(LieError::Undetermined(
                        "rationally atomic but splits over R (split quaternion commutant)"
                            .into(),
                    ));
                }
            }
        }
        Err(LieError::Undetermined(
            "commutant structure not certified".into(),
        ))
    }
}

fn commutant_center_dim(n: usize, cbasis: &[Matrix]) -> usize {
    // Elements of the span commuting with every basis element.
    let span = MatSpan::new(n, cbasis);
    let mut solver = Solver::new(cbasis.len());
    let mut row = vec![Scalar::zero(); cbasis.len()];
    for b in cbasis {
        let brackets: Vec<Matrix> = cbasis.iter().map(|a| a.comm(b)).collect();
        for e in 0..n * n {
            let mut nonzero = false;
            for (a, slot) in row.iter_mut().enumerate() {
                *slot = brackets[a].entries()[e].clone();
                if !slot.is_zero() {
                    nonzero = true;
                }
            }
            if nonzero {
                solver.add_row(&row);
            }
        }
    }
    let _ = span;
    solver.into_kernel().len()
}


/// tr(A B) without forming the product.
fn trace_of_product(a: &Matrix, b: &Matrix) -> Scalar {
    let n = a.rows();
    let mut acc = Scalar::zero();
    for i in 0..n {
        for j in 0..n {
            let x = &a[(i, j)];
            if x.is_zero() {
                continue;
            }
            let y = &b[(j, i)];
            if !y.is_zero() {
                acc += &x.mul(y);
            }
        }
    }
    acc
}

fn squarefree_part(m: &Poly) -> Poly {
    let g = m.gcd(&m.derivative());
    if g.degree() == 0 {
        m.monic()
    } else {
        m.div_rem(&g).0.monic()
    }
}

fn quad_disc(m: &Poly) -> BigRational {
    // x^2 + bx + c -> b^2 - 4c
    let b = &m.coeffs[1];
    let c = &m.coeffs[0];
    b * b - BigRational::from_integer(4.into()) * c
}

/// Kernel of `ft` acting in W-coordinates, lifted back to ambient.
fn kernel_in_ambient(w: &Subspace, ft: &Matrix) -> Subspace {
    let (_, ker) = ft.rank_nullspace();
    let lifted: Vec<Vec<Scalar>> = ker
        .basis()
        .iter()
        .map(|coords| lift_to_ambient(w, coords))
        .collect();
    Subspace::from_vectors(w.ambient_dim(), lifted)
}

fn lift_to_ambient(w: &Subspace, coords: &[Scalar]) -> Vec<Scalar> {
    let mut v = vec![Scalar::zero(); w.ambient_dim()];
    for (c, b) in coords.iter().zip(w.basis()) {
        if c.is_zero() {
            continue;
        }
        for (j, x) in b.iter().enumerate() {
            if !x.is_zero() {
                let t = c.mul(x);
                v[j] = (&v[j]).add(&t);
            }
        }
    }
    v
}

/// The finest direct-product factorization of a totally reducible linear Lie
/// algebra: bipartitions of the invariant summands are accepted when
/// dim h = dim proj_1(h) + dim proj_2(h), recursively.
pub fn decompose_direct_product(
    h: &LinRep,
    budget: &SplitBudget,
) -> Result<Vec<LinRep>, LieError> {
    let summands = invariant_summands(h, budget)?;
    let factors = decompose_rec(h, &summands)?;
    Ok(factors)
}

fn decompose_rec(h: &LinRep, summands: &[Subspace]) -> Result<Vec<LinRep>, LieError> {
    let r = summands.len();
    if r <= 1 {
        return Ok(vec![h.clone()]);
    }
    // Enumerate bipartitions by subsets containing summand 0 (complement
    // symmetry), smallest subsets first for determinism.
    // Subsets containing summand 0, excluding the full set.
    let masks: Vec<u64> = (0..((1u64 << (r - 1)) - 1)).map(|m| (m << 1) | 1).collect();
    for mask in masks {
        let (left, right): (Vec<usize>, Vec<usize>) =
            (0..r).partition(|i| mask >> i & 1 == 1);
        debug_assert!(!right.is_empty());
        let w1 = union_subspace(summands, &left);
        let w2 = union_subspace(summands, &right);
        let h1 = h.restricted_to(w1.basis()).expect("invariant");
        let h2 = h.restricted_to(w2.basis()).expect("invariant");
        if h1.dim() + h2.dim() == h.dim() {
            let sub1: Vec<Subspace> = left
                .iter()
                .map(|&i| reexpress(&w1, &summands[i]))
                .collect();
            let sub2: Vec<Subspace> = right
                .iter()
                .map(|&i| reexpress(&w2, &summands[i]))
                .collect();
            let mut out = decompose_rec(&h1, &sub1)?;
            out.extend(decompose_rec(&h2, &sub2)?);
            return Ok(out);
        }
    }
    Ok(vec![h.clone()])
}

fn union_subspace(summands: &[Subspace], idx: &[usize]) -> Subspace {
    let ambient = summands[0].ambient_dim();
    let mut vectors = Vec::new();
    for &i in idx {
        vectors.extend(summands[i].basis().iter().cloned());
    }
    Subspace::from_vectors(ambient, vectors)
}

/// Expresses a summand (ambient coordinates) in the coordinates of the
/// enclosing subspace `w`.
fn reexpress(w: &Subspace, s: &Subspace) -> Subspace {
    let vectors: Vec<Vec<Scalar>> = s
        .basis()
        .iter()
        .map(|v| express_in_basis(w, v).expect("summand inside W"))
        .collect();
    Subspace::from_vectors(w.dim(), vectors)
}

#[cfg(test)]
mod tests {
    use super::super::testalg::*;
    use super::*;

    fn budget() -> SplitBudget {
        SplitBudget::seeded(7)
    }

    #[test]
    fn block_diag_splits() {
        // gl(2) + gl(3) block diagonal on R^5.
        let mut gens = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                gens.push(Matrix::elem(5, i, j));
            }
        }
        for i in 2..5 {
            for j in 2..5 {
                gens.push(Matrix::elem(5, i, j));
            }
        }
        let h = LinRep::new(5, gens, None).unwrap();
        let s = invariant_summands(&h, &budget()).unwrap();
        let mut dims: Vec<usize> = s.iter().map(|x| x.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![2, 3]);
        let factors = decompose_direct_product(&h, &budget()).unwrap();
        assert_eq!(factors.len(), 2);
    }

    #[test]
    fn nilpotent_is_not_totally_reducible() {
        let h = LinRep::new(2, vec![Matrix::elem(2, 0, 1)], None).unwrap();
        assert!(!is_totally_reducible(&h));
        assert_eq!(
            invariant_summands(&h, &budget()),
            Err(LieError::NotTotallyReducible)
        );
    }

    #[test]
    fn diag_algebra_splits_into_lines() {
        let h = diag_trace_free();
        let s = invariant_summands(&h, &budget()).unwrap();
        assert_eq!(s.len(), 2);
        // but it is an indecomposable product (1 != 1 + 1)
        let factors = decompose_direct_product(&h, &budget()).unwrap();
        assert_eq!(factors.len(), 1);
    }

    #[test]
    fn zero_algebra_decomposes_into_null_factors() {
        let h = LinRep::null_algebra(2);
        let s = invariant_summands(&h, &budget()).unwrap();
        assert_eq!(s.len(), 2);
        let factors = decompose_direct_product(&h, &budget()).unwrap();
        assert_eq!(factors.len(), 2);
        assert!(factors.iter().all(|f| f.dim() == 0 && f.space_dim() == 1));
    }

    #[test]
    fn u1_is_atomic() {
        let s = invariant_summands(&u1(), &budget()).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn sl2_canonical_is_atomic() {
        let s = invariant_summands(&sl2(), &budget()).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn so3_is_atomic() {
        let s = invariant_summands(&so3(), &budget()).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn isotypic_double_splits() {
        // sl(2) acting diagonally on R^2 + R^2: commutant is M_2(Q).
        let mut gens = Vec::new();
        for g in sl2().gens() {
            gens.push(Matrix::block_diag(&[g, g]));
        }
        let h = LinRep::new(4, gens, None).unwrap();
        let s = invariant_summands(&h, &budget()).unwrap();
        assert_eq!(s.len(), 2);
        assert!(s.iter().all(|x| x.dim() == 2));
        // decomposable? dim h = 3, projections are 3 each: 3 != 6: indecomposable.
        let factors = decompose_direct_product(&h, &budget()).unwrap();
        assert_eq!(factors.len(), 1);
    }

    #[test]
    fn quaternionic_commutant_certified_atomic() {
        // sl(1, H): pure quaternion left multiplications on R^4.
        let i = Matrix::from_i64(&[
            &[0, -1, 0, 0],
            &[1, 0, 0, 0],
            &[0, 0, 0, -1],
            &[0, 0, 1, 0],
        ]);
        let j = Matrix::from_i64(&[
            &[0, 0, -1, 0],
            &[0, 0, 0, 1],
            &[1, 0, 0, 0],
            &[0, -1, 0, 0],
        ]);
        let k = i.mul_mat(&j);
        let h = LinRep::new(4, vec![i, j, k], None).unwrap();
        assert!(h.validate_closure().is_ok());
        let s = invariant_summands(&h, &budget()).unwrap();
        assert_eq!(s.len(), 1);
    }

    #[test]
    fn conjugated_block_structure_found() {
        // Conjugate a block split so the summands are not coordinate planes.
        let mut gens = Vec::new();
        for g in sl2().gens() {
            gens.push(Matrix::block_diag(&[g, &Matrix::zeros(1, 1)]));
        }
        let h = LinRep::new(3, gens, None).unwrap();
        let g = Matrix::from_i64(&[&[1, 1, 0], &[0, 1, 2], &[1, 0, 1]]);
        let hc = h.conjugated(&g).unwrap();
        let s = invariant_summands(&hc, &budget()).unwrap();
        let mut dims: Vec<usize> = s.iter().map(|x| x.dim()).collect();
        dims.sort();
        assert_eq!(dims, vec![1, 2]);
        let factors = decompose_direct_product(&hc, &budget()).unwrap();
        assert_eq!(factors.len(), 2);
    }
}
