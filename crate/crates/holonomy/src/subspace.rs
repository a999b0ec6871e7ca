//! Canonical linear subspaces.
//!
//! A `Subspace` stores the reduced row-echelon basis of a subspace of Q(i)^n,
//! so equality of subspaces is literal equality of basis grids. Subspaces of
//! matrices are handled by row-major vectorization (see `MatSpan`).

use crate::gint;
use crate::matrix::Matrix;
use crate::scalar::Scalar;
use std::ops::Mul;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SubspaceError {
    #[error("ambient dimension mismatch: {0} vs {1}")]
    AmbientMismatch(usize, usize),
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    ambient: usize,
    /// Reduced-echelon rows, pivot-sorted; canonical for the subspace.
    basis: Vec<Vec<Scalar>>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(
            ambient,
            (0..ambient)
                .map(|i| {
                    let mut v = vec![Scalar::zero(); ambient];
                    v[i] = Scalar::one();
                    v
                })
                .collect(),
        )
    }

    /// Canonicalizes an arbitrary spanning set.
    pub fn from_vectors(ambient: usize, vectors: Vec<Vec<Scalar>>) -> Self {
        let (basis, _) = gint::rref(&vectors, ambient);
        Subspace { ambient, basis }
    }

    /// Accepts rows already known to be canonical reduced-echelon (used by
    /// the kernel routine); debug-asserts canonicity.
    pub fn from_echelon(ambient: usize, rows: Vec<Vec<Scalar>>) -> Self {
        #[cfg(debug_assertions)]
        {
            let (re, _) = gint::rref(&rows, ambient);
            debug_assert_eq!(re, rows, "rows not in canonical form");
        }
        Subspace {
            ambient,
            basis: rows,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<Scalar>] {
        &self.basis
    }

    /// Reduces `v` against the basis; returns the residue.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.ambient);
        let mut r = v.to_vec();
        for row in &self.basis {
            let pivot = row.iter().position(|x| !x.is_zero());
            let Some(p) = pivot else { continue };
            if !r[p].is_zero() {
                let c = r[p].clone(); // row has pivot 1
                for (j, rv) in r.iter_mut().enumerate() {
                    if !row[j].is_zero() {
                        let t = (&c).mul(&row[j]);
                        *rv -= &t;
                    }
                }
            }
        }
        r
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        let all: Vec<Vec<Scalar>> = self
            .basis
            .iter()
            .chain(other.basis.iter())
            .cloned()
            .collect();
        Ok(Subspace::from_vectors(self.ambient, all))
    }

    /// Zassenhaus-style intersection: the kernel of [A^T | B^T] pairs
    /// coefficients (x, y) with A^T x = B^T y; we read off A^T x.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace, SubspaceError> {
        if self.ambient != other.ambient {
            return Err(SubspaceError::AmbientMismatch(self.ambient, other.ambient));
        }
        if self.is_zero() || other.is_zero() {
            return Ok(Subspace::zero(self.ambient));
        }
        let ka = self.dim();
        let kb = other.dim();
        // rows indexed by ambient coordinate: sum_a x_a A[a][c] - sum_b y_b B[b][c] = 0
        let mut rows = Vec::with_capacity(self.ambient);
        for c in 0..self.ambient {
            let mut row = Vec::with_capacity(ka + kb);
            for a in 0..ka {
                row.push(self.basis[a][c].clone());
            }
            for b in 0..kb {
                row.push(-&other.basis[b][c]);
            }
            rows.push(row);
        }
        let null = gint::kernel(&rows, ka + kb);
        let mut vectors = Vec::with_capacity(null.len());
        for coeffs in &null {
            let mut v = vec![Scalar::zero(); self.ambient];
            for a in 0..ka {
                if coeffs[a].is_zero() {
                    continue;
                }
                for c in 0..self.ambient {
                    if !self.basis[a][c].is_zero() {
                        let t = (&coeffs[a]).mul(&self.basis[a][c]);
                        v[c] += &t;
                    }
                }
            }
            vectors.push(v);
        }
        Ok(Subspace::from_vectors(self.ambient, vectors))
    }
}

/// A span of square matrices with a cached canonical basis, the workhorse for
/// algebra membership tests.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatSpan {
    n: usize,
    space: Subspace,
}

impl MatSpan {
    pub fn new(n: usize, mats: &[Matrix]) -> Self {
        let vectors: Vec<Vec<Scalar>> = mats
            .iter()
            .map(|m| {
                assert_eq!((m.rows(), m.cols()), (n, n));
                m.entries().to_vec()
            })
            .collect();
        MatSpan {
            n,
            space: Subspace::from_vectors(n * n, vectors),
        }
    }

    pub fn from_subspace(n: usize, space: Subspace) -> Self {
        assert_eq!(space.ambient_dim(), n * n);
        MatSpan { n, space }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.space.contains(m.entries())
    }

    pub fn basis_matrices(&self) -> Vec<Matrix> {
        self.space
            .basis()
            .iter()
            .map(|v| Matrix::from_vec(self.n, self.n, v.clone()))
            .collect()
    }

    /// Coordinates of `m` in the canonical basis; None if not a member.
    pub fn coordinates(&self, m: &Matrix) -> Option<Vec<Scalar>> {
        let mut coords = Vec::with_capacity(self.dim());
        let mut r = m.entries().to_vec();
        for row in self.space.basis() {
            let p = row.iter().position(|x| !x.is_zero())?;
            let c = r[p].clone();
            if !c.is_zero() {
                for (j, rv) in r.iter_mut().enumerate() {
                    if !row[j].is_zero() {
                        let t = (&c).mul(&row[j]);
                        *rv -= &t;
                    }
                }
            }
            coords.push(c);
        }
        if r.iter().all(|x| x.is_zero()) {
            Some(coords)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(n: usize, i: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); n];
        v[i] = Scalar::one();
        v
    }

    #[test]
    fn sum_and_intersection_spec_examples() {
        let a = Subspace::from_vectors(2, vec![e(2, 0)]);
        let b = Subspace::from_vectors(2, vec![e(2, 1)]);
        assert_eq!(a.sum(&b).unwrap().dim(), 2);

        let c = Subspace::from_vectors(2, vec![vec![Scalar::one(), Scalar::one()]]);
        assert!(a.intersect(&c).unwrap().is_zero());
    }

    #[test]
    fn equality_is_canonical() {
        // Two bases of the plane x + y + z = 0.
        let a = Subspace::from_vectors(
            3,
            vec![
                vec![Scalar::one(), Scalar::from_int(-1), Scalar::zero()],
                vec![Scalar::zero(), Scalar::one(), Scalar::from_int(-1)],
            ],
        );
        let b = Subspace::from_vectors(
            3,
            vec![
                vec![Scalar::one(), Scalar::zero(), Scalar::from_int(-1)],
                vec![Scalar::from_int(2), Scalar::from_int(-1), Scalar::from_int(-1)],
            ],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn grassmann_identity() {
        let a = Subspace::from_vectors(4, vec![e(4, 0), e(4, 1), e(4, 2)]);
        let b = Subspace::from_vectors(4, vec![e(4, 2), e(4, 3)]);
        let s = a.sum(&b).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(s.dim() + i.dim(), a.dim() + b.dim());
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let a = Subspace::zero(2);
        let b = Subspace::zero(3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
    }
}
