//! Linear Lie algebra representations: a subalgebra of gl(n, R) presented by
//! a basis of generator matrices, with an optional distinguished complex
//! structure and free-form provenance metadata.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use crate::subspace::MatSpan;
use std::collections::BTreeMap;
use std::ops::{Mul, Neg};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum LinRepError {
    #[error("generator {0} is not {1}x{1}")]
    BadShape(usize, usize),
    #[error("generators are linearly dependent")]
    DependentGenerators,
    #[error("bracket [g{0}, g{1}] leaves the span")]
    NotClosed(usize, usize),
    #[error("complex structure does not square to -I")]
    BadComplexStructure,
    #[error("generator {0} does not commute with the complex structure")]
    NotComplexLinear(usize),
}

/// A linear Lie algebra h in gl(n, R).
///
/// All analysis in the crate happens on realified models, so generator
/// entries are real; the `Scalar` type still carries an imaginary part, which
/// stays zero here and is used by the representation builders upstream.
#[derive(Clone, Debug)]
pub struct LinRep {
    space_dim: usize,
    gens: Vec<Matrix>,
    complex_structure: Option<Matrix>,
    pub meta: BTreeMap<String, String>,
    span: MatSpan,
}

impl LinRep {
    /// Wraps generators without the (expensive) closure check; generators
    /// must be independent. Use `validate_closure` where closure is not
    /// guaranteed by construction.
    pub fn new(
        space_dim: usize,
        gens: Vec<Matrix>,
        complex_structure: Option<Matrix>,
    ) -> Result<Self, LinRepError> {
        for (k, g) in gens.iter().enumerate() {
            if g.rows() != space_dim || g.cols() != space_dim {
                return Err(LinRepError::BadShape(k, space_dim));
            }
        }
        let span = MatSpan::new(space_dim, &gens);
        if span.dim() != gens.len() {
            return Err(LinRepError::DependentGenerators);
        }
        if let Some(j) = &complex_structure {
            let j2 = j.mul_mat(j);
            if j2 != (&Matrix::identity(space_dim)).neg() {
                return Err(LinRepError::BadComplexStructure);
            }
            for (k, g) in gens.iter().enumerate() {
                if !g.comm(j).is_zero() {
                    return Err(LinRepError::NotComplexLinear(k));
                }
            }
        }
        Ok(LinRep {
            space_dim,
            gens,
            complex_structure,
            meta: BTreeMap::new(),
            span,
        })
    }

    pub fn with_meta(mut self, key: &str, value: &str) -> Self {
        self.meta.insert(key.to_string(), value.to_string());
        self
    }

    /// The zero algebra in gl(n, R).
    pub fn null_algebra(space_dim: usize) -> Self {
        LinRep {
            space_dim,
            gens: Vec::new(),
            complex_structure: None,
            meta: BTreeMap::new(),
            span: MatSpan::new(space_dim, &[]),
        }
    }

    pub fn space_dim(&self) -> usize {
        self.space_dim
    }

    pub fn dim(&self) -> usize {
        self.gens.len()
    }

    pub fn gens(&self) -> &[Matrix] {
        &self.gens
    }

    pub fn complex_structure(&self) -> Option<&Matrix> {
        self.complex_structure.as_ref()
    }

    pub fn span(&self) -> &MatSpan {
        &self.span
    }

    pub fn contains(&self, m: &Matrix) -> bool {
        self.span.contains(m)
    }

    /// Exhaustive pairwise bracket-closure check.
    pub fn validate_closure(&self) -> Result<(), LinRepError> {
        for i in 0..self.gens.len() {
            for j in (i + 1)..self.gens.len() {
                let br = self.gens[i].comm(&self.gens[j]);
                if !br.is_zero() && !self.span.contains(&br) {
                    return Err(LinRepError::NotClosed(i, j));
                }
            }
        }
        Ok(())
    }

    /// Conjugated copy g . h . g^{-1} (the complex structure, if any, is
    /// conjugated along).
    pub fn conjugated(&self, g: &Matrix) -> Option<Self> {
        let ginv = g.inverse()?;
        let gens = self
            .gens
            .iter()
            .map(|m| m.conjugate(g, &ginv))
            .collect::<Vec<_>>();
        let j = self
            .complex_structure
            .as_ref()
            .map(|j| j.conjugate(g, &ginv));
        let mut out = LinRep::new(self.space_dim, gens, j).ok()?;
        out.meta = self.meta.clone();
        Some(out)
    }

    /// Restriction of every generator to an invariant subspace, expressed in
    /// the subspace basis. `basis` rows must span an invariant subspace.
    pub fn restricted_to(&self, basis: &[Vec<Scalar>]) -> Option<LinRep> {
        let k = basis.len();
        let sub = crate::subspace::Subspace::from_vectors(self.space_dim, basis.to_vec());
        if sub.dim() != k {
            return None;
        }
        let mut gens = Vec::with_capacity(self.gens.len());
        for g in &self.gens {
            let mut rows = Vec::with_capacity(k);
            for b in sub.basis() {
                let img = g.mul_vec(b);
                rows.push(express_in_basis(&sub, &img)?);
            }
            // rows[r] = coordinates of g * b_r, i.e. the transpose of the
            // restricted matrix acting on coordinate columns.
            let m = Matrix::from_rows(rows).transpose();
            gens.push(m);
        }
        // Restrictions of independent generators may become dependent; keep a
        // basis of the restricted algebra instead of failing.
        let span = MatSpan::new(k, &gens);
        let basis_mats = span.basis_matrices();
        LinRep::new(k, basis_mats, None).ok()
    }
}

/// Coordinates of `v` in the echelon basis of `sub`, if `v` lies in it.
pub fn express_in_basis(
    sub: &crate::subspace::Subspace,
    v: &[Scalar],
) -> Option<Vec<Scalar>> {
    let mut r = v.to_vec();
    let mut coords = Vec::with_capacity(sub.dim());
    for row in sub.basis() {
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

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_dependent_generators() {
        let gens = vec![Matrix::identity(2), Matrix::identity(2).scale(&Scalar::from_int(2))];
        assert!(matches!(
            LinRep::new(2, gens, None),
            Err(LinRepError::DependentGenerators)
        ));
    }

    #[test]
    fn validates_complex_structure() {
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let r = LinRep::new(2, vec![j.clone()], Some(j)).unwrap();
        assert_eq!(r.dim(), 1);
        let bad = Matrix::from_i64(&[&[1, 0], &[0, 1]]);
        assert!(LinRep::new(2, vec![], Some(bad)).is_err());
    }

    #[test]
    fn closure_check_catches_open_span() {
        // {E12, E21} is not closed (bracket is E11 - E22).
        let gens = vec![Matrix::elem(2, 0, 1), Matrix::elem(2, 1, 0)];
        let r = LinRep::new(2, gens, None).unwrap();
        assert!(r.validate_closure().is_err());
    }

    #[test]
    fn restriction_to_invariant_block() {
        // block diag(A, 0) acting on R^3; restrict to span{e1, e2}.
        let g = Matrix::from_i64(&[&[1, 2, 0], &[3, 4, 0], &[0, 0, 0]]);
        let r = LinRep::new(3, vec![g], None).unwrap();
        let basis = vec![
            vec![Scalar::one(), Scalar::zero(), Scalar::zero()],
            vec![Scalar::zero(), Scalar::one(), Scalar::zero()],
        ];
        let restricted = r.restricted_to(&basis).unwrap();
        assert_eq!(restricted.space_dim(), 2);
        assert_eq!(restricted.dim(), 1);
    }
}
