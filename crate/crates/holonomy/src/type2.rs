//! The two hyperplane-center constructions: a generic hyperplane inside the
//! product of the factors' one-dimensional centers, acting together with the
//! factors' semisimple parts. The complex version takes factors from list
//! I-A; the real version mixes I-A factors, I-B factors and the
//! one-dimensional gl(1, R) token.

use crate::liecore;
use crate::linrep::LinRep;
use crate::matrix::Matrix;
use crate::repkit::catalog::{self, CatalogError, Params};
use crate::scalar::Scalar;
use crate::subspace::MatSpan;
use std::ops::{Add, Mul};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum Type2Error {
    #[error("hyperplane coefficient lambda_{0} is zero (generic-hyperplane property violated)")]
    P1Violated(usize),
    #[error("hyperplane coefficient mu_{0} is zero or not real (generic-hyperplane property violated)")]
    P2Violated(usize),
    #[error("total space dimension {0} < 2")]
    DimensionTooSmall(usize),
    #[error("factor {0} is not usable here: {1}")]
    BadEntry(String, String),
    #[error("coefficient count {got} does not match factor count {want}")]
    CoefficientCount { got: usize, want: usize },
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

/// One real-construction factor: a list I-B row or the gl(1, R) token.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealFactor {
    Entry(String, Params),
    Gl1R,
}

/// Input data for the constructions.
#[derive(Clone, Debug, Default)]
pub struct Type2Spec {
    /// List I-A factor rows (complex construction factors).
    pub complex_factors: Vec<(String, Params)>,
    /// List I-B rows or gl(1, R) (real construction only).
    pub real_factors: Vec<RealFactor>,
    /// Hyperplane coefficients for the complex factors.
    pub lambda: Vec<Scalar>,
    /// Hyperplane coefficients for the real factors (must be real).
    pub mu: Vec<Scalar>,
}

struct ComplexFactor {
    /// Realified block size (2 n_j).
    size: usize,
    /// Complex structure on the block.
    j: Matrix,
    /// Semisimple part generators, block-local.
    semisimple: Vec<Matrix>,
}

struct RealBlock {
    size: usize,
    semisimple: Vec<Matrix>,
}

fn load_complex_factor(id: &str, params: &Params) -> Result<ComplexFactor, Type2Error> {
    if !id.starts_with("I-A:") {
        return Err(Type2Error::BadEntry(
            id.to_string(),
            "complex factors must come from list I-A".into(),
        ));
    }
    let model = catalog::construct_entry(id, params).map_err(|e| match e {
        CatalogError::MetadataOnly(id) => Type2Error::BadEntry(
            id,
            "metadata-only rows have no matrix model and cannot be factors".into(),
        ),
        other => Type2Error::Catalog(other),
    })?;
    let split = liecore::derived_and_split(&model.rep)
        .expect("list I factors are reductive");
    let n = model.rep.space_dim();
    Ok(ComplexFactor {
        size: n,
        j: model
            .rep
            .complex_structure()
            .expect("list I-A factors carry a complex structure")
            .clone(),
        semisimple: split.semisimple_matrices(n),
    })
}

fn load_real_factor(f: &RealFactor) -> Result<RealBlock, Type2Error> {
    match f {
        RealFactor::Gl1R => Ok(RealBlock {
            size: 1,
            semisimple: Vec::new(),
        }),
        RealFactor::Entry(id, params) => {
            if !id.starts_with("I-B:") {
                return Err(Type2Error::BadEntry(
                    id.clone(),
                    "real factors must come from list I-B or be gl(1,R)".into(),
                ));
            }
            let model = catalog::construct_entry(id, params).map_err(|e| match e {
                CatalogError::MetadataOnly(id) => Type2Error::BadEntry(
                    id,
                    "metadata-only rows have no matrix model and cannot be factors".into(),
                ),
                other => Type2Error::Catalog(other),
            })?;
            let split = liecore::derived_and_split(&model.rep)
                .expect("list I factors are reductive");
            let n = model.rep.space_dim();
            Ok(RealBlock {
                size: n,
                semisimple: split.semisimple_matrices(n),
            })
        }
    }
}

/// Embeds a block-local matrix at the given offset of the total space.
fn embed(total: usize, offset: usize, m: &Matrix) -> Matrix {
    let mut out = Matrix::zeros(total, total);
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            if !m[(i, j)].is_zero() {
                out[(offset + i, offset + j)] = m[(i, j)].clone();
            }
        }
    }
    out
}

/// The totally complex construction: h = z + s acting block-diagonally,
/// where z is the kernel of the linear form with coefficients lambda inside
/// the product of the centers.
pub fn complex_construction(spec: &Type2Spec) -> Result<LinRep, Type2Error> {
    if !spec.real_factors.is_empty() || !spec.mu.is_empty() {
        return Err(Type2Error::BadEntry(
            "real factor".into(),
            "the complex construction takes only list I-A factors".into(),
        ));
    }
    let p = spec.complex_factors.len();
    if p == 0 {
        return Err(Type2Error::BadEntry(
            "(none)".into(),
            "at least one factor is required".into(),
        ));
    }
    if spec.lambda.len() != p {
        return Err(Type2Error::CoefficientCount {
            got: spec.lambda.len(),
            want: p,
        });
    }
    for (k, l) in spec.lambda.iter().enumerate() {
        if l.is_zero() {
            return Err(Type2Error::P1Violated(k));
        }
    }
    let factors: Vec<ComplexFactor> = spec
        .complex_factors
        .iter()
        .map(|(id, params)| load_complex_factor(id, params))
        .collect::<Result<_, _>>()?;
    let total: usize = factors.iter().map(|f| f.size).sum();
    let offsets: Vec<usize> = factors
        .iter()
        .scan(0usize, |acc, f| {
            let o = *acc;
            *acc += f.size;
            Some(o)
        })
        .collect();
    // z: complex kernel of (lambda_1 ... lambda_p), realified generator pairs.
    let lam_row = vec![spec.lambda.clone()];
    let z_coeffs = crate::gint::kernel(&lam_row, p);
    let mut gens: Vec<Matrix> = Vec::new();
    for w in &z_coeffs {
        // w in C^p; generators w and i w acting as x Id + y J per block.
        for mult in [Scalar::one(), Scalar::i()] {
            let mut g = Matrix::zeros(total, total);
            for (jdx, f) in factors.iter().enumerate() {
                let wj = (&w[jdx]).mul(&mult);
                if wj.is_zero() {
                    continue;
                }
                let block = (&Matrix::identity(f.size)
                    .scale(&Scalar::new(wj.re.clone(), num_rational::BigRational::from_integer(0.into()))))
                    .add(&f.j.scale(&Scalar::new(
                        wj.im.clone(),
                        num_rational::BigRational::from_integer(0.into()),
                    )));
                for i in 0..f.size {
                    for jj in 0..f.size {
                        if !block[(i, jj)].is_zero() {
                            g[(offsets[jdx] + i, offsets[jdx] + jj)] = block[(i, jj)].clone();
                        }
                    }
                }
            }
            if !g.is_zero() {
                gens.push(g);
            }
        }
    }
    for (f, off) in factors.iter().zip(&offsets) {
        for s in &f.semisimple {
            gens.push(embed(total, *off, s));
        }
    }
    let jblocks: Vec<Matrix> = factors.iter().map(|f| f.j.clone()).collect();
    let jrefs: Vec<&Matrix> = jblocks.iter().collect();
    let jtotal = Matrix::block_diag(&jrefs);
    let span = MatSpan::new(total, &gens);
    let rep = LinRep::new(total, span.basis_matrices(), Some(jtotal))
        .expect("construction produces an independent basis");
    Ok(rep)
}

/// The real construction: a real hyperplane inside the product of centers
/// (complex centers contribute two real dimensions each), acting with the
/// semisimple parts.
pub fn real_construction(spec: &Type2Spec) -> Result<LinRep, Type2Error> {
    let p = spec.complex_factors.len();
    let q = spec.real_factors.len();
    if p + q == 0 {
        return Err(Type2Error::BadEntry(
            "(none)".into(),
            "at least one factor is required".into(),
        ));
    }
    if spec.lambda.len() != p {
        return Err(Type2Error::CoefficientCount {
            got: spec.lambda.len(),
            want: p,
        });
    }
    if spec.mu.len() != q {
        return Err(Type2Error::CoefficientCount {
            got: spec.mu.len(),
            want: q,
        });
    }
    for (k, l) in spec.lambda.iter().enumerate() {
        if l.is_zero() {
            return Err(Type2Error::P1Violated(k));
        }
    }
    for (k, m) in spec.mu.iter().enumerate() {
        if m.is_zero() || !m.is_real() {
            return Err(Type2Error::P2Violated(k));
        }
    }
    let cfactors: Vec<ComplexFactor> = spec
        .complex_factors
        .iter()
        .map(|(id, params)| load_complex_factor(id, params))
        .collect::<Result<_, _>>()?;
    let rfactors: Vec<RealBlock> = spec
        .real_factors
        .iter()
        .map(load_real_factor)
        .collect::<Result<_, _>>()?;
    let total: usize =
        cfactors.iter().map(|f| f.size).sum::<usize>() + rfactors.iter().map(|f| f.size).sum::<usize>();
    if total < 2 {
        return Err(Type2Error::DimensionTooSmall(total));
    }
    let mut offsets = Vec::with_capacity(p + q);
    let mut off = 0usize;
    for f in &cfactors {
        offsets.push(off);
        off += f.size;
    }
    for f in &rfactors {
        offsets.push(off);
        off += f.size;
    }
    // Hyperplane in R^{2p+q}: coordinates (x_j, y_j) per complex factor and
    // u_k per real factor; equation sum Im(lambda_j w_j) + sum mu_k u_k = 0
    // with Im(lambda (x+iy)) = Im(lambda) x + Re(lambda) y.
    let mut row = Vec::with_capacity(2 * p + q);
    for l in &spec.lambda {
        row.push(Scalar::new(l.im.clone(), num_rational::BigRational::from_integer(0.into())));
        row.push(Scalar::new(l.re.clone(), num_rational::BigRational::from_integer(0.into())));
    }
    for m in &spec.mu {
        row.push(m.clone());
    }
    let z_coeffs = crate::gint::kernel(&vec![row], 2 * p + q);
    let mut gens: Vec<Matrix> = Vec::new();
    for w in &z_coeffs {
        let mut g = Matrix::zeros(total, total);
        for (jdx, f) in cfactors.iter().enumerate() {
            let x = &w[2 * jdx];
            let y = &w[2 * jdx + 1];
            if x.is_zero() && y.is_zero() {
                continue;
            }
            let block = (&Matrix::identity(f.size).scale(x)).add(&f.j.scale(y));
            for i in 0..f.size {
                for jj in 0..f.size {
                    if !block[(i, jj)].is_zero() {
                        g[(offsets[jdx] + i, offsets[jdx] + jj)] = block[(i, jj)].clone();
                    }
                }
            }
        }
        for (kdx, f) in rfactors.iter().enumerate() {
            let u = &w[2 * p + kdx];
            if u.is_zero() {
                continue;
            }
            let off = offsets[p + kdx];
            for i in 0..f.size {
                g[(off + i, off + i)] = u.clone();
            }
        }
        if !g.is_zero() {
            gens.push(g);
        }
    }
    for (jdx, f) in cfactors.iter().enumerate() {
        for s in &f.semisimple {
            gens.push(embed(total, offsets[jdx], s));
        }
    }
    for (kdx, f) in rfactors.iter().enumerate() {
        for s in &f.semisimple {
            gens.push(embed(total, offsets[p + kdx], s));
        }
    }
    // A global complex structure exists exactly when all factors are complex.
    let j = if q == 0 {
        let jblocks: Vec<Matrix> = cfactors.iter().map(|f| f.j.clone()).collect();
        let jrefs: Vec<&Matrix> = jblocks.iter().collect();
        Some(Matrix::block_diag(&jrefs))
    } else {
        None
    };
    let span = MatSpan::new(total, &gens);
    let rep = LinRep::new(total, span.basis_matrices(), j)
        .expect("construction produces an independent basis");
    Ok(rep)
}

/// The irreducible single-factor families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IrreducibleKind {
    /// Complex construction with one I-A factor: the semisimple part.
    IiA,
    /// Real construction with one I-B factor: the semisimple part.
    IiB,
    /// Real construction with one I-A factor and the rotated center action.
    IiC,
}

/// Builds the irreducible single-factor families. For the rotated-center
/// family the angle is an exact rational circle point (c, s) in the closed
/// first quadrant; endpoints are allowed.
pub fn irreducible_type2(
    kind: IrreducibleKind,
    base_id: &str,
    params: &Params,
    theta: Option<(num_rational::BigRational, num_rational::BigRational)>,
) -> Result<LinRep, Type2Error> {
    match kind {
        IrreducibleKind::IiA => {
            let spec = Type2Spec {
                complex_factors: vec![(base_id.to_string(), params.clone())],
                real_factors: Vec::new(),
                lambda: vec![Scalar::one()],
                mu: Vec::new(),
            };
            complex_construction(&spec)
        }
        IrreducibleKind::IiB => {
            let spec = Type2Spec {
                complex_factors: Vec::new(),
                real_factors: vec![RealFactor::Entry(base_id.to_string(), params.clone())],
                lambda: Vec::new(),
                mu: vec![Scalar::one()],
            };
            real_construction(&spec)
        }
        IrreducibleKind::IiC => {
            let (c, s) = theta.ok_or_else(|| {
                Type2Error::BadEntry(base_id.to_string(), "the rotated family needs an angle".into())
            })?;
            if &c * &c + &s * &s != num_rational::BigRational::from_integer(1.into())
                || c < num_rational::BigRational::from_integer(0.into())
                || s < num_rational::BigRational::from_integer(0.into())
            {
                return Err(Type2Error::BadEntry(
                    base_id.to_string(),
                    "angle must be an exact rational point in the first quadrant".into(),
                ));
            }
            let f = load_complex_factor(base_id, params)?;
            let n = f.size;
            if n < 2 {
                return Err(Type2Error::DimensionTooSmall(n));
            }
            let center = (&Matrix::identity(n).scale(&Scalar::new(
                c,
                num_rational::BigRational::from_integer(0.into()),
            )))
            .add(&f.j.scale(&Scalar::new(s, num_rational::BigRational::from_integer(0.into()))));
            let mut gens = vec![center];
            gens.extend(f.semisimple.iter().cloned());
            let span = MatSpan::new(n, &gens);
            let rep = LinRep::new(n, span.basis_matrices(), Some(f.j))
                .expect("independent basis");
            Ok(rep)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ops::Mul;
    use crate::liecore::{
        decompose_direct_product, invariant_summands, real_class, RealClass, SplitBudget,
    };

    fn pa(pairs: &[(&str, &str)]) -> Params {
        let mut out = Params::new();
        for (k, v) in pairs {
            out = out.with(k, v);
        }
        out
    }

    #[test]
    fn complex_two_gl1c_factors() {
        let spec = Type2Spec {
            complex_factors: vec![
                ("I-A:1".into(), pa(&[("m", "1")])),
                ("I-A:1".into(), pa(&[("m", "1")])),
            ],
            real_factors: vec![],
            lambda: vec![Scalar::one(), Scalar::one()],
            mu: vec![],
        };
        let h = complex_construction(&spec).unwrap();
        assert_eq!(h.space_dim(), 4);
        assert_eq!(h.dim(), 2); // one complex dimension
        assert!(h.validate_closure().is_ok());
        let budget = SplitBudget::seeded(7);
        assert_eq!(invariant_summands(&h, &budget).unwrap().len(), 2);
        assert_eq!(decompose_direct_product(&h, &budget).unwrap().len(), 1);
        assert_eq!(real_class(&h, 7), RealClass::TotallyComplex);
    }

    #[test]
    fn p1_violation_rejected() {
        let spec = Type2Spec {
            complex_factors: vec![
                ("I-A:1".into(), pa(&[("m", "1")])),
                ("I-A:1".into(), pa(&[("m", "1")])),
            ],
            real_factors: vec![],
            lambda: vec![Scalar::one(), Scalar::zero()],
            mu: vec![],
        };
        assert!(matches!(
            complex_construction(&spec),
            Err(Type2Error::P1Violated(1))
        ));
    }

    #[test]
    fn single_gl2c_gives_sl2c() {
        let h = irreducible_type2(
            IrreducibleKind::IiA,
            "I-A:1",
            &pa(&[("m", "2")]),
            None,
        )
        .unwrap();
        assert_eq!(h.space_dim(), 4);
        assert_eq!(h.dim(), 6); // sl(2, C) realified
        assert_eq!(real_class(&h, 7), RealClass::TotallyComplex);
    }

    #[test]
    fn real_two_gl1r_factors_is_trace_free_diag() {
        let spec = Type2Spec {
            complex_factors: vec![],
            real_factors: vec![RealFactor::Gl1R, RealFactor::Gl1R],
            lambda: vec![],
            mu: vec![Scalar::one(), Scalar::one()],
        };
        let h = real_construction(&spec).unwrap();
        assert_eq!(h.space_dim(), 2);
        assert_eq!(h.dim(), 1);
        // z = {(u, -u)}
        let g = &h.gens()[0];
        assert_eq!((&g[(0, 0)]).add(&g[(1, 1)]), Scalar::zero());
        let budget = SplitBudget::seeded(7);
        assert_eq!(invariant_summands(&h, &budget).unwrap().len(), 2);
        assert_eq!(decompose_direct_product(&h, &budget).unwrap().len(), 1);
    }

    #[test]
    fn real_single_complex_factor_lambda_i_is_u1() {
        let spec = Type2Spec {
            complex_factors: vec![("I-A:1".into(), pa(&[("m", "1")]))],
            real_factors: vec![],
            lambda: vec![Scalar::i()],
            mu: vec![],
        };
        let h = real_construction(&spec).unwrap();
        // z = {w : Re w = 0} = R J
        assert_eq!(h.space_dim(), 2);
        assert_eq!(h.dim(), 1);
        assert_eq!(real_class(&h, 7), RealClass::RealComplex);
    }

    #[test]
    fn single_gl1r_rejected_as_too_small() {
        let spec = Type2Spec {
            complex_factors: vec![],
            real_factors: vec![RealFactor::Gl1R],
            lambda: vec![],
            mu: vec![Scalar::one()],
        };
        assert!(matches!(
            real_construction(&spec),
            Err(Type2Error::DimensionTooSmall(1))
        ));
    }

    #[test]
    fn rescaling_lambda_gives_identical_subalgebra() {
        let mk = |scale: Scalar| {
            let spec = Type2Spec {
                complex_factors: vec![
                    ("I-A:1".into(), pa(&[("m", "1")])),
                    ("I-A:1".into(), pa(&[("m", "2")])),
                ],
                real_factors: vec![],
                lambda: vec![
                    (&Scalar::one()).mul(&scale),
                    (&Scalar::from_parts(3, 5, 4, 5)).mul(&scale),
                ],
                mu: vec![],
            };
            complex_construction(&spec).unwrap()
        };
        let a = mk(Scalar::one());
        let b = mk(Scalar::from_parts(2, 1, -1, 3));
        assert_eq!(a.span().subspace(), b.span().subspace());
    }

    #[test]
    fn ii_c_rotated_center() {
        let theta = (
            num_rational::BigRational::new(3.into(), 5.into()),
            num_rational::BigRational::new(4.into(), 5.into()),
        );
        let h = irreducible_type2(
            IrreducibleKind::IiC,
            "I-A:1",
            &pa(&[("m", "1")]),
            Some(theta),
        )
        .unwrap();
        assert_eq!(h.space_dim(), 2);
        assert_eq!(h.dim(), 1);
        let budget = SplitBudget::seeded(7);
        assert_eq!(invariant_summands(&h, &budget).unwrap().len(), 1);
        assert_eq!(real_class(&h, 7), RealClass::RealComplex);
    }
}
