//! Rational polynomials: minimal polynomials of matrices and the small-degree
//! factorization the invariant-subspace search relies on.
//!
//! Full rational factorization is not needed: splitting kernels only require
//! some nontrivial coprime factorization. Square-free decomposition, rational
//! roots, quadratic discriminants and the quartic resolvent cover every
//! minimal polynomial arising from the commutants in this domain; anything
//! deeper is reported as `Unknown` and surfaces as `Undetermined` upstream.

use crate::matrix::Matrix;
use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::ops::{Add, Div};

/// Monic-normalized polynomial with rational coefficients, low degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    pub coeffs: Vec<BigRational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.len() > 1 && coeffs.last().unwrap().is_zero() {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly {
            coeffs: vec![BigRational::zero()],
        }
    }

    pub fn one() -> Self {
        Poly {
            coeffs: vec![BigRational::one()],
        }
    }

    pub fn x_minus(r: &BigRational) -> Self {
        Poly::new(vec![-r.clone(), BigRational::one()])
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.degree() == 0 && self.coeffs[0].is_one()
    }

    pub fn monic(&self) -> Poly {
        let lead = self.coeffs.last().unwrap();
        if lead.is_zero() || lead.is_one() {
            return self.clone();
        }
        Poly::new(self.coeffs.iter().map(|c| c / lead).collect())
    }

    pub fn derivative(&self) -> Poly {
        if self.degree() == 0 {
            return Poly::zero();
        }
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn mul(&self, rhs: &Poly) -> Poly {
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Poly::new(out)
    }

    /// Euclidean division; returns (quotient, remainder).
    pub fn div_rem(&self, rhs: &Poly) -> (Poly, Poly) {
        assert!(!rhs.is_zero(), "division by zero polynomial");
        let mut rem = self.coeffs.clone();
        let dr = rhs.degree();
        let lead = rhs.coeffs[dr].clone();
        if rem.len() <= dr {
            return (Poly::zero(), Poly::new(rem));
        }
        let mut quot = vec![BigRational::zero(); rem.len() - dr];
        for i in (dr..rem.len()).rev() {
            let c = &rem[i] / &lead;
            if c.is_zero() {
                continue;
            }
            quot[i - dr] = c.clone();
            for j in 0..=dr {
                let t = &c * &rhs.coeffs[j];
                rem[i - dr + j] -= t;
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn gcd(&self, rhs: &Poly) -> Poly {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            a.monic()
        }
    }

    /// Evaluates the polynomial at a matrix (Horner).
    pub fn eval_matrix(&self, m: &Matrix) -> Matrix {
        let n = m.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_mat(m);
            if !c.is_zero() {
                let ci = Matrix::identity(n).scale(&Scalar::new(c.clone(), BigRational::zero()));
                acc = (&acc).add(&ci);
            }
        }
        acc
    }
}

/// Minimal polynomial of a square rational matrix, via the first linear
/// dependence among I, M, M^2, ...
pub fn minimal_polynomial(m: &Matrix) -> Poly {
    let n = m.rows();
    assert!(m.is_square());
    let mut powers: Vec<Vec<Scalar>> = Vec::new();
    let mut cur = Matrix::identity(n);
    loop {
        powers.push(cur.entries().to_vec());
        // Solve for a dependence with the newest power having coefficient 1:
        // stack columns = powers, find kernel.
        let k = powers.len();
        let rows: Vec<Vec<Scalar>> = (0..n * n)
            .map(|e| (0..k).map(|p| powers[p][e].clone()).collect())
            .collect();
        let null = crate::gint::kernel(&rows, k);
        if let Some(rel) = null.iter().find(|v| !v[k - 1].is_zero()) {
            let lead = rel[k - 1].clone();
            let coeffs: Vec<BigRational> = rel
                .iter()
                .map(|c| {
                    let q = c.div(&lead.clone());
                    assert!(q.is_real(), "minimal polynomial of a real matrix");
                    q.re
                })
                .collect();
            return Poly::new(coeffs).monic();
        }
        cur = cur.mul_mat(m);
        assert!(powers.len() <= n + 1, "minimal polynomial search overran");
    }
}

/// Outcome of the bounded factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Factorization {
    /// Certified irreducible over Q.
    Irreducible,
    /// A nontrivial monic factorization f = g * h (not necessarily into
    /// irreducibles; g, h coprime unless marked by the caller's use).
    Split(Vec<Poly>),
    /// Degree too high for the implemented certificates.
    Unknown,
}

/// Square-free decomposition into pairwise-coprime parts: f = prod p_i^i.
/// Returns the list of (p_i, i) with p_i nonconstant.
pub fn squarefree_decomposition(f: &Poly) -> Vec<(Poly, usize)> {
    let f = f.monic();
    if f.degree() == 0 {
        return vec![];
    }
    let mut out = Vec::new();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.div_rem(&a).0;
    let mut i = 1;
    // Yun's algorithm over characteristic zero.
    while b.degree() > 0 {
        let c = b.gcd(&a);
        let p = b.div_rem(&c).0;
        if p.degree() > 0 {
            out.push((p.monic(), i));
        }
        b = c.clone();
        a = a.div_rem(&c).0;
        i += 1;
    }
    out
}

fn to_primitive_int(f: &Poly) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in &f.coeffs {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = f
        .coeffs
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect();
    let mut g = BigInt::zero();
    for v in &ints {
        if !v.is_zero() {
            g = g.gcd(v);
        }
    }
    if g.is_zero() || g.is_one() {
        ints
    } else {
        ints.iter().map(|v| v / &g).collect()
    }
}

/// Divisors of |n| up to a search cap; None when n has a large prime factor
/// that the cap cannot reach (callers then degrade gracefully).
fn bounded_divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    const CAP: u64 = 1_000_000;
    let mut n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2u32);
    let cap = BigInt::from(CAP);
    let mut trial_capped = false;
    while &(&p * &p) <= &n {
        if p > cap {
            trial_capped = true;
            break;
        }
        let mut e = 0u32;
        while (&n % &p).is_zero() {
            n = &n / &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if !n.is_one() {
        if trial_capped {
            // Cofactor may be composite with all factors above the cap;
            // enumerating its divisors is not possible, so report failure.
            return None;
        }
        // Trial division reached sqrt(n): the cofactor is prime.
        factors.push((n.clone(), 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk = &pk * &p;
            }
        }
        divs = next;
    }
    Some(divs)
}

/// All rational roots of f, by the rational-root theorem with bounded divisor
/// enumeration. None when the bound is exceeded.
pub fn rational_roots(f: &Poly) -> Option<Vec<BigRational>> {
    let ints = to_primitive_int(f);
    let lead = ints.last().unwrap().clone();
    // strip zero roots first
    let mut k = 0;
    while ints[k].is_zero() {
        k += 1;
    }
    let mut roots = Vec::new();
    if k > 0 {
        roots.push(BigRational::zero());
    }
    let konst = ints[k].clone();
    let ps = bounded_divisors(&konst)?;
    let qs = bounded_divisors(&lead)?;
    for p in &ps {
        for q in &qs {
            for sign in [1i32, -1] {
                let cand = BigRational::new(p * BigInt::from(sign), q.clone());
                if f.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    Some(roots)
}

/// Bounded factorization of a square-free monic polynomial over Q.
pub fn factor_squarefree(f: &Poly) -> Factorization {
    let f = f.monic();
    let d = f.degree();
    if d <= 1 {
        return Factorization::Irreducible;
    }
    // Linear factors.
    match rational_roots(&f) {
        Some(roots) if !roots.is_empty() => {
            let mut rest = f.clone();
            let mut parts = Vec::new();
            for r in &roots {
                let lin = Poly::x_minus(r);
                let (q, rem) = rest.div_rem(&lin);
                assert!(rem.is_zero());
                parts.push(lin);
                rest = q;
            }
            if rest.degree() > 0 {
                parts.push(rest.monic());
            }
            return Factorization::Split(parts);
        }
        Some(_) => {} // no rational roots; continue below
        None => return Factorization::Unknown,
    }
    match d {
        2 | 3 => Factorization::Irreducible, // no rational root => irreducible
        4 => factor_quartic_no_roots(&f),
        _ => Factorization::Unknown,
    }
}

/// Quartic with no rational roots: either a product of two irreducible
/// quadratics over Q or irreducible. Decide via the resolvent cubic.
fn factor_quartic_no_roots(f: &Poly) -> Factorization {
    // Normalize x^4 + a x^3 + b x^2 + c x + d.
    let a = f.coeffs[3].clone();
    let b = f.coeffs[2].clone();
    let c = f.coeffs[1].clone();
    let d = f.coeffs[0].clone();
    // Depressed form: x = y - a/4 gives y^4 + p y^2 + q y + r.
    let a2 = &a * &a;
    let four = BigRational::from_integer(BigInt::from(4));
    let p = &b - &(&a2 * BigRational::new(BigInt::from(3), BigInt::from(8)));
    let q = &c - &(&a * &b / &BigRational::from_integer(BigInt::from(2)))
        + &a2 * &a * BigRational::new(BigInt::from(1), BigInt::from(8));
    let r = &d - &(&a * &c / &four)
        + &a2 * &b / BigRational::from_integer(BigInt::from(16))
        - &a2 * &a2 * BigRational::new(BigInt::from(3), BigInt::from(256));
    // Resolvent: z^3 - p z^2 - 4 r z + (4 p r - q^2) = 0; a factorization into
    // quadratics over Q needs a rational root z with z - p a square (or q = 0
    // cases), checked constructively below.
    let res = Poly::new(vec![
        &four * &p * &r - &q * &q,
        -&four * &r,
        -&p,
        BigRational::one(),
    ]);
    let Some(roots) = rational_roots(&res) else {
        return Factorization::Unknown;
    };
    for z in roots {
        // y^4 + p y^2 + q y + r = (y^2 + u y + v)(y^2 - u y + w) with
        // u^2 = z - p, v + w = z ... using the standard completion:
        // v w = r, v + w = p + u^2? Use: v,w = (z ± q/u)/2 when u != 0.
        let u2 = &z - &p;
        if u2.is_negative() {
            continue;
        }
        if let Some(u) = crate::scalar::Scalar::rational_sqrt(&u2) {
            if u.is_zero() {
                // y^4 + p y^2 + r with y^2 = t: factor t^2 + p t + r over Q.
                let disc = &p * &p - &four * &r;
                if let Some(sq) = crate::scalar::Scalar::rational_sqrt(&disc) {
                    let two = BigRational::from_integer(BigInt::from(2));
                    let v = (-&p + &sq) / &two;
                    let w = (-&p - &sq) / &two;
                    let g1 = Poly::new(vec![-v, BigRational::zero(), BigRational::one()]);
                    let g2 = Poly::new(vec![-w, BigRational::zero(), BigRational::one()]);
                    return undepress_and_return(f, &a, g1, g2);
                }
                continue;
            }
            let two = BigRational::from_integer(BigInt::from(2));
            let v = (&z - &(&q / &u)) / &two;
            let w = (&z + &(&q / &u)) / &two;
            let g1 = Poly::new(vec![v, u.clone(), BigRational::one()]);
            let g2 = Poly::new(vec![w, -u, BigRational::one()]);
            return undepress_and_return(f, &a, g1, g2);
        }
    }
    Factorization::Irreducible
}

fn undepress_and_return(f: &Poly, a: &BigRational, g1: Poly, g2: Poly) -> Factorization {
    // Shift back x = y - a/4 applied to each quadratic factor.
    let four = BigRational::from_integer(BigInt::from(4));
    let shift = a / &four;
    let sub = |g: &Poly| -> Poly {
        // g(y) with y = x + a/4
        let y = Poly::new(vec![shift.clone(), BigRational::one()]);
        let mut acc = Poly::new(vec![g.coeffs.last().unwrap().clone()]);
        for c in g.coeffs.iter().rev().skip(1) {
            acc = acc.mul(&y);
            acc.coeffs[0] += c;
            acc = Poly::new(acc.coeffs);
        }
        acc
    };
    let h1 = sub(&g1).monic();
    let h2 = sub(&g2).monic();
    let prod = h1.mul(&h2);
    if &prod == f {
        Factorization::Split(vec![h1, h2])
    } else {
        // Construction failed to verify; stay sound.
        Factorization::Unknown
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(c: &[i64]) -> Poly {
        Poly::new(
            c.iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    #[test]
    fn minpoly_of_rotation() {
        let j = Matrix::from_i64(&[&[0, -1], &[1, 0]]);
        let m = minimal_polynomial(&j);
        assert_eq!(m, poly(&[1, 0, 1])); // x^2 + 1
        assert_eq!(factor_squarefree(&m), Factorization::Irreducible);
    }

    #[test]
    fn minpoly_of_diag() {
        let d = Matrix::from_i64(&[&[1, 0], &[0, -1]]);
        let m = minimal_polynomial(&d);
        assert_eq!(m, poly(&[-1, 0, 1])); // x^2 - 1
        match factor_squarefree(&m) {
            Factorization::Split(parts) => assert_eq!(parts.len(), 2),
            other => panic!("expected split, got {other:?}"),
        }
    }

    #[test]
    fn quartic_two_quadratics() {
        // (x^2+1)(x^2+2) = x^4 + 3x^2 + 2
        let f = poly(&[2, 0, 3, 0, 1]);
        match factor_squarefree(&f) {
            Factorization::Split(parts) => {
                assert_eq!(parts.len(), 2);
                assert_eq!(parts[0].mul(&parts[1]).monic(), f.monic());
            }
            other => panic!("expected split, got {other:?}"),
        }
        // x^4 + 1 is irreducible over Q... actually x^4+1 factors over no
        // quadratic with rational coefficients, stays irreducible.
        let g = poly(&[1, 0, 0, 0, 1]);
        assert_eq!(factor_squarefree(&g), Factorization::Irreducible);
    }

    #[test]
    fn squarefree_of_cube() {
        // (x-1)^2 (x+2)
        let f = poly(&[1, -1]).mul(&poly(&[1, -1])).mul(&poly(&[2, 1]));
        let parts = squarefree_decomposition(&f);
        assert_eq!(parts.len(), 2);
        assert!(parts.iter().any(|(p, k)| *k == 2 && p.degree() == 1));
    }

    #[test]
    fn rational_roots_basic() {
        let f = poly(&[-6, 11, -6, 1]); // (x-1)(x-2)(x-3)
        let mut roots = rational_roots(&f).unwrap();
        roots.sort();
        assert_eq!(
            roots,
            vec![
                BigRational::from_integer(BigInt::from(1)),
                BigRational::from_integer(BigInt::from(2)),
                BigRational::from_integer(BigInt::from(3)),
            ]
        );
    }
}
