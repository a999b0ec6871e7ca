//! Internal elimination engine over Gaussian integers.
//!
//! Rows enter as Gaussian-rational vectors, are cleared to Gaussian-integer
//! form, and are reduced by fraction-free elimination: the two-term update
//! `row' = pivot * row - coeff * pivot_row` followed by stripping the integer
//! content of the row. No rational arithmetic happens during the forward
//! pass; pivots are normalized only when the reduced basis is extracted.
//!
//! The `Solver` is incremental: equation rows are streamed in and only the
//! current echelon is kept, which matters for the large prolongation and
//! curvature systems (tens of thousands of short rows, a few thousand
//! columns).
//!
//! Two lanes share the algorithm: an `i128` lane with checked arithmetic and
//! a `BigInt` lane. Overflow in the fast lane escalates the whole state to
//! the big lane, so results are always exact.

use crate::scalar::Scalar;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::ops::Mul;

/// Gaussian integer with machine-word parts. `i128::MIN` is excluded so that
/// absolute values are always representable.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
struct GiSmall {
    re: i128,
    im: i128,
}

/// Gaussian integer with arbitrary-precision parts.
#[derive(Clone, PartialEq, Eq, Debug)]
struct GiBig {
    re: BigInt,
    im: BigInt,
}

trait GaussInt: Clone + PartialEq {
    fn is_zero(&self) -> bool;
    /// `a*b - c*d`, or None on overflow.
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self>;
    /// Strips the gcd of all integer components from the slice.
    fn strip_content(row: &mut [Self]);
    fn to_scalar(&self) -> Scalar;
}

fn ck(v: i128) -> Option<i128> {
    if v == i128::MIN {
        None
    } else {
        Some(v)
    }
}

impl GaussInt for GiSmall {
    fn is_zero(&self) -> bool {
        self.re == 0 && self.im == 0
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        let ab_re = a.re.checked_mul(b.re)?.checked_sub(a.im.checked_mul(b.im)?)?;
        let ab_im = a.re.checked_mul(b.im)?.checked_add(a.im.checked_mul(b.re)?)?;
        let cd_re = c.re.checked_mul(d.re)?.checked_sub(c.im.checked_mul(d.im)?)?;
        let cd_im = c.re.checked_mul(d.im)?.checked_add(c.im.checked_mul(d.re)?)?;
        Some(GiSmall {
            re: ck(ab_re.checked_sub(cd_re)?)?,
            im: ck(ab_im.checked_sub(cd_im)?)?,
        })
    }
    fn strip_content(row: &mut [Self]) {
        let mut g: u128 = 0;
        for v in row.iter() {
            g = gcd_u128(g, v.re.unsigned_abs());
            g = gcd_u128(g, v.im.unsigned_abs());
            if g == 1 {
                return;
            }
        }
        if g > 1 {
            let g = g as i128;
            for v in row.iter_mut() {
                v.re /= g;
                v.im /= g;
            }
        }
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::new(
            BigRational::from_integer(BigInt::from(self.re)),
            BigRational::from_integer(BigInt::from(self.im)),
        )
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

impl GaussInt for GiBig {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn mul_sub(a: &Self, b: &Self, c: &Self, d: &Self) -> Option<Self> {
        let re = &a.re * &b.re - &a.im * &b.im - (&c.re * &d.re - &c.im * &d.im);
        let im = &a.re * &b.im + &a.im * &b.re - (&c.re * &d.im + &c.im * &d.re);
        Some(GiBig { re, im })
    }
    fn strip_content(row: &mut [Self]) {
        let mut g = BigInt::zero();
        for v in row.iter() {
            if !v.re.is_zero() {
                g = g.gcd(&v.re);
            }
            if !v.im.is_zero() {
                g = g.gcd(&v.im);
            }
            if g.is_one() {
                return;
            }
        }
        if !g.is_zero() && !g.is_one() {
            for v in row.iter_mut() {
                v.re = &v.re / &g;
                v.im = &v.im / &g;
            }
        }
    }
    fn to_scalar(&self) -> Scalar {
        Scalar::new(
            BigRational::from_integer(self.re.clone()),
            BigRational::from_integer(self.im.clone()),
        )
    }
}

fn small_to_big(v: &GiSmall) -> GiBig {
    GiBig {
        re: BigInt::from(v.re),
        im: BigInt::from(v.im),
    }
}

/// Row echelon state for one integer lane. Rows are kept sorted by pivot
/// column; leading entries sit exactly at the pivots.
struct Eliminator<G: GaussInt> {
    cols: usize,
    rows: Vec<Vec<G>>,
    pivots: Vec<usize>,
}

impl<G: GaussInt> Eliminator<G> {
    fn new(cols: usize) -> Self {
        Eliminator {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Reduces and inserts; Ok(true) when the rank grew, Err(()) on overflow.
    fn add_row(&mut self, mut row: Vec<G>) -> Result<bool, ()> {
        G::strip_content(&mut row);
        loop {
            let Some(lead) = row.iter().position(|v| !v.is_zero()) else {
                return Ok(false);
            };
            match self.pivots.binary_search(&lead) {
                Ok(k) => {
                    let pr = &self.rows[k];
                    let p = pr[lead].clone();
                    let q = row[lead].clone();
                    for j in lead..self.cols {
                        if row[j].is_zero() && pr[j].is_zero() {
                            continue;
                        }
                        row[j] = G::mul_sub(&p, &row[j], &q, &pr[j]).ok_or(())?;
                    }
                    G::strip_content(&mut row[lead..]);
                }
                Err(k) => {
                    self.pivots.insert(k, lead);
                    self.rows.insert(k, row);
                    return Ok(true);
                }
            }
        }
    }

    /// Back-substitution to reduced form plus pivot normalization; consumes
    /// the state and yields the canonical reduced basis over Q(i).
    fn finish(mut self) -> Result<(Vec<Vec<Scalar>>, Vec<usize>), ()> {
        for k in (0..self.rows.len()).rev() {
            let col = self.pivots[k];
            let (upper, lower) = self.rows.split_at_mut(k);
            let pivot_row = &lower[0];
            let p = pivot_row[col].clone();
            for row in upper.iter_mut() {
                if !row[col].is_zero() {
                    let q = row[col].clone();
                    for j in 0..self.cols {
                        if row[j].is_zero() && pivot_row[j].is_zero() {
                            continue;
                        }
                        row[j] = G::mul_sub(&p, &row[j], &q, &pivot_row[j]).ok_or(())?;
                    }
                    G::strip_content(row);
                }
            }
        }
        let mut out = Vec::with_capacity(self.rows.len());
        for (k, row) in self.rows.iter().enumerate() {
            let p = row[self.pivots[k]].to_scalar();
            let pinv = p.inv();
            out.push(
                row.iter()
                    .map(|v| {
                        if v.is_zero() {
                            Scalar::zero()
                        } else {
                            (&v.to_scalar()).mul(&pinv)
                        }
                    })
                    .collect(),
            );
        }
        Ok((out, self.pivots))
    }

    fn to_big(&self) -> Eliminator<GiBig>
    where
        G: ToBig,
    {
        Eliminator {
            cols: self.cols,
            rows: self
                .rows
                .iter()
                .map(|r| r.iter().map(|v| v.to_big()).collect())
                .collect(),
            pivots: self.pivots.clone(),
        }
    }
}

trait ToBig {
    fn to_big(&self) -> GiBig;
}
impl ToBig for GiSmall {
    fn to_big(&self) -> GiBig {
        small_to_big(self)
    }
}
impl ToBig for GiBig {
    fn to_big(&self) -> GiBig {
        self.clone()
    }
}

enum Lane {
    Small(Eliminator<GiSmall>),
    Big(Eliminator<GiBig>),
}

/// Incremental exact linear solver over Q(i).
pub struct Solver {
    cols: usize,
    lane: Lane,
}

impl Solver {
    pub fn new(cols: usize) -> Self {
        Solver {
            cols,
            lane: Lane::Small(Eliminator::new(cols)),
        }
    }

    pub fn rank(&self) -> usize {
        match &self.lane {
            Lane::Small(e) => e.pivots.len(),
            Lane::Big(e) => e.pivots.len(),
        }
    }

    fn escalate(&mut self) {
        if let Lane::Small(e) = &self.lane {
            self.lane = Lane::Big(e.to_big());
        }
    }

    /// Adds one equation row; returns true when the rank grew.
    pub fn add_row(&mut self, row: &[Scalar]) -> bool {
        debug_assert_eq!(row.len(), self.cols);
        if let Lane::Small(e) = &mut self.lane {
            if let Some(small) = row_to_small(row) {
                if let Ok(grew) = e.add_row(small) {
                    return grew;
                }
            }
            self.escalate();
        }
        match &mut self.lane {
            Lane::Big(e) => e
                .add_row(row_to_big(row))
                .expect("big lane cannot overflow"),
            Lane::Small(_) => unreachable!(),
        }
    }

    /// Canonical reduced row-echelon basis of the row space and its pivots.
    /// Overflow during back-substitution escalates transparently.
    pub fn into_rref(self) -> (Vec<Vec<Scalar>>, Vec<usize>) {
        match self.lane {
            Lane::Small(e) => {
                let backup = e.to_big();
                match e.finish() {
                    Ok(r) => r,
                    Err(()) => backup.finish().expect("big lane cannot overflow"),
                }
            }
            Lane::Big(e) => e.finish().expect("big lane cannot overflow"),
        }
    }

    /// Canonical basis of `{x : rows . x = 0}` for all rows added so far.
    pub fn into_kernel(self) -> Vec<Vec<Scalar>> {
        let cols = self.cols;
        let (basis, pivots) = self.into_rref();
        kernel_from_rref(cols, &basis, &pivots)
    }
}

fn kernel_from_rref(cols: usize, basis: &[Vec<Scalar>], pivots: &[usize]) -> Vec<Vec<Scalar>> {
    let pivot_set: std::collections::HashSet<usize> = pivots.iter().copied().collect();
    let free: Vec<usize> = (0..cols).filter(|c| !pivot_set.contains(c)).collect();
    let mut out = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![Scalar::zero(); cols];
        v[f] = Scalar::one();
        for (k, row) in basis.iter().enumerate() {
            if !row[f].is_zero() {
                v[pivots[k]] = -&row[f];
            }
        }
        out.push(v);
    }
    // The free-column kernel basis is re-reduced so the canonical-form
    // invariant holds for the subspace it spans.
    let (canon, _) = rref(&out, cols);
    canon
}

fn row_to_small(row: &[Scalar]) -> Option<Vec<GiSmall>> {
    let mut lcm = BigInt::one();
    for v in row {
        if !v.re.is_zero() {
            lcm = lcm.lcm(v.re.denom());
        }
        if !v.im.is_zero() {
            lcm = lcm.lcm(v.im.denom());
        }
    }
    let lcm_r = BigRational::from_integer(lcm);
    let mut r = Vec::with_capacity(row.len());
    for v in row {
        let re = (&v.re * &lcm_r).to_integer().to_i128()?;
        let im = (&v.im * &lcm_r).to_integer().to_i128()?;
        if re == i128::MIN || im == i128::MIN {
            return None;
        }
        r.push(GiSmall { re, im });
    }
    Some(r)
}

fn row_to_big(row: &[Scalar]) -> Vec<GiBig> {
    let mut lcm = BigInt::one();
    for v in row {
        if !v.re.is_zero() {
            lcm = lcm.lcm(v.re.denom());
        }
        if !v.im.is_zero() {
            lcm = lcm.lcm(v.im.denom());
        }
    }
    let lcm_r = BigRational::from_integer(lcm);
    row.iter()
        .map(|v| GiBig {
            re: (&v.re * &lcm_r).to_integer(),
            im: (&v.im * &lcm_r).to_integer(),
        })
        .collect()
}

/// Canonical reduced row-echelon form over Q(i): the nonzero reduced rows and
/// their pivot columns. Canonical: equal row spaces give identical grids.
pub fn rref(rows: &[Vec<Scalar>], cols: usize) -> (Vec<Vec<Scalar>>, Vec<usize>) {
    let mut solver = Solver::new(cols);
    for row in rows {
        solver.add_row(row);
    }
    solver.into_rref()
}

/// Rank of the row set.
pub fn rank(rows: &[Vec<Scalar>], cols: usize) -> usize {
    let mut solver = Solver::new(cols);
    for row in rows {
        solver.add_row(row);
    }
    solver.rank()
}

/// Canonical basis of the kernel `{x : M x = 0}`, rows of M given.
pub fn kernel(rows: &[Vec<Scalar>], cols: usize) -> Vec<Vec<Scalar>> {
    let mut solver = Solver::new(cols);
    for row in rows {
        solver.add_row(row);
    }
    solver.into_kernel()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ops::Add;

    fn s(v: i64) -> Scalar {
        Scalar::from_int(v)
    }

    #[test]
    fn rref_identity() {
        let rows = vec![vec![s(1), s(0)], vec![s(0), s(1)]];
        let (basis, pivots) = rref(&rows, 2);
        assert_eq!(pivots, vec![0, 1]);
        assert_eq!(basis, rows);
    }

    #[test]
    fn rref_canonical_across_presentations() {
        // Same plane in Q^3 presented two ways.
        let a = vec![vec![s(1), s(1), s(0)], vec![s(0), s(2), s(2)]];
        let b = vec![vec![s(3), s(5), s(2)], vec![s(1), s(3), s(2)]];
        let (ba, _) = rref(&a, 3);
        let (bb, _) = rref(&b, 3);
        assert_eq!(ba, bb);
    }

    #[test]
    fn kernel_all_ones() {
        let rows = vec![vec![s(1); 3]; 3];
        assert_eq!(rank(&rows, 3), 1);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            let sum = v.iter().fold(Scalar::zero(), |acc, x| (&acc).add(x));
            assert!(sum.is_zero());
        }
    }

    #[test]
    fn kernel_complex_entries() {
        let rows = vec![vec![Scalar::one(), Scalar::i()]];
        let k = kernel(&rows, 2);
        assert_eq!(k.len(), 1);
        let v = &k[0];
        let lhs = (&v[0]).add(&(&Scalar::i()).mul(&v[1]));
        assert!(lhs.is_zero());
    }

    #[test]
    fn big_lane_matches_small_lane() {
        let rows: Vec<Vec<Scalar>> = (1..=4)
            .map(|i| {
                (1..=5)
                    .map(|j| Scalar::from_ratio(1, (i + j) as i64))
                    .collect()
            })
            .collect();
        assert_eq!(rank(&rows, 5), 4);
        let k = kernel(&rows, 5);
        assert_eq!(k.len(), 1);
        for (i, row) in rows.iter().enumerate() {
            let mut acc = Scalar::zero();
            for (j, v) in row.iter().enumerate() {
                acc += &(v.mul(&k[0][j]));
            }
            assert!(acc.is_zero(), "row {i} not annihilated");
        }
    }

    #[test]
    fn forced_escalation_still_exact() {
        // Entries near 2^100 force products past i128.
        let big = Scalar::new(
            BigRational::from_integer(BigInt::from(1u8) << 100),
            BigRational::zero(),
        );
        let rows = vec![
            vec![big.clone(), s(1), s(0)],
            vec![s(1), big.clone(), s(1)],
        ];
        assert_eq!(rank(&rows, 3), 2);
        let k = kernel(&rows, 3);
        assert_eq!(k.len(), 1);
        for row in &rows {
            let mut acc = Scalar::zero();
            for (j, v) in row.iter().enumerate() {
                acc += &(v.mul(&k[0][j]));
            }
            assert!(acc.is_zero());
        }
    }
}
