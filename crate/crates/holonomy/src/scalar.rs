//! Exact Gaussian-rational scalars: complex numbers with rational real and
//! imaginary parts. Every computation in this crate runs over this field;
//! there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

/// An element of Q(i). Purely real values have `im = 0`.
///
/// `BigRational` keeps denominators positive and fractions reduced, which is
/// exactly the canonical form the serialization format requires.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    pub re: BigRational,
    pub im: BigRational,
}

impl Scalar {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Scalar { re, im }
    }

    pub fn zero() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::zero(),
        }
    }

    pub fn one() -> Self {
        Scalar {
            re: BigRational::one(),
            im: BigRational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        Scalar {
            re: BigRational::zero(),
            im: BigRational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Scalar {
            re: BigRational::from_integer(BigInt::from(n)),
            im: BigRational::zero(),
        }
    }

    /// `p/q` as a real scalar. Panics if `q == 0`.
    pub fn from_ratio(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(p), BigInt::from(q)),
            im: BigRational::zero(),
        }
    }

    /// `a/b + (c/d)i`.
    pub fn from_parts(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert!(b != 0 && d != 0, "zero denominator");
        Scalar {
            re: BigRational::new(BigInt::from(a), BigInt::from(b)),
            im: BigRational::new(BigInt::from(c), BigInt::from(d)),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Scalar {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|^2 = re^2 + im^2, a nonnegative rational.
    pub fn norm_sq(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Self {
        let n = self.norm_sq();
        assert!(!n.is_zero(), "division by zero scalar");
        Scalar {
            re: &self.re / &n,
            im: -&self.im / &n,
        }
    }

    /// Renders a rational as `p/q` (or just `p` when `q == 1`), `q > 0`,
    /// in lowest terms. This is the on-disk literal format.
    pub fn format_rational(r: &BigRational) -> String {
        if r.denom().is_one() {
            format!("{}", r.numer())
        } else {
            format!("{}/{}", r.numer(), r.denom())
        }
    }

    pub fn parse_rational(s: &str) -> Option<BigRational> {
        let s = s.trim();
        if let Some((p, q)) = s.split_once('/') {
            let p: BigInt = p.trim().parse().ok()?;
            let q: BigInt = q.trim().parse().ok()?;
            if q.is_zero() {
                return None;
            }
            Some(BigRational::new(p, q))
        } else {
            let p: BigInt = s.parse().ok()?;
            Some(BigRational::from_integer(p))
        }
    }

    /// Parses `p/q`, `p`, or `a/b+c/di` style literals. Complex entries in
    /// files use explicit `{re, im}` pairs instead; this accepts the compact
    /// forms used on the command line (`1`, `-2/3`, `i`, `-i`, `3/5+4/5i`,
    /// `1-i`).
    pub fn parse(s: &str) -> Option<Scalar> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return None;
        }
        if !s.contains('i') {
            return Some(Scalar::new(Self::parse_rational(&s)?, BigRational::zero()));
        }
        // Split at the sign that separates the real part from the imaginary
        // part; skip a leading sign and signs inside exponents do not occur.
        let body = &s[..s.len() - 1]; // drop trailing 'i'
        if !s.ends_with('i') {
            return None;
        }
        let mut split_at = None;
        for (idx, c) in body.char_indices().skip(1) {
            if c == '+' || c == '-' {
                // not a sign directly after '/' or at position 0
                let prev = body.as_bytes()[idx - 1];
                if prev != b'/' {
                    split_at = Some(idx);
                }
            }
        }
        match split_at {
            Some(idx) => {
                let re = Self::parse_rational(&body[..idx])?;
                let im_str = &body[idx..];
                let im = if im_str == "+" {
                    BigRational::one()
                } else if im_str == "-" {
                    -BigRational::one()
                } else {
                    Self::parse_rational(im_str)?
                };
                Some(Scalar::new(re, im))
            }
            None => {
                let im = if body.is_empty() {
                    BigRational::one()
                } else if body == "-" {
                    -BigRational::one()
                } else {
                    Self::parse_rational(body)?
                };
                Some(Scalar::new(BigRational::zero(), im))
            }
        }
    }

    /// Non-authoritative decimal rendering for `--approx` output.
    pub fn approx(&self) -> String {
        fn to_f64(r: &BigRational) -> f64 {
            let n = r.numer();
            let d = r.denom();
            let nf = n.to_string().parse::<f64>().unwrap_or(f64::NAN);
            let df = d.to_string().parse::<f64>().unwrap_or(f64::NAN);
            nf / df
        }
        if self.im.is_zero() {
            format!("{:.6}", to_f64(&self.re))
        } else {
            format!("{:.6}{:+.6}i", to_f64(&self.re), to_f64(&self.im))
        }
    }

    /// Exact test for being the square of a rational; returns the positive
    /// square root when it exists. Only meaningful for real scalars.
    pub fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
        if r.is_negative() {
            return None;
        }
        let num = r.numer();
        let den = r.denom();
        let sn = num.sqrt();
        let sd = den.sqrt();
        if &(&sn * &sn) == num && &(&sd * &sd) == den {
            Some(BigRational::new(sn, sd))
        } else {
            None
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", Self::format_rational(&self.re))
        } else if self.re.is_zero() {
            write!(f, "{}i", Self::format_rational(&self.im))
        } else if self.im.is_negative() {
            write!(
                f,
                "{}{}i",
                Self::format_rational(&self.re),
                Self::format_rational(&self.im)
            )
        } else {
            write!(
                f,
                "{}+{}i",
                Self::format_rational(&self.re),
                Self::format_rational(&self.im)
            )
        }
    }
}

// Debug = Display keeps matrix dumps readable in test failures.
impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for Scalar {
    type Output = Scalar;
    fn add(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for Scalar {
    type Output = Scalar;
    fn sub(self, rhs: Scalar) -> Scalar {
        Scalar {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl<'a> Sub<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for Scalar {
    type Output = Scalar;
    fn mul(self, rhs: Scalar) -> Scalar {
        (&self).mul(&rhs)
    }
}

impl<'a> Mul<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        Scalar {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&Scalar> for Scalar {
    fn mul_assign(&mut self, rhs: &Scalar) {
        let v = (&*self).mul(rhs);
        *self = v;
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        (&self).mul(&rhs.inv())
    }
}

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &Scalar) -> Scalar {
        self.mul(&rhs.inv())
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<'a> Neg for &'a Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_ops() {
        let a = Scalar::from_parts(1, 2, -3, 4);
        let b = Scalar::from_parts(2, 1, 1, 3);
        let prod = (&a).mul(&b);
        let back = (&prod).div(&b);
        assert_eq!(back, a);
        assert!((&a).sub(&a).is_zero());
        assert_eq!((&Scalar::i()).mul(&Scalar::i()), Scalar::from_int(-1));
    }

    #[test]
    fn display_and_parse_round_trip() {
        for s in ["0", "5", "-7/3", "i", "-i", "3/5+4/5i", "1-i", "-2/3-1/7i"] {
            let v = Scalar::parse(s).unwrap();
            let shown = v.to_string();
            assert_eq!(Scalar::parse(&shown).unwrap(), v, "round trip {s}");
        }
        assert!(Scalar::parse("1/0").is_none());
        assert_eq!(Scalar::parse("3/5+4/5i").unwrap().norm_sq(), BigRational::one());
    }

    #[test]
    fn sqrt_detection() {
        let r = BigRational::new(BigInt::from(9), BigInt::from(4));
        assert_eq!(
            Scalar::rational_sqrt(&r),
            Some(BigRational::new(BigInt::from(3), BigInt::from(2)))
        );
        let nr = BigRational::new(BigInt::from(2), BigInt::from(1));
        assert!(Scalar::rational_sqrt(&nr).is_none());
    }
}
