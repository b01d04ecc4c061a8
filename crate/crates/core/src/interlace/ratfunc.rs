use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A reduced quotient of integer polynomials. The numerator and denominator
/// share no polynomial factor and no integer content, and the denominator
/// has positive leading coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = if g.is_constant() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides"), den.div_exact(&g).expect("gcd divides"))
        };
        let c = num.content().gcd(&den.content());
        if !c.is_one() {
            num = IntPolynomial::new(num.coeffs().iter().map(|x| x / &c).collect());
            den = IntPolynomial::new(den.coeffs().iter().map(|x| x / &c).collect());
        }
        if den.leading().is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self { num, den })
    }

    /// For callers that have checked `den != 0`.
    pub(crate) fn from_parts(num: IntPolynomial, den: IntPolynomial) -> Self {
        Self::new(num, den).expect("nonzero denominator")
    }

    pub fn zero() -> Self {
        Self {
            num: IntPolynomial::zero(),
            den: IntPolynomial::one(),
        }
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self {
            num: p,
            den: IntPolynomial::one(),
        }
    }

    pub fn constant(c: i64) -> Self {
        Self::from_poly(IntPolynomial::from_i64(&[c]))
    }

    /// `1/z`.
    pub fn inv_z() -> Self {
        Self::from_parts(IntPolynomial::one(), IntPolynomial::z())
    }

    /// `1 + 1/z`.
    pub fn one_plus_inv_z() -> Self {
        Self::from_parts(IntPolynomial::from_i64(&[1, 1]), IntPolynomial::z())
    }

    /// `Q / ((z - 1) P)`.
    pub fn over_z_minus_one(q: &IntPolynomial, p: &IntPolynomial) -> Result<Self> {
        Self::new(q.clone(), &IntPolynomial::linear_root(1) * p)
    }

    pub fn num(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn den(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn into_parts(self) -> (IntPolynomial, IntPolynomial) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn recip(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    /// `f(1/z)`.
    pub fn substitute_inverse(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let dn = self.num.deg();
        let dd = self.den.deg();
        let mut num = self.num.reversed();
        let mut den = self.den.reversed();
        if dd > dn {
            num = num.shift(dd - dn);
        } else {
            den = den.shift(dn - dd);
        }
        Self::from_parts(num, den)
    }

    /// `f(1/z) / z`.
    pub fn tilde(&self) -> Self {
        &self.substitute_inverse() * &Self::inv_z()
    }

    pub fn eval_f64(&self, re: f64, im: f64) -> (f64, f64) {
        let (nr, ni) = eval_complex(&self.num, re, im);
        let (dr, di) = eval_complex(&self.den, re, im);
        let d = dr * dr + di * di;
        ((nr * dr + ni * di) / d, (ni * dr - nr * di) / d)
    }

    /// One-sided limit as `z -> 1+`.
    pub fn limit_at_one(&self) -> LimitAtOne {
        limit_at_one(self)
    }
}

fn eval_complex(p: &IntPolynomial, re: f64, im: f64) -> (f64, f64) {
    let mut acc = (0.0f64, 0.0f64);
    for c in p.coeffs().iter().rev() {
        let c = crate::poly::bigint_to_f64(c);
        acc = (acc.0 * re - acc.1 * im + c, acc.0 * im + acc.1 * re);
    }
    acc
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::from_parts(&self.num + &rhs.num, self.den.clone());
        }
        let g = self.den.gcd(&rhs.den);
        let l = self.den.div_exact(&g).expect("gcd divides");
        let r = rhs.den.div_exact(&g).expect("gcd divides");
        RationalFunction::from_parts(&(&self.num * &r) + &(&rhs.num * &l), &self.den * &r)
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::from_parts(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

/// Value of a one-sided limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitAtOne {
    PlusInf,
    MinusInf,
    Finite(BigRational),
}

impl LimitAtOne {
    pub fn greater_than(&self, c: &BigRational) -> bool {
        match self {
            LimitAtOne::PlusInf => true,
            LimitAtOne::MinusInf => false,
            LimitAtOne::Finite(v) => v > c,
        }
    }

    pub fn less_than(&self, c: &BigRational) -> bool {
        match self {
            LimitAtOne::PlusInf => false,
            LimitAtOne::MinusInf => true,
            LimitAtOne::Finite(v) => v < c,
        }
    }

    pub fn at_most(&self, c: &BigRational) -> bool {
        !self.greater_than(c)
    }
}

impl fmt::Display for LimitAtOne {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LimitAtOne::PlusInf => write!(f, "PLUS_INF"),
            LimitAtOne::MinusInf => write!(f, "MINUS_INF"),
            LimitAtOne::Finite(v) => write!(f, "FINITE({v})"),
        }
    }
}

impl Serialize for LimitAtOne {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// Limit of `f(z)` as `z -> 1` from above, read off from the `(z - 1)`-adic
/// valuations of numerator and denominator.
pub fn limit_at_one(f: &RationalFunction) -> LimitAtOne {
    if f.is_zero() {
        return LimitAtOne::Finite(BigRational::zero());
    }
    let z1 = IntPolynomial::linear_root(1);
    let (n1, a) = f.num.remove_factor(&z1);
    let (d1, b) = f.den.remove_factor(&z1);
    let one = BigInt::one();
    let ratio = BigRational::new(n1.eval(&one), d1.eval(&one));
    match a.cmp(&b) {
        std::cmp::Ordering::Greater => LimitAtOne::Finite(BigRational::zero()),
        std::cmp::Ordering::Equal => LimitAtOne::Finite(ratio),
        std::cmp::Ordering::Less => {
            if ratio.is_positive() {
                LimitAtOne::PlusInf
            } else {
                LimitAtOne::MinusInf
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn reduction_is_canonical() {
        let f = RationalFunction::new(p(&[2, -2]), p(&[-1, 0, 1]).scale_i64(-2)).unwrap();
        // (2 - 2z) / (-2 (z^2 - 1)) = 1/(z + 1)
        assert_eq!(f.num(), &p(&[1]));
        assert_eq!(f.den(), &p(&[1, 1]));
    }

    #[test]
    fn limits() {
        let f = RationalFunction::new(p(&[2]), p(&[1, 1])).unwrap();
        assert_eq!(limit_at_one(&f), LimitAtOne::Finite(q(1, 1)));
        let g = RationalFunction::new(p(&[1]), p(&[1, -1])).unwrap();
        assert_eq!(limit_at_one(&g), LimitAtOne::MinusInf);
        let h = RationalFunction::new(p(&[-1, 1]), p(&[3, 1])).unwrap();
        assert_eq!(limit_at_one(&h), LimitAtOne::Finite(q(0, 1)));
    }

    #[test]
    fn arithmetic_matches_evaluation() {
        let a = RationalFunction::new(p(&[1, 2]), p(&[-1, 0, 1])).unwrap();
        let b = RationalFunction::new(p(&[3]), p(&[1, 1])).unwrap();
        let s = &a + &b;
        let m = &a * &b;
        let x = 1.7;
        let (av, _) = a.eval_f64(x, 0.0);
        let (bv, _) = b.eval_f64(x, 0.0);
        assert!((s.eval_f64(x, 0.0).0 - (av + bv)).abs() < 1e-12);
        assert!((m.eval_f64(x, 0.0).0 - av * bv).abs() < 1e-12);
        let t = a.tilde();
        let (tv, _) = t.eval_f64(x, 0.0);
        let (inv, _) = a.eval_f64(1.0 / x, 0.0);
        assert!((tv - inv / x).abs() < 1e-12);
    }
}
