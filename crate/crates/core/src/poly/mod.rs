//! Exact univariate polynomials over the integers.
//!
//! [`IntPolynomial`] is the currency of the whole crate: every construction
//! produces one and every certificate is computed from one. Coefficients are
//! arbitrary-precision integers stored in ascending order of degree.

mod classify;
mod cyclotomic;
mod text;

pub use classify::{classify_poly, PolyClassification, PolyKind};
pub use cyclotomic::{cyclotomic, cyclotomic_by_division, strip_cyclotomic, totient};
pub use text::parse_polynomial;

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Integer polynomial with coefficients in ascending order of degree.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector and has no degree.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

/// Binary operations exposed through [`arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    DivExact,
    Gcd,
    /// Integer gcd of every coefficient of both operands, as a constant.
    Content,
}

/// Dispatches one of the basic operations on a pair of polynomials.
pub fn arith(a: &IntPolynomial, b: &IntPolynomial, op: ArithOp) -> Result<IntPolynomial> {
    Ok(match op {
        ArithOp::Add => a + b,
        ArithOp::Sub => a - b,
        ArithOp::Mul => a * b,
        ArithOp::DivExact => a.div_exact(b)?,
        ArithOp::Gcd => a.gcd(b),
        ArithOp::Content => IntPolynomial::constant(a.content().gcd(&b.content())),
    })
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `z`.
    pub fn z() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn monomial(c: BigInt, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    /// `z^n + sign` for `sign` in {-1, +1}; the building block of every
    /// cyclotomic-style quotient in the crate.
    pub fn binomial(n: usize, sign: i64) -> Self {
        let mut coeffs = vec![BigInt::zero(); n + 1];
        coeffs[n] += 1;
        coeffs[0] += sign;
        Self::new(coeffs)
    }

    /// `z - c` for an integer `c`.
    pub fn linear_root(c: i64) -> Self {
        Self::from_i64(&[-c, 1])
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Degree with the zero polynomial mapped to 0. Only for call sites that
    /// have already excluded zero.
    pub fn deg(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    /// Coefficient of `z^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    pub fn leading(&self) -> BigInt {
        self.coeffs.last().cloned().unwrap_or_default()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(One::is_one)
    }

    /// Number of leading zero coefficients, i.e. the largest `k` with
    /// `z^k | self`. Zero for the zero polynomial.
    pub fn z_valuation(&self) -> usize {
        self.coeffs.iter().take_while(|c| c.is_zero()).count()
    }

    /// Divides out `z^k` exactly; `k` must not exceed [`Self::z_valuation`].
    pub fn unshift(&self, k: usize) -> Self {
        debug_assert!(k <= self.z_valuation());
        Self::new(self.coeffs[k.min(self.coeffs.len())..].to_vec())
    }

    /// Multiplication by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self { coeffs }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn scale_i64(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }

    /// Gcd of the coefficients (non-negative; zero for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Content divided out, sign chosen so the leading coefficient is
    /// positive.
    pub fn primitive_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut g = self.content();
        if self.leading().is_negative() {
            g = -g;
        }
        if g.is_one() {
            return self.clone();
        }
        Self::new(self.coeffs.iter().map(|c| c / &g).collect())
    }

    /// Sign normalization: multiply by -1 when the leading coefficient is
    /// negative.
    pub fn positive_leading(&self) -> Self {
        if self.leading().is_negative() {
            -self
        } else {
            self.clone()
        }
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * BigInt::from(i))
                .collect(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    /// Sign of the value at a rational point, computed without fractions:
    /// for `x = n/d` with `d > 0` this is the sign of `d^deg * p(x)`.
    pub fn sign_at(&self, x: &BigRational) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let n = x.numer();
        let d = x.denom();
        let mut coeffs = self.coeffs.iter().rev();
        let mut acc = coeffs.next().cloned().unwrap_or_default();
        let mut dpow = BigInt::one();
        for c in coeffs {
            dpow *= d;
            acc = acc * n + c * &dpow;
        }
        acc.sign_ordering()
    }

    /// Sign of the polynomial as `x -> +inf`.
    pub fn sign_at_pos_inf(&self) -> Ordering {
        self.leading().sign_ordering()
    }

    /// Sign of the polynomial as `x -> -inf`.
    pub fn sign_at_neg_inf(&self) -> Ordering {
        let s = self.leading().sign_ordering();
        if self.deg() % 2 == 1 {
            s.reverse()
        } else {
            s
        }
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + bigint_to_f64(c))
    }

    /// Coefficient reversal `z^d p(1/z)` with `d` the exact degree. The zero
    /// polynomial maps to itself.
    pub fn reversed(&self) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.reverse();
        Self::new(coeffs)
    }

    /// `A*(z) = z^d A(1/z)` where `d = deg A`.
    pub fn star(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial("star"));
        }
        Ok(self.reversed())
    }

    pub fn is_reciprocal(&self) -> bool {
        !self.is_zero() && self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn is_antireciprocal(&self) -> bool {
        !self.is_zero()
            && self
                .coeffs
                .iter()
                .zip(self.coeffs.iter().rev())
                .all(|(a, b)| *a == -b)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `p(z^2)`.
    pub fn substitute_square(&self) -> Self {
        let mut coeffs = vec![BigInt::zero(); 2 * self.coeffs.len()];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[2 * i] = c.clone();
        }
        Self::new(coeffs)
    }

    /// `p(-z)`.
    pub fn substitute_neg(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| if i % 2 == 1 { -c } else { c.clone() })
                .collect(),
        )
    }

    /// Quotient and remainder over the rationals, provided the quotient is
    /// integral. Returns `None` when some step of long division would need a
    /// non-integer coefficient.
    pub fn div_rem_integral(&self, d: &Self) -> Result<Option<(Self, Self)>> {
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return Ok(Some((Self::zero(), self.clone())));
        }
        let lead = d.leading();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); self.deg() - dd + 1];
        for i in (0..quot.len()).rev() {
            let top = &rem[i + dd];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(&lead);
            if !r.is_zero() {
                return Ok(None);
            }
            for (j, c) in d.coeffs.iter().enumerate() {
                rem[i + j] -= &q * c;
            }
            quot[i] = q;
        }
        Ok(Some((Self::new(quot), Self::new(rem))))
    }

    /// Exact division over the integers.
    pub fn div_exact(&self, d: &Self) -> Result<Self> {
        match self.div_rem_integral(d)? {
            Some((q, r)) if r.is_zero() => Ok(q),
            _ => Err(Error::InexactDivision),
        }
    }

    /// `Some(self / d)` when `d` divides `self` over the integers.
    pub fn checked_div(&self, d: &Self) -> Option<Self> {
        self.div_exact(d).ok()
    }

    pub fn divides(&self, other: &Self) -> bool {
        other.checked_div(self).is_some()
    }

    /// Largest `k` such that `d^k` divides `self`, dividing it out.
    pub fn remove_factor(&self, d: &Self) -> (Self, usize) {
        let mut cur = self.clone();
        let mut k = 0;
        if d.is_constant() || cur.is_zero() {
            return (cur, 0);
        }
        while let Some(q) = cur.checked_div(d) {
            cur = q;
            k += 1;
        }
        (cur, k)
    }

    /// Sign-preserving pseudo-remainder: `c * self - q * d` for a positive
    /// integer `c`, with degree below `deg d`.
    pub fn pseudo_rem(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "pseudo_rem by zero polynomial");
        let dd = d.deg();
        if self.is_zero() || self.deg() < dd {
            return self.clone();
        }
        let lead = d.leading();
        let lead_abs = lead.abs();
        let mut r = self.coeffs.clone();
        let mut top = r.len() - 1;
        loop {
            let c = r[top].clone();
            if !c.is_zero() {
                // r <- |lead| * r - sign(lead) * c * z^(top - dd) * d
                for x in r.iter_mut() {
                    *x *= &lead_abs;
                }
                let shift = top - dd;
                let factor = if lead.is_negative() { -c } else { c };
                for (j, dc) in d.coeffs.iter().enumerate() {
                    r[shift + j] -= &factor * dc;
                }
            }
            r.pop();
            if r.len() <= dd {
                break;
            }
            top -= 1;
        }
        Self::new(r)
    }

    /// Primitive greatest common divisor with positive leading coefficient.
    pub fn gcd(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.primitive_part();
        }
        if other.is_zero() {
            return self.primitive_part();
        }
        let (mut a, mut b) = if self.deg() >= other.deg() {
            (self.primitive_part(), other.primitive_part())
        } else {
            (other.primitive_part(), self.primitive_part())
        };
        while !b.is_zero() {
            if b.is_constant() {
                return Self::one();
            }
            let r = a.pseudo_rem(&b).primitive_part();
            a = b;
            b = r;
        }
        a.primitive_part()
    }

    pub fn is_coprime(&self, other: &Self) -> bool {
        self.gcd(other).is_constant()
    }

    /// Square-free decomposition `p = c * prod s_i^i` over the integers
    /// (Yun). Returns the non-constant primitive factors with their
    /// multiplicities, in increasing multiplicity.
    pub fn squarefree_decomposition(&self) -> Vec<(IntPolynomial, usize)> {
        let mut out = Vec::new();
        if self.is_constant() {
            return out;
        }
        let f = self.primitive_part();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).ok();
        // Over Z, division of the derivative by the gcd can pick up a
        // rational factor; fall back to the classic repeated-gcd loop.
        if c.is_none() {
            return squarefree_by_repeated_gcd(&f);
        }
        let mut i = 1;
        loop {
            let cc = c.take().expect("set each round");
            let d = &cc - &b.derivative();
            if d.is_zero() {
                if !b.is_constant() {
                    out.push((b.primitive_part(), i));
                }
                break;
            }
            let a = b.gcd(&d);
            if !a.is_constant() {
                out.push((a.clone(), i));
            }
            let nb = b.primitive_part().div_exact(&a).expect("gcd divides");
            let nc = d.div_rem_integral(&a).ok().flatten();
            match nc {
                Some((q, r)) if r.is_zero() => c = Some(q),
                _ => return squarefree_by_repeated_gcd(&f),
            }
            b = nb;
            i += 1;
            if b.is_constant() {
                break;
            }
        }
        out
    }

    /// Square-free part: the product of the distinct irreducible factors.
    pub fn squarefree_part(&self) -> Self {
        if self.is_constant() {
            return self.primitive_part();
        }
        let f = self.primitive_part();
        let g = f.gcd(&f.derivative());
        f.div_exact(&g).expect("gcd divides").primitive_part()
    }

    /// Coefficients as machine integers when they fit.
    pub fn to_i64_vec(&self) -> Option<Vec<i64>> {
        use num_traits::ToPrimitive;
        self.coeffs.iter().map(|c| c.to_i64()).collect()
    }

    /// Ascending comma-separated coefficient list.
    pub fn to_canonical(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.coeffs
            .iter()
            .map(|c| c.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// Fallback square-free decomposition via `gcd(f, f')` chains.
fn squarefree_by_repeated_gcd(f: &IntPolynomial) -> Vec<(IntPolynomial, usize)> {
    // Multiplicity-k part: sqfree(f_{k-1}) / sqfree(f_k) with f_k = gcd(f_{k-1}, f_{k-1}').
    let mut layers = vec![f.primitive_part()];
    while !layers.last().expect("nonempty").is_constant() {
        let last = layers.last().expect("nonempty");
        layers.push(last.gcd(&last.derivative()));
    }
    // radicals r_k = layer_{k-1} / layer_k has every root of multiplicity >= k.
    let radicals: Vec<IntPolynomial> = layers
        .windows(2)
        .map(|w| w[0].div_exact(&w[1]).expect("gcd divides").primitive_part())
        .collect();
    let mut out = Vec::new();
    for k in 0..radicals.len() {
        let next = radicals.get(k + 1).cloned().unwrap_or_else(IntPolynomial::one);
        let s = radicals[k].div_exact(&next).expect("nested radicals").primitive_part();
        if !s.is_constant() {
            out.push((s, k + 1));
        }
    }
    out
}

pub(crate) trait SignOrdering {
    fn sign_ordering(&self) -> Ordering;
}

impl SignOrdering for BigInt {
    fn sign_ordering(&self) -> Ordering {
        if self.is_positive() {
            Ordering::Greater
        } else if self.is_negative() {
            Ordering::Less
        } else {
            Ordering::Equal
        }
    }
}

/// Serializes an integer as a JSON number when it fits in `i64`, else as a
/// decimal string.
pub(crate) fn serialize_bigint<S: Serializer>(c: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    match c.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&c.to_string()),
    }
}

pub(crate) fn bigint_to_f64(c: &BigInt) -> f64 {
    use num_traits::ToPrimitive;
    c.to_f64().unwrap_or(if c.is_negative() {
        f64::NEG_INFINITY
    } else {
        f64::INFINITY
    })
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPolynomial[{}]", self.to_canonical())
    }
}

impl fmt::Display for IntPolynomial {
    /// Human-readable expression in `z`, highest degree first.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_mag = !mag.is_one() || i == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}z", if show_mag { "*" } else { "" })?,
                _ => write!(f, "{}z^{i}", if show_mag { "*" } else { "" })?,
            }
        }
        Ok(())
    }
}

impl Serialize for IntPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        // Machine integers when they fit, decimal strings otherwise.
        use serde::ser::SerializeSeq;
        use num_traits::ToPrimitive;
        let mut seq = s.serialize_seq(Some(self.coeffs.len()))?;
        for c in &self.coeffs {
            match c.to_i64() {
                Some(v) => seq.serialize_element(&v)?,
                None => seq.serialize_element(&c.to_string())?,
            }
        }
        seq.end()
    }
}

impl<'de> Deserialize<'de> for IntPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Coeff {
            Int(i64),
            Text(String),
        }
        let raw: Vec<Coeff> = Vec::deserialize(d)?;
        let coeffs = raw
            .into_iter()
            .map(|c| match c {
                Coeff::Int(v) => Ok(BigInt::from(v)),
                Coeff::Text(t) => t.parse::<BigInt>().map_err(serde::de::Error::custom),
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        Ok(IntPolynomial::new(coeffs))
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        IntPolynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Neg for IntPolynomial {
    type Output = IntPolynomial;
    fn neg(self) -> IntPolynomial {
        -&self
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;
    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(r) = rhs.coeffs.get(i) {
                c += r;
            }
            out.push(c);
        }
        IntPolynomial::new(out)
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;
    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut c = self.coeffs.get(i).cloned().unwrap_or_default();
            if let Some(r) = rhs.coeffs.get(i) {
                c -= r;
            }
            out.push(c);
        }
        IntPolynomial::new(out)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;
    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

macro_rules! forward_owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                (&self).$m(&rhs)
            }
        }
        impl $tr<&IntPolynomial> for IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: &IntPolynomial) -> IntPolynomial {
                (&self).$m(rhs)
            }
        }
        impl $tr<IntPolynomial> for &IntPolynomial {
            type Output = IntPolynomial;
            fn $m(self, rhs: IntPolynomial) -> IntPolynomial {
                self.$m(&rhs)
            }
        }
    };
}

forward_owned_binop!(Add, add);
forward_owned_binop!(Sub, sub);
forward_owned_binop!(Mul, mul);

impl std::iter::Product for IntPolynomial {
    fn product<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::one(), |acc, p| &acc * &p)
    }
}

impl std::iter::Sum for IntPolynomial {
    fn sum<I: Iterator<Item = IntPolynomial>>(iter: I) -> Self {
        iter.fold(IntPolynomial::zero(), |acc, p| &acc + &p)
    }
}
