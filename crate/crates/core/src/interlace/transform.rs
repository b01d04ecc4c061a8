//! The map `x = sqrt(z) + 1/sqrt(z)` from the unit circle to `[-2, 2]`.
//!
//! With `z = w^2` and `x = w + 1/w`, a reciprocal `R` of degree `d`
//! satisfies `R(w^2) / w^d = T_R(x)` and an antireciprocal `A` satisfies
//! `A(w^2) / w^d = (w - 1/w) S_A(x)`.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::IntPolynomial;
use crate::rootloc::{isolate_real_roots, sturm_count, IsolatingInterval};

/// `w^k + w^-k` as polynomials in `x`, for `k = 0..=n`.
fn chebyshev_v(n: usize) -> Vec<IntPolynomial> {
    let x = IntPolynomial::z();
    let mut v = vec![IntPolynomial::constant(BigInt::from(2)), x.clone()];
    for k in 1..n {
        let next = &(&x * &v[k]) - &v[k - 1];
        v.push(next);
    }
    v.truncate(n + 1);
    v
}

/// `(w^(k+1) - w^-(k+1)) / (w - 1/w)` as polynomials in `x`, for `k = 0..=n`.
fn chebyshev_u(n: usize) -> Vec<IntPolynomial> {
    let x = IntPolynomial::z();
    let mut u = vec![IntPolynomial::one(), x.clone()];
    for k in 1..n {
        let next = &(&x * &u[k]) - &u[k - 1];
        u.push(next);
    }
    u.truncate(n + 1);
    u
}

/// `T_R` for a reciprocal `R`.
pub fn reciprocal_to_x(r: &IntPolynomial) -> IntPolynomial {
    debug_assert!(r.is_reciprocal());
    let d = r.deg();
    let v = chebyshev_v(d);
    let mut out = if d % 2 == 0 {
        IntPolynomial::constant(r.coeff(d / 2))
    } else {
        IntPolynomial::zero()
    };
    for i in (d / 2 + 1)..=d {
        out = &out + &v[2 * i - d].scale(&r.coeff(i));
    }
    out
}

/// `S_A` for an antireciprocal `A`.
pub fn antireciprocal_to_x(a: &IntPolynomial) -> IntPolynomial {
    debug_assert!(a.is_antireciprocal());
    let d = a.deg();
    let u = chebyshev_u(d);
    let mut out = IntPolynomial::zero();
    for i in (d / 2 + 1)..=d {
        out = &out + &u[2 * i - d - 1].scale(&a.coeff(i));
    }
    out
}

/// Sign of the partial-fraction coefficient at one pole of `q/p`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Residue {
    pub pole: IsolatingInterval,
    pub positive: bool,
}

/// The real image `q(x)/p(x)` of `sqrt(z) Q(z) / ((z - 1) P(z))`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RealQuotient {
    pub q: IntPolynomial,
    pub p: IntPolynomial,
    /// Residue signs at the poles, in increasing order; `None` when `p` has a
    /// repeated root.
    pub residues: Option<Vec<Residue>>,
}

impl RealQuotient {
    /// One of `q`, `p` is even and the other odd.
    pub fn is_odd_function(&self) -> bool {
        parity(&self.q).zip(parity(&self.p)).is_some_and(|(a, b)| a != b)
    }

    pub fn negative_residue_count(&self) -> Option<usize> {
        self.residues.as_ref().map(|r| r.iter().filter(|x| !x.positive).count())
    }
}

/// `Some(0)` for an even polynomial, `Some(1)` for an odd one.
fn parity(p: &IntPolynomial) -> Option<usize> {
    if p.is_zero() {
        return None;
    }
    let d = p.deg() % 2;
    p.coeffs()
        .iter()
        .enumerate()
        .all(|(i, c)| i % 2 == d || num_traits::Zero::is_zero(c))
        .then_some(d)
}

/// Transforms `Q/P` to the real line.
pub fn real_quotient(q: &IntPolynomial, p: &IntPolynomial) -> Result<RealQuotient> {
    if q.is_zero() || p.is_zero() {
        return Err(Error::NotTransformable("zero polynomial".into()));
    }
    if q.deg() != p.deg() {
        return Err(Error::NotTransformable(format!(
            "degrees differ ({} vs {})",
            q.deg(),
            p.deg()
        )));
    }
    let (qx, px) = if q.is_antireciprocal() && p.is_reciprocal() {
        (antireciprocal_to_x(q), reciprocal_to_x(p))
    } else if q.is_reciprocal() && p.is_antireciprocal() {
        let x2m4 = IntPolynomial::from_i64(&[-4, 0, 1]);
        (reciprocal_to_x(q), &x2m4 * &antireciprocal_to_x(p))
    } else {
        return Err(Error::NotTransformable(
            "need one reciprocal and one antireciprocal polynomial".into(),
        ));
    };
    let g = qx.gcd(&px);
    let (mut qx, mut px) = (qx.div_exact(&g).expect("gcd divides"), px.div_exact(&g).expect("gcd divides"));
    if px.leading() < BigInt::from(0) {
        qx = -qx;
        px = -px;
    }
    let residues = residue_signs(&qx, &px);
    Ok(RealQuotient {
        q: qx,
        p: px,
        residues,
    })
}

/// Signs of `q(a)/p'(a)` at each root `a` of `p`, from enclosures on which
/// neither `q` nor `p'` vanishes.
fn residue_signs(q: &IntPolynomial, p: &IntPolynomial) -> Option<Vec<Residue>> {
    if p.squarefree_part().deg() != p.deg() {
        return None;
    }
    let dp = p.derivative();
    let start = BigRational::new(BigInt::one(), BigInt::from(4));
    let mut out = Vec::new();
    for mut iv in isolate_real_roots(p, &start) {
        loop {
            if clean_on(q, &iv) && clean_on(&dp, &iv) {
                break;
            }
            let w = iv.width() / BigRational::from_integer(BigInt::from(2));
            crate::rootloc::refine_simple(p, &mut iv, &w);
        }
        let sign = q.sign_at(&iv.hi) == dp.sign_at(&iv.hi);
        out.push(Residue { pole: iv, positive: sign });
    }
    Some(out)
}

/// `f` has no root in the closed interval `[lo, hi]`.
fn clean_on(f: &IntPolynomial, iv: &IsolatingInterval) -> bool {
    if f.is_constant() {
        return !f.is_zero();
    }
    f.sign_at(&iv.lo) != Ordering::Equal && sturm_count(f, &iv.lo, &iv.hi) == 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn chebyshev_transforms() {
        // z^2 + 1 -> w^2 + w^-2 = x^2 - 2
        assert_eq!(reciprocal_to_x(&p(&[1, 0, 1])), p(&[-2, 0, 1]));
        // z + 1 -> w + 1/w = x
        assert_eq!(reciprocal_to_x(&p(&[1, 1])), p(&[0, 1]));
        // z - 1 -> (w - 1/w) * 1
        assert_eq!(antireciprocal_to_x(&p(&[-1, 1])), p(&[1]));
        // z^2 - 1 -> (w - 1/w)(w + 1/w)
        assert_eq!(antireciprocal_to_x(&p(&[-1, 0, 1])), p(&[0, 1]));
    }

    #[test]
    fn simplest_quotient() {
        let rq = real_quotient(&p(&[-1, 1]), &p(&[1, 1])).unwrap();
        assert_eq!(rq.q, p(&[1]));
        assert_eq!(rq.p, p(&[0, 1]));
        assert!(rq.is_odd_function());
        assert_eq!(rq.negative_residue_count(), Some(0));
    }

    #[test]
    fn structural_errors() {
        assert!(matches!(
            real_quotient(&p(&[1, 0, 1]), &p(&[1, 1, 1])),
            Err(Error::NotTransformable(_))
        ));
        assert!(matches!(real_quotient(&p(&[-1, 1]), &p(&[1, 0, 1])), Err(Error::NotTransformable(_))));
    }
}
