//! Salem's sequence `P_k = (z^k A - A*) / (z - 1)`.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::construct::{pisot_ss, ConstructionResult, LimitFunctionSpec};
use crate::error::{Error, Result};
use crate::interlace::{classify_quotient, InterlaceKind, InterlacingClassification, RationalFunction};
use crate::poly::{classify_poly, IntPolynomial, PolyKind};

/// `P_k(z) = (z^k A(z) - A*(z)) / (z - 1)`.
pub fn pk(a: &IntPolynomial, k: usize) -> Result<IntPolynomial> {
    let a_star = a.star()?;
    (&a.shift(k) - &a_star).div_exact(&IntPolynomial::linear_root(1))
}

/// `P_k(1) = k A(1) + A'(1) - (A*)'(1)`.
pub fn pk_at_one(a: &IntPolynomial, k: usize) -> Result<BigInt> {
    let one = BigInt::one();
    let a_star = a.star()?;
    Ok(a.eval(&one) * BigInt::from(k) + a.derivative().eval(&one) - a_star.derivative().eval(&one))
}

/// The classification of `(z - 1) P_k / P_{k+1}` after cancelling common
/// factors.
pub fn classify_pk_quotient(pk: &IntPolynomial, pk1: &IntPolynomial) -> InterlacingClassification {
    let f = RationalFunction::from_parts(&IntPolynomial::linear_root(1) * pk, pk1.clone());
    classify_quotient(f.num(), f.den())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PkEntry {
    pub k: usize,
    pub pk: IntPolynomial,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub value_at_one: BigInt,
    /// Classification of `(z - 1) P_k / P_{k+1}`.
    pub classification: InterlacingClassification,
}

impl PkEntry {
    pub fn kind(&self) -> InterlaceKind {
        self.classification.kind
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PkSequence {
    pub a: IntPolynomial,
    pub entries: Vec<PkEntry>,
    /// Smallest `k >= 1` with `P_k(1) < 0`.
    pub onset_k0: usize,
    /// The source is a reciprocal quadratic Pisot polynomial.
    pub reciprocal_quadratic: bool,
}

/// Smallest `k >= 1` with `P_k(1) < 0`, for `A(1) < 0`.
pub fn onset(a: &IntPolynomial) -> Result<usize> {
    let one = BigInt::one();
    let a1 = a.eval(&one);
    if a1 >= BigInt::from(0) {
        return Err(Error::NotPisot(format!("A(1) = {a1} is not negative")));
    }
    // k A(1) + c < 0  <=>  k > c / |A(1)|
    let c = pk_at_one(a, 0)?;
    let step = -a1;
    let k = if c < BigInt::from(0) {
        1
    } else {
        let q: BigInt = &c / &step + 1;
        usize::try_from(q).map_err(|_| Error::NotPisot("onset index out of range".into()))?.max(1)
    };
    Ok(k)
}

fn require_pisot(a: &IntPolynomial) -> Result<bool> {
    let c = classify_poly(a)?;
    let pure = c.cofactor.is_one() && c.z_power == 0;
    match c.kind {
        PolyKind::Pisot if pure => Ok(false),
        PolyKind::RecipQuadPisot if pure => Ok(true),
        k => Err(Error::NotPisot(format!("{a} classifies as {}", k.tag()))),
    }
}

/// `P_1, ..., P_{k_max}` with the classification of each consecutive
/// quotient.
pub fn pk_sequence(a: &IntPolynomial, k_max: usize) -> Result<PkSequence> {
    let reciprocal_quadratic = require_pisot(a)?;
    let onset_k0 = onset(a)?;
    let mut ps = Vec::with_capacity(k_max + 1);
    for k in 1..=k_max + 1 {
        ps.push(pk(a, k)?);
    }
    let entries = (1..=k_max)
        .map(|k| {
            let (p_k, p_k1) = (&ps[k - 1], &ps[k]);
            Ok(PkEntry {
                k,
                pk: p_k.clone(),
                value_at_one: pk_at_one(a, k)?,
                classification: classify_pk_quotient(p_k, p_k1),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(PkSequence {
        a: a.clone(),
        entries,
        onset_k0,
        reciprocal_quadratic,
    })
}

/// Recovers `A` as the Pisot core of `(z - 1) P_k / ((z - 1) P_{k+1}) = 1`.
pub fn recover_pisot(a: &IntPolynomial, k: usize) -> Result<ConstructionResult> {
    require_pisot(a)?;
    let q = &IntPolynomial::linear_root(1) * &pk(a, k)?;
    let p = pk(a, k + 1)?;
    let r = pisot_ss(&q, &p, &LimitFunctionSpec::inv_z())?;
    let target = a.primitive_part();
    let target = target.unshift(target.z_valuation());
    if r.core != target {
        return Err(Error::RoundTripMismatch);
    }
    Ok(r)
}

/// Monic Pisot minimal polynomials of degree `1..=max_degree` with
/// coefficients in `[-bound, bound]` and nonzero constant term.
/// Reciprocal quadratics are left out.
pub fn pisot_corpus(max_degree: usize, bound: i64) -> Vec<IntPolynomial> {
    let mut out = Vec::new();
    for d in 1..=max_degree {
        let width = (2 * bound + 1) as usize;
        let total = width.pow(d as u32);
        for idx in 0..total {
            let mut coeffs = Vec::with_capacity(d + 1);
            let mut rest = idx;
            for _ in 0..d {
                coeffs.push((rest % width) as i64 - bound);
                rest /= width;
            }
            if coeffs[0] == 0 {
                continue;
            }
            coeffs.push(1);
            let a = IntPolynomial::from_i64(&coeffs);
            if let Ok(c) = classify_poly(&a) {
                if c.kind == PolyKind::Pisot && c.cofactor.is_one() && c.z_power == 0 {
                    out.push(a);
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::cyclotomic;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn small_pk() {
        let a = p(&[-1, -1, 0, 1]);
        assert_eq!(pk(&a, 1).unwrap(), p(&[1, 2, 2, 1]));
        assert_eq!(pk(&a, 2).unwrap(), cyclotomic(5));
        assert_eq!(pk(&a, 8).unwrap(), p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]));
        for k in 0..12 {
            assert_eq!(pk_at_one(&a, k).unwrap(), BigInt::from(7 - k as i64));
        }
        assert_eq!(onset(&a).unwrap(), 8);
    }

    #[test]
    fn rejects_non_pisot() {
        assert!(matches!(pk_sequence(&p(&[-2, 0, 1]), 3), Err(Error::NotPisot(_))));
        let s = pk_sequence(&p(&[1, -3, 1]), 3).unwrap();
        assert!(s.reciprocal_quadratic);
    }
}
