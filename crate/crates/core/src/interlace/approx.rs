//! Sums of interlacing quotients and the CC approximants of special limit
//! functions.

use num_bigint::BigInt;

use super::classify::{classify_quotient, InterlaceKind, InterlacingClassification};
use super::ratfunc::RationalFunction;
use crate::construct::LimitFunctionSpec;
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A reduced sum `Q1/P1 + Q2/P2` with the classification of the result.
#[derive(Debug, Clone)]
pub struct QuotientSum {
    pub sum: RationalFunction,
    pub kind: InterlaceKind,
    pub classification: InterlacingClassification,
}

/// Adds two interlacing quotients. At least one summand must be CC.
pub fn sum_quotients(
    q1: &IntPolynomial,
    p1: &IntPolynomial,
    q2: &IntPolynomial,
    p2: &IntPolynomial,
) -> Result<QuotientSum> {
    let k1 = classify_quotient(q1, p1);
    let k2 = classify_quotient(q2, p2);
    for k in [&k1, &k2] {
        if k.kind == InterlaceKind::None {
            return Err(Error::NotInterlacing(k.failure_reason.clone().unwrap_or_default()));
        }
    }
    if k1.kind != InterlaceKind::CC && k2.kind != InterlaceKind::CC {
        return Err(Error::UnsupportedSum);
    }
    let sum = &RationalFunction::new(q1.clone(), p1.clone())? + &RationalFunction::new(q2.clone(), p2.clone())?;
    let classification = classify_quotient(sum.num(), sum.den());
    Ok(QuotientSum {
        sum,
        kind: classification.kind,
        classification,
    })
}

/// `Q_n / P_n` approximating `(z - 1) h(z)` for the special limit function
/// `h` of `spec`: each family contributes its CC term and the terms are
/// added as rational functions.
pub fn cc_approximant(spec: &LimitFunctionSpec, n: usize) -> Result<RationalFunction> {
    spec.validate()?;
    assert!(n >= 1, "approximant index must be positive");
    let bin = IntPolynomial::binomial;
    let c = |v: i64| BigInt::from(v);
    let mut terms: Vec<RationalFunction> = Vec::new();
    if spec.a > 0 {
        terms.push(RationalFunction::new(bin(n, 1).scale(&c(spec.a)), bin(n, -1))?);
    }
    for &(k, e) in &spec.ai {
        let e = e as usize;
        terms.push(RationalFunction::new((bin(e, -1) * bin(n, -1)).scale(&c(k)), bin(n + e, -1))?);
    }
    for &(k, e) in &spec.bi {
        let e = e as usize;
        terms.push(RationalFunction::new(bin(n + e, -1).scale(&c(k)), bin(e, -1) * bin(n, -1))?);
    }
    for &(k, e) in &spec.ci {
        let e = e as usize;
        terms.push(RationalFunction::new((bin(e, 1) * bin(n, -1)).scale(&c(k)), bin(n + e, 1))?);
    }
    for &(k, e) in &spec.di {
        let e = e as usize;
        terms.push(RationalFunction::new(bin(n + e, 1).scale(&c(k)), bin(e, 1) * bin(n, -1))?);
    }
    Ok(terms
        .iter()
        .fold(RationalFunction::zero(), |acc, t| &acc + t))
}
