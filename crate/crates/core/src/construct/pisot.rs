//! Pisot numbers from interlacing quotients and special CC-limit
//! functions.

use num_rational::BigRational;
use num_traits::One;

use super::result::{certify, ConstructionResult, Expect};
use super::salem::{describe, g_of, ProductVariant};
use super::spec::{special_limit_function, LimitFunctionSpec};
use crate::error::{Error, Result};
use crate::interlace::{classify_quotient, limit_at_one, InterlaceKind, RationalFunction};
use crate::poly::IntPolynomial;

/// `Q = 0, P = 1` stands for the zero quotient.
fn is_zero_quotient(q: &IntPolynomial, p: &IntPolynomial) -> bool {
    q.is_zero() && p.is_one()
}

/// `g = Q/((z - 1) P)` for a CC quotient with monic `P`, or zero.
fn cc_or_zero(q: &IntPolynomial, p: &IntPolynomial) -> Result<RationalFunction> {
    if is_zero_quotient(q, p) {
        return Ok(RationalFunction::zero());
    }
    let c = classify_quotient(q, p);
    if c.kind != InterlaceKind::CC {
        return Err(Error::NotCc(describe(&c.kind, &c.failure_reason)));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    g_of(q, p)
}

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

/// Cleared numerator of `f`, the polynomial whose non-zero roots solve
/// `f = 0`.
fn cleared(f: &RationalFunction) -> IntPolynomial {
    f.num().clone()
}

/// Roots of `g + h - 1 - 1/z` for a CC (or zero) quotient and a special
/// limit function `h`, when `lim (g + h) > 2` at `z = 1+`.
pub fn pisot_cc(q: &IntPolynomial, p: &IntPolynomial, spec: &LimitFunctionSpec) -> Result<ConstructionResult> {
    let g = cc_or_zero(q, p)?;
    let h = special_limit_function(spec)?;
    let gh = &g + &h;
    let lim = limit_at_one(&gh);
    if !lim.greater_than(&two()) {
        return Err(Error::ConditionAtOneFails(format!("limit of g + h is {lim}, need > 2")));
    }
    let f = &gh - &RationalFunction::one_plus_inv_z();
    certify(cleared(&f), Expect::Pisot, Vec::new())
}

/// The product construction for Pisot numbers.
///
/// `h2 = None` stands for the zero limit function.
pub fn pisot_cc_product(
    q1: &IntPolynomial,
    p1: &IntPolynomial,
    spec1: &LimitFunctionSpec,
    q2: &IntPolynomial,
    p2: &IntPolynomial,
    spec2: Option<&LimitFunctionSpec>,
    variant: ProductVariant,
) -> Result<ConstructionResult> {
    let g1 = cc_or_zero(q1, p1)?;
    let g2 = cc_or_zero(q2, p2)?;
    let h1 = special_limit_function(spec1)?;
    let h2 = match spec2 {
        Some(s) => special_limit_function(s)?,
        None => RationalFunction::zero(),
    };
    let shift = match variant {
        ProductVariant::I => RationalFunction::one_plus_inv_z(),
        ProductVariant::II => RationalFunction::zero(),
    };
    let f1 = &(&g1 + &h1) - &shift;
    let f2 = &(&g2 + &h2) - &shift;
    let prod = &f1 * &f2;
    let lim = limit_at_one(&prod);
    let ok = match variant {
        ProductVariant::I => lim.less_than(&BigRational::one()),
        ProductVariant::II => lim.greater_than(&BigRational::one()),
    };
    if !ok {
        let rel = if variant == ProductVariant::I { "< 1" } else { "> 1" };
        return Err(Error::ConditionAtOneFails(format!("limit of the product is {lim}, need {rel}")));
    }
    let f = &prod - &RationalFunction::inv_z();
    certify(cleared(&f), Expect::Pisot, vec![format!("product variant {variant:?}")])
}

/// Roots of `g + h - 1 - 1/z` for a CS or SS quotient, when
/// `lim (g + h) < 2` at `z = 1+`. Type 2 SS inputs are accepted and noted.
pub fn pisot_ss(q: &IntPolynomial, p: &IntPolynomial, spec: &LimitFunctionSpec) -> Result<ConstructionResult> {
    let c = classify_quotient(q, p);
    if !matches!(c.kind, InterlaceKind::CS | InterlaceKind::SS1 | InterlaceKind::SS2) {
        return Err(Error::NotCsOrSs(describe(&c.kind, &c.failure_reason)));
    }
    if !p.is_monic() {
        return Err(Error::NotMonic);
    }
    let g = g_of(q, p)?;
    let h = special_limit_function(spec)?;
    let gh = &g + &h;
    let lim = limit_at_one(&gh);
    if !lim.less_than(&two()) {
        return Err(Error::ConditionAtOneFails(format!("limit of g + h is {lim}, need < 2")));
    }
    let f = &gh - &RationalFunction::one_plus_inv_z();
    let mut notes = vec![format!("{} input", c.kind)];
    if c.kind == InterlaceKind::SS2 {
        notes.push("type 2 SS quotient accepted".into());
    }
    certify(cleared(&f), Expect::Pisot, notes)
}
