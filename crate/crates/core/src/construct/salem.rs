//! Salem numbers from CC, CS and SS quotients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::result::{certify, ConstructionResult, Expect};
use crate::error::{Error, Result};
use crate::interlace::{classify_quotient, limit_at_one, InterlaceKind, LimitAtOne, RationalFunction};
use crate::poly::IntPolynomial;

/// Which equation of the product construction to solve.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum ProductVariant {
    /// `(g1 - 1 - 1/z)(g2 - 1 - 1/z) = 1/z`.
    I,
    /// `g1 g2 = 1/z`.
    II,
}

impl std::str::FromStr for ProductVariant {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "I" | "i" | "1" => Ok(ProductVariant::I),
            "II" | "ii" | "2" => Ok(ProductVariant::II),
            _ => Err(Error::Parse {
                line: 1,
                column: 1,
                message: format!("unknown variant {s:?}; expected I or II"),
            }),
        }
    }
}

/// `(z^2 - 1) P - z Q`, the cleared form of `Q/((z - 1) P) = 1 + 1/z`.
pub fn salem_raw(q: &IntPolynomial, p: &IntPolynomial) -> IntPolynomial {
    let z2m1 = IntPolynomial::from_i64(&[-1, 0, 1]);
    &(&z2m1 * p) - &(&IntPolynomial::z() * q)
}

/// `g = Q / ((z - 1) P)`.
pub(crate) fn g_of(q: &IntPolynomial, p: &IntPolynomial) -> Result<RationalFunction> {
    RationalFunction::over_z_minus_one(q, p)
}

fn require_monic(p: &IntPolynomial) -> Result<()> {
    if p.is_monic() {
        Ok(())
    } else {
        Err(Error::NotMonic)
    }
}

fn two() -> BigRational {
    BigRational::from_integer(BigInt::from(2))
}

/// Solutions of `Q/((z - 1) P) = 1 + 1/z` for a CC quotient.
pub fn salem_cc(q: &IntPolynomial, p: &IntPolynomial) -> Result<ConstructionResult> {
    let c = classify_quotient(q, p);
    if c.kind != InterlaceKind::CC {
        return Err(Error::NotCc(describe(&c.kind, &c.failure_reason)));
    }
    require_monic(p)?;
    let one = BigInt::one();
    let p1 = p.eval(&one);
    let holds = p1.is_zero() || (q.eval(&one).is_zero() && q.derivative().eval(&one) > &p1 * 2);
    if !holds {
        return Err(Error::ConditionAtOneFails(format!(
            "need P(1) = 0, or Q(1) = 0 and Q'(1) > 2 P(1); limit of Q/((z-1)P) is {}",
            limit_at_one(&g_of(q, p)?)
        )));
    }
    certify(salem_raw(q, p), Expect::Salem, Vec::new())
}

/// The product construction for two CC quotients.
pub fn salem_cc_product(
    q1: &IntPolynomial,
    p1: &IntPolynomial,
    q2: &IntPolynomial,
    p2: &IntPolynomial,
    variant: ProductVariant,
) -> Result<ConstructionResult> {
    for (q, p) in [(q1, p1), (q2, p2)] {
        let c = classify_quotient(q, p);
        if c.kind != InterlaceKind::CC {
            return Err(Error::NotCc(describe(&c.kind, &c.failure_reason)));
        }
    }
    require_monic(p1)?;
    require_monic(p2)?;
    let g1 = g_of(q1, p1)?;
    let g2 = g_of(q2, p2)?;
    let zm1_sq = IntPolynomial::from_i64(&[1, -2, 1]);
    let z = IntPolynomial::z();
    let raw = match variant {
        ProductVariant::I => {
            let shift = RationalFunction::one_plus_inv_z();
            let lim = limit_at_one(&(&(&g1 - &shift) * &(&g2 - &shift)));
            if !lim.less_than(&BigRational::one()) {
                return Err(Error::ConditionAtOneFails(format!(
                    "limit of (g1 - 1 - 1/z)(g2 - 1 - 1/z) is {lim}, need < 1"
                )));
            }
            &(&salem_raw(q1, p1) * &salem_raw(q2, p2)) - &(&(&z * &zm1_sq) * &(p1 * p2))
        }
        ProductVariant::II => {
            let lim = limit_at_one(&(&g1 * &g2));
            if !lim.greater_than(&BigRational::one()) {
                return Err(Error::ConditionAtOneFails(format!("limit of g1 g2 is {lim}, need > 1")));
            }
            &(&zm1_sq * &(p1 * p2)) - &(&z * &(q1 * q2))
        }
    };
    certify(raw, Expect::Salem, vec![format!("product variant {variant:?}")])
}

/// Solutions of `Q/((z - 1) P) = 1 + 1/z` for a CS quotient.
pub fn salem_cs(q: &IntPolynomial, p: &IntPolynomial) -> Result<ConstructionResult> {
    let c = classify_quotient(q, p);
    if c.kind != InterlaceKind::CS {
        return Err(Error::NotCs(describe(&c.kind, &c.failure_reason)));
    }
    require_monic(p)?;
    certify(salem_raw(q, p), Expect::Salem, Vec::new())
}

/// Solutions of `Q/((z - 1) P) = 1 + 1/z` for an SS quotient with limit at
/// most 2 (type 1) or below 2 (type 2) at `z = 1`.
pub fn salem_ss(q: &IntPolynomial, p: &IntPolynomial) -> Result<ConstructionResult> {
    let c = classify_quotient(q, p);
    if !c.kind.is_ss() {
        return Err(Error::NotSs(describe(&c.kind, &c.failure_reason)));
    }
    require_monic(p)?;
    let lim = limit_at_one(&g_of(q, p)?);
    let ok = match c.kind {
        InterlaceKind::SS1 => lim.at_most(&two()),
        _ => lim.less_than(&two()),
    };
    if !ok {
        let rel = if c.kind == InterlaceKind::SS1 { "<= 2" } else { "< 2" };
        return Err(Error::ConditionAtOneFails(format!(
            "limit of Q/((z-1)P) is {lim}, need {rel} for {}",
            c.kind
        )));
    }
    let mut notes = vec![format!("{} input", c.kind)];
    if lim == LimitAtOne::Finite(two()) {
        notes.push("limit equals 2 (weak inequality)".into());
    }
    certify(salem_raw(q, p), Expect::Salem, notes)
}

pub(crate) fn describe(kind: &InterlaceKind, reason: &Option<String>) -> String {
    match reason {
        Some(r) => format!("{kind} ({r})"),
        None => kind.to_string(),
    }
}
