use num_bigint::BigInt;
use serde::Serialize;

use super::{strip_cyclotomic, IntPolynomial};
use crate::error::{Error, Result};
use crate::rootloc::{disc_root_count, RootCensus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum PolyKind {
    Cyclotomic,
    #[serde(rename = "SALEM_POLY")]
    Salem,
    RecipQuadPisot,
    #[serde(rename = "PISOT_POLY")]
    Pisot,
    Other,
}

impl PolyKind {
    pub fn tag(&self) -> &'static str {
        match self {
            PolyKind::Cyclotomic => "CYCLOTOMIC",
            PolyKind::Salem => "SALEM_POLY",
            PolyKind::RecipQuadPisot => "RECIP_QUAD_PISOT",
            PolyKind::Pisot => "PISOT_POLY",
            PolyKind::Other => "OTHER",
        }
    }
}

/// Result of [`classify_poly`]: `z^z_power * core * cofactor` is the
/// primitive part of the input.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyClassification {
    pub kind: PolyKind,
    /// The Salem or Pisot factor when `kind` names one.
    pub factor: Option<IntPolynomial>,
    /// Input with `z^z_power` and the cyclotomic cofactor removed.
    pub core: IntPolynomial,
    pub cofactor: IntPolynomial,
    pub z_power: usize,
    /// Negated subleading coefficient of the core.
    #[serde(serialize_with = "super::serialize_bigint")]
    pub trace: BigInt,
    pub census: RootCensus,
}

/// Classifies a polynomial whose primitive part is monic.
pub fn classify_poly(f: &IntPolynomial) -> Result<PolyClassification> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("classify_poly"));
    }
    let prim = f.primitive_part();
    if !prim.is_monic() {
        return Err(Error::NotMonic);
    }
    let z_power = prim.z_valuation();
    let shifted = prim.unshift(z_power);
    let (core, cofactor) = strip_cyclotomic(&shifted);
    let d = core.deg();
    let trace = if d == 0 { BigInt::default() } else { -core.coeff(d - 1) };
    let census = disc_root_count(&core)?;
    let kind = if core.is_one() {
        PolyKind::Cyclotomic
    } else if core.is_reciprocal() && d == 2 && census.real_gt_1 == 1 {
        PolyKind::RecipQuadPisot
    } else if core.is_reciprocal()
        && d >= 4
        && d % 2 == 0
        && census.outside == 1
        && census.inside == 1
        && census.on_circle == d - 2
        && census.real_gt_1 == 1
    {
        PolyKind::Salem
    } else if census.outside == 1 && census.on_circle == 0 && census.real_gt_1 == 1 {
        PolyKind::Pisot
    } else {
        PolyKind::Other
    };
    let factor = matches!(kind, PolyKind::Salem | PolyKind::RecipQuadPisot | PolyKind::Pisot).then(|| core.clone());
    Ok(PolyClassification {
        kind,
        factor,
        core,
        cofactor,
        z_power,
        trace,
        census,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::cyclotomic;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn lehmer_is_salem_with_trace_minus_one() {
        let c = classify_poly(&p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])).unwrap();
        assert_eq!(c.kind, PolyKind::Salem);
        assert_eq!(c.trace, BigInt::from(-1));
        assert!(c.cofactor.is_one());
    }

    #[test]
    fn small_examples() {
        assert_eq!(classify_poly(&p(&[-1, -1, 0, 1])).unwrap().kind, PolyKind::Pisot);
        assert_eq!(classify_poly(&p(&[1, -3, 1])).unwrap().kind, PolyKind::RecipQuadPisot);
        assert_eq!(classify_poly(&cyclotomic(7)).unwrap().kind, PolyKind::Cyclotomic);
        assert_eq!(classify_poly(&p(&[-2, 0, 1])).unwrap().kind, PolyKind::Other);
    }

    #[test]
    fn powers_of_z_and_content_are_removed() {
        let f = (p(&[0, 0, 0, -1, -1, 0, 1]) * cyclotomic(4)).scale_i64(-3);
        let c = classify_poly(&f).unwrap();
        assert_eq!(c.kind, PolyKind::Pisot);
        assert_eq!(c.z_power, 3);
        assert_eq!(c.cofactor, cyclotomic(4));
        assert_eq!(c.core, p(&[-1, -1, 0, 1]));
    }

    #[test]
    fn non_monic_is_rejected() {
        assert_eq!(classify_poly(&p(&[1, 0, 2])), Err(Error::NotMonic));
    }
}
