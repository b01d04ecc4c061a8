use std::fmt;

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::poly::{classify_poly, IntPolynomial, PolyKind};
use crate::rootloc::{dyadic_width, isolate_real_roots, refine_root, IsolatingInterval, RootCensus};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ConstructionKind {
    Salem,
    RecipQuadPisot,
    Pisot,
}

impl fmt::Display for ConstructionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ConstructionKind::Salem => "SALEM",
            ConstructionKind::RecipQuadPisot => "RECIP_QUAD_PISOT",
            ConstructionKind::Pisot => "PISOT",
        })
    }
}

/// A certified Salem or Pisot number produced by a construction.
///
/// `raw = z^z_power * core * cofactor`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionResult {
    /// The cleared, monic polynomial whose roots solve the construction's
    /// equation.
    pub raw: IntPolynomial,
    /// Minimal polynomial of the constructed number.
    pub core: IntPolynomial,
    /// Product of cyclotomic polynomials.
    pub cofactor: IntPolynomial,
    pub z_power: usize,
    /// Enclosure of the unique real root of `core` above 1.
    pub root: IsolatingInterval,
    pub kind: ConstructionKind,
    /// Census of `raw`.
    pub census: RootCensus,
    #[serde(serialize_with = "crate::poly::serialize_bigint")]
    pub trace: BigInt,
    pub notes: Vec<String>,
}

/// Bits of precision kept in the root enclosure.
const ROOT_BITS: u32 = 64;

/// Makes `n` monic by a sign flip, or fails with an internal error.
pub(crate) fn monic_by_sign(n: IntPolynomial) -> Result<IntPolynomial> {
    let lead = n.leading();
    if lead == BigInt::from(1) {
        Ok(n)
    } else if lead == BigInt::from(-1) {
        Ok(-n)
    } else {
        Err(Error::NonMonicCleared(lead.to_string()))
    }
}

/// Which kinds of core a construction promises.
#[derive(Clone, Copy, PartialEq, Eq)]
pub(crate) enum Expect {
    Salem,
    Pisot,
}

/// Splits `raw`, certifies the census demanded by `expect` and encloses
/// the root above 1.
pub(crate) fn certify(raw: IntPolynomial, expect: Expect, notes: Vec<String>) -> Result<ConstructionResult> {
    let raw = monic_by_sign(raw)?;
    let c = classify_poly(&raw)?;
    let core_census = c.census;
    let on_cofactor = c.cofactor.deg();
    let census = RootCensus {
        on_circle: core_census.on_circle + on_cofactor,
        inside: core_census.inside + c.z_power,
        outside: core_census.outside,
        real_gt_1: core_census.real_gt_1,
        real_in_01: core_census.real_in_01,
    };
    let kind = match (expect, c.kind) {
        (Expect::Salem, PolyKind::Salem) => ConstructionKind::Salem,
        (_, PolyKind::RecipQuadPisot) => ConstructionKind::RecipQuadPisot,
        (Expect::Pisot, PolyKind::Pisot) => ConstructionKind::Pisot,
        (_, other) => {
            return Err(Error::UnexpectedCensus(format!(
                "core {} classifies as {} with census {:?}",
                c.core,
                other.tag(),
                core_census
            )))
        }
    };
    let shape_ok = match kind {
        ConstructionKind::Salem => {
            core_census.outside == 1 && core_census.inside == 1 && core_census.on_circle + 2 == c.core.deg()
        }
        ConstructionKind::RecipQuadPisot => core_census.outside == 1 && core_census.inside == 1,
        ConstructionKind::Pisot => core_census.outside == 1 && core_census.on_circle == 0,
    };
    if !shape_ok || census.outside != 1 {
        return Err(Error::UnexpectedCensus(format!("census {census:?} for kind {kind}")));
    }
    let root = largest_real_root(&c.core)?;
    Ok(ConstructionResult {
        raw,
        core: c.core,
        cofactor: c.cofactor,
        z_power: c.z_power,
        root,
        kind,
        census,
        trace: c.trace,
        notes,
    })
}

/// Enclosure of the largest real root of a square-free polynomial.
pub(crate) fn largest_real_root(f: &IntPolynomial) -> Result<IsolatingInterval> {
    let quarter = crate::rootloc::ratio(1, 4);
    let iv = isolate_real_roots(f, &quarter)
        .pop()
        .ok_or_else(|| Error::UnexpectedCensus("no real root".into()))?;
    refine_root(f, &iv, &dyadic_width(ROOT_BITS))
}
