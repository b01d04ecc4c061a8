//! Boyd's equation `S_eps R = z A + eps A*`, the type classifier and the
//! small-Salem check.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::Serialize;

use super::pk::{classify_pk_quotient, pk};
use crate::construct::largest_real_root;
use crate::error::{Error, Result};
use crate::interlace::InterlaceKind;
use crate::poly::{classify_poly, IntPolynomial, PolyKind};
use crate::rootloc::{dyadic_width, isolate_real_roots, refine_root, IsolatingInterval};

/// `S_1 = z^2 + 1`, `S_-1 = z - 1`.
pub fn boyd_s(epsilon: i64) -> Result<IntPolynomial> {
    match epsilon {
        1 => Ok(IntPolynomial::from_i64(&[1, 0, 1])),
        -1 => Ok(IntPolynomial::from_i64(&[-1, 1])),
        e => Err(Error::BadEpsilon(e)),
    }
}

/// `z A + eps A*` where `A* = z^deg(A) A(1/z)`.
pub fn boyd_rhs(a: &IntPolynomial, epsilon: i64) -> Result<IntPolynomial> {
    Ok(&a.shift(1) + &a.star()?.scale_i64(epsilon))
}

/// True when `S_eps R = z A + eps A*` holds exactly.
pub fn boyd_identity_holds(r: &IntPolynomial, a: &IntPolynomial, epsilon: i64) -> Result<bool> {
    Ok(&boyd_s(epsilon)? * r == boyd_rhs(a, epsilon)?)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoydSolution {
    pub r: IntPolynomial,
    pub epsilon: i64,
    pub s: IntPolynomial,
    pub a: IntPolynomial,
    /// Values of the coefficients `a_0, ..., a_{f-1}` that the equation
    /// leaves free (and, for `eps = -1` with odd `deg A`, the middle one).
    pub free_params: Vec<i64>,
}

/// Worker count for parallel searches: `SALEMFORGE_THREADS` if set.
pub(crate) fn thread_pool() -> rayon::ThreadPool {
    let n = std::env::var("SALEMFORGE_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("thread pool")
}

/// The linear structure of the equation for a given `R` and `eps`.
struct Layout {
    m: usize,
    /// `t_j`, coefficients of `S R`.
    t: Vec<BigInt>,
    /// Indices `i < m - 1 - i` whose coefficient is free.
    pairs: Vec<usize>,
    /// `Some(i)` when `m - 1` is even and `i = (m - 1)/2`.
    middle: Option<usize>,
}

/// All Pisot polynomials `A` with `S_eps R = z A + eps A*` whose free
/// coefficients lie in `[-bound, bound]`, sorted by coefficient vector.
pub fn boyd_solve(r: &IntPolynomial, epsilon: i64, coeff_bound: u32) -> Result<Vec<BoydSolution>> {
    let s = boyd_s(epsilon)?;
    let c = classify_poly(r)?;
    if c.kind != PolyKind::Salem || !c.cofactor.is_one() || c.z_power != 0 || c.core != *r {
        return Err(Error::NotSalem(format!("{r} classifies as {}", c.kind.tag())));
    }
    let sr = &s * r;
    let m = sr.deg() - 1;
    let t: Vec<BigInt> = (0..=m + 1).map(|j| sr.coeff(j)).collect();
    let pairs: Vec<usize> = (0..m).filter(|&i| i < m - 1 - i).collect();
    let middle = ((m - 1) % 2 == 0).then_some((m - 1) / 2);
    let layout = Layout { m, t, pairs, middle };

    // The middle coefficient satisfies (1 + eps) a = t.
    let mut middle_choices: Vec<Option<BigInt>> = vec![None];
    if let Some(i) = layout.middle {
        let ti = &layout.t[i + 1];
        middle_choices = if epsilon == 1 {
            if (ti % 2u32).is_zero() {
                vec![Some(ti / 2)]
            } else {
                return Ok(Vec::new());
            }
        } else if ti.is_zero() {
            (-(coeff_bound as i64)..=coeff_bound as i64).map(|v| Some(BigInt::from(v))).collect()
        } else {
            return Ok(Vec::new());
        };
    }

    let width = 2 * coeff_bound as u64 + 1;
    let free = layout.pairs.len() as u32;
    let per_middle = width.checked_pow(free).expect("search space too large");
    let total = per_middle * middle_choices.len() as u64;
    let pool = thread_pool();
    let mut found: Vec<BoydSolution> = pool.install(|| {
        (0..total)
            .into_par_iter()
            .filter_map(|idx| {
                let mut rest = idx % per_middle;
                let mid = &middle_choices[(idx / per_middle) as usize];
                let mut coeffs = vec![BigInt::zero(); layout.m + 1];
                let mut params = Vec::with_capacity(free as usize + 1);
                for &i in &layout.pairs {
                    let v = (rest % width) as i64 - coeff_bound as i64;
                    rest /= width;
                    params.push(v);
                    coeffs[i] = BigInt::from(v);
                    coeffs[layout.m - 1 - i] = (&layout.t[i + 1] - BigInt::from(v)) * epsilon;
                }
                if let (Some(i), Some(v)) = (layout.middle, mid) {
                    coeffs[i] = v.clone();
                    if epsilon == -1 {
                        params.push(v.to_i64().unwrap_or(0));
                    }
                }
                coeffs[layout.m] = BigInt::one();
                let a = IntPolynomial::new(coeffs);
                is_pisot_polynomial(&a).then(|| BoydSolution {
                    r: r.clone(),
                    epsilon,
                    s: s.clone(),
                    a,
                    free_params: params,
                })
            })
            .collect()
    });
    found.sort_by(|x, y| x.a.coeffs().cmp(y.a.coeffs()));
    for f in &found {
        debug_assert!(boyd_identity_holds(r, &f.a, epsilon).unwrap_or(false));
    }
    Ok(found)
}

/// `z^j` times a Pisot (or reciprocal quadratic Pisot) minimal polynomial.
fn is_pisot_polynomial(a: &IntPolynomial) -> bool {
    if !quick_pisot_screen(a) || !super::screen::may_be_pisot(a) {
        return false;
    }
    matches!(classify_poly(a), Ok(c) if c.cofactor.is_one()
        && matches!(c.kind, PolyKind::Pisot | PolyKind::RecipQuadPisot))
}

/// Necessary conditions for a monic `A` to have one root above 1 and all
/// others in the open unit disc: `A(1) < 0` and no real root at or below
/// `-1`.
fn quick_pisot_screen(a: &IntPolynomial) -> bool {
    let one = BigInt::one();
    if !a.eval(&one).is_negative() {
        return false;
    }
    let at_minus_one = a.eval(&-one);
    let sign = if a.deg() % 2 == 0 { at_minus_one } else { -at_minus_one };
    sign.is_positive()
}

/// The four types of Salem number.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SalemType {
    I,
    II,
    III,
    IV,
}

/// Type of the Salem number of `R` as witnessed by `A`: the flavour of
/// `(z - 1) P_1 / P_2`.
pub fn salem_type(r: &IntPolynomial, a: &IntPolynomial) -> Result<SalemType> {
    if !boyd_identity_holds(r, a, 1)? {
        return Err(Error::BoydIdentityFails);
    }
    let p1 = pk(a, 1)?;
    let p2 = pk(a, 2)?;
    let lhs = &p2.scale_i64(2) - &(&IntPolynomial::from_i64(&[1, 1]) * &p1);
    if lhs != &boyd_s(1)? * r {
        return Err(Error::BoydIdentityFails);
    }
    let c = classify_pk_quotient(&p1, &p2);
    match c.kind {
        InterlaceKind::CC => Ok(SalemType::I),
        InterlaceKind::CS => Ok(SalemType::II),
        InterlaceKind::SS1 => Ok(SalemType::III),
        InterlaceKind::SS2 => Ok(SalemType::IV),
        InterlaceKind::None => Err(Error::ClassifyNone(c.failure_reason.unwrap_or_default())),
    }
}

/// Certified content of the small-Salem proposition for one `(R, A)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SmallSalemReport {
    /// Enclosure of the Salem number of `R`.
    pub tau: IsolatingInterval,
    /// Enclosure of the real root of `z^3 - z - 1`.
    pub plastic: IsolatingInterval,
    /// Real roots of `A`, ascending.
    pub real_roots: Vec<IsolatingInterval>,
    /// Index into `real_roots` of a root in `(1/tau, 1)`.
    pub witness: usize,
}

/// Width used for the reported real roots of `A`.
const REPORT_BITS: u32 = 24;

/// Checks that `A` has at least three real roots, one of them in
/// `(1/tau, 1)`, when `tau` is below the smallest Pisot number.
pub fn small_salem_check(r: &IntPolynomial, a: &IntPolynomial) -> Result<SmallSalemReport> {
    if !boyd_identity_holds(r, a, 1)? {
        return Err(Error::BoydIdentityFails);
    }
    let ca = classify_poly(a)?;
    if ca.kind != PolyKind::Pisot || !ca.cofactor.is_one() {
        return Err(Error::NotPisot(format!("{a} classifies as {}", ca.kind.tag())));
    }
    let cr = classify_poly(r)?;
    if cr.kind != PolyKind::Salem {
        return Err(Error::NotSalem(format!("{r} classifies as {}", cr.kind.tag())));
    }
    let plastic_poly = IntPolynomial::from_i64(&[-1, -1, 0, 1]);
    let mut tau = largest_real_root(&cr.core)?;
    let mut plastic = largest_real_root(&plastic_poly)?;
    // Distinct algebraic numbers: refine until the enclosures separate.
    while !tau.disjoint_from(&plastic) {
        let w = tau.width() / BigRational::from_integer(BigInt::from(2));
        tau = refine_root(&cr.core, &tau, &w)?;
        plastic = refine_root(&plastic_poly, &plastic, &w)?;
    }
    if !tau.below(&plastic) {
        return Err(Error::TauNotSmall);
    }

    let real_roots = isolate_real_roots(a, &dyadic_width(REPORT_BITS));
    let n_real: usize = real_roots.iter().map(|iv| iv.multiplicity).sum();
    if n_real < 3 || n_real % 2 != a.deg() % 2 {
        return Err(Error::PropositionFails(format!("A has {n_real} real roots")));
    }
    let inv_tau_hi = tau.lo.recip();
    let one = BigRational::one();
    let witness = real_roots
        .iter()
        .position(|iv| iv.lo >= inv_tau_hi && iv.hi.cmp(&one) == Ordering::Less)
        .ok_or_else(|| Error::PropositionFails("no real root of A certified in (1/tau, 1)".into()))?;
    Ok(SmallSalemReport {
        tau,
        plastic,
        real_roots,
        witness,
    })
}
