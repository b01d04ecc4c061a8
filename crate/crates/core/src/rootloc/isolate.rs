use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive};
use serde::{Serialize, Serializer};

use super::sturm::{root_bound, SignedRemainderChain};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// A half-open interval `(lo, hi]` holding exactly `multiplicity` roots of
/// its polynomial, counted with multiplicity, all equal.
///
/// `hi_is_root` flags the case where the root sits exactly on `hi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IsolatingInterval {
    pub lo: BigRational,
    pub hi: BigRational,
    pub multiplicity: usize,
    pub hi_is_root: bool,
}

impl IsolatingInterval {
    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> BigRational {
        (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2))
    }

    pub fn midpoint_f64(&self) -> f64 {
        rational_to_f64(&self.midpoint())
    }

    pub fn contains(&self, x: f64) -> bool {
        rational_to_f64(&self.lo) <= x && x <= rational_to_f64(&self.hi)
    }

    /// True when the closed hulls are disjoint.
    pub fn disjoint_from(&self, other: &IsolatingInterval) -> bool {
        self.hi < other.lo || other.hi < self.lo
    }

    /// Strictly below the other interval (closed hulls).
    pub fn below(&self, other: &IsolatingInterval) -> bool {
        self.hi < other.lo
    }

    /// Decimal enclosure `[lo, hi]` with `digits` fractional digits, rounded
    /// outward.
    pub fn to_decimal(&self, digits: usize) -> (String, String) {
        (
            decimal(&self.lo, digits, Rounding::Down),
            decimal(&self.hi, digits, Rounding::Up),
        )
    }
}

impl fmt::Display for IsolatingInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (lo, hi) = self.to_decimal(12);
        write!(f, "[{lo}, {hi}]")
    }
}

impl Serialize for IsolatingInterval {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let (lo, hi) = self.to_decimal(12);
        let mut st = s.serialize_struct("IsolatingInterval", 3)?;
        st.serialize_field("lo", &lo)?;
        st.serialize_field("hi", &hi)?;
        st.serialize_field("multiplicity", &self.multiplicity)?;
        st.end()
    }
}

#[derive(Clone, Copy)]
enum Rounding {
    Down,
    Up,
}

fn decimal(x: &BigRational, digits: usize, mode: Rounding) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = x * BigRational::from_integer(scale.clone());
    let n = match mode {
        Rounding::Down => scaled.floor().to_integer(),
        Rounding::Up => scaled.ceil().to_integer(),
    };
    let neg = n.is_negative();
    let (int, frac) = n.abs().div_rem(&scale);
    let sign = if neg { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{int}")
    } else {
        format!("{sign}{int}.{:0>width$}", frac.to_string(), width = digits)
    }
}

pub(crate) fn rational_to_f64(x: &BigRational) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

fn half() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(2))
}

/// Isolates the roots of a square-free polynomial using its Sturm chain,
/// without refining beyond isolation.
fn isolate_squarefree(s: &IntPolynomial, multiplicity: usize) -> Vec<IsolatingInterval> {
    if s.is_constant() {
        return Vec::new();
    }
    let chain = SignedRemainderChain::new(s, &s.derivative());
    let b = root_bound(s);
    let lo = -b.clone();
    let mut out = Vec::new();
    let mut stack = vec![(lo.clone(), b.clone(), chain.variations_at(&lo), chain.variations_at(&b))];
    while let Some((lo, hi, vlo, vhi)) = stack.pop() {
        let count = vlo - vhi;
        if count == 0 {
            continue;
        }
        if count == 1 {
            let hi_is_root = s.sign_at(&hi) == Ordering::Equal;
            out.push(IsolatingInterval {
                lo,
                hi,
                multiplicity,
                hi_is_root,
            });
            continue;
        }
        let mid = (&lo + &hi) * half();
        let vmid = chain.variations_at(&mid);
        stack.push((lo, mid.clone(), vlo, vmid));
        stack.push((mid, hi, vmid, vhi));
    }
    out
}

/// Bisects an interval around a simple root of `s` until its width is at
/// most `width`.
pub(crate) fn refine_simple(s: &IntPolynomial, iv: &mut IsolatingInterval, width: &BigRational) {
    if iv.hi_is_root {
        if iv.width() > *width {
            iv.lo = &iv.hi - width;
        }
        return;
    }
    let shi = s.sign_at(&iv.hi);
    while iv.width() > *width {
        let mid = (&iv.lo + &iv.hi) * half();
        match s.sign_at(&mid) {
            Ordering::Equal => {
                iv.hi = mid;
                iv.hi_is_root = true;
                if iv.width() > *width {
                    iv.lo = &iv.hi - width;
                }
                return;
            }
            sm if sm == shi => iv.hi = mid,
            _ => iv.lo = mid,
        }
    }
}

/// Halves an interval around a simple root of `s` once.
pub(crate) fn bisect_once(s: &IntPolynomial, iv: &mut IsolatingInterval) {
    let w = iv.width() * half();
    refine_simple(s, iv, &w);
}

/// A root of `p` located via one of its square-free factors.
#[derive(Debug, Clone)]
pub(crate) struct TrackedRoot {
    pub factor: usize,
    pub iv: IsolatingInterval,
}

/// Isolates every real root of `p`, refining until intervals from different
/// square-free factors are pairwise disjoint. Returns the factors alongside
/// the tracked roots so callers can refine further.
pub(crate) fn isolate_tracked(p: &IntPolynomial) -> (Vec<IntPolynomial>, Vec<TrackedRoot>) {
    let dec = p.squarefree_decomposition();
    let mut factors = Vec::new();
    let mut roots = Vec::new();
    for (i, (s, m)) in dec.into_iter().enumerate() {
        for iv in isolate_squarefree(&s, m) {
            roots.push(TrackedRoot { factor: i, iv });
        }
        factors.push(s);
    }
    separate(&factors, &mut roots);
    roots.sort_by(|a, b| a.iv.lo.cmp(&b.iv.lo));
    (factors, roots)
}

/// Refines overlapping intervals until all closed hulls are disjoint. Roots
/// must be pairwise distinct.
pub(crate) fn separate(factors: &[IntPolynomial], roots: &mut [TrackedRoot]) {
    loop {
        let mut changed = false;
        for i in 0..roots.len() {
            for j in (i + 1)..roots.len() {
                if roots[i].iv.disjoint_from(&roots[j].iv) {
                    continue;
                }
                changed = true;
                // Shrink the wider one; both if equal.
                let wi = roots[i].iv.width();
                let wj = roots[j].iv.width();
                if wi >= wj {
                    let f = roots[i].factor;
                    shrink_root(&factors[f], &mut roots[i].iv);
                }
                if wj >= wi {
                    let f = roots[j].factor;
                    shrink_root(&factors[f], &mut roots[j].iv);
                }
            }
        }
        if !changed {
            return;
        }
    }
}

fn shrink_root(s: &IntPolynomial, iv: &mut IsolatingInterval) {
    if iv.hi_is_root {
        // Exact root: collapse towards it.
        let w = iv.width() * half();
        iv.lo = &iv.hi - w;
    } else {
        bisect_once(s, iv);
    }
}

/// Disjoint isolating intervals of width at most `width` covering all real
/// roots of `p` with their multiplicities, ordered by midpoint.
pub fn isolate_real_roots(p: &IntPolynomial, width: &BigRational) -> Vec<IsolatingInterval> {
    assert!(width.is_positive(), "width must be positive");
    if p.is_constant() {
        return Vec::new();
    }
    let (factors, mut roots) = isolate_tracked(p);
    for r in roots.iter_mut() {
        refine_simple(&factors[r.factor], &mut r.iv, width);
    }
    let mut out: Vec<IsolatingInterval> = roots.into_iter().map(|r| r.iv).collect();
    out.sort_by_key(|iv| iv.midpoint());
    out
}

/// Narrows an isolating interval of a simple root of `f` to width at most
/// `width`.
pub fn refine_root(f: &IntPolynomial, iv: &IsolatingInterval, width: &BigRational) -> Result<IsolatingInterval> {
    if iv.multiplicity != 1 {
        return Err(Error::NotSimple(iv.multiplicity));
    }
    let mut out = iv.clone();
    if f.sign_at(&out.hi) == Ordering::Equal {
        out.hi_is_root = true;
    }
    refine_simple(f, &mut out, width);
    Ok(out)
}

/// Convenience: `2^-bits` as a rational.
pub fn dyadic_width(bits: u32) -> BigRational {
    BigRational::new(BigInt::one(), BigInt::one() << bits)
}

/// The rational `n / d`.
pub fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl IsolatingInterval {
    /// A simple-root interval with the given endpoints.
    pub fn from_bounds(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo < hi, "interval needs lo < hi");
        Self {
            lo,
            hi,
            multiplicity: 1,
            hi_is_root: false,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn pisot_cubic_root() {
        let ivs = isolate_real_roots(&p(&[-1, -1, 0, 1]), &ratio(1, 1000));
        assert_eq!(ivs.len(), 1);
        assert!(ivs[0].contains(1.324_717_957));
        assert!(ivs[0].width() <= ratio(1, 1000));
    }

    #[test]
    fn quadratic_roots_in_order() {
        let ivs = isolate_real_roots(&p(&[1, -3, 1]), &ratio(1, 1_000_000));
        assert_eq!(ivs.len(), 2);
        let r = 5f64.sqrt();
        assert!(ivs[0].contains((3.0 - r) / 2.0));
        assert!(ivs[1].contains((3.0 + r) / 2.0));
    }

    #[test]
    fn double_root_at_one() {
        let ivs = isolate_real_roots(&p(&[1, -2, 1]), &ratio(1, 100));
        assert_eq!(ivs.len(), 1);
        assert_eq!(ivs[0].multiplicity, 2);
        assert!(ivs[0].contains(1.0));
        assert!(ivs[0].hi_is_root);
    }

    #[test]
    fn refine_examples() {
        let lehmer = p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1]);
        let ivs = isolate_real_roots(&lehmer, &ratio(1, 4));
        let top = ivs.last().unwrap();
        let fine = refine_root(&lehmer, top, &ratio(1, 1_000_000)).unwrap();
        assert!(fine.contains(1.176_280_818));
        assert!(fine.width() <= ratio(1, 1_000_000));

        let lin = p(&[-2, 1]);
        let ivs = isolate_real_roots(&lin, &ratio(1, 2));
        let fine = refine_root(&lin, &ivs[0], &ratio(1, 1 << 20)).unwrap();
        assert!(fine.contains(2.0));
    }

    #[test]
    fn refine_rejects_multiple_root() {
        let f = p(&[1, -2, 1]);
        let ivs = isolate_real_roots(&f, &ratio(1, 2));
        assert_eq!(refine_root(&f, &ivs[0], &ratio(1, 8)), Err(Error::NotSimple(2)));
    }

    #[test]
    fn roots_from_different_factors_are_separated() {
        // Roots 1/3 (simple) and 1/3 + 1/1024 (double) are close.
        let a = p(&[-1, 3]);
        let b = p(&[-1027, 3072]).pow(2);
        let ivs = isolate_real_roots(&(a * b), &ratio(1, 2));
        assert_eq!(ivs.len(), 2);
        assert!(ivs[0].below(&ivs[1]));
        assert_eq!(ivs[0].multiplicity, 1);
        assert_eq!(ivs[1].multiplicity, 2);
    }

    #[test]
    fn decimal_rendering_rounds_outward() {
        let iv = IsolatingInterval::from_bounds(ratio(-1, 3), ratio(2, 3));
        assert_eq!(iv.to_decimal(3), ("-0.334".to_string(), "0.667".to_string()));
    }
}
