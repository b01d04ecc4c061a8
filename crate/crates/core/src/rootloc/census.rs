use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use super::sturm::{root_bound, sturm_count, SignedRemainderChain};
use crate::error::{Error, Result};
use crate::poly::IntPolynomial;

/// Certified location counts for the roots of a polynomial, with
/// multiplicity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Default)]
pub struct RootCensus {
    pub on_circle: usize,
    pub inside: usize,
    pub outside: usize,
    pub real_gt_1: usize,
    pub real_in_01: usize,
}

impl RootCensus {
    pub fn total(&self) -> usize {
        self.on_circle + self.inside + self.outside
    }
}

/// Splits a reciprocal-or-antireciprocal polynomial into
/// `(z - 1)^a (z + 1)^b h(z)` with `h` reciprocal of even degree.
pub(crate) fn split_plus_minus_one(g: &IntPolynomial) -> (usize, usize, IntPolynomial) {
    let (g, a) = g.remove_factor(&IntPolynomial::linear_root(1));
    let (h, b) = g.remove_factor(&IntPolynomial::linear_root(-1));
    (a, b, h)
}

/// For reciprocal `h` of even degree `2m`, the polynomial `G` of degree `m`
/// with `h(z) / z^m = G(z + 1/z)`.
pub fn reciprocal_to_u(h: &IntPolynomial) -> IntPolynomial {
    debug_assert!(h.is_reciprocal() && h.deg() % 2 == 0);
    let m = h.deg() / 2;
    let u = IntPolynomial::z();
    // V_0 = 2, V_1 = u, V_{k+1} = u V_k - V_{k-1}
    let mut vs = vec![IntPolynomial::constant(BigInt::from(2)), u.clone()];
    for k in 1..m {
        let next = &(&u * &vs[k]) - &vs[k - 1];
        vs.push(next);
    }
    let mut out = IntPolynomial::constant(h.coeff(m));
    for k in 1..=m {
        out = &out + &vs[k].scale(&h.coeff(m + k));
    }
    out
}

/// Real roots of `G` split by position relative to `[-2, 2]`, counted with
/// multiplicity: `(below, inside, above, non_real)`. `G(+-2)` must be
/// nonzero.
pub(crate) fn u_root_positions(g: &IntPolynomial) -> (usize, usize, usize, usize) {
    if g.is_constant() {
        return (0, 0, 0, 0);
    }
    let two = BigRational::from_integer(BigInt::from(2));
    let b = root_bound(g).max(two.clone() + BigRational::one());
    let mut below = 0;
    let mut inside = 0;
    let mut above = 0;
    for (s, m) in g.squarefree_decomposition() {
        below += m * sturm_count(&s, &-b.clone(), &-two.clone());
        inside += m * sturm_count(&s, &-two.clone(), &two);
        above += m * sturm_count(&s, &two, &b);
    }
    let non_real = g.deg() - below - inside - above;
    (below, inside, above, non_real)
}

/// Number of roots of `f` on the unit circle, with multiplicity.
pub fn circle_root_count(f: &IntPolynomial) -> usize {
    assert!(!f.is_zero(), "circle_root_count of zero polynomial");
    let f0 = f.unshift(f.z_valuation());
    if f0.is_constant() {
        return 0;
    }
    let g = f0.gcd(&f0.reversed());
    circle_count_of_selfreciprocal(&g)
}

fn circle_count_of_selfreciprocal(g: &IntPolynomial) -> usize {
    let (a, b, h) = split_plus_minus_one(g);
    let (_, inside, _, _) = u_root_positions(&reciprocal_to_u(&h));
    a + b + 2 * inside
}

/// Roots of `r` strictly inside the unit disc. `r` must have no roots on
/// the circle.
///
/// Uses the Cayley map `z = (w + 1)/(w - 1)`, which sends the disc to the
/// left half-plane, then counts left half-plane roots by a Cauchy index.
fn inside_count_circle_free(r: &IntPolynomial) -> Result<usize> {
    let n = r.deg();
    if n == 0 {
        return Ok(0);
    }
    let wp1 = IntPolynomial::from_i64(&[1, 1]);
    let wm1 = IntPolynomial::from_i64(&[-1, 1]);
    let mut wm1_pows = vec![IntPolynomial::one()];
    for k in 1..=n {
        let next = &wm1_pows[k - 1] * &wm1;
        wm1_pows.push(next);
    }
    let mut big_f = IntPolynomial::zero();
    for k in (0..=n).rev() {
        big_f = &(&big_f * &wp1) + &wm1_pows[n - k].scale(&r.coeff(k));
    }
    if big_f.deg() != n {
        return Err(Error::DegenerateCensus("root at z = 1".into()));
    }
    // F(iy) = R(y) + i I(y)
    let mut re = Vec::with_capacity(n + 1);
    let mut im = Vec::with_capacity(n + 1);
    for (k, c) in big_f.coeffs().iter().enumerate() {
        let (rc, ic) = match k % 4 {
            0 => (c.clone(), BigInt::zero()),
            1 => (BigInt::zero(), c.clone()),
            2 => (-c, BigInt::zero()),
            _ => (BigInt::zero(), -c),
        };
        re.push(rc);
        im.push(ic);
    }
    let re = IntPolynomial::new(re);
    let im = IntPolynomial::new(im);
    let (chain, sign) = if n % 2 == 0 {
        (SignedRemainderChain::new(&re, &im), -1)
    } else {
        (SignedRemainderChain::new(&im, &re), 1)
    };
    let common = chain.last();
    if !common.is_constant() && super::sturm::real_root_count(common) > 0 {
        return Err(Error::DegenerateCensus("root on the imaginary axis after Cayley map".into()));
    }
    let diff = sign * chain.cauchy_index();
    let total = n as i64;
    if (total + diff) % 2 != 0 || diff.abs() > total {
        return Err(Error::DegenerateCensus(format!("inconsistent Cauchy index {diff} for degree {n}")));
    }
    Ok(((total + diff) / 2) as usize)
}

/// Full census of `f`. Roots at zero count as inside.
pub fn disc_root_count(f: &IntPolynomial) -> Result<RootCensus> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial("disc_root_count"));
    }
    let v = f.z_valuation();
    let f0 = f.unshift(v);
    let mut census = RootCensus {
        inside: v,
        ..RootCensus::default()
    };
    if !f0.is_constant() {
        let g = f0.gcd(&f0.reversed());
        let on = circle_count_of_selfreciprocal(&g);
        let paired = g.deg() - on;
        census.on_circle = on;
        census.inside += paired / 2;
        census.outside += paired / 2;
        let r = f0.div_exact(&g).expect("gcd divides");
        let inside = inside_count_circle_free(&r)?;
        census.inside += inside;
        census.outside += r.deg() - inside;
        let (gt1, in01) = positive_real_counts(&f0);
        census.real_gt_1 = gt1;
        census.real_in_01 = in01;
    }
    Ok(census)
}

/// Real roots in `(1, inf)` and `(0, 1)`, with multiplicity.
fn positive_real_counts(f: &IntPolynomial) -> (usize, usize) {
    let one = BigRational::one();
    let zero = BigRational::zero();
    let mut gt1 = 0;
    let mut in01 = 0;
    for (s, m) in f.squarefree_decomposition() {
        let b = root_bound(&s).max(BigRational::from_integer(BigInt::from(2)));
        gt1 += m * sturm_count(&s, &one, &b);
        let at_one = usize::from(s.eval(&BigInt::one()).is_zero());
        in01 += m * (sturm_count(&s, &zero, &one) - at_one);
    }
    (gt1, in01)
}
