//! CC/CS/SS classification of a quotient `Q/P`.
//!
//! Circle roots are compared through `u = z + 1/z`: a conjugate pair
//! `e^{+-it}` becomes the single real point `u = 2 cos t` in `(-2, 2)`,
//! and `z = 1`, `z = -1` become `u = 2`, `u = -2`. Walking the upper half
//! circle from `1` to `-1` visits the pairs in decreasing `u`, and the lower
//! half mirrors it, so interleaving on the circle reduces to alternation of
//! the merged list sorted by `u`.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::Serialize;

use crate::poly::IntPolynomial;
use crate::rootloc::{
    dyadic_width, isolate_real_roots, reciprocal_to_u, refine_simple, separate, split_plus_minus_one, u_root_positions,
    IsolatingInterval, RootCensus, TrackedRoot,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum InterlaceKind {
    CC,
    CS,
    SS1,
    SS2,
    #[serde(rename = "NONE")]
    None,
}

impl InterlaceKind {
    pub fn is_ss(self) -> bool {
        matches!(self, InterlaceKind::SS1 | InterlaceKind::SS2)
    }

    pub fn is_interlacing(self) -> bool {
        self != InterlaceKind::None
    }
}

impl fmt::Display for InterlaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            InterlaceKind::CC => "CC",
            InterlaceKind::CS => "CS",
            InterlaceKind::SS1 => "SS1",
            InterlaceKind::SS2 => "SS2",
            InterlaceKind::None => "NONE",
        };
        f.write_str(s)
    }
}

/// Position of a circle root in the `u` coordinate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum UPosition {
    /// `u = 2` (`z = 1`) or `u = -2` (`z = -1`).
    Exact(i64),
    /// `u` strictly inside `(-2, 2)`; stands for a conjugate pair.
    Interval(IsolatingInterval),
}

impl UPosition {
    /// Approximate `u`, for reporting.
    pub fn approx(&self) -> f64 {
        match self {
            UPosition::Exact(v) => *v as f64,
            UPosition::Interval(iv) => iv.midpoint_f64(),
        }
    }

    fn cmp_key(&self, other: &UPosition) -> Ordering {
        match (self, other) {
            (UPosition::Exact(a), UPosition::Exact(b)) => a.cmp(b),
            (UPosition::Exact(a), UPosition::Interval(_)) => a.cmp(&0),
            (UPosition::Interval(_), UPosition::Exact(b)) => 0.cmp(b),
            (UPosition::Interval(a), UPosition::Interval(b)) => a.lo.cmp(&b.lo),
        }
    }
}

/// A root of `P` or `Q` on the unit circle, in `u` coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CircleRoot {
    pub u: UPosition,
    pub multiplicity: usize,
}

impl CircleRoot {
    /// Argument in `[0, pi]` of the upper-half-plane representative.
    pub fn angle(&self) -> f64 {
        (self.u.approx() / 2.0).clamp(-1.0, 1.0).acos()
    }
}

/// Outcome of [`classify_quotient`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InterlacingClassification {
    pub kind: InterlaceKind,
    /// Circle roots of `P`, ascending in `u`.
    pub circle_roots_p: Vec<CircleRoot>,
    pub circle_roots_q: Vec<CircleRoot>,
    pub census_p: Option<RootCensus>,
    pub census_q: Option<RootCensus>,
    pub failure_reason: Option<String>,
}

impl InterlacingClassification {
    fn none(reason: impl Into<String>) -> Self {
        Self {
            kind: InterlaceKind::None,
            circle_roots_p: Vec::new(),
            circle_roots_q: Vec::new(),
            census_p: None,
            census_q: None,
            failure_reason: Some(reason.into()),
        }
    }
}

/// Root layout of one reciprocal or antireciprocal polynomial.
struct Shape {
    /// Multiplicity of `z = 1`.
    a: usize,
    /// Multiplicity of `z = -1`.
    b: usize,
    /// Square-free image of the remaining factor under `u = z + 1/z`.
    g: IntPolynomial,
    g_squarefree: bool,
    below: usize,
    inside: usize,
    above: usize,
    non_real: usize,
}

impl Shape {
    fn of(f: &IntPolynomial) -> Self {
        let (a, b, h) = split_plus_minus_one(f);
        let g = reciprocal_to_u(&h);
        let (below, inside, above, non_real) = u_root_positions(&g);
        let sf = g.squarefree_part();
        let g_squarefree = sf.deg() == g.deg();
        Shape {
            a,
            b,
            g: sf,
            g_squarefree,
            below,
            inside,
            above,
            non_real,
        }
    }

    /// All roots on the circle.
    fn circle_only(&self) -> bool {
        self.below == 0 && self.above == 0 && self.non_real == 0
    }

    /// All roots on the circle except a pair `theta, 1/theta` with
    /// `theta > 1` real.
    fn salem_like(&self) -> bool {
        self.below == 0 && self.above == 1 && self.non_real == 0
    }

    fn census(&self) -> RootCensus {
        let off = self.below + self.above + self.non_real;
        RootCensus {
            on_circle: self.a + self.b + 2 * self.inside,
            inside: off,
            outside: off,
            real_gt_1: self.above,
            real_in_01: self.above,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Owner {
    P,
    Q,
}

struct Located {
    owner: Owner,
    u: UPosition,
    multiplicity: usize,
}

/// Classifies `Q/P` as CC, CS, SS1, SS2 or NONE.
pub fn classify_quotient(q: &IntPolynomial, p: &IntPolynomial) -> InterlacingClassification {
    if q.is_zero() || p.is_zero() {
        return InterlacingClassification::none("zero polynomial");
    }
    if q.leading() <= BigInt::from(0) || p.leading() <= BigInt::from(0) {
        return InterlacingClassification::none("leading coefficients must be positive");
    }
    if q.deg() != p.deg() {
        return InterlacingClassification::none(format!("degrees differ ({} vs {})", q.deg(), p.deg()));
    }
    if q.deg() == 0 {
        return InterlacingClassification::none("constant polynomials");
    }
    if !q.is_coprime(p) {
        return InterlacingClassification::none("P and Q share a factor");
    }
    let p_recip = p.is_reciprocal();
    let q_recip = q.is_reciprocal();
    let pattern_ok = (p_recip && q.is_antireciprocal()) || (q_recip && p.is_antireciprocal());
    if !pattern_ok {
        return InterlacingClassification::none("need one reciprocal and one antireciprocal polynomial");
    }

    let sp = Shape::of(p);
    let sq = Shape::of(q);
    let census_p = sp.census();
    let census_q = sq.census();
    let with_census = |mut c: InterlacingClassification| {
        c.census_p = Some(census_p);
        c.census_q = Some(census_q);
        c
    };

    let simple = |s: &Shape| s.g_squarefree && s.a <= 1 && s.b <= 1;
    enum Flavour {
        Cc,
        Cs,
        Ss,
    }
    let flavour = if sp.circle_only() && sq.circle_only() {
        if !(simple(&sp) && simple(&sq)) {
            return with_census(InterlacingClassification::none("repeated root"));
        }
        Flavour::Cc
    } else if sp.salem_like() && sq.circle_only() {
        if !p_recip {
            return with_census(InterlacingClassification::none("CS shape needs P reciprocal"));
        }
        if sq.a == 0 || sq.b == 0 {
            return with_census(InterlacingClassification::none("CS shape needs z^2 - 1 dividing Q"));
        }
        if !(simple(&sp) && sq.g_squarefree && sq.b <= 1) {
            return with_census(InterlacingClassification::none("repeated root away from z = 1"));
        }
        Flavour::Cs
    } else if sp.salem_like() && sq.salem_like() {
        if !(simple(&sp) && simple(&sq)) {
            return with_census(InterlacingClassification::none("repeated root"));
        }
        Flavour::Ss
    } else {
        return with_census(InterlacingClassification::none(
            "root layout is neither circle-only nor a single real pair off the circle",
        ));
    };

    let (located, top_p_wins) = locate(&sp, &sq);
    let circle_roots_p: Vec<CircleRoot> = located
        .iter()
        .filter(|l| l.owner == Owner::P)
        .map(|l| CircleRoot {
            u: l.u.clone(),
            multiplicity: l.multiplicity,
        })
        .collect();
    let circle_roots_q: Vec<CircleRoot> = located
        .iter()
        .filter(|l| l.owner == Owner::Q)
        .map(|l| CircleRoot {
            u: l.u.clone(),
            multiplicity: l.multiplicity,
        })
        .collect();
    let base = InterlacingClassification {
        kind: InterlaceKind::None,
        circle_roots_p,
        circle_roots_q,
        census_p: Some(census_p),
        census_q: Some(census_q),
        failure_reason: None,
    };

    let owners: Vec<(Owner, &UPosition)> = located.iter().map(|l| (l.owner, &l.u)).collect();
    let verdict = match flavour {
        Flavour::Cc | Flavour::Ss => full_circle_alternation(&owners),
        Flavour::Cs => punctured_alternation(&owners),
    };
    let kind = match verdict {
        Err(reason) => {
            return InterlacingClassification {
                failure_reason: Some(reason),
                ..base
            }
        }
        Ok(()) => match flavour {
            Flavour::Cc => InterlaceKind::CC,
            Flavour::Cs => InterlaceKind::CS,
            Flavour::Ss if top_p_wins == Some(true) => InterlaceKind::SS1,
            Flavour::Ss => InterlaceKind::SS2,
        },
    };
    InterlacingClassification { kind, ..base }
}

/// Circle roots of `P` and `Q` sorted by `u`, plus whether the largest real
/// root `> 2` in `u` belongs to `P` (when both have one).
/// Width of the `u` enclosures kept for reporting.
const REPORT_BITS: u32 = 48;

fn locate(sp: &Shape, sq: &Shape) -> (Vec<Located>, Option<bool>) {
    let factors = vec![sp.g.clone(), sq.g.clone()];
    let wide = BigRational::from_integer(BigInt::from(8));
    let mut roots: Vec<TrackedRoot> = Vec::new();
    for (i, g) in factors.iter().enumerate() {
        for iv in isolate_real_roots(g, &wide) {
            roots.push(TrackedRoot { factor: i, iv });
        }
    }
    separate(&factors, &mut roots);
    let two = BigRational::from_integer(BigInt::from(2));
    let neg_two = -two.clone();
    let report = dyadic_width(REPORT_BITS);
    for r in roots.iter_mut() {
        // G(+-2) != 0, so bisection eventually clears both points.
        while (r.iv.lo < two && two < r.iv.hi) || (r.iv.lo < neg_two && neg_two < r.iv.hi) {
            let w = r.iv.width() / BigRational::from_integer(BigInt::from(2));
            refine_simple(&factors[r.factor], &mut r.iv, &w);
        }
        if r.iv.multiplicity == 1 {
            refine_simple(&factors[r.factor], &mut r.iv, &report);
        }
    }

    let owner_of = |i: usize| if i == 0 { Owner::P } else { Owner::Q };
    let mut top: Option<&TrackedRoot> = None;
    let mut located = Vec::new();
    for r in &roots {
        if r.iv.lo >= two {
            if top.map_or(true, |t| t.iv.below(&r.iv)) {
                top = Some(r);
            }
        } else if r.iv.hi > neg_two {
            located.push(Located {
                owner: owner_of(r.factor),
                u: UPosition::Interval(r.iv.clone()),
                multiplicity: r.iv.multiplicity,
            });
        }
    }
    for (owner, s) in [(Owner::P, sp), (Owner::Q, sq)] {
        if s.a > 0 {
            located.push(Located {
                owner,
                u: UPosition::Exact(2),
                multiplicity: s.a,
            });
        }
        if s.b > 0 {
            located.push(Located {
                owner,
                u: UPosition::Exact(-2),
                multiplicity: s.b,
            });
        }
    }
    located.sort_by(|x, y| x.u.cmp_key(&y.u));
    let both_above = sp.above > 0 && sq.above > 0;
    let top_p = both_above.then(|| top.is_some_and(|t| t.factor == 0));
    (located, top_p)
}

fn strictly_alternates(owners: &[(Owner, &UPosition)]) -> std::result::Result<(), String> {
    for w in owners.windows(2) {
        if w[0].0 == w[1].0 {
            return Err(format!(
                "two consecutive circle roots of {:?} near u = {:.6} and u = {:.6}",
                w[0].0,
                w[0].1.approx(),
                w[1].1.approx()
            ));
        }
    }
    Ok(())
}

fn count_exact(owners: &[(Owner, &UPosition)], v: i64) -> usize {
    owners.iter().filter(|(_, u)| **u == UPosition::Exact(v)).count()
}

/// Interleaving on the whole circle: `z = 1` and `z = -1` must both be
/// roots (once each) and the list in `u` must alternate.
fn full_circle_alternation(owners: &[(Owner, &UPosition)]) -> std::result::Result<(), String> {
    if count_exact(owners, 2) != 1 || count_exact(owners, -2) != 1 {
        return Err("roots do not interlace: z = 1 and z = -1 must each be a root of exactly one of P, Q".into());
    }
    strictly_alternates(owners)
}

/// Interleaving on the circle punctured at `z = 1`.
fn punctured_alternation(owners: &[(Owner, &UPosition)]) -> std::result::Result<(), String> {
    let rest: Vec<(Owner, &UPosition)> =
        owners.iter().filter(|(_, u)| **u != UPosition::Exact(2)).copied().collect();
    if count_exact(&rest, -2) != 1 {
        return Err("roots do not interlace on the punctured circle: z = -1 must be a root".into());
    }
    strictly_alternates(&rest)
}
