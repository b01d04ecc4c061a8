mod common;

use common::{circle_angles, float_census, lehmer, p, roots};
use std::sync::OnceLock;

use num_integer::Integer;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use proptest::prelude::*;
use salemforge::interlace::*;
use salemforge::poly::{cyclotomic, totient};
use salemforge::rootloc::{circle_root_count, disc_root_count};
use salemforge::sequences::pk;
use salemforge::IntPolynomial;

/// Roots of a squarefree product of cyclotomic polynomials as exact
/// fractions of a turn.
fn turns(indices: &[u64]) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    for &n in indices {
        for k in 0..n {
            if k.gcd(&n) == 1 {
                out.push((k, n));
            }
        }
    }
    out
}

/// Exact alternation of the roots of two cyclotomic products round the circle.
fn alternate(s: &[u64], t: &[u64]) -> bool {
    let mut all: Vec<(u64, u64, bool)> = turns(s).into_iter().map(|(k, n)| (k, n, true)).collect();
    all.extend(turns(t).into_iter().map(|(k, n)| (k, n, false)));
    all.sort_by(|a, b| (a.0 * b.1).cmp(&(b.0 * a.1)));
    all.windows(2).all(|w| w[0].2 != w[1].2) && all.first().map(|f| f.2) != all.last().map(|l| l.2)
}

fn product(indices: &[u64]) -> IntPolynomial {
    indices.iter().fold(IntPolynomial::one(), |acc, &n| acc * cyclotomic(n))
}

fn indices(mask: u32) -> Vec<u64> {
    (1..=12u64).filter(|i| mask & (1 << (i - 1)) != 0).collect()
}

/// All disjoint pairs of nonempty index sets in `1..=12` whose cyclotomic
/// products have equal degree.
fn equal_degree_pairs() -> &'static [(u32, u32)] {
    static PAIRS: OnceLock<Vec<(u32, u32)>> = OnceLock::new();
    PAIRS.get_or_init(|| {
        let deg = |m: u32| -> u64 { indices(m).iter().map(|&n| totient(n)).sum() };
        let degs: Vec<u64> = (0..1u32 << 12).map(deg).collect();
        let mut out = Vec::new();
        for s in 1..1u32 << 12 {
            let rest = !s & 0xfff;
            let mut t = rest;
            while t > 0 {
                if degs[s as usize] == degs[t as usize] {
                    out.push((s, t));
                }
                t = (t - 1) & rest;
            }
        }
        out
    })
}

/// Alternation of two angle lists round the circle.
fn angles_alternate(a: &[f64], b: &[f64], min_gap: f64) -> bool {
    let mut all: Vec<(f64, bool)> = a.iter().map(|&x| (x, true)).chain(b.iter().map(|&x| (x, false))).collect();
    all.sort_by(|x, y| x.0.total_cmp(&y.0));
    let n = all.len();
    (0..n).all(|i| {
        let (x, y) = (all[i], all[(i + 1) % n]);
        let gap = (y.0 - x.0).rem_euclid(std::f64::consts::TAU);
        x.1 != y.1 && (gap > min_gap || n == 1)
    })
}

fn family_term(family: u8, n: usize, e: usize) -> RationalFunction {
    let bin = IntPolynomial::binomial;
    let (q, p) = match family {
        0 => (bin(n, 1), bin(n, -1)),
        1 => (bin(e, -1) * bin(n, -1), bin(n + e, -1)),
        2 => (bin(n + e, -1), bin(e, -1) * bin(n, -1)),
        3 => (bin(e, 1) * bin(n, -1), bin(n + e, 1)),
        _ => (bin(n + e, 1), bin(e, 1) * bin(n, -1)),
    };
    RationalFunction::new(q, p).unwrap()
}

fn term_strategy() -> impl Strategy<Value = (u8, usize, usize)> {
    (0u8..5, 1usize..12).prop_flat_map(|(f, n)| (Just(f), Just(n), 1usize..=(12 - n).max(1)))
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 96, max_global_rejects: 200_000, ..ProptestConfig::default() })]

    #[test]
    fn cyclotomic_pairs_match_exact_alternation(pick in 0usize..usize::MAX) {
        let pairs = equal_degree_pairs();
        let (s, t) = pairs[pick % pairs.len()];
        let (si, ti) = (indices(s), indices(t));
        let (ps, pt) = (product(&si), product(&ti));
        let one_antireciprocal = (s & 1) != (t & 1);
        let expect_cc = one_antireciprocal && alternate(&si, &ti);
        let got = classify_quotient(&ps, &pt).kind;
        prop_assert_eq!(got == InterlaceKind::CC, expect_cc, "{:?} / {:?}: {}", si, ti, got);
        prop_assert!(matches!(got, InterlaceKind::CC | InterlaceKind::None));
    }

    #[test]
    fn family_sums_are_cc_by_eigenvalues(terms in prop::collection::vec(term_strategy(), 1..=3)) {
        let f = terms
            .iter()
            .fold(RationalFunction::zero(), |acc, &(fam, n, e)| &acc + &family_term(fam, n, e));
        let (q, pp) = (f.num(), f.den());
        let (aq, ap) = (circle_angles(q), circle_angles(pp));
        for z in roots(q).iter().chain(roots(pp).iter()) {
            prop_assert!((z.norm() - 1.0).abs() < 1e-6);
        }
        prop_assert!(angles_alternate(&aq, &ap, 1e-6));
        prop_assert_eq!(classify_quotient(q, pp).kind, InterlaceKind::CC);
        prop_assert_eq!(classify_quotient(pp, q).kind, InterlaceKind::CC);

        let sq = &(pp * pp) + &(q * q);
        prop_assert_eq!(circle_root_count(&sq), sq.deg());
        let s = pp + q;
        prop_assert_eq!(disc_root_count(&s).unwrap().inside, s.deg());
        prop_assert!(roots(&s).iter().all(|z| z.norm() < 1.0 - 1e-9));

        let rq = real_quotient(q, pp).unwrap();
        prop_assert!(rq.is_odd_function());
        prop_assert_eq!(rq.negative_residue_count().unwrap_or(0), 0);
    }

    #[test]
    fn limit_at_one_matches_evaluation((fam, n, e) in term_strategy()) {
        let f = family_term(fam, n, e);
        let g = RationalFunction::over_z_minus_one(f.num(), f.den()).unwrap();
        for h in [f, g] {
            let near = |eps: f64| h.eval_f64(1.0 + eps, 0.0).0;
            match limit_at_one(&h) {
                LimitAtOne::Finite(v) => {
                    let v = v.to_f64().unwrap();
                    prop_assert!((near(1e-7) - v).abs() < 1e-4 * (1.0 + v.abs()));
                }
                LimitAtOne::PlusInf => prop_assert!(near(1e-4) > 0.0 && near(1e-5) > near(1e-4)),
                LimitAtOne::MinusInf => prop_assert!(near(1e-4) < 0.0 && near(1e-5) < near(1e-4)),
            }
        }
    }
}

#[test]
fn cs_quotients_are_not_symmetric() {
    let q = p(&[-1, 0, 1]) * p(&[1, -1, 1]);
    let pp = p(&[1, 1, 1]) * p(&[1, -3, 1]);
    assert_eq!(classify_quotient(&q, &pp).kind, InterlaceKind::CS);
    assert_eq!(classify_quotient(&pp, &q).kind, InterlaceKind::None);
}

#[test]
fn ss_pairs_swap_type() {
    let a = p(&[-1, -1, 0, 1]);
    for k in 8..12 {
        let q = &p(&[-1, 1]) * &pk(&a, k).unwrap();
        let pp = pk(&a, k + 1).unwrap();
        let forward = classify_quotient(&q, &pp).kind;
        let back = classify_quotient(&pp, &q).kind;
        assert!(forward.is_ss(), "k = {k}: {forward}");
        assert_eq!(
            (forward, back),
            if forward == InterlaceKind::SS1 {
                (InterlaceKind::SS1, InterlaceKind::SS2)
            } else {
                (InterlaceKind::SS2, InterlaceKind::SS1)
            }
        );
        let rq = real_quotient(&pp, &q).unwrap();
        assert_eq!(rq.negative_residue_count(), Some(if back == InterlaceKind::SS2 { 2 } else { 0 }));
    }
}

#[test]
fn lehmer_quotient_roots_by_eigenvalues() {
    let q = cyclotomic(30);
    let pp = cyclotomic(1) * cyclotomic(2) * cyclotomic(3) * cyclotomic(5);
    let c = classify_quotient(&q, &pp);
    assert_eq!(c.kind, InterlaceKind::CC);
    let mut got: Vec<f64> = c.circle_roots_q.iter().chain(c.circle_roots_p.iter()).map(|r| r.angle()).collect();
    got.sort_by(f64::total_cmp);
    let mut want: Vec<f64> = roots(&q)
        .iter()
        .chain(roots(&pp).iter())
        .map(|z| z.arg().abs())
        .collect();
    want.sort_by(f64::total_cmp);
    want.dedup_by(|a, b| (*a - *b).abs() < 1e-9);
    assert_eq!(got.len(), want.len());
    for (g, w) in got.iter().zip(&want) {
        assert!((g - w).abs() < 1e-9, "{g} vs {w}");
    }
}

#[test]
fn salem_numerator_census_by_eigenvalues() {
    let c = disc_root_count(&lehmer()).unwrap();
    assert_eq!(float_census(&lehmer(), 1e-6, 1e-9), Some((c.inside, c.on_circle, c.outside)));
    let half = RationalFunction::new(p(&[2]), p(&[1, 1])).unwrap();
    assert_eq!(
        limit_at_one(&half),
        LimitAtOne::Finite(BigRational::from_integer(1.into()))
    );
}
