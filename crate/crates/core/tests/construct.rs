use num_bigint::BigInt;
use salemforge::construct::*;
use salemforge::interlace::{classify_quotient, InterlaceKind, RationalFunction};
use salemforge::poly::{classify_poly, cyclotomic, PolyKind};
use salemforge::{Error, IntPolynomial};

fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

fn lehmer() -> IntPolynomial {
    p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

fn lehmer_pair() -> (IntPolynomial, IntPolynomial) {
    let q = cyclotomic(30);
    let pp = cyclotomic(1) * cyclotomic(2) * cyclotomic(3) * cyclotomic(5);
    (q, pp)
}

/// `raw` factors back together and the census adds up.
fn check_result(r: &ConstructionResult) {
    let back = r.raw.clone();
    let rebuilt = (&r.core * &r.cofactor).shift(r.z_power);
    assert_eq!(back, rebuilt);
    assert_eq!(r.census.total(), r.raw.deg());
    assert_eq!(r.census.outside, 1);
    assert!(r.root.lo > num_rational::BigRational::from_integer(BigInt::from(1)) || r.root.hi_is_root);
}

#[test]
fn lehmer_from_cc_pair() {
    let (q, pp) = lehmer_pair();
    let r = salem_cc(&q, &pp).unwrap();
    check_result(&r);
    assert_eq!(r.core, lehmer());
    assert!(r.cofactor.is_one());
    assert_eq!(r.kind, ConstructionKind::Salem);
    assert!((r.root.midpoint_f64() - 1.176_280_818_259_917_5).abs() < 1e-12);
    assert!(r.root.contains(r.root.midpoint_f64()));
}

#[test]
fn eighth_roots_of_unity_appear() {
    let pp = p(&[-1, 0, 0, -1, 0, 0, 0, 1, 0, 0, 1]);
    let q = p(&[2, 0, 1, 2, 1, 2, 1, 2, 1, 0, 2]);
    let r = salem_cc(&q, &pp).unwrap();
    check_result(&r);
    assert_eq!(r.core, p(&[1, -2, -1, 0, -3, 0, -1, -2, 1]));
    assert_eq!(r.cofactor, p(&[1, 0, 0, 0, 1]));
}

#[test]
fn reciprocal_quadratic_pisot_result() {
    let r = salem_cc(&p(&[-3, 0, 3]), &p(&[1, 0, 1])).unwrap();
    check_result(&r);
    assert_eq!(r.kind, ConstructionKind::RecipQuadPisot);
    assert_eq!(r.core, p(&[1, -3, 1]));
    assert_eq!(r.cofactor, p(&[-1, 0, 1]));
}

#[test]
fn salem_cc_errors() {
    let (q, pp) = lehmer_pair();
    assert!(matches!(salem_cc(&pp, &(&q * &p(&[1, 1]))), Err(Error::NotCc(_))));
    // Q/P = (z+1)/(z-1) is CC with P(1) = 0 but P = 2(z-1) is not monic.
    assert_eq!(salem_cc(&p(&[1, 1]), &p(&[-2, 2])), Err(Error::NotMonic));
    // Q = z - 1, P = z + 1: Q'(1) = 1 < 2 P(1) = 4.
    assert!(matches!(salem_cc(&p(&[-1, 1]), &p(&[1, 1])), Err(Error::ConditionAtOneFails(_))));
}

#[test]
fn cs_construction() {
    let q = p(&[-1, 0, 1]) * p(&[1, -1, 1]);
    let pp = p(&[1, 1, 1]) * p(&[1, -3, 1]);
    let r = salem_cs(&q, &pp).unwrap();
    check_result(&r);
    assert_eq!(r.raw, p(&[-1, 0, 1]) * p(&[1, -3, 0, -3, 1]));
    assert_eq!(r.core, p(&[1, -3, 0, -3, 1]));
    assert_eq!(r.cofactor, p(&[-1, 0, 1]));
    assert_eq!(r.kind, ConstructionKind::Salem);

    let triple = p(&[1, 1]) * p(&[-1, 1]).pow(3);
    let r = salem_cs(&triple, &pp).unwrap();
    check_result(&r);
    assert!(matches!(r.kind, ConstructionKind::Salem | ConstructionKind::RecipQuadPisot));

    let non_monic = pp.scale_i64(2);
    assert_eq!(salem_cs(&q.scale_i64(2), &non_monic), Err(Error::NotMonic));
}

#[test]
fn ss_constructions() {
    // P_k for A = z^3 - z - 1: P_8 is Lehmer, P_9 = P_8 + z^8 A.
    let a = p(&[-1, -1, 0, 1]);
    let p8 = lehmer();
    let p9 = &p8 + &a.shift(8);
    let q = &p(&[-1, 1]) * &p8;
    assert!(classify_quotient(&q, &p9).kind.is_ss());
    let r = salem_ss(&q, &p9).unwrap();
    check_result(&r);
    assert_eq!(r.kind, ConstructionKind::Salem);

    let q = p(&[1, 0, -1, -1, -1, 0, 1]);
    let pp = p(&[-1, 2, 0, 0, 0, -2, 1]);
    assert!(matches!(salem_ss(&q, &pp), Err(Error::ConditionAtOneFails(_))));
    let (lq, lp) = lehmer_pair();
    assert!(matches!(salem_ss(&lq, &lp), Err(Error::NotSs(_))));
}

#[test]
fn product_variants() {
    let (q, pp) = lehmer_pair();
    let r = salem_cc_product(&q, &pp, &q, &pp, ProductVariant::II).unwrap();
    check_result(&r);
    assert_eq!(r.kind, ConstructionKind::Salem);

    // (Q2, P2) = (z - 1, z + 1) gives g2 = 1/(z + 1), and variant II then
    // solves the same equation as the single-pair construction.
    let single = salem_cc(&q, &pp).unwrap();
    let via_ii = salem_cc_product(&q, &pp, &p(&[-1, 1]), &p(&[1, 1]), ProductVariant::II).unwrap();
    assert_eq!(via_ii.core, single.core);
    let via_i = salem_cc_product(&q, &pp, &p(&[-1, 1]), &p(&[1, 1]), ProductVariant::I);
    if let Ok(r) = &via_i {
        check_result(r);
    }

    // g1 g2 -> 1/4 at z = 1 for Q/P = (z - 1)/(z + 1) twice.
    let e = salem_cc_product(&p(&[-1, 1]), &p(&[1, 1]), &p(&[-1, 1]), &p(&[1, 1]), ProductVariant::II);
    assert!(matches!(e, Err(Error::ConditionAtOneFails(_))));
}

#[test]
fn degree_16_pisot() {
    let (q, pp) = lehmer_pair();
    let r = pisot_cc(&q, &pp, &LimitFunctionSpec::bi(1, 7)).unwrap();
    check_result(&r);
    let expect = p(&[1, 2, 2, 1, 0, -1, -2, -4, -6, -7, -7, -7, -6, -4, -1, 1, 1]);
    assert_eq!(r.core, expect);
    assert_eq!(r.kind, ConstructionKind::Pisot);
    let c = classify_poly(&r.core).unwrap();
    assert_eq!(c.kind, PolyKind::Pisot);
    assert_eq!(c.trace, BigInt::from(-1));
}

#[test]
fn pisot_cc_with_inverse_z() {
    let (q, pp) = lehmer_pair();
    let r = pisot_cc(&q, &pp, &LimitFunctionSpec::inv_z()).unwrap();
    check_result(&r);
    // f = g - 1, so the cleared numerator is Q - (z - 1) P up to sign.
    let direct = &q - &(&p(&[-1, 1]) * &pp);
    let c = classify_poly(&direct).unwrap();
    assert_eq!(c.core, r.core);
    let zero = pisot_cc(&IntPolynomial::zero(), &IntPolynomial::one(), &LimitFunctionSpec::inv_z());
    assert!(matches!(zero, Err(Error::ConditionAtOneFails(_))));
}

#[test]
fn pisot_products() {
    let (q, pp) = lehmer_pair();
    let r = pisot_cc_product(&q, &pp, &LimitFunctionSpec::a_only(1), &q, &pp, None, ProductVariant::II).unwrap();
    check_result(&r);
    assert_eq!(r.kind, ConstructionKind::Pisot);

    // Variant I: F1 F2 with F_i -> +inf near 1 violates < 1.
    let e = pisot_cc_product(&q, &pp, &LimitFunctionSpec::a_only(1), &q, &pp, None, ProductVariant::I);
    assert!(matches!(e, Err(Error::ConditionAtOneFails(_))));

    // Variant II with g2 = h2 = 0 makes the product vanish identically.
    let z = IntPolynomial::zero();
    let one = IntPolynomial::one();
    let e = pisot_cc_product(&q, &pp, &LimitFunctionSpec::a_only(1), &z, &one, None, ProductVariant::II);
    assert!(matches!(e, Err(Error::ConditionAtOneFails(_))));
}

#[test]
fn pisot_ss_recovers_the_source() {
    let a = p(&[-1, -1, 0, 1]);
    for k in [8usize, 12] {
        let pk = pk_local(&a, k);
        let pk1 = pk_local(&a, k + 1);
        let q = &p(&[-1, 1]) * &pk;
        let r = pisot_ss(&q, &pk1, &LimitFunctionSpec::inv_z()).unwrap();
        check_result(&r);
        assert_eq!(r.core, a);
    }
    let (lq, lp) = lehmer_pair();
    assert!(matches!(pisot_ss(&lq, &lp, &LimitFunctionSpec::inv_z()), Err(Error::NotCsOrSs(_))));
}

/// `(z^k A - A*) / (z - 1)` by long division.
fn pk_local(a: &IntPolynomial, k: usize) -> IntPolynomial {
    let top = &a.shift(k) - &a.reversed();
    top.div_exact(&p(&[-1, 1])).unwrap()
}

#[test]
fn degree_54_record() {
    let (q, pp) = lehmer_pair();
    let mut total = RationalFunction::new(q, pp).unwrap();
    for (n, a, b) in [(18usize, 7usize, 11usize), (30, 13, 17)] {
        let term = RationalFunction::new(
            IntPolynomial::binomial(n, -1),
            IntPolynomial::binomial(a, -1) * IntPolynomial::binomial(b, -1),
        )
        .unwrap();
        total = &total + &term;
    }
    assert_eq!(classify_quotient(total.num(), total.den()).kind, InterlaceKind::CC);
    let r = salem_cc(total.num(), total.den()).unwrap();
    check_result(&r);
    assert_eq!(r.core.deg(), 54);
    assert!(r.cofactor.is_one());
    let top: Vec<i64> = (0..7).map(|i| i64::try_from(r.core.coeff(54 - i)).unwrap()).collect();
    assert_eq!(top, vec![1, 3, 2, -11, -48, -122, -245]);
    assert_eq!(r.trace, BigInt::from(-3));
}

#[test]
fn exclusion_numerators_have_no_roots_outside() {
    use salemforge::rootloc::disc_root_count;
    for e in 1..=12 {
        for spec in [
            LimitFunctionSpec::a_only(1),
            LimitFunctionSpec::ai(1, e),
            LimitFunctionSpec::bi(1, e),
            LimitFunctionSpec::ci(1, e),
            LimitFunctionSpec::di(1, e),
        ] {
            let h = special_limit_function(&spec).unwrap();
            let diff = &h - &h.tilde();
            if diff.is_zero() {
                continue;
            }
            let c = disc_root_count(diff.num()).unwrap();
            assert_eq!(c.outside, 0, "{spec:?}");
        }
    }
}
