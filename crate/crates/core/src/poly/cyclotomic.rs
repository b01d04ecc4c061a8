use num_bigint::BigInt;
use num_traits::Zero;

use super::{bigint_to_f64, IntPolynomial};

/// Euler's totient.
pub fn totient(n: u64) -> u64 {
    let mut m = n;
    let mut out = n;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            while m % p == 0 {
                m /= p;
            }
            out -= out / p;
        }
        p += 1;
    }
    if m > 1 {
        out -= out / m;
    }
    out
}

fn mobius(n: u64) -> i32 {
    let mut m = n;
    let mut sign = 1;
    let mut p = 2;
    while p * p <= m {
        if m % p == 0 {
            m /= p;
            if m % p == 0 {
                return 0;
            }
            sign = -sign;
        }
        p += 1;
    }
    if m > 1 {
        sign = -sign;
    }
    sign
}

fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            small.push(d);
            if d * d != n {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

/// The `n`-th cyclotomic polynomial.
///
/// Computed as the truncated power series `prod_{d | n} (1 - z^d)^{mu(n/d)}`,
/// which needs only additions. [`cyclotomic_by_division`] gives the same
/// polynomial by repeated exact division.
///
/// # Panics
/// If `n == 0`.
pub fn cyclotomic(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    if n == 1 {
        return IntPolynomial::from_i64(&[-1, 1]);
    }
    let len = totient(n) as usize + 1;
    let mut c = vec![BigInt::zero(); len];
    c[0] = BigInt::from(1);
    let divs = divisors(n);
    for &d in &divs {
        if mobius(n / d) == 1 {
            let d = d as usize;
            for i in (d..len).rev() {
                let t = c[i - d].clone();
                c[i] -= t;
            }
        }
    }
    for &d in &divs {
        if mobius(n / d) == -1 {
            let d = d as usize;
            for i in d..len {
                let t = c[i - d].clone();
                c[i] += t;
            }
        }
    }
    IntPolynomial::new(c)
}

/// `Phi_n` obtained by dividing `z^n - 1` by every `Phi_d` with `d | n`,
/// `d < n`.
pub fn cyclotomic_by_division(n: u64) -> IntPolynomial {
    assert!(n >= 1, "cyclotomic index must be positive");
    let mut f = IntPolynomial::binomial(n as usize, -1);
    for d in divisors(n) {
        if d < n {
            f = f
                .div_exact(&cyclotomic_by_division(d))
                .expect("lower cyclotomic polynomials divide z^n - 1");
        }
    }
    f
}

/// Every `n` with `phi(n) <= max_degree`, ascending.
pub(crate) fn indices_up_to_degree(max_degree: usize) -> Vec<u64> {
    // phi(n) >= sqrt(n / 2) bounds the search.
    let limit = 2 * (max_degree as u64).pow(2) + 2;
    (1..=limit)
        .filter(|&n| totient(n) as usize <= max_degree)
        .collect()
}

/// Floating-point screen: `false` only when `f` visibly does not vanish at
/// `exp(2 pi i / n)`. Exact trial division decides the surviving cases.
fn may_vanish_at_root_of_unity(f: &IntPolynomial, n: u64) -> bool {
    let coeffs: Vec<f64> = f.coeffs().iter().map(bigint_to_f64).collect();
    let scale: f64 = coeffs.iter().map(|c| c.abs()).sum();
    if !scale.is_finite() {
        return true;
    }
    let angle = 2.0 * std::f64::consts::PI / n as f64;
    let (wr, wi) = (angle.cos(), angle.sin());
    let (mut re, mut im) = (0.0f64, 0.0f64);
    for c in coeffs.iter().rev() {
        let nr = re * wr - im * wi + c;
        let ni = re * wi + im * wr;
        re = nr;
        im = ni;
    }
    re.hypot(im) <= 1e-6 * scale.max(1.0)
}

/// Splits `f = core * cofactor` where the cofactor is the largest product of
/// cyclotomic polynomials (with multiplicity) dividing `f`.
///
/// The cofactor is normalized monic; any content or sign stays with the core.
pub fn strip_cyclotomic(f: &IntPolynomial) -> (IntPolynomial, IntPolynomial) {
    if f.is_constant() {
        return (f.clone(), IntPolynomial::one());
    }
    let mut core = f.clone();
    let mut cofactor = IntPolynomial::one();
    for n in indices_up_to_degree(f.deg()) {
        if core.deg() < totient(n) as usize {
            continue;
        }
        if !may_vanish_at_root_of_unity(&core, n) {
            continue;
        }
        let phi = cyclotomic(n);
        while let Some(q) = core.checked_div(&phi) {
            core = q;
            cofactor = &cofactor * &phi;
        }
        if core.is_constant() {
            break;
        }
    }
    (core, cofactor)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn small_cyclotomics() {
        assert_eq!(cyclotomic(1), p(&[-1, 1]));
        assert_eq!(cyclotomic(2), p(&[1, 1]));
        assert_eq!(cyclotomic(8), p(&[1, 0, 0, 0, 1]));
        assert_eq!(cyclotomic(30), p(&[1, 1, 0, -1, -1, -1, 0, 1, 1]));
    }

    #[test]
    fn series_and_division_agree() {
        for n in 1..=120 {
            assert_eq!(cyclotomic(n), cyclotomic_by_division(n), "n = {n}");
        }
        // First index with a coefficient of absolute value 2.
        assert!(cyclotomic(105).coeffs().iter().any(|c| *c == BigInt::from(-2)));
    }

    #[test]
    fn totient_values() {
        let expect = [1, 1, 2, 2, 4, 2, 6, 4, 6, 4, 10, 4];
        for (i, e) in expect.iter().enumerate() {
            assert_eq!(totient(i as u64 + 1), *e);
        }
    }

    #[test]
    fn strip_examples() {
        let salem4 = p(&[1, -3, 0, -3, 1]);
        let (core, cof) = strip_cyclotomic(&(p(&[-1, 0, 1]) * &salem4));
        assert_eq!(core, salem4);
        assert_eq!(cof, p(&[-1, 0, 1]));

        let pisot = p(&[-1, -1, 0, 1]);
        let (core, cof) = strip_cyclotomic(&pisot);
        assert_eq!(core, pisot);
        assert!(cof.is_one());
    }

    #[test]
    fn strip_respects_multiplicity() {
        let f = cyclotomic(3).pow(2) * cyclotomic(1).pow(3) * p(&[-1, -1, 0, 1]);
        let (core, cof) = strip_cyclotomic(&f);
        assert_eq!(core, p(&[-1, -1, 0, 1]));
        assert_eq!(cof, cyclotomic(3).pow(2) * cyclotomic(1).pow(3));
    }
}
