#![allow(dead_code)]

use nalgebra::{Complex, DMatrix, Schur};
use num_traits::ToPrimitive;
use salemforge::IntPolynomial;

pub fn p(c: &[i64]) -> IntPolynomial {
    IntPolynomial::from_i64(c)
}

pub fn lehmer() -> IntPolynomial {
    p(&[1, 1, 0, -1, -1, -1, -1, -1, 0, 1, 1])
}

/// Floating-point roots from the eigenvalues of the companion matrix.
///
/// Companion matrices of polynomials with rotationally symmetric roots can
/// stall the QR iteration; the roots are then taken from an exact shift
/// `d^n f(w + 1/d)` instead.
pub fn roots(f: &IntPolynomial) -> Vec<Complex<f64>> {
    if f.deg() == 0 {
        return Vec::new();
    }
    for d in [0i64, 4, 3, 5, 7] {
        let g = if d == 0 { f.clone() } else { shifted(f, d) };
        if let Some(r) = companion_eigenvalues(&g) {
            let s = if d == 0 { 0.0 } else { 1.0 / d as f64 };
            return r.into_iter().map(|w| w + Complex::new(s, 0.0)).collect();
        }
    }
    panic!("no convergent eigenvalue iteration for {f}");
}

/// `d^n f(w + 1/d) = sum c_k (d w + 1)^k d^(n-k)`.
fn shifted(f: &IntPolynomial, d: i64) -> IntPolynomial {
    let n = f.deg();
    let lin = IntPolynomial::from_i64(&[1, d]);
    let mut out = IntPolynomial::zero();
    for (k, c) in f.coeffs().iter().enumerate() {
        let dk = num_bigint::BigInt::from(d).pow((n - k) as u32);
        out = &out + &lin.pow(k as u32).scale(&(c * dk));
    }
    out
}

fn companion_eigenvalues(f: &IntPolynomial) -> Option<Vec<Complex<f64>>> {
    let n = f.deg();
    let c: Vec<f64> = f.coeffs().iter().map(|x| x.to_f64().unwrap()).collect();
    let lead = c[n];
    let m = DMatrix::from_fn(n, n, |i, j| {
        if j == n - 1 {
            -c[i] / lead
        } else if i == j + 1 {
            1.0
        } else {
            0.0
        }
    });
    let schur = Schur::try_new(m, 1e-15, 20_000)?;
    Some(schur.complex_eigenvalues().iter().copied().collect())
}

/// `(inside, on, outside)` by modulus, or `None` when a root sits within
/// `band` of the circle without being on it to `tight`.
pub fn float_census(f: &IntPolynomial, band: f64, tight: f64) -> Option<(usize, usize, usize)> {
    let mut out = (0, 0, 0);
    for z in roots(f) {
        let d = z.norm() - 1.0;
        if d.abs() <= tight {
            out.1 += 1;
        } else if d.abs() < band {
            return None;
        } else if d < 0.0 {
            out.0 += 1;
        } else {
            out.2 += 1;
        }
    }
    Some(out)
}

/// Sorted angles in `[0, 2 pi)` of the roots of `f`, all assumed on the circle.
pub fn circle_angles(f: &IntPolynomial) -> Vec<f64> {
    let mut a: Vec<f64> = roots(f)
        .iter()
        .map(|z| z.arg().rem_euclid(std::f64::consts::TAU))
        .collect();
    a.sort_by(f64::total_cmp);
    a
}
