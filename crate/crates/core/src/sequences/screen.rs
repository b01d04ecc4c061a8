//! Floating-point pre-screen for Pisot candidates.
//!
//! Durand–Kerner iteration approximates all roots; the Weierstrass
//! corrections `W_i` then give inclusion disks `|z - z_i| <= m |W_i|`
//! whose union holds every root, each disjoint disk holding exactly one.
//! The screen only ever rejects: a candidate passes unless two disjoint
//! disks lie strictly outside the closed unit disc.

use crate::poly::{bigint_to_f64, IntPolynomial};

#[derive(Clone, Copy, Debug)]
struct C(f64, f64);

impl C {
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
    fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
    fn div(self, o: C) -> C {
        let d = o.0 * o.0 + o.1 * o.1;
        C((self.0 * o.0 + self.1 * o.1) / d, (self.1 * o.0 - self.0 * o.1) / d)
    }
    fn abs(self) -> f64 {
        self.0.hypot(self.1)
    }
}

const SLACK: f64 = 1e-9;
const MAX_ITER: usize = 400;

/// `false` when `a` certainly has at least two roots of modulus above 1.
pub(crate) fn may_be_pisot(a: &IntPolynomial) -> bool {
    let m = a.deg();
    if m < 2 {
        return true;
    }
    let lead = bigint_to_f64(&a.leading());
    let c: Vec<f64> = a.coeffs().iter().map(|x| bigint_to_f64(x) / lead).collect();
    if c.iter().any(|x| !x.is_finite()) {
        return true;
    }
    let eval = |z: C| c.iter().rev().fold(C(0.0, 0.0), |acc, &k| acc.mul(z).add(C(k, 0.0)));
    let radius = 1.0 + c[..m].iter().fold(0.0f64, |acc, x| acc.max(x.abs()));
    let seed = C(0.4, 0.9);
    let mut z: Vec<C> = Vec::with_capacity(m);
    let mut p = C(1.0, 0.0);
    for _ in 0..m {
        p = p.mul(seed);
        z.push(C(p.0 * radius, p.1 * radius));
    }
    let mut w = vec![C(0.0, 0.0); m];
    for _ in 0..MAX_ITER {
        let mut biggest = 0.0f64;
        for i in 0..m {
            let mut den = C(1.0, 0.0);
            for j in 0..m {
                if j != i {
                    den = den.mul(z[i].sub(z[j]));
                }
            }
            w[i] = eval(z[i]).div(den);
            z[i] = z[i].sub(w[i]);
            biggest = biggest.max(w[i].abs() / (1.0 + z[i].abs()));
        }
        if !biggest.is_finite() {
            return true;
        }
        if biggest < 1e-14 {
            break;
        }
    }
    // Final corrections at the converged points.
    for i in 0..m {
        let mut den = C(1.0, 0.0);
        for j in 0..m {
            if j != i {
                den = den.mul(z[i].sub(z[j]));
            }
        }
        w[i] = eval(z[i]).div(den);
    }
    // Horner rounding bound on |a(z_i)|, carried into each radius.
    let unit = f64::EPSILON;
    let r: Vec<f64> = (0..m)
        .map(|i| {
            let t = z[i].abs();
            let mag = c.iter().rev().fold(0.0f64, |acc, &k| acc * t + k.abs());
            let mut den = 1.0f64;
            for j in 0..m {
                if j != i {
                    den *= z[i].sub(z[j]).abs();
                }
            }
            let err = 4.0 * (m as f64 + 1.0) * unit * mag / den;
            m as f64 * (w[i].abs() + err) * (1.0 + 1e-6) + SLACK
        })
        .collect();
    if r.iter().any(|x| !x.is_finite()) {
        return true;
    }
    for i in 0..m {
        for j in (i + 1)..m {
            if z[i].sub(z[j]).abs() <= r[i] + r[j] + SLACK {
                return true;
            }
        }
    }
    let outside = (0..m).filter(|&i| z[i].abs() - r[i] > 1.0 + SLACK).count();
    outside < 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn screen_keeps_pisot_and_rejects_obvious_failures() {
        assert!(may_be_pisot(&p(&[-1, -1, 0, 1])));
        assert!(may_be_pisot(&p(&[1, 3, 4, 3, 1, -1, -3, -4, -4, -2, 0, 1])));
        // (z - 2)(z - 3)
        assert!(!may_be_pisot(&p(&[6, -5, 1])));
        // Repeated roots make the disks overlap; the screen defers.
        assert!(may_be_pisot(&p(&[4, -4, 1])));
    }
}
