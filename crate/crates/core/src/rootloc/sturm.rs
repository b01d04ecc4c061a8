use std::cmp::Ordering;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::IntPolynomial;

/// Divides by the positive content, keeping the sign.
pub(crate) fn shrink(p: &IntPolynomial) -> IntPolynomial {
    let c = p.content();
    if c.is_zero() || c.is_one() {
        return p.clone();
    }
    IntPolynomial::new(p.coeffs().iter().map(|x| x / &c).collect())
}

/// Signed remainder sequence `f0, f1, -rem(f0, f1), ...`, each term scaled
/// by a positive constant. Its sign variations give Sturm counts (when
/// `f1 = f0'`) and Cauchy indices in general.
#[derive(Debug, Clone)]
pub struct SignedRemainderChain {
    terms: Vec<IntPolynomial>,
}

impl SignedRemainderChain {
    pub fn new(f0: &IntPolynomial, f1: &IntPolynomial) -> Self {
        let mut terms = vec![shrink(f0)];
        if f1.is_zero() {
            return Self { terms };
        }
        terms.push(shrink(f1));
        loop {
            let n = terms.len();
            let r = terms[n - 2].pseudo_rem(&terms[n - 1]);
            if r.is_zero() {
                break;
            }
            terms.push(shrink(&-r));
        }
        Self { terms }
    }

    /// Sturm chain of `p`: the chain of its square-free part and derivative.
    pub fn sturm(p: &IntPolynomial) -> Self {
        let s = p.squarefree_part();
        let ds = s.derivative();
        Self::new(&s, &ds)
    }

    pub fn terms(&self) -> &[IntPolynomial] {
        &self.terms
    }

    /// The last term: the gcd of the two seeds up to a constant.
    pub fn last(&self) -> &IntPolynomial {
        self.terms.last().expect("chain is nonempty")
    }

    fn variations<I: Iterator<Item = Ordering>>(signs: I) -> usize {
        let mut count = 0;
        let mut prev = Ordering::Equal;
        for s in signs {
            if s == Ordering::Equal {
                continue;
            }
            if prev != Ordering::Equal && s != prev {
                count += 1;
            }
            prev = s;
        }
        count
    }

    pub fn variations_at(&self, x: &BigRational) -> usize {
        Self::variations(self.terms.iter().map(|t| t.sign_at(x)))
    }

    pub fn variations_at_pos_inf(&self) -> usize {
        Self::variations(self.terms.iter().map(|t| t.sign_at_pos_inf()))
    }

    pub fn variations_at_neg_inf(&self) -> usize {
        Self::variations(self.terms.iter().map(|t| t.sign_at_neg_inf()))
    }

    /// Cauchy index of `f1/f0` over the whole real line.
    pub fn cauchy_index(&self) -> i64 {
        self.variations_at_neg_inf() as i64 - self.variations_at_pos_inf() as i64
    }
}

/// Number of distinct real roots of `p` in `(lo, hi]`.
pub fn sturm_count(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> usize {
    assert!(lo < hi, "sturm_count needs lo < hi");
    if p.is_constant() {
        return 0;
    }
    let chain = SignedRemainderChain::sturm(p);
    chain.variations_at(lo) - chain.variations_at(hi)
}

/// Number of real roots of `p` in `(lo, hi]` counted with multiplicity.
pub fn sturm_count_with_multiplicity(p: &IntPolynomial, lo: &BigRational, hi: &BigRational) -> usize {
    p.squarefree_decomposition()
        .iter()
        .map(|(s, m)| m * sturm_count(s, lo, hi))
        .sum()
}

/// Number of distinct real roots of `p` on the whole line.
pub fn real_root_count(p: &IntPolynomial) -> usize {
    if p.is_constant() {
        return 0;
    }
    let chain = SignedRemainderChain::sturm(p);
    chain.variations_at_neg_inf() - chain.variations_at_pos_inf()
}

/// Power of two strictly exceeding the modulus of every root (Cauchy bound).
pub fn root_bound(p: &IntPolynomial) -> BigRational {
    let lead = p.leading().abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.deg())
        .map(|c| c.abs())
        .max()
        .unwrap_or_default();
    // 1 + max/lead <= 2^k
    let ratio = BigRational::new(max, lead) + BigRational::one();
    let mut bound = BigRational::one();
    while bound <= ratio {
        bound *= BigRational::from_integer(BigInt::from(2));
    }
    bound
}
