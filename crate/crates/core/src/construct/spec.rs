//! Special CC-limit functions.

use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interlace::RationalFunction;
use crate::poly::IntPolynomial;

/// Parameters of a special CC-limit function
///
/// `A/(z-1) + sum A_i (z^a_i - 1)/((z-1) z^a_i) + sum B_i z^b_i/((z-1)(z^b_i - 1))
///  + sum C_i (z^c_i + 1)/((z-1) z^c_i) + sum D_i z^d_i/((z-1)(z^d_i + 1))`.
///
/// Each list entry is `(coefficient, exponent)`.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LimitFunctionSpec {
    #[serde(rename = "A", default)]
    pub a: i64,
    #[serde(rename = "Ai", default)]
    pub ai: Vec<(i64, i64)>,
    #[serde(rename = "Bi", default)]
    pub bi: Vec<(i64, i64)>,
    #[serde(rename = "Ci", default)]
    pub ci: Vec<(i64, i64)>,
    #[serde(rename = "Di", default)]
    pub di: Vec<(i64, i64)>,
}

impl LimitFunctionSpec {
    pub fn a_only(a: i64) -> Self {
        Self { a, ..Self::default() }
    }

    pub fn ai(coef: i64, exp: i64) -> Self {
        Self {
            ai: vec![(coef, exp)],
            ..Self::default()
        }
    }

    pub fn bi(coef: i64, exp: i64) -> Self {
        Self {
            bi: vec![(coef, exp)],
            ..Self::default()
        }
    }

    pub fn ci(coef: i64, exp: i64) -> Self {
        Self {
            ci: vec![(coef, exp)],
            ..Self::default()
        }
    }

    pub fn di(coef: i64, exp: i64) -> Self {
        Self {
            di: vec![(coef, exp)],
            ..Self::default()
        }
    }

    /// `h(z) = 1/z`.
    pub fn inv_z() -> Self {
        Self::ai(1, 1)
    }

    pub fn validate(&self) -> Result<()> {
        if self.a < 0 {
            return Err(Error::InvalidSpec(format!("A = {} is negative", self.a)));
        }
        for (name, list) in self.families() {
            for &(c, e) in list {
                if c <= 0 || e <= 0 {
                    return Err(Error::InvalidSpec(format!("{name} term ({c}, {e}) must be positive")));
                }
            }
        }
        if self.a == 0 && self.families().iter().all(|(_, l)| l.is_empty()) {
            return Err(Error::EmptySpec);
        }
        Ok(())
    }

    fn families(&self) -> [(&'static str, &Vec<(i64, i64)>); 4] {
        [("Ai", &self.ai), ("Bi", &self.bi), ("Ci", &self.ci), ("Di", &self.di)]
    }

    /// Largest exponent used by any term.
    pub fn max_exponent(&self) -> usize {
        self.families()
            .iter()
            .flat_map(|(_, l)| l.iter().map(|&(_, e)| e.max(0) as usize))
            .max()
            .unwrap_or(0)
    }
}

impl FromStr for LimitFunctionSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let spec: LimitFunctionSpec = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        spec.validate()?;
        Ok(spec)
    }
}

fn c(v: i64) -> BigInt {
    BigInt::from(v)
}

/// The special CC-limit function described by `spec`, reduced.
pub fn special_limit_function(spec: &LimitFunctionSpec) -> Result<RationalFunction> {
    spec.validate()?;
    let zm1 = IntPolynomial::linear_root(1);
    let z = |k: usize| IntPolynomial::monomial(BigInt::from(1), k);
    let bin = IntPolynomial::binomial;
    let mut total = RationalFunction::zero();
    let mut add = |num: IntPolynomial, den: IntPolynomial| {
        total = &total + &RationalFunction::new(num, den).expect("nonzero denominator");
    };
    if spec.a > 0 {
        add(IntPolynomial::constant(c(spec.a)), zm1.clone());
    }
    for &(k, e) in &spec.ai {
        let e = e as usize;
        add(bin(e, -1).scale(&c(k)), &zm1 * &z(e));
    }
    for &(k, e) in &spec.bi {
        let e = e as usize;
        add(z(e).scale(&c(k)), &zm1 * &bin(e, -1));
    }
    for &(k, e) in &spec.ci {
        let e = e as usize;
        add(bin(e, 1).scale(&c(k)), &zm1 * &z(e));
    }
    for &(k, e) in &spec.di {
        let e = e as usize;
        add(z(e).scale(&c(k)), &zm1 * &bin(e, 1));
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64(c)
    }

    #[test]
    fn single_terms() {
        let h = special_limit_function(&LimitFunctionSpec::a_only(1)).unwrap();
        assert_eq!((h.num(), h.den()), (&p(&[1]), &p(&[-1, 1])));
        let h = special_limit_function(&LimitFunctionSpec::inv_z()).unwrap();
        assert_eq!((h.num(), h.den()), (&p(&[1]), &p(&[0, 1])));
        let h = special_limit_function(&LimitFunctionSpec::bi(1, 7)).unwrap();
        let den = p(&[-1, 1]) * IntPolynomial::binomial(7, -1);
        assert_eq!((h.num(), h.den()), (&p(&[0, 0, 0, 0, 0, 0, 0, 1]), &den));
    }

    #[test]
    fn validation() {
        assert_eq!(special_limit_function(&LimitFunctionSpec::default()), Err(Error::EmptySpec));
        assert!(matches!(
            special_limit_function(&LimitFunctionSpec::bi(0, 3)),
            Err(Error::InvalidSpec(_))
        ));
        assert!(matches!(LimitFunctionSpec::ci(1, -2).validate(), Err(Error::InvalidSpec(_))));
    }

    #[test]
    fn json_round_trip() {
        let s: LimitFunctionSpec = r#"{"A": 0, "Bi": [[1, 7]]}"#.parse().unwrap();
        assert_eq!(s, LimitFunctionSpec::bi(1, 7));
        let back: LimitFunctionSpec = serde_json::to_string(&s).unwrap().parse().unwrap();
        assert_eq!(back, s);
        assert_eq!("{}".parse::<LimitFunctionSpec>(), Err(Error::EmptySpec));
        assert!(matches!("{\"A\": 1, \"E\": 2}".parse::<LimitFunctionSpec>(), Err(Error::Parse { .. })));
    }
}
