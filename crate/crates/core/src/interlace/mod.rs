//! Interlacing quotients: classification, real transforms, sums,
//! approximants and limits at `z = 1`.

mod approx;
mod classify;
mod ratfunc;
mod transform;

pub use approx::{cc_approximant, sum_quotients, QuotientSum};
pub use classify::{classify_quotient, CircleRoot, InterlaceKind, InterlacingClassification, UPosition};
pub use ratfunc::{limit_at_one, LimitAtOne, RationalFunction};
pub use transform::{antireciprocal_to_x, real_quotient, reciprocal_to_x, RealQuotient, Residue};
