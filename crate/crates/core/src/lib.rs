//! Exact constructions of Salem and Pisot numbers from interlacing
//! quotients on the unit circle.
//!
//! The crate is layered:
//!
//! * [`poly`]: exact integer polynomials, cyclotomic stripping and
//!   Salem/Pisot classification;
//! * [`rootloc`]: certified real-root isolation and unit-circle censuses;
//! * [`interlace`]: CC/CS/SS interlacing quotients, their real transforms,
//!   sums, approximants and limits at `z = 1`;
//! * [`construct`]: the Salem and Pisot constructions;
//! * [`sequences`]: Salem's `P_k` sequence, Boyd's equation and the
//!   four-type classifier;
//! * [`golden`]: the reference cases run by the CLI and the acceptance test.

pub mod construct;
pub mod error;
pub mod golden;
pub mod interlace;
pub mod poly;
pub mod rootloc;
pub mod sequences;

pub use error::{Error, Result};
pub use poly::IntPolynomial;
