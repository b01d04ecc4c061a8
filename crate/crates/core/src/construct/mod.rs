//! Salem and Pisot constructions from interlacing quotients.
//!
//! Every result is certified: the cleared polynomial is split into a power
//! of `z`, a cyclotomic cofactor and a core whose root census is checked
//! against the promised shape.

mod pisot;
mod result;
mod salem;
mod spec;

pub use pisot::{pisot_cc, pisot_cc_product, pisot_ss};
pub use result::{ConstructionKind, ConstructionResult};
pub(crate) use result::largest_real_root;
pub use salem::{salem_cc, salem_cc_product, salem_cs, salem_raw, salem_ss, ProductVariant};
pub use spec::{special_limit_function, LimitFunctionSpec};
