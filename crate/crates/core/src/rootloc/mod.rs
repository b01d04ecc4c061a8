//! Certified root location: Sturm counting and isolation on the real line,
//! and root censuses relative to the unit circle.

mod census;
mod isolate;
mod sturm;

pub use census::{circle_root_count, disc_root_count, reciprocal_to_u, RootCensus};
pub(crate) use census::{split_plus_minus_one, u_root_positions};
pub use isolate::{dyadic_width, isolate_real_roots, ratio, refine_root, IsolatingInterval};
pub(crate) use isolate::{refine_simple, separate, TrackedRoot};
pub use sturm::{real_root_count, root_bound, sturm_count, sturm_count_with_multiplicity, SignedRemainderChain};
