//! Salem's `P_k` sequence, Pisot recovery, Boyd's equation and the four
//! types of Salem number.

mod boyd;
mod pk;
mod screen;

pub use boyd::{
    boyd_identity_holds, boyd_rhs, boyd_s, boyd_solve, salem_type, small_salem_check, BoydSolution, SalemType,
    SmallSalemReport,
};
pub use pk::{classify_pk_quotient, onset, pisot_corpus, pk, pk_at_one, pk_sequence, recover_pisot, PkEntry, PkSequence};
