//! Idempotent semiring arithmetic: the completed max-plus line, the Boolean
//! semifield, and an axiom checker for pluggable semiring descriptions.

mod descriptor;
mod extended;
mod semiring;

pub use descriptor::{
    check_semiring_axioms, BinOp, Carrier, SemiringDescriptor, UnOp, MAX_EXHAUSTIVE_SAMPLE,
};
pub use extended::{Extended, Scalar};
pub use semiring::{big_inf, big_sup, Boolean, CompleteSemiring, IdempotentSemiring};
