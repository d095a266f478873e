//! Idempotent (max-plus) linear algebra.
//!
//! The scalar layer is generic over any ordered number type through
//! [`Scalar`]; the semimodule and functional layers are generic over any
//! complete chain semiring ([`CompleteSemiring`]), which covers the completed
//! max-plus line [`Extended<T>`] and the Boolean semifield. The aliases below
//! fix the exact-rational instances used by the CLI and the file formats.
//!
//! ```
//! use tropical_functionals::{star_eval, ExtendedScalar as E, FinVector};
//!
//! let x = FinVector::new(vec![E::int(0), E::int(-1), E::int(2)]);
//! let y = FinVector::new(vec![E::int(1), E::int(1), E::int(1)]);
//! // least k with y ⪯ k ⊙ x
//! assert_eq!(star_eval(&x, &y).unwrap(), E::int(2));
//! ```

pub mod cli;
pub mod error;
pub mod functional;
pub mod order;
pub mod random;
pub mod report;
pub mod scalars;
pub mod selftest;
pub mod semialgebra;
pub mod semimodule;
pub mod text;

use num_rational::BigRational;

pub use error::{Error, Result};
pub use functional::{
    check_a_linear, extend_functional, graph_sup_closed, pointwise_sup, recover_representer,
    recover_representer_checked, separate_points, star_eval, Functional, LinearMapSample,
    Separation,
};
pub use order::{b_completion, dm_completion, CompletionResult, FiniteIS};
pub use report::{Check, Report};
pub use scalars::{
    big_inf, big_sup, check_semiring_axioms, Boolean, CompleteSemiring, Extended,
    IdempotentSemiring, Scalar, SemiringDescriptor,
};
pub use semialgebra::{
    check_unit_residual, idempotent_integral, one_star, riesz_representer,
    riesz_representer_checked, scalar_product, Element, RieszOutcome, UnitResidual,
};
pub use semimodule::{
    check_b_space_axioms, project_onto_span, v_inf, v_sup, Projection, Semimodule, SpanBasis,
    Vector,
};

/// Exact rational scalars; `⊙` never rounds.
pub type Rational = BigRational;
/// `{-inf} ∪ Q ∪ {+inf}` with max-plus operations.
pub type ExtendedScalar = Extended<Rational>;
pub type FinVector = Vector<ExtendedScalar>;
pub type FunctionalRep = Functional<ExtendedScalar>;
pub type AlgebraElement = Element<Rational>;
pub type RationalSpan = SpanBasis<ExtendedScalar>;

/// Floating-point instances, for callers that accept rounding in `⊙`.
pub type ExtendedF64 = Extended<f64>;
pub type FinVectorF64 = Vector<ExtendedF64>;
pub type ExtendedF32 = Extended<f32>;
