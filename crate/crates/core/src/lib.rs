//! Discrete quantum mechanics over finite fields.
//!
//! States are points of the projective space PG(N-1, q) over GF(q), outcomes
//! are dual covectors, and probabilities come from counting nonzero brackets.
//! All probabilities and expectation values are exact rationals.

pub mod chsh;
pub mod entanglement;
pub mod error;
pub mod field;
pub mod nogo;
pub mod projective;
pub mod qm;
pub mod two_level;

pub use error::{Error, Result};
pub use field::{field_of_order, make_field, Field, FieldElement, FieldSpec};
pub use qm::Rational;
