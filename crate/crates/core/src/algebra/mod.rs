//! Finite-field arithmetic and dense linear algebra.

mod field;
mod matrix;

pub use field::{is_prime, prime_power, Elem, Field, FieldElement, MAX_ORDER};
pub use matrix::{support, weight, Matrix, Rref};
