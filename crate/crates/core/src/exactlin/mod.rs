//! Exact scalars and dense linear algebra (RREF, rank, nullspace, column-space membership).

mod field;
mod matrix;

pub use field::{
    is_prime, Field, FieldSpec, PrimeField, Rationals, DEFAULT_PRIME, DEFAULT_SECOND_PRIME,
};
pub use matrix::Matrix;
