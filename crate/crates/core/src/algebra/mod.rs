//! Finite fields, polynomials and rational functions.

mod embed;
mod field;
mod poly;
mod ratfunc;

pub use embed::Embedding;
pub use field::{is_prime, smallest_irreducible, Fe, Field, FieldElement, Residue, TABLE_LIMIT};
pub use poly::{Degree, Poly};
pub use ratfunc::RatFunc;

