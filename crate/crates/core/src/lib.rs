//! Explicit separable integral points on twists of supersingular elliptic
//! curves over `F_q(t)`.
//!
//! The crate is organised bottom-up:
//!
//! - [`algebra`]: finite fields `F_{p^l}`, dense polynomials and rational
//!   functions over them.
//! - [`additive`]: the ring of `F_q`-additive polynomials, trace polynomials
//!   and the divisor-lifting identity `A(t) = B(t)^{q^k} - B(t)`.
//! - [`curves`]: quadratic, cubic, quartic and sextic twist models, the
//!   generalized Weierstrass group law, the descended Frobenius and
//!   separability.
//! - [`delsarte`]: monomial maps out of Fermat surfaces and the registry of
//!   worked examples that turn multisections into sections.
//! - [`constructions`]: point factories for the twist families, including
//!   the orthogonal-group points on Hermitian covers.
//! - [`analysis`]: an exhaustive search oracle, the degree/divisibility
//!   condition checks and linear-independence certificates.
//! - [`classgroup`]: point counts, L-polynomials and Jacobian-order
//!   divisibility witnesses for `s^m = A(t)`.
//! - [`cli`]: the `isotwist` command-line front end.
//!
//! Every factory returns a [`curves::Certificate`]: the cleared-denominator
//! polynomial identity that shows the point lies on its curve.

pub mod additive;
pub mod algebra;
pub mod analysis;
pub mod classgroup;
pub mod cli;
pub mod constructions;
pub mod curves;
pub mod delsarte;
pub mod json;
pub mod limits;

mod error;

pub use error::{Error, Result};

pub use algebra::{Degree, Fe, Field, FieldElement, Poly, RatFunc};
