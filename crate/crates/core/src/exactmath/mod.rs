//! Exact arithmetic: number-field towers over ℚ, polynomials, dense and
//! sparse linear algebra.

pub mod field;
pub mod groebner;
pub mod matrix;
pub mod mpoly;
pub mod roots;
pub mod sparse;
pub mod subspace;
pub mod upoly;

pub use field::{rat, ratio, Irreducibility, NumberField, Rat, Scalar};
pub use matrix::{vector, Matrix};
pub use mpoly::{MPoly, Monomial, PolyMatrix};
pub use sparse::{SMat, SVec};
pub use subspace::{Echelon, Subspace};
