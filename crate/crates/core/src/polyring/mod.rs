//! Exact scalars in Q[q] and the monomial-basis representation of symmetric polynomials.

mod exponent;
mod scalar;
mod sympoly;

pub use exponent::ExponentPoly;
pub use scalar::Scalar;
pub use sympoly::{SymPoly, SymPolyTerm};
