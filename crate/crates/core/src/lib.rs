//! Exact arithmetic for symmetric polynomials in k variables: mixed bases
//! built from Schur, monomial or elementary polynomials times power sums or
//! complete homogeneous polynomials, and canonical forms in the quotients
//! that generalize the (quantum) cohomology ring of the Grassmannian.

pub mod bases;
pub mod cli;
pub mod conjecture;
pub mod error;
mod linalg;
mod memo;
pub mod mixedbasis;
pub mod partition;
pub mod polyring;
pub mod quotient;

pub use error::{Error, Result};
pub use partition::Partition;
pub use polyring::{Scalar, SymPoly};
