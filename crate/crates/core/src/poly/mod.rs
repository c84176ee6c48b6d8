//! Exact multivariate polynomials over the rationals and block-structured
//! polynomial maps between products of coordinate spaces.

mod map;
mod polynomial;
mod profile;
mod scalar;

pub use map::{PolyMap, Slot};
pub use polynomial::{Monomial, Polynomial};
pub use profile::ArityProfile;
pub use scalar::Scalar;
