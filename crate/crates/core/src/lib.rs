//! Exact reverse and forward derivatives of polynomial maps over ℚ.
//!
//! Maps are [`PolyMap`]s: coordinate [`Polynomial`]s with rational
//! coefficients over a domain split into blocks. [`crdc`] has the
//! first-order combinators, [`higher_order`] the iterated ones, and
//! [`faa_di_bruno`] the partition expansion of derivatives of composites.
//! [`laws`] checks all of them against each other on random maps.
//!
//! ```
//! use rfdb::cli::parse_map;
//! use rfdb::crdc::reverse_derivative;
//!
//! let f = parse_map("(x1^2*x2)", None)?;
//! assert_eq!(reverse_derivative(&f)?.to_string(), "(2*x1*x2*x3, x1^2*x3)");
//! # Ok::<(), rfdb::Error>(())
//! ```

pub mod cli;
pub mod comparison;
pub mod corpus;
pub mod crdc;
pub mod error;
pub mod faa_di_bruno;
pub mod higher_order;
pub mod laws;
pub mod poly;

pub use comparison::{Comparison, Difference};
pub use error::{Error, Result};
pub use poly::{ArityProfile, Monomial, PolyMap, Polynomial, Scalar, Slot};
