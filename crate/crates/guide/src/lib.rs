//! The book's code listings, compiled and run as doctests so they cannot
//! drift from the library.

#[doc = include_str!("../../../book/src/intro.md")]
pub mod intro {}

#[doc = include_str!("../../../book/src/polynomials.md")]
pub mod polynomials {}

#[doc = include_str!("../../../book/src/derivatives.md")]
pub mod derivatives {}

#[doc = include_str!("../../../book/src/dagger.md")]
pub mod dagger {}

#[doc = include_str!("../../../book/src/higher.md")]
pub mod higher {}

#[doc = include_str!("../../../book/src/faa-di-bruno.md")]
pub mod faa_di_bruno {}

#[doc = include_str!("../../../book/src/verification.md")]
pub mod verification {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
