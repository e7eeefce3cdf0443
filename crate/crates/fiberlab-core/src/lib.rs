//! Exact arithmetic for algebraic fibering of finitely presented groups.
//!
//! Everything here is computed over `Z` and `Q` with arbitrary precision:
//! free-group words and presentations, Smith normal form and first homology,
//! character spaces and sphere subsets, Reidemeister–Schreier kernel
//! presentations, Brown's fibering criterion for one-relator groups,
//! Thompson-group kernel classification, Euler-characteristic obstructions,
//! and fibered character cones over subnormal filtrations.
//!
//! The crate is `no_std` + `alloc`; IO, serialization, and the CLI live in
//! the companion `fiberlab` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod braid;
pub mod brown;
pub mod character;
pub mod error;
pub mod euler;
pub mod fibration;
pub mod finiteness;
pub mod intmat;
pub mod presentation;
pub mod ratmat;
pub mod schreier;
pub mod sphere;
pub mod thompson;
pub mod word;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
