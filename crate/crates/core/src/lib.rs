//! Exact periodic-orbit machinery for continuous piecewise-linear interval
//! maps with rational data.
//!
//! The crate enumerates periodic orbits exactly, decides the Sharkovsky
//! ordering, builds the witness points and turbulence certificates that
//! period-forcing arguments rest on, and constructs truncated tent maps that
//! realize every tail of the ordering.

// Errors carry the offending rationals; they are cold-path values.
#![allow(clippy::result_large_err)]

pub mod cli;
pub mod counterexample;
pub mod document;
pub mod error;
pub mod forcing;
pub mod laps;
pub mod order;
pub mod orbits;
pub mod plmap;
pub mod plot;
pub mod report;
pub mod rat;
pub mod witness;

pub use error::{Error, Result};
pub use orbits::{Enumerator, Orbit, SolutionSet};
pub use plmap::{Affine, Image, PlMap};
pub use rat::Rat;
