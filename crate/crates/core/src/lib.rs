//! Construction and certification of N∞ Latin squares and Latin hypercubes,
//! that is, arrays with no proper subsquare (subhypercube).
//!
//! The crate is split along the lines of the pipeline:
//!
//! * [`square`], [`perturbed`], [`cycle`], [`product`] and [`hypercube`] hold
//!   the array types and every construction operator (cycle switching, trades,
//!   direct and corrupted products, relabelling, dimension boosting);
//! * [`verify`] is the detection engine used to certify every object;
//! * [`certify`] checks corrupting pairs and membership of the recursive family;
//! * [`construct`] contains the base-case recipes, the recursive step, the
//!   order planner and the hypercube entry point.
//!
//! Indices and symbols are zero-based throughout the library: a square of
//! order `n` has rows, columns and symbols in `0..n`. Text formats (see the
//! companion CLI crate) use `1..=n`.
#![no_std]

extern crate alloc;

pub mod certify;
pub mod construct;
pub mod cycle;
pub mod error;
pub mod hypercube;
pub mod perturbed;
pub mod product;
pub mod square;
pub mod verify;

pub use error::{Error, Result};
pub use hypercube::Hypercube;
pub use perturbed::PerturbedSquare;
pub use square::{shift_by, Entry, LatinSquare};
