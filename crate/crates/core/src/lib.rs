//! Exact Diophantine approximation on the Eisenstein circle `x² + xy + y² = 1`.
//!
//! The crate is organised bottom-up:
//!
//! * [`arith`]: big rationals, Q(√3), surds `x + y√Δ`, the integral lattice and its pairing.
//! * [`romik`]: Romik digits, the Berggren tree of Eisenstein triples, cylinder sets and the
//!   conjugate piecewise Möbius system on `[0, ∞]`.
//! * [`approx`]: heights, approximation constants, the Perron formula and brute-force scans.
//! * [`spectrum`]: doubly infinite words, Lagrange numbers and the discrete initial spectrum.
//! * [`oracle`]: independent brute-force cross-checks used by the tests.

pub mod approx;
pub mod arith;
pub mod error;
pub mod oracle;
pub mod par;
pub mod romik;
pub mod spectrum;

pub use error::{Error, Result};
