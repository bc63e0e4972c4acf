//! Exact Chern-character descent for chains of higher order minimal
//! families of rational curves on Fano manifolds.
//!
//! Everything here works over [`Rational`], an arbitrary-precision exact
//! fraction. There is no floating point anywhere in the crate.
//!
//! The crate is organised bottom-up:
//!
//! - [`exact`]: Bernoulli numbers, binomials, compositions and elementary
//!   symmetric polynomials.
//! - [`coeffs`]: the descent coefficients `b(i, j, k)`, computed by the
//!   Bernoulli recursion and by two independent closed forms, plus the
//!   identity checker tying them together.
//! - [`descent`]: the split Chern model, the single-step and direct
//!   `i`-step descent formulas, the chain driver and the model catalogue.
//! - [`gate`]: hypothesis checkers for the two positivity theorems and
//!   exact replays of the inequality chains used in their proofs.
//!
//! The crate is `no_std` and only needs `alloc`.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod coeffs;
pub mod descent;
mod error;
pub mod exact;
pub mod gate;

pub use crate::coeffs::{CoeffTable, Polynomial};
pub use crate::descent::{ChainReport, DescentStep, SplitChernVector, Terminal};
pub use crate::error::Error;
pub use crate::exact::{BernoulliTable, Rational};
