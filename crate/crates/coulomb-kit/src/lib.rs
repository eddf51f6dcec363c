//! Exact-arithmetic toolkit for 3d N=4 gauge-theory bookkeeping: deciding
//! anomaly cancellation for symplectic representations of reductive groups,
//! computing monopole-formula Hilbert series of Coulomb branches, and
//! verifying the explicit orthosymplectic moment-map constructions
//! (cyclic-vector varieties, symplectic Gram-Schmidt) by seeded property
//! suites.
//!
//! Everything computes over arbitrary-precision rationals; there is no
//! floating point and no tolerance anywhere. Results are either exact or
//! carry an explicit completeness bound (truncated series).
//!
//! The `examples/` directory walks through each capability; the
//! `coulomb-kit` binary exposes the same workflows as batch subcommands over
//! JSON input files.

#![allow(clippy::needless_range_loop)]

pub mod anomaly;
pub mod cli;
pub mod kostant;
pub mod lie;
pub mod matrix;
pub mod monopole;
pub mod rat;
pub mod series;

pub use crate::rat::Rat;
