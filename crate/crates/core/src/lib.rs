//! Exact computation and verification of continued-fraction identities for
//! q-analogues of Touchard, secant and Genocchi numbers.
//!
//! - [`qcore`]: exact Laurent and power-series arithmetic
//! - [`contfrac`]: S- and T-fractions, moment transforms, contractions, Möbius matrices
//! - [`paths`]: marked Dyck and Schröder paths, their weights and involutions
//! - [`configs`]: staircase configurations, overpartitions and the bijections between them
//! - [`formulas`]: closed forms, functional equations, products and Hankel determinants
//! - [`verify`]: self-contained verification suites producing [`verify::RunReport`]s

pub mod configs;
pub mod contfrac;
pub mod error;
pub mod formulas;
pub mod paths;
pub mod qcore;
pub mod verify;

pub use error::{Error, Result};
