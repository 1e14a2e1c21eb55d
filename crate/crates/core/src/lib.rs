//! Exact arithmetic for Hom-Lie algebras, their representations, bialgebras,
//! r-matrices and O-operators.

#![allow(clippy::needless_range_loop)]

pub mod bialgebra;
pub mod cli;
pub mod coboundary;
pub mod corpus;
pub mod error;
pub mod format;
pub mod hom_lie;
pub mod operators;
pub mod random;
pub mod report;
pub mod representation;
pub mod tensor;

pub use error::{Error, Result};
pub use report::{CheckReport, Condition, Residual, Witness};
