//! Exact computations around the Weak and Strong Lefschetz properties of
//! graded artinian algebras: multiplication-map ranks, Laplace-equation
//! counts through apolarity, fat-point linear systems, and the derivation
//! bundles of plane line arrangements.

pub mod arrangements;
pub mod catalog;
pub mod caveat;
pub mod error;
pub mod exactlin;
pub mod fatpoints;
pub mod gradedideal;
pub mod lefschetz;
pub mod polyring;

pub use caveat::Caveat;
pub use error::{Error, Result};
