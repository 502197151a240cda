//! Exact algebraic tools for counting cusps and nodes of discriminant curves of
//! polynomial maps of the plane and of the sphere.

pub mod algebra;
pub mod census;
pub mod cli;
pub mod error;
pub mod formulas;
pub mod jets;
pub mod poly;
pub mod puiseux;
pub mod roots;
pub mod series;
pub mod solve;

pub use error::{Error, Result};
