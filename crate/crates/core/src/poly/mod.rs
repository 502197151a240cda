//! Exact polynomial arithmetic over the rationals and prime fields.

pub mod field;
pub mod linalg;
pub mod mpoly;
pub mod ops;
pub mod parse;
pub mod resultant;
pub mod upoly;

pub use field::{rat, ratio, Field, Fp, Modulus, Rat, Ring, PRIMES};
pub use mpoly::{Mono, MPoly, PPoly, QPoly, Var, VarSet};
pub use parse::parse_poly;
pub use resultant::resultant;
pub use upoly::UPoly;
