//! Exact arithmetic for the rank-one Drinfeld module over
//! `A = F2[x,y]/(y^2 + y = x^3 + x + 1)`.
//!
//! The layers build on one another:
//!
//! - [`f2poly`]: bit-packed polynomials over F2
//! - [`curve`]: the ring `A`, its fraction field `K`, degrees and enumeration
//! - [`twisted`]: the skew polynomial ring `K{τ}` with `τ·c = c^2·τ`
//! - [`drinfeld`]: the generators `ρ_x`, `ρ_y` and `ρ_a` for any `a ∈ A`
//! - [`series`]: exponential and logarithm coefficients, composition, symbols `p_k`
//! - [`ekpoly`]: the additive polynomials `e_k`, the products `D_k` and the
//!   identities relating `d_k`, `ℓ_k` and `D_k`
//! - [`carlitz`]: the Carlitz module over `F2[t]`, used as an oracle
//! - [`verify`]: verification suites shared by the CLI and the tests

pub mod carlitz;
pub mod cli;
pub mod curve;
pub mod drinfeld;
pub mod ekpoly;
pub mod error;
pub mod f2poly;
mod parse;
pub mod series;
pub mod twisted;
pub mod verify;

pub use curve::{AElem, EnumMode, KElem};
pub use error::{Error, Result};
pub use f2poly::{BinaryPoly, Degree};
pub use twisted::TwistedPoly;
