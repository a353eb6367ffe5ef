//! Displacement bounds for two-generator Kleinian groups.
//!
//! Given a discrete nonelementary group `⟨f, g⟩` with `f` elliptic of order
//! `n ≥ 3` or parabolic, every point of hyperbolic 3-space is moved at least
//! `c(n)` by `f` or by `g`. This crate evaluates the constants, the
//! displacement formulas they come from, the parameter-space case analysis
//! behind them, and the configurations where they are attained.

pub mod bounds;
pub mod casefile;
pub mod cases;
pub mod constants;
pub mod error;
pub mod extremal;
pub mod halfspace;
pub mod mobius;
pub mod numeric;
pub mod report;
pub mod verify;

pub use error::{Error, Result};
pub use mobius::{Complex, GroupParams, Matrix2, MoebiusMap};
pub use halfspace::{Geodesic, HPoint};
pub use constants::Order;
