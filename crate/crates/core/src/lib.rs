//! Weighted geometric means and principal fractional powers of accretive and
//! sectorial complex matrices, together with a seeded property-testing harness for
//! the order, norm and numerical-radius inequalities they satisfy.

pub mod cones;
pub mod error;
pub mod maps_norms;
pub mod means;
pub mod numerics;
pub mod quadrature;
pub mod verify;

pub use error::{Error, Result};
