//! Siegel modular forms from invariants of the cubic term of odd theta
//! functions.
//!
//! The pipeline runs `theta` -> `jet` -> `cubic` -> `modular`: the odd theta
//! function `theta[xi](z, Omega)` is expanded at `z = 0`, its cubic term is
//! restricted to the hyperplane cut out by the linear term, and a classical
//! invariant of the resulting ternary cubic (genus 4) is corrected by a power
//! of the basis determinant. For the invariant `S` this evaluates the
//! genus-4 Schottky form, a weight-8 modular form vanishing on Jacobians.

pub mod builders;
pub mod cli;
pub mod cubic;
pub mod error;
pub mod io;
pub mod jet;
pub mod modular;
pub mod siegel;
pub mod theta;

pub use error::{Error, Result};
