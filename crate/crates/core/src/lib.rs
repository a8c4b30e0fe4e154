//! Exact combinatorics of Hassett moduli spaces of weighted pointed stable
//! curves, together with the small computer-algebra core needed to audit the
//! deformation count of the Segre cubic threefold.
//!
//! Everything is exact: weights and polynomial coefficients are arbitrary
//! precision rationals and no floating point enters any decision.

pub mod cli;
pub mod deform;
pub mod groebner;
pub mod poly;
pub mod rational;
pub mod strata;
pub mod symmetry;
pub mod verify;
pub mod weights;
