//! Exact arithmetic for the numerical classification of smooth triple solids
//! Y → P³ that are scrolls, and of their general hyperplane sections (triple planes).
//!
//! Everything is integer or exact rational arithmetic on numerical lattices; no
//! sheaf cohomology is computed. The [`classify`] module turns each step of the
//! case analysis into a [`classify::VerdictReport`].

pub mod bundles;
pub mod classify;
pub mod cli;
pub mod error;
pub mod intersection;
pub mod rational;
pub mod scroll;
pub mod tripleplane;

pub use error::{Error, Result};
pub use rational::Rational;
