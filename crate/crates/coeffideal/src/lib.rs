//! Exact computational commutative algebra: Gröbner-based ideal calculus,
//! coefficient ideals via colon-iteration fixpoints, monomial integral
//! closures through Newton polyhedra, analytic spreads and generic minimal
//! reductions, and a verification harness for Briançon–Skoda-type
//! containments, scripted through a small text DSL.

pub mod config;
pub mod elim;
pub mod error;
pub mod exec;
pub mod field;
pub mod fm;
pub mod groebner;
pub mod ideal;
pub mod newton;
pub mod poly;
pub mod ring;

pub use config::Caps;
pub use error::{Error, Result};
