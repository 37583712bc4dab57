//! Exact-arithmetic models of the compact exceptional Lie groups G2, F4 and
//! E6, their order-3 inner automorphisms, and machinery for verifying the
//! structure of the joint fixed-point subgroups: every check is a finite,
//! zero-tolerance computation over a cyclotomic number field.

pub mod autohoms;
pub mod cayley;
pub mod groups;
pub mod jordan;
pub mod liealg;
pub mod linalg;
pub mod matrix;
pub mod models;
pub mod par;
pub mod scalar;
pub mod verify;

pub use autohoms::Named;
pub use groups::{AlgMap, Space};
pub use scalar::{Ctx, CycScalar, Rational, DEFAULT_CONDUCTOR, EXTENDED_CONDUCTOR};
