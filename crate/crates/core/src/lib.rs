//! Finite skew braces.
//!
//! A skew brace is a carrier with two group structures, the additive group
//! `(A,·)` and the circle group `(A,∘)`, tied by
//! `a∘(b·c) = (a∘b)·a⁻¹·(a∘c)`. This crate validates braces given as pairs
//! of Cayley tables, computes the λ/ρ maps and left ideals, decides
//! left-simplicity, enumerates all braces on a given additive group through
//! regular subgroups of the holomorph, mechanically audits the numeric
//! tables behind the classification of left-simple braces, and reports the
//! matching Hopf–Galois correspondence data.

pub mod brace;
pub mod classification;
pub mod enumeration;
pub mod error;
pub mod group;
pub mod hopf_galois;
pub mod io;
pub mod perm;

pub use error::{Error, Result};
