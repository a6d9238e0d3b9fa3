//! Exact-arithmetic toolkit for finite-dimensional Novikov algebras over Q:
//! structure-constant algebras, second cohomology, central extensions, and an
//! isomorphism search tuned for one-generated nilpotent algebras, plus a
//! catalog of the small nilpotent one-generated algebras these tools classify.

pub mod error;
pub mod scalar;
pub mod matrix;
pub mod subspace;
pub mod algebra;
pub mod cohomology;
pub mod extensions;
pub mod expr;
pub mod automorphisms;
pub mod catalog;
pub mod isomorphism;
pub mod dsl;
pub mod report;

pub use error::{Error, Result};
pub use scalar::Scalar;
