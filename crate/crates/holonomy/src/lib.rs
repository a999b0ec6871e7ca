//! Exact-arithmetic toolkit for totally reducible linear Lie algebras.
//!
//! The crate builds explicit rational matrix models of classical and
//! exceptional linear Lie algebras, analyzes their structure (invariant
//! summands, direct-product decomposition, real/complex type, total
//! complexification), computes first prolongations and Berger's curvature
//! criteria, constructs the hyperplane-center ("Type II") families, and
//! classifies arbitrary bracket-closed inputs against a built-in catalog.
//!
//! All arithmetic is exact over the Gaussian rationals; no floating point is
//! used anywhere.

pub mod scalar;
mod gint;
pub mod matrix;
pub mod subspace;
pub mod poly;
pub mod linrep;
pub mod liecore;
pub mod repkit;
pub mod prolong;
pub mod type2;
pub mod classify;
pub mod io;

pub use matrix::Matrix;
pub use scalar::Scalar;
pub use subspace::{MatSpan, Subspace};
