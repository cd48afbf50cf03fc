//! Largest-root tests for high-dimensional data, calibrated by the type-1
//! Tracy-Widom law.
//!
//! The library computes the largest eigenvalue of
//! (Z U₂U₂ᵀ Zᵀ)⁻¹ Z U₁U₁ᵀ Zᵀ for column-orthonormal U₁ ⊥ U₂, rescales it by
//! a closed-form log transform (or an exact Marchenko-Pastur route), and
//! derives three ready-made hypothesis tests:
//!
//! * independence of two observed random vectors via the largest squared
//!   sample canonical correlation ([`cca`]),
//! * equality of several mean vectors via the largest root of W⁻¹B
//!   ([`manova`]),
//! * linear and intra-subject hypotheses in the multivariate linear model
//!   ([`linmodel`]).
//!
//! A seeded Monte-Carlo harness ([`sim`]) reproduces the calibration and
//! power experiments behind the tests, and the `unirmt` binary exposes
//! everything on the command line.

pub mod calibrate;
pub mod cca;
pub mod cli;
pub mod error;
pub mod io;
pub mod linalg;
pub mod linmodel;
pub mod manova;
pub mod mat;
pub mod quad;
pub mod report;
pub mod rng;
pub mod sim;
pub mod tw;

pub use calibrate::{exact_center_params, log_rescale_params, rescale_statistic, DimensionQuad};
pub use error::{Error, Result};
pub use linalg::{
    centering_matrix, column_space_projection, largest_relative_eigenvalue,
    unified_omega_lambda1, DataMatrix, Orientation, SymmetricPair,
};
pub use report::{Method, TestReport};
pub use tw::Tw1Table;
