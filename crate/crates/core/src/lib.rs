//! Estimation engine for binary endogenous-treatment models with social
//! interactions in both the treatment and the outcome equation.
//!
//! Peer beliefs are equilibrium objects of two discrete Bayesian games played
//! on a directed friendship network: each individual best-responds to the
//! average conditional choice probability (CCP) of their friends. The crate
//! provides
//!
//! * scalar probability primitives (normal and bivariate-normal CDFs,
//!   quantile, correlated sampling) in [`numerics`],
//! * directed-network storage and the local-average belief operator in
//!   [`network`],
//! * fixed-point solvers for the two games plus contraction diagnostics in
//!   [`equilibrium`],
//! * the bivariate-probit pseudo likelihood and its inner maximizer in
//!   [`likelihood`],
//! * the NPJL outer loop, sandwich standard errors, a profiled confidence
//!   interval for the error correlation, and an exogeneity pretest in
//!   [`estimator`],
//! * partial/composite treatment effects and targeted-intervention
//!   counterfactuals in [`effects`],
//! * the synthetic data-generating process and Monte Carlo study in
//!   [`simulation`].
//!
//! The crate is `no_std`-compatible (requires `alloc`); the default `std`
//! feature only switches scalar math to the platform intrinsics and is not
//! required for correctness.

#![cfg_attr(not(feature = "std"), no_std)]
#![deny(unsafe_code)]

extern crate alloc;

pub mod effects;
pub mod equilibrium;
mod error;
pub(crate) mod fmath;
pub mod likelihood;
pub mod linalg;
pub mod network;
pub mod numerics;
pub mod optimize;
pub mod simulation;
pub mod stream;

pub mod estimator;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = core::result::Result<T, Error>;
