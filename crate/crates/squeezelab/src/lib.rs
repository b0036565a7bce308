//! Collective-spin entanglement criteria and Gaussian QND simulation.
//!
//! The crate has two halves that share a small linear-algebra core:
//!
//! * moment-based multipartite entanglement detection for ensembles of
//!   spin-j particles: the complete set of spin-squeezing inequalities,
//!   the optimal parameter `xi_G`, entanglement-depth criteria built on
//!   extreme-squeezing curves `F_J(X)`, and their su(d), translationally
//!   invariant and fluctuating-N extensions;
//! * a Gaussian-state model of an atomic ensemble probed by light pulses
//!   in a QND way, used to evaluate Leggett-Garg tests `K_n`, their
//!   clumsiness-corrected form `KI_n`, invasivity quantifiers and QND
//!   figures of merit.
//!
//! Brute-force validators for both halves live in [`oracle`].

pub mod error;
pub mod extreme;
pub mod gaussian;
pub mod lg;
pub mod moment_file;
pub mod oracle;
pub mod spin_ops;
pub mod ssi;
pub mod states;

pub use error::{Error, Result};
pub use extreme::{FCurve, FCurveCache};
pub use gaussian::{GaussianParams, GaussianState};
pub use lg::MeasurementSequence;
pub use spin_ops::{GeneratorBasis, SpinOperatorSet};
pub use ssi::{FluctuatingEnsemble, SsiReport, XiGResult};
pub use states::{MomentData, StateVector};
