//! Predicted Serre weights for tame, p-ordinary inertial types of GSp4.

pub mod alcove;
pub mod cli;
pub mod companions;
pub mod error;
pub mod lattice;
pub mod modular;
pub mod predictor;
pub mod tame;

pub use error::{Error, Result};
pub use lattice::{Prime, Weight, WeylElement};
