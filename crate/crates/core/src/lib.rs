//! Core algorithms for spatial-domain video steganalysis.
//!
//! Everything in this crate is deterministic, allocation-only computation:
//! the noise-residual CNN (tensor ops with analytic gradients, the SRM
//! filter bank, the full 15-layer model with checkpoint codec), the AdaDelta
//! optimizer, the proxy steganographic embedders with their extractors, and
//! the dataset math (synthetic video generation, clip splitting, segment
//! sampling, preprocessing, manifest records). File formats, the training
//! loop, and the CLI live in the companion `nrcnn-cli` crate.
//!
//! The crate is `no_std`-compatible (`--no-default-features`); the default
//! `std`/`parallel` features add rayon-backed parallel paths whose results
//! are bit-identical to the sequential ones (reductions always run in a
//! fixed order owned by a single task).

#![cfg_attr(not(feature = "std"), no_std)]

extern crate alloc;

pub mod dataset;
pub mod embed;
pub mod error;
pub mod filter_bank;
pub mod gradcheck;
pub mod metrics;
pub mod model;
pub mod ops;
pub mod optim;
mod parallel;
pub mod raster;
pub mod rng;
pub mod tensor;

pub use error::Error;
pub use tensor::{Batch, FrameTensor, Scalar};

/// Result alias used throughout the crate.
pub type Result<T> = core::result::Result<T, Error>;
