//! Permutation-group engine and Hopf Galois classifier for small separable
//! extensions described by a pair of groups `G' <= G`.
//!
//! Everything here is `no_std` with `alloc`; file IO and the command line
//! live in the companion `hopf-galois` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod error;
pub mod holomorph;
pub mod hopf;
pub mod permcore;

pub use error::{Error, Result};
pub use permcore::{PermGroup, Permutation};
