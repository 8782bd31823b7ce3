//! Exact symmetric-function computations for multiplicity-free induced
//! characters of symmetric groups.

pub mod charoracle;
pub mod domino;
pub mod groups;
pub mod lr;
pub mod mflib;
pub mod partition;
pub mod schur;
pub mod verify;

pub use partition::{Partition, ShapeTags, SkewShape};
pub use schur::{s, SchurExpansion};
