//! Finite commutative semigroups with zero, the graphs built from
//! zero-product relations of labeled functions into them, the semiring
//! and semimodule instances that feed those constructions, and a
//! verification harness that runs the structural theorems as checks.

#![forbid(unsafe_code)]

pub mod algebra;
pub mod caps;
pub mod formats;
pub mod gamma;
pub mod graph;
pub mod report;
pub mod search;
pub mod semigroup;
pub mod verify;

pub use caps::Caps;
