//! Branched covering maps from the flat torus onto genus-zero triangle
//! meshes.
//!
//! The pipeline: pick branch points on a closed genus-zero mesh, cut it open
//! into a disk along disjoint paths, glue `d` copies of the disk into a torus
//! following a tuple of permutations (one per branch point), flatten the
//! torus onto the unit square with a discrete-harmonic embedding, and move
//! surface signals to and from periodic images through the composed map.

pub mod error;
pub mod monodromy;

pub use error::{Error, Result};
