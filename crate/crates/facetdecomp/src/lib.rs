//! Decision procedures for finite simplicial complexes: vertex
//! decomposability with certificates, Cohen-Macaulayness via Reisner's
//! criterion, shellability and shelling completability, matroid / shifted /
//! extremal membership, and exhaustive verification of facet-count
//! threshold results at small vertex counts.

pub mod bounds;
pub mod classify;
pub mod complex;
pub mod decomp;
pub mod homology;
pub mod io;

mod error;

pub use complex::{binomial, k_subsets, Complex, FVector, Face, MAX_VERTICES};
pub use error::Error;

pub type Result<T> = std::result::Result<T, Error>;
