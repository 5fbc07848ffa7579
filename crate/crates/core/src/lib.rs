//! Exact functor homology over finite and truncated small categories.
//!
//! The crate computes tensor products, Hom spaces and Tor groups of functors from small
//! categories to finite-dimensional vector spaces, builds crossed categories together with
//! their pseudo-free functors, and compares functor Tor with classical Hochschild and cyclic
//! homology of small algebras.

pub mod catalog;
pub mod catmod;
pub mod crossed;
pub mod error;
pub mod fincat;
pub mod hochschild;
pub mod linalg;
pub mod pseudoadj;
pub mod report;
pub mod tor;

pub use error::{Error, Result};
