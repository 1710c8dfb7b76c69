//! Exact-arithmetic reconstruction of a degree-48 polynomial whose Galois
//! group over Q is the Rubik's Cube group, plus the group-theoretic and
//! Frobenius-statistics evidence that can be checked without a full
//! Galois-group engine.

pub mod bigexact;
pub mod construct;
pub mod cube;
pub mod error;
pub mod evidence;
pub mod fixtures;
pub mod fpfactor;
pub mod permgroup;
pub mod polyring;

pub use error::{Error, Result};
