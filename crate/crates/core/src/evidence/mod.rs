//! Frobenius evidence: degree patterns modulo primes, their compatibility
//! with the cube group, irreducibility certificates and frequency comparison.
//!
//! Compatibility is a necessary condition only. A passing scan is consistent
//! with the Galois group lying inside the cube group; it does not identify it.

mod chebotarev;
mod compat;
mod scan;

pub use chebotarev::{
    chebotarev_compare, compatibility_failures, frobenius_histogram, group_histogram, pattern_key, skipped_primes,
    tv_distance, ChebotarevReport, CompatibilityFailure, Histogram, SkippedPrime,
};
pub use compat::{
    corner_compatible, corner_witnesses, decompositions, edge_compatible, edge_witnesses, joint_compatible,
    joint_compatible_in, BaseDecomposition, CompatibilityVerdict, CornerModel, MarkedCycle,
};
pub use scan::{dedekind_scan, dedekind_scan_pair, subset_sum_irreducibility, ScanResult};
