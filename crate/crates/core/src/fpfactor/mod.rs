//! Polynomials over prime fields, their factorization, and Frobenius degree
//! patterns of rational polynomials.

mod factor;
mod fppoly;

pub use factor::{
    degree_pattern, distinct_degree, equal_degree, factor_fp, good_prime_report, is_irreducible, pattern_of,
    squarefree_decomposition, DegreePattern, GoodPrimeReport,
};
pub use fppoly::{reduce_int, reduce_mod, FpPoly, UnusableReason};
