//! Dense univariate polynomials over Q and Q(ω): arithmetic, resultants,
//! discriminants and substitution of rational functions.

mod compose;
mod json;
mod poly;
mod resultant;

pub use compose::{
    compose_rational, cyclic_cubic_map, from_integer_coeffs, mobius_conjugate, mobius_map,
    normalize_integer, support, RationalMap,
};
pub use json::{
    eisenstein_poly_from_json, eisenstein_poly_to_json, poly_from_json, poly_to_json, EisensteinPolyJson,
    PolyJson, RationalPolyJson,
};
pub use poly::{Field, Poly};
pub use resultant::{discriminant, resultant, squarefree_check, sylvester_resultant};
