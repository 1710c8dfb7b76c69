//! Builders for the explicit polynomials: the degree-24 pairs from an octic
//! trinomial, the two-parameter family, and the auxiliary degree-8 and
//! degree-12 families with their elliptic-curve and conic parametrizations.

mod appendix;
mod family;
mod order2;
mod theorem1;
mod trinomial;

pub use appendix::{
    appendix_f8, appendix_g12, appendix_g12_constant, appendix_g12_disc, appendix_t_of_s, appendix_t_of_xn,
    curve_to_diophantine, ec_add, ec_multiples, hyperbola_point, on_hyperbola, EllipticPoint, CURVE_B,
};
pub use family::{build_family_p, family_ts, shifted_trinomial, FamilyBuild, FamilyParams};
pub use order2::{c2_kernel_order, c3_kernel_order, count_order2_semidirect, involutions, S8Action};
pub use theorem1::{build_theorem1, build_variant, first_difference, g24_of, lift_f24, Theorem1Build, Variant};
pub use trinomial::{cube_side, solve_params, trinomial, trinomial_disc, Convention, TrinomialParams};
