//! Exact scalars: big rationals, the Eisenstein field Q(ω), perfect-power
//! predicates and primality.

mod eisenstein;
mod prime;
mod rational;

pub use eisenstein::{eis_arith, EisOp, Eisenstein};
pub use prime::{primes_up_to, probable_prime};
pub use rational::{
    big, big_pow, checked_div, common_denominator, exact_cbrt, exact_sqrt, int,
    is_perfect_cube_rat, is_perfect_square, parse_rational, pow, rat, rat_arith,
    verify_norm_form, RatOp, Rational,
};

/// `v² - 11w² = d` certificate for the square class of a discriminant.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NormFormWitness {
    pub v: num_bigint::BigInt,
    pub w: num_bigint::BigInt,
    pub d: Rational,
}

impl NormFormWitness {
    pub fn holds(&self) -> bool {
        verify_norm_form(&self.d, &self.v, &self.w)
    }
}
