use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::trinomial::{trinomial_disc, Convention, TrinomialParams};
use crate::bigexact::{big, int, is_perfect_square, Eisenstein, Rational};
use crate::error::{Error, Result};
use crate::polyring::{compose_rational, cyclic_cubic_map, from_integer_coeffs, mobius_conjugate, normalize_integer, Poly};

/// The three published (f8, v, w) choices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Variant {
    Main,
    V729,
    V123,
}

impl Variant {
    pub const ALL: [Variant; 3] = [Variant::Main, Variant::V729, Variant::V123];

    pub fn name(self) -> &'static str {
        match self {
            Variant::Main => "main",
            Variant::V729 => "729",
            Variant::V123 => "123",
        }
    }

    pub fn parse(text: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|v| v.name() == text)
    }

    /// `(t, s, v, w)`.
    pub fn inputs(self) -> (Rational, Rational, BigInt, BigInt) {
        let b = |s: &str| s.parse::<BigInt>().expect("literal");
        match self {
            Variant::Main => (int(2139), int(-6489), b("106936663173678765"), b("18262481960816352")),
            Variant::V729 => (int(-729), int(-2187), b("1992257950336974"), b("42646860008631")),
            Variant::V123 => (int(-123), int(1196), b("760938559245"), b("73067632314568")),
        }
    }

    /// The `(a, b, c)` seed of the cube equation and the convention it solves under.
    pub fn seed(self) -> (i64, i64, i64, Convention) {
        match self {
            Variant::Main => (1, 2, -24, Convention::Conjugate),
            Variant::V729 => (-18, -9, 2, Convention::Plain),
            Variant::V123 => (7, -15, 1, Convention::Plain),
        }
    }

    pub fn fixture(self) -> &'static str {
        match self {
            Variant::Main => crate::fixtures::THEOREM1_MAIN,
            Variant::V729 => crate::fixtures::THEOREM1_729,
            Variant::V123 => crate::fixtures::THEOREM1_123,
        }
    }
}

/// A rebuilt degree-24 pair and the side conditions it was checked against.
#[derive(Clone, Debug)]
pub struct Theorem1Build {
    pub params: TrinomialParams,
    pub f8: Poly<Rational>,
    pub disc_f8: Rational,
    pub f24: Poly<Rational>,
    pub r: Rational,
    pub g24: Poly<Rational>,
    /// `X^12 + r²(X + 1)`, whose value at `X²` is `g24`.
    pub g12: Poly<Rational>,
    pub disc_g12: Rational,
    pub mobius: Poly<Eisenstein>,
    pub mobius_support_mod3: bool,
    pub mobius_constant: Eisenstein,
    pub mobius_constant_is_cube: bool,
    pub disc_product_is_square: bool,
}

/// `X^24 + c(X² + 1)`.
pub fn g24_of(c: &Rational) -> Poly<Rational> {
    let mut coeffs = vec![Rational::zero(); 25];
    coeffs[0] = c.clone();
    coeffs[2] = c.clone();
    coeffs[24] = Rational::one();
    Poly::new(coeffs)
}

/// `(X² - X)^8 f8((X³ - 3X + 1)/(X² - X))`, content-normalized.
pub fn lift_f24(f8: &Poly<Rational>) -> Poly<Rational> {
    from_integer_coeffs(&normalize_integer(&compose_rational(f8, &cyclic_cubic_map())))
}

pub fn build_theorem1(t: &Rational, s: &Rational, v: &BigInt, w: &BigInt) -> Result<Theorem1Build> {
    let params = TrinomialParams::new(t.clone(), s.clone());
    let disc_f8 = params.disc();
    let norm = big(v * v - BigInt::from(11) * w * w);
    if norm != disc_f8 {
        return Err(Error::Precondition(format!(
            "v^2 - 11w^2 = {norm} differs from disc(X^8 - ({t})X - ({s})) = {disc_f8}"
        )));
    }
    if v.is_zero() {
        return Err(Error::Precondition("v must be nonzero".into()));
    }
    let f8 = params.f8();
    let f24 = lift_f24(&f8);
    let r = big(BigInt::from(2985984) * w) / big(BigInt::from(161051) * v);
    let r2 = &r * &r;
    let g24 = g24_of(&r2);
    let g12 = super::trinomial(12, &-r2.clone(), &r2);
    let disc_g12 = trinomial_disc(12, &-r2.clone(), &r2)?;

    let mobius = mobius_conjugate(&f24)?;
    let mobius_support_mod3 = mobius.coeffs().iter().enumerate().all(|(k, c)| k % 3 == 0 || c.is_zero());
    let lc = mobius.lc();
    let mobius_constant = mobius.coeff(0) / lc;
    let mobius_constant_is_cube = mobius_constant.is_cube();
    let disc_product_is_square = is_perfect_square(&(&disc_f8 * &disc_g12)).is_some();

    Ok(Theorem1Build {
        params,
        f8,
        disc_f8,
        f24,
        r,
        g24,
        g12,
        disc_g12,
        mobius,
        mobius_support_mod3,
        mobius_constant,
        mobius_constant_is_cube,
        disc_product_is_square,
    })
}

pub fn build_variant(variant: Variant) -> Result<Theorem1Build> {
    let (t, s, v, w) = variant.inputs();
    build_theorem1(&t, &s, &v, &w)
}

/// First coefficient (by degree) where two polynomials differ.
pub fn first_difference(a: &Poly<Rational>, b: &Poly<Rational>) -> Option<(usize, Rational, Rational)> {
    let n = a.coeffs().len().max(b.coeffs().len());
    (0..n).find_map(|k| {
        let (x, y) = (a.coeff(k), b.coeff(k));
        (x != y).then_some((k, x, y))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::solve_params;
    use crate::fixtures::printed_pair;

    #[test]
    fn variants_match_printed_data() {
        for variant in Variant::ALL {
            let build = build_variant(variant).unwrap();
            let printed = printed_pair(variant.fixture()).unwrap();
            assert_eq!(build.f8, printed.f8);
            assert_eq!(first_difference(&build.f24, &printed.f24), None, "{variant:?}");
            assert_eq!(build.r, printed.r);
            assert_eq!(build.g24, printed.g24());
            assert_eq!(build.disc_f8, big(printed.disc.clone()));
            assert!(build.mobius_support_mod3);
            assert!(build.mobius_constant_is_cube);
            assert!(build.disc_product_is_square);
            let (a, b, c, conv) = variant.seed();
            let p = solve_params(&int(a), &int(b), &int(c), conv).unwrap();
            assert_eq!(p, build.params);
        }
    }

    #[test]
    fn refuses_bad_witness() {
        let (t, s, v, w) = Variant::Main.inputs();
        assert!(build_theorem1(&t, &s, &(v + 1), &w).is_err());
    }

    #[test]
    fn non_cube_seed_fails_cube_test() {
        // 2185, -6558 comes from c = 1, a cube by construction; nudging s breaks it.
        let f8 = TrinomialParams::new(int(2185), int(-6557)).f8();
        let m = mobius_conjugate(&lift_f24(&f8)).unwrap();
        let c = m.coeff(0) / m.lc();
        assert!(!c.is_cube());
        let f8 = TrinomialParams::new(int(2185), int(-6558)).f8();
        let m = mobius_conjugate(&lift_f24(&f8)).unwrap();
        assert!((m.coeff(0) / m.lc()).is_cube());
    }
}
