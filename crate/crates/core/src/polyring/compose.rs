use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::{Field, Poly};
use crate::bigexact::{big, common_denominator, Eisenstein, Rational};
use crate::error::{Error, Result};

/// `numerator / denominator` as a substitution target.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalMap<K: Field> {
    pub numerator: Poly<K>,
    pub denominator: Poly<K>,
}

impl<K: Field> RationalMap<K> {
    pub fn new(numerator: Poly<K>, denominator: Poly<K>) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self { numerator, denominator })
    }
}

/// The cyclic-cubic substitution `(X³ - 3X + 1) / (X² - X)`.
pub fn cyclic_cubic_map<K: Field>() -> RationalMap<K> {
    RationalMap {
        numerator: Poly::from_ints(&[1, -3, 0, 1]),
        denominator: Poly::from_ints(&[0, -1, 1]),
    }
}

/// `den^deg f · f(num / den)`, expanded exactly with no content removal.
pub fn compose_rational<K: Field>(f: &Poly<K>, m: &RationalMap<K>) -> Poly<K> {
    let Some(n) = f.degree() else { return Poly::zero() };
    let mut num_pows = vec![Poly::one()];
    let mut den_pows = vec![Poly::one()];
    for k in 1..=n {
        num_pows.push(&num_pows[k - 1] * &m.numerator);
        den_pows.push(&den_pows[k - 1] * &m.denominator);
    }
    f.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .fold(Poly::zero(), |acc, (k, c)| &acc + &(&num_pows[k] * &den_pows[n - k]).scale(c))
}

/// `(-ωX - ω̄)^24 · f(( X + 1) / (-ωX - ω̄))` over Q(ω), for a degree-24 `f`.
pub fn mobius_conjugate(f24: &Poly<Rational>) -> Result<Poly<Eisenstein>> {
    if f24.degree() != Some(24) {
        return Err(Error::Precondition(format!(
            "mobius_conjugate expects degree 24, got {:?}",
            f24.degree()
        )));
    }
    let lifted = f24.map(|c| Eisenstein::from_rational(c.clone()));
    Ok(compose_rational(&lifted, &mobius_map()))
}

/// `(X + 1) / (-ωX - ω̄)`.
pub fn mobius_map() -> RationalMap<Eisenstein> {
    RationalMap {
        numerator: Poly::from_ints(&[1, 1]),
        denominator: Poly::new(vec![-Eisenstein::omega_bar(), -Eisenstein::omega()]),
    }
}

/// Exponents `k` with a nonzero coefficient of `X^k`.
pub fn support<K: Field>(f: &Poly<K>) -> Vec<usize> {
    f.coeffs().iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(k, _)| k).collect()
}

/// Clears denominators, divides by the integer content and makes the leading
/// coefficient positive. Returns integer coefficients, lowest degree first.
pub fn normalize_integer(f: &Poly<Rational>) -> Vec<BigInt> {
    if f.is_zero() {
        return Vec::new();
    }
    let den = common_denominator(f.coeffs());
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| (c * big(den.clone())).to_integer()).collect();
    let content = ints.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if ints.last().unwrap().is_negative() { -BigInt::one() } else { BigInt::one() };
    ints.into_iter().map(|c| c / &content * &sign).collect()
}

pub fn from_integer_coeffs(coeffs: &[BigInt]) -> Poly<Rational> {
    Poly::new(coeffs.iter().map(|c| big(c.clone())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigexact::int;

    type P = Poly<Rational>;

    #[test]
    fn degree_one_lift_is_the_numerator() {
        assert_eq!(compose_rational(&P::x(), &cyclic_cubic_map()), P::from_ints(&[1, -3, 0, 1]));
    }

    #[test]
    fn lift_of_linear_factor_is_the_cyclic_cubic() {
        // X - a lifts to X³ - aX² + (a - 3)X + 1.
        let a = int(7);
        let f = P::new(vec![-a.clone(), int(1)]);
        let lifted = compose_rational(&f, &cyclic_cubic_map());
        assert_eq!(lifted, P::from_ints(&[1, 4, -7, 1]));
    }

    #[test]
    fn mobius_precondition() {
        assert!(mobius_conjugate(&P::from_ints(&[0, 0, 1])).is_err());
        assert!(RationalMap::new(P::x(), P::zero()).is_err());
    }

    #[test]
    fn integer_normalization() {
        let f = P::new(vec![int(1) / int(2), int(-3) / int(4), int(-1) / int(6)]);
        let n = normalize_integer(&f);
        assert_eq!(n, vec![BigInt::from(-6), BigInt::from(9), BigInt::from(2)]);
    }
}
