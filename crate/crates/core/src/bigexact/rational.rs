use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RatOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn big(n: BigInt) -> Rational {
    Rational::from_integer(n)
}

/// `n / d` reduced. Panics on `d == 0`; use [`checked_div`] for untrusted input.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn checked_div(lhs: &Rational, rhs: &Rational) -> Result<Rational> {
    if rhs.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(lhs / rhs)
}

pub fn rat_arith(lhs: &Rational, rhs: &Rational, op: RatOp) -> Result<Rational> {
    Ok(match op {
        RatOp::Add => lhs + rhs,
        RatOp::Sub => lhs - rhs,
        RatOp::Mul => lhs * rhs,
        RatOp::Div => return checked_div(lhs, rhs),
    })
}

/// Parses `"p/q"` or `"p"` (surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let err = |detail: &str| Error::Parse {
        what: "rational",
        detail: format!("{text:?}: {detail}"),
    };
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err("bad numerator"))?;
    let den: BigInt = den.parse().map_err(|_| err("bad denominator"))?;
    if den.is_zero() {
        return Err(err("zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Integer square root if `n` is a perfect square.
pub fn exact_sqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

/// Integer cube root (sign-preserving) if `n` is a perfect cube.
pub fn exact_cbrt(n: &BigInt) -> Option<BigInt> {
    let r = n.cbrt();
    (&r * &r * &r == *n).then_some(r)
}

/// Non-negative rational square root of `q`, when one exists.
pub fn is_perfect_square(q: &Rational) -> Option<Rational> {
    let n = exact_sqrt(q.numer())?;
    let d = exact_sqrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Rational cube root of `q`, when one exists.
pub fn is_perfect_cube_rat(q: &Rational) -> Option<Rational> {
    let n = exact_cbrt(q.numer())?;
    let d = exact_cbrt(q.denom())?;
    Some(Rational::new(n, d))
}

/// Checks `v^2 - 11 w^2 == d` exactly.
pub fn verify_norm_form(d: &Rational, v: &BigInt, w: &BigInt) -> bool {
    let lhs = v * v - BigInt::from(11) * w * w;
    d.is_integer() && *d.numer() == lhs
}

pub fn pow(q: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= q;
    }
    acc
}

pub fn big_pow(base: i64, k: u32) -> BigInt {
    num_traits::pow(BigInt::from(base), k as usize)
}

/// lcm of the denominators of a slice of rationals.
pub fn common_denominator<'a>(values: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    use num_integer::Integer;
    values
        .into_iter()
        .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        parse_rational(s).unwrap()
    }

    #[test]
    fn small_fraction_arithmetic() {
        assert_eq!(rat_arith(&q("1/2"), &q("1/3"), RatOp::Add).unwrap(), q("5/6"));
        let z = rat_arith(&q("2/4"), &q("0/1"), RatOp::Mul).unwrap();
        assert!(z.is_zero());
        assert_eq!(z.to_string(), "0");
        assert_eq!(rat_arith(&q("1"), &q("0"), RatOp::Div), Err(Error::DivisionByZero));
    }

    #[test]
    fn theorem_ratio_of_norm_witnesses() {
        let num = big_pow(12, 6) * BigInt::from(18262481960816352i64);
        let den = big_pow(11, 5) * BigInt::from(106936663173678765i64);
        let r = rat_arith(&big(num), &big(den), RatOp::Div).unwrap();
        assert_eq!(r, q("1962764241992810496/619884697145165705"));
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(q(" -6/4 ").to_string(), "-3/2");
        assert_eq!(q("7").to_string(), "7");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn squares() {
        assert_eq!(is_perfect_square(&q("4/9")), Some(q("2/3")));
        assert_eq!(is_perfect_square(&q("-1")), None);
        assert_eq!(is_perfect_square(&q("0")), Some(q("0")));
        assert_eq!(is_perfect_square(&q("2")), None);
    }

    #[test]
    fn cubes() {
        assert_eq!(
            is_perfect_cube_rat(&q("-452984832/14706125")),
            Some(q("-768/245"))
        );
        assert_eq!(is_perfect_cube_rat(&q("8")), Some(q("2")));
        assert_eq!(is_perfect_cube_rat(&q("4")), None);
    }

    #[test]
    fn norm_forms() {
        let d = big(big_pow(3, 8) * big_pow(7, 7))
            * q("1437417619559484462138047");
        assert!(verify_norm_form(
            &d,
            &BigInt::from(106936663173678765i64),
            &BigInt::from(18262481960816352i64)
        ));
        let v = BigInt::from(1992257950336974i64);
        let w = BigInt::from(42646860008631i64);
        let d = q("3949085439326327289928812040905");
        assert_eq!(&v * &v - BigInt::from(11) * &w * &w, d.numer().clone());
        assert!(verify_norm_form(&d, &v, &w));
        assert!(verify_norm_form(&int(1), &BigInt::from(1), &BigInt::from(0)));
        assert!(!verify_norm_form(&int(2), &BigInt::from(1), &BigInt::from(0)));
    }
}
