use num_traits::{One, Zero};

use crate::bigexact::{int, pow, Eisenstein, Rational};
use crate::error::{Error, Result};
use crate::polyring::Poly;

/// Closed-form discriminant of `X^n - aX + b`.
pub fn trinomial_disc(n: u32, a: &Rational, b: &Rational) -> Result<Rational> {
    if n < 2 {
        return Err(Error::Precondition(format!("trinomial degree must be at least 2, got {n}")));
    }
    let nn = Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(n), n as usize));
    let mm = Rational::from_integer(num_traits::pow(num_bigint::BigInt::from(n - 1), (n - 1) as usize));
    let core = nn * pow(b, n - 1) - mm * pow(a, n);
    let sign = (n as u64 * (n as u64 - 1) / 2) % 2;
    Ok(if sign == 1 { -core } else { core })
}

/// `X^n - aX + b`.
pub fn trinomial(n: usize, a: &Rational, b: &Rational) -> Poly<Rational> {
    let mut c = vec![Rational::zero(); n + 1];
    c[0] += b;
    c[1] -= a;
    c[n] += Rational::one();
    Poly::new(c)
}

/// `f8 = X^8 - tX - s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrinomialParams {
    pub t: Rational,
    pub s: Rational,
}

impl TrinomialParams {
    pub fn new(t: Rational, s: Rational) -> Self {
        Self { t, s }
    }

    pub fn f8(&self) -> Poly<Rational> {
        trinomial(8, &self.t, &-self.s.clone())
    }

    pub fn disc(&self) -> Rational {
        trinomial_disc(8, &self.t, &-self.s.clone()).expect("degree 8")
    }
}

/// Which embedding of ω the cube equation is read in.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Plain,
    Conjugate,
}

const SHIFT: i64 = 6561;

/// `3ωt - s + 6561ω̄` under `Plain`; its conjugate under `Conjugate`.
pub fn cube_side(params: &TrinomialParams, convention: Convention) -> Eisenstein {
    let w = Eisenstein::omega();
    let lhs = w.scale(&(int(3) * &params.t)) - Eisenstein::from_rational(params.s.clone())
        + Eisenstein::omega_bar().scale(&int(SHIFT));
    match convention {
        Convention::Plain => lhs,
        Convention::Conjugate => lhs.conj(),
    }
}

/// Solves `cube_side(t, s) = c(a + ωb)³` for `(t, s)`.
pub fn solve_params(a: &Rational, b: &Rational, c: &Rational, convention: Convention) -> Result<TrinomialParams> {
    let z = Eisenstein::new(a.clone(), b.clone()).pow(3).scale(c);
    let z = match convention {
        Convention::Plain => z,
        Convention::Conjugate => z.conj(),
    };
    let s = -z.a.clone() - int(SHIFT);
    let t = (z.b.clone() + int(SHIFT)) / int(3);
    let params = TrinomialParams { t, s };
    let target = Eisenstein::new(a.clone(), b.clone()).pow(3).scale(c);
    if cube_side(&params, convention) != target {
        return Err(Error::Degenerate("solved parameters fail re-substitution".into()));
    }
    Ok(params)
}
