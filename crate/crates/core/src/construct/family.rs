use num_traits::Zero;

use super::trinomial::trinomial_disc;
use crate::bigexact::{int, is_perfect_square, pow, Rational};
use crate::error::{Error, Result};
use crate::polyring::{compose_rational, cyclic_cubic_map, Poly};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyParams {
    pub u: Rational,
    pub v: Rational,
}

impl FamilyParams {
    pub fn new(u: Rational, v: Rational) -> Result<Self> {
        if u.is_zero() {
            return Err(Error::Degenerate("u must be nonzero".into()));
        }
        if denominator_term(&u, &v).is_zero() {
            return Err(Error::Degenerate(format!("7 + (1 - 11u^2)v^2 vanishes at u={u}, v={v}")));
        }
        Ok(Self { u, v })
    }
}

fn denominator_term(u: &Rational, v: &Rational) -> Rational {
    int(7) + (int(1) - int(11) * u * u) * v * v
}

/// `(t, s) = (-8^8 / (7^6 (7 + (1 - 11u²)v²)), -12^12 u² / 11^10)`.
pub fn family_ts(u: &Rational, v: &Rational) -> Result<(Rational, Rational)> {
    let p = FamilyParams::new(u.clone(), v.clone())?;
    let t = -pow(&int(8), 8) / (pow(&int(7), 6) * denominator_term(&p.u, &p.v));
    let s = -pow(&int(12), 12) * &p.u * &p.u / pow(&int(11), 10);
    Ok((t, s))
}

/// `X^n - c(X + 1)`.
pub fn shifted_trinomial(n: usize, c: &Rational) -> Poly<Rational> {
    super::trinomial(n, c, &-c.clone())
}

#[derive(Clone, Debug)]
pub struct FamilyBuild {
    pub t: Rational,
    pub s: Rational,
    /// `X^8 - t(X + 1)`.
    pub octic: Poly<Rational>,
    /// `X^12 - s(X + 1)`.
    pub dodecic: Poly<Rational>,
    /// Cyclic-cubic lift of the octic, degree 24.
    pub f_part: Poly<Rational>,
    /// `dodecic(X²)`, degree 24.
    pub g_part: Poly<Rational>,
    pub p: Poly<Rational>,
    pub g_constant_is_square: bool,
    pub disc_product_is_square: bool,
}

pub fn build_family_p(u: &Rational, v: &Rational) -> Result<FamilyBuild> {
    let (t, s) = family_ts(u, v)?;
    if t.is_zero() || s.is_zero() {
        return Err(Error::Degenerate("family parameters vanish".into()));
    }
    let octic = shifted_trinomial(8, &t);
    let dodecic = shifted_trinomial(12, &s);
    let f_part = compose_rational(&octic, &cyclic_cubic_map());
    let g_part = dodecic.inflate(2);
    let p = &f_part * &g_part;
    let g_constant_is_square = is_perfect_square(&g_part.coeff(0)).is_some();
    let disc_f = trinomial_disc(8, &t, &-t.clone())?;
    let disc_g = trinomial_disc(12, &s, &-s.clone())?;
    if disc_f.is_zero() || disc_g.is_zero() {
        return Err(Error::Degenerate("a family factor is not separable".into()));
    }
    let disc_product_is_square = is_perfect_square(&(disc_f * disc_g)).is_some();
    Ok(FamilyBuild { t, s, octic, dodecic, f_part, g_part, p, g_constant_is_square, disc_product_is_square })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigexact::rat;

    #[test]
    fn unit_point() {
        let (t, s) = family_ts(&int(1), &int(1)).unwrap();
        assert_eq!(t, rat(16777216, 352947));
        assert_eq!(s, rat(-8916100448256, 25937424601));
        let b = build_family_p(&int(1), &int(1)).unwrap();
        assert_eq!(b.p.degree(), Some(48));
        assert!(b.g_constant_is_square);
        assert!(b.disc_product_is_square);
    }

    #[test]
    fn degenerate_inputs() {
        assert!(family_ts(&int(0), &int(1)).is_err());
        assert!(family_ts(&rat(1, 2), &int(2)).is_err());
        assert!(family_ts(&rat(1, 2), &int(1)).is_ok());
    }
}
