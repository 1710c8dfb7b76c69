use num_traits::{One, Zero};

use crate::bigexact::{int, pow, rat, Rational};
use crate::error::{Error, Result};
use crate::polyring::Poly;

/// `h(X) / (11664(1 - t))` with
/// `h = 2(18X⁴ - 36X² - 16X + 3)³ - 9t(6X³ - 9X - 4)⁴`.
pub fn appendix_g12(t: &Rational) -> Result<Poly<Rational>> {
    if t.is_one() {
        return Err(Error::Degenerate("t = 1 makes the scaling vanish".into()));
    }
    let a = Poly::<Rational>::from_ints(&[3, -16, -36, 0, 18]).pow(3).scale(&int(2));
    let b = Poly::<Rational>::from_ints(&[-4, -9, 0, 6]).pow(4).scale(&(int(9) * t));
    Ok((&a - &b).scale(&(Rational::one() / (int(11664) * (int(1) - t)))))
}

/// Closed form of `g12(0)`: `(16t/81 - 1/216) / (t - 1)`.
pub fn appendix_g12_constant(t: &Rational) -> Result<Rational> {
    if t.is_one() {
        return Err(Error::Degenerate("t = 1".into()));
    }
    Ok((rat(16, 81) * t - rat(1, 216)) / (t - int(1)))
}

/// Closed form of `disc(g12)`: `-t^8 / (2^25 3^59 (t - 1)^17)`.
pub fn appendix_g12_disc(t: &Rational) -> Result<Rational> {
    if t.is_one() {
        return Err(Error::Degenerate("t = 1".into()));
    }
    Ok(-pow(t, 8) / (pow(&int(2), 25) * pow(&int(3), 59) * pow(&(t - int(1)), 17)))
}

/// `t = 1 + (s - 125/(256s))² / 2`.
pub fn appendix_t_of_s(s: &Rational) -> Result<Rational> {
    if s.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let d = s - rat(125, 256) / s;
    Ok(int(1) + &d * &d / int(2))
}

/// Point `(u, v)` on `2u² + 125/128 = 2v²` for parameter `s`.
pub fn hyperbola_point(s: &Rational) -> Result<(Rational, Rational)> {
    if s.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let half = s / int(2);
    let k = rat(125, 512) / s;
    Ok((&half - &k, half + k))
}

pub fn on_hyperbola(u: &Rational, v: &Rational) -> bool {
    int(2) * u * u + rat(125, 128) == int(2) * v * v
}

/// A point on `y² = x³ + 189`, or the identity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EllipticPoint {
    pub x: Rational,
    pub y: Rational,
    pub at_infinity: bool,
}

pub const CURVE_B: i64 = 189;

impl EllipticPoint {
    pub fn new(x: Rational, y: Rational) -> Result<Self> {
        let p = Self { x, y, at_infinity: false };
        if !p.on_curve() {
            return Err(Error::Precondition(format!("({}, {}) is not on y^2 = x^3 + 189", p.x, p.y)));
        }
        Ok(p)
    }

    pub fn infinity() -> Self {
        Self { x: Rational::zero(), y: Rational::zero(), at_infinity: true }
    }

    pub fn generator() -> Self {
        Self::new(int(-5), int(8)).expect("generator is on the curve")
    }

    pub fn on_curve(&self) -> bool {
        self.at_infinity || &self.y * &self.y == pow(&self.x, 3) + int(CURVE_B)
    }

    pub fn neg(&self) -> Self {
        Self { x: self.x.clone(), y: -self.y.clone(), at_infinity: self.at_infinity }
    }
}

pub fn ec_add(p: &EllipticPoint, q: &EllipticPoint) -> EllipticPoint {
    if p.at_infinity {
        return q.clone();
    }
    if q.at_infinity {
        return p.clone();
    }
    let lambda = if p.x == q.x {
        if p.y != q.y || p.y.is_zero() {
            return EllipticPoint::infinity();
        }
        int(3) * &p.x * &p.x / (int(2) * &p.y)
    } else {
        (&q.y - &p.y) / (&q.x - &p.x)
    };
    let x = &lambda * &lambda - &p.x - &q.x;
    let y = lambda * (&p.x - &x) - &p.y;
    EllipticPoint { x, y, at_infinity: false }
}

/// `P, 2P, ..., nP` for the generator `P = (-5, 8)`.
pub fn ec_multiples(n: usize) -> Vec<EllipticPoint> {
    let g = EllipticPoint::generator();
    let mut out: Vec<EllipticPoint> = Vec::with_capacity(n);
    for k in 0..n {
        let next = if k == 0 { g.clone() } else { ec_add(&out[k - 1], &g) };
        out.push(next);
    }
    out
}

/// `t = (768 / (49 x))³`.
pub fn appendix_t_of_xn(x: &Rational) -> Result<Rational> {
    if x.is_zero() {
        return Err(Error::DivisionByZero);
    }
    Ok(pow(&(int(768) / (int(49) * x)), 3))
}

/// `X^8 - t(X + 1)`.
pub fn appendix_f8(t: &Rational) -> Poly<Rational> {
    super::shifted_trinomial(8, t)
}

/// Curve point to a solution of `v² = 3u(7u³ + 1)`: `u = 3/x`, `v = y u² / 3`.
pub fn curve_to_diophantine(p: &EllipticPoint) -> Result<(Rational, Rational)> {
    if p.at_infinity || p.x.is_zero() {
        return Err(Error::Degenerate("point has no image".into()));
    }
    let u = int(3) / &p.x;
    let v = &p.y * &u * &u / int(3);
    Ok((u, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigexact::{is_perfect_cube_rat, is_perfect_square};
    use crate::fixtures::{appendix_value, elliptic_table};
    use crate::polyring::discriminant;

    #[test]
    fn g12_constant_and_disc() {
        for t in [rat(2, 1), rat(-3, 7), rat(148233, 131072), rat(5, 11)] {
            let g = appendix_g12(&t).unwrap();
            assert_eq!(g.degree(), Some(12));
            assert_eq!(g.coeff(0), appendix_g12_constant(&t).unwrap());
            assert_eq!(discriminant(&g), appendix_g12_disc(&t).unwrap());
        }
        assert_eq!(appendix_g12_constant(&int(2)).unwrap(), rat(253, 648));
        assert!(appendix_g12(&int(1)).is_err());
    }

    #[test]
    fn hyperbola_and_t() {
        assert_eq!(appendix_t_of_s(&int(1)).unwrap(), appendix_value("t_s1").unwrap());
        for s in [1, 2, 5] {
            let s = int(s);
            let t = appendix_t_of_s(&s).unwrap();
            let (u, v) = hyperbola_point(&s).unwrap();
            assert!(on_hyperbola(&u, &v));
            assert_eq!(&t - int(1), int(2) * &u * &u);
            assert_eq!(&t - rat(3, 128), int(2) * &v * &v);
            assert!(is_perfect_square(&((&t - int(1)) / int(2))).is_some());
            assert!(is_perfect_square(&((&t - rat(3, 128)) / int(2))).is_some());
        }
        assert!(appendix_t_of_s(&int(0)).is_err());
    }

    #[test]
    fn elliptic_table_rows() {
        let pts = ec_multiples(5);
        for ((n, x), p) in elliptic_table().unwrap().into_iter().zip(&pts) {
            assert!(p.on_curve());
            assert_eq!(&p.x, &x, "n = {n}");
            let t = appendix_t_of_xn(&x).unwrap();
            assert!(is_perfect_cube_rat(&-t).is_some());
        }
        assert_eq!(appendix_t_of_xn(&int(-5)).unwrap(), appendix_value("t_x1").unwrap());
        let g = EllipticPoint::generator();
        assert!(ec_add(&g, &g.neg()).at_infinity);
        assert_eq!(ec_add(&EllipticPoint::infinity(), &g), g);
    }

    #[test]
    fn printed_chord_recursion() {
        // x' = ((y - 8)/(x + 5))² + 5 - x, y' = (y - 8)/(x + 5) · (-5 - x') - 8.
        let pts = ec_multiples(6);
        for k in 1..5 {
            let (x, y) = (&pts[k].x, &pts[k].y);
            let l = (y - int(8)) / (x + int(5));
            let xn = &l * &l + int(5) - x;
            let yn = l * (int(-5) - &xn) - int(8);
            assert_eq!((xn, yn), (pts[k + 1].x.clone(), pts[k + 1].y.clone()));
        }
    }

    #[test]
    fn diophantine_image() {
        for p in ec_multiples(4) {
            let (u, v) = curve_to_diophantine(&p).unwrap();
            assert_eq!(&v * &v, int(3) * &u * (int(7) * pow(&u, 3) + int(1)));
        }
        let t = appendix_t_of_xn(&int(-5)).unwrap();
        let f = appendix_f8(&t).inflate(3);
        assert_eq!(f.coeff(24), int(1));
        assert_eq!(f.coeff(3), -t.clone());
        assert_eq!(f.coeff(0), -t);
    }
}
