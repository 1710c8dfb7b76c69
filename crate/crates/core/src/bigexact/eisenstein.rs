//! The field Q(ω), ω a primitive cube root of unity, in the basis {1, ω}.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{big, int, Rational};

/// `a + b·ω` with `ω² = -1 - ω`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Eisenstein {
    pub a: Rational,
    pub b: Rational,
}

impl Eisenstein {
    pub fn new(a: Rational, b: Rational) -> Self {
        Self { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        Self::new(int(a), int(b))
    }

    pub fn from_rational(a: Rational) -> Self {
        Self::new(a, Rational::zero())
    }

    pub fn omega() -> Self {
        Self::from_ints(0, 1)
    }

    /// ω̄ = ω² = -1 - ω.
    pub fn omega_bar() -> Self {
        Self::from_ints(-1, -1)
    }

    /// Complex conjugation: `(a - b) - b·ω`.
    pub fn conj(&self) -> Self {
        Self::new(&self.a - &self.b, -&self.b)
    }

    /// Field norm `a² - ab + b²`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(&self.a * q, &self.b * q)
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&n.recip()))
    }

    /// A cube root in Q(ω), when `self` is a cube. The returned root is
    /// re-verified exactly before being handed out.
    pub fn cube_root(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // If c³ = z then (D·c)³ = D³·z ∈ D²·Z[ω], so D·c is an algebraic
        // integer, i.e. lies in Z[ω], where D is the common denominator of z.
        let d = self.a.denom().lcm(self.b.denom());
        let d3 = &d * &d * &d;
        let za = (&self.a * big(d3.clone())).to_integer();
        let zb = (&self.b * big(d3)).to_integer();
        let (ga, gb) = integral_cube_root(&za, &zb)?;
        let root = Self::new(Rational::new(ga, d.clone()), Rational::new(gb, d));
        (root.pow(3) == *self).then_some(root)
    }

    pub fn is_cube(&self) -> bool {
        self.cube_root().is_some()
    }
}

/// Eisenstein integer `γ` with `γ³ = za + zb·ω`, found by a floating-point
/// guess refined with exact Newton steps and an exact final check.
fn integral_cube_root(za: &BigInt, zb: &BigInt) -> Option<(BigInt, BigInt)> {
    let bits = za.bits().max(zb.bits()) as i64;
    // Scale the top ~60 bits into f64 range with a shift divisible by 3.
    let shift = ((bits - 60).max(0) + 2) / 3 * 3;
    let fa = (za >> shift as usize).to_f64()?;
    let fb = (zb >> shift as usize).to_f64()?;
    let (re, im) = (fa - fb / 2.0, fb * 3f64.sqrt() / 2.0);
    let (r, theta) = (re.hypot(im), im.atan2(re));
    let (cr, ci) = (r.cbrt() * (theta / 3.0).cos(), r.cbrt() * (theta / 3.0).sin());
    let gy = ci * 2.0 / 3f64.sqrt();
    let gx = cr + gy / 2.0;
    let scale = big(BigInt::one() << (shift / 3) as usize);
    let mut guess = Eisenstein::new(
        Rational::from_float(gx)? * &scale,
        Rational::from_float(gy)? * &scale,
    );

    let target = Eisenstein::new(big(za.clone()), big(zb.clone()));
    const FRACTION_BITS: usize = 24;
    let grid = BigInt::one() << FRACTION_BITS;
    let snap = |q: &Rational| Rational::new((q * big(grid.clone())).round().to_integer(), grid.clone());
    let three = int(3);
    let tolerance = Rational::new(BigInt::one(), BigInt::from(8));
    for _ in 0..200 {
        let sq = &guess * &guess;
        let inv = match sq.scale(&three).inverse() {
            Some(inv) => inv,
            None => break,
        };
        let next = &(&(&sq * &guess).scale(&int(2)) + &target) * &inv;
        let next = Eisenstein::new(snap(&next.a), snap(&next.b));
        let step = (&next - &guess).norm();
        guess = next;
        if step < tolerance {
            break;
        }
    }

    let (x, y) = (guess.a.round().to_integer(), guess.b.round().to_integer());
    for dx in -1..=1i64 {
        for dy in -1..=1i64 {
            let cand = Eisenstein::new(big(&x + dx), big(&y + dy));
            if cand.pow(3) == target {
                return Some((cand.a.to_integer(), cand.b.to_integer()));
            }
        }
    }
    None
}

impl Zero for Eisenstein {
    fn zero() -> Self {
        Self::from_ints(0, 0)
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

impl One for Eisenstein {
    fn one() -> Self {
        Self::from_ints(1, 0)
    }
}

impl Add for &Eisenstein {
    type Output = Eisenstein;
    fn add(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl Sub for &Eisenstein {
    type Output = Eisenstein;
    fn sub(self, rhs: &Eisenstein) -> Eisenstein {
        Eisenstein::new(&self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl Mul for &Eisenstein {
    type Output = Eisenstein;
    fn mul(self, rhs: &Eisenstein) -> Eisenstein {
        // (a + bω)(c + dω) = ac + (ad + bc)ω + bd(-1 - ω)
        let bd = &self.b * &rhs.b;
        Eisenstein::new(
            &self.a * &rhs.a - &bd,
            &self.a * &rhs.b + &self.b * &rhs.a - bd,
        )
    }
}

impl Div for &Eisenstein {
    type Output = Eisenstein;
    fn div(self, rhs: &Eisenstein) -> Eisenstein {
        self * &rhs.inverse().expect("division by zero in Q(ω)")
    }
}

impl Neg for &Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        Eisenstein::new(-&self.a, -&self.b)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Eisenstein {
            type Output = Eisenstein;
            fn $m(self, rhs: Eisenstein) -> Eisenstein {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for Eisenstein {
    type Output = Eisenstein;
    fn neg(self) -> Eisenstein {
        -&self
    }
}

impl fmt::Display for Eisenstein {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.a.is_zero(), self.b.is_zero()) {
            (_, true) => write!(f, "{}", self.a),
            (true, false) => write!(f, "{}*w", self.b),
            (false, false) if self.b.is_negative() => write!(f, "{} - {}*w", self.a, -&self.b),
            _ => write!(f, "{} + {}*w", self.a, self.b),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EisOp {
    Add,
    Mul,
    Conj,
    Pow(u32),
}

pub fn eis_arith(x: &Eisenstein, y: &Eisenstein, op: EisOp) -> Eisenstein {
    match op {
        EisOp::Add => x + y,
        EisOp::Mul => x * y,
        EisOp::Conj => x.conj(),
        EisOp::Pow(k) => x.pow(k),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigexact::rational::rat;

    fn e(a: i64, b: i64) -> Eisenstein {
        Eisenstein::from_ints(a, b)
    }

    #[test]
    fn worked_products() {
        assert_eq!(e(1, -1).pow(3), e(-3, -6));
        assert_eq!(Eisenstein::omega().conj(), e(-1, -1));
        assert_eq!(e(1, 2).pow(2), e(-3, 0));
        assert_eq!(Eisenstein::omega().pow(3), e(1, 0));
        assert_eq!(eis_arith(&e(1, 1), &e(2, 3), EisOp::Add), e(3, 4));
        assert_eq!(eis_arith(&e(0, 1), &e(0, 1), EisOp::Mul), e(-1, -1));
        assert_eq!(e(5, 3).pow(0), e(1, 0));
    }

    #[test]
    fn norm_is_multiplicative_and_inverse_works() {
        let x = e(3, -7);
        let y = e(-2, 5);
        assert_eq!((&x * &y).norm(), x.norm() * y.norm());
        assert_eq!(&x / &x, e(1, 0));
        assert!(Eisenstein::zero().inverse().is_none());
    }

    #[test]
    fn cube_roots() {
        let r = e(-3, -6).cube_root().unwrap();
        assert_eq!(r.pow(3), e(-3, -6));
        assert_eq!(e(1, 0).cube_root().unwrap().pow(3), e(1, 0));
        assert!(!Eisenstein::omega().is_cube());
        assert!(!e(2, 0).is_cube());
        assert!(!e(0, 3).is_cube() || e(0, 3).cube_root().unwrap().pow(3) == e(0, 3));
        let frac = Eisenstein::new(rat(7, 5), rat(-11, 3));
        let c = frac.pow(3);
        assert_eq!(c.cube_root().unwrap().pow(3), c);
    }

    #[test]
    fn huge_cube() {
        let big_root = Eisenstein::new(
            "123456789012345678901234567/98765432109876543".parse::<Rational>().unwrap(),
            "-55555555555555555555555/3".parse::<Rational>().unwrap(),
        );
        let z = big_root.pow(3);
        assert_eq!(z.cube_root().unwrap().pow(3), z);
        let not_cube = &z + &e(1, 0);
        assert!(!not_cube.is_cube());
    }

    #[test]
    fn display() {
        assert_eq!(e(-3, -6).to_string(), "-3 - 6*w");
        assert_eq!(e(0, 2).to_string(), "2*w");
        assert_eq!(e(4, 0).to_string(), "4");
    }
}
