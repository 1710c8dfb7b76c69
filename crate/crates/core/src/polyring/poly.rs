use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::bigexact::{int, Eisenstein, Rational};

/// Coefficient field for [`Poly`].
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_i64(n: i64) -> Self;

    /// `self^e` for any integer `e`; negative exponents invert.
    fn powi(&self, e: i64) -> Self {
        let mut base = if e < 0 { Self::one() / self.clone() } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            base = base.clone() * base;
            e >>= 1;
        }
        acc
    }
}

impl Field for Rational {
    fn from_i64(n: i64) -> Self {
        int(n)
    }
}

impl Field for Eisenstein {
    fn from_i64(n: i64) -> Self {
        Eisenstein::from_ints(n, 0)
    }
}

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the last one is nonzero.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly<K> {
    coeffs: Vec<K>,
}

impl<K: Field> Poly<K> {
    pub fn new(mut coeffs: Vec<K>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| K::from_i64(c)).collect())
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(K::one())
    }

    pub fn constant(c: K) -> Self {
        Self::new(vec![c])
    }

    pub fn x() -> Self {
        Self::monomial(K::one(), 1)
    }

    pub fn monomial(c: K, k: usize) -> Self {
        let mut coeffs = vec![K::zero(); k + 1];
        coeffs[k] = c;
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<K> {
        self.coeffs
    }

    /// Coefficient of `X^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> K {
        self.coeffs.get(k).cloned().unwrap_or_else(K::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lc(&self) -> K {
        self.coeffs.last().cloned().unwrap_or_else(K::zero)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn scale(&self, c: &K) -> Self {
        Self::new(self.coeffs.iter().map(|a| a.clone() * c.clone()).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = K::one() / self.lc();
        self.scale(&inv)
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c.clone() * K::from_i64(k as i64))
                .collect(),
        )
    }

    pub fn eval(&self, x: &K) -> K {
        self.coeffs.iter().rev().fold(K::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// `self(inner(X))`.
    pub fn compose(&self, inner: &Self) -> Self {
        self.coeffs.iter().rev().fold(Self::zero(), |acc, c| &(&acc * inner) + &Self::constant(c.clone()))
    }

    /// Substitutes `X ↦ X^k`.
    pub fn inflate(&self, k: usize) -> Self {
        let mut coeffs = vec![K::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::new(coeffs)
    }

    /// Quotient and remainder. Panics when dividing by the zero polynomial.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let Some(nd) = self.degree() else { return (Self::zero(), Self::zero()) };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let inv = K::one() / divisor.lc();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![K::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let q = rem[k + dd].clone() * inv.clone();
            if q.is_zero() {
                continue;
            }
            for (j, c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = rem[k + j].clone() - q.clone() * c.clone();
            }
            quot[k] = q;
        }
        rem.truncate(dd);
        (Self::new(quot), Self::new(rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.divrem(divisor).1
    }

    /// Pseudo-remainder `lc(divisor)^(deg self - deg divisor + 1) · self mod divisor`.
    pub fn prem(&self, divisor: &Self) -> Self {
        let (Some(a), Some(b)) = (self.degree(), divisor.degree()) else {
            return Self::zero();
        };
        if a < b {
            return self.clone();
        }
        self.scale(&divisor.lc().powi((a - b + 1) as i64)).rem(divisor)
    }

    /// Monic gcd; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn map<L: Field>(&self, f: impl Fn(&K) -> L) -> Poly<L> {
        Poly::new(self.coeffs.iter().map(f).collect())
    }
}

impl<K: Field> Add for &Poly<K> {
    type Output = Poly<K>;
    fn add(self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl<K: Field> Sub for &Poly<K> {
    type Output = Poly<K>;
    fn sub(self, rhs: &Poly<K>) -> Poly<K> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - rhs.coeff(k)).collect())
    }
}

impl<K: Field> Mul for &Poly<K> {
    type Output = Poly<K>;
    fn mul(self, rhs: &Poly<K>) -> Poly<K> {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![K::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].clone() + a.clone() * b.clone();
            }
        }
        Poly::new(out)
    }
}

impl<K: Field> Neg for &Poly<K> {
    type Output = Poly<K>;
    fn neg(self) -> Poly<K> {
        Poly::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl<K: Field> $tr for Poly<K> {
            type Output = Poly<K>;
            fn $m(self, rhs: Poly<K>) -> Poly<K> {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl<K: Field> fmt::Display for Poly<K> {
    /// Human-readable form, highest degree first, e.g. `X^8 - 2139*X + 6489`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let text = c.to_string();
            let compound = text.contains(' ');
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !compound => (true, rest.to_string()),
                _ => (false, if compound { format!("({text})") } else { text }),
            };
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let unit = body == "1";
            match (k, unit) {
                (0, _) => f.write_str(&body)?,
                (1, true) => f.write_str("X")?,
                (1, false) => write!(f, "{body}*X")?,
                (_, true) => write!(f, "X^{k}")?,
                (_, false) => write!(f, "{body}*X^{k}")?,
            }
        }
        Ok(())
    }
}

impl<K: Field> fmt::Debug for Poly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigexact::rat;

    type P = Poly<Rational>;

    #[test]
    fn trimming_and_degree() {
        assert!(P::from_ints(&[0, 0]).is_zero());
        assert_eq!(P::from_ints(&[1, 2, 0]).degree(), Some(1));
        assert_eq!(P::zero().degree(), None);
    }

    #[test]
    fn division() {
        let (q, r) = P::from_ints(&[-1, 0, 1]).divrem(&P::from_ints(&[-1, 1]));
        assert_eq!(q, P::from_ints(&[1, 1]));
        assert!(r.is_zero());
        let (q, r) = P::from_ints(&[1, 0, 0, 2]).divrem(&P::from_ints(&[1, 3]));
        assert_eq!(&(&q * &P::from_ints(&[1, 3])) + &r, P::from_ints(&[1, 0, 0, 2]));
        assert!(r.degree().is_none_or(|d| d < 1));
    }

    #[test]
    fn derivative_and_eval() {
        let mut c = vec![0i64; 9];
        c[0] = 6489;
        c[1] = -2139;
        c[8] = 1;
        let f = P::from_ints(&c);
        let mut d = vec![0i64; 8];
        d[0] = -2139;
        d[7] = 8;
        assert_eq!(f.derivative(), P::from_ints(&d));
        assert_eq!(f.to_string(), "X^8 - 2139*X + 6489");
        let g = P::from_ints(&[16, 20, 0, 0, 0, 1]);
        assert_eq!(g.eval(&int(0)), int(16));
        assert_eq!(g.eval(&int(1)), int(37));
    }

    #[test]
    fn gcd_is_monic() {
        let a = &P::from_ints(&[-1, 1]) * &P::from_ints(&[2, 0, 1]);
        let b = &P::from_ints(&[-1, 1]) * &P::from_ints(&[5, 3]);
        assert_eq!(a.gcd(&b), P::from_ints(&[-1, 1]));
        assert_eq!(P::from_ints(&[2, 4]).gcd(&P::zero()), P::new(vec![rat(1, 2), int(1)]));
    }

    #[test]
    fn composition_and_inflation() {
        let f = P::from_ints(&[1, 0, 1]);
        let g = P::from_ints(&[1, 1]);
        assert_eq!(f.compose(&g), P::from_ints(&[2, 2, 1]));
        assert_eq!(f.inflate(3), P::from_ints(&[1, 0, 0, 0, 0, 0, 1]));
    }

    #[test]
    fn display_eisenstein() {
        let p: Poly<Eisenstein> = Poly::new(vec![Eisenstein::from_ints(1, -2), Eisenstein::one()]);
        assert_eq!(p.to_string(), "X + (1 - 2*w)");
    }
}
