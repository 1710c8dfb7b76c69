//! Resultants and discriminants by the subresultant polynomial remainder
//! sequence.
//!
//! Sign convention: `resultant(f, g) = lc(g)^deg f · ∏ f(β)` over the roots β
//! of `g`, which is `(-1)^(deg f · deg g)` times the Sylvester determinant.
//! The discriminant formula below is insensitive to that sign because
//! `deg f · deg f'` is always even.

use super::poly::{Field, Poly};

/// Sylvester-determinant resultant `lc(f)^deg g · ∏ g(α)` over roots α of `f`.
pub fn sylvester_resultant<K: Field>(f: &Poly<K>, g: &Poly<K>) -> K {
    let (Some(_), Some(_)) = (f.degree(), g.degree()) else {
        return K::zero();
    };
    let (mut a, mut b) = (f.clone(), g.clone());
    let mut sign = K::one();
    if a.degree() < b.degree() {
        std::mem::swap(&mut a, &mut b);
        if a.degree().unwrap() % 2 == 1 && b.degree().unwrap() % 2 == 1 {
            sign = -sign;
        }
    }
    let (mut g_, mut h) = (K::one(), K::one());
    loop {
        let da = a.degree().unwrap();
        let db = match b.degree() {
            None => return K::zero(),
            Some(d) => d,
        };
        if db == 0 {
            return sign * h.powi(1 - da as i64) * b.lc().powi(da as i64);
        }
        let delta = (da - db) as i64;
        if da % 2 == 1 && db % 2 == 1 {
            sign = -sign;
        }
        let r = a.prem(&b);
        let divisor = g_.clone() * h.powi(delta);
        a = b;
        b = r.scale(&(K::one() / divisor));
        g_ = a.lc();
        h = h.powi(1 - delta) * g_.powi(delta);
    }
}

/// Resultant under the `lc(g)^deg f · ∏ f(β)` convention.
pub fn resultant<K: Field>(f: &Poly<K>, g: &Poly<K>) -> K {
    let r = sylvester_resultant(f, g);
    match (f.degree(), g.degree()) {
        (Some(m), Some(n)) if m * n % 2 == 1 => -r,
        _ => r,
    }
}

/// `disc f = (-1)^(n(n-1)/2) · Res(f, f') / lc(f)`; zero for constants.
pub fn discriminant<K: Field>(f: &Poly<K>) -> K {
    let n = match f.degree() {
        Some(n) if n >= 1 => n,
        _ => return K::zero(),
    };
    let r = resultant(f, &f.derivative()) / f.lc();
    if (n * (n - 1) / 2) % 2 == 1 {
        -r
    } else {
        r
    }
}

/// `gcd(f, f')` is constant.
pub fn squarefree_check<K: Field>(f: &Poly<K>) -> bool {
    !f.is_zero() && f.gcd(&f.derivative()).is_constant()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bigexact::{int, Rational};

    type P = Poly<Rational>;

    /// Determinant of the Sylvester matrix by Gaussian elimination over Q.
    fn sylvester_oracle(f: &P, g: &P) -> Rational {
        let (m, n) = (f.degree().unwrap(), g.degree().unwrap());
        let size = m + n;
        let mut mat = vec![vec![int(0); size]; size];
        for i in 0..n {
            for k in 0..=m {
                mat[i][i + k] = f.coeff(m - k);
            }
        }
        for i in 0..m {
            for k in 0..=n {
                mat[n + i][i + k] = g.coeff(n - k);
            }
        }
        let mut det = int(1);
        for col in 0..size {
            let Some(piv) = (col..size).find(|&r| mat[r][col] != int(0)) else { return int(0) };
            if piv != col {
                mat.swap(piv, col);
                det = -det;
            }
            det *= mat[col][col].clone();
            for r in col + 1..size {
                let factor = mat[r][col].clone() / mat[col][col].clone();
                for c in col..size {
                    let sub = factor.clone() * mat[col][c].clone();
                    mat[r][c] -= sub;
                }
            }
        }
        det
    }

    #[test]
    fn small_resultants() {
        let (a, b) = (int(3), int(-7));
        let f = P::new(vec![-a.clone(), int(1)]);
        let g = P::new(vec![-b.clone(), int(1)]);
        assert_eq!(resultant(&f, &g), &b - &a);
        assert_eq!(resultant(&P::from_ints(&[1, 0, 1]), &P::from_ints(&[-1, 1])), int(2));
        assert_eq!(resultant(&P::from_ints(&[5]), &P::from_ints(&[1, 2, 3])), int(25));
        assert_eq!(resultant(&P::zero(), &P::from_ints(&[1, 1])), int(0));
    }

    #[test]
    fn matches_sylvester_determinant() {
        let cases: &[(&[i64], &[i64])] = &[
            (&[1, 2, 3], &[4, 5]),
            (&[1, -1, 0, 2], &[3, 0, 1, 7]),
            (&[2, 0, 0, 0, 1], &[1, 1, 1]),
            (&[-3, 5, 1, 0, 2, 9], &[1, 0, -4, 1]),
            (&[1, 1], &[1, 1, 1, 1, 1]),
        ];
        for (f, g) in cases {
            let (f, g) = (P::from_ints(f), P::from_ints(g));
            assert_eq!(sylvester_resultant(&f, &g), sylvester_oracle(&f, &g), "{f} / {g}");
        }
    }

    #[test]
    fn discriminants() {
        let (b, c) = (int(5), int(-3));
        let q = P::new(vec![c.clone(), b.clone(), int(1)]);
        assert_eq!(discriminant(&q), &b * &b - int(4) * &c);
        let quintic = P::from_ints(&[16, 20, 0, 0, 0, 1]);
        assert_eq!(discriminant(&quintic), int(1_024_000_000));
        // Res(f, f') and disc agree through the stated formula.
        let r = resultant(&quintic, &quintic.derivative());
        assert_eq!(r, int(1_024_000_000));
        let cubic = P::from_ints(&[1, -3, 0, 1]);
        assert_eq!(discriminant(&cubic), int(81));
        assert_eq!(discriminant(&P::from_ints(&[4, 2])), int(1));
    }

    #[test]
    fn squarefree() {
        assert!(!squarefree_check(&P::from_ints(&[1, -2, 1])));
        let mut c = vec![0i64; 9];
        c[0] = 6489;
        c[1] = -2139;
        c[8] = 1;
        assert!(squarefree_check(&P::from_ints(&c)));
        assert!(!squarefree_check(&P::zero()));
    }
}
