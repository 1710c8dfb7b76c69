use std::fmt;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::fppoly::{try_reduce, FpPoly, UnusableReason};
use crate::bigexact::Rational;
use crate::polyring::Poly;

/// Multiset of irreducible-factor degrees, kept sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DegreePattern {
    pub parts: Vec<usize>,
}

impl DegreePattern {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn total(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for DegreePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        f.write_str(&words.join(" "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GoodPrimeReport {
    pub p: u64,
    pub usable: bool,
    pub reason: Option<UnusableReason>,
}

/// Powers `X^{ip} mod f` for `i < deg f`, so that `h^p mod f` is a linear map.
struct FrobeniusMatrix {
    rows: Vec<FpPoly>,
}

impl FrobeniusMatrix {
    fn new(f: &FpPoly) -> Self {
        let p = f.modulus();
        let n = f.degree().unwrap_or(0);
        let xp = FpPoly::x(p).powmod(&BigUint::from(p), f);
        let mut rows = Vec::with_capacity(n);
        let mut cur = FpPoly::one(p).rem(f);
        for _ in 0..n {
            rows.push(cur.clone());
            cur = cur.mulmod(&xp, f);
        }
        Self { rows }
    }

    fn apply(&self, h: &FpPoly) -> FpPoly {
        let p = h.modulus();
        let mut acc = vec![0u128; self.rows.len()];
        for (&c, row) in h.coeffs().iter().zip(&self.rows) {
            if c == 0 {
                continue;
            }
            for (a, &r) in acc.iter_mut().zip(row.coeffs()) {
                *a = (*a + c as u128 * r as u128) % p as u128;
            }
        }
        FpPoly::new(p, acc.into_iter().map(|a| a as u64).collect())
    }
}

/// Distinct-degree factorization of a monic squarefree `f`: pairs
/// `(d, product of all irreducible factors of degree d)`.
pub fn distinct_degree(f: &FpPoly) -> Vec<(usize, FpPoly)> {
    let p = f.modulus();
    let mut out = Vec::new();
    let Some(n) = f.degree() else { return out };
    if n == 0 {
        return out;
    }
    let frob = FrobeniusMatrix::new(f);
    let x = FpPoly::x(p);
    let mut rest = f.clone();
    let mut h = x.rem(f);
    let mut d = 0;
    while let Some(deg) = rest.degree() {
        d += 1;
        if deg < 2 * d {
            if deg > 0 {
                out.push((deg, rest.clone()));
            }
            break;
        }
        h = frob.apply(&h);
        let g = h.rem(&rest).sub(&x).gcd(&rest);
        if !g.is_one() {
            rest = rest.div(&g);
            out.push((d, g));
        }
    }
    out
}

/// Splits a monic squarefree `f` whose irreducible factors all have degree `d`.
pub fn equal_degree(f: &FpPoly, d: usize, rng: &mut impl Rng) -> Vec<FpPoly> {
    let p = f.modulus();
    let n = f.degree().expect("nonzero input");
    if n == d {
        return vec![f.clone()];
    }
    let exponent = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a = FpPoly::new(p, (0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.degree().map_or(true, |k| k == 0) {
            continue;
        }
        let b = if p == 2 {
            // Trace to F2 of an element of F_{2^d}: a + a² + ... + a^{2^{d-1}}.
            let mut acc = a.clone();
            let mut sq = a.clone();
            for _ in 1..d {
                sq = sq.mulmod(&sq, f);
                acc = acc.add(&sq);
            }
            acc
        } else {
            a.powmod(&exponent, f).sub(&FpPoly::one(p))
        };
        let g = b.gcd(f);
        if let Some(k) = g.degree() {
            if k > 0 && k < n {
                let mut out = equal_degree(&g, d, rng);
                out.extend(equal_degree(&f.div(&g), d, rng));
                return out;
            }
        }
    }
}

/// Squarefree decomposition of a monic `f`: pairs `(squarefree part, multiplicity)`.
pub fn squarefree_decomposition(f: &FpPoly) -> Vec<(FpPoly, usize)> {
    let p = f.modulus();
    let mut out = Vec::new();
    if f.degree().map_or(true, |d| d == 0) {
        return out;
    }
    let f = f.monic();
    let c0 = f.gcd(&f.derivative());
    let mut w = f.div(&c0);
    let mut c = c0;
    let mut i = 1;
    while !w.is_one() {
        let y = w.gcd(&c);
        let fac = w.div(&y);
        if !fac.is_one() {
            out.push((fac, i));
        }
        w = y;
        c = c.div(&w);
        i += 1;
    }
    if !c.is_one() {
        for (g, m) in squarefree_decomposition(&c.pth_root()) {
            out.push((g, m * p as usize));
        }
    }
    out
}

/// Monic irreducible factors with multiplicities, sorted by (degree, coefficients).
pub fn factor_fp(f: &FpPoly, seed: u64) -> Vec<(FpPoly, usize)> {
    assert!(!f.is_zero(), "cannot factor the zero polynomial");
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for (part, m) in squarefree_decomposition(f) {
        for (d, block) in distinct_degree(&part) {
            for g in equal_degree(&block, d, &mut rng) {
                out.push((g, m));
            }
        }
    }
    out.sort_by(|(a, _), (b, _)| a.degree().cmp(&b.degree()).then_with(|| a.coeffs().cmp(b.coeffs())));
    out
}

pub fn is_irreducible(f: &FpPoly) -> bool {
    match f.degree() {
        None | Some(0) => false,
        Some(n) => {
            let f = f.monic();
            f.is_squarefree() && distinct_degree(&f) == vec![(n, f.clone())]
        }
    }
}

/// Degree pattern of a squarefree monic `f` over F_p, read off from the
/// distinct-degree split alone.
pub fn pattern_of(f: &FpPoly) -> DegreePattern {
    let mut parts = Vec::new();
    for (d, block) in distinct_degree(&f.monic()) {
        let k = block.degree().unwrap() / d;
        parts.extend(std::iter::repeat(d).take(k));
    }
    DegreePattern::new(parts)
}

/// Frobenius degree pattern at `p`, or the reason `p` is unusable.
pub fn degree_pattern(f: &Poly<Rational>, p: u64) -> Result<DegreePattern, UnusableReason> {
    let fp = try_reduce(f.coeffs(), p)?;
    if !fp.is_squarefree() {
        return Err(UnusableReason::NotSquarefree);
    }
    Ok(pattern_of(&fp))
}

pub fn good_prime_report(f: &Poly<Rational>, p: u64) -> GoodPrimeReport {
    let reason = degree_pattern(f, p).err();
    GoodPrimeReport { p, usable: reason.is_none(), reason }
}
