//! The two models of the Rubik's Cube group: the 48-facet permutation group
//! generated by the six face turns, and the wreath-product model
//! `(C3 ≀ S8) × (C2 ≀ S12)` cut down by the realistic-position conditions.

use std::fmt;

use num_bigint::BigUint;
use rand::seq::SliceRandom;
use rand::Rng;

use crate::error::{Error, Result};
use crate::permgroup::{CycleType, Permutation};

/// The six face turns on facets 1..=48.
pub const FACE_TURNS: [&str; 6] = [
    "(1,3,8,6)(2,5,7,4)(9,33,25,17)(10,34,26,18)(11,35,27,19)",
    "(9,11,16,14)(10,13,15,12)(1,17,41,40)(4,20,44,37)(6,22,46,35)",
    "(17,19,24,22)(18,21,23,20)(6,25,43,16)(7,28,42,13)(8,30,41,11)",
    "(25,27,32,30)(26,29,31,28)(3,38,43,19)(5,36,45,21)(8,33,48,24)",
    "(33,35,40,38)(34,37,39,36)(3,9,46,32)(2,12,47,29)(1,14,48,27)",
    "(41,43,48,46)(42,45,47,44)(14,22,30,38)(15,23,31,39)(16,24,32,40)",
];

pub const FACETS: usize = 48;
pub const CUBE_GROUP_ORDER: &str = "43252003274489856000";

pub fn face_turns() -> Vec<Permutation> {
    FACE_TURNS
        .iter()
        .map(|s| Permutation::parse_cycles(s, FACETS).expect("face turn table is well formed"))
        .collect()
}

/// Evaluates a word given as `(turn index 1..=6, exponent)` pairs, left to right.
pub fn turn_word(word: &[(usize, i64)]) -> Permutation {
    let turns = face_turns();
    word.iter().fold(Permutation::identity(FACETS), |acc, &(t, e)| acc.compose(&turns[t - 1].power(e)))
}

/// α = T2² T5 T4 T6⁻¹ T2⁻¹.
pub fn alpha() -> Permutation {
    turn_word(&[(2, 2), (5, 1), (4, 1), (6, -1), (2, -1)])
}

/// β = T1 T2 T4 T1 T4⁻¹ T1⁻¹ T2⁻¹.
pub fn beta() -> Permutation {
    turn_word(&[(1, 1), (2, 1), (4, 1), (1, 1), (4, -1), (1, -1), (2, -1)])
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |acc, k| acc * k)
}

/// `|C3 ≀ S8| · |C2 ≀ S12|`.
pub fn full_wreath_order() -> BigUint {
    BigUint::from(3u32).pow(8) * factorial(8) * BigUint::from(2u32).pow(12) * factorial(12)
}

/// Order of the kernel of Ψ: the full product divided by `|C3 × C2 × {±1}| = 12`.
pub fn wreath_group_order() -> BigUint {
    full_wreath_order() / 12u32
}

/// A position `(x, ρ, y, σ)` of the wreath model. `x[i]` is the twist
/// (mod 3) carried by corner slot `i`, `y[j]` the flip (mod 2) of edge slot `j`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CubeStateWreath {
    pub x: [u8; 8],
    pub rho: Permutation,
    pub y: [u8; 12],
    pub sigma: Permutation,
}

/// Cycle types of the induced actions on the 24 corner facets and the 24 edge facets.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FacetPatternPair {
    pub corner: CycleType,
    pub edge: CycleType,
}

/// Value of Ψ: `(Σx mod 3, Σy mod 2, sign ρ · sign σ)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PsiValue {
    pub twist: u8,
    pub flip: u8,
    pub sign: i8,
}

impl CubeStateWreath {
    pub fn identity() -> Self {
        Self { x: [0; 8], rho: Permutation::identity(8), y: [0; 12], sigma: Permutation::identity(12) }
    }

    pub fn new(x: [u8; 8], rho: Permutation, y: [u8; 12], sigma: Permutation) -> Result<Self> {
        if rho.degree() != 8 || sigma.degree() != 12 {
            return Err(Error::Precondition("rho must act on 8 points and sigma on 12".into()));
        }
        if x.iter().any(|&v| v > 2) || y.iter().any(|&v| v > 1) {
            return Err(Error::Precondition("twists must be mod 3 and flips mod 2".into()));
        }
        Ok(Self { x, rho, y, sigma })
    }

    pub fn psi(&self) -> PsiValue {
        PsiValue {
            twist: (self.x.iter().map(|&v| v as u32).sum::<u32>() % 3) as u8,
            flip: (self.y.iter().map(|&v| v as u32).sum::<u32>() % 2) as u8,
            sign: self.rho.sign() * self.sigma.sign(),
        }
    }

    pub fn is_realistic(&self) -> bool {
        self.rho.sign() == self.sigma.sign()
            && self.x.iter().map(|&v| v as u32).sum::<u32>() % 3 == 0
            && self.y.iter().map(|&v| v as u32).sum::<u32>() % 2 == 0
    }

    /// Wreath-product law `(x, ρ)(x', ρ') = (x + ρ·x', ρρ')` with
    /// `(ρ·x')(i) = x'(i·ρ)`, on both factors.
    pub fn compose(&self, other: &Self) -> Self {
        let mut x = [0u8; 8];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = (self.x[i] + other.x[self.rho.image(i)]) % 3;
        }
        let mut y = [0u8; 12];
        for (j, yj) in y.iter_mut().enumerate() {
            *yj = (self.y[j] + other.y[self.sigma.image(j)]) % 2;
        }
        Self { x, rho: self.rho.compose(&other.rho), y, sigma: self.sigma.compose(&other.sigma) }
    }

    pub fn inverse(&self) -> Self {
        let rho_inv = self.rho.inverse();
        let sigma_inv = self.sigma.inverse();
        let mut x = [0u8; 8];
        for (i, xi) in x.iter_mut().enumerate() {
            *xi = (3 - self.x[rho_inv.image(i)]) % 3;
        }
        let mut y = [0u8; 12];
        for (j, yj) in y.iter_mut().enumerate() {
            *yj = self.y[sigma_inv.image(j)];
        }
        Self { x, rho: rho_inv, y, sigma: sigma_inv }
    }

    /// Action on the 24 corner facets, facet `(i, k)` numbered `3i + k`:
    /// `(i, k) ↦ (i·ρ, k + x_i)`.
    pub fn corner_facet_permutation(&self) -> Permutation {
        let images = (0..24)
            .map(|p| {
                let (i, k) = (p / 3, p % 3);
                3 * self.rho.image(i) + (k + self.x[i] as usize) % 3
            })
            .collect();
        Permutation::from_images(images).unwrap()
    }

    /// Action on the 24 edge facets, facet `(j, k)` numbered `2j + k`.
    pub fn edge_facet_permutation(&self) -> Permutation {
        let images = (0..24)
            .map(|p| {
                let (j, k) = (p / 2, p % 2);
                2 * self.sigma.image(j) + (k + self.y[j] as usize) % 2
            })
            .collect();
        Permutation::from_images(images).unwrap()
    }

    /// Facet cycle types from the cycle data of ρ and σ: a ρ-cycle of length
    /// `d` with nonzero twist sum gives one `3d`-cycle, otherwise three
    /// `d`-cycles; edges likewise with factor 2.
    pub fn facet_pattern(&self) -> FacetPatternPair {
        FacetPatternPair {
            corner: lifted_cycle_type(&self.rho, &self.x, 3),
            edge: lifted_cycle_type(&self.sigma, &self.y, 2),
        }
    }
}

fn lifted_cycle_type(perm: &Permutation, marks: &[u8], modulus: usize) -> CycleType {
    let mut parts = Vec::new();
    for cycle in perm.cycles() {
        let d = cycle.len();
        let total: usize = cycle.iter().map(|&i| marks[i] as usize).sum();
        if total % modulus != 0 {
            parts.push(modulus * d);
        } else {
            parts.extend(std::iter::repeat(d).take(modulus));
        }
    }
    CycleType::new(parts)
}

fn random_perm<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    images.shuffle(rng);
    Permutation::from_images(images).unwrap()
}

/// Uniform element of the full product `(C3 ≀ S8) × (C2 ≀ S12)`.
pub fn random_state<R: Rng + ?Sized>(rng: &mut R) -> CubeStateWreath {
    let mut x = [0u8; 8];
    x.iter_mut().for_each(|v| *v = rng.gen_range(0..3));
    let mut y = [0u8; 12];
    y.iter_mut().for_each(|v| *v = rng.gen_range(0..2));
    CubeStateWreath { x, rho: random_perm(8, rng), y, sigma: random_perm(12, rng) }
}

/// Uniform element of the kernel of Ψ, i.e. of the Rubik's Cube group.
pub fn random_realistic<R: Rng + ?Sized>(rng: &mut R) -> CubeStateWreath {
    let mut x = [0u8; 8];
    for v in x.iter_mut().take(7) {
        *v = rng.gen_range(0..3);
    }
    x[7] = ((3 - x[..7].iter().map(|&v| v as u32).sum::<u32>() % 3) % 3) as u8;
    let mut y = [0u8; 12];
    for v in y.iter_mut().take(11) {
        *v = rng.gen_range(0..2);
    }
    y[11] = (y[..11].iter().map(|&v| v as u32).sum::<u32>() % 2) as u8;
    let rho = random_perm(8, rng);
    let sigma = loop {
        let s = random_perm(12, rng);
        if s.sign() == rho.sign() {
            break s;
        }
    };
    CubeStateWreath { x, rho, y, sigma }
}

fn digits(v: &[u8]) -> String {
    v.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for CubeStateWreath {
    /// `x=[..] rho=(cycles) y=[..] sigma=(cycles)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x=[{}] rho={} y=[{}] sigma={}", digits(&self.x), self.rho, digits(&self.y), self.sigma)
    }
}

impl std::str::FromStr for CubeStateWreath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let err = |detail: String| Error::Parse { what: "cube state", detail };
        let field = |key: &str| -> Result<&str> {
            let start = s.find(&format!("{key}=")).ok_or_else(|| err(format!("missing {key}=")))? + key.len() + 1;
            let rest = &s[start..];
            let end = ["x=", "rho=", "y=", "sigma="]
                .iter()
                .filter_map(|k| rest.find(&format!(" {k}")))
                .min()
                .unwrap_or(rest.len());
            Ok(rest[..end].trim())
        };
        fn vector<const N: usize>(text: &str, modulus: u8) -> Option<[u8; N]> {
            let inner = text.strip_prefix('[')?.strip_suffix(']')?;
            let vals: Vec<u8> = if inner.contains(',') {
                inner.split(',').map(|t| t.trim().parse().ok()).collect::<Option<_>>()?
            } else {
                inner.chars().filter(|c| !c.is_whitespace()).map(|c| c.to_digit(10).map(|d| d as u8)).collect::<Option<_>>()?
            };
            (vals.len() == N && vals.iter().all(|&v| v < modulus)).then(|| vals.try_into().unwrap())
        }
        let x = vector::<8>(field("x")?, 3).ok_or_else(|| err("x must hold 8 residues mod 3".into()))?;
        let y = vector::<12>(field("y")?, 2).ok_or_else(|| err("y must hold 12 residues mod 2".into()))?;
        let rho_text = field("rho")?;
        let sigma_text = field("sigma")?;
        let rho = Permutation::parse_cycles(if rho_text == "()" { "" } else { rho_text }, 8)?;
        let sigma = Permutation::parse_cycles(if sigma_text == "()" { "" } else { sigma_text }, 12)?;
        CubeStateWreath::new(x, rho, y, sigma)
    }
}
