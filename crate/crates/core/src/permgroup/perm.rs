use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{1, …, n}`, stored 0-based: `images[i]` is the image
/// of point `i + 1`, minus one.
///
/// Products compose left to right: `p.compose(&q)` applies `p` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

/// Multiset of cycle lengths, fixed points included, sorted descending.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CycleType {
    pub parts: Vec<usize>,
}

impl CycleType {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self { parts }
    }

    pub fn degree(&self) -> usize {
        self.parts.iter().sum()
    }
}

impl fmt::Display for CycleType {
    /// Exponential notation, e.g. `4^5 1^28`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let mut i = 0;
        while i < self.parts.len() {
            let d = self.parts[i];
            let run = self.parts[i..].iter().take_while(|&&x| x == d).count();
            if !first {
                f.write_str(" ")?;
            }
            write!(f, "{d}^{run}")?;
            first = false;
            i += run;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Self { images: (0..n).collect() }
    }

    /// Builds from 0-based images, checking bijectivity.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(Error::Parse {
                    what: "permutation",
                    detail: format!("images are not a bijection of 0..{n}"),
                });
            }
        }
        Ok(Self { images })
    }

    /// Parses cycle notation such as `(1,3,8,6)(2,5,7,4)`: points are 1-based,
    /// `(a,b,c)` maps a↦b↦c↦a, and whitespace is ignored.
    pub fn parse_cycles(text: &str, n: usize) -> Result<Self> {
        let err = |detail: String| Error::Parse { what: "cycle notation", detail };
        let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .ok_or_else(|| err(format!("expected '(' at {rest:?}")))?;
            let close = body
                .find(')')
                .ok_or_else(|| err("unbalanced parenthesis".into()))?;
            let points = body[..close]
                .split(',')
                .filter(|s| !s.is_empty())
                .map(|s| {
                    let p: usize = s.parse().map_err(|_| err(format!("bad point {s:?}")))?;
                    if p == 0 || p > n {
                        return Err(err(format!("point {p} outside 1..={n}")));
                    }
                    if std::mem::replace(&mut used[p - 1], true) {
                        return Err(err(format!("point {p} repeated")));
                    }
                    Ok(p - 1)
                })
                .collect::<Result<Vec<_>>>()?;
            for (k, &p) in points.iter().enumerate() {
                images[p] = points[(k + 1) % points.len()];
            }
            rest = &body[close + 1..];
        }
        Ok(Self { images })
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Image of the 0-based point `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `self` followed by `other`.
    pub fn compose(&self, other: &Self) -> Self {
        debug_assert_eq!(self.degree(), other.degree());
        Self { images: self.images.iter().map(|&i| other.images[i]).collect() }
    }

    pub fn try_compose(&self, other: &Self) -> Result<Self> {
        if self.degree() != other.degree() {
            return Err(Error::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(self.compose(other))
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        Self { images: inv }
    }

    pub fn power(&self, k: i64) -> Self {
        let mut base = if k < 0 { self.inverse() } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = Self::identity(self.degree());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.compose(&base);
            }
            base = base.compose(&base);
            e >>= 1;
        }
        acc
    }

    /// Disjoint cycles (0-based), fixed points included, in order of least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start] = true;
            let mut j = self.images[start];
            while j != start {
                seen[j] = true;
                cycle.push(j);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(Vec::len).collect())
    }

    /// `+1` or `-1`.
    pub fn sign(&self) -> i8 {
        let transpositions = self.degree() - self.cycles().len();
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn order(&self) -> u128 {
        self.cycles().iter().fold(1u128, |acc, c| acc.lcm(&(c.len() as u128)))
    }

    pub fn is_odd(&self) -> bool {
        self.sign() < 0
    }

    pub fn first_moved_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, j)| i != *j).map(|(i, _)| i)
    }
}

impl fmt::Display for Permutation {
    /// Cycle notation with 1-based points, `()` for the identity.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut any = false;
        for c in self.cycles().into_iter().filter(|c| c.len() > 1) {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
            any = true;
        }
        if !any {
            f.write_str("()")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation[{}; {}]", self.degree(), self)
    }
}
