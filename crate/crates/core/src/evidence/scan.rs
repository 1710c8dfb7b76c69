use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::bigexact::{primes_up_to, Rational};
use crate::error::{Error, Result};
use crate::fpfactor::{degree_pattern, DegreePattern, UnusableReason};
use crate::polyring::Poly;

/// Outcome at one prime: patterns for f (and g when scanning a pair), or why
/// the prime was skipped.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanResult {
    pub prime: u64,
    pub pattern_f: Option<DegreePattern>,
    pub pattern_g: Option<DegreePattern>,
    pub skipped: Option<String>,
}

impl ScanResult {
    pub fn usable(&self) -> bool {
        self.skipped.is_none()
    }
}

impl fmt::Display for ScanResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.skipped, &self.pattern_f, &self.pattern_g) {
            (Some(reason), _, _) => write!(f, "{}: skipped ({reason})", self.prime),
            (None, Some(pf), Some(pg)) => write!(f, "{}: {pf} | {pg}", self.prime),
            (None, Some(pf), None) => write!(f, "{}: {pf}", self.prime),
            _ => write!(f, "{}: ", self.prime),
        }
    }
}

fn check_squarefree(f: &Poly<Rational>) -> Result<()> {
    match f.degree() {
        None => Err(Error::Precondition("cannot scan the zero polynomial".into())),
        Some(0) => Ok(()),
        Some(_) => {
            if f.gcd(&f.derivative()).is_constant() {
                Ok(())
            } else {
                Err(Error::NotSquarefree)
            }
        }
    }
}

/// Runs `work` over the primes up to `p_max` on `jobs` threads (0 = all
/// cores), returning results in prime order.
pub(crate) fn over_primes<T: Send>(p_max: u64, jobs: usize, work: impl Fn(u64) -> T + Sync + Send) -> Result<Vec<T>> {
    let primes = primes_up_to(p_max);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    Ok(pool.install(|| primes.par_iter().map(|&p| work(p)).collect()))
}

fn describe(r: UnusableReason, side: &str) -> String {
    if side.is_empty() {
        r.to_string()
    } else {
        format!("{side}: {r}")
    }
}

/// Degree patterns of `f` at every prime up to `p_max`.
pub fn dedekind_scan(f: &Poly<Rational>, p_max: u64, jobs: usize) -> Result<Vec<ScanResult>> {
    check_squarefree(f)?;
    over_primes(p_max, jobs, |p| match degree_pattern(f, p) {
        Ok(pat) => ScanResult { prime: p, pattern_f: Some(pat), pattern_g: None, skipped: None },
        Err(r) => ScanResult { prime: p, pattern_f: None, pattern_g: None, skipped: Some(describe(r, "")) },
    })
}

/// Scans `(f, g)` together; a prime counts only when both reductions are usable.
pub fn dedekind_scan_pair(f: &Poly<Rational>, g: &Poly<Rational>, p_max: u64, jobs: usize) -> Result<Vec<ScanResult>> {
    check_squarefree(f)?;
    check_squarefree(g)?;
    if !f.gcd(g).is_constant() {
        return Err(Error::Precondition("f and g share a factor".into()));
    }
    over_primes(p_max, jobs, |p| {
        let pf = degree_pattern(f, p);
        let pg = degree_pattern(g, p);
        let skipped = match (&pf, &pg) {
            (Err(r), _) => Some(describe(*r, "f")),
            (_, Err(r)) => Some(describe(*r, "g")),
            _ => None,
        };
        if skipped.is_some() {
            ScanResult { prime: p, pattern_f: None, pattern_g: None, skipped }
        } else {
            ScanResult { prime: p, pattern_f: pf.ok(), pattern_g: pg.ok(), skipped: None }
        }
    })
}

/// Intersection over patterns of the sets of subset sums. `{0, n}` proves
/// irreducibility over Q.
pub fn subset_sum_irreducibility<'a>(patterns: impl IntoIterator<Item = &'a DegreePattern>, n: usize) -> BTreeSet<usize> {
    let mut alive = vec![true; n + 1];
    for pat in patterns {
        let mut reach = vec![false; n + 1];
        reach[0] = true;
        for &d in &pat.parts {
            for s in (d..=n).rev() {
                if reach[s - d] {
                    reach[s] = true;
                }
            }
        }
        for (a, r) in alive.iter_mut().zip(reach) {
            *a &= r;
        }
    }
    alive.iter().enumerate().filter(|(_, &a)| a).map(|(s, _)| s).collect()
}
