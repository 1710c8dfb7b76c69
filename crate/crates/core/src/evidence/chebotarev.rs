use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::compat::joint_compatible;
use super::scan::{dedekind_scan_pair, ScanResult};
use crate::bigexact::Rational;
use crate::cube::random_realistic;
use crate::error::{Error, Result};
use crate::fpfactor::DegreePattern;
use crate::permgroup::CycleType;
use crate::polyring::Poly;

pub type Histogram = BTreeMap<String, u64>;

/// Canonical key `corner | edge`, each side in exponent notation.
pub fn pattern_key(f: &DegreePattern, g: &DegreePattern) -> String {
    format!("{} | {}", CycleType::new(f.parts.clone()), CycleType::new(g.parts.clone()))
}

/// `½ Σ |p(k) - q(k)|` over the union of keys.
pub fn tv_distance(a: &Histogram, b: &Histogram) -> f64 {
    let na: u64 = a.values().sum();
    let nb: u64 = b.values().sum();
    if na == 0 || nb == 0 {
        return if na == nb { 0.0 } else { 1.0 };
    }
    let mut keys: Vec<&String> = a.keys().chain(b.keys()).collect();
    keys.sort();
    keys.dedup();
    let total: f64 = keys
        .into_iter()
        .map(|k| {
            let pa = *a.get(k).unwrap_or(&0) as f64 / na as f64;
            let pb = *b.get(k).unwrap_or(&0) as f64 / nb as f64;
            (pa - pb).abs()
        })
        .sum();
    total / 2.0
}

const CHUNK: usize = 1024;

/// Facet-pattern histogram of `samples` uniform cube-group elements. Chunk
/// `i` draws from ChaCha stream `i`, so the result does not depend on `jobs`.
pub fn group_histogram(samples: usize, seed: u64, jobs: usize) -> Result<Histogram> {
    let chunks = samples.div_ceil(CHUNK);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::Precondition(format!("thread pool: {e}")))?;
    let parts: Vec<Histogram> = pool.install(|| {
        (0..chunks)
            .into_par_iter()
            .map(|i| {
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                rng.set_stream(i as u64);
                let n = CHUNK.min(samples - i * CHUNK);
                let mut h = Histogram::new();
                for _ in 0..n {
                    let pat = random_realistic(&mut rng).facet_pattern();
                    *h.entry(format!("{} | {}", pat.corner, pat.edge)).or_insert(0) += 1;
                }
                h
            })
            .collect()
    });
    let mut out = Histogram::new();
    for h in parts {
        for (k, v) in h {
            *out.entry(k).or_insert(0) += v;
        }
    }
    Ok(out)
}

pub fn frobenius_histogram(scan: &[ScanResult]) -> Histogram {
    let mut h = Histogram::new();
    for r in scan {
        if let (Some(f), Some(g)) = (&r.pattern_f, &r.pattern_g) {
            *h.entry(pattern_key(f, g)).or_insert(0) += 1;
        }
    }
    h
}

#[derive(Clone, Debug, Serialize)]
pub struct SkippedPrime {
    pub p: u64,
    pub reason: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct CompatibilityFailure {
    pub p: u64,
    pub pattern_f: DegreePattern,
    pub pattern_g: DegreePattern,
}

#[derive(Clone, Debug, Serialize)]
pub struct ChebotarevReport {
    pub primes_used: usize,
    pub skipped: Vec<SkippedPrime>,
    pub histogram_frobenius: Histogram,
    pub histogram_group: Histogram,
    pub tv_distance: f64,
    /// TV between `primes_used` fresh group samples and the group histogram:
    /// the distance expected from sample size alone.
    pub tv_sampling_baseline: f64,
    pub compatibility_failures: Vec<CompatibilityFailure>,
}

pub fn skipped_primes(scan: &[ScanResult]) -> Vec<SkippedPrime> {
    scan.iter().filter_map(|r| r.skipped.clone().map(|reason| SkippedPrime { p: r.prime, reason })).collect()
}

pub fn compatibility_failures(scan: &[ScanResult]) -> Vec<CompatibilityFailure> {
    scan.iter()
        .filter_map(|r| {
            let (f, g) = (r.pattern_f.as_ref()?, r.pattern_g.as_ref()?);
            (!joint_compatible(f, g).joint_ok).then(|| CompatibilityFailure {
                p: r.prime,
                pattern_f: f.clone(),
                pattern_g: g.clone(),
            })
        })
        .collect()
}

/// Frobenius pattern pairs of `(f, g)` at primes up to `p_max` against the
/// facet patterns of `samples` uniform elements of the cube group.
pub fn chebotarev_compare(
    f: &Poly<Rational>,
    g: &Poly<Rational>,
    p_max: u64,
    samples: usize,
    seed: u64,
    jobs: usize,
) -> Result<ChebotarevReport> {
    let scan = dedekind_scan_pair(f, g, p_max, jobs)?;
    let histogram_frobenius = frobenius_histogram(&scan);
    let histogram_group = group_histogram(samples, seed, jobs)?;
    let primes_used = scan.iter().filter(|r| r.usable()).count();
    let baseline = group_histogram(primes_used, seed.wrapping_add(1), jobs)?;
    Ok(ChebotarevReport {
        primes_used,
        tv_sampling_baseline: tv_distance(&baseline, &histogram_group),
        skipped: skipped_primes(&scan),
        tv_distance: tv_distance(&histogram_frobenius, &histogram_group),
        compatibility_failures: compatibility_failures(&scan),
        histogram_frobenius,
        histogram_group,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tv_basics() {
        let mut a = Histogram::new();
        a.insert("x".into(), 3);
        a.insert("y".into(), 1);
        assert_eq!(tv_distance(&a, &a), 0.0);
        let mut b = Histogram::new();
        b.insert("z".into(), 5);
        assert_eq!(tv_distance(&a, &b), 1.0);
        let mut c = Histogram::new();
        c.insert("x".into(), 1);
        c.insert("y".into(), 1);
        assert!((tv_distance(&a, &c) - 0.25).abs() < 1e-12);
    }

    #[test]
    fn group_histogram_is_job_independent() {
        let a = group_histogram(3000, 7, 1).unwrap();
        let b = group_histogram(3000, 7, 3).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.values().sum::<u64>(), 3000);
    }
}
