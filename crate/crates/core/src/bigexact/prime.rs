use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// First thirteen primes: Miller–Rabin with these bases is exact below 3.3·10^24.
const WITNESSES: [u32; 13] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41];
const RANDOM_ROUNDS: usize = 64;

/// Strong probable-prime test. Deterministic below 3.3·10^24; above, 64
/// seeded random Miller–Rabin rounds.
pub fn probable_prime(n: &BigInt) -> bool {
    let Some(n) = n.to_biguint() else { return false };
    if n < BigUint::from(2u32) {
        return false;
    }
    for &p in &WITNESSES {
        let p = BigUint::from(p);
        if n == p {
            return true;
        }
        if (&n % &p).is_zero() {
            return false;
        }
    }
    let n_minus_1 = &n - 1u32;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;

    let strong_witness = |a: &BigUint| -> bool {
        let mut x = a.modpow(&d, &n);
        if x.is_one() || x == n_minus_1 {
            return false;
        }
        for _ in 1..s {
            x = &x * &x % &n;
            if x == n_minus_1 {
                return false;
            }
        }
        true
    };

    let deterministic_bound: BigUint = "3317044064679887385961981".parse().unwrap();
    if n < deterministic_bound {
        return !WITNESSES.iter().any(|&a| strong_witness(&BigUint::from(a)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(n.to_u64_digits().first().copied().unwrap_or(0));
    let bytes = (n.bits() as usize).div_ceil(8) + 8;
    let range = &n - 3u32;
    (0..RANDOM_ROUNDS).all(|_| {
        let mut buf = vec![0u8; bytes];
        rng.fill_bytes(&mut buf);
        let a = BigUint::from_bytes_le(&buf) % &range + 2u32;
        !strong_witness(&a)
    })
}

/// Primes up to and including `bound`, by a plain sieve.
pub fn primes_up_to(bound: u64) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    let n = bound as usize;
    let mut composite = vec![false; n + 1];
    let mut out = Vec::new();
    for i in 2..=n {
        if composite[i] {
            continue;
        }
        out.push(i as u64);
        let mut j = i * i;
        while j <= n {
            composite[j] = true;
            j += i;
        }
    }
    out
}
