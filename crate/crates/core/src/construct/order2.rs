use num_bigint::BigUint;
use rayon::prelude::*;

use crate::permgroup::Permutation;

/// How S8 acts on `(C3)^8` in the semidirect product.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum S8Action {
    /// `ρ·x = x ∘ ρ`.
    Natural,
    /// Odd permutations additionally negate.
    SignTwisted,
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::from(1u32), |a, k| a * k)
}

/// `|(C3 ≀ S8)°| = 3^7 · 8!`.
pub fn c3_kernel_order() -> BigUint {
    BigUint::from(3u32).pow(7) * factorial(8)
}

/// `|(C2 ≀ S12)°| = 2^11 · 12!`.
pub fn c2_kernel_order() -> BigUint {
    BigUint::from(2u32).pow(11) * factorial(12)
}

/// All `ρ ∈ S_n` with `ρ² = 1`, the identity included.
pub fn involutions(n: usize) -> Vec<Permutation> {
    fn extend(images: &mut Vec<Option<usize>>, out: &mut Vec<Permutation>) {
        let Some(i) = images.iter().position(Option::is_none) else {
            out.push(Permutation::from_images(images.iter().map(|x| x.unwrap()).collect()).unwrap());
            return;
        };
        images[i] = Some(i);
        extend(images, out);
        for j in i + 1..images.len() {
            if images[j].is_none() {
                images[i] = Some(j);
                images[j] = Some(i);
                extend(images, out);
                images[j] = None;
            }
        }
        images[i] = None;
    }
    let mut out = Vec::new();
    extend(&mut vec![None; n], &mut out);
    out
}

/// Sum-zero vectors of `(C3)^8`.
fn sum_zero_vectors() -> Vec<[u8; 8]> {
    (0..3u32.pow(8))
        .map(|mut code| {
            let mut x = [0u8; 8];
            for xi in x.iter_mut() {
                *xi = (code % 3) as u8;
                code /= 3;
            }
            x
        })
        .filter(|x| x.iter().map(|&v| v as u32).sum::<u32>() % 3 == 0)
        .collect()
}

/// Number of elements of order exactly 2 in `((C3)^8 ⋊ S8)°`, found by
/// testing every pair `(x, ρ)` with `ρ² = 1` for `x + ρ·x = 0`.
pub fn count_order2_semidirect(action: S8Action) -> u64 {
    let vectors = sum_zero_vectors();
    involutions(8)
        .par_iter()
        .map(|rho| {
            let negate = action == S8Action::SignTwisted && rho.is_odd();
            vectors
                .iter()
                .filter(|x| {
                    let squares_to_zero = (0..8).all(|i| {
                        let moved = x[rho.image(i)];
                        let acted = if negate { (3 - moved) % 3 } else { moved };
                        (x[i] + acted) % 3 == 0
                    });
                    squares_to_zero && !(rho.is_identity() && x.iter().all(|&v| v == 0))
                })
                .count() as u64
        })
        .sum()
}
