//! Permutations and base-and-strong-generating-set machinery.

mod bsgs;
mod perm;

pub use bsgs::Bsgs;
pub use perm::{CycleType, Permutation};

pub fn parse_cycles(text: &str, n: usize) -> crate::Result<Permutation> {
    Permutation::parse_cycles(text, n)
}

pub fn bsgs_build(generators: &[Permutation]) -> Bsgs {
    Bsgs::build(generators)
}
