use num_bigint::BigUint;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::perm::Permutation;

#[derive(Clone, Debug)]
struct Level {
    point: usize,
    gens: Vec<Permutation>,
    orbit: Vec<usize>,
    /// `transversal[b]` maps the base point to `b`, for `b` in the orbit.
    transversal: Vec<Option<Permutation>>,
}

impl Level {
    fn new(point: usize, n: usize) -> Self {
        let mut level = Self { point, gens: Vec::new(), orbit: Vec::new(), transversal: vec![None; n] };
        level.rebuild(n);
        level
    }

    fn rebuild(&mut self, n: usize) {
        self.transversal = vec![None; n];
        self.transversal[self.point] = Some(Permutation::identity(n));
        self.orbit = vec![self.point];
        let mut k = 0;
        while k < self.orbit.len() {
            let b = self.orbit[k];
            for g in &self.gens {
                let c = g.image(b);
                if self.transversal[c].is_none() {
                    let u = self.transversal[b].as_ref().unwrap().compose(g);
                    self.transversal[c] = Some(u);
                    self.orbit.push(c);
                }
            }
            k += 1;
        }
    }
}

/// Base and strong generating set of a permutation group.
#[derive(Clone, Debug)]
pub struct Bsgs {
    degree: usize,
    levels: Vec<Level>,
}

impl Bsgs {
    /// Deterministic Schreier–Sims. The result is independent of any seed.
    pub fn build(generators: &[Permutation]) -> Self {
        Self::build_inner(generators, None)
    }

    /// Seeds the structure with a randomized Schreier–Sims pass, then runs the
    /// deterministic completion, so the result is always exact.
    pub fn build_seeded(generators: &[Permutation], seed: u64) -> Self {
        Self::build_inner(generators, Some(seed))
    }

    fn build_inner(generators: &[Permutation], seed: Option<u64>) -> Self {
        let degree = generators.first().map_or(0, Permutation::degree);
        assert!(
            generators.iter().all(|g| g.degree() == degree),
            "generators must act on a common point set"
        );
        let mut bsgs = Bsgs { degree, levels: Vec::new() };
        let gens: Vec<Permutation> = generators.iter().filter(|g| !g.is_identity()).cloned().collect();
        if gens.is_empty() {
            return bsgs;
        }
        for g in &gens {
            if bsgs.levels.iter().all(|l| g.image(l.point) == l.point) {
                bsgs.push_level(g.first_moved_point().unwrap());
            }
        }
        bsgs.levels[0].gens = gens.clone();
        bsgs.levels[0].rebuild(degree);
        for i in 1..bsgs.levels.len() {
            let fixing: Vec<Permutation> = gens
                .iter()
                .filter(|g| bsgs.levels[..i].iter().all(|l| g.image(l.point) == l.point))
                .cloned()
                .collect();
            bsgs.levels[i].gens = fixing;
            bsgs.levels[i].rebuild(degree);
        }
        if let Some(seed) = seed {
            bsgs.random_phase(&gens, seed);
        }
        bsgs.complete();
        bsgs
    }

    fn push_level(&mut self, point: usize) {
        self.levels.push(Level::new(point, self.degree));
    }

    /// Adds `h` as a strong generator on levels `from..=to`, creating the
    /// level `to` when it is new.
    fn add_strong(&mut self, h: &Permutation, from: usize, to: usize) {
        if to == self.levels.len() {
            let point = h.first_moved_point().expect("sift residue is not the identity");
            self.push_level(point);
        }
        for l in from..=to {
            self.levels[l].gens.push(h.clone());
            self.levels[l].rebuild(self.degree);
        }
    }

    /// Residue of sifting `g` through levels `start..`, and the level where
    /// sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, g: &Permutation, start: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (j, level) in self.levels.iter().enumerate().skip(start) {
            let b = h.image(level.point);
            match &level.transversal[b] {
                Some(u) => h = h.compose(&u.inverse()),
                None => return (h, j),
            }
        }
        (h, self.levels.len())
    }

    fn random_phase(&mut self, gens: &[Permutation], seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        // Product replacement with an accumulator.
        let mut pool: Vec<Permutation> = gens.iter().cycle().take(gens.len().max(10)).cloned().collect();
        let mut acc = Permutation::identity(self.degree);
        for _ in 0..50 {
            product_replacement_step(&mut pool, &mut acc, &mut rng);
        }
        let mut quiet = 0;
        while quiet < 40 {
            product_replacement_step(&mut pool, &mut acc, &mut rng);
            let (h, j) = self.strip(&acc, 0);
            if j < self.levels.len() || !h.is_identity() {
                self.add_strong(&h, 0, j);
                quiet = 0;
            } else {
                quiet += 1;
            }
        }
    }

    /// Deterministic Schreier–Sims completion: every Schreier generator of
    /// every level must sift through the levels below it.
    fn complete(&mut self) {
        let mut i = self.levels.len() as isize - 1;
        'outer: while i >= 0 {
            let lvl = i as usize;
            let orbit = self.levels[lvl].orbit.clone();
            let gens = self.levels[lvl].gens.clone();
            for &b in &orbit {
                let ub = self.levels[lvl].transversal[b].clone().unwrap();
                for s in &gens {
                    let c = s.image(b);
                    let uc = self.levels[lvl].transversal[c].as_ref().unwrap();
                    let schreier = ub.compose(s).compose(&uc.inverse());
                    if schreier.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&schreier, lvl + 1);
                    if j < self.levels.len() || !h.is_identity() {
                        self.add_strong(&h, lvl + 1, j);
                        i = j as isize;
                        continue 'outer;
                    }
                }
            }
            i -= 1;
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Base points, 0-based.
    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.point).collect()
    }

    pub fn orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    /// All distinct strong generators.
    pub fn strong_generators(&self) -> Vec<Permutation> {
        let mut out: Vec<Permutation> = Vec::new();
        for l in &self.levels {
            for g in &l.gens {
                if !out.contains(g) {
                    out.push(g.clone());
                }
            }
        }
        out
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        if p.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(p, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Uniformly random element: one uniformly chosen coset representative
    /// per level.
    pub fn random_element<R: Rng + ?Sized>(&self, rng: &mut R) -> Permutation {
        let mut acc = Permutation::identity(self.degree);
        for level in self.levels.iter().rev() {
            let b = level.orbit[rng.gen_range(0..level.orbit.len())];
            acc = acc.compose(level.transversal[b].as_ref().unwrap());
        }
        acc
    }

    pub fn random(&self, seed: u64) -> Permutation {
        self.random_element(&mut ChaCha8Rng::seed_from_u64(seed))
    }
}

fn product_replacement_step<R: Rng>(pool: &mut [Permutation], acc: &mut Permutation, rng: &mut R) {
    let n = pool.len();
    let i = rng.gen_range(0..n);
    let mut j = rng.gen_range(0..n - 1);
    if j >= i {
        j += 1;
    }
    let other = if rng.gen_bool(0.5) { pool[j].clone() } else { pool[j].inverse() };
    pool[i] = if rng.gen_bool(0.5) { pool[i].compose(&other) } else { other.compose(&pool[i]) };
    *acc = acc.compose(&pool[i]);
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str, n: usize) -> Permutation {
        Permutation::parse_cycles(s, n).unwrap()
    }

    #[test]
    fn small_groups() {
        assert_eq!(Bsgs::build(&[p("(1,2)", 2)]).order(), BigUint::from(2u32));
        let s4 = Bsgs::build(&[p("(1,2)", 4), p("(1,2,3,4)", 4)]);
        assert_eq!(s4.order(), BigUint::from(24u32));
        let a5 = Bsgs::build(&[p("(1,2,3)", 5), p("(1,2,3,4,5)", 5)]);
        assert_eq!(a5.order(), BigUint::from(60u32));
        assert!(!a5.contains(&p("(1,2)", 5)));
        assert!(a5.contains(&p("(1,2)(3,4)", 5)));
        let trivial = Bsgs::build(&[Permutation::identity(3)]);
        assert_eq!(trivial.order(), BigUint::one());
        assert!(trivial.random(7).is_identity());
    }

    #[test]
    fn seeded_build_agrees() {
        let gens = [p("(1,2,3,4,5,6,7)", 7), p("(1,2)", 7)];
        for seed in 0..5 {
            assert_eq!(Bsgs::build_seeded(&gens, seed).order(), BigUint::from(5040u32));
        }
        // Dihedral group of the heptagon.
        let d7 = [p("(1,2,3,4,5,6,7)", 7), p("(2,7)(3,6)(4,5)", 7)];
        assert_eq!(Bsgs::build_seeded(&d7, 3).order(), BigUint::from(14u32));
        assert_eq!(Bsgs::build(&d7).order(), BigUint::from(14u32));
    }

    #[test]
    fn random_uniformity_on_c2() {
        let g = Bsgs::build(&[p("(1,2)", 2)]);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let draws = 10_000;
        let ident = (0..draws).filter(|_| g.random_element(&mut rng).is_identity()).count();
        let freq = ident as f64 / draws as f64;
        assert!((freq - 0.5).abs() <= 0.02, "frequency {freq}");
    }

    #[test]
    fn random_elements_are_members() {
        let s4 = Bsgs::build(&[p("(1,2)(3,4)", 6), p("(1,2,3)", 6)]);
        assert_eq!(s4.order(), BigUint::from(12u32));
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let mut seen = std::collections::HashSet::new();
        for _ in 0..2000 {
            let x = s4.random_element(&mut rng);
            assert!(s4.contains(&x));
            seen.insert(x);
        }
        assert_eq!(seen.len(), 12);
    }
}
