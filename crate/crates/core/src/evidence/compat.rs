//! Which factor-degree patterns can come from an element of the cube group.
//!
//! An element `(x, ρ)` of `C3 ≀ S8` acts on the 24 corner facets. A cycle of
//! ρ of length d whose twists sum to zero becomes three d-cycles, otherwise
//! one 3d-cycle. Edges behave the same way with 2 in place of 3.

use std::fmt;

use serde::Serialize;

use crate::fpfactor::DegreePattern;

/// One cycle of the base permutation and whether its orientation sum is nonzero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct MarkedCycle {
    pub length: usize,
    pub marked: bool,
}

/// Base partition with marks; `fold` is 3 for corners and 2 for edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct BaseDecomposition {
    pub fold: usize,
    pub cycles: Vec<MarkedCycle>,
}

impl BaseDecomposition {
    pub fn marked_count(&self) -> usize {
        self.cycles.iter().filter(|c| c.marked).count()
    }

    pub fn base_degree(&self) -> usize {
        self.cycles.iter().map(|c| c.length).sum()
    }

    /// `(-1)^(n - #cycles)`.
    pub fn base_sign(&self) -> i8 {
        if (self.base_degree() - self.cycles.len()) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// The facet pattern this decomposition produces.
    pub fn expand(&self) -> DegreePattern {
        let mut parts = Vec::new();
        for c in &self.cycles {
            if c.marked {
                parts.push(c.length * self.fold);
            } else {
                parts.extend(std::iter::repeat(c.length).take(self.fold));
            }
        }
        DegreePattern::new(parts)
    }

    pub fn reproduces(&self, lambda: &DegreePattern) -> bool {
        self.expand() == DegreePattern::new(lambda.parts.clone())
    }
}

impl fmt::Display for BaseDecomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> =
            self.cycles.iter().map(|c| if c.marked { format!("{}*", c.length) } else { c.length.to_string() }).collect();
        f.write_str(&words.join(" "))
    }
}

/// Every way of reading λ as the `fold`-fold expansion of a marked partition.
pub fn decompositions(lambda: &DegreePattern, fold: usize) -> Vec<BaseDecomposition> {
    let max = lambda.parts.iter().copied().max().unwrap_or(0);
    let mut count = vec![0usize; max + 1];
    for &m in &lambda.parts {
        count[m] += 1;
    }
    let mut out = Vec::new();
    let mut marked = vec![0usize; max + 1];
    search(1, fold, &count, &mut marked, &mut out);
    out
}

/// Chooses the number of marked cycles of length `d`, then fixes the
/// unmarked ones at length `d` once every contribution to value `d` is known.
fn search(d: usize, fold: usize, count: &[usize], marked: &mut Vec<usize>, out: &mut Vec<BaseDecomposition>) {
    let max = count.len() - 1;
    if d > max {
        let mut cycles = Vec::new();
        for m in 1..=max {
            let from_marked = if m % fold == 0 { marked[m / fold] } else { 0 };
            let rest = count[m] - from_marked;
            if rest % fold != 0 {
                return;
            }
            cycles.extend(std::iter::repeat(MarkedCycle { length: m, marked: false }).take(rest / fold));
            cycles.extend(std::iter::repeat(MarkedCycle { length: m, marked: true }).take(marked[m]));
        }
        cycles.sort_by(|a, b| b.length.cmp(&a.length).then(a.marked.cmp(&b.marked)));
        out.push(BaseDecomposition { fold, cycles });
        return;
    }
    let cap = if d * fold <= max { count[d * fold] } else { 0 };
    for k in 0..=cap {
        marked[d] = k;
        // Value d needs its marked contribution fixed before we leave it.
        let from_marked = if d % fold == 0 { marked[d / fold] } else { 0 };
        if from_marked <= count[d] {
            search(d + 1, fold, count, marked, out);
        }
    }
    marked[d] = 0;
}

/// Which corner group the orientation condition is taken from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum CornerModel {
    /// Twists sum to zero: the cube group.
    Kernel,
    /// Any twist vector: the full wreath product, used by the two-parameter family.
    Full,
}

fn corner_allowed(d: &BaseDecomposition, model: CornerModel) -> bool {
    d.base_degree() == 8 && (model == CornerModel::Full || d.marked_count() != 1)
}

fn edge_allowed(d: &BaseDecomposition) -> bool {
    d.base_degree() == 12 && d.marked_count() % 2 == 0
}

pub fn corner_witnesses(lambda: &DegreePattern, model: CornerModel) -> Vec<BaseDecomposition> {
    if lambda.total() != 24 {
        return Vec::new();
    }
    decompositions(lambda, 3).into_iter().filter(|d| corner_allowed(d, model)).collect()
}

pub fn edge_witnesses(lambda: &DegreePattern) -> Vec<BaseDecomposition> {
    if lambda.total() != 24 {
        return Vec::new();
    }
    decompositions(lambda, 2).into_iter().filter(edge_allowed).collect()
}

pub fn corner_compatible(lambda: &DegreePattern) -> Option<BaseDecomposition> {
    corner_witnesses(lambda, CornerModel::Kernel).into_iter().next()
}

pub fn edge_compatible(lambda: &DegreePattern) -> Option<BaseDecomposition> {
    edge_witnesses(lambda).into_iter().next()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CompatibilityVerdict {
    pub corner_ok: bool,
    pub edge_ok: bool,
    pub joint_ok: bool,
    pub witness: Option<(BaseDecomposition, BaseDecomposition)>,
}

pub fn joint_compatible(lf: &DegreePattern, lg: &DegreePattern) -> CompatibilityVerdict {
    joint_compatible_in(lf, lg, CornerModel::Kernel)
}

/// Corner and edge witnesses whose base permutations have equal sign.
pub fn joint_compatible_in(lf: &DegreePattern, lg: &DegreePattern, model: CornerModel) -> CompatibilityVerdict {
    let corners = corner_witnesses(lf, model);
    let edges = edge_witnesses(lg);
    let witness = corners
        .iter()
        .find_map(|c| edges.iter().find(|e| e.base_sign() == c.base_sign()).map(|e| (c.clone(), e.clone())));
    CompatibilityVerdict {
        corner_ok: !corners.is_empty(),
        edge_ok: !edges.is_empty(),
        joint_ok: witness.is_some(),
        witness,
    }
}
