//! Relevance of one question with respect to another.
//!
//! `b` is irrelevant with respect to `a` when `b ∧ a⊥ ≠ 0`, i.e. `b` contains
//! a nonzero component of not-`a`. The relation is directional.

use crate::lattice::{ElementId, OrthoLattice};

pub fn is_irrelevant(l: &OrthoLattice, b: ElementId, a: ElementId) -> bool {
    l.meet(b, l.ortho(a)) != l.bottom()
}

pub fn is_relevant(l: &OrthoLattice, b: ElementId, a: ElementId) -> bool {
    !is_irrelevant(l, b, a)
}

/// Some nonzero `c` with `c ≤ b` and `c ≤ a⊥`, found by scanning the lattice
/// in index order. Present exactly when `b` is irrelevant with respect to `a`.
pub fn relevance_witness(l: &OrthoLattice, b: ElementId, a: ElementId) -> Option<ElementId> {
    let not_a = l.ortho(a);
    l.elements()
        .find(|&c| c != l.bottom() && l.leq(c, b) && l.leq(c, not_a))
}

/// All `b` relevant with respect to `a`, in index order.
pub fn relevant_set(l: &OrthoLattice, a: ElementId) -> Vec<ElementId> {
    l.elements().filter(|&b| is_relevant(l, b, a)).collect()
}

/// All `b > a` that are still relevant with respect to `a`. Empty for every
/// `a` exactly when the lattice is orthomodular.
pub fn strictly_greater_relevant(l: &OrthoLattice, a: ElementId) -> Vec<ElementId> {
    l.elements().filter(|&b| l.lt(a, b) && is_relevant(l, b, a)).collect()
}
