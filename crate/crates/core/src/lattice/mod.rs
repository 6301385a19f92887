//! Finite posets, bounded lattices and orthocomplemented lattices.

mod bounded;
pub mod canonical;
mod element;
mod error;
mod ortho;
mod poset;

pub use bounded::FiniteLattice;
pub use canonical::CanonicalForm;
pub use element::ElementId;
pub use error::{Bound, LatticeError, MissingBound, OrthoAxiom};
pub use ortho::OrthoLattice;
pub use poset::FinitePoset;

/// Validates a cover list and an orthocomplement pairing in one step.
///
/// `pairs` lists each complementary pair once; every element must occur in
/// exactly one pair.
pub fn ortholattice_from_covers(
    n: usize,
    covers: &[(ElementId, ElementId)],
    pairs: &[(ElementId, ElementId)],
) -> Result<OrthoLattice, LatticeError> {
    let poset = FinitePoset::from_covers(n, covers)?;
    let lattice = FiniteLattice::from_poset(poset)?;
    let ortho = ortho_from_pairs(n, pairs)?;
    OrthoLattice::new(lattice, ortho)
}

/// Expands a complementary pair list into a map. A pair `(x, x)` yields a
/// fixed point, which `OrthoLattice::new` rejects.
pub fn ortho_from_pairs(n: usize, pairs: &[(ElementId, ElementId)]) -> Result<Vec<ElementId>, LatticeError> {
    let mut ortho: Vec<Option<ElementId>> = vec![None; n];
    for &(x, y) in pairs {
        for id in [x, y] {
            if id.index() >= n {
                return Err(LatticeError::Index { index: id.index(), n });
            }
        }
        if ortho[x.index()].is_some() || (x != y && ortho[y.index()].is_some()) {
            let twice = if ortho[x.index()].is_some() { x } else { y };
            return Err(LatticeError::NotAPermutation(twice.index()));
        }
        ortho[x.index()] = Some(y);
        ortho[y.index()] = Some(x);
    }
    ortho
        .into_iter()
        .enumerate()
        .map(|(i, y)| y.ok_or(LatticeError::MissingOrtho(i)))
        .collect()
}
