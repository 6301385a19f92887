use std::collections::BTreeSet;

use super::{GenError, MAX_GENERATED_ELEMENTS};
use crate::lattice::{ElementId, FiniteLattice, FinitePoset, OrthoLattice};

type Vector = (u64, u64);

/// Subspaces of `GF(p)²` ordered by inclusion, with orthocomplement taken
/// under the standard form `x·x' + y·y'`.
///
/// The form must be anisotropic (no nonzero self-orthogonal vector) for the
/// complement to satisfy `S ∧ S⊥ = 0`; over `GF(p)²` that is exactly
/// `p ≡ 3 (mod 4)`. The result has `p + 1` atoms in `(p + 1) / 2`
/// complementary pairs.
pub fn gen_subspace_mo(p: u64) -> Result<OrthoLattice, GenError> {
    if !is_odd_prime(p) {
        return Err(GenError::NotAnOddPrime(p));
    }
    if (p + 3) as usize > MAX_GENERATED_ELEMENTS {
        return Err(GenError::SizeCap {
            family: "subspace",
            value: p,
            range: "odd primes up to 509",
        });
    }
    if let Some(vector) = isotropic_vector(p) {
        return Err(GenError::IsotropicForm { vector });
    }

    let dot = |u: Vector, v: Vector| (u.0 * v.0 + u.1 * v.1) % p;
    let vectors: Vec<Vector> = (0..p).flat_map(|x| (0..p).map(move |y| (x, y))).collect();

    // Every subspace as its full vector set plus a spanning list: {0}, the
    // p + 1 lines, the plane.
    let mut subspaces: Vec<(BTreeSet<Vector>, Vec<Vector>)> = vec![(BTreeSet::from([(0, 0)]), Vec::new())];
    let mut names = vec!["0".to_string()];
    for rep in line_representatives(p) {
        subspaces.push(((0..p).map(|t| (rep.0 * t % p, rep.1 * t % p)).collect(), vec![rep]));
        names.push(format!("span({},{})", rep.0, rep.1));
    }
    subspaces.push((vectors.iter().copied().collect(), vec![(1, 0), (0, 1)]));
    names.push("1".to_string());

    let n = subspaces.len();
    let ortho = subspaces
        .iter()
        .map(|(_, span)| {
            let perp: BTreeSet<Vector> = vectors
                .iter()
                .copied()
                .filter(|&w| span.iter().all(|&v| dot(v, w) == 0))
                .collect();
            let idx = subspaces
                .iter()
                .position(|(t, _)| *t == perp)
                .expect("orthogonal complement of a subspace is a subspace");
            ElementId::new(idx)
        })
        .collect();
    let contained = |x: usize, y: usize| subspaces[x].1.iter().all(|v| subspaces[y].0.contains(v));
    let poset = FinitePoset::from_relation(n, contained)?.with_names(names)?;
    let lattice = FiniteLattice::from_poset(poset)?;
    Ok(OrthoLattice::new(lattice, ortho)?)
}

fn is_odd_prime(p: u64) -> bool {
    p >= 3
        && p % 2 == 1
        && (3..)
            .step_by(2)
            .take_while(|d| d * d <= p)
            .all(|d| !p.is_multiple_of(d))
}

/// Lexicographically first nonzero `(x, y)` with `x² + y² ≡ 0`.
fn isotropic_vector(p: u64) -> Option<Vector> {
    (0..p)
        .flat_map(|x| (0..p).map(move |y| (x, y)))
        .filter(|&v| v != (0, 0))
        .find(|&(x, y)| (x * x + y * y) % p == 0)
}

/// One generator per line, normalized so the first nonzero coordinate is 1:
/// `(0,1)`, then `(1,y)` for every `y`.
fn line_representatives(p: u64) -> Vec<Vector> {
    std::iter::once((0, 1)).chain((0..p).map(|y| (1, y))).collect()
}
