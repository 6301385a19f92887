//! Named families of ortholattices.

mod greechie;
mod subspace;

use thiserror::Error;

use crate::lattice::{ortho_from_pairs, ElementId, FiniteLattice, FinitePoset, LatticeError, OrthoLattice};

pub use greechie::{greechie_paste, AdmissibilityError, AdmissibilityRule, DiagramError, GreechieDiagram, PasteError};
pub use subspace::gen_subspace_mo;

/// Largest structure a generator will build.
pub const MAX_GENERATED_ELEMENTS: usize = 512;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GenError {
    #[error("{family} parameter {value} outside the supported range {range}")]
    SizeCap {
        family: &'static str,
        value: u64,
        range: &'static str,
    },
    #[error("{0} is not an odd prime")]
    NotAnOddPrime(u64),
    #[error("standard form is isotropic: vector ({}, {}) is self-orthogonal", .vector.0, .vector.1)]
    IsotropicForm { vector: (u64, u64) },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Powerset of a `k`-set, complement as orthocomplement. Element `i` is the
/// subset with bitmask `i`.
pub fn gen_boolean(k: u32) -> Result<OrthoLattice, GenError> {
    if !(1..=6).contains(&k) {
        return Err(GenError::SizeCap {
            family: "boolean",
            value: u64::from(k),
            range: "1..=6",
        });
    }
    let n = 1usize << k;
    let full = n - 1;
    let poset =
        FinitePoset::from_relation(n, |x, y| x & y == x)?.with_names((0..n).map(|s| subset_name(s, full)).collect())?;
    let lattice = FiniteLattice::from_poset(poset)?;
    let ortho = (0..n).map(|s| ElementId::new(full ^ s)).collect();
    Ok(OrthoLattice::new(lattice, ortho)?)
}

fn subset_name(mask: usize, full: usize) -> String {
    match mask {
        0 => "0".to_string(),
        m if m == full => "1".to_string(),
        m => {
            let parts: Vec<String> = (0..usize::BITS as usize)
                .filter(|i| m >> i & 1 == 1)
                .map(|i| (i + 1).to_string())
                .collect();
            format!("{{{}}}", parts.join(","))
        }
    }
}

/// `MO_m`: bottom, top and `m` complementary atom pairs `a_i, a_i'`, all
/// mutually incomparable. Layout: 0 is bottom, `2i-1` is `a_i`, `2i` is
/// `a_i'`, `2m+1` is top.
pub fn gen_mo(m: usize) -> Result<OrthoLattice, GenError> {
    if m == 0 || 2 * m + 2 > MAX_GENERATED_ELEMENTS {
        return Err(GenError::SizeCap {
            family: "mo",
            value: m as u64,
            range: "1..=255",
        });
    }
    let n = 2 * m + 2;
    let top = n - 1;
    let mut covers = Vec::with_capacity(4 * m);
    let mut names = vec!["0".to_string()];
    for i in 1..=m {
        names.push(format!("a{i}"));
        names.push(format!("a{i}'"));
    }
    names.push("1".to_string());
    for x in 1..top {
        covers.push((ElementId::new(0), ElementId::new(x)));
        covers.push((ElementId::new(x), ElementId::new(top)));
    }
    let mut pairs = vec![(ElementId::new(0), ElementId::new(top))];
    for i in 1..=m {
        pairs.push((ElementId::new(2 * i - 1), ElementId::new(2 * i)));
    }
    build(n, &covers, &pairs, names)
}

/// The hexagon `0 < a < b < 1`, `0 < b' < a' < 1`: the smallest
/// orthocomplemented lattice that is not orthomodular.
pub fn gen_o6() -> OrthoLattice {
    let e = ElementId::new;
    let covers = [(0, 1), (1, 2), (2, 5), (0, 3), (3, 4), (4, 5)].map(|(x, y)| (e(x), e(y)));
    let pairs = [(0, 5), (1, 4), (2, 3)].map(|(x, y)| (e(x), e(y)));
    let names = ["0", "a", "b", "b'", "a'", "1"].map(String::from).to_vec();
    build(6, &covers, &pairs, names).expect("the hexagon is an ortholattice")
}

fn build(
    n: usize,
    covers: &[(ElementId, ElementId)],
    pairs: &[(ElementId, ElementId)],
    names: Vec<String>,
) -> Result<OrthoLattice, GenError> {
    let poset = FinitePoset::from_covers(n, covers)?.with_names(names)?;
    let lattice = FiniteLattice::from_poset(poset)?;
    let ortho = ortho_from_pairs(n, pairs)?;
    Ok(OrthoLattice::new(lattice, ortho)?)
}
