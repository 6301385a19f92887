//! Exhaustive decision procedures for lattice laws.
//!
//! Every checker scans all tuples in lexicographic index order, so the first
//! reported witness is the smallest violating tuple and reports are
//! reproducible.

use std::fmt;

use fixedbitset::FixedBitSet;

use crate::lattice::{ElementId, FiniteLattice, OrthoLattice};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    /// `x∨(y∧z) = (x∨y)∧(x∨z)`; witnesses `(x, y, z)`.
    Distributive,
    /// `x≤z ⇒ x∨(y∧z) = (x∨y)∧z`; witnesses `(x, y, z)`.
    Modular,
    /// `x≤z ⇒ x∨(x⊥∧z) = z`; witnesses `(x, z)`.
    Orthomodular,
    /// `x<z` together with `x⊥∧z = 0`; witnesses `(x, z)`.
    DefectFree,
    /// `a≤b ⇒ (c∧b)∨a ≤ (c∨a)∧b`, valid in every lattice; witnesses `(a, b, c)`.
    ModularInequality,
    /// For `y≤z`, `x = y∨(y⊥∧z)` satisfies `x≤z` and `x⊥∧z = 0`; witnesses `(y, z)`.
    ProofStep,
    /// `x≤y ⇒ x, y compatible`; witnesses `(x, y)`.
    OrderImpliesCompatible,
}

impl Property {
    pub fn tag(self) -> &'static str {
        match self {
            Property::Distributive => "distributive",
            Property::Modular => "modular",
            Property::Orthomodular => "orthomodular",
            Property::DefectFree => "defect_free",
            Property::ModularInequality => "modular_inequality",
            Property::ProofStep => "proof_step",
            Property::OrderImpliesCompatible => "order_implies_compatible",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Verdict of one law plus every violating tuple, in index order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PropertyReport {
    pub property: Property,
    pub verdict: bool,
    pub witnesses: Vec<Vec<ElementId>>,
}

impl PropertyReport {
    fn from_witnesses(property: Property, witnesses: Vec<Vec<ElementId>>) -> Self {
        PropertyReport {
            property,
            verdict: witnesses.is_empty(),
            witnesses,
        }
    }

    pub fn first_witness(&self) -> Option<&[ElementId]> {
        self.witnesses.first().map(Vec::as_slice)
    }
}

fn triples(n: usize) -> impl Iterator<Item = (ElementId, ElementId, ElementId)> {
    (0..n).flat_map(move |x| {
        (0..n).flat_map(move |y| (0..n).map(move |z| (ElementId::new(x), ElementId::new(y), ElementId::new(z))))
    })
}

fn pairs(n: usize) -> impl Iterator<Item = (ElementId, ElementId)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (ElementId::new(x), ElementId::new(y))))
}

pub fn check_distributive(l: &FiniteLattice) -> PropertyReport {
    let witnesses = triples(l.len())
        .filter(|&(x, y, z)| l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), l.join(x, z)))
        .map(|(x, y, z)| vec![x, y, z])
        .collect();
    PropertyReport::from_witnesses(Property::Distributive, witnesses)
}

pub fn check_modular(l: &FiniteLattice) -> PropertyReport {
    let witnesses = triples(l.len())
        .filter(|&(x, y, z)| l.leq(x, z) && l.join(x, l.meet(y, z)) != l.meet(l.join(x, y), z))
        .map(|(x, y, z)| vec![x, y, z])
        .collect();
    PropertyReport::from_witnesses(Property::Modular, witnesses)
}

/// The defining criterion: `x≤z ⇒ x∨(x⊥∧z) = z`.
pub fn check_orthomodular(l: &OrthoLattice) -> PropertyReport {
    let witnesses = pairs(l.len())
        .filter(|&(x, z)| l.leq(x, z) && l.join(x, l.meet(l.ortho(x), z)) != z)
        .map(|(x, z)| vec![x, z])
        .collect();
    PropertyReport::from_witnesses(Property::Orthomodular, witnesses)
}

/// All pairs with `x<z` and `x⊥∧z = 0`, in index order. Empty exactly when
/// the lattice is orthomodular.
pub fn defect_pairs(l: &OrthoLattice) -> Vec<(ElementId, ElementId)> {
    pairs(l.len())
        .filter(|&(x, z)| l.lt(x, z) && l.meet(l.ortho(x), z) == l.bottom())
        .collect()
}

/// The second orthomodularity criterion, as a report over [`defect_pairs`].
pub fn check_defect_free(l: &OrthoLattice) -> PropertyReport {
    let witnesses = defect_pairs(l).into_iter().map(|(x, z)| vec![x, z]).collect();
    PropertyReport::from_witnesses(Property::DefectFree, witnesses)
}

/// `a≤b ⇒ (c∧b)∨a ≤ (c∨a)∧b`. Holds in every lattice, so any witness points
/// at broken meet/join tables.
pub fn check_modular_inequality(l: &FiniteLattice) -> PropertyReport {
    let witnesses = triples(l.len())
        .filter(|&(a, b, c)| l.leq(a, b) && !l.leq(l.join(l.meet(c, b), a), l.meet(l.join(c, a), b)))
        .map(|(a, b, c)| vec![a, b, c])
        .collect();
    PropertyReport::from_witnesses(Property::ModularInequality, witnesses)
}

/// For every `y≤z` the element `x = y∨(y⊥∧z)` satisfies `x≤z` and
/// `x⊥∧z = 0`. Holds in every ortholattice.
pub fn check_proof_step(l: &OrthoLattice) -> PropertyReport {
    let witnesses = pairs(l.len())
        .filter(|&(y, z)| {
            if !l.leq(y, z) {
                return false;
            }
            let x = l.join(y, l.meet(l.ortho(y), z));
            !(l.leq(x, z) && l.meet(l.ortho(x), z) == l.bottom())
        })
        .map(|(y, z)| vec![y, z])
        .collect();
    PropertyReport::from_witnesses(Property::ProofStep, witnesses)
}

/// Closure of `seeds` under meet, join and orthocomplement, in index order.
pub fn generated_subalgebra(l: &OrthoLattice, seeds: &[ElementId]) -> Vec<ElementId> {
    let n = l.len();
    let mut inside = FixedBitSet::with_capacity(n);
    let mut members: Vec<ElementId> = Vec::new();
    let push = |x: ElementId, inside: &mut FixedBitSet, members: &mut Vec<ElementId>| {
        if !inside.put(x.index()) {
            members.push(x);
        }
    };
    for &s in seeds {
        push(s, &mut inside, &mut members);
    }
    // Semi-naive fixpoint: each new member is combined with all earlier ones.
    let mut next = 0;
    while next < members.len() {
        let x = members[next];
        push(l.ortho(x), &mut inside, &mut members);
        for i in 0..=next {
            let y = members[i];
            push(l.meet(x, y), &mut inside, &mut members);
            push(l.join(x, y), &mut inside, &mut members);
        }
        next += 1;
    }
    members.sort();
    members
}

/// Whether a meet/join-closed subset is distributive.
pub fn is_distributive_on(l: &OrthoLattice, subset: &[ElementId]) -> bool {
    subset.iter().all(|&x| {
        subset.iter().all(|&y| {
            subset
                .iter()
                .all(|&z| l.join(x, l.meet(y, z)) == l.meet(l.join(x, y), l.join(x, z)))
        })
    })
}

/// `x` and `y` are compatible when the sub-ortholattice they generate is a
/// Boolean algebra, i.e. distributive.
pub fn compatible(l: &OrthoLattice, x: ElementId, y: ElementId) -> bool {
    let closure = generated_subalgebra(l, &[x, y]);
    is_distributive_on(l, &closure)
}

pub fn check_order_implies_compatible(l: &OrthoLattice) -> PropertyReport {
    let witnesses = pairs(l.len())
        .filter(|&(x, y)| l.leq(x, y) && !compatible(l, x, y))
        .map(|(x, y)| vec![x, y])
        .collect();
    PropertyReport::from_witnesses(Property::OrderImpliesCompatible, witnesses)
}
