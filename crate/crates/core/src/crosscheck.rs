//! Cross-validation of every checker against every other on a corpus.

use crate::checkers::{
    check_distributive, check_modular, check_modular_inequality, check_order_implies_compatible, check_orthomodular,
    check_proof_step, defect_pairs,
};
use crate::format::export_olf;
use crate::info::defect_witness;
use crate::lattice::OrthoLattice;

/// One disagreement between two signals that must coincide.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Divergence {
    /// Position of the lattice in the corpus.
    pub lattice: usize,
    pub signal: &'static str,
    /// OLF dump of the offending lattice.
    pub dump: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CrossReport {
    pub lattices: usize,
    pub orthomodular: usize,
    pub divergences: Vec<Divergence>,
}

impl CrossReport {
    pub fn verdict(&self) -> bool {
        self.divergences.is_empty()
    }

    pub fn first_divergence(&self) -> Option<&Divergence> {
        self.divergences.first()
    }
}

/// Whether `l` has a six-element sub-ortholattice shaped like the hexagon:
/// `0 < p < q < 1` and `0 < q⊥ < p⊥ < 1` with the two chains incomparable
/// and the six elements closed under meet and join.
pub fn contains_hexagon(l: &OrthoLattice) -> bool {
    let (bottom, top) = (l.bottom(), l.top());
    l.elements().any(|p| {
        p != bottom
            && l.elements().any(|q| {
                if q == top || !l.lt(p, q) {
                    return false;
                }
                let (r, s) = (l.ortho(q), l.ortho(p));
                let chains_apart = [p, q]
                    .iter()
                    .all(|&u| [r, s].iter().all(|&v| !l.leq(u, v) && !l.leq(v, u)));
                let six = [bottom, p, q, r, s, top];
                chains_apart
                    && six.iter().all(|&u| {
                        six.iter()
                            .all(|&v| six.contains(&l.meet(u, v)) && six.contains(&l.join(u, v)))
                    })
            })
    })
}

/// Runs every consistency signal on each lattice:
/// the two orthomodularity criteria agree; the universal inequality and the
/// proof-step construction have no witnesses; order-implies-compatible,
/// hexagon-freeness and the absence of a defect witness all coincide with
/// orthomodularity; distributive ⇒ modular ⇒ orthomodular; the size is even
/// and the orthocomplement has no fixed point.
pub fn cross_validate(corpus: &[OrthoLattice]) -> CrossReport {
    let mut report = CrossReport {
        lattices: corpus.len(),
        ..CrossReport::default()
    };
    for (i, l) in corpus.iter().enumerate() {
        let om = check_orthomodular(l).verdict;
        report.orthomodular += usize::from(om);
        let distributive = check_distributive(l.lattice()).verdict;
        let modular = check_modular(l.lattice()).verdict;
        let signals: [(&'static str, bool); 9] = [
            ("orthomodular_iff_defect_free", om == defect_pairs(l).is_empty()),
            ("modular_inequality", check_modular_inequality(l.lattice()).verdict),
            ("proof_step", check_proof_step(l).verdict),
            (
                "order_implies_compatible_iff_orthomodular",
                check_order_implies_compatible(l).verdict == om,
            ),
            ("hexagon_iff_not_orthomodular", contains_hexagon(l) != om),
            (
                "defect_witness_iff_not_orthomodular",
                defect_witness(l).is_some() != om,
            ),
            ("distributive_implies_modular", !distributive || modular),
            ("modular_implies_orthomodular", !modular || om),
            (
                "even_size_fixed_point_free",
                l.len() % 2 == 0 && l.elements().all(|x| l.ortho(x) != x),
            ),
        ];
        for (signal, ok) in signals {
            if !ok {
                report.divergences.push(Divergence {
                    lattice: i,
                    signal,
                    dump: export_olf(l),
                });
            }
        }
    }
    report
}
