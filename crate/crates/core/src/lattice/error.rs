use std::fmt;

use thiserror::Error;

use super::ElementId;

/// Which of the two lattice bounds is involved in a failure.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bound {
    Bottom,
    Top,
}

impl fmt::Display for Bound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Bound::Bottom => "bottom",
            Bound::Top => "top",
        })
    }
}

/// The missing operation when a pair of elements breaks the lattice property.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MissingBound {
    Meet,
    Join,
}

impl fmt::Display for MissingBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MissingBound::Meet => "no unique greatest lower bound",
            MissingBound::Join => "no unique least upper bound",
        })
    }
}

/// Orthocomplementation axiom that a candidate map violates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum OrthoAxiom {
    /// `x⊥ = x` for some `x` in a lattice with at least two elements.
    FixedPoint,
    /// (a) `x⊥⊥ = x`.
    Involution,
    /// (b) `x ≤ y ⇔ y⊥ ≤ x⊥`.
    OrderReversing,
    /// (c) `x ∧ x⊥ = 0`.
    Contradiction,
    /// (d) `x ∨ x⊥ = 1`.
    ExcludedMiddle,
    /// de Morgan laws, audited after (a)–(d).
    DeMorgan,
}

impl OrthoAxiom {
    pub fn tag(self) -> &'static str {
        match self {
            OrthoAxiom::FixedPoint => "fixed-point",
            OrthoAxiom::Involution => "a",
            OrthoAxiom::OrderReversing => "b",
            OrthoAxiom::Contradiction => "c",
            OrthoAxiom::ExcludedMiddle => "d",
            OrthoAxiom::DeMorgan => "de-morgan",
        }
    }
}

impl fmt::Display for OrthoAxiom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("a structure must have at least one element")]
    Empty,
    #[error("element index {index} out of range for a structure of size {n}")]
    Index { index: usize, n: usize },
    #[error("cover ({lower}, {upper}) is listed more than once")]
    DuplicateCover { lower: ElementId, upper: ElementId },
    #[error("order relation has a cycle through {x} and {y}")]
    Cycle { x: ElementId, y: ElementId },
    #[error("no {0} element")]
    NoBounds(Bound),
    #[error("elements {x} and {y} have {reason}")]
    NotALattice {
        x: ElementId,
        y: ElementId,
        reason: MissingBound,
    },
    #[error("orthocomplement map is not a permutation (element {0} is hit twice or out of range)")]
    NotAPermutation(usize),
    #[error("element {0} has no orthocomplement")]
    MissingOrtho(usize),
    #[error("a one-element lattice has 0 = 1 and carries no orthocomplementation")]
    Degenerate,
    #[error("orthocomplement axiom ({axiom}) fails at {}", fmt_witness(.x, .y))]
    OrthoAxiom {
        axiom: OrthoAxiom,
        x: ElementId,
        y: Option<ElementId>,
    },
    #[error("expected {expected} names, got {got}")]
    NameCount { expected: usize, got: usize },
}

fn fmt_witness(x: &ElementId, y: &Option<ElementId>) -> String {
    match y {
        Some(y) => format!("({x}, {y})"),
        None => format!("{x}"),
    }
}
