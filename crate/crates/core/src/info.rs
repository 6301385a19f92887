//! Sequences of yes-no questions and the amount of relevant information
//! they carry.
//!
//! A sequence preserves relevance when every later question is relevant with
//! respect to every earlier one. Information is counted as one bit per
//! answered question, and the capacity of a lattice is the longest
//! relevance-preserving sequence it admits.

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::checkers::defect_pairs;
use crate::lattice::{ElementId, OrthoLattice};
use crate::relevance::is_relevant;

/// Default node budget for [`capacity`].
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SequenceError {
    #[error("element index {index} out of range for a lattice of size {n}")]
    Index { index: usize, n: usize },
    #[error("position {0} is the bottom element, which is not a question")]
    Bottom(usize),
    #[error("positions {first} and {second} ask the same question")]
    Repeated { first: usize, second: usize },
}

/// Ordered, pairwise distinct, nonzero questions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuestionSequence(Vec<ElementId>);

impl QuestionSequence {
    pub fn new(l: &OrthoLattice, questions: Vec<ElementId>) -> Result<Self, SequenceError> {
        for (pos, &q) in questions.iter().enumerate() {
            if q.index() >= l.len() {
                return Err(SequenceError::Index {
                    index: q.index(),
                    n: l.len(),
                });
            }
            if q == l.bottom() {
                return Err(SequenceError::Bottom(pos));
            }
            if let Some(first) = questions[..pos].iter().position(|&p| p == q) {
                return Err(SequenceError::Repeated { first, second: pos });
            }
        }
        Ok(QuestionSequence(questions))
    }

    pub fn as_slice(&self) -> &[ElementId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The sequence with `q` removed, if present.
    pub fn without(&self, q: ElementId) -> QuestionSequence {
        QuestionSequence(self.0.iter().copied().filter(|&x| x != q).collect())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum InfoError {
    #[error("question {later} is irrelevant with respect to earlier question {earlier}")]
    RelevanceLost { earlier: usize, later: usize },
}

/// The first `(i, j)`, `i < j`, in lexicographic order where `q_j` is
/// irrelevant with respect to `q_i`.
pub fn first_relevance_loss(l: &OrthoLattice, s: &QuestionSequence) -> Option<(usize, usize)> {
    let q = s.as_slice();
    (0..q.len())
        .flat_map(|i| (i + 1..q.len()).map(move |j| (i, j)))
        .find(|&(i, j)| !is_relevant(l, q[j], q[i]))
}

pub fn is_relevance_preserving(l: &OrthoLattice, s: &QuestionSequence) -> bool {
    first_relevance_loss(l, s).is_none()
}

/// One bit per answered question, defined only while no question renders an
/// earlier one irrelevant.
pub fn info_bits(l: &OrthoLattice, s: &QuestionSequence) -> Result<usize, InfoError> {
    match first_relevance_loss(l, s) {
        Some((earlier, later)) => Err(InfoError::RelevanceLost { earlier, later }),
        None => Ok(s.len()),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CapacityOptions {
    /// Stop extending sequences at this length.
    pub max_len: Option<usize>,
    pub node_budget: u64,
}

impl Default for CapacityOptions {
    fn default() -> Self {
        CapacityOptions {
            max_len: None,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapacityReport {
    /// Length of the longest relevance-preserving sequence found.
    pub capacity: usize,
    /// Lexicographically least sequence of that length.
    pub maximizer: QuestionSequence,
    /// Search nodes visited.
    pub nodes: u64,
    /// The search stopped at `max_len` before exhausting the tree.
    pub capped: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CapacityError {
    #[error("node budget exhausted; capacity is at least {}", .lower_bound.capacity)]
    BudgetExceeded { lower_bound: CapacityReport },
}

struct CapacitySearch {
    relevant: Vec<FixedBitSet>,
    max_len: usize,
    budget: u64,
    nodes: u64,
    stack: Vec<usize>,
    best: Vec<usize>,
    exhausted: bool,
}

impl CapacitySearch {
    fn descend(&mut self, candidates: &FixedBitSet) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.stack.len() > self.best.len() {
            self.best = self.stack.clone();
        }
        if self.stack.len() == self.max_len {
            return;
        }
        if self.stack.len() + candidates.count_ones(..) <= self.best.len() {
            return;
        }
        for q in candidates.ones() {
            let mut next = candidates.clone();
            next.intersect_with(&self.relevant[q]);
            next.set(q, false);
            self.stack.push(q);
            self.descend(&next);
            self.stack.pop();
            if self.exhausted || self.best.len() == self.max_len {
                return;
            }
        }
    }
}

/// Exact maximum length of a relevance-preserving question sequence, by
/// depth-first search in index order with a size bound.
pub fn capacity(l: &OrthoLattice, options: CapacityOptions) -> Result<CapacityReport, CapacityError> {
    let n = l.len();
    let mut questions = FixedBitSet::with_capacity(n);
    questions.insert_range(..);
    questions.set(l.bottom().index(), false);
    let relevant: Vec<FixedBitSet> = l
        .elements()
        .map(|a| {
            let mut row = FixedBitSet::with_capacity(n);
            for b in l.elements() {
                if b != l.bottom() && is_relevant(l, b, a) {
                    row.insert(b.index());
                }
            }
            row
        })
        .collect();
    let max_len = options.max_len.unwrap_or(n).min(n);
    let mut search = CapacitySearch {
        relevant,
        max_len,
        budget: options.node_budget,
        nodes: 0,
        stack: Vec::new(),
        best: Vec::new(),
        exhausted: false,
    };
    search.descend(&questions);
    let report = CapacityReport {
        capacity: search.best.len(),
        maximizer: QuestionSequence(search.best.iter().map(|&q| ElementId::new(q)).collect()),
        nodes: search.nodes.min(options.node_budget),
        capped: options.max_len.is_some_and(|m| search.best.len() >= m),
    };
    if search.exhausted {
        Err(CapacityError::BudgetExceeded { lower_bound: report })
    } else {
        Ok(report)
    }
}

/// The contradiction pattern behind orthomodularity: a pair `a < b` with `b`
/// still relevant with respect to `a`, and a relevance-preserving sequence
/// asking `a` then `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DefectWitness {
    pub lower: ElementId,
    pub upper: ElementId,
    pub certificate: QuestionSequence,
}

/// `None` exactly when the lattice is orthomodular; otherwise the least
/// defect pair with certificate `[a, b]`.
pub fn defect_witness(l: &OrthoLattice) -> Option<DefectWitness> {
    let (a, b) = defect_pairs(l).into_iter().next()?;
    let certificate = QuestionSequence::new(l, vec![a, b]).expect("a defect pair has a nonzero lower element");
    debug_assert!(is_relevance_preserving(l, &certificate));
    Some(DefectWitness {
        lower: a,
        upper: b,
        certificate,
    })
}
