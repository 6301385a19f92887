use std::fmt;

use super::canonical::{self, CanonicalForm};
use super::{ElementId, FiniteLattice, LatticeError, OrthoAxiom};

/// A finite lattice together with a validated orthocomplementation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrthoLattice {
    lattice: FiniteLattice,
    ortho: Vec<ElementId>,
}

impl OrthoLattice {
    /// Validates `ortho` against axioms (a)–(d) and audits the de Morgan laws.
    ///
    /// Checks run in the order: permutation, fixed points, (a), (b), (c), (d),
    /// de Morgan; the first failure is reported with its smallest witness.
    pub fn new(lattice: FiniteLattice, ortho: Vec<ElementId>) -> Result<Self, LatticeError> {
        let n = lattice.len();
        if n < 2 {
            return Err(LatticeError::Degenerate);
        }
        if ortho.len() != n {
            return Err(LatticeError::NotAPermutation(ortho.len().min(n)));
        }
        let mut seen = vec![false; n];
        for &y in &ortho {
            if y.index() >= n || seen[y.index()] {
                return Err(LatticeError::NotAPermutation(y.index()));
            }
            seen[y.index()] = true;
        }
        let perp = |x: ElementId| ortho[x.index()];
        let fail = |axiom, x, y| Err(LatticeError::OrthoAxiom { axiom, x, y });

        for x in lattice.elements() {
            if perp(x) == x {
                return fail(OrthoAxiom::FixedPoint, x, None);
            }
        }
        for x in lattice.elements() {
            if perp(perp(x)) != x {
                return fail(OrthoAxiom::Involution, x, None);
            }
        }
        for x in lattice.elements() {
            for y in lattice.elements() {
                if lattice.leq(x, y) != lattice.leq(perp(y), perp(x)) {
                    return fail(OrthoAxiom::OrderReversing, x, Some(y));
                }
            }
        }
        for x in lattice.elements() {
            if lattice.meet(x, perp(x)) != lattice.bottom() {
                return fail(OrthoAxiom::Contradiction, x, Some(perp(x)));
            }
        }
        for x in lattice.elements() {
            if lattice.join(x, perp(x)) != lattice.top() {
                return fail(OrthoAxiom::ExcludedMiddle, x, Some(perp(x)));
            }
        }
        if perp(lattice.top()) != lattice.bottom() || perp(lattice.bottom()) != lattice.top() {
            return fail(OrthoAxiom::DeMorgan, lattice.top(), Some(lattice.bottom()));
        }
        for x in lattice.elements() {
            for y in lattice.elements() {
                let join_law = perp(lattice.join(x, y)) == lattice.meet(perp(x), perp(y));
                let meet_law = perp(lattice.meet(x, y)) == lattice.join(perp(x), perp(y));
                if !join_law || !meet_law {
                    return fail(OrthoAxiom::DeMorgan, x, Some(y));
                }
            }
        }
        Ok(OrthoLattice { lattice, ortho })
    }

    #[inline]
    pub fn lattice(&self) -> &FiniteLattice {
        &self.lattice
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.lattice.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.lattice.is_empty()
    }

    #[inline]
    pub fn ortho(&self, x: ElementId) -> ElementId {
        self.ortho[x.index()]
    }

    pub fn ortho_map(&self) -> &[ElementId] {
        &self.ortho
    }

    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.lattice.meet(x, y)
    }

    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.lattice.join(x, y)
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.lattice.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        self.lattice.lt(x, y)
    }

    #[inline]
    pub fn bottom(&self) -> ElementId {
        self.lattice.bottom()
    }

    #[inline]
    pub fn top(&self) -> ElementId {
        self.lattice.top()
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.lattice.elements()
    }

    pub fn name(&self, x: ElementId) -> String {
        self.lattice.name(x)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.lattice.poset().names()
    }

    pub fn atoms(&self) -> Vec<ElementId> {
        self.lattice.atoms()
    }

    /// Looks an element up by display name, then by decimal index.
    pub fn find(&self, token: &str) -> Option<ElementId> {
        if let Some(names) = self.names() {
            if let Some(i) = names.iter().position(|s| s == token) {
                return Some(ElementId::new(i));
            }
        }
        token
            .parse::<usize>()
            .ok()
            .filter(|&i| i < self.len())
            .map(ElementId::new)
    }

    /// Complementary pairs `(x, x⊥)` with `x < x⊥` by index, sorted.
    pub fn ortho_pairs(&self) -> Vec<(ElementId, ElementId)> {
        self.elements()
            .filter_map(|x| {
                let y = self.ortho(x);
                (x < y).then_some((x, y))
            })
            .collect()
    }

    /// Moves the element at old index `i` to `perm[i]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn relabel(&self, perm: &[usize]) -> OrthoLattice {
        assert_eq!(perm.len(), self.len(), "relabeling must cover every element");
        let mut ortho = vec![ElementId(0); self.len()];
        for (x, y) in self.ortho.iter().enumerate() {
            ortho[perm[x]] = ElementId::new(perm[y.index()]);
        }
        OrthoLattice {
            lattice: self.lattice.relabel(perm),
            ortho,
        }
    }

    /// Replaces display names, or removes them with `None`.
    pub fn with_names(mut self, names: Option<Vec<String>>) -> Result<Self, LatticeError> {
        if let Some(v) = &names {
            if v.len() != self.len() {
                return Err(LatticeError::NameCount {
                    expected: self.len(),
                    got: v.len(),
                });
            }
        }
        self.lattice.set_names(names);
        Ok(self)
    }

    pub fn canonical_form(&self) -> CanonicalForm {
        canonical::canonize(self, None).form
    }

    /// A relabeling that sends this lattice to its canonical representative.
    pub fn canonical_labeling(&self) -> Vec<usize> {
        canonical::canonize(self, None).labeling
    }

    /// Canonical form of this lattice with `marked` distinguished from every
    /// other element. Two markings give equal forms iff some automorphism maps
    /// one marked element to the other.
    pub fn marked_canonical_form(&self, marked: ElementId) -> CanonicalForm {
        let mut colors = vec![0u32; self.len()];
        colors[marked.index()] = 1;
        canonical::canonize(self, Some(&colors)).form
    }

    pub fn is_isomorphic(&self, other: &OrthoLattice) -> bool {
        self.len() == other.len() && self.canonical_form() == other.canonical_form()
    }
}

impl fmt::Display for OrthoLattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ortholattice of {} elements:", self.len())?;
        for (x, y) in self.lattice.poset().covers() {
            write!(f, " {}<{}", self.name(x), self.name(y))?;
        }
        for (x, y) in self.ortho_pairs() {
            write!(f, " {}~{}", self.name(x), self.name(y))?;
        }
        Ok(())
    }
}
