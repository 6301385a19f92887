use fixedbitset::FixedBitSet;

use super::{Bound, ElementId, FinitePoset, LatticeError, MissingBound};

/// A finite bounded lattice with precomputed meet and join tables.
///
/// Finite lattices are complete, so `bottom` and `top` always exist once
/// construction succeeds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteLattice {
    poset: FinitePoset,
    meet: Vec<ElementId>,
    join: Vec<ElementId>,
    bottom: ElementId,
    top: ElementId,
}

impl FiniteLattice {
    /// Fills the meet/join tables by exact glb/lub search over down-sets and
    /// up-sets. Fails with the first offending pair in index order.
    pub fn from_poset(poset: FinitePoset) -> Result<Self, LatticeError> {
        let n = poset.len();
        let bottom = poset
            .elements()
            .find(|&x| poset.up_set(x).count_ones(..) == n)
            .ok_or(LatticeError::NoBounds(Bound::Bottom))?;
        let top = poset
            .elements()
            .find(|&x| poset.down_set(x).count_ones(..) == n)
            .ok_or(LatticeError::NoBounds(Bound::Top))?;

        let mut meet = vec![bottom; n * n];
        let mut join = vec![top; n * n];
        let mut scratch = FixedBitSet::with_capacity(n);
        for x in 0..n {
            for y in x..n {
                let (ex, ey) = (ElementId::new(x), ElementId::new(y));
                let m = extremal(&poset, ex, ey, &mut scratch, Side::Lower).ok_or(LatticeError::NotALattice {
                    x: ex,
                    y: ey,
                    reason: MissingBound::Meet,
                })?;
                let j = extremal(&poset, ex, ey, &mut scratch, Side::Upper).ok_or(LatticeError::NotALattice {
                    x: ex,
                    y: ey,
                    reason: MissingBound::Join,
                })?;
                meet[x * n + y] = m;
                meet[y * n + x] = m;
                join[x * n + y] = j;
                join[y * n + x] = j;
            }
        }
        Ok(FiniteLattice {
            poset,
            meet,
            join,
            bottom,
            top,
        })
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.poset.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.poset.is_empty()
    }

    #[inline]
    pub fn poset(&self) -> &FinitePoset {
        &self.poset
    }

    #[inline]
    pub fn bottom(&self) -> ElementId {
        self.bottom
    }

    #[inline]
    pub fn top(&self) -> ElementId {
        self.top
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.leq(x, y)
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        self.poset.lt(x, y)
    }

    /// Table lookup. Panics if either index is out of range.
    #[inline]
    pub fn meet(&self, x: ElementId, y: ElementId) -> ElementId {
        self.meet[x.index() * self.len() + y.index()]
    }

    /// Table lookup. Panics if either index is out of range.
    #[inline]
    pub fn join(&self, x: ElementId, y: ElementId) -> ElementId {
        self.join[x.index() * self.len() + y.index()]
    }

    pub fn checked_meet(&self, x: ElementId, y: ElementId) -> Result<ElementId, LatticeError> {
        self.poset.check_index(x)?;
        self.poset.check_index(y)?;
        Ok(self.meet(x, y))
    }

    pub fn checked_join(&self, x: ElementId, y: ElementId) -> Result<ElementId, LatticeError> {
        self.poset.check_index(x)?;
        self.poset.check_index(y)?;
        Ok(self.join(x, y))
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        self.poset.elements()
    }

    pub fn name(&self, x: ElementId) -> String {
        self.poset.name(x)
    }

    /// Elements covering the bottom, in index order.
    pub fn atoms(&self) -> Vec<ElementId> {
        let bottom = self.bottom;
        self.elements()
            .filter(|&x| x != bottom && self.poset.down_set(x).count_ones(..) == 2)
            .collect()
    }

    /// Every nonzero element lies above some atom. Always true for a finite
    /// lattice; kept as an audit.
    pub fn is_atomic(&self) -> bool {
        let atoms = self.atoms();
        self.elements()
            .filter(|&x| x != self.bottom)
            .all(|x| atoms.iter().any(|&a| self.leq(a, x)))
    }

    pub(crate) fn relabel(&self, perm: &[usize]) -> FiniteLattice {
        let n = self.len();
        let poset = self.poset.relabel(perm);
        let mut meet = vec![ElementId(0); n * n];
        let mut join = vec![ElementId(0); n * n];
        for x in 0..n {
            for y in 0..n {
                let (px, py) = (perm[x], perm[y]);
                meet[px * n + py] = ElementId::new(perm[self.meet[x * n + y].index()]);
                join[px * n + py] = ElementId::new(perm[self.join[x * n + y].index()]);
            }
        }
        FiniteLattice {
            poset,
            meet,
            join,
            bottom: ElementId::new(perm[self.bottom.index()]),
            top: ElementId::new(perm[self.top.index()]),
        }
    }

    pub(crate) fn set_names(&mut self, names: Option<Vec<String>>) {
        self.poset.set_names(names);
    }
}

#[derive(Clone, Copy)]
enum Side {
    Lower,
    Upper,
}

/// The greatest common lower bound (or least common upper bound) of `x` and
/// `y`, if one exists.
fn extremal(
    poset: &FinitePoset,
    x: ElementId,
    y: ElementId,
    scratch: &mut FixedBitSet,
    side: Side,
) -> Option<ElementId> {
    let (a, b) = match side {
        Side::Lower => (poset.down_set(x), poset.down_set(y)),
        Side::Upper => (poset.up_set(x), poset.up_set(y)),
    };
    scratch.clone_from(a);
    scratch.intersect_with(b);
    let common = scratch.count_ones(..);
    scratch.ones().map(ElementId::new).find(|&m| {
        let cone = match side {
            Side::Lower => poset.down_set(m),
            Side::Upper => poset.up_set(m),
        };
        // cone(m) ⊆ common bounds already, so equal size means equal sets.
        cone.count_ones(..) == common
    })
}
