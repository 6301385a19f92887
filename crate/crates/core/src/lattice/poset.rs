use fixedbitset::FixedBitSet;

use super::{ElementId, LatticeError};

/// A finite partial order over the indices `0..n`.
///
/// Both the up-set and the down-set of every element are kept as bit rows, so
/// `x ≤ y` is a single bit test and glb/lub searches are row intersections.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinitePoset {
    n: usize,
    up: Vec<FixedBitSet>,
    down: Vec<FixedBitSet>,
    names: Option<Vec<String>>,
}

impl FinitePoset {
    /// Reflexive-transitive closure of a cover list, where `(lower, upper)`
    /// means `upper` covers `lower`.
    pub fn from_covers(n: usize, covers: &[(ElementId, ElementId)]) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut rows = identity_rows(n);
        for &(lower, upper) in covers {
            for id in [lower, upper] {
                if id.index() >= n {
                    return Err(LatticeError::Index { index: id.index(), n });
                }
            }
            if lower == upper {
                return Err(LatticeError::Cycle { x: lower, y: upper });
            }
            let row = &mut rows[lower.index()];
            if row.contains(upper.index()) {
                return Err(LatticeError::DuplicateCover { lower, upper });
            }
            row.insert(upper.index());
        }
        Self::close(n, rows)
    }

    /// Builds a poset from an arbitrary relation predicate, closing it
    /// reflexively and transitively before checking antisymmetry.
    pub fn from_relation(n: usize, rel: impl Fn(usize, usize) -> bool) -> Result<Self, LatticeError> {
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        let mut rows = identity_rows(n);
        for (x, row) in rows.iter_mut().enumerate() {
            for y in 0..n {
                if rel(x, y) {
                    row.insert(y);
                }
            }
        }
        Self::close(n, rows)
    }

    pub(crate) fn from_up_rows(up: Vec<FixedBitSet>) -> Result<Self, LatticeError> {
        let n = up.len();
        if n == 0 {
            return Err(LatticeError::Empty);
        }
        Self::close(n, up)
    }

    fn close(n: usize, mut up: Vec<FixedBitSet>) -> Result<Self, LatticeError> {
        for (x, row) in up.iter_mut().enumerate() {
            row.insert(x);
        }
        // Warshall over bit rows.
        for k in 0..n {
            let row_k = up[k].clone();
            for row in up.iter_mut() {
                if row.contains(k) {
                    row.union_with(&row_k);
                }
            }
        }
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.ones() {
                down[y].insert(x);
            }
        }
        for x in 0..n {
            for y in up[x].ones() {
                if y > x && up[y].contains(x) {
                    return Err(LatticeError::Cycle {
                        x: ElementId::new(x),
                        y: ElementId::new(y),
                    });
                }
            }
        }
        Ok(FinitePoset {
            n,
            up,
            down,
            names: None,
        })
    }

    /// Attaches display names, one per element.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, LatticeError> {
        if names.len() != self.n {
            return Err(LatticeError::NameCount {
                expected: self.n,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub(crate) fn set_names(&mut self, names: Option<Vec<String>>) {
        debug_assert!(names.as_ref().is_none_or(|v| v.len() == self.n));
        self.names = names;
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    #[inline]
    pub fn leq(&self, x: ElementId, y: ElementId) -> bool {
        self.up[x.index()].contains(y.index())
    }

    #[inline]
    pub fn lt(&self, x: ElementId, y: ElementId) -> bool {
        x != y && self.leq(x, y)
    }

    /// Elements `y` with `x ≤ y`.
    pub fn up_set(&self, x: ElementId) -> &FixedBitSet {
        &self.up[x.index()]
    }

    /// Elements `y` with `y ≤ x`.
    pub fn down_set(&self, x: ElementId) -> &FixedBitSet {
        &self.down[x.index()]
    }

    pub fn elements(&self) -> impl Iterator<Item = ElementId> + '_ {
        (0..self.n).map(ElementId::new)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `x`, falling back to its index.
    pub fn name(&self, x: ElementId) -> String {
        match &self.names {
            Some(names) => names[x.index()].clone(),
            None => x.index().to_string(),
        }
    }

    pub fn check_index(&self, x: ElementId) -> Result<(), LatticeError> {
        if x.index() < self.n {
            Ok(())
        } else {
            Err(LatticeError::Index {
                index: x.index(),
                n: self.n,
            })
        }
    }

    /// The covering pairs `(x, y)`: `x < y` with nothing strictly between.
    /// Sorted by `(x, y)`.
    pub fn covers(&self) -> Vec<(ElementId, ElementId)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].ones() {
                if y == x {
                    continue;
                }
                let mut between = self.up[x].clone();
                between.intersect_with(&self.down[y]);
                if between.count_ones(..) == 2 {
                    out.push((ElementId::new(x), ElementId::new(y)));
                }
            }
        }
        out
    }

    /// Length of the longest chain from a minimal element up to `x`, for
    /// every `x`.
    pub fn heights(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.n).collect();
        order.sort_by_key(|&x| self.down[x].count_ones(..));
        let mut height = vec![0usize; self.n];
        for &x in &order {
            height[x] = self.down[x]
                .ones()
                .filter(|&y| y != x)
                .map(|y| height[y] + 1)
                .max()
                .unwrap_or(0);
        }
        height
    }

    /// Relabels elements: the element at old index `i` moves to `perm[i]`.
    pub(crate) fn relabel(&self, perm: &[usize]) -> FinitePoset {
        let n = self.n;
        let mut up = vec![FixedBitSet::with_capacity(n); n];
        let mut down = vec![FixedBitSet::with_capacity(n); n];
        for x in 0..n {
            for y in self.up[x].ones() {
                up[perm[x]].insert(perm[y]);
                down[perm[y]].insert(perm[x]);
            }
        }
        let names = self.names.as_ref().map(|names| {
            let mut out = vec![String::new(); n];
            for (x, name) in names.iter().enumerate() {
                out[perm[x]] = name.clone();
            }
            out
        });
        FinitePoset { n, up, down, names }
    }
}

fn identity_rows(n: usize) -> Vec<FixedBitSet> {
    (0..n)
        .map(|x| {
            let mut row = FixedBitSet::with_capacity(n);
            row.insert(x);
            row
        })
        .collect()
}
