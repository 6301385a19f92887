use std::fmt;

/// Index of an element inside a finite structure of size `n`.
///
/// An `ElementId` carries no reference to its parent structure; it is only
/// meaningful relative to the poset or lattice it was obtained from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ElementId(pub u32);

impl ElementId {
    #[inline]
    pub fn new(index: usize) -> Self {
        ElementId(index as u32)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl From<usize> for ElementId {
    fn from(index: usize) -> Self {
        ElementId::new(index)
    }
}

impl fmt::Display for ElementId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}
