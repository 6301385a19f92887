//! Canonical labeling of ortholattices.
//!
//! Individualization-refinement search: the elements are colored by an
//! equitable refinement over (ortho image, up-set colors, down-set colors),
//! non-singleton cells are split by individualizing one element at a time,
//! and every discrete coloring yields a labeled encoding. The canonical form
//! is the lexicographically least encoding over the whole search tree.
//! Automorphisms discovered along the way prune equivalent subtrees: children
//! in the same orbit of the prefix stabilizer are skipped, and a leaf that
//! reproduces the first leaf jumps back to the common ancestor.

use std::fmt;

use sha2::{Digest, Sha256};

use super::OrthoLattice;

/// Byte string identifying an ortho-isomorphism class.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm(Vec<u8>);

impl CanonicalForm {
    pub fn as_bytes(&self) -> &[u8] {
        &self.0
    }

    /// Number of elements of the encoded lattice.
    pub fn size(&self) -> usize {
        u32::from_le_bytes(self.0[..4].try_into().expect("form carries a size header")) as usize
    }

    /// Short hex digest, stable across runs and platforms.
    pub fn digest(&self) -> String {
        let hash = Sha256::digest(&self.0);
        hex::encode(&hash[..8])
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalForm(n={}, {})", self.size(), self.digest())
    }
}

pub(crate) struct Canonized {
    pub form: CanonicalForm,
    /// `labeling[x]` is the canonical position of element `x`.
    pub labeling: Vec<usize>,
}

struct Structure {
    n: usize,
    ortho: Vec<usize>,
    strict_up: Vec<Vec<usize>>,
    strict_down: Vec<Vec<usize>>,
    leq: Vec<Vec<bool>>,
    marks: Option<Vec<u32>>,
}

pub(crate) fn canonize(l: &OrthoLattice, marks: Option<&[u32]>) -> Canonized {
    let n = l.len();
    let poset = l.lattice().poset();
    let mut strict_up = vec![Vec::new(); n];
    let mut strict_down = vec![Vec::new(); n];
    let mut leq = vec![vec![false; n]; n];
    for x in poset.elements() {
        for y in poset.up_set(x).ones() {
            leq[x.index()][y] = true;
            if y != x.index() {
                strict_up[x.index()].push(y);
                strict_down[y].push(x.index());
            }
        }
    }
    let s = Structure {
        n,
        ortho: l.ortho_map().iter().map(|y| y.index()).collect(),
        strict_up,
        strict_down,
        leq,
        marks: marks.map(<[u32]>::to_vec),
    };
    let initial = dense_ranks(&s.marks.clone().unwrap_or_else(|| vec![0; n]));
    let mut search = Search {
        s: &s,
        first: None,
        best: None,
        generators: Vec::new(),
        path: Vec::new(),
    };
    search.visit(initial);
    let best = search.best.expect("search reaches at least one leaf");
    Canonized {
        form: CanonicalForm(best.encoding),
        labeling: best.labeling,
    }
}

struct Leaf {
    encoding: Vec<u8>,
    labeling: Vec<usize>,
    path: Vec<usize>,
}

enum Flow {
    Continue,
    /// Abandon every node deeper than this depth.
    Jump(usize),
}

struct Search<'a> {
    s: &'a Structure,
    first: Option<Leaf>,
    best: Option<Leaf>,
    generators: Vec<Vec<usize>>,
    path: Vec<usize>,
}

impl Search<'_> {
    fn visit(&mut self, colors: Vec<u32>) -> Flow {
        let colors = refine(self.s, colors);
        let depth = self.path.len();
        let Some(cell) = target_cell(&colors) else {
            return self.leaf(&colors);
        };
        let mut explored: Vec<usize> = Vec::new();
        for v in cell {
            if !explored.is_empty() && self.in_explored_orbit(v, &explored) {
                continue;
            }
            self.path.push(v);
            let flow = self.visit(individualize(&colors, v));
            self.path.pop();
            explored.push(v);
            if let Flow::Jump(k) = flow {
                if k < depth {
                    return Flow::Jump(k);
                }
            }
        }
        Flow::Continue
    }

    fn leaf(&mut self, colors: &[u32]) -> Flow {
        let labeling: Vec<usize> = colors.iter().map(|&c| c as usize).collect();
        let encoding = encode(self.s, &labeling);
        let leaf = Leaf {
            encoding,
            labeling,
            path: self.path.clone(),
        };
        let Some(first) = &self.first else {
            self.best = Some(Leaf {
                encoding: leaf.encoding.clone(),
                labeling: leaf.labeling.clone(),
                path: leaf.path.clone(),
            });
            self.first = Some(leaf);
            return Flow::Continue;
        };
        if leaf.encoding == first.encoding {
            let gamma = automorphism(&first.labeling, &leaf.labeling);
            let common = first.path.iter().zip(&leaf.path).take_while(|(a, b)| a == b).count();
            self.generators.push(gamma);
            return Flow::Jump(common);
        }
        let best = self.best.as_ref().expect("best is set with first");
        match leaf.encoding.cmp(&best.encoding) {
            std::cmp::Ordering::Equal => {
                let gamma = automorphism(&best.labeling, &leaf.labeling);
                self.generators.push(gamma);
            }
            std::cmp::Ordering::Less => self.best = Some(leaf),
            std::cmp::Ordering::Greater => {}
        }
        Flow::Continue
    }

    /// Whether `v` shares an orbit with an explored sibling under the known
    /// automorphisms that fix the current path pointwise.
    fn in_explored_orbit(&self, v: usize, explored: &[usize]) -> bool {
        let fixing: Vec<&Vec<usize>> = self
            .generators
            .iter()
            .filter(|g| self.path.iter().all(|&p| g[p] == p))
            .collect();
        if fixing.is_empty() {
            return false;
        }
        let mut parent: Vec<usize> = (0..self.s.n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in fixing {
            for (x, &y) in g.iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let rv = find(&mut parent, v);
        explored.iter().any(|&w| find(&mut parent, w) == rv)
    }
}

/// `γ(x)` is the element occupying, under `to`, the position `x` has under
/// `from`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut inverse_to = vec![0; to.len()];
    for (x, &p) in to.iter().enumerate() {
        inverse_to[p] = x;
    }
    from.iter().map(|&p| inverse_to[p]).collect()
}

fn dense_ranks(values: &[u32]) -> Vec<u32> {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    values
        .iter()
        .map(|v| sorted.binary_search(v).expect("value present") as u32)
        .collect()
}

fn cell_count(colors: &[u32]) -> usize {
    colors.iter().copied().max().map_or(0, |m| m as usize + 1)
}

/// Iterated color refinement until the partition is stable. Colors stay
/// dense ranks and finer colors keep the relative order of coarser ones.
fn refine(s: &Structure, mut colors: Vec<u32>) -> Vec<u32> {
    loop {
        let cells = cell_count(&colors);
        if cells == s.n {
            return colors;
        }
        let signatures: Vec<(u32, u32, Vec<u32>, Vec<u32>)> = (0..s.n)
            .map(|x| {
                let mut up: Vec<u32> = s.strict_up[x].iter().map(|&y| colors[y]).collect();
                let mut down: Vec<u32> = s.strict_down[x].iter().map(|&y| colors[y]).collect();
                up.sort_unstable();
                down.sort_unstable();
                (colors[x], colors[s.ortho[x]], up, down)
            })
            .collect();
        let mut distinct = signatures.clone();
        distinct.sort();
        distinct.dedup();
        let next: Vec<u32> = signatures
            .iter()
            .map(|sig| distinct.binary_search(sig).expect("signature present") as u32)
            .collect();
        if distinct.len() == cells {
            return next;
        }
        colors = next;
    }
}

/// Smallest non-singleton cell, ties broken by lowest color; its elements in
/// index order. `None` when the coloring is discrete.
fn target_cell(colors: &[u32]) -> Option<Vec<usize>> {
    let cells = cell_count(colors);
    if cells == colors.len() {
        return None;
    }
    let mut sizes = vec![0usize; cells];
    for &c in colors {
        sizes[c as usize] += 1;
    }
    let (color, _) = sizes
        .iter()
        .enumerate()
        .filter(|(_, &size)| size >= 2)
        .min_by_key(|&(c, &size)| (size, c))?;
    Some((0..colors.len()).filter(|&x| colors[x] as usize == color).collect())
}

fn individualize(colors: &[u32], v: usize) -> Vec<u32> {
    let spread: Vec<u32> = colors
        .iter()
        .enumerate()
        .map(|(x, &c)| if x == v { 2 * c } else { 2 * c + 1 })
        .collect();
    dense_ranks(&spread)
}

fn encode(s: &Structure, labeling: &[usize]) -> Vec<u8> {
    let n = s.n;
    let mut inverse = vec![0usize; n];
    for (x, &p) in labeling.iter().enumerate() {
        inverse[p] = x;
    }
    let mut out = Vec::with_capacity(4 + 4 * n + n * n / 8 + 1);
    out.extend_from_slice(&(n as u32).to_le_bytes());
    if let Some(marks) = &s.marks {
        for &x in &inverse {
            out.extend_from_slice(&marks[x].to_le_bytes());
        }
    }
    for &x in &inverse {
        out.extend_from_slice(&(labeling[s.ortho[x]] as u16).to_le_bytes());
    }
    let mut byte = 0u8;
    let mut bit = 0;
    for &x in &inverse {
        for &y in &inverse {
            if s.leq[x][y] {
                byte |= 1 << bit;
            }
            bit += 1;
            if bit == 8 {
                out.push(byte);
                byte = 0;
                bit = 0;
            }
        }
    }
    if bit > 0 {
        out.push(byte);
    }
    out
}
