use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use fixedbitset::FixedBitSet;
use thiserror::Error;

use crate::lattice::{ElementId, FiniteLattice, FinitePoset, LatticeError, OrthoLattice};

/// Largest block a pasting accepts (the block is built as its full powerset).
pub const MAX_BLOCK_ATOMS: usize = 12;

/// Named atoms grouped into Boolean blocks.
///
/// Every block has at least two atoms and no block is contained in another.
/// Atoms are indexed in order of first appearance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GreechieDiagram {
    atoms: Vec<String>,
    blocks: Vec<Vec<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DiagramError {
    #[error("a diagram needs at least one block")]
    NoBlocks,
    #[error("block {block} has {size} atom(s); at least 2 are required")]
    BlockTooSmall { block: usize, size: usize },
    #[error("block {block} has {size} atoms; at most {MAX_BLOCK_ATOMS} are supported")]
    BlockTooLarge { block: usize, size: usize },
    #[error("block {block} lists atom {atom:?} twice")]
    RepeatedAtom { block: usize, atom: String },
    #[error("block {inner} is contained in block {outer}")]
    SubsetBlock { inner: usize, outer: usize },
}

impl GreechieDiagram {
    pub fn new<S: AsRef<str>>(blocks: &[Vec<S>]) -> Result<Self, DiagramError> {
        if blocks.is_empty() {
            return Err(DiagramError::NoBlocks);
        }
        let mut atoms: Vec<String> = Vec::new();
        let mut index: BTreeMap<String, usize> = BTreeMap::new();
        let mut out = Vec::with_capacity(blocks.len());
        for (b, block) in blocks.iter().enumerate() {
            if block.len() < 2 {
                return Err(DiagramError::BlockTooSmall {
                    block: b,
                    size: block.len(),
                });
            }
            if block.len() > MAX_BLOCK_ATOMS {
                return Err(DiagramError::BlockTooLarge {
                    block: b,
                    size: block.len(),
                });
            }
            let mut members = BTreeSet::new();
            for name in block {
                let name = name.as_ref();
                let id = *index.entry(name.to_string()).or_insert_with(|| {
                    atoms.push(name.to_string());
                    atoms.len() - 1
                });
                if !members.insert(id) {
                    return Err(DiagramError::RepeatedAtom {
                        block: b,
                        atom: name.to_string(),
                    });
                }
            }
            out.push(members);
        }
        for (i, inner) in out.iter().enumerate() {
            for (j, outer) in out.iter().enumerate() {
                if i != j && inner.is_subset(outer) && (inner != outer || i > j) {
                    return Err(DiagramError::SubsetBlock { inner: i, outer: j });
                }
            }
        }
        Ok(GreechieDiagram {
            atoms,
            blocks: out.into_iter().map(|s| s.into_iter().collect()).collect(),
        })
    }

    pub fn atoms(&self) -> &[String] {
        &self.atoms
    }

    /// Atom indices of each block, sorted.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_names(&self, b: usize) -> Vec<&str> {
        self.blocks[b].iter().map(|&a| self.atoms[a].as_str()).collect()
    }

    fn shared(&self, i: usize, j: usize) -> Vec<usize> {
        self.blocks[i]
            .iter()
            .copied()
            .filter(|a| self.blocks[j].contains(a))
            .collect()
    }

    /// First violated admissibility rule: two blocks sharing more than one
    /// atom, then loops of order 3, then loops of order 4.
    pub fn admissibility(&self) -> Result<(), AdmissibilityError> {
        let m = self.blocks.len();
        for i in 0..m {
            for j in i + 1..m {
                if self.shared(i, j).len() > 1 {
                    return Err(AdmissibilityError {
                        rule: AdmissibilityRule::SharedAtoms,
                        blocks: vec![i, j],
                    });
                }
            }
        }
        // With single-atom intersections, `link[i][j]` is the shared atom.
        let link: Vec<Vec<Option<usize>>> = (0..m)
            .map(|i| {
                (0..m)
                    .map(|j| {
                        if i == j {
                            None
                        } else {
                            self.shared(i, j).first().copied()
                        }
                    })
                    .collect()
            })
            .collect();
        let distinct = |atoms: &[usize]| atoms.iter().collect::<BTreeSet<_>>().len() == atoms.len();
        for i in 0..m {
            for j in i + 1..m {
                for k in j + 1..m {
                    if let (Some(x), Some(y), Some(z)) = (link[i][j], link[j][k], link[k][i]) {
                        if distinct(&[x, y, z]) {
                            return Err(AdmissibilityError {
                                rule: AdmissibilityRule::Loop3,
                                blocks: vec![i, j, k],
                            });
                        }
                    }
                }
            }
        }
        // 4-cycles i-j-k-l-i with i the smallest block and j < l.
        for i in 0..m {
            for j in i + 1..m {
                for l in j + 1..m {
                    for k in i + 1..m {
                        if k == j || k == l {
                            continue;
                        }
                        if let (Some(w), Some(x), Some(y), Some(z)) = (link[i][j], link[j][k], link[k][l], link[l][i]) {
                            if distinct(&[w, x, y, z]) {
                                return Err(AdmissibilityError {
                                    rule: AdmissibilityRule::Loop4,
                                    blocks: vec![i, j, k, l],
                                });
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AdmissibilityRule {
    /// Two blocks share two or more atoms (a loop of order 2).
    SharedAtoms,
    Loop3,
    Loop4,
}

impl fmt::Display for AdmissibilityRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AdmissibilityRule::SharedAtoms => "blocks share more than one atom",
            AdmissibilityRule::Loop3 => "loop of order 3",
            AdmissibilityRule::Loop4 => "loop of order 4",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("{rule} in blocks {blocks:?}")]
pub struct AdmissibilityError {
    pub rule: AdmissibilityRule,
    pub blocks: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PasteError {
    #[error("inadmissible diagram: {0}")]
    Admissibility(#[from] AdmissibilityError),
    #[error("pasted structure is invalid: {0}")]
    Lattice(#[from] LatticeError),
    #[error("complements disagree across blocks for element {0}")]
    InconsistentComplement(String),
}

/// Union-find over `(block, subset)` nodes.
struct Classes {
    parent: Vec<usize>,
}

impl Classes {
    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            let (lo, hi) = if rx < ry { (rx, ry) } else { (ry, rx) };
            self.parent[hi] = lo;
        }
    }
}

/// Pastes the Boolean algebras of the blocks along shared atoms.
///
/// Identified across blocks: the bottoms, the tops, each shared atom and the
/// in-block complement of each shared atom. The order is the transitive
/// closure of the block orders and the result is validated as an
/// ortholattice. `allow_violations` skips the admissibility rules only.
pub fn greechie_paste(d: &GreechieDiagram, allow_violations: bool) -> Result<OrthoLattice, PasteError> {
    if !allow_violations {
        d.admissibility()?;
    }
    // Node layout: block b occupies offset[b] .. offset[b] + 2^|b|, local
    // subset masks over the block's sorted atom list.
    let mut offset = Vec::with_capacity(d.blocks.len());
    let mut total = 0usize;
    for block in &d.blocks {
        offset.push(total);
        total += 1 << block.len();
    }
    let node = |b: usize, mask: usize| offset[b] + mask;
    let full = |b: usize| (1usize << d.blocks[b].len()) - 1;
    let local = |b: usize, atom: usize| d.blocks[b].iter().position(|&a| a == atom);

    let mut classes = Classes {
        parent: (0..total).collect(),
    };
    for b in 1..d.blocks.len() {
        classes.union(node(0, 0), node(b, 0));
        classes.union(node(0, full(0)), node(b, full(b)));
    }
    for atom in 0..d.atoms.len() {
        let holders: Vec<(usize, usize)> = (0..d.blocks.len())
            .filter_map(|b| local(b, atom).map(|i| (b, i)))
            .collect();
        for w in holders.windows(2) {
            let ((b0, i0), (b1, i1)) = (w[0], w[1]);
            classes.union(node(b0, 1 << i0), node(b1, 1 << i1));
            classes.union(node(b0, full(b0) ^ (1 << i0)), node(b1, full(b1) ^ (1 << i1)));
        }
    }

    // Elements in order of first appearance, walking blocks and, inside each
    // block, masks by (size, value).
    let mut walk: Vec<(usize, usize)> = Vec::with_capacity(total);
    for b in 0..d.blocks.len() {
        let mut masks: Vec<usize> = (0..=full(b)).collect();
        masks.sort_by_key(|&m| (m.count_ones(), m));
        walk.extend(masks.into_iter().map(|m| (b, m)));
    }
    let mut element_of = vec![usize::MAX; total];
    let mut root_element: BTreeMap<usize, usize> = BTreeMap::new();
    let mut representative: Vec<(usize, usize)> = Vec::new();
    for &(b, m) in &walk {
        let root = classes.find(node(b, m));
        let next = root_element.len();
        let e = *root_element.entry(root).or_insert_with(|| {
            representative.push((b, m));
            next
        });
        element_of[node(b, m)] = e;
    }
    let n = representative.len();

    let mut up = vec![FixedBitSet::with_capacity(n); n];
    for b in 0..d.blocks.len() {
        for m in 0..=full(b) {
            for i in 0..d.blocks[b].len() {
                if m >> i & 1 == 0 {
                    up[element_of[node(b, m)]].insert(element_of[node(b, m | 1 << i)]);
                }
            }
        }
    }

    let mut ortho = vec![usize::MAX; n];
    for &(b, m) in &walk {
        let e = element_of[node(b, m)];
        let c = element_of[node(b, full(b) ^ m)];
        if ortho[e] == usize::MAX {
            ortho[e] = c;
        } else if ortho[e] != c {
            return Err(PasteError::InconsistentComplement(element_name(d, representative[e])));
        }
    }

    let names = unique_names(d, &representative);
    let poset = FinitePoset::from_up_rows(up)?.with_names(names)?;
    let lattice = FiniteLattice::from_poset(poset)?;
    Ok(OrthoLattice::new(
        lattice,
        ortho.into_iter().map(ElementId::new).collect(),
    )?)
}

fn element_name(d: &GreechieDiagram, (b, m): (usize, usize)) -> String {
    let block = &d.blocks[b];
    let full = (1usize << block.len()) - 1;
    let members: Vec<&str> = (0..block.len())
        .filter(|i| m >> i & 1 == 1)
        .map(|i| d.atoms[block[i]].as_str())
        .collect();
    if m == 0 {
        "0".to_string()
    } else if m == full {
        "1".to_string()
    } else if (full ^ m).count_ones() == 1 && members.len() > 1 {
        let missing = (0..block.len())
            .find(|i| (full ^ m) >> i & 1 == 1)
            .expect("one atom missing");
        format!("{}'", d.atoms[block[missing]])
    } else {
        members.join("+")
    }
}

fn unique_names(d: &GreechieDiagram, representative: &[(usize, usize)]) -> Vec<String> {
    let names: Vec<String> = representative.iter().map(|&r| element_name(d, r)).collect();
    let mut counts: BTreeMap<&str, usize> = BTreeMap::new();
    for name in &names {
        *counts.entry(name.as_str()).or_default() += 1;
    }
    names
        .iter()
        .zip(representative)
        .map(|(name, &(b, _))| {
            if counts[name.as_str()] > 1 {
                format!("{name}@{b}")
            } else {
                name.clone()
            }
        })
        .collect()
}
