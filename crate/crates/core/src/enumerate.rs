//! Isomorph-free generation of all ortholattices up to a size bound.
//!
//! Every ortholattice `L` with at least four elements arises from a smaller
//! one by adding a new atom `a` together with its complement `a⊥`, which is
//! a new coatom: removing an atom and its complement from `L` leaves an
//! ortholattice. Children are produced from each class representative by
//! choosing the up-set of the new atom, and a child is kept only when the
//! new atom lies in the automorphism orbit of its canonically chosen atom,
//! so each class has exactly one accepting parent (canonical augmentation).

use std::collections::BTreeMap;
use std::fs;
use std::io;
use std::path::{Path, PathBuf};
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;
use thiserror::Error;

use crate::checkers::check_orthomodular;
use crate::format::export_olf;
use crate::lattice::{CanonicalForm, ElementId, FiniteLattice, FinitePoset, OrthoLattice};

/// Hard cap on the enumerated size.
pub const MAX_ENUMERATION_SIZE: usize = 14;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_size: usize,
    /// Worker threads; `None` uses the global pool.
    pub jobs: Option<usize>,
    /// Maximum number of candidate extensions examined.
    pub candidate_budget: u64,
}

impl EnumerationOptions {
    pub fn new(max_size: usize) -> Self {
        EnumerationOptions {
            max_size,
            jobs: None,
            candidate_budget: u64::MAX,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumeratedClass {
    pub form: CanonicalForm,
    /// Representative in canonical labeling.
    pub lattice: OrthoLattice,
    pub orthomodular: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationSummary {
    pub max_size: usize,
    /// One representative per class, sorted by (size, canonical form).
    pub classes: Vec<EnumeratedClass>,
    pub candidates: u64,
    /// False when the candidate budget ran out before generation finished.
    pub complete: bool,
}

impl EnumerationSummary {
    /// `size -> (ortholattices, orthomodular ones)` for every even size
    /// up to `max_size`, including empty sizes.
    pub fn counts(&self) -> BTreeMap<usize, (usize, usize)> {
        let mut counts: BTreeMap<usize, (usize, usize)> = (2..=self.max_size).step_by(2).map(|n| (n, (0, 0))).collect();
        for class in &self.classes {
            let entry = counts.entry(class.lattice.len()).or_default();
            entry.0 += 1;
            entry.1 += usize::from(class.orthomodular);
        }
        counts
    }

    pub fn count(&self, size: usize) -> usize {
        self.classes.iter().filter(|c| c.lattice.len() == size).count()
    }

    pub fn orthomodular_count(&self, size: usize) -> usize {
        self.classes
            .iter()
            .filter(|c| c.lattice.len() == size && c.orthomodular)
            .count()
    }

    pub fn forms(&self) -> Vec<&CanonicalForm> {
        self.classes.iter().map(|c| &c.form).collect()
    }

    pub fn lattices(&self) -> impl Iterator<Item = &OrthoLattice> {
        self.classes.iter().map(|c| &c.lattice)
    }

    /// Keeps only the orthomodular classes.
    pub fn orthomodular_only(mut self) -> Self {
        self.classes.retain(|c| c.orthomodular);
        self
    }

    /// Writes one OLF file per class into `dir`, named
    /// `n<size>_<digest>.olf`. Returns the paths in class order.
    pub fn write_corpus(&self, dir: &Path) -> io::Result<Vec<PathBuf>> {
        fs::create_dir_all(dir)?;
        self.classes
            .iter()
            .map(|class| {
                let path = dir.join(format!("n{:02}_{}.olf", class.lattice.len(), class.form.digest()));
                fs::write(&path, export_olf(&class.lattice))?;
                Ok(path)
            })
            .collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("maximum size {0} outside 2..={MAX_ENUMERATION_SIZE}")]
    SizeCap(usize),
    #[error("candidate budget exhausted after {} classes", .partial.classes.len())]
    BudgetExceeded { partial: EnumerationSummary },
}

pub fn enumerate_ortholattices(options: EnumerationOptions) -> Result<EnumerationSummary, EnumerateError> {
    if !(2..=MAX_ENUMERATION_SIZE).contains(&options.max_size) {
        return Err(EnumerateError::SizeCap(options.max_size));
    }
    let run = || generate(options);
    let summary = match options.jobs {
        Some(jobs) => rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build()
            .expect("thread pool construction")
            .install(run),
        None => run(),
    };
    if summary.complete {
        Ok(summary)
    } else {
        Err(EnumerateError::BudgetExceeded { partial: summary })
    }
}

struct Budget {
    limit: u64,
    used: AtomicU64,
    exhausted: AtomicBool,
}

impl Budget {
    fn take(&self) -> bool {
        if self.used.fetch_add(1, Ordering::Relaxed) >= self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
            false
        } else {
            true
        }
    }
}

fn generate(options: EnumerationOptions) -> EnumerationSummary {
    let budget = Budget {
        limit: options.candidate_budget,
        used: AtomicU64::new(0),
        exhausted: AtomicBool::new(false),
    };
    let chain = two_chain();
    let mut level = vec![EnumeratedClass {
        form: chain.canonical_form(),
        orthomodular: true,
        lattice: chain,
    }];
    let mut classes = level.clone();
    let mut size = 2;
    while size + 2 <= options.max_size && !budget.exhausted.load(Ordering::Relaxed) {
        let per_parent: Vec<Vec<EnumeratedClass>> = level
            .par_iter()
            .map(|parent| children(&parent.lattice, &budget))
            .collect();
        let mut next: Vec<EnumeratedClass> = per_parent.into_iter().flatten().collect();
        next.sort_by(|a, b| a.form.cmp(&b.form));
        classes.extend(next.iter().cloned());
        level = next;
        size += 2;
    }
    let candidates = budget.used.load(Ordering::Relaxed).min(budget.limit);
    EnumerationSummary {
        max_size: options.max_size,
        classes,
        candidates,
        complete: !budget.exhausted.load(Ordering::Relaxed),
    }
}

fn two_chain() -> OrthoLattice {
    let poset = FinitePoset::from_covers(2, &[(ElementId(0), ElementId(1))]).expect("2-chain");
    let lattice = FiniteLattice::from_poset(poset).expect("2-chain");
    OrthoLattice::new(lattice, vec![ElementId(1), ElementId(0)]).expect("2-chain")
}

/// Accepted children of `parent`, one per isomorphism class.
fn children(parent: &OrthoLattice, budget: &Budget) -> Vec<EnumeratedClass> {
    let m = parent.len();
    let (bottom, top) = (parent.bottom().index(), parent.top().index());
    let middles: Vec<usize> = (0..m).filter(|&x| x != bottom && x != top).collect();
    let (atom, coatom) = (m, m + 1);
    let mut accepted: BTreeMap<CanonicalForm, OrthoLattice> = BTreeMap::new();

    for mask in 0u64..(1u64 << middles.len()) {
        if !budget.take() {
            break;
        }
        // F = chosen middles plus top: the strict up-set of the new atom.
        let mut upper = FixedBitSet::with_capacity(m);
        upper.insert(top);
        for (bit, &x) in middles.iter().enumerate() {
            if mask >> bit & 1 == 1 {
                upper.insert(x);
            }
        }
        let closed = upper.ones().all(|x| {
            let up = parent.lattice().poset().up_set(ElementId::new(x));
            up.is_subset(&upper) && !upper.contains(parent.ortho(ElementId::new(x)).index())
        });
        if !closed {
            continue;
        }
        let mut rows: Vec<FixedBitSet> = Vec::with_capacity(m + 2);
        for x in 0..m {
            let mut row = parent.lattice().poset().up_set(ElementId::new(x)).clone();
            row.grow(m + 2);
            if x == bottom {
                row.insert(atom);
            }
            // x ≤ a⊥ exactly when a ≤ x⊥.
            if upper.contains(parent.ortho(ElementId::new(x)).index()) {
                row.insert(coatom);
            }
            rows.push(row);
        }
        let mut atom_row = upper.clone();
        atom_row.grow(m + 2);
        atom_row.insert(atom);
        rows.push(atom_row);
        let mut coatom_row = FixedBitSet::with_capacity(m + 2);
        coatom_row.insert(coatom);
        coatom_row.insert(top);
        rows.push(coatom_row);

        let Ok(child) = build_child(rows, parent, atom, coatom) else {
            continue;
        };
        let labeling = child.canonical_labeling();
        let chosen = child
            .atoms()
            .into_iter()
            .min_by_key(|a| labeling[a.index()])
            .expect("a child has atoms");
        let new_atom = ElementId::new(atom);
        if chosen != new_atom && child.marked_canonical_form(chosen) != child.marked_canonical_form(new_atom) {
            continue;
        }
        let representative = child.relabel(&labeling);
        let form = representative.canonical_form();
        accepted.entry(form).or_insert(representative);
    }

    accepted
        .into_iter()
        .map(|(form, lattice)| EnumeratedClass {
            orthomodular: check_orthomodular(&lattice).verdict,
            form,
            lattice,
        })
        .collect()
}

fn build_child(
    rows: Vec<FixedBitSet>,
    parent: &OrthoLattice,
    atom: usize,
    coatom: usize,
) -> Result<OrthoLattice, crate::lattice::LatticeError> {
    let poset = FinitePoset::from_up_rows(rows)?;
    let lattice = FiniteLattice::from_poset(poset)?;
    let mut ortho: Vec<ElementId> = parent.ortho_map().to_vec();
    ortho.push(ElementId::new(coatom));
    ortho.push(ElementId::new(atom));
    OrthoLattice::new(lattice, ortho)
}
