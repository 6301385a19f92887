//! Finite ortholattices: construction, law checking, relevance of
//! questions, information capacity, named families, Greechie pastings and
//! exhaustive enumeration of small cases.
//!
//! ```
//! use orthokit::{checkers::defect_pairs, generators::gen_o6};
//!
//! let o6 = gen_o6();
//! let names: Vec<_> = defect_pairs(&o6)
//!     .into_iter()
//!     .map(|(x, y)| (o6.name(x), o6.name(y)))
//!     .collect();
//! assert_eq!(names, [("a".into(), "b".into()), ("b'".into(), "a'".into())]);
//! ```

pub mod checkers;
pub mod crosscheck;
pub mod enumerate;
pub mod format;
pub mod generators;
pub mod info;
pub mod lattice;
pub mod relevance;

pub use lattice::{ElementId, FiniteLattice, FinitePoset, LatticeError, OrthoLattice};
