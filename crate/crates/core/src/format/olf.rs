//! OLF: a line-oriented ortholattice description.
//!
//! ```text
//! olf 1
//! n 6
//! name 1 a          # optional, one token per element
//! cover 0 1         # 1 covers 0
//! ortho 1 4         # each complementary pair once, lower index first
//! ```
//!
//! `#` starts a comment. Indices are 0-based and element 0 need not be the
//! bottom.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use thiserror::Error;

use crate::lattice::{ortho_from_pairs, ElementId, FiniteLattice, FinitePoset, LatticeError, OrthoLattice};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OlfError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{}{source}", match .line { Some(l) => format!("line {l}: "), None => String::new() })]
    Invalid {
        line: Option<usize>,
        #[source]
        source: LatticeError,
    },
}

impl OlfError {
    fn parse(line: usize, reason: impl Into<String>) -> Self {
        OlfError::Parse {
            line,
            reason: reason.into(),
        }
    }

    /// The underlying lattice validation error, if any.
    pub fn lattice_error(&self) -> Option<&LatticeError> {
        match self {
            OlfError::Invalid { source, .. } => Some(source),
            OlfError::Parse { .. } => None,
        }
    }
}

struct Declarations {
    n: usize,
    n_line: usize,
    names: Vec<Option<String>>,
    covers: Vec<(ElementId, ElementId, usize)>,
    pairs: Vec<(ElementId, ElementId, usize)>,
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

pub fn parse_olf(text: &str) -> Result<OrthoLattice, OlfError> {
    let decls = parse_declarations(text)?;
    build(&decls)
}

fn parse_declarations(text: &str) -> Result<Declarations, OlfError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, strip_comment(l).split_whitespace().collect::<Vec<_>>()))
        .filter(|(_, tokens)| !tokens.is_empty());

    match lines.next() {
        Some((_, tokens)) if tokens == ["olf", "1"] => {}
        Some((line, tokens)) if tokens.first() == Some(&"olf") => {
            return Err(OlfError::parse(
                line,
                format!("unsupported header {:?}", tokens.join(" ")),
            ));
        }
        Some((line, _)) => return Err(OlfError::parse(line, "missing header")),
        None => return Err(OlfError::parse(1, "missing header")),
    }

    let mut decls: Option<Declarations> = None;
    for (line, tokens) in lines {
        let keyword = tokens[0];
        if keyword == "n" {
            if decls.is_some() {
                return Err(OlfError::parse(line, "element count declared twice"));
            }
            let [_, count] = tokens[..] else {
                return Err(OlfError::parse(line, "expected `n <count>`"));
            };
            let n: usize = count
                .parse()
                .map_err(|_| OlfError::parse(line, format!("invalid element count {count:?}")))?;
            if n == 0 {
                return Err(OlfError::parse(line, "element count must be positive"));
            }
            decls = Some(Declarations {
                n,
                n_line: line,
                names: vec![None; n],
                covers: Vec::new(),
                pairs: Vec::new(),
            });
            continue;
        }
        let Some(d) = decls.as_mut() else {
            return Err(OlfError::parse(line, format!("`{keyword}` before `n <count>`")));
        };
        let index = |token: &str| -> Result<ElementId, OlfError> {
            let i: usize = token
                .parse()
                .map_err(|_| OlfError::parse(line, format!("invalid element index {token:?}")))?;
            if i >= d.n {
                return Err(OlfError::parse(
                    line,
                    format!("element index {i} out of range 0..{}", d.n),
                ));
            }
            Ok(ElementId::new(i))
        };
        match (keyword, &tokens[1..]) {
            ("name", [idx, name]) => {
                let x = index(idx)?;
                if d.names[x.index()].is_some() {
                    return Err(OlfError::parse(line, format!("element {x} named twice")));
                }
                d.names[x.index()] = Some(name.to_string());
            }
            ("cover", [lo, hi]) => {
                let (lo, hi) = (index(lo)?, index(hi)?);
                d.covers.push((lo, hi, line));
            }
            ("ortho", [x, y]) => {
                let (x, y) = (index(x)?, index(y)?);
                d.pairs.push((x, y, line));
            }
            ("name" | "cover" | "ortho", _) => {
                return Err(OlfError::parse(
                    line,
                    format!("`{keyword}` takes exactly two arguments"),
                ));
            }
            _ => return Err(OlfError::parse(line, format!("unknown declaration `{keyword}`"))),
        }
    }
    let d = decls.ok_or_else(|| OlfError::parse(text.lines().count().max(1), "missing `n <count>`"))?;

    if d.names.iter().any(Option::is_some) {
        if let Some(i) = d.names.iter().position(Option::is_none) {
            return Err(OlfError::parse(
                d.n_line,
                format!("element {i} has no name while others do"),
            ));
        }
        let mut seen: BTreeMap<&str, usize> = BTreeMap::new();
        for (i, name) in d.names.iter().enumerate() {
            let name = name.as_deref().expect("all named");
            if let Some(j) = seen.insert(name, i) {
                return Err(OlfError::parse(
                    d.n_line,
                    format!("elements {j} and {i} share the name {name:?}"),
                ));
            }
        }
    }
    Ok(d)
}

fn build(d: &Declarations) -> Result<OrthoLattice, OlfError> {
    let cover_line = |pred: &dyn Fn(ElementId, ElementId) -> bool| {
        d.covers
            .iter()
            .filter(|&&(lo, hi, _)| pred(lo, hi))
            .map(|&(_, _, l)| l)
            .last()
    };
    let ortho_line = |x: usize| {
        d.pairs
            .iter()
            .find(|&&(a, b, _)| a.index() == x || b.index() == x)
            .map(|&(_, _, l)| l)
    };
    let provenance = |err: LatticeError| -> OlfError {
        let line = match &err {
            LatticeError::DuplicateCover { lower, upper } => cover_line(&|lo, hi| lo == *lower && hi == *upper),
            LatticeError::Cycle { x, y } => cover_line(&|lo, hi| lo == *x || hi == *x || lo == *y || hi == *y),
            LatticeError::OrthoAxiom { x, .. } => ortho_line(x.index()),
            LatticeError::NotAPermutation(i) => ortho_line(*i),
            LatticeError::MissingOrtho(_) | LatticeError::Degenerate => Some(d.n_line),
            _ => None,
        };
        OlfError::Invalid { line, source: err }
    };

    let covers: Vec<(ElementId, ElementId)> = d.covers.iter().map(|&(lo, hi, _)| (lo, hi)).collect();
    let mut poset = FinitePoset::from_covers(d.n, &covers).map_err(provenance)?;
    if d.names.iter().all(Option::is_some) {
        poset = poset
            .with_names(d.names.iter().map(|s| s.clone().expect("all named")).collect())
            .map_err(provenance)?;
    }
    let lattice = FiniteLattice::from_poset(poset).map_err(provenance)?;
    let pairs: Vec<(ElementId, ElementId)> = d.pairs.iter().map(|&(x, y, _)| (x, y)).collect();
    let ortho = ortho_from_pairs(d.n, &pairs).map_err(provenance)?;
    OrthoLattice::new(lattice, ortho).map_err(provenance)
}

/// Deterministic OLF text: names (when present), covers sorted by
/// `(lower, upper)`, complementary pairs sorted with the lower index first.
pub fn export_olf(l: &OrthoLattice) -> String {
    let mut out = String::new();
    out.push_str("olf 1\n");
    let _ = writeln!(out, "n {}", l.len());
    if let Some(names) = l.names() {
        for (i, name) in names.iter().enumerate() {
            let _ = writeln!(out, "name {i} {name}");
        }
    }
    for (lo, hi) in l.lattice().poset().covers() {
        let _ = writeln!(out, "cover {lo} {hi}");
    }
    for (x, y) in l.ortho_pairs() {
        let _ = writeln!(out, "ortho {x} {y}");
    }
    out
}
