//! GDF: one Greechie block per line, atoms separated by whitespace, `#`
//! comments.

use thiserror::Error;

use crate::generators::{DiagramError, GreechieDiagram};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GdfError {
    #[error("line {line}: {reason}")]
    Parse { line: usize, reason: String },
    #[error("{}{source}", match .line { Some(l) => format!("line {l}: "), None => String::new() })]
    Invariant {
        line: Option<usize>,
        #[source]
        source: DiagramError,
    },
}

pub fn parse_gdf(text: &str) -> Result<GreechieDiagram, GdfError> {
    let mut blocks: Vec<Vec<&str>> = Vec::new();
    let mut lines: Vec<usize> = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let content = raw.split('#').next().unwrap_or("");
        let atoms: Vec<&str> = content.split_whitespace().collect();
        if atoms.is_empty() {
            continue;
        }
        if let Some(bad) = atoms.iter().find(|a| a.contains(',') || a.contains('@')) {
            return Err(GdfError::Parse {
                line: i + 1,
                reason: format!("atom name {bad:?} contains a reserved character"),
            });
        }
        blocks.push(atoms);
        lines.push(i + 1);
    }
    GreechieDiagram::new(&blocks).map_err(|source| {
        let line = match &source {
            DiagramError::NoBlocks => None,
            DiagramError::BlockTooSmall { block, .. }
            | DiagramError::BlockTooLarge { block, .. }
            | DiagramError::RepeatedAtom { block, .. } => Some(lines[*block]),
            DiagramError::SubsetBlock { inner, outer } => Some(lines[*inner.max(outer)]),
        };
        GdfError::Invariant { line, source }
    })
}
