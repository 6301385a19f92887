//! Text formats: OLF lattices, GDF diagrams and DOT output.

mod dot;
mod gdf;
mod olf;

pub use dot::export_dot;
pub use gdf::{parse_gdf, GdfError};
pub use olf::{export_olf, parse_olf, OlfError};
