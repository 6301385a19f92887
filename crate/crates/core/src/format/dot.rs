//! Graphviz rendering of the Hasse diagram, bottom to top.

use std::fmt::Write as _;

use crate::lattice::OrthoLattice;

fn quote(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn export_dot(l: &OrthoLattice) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n  node [shape=plaintext];\n  edge [arrowhead=none];\n");
    for x in l.elements() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", quote(&l.name(x)));
    }
    for (lo, hi) in l.lattice().poset().covers() {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}
