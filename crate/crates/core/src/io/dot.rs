//! Graphviz rendering of an Auslander-Reiten quiver.

use std::fmt::Write;

use crate::algebra::ar::Quiver;

/// Vertices in quiver order, irreducible maps as solid arrows (labelled
/// when the multiplicity exceeds 1), AR translates as undirected dashed edges.
pub fn emit_dot(q: &Quiver, name: &str) -> String {
    let mut s = String::new();
    writeln!(s, "digraph {:?} {{", name).unwrap();
    writeln!(s, "  rankdir=LR;").unwrap();
    writeln!(s, "  node [shape=plaintext];").unwrap();
    for (i, v) in q.vertices.iter().enumerate() {
        writeln!(s, "  n{i} [label={v:?}];").unwrap();
    }
    for &(a, b, m) in &q.arrows {
        if m > 1 {
            writeln!(s, "  n{a} -> n{b} [label=\"{m}\"];").unwrap();
        } else {
            writeln!(s, "  n{a} -> n{b};").unwrap();
        }
    }
    for &(m, t) in &q.mesh {
        writeln!(s, "  n{m} -> n{t} [style=dashed, dir=none];").unwrap();
    }
    s.push_str("}\n");
    s
}
