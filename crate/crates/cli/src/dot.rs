//! Cover relations of a finite poset as DOT text.

use std::fmt::Write;

use zonoweave_core::auxgraph::FinitePoset;

/// Vertices in canonical order, then cover edges `a -> b` in canonical
/// order of `(a, b)`.
pub fn poset_to_dot(name: &str, p: &FinitePoset) -> String {
    let mut vertices = p.elements().to_vec();
    vertices.sort();
    let mut covers = p.covers();
    covers.sort();
    let mut s = String::new();
    let _ = writeln!(s, "digraph {name} {{");
    let _ = writeln!(s, "  rankdir=BT;");
    for v in vertices {
        let _ = writeln!(s, "  \"{v}\";");
    }
    for (a, b) in covers {
        let _ = writeln!(s, "  \"{a}\" -> \"{b}\";");
    }
    s.push_str("}\n");
    s
}
