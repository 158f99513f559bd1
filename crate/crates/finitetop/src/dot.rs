//! DOT export: Hasse diagrams drawn upward, complexes as their
//! 1-skeleton graph.

use finitetop_core::poset::FinitePreorder;
use finitetop_core::AbstractComplex;
use finitetop_core::Result;

fn quote(id: &str) -> String {
    format!("\"{}\"", id.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn hasse_dot(p: &FinitePreorder) -> String {
    let mut out = String::from("digraph hasse {\n  rankdir=BT;\n");
    for e in p.elements() {
        out.push_str(&format!("  {};\n", quote(e)));
    }
    for (lo, hi) in p.covers() {
        out.push_str(&format!("  {} -> {};\n", quote(&lo), quote(&hi)));
    }
    out.push_str("}\n");
    out
}

pub fn skeleton_dot(k: &AbstractComplex) -> Result<String> {
    let mut out = String::from("graph skeleton {\n");
    for v in k.vertices() {
        out.push_str(&format!("  {};\n", quote(v)));
    }
    for face in k.faces()? {
        if face.len() == 2 {
            let mut it = face.iter();
            let a = *it.next().expect("two vertices");
            let b = *it.next().expect("two vertices");
            out.push_str(&format!(
                "  {} -- {};\n",
                quote(&k.vertices()[a]),
                quote(&k.vertices()[b])
            ));
        }
    }
    out.push_str("}\n");
    Ok(out)
}
