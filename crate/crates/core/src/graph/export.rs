//! Byte-stable DOT rendering.

use super::SimpleGraph;

/// Render the graph as DOT with sorted vertices and edges, so identical
/// graphs always serialize to identical bytes.
pub fn to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph {\n");
    for label in g.labels() {
        out.push_str(&format!("  {};\n", quote(label)));
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  {} -- {};\n", quote(&u), quote(&v)));
    }
    out.push_str("}\n");
    out
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}
