//! DOT emission for undirected graphs, with node ids `p1..pn`.

use cdg_core::graph::Graph;

/// Renders the graph as an undirected DOT document. Isolated vertices are
/// listed as bare nodes so the vertex count survives a round trip.
pub fn emit(g: &Graph) -> String {
    let mut out = String::from("graph cdg {\n");
    for v in g.vertices() {
        if g.degree(v).expect("in range") == 0 {
            out.push_str(&format!("  p{v};\n"));
        }
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("  p{u} -- p{v};\n"));
    }
    out.push_str("}\n");
    out
}
