//! DOT rendering of Hasse diagrams: one digraph per order, edges drawn
//! lower -> upper, elements ranked by height.

use homlat_core::order::Poset;

fn escape(label: &str) -> String {
    label.replace('\\', "\\\\").replace('"', "\\\"")
}

pub fn poset_dot(p: &Poset, graph_name: &str) -> String {
    let mut out = String::new();
    out.push_str(&format!("digraph \"{}\" {{\n", escape(graph_name)));
    out.push_str("  rankdir=BT;\n  node [shape=plaintext];\n");
    for i in 0..p.size() {
        out.push_str(&format!("  n{} [label=\"{}\"];\n", i, escape(p.name(i))));
    }
    let heights = p.heights();
    let max_height = heights.iter().copied().max().unwrap_or(0);
    for h in 0..=max_height {
        let level: Vec<String> = (0..p.size())
            .filter(|&i| heights[i] == h)
            .map(|i| format!("n{i};"))
            .collect();
        if !level.is_empty() {
            out.push_str(&format!("  {{ rank=same; {} }}\n", level.join(" ")));
        }
    }
    for &(a, b) in p.covers() {
        out.push_str(&format!("  n{a} -> n{b};\n"));
    }
    out.push_str("}\n");
    out
}
