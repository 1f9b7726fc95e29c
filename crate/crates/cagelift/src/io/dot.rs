//! DOT export in the style of the source figures: pinned vertices boxed,
//! nonzero voltages as arc labels, zero-voltage arcs drawn undirected.

use crate::voltage::{SimpleGraph, VoltageGraph};

fn quoted(name: &str) -> String {
    format!("\"{}\"", name.replace('\\', "\\\\").replace('"', "\\\""))
}

pub fn voltage_graph_to_dot(g: &VoltageGraph) -> String {
    let mut out = String::from("digraph voltage {\n");
    out.push_str("  node [shape=circle];\n");
    for v in g.vertices() {
        let name = quoted(g.name(v));
        if g.is_pinned(v) {
            out.push_str(&format!("  {name} [shape=box];\n"));
        } else {
            out.push_str(&format!("  {name};\n"));
        }
    }
    for a in g.arcs() {
        let tail = quoted(g.name(a.tail));
        let head = quoted(g.name(a.head));
        if a.voltage == 0 {
            out.push_str(&format!("  {tail} -> {head} [dir=none];\n"));
        } else {
            out.push_str(&format!("  {tail} -> {head} [label=\"{}\"];\n", a.voltage));
        }
    }
    out.push_str("}\n");
    out
}

pub fn simple_graph_to_dot(g: &SimpleGraph) -> String {
    let mut out = String::from("graph lift {\n");
    out.push_str("  node [shape=circle];\n");
    for v in 0..g.n() {
        out.push_str(&format!("  {};\n", quoted(g.label(v))));
    }
    for (u, w) in g.edges() {
        out.push_str(&format!(
            "  {} -- {};\n",
            quoted(g.label(u)),
            quoted(g.label(w))
        ));
    }
    out.push_str("}\n");
    out
}
