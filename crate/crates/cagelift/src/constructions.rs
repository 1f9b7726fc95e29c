//! Builders for every named object: the pruned trees T_{4t+2} and T_{4t},
//! the voltage graphs G6, G8, G10, H10, G12, H12, and the base cage K_{3,3}.
//!
//! Vertex names follow the bit-string scheme of the source figures
//! ("x_010", "y_11", "z*"), so tests can be read against them directly.
//! Builders never enforce the girth conditions on the parameters; that is
//! the certifier's job, and invalid parameters must stay constructible for
//! negative tests.

use crate::voltage::{SimpleGraph, VoltageGraph};

/// Default voltage for the H12 arc `v`. The two candidate values in the
/// source material (-1 and 5) disagree; -1 is the one whose lifts have
/// girth 12 for every m >= 10, verified by brute force in the acceptance
/// suite, so it is the shipped default. With 5 instead, a 6-cycle in the
/// voltage graph sums to zero and every lift has girth 6.
pub const DEFAULT_H12_V: i64 = -1;

/// The rejected H12 `v` voltage, kept for the override parameter and the
/// resolution test.
pub const ALTERNATE_H12_V: i64 = 5;

/// Parameters naming one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConstructionSpec {
    G6 {
        alpha: i64,
        beta: i64,
    },
    G8 {
        alpha: i64,
        beta: i64,
        gamma: i64,
        delta: i64,
    },
    G10,
    H10,
    G12,
    H12 {
        v: Option<i64>,
    },
    TreeT4t2 {
        t: usize,
    },
    TreeT4t {
        t: usize,
    },
    K33,
}

/// What a construction produces: most are voltage graphs, K_{3,3} is a
/// plain simple graph.
#[derive(Clone, Debug)]
pub enum Built {
    Voltage(VoltageGraph),
    Simple(SimpleGraph),
}

impl ConstructionSpec {
    pub fn build(&self) -> Built {
        match *self {
            ConstructionSpec::G6 { alpha, beta } => Built::Voltage(build_g6(alpha, beta)),
            ConstructionSpec::G8 {
                alpha,
                beta,
                gamma,
                delta,
            } => Built::Voltage(build_g8(alpha, beta, gamma, delta)),
            ConstructionSpec::G10 => Built::Voltage(build_g10()),
            ConstructionSpec::H10 => Built::Voltage(build_h10()),
            ConstructionSpec::G12 => Built::Voltage(build_g12()),
            ConstructionSpec::H12 { v } => Built::Voltage(build_h12(v)),
            ConstructionSpec::TreeT4t2 { t } => Built::Voltage(build_tree_t4t2(t)),
            ConstructionSpec::TreeT4t { t } => Built::Voltage(build_tree_t4t(t)),
            ConstructionSpec::K33 => Built::Simple(build_k33()),
        }
    }
}

/// Scratch list of named vertices and arcs, finalized into a VoltageGraph.
struct Assembly {
    vertices: Vec<(String, bool)>,
    arcs: Vec<(String, String, i64)>,
}

impl Assembly {
    fn new() -> Self {
        Assembly {
            vertices: Vec::new(),
            arcs: Vec::new(),
        }
    }

    fn vertex(&mut self, name: impl Into<String>, pinned: bool) {
        self.vertices.push((name.into(), pinned));
    }

    fn arc(&mut self, tail: impl Into<String>, head: impl Into<String>, voltage: i64) {
        self.arcs.push((tail.into(), head.into(), voltage));
    }

    fn remove_vertices(&mut self, names: &[&str]) {
        self.vertices.retain(|(n, _)| !names.contains(&n.as_str()));
        self.arcs
            .retain(|(t, h, _)| !names.contains(&t.as_str()) && !names.contains(&h.as_str()));
    }

    fn build(self, description: &str) -> VoltageGraph {
        let vertices: Vec<(&str, bool)> = self
            .vertices
            .iter()
            .map(|(n, p)| (n.as_str(), *p))
            .collect();
        let arcs: Vec<(&str, &str, i64)> = self
            .arcs
            .iter()
            .map(|(t, h, v)| (t.as_str(), h.as_str(), *v))
            .collect();
        VoltageGraph::new(&vertices, &arcs)
            .expect("construction data is valid")
            .with_description(description)
    }
}

fn bit_name(prefix: char, bits: &str) -> String {
    if bits.is_empty() {
        prefix.to_string()
    } else {
        format!("{prefix}_{bits}")
    }
}

fn bitstrings(len: usize) -> impl Iterator<Item = String> {
    (0..1usize << len).map(move |k| {
        (0..len)
            .map(|i| {
                if k >> (len - 1 - i) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    })
}

/// Adds the pinned root `<prefix>*`, its child `<prefix>`, and the binary
/// tree below it up to bit strings of length `depth`, skipping every
/// vertex whose bit string starts with `zeros` zeros and has length at
/// least `min_deleted_len`. All tree edges get voltage 0.
fn add_pruned_tree(
    a: &mut Assembly,
    prefix: char,
    depth: usize,
    zeros: usize,
    min_deleted_len: usize,
) {
    let deleted = |b: &str| b.len() >= min_deleted_len && b.bytes().take(zeros).all(|c| c == b'0');
    let root = bit_name(prefix, "");
    a.vertex(format!("{prefix}*"), true);
    a.vertex(&root, false);
    a.arc(format!("{prefix}*"), &root, 0);
    for len in 1..=depth {
        for b in bitstrings(len) {
            if deleted(&b) {
                continue;
            }
            a.vertex(bit_name(prefix, &b), false);
            a.arc(bit_name(prefix, &b[..len - 1]), bit_name(prefix, &b), 0);
        }
    }
}

fn all_zeros(len: usize) -> String {
    "0".repeat(len)
}

/// Unpinned vertex count of one pruned tree X_t: sum of 2^i for i in t..2t.
pub fn tree_x_unpinned(t: usize) -> usize {
    (t..2 * t).map(|i| 1 << i).sum()
}

/// Unpinned vertex count of one pruned tree X'_t.
pub fn tree_x_prime_unpinned(t: usize) -> usize {
    1 + (1 << (2 * t - 2)) + (t..=2 * t - 3).map(|i| 1 << i).sum::<usize>()
}

/// The tree T_{4t+2}: two pruned binary trees of height 2t with pinned
/// roots x* and y*, joined by a zero-voltage edge between x_a and y_a
/// where a is the all-zeros string of length t-1.
pub fn build_tree_t4t2(t: usize) -> VoltageGraph {
    assert!(t >= 1, "T_{{4t+2}} needs t >= 1");
    let mut a = Assembly::new();
    add_pruned_tree(&mut a, 'x', 2 * t - 1, t, t);
    add_pruned_tree(&mut a, 'y', 2 * t - 1, t, t);
    let join = all_zeros(t - 1);
    a.arc(bit_name('x', &join), bit_name('y', &join), 0);
    a.build(&format!("T_{} tree", 4 * t + 2))
}

/// The tree T_{4t}: one tree X'_t and two trees Y_{t-1}, Z_{t-1} with
/// pinned roots, joined by zero-voltage edges (x_a, y_a) and (x_a, z_a).
pub fn build_tree_t4t(t: usize) -> VoltageGraph {
    assert!(t >= 2, "T_{{4t}} needs t >= 2");
    let mut a = Assembly::new();
    add_pruned_tree(&mut a, 'x', 2 * t - 2, t - 1, t);
    add_pruned_tree(&mut a, 'y', 2 * t - 3, t - 1, t - 1);
    add_pruned_tree(&mut a, 'z', 2 * t - 3, t - 1, t - 1);
    let xa = bit_name('x', &all_zeros(t - 1));
    a.arc(&xa, bit_name('y', &all_zeros(t - 2)), 0);
    a.arc(&xa, bit_name('z', &all_zeros(t - 2)), 0);
    a.build(&format!("T_{} tree", 4 * t))
}

/// The 6-vertex voltage graph whose lifts are girth-6 semicubic graphs of
/// order 4m+2: paths x*-x-x_0 and y*-y-y_0, the edge x-y, and two
/// parallel arcs x_0 -> y_0 with voltages alpha and beta.
pub fn build_g6(alpha: i64, beta: i64) -> VoltageGraph {
    let mut a = Assembly::new();
    for (name, pinned) in [
        ("x*", true),
        ("x", false),
        ("x_0", false),
        ("y*", true),
        ("y", false),
        ("y_0", false),
    ] {
        a.vertex(name, pinned);
    }
    a.arc("x*", "x", 0);
    a.arc("x", "x_0", 0);
    a.arc("y*", "y", 0);
    a.arc("y", "y_0", 0);
    a.arc("x", "y", 0);
    a.arc("x_0", "y_0", alpha);
    a.arc("x_0", "y_0", beta);
    a.build(&format!("G6(alpha={alpha}, beta={beta})"))
}

/// The 12-vertex voltage graph whose lifts are girth-8 semicubic graphs of
/// order 9m+3: the tree T_8 plus four labeled arcs from the leaves x_10,
/// x_11 to the leaves y_1, z_1.
pub fn build_g8(alpha: i64, beta: i64, gamma: i64, delta: i64) -> VoltageGraph {
    let mut a = tree_t4t_assembly(2);
    a.arc("x_10", "y_1", alpha);
    a.arc("x_10", "z_1", beta);
    a.arc("x_11", "y_1", gamma);
    a.arc("x_11", "z_1", delta);
    a.build(&format!(
        "G8(alpha={alpha}, beta={beta}, gamma={gamma}, delta={delta})"
    ))
}

fn tree_t4t2_assembly(t: usize) -> Assembly {
    let mut a = Assembly::new();
    add_pruned_tree(&mut a, 'x', 2 * t - 1, t, t);
    add_pruned_tree(&mut a, 'y', 2 * t - 1, t, t);
    let join = all_zeros(t - 1);
    a.arc(bit_name('x', &join), bit_name('y', &join), 0);
    a
}

fn tree_t4t_assembly(t: usize) -> Assembly {
    let mut a = Assembly::new();
    add_pruned_tree(&mut a, 'x', 2 * t - 2, t - 1, t);
    add_pruned_tree(&mut a, 'y', 2 * t - 3, t - 1, t - 1);
    add_pruned_tree(&mut a, 'z', 2 * t - 3, t - 1, t - 1);
    let xa = bit_name('x', &all_zeros(t - 1));
    a.arc(&xa, bit_name('y', &all_zeros(t - 2)), 0);
    a.arc(&xa, bit_name('z', &all_zeros(t - 2)), 0);
    a
}

/// Leaf arcs of G10: (starting x leaf, ending y leaf, voltage).
const G10_ARCS: [(&str, &str, i64); 12] = [
    ("x_010", "y_010", 1),
    ("x_010", "y_111", 2),
    ("x_011", "y_011", 2),
    ("x_011", "y_110", 1),
    ("x_100", "y_010", 2),
    ("x_100", "y_101", 1),
    ("x_101", "y_011", 1),
    ("x_101", "y_100", 2),
    ("x_110", "y_110", 2),
    ("x_110", "y_111", 1),
    ("x_111", "y_100", 3),
    ("x_111", "y_101", 0),
];

/// The 26-vertex voltage graph whose lifts are girth-10 semicubic graphs
/// of order 24m+2 (girth 10 for m >= 4 except m = 6): T_10 plus twelve
/// labeled arcs between the leaves.
pub fn build_g10() -> VoltageGraph {
    let mut a = tree_t4t2_assembly(2);
    for (tail, head, voltage) in G10_ARCS {
        a.arc(tail, head, voltage);
    }
    a.build("G10")
}

/// Leaf arcs of H10 (the x_0 -> y_0 arc is already the tree join edge).
const H10_ARCS: [(&str, &str, i64); 10] = [
    ("x_10", "y_10", 1),
    ("x_11", "y_11", 2),
    ("x_010", "y_010", 2),
    ("x_010", "y_110", 1),
    ("x_011", "y_101", 2),
    ("x_011", "y_011", 3),
    ("x_110", "y_110", 3),
    ("x_110", "y_011", 1),
    ("x_101", "y_010", 5),
    ("x_101", "y_101", 3),
];

const H10_DELETED: [&str; 4] = ["x_100", "x_111", "y_100", "y_111"];

/// The 22-vertex voltage graph whose lifts are girth-10 semicubic graphs
/// of order 20m+2 (girth 10 for m >= 6): T_10 with four leaves removed
/// and ten labeled arcs added.
pub fn build_h10() -> VoltageGraph {
    let mut a = tree_t4t2_assembly(2);
    a.remove_vertices(&H10_DELETED);
    for (tail, head, voltage) in H10_ARCS {
        a.arc(tail, head, voltage);
    }
    a.build("H10")
}

/// Leaf arcs of G12 into the Y tree.
const G12_Y_ARCS: [(&str, &str, i64); 12] = [
    ("x_0100", "y_010", 1),
    ("x_0101", "y_011", 2),
    ("x_0110", "y_100", 1),
    ("x_0111", "y_101", 2),
    ("x_1000", "y_010", 2),
    ("x_1001", "y_011", 1),
    ("x_1010", "y_110", 1),
    ("x_1011", "y_111", 2),
    ("x_1100", "y_100", 2),
    ("x_1101", "y_101", 1),
    ("x_1110", "y_110", 3),
    ("x_1111", "y_111", -1),
];

/// Leaf arcs of G12 into the Z tree.
const G12_Z_ARCS: [(&str, &str, i64); 12] = [
    ("x_0100", "z_110", 2),
    ("x_0101", "z_111", 1),
    ("x_0110", "z_100", -1),
    ("x_0111", "z_101", 3),
    ("x_1000", "z_010", -1),
    ("x_1001", "z_011", 3),
    ("x_1010", "z_100", 1),
    ("x_1011", "z_101", -1),
    ("x_1100", "z_010", -3),
    ("x_1101", "z_011", -2),
    ("x_1110", "z_110", -1),
    ("x_1111", "z_111", 2),
];

/// The 52-vertex voltage graph whose lifts are girth-12 semicubic graphs
/// of order 49m+3 (girth 12 for m >= 9): T_12 plus 24 labeled arcs, one
/// into Y and one into Z per X' leaf.
pub fn build_g12() -> VoltageGraph {
    let mut a = tree_t4t_assembly(3);
    for (tail, head, voltage) in G12_Y_ARCS {
        a.arc(tail, head, voltage);
    }
    for (tail, head, voltage) in G12_Z_ARCS {
        a.arc(tail, head, voltage);
    }
    a.build("G12")
}

const H12_DELETED: [&str; 8] = [
    "x_1000", "x_1001", "x_1100", "x_1101", "y_100", "y_111", "z_100", "z_111",
];

/// H12 arcs from the interior vertices freed by the leaf deletion.
const H12_INNER_ARCS: [(&str, &str, i64); 4] = [
    ("x_100", "y_10", 1),
    ("x_100", "z_10", -1),
    ("x_110", "y_11", -1),
    ("x_110", "z_11", 1),
];

/// H12 leaf arcs into Y.
const H12_Y_ARCS: [(&str, &str, i64); 8] = [
    ("x_0100", "y_010", 2),
    ("x_0101", "y_011", 1),
    ("x_0110", "y_101", -1),
    ("x_0111", "y_110", 1),
    ("x_1010", "y_110", -2),
    ("x_1011", "y_101", -3),
    ("x_1110", "y_011", 2),
    ("x_1111", "y_010", 1),
];

/// H12 leaf arcs into Z; the voltage of arc (x_0111, z_011) is the
/// parameter `v` (see [`DEFAULT_H12_V`]).
const H12_Z_ARCS: [(&str, &str, i64); 8] = [
    ("x_0100", "z_101", 1),
    ("x_0101", "z_110", -2),
    ("x_0110", "z_010", 1),
    ("x_0111", "z_011", DEFAULT_H12_V),
    ("x_1010", "z_010", 2),
    ("x_1011", "z_011", -6),
    ("x_1110", "z_101", -2),
    ("x_1111", "z_110", 2),
];

/// The 44-vertex voltage graph whose lifts are girth-12 semicubic graphs
/// of order 41m+3 (girth 12 for m >= 10): T_12 minus eight leaves, plus
/// four arcs from the freed interior vertices and sixteen leaf arcs.
pub fn build_h12(v: Option<i64>) -> VoltageGraph {
    let v = v.unwrap_or(DEFAULT_H12_V);
    let mut a = tree_t4t_assembly(3);
    a.remove_vertices(&H12_DELETED);
    for (tail, head, voltage) in H12_INNER_ARCS {
        a.arc(tail, head, voltage);
    }
    for (tail, head, voltage) in H12_Y_ARCS {
        a.arc(tail, head, voltage);
    }
    for (tail, head, voltage) in H12_Z_ARCS {
        let voltage = if (tail, head) == ("x_0111", "z_011") {
            v
        } else {
            voltage
        };
        a.arc(tail, head, voltage);
    }
    a.build(&format!("H12(v={v})"))
}

/// K_{3,3}, the unique (3,4)-cage.
pub fn build_k33() -> SimpleGraph {
    let labels: Vec<String> = ["a0", "a1", "a2", "b0", "b1", "b2"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    let mut edges = Vec::new();
    for i in 0..3 {
        for j in 3..6 {
            edges.push((i, j));
        }
    }
    SimpleGraph::from_edges(labels, &edges).expect("K33 is simple")
}
