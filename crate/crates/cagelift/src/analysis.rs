//! Brute-force ground truth on simple graphs: girth, bipartiteness,
//! distances, remote pairs, degree histograms.
//!
//! Everything here is exact. Girth runs one BFS per vertex and takes the
//! minimum closing-edge estimate, which is exact over all starts; the
//! largest graphs in this project stay under ~2500 vertices, so exactness
//! is cheap.

use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use crate::voltage::SimpleGraph;

/// A possibly infinite length (girth of a forest, distance across
/// components, diameter of a disconnected graph).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum Length {
    Finite(usize),
    Infinite,
}

impl Length {
    pub fn is_finite(self) -> bool {
        matches!(self, Length::Finite(_))
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(k) => write!(f, "{k}"),
            Length::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Length {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Length::Finite(k) => s.serialize_u64(*k as u64),
            Length::Infinite => s.serialize_str("inf"),
        }
    }
}

fn bfs_distances(g: &SimpleGraph, start: usize) -> Vec<Option<usize>> {
    let mut dist = vec![None; g.n()];
    dist[start] = Some(0);
    let mut queue = std::collections::VecDeque::from([start]);
    while let Some(u) = queue.pop_front() {
        let du = dist[u].unwrap();
        for &w in g.neighbors(u) {
            if dist[w].is_none() {
                dist[w] = Some(du + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

/// Shortest cycle through `start` found by a single BFS: the minimum of
/// dist[u]+dist[w]+1 over edges (u, w) that close a cycle in the BFS tree.
fn shortest_cycle_bound(g: &SimpleGraph, start: usize) -> Option<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut parent = vec![usize::MAX; g.n()];
    dist[start] = 0;
    let mut queue = std::collections::VecDeque::from([start]);
    let mut best = None;
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                parent[w] = u;
                queue.push_back(w);
            } else if parent[u] != w {
                let candidate = dist[u] + dist[w] + 1;
                if best.is_none_or(|b| candidate < b) {
                    best = Some(candidate);
                }
            }
        }
    }
    best
}

/// Length of a shortest cycle; `Infinite` for forests. Exact.
pub fn girth(g: &SimpleGraph) -> Length {
    let best = (0..g.n())
        .into_par_iter()
        .filter_map(|v| shortest_cycle_bound(g, v))
        .min();
    match best {
        Some(b) => Length::Finite(b),
        None => Length::Infinite,
    }
}

/// Result of the two-coloring check: a proper coloring, or an odd cycle.
#[derive(Clone, Debug)]
pub enum BipartiteCheck {
    Bipartite { coloring: Vec<u8> },
    OddCycle { cycle: Vec<usize> },
}

impl BipartiteCheck {
    pub fn is_bipartite(&self) -> bool {
        matches!(self, BipartiteCheck::Bipartite { .. })
    }
}

/// BFS two-coloring with an explicit witness either way.
pub fn check_bipartite(g: &SimpleGraph) -> BipartiteCheck {
    let n = g.n();
    let mut color = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if color[root] != u8::MAX {
            continue;
        }
        color[root] = 0;
        let mut queue = std::collections::VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbors(u) {
                if color[w] == u8::MAX {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    queue.push_back(w);
                } else if color[w] == color[u] {
                    return BipartiteCheck::OddCycle {
                        cycle: odd_cycle_witness(&parent, u, w),
                    };
                }
            }
        }
    }
    BipartiteCheck::Bipartite { coloring: color }
}

/// Walk both BFS-tree paths up to the common ancestor and stitch them into
/// the odd cycle closed by edge (u, w).
fn odd_cycle_witness(parent: &[usize], u: usize, w: usize) -> Vec<usize> {
    let path_to_root = |mut v: usize| {
        let mut path = vec![v];
        while parent[v] != usize::MAX {
            v = parent[v];
            path.push(v);
        }
        path
    };
    let pu = path_to_root(u);
    let pw = path_to_root(w);
    // Trim the shared tail after the lowest common ancestor.
    let mut i = pu.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pu[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle = pu[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle
}

pub fn is_bipartite(g: &SimpleGraph) -> bool {
    check_bipartite(g).is_bipartite()
}

/// BFS shortest-path length between two vertices.
pub fn distance(g: &SimpleGraph, u: usize, v: usize) -> Length {
    match bfs_distances(g, u)[v] {
        Some(d) => Length::Finite(d),
        None => Length::Infinite,
    }
}

/// All unordered pairs {u, v} at distance at least `d`, sorted
/// lexicographically. Pairs in different components count as remote.
pub fn remote_pairs(g: &SimpleGraph, d: usize) -> Vec<(usize, usize)> {
    let rows: Vec<Vec<(usize, usize)>> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let dist = bfs_distances(g, u);
            (u + 1..g.n())
                .filter(|&v| dist[v].is_none_or(|dv| dv >= d))
                .map(|v| (u, v))
                .collect()
        })
        .collect();
    rows.into_iter().flatten().collect()
}

/// Exact degree counts.
pub fn degree_histogram(g: &SimpleGraph) -> BTreeMap<usize, usize> {
    let mut hist = BTreeMap::new();
    for v in 0..g.n() {
        *hist.entry(g.degree(v)).or_insert(0) += 1;
    }
    hist
}

/// Max eccentricity; `Infinite` when the graph is disconnected.
pub fn diameter(g: &SimpleGraph) -> Length {
    if g.n() == 0 {
        return Length::Finite(0);
    }
    let per_vertex: Vec<Length> = (0..g.n())
        .into_par_iter()
        .map(|u| {
            let dist = bfs_distances(g, u);
            let mut ecc = 0;
            for d in dist {
                match d {
                    Some(d) => ecc = ecc.max(d),
                    None => return Length::Infinite,
                }
            }
            Length::Finite(ecc)
        })
        .collect();
    per_vertex.into_iter().max().unwrap()
}

/// Summary statistics of a simple graph.
#[derive(Clone, Debug, Serialize)]
pub struct GraphReport {
    pub order: usize,
    pub size: usize,
    pub girth: Length,
    pub bipartite: bool,
    pub degree_histogram: BTreeMap<usize, usize>,
    pub diameter: Length,
}

pub fn analyze(g: &SimpleGraph) -> GraphReport {
    GraphReport {
        order: g.n(),
        size: g.size(),
        girth: girth(g),
        bipartite: is_bipartite(g),
        degree_histogram: degree_histogram(g),
        diameter: diameter(g),
    }
}

impl fmt::Display for GraphReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order={}", self.order)?;
        writeln!(f, "size={}", self.size)?;
        writeln!(f, "girth={}", self.girth)?;
        writeln!(f, "bipartite={}", self.bipartite)?;
        let hist: Vec<String> = self
            .degree_histogram
            .iter()
            .map(|(d, c)| format!("{d}:{c}"))
            .collect();
        writeln!(f, "degrees={}", hist.join(","))?;
        write!(f, "diameter={}", self.diameter)
    }
}
