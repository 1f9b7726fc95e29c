//! Voltage graphs over Z_m with pinned vertices, and their lifts.
//!
//! A voltage graph is a directed multigraph whose arcs carry integer
//! voltages. The lift at modulus m replaces every ordinary vertex by m
//! fiber copies `v^0..v^{m-1}` and every arc `(v, w, a)` by the edges
//! `{v^i, w^{(i+a) mod m}}`. A *pinned* vertex is special: it stays a
//! single vertex in the lift and is joined to every fiber copy of its
//! neighbor, so its lift degree is m times its degree here.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Index of a vertex inside its owning [`VoltageGraph`].
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub usize);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Direction of travel along an arc.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    /// tail -> head, adding the voltage.
    Forward,
    /// head -> tail, subtracting the voltage.
    Backward,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Forward => Dir::Backward,
            Dir::Backward => Dir::Forward,
        }
    }
}

/// A directed arc with an integer voltage, interpreted mod m at lift time.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Arc {
    pub tail: VertexId,
    pub head: VertexId,
    pub voltage: i64,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum VoltageError {
    #[error("duplicate vertex name {0:?}")]
    DuplicateName(String),
    #[error("arc endpoint {0:?} is not a declared vertex")]
    UnknownEndpoint(String),
    #[error("arc {tail:?} -> {head:?} joins two pinned vertices")]
    PinnedToPinnedArc { tail: String, head: String },
    #[error("arc {tail:?} -> {head:?} touches a pinned vertex but has voltage {voltage}")]
    NonzeroVoltageAtPinned {
        tail: String,
        head: String,
        voltage: i64,
    },
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum LiftError {
    /// Two distinct arcs induce the same undirected edge at this modulus
    /// (or a single loop arc revisits an edge). The lift would be a
    /// multigraph, which corrupts girth accounting, so it is rejected.
    #[error("lift collision at m={m}: arcs #{first} and #{second} induce the same edge")]
    Collision {
        m: usize,
        first: usize,
        second: usize,
    },
    /// An arc induces a self-loop: a loop whose voltage is 0 mod m.
    #[error("lift self-loop at m={m}: arc #{arc} has voltage 0 mod m on a loop")]
    SelfLoop { m: usize, arc: usize },
}

/// Immutable directed multigraph with voltages and pinned flags.
///
/// Arcs touching a pinned vertex always carry voltage 0 (the group action
/// is undefined there); arcs joining two pinned vertices are rejected.
#[derive(Clone, Debug)]
pub struct VoltageGraph {
    names: Vec<String>,
    pinned: Vec<bool>,
    arcs: Vec<Arc>,
    description: String,
    /// Per vertex: the (arc index, direction) moves leaving it.
    moves: Vec<Vec<(usize, Dir)>>,
}

impl VoltageGraph {
    /// Build a validated voltage graph from named vertices and arcs.
    pub fn new<S: AsRef<str>>(
        vertices: &[(S, bool)],
        arcs: &[(S, S, i64)],
    ) -> Result<Self, VoltageError> {
        let mut names = Vec::with_capacity(vertices.len());
        let mut pinned = Vec::with_capacity(vertices.len());
        let mut index = HashMap::new();
        for (name, p) in vertices {
            let name = name.as_ref().to_owned();
            if index.insert(name.clone(), names.len()).is_some() {
                return Err(VoltageError::DuplicateName(name));
            }
            names.push(name);
            pinned.push(*p);
        }
        let mut out = Vec::with_capacity(arcs.len());
        for (tail, head, voltage) in arcs {
            let (tail, head) = (tail.as_ref(), head.as_ref());
            let t = *index
                .get(tail)
                .ok_or_else(|| VoltageError::UnknownEndpoint(tail.to_owned()))?;
            let h = *index
                .get(head)
                .ok_or_else(|| VoltageError::UnknownEndpoint(head.to_owned()))?;
            if pinned[t] && pinned[h] {
                return Err(VoltageError::PinnedToPinnedArc {
                    tail: tail.to_owned(),
                    head: head.to_owned(),
                });
            }
            if (pinned[t] || pinned[h]) && *voltage != 0 {
                return Err(VoltageError::NonzeroVoltageAtPinned {
                    tail: tail.to_owned(),
                    head: head.to_owned(),
                    voltage: *voltage,
                });
            }
            out.push(Arc {
                tail: VertexId(t),
                head: VertexId(h),
                voltage: *voltage,
            });
        }
        let mut moves = vec![Vec::new(); names.len()];
        for (i, a) in out.iter().enumerate() {
            moves[a.tail.0].push((i, Dir::Forward));
            moves[a.head.0].push((i, Dir::Backward));
        }
        Ok(VoltageGraph {
            names,
            pinned,
            arcs: out,
            description: String::new(),
            moves,
        })
    }

    pub fn with_description(mut self, description: impl Into<String>) -> Self {
        self.description = description.into();
        self
    }

    pub fn description(&self) -> &str {
        &self.description
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn unpinned_count(&self) -> usize {
        self.pinned.iter().filter(|p| !**p).count()
    }

    pub fn pinned_count(&self) -> usize {
        self.pinned.iter().filter(|p| **p).count()
    }

    pub fn is_pinned(&self, v: VertexId) -> bool {
        self.pinned[v.0]
    }

    pub fn name(&self, v: VertexId) -> &str {
        &self.names[v.0]
    }

    pub fn vertex_by_name(&self, name: &str) -> Option<VertexId> {
        self.names.iter().position(|n| n == name).map(VertexId)
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        (0..self.names.len()).map(VertexId)
    }

    pub fn pinned_vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        self.vertices().filter(|v| self.is_pinned(*v))
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    pub fn arc(&self, i: usize) -> Arc {
        self.arcs[i]
    }

    /// Moves leaving `v`: each incident arc with the direction that departs from `v`.
    /// Loops contribute both directions.
    pub fn moves(&self, v: VertexId) -> &[(usize, Dir)] {
        &self.moves[v.0]
    }

    /// Undirected degree: number of arc endpoints at `v` (loops count twice).
    pub fn degree(&self, v: VertexId) -> usize {
        self.moves[v.0].len()
    }

    /// Endpoint reached by traversing arc `i` in direction `dir`.
    pub fn step_target(&self, i: usize, dir: Dir) -> VertexId {
        match dir {
            Dir::Forward => self.arcs[i].head,
            Dir::Backward => self.arcs[i].tail,
        }
    }

    /// Endpoint a step in direction `dir` departs from.
    pub fn step_source(&self, i: usize, dir: Dir) -> VertexId {
        match dir {
            Dir::Forward => self.arcs[i].tail,
            Dir::Backward => self.arcs[i].head,
        }
    }

    /// Signed voltage contributed by traversing arc `i` in direction `dir`.
    pub fn step_voltage(&self, i: usize, dir: Dir) -> i64 {
        match dir {
            Dir::Forward => self.arcs[i].voltage,
            Dir::Backward => -self.arcs[i].voltage,
        }
    }

    /// Fiber layout of the lift at modulus `m`.
    pub fn lift_layout(&self, m: usize) -> FiberMap {
        assert!(m >= 1, "modulus must be at least 1");
        let mut offsets = Vec::with_capacity(self.names.len());
        let mut total = 0;
        for p in &self.pinned {
            offsets.push(total);
            total += if *p { 1 } else { m };
        }
        FiberMap {
            offsets,
            pinned: self.pinned.clone(),
            m,
            total,
        }
    }

    /// The derived graph: Z_m lift with pinned vertices kept single.
    pub fn lift(&self, m: usize) -> Result<SimpleGraph, LiftError> {
        Ok(self.lift_with_map(m)?.0)
    }

    /// Lift plus the fiber indexing used to build it.
    pub fn lift_with_map(&self, m: usize) -> Result<(SimpleGraph, FiberMap), LiftError> {
        let map = self.lift_layout(m);
        let mut labels = vec![String::new(); map.total];
        for v in self.vertices() {
            if self.is_pinned(v) {
                labels[map.index(v, 0)] = self.name(v).to_owned();
            } else {
                for i in 0..m {
                    labels[map.index(v, i)] = format!("{}^{}", self.name(v), i);
                }
            }
        }
        let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
        let mut edges = Vec::new();
        let mut push = |u: usize, w: usize, arc: usize| -> Result<(), LiftError> {
            if u == w {
                return Err(LiftError::SelfLoop { m, arc });
            }
            let key = (u.min(w), u.max(w));
            if let Some(prev) = seen.insert(key, arc) {
                return Err(LiftError::Collision {
                    m,
                    first: prev,
                    second: arc,
                });
            }
            edges.push(key);
            Ok(())
        };
        for (i, a) in self.arcs.iter().enumerate() {
            match (self.is_pinned(a.tail), self.is_pinned(a.head)) {
                (false, false) => {
                    for j in 0..m {
                        let u = map.index(a.tail, j);
                        let w = map.index(a.head, map.offset_fiber(j, a.voltage));
                        push(u, w, i)?;
                    }
                }
                (true, false) => {
                    let p = map.index(a.tail, 0);
                    for j in 0..m {
                        push(p, map.index(a.head, j), i)?;
                    }
                }
                (false, true) => {
                    let p = map.index(a.head, 0);
                    for j in 0..m {
                        push(p, map.index(a.tail, j), i)?;
                    }
                }
                (true, true) => unreachable!("pinned-to-pinned arcs are rejected at construction"),
            }
        }
        let graph = SimpleGraph::from_edges(labels, &edges)
            .expect("collision check guarantees a simple graph");
        Ok((graph, map))
    }
}

/// Maps (voltage-graph vertex, fiber index) to lift vertex indices.
#[derive(Clone, Debug)]
pub struct FiberMap {
    offsets: Vec<usize>,
    pinned: Vec<bool>,
    m: usize,
    total: usize,
}

impl FiberMap {
    /// Lift index of `v^fiber`; for pinned vertices the fiber is ignored.
    pub fn index(&self, v: VertexId, fiber: usize) -> usize {
        if self.pinned[v.0] {
            self.offsets[v.0]
        } else {
            self.offsets[v.0] + fiber % self.m
        }
    }

    pub fn modulus(&self) -> usize {
        self.m
    }

    pub fn lift_order(&self) -> usize {
        self.total
    }

    /// Fiber reached from fiber `j` by a step of signed voltage `a`.
    pub fn offset_fiber(&self, j: usize, a: i64) -> usize {
        (j as i64 + a).rem_euclid(self.m as i64) as usize
    }
}

/// A vertex whose degree breaks the semicubic skeleton convention.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeViolation {
    pub vertex: VertexId,
    pub name: String,
    pub degree: usize,
    pub expected: usize,
}

/// Report from [`validate_semicubic_skeleton`].
#[derive(Clone, Debug, Default)]
pub struct SkeletonReport {
    pub violations: Vec<DegreeViolation>,
}

impl SkeletonReport {
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for SkeletonReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "semicubic skeleton: ok");
        }
        writeln!(
            f,
            "semicubic skeleton: {} violation(s)",
            self.violations.len()
        )?;
        for v in &self.violations {
            writeln!(
                f,
                "  {} has degree {}, expected {}",
                v.name, v.degree, v.expected
            )?;
        }
        Ok(())
    }
}

/// Check the degree convention of the constructions: every pinned vertex
/// has degree 1 and every other vertex degree 3.
pub fn validate_semicubic_skeleton(g: &VoltageGraph) -> SkeletonReport {
    let mut violations = Vec::new();
    for v in g.vertices() {
        let expected = if g.is_pinned(v) { 1 } else { 3 };
        let degree = g.degree(v);
        if degree != expected {
            violations.push(DegreeViolation {
                vertex: v,
                name: g.name(v).to_owned(),
                degree,
                expected,
            });
        }
    }
    SkeletonReport { violations }
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum GraphError {
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(usize, usize),
    #[error("edge endpoint {0} out of range (n={1})")]
    OutOfRange(usize, usize),
}

/// Immutable undirected simple graph with per-vertex labels and sorted
/// adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl SimpleGraph {
    pub fn from_edges(labels: Vec<String>, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let n = labels.len();
        let mut adj = vec![Vec::new(); n];
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (v, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::DuplicateEdge(v.min(w[0]), v.max(w[0])));
            }
        }
        Ok(SimpleGraph {
            labels,
            adj,
            edge_count: edges.len(),
        })
    }

    /// Graph with `n` vertices labeled by their indices.
    pub fn from_unlabeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        Self::from_edges((0..n).map(|i| i.to_string()).collect(), edges)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn size(&self) -> usize {
        self.edge_count
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn vertex_by_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// All edges as (u, v) with u < v, in sorted order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count);
        for u in 0..self.n() {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn is_regular(&self, k: usize) -> bool {
        (0..self.n()).all(|v| self.degree(v) == k)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::analysis::{girth, Length};

    #[test]
    fn single_vertex_no_arcs() {
        let g = VoltageGraph::new(&[("v", false)], &[]).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.arcs().len(), 0);
        let lifted = g.lift(5).unwrap();
        assert_eq!(lifted.n(), 5);
        assert_eq!(lifted.size(), 0);
    }

    #[test]
    fn two_vertex_heawood_voltage_graph() {
        // Two vertices joined by three arcs with voltages 0, -1, 2: the
        // Z_7 lift is the Heawood graph.
        let g = VoltageGraph::new(
            &[("v", false), ("w", false)],
            &[("v", "w", 0), ("v", "w", -1), ("v", "w", 2)],
        )
        .unwrap();
        let lifted = g.lift(7).unwrap();
        assert_eq!(lifted.n(), 14);
        assert!(lifted.is_regular(3));
        assert_eq!(girth(&lifted), Length::Finite(6));
    }

    #[test]
    fn pinned_to_pinned_rejected() {
        let err = VoltageGraph::new(&[("x*", true), ("y*", true)], &[("x*", "y*", 0)]).unwrap_err();
        assert!(matches!(err, VoltageError::PinnedToPinnedArc { .. }));
    }

    #[test]
    fn nonzero_voltage_at_pinned_rejected() {
        let err = VoltageGraph::new(&[("x*", true), ("w", false)], &[("x*", "w", 2)]).unwrap_err();
        assert!(matches!(err, VoltageError::NonzeroVoltageAtPinned { .. }));
    }

    #[test]
    fn duplicate_name_rejected() {
        let err = VoltageGraph::new(&[("v", false), ("v", false)], &[]).unwrap_err();
        assert_eq!(err, VoltageError::DuplicateName("v".into()));
    }

    #[test]
    fn unknown_endpoint_rejected() {
        let err = VoltageGraph::new(&[("v", false)], &[("v", "w", 1)]).unwrap_err();
        assert_eq!(err, VoltageError::UnknownEndpoint("w".into()));
    }

    #[test]
    fn duplicate_arc_collides() {
        let g = VoltageGraph::new(
            &[("v", false), ("w", false)],
            &[("v", "w", 1), ("v", "w", 1)],
        )
        .unwrap();
        let err = g.lift(5).unwrap_err();
        assert_eq!(
            err,
            LiftError::Collision {
                m: 5,
                first: 0,
                second: 1
            }
        );
    }

    #[test]
    fn opposite_arcs_collide_when_sums_cancel() {
        let g = VoltageGraph::new(
            &[("v", false), ("w", false)],
            &[("v", "w", 2), ("w", "v", -2)],
        )
        .unwrap();
        assert!(g.lift(5).is_err());
        // At m=3 the voltages no longer cancel pairwise onto the same edge.
        let g2 = VoltageGraph::new(
            &[("v", false), ("w", false)],
            &[("v", "w", 2), ("w", "v", 2)],
        )
        .unwrap();
        assert!(g2.lift(5).is_ok());
    }

    #[test]
    fn loop_with_zero_voltage_self_loops() {
        let g = VoltageGraph::new(&[("v", false)], &[("v", "v", 0)]).unwrap();
        assert_eq!(g.lift(3).unwrap_err(), LiftError::SelfLoop { m: 3, arc: 0 });
        // Nonzero loop voltage lifts to a cycle through the fiber.
        let g2 = VoltageGraph::new(&[("v", false)], &[("v", "v", 1)]).unwrap();
        let lifted = g2.lift(5).unwrap();
        assert_eq!(lifted.n(), 5);
        assert_eq!(girth(&lifted), Length::Finite(5));
    }

    #[test]
    fn pinned_vertex_degree_is_m() {
        let g = VoltageGraph::new(&[("x*", true), ("w", false)], &[("x*", "w", 0)]).unwrap();
        let (lifted, map) = g.lift_with_map(6).unwrap();
        assert_eq!(lifted.n(), 7);
        let p = map.index(VertexId(0), 0);
        assert_eq!(lifted.degree(p), 6);
        assert_eq!(lifted.label(p), "x*");
    }

    #[test]
    fn lift_order_formula() {
        let g = VoltageGraph::new(
            &[("x*", true), ("x", false), ("y", false)],
            &[("x*", "x", 0), ("x", "y", 1), ("x", "y", 2)],
        )
        .unwrap();
        for m in 2..9 {
            let lifted = g.lift(m).unwrap();
            assert_eq!(lifted.n(), 2 * m + 1);
        }
    }

    #[test]
    fn lift_at_one_is_underlying_graph() {
        let g = VoltageGraph::new(
            &[("a", false), ("b", false), ("c", false)],
            &[("a", "b", 3), ("b", "c", -1), ("c", "a", 0)],
        )
        .unwrap();
        let lifted = g.lift(1).unwrap();
        assert_eq!(lifted.n(), 3);
        assert_eq!(lifted.size(), 3);
        assert_eq!(girth(&lifted), Length::Finite(3));
    }

    #[test]
    fn fiber_shift_is_an_automorphism() {
        let g = VoltageGraph::new(
            &[("x*", true), ("x", false), ("y", false)],
            &[("x*", "x", 0), ("x", "y", 0), ("x", "y", 2)],
        )
        .unwrap();
        let m = 5;
        let (lifted, map) = g.lift_with_map(m).unwrap();
        let mut sigma = vec![0; lifted.n()];
        for v in g.vertices() {
            if g.is_pinned(v) {
                let i = map.index(v, 0);
                sigma[i] = i;
            } else {
                for j in 0..m {
                    sigma[map.index(v, j)] = map.index(v, (j + 1) % m);
                }
            }
        }
        for (u, w) in lifted.edges() {
            assert!(lifted.has_edge(sigma[u], sigma[w]));
        }
    }

    #[test]
    fn degree_transfer() {
        let g = VoltageGraph::new(
            &[("x*", true), ("x", false), ("y", false)],
            &[("x*", "x", 0), ("x", "y", 1), ("x", "y", 2)],
        )
        .unwrap();
        let m = 4;
        let (lifted, map) = g.lift_with_map(m).unwrap();
        for v in g.vertices() {
            if g.is_pinned(v) {
                assert_eq!(lifted.degree(map.index(v, 0)), m * g.degree(v));
            } else {
                for j in 0..m {
                    assert_eq!(lifted.degree(map.index(v, j)), g.degree(v));
                }
            }
        }
    }

    #[test]
    fn simple_graph_rejects_bad_edges() {
        assert_eq!(
            SimpleGraph::from_unlabeled_edges(2, &[(0, 0)]).unwrap_err(),
            GraphError::SelfLoop(0)
        );
        assert_eq!(
            SimpleGraph::from_unlabeled_edges(2, &[(0, 1), (1, 0)]).unwrap_err(),
            GraphError::DuplicateEdge(0, 1)
        );
        assert_eq!(
            SimpleGraph::from_unlabeled_edges(2, &[(0, 2)]).unwrap_err(),
            GraphError::OutOfRange(2, 2)
        );
    }
}
