//! Gluing copies of a cubic girth-g graph at remote vertices to obtain
//! (3,m;g)-graphs, plus the closed-form orders this yields for girths
//! 10, 12 and 14 from the known smallest cubic graphs.
//!
//! Remote vertices are vertices at distance at least g/2. Identifying k
//! copies of the base at such a pair keeps every cycle at length >= g,
//! because a cycle through both glue points splits into two arcs of
//! length >= g/2 inside single copies. Writing m = 3k+t, the three
//! residues get slightly different treatments: t=0 glues k intact
//! copies; t=2 first deletes an edge x1y1 from one copy and glues at its
//! endpoints; t=1 additionally hangs fresh vertices off x1 and y1 and
//! glues at those.

use num_rational::Rational64;
use thiserror::Error;

use crate::analysis::{self, Length};
use crate::voltage::SimpleGraph;

/// Inputs for one gluing: the cubic base, its girth, and the target
/// degree m. The remote pair defaults to the lexicographically smallest
/// pair at distance >= g/2.
#[derive(Clone, Debug)]
pub struct IdentifySpec<'a> {
    pub base: &'a SimpleGraph,
    pub girth: usize,
    pub m: usize,
    pub remote_pair: Option<(usize, usize)>,
}

#[derive(Error, Debug, PartialEq, Eq)]
pub enum IdentifyError {
    #[error("base graph is not 3-regular (vertex {vertex} has degree {degree})")]
    NotCubic { vertex: usize, degree: usize },
    #[error("base graph has girth {found} but {expected} was declared")]
    WrongGirth { expected: usize, found: String },
    #[error("no vertex pair at distance >= {min_distance}")]
    NoRemotePair { min_distance: usize },
    #[error("target degree m={m} must be at least 3")]
    BadM { m: usize },
}

/// Glue copies of the base at remote vertices, producing a graph of
/// girth g whose degrees are exactly 3 and m. Copy i's vertices keep
/// their labels prefixed with `c{i}:`; the two glue vertices are labeled
/// `x` and `y`.
pub fn identify(spec: &IdentifySpec) -> Result<SimpleGraph, IdentifyError> {
    let base = spec.base;
    let g = spec.girth;
    let m = spec.m;
    if m < 3 {
        return Err(IdentifyError::BadM { m });
    }
    for v in 0..base.n() {
        if base.degree(v) != 3 {
            return Err(IdentifyError::NotCubic {
                vertex: v,
                degree: base.degree(v),
            });
        }
    }
    match analysis::girth(base) {
        Length::Finite(found) if found == g => {}
        found => {
            return Err(IdentifyError::WrongGirth {
                expected: g,
                found: found.to_string(),
            })
        }
    }
    let min_distance = g / 2;
    let remote = match spec.remote_pair {
        Some((u, v)) => {
            let (u, v) = (u.min(v), u.max(v));
            let far = match analysis::distance(base, u, v) {
                Length::Finite(d) => d >= min_distance,
                Length::Infinite => true,
            };
            if u == v || !far {
                return Err(IdentifyError::NoRemotePair { min_distance });
            }
            (u, v)
        }
        None => *analysis::remote_pairs(base, min_distance)
            .first()
            .ok_or(IdentifyError::NoRemotePair { min_distance })?,
    };

    let k = m / 3;
    let t = m % 3;
    Ok(match t {
        0 => glue(base, &vec![CopyKind::Intact(remote); k]),
        2 => {
            let deleted = lexicographic_edge(base);
            let mut copies = vec![CopyKind::EdgeDeleted(deleted)];
            copies.extend(vec![CopyKind::Intact(remote); k]);
            glue(base, &copies)
        }
        _ => {
            let deleted = lexicographic_edge(base);
            let mut copies = vec![CopyKind::Subdivided(deleted)];
            copies.extend(vec![CopyKind::Intact(remote); k]);
            glue(base, &copies)
        }
    })
}

#[derive(Clone, Copy, Debug)]
enum CopyKind {
    /// Glue at this remote pair.
    Intact((usize, usize)),
    /// Delete this edge and glue at its endpoints.
    EdgeDeleted((usize, usize)),
    /// Delete this edge; the glue vertices are fresh neighbors attached
    /// to its endpoints.
    Subdivided((usize, usize)),
}

fn lexicographic_edge(base: &SimpleGraph) -> (usize, usize) {
    *base.edges().first().expect("cubic graphs have edges")
}

fn glue(base: &SimpleGraph, copies: &[CopyKind]) -> SimpleGraph {
    let mut labels = vec!["x".to_owned(), "y".to_owned()];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, kind) in copies.iter().enumerate() {
        let copy = i + 1;
        // Vertices glued onto x and y in this copy, if any.
        let (gx, gy, deleted) = match *kind {
            CopyKind::Intact(pair) => (Some(pair.0), Some(pair.1), None),
            CopyKind::EdgeDeleted(e) => (Some(e.0), Some(e.1), Some(e)),
            CopyKind::Subdivided(e) => (None, None, Some(e)),
        };
        let index_of: Vec<usize> = (0..base.n())
            .map(|v| {
                if Some(v) == gx {
                    0
                } else if Some(v) == gy {
                    1
                } else {
                    labels.push(format!("c{copy}:{}", base.label(v)));
                    labels.len() - 1
                }
            })
            .collect();
        for (u, v) in base.edges() {
            if deleted == Some((u, v)) {
                continue;
            }
            edges.push((index_of[u], index_of[v]));
        }
        if let CopyKind::Subdivided((e0, e1)) = *kind {
            edges.push((0, index_of[e0]));
            edges.push((1, index_of[e1]));
        }
    }
    SimpleGraph::from_edges(labels, &edges).expect("remote gluing keeps the graph simple")
}

/// Expected order of [`identify`]'s output: k(n-2) plus 2, n+2 or n for
/// m = 3k, 3k+1, 3k+2.
pub fn identify_order(base_order: usize, m: usize) -> usize {
    let k = m / 3;
    k * (base_order - 2)
        + match m % 3 {
            0 => 2,
            1 => base_order + 2,
            _ => base_order,
        }
}

/// Which published order family to evaluate.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CorollaryCase {
    /// Base: the 70-vertex cubic graphs of girth 10.
    Girth10,
    /// Base: the 126-vertex incidence graph of the generalized hexagon.
    Girth12,
    /// Base: the smallest known cubic graph of girth 14, order 348.
    Girth14,
}

impl CorollaryCase {
    pub fn base_order(self) -> usize {
        match self {
            CorollaryCase::Girth10 => 70,
            CorollaryCase::Girth12 => 126,
            CorollaryCase::Girth14 => 348,
        }
    }

    pub fn girth(self) -> usize {
        match self {
            CorollaryCase::Girth10 => 10,
            CorollaryCase::Girth12 => 12,
            CorollaryCase::Girth14 => 14,
        }
    }
}

/// The published order of the glued (3,m;g)-graph for g in {10,12,14},
/// as an exact rational in m (all nine residue formulas).
pub fn corollary_order(case: CorollaryCase, m: usize) -> Rational64 {
    assert!(m >= 3, "orders are stated for m >= 3");
    let m_rat = Rational64::from_integer(m as i64);
    let third = |num: i64| Rational64::new(num, 3);
    match case {
        CorollaryCase::Girth10 => {
            let lead = m_rat * 22 + m_rat * third(2);
            match m % 3 {
                0 => lead + 2,
                1 => lead + 49 + third(1),
                _ => lead + 24 + third(2),
            }
        }
        CorollaryCase::Girth12 => {
            let lead = m_rat * 41 + m_rat * third(1);
            match m % 3 {
                0 => lead + 2,
                1 => lead + 86 + third(2),
                _ => lead + 43 + third(1),
            }
        }
        CorollaryCase::Girth14 => {
            let lead = m_rat * 115 + m_rat * third(1);
            match m % 3 {
                0 => lead + 2,
                1 => lead + 234 + third(2),
                _ => lead + 117 + third(1),
            }
        }
    }
}
