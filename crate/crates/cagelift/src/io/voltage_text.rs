//! Line-based voltage-graph text format.
//!
//! ```text
//! # optional description
//! vertex x* pinned
//! vertex x
//! arc x* x 0
//! ```
//!
//! Declaration order defines vertex and arc indices. `#` starts a
//! comment; a leading comment block is read back as the description, so
//! serialize -> parse -> serialize is byte-identical. Names ending in
//! `*` are exactly the pinned vertices, checked at parse time.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use crate::voltage::VoltageGraph;

#[derive(Debug, PartialEq, Eq)]
pub enum VgParseErrorKind {
    UnknownDirective(String),
    MissingField(&'static str),
    TrailingField(String),
    DuplicateName(String),
    UnknownVertex(String),
    BadVoltage(String),
    PinnedMarkerMismatch { name: String, keyword: bool },
    PinnedToPinnedArc { tail: String, head: String },
    NonzeroVoltageAtPinned { tail: String, head: String },
}

#[derive(Error, Debug, PartialEq, Eq)]
pub struct VgParseError {
    pub line: usize,
    pub kind: VgParseErrorKind,
}

impl fmt::Display for VgParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use VgParseErrorKind::*;
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            UnknownDirective(d) => write!(f, "unknown directive {d:?}"),
            MissingField(what) => write!(f, "missing {what}"),
            TrailingField(t) => write!(f, "unexpected trailing field {t:?}"),
            DuplicateName(n) => write!(f, "duplicate vertex name {n:?}"),
            UnknownVertex(n) => write!(f, "unknown vertex {n:?}"),
            BadVoltage(v) => write!(f, "invalid voltage {v:?}"),
            PinnedMarkerMismatch { name, keyword } => {
                if *keyword {
                    write!(f, "vertex {name:?} declared pinned but does not end in '*'")
                } else {
                    write!(
                        f,
                        "vertex {name:?} ends in '*' but lacks the pinned keyword"
                    )
                }
            }
            PinnedToPinnedArc { tail, head } => {
                write!(f, "arc {tail:?} -> {head:?} joins two pinned vertices")
            }
            NonzeroVoltageAtPinned { tail, head } => {
                write!(
                    f,
                    "arc {tail:?} -> {head:?} touches a pinned vertex; voltage must be 0"
                )
            }
        }
    }
}

fn err(line: usize, kind: VgParseErrorKind) -> VgParseError {
    VgParseError { line, kind }
}

pub fn read_voltage_graph(text: &str) -> Result<VoltageGraph, VgParseError> {
    let mut vertices: Vec<(String, bool)> = Vec::new();
    let mut arcs: Vec<(String, String, i64)> = Vec::new();
    let mut pinned: HashMap<String, bool> = HashMap::new();
    let mut description_lines: Vec<String> = Vec::new();
    let mut saw_directive = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        if let Some(comment) = raw.trim_start().strip_prefix('#') {
            if !saw_directive {
                description_lines.push(comment.strip_prefix(' ').unwrap_or(comment).to_owned());
            }
            continue;
        }
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        let mut fields = line.split_whitespace();
        let Some(directive) = fields.next() else {
            continue;
        };
        saw_directive = true;
        match directive {
            "vertex" => {
                let name = fields
                    .next()
                    .ok_or_else(|| err(line_no, VgParseErrorKind::MissingField("vertex name")))?
                    .to_owned();
                let keyword = match fields.next() {
                    None => false,
                    Some("pinned") => true,
                    Some(other) => {
                        return Err(err(
                            line_no,
                            VgParseErrorKind::TrailingField(other.to_owned()),
                        ))
                    }
                };
                if let Some(extra) = fields.next() {
                    return Err(err(
                        line_no,
                        VgParseErrorKind::TrailingField(extra.to_owned()),
                    ));
                }
                if name.ends_with('*') != keyword {
                    return Err(err(
                        line_no,
                        VgParseErrorKind::PinnedMarkerMismatch { name, keyword },
                    ));
                }
                if pinned.insert(name.clone(), keyword).is_some() {
                    return Err(err(line_no, VgParseErrorKind::DuplicateName(name)));
                }
                vertices.push((name, keyword));
            }
            "arc" => {
                let tail = fields
                    .next()
                    .ok_or_else(|| err(line_no, VgParseErrorKind::MissingField("arc tail")))?
                    .to_owned();
                let head = fields
                    .next()
                    .ok_or_else(|| err(line_no, VgParseErrorKind::MissingField("arc head")))?
                    .to_owned();
                let voltage = fields
                    .next()
                    .ok_or_else(|| err(line_no, VgParseErrorKind::MissingField("arc voltage")))?;
                if let Some(extra) = fields.next() {
                    return Err(err(
                        line_no,
                        VgParseErrorKind::TrailingField(extra.to_owned()),
                    ));
                }
                let voltage: i64 = voltage
                    .parse()
                    .map_err(|_| err(line_no, VgParseErrorKind::BadVoltage(voltage.to_owned())))?;
                let tail_pinned = *pinned
                    .get(&tail)
                    .ok_or_else(|| err(line_no, VgParseErrorKind::UnknownVertex(tail.clone())))?;
                let head_pinned = *pinned
                    .get(&head)
                    .ok_or_else(|| err(line_no, VgParseErrorKind::UnknownVertex(head.clone())))?;
                if tail_pinned && head_pinned {
                    return Err(err(
                        line_no,
                        VgParseErrorKind::PinnedToPinnedArc { tail, head },
                    ));
                }
                if (tail_pinned || head_pinned) && voltage != 0 {
                    return Err(err(
                        line_no,
                        VgParseErrorKind::NonzeroVoltageAtPinned { tail, head },
                    ));
                }
                arcs.push((tail, head, voltage));
            }
            other => {
                return Err(err(
                    line_no,
                    VgParseErrorKind::UnknownDirective(other.to_owned()),
                ))
            }
        }
    }

    let vertex_refs: Vec<(&str, bool)> = vertices.iter().map(|(n, p)| (n.as_str(), *p)).collect();
    let arc_refs: Vec<(&str, &str, i64)> = arcs
        .iter()
        .map(|(t, h, v)| (t.as_str(), h.as_str(), *v))
        .collect();
    let graph = VoltageGraph::new(&vertex_refs, &arc_refs)
        .expect("per-line validation already covers constructor errors");
    Ok(graph.with_description(description_lines.join("\n")))
}

/// Serialize deterministically: description comments first, then vertices
/// and arcs in declaration order.
pub fn write_voltage_graph(g: &VoltageGraph) -> String {
    let mut out = String::new();
    if !g.description().is_empty() {
        for line in g.description().lines() {
            out.push_str("# ");
            out.push_str(line);
            out.push('\n');
        }
    }
    for v in g.vertices() {
        out.push_str("vertex ");
        out.push_str(g.name(v));
        if g.is_pinned(v) {
            out.push_str(" pinned");
        }
        out.push('\n');
    }
    for a in g.arcs() {
        out.push_str(&format!(
            "arc {} {} {}\n",
            g.name(a.tail),
            g.name(a.head),
            a.voltage
        ));
    }
    out
}
