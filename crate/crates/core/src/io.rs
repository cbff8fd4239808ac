//! Line-based instance and orientation files.
//!
//! Instance file, UTF-8: `#` comment; `v NAME` optional pre-declaration;
//! `e U V LABEL` single-label edge; `em U V L1[,L2,...]` multi-label edge;
//! `o U V LABEL` pre-oriented time-edge U->V duplicating an `e` line.
//! Orientation file: `-> U V LABEL` lines. Tokens separated by single
//! spaces; labels decimal.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{
    Dir, GraphBuilder, GraphError, MultiLabelTemporalGraph, Orientation, TemporalGraph, TimeLabel,
};

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Instance {
    Graph(TemporalGraph),
    Multi(MultiLabelTemporalGraph),
    Oriented(TemporalGraph, Orientation),
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseErrorKind {
    #[error("unknown directive {0:?}")]
    UnknownDirective(String),
    #[error("expected {expected} fields after {directive:?}")]
    BadArity { directive: &'static str, expected: usize },
    #[error("bad label {0:?} (decimal 1..=4294967295)")]
    BadLabel(String),
    #[error("{0}")]
    Graph(#[from] GraphError),
    #[error("`o` line without matching `e` line for {0:?} {1:?} with that label")]
    OrphanOrientation(String, String),
    #[error("conflicting orientation for {0:?} {1:?}")]
    ConflictingOrientation(String, String),
    #[error("duplicate orientation for {0:?} {1:?}")]
    DuplicateOrientation(String, String),
    #[error("`o` lines are not supported in multi-label instances")]
    OrientedMulti,
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

fn parse_label(tok: &str, line: usize) -> Result<TimeLabel, ParseError> {
    tok.parse::<u32>()
        .ok()
        .and_then(TimeLabel::new)
        .ok_or_else(|| err(line, ParseErrorKind::BadLabel(tok.to_owned())))
}

pub fn parse_instance(text: &str) -> Result<Instance, ParseError> {
    struct RawEdge {
        u: crate::graph::VertexId,
        v: crate::graph::VertexId,
        labels: Vec<TimeLabel>,
        line: usize,
    }

    let mut names = GraphBuilder::new();
    let mut edges: Vec<RawEdge> = Vec::new();
    let mut any_multi = false;
    // (from, to, label, line) of `o` lines, resolved after all edges exist.
    let mut oriented: Vec<(String, String, TimeLabel, usize)> = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        match toks[0] {
            "v" => {
                if toks.len() != 2 {
                    return Err(err(line, ParseErrorKind::BadArity { directive: "v", expected: 1 }));
                }
                names.add_vertex(toks[1]).map_err(|e| err(line, e.into()))?;
            }
            "e" => {
                if toks.len() != 4 {
                    return Err(err(line, ParseErrorKind::BadArity { directive: "e", expected: 3 }));
                }
                let u = names.intern(toks[1]).map_err(|e| err(line, e.into()))?;
                let v = names.intern(toks[2]).map_err(|e| err(line, e.into()))?;
                let t = parse_label(toks[3], line)?;
                edges.push(RawEdge { u, v, labels: vec![t], line });
            }
            "em" => {
                if toks.len() != 4 {
                    return Err(err(line, ParseErrorKind::BadArity { directive: "em", expected: 3 }));
                }
                let u = names.intern(toks[1]).map_err(|e| err(line, e.into()))?;
                let v = names.intern(toks[2]).map_err(|e| err(line, e.into()))?;
                let labels = toks[3]
                    .split(',')
                    .map(|t| parse_label(t, line))
                    .collect::<Result<Vec<_>, _>>()?;
                any_multi = true;
                edges.push(RawEdge { u, v, labels, line });
            }
            "o" => {
                if toks.len() != 4 {
                    return Err(err(line, ParseErrorKind::BadArity { directive: "o", expected: 3 }));
                }
                let t = parse_label(toks[3], line)?;
                oriented.push((toks[1].to_owned(), toks[2].to_owned(), t, line));
            }
            other => return Err(err(line, ParseErrorKind::UnknownDirective(other.to_owned()))),
        }
    }

    // Rebuild through a fresh builder so duplicate-pair validation reports
    // the offending line.
    let mut b = GraphBuilder::new();
    for v in names.built_names() {
        b.add_vertex(v).expect("names already validated");
    }

    if any_multi {
        if let Some((_, _, _, line)) = oriented.first() {
            return Err(err(*line, ParseErrorKind::OrientedMulti));
        }
        for e in edges {
            b.add_multi_edge(e.u, e.v, e.labels).map_err(|g| err(e.line, g.into()))?;
        }
        return Ok(Instance::Multi(b.build_multi()));
    }

    for e in &edges {
        b.add_edge(e.u, e.v, e.labels[0]).map_err(|g| err(e.line, g.into()))?;
    }

    if oriented.is_empty() {
        return Ok(Instance::Graph(b.build()));
    }

    let mut resolved: Vec<(usize, Dir)> = Vec::new();
    for (from, to, t, line) in &oriented {
        let orphan = || err(*line, ParseErrorKind::OrphanOrientation(from.clone(), to.clone()));
        let fu = b.peek(from).ok_or_else(orphan)?;
        let tv = b.peek(to).ok_or_else(orphan)?;
        let e = b.find_single_edge(fu, tv, *t).ok_or_else(orphan)?;
        let dir = if fu < tv { Dir::Fwd } else { Dir::Rev };
        resolved.push((e, dir));
    }
    let g = b.build();
    let mut f = Orientation::empty(g.m());
    for (idx, &(e, dir)) in resolved.iter().enumerate() {
        let (from, to, _, line) = &oriented[idx];
        match f.get(e) {
            None => f.set(e, dir),
            Some(d) if d == dir => {
                return Err(err(*line, ParseErrorKind::DuplicateOrientation(from.clone(), to.clone())))
            }
            Some(_) => {
                return Err(err(*line, ParseErrorKind::ConflictingOrientation(from.clone(), to.clone())))
            }
        }
    }
    Ok(Instance::Oriented(g, f))
}

/// Serialize with deterministic line order: vertices sorted by name, then
/// edges sorted by (smaller name, larger name), then `o` lines.
pub fn serialize_instance(inst: &Instance) -> String {
    match inst {
        Instance::Graph(g) => serialize_graph(g),
        Instance::Multi(g) => serialize_multi(g),
        Instance::Oriented(g, f) => {
            let mut out = serialize_graph(g);
            let mut lines: Vec<(String, String, TimeLabel)> = Vec::new();
            for e in 0..g.m() {
                if let Some(d) = f.get(e) {
                    let (from, to) = g.edge(e).ends(d);
                    lines.push((g.name(from).to_owned(), g.name(to).to_owned(), g.edge(e).label));
                }
            }
            lines.sort();
            for (from, to, t) in lines {
                out.push_str(&format!("o {} {} {}\n", from, to, t));
            }
            out
        }
    }
}

fn sorted_names<'a>(names: impl Iterator<Item = &'a str>) -> Vec<&'a str> {
    let mut v: Vec<&str> = names.collect();
    v.sort_unstable();
    v
}

pub fn serialize_graph(g: &TemporalGraph) -> String {
    let mut out = String::new();
    for name in sorted_names(g.vertices().map(|v| g.name(v))) {
        out.push_str(&format!("v {}\n", name));
    }
    let mut edges: Vec<(&str, &str, TimeLabel)> = g
        .edges()
        .iter()
        .map(|e| {
            let (a, b) = (g.name(e.u), g.name(e.v));
            if a < b {
                (a, b, e.label)
            } else {
                (b, a, e.label)
            }
        })
        .collect();
    edges.sort();
    for (a, b, t) in edges {
        out.push_str(&format!("e {} {} {}\n", a, b, t));
    }
    out
}

pub fn serialize_multi(g: &MultiLabelTemporalGraph) -> String {
    let mut out = String::new();
    for name in sorted_names(g.vertices().map(|v| g.name(v))) {
        out.push_str(&format!("v {}\n", name));
    }
    let mut edges: Vec<(&str, &str, String)> = g
        .edges()
        .iter()
        .map(|e| {
            let labels = e
                .labels
                .iter()
                .map(|t| t.to_string())
                .collect::<Vec<_>>()
                .join(",");
            let (a, b) = (g.name(e.u), g.name(e.v));
            if a < b {
                (a, b, labels)
            } else {
                (b, a, labels)
            }
        })
        .collect();
    edges.sort();
    for (a, b, labels) in edges {
        out.push_str(&format!("em {} {} {}\n", a, b, labels));
    }
    out
}

/// Parse `-> U V LABEL` lines against an existing graph. The result may be
/// partial; callers needing a proper orientation check coverage themselves.
pub fn parse_orientation(g: &TemporalGraph, text: &str) -> Result<Orientation, ParseError> {
    let mut f = Orientation::empty(g.m());
    let mut index: HashMap<&str, crate::graph::VertexId> = HashMap::new();
    for v in g.vertices() {
        index.insert(g.name(v), v);
    }
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = trimmed.split_whitespace().collect();
        if toks[0] != "->" {
            return Err(err(line, ParseErrorKind::UnknownDirective(toks[0].to_owned())));
        }
        if toks.len() != 4 {
            return Err(err(line, ParseErrorKind::BadArity { directive: "->", expected: 3 }));
        }
        let t = parse_label(toks[3], line)?;
        let orphan = || err(line, ParseErrorKind::OrphanOrientation(toks[1].to_owned(), toks[2].to_owned()));
        let from = *index.get(toks[1]).ok_or_else(orphan)?;
        let to = *index.get(toks[2]).ok_or_else(orphan)?;
        let e = g.edge_between(from, to).filter(|&e| g.label(e) == t).ok_or_else(orphan)?;
        let dir = if from < to { Dir::Fwd } else { Dir::Rev };
        match f.get(e) {
            None => f.set(e, dir),
            Some(d) if d == dir => {
                return Err(err(line, ParseErrorKind::DuplicateOrientation(toks[1].to_owned(), toks[2].to_owned())))
            }
            Some(_) => {
                return Err(err(line, ParseErrorKind::ConflictingOrientation(toks[1].to_owned(), toks[2].to_owned())))
            }
        }
    }
    Ok(f)
}

pub fn serialize_orientation(g: &TemporalGraph, f: &Orientation) -> String {
    let mut lines: Vec<(String, String, TimeLabel)> = Vec::new();
    for e in 0..g.m() {
        if let Some(d) = f.get(e) {
            let (from, to) = g.edge(e).ends(d);
            lines.push((g.name(from).to_owned(), g.name(to).to_owned(), g.edge(e).label));
        }
    }
    lines.sort();
    let mut out = String::new();
    for (from, to, t) in lines {
        out.push_str(&format!("-> {} {} {}\n", from, to, t));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fig1b_triangle() {
        let inst = parse_instance("e u v 5\ne v w 5\ne w u 3").unwrap();
        let g = match inst {
            Instance::Graph(g) => g,
            _ => panic!("expected plain graph"),
        };
        assert_eq!(g.n(), 3);
        assert_eq!(g.m(), 3);
        let (u, w) = (g.vertex("u").unwrap(), g.vertex("w").unwrap());
        assert_eq!(g.label_between(u, w).unwrap().get(), 3);
    }

    #[test]
    fn parses_single_edge() {
        let inst = parse_instance("e u v 1").unwrap();
        assert!(matches!(inst, Instance::Graph(g) if g.m() == 1));
    }

    #[test]
    fn rejects_duplicate_pair() {
        let e = parse_instance("e u v 1\ne u v 2").unwrap_err();
        assert_eq!(e.line, 2);
        assert!(matches!(e.kind, ParseErrorKind::Graph(GraphError::DuplicateEdge(_, _))));
    }

    #[test]
    fn rejects_label_zero_and_unknown_directive() {
        assert_eq!(parse_instance("e u v 0").unwrap_err().line, 1);
        assert!(matches!(
            parse_instance("x u v 1").unwrap_err().kind,
            ParseErrorKind::UnknownDirective(_)
        ));
    }

    #[test]
    fn o_line_requires_matching_edge() {
        let e = parse_instance("e u v 1\no u w 1").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::OrphanOrientation(_, _)));
        let e = parse_instance("e u v 1\no v u 2").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::OrphanOrientation(_, _)));
        let ok = parse_instance("e u v 1\no v u 1").unwrap();
        match ok {
            Instance::Oriented(g, f) => {
                assert!(f.is_proper());
                let d = f.get(0).unwrap();
                let (from, _) = g.edge(0).ends(d);
                assert_eq!(g.name(from), "v");
            }
            _ => panic!("expected oriented instance"),
        }
    }

    #[test]
    fn multi_label_roundtrip() {
        let text = "em a b 1,4\nem b c 2,4\n";
        let inst = parse_instance(text).unwrap();
        let ser = serialize_instance(&inst);
        let reparsed = parse_instance(&ser).unwrap();
        assert_eq!(inst, reparsed);
    }

    #[test]
    fn serialize_is_canonical_fixpoint() {
        let inst = parse_instance("e u v 5\ne v w 5\ne w u 3").unwrap();
        let once = serialize_instance(&inst);
        let twice = serialize_instance(&parse_instance(&once).unwrap());
        assert_eq!(once, twice);
    }
}
