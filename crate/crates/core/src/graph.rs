//! Temporal graph data model: vertices with external names and dense indices,
//! single-label and multi-label edge sets, and (partial) orientations.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// Discrete time label of an edge, in `1..=u32::MAX`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TimeLabel(u32);

impl TimeLabel {
    pub fn new(value: u32) -> Option<TimeLabel> {
        if value == 0 {
            None
        } else {
            Some(TimeLabel(value))
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }
}

impl fmt::Display for TimeLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dense vertex index. External names live in the owning graph.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct VertexId(pub u32);

impl VertexId {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

pub type EdgeId = usize;

/// Orientation of a single stored edge. `Fwd` points from the smaller
/// vertex index to the larger one.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Dir {
    Fwd,
    Rev,
}

impl Dir {
    pub fn flip(self) -> Dir {
        match self {
            Dir::Fwd => Dir::Rev,
            Dir::Rev => Dir::Fwd,
        }
    }
}

/// Undirected edge with one time label. Invariant: `u < v`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub label: TimeLabel,
}

impl Edge {
    /// Endpoints as (from, to) under the given direction.
    pub fn ends(&self, dir: Dir) -> (VertexId, VertexId) {
        match dir {
            Dir::Fwd => (self.u, self.v),
            Dir::Rev => (self.v, self.u),
        }
    }
}

/// Undirected edge carrying a sorted, duplicate-free set of labels.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MultiEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub labels: Vec<TimeLabel>,
}

impl MultiEdge {
    pub fn ends(&self, dir: Dir) -> (VertexId, VertexId) {
        match dir {
            Dir::Fwd => (self.u, self.v),
            Dir::Rev => (self.v, self.u),
        }
    }
}

/// A directed time-edge `(uv, t)`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DirectedTimeEdge {
    pub from: VertexId,
    pub to: VertexId,
    pub label: TimeLabel,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex name must be a non-empty token of printable non-whitespace characters: {0:?}")]
    BadName(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("self-loop at {0:?}")]
    SelfLoop(String),
    #[error("duplicate edge {0:?} -- {1:?}")]
    DuplicateEdge(String, String),
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("time label must be at least 1")]
    ZeroLabel,
    #[error("empty label set on edge {0:?} -- {1:?}")]
    EmptyLabels(String, String),
}

pub fn valid_name(name: &str) -> bool {
    !name.is_empty() && name.chars().all(|c| !c.is_whitespace() && !c.is_control())
}

fn pair_key(a: VertexId, b: VertexId) -> (VertexId, VertexId) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

macro_rules! shared_vertex_impls {
    () => {
        pub fn n(&self) -> usize {
            self.names.len()
        }

        pub fn name(&self, v: VertexId) -> &str {
            &self.names[v.index()]
        }

        pub fn vertex(&self, name: &str) -> Option<VertexId> {
            self.by_name.get(name).copied()
        }

        pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
            (0..self.names.len() as u32).map(VertexId)
        }

        /// Neighbors of `v` as `(other endpoint, edge id)`, sorted by endpoint.
        pub fn neighbors(&self, v: VertexId) -> &[(VertexId, EdgeId)] {
            &self.adj[v.index()]
        }

        pub fn edge_between(&self, a: VertexId, b: VertexId) -> Option<EdgeId> {
            let (a, b) = pair_key(a, b);
            let row = &self.adj[a.index()];
            row.binary_search_by_key(&b, |&(w, _)| w).ok().map(|i| row[i].1)
        }
    };
}

/// A temporal graph `(G, lambda)` with one label per edge.
#[derive(Clone, Debug)]
pub struct TemporalGraph {
    names: Vec<String>,
    by_name: HashMap<String, VertexId>,
    edges: Vec<Edge>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl TemporalGraph {
    shared_vertex_impls!();

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn label(&self, e: EdgeId) -> TimeLabel {
        self.edges[e].label
    }

    pub fn label_between(&self, a: VertexId, b: VertexId) -> Option<TimeLabel> {
        self.edge_between(a, b).map(|e| self.edges[e].label)
    }

    pub fn max_label(&self) -> Option<TimeLabel> {
        self.edges.iter().map(|e| e.label).max()
    }

    /// Distinct labels, ascending.
    pub fn label_set(&self) -> Vec<TimeLabel> {
        let mut labels: Vec<TimeLabel> = self.edges.iter().map(|e| e.label).collect();
        labels.sort();
        labels.dedup();
        labels
    }

    /// Test helper: build from `(u, v, label)` triples, declaring vertices on
    /// first mention. Panics on invalid input.
    pub fn from_edges(edges: &[(&str, &str, u32)]) -> TemporalGraph {
        let mut b = GraphBuilder::new();
        for &(u, v, t) in edges {
            let u = b.intern(u).unwrap();
            let v = b.intern(v).unwrap();
            b.add_edge(u, v, TimeLabel::new(t).expect("label must be positive"))
                .unwrap();
        }
        b.build()
    }

    /// Clone with every label replaced by 1. Used for the static (Gamma) view.
    pub fn uniform_label_view(&self) -> TemporalGraph {
        let one = TimeLabel::new(1).unwrap();
        TemporalGraph {
            names: self.names.clone(),
            by_name: self.by_name.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| Edge { u: e.u, v: e.v, label: one })
                .collect(),
            adj: self.adj.clone(),
        }
    }
}

impl PartialEq for TemporalGraph {
    /// Name-structural equality: same named vertices and the same labeled
    /// edges between named pairs, independent of declaration order.
    fn eq(&self, other: &TemporalGraph) -> bool {
        if self.names.len() != other.names.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut mine: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        let mut theirs: Vec<&str> = other.names.iter().map(|s| s.as_str()).collect();
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return false;
        }
        self.edges.iter().all(|e| {
            let (a, b) = (other.vertex(self.name(e.u)), other.vertex(self.name(e.v)));
            match (a, b) {
                (Some(a), Some(b)) => other.label_between(a, b) == Some(e.label),
                _ => false,
            }
        })
    }
}

impl Eq for TemporalGraph {}

/// A temporal graph with multiple labels per edge (`lambda: E -> 2^N`).
#[derive(Clone, Debug)]
pub struct MultiLabelTemporalGraph {
    names: Vec<String>,
    by_name: HashMap<String, VertexId>,
    edges: Vec<MultiEdge>,
    adj: Vec<Vec<(VertexId, EdgeId)>>,
}

impl MultiLabelTemporalGraph {
    shared_vertex_impls!();

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[MultiEdge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> &MultiEdge {
        &self.edges[e]
    }

    /// Distinct layers (labels), ascending.
    pub fn layers(&self) -> Vec<TimeLabel> {
        let mut all: Vec<TimeLabel> = self.edges.iter().flat_map(|e| e.labels.iter().copied()).collect();
        all.sort();
        all.dedup();
        all
    }

    pub fn layer_edges(&self, t: TimeLabel) -> Vec<EdgeId> {
        (0..self.edges.len())
            .filter(|&e| self.edges[e].labels.contains(&t))
            .collect()
    }

    /// Test helper mirroring [`TemporalGraph::from_edges`].
    pub fn from_edges(edges: &[(&str, &str, &[u32])]) -> MultiLabelTemporalGraph {
        let mut b = GraphBuilder::new();
        for &(u, v, ts) in edges {
            let u = b.intern(u).unwrap();
            let v = b.intern(v).unwrap();
            let labels: Vec<TimeLabel> = ts
                .iter()
                .map(|&t| TimeLabel::new(t).expect("label must be positive"))
                .collect();
            b.add_multi_edge(u, v, labels).unwrap();
        }
        b.build_multi()
    }
}

impl PartialEq for MultiLabelTemporalGraph {
    fn eq(&self, other: &MultiLabelTemporalGraph) -> bool {
        if self.names.len() != other.names.len() || self.edges.len() != other.edges.len() {
            return false;
        }
        let mut mine: Vec<&str> = self.names.iter().map(|s| s.as_str()).collect();
        let mut theirs: Vec<&str> = other.names.iter().map(|s| s.as_str()).collect();
        mine.sort_unstable();
        theirs.sort_unstable();
        if mine != theirs {
            return false;
        }
        self.edges.iter().all(|e| {
            let (a, b) = (other.vertex(self.name(e.u)), other.vertex(self.name(e.v)));
            match (a, b) {
                (Some(a), Some(b)) => other
                    .edge_between(a, b)
                    .map(|id| other.edges[id].labels == e.labels)
                    .unwrap_or(false),
                _ => false,
            }
        })
    }
}

impl Eq for MultiLabelTemporalGraph {}

/// Incremental, validating construction shared by the parser and generators.
pub struct GraphBuilder {
    names: Vec<String>,
    by_name: HashMap<String, VertexId>,
    single: Vec<Edge>,
    multi: Vec<MultiEdge>,
    pairs: HashMap<(VertexId, VertexId), usize>,
}

impl GraphBuilder {
    pub fn new() -> GraphBuilder {
        GraphBuilder {
            names: Vec::new(),
            by_name: HashMap::new(),
            single: Vec::new(),
            multi: Vec::new(),
            pairs: HashMap::new(),
        }
    }

    pub fn add_vertex(&mut self, name: &str) -> Result<VertexId, GraphError> {
        if !valid_name(name) {
            return Err(GraphError::BadName(name.to_owned()));
        }
        if self.by_name.contains_key(name) {
            return Err(GraphError::DuplicateVertex(name.to_owned()));
        }
        let id = VertexId(self.names.len() as u32);
        self.names.push(name.to_owned());
        self.by_name.insert(name.to_owned(), id);
        Ok(id)
    }

    /// Declare `name` if new, otherwise return its id.
    pub fn intern(&mut self, name: &str) -> Result<VertexId, GraphError> {
        match self.by_name.get(name) {
            Some(&id) => Ok(id),
            None => self.add_vertex(name),
        }
    }

    /// Name lookup without declaring.
    pub fn peek(&self, name: &str) -> Option<VertexId> {
        self.by_name.get(name).copied()
    }

    fn check_pair(&mut self, u: VertexId, v: VertexId) -> Result<(VertexId, VertexId), GraphError> {
        if u == v {
            return Err(GraphError::SelfLoop(self.names[u.index()].clone()));
        }
        let key = pair_key(u, v);
        if self.pairs.contains_key(&key) {
            return Err(GraphError::DuplicateEdge(
                self.names[key.0.index()].clone(),
                self.names[key.1.index()].clone(),
            ));
        }
        Ok(key)
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, label: TimeLabel) -> Result<EdgeId, GraphError> {
        let (u, v) = self.check_pair(u, v)?;
        let id = self.single.len();
        self.pairs.insert((u, v), id);
        self.single.push(Edge { u, v, label });
        Ok(id)
    }

    pub fn add_multi_edge(
        &mut self,
        u: VertexId,
        v: VertexId,
        mut labels: Vec<TimeLabel>,
    ) -> Result<EdgeId, GraphError> {
        let (u, v) = self.check_pair(u, v)?;
        if labels.is_empty() {
            return Err(GraphError::EmptyLabels(
                self.names[u.index()].clone(),
                self.names[v.index()].clone(),
            ));
        }
        labels.sort();
        labels.dedup();
        let id = self.multi.len();
        self.pairs.insert((u, v), id);
        self.multi.push(MultiEdge { u, v, labels });
        Ok(id)
    }

    fn adjacency(n: usize, ends: impl Iterator<Item = (VertexId, VertexId)>) -> Vec<Vec<(VertexId, EdgeId)>> {
        let mut adj: Vec<Vec<(VertexId, EdgeId)>> = vec![Vec::new(); n];
        for (id, (u, v)) in ends.enumerate() {
            adj[u.index()].push((v, id));
            adj[v.index()].push((u, id));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        adj
    }

    pub fn build(self) -> TemporalGraph {
        assert!(self.multi.is_empty(), "mixed single/multi edges");
        let adj = Self::adjacency(self.names.len(), self.single.iter().map(|e| (e.u, e.v)));
        TemporalGraph {
            names: self.names,
            by_name: self.by_name,
            edges: self.single,
            adj,
        }
    }

    pub fn build_multi(self) -> MultiLabelTemporalGraph {
        assert!(self.single.is_empty(), "mixed single/multi edges");
        let adj = Self::adjacency(self.names.len(), self.multi.iter().map(|e| (e.u, e.v)));
        MultiLabelTemporalGraph {
            names: self.names,
            by_name: self.by_name,
            edges: self.multi,
            adj,
        }
    }

    /// Declared names in declaration order.
    pub fn built_names(&self) -> impl Iterator<Item = &str> {
        self.names.iter().map(|s| s.as_str())
    }

    pub fn find_single_edge(&self, u: VertexId, v: VertexId, label: TimeLabel) -> Option<EdgeId> {
        self.pairs
            .get(&pair_key(u, v))
            .copied()
            .filter(|&id| self.single[id].label == label)
    }
}

impl Default for GraphBuilder {
    fn default() -> Self {
        GraphBuilder::new()
    }
}

/// A (partial) orientation of a graph's edge set. Indexed parallel to the
/// owning graph's edges; `None` marks an unoriented edge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Orientation {
    dirs: Vec<Option<Dir>>,
}

impl Orientation {
    pub fn empty(m: usize) -> Orientation {
        Orientation { dirs: vec![None; m] }
    }

    pub fn len(&self) -> usize {
        self.dirs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.dirs.is_empty()
    }

    pub fn get(&self, e: EdgeId) -> Option<Dir> {
        self.dirs[e]
    }

    pub fn set(&mut self, e: EdgeId, d: Dir) {
        self.dirs[e] = Some(d);
    }

    pub fn clear(&mut self, e: EdgeId) {
        self.dirs[e] = None;
    }

    /// Exactly one direction per covered edge and full coverage.
    pub fn is_proper(&self) -> bool {
        self.dirs.iter().all(|d| d.is_some())
    }

    pub fn oriented_count(&self) -> usize {
        self.dirs.iter().filter(|d| d.is_some()).count()
    }

    pub fn unoriented(&self) -> Vec<EdgeId> {
        (0..self.dirs.len()).filter(|&e| self.dirs[e].is_none()).collect()
    }

    /// Directed time-edges of a single-label graph under this orientation.
    pub fn directed(&self, g: &TemporalGraph) -> Vec<DirectedTimeEdge> {
        self.dirs
            .iter()
            .enumerate()
            .filter_map(|(e, d)| {
                d.map(|d| {
                    let (from, to) = g.edge(e).ends(d);
                    DirectedTimeEdge { from, to, label: g.edge(e).label }
                })
            })
            .collect()
    }

    /// Build from a full orientation bitmask (bit e set => `Rev`), for
    /// exhaustive enumeration.
    pub fn from_mask(m: usize, mask: u64) -> Orientation {
        Orientation {
            dirs: (0..m)
                .map(|e| Some(if mask >> e & 1 == 1 { Dir::Rev } else { Dir::Fwd }))
                .collect(),
        }
    }
}
