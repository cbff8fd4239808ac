//! The Lambda forcing relation between same-label directed edges, its
//! reflexive-transitive closure into implication classes, and the static
//! Gamma degenerate case.
//!
//! Two directed edges force each other when they share a tail (or head) and
//! the remaining endpoints are either non-adjacent or joined by an edge with
//! a strictly smaller label. Orienting one edge of a class fixes the whole
//! class, so each class becomes one Boolean variable.

use thiserror::Error;

use crate::graph::{Dir, EdgeId, TemporalGraph, VertexId};

/// Directed-edge handle: an edge id plus one of its two directions.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct DirEdge {
    pub edge: EdgeId,
    pub dir: Dir,
}

impl DirEdge {
    pub fn code(self) -> usize {
        self.edge * 2 + (self.dir == Dir::Rev) as usize
    }

    pub fn from_code(code: usize) -> DirEdge {
        DirEdge {
            edge: code / 2,
            dir: if code % 2 == 0 { Dir::Fwd } else { Dir::Rev },
        }
    }

    pub fn reversed(self) -> DirEdge {
        DirEdge { edge: self.edge, dir: self.dir.flip() }
    }
}

/// Some class contains a directed edge together with its reversal, so no
/// consistent orientation of that class exists.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("implication class of edge {seed:?} contains both directions of an edge")]
pub struct NotOrientable {
    pub seed: EdgeId,
}

/// The Lambda-implication classes `A_1..A_s` and the directed-edge ->
/// signed-class-literal map.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    /// Directed members of each class, in discovery order; `members[i]` is
    /// `A_{i+1}` seeded in its stored direction.
    pub members: Vec<Vec<DirEdge>>,
    /// Per edge id: signed 1-based class index of the `Fwd` direction.
    lit_fwd: Vec<i32>,
}

impl ClassPartition {
    pub fn class_count(&self) -> usize {
        self.members.len()
    }

    /// Signed class literal of a directed edge: `+i` when it lies in `A_i`,
    /// `-i` when it lies in `A_i^{-1}`.
    pub fn literal(&self, d: DirEdge) -> i32 {
        match d.dir {
            Dir::Fwd => self.lit_fwd[d.edge],
            Dir::Rev => -self.lit_fwd[d.edge],
        }
    }

    /// One class per edge, seeded `Fwd`. Used by the solvers that work on
    /// plain edge variables.
    pub fn trivial(g: &TemporalGraph) -> ClassPartition {
        ClassPartition {
            members: (0..g.m()).map(|e| vec![DirEdge { edge: e, dir: Dir::Fwd }]).collect(),
            lit_fwd: (0..g.m()).map(|e| e as i32 + 1).collect(),
        }
    }

    /// Partition of all 2m directed edges (each class and its reversal) as
    /// unordered sets of codes, for oracle comparison.
    pub fn canonical_sets(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = Vec::with_capacity(2 * self.members.len());
        for cls in &self.members {
            let mut fwd: Vec<usize> = cls.iter().map(|d| d.code()).collect();
            let mut rev: Vec<usize> = cls.iter().map(|d| d.reversed().code()).collect();
            fwd.sort_unstable();
            rev.sort_unstable();
            out.push(fwd);
            out.push(rev);
        }
        out.sort();
        out
    }
}

/// The Lambda relation of two directed edges given as vertex pairs. Both
/// pairs must name existing edges.
pub fn lambda_related(g: &TemporalGraph, a: (VertexId, VertexId), b: (VertexId, VertexId)) -> bool {
    let (ea, eb) = match (g.edge_between(a.0, a.1), g.edge_between(b.0, b.1)) {
        (Some(ea), Some(eb)) => (ea, eb),
        _ => return false,
    };
    let t = g.label(ea);
    if g.label(eb) != t {
        return false;
    }
    let ok = |other_a: VertexId, other_b: VertexId| -> bool {
        if other_a == other_b {
            // Same directed edge; Lambda is reflexive.
            return true;
        }
        match g.label_between(other_a, other_b) {
            None => true,
            Some(s) => s < t,
        }
    };
    (a.0 == b.0 && ok(a.1, b.1)) || (a.1 == b.1 && ok(a.0, b.0))
}

/// Lambda-neighbors of a directed edge, by scanning edges incident to its
/// tail and to its head with the same label.
fn lambda_neighbors(g: &TemporalGraph, d: DirEdge, out: &mut Vec<DirEdge>) {
    out.clear();
    let edge = g.edge(d.edge);
    let (tail, head) = edge.ends(d.dir);
    let t = edge.label;
    let compatible = |x: VertexId, y: VertexId| match g.label_between(x, y) {
        None => true,
        Some(s) => s < t,
    };
    // Shared tail: tail -> c for edges {tail, c}.
    for &(c, e2) in g.neighbors(tail) {
        if e2 != d.edge && g.label(e2) == t && compatible(head, c) {
            let dir = if g.edge(e2).u == tail { Dir::Fwd } else { Dir::Rev };
            out.push(DirEdge { edge: e2, dir });
        }
    }
    // Shared head: c -> head for edges {c, head}.
    for &(c, e2) in g.neighbors(head) {
        if e2 != d.edge && g.label(e2) == t && compatible(tail, c) {
            let dir = if g.edge(e2).v == head { Dir::Fwd } else { Dir::Rev };
            out.push(DirEdge { edge: e2, dir });
        }
    }
}

/// Build the Lambda-implication classes by closure from deterministic seeds
/// (edges in ascending `(u, v)` index order, seeded `Fwd`). Reports the first
/// class that contains an edge in both directions.
pub fn build_implication_classes(g: &TemporalGraph) -> Result<ClassPartition, NotOrientable> {
    let m = g.m();
    let mut order: Vec<EdgeId> = (0..m).collect();
    order.sort_by_key(|&e| (g.edge(e).u, g.edge(e).v));

    let mut lit_fwd = vec![0i32; m];
    let mut members: Vec<Vec<DirEdge>> = Vec::new();
    let mut seen = vec![false; 2 * m];
    let mut nbuf = Vec::new();

    for &seed_edge in &order {
        if lit_fwd[seed_edge] != 0 {
            continue;
        }
        let class_idx = members.len() as i32 + 1;
        let seed = DirEdge { edge: seed_edge, dir: Dir::Fwd };
        let mut class = vec![seed];
        seen[seed.code()] = true;
        let mut queue = vec![seed];
        while let Some(d) = queue.pop() {
            lambda_neighbors(g, d, &mut nbuf);
            for &nb in nbuf.iter() {
                if seen[nb.reversed().code()] {
                    return Err(NotOrientable { seed: seed_edge });
                }
                if !seen[nb.code()] {
                    seen[nb.code()] = true;
                    class.push(nb);
                    queue.push(nb);
                }
            }
        }
        for d in &class {
            lit_fwd[d.edge] = match d.dir {
                Dir::Fwd => class_idx,
                Dir::Rev => -class_idx,
            };
        }
        members.push(class);
    }
    Ok(ClassPartition { members, lit_fwd })
}

/// Gamma-implication classes of a static layer: the all-labels-equal
/// degenerate case of the Lambda closure. Labels of `g` are ignored.
pub fn gamma_classes(g: &TemporalGraph) -> Result<ClassPartition, NotOrientable> {
    build_implication_classes(&g.uniform_label_view())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TemporalGraph;

    fn de(g: &TemporalGraph, from: &str, to: &str) -> DirEdge {
        let (f, t) = (g.vertex(from).unwrap(), g.vertex(to).unwrap());
        let e = g.edge_between(f, t).unwrap();
        DirEdge { edge: e, dir: if g.edge(e).u == f { Dir::Fwd } else { Dir::Rev } }
    }

    fn verts(g: &TemporalGraph, a: &str, b: &str) -> (VertexId, VertexId) {
        (g.vertex(a).unwrap(), g.vertex(b).unwrap())
    }

    #[test]
    fn fig1b_shared_head_with_smaller_connecting_label() {
        let g = TemporalGraph::from_edges(&[("u", "v", 5), ("v", "w", 5), ("w", "u", 3)]);
        // uv Lambda wv: shared head v, lambda(u,w) = 3 < 5.
        assert!(lambda_related(&g, verts(&g, "u", "v"), verts(&g, "w", "v")));
        assert!(!lambda_related(&g, verts(&g, "u", "v"), verts(&g, "v", "w")));
    }

    #[test]
    fn lambda_is_reflexive_and_label_strict() {
        let g = TemporalGraph::from_edges(&[("u", "v", 1), ("v", "w", 2)]);
        assert!(lambda_related(&g, verts(&g, "u", "v"), verts(&g, "u", "v")));
        assert!(!lambda_related(&g, verts(&g, "u", "v"), verts(&g, "v", "w")));
    }

    #[test]
    fn equal_label_path_shares_class() {
        let g = TemporalGraph::from_edges(&[("u", "v", 1), ("v", "w", 1)]);
        let p = build_implication_classes(&g).unwrap();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.literal(de(&g, "u", "v")), p.literal(de(&g, "w", "v")));
    }

    #[test]
    fn c4_single_class_opposite_edges_anti_aligned() {
        let g = TemporalGraph::from_edges(&[("a", "b", 1), ("b", "c", 1), ("c", "d", 1), ("d", "a", 1)]);
        let p = build_implication_classes(&g).unwrap();
        assert_eq!(p.class_count(), 1);
        let lit = |x: &str, y: &str| p.literal(de(&g, x, y));
        assert_eq!(lit("a", "b"), lit("c", "b"));
        assert_eq!(lit("a", "b"), lit("c", "d"));
        assert_eq!(lit("a", "b"), lit("a", "d"));
        assert_eq!(lit("a", "b"), -lit("b", "a"));
    }

    #[test]
    fn odd_cycle_class_is_improper() {
        // Forcing walks around an odd cycle and returns reversed, exactly as
        // in the static comparability case.
        let g = TemporalGraph::from_edges(&[
            ("a", "b", 1),
            ("b", "c", 1),
            ("c", "d", 1),
            ("d", "e", 1),
            ("e", "a", 1),
        ]);
        assert!(build_implication_classes(&g).is_err());
    }

    #[test]
    fn gamma_on_static_p3() {
        let g = TemporalGraph::from_edges(&[("u", "v", 3), ("v", "w", 7)]);
        let p = gamma_classes(&g).unwrap();
        assert_eq!(p.class_count(), 1);
    }

    #[test]
    fn single_edge_single_class() {
        let g = TemporalGraph::from_edges(&[("u", "v", 1)]);
        let p = gamma_classes(&g).unwrap();
        assert_eq!(p.class_count(), 1);
        assert_eq!(p.members[0].len(), 1);
    }
}
