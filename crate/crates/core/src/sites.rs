//! Enumeration of the two kinds of constraint sites: triangles and induced
//! paths of length two. Sites are normalized so that clause emission can read
//! the label pattern directly.

use crate::graph::{TemporalGraph, TimeLabel, VertexId};

/// A constraint site with canonically ordered vertices.
///
/// Triangle: `labels[0] = lambda(u,v) <= labels[1] = lambda(v,w) <=
/// labels[2] = lambda(w,u)` with `verts = [u, v, w]`.
///
/// Path2: center vertex second, `labels[0] = lambda(u,v) <= labels[1] =
/// lambda(v,w)`, and `{u, w}` is a non-edge.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ConstraintSite {
    Triangle { verts: [VertexId; 3], labels: [TimeLabel; 3] },
    Path2 { verts: [VertexId; 3], labels: [TimeLabel; 2] },
}

impl ConstraintSite {
    pub fn verts(&self) -> [VertexId; 3] {
        match self {
            ConstraintSite::Triangle { verts, .. } | ConstraintSite::Path2 { verts, .. } => *verts,
        }
    }
}

/// Canonical triangle orientation: among the six namings of `{a, b, c}` keep
/// those with a sorted label chain, then take the lexicographically least
/// vertex tuple. Ties only occur between namings that emit identical
/// constraints.
fn normalize_triangle(g: &TemporalGraph, a: VertexId, b: VertexId, c: VertexId) -> ConstraintSite {
    let mut best: Option<([VertexId; 3], [TimeLabel; 3])> = None;
    let perms = [
        [a, b, c],
        [a, c, b],
        [b, a, c],
        [b, c, a],
        [c, a, b],
        [c, b, a],
    ];
    for p in perms {
        let t0 = g.label_between(p[0], p[1]).unwrap();
        let t1 = g.label_between(p[1], p[2]).unwrap();
        let t2 = g.label_between(p[2], p[0]).unwrap();
        if t0 <= t1 && t1 <= t2 {
            let cand = (p, [t0, t1, t2]);
            if best.map_or(true, |(bp, _)| cand.0 < bp) {
                best = Some(cand);
            }
        }
    }
    let (verts, labels) = best.expect("some rotation sorts the labels");
    ConstraintSite::Triangle { verts, labels }
}

fn normalize_path2(g: &TemporalGraph, center: VertexId, a: VertexId, b: VertexId) -> ConstraintSite {
    let ta = g.label_between(a, center).unwrap();
    let tb = g.label_between(center, b).unwrap();
    let (u, w, t0, t1) = if (ta, a) <= (tb, b) { (a, b, ta, tb) } else { (b, a, tb, ta) };
    ConstraintSite::Path2 { verts: [u, center, w], labels: [t0, t1] }
}

/// Every triangle and every induced 2-path of `g`, each exactly once, via
/// sorted adjacency intersection.
pub fn enumerate_constraint_sites(g: &TemporalGraph) -> Vec<ConstraintSite> {
    let mut sites = Vec::new();
    // Triangles: for each edge {u,v} with u < v, common neighbors w > v.
    for e in g.edges() {
        let (u, v) = (e.u, e.v);
        for &(w, _) in g.neighbors(u) {
            if w > v && g.edge_between(v, w).is_some() {
                sites.push(normalize_triangle(g, u, v, w));
            }
        }
    }
    // Induced 2-paths: center v, neighbor pairs (a, b) with a < b, {a,b} not an edge.
    for v in g.vertices() {
        let nb = g.neighbors(v);
        for i in 0..nb.len() {
            for j in i + 1..nb.len() {
                let (a, b) = (nb[i].0, nb[j].0);
                if g.edge_between(a, b).is_none() {
                    sites.push(normalize_path2(g, v, a, b));
                }
            }
        }
    }
    sites
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TemporalGraph;

    fn labels_of(site: &ConstraintSite) -> Vec<u32> {
        match site {
            ConstraintSite::Triangle { labels, .. } => labels.iter().map(|t| t.get()).collect(),
            ConstraintSite::Path2 { labels, .. } => labels.iter().map(|t| t.get()).collect(),
        }
    }

    #[test]
    fn fig1b_triangle_sorted_labels() {
        let g = TemporalGraph::from_edges(&[("u", "v", 5), ("v", "w", 5), ("w", "u", 3)]);
        let sites = enumerate_constraint_sites(&g);
        assert_eq!(sites.len(), 1);
        assert!(matches!(sites[0], ConstraintSite::Triangle { .. }));
        assert_eq!(labels_of(&sites[0]), vec![3, 5, 5]);
    }

    #[test]
    fn induced_path_site() {
        let g = TemporalGraph::from_edges(&[("u", "v", 1), ("v", "w", 2)]);
        let sites = enumerate_constraint_sites(&g);
        assert_eq!(sites.len(), 1);
        match sites[0] {
            ConstraintSite::Path2 { verts, labels } => {
                assert_eq!(g.name(verts[1]), "v");
                assert_eq!(labels[0].get(), 1);
                assert_eq!(labels[1].get(), 2);
            }
            _ => panic!("expected a 2-path site"),
        }
    }

    #[test]
    fn k4_has_four_triangles_no_paths() {
        let g = TemporalGraph::from_edges(&[
            ("a", "b", 1),
            ("a", "c", 1),
            ("a", "d", 1),
            ("b", "c", 1),
            ("b", "d", 1),
            ("c", "d", 1),
        ]);
        let sites = enumerate_constraint_sites(&g);
        let tri = sites.iter().filter(|s| matches!(s, ConstraintSite::Triangle { .. })).count();
        let p2 = sites.len() - tri;
        assert_eq!((tri, p2), (4, 0));
    }
}
