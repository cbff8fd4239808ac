//! Shared instance generators for the integration and acceptance suites.

#![allow(dead_code)]

use rand::rngs::StdRng;
use rand::Rng;

use temporient::graph::{
    Dir, GraphBuilder, MultiLabelTemporalGraph, Orientation, TemporalGraph, TimeLabel,
};

pub fn label(v: u32) -> TimeLabel {
    TimeLabel::new(v).unwrap()
}

/// Random temporal graph: `n` vertices, up to `m` edges, labels drawn from
/// `labels`.
pub fn random_graph(rng: &mut StdRng, n: usize, m: usize, labels: &[u32]) -> TemporalGraph {
    let mut b = GraphBuilder::new();
    let ids: Vec<_> = (0..n).map(|i| b.intern(&format!("v{}", i)).unwrap()).collect();
    let mut added = 0;
    let mut attempts = 0;
    while added < m && attempts < 20 * m + 40 {
        attempts += 1;
        let u = ids[rng.gen_range(0..n)];
        let v = ids[rng.gen_range(0..n)];
        if u == v {
            continue;
        }
        let t = label(labels[rng.gen_range(0..labels.len())]);
        if b.add_edge(u, v, t).is_ok() {
            added += 1;
        }
    }
    b.build()
}

/// Random multi-label graph with 1..=2 labels per edge.
pub fn random_multi_graph(rng: &mut StdRng, n: usize, m: usize, labels: &[u32]) -> MultiLabelTemporalGraph {
    let mut b = GraphBuilder::new();
    let ids: Vec<_> = (0..n).map(|i| b.intern(&format!("v{}", i)).unwrap()).collect();
    let mut added = 0;
    let mut attempts = 0;
    while added < m && attempts < 20 * m + 40 {
        attempts += 1;
        let u = ids[rng.gen_range(0..n)];
        let v = ids[rng.gen_range(0..n)];
        if u == v {
            continue;
        }
        let count = rng.gen_range(1..=2usize);
        let mut ls: Vec<TimeLabel> = (0..count)
            .map(|_| label(labels[rng.gen_range(0..labels.len())]))
            .collect();
        ls.sort();
        ls.dedup();
        if b.add_multi_edge(u, v, ls).is_ok() {
            added += 1;
        }
    }
    b.build_multi()
}

pub fn random_orientation(rng: &mut StdRng, m: usize) -> Orientation {
    let mut f = Orientation::empty(m);
    for e in 0..m {
        f.set(e, if rng.gen_bool(0.5) { Dir::Fwd } else { Dir::Rev });
    }
    f
}

/// All graphs on exactly `n <= 4` vertices where each of the `C(n,2)` slots
/// is absent or carries one of `labels`.
pub fn exhaustive_graphs(n: usize, labels: &[u32]) -> Vec<TemporalGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let choices = labels.len() + 1;
    let total = choices.pow(pairs.len() as u32);
    let mut out = Vec::with_capacity(total);
    for code in 0..total {
        let mut b = GraphBuilder::new();
        let ids: Vec<_> = (0..n).map(|i| b.intern(&format!("v{}", i)).unwrap()).collect();
        let mut c = code;
        for &(i, j) in &pairs {
            let pick = c % choices;
            c /= choices;
            if pick > 0 {
                b.add_edge(ids[i], ids[j], label(labels[pick - 1])).unwrap();
            }
        }
        out.push(b.build());
    }
    out
}

/// Orient by names; helper for hand-built fixtures.
pub fn orient_by_names(g: &TemporalGraph, arcs: &[(&str, &str)]) -> Orientation {
    let mut f = Orientation::empty(g.m());
    for &(from, to) in arcs {
        let (fu, tv) = (g.vertex(from).unwrap(), g.vertex(to).unwrap());
        let e = g.edge_between(fu, tv).unwrap();
        f.set(e, if g.edge(e).u == fu { Dir::Fwd } else { Dir::Rev });
    }
    f
}

/// Same for multi-label graphs.
pub fn orient_multi_by_names(g: &MultiLabelTemporalGraph, arcs: &[(&str, &str)]) -> Orientation {
    let mut f = Orientation::empty(g.m());
    for &(from, to) in arcs {
        let (fu, tv) = (g.vertex(from).unwrap(), g.vertex(to).unwrap());
        let e = g.edge_between(fu, tv).unwrap();
        f.set(e, if g.edge(e).u == fu { Dir::Fwd } else { Dir::Rev });
    }
    f
}
