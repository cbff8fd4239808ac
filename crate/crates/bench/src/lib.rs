//! Instance generation shared by the benchmarks.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use temporient::graph::{Dir, GraphBuilder, Orientation, TemporalGraph, TimeLabel};

/// Random temporal graph with `n` vertices and (up to) `m` distinct edges,
/// labels uniform in `1..=max_label`.
pub fn random_temporal_graph(n: usize, m: usize, max_label: u32, seed: u64) -> TemporalGraph {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut b = GraphBuilder::new();
    let ids: Vec<_> = (0..n).map(|i| b.intern(&format!("v{}", i)).unwrap()).collect();
    let mut added = 0;
    let mut attempts = 0;
    while added < m && attempts < 50 * m {
        attempts += 1;
        let u = ids[rng.gen_range(0..n)];
        let v = ids[rng.gen_range(0..n)];
        if u == v {
            continue;
        }
        let t = TimeLabel::new(rng.gen_range(1..=max_label)).unwrap();
        if b.add_edge(u, v, t).is_ok() {
            added += 1;
        }
    }
    b.build()
}

/// Arbitrary proper orientation for completion benchmarks.
pub fn random_orientation(g: &TemporalGraph, seed: u64) -> Orientation {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut f = Orientation::empty(g.m());
    for e in 0..g.m() {
        f.set(e, if rng.gen_bool(0.5) { Dir::Fwd } else { Dir::Rev });
    }
    f
}
