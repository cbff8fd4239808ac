// Scratch: frequency of triangle-lemma violations under a natural random
// distribution (the one criterion 6 uses).
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use temporient::graph::{Dir, GraphBuilder, TemporalGraph, TimeLabel, VertexId};
use temporient::implication::{build_implication_classes, DirEdge};
use temporient::sites::{enumerate_constraint_sites, ConstraintSite};

fn random_graph(rng: &mut StdRng, n: usize, m: usize, labels: &[u32]) -> TemporalGraph {
    let mut b = GraphBuilder::new();
    let ids: Vec<_> = (0..n).map(|i| b.intern(&format!("v{}", i)).unwrap()).collect();
    let mut added = 0;
    let mut attempts = 0;
    while added < m && attempts < 20 * m + 40 {
        attempts += 1;
        let u = ids[rng.gen_range(0..n)];
        let v = ids[rng.gen_range(0..n)];
        if u == v { continue; }
        let t = TimeLabel::new(labels[rng.gen_range(0..labels.len())]).unwrap();
        if b.add_edge(u, v, t).is_ok() { added += 1; }
    }
    b.build()
}

fn violations(g: &TemporalGraph) -> usize {
    let p = match build_implication_classes(g) { Ok(p) => p, Err(_) => return 0 };
    let mut count = 0;
    for site in enumerate_constraint_sites(g) {
        let (verts, labels) = match site {
            ConstraintSite::Triangle { verts, labels } => (verts, labels),
            _ => continue,
        };
        if labels[0] != labels[2] { continue; }
        for [a, b, c] in [
            [verts[0], verts[1], verts[2]],
            [verts[1], verts[2], verts[0]],
            [verts[2], verts[0], verts[1]],
        ] {
            let lit = |x: VertexId, y: VertexId| {
                let e = g.edge_between(x, y).unwrap();
                let dir = if g.edge(e).u == x { Dir::Fwd } else { Dir::Rev };
                p.literal(DirEdge { edge: e, dir })
            };
            let (cls_c, cls_a, cls_b) = (lit(a, b), lit(b, c), lit(c, a));
            if cls_a == -cls_b || cls_a == -cls_c { continue; }
            let class_idx = cls_a.unsigned_abs() as usize - 1;
            if p.members[class_idx].iter().any(|d| {
                let (x, y) = g.edge(d.edge).ends(d.dir);
                x == a || y == a
            }) {
                count += 1;
            }
        }
    }
    count
}

fn main() {
    // Distribution of criterion 6: n up to 8, m up to 12, labels {1,2,3}.
    let mut rng = StdRng::seed_from_u64(606);
    let mut bad = 0;
    let mut first = None;
    for i in 0..10000 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=12);
        let g = random_graph(&mut rng, n, m, &[1, 2, 3]);
        let v = violations(&g);
        if v > 0 {
            bad += 1;
            if first.is_none() { first = Some(i); }
        }
    }
    println!("labels {{1,2,3}}, m<=12: {} of 10000 graphs violate (first at {:?})", bad, first);

    let mut rng = StdRng::seed_from_u64(607);
    let mut bad = 0;
    for _ in 0..10000 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=10);
        let g = random_graph(&mut rng, n, m, &[1, 2, 3]);
        if violations(&g) > 0 { bad += 1; }
    }
    println!("labels {{1,2,3}}, m<=10: {} of 10000 graphs violate", bad);
}
