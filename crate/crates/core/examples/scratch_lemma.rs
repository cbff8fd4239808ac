// Scratch: find the triangle-lemma counterexample and print it.
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

fn main() {
    let mut rng = StdRng::seed_from_u64(17);
    for iter in 0..4000 {
        let n = rng.gen_range(3..=7);
        let m = rng.gen_range(3..=12);
        let g = random_graph(&mut rng, n, m, &[1, 2]);
        let p = match build_implication_classes(&g) { Ok(p) => p, Err(_) => continue };
        for site in enumerate_constraint_sites(&g) {
            let (verts, labels) = match site {
                ConstraintSite::Triangle { verts, labels } => (verts, labels),
                _ => continue,
            };
            if labels[0] != labels[2] { continue; }
            let rotations = [
                [verts[0], verts[1], verts[2]],
                [verts[1], verts[2], verts[0]],
                [verts[2], verts[0], verts[1]],
            ];
            for [a, b, c] in rotations {
                let lit = |x: VertexId, y: VertexId| {
                    let e = g.edge_between(x, y).unwrap();
                    let dir = if g.edge(e).u == x { Dir::Fwd } else { Dir::Rev };
                    p.literal(DirEdge { edge: e, dir })
                };
                let (cls_c, cls_a, cls_b) = (lit(a, b), lit(b, c), lit(c, a));
                if cls_a == -cls_b || cls_a == -cls_c { continue; }
                let class_idx = cls_a.unsigned_abs() as usize - 1;
                for d in &p.members[class_idx] {
                    let (x, y) = g.edge(d.edge).ends(d.dir);
                    if x == a || y == a {
                        println!("iter {} counterexample!", iter);
                        println!("graph edges:");
                        for e in g.edges() {
                            println!("  {} -- {}  label {}", g.name(e.u), g.name(e.v), e.label);
                        }
                        println!("triangle a={} b={} c={}", g.name(a), g.name(b), g.name(c));
                        println!("cls(ab)=C={} cls(bc)=A={} cls(ca)=B={}", cls_c, cls_a, cls_b);
                        println!("offending member of class {}: {} -> {}", class_idx + 1, g.name(x), g.name(y));
                        println!("class members:");
                        for dd in &p.members[class_idx] {
                            let (xx, yy) = g.edge(dd.edge).ends(dd.dir);
                            println!("  {} -> {}", g.name(xx), g.name(yy));
                        }
                        return;
                    }
                }
            }
        }
    }
    println!("no counterexample found");
}
