// Scratch: cross-validate recognize_* against the exhaustive oracle on many
// random graphs, including the triangle-lemma counterexample shape.
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use temporient::graph::{GraphBuilder, TemporalGraph, TimeLabel};
use temporient::oracle::{oracle_recognize_all, OracleBudget};
use temporient::recognize::{recognize_strict, recognize_strong, recognize_tto};
use temporient::verify::Variant;

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
    let budget = OracleBudget::default();

    // The triangle-lemma counterexample graph first.
    let g = TemporalGraph::from_edges(&[
        ("v0", "v4", 1), ("v2", "v5", 2), ("v0", "v2", 2), ("v5", "v6", 2),
        ("v1", "v4", 2), ("v4", "v6", 1), ("v1", "v3", 1), ("v3", "v4", 1),
        ("v3", "v6", 1), ("v0", "v6", 1), ("v0", "v3", 1), ("v2", "v6", 1),
    ]);
    let oracle = oracle_recognize_all(&g, &budget).unwrap();
    let solver = [
        recognize_tto(&g).is_yes(),
        recognize_strict(&g).is_yes(),
        recognize_strong(&g, Variant::Strong).is_yes(),
        recognize_strong(&g, Variant::StrongStrict).is_yes(),
    ];
    println!("lemma-counterexample graph: oracle={:?} solver={:?}", oracle, solver);

    let mut rng = StdRng::seed_from_u64(99);
    let mut mismatches = 0;
    for iter in 0..30000 {
        let n = rng.gen_range(3..=8);
        let m = rng.gen_range(1..=12);
        let labels: &[u32] = match iter % 3 {
            0 => &[1, 2],
            1 => &[1, 2, 3],
            _ => &[1],
        };
        let g = random_graph(&mut rng, n, m, labels);
        let oracle = oracle_recognize_all(&g, &budget).unwrap();
        let solver = [
            recognize_tto(&g).is_yes(),
            recognize_strict(&g).is_yes(),
            recognize_strong(&g, Variant::Strong).is_yes(),
            recognize_strong(&g, Variant::StrongStrict).is_yes(),
        ];
        if oracle != solver {
            mismatches += 1;
            println!("MISMATCH iter {}: oracle={:?} solver={:?}", iter, oracle, solver);
            for e in g.edges() {
                println!("  e {} {} {}", g.name(e.u), g.name(e.v), e.label);
            }
            if mismatches > 4 {
                return;
            }
        }
    }
    println!("sweep done, {} mismatches", mismatches);
}
