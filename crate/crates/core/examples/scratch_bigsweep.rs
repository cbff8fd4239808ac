// Scratch: large randomized cross-validation of all recognizers against the
// exhaustive oracle, emphasizing the label regimes where the paper's
// triangle lemma breaks.
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use temporient::graph::{GraphBuilder, TemporalGraph, TimeLabel};
use temporient::oracle::{oracle_multilayer, oracle_recognize_all, OracleBudget};
use temporient::recognize::{recognize_strict, recognize_strong, recognize_tto, solve_multilayer};
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
    let mut rng = StdRng::seed_from_u64(4242);
    let mut mismatches = 0usize;
    let mut count = 0usize;
    for iter in 0..120000usize {
        let (n, m) = match iter % 4 {
            0 => (rng.gen_range(4..=8), rng.gen_range(6..=14)),
            1 => (rng.gen_range(3..=6), rng.gen_range(1..=12)),
            2 => (rng.gen_range(6..=10), rng.gen_range(8..=14)),
            _ => (rng.gen_range(4..=7), rng.gen_range(10..=14)),
        };
        let labels: &[u32] = match iter % 5 {
            0 | 3 => &[1, 2],
            1 => &[1, 2, 3],
            2 => &[1],
            _ => &[1, 2, 3, 4],
        };
        let g = random_graph(&mut rng, n, m, labels);
        count += 1;
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
            if mismatches > 3 {
                return;
            }
        }
        if iter % 20000 == 19999 {
            println!("... {} instances checked, {} mismatches", count, mismatches);
        }
    }

    // Multilayer on random multi-label graphs.
    let mut rng = StdRng::seed_from_u64(5151);
    let mut mm = 0usize;
    for iter in 0..30000usize {
        let n = rng.gen_range(2..=7);
        let m = rng.gen_range(1..=11);
        let mut b = GraphBuilder::new();
        let ids: Vec<_> = (0..n).map(|i| b.intern(&format!("v{}", i)).unwrap()).collect();
        let mut added = 0;
        let mut attempts = 0;
        while added < m && attempts < 20 * m + 40 {
            attempts += 1;
            let u = ids[rng.gen_range(0..n)];
            let v = ids[rng.gen_range(0..n)];
            if u == v { continue; }
            let mut ls = vec![TimeLabel::new(rng.gen_range(1..=3)).unwrap()];
            if rng.gen_bool(0.5) {
                ls.push(TimeLabel::new(rng.gen_range(1..=3)).unwrap());
            }
            ls.sort();
            ls.dedup();
            if b.add_multi_edge(u, v, ls).is_ok() { added += 1; }
        }
        let g = b.build_multi();
        let fast = solve_multilayer(&g).is_yes();
        let slow = oracle_multilayer(&g, &budget).unwrap();
        if fast != slow {
            mm += 1;
            println!("MTO MISMATCH iter {}: solver={} oracle={}", iter, fast, slow);
            if mm > 3 { return; }
        }
    }
    println!("done: {} recognition mismatches, {} multilayer mismatches", mismatches, mm);
}
