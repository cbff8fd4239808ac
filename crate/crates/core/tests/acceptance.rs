//! Acceptance suite: one test per criterion, each printing a `[PASS]` line
//! (run with `--nocapture` to see them). Criterion 6's triangle-lemma
//! sub-test is expected to fail; the property it asserts has a genuine
//! counterexample, documented in tests/properties.rs and the project notes.

mod common;

use std::time::Instant;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};

use common::{exhaustive_graphs, label, orient_by_names, random_graph, random_orientation};
use temporient::complete::{
    apply_completion, completion_set, solve_ttc_fpt, solve_ttc_oriented, tail_heavy_table,
    FptAnswer, TtcAnswer,
};
use temporient::graph::{Dir, Orientation, TemporalGraph, VertexId};
use temporient::implication::{build_implication_classes, DirEdge};
use temporient::io::Instance;
use temporient::oracle::{
    canonical_partition, oracle_complete, oracle_lambda_classes, oracle_recognize_all, OracleBudget,
};
use temporient::recognize::{
    recognize_strict, recognize_strong, recognize_tto, solve_multilayer,
};
use temporient::reductions::{
    decode_assignment, gen_mto, gen_strict_tto, gen_ttc, pad_to_sat34, CnfFormula, CnfKind,
};
use temporient::sites::{enumerate_constraint_sites, ConstraintSite};
use temporient::verify::{verify_multilayer, verify_orientation, Variant};

#[test]
fn criterion_1_oracle_equivalence_recognition() {
    let budget = OracleBudget::default();

    fn check(g: &TemporalGraph, what: &str, budget: &OracleBudget) {
        let oracle = oracle_recognize_all(g, budget).unwrap();
        let solver = [
            recognize_tto(g).is_yes(),
            recognize_strict(g).is_yes(),
            recognize_strong(g, Variant::Strong).is_yes(),
            recognize_strong(g, Variant::StrongStrict).is_yes(),
        ];
        assert_eq!(
            solver, oracle,
            "{}: solver disagrees with oracle on {:?}",
            what,
            g.edges()
        );
    }

    let mut checked = 0usize;
    // Exhaustive: every graph on 4 vertices with labels in {1,2,3}.
    for g in exhaustive_graphs(4, &[1, 2, 3]) {
        check(&g, "exhaustive n=4", &budget);
        checked += 1;
    }
    let exhaustive = checked;

    // Random: 10^4 graphs with at most 10 edges.
    let mut rng = StdRng::seed_from_u64(1001);
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=10);
        let g = random_graph(&mut rng, n, m, &[1, 2, 3]);
        check(&g, "random m<=10", &budget);
        checked += 1;
    }

    println!(
        "[PASS] criterion 1: recognition matches the exhaustive oracle on {} instances ({} exhaustive n=4, {} random), all four variants, 0 mismatches",
        checked,
        exhaustive,
        checked - exhaustive
    );
}

#[test]
fn criterion_2_table_rows() {
    // Each cell of the orientation-condition table, checked as: the set of
    // proper orientations accepted by the definition-level checker equals
    // the set the cell prescribes. The strong-strict cell at t1<t2=t3 is the
    // derived correction (uv => wv and vu => wu); the published "wu and wv"
    // is provably wrong against the definitions.
    type Pred = Box<dyn Fn(&dyn Fn(&str, &str) -> bool) -> bool>;

    fn triangle(p: [u32; 3]) -> TemporalGraph {
        TemporalGraph::from_edges(&[("u", "v", p[0]), ("v", "w", p[1]), ("w", "u", p[2])])
    }
    fn path(p: [u32; 2]) -> TemporalGraph {
        TemporalGraph::from_edges(&[("u", "v", p[0]), ("v", "w", p[1])])
    }

    let non_cyclic: fn(&dyn Fn(&str, &str) -> bool) -> bool = |d| {
        !(d("u", "v") && d("v", "w") && d("w", "u")) && !(d("v", "u") && d("w", "v") && d("u", "w"))
    };
    let top: fn(&dyn Fn(&str, &str) -> bool) -> bool = |_| true;
    let bottom: fn(&dyn Fn(&str, &str) -> bool) -> bool = |_| false;
    let wu_eq_wv: fn(&dyn Fn(&str, &str) -> bool) -> bool = |d| d("w", "u") == d("w", "v");
    let wu_and_wv: fn(&dyn Fn(&str, &str) -> bool) -> bool = |d| d("w", "u") && d("w", "v");
    let tri_tail: fn(&dyn Fn(&str, &str) -> bool) -> bool =
        |d| (!d("v", "w") || d("u", "w")) && (!d("v", "u") || d("w", "u"));
    let uv_imp_wv_tri: fn(&dyn Fn(&str, &str) -> bool) -> bool =
        |d| (!d("u", "v") || d("w", "v")) && (!d("v", "u") || d("w", "u"));
    let uv_eq_wv: fn(&dyn Fn(&str, &str) -> bool) -> bool = |d| d("u", "v") == d("w", "v");
    let uv_imp_wv: fn(&dyn Fn(&str, &str) -> bool) -> bool = |d| !d("u", "v") || d("w", "v");

    let mut cells: Vec<(&str, TemporalGraph, Variant, Pred)> = Vec::new();
    // Triangle, t1 = t2 = t3.
    cells.push(("tri 1=2=3 tto: non-cyclic", triangle([1, 1, 1]), Variant::Tto, Box::new(non_cyclic)));
    cells.push(("tri 1=2=3 strong: bottom", triangle([1, 1, 1]), Variant::Strong, Box::new(bottom)));
    cells.push(("tri 1=2=3 strict: top", triangle([1, 1, 1]), Variant::Strict, Box::new(top)));
    cells.push(("tri 1=2=3 strong-strict: top", triangle([1, 1, 1]), Variant::StrongStrict, Box::new(top)));
    // Triangle, t1 < t2 = t3.
    cells.push(("tri 1<2=3 tto: wu = wv", triangle([1, 2, 2]), Variant::Tto, Box::new(wu_eq_wv)));
    cells.push(("tri 1<2=3 strong: wu and wv", triangle([1, 2, 2]), Variant::Strong, Box::new(wu_and_wv)));
    cells.push(("tri 1<2=3 strict: non-cyclic", triangle([1, 2, 2]), Variant::Strict, Box::new(non_cyclic)));
    cells.push((
        "tri 1<2=3 strong-strict: uv=>wv, vu=>wu (derived correction)",
        triangle([1, 2, 2]),
        Variant::StrongStrict,
        Box::new(uv_imp_wv_tri),
    ));
    // Triangle, t1 <= t2 < t3, both label shapes, all variants share a cell.
    for pat in [[1, 1, 2], [1, 2, 3]] {
        for v in Variant::ALL {
            cells.push(("tri t1<=t2<t3: vw=>uw, vu=>wu", triangle(pat), v, Box::new(tri_tail)));
        }
    }
    // Path, t1 = t2.
    cells.push(("path 1=2 tto: uv = wv", path([1, 1]), Variant::Tto, Box::new(uv_eq_wv)));
    cells.push(("path 1=2 strong: uv = wv", path([1, 1]), Variant::Strong, Box::new(uv_eq_wv)));
    cells.push(("path 1=2 strict: top", path([1, 1]), Variant::Strict, Box::new(top)));
    cells.push(("path 1=2 strong-strict: top", path([1, 1]), Variant::StrongStrict, Box::new(top)));
    // Path, t1 < t2.
    for v in Variant::ALL {
        cells.push(("path 1<2: uv => wv", path([1, 2]), v, Box::new(uv_imp_wv)));
    }

    let total = cells.len();
    for (name, g, variant, want) in cells {
        for mask in 0..1u64 << g.m() {
            let f = Orientation::from_mask(g.m(), mask);
            let directed = |from: &str, to: &str| -> bool {
                let (a, b) = (g.vertex(from).unwrap(), g.vertex(to).unwrap());
                let e = g.edge_between(a, b).unwrap();
                g.edge(e).ends(f.get(e).unwrap()).0 == a
            };
            let expected = want(&directed);
            let got = verify_orientation(&g, &f, variant).unwrap().is_none();
            assert_eq!(got, expected, "cell {:?}, orientation mask {:b}", name, mask);
        }
    }
    println!("[PASS] criterion 2: all {} table cells classified exactly by verify", total);
}

#[test]
fn criterion_3_figure_reproductions() {
    // Triangle with lambda(u,w)=3 < 5 = lambda(u,v) = lambda(v,w).
    let fig1b = TemporalGraph::from_edges(&[("u", "v", 5), ("v", "w", 5), ("w", "u", 3)]);
    let r = recognize_tto(&fig1b);
    let f = r.orientation().expect("fig 1(b) admits a transitive orientation");
    assert_eq!(verify_orientation(&fig1b, f, Variant::Tto), Ok(None));

    // Directed path a->b(2), b->c(1), c->d(3).
    let fig4 = TemporalGraph::from_edges(&[("a", "b", 2), ("b", "c", 1), ("c", "d", 3)]);
    let fo = orient_by_names(&fig4, &[("a", "b"), ("b", "c"), ("c", "d")]);
    let t = tail_heavy_table(&fig4, &fo, Variant::Tto).unwrap();
    let v = |s: &str| fig4.vertex(s).unwrap();
    assert_eq!(t.get(v("a"), v("d")), Some(label(3)));
    assert_eq!(t.get(v("b"), v("d")), Some(label(3)));
    let (_, y) = completion_set(&fig4, &fo, Variant::Tto).unwrap();
    let named: Vec<(String, String, u32)> = y
        .iter()
        .map(|d| (fig4.name(d.from).into(), fig4.name(d.to).into(), d.label.get()))
        .collect();
    assert_eq!(named.len(), 2);
    assert!(named.contains(&("a".into(), "d".into(), 3)));
    assert!(named.contains(&("b".into(), "d".into(), 3)));
    assert!(matches!(solve_ttc_oriented(&fig4, &fo, 2, Variant::Tto).unwrap(), TtcAnswer::Yes(_)));
    assert!(!solve_ttc_oriented(&fig4, &fo, 1, Variant::Tto).unwrap().is_yes());
    let min = oracle_complete(&fig4, &fo, 3, Variant::Tto, &OracleBudget::default()).unwrap();
    assert_eq!(min, Some(2), "oracle confirms the minimal completion size");

    // NAE(x1,x2,x2) and NAE(x1,x2,x3) as a multilayer instance.
    let formula = CnfFormula::new(CnfKind::MonoNae3, 3, vec![vec![1, 2, 2], vec![1, 2, 3]]).unwrap();
    let mto = gen_mto(&formula).unwrap();
    let r = solve_multilayer(&mto);
    let solver_witness = r.orientation().expect("the figure instance is a yes-instance");
    assert_eq!(verify_multilayer(&mto, solver_witness), Ok(None));
    // Witness for x1=false, x2=true, x3=false. Because the first clause
    // repeats x2, the published orientation rule produces an invalid
    // orientation (an unclosed 2-path inside layer 2); one repeated-clause
    // triangle edge must point away from its attachment instead.
    let witness = common::orient_multi_by_names(
        &mto,
        &[
            ("t1.1", "t1.0"),
            ("t1.1", "t1.2"),
            ("t1.0", "t1.2"),
            ("t1.1", "v_x1"),
            ("v_x2", "t1.2"),
            ("v_x2", "t1.0"),
            ("t2.1", "t2.0"),
            ("t2.1", "t2.2"),
            ("t2.0", "t2.2"),
            ("t2.1", "v_x1"),
            ("v_x2", "t2.2"),
            ("t2.0", "v_x3"),
        ],
    );
    assert_eq!(verify_multilayer(&mto, &witness), Ok(None));
    let decoded = decode_assignment(&formula, &Instance::Multi(mto.clone()), &witness)
        .expect("witness decodes to a NAE-satisfying assignment");
    assert_eq!(decoded, vec![false, true, false]);
    println!(
        "[PASS] criterion 3: figure instances reproduced (triangle orientable; T[a,d]=T[b,d]=3 with minimal completion 2; multilayer gadget solved yes and a witness decodes to {:?})",
        decoded
    );
}

fn random_sat34(rng: &mut StdRng, nvars: usize) -> CnfFormula {
    assert_eq!(4 * nvars % 3, 0);
    let m = 4 * nvars / 3;
    let mut slots: Vec<i32> = (1..=nvars as i32).flat_map(|v| std::iter::repeat(v).take(4)).collect();
    slots.shuffle(rng);
    let clauses: Vec<Vec<i32>> = slots
        .chunks(3)
        .map(|c| c.iter().map(|&v| if rng.gen_bool(0.5) { v } else { -v }).collect())
        .collect();
    assert_eq!(clauses.len(), m);
    CnfFormula::new(CnfKind::Sat34, nvars, clauses).unwrap()
}

#[test]
fn criterion_4_reduction_round_trips() {
    let mut rng = StdRng::seed_from_u64(404);

    // Strict-variant instances from (3,4)-SAT formulas.
    let mut sat34: Vec<CnfFormula> = Vec::new();
    // Known unsatisfiable fixture: (x|x|y)(!x|!x|y)(z|z|!y)(!z|!z|!y).
    sat34.push(
        CnfFormula::new(
            CnfKind::Sat34,
            3,
            vec![vec![1, 1, 2], vec![-1, -1, 2], vec![3, 3, -2], vec![-3, -3, -2]],
        )
        .unwrap(),
    );
    for i in 0..170 {
        sat34.push(random_sat34(&mut rng, if i % 3 == 0 { 6 } else { 3 }));
    }
    // Padded arbitrary 3-CNFs (padding preserves satisfiability).
    for _ in 0..40 {
        let nv = rng.gen_range(2..=3usize);
        let m = rng.gen_range(2..=4usize);
        let clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                (0..3)
                    .map(|_| {
                        let v = rng.gen_range(1..=nv) as i32;
                        if rng.gen_bool(0.5) {
                            v
                        } else {
                            -v
                        }
                    })
                    .collect()
            })
            .collect();
        sat34.push(pad_to_sat34(nv, &clauses).unwrap());
    }
    let mut sat_yes = 0;
    for f in &sat34 {
        let g = gen_strict_tto(f).unwrap();
        assert!(g.max_label().unwrap() <= label(4), "labels stay within 1..=4");
        let expected = f.brute_force_satisfiable();
        let r = recognize_strict(&g);
        assert_eq!(r.is_yes(), expected, "strict round trip on {:?}", f.clauses);
        if let Some(witness) = r.orientation() {
            sat_yes += 1;
            assert_eq!(verify_orientation(&g, witness, Variant::Strict), Ok(None));
            let decoded = decode_assignment(f, &Instance::Graph(g.clone()), witness).unwrap();
            assert!(f.is_satisfied(&decoded));
        }
    }

    // Completion instances from implicative formulas. Clauses span two
    // distinct variables (a one-variable clause would ask the completion to
    // double an existing hub edge, which the model cannot express).
    let mut impl2: Vec<CnfFormula> = vec![
        // Best assignment satisfies 3 of 4: x=>y, y=>x, x=>!y, !x=>y.
        CnfFormula::new(
            CnfKind::Impl2,
            2,
            vec![vec![-1, 2], vec![-2, 1], vec![-1, -2], vec![1, 2]],
        )
        .unwrap(),
    ];
    for _ in 0..200 {
        let nv = rng.gen_range(2..=4usize);
        let m = rng.gen_range(2..=5usize);
        let clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                let a = rng.gen_range(1..=nv) as i32;
                let mut b = rng.gen_range(1..=nv) as i32;
                while b == a {
                    b = rng.gen_range(1..=nv) as i32;
                }
                vec![
                    if rng.gen_bool(0.5) { a } else { -a },
                    if rng.gen_bool(0.5) { b } else { -b },
                ]
            })
            .collect();
        impl2.push(CnfFormula::new(CnfKind::Impl2, nv, clauses).unwrap());
    }
    for f in &impl2 {
        let m = f.clauses.len();
        let best = f.brute_force_best_k();
        // Yes at the best k with budget m - k.
        let (g, partial, budget) = gen_ttc(f, best).unwrap();
        assert_eq!(budget, m - best);
        match solve_ttc_fpt(&g, &partial, budget, Variant::Tto) {
            FptAnswer::Yes(out) => {
                assert!(out.completion.added.len() <= budget);
                let (g2, f2) = apply_completion(&g, &out.orientation, &out.completion.added);
                assert_eq!(verify_orientation(&g2, &f2, Variant::Tto), Ok(None));
                let decoded =
                    decode_assignment(f, &Instance::Graph(g.clone()), &out.orientation).unwrap();
                assert!(f.satisfied_count(&decoded) >= best);
            }
            FptAnswer::No(reason) => {
                panic!("expected yes at best k={} on {:?}: {:?}", best, f.clauses, reason)
            }
        }
        // No at k = best + 1 with budget m - best - 1.
        if best < m {
            let (g, partial, budget) = gen_ttc(f, best + 1).unwrap();
            assert!(
                !solve_ttc_fpt(&g, &partial, budget, Variant::Tto).is_yes(),
                "expected no at k={} on {:?}",
                best + 1,
                f.clauses
            );
        }
    }

    // Multilayer instances from monotone NAE formulas over three distinct
    // variables per clause (the gadget encodes exactly those; see the
    // repeated-literal test in the reductions module). The Fano plane's
    // seven lines are the classic unsatisfiable fixture.
    let fano = CnfFormula::new(
        CnfKind::MonoNae3,
        7,
        vec![
            vec![1, 2, 3],
            vec![1, 4, 5],
            vec![1, 6, 7],
            vec![2, 4, 6],
            vec![2, 5, 7],
            vec![3, 4, 7],
            vec![3, 5, 6],
        ],
    )
    .unwrap();
    assert!(!fano.brute_force_satisfiable());
    let mut nae: Vec<CnfFormula> = vec![fano];
    for _ in 0..210 {
        let nv = rng.gen_range(3..=5usize);
        let m = rng.gen_range(1..=4usize);
        let clauses: Vec<Vec<i32>> = (0..m)
            .map(|_| {
                let mut vars: Vec<i32> = (1..=nv as i32).collect();
                for i in (1..vars.len()).rev() {
                    let j = rng.gen_range(0..=i);
                    vars.swap(i, j);
                }
                vars[..3].to_vec()
            })
            .collect();
        nae.push(CnfFormula::new(CnfKind::MonoNae3, nv, clauses).unwrap());
    }
    for f in &nae {
        let g = gen_mto(f).unwrap();
        let expected = f.brute_force_satisfiable();
        let r = solve_multilayer(&g);
        assert_eq!(r.is_yes(), expected, "multilayer round trip on {:?}", f.clauses);
        if let Some(witness) = r.orientation() {
            let decoded = decode_assignment(f, &Instance::Multi(g.clone()), witness).unwrap();
            assert!(f.is_satisfied(&decoded));
        }
    }

    println!(
        "[PASS] criterion 4: reduction round trips clean ({} strict formulas ({} satisfiable), {} completion formulas at best/best+1, {} multilayer formulas), 0 mismatches",
        sat34.len(),
        sat_yes,
        impl2.len(),
        nae.len()
    );
}

#[test]
fn criterion_5_completion_soundness_optimality() {
    let budget = OracleBudget::default();
    let mut instances: Vec<(TemporalGraph, Orientation)> = Vec::new();

    // Every graph on 4 vertices over labels {1,2} with at most 5 edges, one
    // deterministic orientation each.
    let mut rng = StdRng::seed_from_u64(505);
    for g in exhaustive_graphs(4, &[1, 2]) {
        if g.m() == 0 || g.m() > 5 {
            continue;
        }
        let f = random_orientation(&mut rng, g.m());
        instances.push((g, f));
    }
    // Random n = 5 instances with a third label.
    for _ in 0..700 {
        let m = rng.gen_range(1..=7);
        let g = random_graph(&mut rng, 5, m, &[1, 2, 3]);
        if g.m() == 0 {
            continue;
        }
        let f = random_orientation(&mut rng, g.m());
        instances.push((g, f));
    }

    let mut count = 0;
    for (g, f) in &instances {
        for variant in Variant::ALL {
            let min = oracle_complete(g, f, 3, variant, &budget).unwrap();
            for k in 0..=3usize {
                let answer = solve_ttc_oriented(g, f, k, variant).unwrap();
                match (&answer, min) {
                    (TtcAnswer::Yes(c), Some(min)) => {
                        assert!(min <= k);
                        assert_eq!(c.added.len(), min, "non-minimal completion for k={}", k);
                        let (g2, f2) = apply_completion(g, f, &c.added);
                        assert_eq!(verify_orientation(&g2, &f2, variant), Ok(None));
                    }
                    (TtcAnswer::No(_), Some(min)) => {
                        assert!(min > k, "solver says no but the oracle completes with {} <= {}", min, k)
                    }
                    (TtcAnswer::No(_), None) => {}
                    (TtcAnswer::Yes(c), None) => {
                        panic!("solver invents a completion of size {} where the oracle finds none", c.added.len())
                    }
                }
                count += 1;
            }
        }
    }
    println!(
        "[PASS] criterion 5: completion matches the oracle (answers and minimum sizes) on {} instance/variant/budget combinations; every yes verifies",
        count
    );
}

#[test]
fn criterion_6_class_machinery() {
    let mut rng = StdRng::seed_from_u64(606);
    let mut dichotomy_checked = 0usize;
    for _ in 0..10_000 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=12);
        let g = random_graph(&mut rng, n, m, &[1, 2, 3]);
        if let Ok(classes) = oracle_lambda_classes(&g) {
            for class in &classes {
                let mut codes: Vec<usize> = class.iter().map(|d| d.code()).collect();
                let mut rev: Vec<usize> = class.iter().map(|d| d.reversed().code()).collect();
                codes.sort_unstable();
                rev.sort_unstable();
                let disjoint = codes.iter().all(|c| rev.binary_search(c).is_err());
                assert!(disjoint || codes == rev, "class dichotomy violated");
                dichotomy_checked += 1;
            }
        }
        if let Ok(p) = build_implication_classes(&g) {
            for e in 0..g.m() {
                assert_eq!(
                    p.literal(DirEdge { edge: e, dir: Dir::Fwd }),
                    -p.literal(DirEdge { edge: e, dir: Dir::Rev })
                );
            }
        }
    }

    // Algorithmic classes equal the naive fixpoint closure on m <= 10.
    let mut rng = StdRng::seed_from_u64(616);
    let mut equal_checked = 0usize;
    for g in exhaustive_graphs(4, &[1, 2]) {
        match (build_implication_classes(&g), oracle_lambda_classes(&g)) {
            (Ok(p), Ok(classes)) => assert_eq!(p.canonical_sets(), canonical_partition(&classes)),
            (Err(_), Err(_)) => {}
            _ => panic!("improper-class disagreement"),
        }
        equal_checked += 1;
    }
    for _ in 0..2000 {
        let n = rng.gen_range(2..=8);
        let m = rng.gen_range(0..=10);
        let g = random_graph(&mut rng, n, m, &[1, 2, 3]);
        match (build_implication_classes(&g), oracle_lambda_classes(&g)) {
            (Ok(p), Ok(classes)) => assert_eq!(p.canonical_sets(), canonical_partition(&classes)),
            (Err(_), Err(_)) => {}
            _ => panic!("improper-class disagreement"),
        }
        equal_checked += 1;
    }

    println!(
        "[PASS] criterion 6 (dichotomy, reversal symmetry, oracle equality): {} classes and {} instances checked",
        dichotomy_checked, equal_checked
    );
}

/// The triangle-lemma sub-criterion, implemented as stated. It fails: the
/// lemma has a genuine counterexample (see tests/properties.rs, which pins
/// it, and the project notes). The forcing chain may leave the triangle
/// through vertices joined to `a` by higher-labeled edges, which the
/// published induction cannot handle.
#[test]
fn criterion_6_triangle_lemma_part3() {
    let mut rng = StdRng::seed_from_u64(660);
    let mut violations = Vec::new();
    for i in 0..10_000 {
        let n = rng.gen_range(3..=8);
        let m = rng.gen_range(3..=12);
        let labels: &[u32] = if i % 2 == 0 { &[1, 2] } else { &[1, 2, 3] };
        let g = random_graph(&mut rng, n, m, labels);
        let p = match build_implication_classes(&g) {
            Ok(p) => p,
            Err(_) => continue,
        };
        for site in enumerate_constraint_sites(&g) {
            let (verts, labels) = match site {
                ConstraintSite::Triangle { verts, labels } => (verts, labels),
                _ => continue,
            };
            if labels[0] != labels[2] {
                continue;
            }
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
                if cls_a == -cls_b || cls_a == -cls_c {
                    continue;
                }
                let class_idx = cls_a.unsigned_abs() as usize - 1;
                if p.members[class_idx].iter().any(|d| {
                    let (x, y) = g.edge(d.edge).ends(d.dir);
                    x == a || y == a
                }) {
                    violations.push((i, g.clone(), g.name(a).to_owned()));
                }
            }
        }
    }
    if !violations.is_empty() {
        let (i, g, a) = &violations[0];
        panic!(
            "[FAIL] criterion 6 (triangle lemma part 3): the property is false; {} violations in 10^4 random graphs. First at sample {}: vertex {} is touched by an edge of class A. Instance:\n{}\nThe lemma's published proof assumes the chain vertex b_i+1 is joined to a with the triangle's label; a higher label breaks the induction. See tests/properties.rs::temporal_triangle_lemma_part3_has_a_counterexample and the project notes.",
            violations.len(),
            i,
            a,
            temporient::io::serialize_instance(&Instance::Graph(g.clone()))
        );
    }
    println!("[PASS] criterion 6 (triangle lemma part 3): no violation in this sample");
}

#[test]
fn criterion_7_performance_sanity() {
    // Soft bound: recognition at n=200, m~2000 under five seconds.
    let mut rng = StdRng::seed_from_u64(700);
    let g = random_graph(&mut rng, 200, 2000, &[1, 2, 3, 4]);
    assert!(g.m() >= 1900, "generator produced {} edges", g.m());
    let start = Instant::now();
    let r = recognize_tto(&g);
    let elapsed = start.elapsed();
    assert!(
        elapsed.as_secs_f64() < 5.0,
        "recognize_tto took {:?} on n=200, m={}",
        elapsed,
        g.m()
    );

    // Quadratic shape: doubling m at fixed density may cost at most 5x. The
    // instances exercise the full per-edge-sweep envelope: uniform labels
    // (no pruning in the backward searches) under an acyclic orientation.
    let time_ttc = |n: usize, m: usize, seed: u64| {
        let mut rng = StdRng::seed_from_u64(seed);
        let g = random_graph(&mut rng, n, m, &[1]);
        let mut f = Orientation::empty(g.m());
        for e in 0..g.m() {
            f.set(e, Dir::Fwd); // index order: a DAG
        }
        let mut best = f64::MAX;
        for _ in 0..3 {
            let start = Instant::now();
            let _ = solve_ttc_oriented(&g, &f, 3, Variant::Tto).unwrap();
            best = best.min(start.elapsed().as_secs_f64());
        }
        best
    };
    let small = time_ttc(85, 800, 701);
    let large = time_ttc(120, 1600, 702);
    let ratio = large / small.max(1e-6);
    assert!(
        ratio <= 5.0,
        "doubling m scaled runtime by {:.2}x ({}s -> {}s)",
        ratio,
        small,
        large
    );
    println!(
        "[PASS] criterion 7: recognize_tto(n=200, m={}) in {:?} (answer {}); completion doubling ratio {:.2}x",
        g.m(),
        elapsed,
        if r.is_yes() { "YES" } else { "NO" },
        ratio
    );
}
