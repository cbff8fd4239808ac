// Scratch: repeated-variable NAE clauses versus the MTO gadget.
use temporient::oracle::{oracle_multilayer, OracleBudget};
use temporient::recognize::solve_multilayer;
use temporient::reductions::{gen_mto, CnfFormula, CnfKind};

fn main() {
    let budget = OracleBudget::default();

    // Triple repeat: formula is unsatisfiable.
    let f = CnfFormula::new(CnfKind::MonoNae3, 1, vec![vec![1, 1, 1]]).unwrap();
    let g = gen_mto(&f).unwrap();
    println!(
        "NAE(x,x,x): sat={} oracle={} solver={}",
        f.brute_force_satisfiable(),
        oracle_multilayer(&g, &budget).unwrap(),
        solve_multilayer(&g).is_yes()
    );

    // Double repeats chained into an odd != cycle: unsatisfiable formula.
    let f = CnfFormula::new(
        CnfKind::MonoNae3,
        3,
        vec![vec![1, 1, 2], vec![2, 2, 3], vec![3, 3, 1]],
    )
    .unwrap();
    let g = gen_mto(&f).unwrap();
    println!(
        "x!=y, y!=z, z!=x: sat={} oracle_edges={} solver={}",
        f.brute_force_satisfiable(),
        g.m(),
        solve_multilayer(&g).is_yes()
    );

    // Distinct-variable random formulas: solver vs formula satisfiability.
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};
    let mut rng = StdRng::seed_from_u64(9);
    let mut mism = 0;
    for _ in 0..400 {
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
        let f = CnfFormula::new(CnfKind::MonoNae3, nv, clauses).unwrap();
        let g = gen_mto(&f).unwrap();
        if f.brute_force_satisfiable() != solve_multilayer(&g).is_yes() {
            mism += 1;
            println!("distinct-vars mismatch on {:?}", f.clauses);
        }
    }
    println!("distinct-variable sweep: {} mismatches", mism);
}
