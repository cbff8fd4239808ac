//! Instance generators for the three hardness constructions, the matching
//! assignment decoders, and a padding helper that rewrites arbitrary 3-CNF
//! into the exact-occurrence form the strict-variant construction expects.



use thiserror::Error;

use crate::graph::{
    GraphBuilder, MultiLabelTemporalGraph, Orientation, TemporalGraph, TimeLabel, VertexId,
};
use crate::io::Instance;

/// Formula kinds accepted by the generators.
///
/// `Sat34`: exactly three literals per clause and every variable in exactly
/// four clauses (counting multiplicity). `Impl2`: two literals per clause,
/// read as the implication `(-l1 => l2)`. `MonoNae3`: three positive
/// literals per clause with not-all-equal semantics.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CnfKind {
    Sat34,
    Impl2,
    MonoNae3,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CnfFormula {
    pub kind: CnfKind,
    pub nvars: usize,
    /// Signed 1-based literals.
    pub clauses: Vec<Vec<i32>>,
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum CnfError {
    #[error("clause {0} has {1} literals, expected {2}")]
    WrongArity(usize, usize, usize),
    #[error("literal {0} out of range for {1} variables")]
    OutOfRange(i32, usize),
    #[error("monotone clause {0} contains a negated literal")]
    NegatedLiteral(usize),
    #[error("implicative clause {0} uses one variable twice")]
    RepeatedVariable(usize),
    #[error("variable {0} occurs {1} times, expected exactly 4")]
    OccurrenceCount(usize, usize),
    #[error("budget parameter k={0} exceeds clause count {1}")]
    BadBudget(usize, usize),
    #[error("dimacs: {0}")]
    Dimacs(String),
}

impl CnfFormula {
    pub fn new(kind: CnfKind, nvars: usize, clauses: Vec<Vec<i32>>) -> Result<CnfFormula, CnfError> {
        let f = CnfFormula { kind, nvars, clauses };
        f.validate()?;
        Ok(f)
    }

    pub fn validate(&self) -> Result<(), CnfError> {
        let arity = match self.kind {
            CnfKind::Sat34 | CnfKind::MonoNae3 => 3,
            CnfKind::Impl2 => 2,
        };
        let mut occ = vec![0usize; self.nvars + 1];
        for (i, clause) in self.clauses.iter().enumerate() {
            if clause.len() != arity {
                return Err(CnfError::WrongArity(i + 1, clause.len(), arity));
            }
            for &lit in clause {
                let var = lit.unsigned_abs() as usize;
                if lit == 0 || var > self.nvars {
                    return Err(CnfError::OutOfRange(lit, self.nvars));
                }
                if self.kind == CnfKind::MonoNae3 && lit < 0 {
                    return Err(CnfError::NegatedLiteral(i + 1));
                }
                occ[var] += 1;
            }
            // The completion gadget joins a clause vertex to the two literal
            // vertices; a clause inside one variable would join the two ends
            // of an existing hub edge, which the completion model cannot
            // close.
            if self.kind == CnfKind::Impl2 && clause[0].unsigned_abs() == clause[1].unsigned_abs() {
                return Err(CnfError::RepeatedVariable(i + 1));
            }
        }
        if self.kind == CnfKind::Sat34 {
            for var in 1..=self.nvars {
                if occ[var] != 4 {
                    return Err(CnfError::OccurrenceCount(var, occ[var]));
                }
            }
        }
        Ok(())
    }

    /// Clause satisfaction under an assignment (`values[i]` is variable
    /// `i+1`). NAE kinds require a mixed clause.
    pub fn clause_satisfied(&self, clause: &[i32], values: &[bool]) -> bool {
        let lit_val = |l: i32| {
            let v = values[l.unsigned_abs() as usize - 1];
            if l > 0 {
                v
            } else {
                !v
            }
        };
        match self.kind {
            CnfKind::MonoNae3 => {
                let vals: Vec<bool> = clause.iter().map(|&l| lit_val(l)).collect();
                vals.iter().any(|&b| b) && vals.iter().any(|&b| !b)
            }
            _ => clause.iter().any(|&l| lit_val(l)),
        }
    }

    pub fn satisfied_count(&self, values: &[bool]) -> usize {
        self.clauses.iter().filter(|c| self.clause_satisfied(c, values)).count()
    }

    pub fn is_satisfied(&self, values: &[bool]) -> bool {
        self.satisfied_count(values) == self.clauses.len()
    }

    /// Truth-table satisfiability; intended for small formulas only.
    pub fn brute_force_satisfiable(&self) -> bool {
        assert!(self.nvars <= 24, "truth-table oracle is for small formulas");
        (0..1u64 << self.nvars).any(|mask| {
            let values: Vec<bool> = (0..self.nvars).map(|i| mask >> i & 1 == 1).collect();
            self.is_satisfied(&values)
        })
    }

    /// Maximum number of simultaneously satisfied clauses, by truth table.
    pub fn brute_force_best_k(&self) -> usize {
        assert!(self.nvars <= 24, "truth-table oracle is for small formulas");
        (0..1u64 << self.nvars)
            .map(|mask| {
                let values: Vec<bool> = (0..self.nvars).map(|i| mask >> i & 1 == 1).collect();
                self.satisfied_count(&values)
            })
            .max()
            .unwrap_or(0)
    }

    /// Standard DIMACS: `p cnf <vars> <clauses>` header, `c` comments,
    /// 0-terminated clauses.
    pub fn parse_dimacs(kind: CnfKind, text: &str) -> Result<CnfFormula, CnfError> {
        let mut nvars = None;
        let mut nclauses = 0usize;
        let mut lits: Vec<i32> = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            if let Some(rest) = line.strip_prefix('p') {
                let toks: Vec<&str> = rest.split_whitespace().collect();
                if toks.len() != 3 || toks[0] != "cnf" {
                    return Err(CnfError::Dimacs(format!("bad problem line {:?}", line)));
                }
                nvars = Some(
                    toks[1]
                        .parse::<usize>()
                        .map_err(|_| CnfError::Dimacs("bad variable count".into()))?,
                );
                nclauses = toks[2]
                    .parse::<usize>()
                    .map_err(|_| CnfError::Dimacs("bad clause count".into()))?;
                continue;
            }
            for tok in line.split_whitespace() {
                lits.push(tok.parse::<i32>().map_err(|_| CnfError::Dimacs(format!("bad literal {:?}", tok)))?);
            }
        }
        let nvars = nvars.ok_or_else(|| CnfError::Dimacs("missing `p cnf` header".into()))?;
        let mut clauses = Vec::new();
        let mut cur = Vec::new();
        for lit in lits {
            if lit == 0 {
                clauses.push(std::mem::take(&mut cur));
            } else {
                cur.push(lit);
            }
        }
        if !cur.is_empty() {
            clauses.push(cur);
        }
        if clauses.len() != nclauses {
            return Err(CnfError::Dimacs(format!(
                "header promises {} clauses, found {}",
                nclauses,
                clauses.len()
            )));
        }
        CnfFormula::new(kind, nvars, clauses)
    }

    pub fn to_dimacs(&self) -> String {
        let mut out = format!("p cnf {} {}\n", self.nvars, self.clauses.len());
        for clause in &self.clauses {
            for lit in clause {
                out.push_str(&format!("{} ", lit));
            }
            out.push_str("0\n");
        }
        out
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum DecodeError {
    #[error("orientation does not decode to a witness: {0}")]
    NotAWitness(String),
    #[error("instance does not match the generator's naming: {0}")]
    BadInstance(String),
}

fn label(v: u32) -> TimeLabel {
    TimeLabel::new(v).expect("generator labels are positive")
}

// ---------------------------------------------------------------------------
// Strict-variant hardness instances: (3,4)-SAT formulas.
// ---------------------------------------------------------------------------

fn strict_pair_names(var: usize, occurrence: usize) -> (String, String) {
    let tag = ["a", "b", "c", "d"][occurrence - 1];
    (format!("{}_x{}", tag, var), format!("{}p_x{}", tag, var))
}

fn strict_literal_vertex(clause: usize, position: usize) -> String {
    let tag = ["up", "vp", "wp"][position - 1];
    format!("{}_c{}", tag, clause)
}

/// Build the strict-variant instance: per variable an eight-cycle with
/// labels alternating 1,2; per clause a six-vertex gadget on labels 1..3;
/// per occurrence a label-4 edge joining the occurrence pair to the clause's
/// literal vertex. Uses only labels 1..4.
pub fn gen_strict_tto(f: &CnfFormula) -> Result<TemporalGraph, CnfError> {
    assert_eq!(f.kind, CnfKind::Sat34);
    f.validate()?;
    let mut b = GraphBuilder::new();

    // Variable gadgets: a - a' - b - b' - c - c' - d - d' - a with labels
    // alternating 1, 2.
    for var in 1..=f.nvars {
        let mut ring = Vec::new();
        for occ in 1..=4 {
            let (plain, primed) = strict_pair_names(var, occ);
            ring.push(b.intern(&plain).unwrap());
            ring.push(b.intern(&primed).unwrap());
        }
        for i in 0..8 {
            let t = if i % 2 == 0 { 1 } else { 2 };
            b.add_edge(ring[i], ring[(i + 1) % 8], label(t)).unwrap();
        }
    }

    // Clause gadgets.
    for clause in 1..=f.clauses.len() {
        let u = b.intern(&format!("u_c{}", clause)).unwrap();
        let up = b.intern(&format!("up_c{}", clause)).unwrap();
        let v = b.intern(&format!("v_c{}", clause)).unwrap();
        let vp = b.intern(&format!("vp_c{}", clause)).unwrap();
        let w = b.intern(&format!("w_c{}", clause)).unwrap();
        let wp = b.intern(&format!("wp_c{}", clause)).unwrap();
        b.add_edge(u, up, label(2)).unwrap();
        b.add_edge(v, vp, label(1)).unwrap();
        b.add_edge(w, wp, label(2)).unwrap();
        b.add_edge(u, v, label(2)).unwrap();
        b.add_edge(v, w, label(3)).unwrap();
        b.add_edge(w, u, label(3)).unwrap();
        b.add_edge(wp, u, label(3)).unwrap();
        b.add_edge(w, vp, label(3)).unwrap();
    }

    // Connectors: occurrence i of variable x at clause position j joins the
    // i-th pair (plain vertex when positive, primed when negated) to the
    // j-th literal vertex, with label 4.
    let mut occurrence = vec![0usize; f.nvars + 1];
    for (ci, clause) in f.clauses.iter().enumerate() {
        for (pos, &lit) in clause.iter().enumerate() {
            let var = lit.unsigned_abs() as usize;
            occurrence[var] += 1;
            let (plain, primed) = strict_pair_names(var, occurrence[var]);
            let gadget = if lit > 0 { plain } else { primed };
            let gv = b.intern(&gadget).unwrap();
            let lv = b.intern(&strict_literal_vertex(ci + 1, pos + 1)).unwrap();
            b.add_edge(gv, lv, label(4)).unwrap();
        }
    }

    let g = b.build();
    debug_assert_eq!(g.n(), 8 * f.nvars + 6 * f.clauses.len());
    debug_assert_eq!(g.m(), 8 * f.nvars + 11 * f.clauses.len());
    debug_assert!(g.max_label().map_or(true, |t| t.get() <= 4));
    Ok(g)
}

// ---------------------------------------------------------------------------
// Completion hardness instances: implicative 2-CNF with a clause budget.
// ---------------------------------------------------------------------------

fn ttc_literal_vertex(lit: i32) -> String {
    if lit > 0 {
        format!("p_x{}", lit)
    } else {
        format!("n_x{}", -lit)
    }
}

/// Build a completion instance from an implicative formula and target k:
/// per variable a hub pair joined by m-k+1 auxiliary 4-cycles (labels
/// alternating 1 and 4), per clause `(a => b)` a vertex with a label-2 edge
/// to `v_a` and a label-3 edge to `v_b`. The instance is the graph with an
/// empty orientation and budget m-k.
pub fn gen_ttc(f: &CnfFormula, k: usize) -> Result<(TemporalGraph, Orientation, usize), CnfError> {
    assert_eq!(f.kind, CnfKind::Impl2);
    f.validate()?;
    let m = f.clauses.len();
    if k > m {
        return Err(CnfError::BadBudget(k, m));
    }
    let budget = m - k;
    let mut b = GraphBuilder::new();

    for var in 1..=f.nvars {
        let p = b.intern(&format!("p_x{}", var)).unwrap();
        let n = b.intern(&format!("n_x{}", var)).unwrap();
        b.add_edge(p, n, label(1)).unwrap();
        for i in 1..=budget + 1 {
            let pi = b.intern(&format!("p_x{}.{}", var, i)).unwrap();
            let ni = b.intern(&format!("n_x{}.{}", var, i)).unwrap();
            b.add_edge(pi, ni, label(1)).unwrap();
            b.add_edge(pi, n, label(4)).unwrap();
            b.add_edge(ni, p, label(4)).unwrap();
        }
    }

    for (ci, clause) in f.clauses.iter().enumerate() {
        // Clause (l1 | l2) read as implication a => b with a = -l1, b = l2.
        let a = -clause[0];
        let bb = clause[1];
        let w = b.intern(&format!("w_c{}", ci + 1)).unwrap();
        let va = b.intern(&ttc_literal_vertex(a)).unwrap();
        let vb = b.intern(&ttc_literal_vertex(bb)).unwrap();
        b.add_edge(w, va, label(2)).unwrap();
        b.add_edge(w, vb, label(3)).unwrap();
    }

    let g = b.build();
    debug_assert_eq!(g.n(), f.nvars * (2 + 2 * (budget + 1)) + m);
    debug_assert_eq!(g.m(), f.nvars * (1 + 3 * (budget + 1)) + 2 * m);
    let empty = Orientation::empty(g.m());
    Ok((g, empty, budget))
}

// ---------------------------------------------------------------------------
// Multilayer hardness instances: monotone NAE-3SAT.
// ---------------------------------------------------------------------------

fn mto_triangle_vertex(clause: usize, corner: usize) -> String {
    format!("t{}.{}", clause, corner)
}

fn mto_hub(var: usize) -> String {
    format!("v_x{}", var)
}

/// Build the multilayer instance: per clause a triangle on label n+1 whose
/// edge j attaches at its clockwise endpoint; per variable a hub vertex; the
/// j-th literal `x_v` adds label v to clause edge j and a label-v connector
/// from the attachment vertex to the hub. At most two labels per edge.
pub fn gen_mto(f: &CnfFormula) -> Result<MultiLabelTemporalGraph, CnfError> {
    assert_eq!(f.kind, CnfKind::MonoNae3);
    f.validate()?;
    let n = f.nvars;
    let top = label(n as u32 + 1);
    let mut b = GraphBuilder::new();

    for var in 1..=n {
        b.intern(&mto_hub(var)).unwrap();
    }

    for (ci, clause) in f.clauses.iter().enumerate() {
        let corners: Vec<VertexId> = (0..3)
            .map(|c| b.intern(&mto_triangle_vertex(ci + 1, c)).unwrap())
            .collect();
        for (j, &lit) in clause.iter().enumerate() {
            let var = lit as usize;
            let tail = corners[j];
            let attach = corners[(j + 1) % 3];
            b.add_multi_edge(tail, attach, vec![label(var as u32), top]).unwrap();
            let hub = b.intern(&mto_hub(var)).unwrap();
            b.add_multi_edge(attach, hub, vec![label(var as u32)]).unwrap();
        }
    }

    let g = b.build_multi();
    debug_assert_eq!(g.n(), 3 * f.clauses.len() + n);
    debug_assert_eq!(g.m(), 6 * f.clauses.len());
    debug_assert!(g.edges().iter().all(|e| e.labels.len() <= 2));
    Ok(g)
}

// ---------------------------------------------------------------------------
// Decoding witnesses back to assignments.
// ---------------------------------------------------------------------------

fn directed_from(g: &TemporalGraph, f: &Orientation, from: VertexId, to: VertexId) -> Option<bool> {
    g.edge_between(from, to).map(|e| {
        let d = f.get(e).expect("witness orientation is proper");
        g.edge(e).ends(d).0 == from
    })
}

/// Invert a witness orientation of a generated instance to a variable
/// assignment, then check the promised property: satisfying for the strict
/// and multilayer constructions, at least k satisfied clauses for the
/// completion construction (k recovered from the instance's auxiliary-cycle
/// count).
pub fn decode_assignment(
    f: &CnfFormula,
    instance: &Instance,
    orientation: &Orientation,
) -> Result<Vec<bool>, DecodeError> {
    match (f.kind, instance) {
        (CnfKind::Sat34, Instance::Graph(g)) => decode_strict(f, g, orientation),
        (CnfKind::Impl2, Instance::Graph(g)) | (CnfKind::Impl2, Instance::Oriented(g, _)) => {
            decode_ttc(f, g, orientation)
        }
        (CnfKind::MonoNae3, Instance::Multi(g)) => decode_mto(f, g, orientation),
        _ => Err(DecodeError::BadInstance("formula kind does not match instance kind".into())),
    }
}

fn decode_strict(f: &CnfFormula, g: &TemporalGraph, orientation: &Orientation) -> Result<Vec<bool>, DecodeError> {
    let mut values = Vec::with_capacity(f.nvars);
    for var in 1..=f.nvars {
        let (a, ap) = strict_pair_names(var, 1);
        let lookup = |name: &str| {
            g.vertex(name)
                .ok_or_else(|| DecodeError::BadInstance(format!("missing vertex {}", name)))
        };
        let (av, apv) = (lookup(&a)?, lookup(&ap)?);
        // The eight-cycle orients alternately; a_x -> a'_x encodes true.
        let fwd = directed_from(g, orientation, av, apv)
            .ok_or_else(|| DecodeError::BadInstance(format!("missing edge {} -- {}", a, ap)))?;
        values.push(fwd);
    }
    if !f.is_satisfied(&values) {
        return Err(DecodeError::NotAWitness("decoded assignment leaves a clause unsatisfied".into()));
    }
    Ok(values)
}

fn decode_ttc(f: &CnfFormula, g: &TemporalGraph, orientation: &Orientation) -> Result<Vec<bool>, DecodeError> {
    let mut values = Vec::with_capacity(f.nvars);
    for var in 1..=f.nvars {
        let p = g
            .vertex(&format!("p_x{}", var))
            .ok_or_else(|| DecodeError::BadInstance(format!("missing vertex p_x{}", var)))?;
        let n = g
            .vertex(&format!("n_x{}", var))
            .ok_or_else(|| DecodeError::BadInstance(format!("missing vertex n_x{}", var)))?;
        // x true iff the hub edge points toward the negated side.
        let fwd = directed_from(g, orientation, p, n)
            .ok_or_else(|| DecodeError::BadInstance(format!("missing hub edge of x{}", var)))?;
        values.push(fwd);
    }
    // Recover k: each variable carries budget+1 auxiliary pairs.
    let m = f.clauses.len();
    let aux = (1..).take_while(|i| g.vertex(&format!("p_x1.{}", i)).is_some()).count();
    if f.nvars > 0 && aux == 0 {
        return Err(DecodeError::BadInstance("no auxiliary pairs found".into()));
    }
    let k = m + 1 - aux.min(m + 1);
    let satisfied = f.satisfied_count(&values);
    if satisfied < k {
        return Err(DecodeError::NotAWitness(format!(
            "decoded assignment satisfies {} clauses, needs {}",
            satisfied, k
        )));
    }
    Ok(values)
}

fn decode_mto(
    f: &CnfFormula,
    g: &MultiLabelTemporalGraph,
    orientation: &Orientation,
) -> Result<Vec<bool>, DecodeError> {
    let mut values = Vec::with_capacity(f.nvars);
    for var in 1..=f.nvars {
        let hub = g
            .vertex(&mto_hub(var))
            .ok_or_else(|| DecodeError::BadInstance(format!("missing hub v_x{}", var)))?;
        let mut toward = 0usize;
        let mut away = 0usize;
        for &(_, e) in g.neighbors(hub) {
            let d = orientation.get(e).expect("witness orientation is proper");
            if g.edge(e).ends(d).1 == hub {
                toward += 1;
            } else {
                away += 1;
            }
        }
        // All hub edges share one layer, so a witness orients them uniformly:
        // toward the hub encodes false, away true.
        values.push(match (toward, away) {
            (0, _) => true,
            (_, 0) => false,
            _ => return Err(DecodeError::NotAWitness(format!("hub v_x{} has mixed orientations", var))),
        });
    }
    if !f.is_satisfied(&values) {
        return Err(DecodeError::NotAWitness("decoded assignment violates a NAE clause".into()));
    }
    Ok(values)
}

// ---------------------------------------------------------------------------
// Padding arbitrary 3-CNF into exact (3,4) form.
// ---------------------------------------------------------------------------

/// Rewrite a 3-CNF (clauses of 1..=3 literals) into an equisatisfiable
/// formula with exactly three literals per clause and every variable in
/// exactly four clauses. Every variable is split into one fresh copy per
/// occurrence, chained by the cyclic implications `(!u_i | u_{i+1} |
/// u_{i+1})`; each copy then occurs once in the original position and three
/// times across the chain. A variable with a single occurrence gets the
/// tautology `(!u | u | u)`.
pub fn pad_to_sat34(nvars: usize, clauses: &[Vec<i32>]) -> Result<CnfFormula, CnfError> {
    // Normalize clause arity to 3 by repeating the last literal.
    let mut padded: Vec<Vec<i32>> = Vec::with_capacity(clauses.len());
    for (i, c) in clauses.iter().enumerate() {
        if c.is_empty() || c.len() > 3 {
            return Err(CnfError::WrongArity(i + 1, c.len(), 3));
        }
        for &lit in c {
            let var = lit.unsigned_abs() as usize;
            if lit == 0 || var > nvars {
                return Err(CnfError::OutOfRange(lit, nvars));
            }
        }
        let mut c = c.clone();
        while c.len() < 3 {
            c.push(*c.last().unwrap());
        }
        padded.push(c);
    }

    // One fresh variable per occurrence.
    let mut next = 0i32;
    let mut copies: std::collections::BTreeMap<usize, Vec<i32>> = std::collections::BTreeMap::new();
    let mut out: Vec<Vec<i32>> = Vec::new();
    for clause in &mut padded {
        for lit in clause.iter_mut() {
            let var = lit.unsigned_abs() as usize;
            next += 1;
            copies.entry(var).or_default().push(next);
            *lit = if *lit > 0 { next } else { -next };
        }
        out.push(clause.clone());
    }
    // Chain the copies of each variable.
    for (_, chain) in copies.iter() {
        let c = chain.len();
        for i in 0..c {
            let cur = chain[i];
            let nxt = chain[(i + 1) % c];
            out.push(vec![-cur, nxt, nxt]);
        }
    }
    CnfFormula::new(CnfKind::Sat34, next as usize, out)
}
