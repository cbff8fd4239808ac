//! Recognition of the four temporal transitivity variants and multilayer
//! transitive orientation.
//!
//! The strong variants reduce to plain 2SAT. The non-strict variant runs the
//! forcing pipeline: class construction, constraint emission, an
//! initialization phase that commits every value whose opposite is
//! contradictory, then a greedy main phase (value 1 first) with a full
//! forcing pass per assignment. Strict recognition and multilayer
//! orientation are NP-complete and use an exact branching solver with unit
//! propagation and not-all-equal residual rules.

use std::collections::HashMap;

use crate::constraints::{
    build_formulas, BuildUnsat, ClauseOrigin, Lit, NaeClauseSet, Scope, TwoSatFormula,
};
use crate::graph::{Dir, MultiLabelTemporalGraph, Orientation, TemporalGraph, TimeLabel};
use crate::implication::{build_implication_classes, gamma_classes, ClassPartition};
use crate::verify::{verify_multilayer, verify_orientation, Variant};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NoReason {
    /// Some Lambda-implication class contains an edge in both directions.
    ImproperClass,
    /// Synchronous triangle under the strong variant.
    BottomTriangle,
    /// The constraint system is unsatisfiable.
    FormulaUnsat,
    /// A layer is not a comparability graph (improper Gamma class).
    LayerImproperClass(TimeLabel),
}

impl NoReason {
    pub fn code(&self) -> String {
        match self {
            NoReason::ImproperClass => "improper-class".into(),
            NoReason::BottomTriangle => "bottom-triangle".into(),
            NoReason::FormulaUnsat => "formula-unsat".into(),
            NoReason::LayerImproperClass(t) => format!("layer-improper-class:{}", t),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SolveStats {
    /// Committed assignments in the main phase.
    pub iterations: usize,
    /// Two-way branch points explored by the exact solvers.
    pub branches: usize,
    /// Fixpoint rounds of the initialization phase.
    pub forcing_rounds: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Answer {
    Yes(Orientation),
    No(NoReason),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecognitionResult {
    pub answer: Answer,
    pub stats: SolveStats,
}

impl RecognitionResult {
    pub fn is_yes(&self) -> bool {
        matches!(self.answer, Answer::Yes(_))
    }

    pub fn orientation(&self) -> Option<&Orientation> {
        match &self.answer {
            Answer::Yes(f) => Some(f),
            Answer::No(_) => None,
        }
    }

    fn no(reason: NoReason, stats: SolveStats) -> RecognitionResult {
        RecognitionResult { answer: Answer::No(reason), stats }
    }
}

/// The forcing subroutine rejected the tried value (or found the system
/// unsatisfiable).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Rejected;

const CYCLIC_PAIRS: [(usize, usize, usize); 3] = [(0, 1, 2), (1, 2, 0), (2, 0, 1)];

/// Set `x_var = value` and force to fixpoint: unit propagation, the
/// new-arcs self-contradiction rule (`x_uv =>* x_vu` over clauses added by
/// this call forces `x_uv = 0`), and per-clause NAE processing (implication
/// pairs first, then valued literals). Callers roll back on `Err`.
pub fn boolean_forcing(
    f: &mut TwoSatFormula,
    naes: &mut NaeClauseSet,
    var: usize,
    value: bool,
) -> Result<(), Rejected> {
    let entry_clauses = f.clause_count();
    f.assign_and_close(Lit::pos(var), value).map_err(|_| Rejected)?;
    bf_fixpoint(f, naes, entry_clauses).map_err(|_| Rejected)
}

fn bf_fixpoint(
    f: &mut TwoSatFormula,
    naes: &mut NaeClauseSet,
    entry_clauses: usize,
) -> Result<(), crate::constraints::Conflict> {
    loop {
        let mut changed = false;

        // Self-contradiction over the clauses added by this call only.
        if f.clause_count() > entry_clauses {
            let scope = Scope::NewSince(entry_clauses);
            for var in 0..f.nvars() {
                if f.var_value(var).is_some() {
                    continue;
                }
                if f.implies_star(Lit::pos(var), Lit::neg(var), scope) {
                    f.assign_and_close(Lit::pos(var), false)?;
                    changed = true;
                } else if f.implies_star(Lit::neg(var), Lit::pos(var), scope) {
                    f.assign_and_close(Lit::pos(var), true)?;
                    changed = true;
                }
            }
        }

        for i in 0..naes.len() {
            if !naes.get(i).alive {
                continue;
            }
            // Implication between cyclically consecutive literals replaces
            // the clause by two 2-clauses. Rechecked only when arcs grew.
            if naes.get(i).checked_at < f.grow_events() {
                let watermark = f.grow_events();
                let lits = naes.get(i).lits;
                let fired = CYCLIC_PAIRS
                    .iter()
                    .find(|&&(p, q, _)| f.implies_star(lits[p], lits[q], Scope::All))
                    .copied();
                naes.set_checked(i, watermark);
                if let Some((p, q, k)) = fired {
                    naes.kill(i);
                    f.add_clause(lits[p].not(), lits[k].not(), ClauseOrigin::Forcing)?;
                    f.add_clause(lits[k], lits[q], ClauseOrigin::Forcing)?;
                    changed = true;
                    continue;
                }
            }
            changed |= nae_valued_step(f, naes, i)?;
        }

        if !changed {
            return Ok(());
        }
    }
}

/// The valued-literal rules for one NAE clause: once any literal has a
/// value, the clause is removed and replaced by its residual constraint.
/// Returns whether the clause was processed.
fn nae_valued_step(
    f: &mut TwoSatFormula,
    naes: &mut NaeClauseSet,
    i: usize,
) -> Result<bool, crate::constraints::Conflict> {
    let lits = naes.get(i).lits;
    let vals = [f.value(lits[0]), f.value(lits[1]), f.value(lits[2])];
    if vals.iter().all(|v| v.is_none()) {
        return Ok(false);
    }
    naes.kill(i);
    let known: Vec<(usize, bool)> = vals
        .iter()
        .enumerate()
        .filter_map(|(k, v)| v.map(|b| (k, b)))
        .collect();
    match known.len() {
        3 => {
            if known[0].1 == known[1].1 && known[1].1 == known[2].1 {
                return Err(crate::constraints::Conflict);
            }
        }
        2 => {
            if known[0].1 == known[1].1 {
                let third = 3 - known[0].0 - known[1].0;
                f.assign_and_close(lits[third], !known[0].1)?;
            }
        }
        1 => {
            let (idx, v) = known[0];
            let rest: Vec<usize> = (0..3).filter(|&k| k != idx).collect();
            let (a, b) = (lits[rest[0]], lits[rest[1]]);
            if v {
                // NAE(1, a, b) == !(a & b)
                f.add_clause(a.not(), b.not(), ClauseOrigin::Forcing)?;
            } else {
                // NAE(0, a, b) == (a | b)
                f.add_clause(a, b, ClauseOrigin::Forcing)?;
            }
        }
        _ => unreachable!(),
    }
    Ok(true)
}

/// The initialization phase: probe both values of every variable with the
/// forcing subroutine, committing a value exactly when the opposite fails;
/// then close every NAE clause under `x => l_i and x => l_j  ~~>  x => !l_k`
/// (in both traversal directions). Repeated to fixpoint. Returns the number
/// of rounds.
pub fn initial_forcing(f: &mut TwoSatFormula, naes: &mut NaeClauseSet) -> Result<usize, Rejected> {
    let mut rounds = 0;
    loop {
        rounds += 1;
        let mut changed = false;
        for var in 0..f.nvars() {
            if f.var_value(var).is_some() {
                continue;
            }
            let (fm, nm) = (f.mark(), naes.mark());
            let ok1 = boolean_forcing(f, naes, var, true).is_ok();
            f.rollback(fm);
            naes.rollback(nm);
            if ok1 {
                let (fm, nm) = (f.mark(), naes.mark());
                let ok0 = boolean_forcing(f, naes, var, false).is_ok();
                f.rollback(fm);
                naes.rollback(nm);
                if !ok0 {
                    boolean_forcing(f, naes, var, true)?;
                    changed = true;
                }
            } else {
                boolean_forcing(f, naes, var, false).map_err(|_| Rejected)?;
                changed = true;
            }
        }
        changed |= nae_closure(f, naes).map_err(|_| Rejected)?;
        if !changed {
            return Ok(rounds);
        }
    }
}

fn nae_closure(
    f: &mut TwoSatFormula,
    naes: &mut NaeClauseSet,
) -> Result<bool, crate::constraints::Conflict> {
    let mut changed = false;
    for i in 0..naes.len() {
        if !naes.get(i).alive {
            continue;
        }
        let lits = naes.get(i).lits;
        for complemented in [false, true] {
            let lit_at = |k: usize| if complemented { lits[k].not() } else { lits[k] };
            for (p, q, k) in CYCLIC_PAIRS {
                let back_p = f.backward_reachable(lit_at(p), Scope::All);
                let back_q = f.backward_reachable(lit_at(q), Scope::All);
                let target = lit_at(k).not();
                for code in 0..back_p.len() {
                    if back_p[code] && back_q[code] {
                        let x = Lit::from_code(code);
                        changed |= f.add_clause(x.not(), target, ClauseOrigin::Forcing)?;
                    }
                }
            }
        }
    }
    Ok(changed)
}

fn orientation_from_classes(g: &TemporalGraph, part: &ClassPartition, f: &TwoSatFormula) -> Orientation {
    let mut o = Orientation::empty(g.m());
    for (ci, class) in part.members.iter().enumerate() {
        // Variables never assigned default to 1.
        let val = f.var_value(ci).unwrap_or(true);
        for d in class {
            o.set(d.edge, if val { d.dir } else { d.dir.flip() });
        }
    }
    o
}

/// The main recognition algorithm for the non-strict variant: classes,
/// constraint emission, initial forcing, then one greedy forcing pass per
/// variable (value 1 first, 0 on rejection, NO when both fail).
pub fn recognize_tto(g: &TemporalGraph) -> RecognitionResult {
    let mut stats = SolveStats::default();
    let part = match build_implication_classes(g) {
        Ok(p) => p,
        Err(_) => return RecognitionResult::no(NoReason::ImproperClass, stats),
    };
    let (mut f, mut naes) = match build_formulas(g, &part, Variant::Tto) {
        Ok(x) => x,
        Err(_) => return RecognitionResult::no(NoReason::FormulaUnsat, stats),
    };
    match initial_forcing(&mut f, &mut naes) {
        Ok(rounds) => stats.forcing_rounds = rounds,
        Err(_) => return RecognitionResult::no(NoReason::FormulaUnsat, stats),
    }
    for var in 0..f.nvars() {
        if f.var_value(var).is_some() {
            continue;
        }
        stats.iterations += 1;
        let (fm, nm) = (f.mark(), naes.mark());
        if boolean_forcing(&mut f, &mut naes, var, true).is_ok() {
            continue;
        }
        f.rollback(fm);
        naes.rollback(nm);
        if boolean_forcing(&mut f, &mut naes, var, false).is_err() {
            return RecognitionResult::no(NoReason::FormulaUnsat, stats);
        }
    }
    let orientation = orientation_from_classes(g, &part, &f);
    debug_assert_eq!(verify_orientation(g, &orientation, Variant::Tto), Ok(None));
    RecognitionResult { answer: Answer::Yes(orientation), stats }
}

/// Strong and strong-strict recognition: the constraint table contains no
/// non-cyclic cells, so the system is pure 2SAT. Satisfiability is decided
/// by sequential assignment with propagation; a variable whose tried value
/// conflicts is flipped, and the instance is a no-instance when both values
/// of some variable conflict.
pub fn recognize_strong(g: &TemporalGraph, variant: Variant) -> RecognitionResult {
    assert!(
        matches!(variant, Variant::Strong | Variant::StrongStrict),
        "recognize_strong handles the strong variants only"
    );
    let mut stats = SolveStats::default();
    let part = ClassPartition::trivial(g);
    let (mut f, naes) = match build_formulas(g, &part, variant) {
        Ok(x) => x,
        Err(BuildUnsat::BottomTriangle { .. }) => {
            return RecognitionResult::no(NoReason::BottomTriangle, stats)
        }
        Err(BuildUnsat::Conflict) => return RecognitionResult::no(NoReason::FormulaUnsat, stats),
    };
    debug_assert!(naes.is_empty());
    for var in 0..f.nvars() {
        if f.var_value(var).is_some() {
            continue;
        }
        stats.iterations += 1;
        let m = f.mark();
        if f.assign_and_close(Lit::pos(var), true).is_ok() {
            continue;
        }
        f.rollback(m);
        if f.assign_and_close(Lit::pos(var), false).is_err() {
            return RecognitionResult::no(NoReason::FormulaUnsat, stats);
        }
    }
    let orientation = orientation_from_classes(g, &part, &f);
    debug_assert_eq!(verify_orientation(g, &orientation, variant), Ok(None));
    RecognitionResult { answer: Answer::Yes(orientation), stats }
}

/// Propagate the valued-literal NAE rules to fixpoint (no implication-pair
/// rule); used by the exact branching solvers.
fn nae_propagate(f: &mut TwoSatFormula, naes: &mut NaeClauseSet) -> Result<(), Rejected> {
    loop {
        let mut changed = false;
        for i in 0..naes.len() {
            if naes.get(i).alive {
                changed |= nae_valued_step(f, naes, i).map_err(|_| Rejected)?;
            }
        }
        if !changed {
            return Ok(());
        }
    }
}

/// Exhaustive DPLL over the remaining NAE clauses: branch on the unvalued
/// literal occurring in the most live clauses (ties by literal code, value 1
/// first); once every NAE clause is resolved the residual 2SAT part is
/// finished greedily.
fn nae_dpll(f: &mut TwoSatFormula, naes: &mut NaeClauseSet, stats: &mut SolveStats) -> bool {
    if nae_propagate(f, naes).is_err() {
        return false;
    }
    let mut occurrences: HashMap<Lit, usize> = HashMap::new();
    for (_, c) in naes.iter_alive() {
        for &l in &c.lits {
            if f.value(l).is_none() {
                *occurrences.entry(l).or_insert(0) += 1;
            }
        }
    }
    let branch_lit = occurrences
        .into_iter()
        .max_by(|a, b| a.1.cmp(&b.1).then(b.0.code().cmp(&a.0.code())))
        .map(|(l, _)| l);

    match branch_lit {
        Some(lit) => {
            stats.branches += 1;
            for value in [true, false] {
                let (fm, nm) = (f.mark(), naes.mark());
                if f.assign_and_close(lit, value).is_ok() && nae_dpll(f, naes, stats) {
                    return true;
                }
                f.rollback(fm);
                naes.rollback(nm);
            }
            false
        }
        None => {
            // Pure 2SAT residue.
            for var in 0..f.nvars() {
                if f.var_value(var).is_some() {
                    continue;
                }
                stats.iterations += 1;
                let m = f.mark();
                if f.assign_and_close(Lit::pos(var), true).is_ok() {
                    continue;
                }
                f.rollback(m);
                if f.assign_and_close(Lit::pos(var), false).is_err() {
                    return false;
                }
            }
            true
        }
    }
}

/// Exact solver for the strict variant (NP-complete; worst case exponential
/// time). Builds the strict constraint row over per-edge literals and
/// branches over the NAE clauses arising from triangles whose two largest
/// labels coincide.
pub fn recognize_strict(g: &TemporalGraph) -> RecognitionResult {
    let mut stats = SolveStats::default();
    let part = ClassPartition::trivial(g);
    let (mut f, mut naes) = match build_formulas(g, &part, Variant::Strict) {
        Ok(x) => x,
        Err(_) => return RecognitionResult::no(NoReason::FormulaUnsat, stats),
    };
    if !nae_dpll(&mut f, &mut naes, &mut stats) {
        return RecognitionResult::no(NoReason::FormulaUnsat, stats);
    }
    let orientation = orientation_from_classes(g, &part, &f);
    debug_assert_eq!(verify_orientation(g, &orientation, Variant::Strict), Ok(None));
    RecognitionResult { answer: Answer::Yes(orientation), stats }
}

/// Union-find over edge ids with orientation parity.
struct ParityUf {
    parent: Vec<u32>,
    // Parity of the edge relative to its parent (true = flipped).
    parity: Vec<bool>,
    rank: Vec<u8>,
}

impl ParityUf {
    fn new(n: usize) -> ParityUf {
        ParityUf {
            parent: (0..n as u32).collect(),
            parity: vec![false; n],
            rank: vec![0; n],
        }
    }

    fn find(&mut self, x: usize) -> (usize, bool) {
        if self.parent[x] as usize == x {
            return (x, false);
        }
        let (root, p) = self.find(self.parent[x] as usize);
        self.parent[x] = root as u32;
        self.parity[x] ^= p;
        (root, self.parity[x])
    }

    /// Relate x and y with `val(x) = val(y) ^ parity`.
    fn union(&mut self, x: usize, y: usize, parity: bool) -> Result<(), ()> {
        let (rx, px) = self.find(x);
        let (ry, py) = self.find(y);
        if rx == ry {
            return if px ^ py == parity { Ok(()) } else { Err(()) };
        }
        let rel = px ^ py ^ parity;
        if self.rank[rx] < self.rank[ry] {
            self.parent[rx] = ry as u32;
            self.parity[rx] = rel;
        } else {
            self.parent[ry] = rx as u32;
            self.parity[ry] = rel;
            if self.rank[rx] == self.rank[ry] {
                self.rank[rx] += 1;
            }
        }
        Ok(())
    }
}

/// Single-label view of one layer, with a map from layer edge ids back to
/// the multi-graph edge ids. Vertex ids are preserved.
fn layer_graph(g: &MultiLabelTemporalGraph, layer: &[usize]) -> (TemporalGraph, Vec<usize>) {
    let mut b = crate::graph::GraphBuilder::new();
    for v in g.vertices() {
        b.add_vertex(g.name(v)).unwrap();
    }
    let one = TimeLabel::new(1).unwrap();
    let mut back = Vec::with_capacity(layer.len());
    for &e in layer {
        let edge = g.edge(e);
        b.add_edge(edge.u, edge.v, one).unwrap();
        back.push(e);
    }
    (b.build(), back)
}

/// Exact solver for multilayer transitive orientation (NP-complete with two
/// labels per edge). Per layer, the Gamma-implication classes couple the
/// layer's edge variables; one orientation variable per underlying edge ties
/// the layers together. Residual triangle constraints are solved by
/// branching.
pub fn solve_multilayer(g: &MultiLabelTemporalGraph) -> RecognitionResult {
    let mut stats = SolveStats::default();
    let m = g.m();
    let mut uf = ParityUf::new(m);

    let layers = g.layers();
    let mut layer_views: Vec<(TimeLabel, TemporalGraph, Vec<usize>)> = Vec::new();
    for &t in &layers {
        let ids = g.layer_edges(t);
        let (lg, back) = layer_graph(g, &ids);
        let part = match gamma_classes(&lg) {
            Ok(p) => p,
            Err(_) => return RecognitionResult::no(NoReason::LayerImproperClass(t), stats),
        };
        for class in &part.members {
            let first = class[0];
            for d in &class[1..] {
                // Members of one class orient together.
                if uf.union(back[first.edge], back[d.edge], first.dir != d.dir).is_err() {
                    return RecognitionResult::no(NoReason::LayerImproperClass(t), stats);
                }
            }
        }
        layer_views.push((t, lg, back));
    }

    // Root variables.
    let mut var_of_root: HashMap<usize, usize> = HashMap::new();
    for e in 0..m {
        let (root, _) = uf.find(e);
        let next = var_of_root.len();
        var_of_root.entry(root).or_insert(next);
    }
    let nvars = var_of_root.len();
    let mut f = TwoSatFormula::new(nvars);
    let mut naes = NaeClauseSet::new();

    // Literal meaning "multi-edge e is oriented Fwd".
    let mut fwd_lit = vec![Lit::pos(0); m];
    for e in 0..m {
        let (root, parity) = uf.find(e);
        let var = var_of_root[&root];
        fwd_lit[e] = if parity { Lit::neg(var) } else { Lit::pos(var) };
    }

    // Non-cyclic constraints from the triangles of every layer.
    for (_, lg, back) in &layer_views {
        for site in crate::sites::enumerate_constraint_sites(lg) {
            if let crate::sites::ConstraintSite::Triangle { verts: [u, v, w], .. } = site {
                let lit = |a, b| {
                    let le = lg.edge_between(a, b).unwrap();
                    let e = back[le];
                    if g.edge(e).u == a {
                        fwd_lit[e]
                    } else {
                        fwd_lit[e].not()
                    }
                };
                let (l_uv, l_vw, l_wu) = (lit(u, v), lit(v, w), lit(w, u));
                if l_uv == l_vw.not() || l_vw == l_wu.not() || l_wu == l_uv.not() {
                    continue;
                }
                naes.push([l_uv, l_vw, l_wu], [u, v, w]);
            }
        }
    }

    if !nae_dpll(&mut f, &mut naes, &mut stats) {
        return RecognitionResult::no(NoReason::FormulaUnsat, stats);
    }

    let mut orientation = Orientation::empty(m);
    for e in 0..m {
        let fwd = match f.value(fwd_lit[e]) {
            Some(v) => v,
            None => !fwd_lit[e].is_neg(),
        };
        orientation.set(e, if fwd { Dir::Fwd } else { Dir::Rev });
    }
    debug_assert_eq!(verify_multilayer(g, &orientation), Ok(None));
    RecognitionResult { answer: Answer::Yes(orientation), stats }
}

/// Dispatch over the four variants.
pub fn recognize(g: &TemporalGraph, variant: Variant) -> RecognitionResult {
    match variant {
        Variant::Tto => recognize_tto(g),
        Variant::Strict => recognize_strict(g),
        Variant::Strong | Variant::StrongStrict => recognize_strong(g, variant),
    }
}
