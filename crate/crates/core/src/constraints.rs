//! The Boolean side: 2SAT implication structure with unit propagation,
//! scoped reachability and snapshot/rollback, the not-all-equal clause set
//! over synchronous triangles, and the per-variant clause emission for
//! triangle and induced-2-path sites.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

use crate::graph::{Dir, TemporalGraph, VertexId};
use crate::implication::{ClassPartition, DirEdge};
use crate::sites::{enumerate_constraint_sites, ConstraintSite};
use crate::verify::Variant;

/// A literal over class variables; code is `2 * var + sign`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Lit(u32);

impl Lit {
    pub fn pos(var: usize) -> Lit {
        Lit((var as u32) << 1)
    }

    pub fn neg(var: usize) -> Lit {
        Lit(((var as u32) << 1) | 1)
    }

    pub fn var(self) -> usize {
        (self.0 >> 1) as usize
    }

    pub fn is_neg(self) -> bool {
        self.0 & 1 == 1
    }

    pub fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }

    pub fn code(self) -> usize {
        self.0 as usize
    }

    pub fn from_code(code: usize) -> Lit {
        Lit(code as u32)
    }

    /// From a signed 1-based class index, as produced by [`ClassPartition`].
    pub fn from_signed(i: i32) -> Lit {
        debug_assert!(i != 0);
        if i > 0 {
            Lit::pos(i as usize - 1)
        } else {
            Lit::neg((-i) as usize - 1)
        }
    }

    pub fn to_signed(self) -> i32 {
        let v = self.var() as i32 + 1;
        if self.is_neg() {
            -v
        } else {
            v
        }
    }
}

impl std::ops::Not for Lit {
    type Output = Lit;

    fn not(self) -> Lit {
        Lit(self.0 ^ 1)
    }
}

impl fmt::Display for Lit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_signed())
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClauseOrigin {
    Build,
    Forcing,
}

#[derive(Clone, Debug)]
struct Clause {
    a: Lit,
    b: Lit,
    alive: bool,
    origin: ClauseOrigin,
}

#[derive(Clone, Copy, Debug)]
enum Op {
    Assign(u32),
    Kill(u32),
    Add,
}

/// Snapshot handle; restore with [`TwoSatFormula::rollback`].
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct FormulaMark {
    clauses: usize,
    trail: usize,
}

impl FormulaMark {
    /// Clause-count component, usable as a [`Scope::NewSince`] bound.
    pub fn clause_count(self) -> usize {
        self.clauses
    }
}

/// Which implication arcs a reachability query may traverse.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Scope {
    All,
    /// Only clauses added at or after the given clause count (the
    /// `phi' \ phi` scope of the forcing subroutine).
    NewSince(usize),
}

#[derive(Error, Debug, Clone, Copy, PartialEq, Eq)]
#[error("assignment contradicts the formula")]
pub struct Conflict;

/// 2SAT formula as a set of two-literal clauses. Each clause `(a | b)`
/// contributes the implication arcs `!a => b` and `!b => a`; the arc set is
/// closed under contraposition by construction. Satisfied clauses are
/// removed (deactivated) as assignments propagate.
#[derive(Clone, Debug)]
pub struct TwoSatFormula {
    nvars: usize,
    value: Vec<i8>, // -1 unset, else 0/1
    clauses: Vec<Clause>,
    keys: HashSet<u64>,
    occ: Vec<Vec<u32>>, // literal code -> clauses containing that literal
    trail: Vec<Op>,
    grow_events: u64,
}

fn clause_key(a: Lit, b: Lit) -> u64 {
    let (x, y) = if a.code() <= b.code() { (a, b) } else { (b, a) };
    ((x.code() as u64) << 32) | y.code() as u64
}

impl TwoSatFormula {
    pub fn new(nvars: usize) -> TwoSatFormula {
        TwoSatFormula {
            nvars,
            value: vec![-1; nvars],
            clauses: Vec::new(),
            keys: HashSet::new(),
            occ: vec![Vec::new(); 2 * nvars],
            trail: Vec::new(),
            grow_events: 0,
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn clause_count(&self) -> usize {
        self.clauses.len()
    }

    /// Monotone counter bumped whenever reachability may have grown.
    pub fn grow_events(&self) -> u64 {
        self.grow_events
    }

    pub fn value(&self, l: Lit) -> Option<bool> {
        match self.value[l.var()] {
            -1 => None,
            v => Some((v == 1) != l.is_neg()),
        }
    }

    pub fn var_value(&self, var: usize) -> Option<bool> {
        match self.value[var] {
            -1 => None,
            v => Some(v == 1),
        }
    }

    fn kill(&mut self, cid: u32) {
        self.clauses[cid as usize].alive = false;
        self.trail.push(Op::Kill(cid));
    }

    /// Make `l` true and unit-propagate to fixpoint. On conflict the formula
    /// is left mid-propagation; roll back to a mark to recover.
    pub fn assign_true(&mut self, l0: Lit) -> Result<bool, Conflict> {
        match self.value(l0) {
            Some(true) => return Ok(false),
            Some(false) => return Err(Conflict),
            None => {}
        }
        let mut queue = vec![l0];
        while let Some(l) = queue.pop() {
            match self.value(l) {
                Some(true) => continue,
                Some(false) => return Err(Conflict),
                None => {}
            }
            self.value[l.var()] = if l.is_neg() { 0 } else { 1 };
            self.trail.push(Op::Assign(l.var() as u32));
            // Clauses satisfied by l are removed.
            for idx in 0..self.occ[l.code()].len() {
                let cid = self.occ[l.code()][idx];
                if self.clauses[cid as usize].alive {
                    self.kill(cid);
                }
            }
            // Clauses containing !l shrink to units: remove and force the
            // other literal.
            for idx in 0..self.occ[l.not().code()].len() {
                let cid = self.occ[l.not().code()][idx];
                if !self.clauses[cid as usize].alive {
                    continue;
                }
                let c = &self.clauses[cid as usize];
                let other = if c.a == l.not() { c.b } else { c.a };
                self.kill(cid);
                queue.push(other);
            }
        }
        Ok(true)
    }

    /// Spec name for assignment-with-propagation: set `l` to `value`.
    pub fn assign_and_close(&mut self, l: Lit, value: bool) -> Result<bool, Conflict> {
        self.assign_true(if value { l } else { l.not() })
    }

    /// Add the clause `(a | b)`. Degenerate forms are resolved immediately:
    /// `(a | a)` is a unit, `(a | !a)` a tautology; clauses with a valued
    /// literal shrink or die on arrival. Returns whether anything changed.
    pub fn add_clause(&mut self, a: Lit, b: Lit, origin: ClauseOrigin) -> Result<bool, Conflict> {
        if a == b {
            return self.assign_true(a);
        }
        if a == b.not() {
            return Ok(false);
        }
        match (self.value(a), self.value(b)) {
            (Some(true), _) | (_, Some(true)) => Ok(false),
            (Some(false), Some(false)) => Err(Conflict),
            (Some(false), None) => self.assign_true(b),
            (None, Some(false)) => self.assign_true(a),
            (None, None) => {
                let key = clause_key(a, b);
                if self.keys.contains(&key) {
                    return Ok(false);
                }
                let cid = self.clauses.len() as u32;
                self.clauses.push(Clause { a, b, alive: true, origin });
                self.occ[a.code()].push(cid);
                self.occ[b.code()].push(cid);
                self.keys.insert(key);
                self.trail.push(Op::Add);
                self.grow_events += 1;
                Ok(true)
            }
        }
    }

    pub fn mark(&self) -> FormulaMark {
        FormulaMark { clauses: self.clauses.len(), trail: self.trail.len() }
    }

    pub fn rollback(&mut self, mark: FormulaMark) {
        while self.trail.len() > mark.trail {
            match self.trail.pop().unwrap() {
                Op::Assign(v) => self.value[v as usize] = -1,
                Op::Kill(cid) => {
                    self.clauses[cid as usize].alive = true;
                    self.grow_events += 1;
                }
                Op::Add => {
                    let c = self.clauses.pop().unwrap();
                    self.keys.remove(&clause_key(c.a, c.b));
                    let popped = self.occ[c.a.code()].pop();
                    debug_assert_eq!(popped, Some(self.clauses.len() as u32));
                    let popped = self.occ[c.b.code()].pop();
                    debug_assert_eq!(popped, Some(self.clauses.len() as u32));
                }
            }
        }
        debug_assert_eq!(self.clauses.len(), mark.clauses);
    }

    fn scope_floor(scope: Scope) -> usize {
        match scope {
            Scope::All => 0,
            Scope::NewSince(n) => n,
        }
    }

    /// Reflexive-transitive implication `a =>* b` over the live arcs in
    /// scope.
    pub fn implies_star(&self, a: Lit, b: Lit, scope: Scope) -> bool {
        if a == b {
            return true;
        }
        let floor = Self::scope_floor(scope);
        if self.clauses.len() <= floor {
            return false;
        }
        let mut visited = vec![false; 2 * self.nvars];
        visited[a.code()] = true;
        let mut stack = vec![a];
        while let Some(l) = stack.pop() {
            for &cid in &self.occ[l.not().code()] {
                if (cid as usize) < floor || !self.clauses[cid as usize].alive {
                    continue;
                }
                let c = &self.clauses[cid as usize];
                let target = if c.a == l.not() { c.b } else { c.a };
                if target == b {
                    return true;
                }
                if !visited[target.code()] {
                    visited[target.code()] = true;
                    stack.push(target);
                }
            }
        }
        false
    }

    /// All literals `x` with `x =>* target`, as a bitset over literal codes.
    pub fn backward_reachable(&self, target: Lit, scope: Scope) -> Vec<bool> {
        let floor = Self::scope_floor(scope);
        let mut visited = vec![false; 2 * self.nvars];
        visited[target.code()] = true;
        let mut stack = vec![target];
        while let Some(l) = stack.pop() {
            for &cid in &self.occ[l.code()] {
                if (cid as usize) < floor || !self.clauses[cid as usize].alive {
                    continue;
                }
                let c = &self.clauses[cid as usize];
                let other = if c.a == l { c.b } else { c.a };
                let src = other.not();
                if !visited[src.code()] {
                    visited[src.code()] = true;
                    stack.push(src);
                }
            }
        }
        visited
    }

    /// Live implication arcs as `(from, to, origin)`, for dumps and tests.
    pub fn arcs(&self) -> Vec<(Lit, Lit, ClauseOrigin)> {
        let mut out = Vec::new();
        for c in &self.clauses {
            if c.alive {
                out.push((c.a.not(), c.b, c.origin));
                out.push((c.b.not(), c.a, c.origin));
            }
        }
        out
    }
}

/// One not-all-equal clause tied to its source triangle, stored in cyclic
/// traversal order: violated exactly by the two cyclic orientations.
#[derive(Clone, Debug)]
pub struct NaeClause {
    pub lits: [Lit; 3],
    pub tri: [VertexId; 3],
    pub alive: bool,
    /// Grow-event watermark of the last implication-pair check (cache only).
    pub checked_at: u64,
}

#[derive(Clone, Debug, Default)]
pub struct NaeClauseSet {
    clauses: Vec<NaeClause>,
    trail: Vec<u32>,
}

impl NaeClauseSet {
    pub fn new() -> NaeClauseSet {
        NaeClauseSet::default()
    }

    pub fn push(&mut self, lits: [Lit; 3], tri: [VertexId; 3]) {
        self.clauses.push(NaeClause { lits, tri, alive: true, checked_at: 0 });
    }

    pub fn len(&self) -> usize {
        self.clauses.len()
    }

    pub fn is_empty(&self) -> bool {
        self.clauses.is_empty()
    }

    pub fn alive_count(&self) -> usize {
        self.clauses.iter().filter(|c| c.alive).count()
    }

    pub fn get(&self, i: usize) -> &NaeClause {
        &self.clauses[i]
    }

    pub fn set_checked(&mut self, i: usize, watermark: u64) {
        self.clauses[i].checked_at = watermark;
    }

    pub fn kill(&mut self, i: usize) {
        debug_assert!(self.clauses[i].alive);
        self.clauses[i].alive = false;
        self.trail.push(i as u32);
    }

    pub fn mark(&self) -> usize {
        self.trail.len()
    }

    pub fn rollback(&mut self, mark: usize) {
        while self.trail.len() > mark {
            let i = self.trail.pop().unwrap() as usize;
            self.clauses[i].alive = true;
        }
    }

    pub fn iter_alive(&self) -> impl Iterator<Item = (usize, &NaeClause)> {
        self.clauses.iter().enumerate().filter(|(_, c)| c.alive)
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum BuildUnsat {
    /// A synchronous triangle under the strong variant: no orientation works.
    #[error("synchronous triangle cannot be strongly transitively oriented")]
    BottomTriangle { tri: [VertexId; 3] },
    /// Clause or unit emission derived a contradiction during construction.
    #[error("constraints are contradictory at construction time")]
    Conflict,
}

/// Literal lookup for directed edges of `g` under a class partition.
pub struct EdgeLits<'a> {
    g: &'a TemporalGraph,
    part: &'a ClassPartition,
}

impl<'a> EdgeLits<'a> {
    pub fn new(g: &'a TemporalGraph, part: &'a ClassPartition) -> EdgeLits<'a> {
        EdgeLits { g, part }
    }

    /// The literal `x_{from,to}`.
    pub fn lit(&self, from: VertexId, to: VertexId) -> Lit {
        let e = self.g.edge_between(from, to).expect("edge exists");
        let dir = if self.g.edge(e).u == from { Dir::Fwd } else { Dir::Rev };
        Lit::from_signed(self.part.literal(DirEdge { edge: e, dir }))
    }
}

/// Emit the orientation conditions of every constraint site for a variant
/// over the partition's class literals.
///
/// Per site: equalities become two implications, forced orientations become
/// unit assignments, non-cyclic becomes a NAE clause (skipped when a shared
/// class already rules out the cyclic orientations), and the strong variant
/// rejects synchronous triangles outright.
pub fn build_formulas(
    g: &TemporalGraph,
    part: &ClassPartition,
    variant: Variant,
) -> Result<(TwoSatFormula, NaeClauseSet), BuildUnsat> {
    let mut f = TwoSatFormula::new(part.class_count());
    let mut naes = NaeClauseSet::new();
    let lits = EdgeLits::new(g, part);
    let conflict = |_| BuildUnsat::Conflict;

    for site in enumerate_constraint_sites(g) {
        match site {
            ConstraintSite::Triangle { verts: [u, v, w], labels: [t0, t1, t2] } => {
                let sync = t0 == t2;
                let head_pair = t0 < t1 && t1 == t2;
                if sync {
                    match variant {
                        Variant::Strong => return Err(BuildUnsat::BottomTriangle { tri: [u, v, w] }),
                        Variant::Tto => maybe_nae(&lits, &mut naes, u, v, w),
                        Variant::Strict | Variant::StrongStrict => {}
                    }
                } else if head_pair {
                    match variant {
                        Variant::Tto => {
                            // wu = wv
                            f.add_clause(lits.lit(u, w), lits.lit(w, v), ClauseOrigin::Build)
                                .map_err(conflict)?;
                            f.add_clause(lits.lit(v, w), lits.lit(w, u), ClauseOrigin::Build)
                                .map_err(conflict)?;
                        }
                        Variant::Strong => {
                            // Both non-strict 2-paths through the small edge
                            // need a completion strictly above the maximum:
                            // wu and wv are forced.
                            f.assign_true(lits.lit(w, u)).map_err(conflict)?;
                            f.assign_true(lits.lit(w, v)).map_err(conflict)?;
                        }
                        Variant::StrongStrict => {
                            // Only the two strict 2-paths starting at the
                            // small edge constrain the triangle: uv => wv and
                            // vu => wu. (Forcing wu and wv outright, as in
                            // the strong case, rejects satisfiable inputs.)
                            f.add_clause(lits.lit(v, u), lits.lit(w, v), ClauseOrigin::Build)
                                .map_err(conflict)?;
                            f.add_clause(lits.lit(u, v), lits.lit(w, u), ClauseOrigin::Build)
                                .map_err(conflict)?;
                        }
                        Variant::Strict => maybe_nae(&lits, &mut naes, u, v, w),
                    }
                } else {
                    // t1 < t2: vw => uw and vu => wu, for every variant.
                    f.add_clause(lits.lit(w, v), lits.lit(u, w), ClauseOrigin::Build)
                        .map_err(conflict)?;
                    f.add_clause(lits.lit(u, v), lits.lit(w, u), ClauseOrigin::Build)
                        .map_err(conflict)?;
                }
            }
            ConstraintSite::Path2 { verts: [u, v, w], labels: [t0, t1] } => {
                if t0 == t1 {
                    if matches!(variant, Variant::Tto | Variant::Strong) {
                        // uv = wv
                        f.add_clause(lits.lit(v, u), lits.lit(w, v), ClauseOrigin::Build)
                            .map_err(conflict)?;
                        f.add_clause(lits.lit(v, w), lits.lit(u, v), ClauseOrigin::Build)
                            .map_err(conflict)?;
                    }
                } else {
                    // uv => wv
                    f.add_clause(lits.lit(v, u), lits.lit(w, v), ClauseOrigin::Build)
                        .map_err(conflict)?;
                }
            }
        }
    }
    Ok((f, naes))
}

/// Add `NAE(x_uv, x_vw, x_wu)` unless one of the pairwise class equalities
/// already forbids a cyclic orientation.
fn maybe_nae(lits: &EdgeLits<'_>, naes: &mut NaeClauseSet, u: VertexId, v: VertexId, w: VertexId) {
    let l_uv = lits.lit(u, v);
    let l_vw = lits.lit(v, w);
    let l_wu = lits.lit(w, u);
    // x_uv = x_wv, x_vw = x_uw, or x_wu = x_vu as class literals.
    if l_uv == l_vw.not() || l_vw == l_wu.not() || l_wu == l_uv.not() {
        return;
    }
    naes.push([l_uv, l_vw, l_wu], [u, v, w]);
}

/// Debug dump: `IMP lit lit [old|new]` per live arc, then `NAE lit lit lit`
/// per live clause.
pub fn dump_formulas(f: &TwoSatFormula, naes: &NaeClauseSet) -> String {
    let mut out = String::new();
    for (from, to, origin) in f.arcs() {
        let tag = match origin {
            ClauseOrigin::Build => "old",
            ClauseOrigin::Forcing => "new",
        };
        out.push_str(&format!("IMP {} {} {}\n", from, to, tag));
    }
    for (_, c) in naes.iter_alive() {
        out.push_str(&format!("NAE {} {} {}\n", c.lits[0], c.lits[1], c.lits[2]));
    }
    out
}
