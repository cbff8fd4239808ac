//! Brute-force ground truth: exhaustive orientation enumeration for
//! recognition, exhaustive bounded completion search, naive closure of the
//! forcing relation, and an independent all-triples transitivity checker.
//! These are deliberately simple; their only job is to be obviously correct.

use std::collections::HashMap;

use thiserror::Error;

use crate::graph::{
    Dir, DirectedTimeEdge, MultiLabelTemporalGraph, Orientation, TemporalGraph, TimeLabel, VertexId,
};
use crate::implication::{lambda_related, DirEdge};
use crate::verify::{orientation_ok, verify_multilayer, ImproperOrientation, Variant, Violation};

/// Hard limits that keep the exhaustive engines from running unboundedly.
/// `TEMPORIENT_ORACLE_BUDGET=N` raises all three caps to `N`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OracleBudget {
    pub max_edges: usize,
    pub max_additions: usize,
    pub max_non_edges: usize,
}

impl Default for OracleBudget {
    fn default() -> OracleBudget {
        OracleBudget { max_edges: 16, max_additions: 3, max_non_edges: 12 }
    }
}

impl OracleBudget {
    pub fn from_env() -> OracleBudget {
        let mut b = OracleBudget::default();
        if let Ok(v) = std::env::var("TEMPORIENT_ORACLE_BUDGET") {
            if let Ok(n) = v.trim().parse::<usize>() {
                b.max_edges = b.max_edges.max(n);
                b.max_additions = b.max_additions.max(n);
                b.max_non_edges = b.max_non_edges.max(n);
            }
        }
        b
    }
}

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("instance exceeds the oracle budget ({what}: {value} > {limit})")]
    BudgetExceeded { what: &'static str, value: usize, limit: usize },
}

fn check_budget(what: &'static str, value: usize, limit: usize) -> Result<(), OracleError> {
    if value > limit {
        Err(OracleError::BudgetExceeded { what, value, limit })
    } else {
        Ok(())
    }
}

/// Gray-code sequence of orientation bitmasks covering all 2^m proper
/// orientations.
fn gray(i: u64) -> u64 {
    i ^ (i >> 1)
}

/// Exhaustive recognition: some proper orientation passes the
/// definition-level check.
pub fn oracle_recognize(
    g: &TemporalGraph,
    variant: Variant,
    budget: &OracleBudget,
) -> Result<bool, OracleError> {
    Ok(oracle_recognize_witness(g, variant, budget)?.is_some())
}

/// Like [`oracle_recognize`], returning the first passing orientation in
/// Gray-code order.
pub fn oracle_recognize_witness(
    g: &TemporalGraph,
    variant: Variant,
    budget: &OracleBudget,
) -> Result<Option<Orientation>, OracleError> {
    check_budget("edges", g.m(), budget.max_edges)?;
    let m = g.m();
    for i in 0..1u64 << m {
        let f = Orientation::from_mask(m, gray(i));
        if orientation_ok(g, &f, variant) {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

/// One shared enumeration answering all four variants, with per-variant
/// early exit. Order: [Tto, Strict, Strong, StrongStrict].
pub fn oracle_recognize_all(g: &TemporalGraph, budget: &OracleBudget) -> Result<[bool; 4], OracleError> {
    check_budget("edges", g.m(), budget.max_edges)?;
    let m = g.m();
    let mut found = [false; 4];
    for i in 0..1u64 << m {
        let f = Orientation::from_mask(m, gray(i));
        let ok = crate::verify::orientation_ok_all(g, &f);
        for k in 0..4 {
            found[k] |= ok[k];
        }
        if found.iter().all(|&b| b) {
            break;
        }
    }
    Ok(found)
}

/// Parallel wrapper over a static partition of the orientation masks. The
/// answer is independent of the partitioning.
pub fn oracle_recognize_par(
    g: &TemporalGraph,
    variant: Variant,
    budget: &OracleBudget,
    jobs: usize,
) -> Result<bool, OracleError> {
    check_budget("edges", g.m(), budget.max_edges)?;
    if jobs <= 1 {
        return oracle_recognize(g, variant, budget);
    }
    let m = g.m();
    let total = 1u64 << m;
    let found = std::sync::atomic::AtomicBool::new(false);
    std::thread::scope(|scope| {
        for j in 0..jobs as u64 {
            let found = &found;
            scope.spawn(move || {
                let mut i = j;
                while i < total && !found.load(std::sync::atomic::Ordering::Relaxed) {
                    let f = Orientation::from_mask(m, gray(i));
                    if orientation_ok(g, &f, variant) {
                        found.store(true, std::sync::atomic::Ordering::Relaxed);
                        return;
                    }
                    i += jobs as u64;
                }
            });
        }
    });
    Ok(found.into_inner())
}

/// Exhaustive multilayer recognition.
pub fn oracle_multilayer(g: &MultiLabelTemporalGraph, budget: &OracleBudget) -> Result<bool, OracleError> {
    Ok(oracle_multilayer_witness(g, budget)?.is_some())
}

pub fn oracle_multilayer_witness(
    g: &MultiLabelTemporalGraph,
    budget: &OracleBudget,
) -> Result<Option<Orientation>, OracleError> {
    check_budget("edges", g.m(), budget.max_edges)?;
    let m = g.m();
    for i in 0..1u64 << m {
        let f = Orientation::from_mask(m, gray(i));
        if verify_multilayer(g, &f).expect("proper").is_none() {
            return Ok(Some(f));
        }
    }
    Ok(None)
}

fn non_edges(g: &TemporalGraph) -> Vec<(VertexId, VertexId)> {
    let mut out = Vec::new();
    for u in g.vertices() {
        for w in g.vertices() {
            if u < w && g.edge_between(u, w).is_none() {
                out.push((u, w));
            }
        }
    }
    out
}

/// Candidate labels for added edges. Only the order type of the added
/// labels relative to the existing ones (and to each other) matters, so the
/// pool holds every existing label plus up to `slots` representatives below
/// the minimum, inside every gap, and above the maximum — enough to host any
/// arrangement of at most `slots` added edges.
pub fn candidate_labels(g: &TemporalGraph, slots: u32) -> Vec<TimeLabel> {
    let existing: Vec<u32> = g.label_set().iter().map(|t| t.get()).collect();
    let slots = slots.max(1);
    let mut out: Vec<u32> = Vec::new();
    if let Some(&min) = existing.first() {
        let lo = min.saturating_sub(slots).max(1);
        out.extend(lo..min);
    }
    for pair in existing.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        let hi = b.min(a.saturating_add(slots).saturating_add(1));
        out.extend(a + 1..hi);
    }
    let base = existing.last().copied().unwrap_or(0);
    for i in 1..=slots {
        if let Some(t) = base.checked_add(i) {
            out.push(t);
        }
    }
    out.extend(existing);
    out.sort_unstable();
    out.dedup();
    out.into_iter().filter_map(TimeLabel::new).collect()
}

/// Exhaustive completion: minimum number of added time-edges (at most `k`)
/// over all orientation extensions, non-edge subsets, added-edge directions,
/// and candidate labels, or `None` when no completion of size at most `k`
/// exists. Sizes are searched in ascending order, so the first hit is the
/// minimum.
pub fn oracle_complete(
    g: &TemporalGraph,
    partial: &Orientation,
    k: usize,
    variant: Variant,
    budget: &OracleBudget,
) -> Result<Option<usize>, OracleError> {
    oracle_complete_with_labels(g, partial, k, variant, budget, k as u32)
}

pub fn oracle_complete_with_labels(
    g: &TemporalGraph,
    partial: &Orientation,
    k: usize,
    variant: Variant,
    budget: &OracleBudget,
    label_slots: u32,
) -> Result<Option<usize>, OracleError> {
    oracle_complete_witness(g, partial, k, variant, budget, label_slots)
        .map(|w| w.map(|(size, _, _)| size))
}

/// Like [`oracle_complete`], additionally returning the first minimum-size
/// solution found: the added time-edges and the orientation extension.
pub fn oracle_complete_witness(
    g: &TemporalGraph,
    partial: &Orientation,
    k: usize,
    variant: Variant,
    budget: &OracleBudget,
    label_slots: u32,
) -> Result<Option<(usize, Vec<DirectedTimeEdge>, Orientation)>, OracleError> {
    check_budget("edges", g.m(), budget.max_edges)?;
    check_budget("additions", k, budget.max_additions)?;
    let pool = non_edges(g);
    check_budget("non-edges", pool.len(), budget.max_non_edges)?;
    let labels = candidate_labels(g, label_slots.max(k as u32));

    let free = partial.unoriented();
    let q = free.len();

    for size in 0..=k.min(pool.len()) {
        for subset in subsets(pool.len(), size) {
            let chosen: Vec<(VertexId, VertexId)> = subset.iter().map(|&i| pool[i]).collect();
            // Directions and labels of the added edges.
            let mut dir_label = vec![(Dir::Fwd, labels[0]); size];
            if let Some((added, f)) =
                try_assignments(g, partial, &free, q, &chosen, &mut dir_label, &labels, 0, variant)
            {
                return Ok(Some((size, added, f)));
            }
        }
    }
    Ok(None)
}

fn subsets(n: usize, size: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(start: usize, n: usize, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, size, cur, out);
            cur.pop();
        }
    }
    rec(0, n, size, &mut cur, &mut out);
    out
}

#[allow(clippy::too_many_arguments)]
fn try_assignments(
    g: &TemporalGraph,
    partial: &Orientation,
    free: &[usize],
    q: usize,
    chosen: &[(VertexId, VertexId)],
    dir_label: &mut Vec<(Dir, TimeLabel)>,
    labels: &[TimeLabel],
    pos: usize,
    variant: Variant,
) -> Option<(Vec<DirectedTimeEdge>, Orientation)> {
    if pos == chosen.len() {
        // All added edges fixed; enumerate the 2^q orientation extensions.
        for mask in 0..1u64 << q {
            let mut f = partial.clone();
            for (bit, &e) in free.iter().enumerate() {
                f.set(e, if mask >> bit & 1 == 1 { Dir::Rev } else { Dir::Fwd });
            }
            let added: Vec<DirectedTimeEdge> = chosen
                .iter()
                .zip(dir_label.iter())
                .map(|(&(u, w), &(d, t))| {
                    let (from, to) = if d == Dir::Fwd { (u, w) } else { (w, u) };
                    DirectedTimeEdge { from, to, label: t }
                })
                .collect();
            let (g2, f2) = crate::complete::apply_completion(g, &f, &added);
            if orientation_ok(&g2, &f2, variant) {
                return Some((added, f));
            }
        }
        return None;
    }
    for d in [Dir::Fwd, Dir::Rev] {
        for &t in labels {
            dir_label[pos] = (d, t);
            if let Some(hit) =
                try_assignments(g, partial, free, q, chosen, dir_label, labels, pos + 1, variant)
            {
                return Some(hit);
            }
        }
    }
    None
}

/// Naive fixpoint closure of the forcing relation: repeated full scans over
/// all directed-edge pairs until stable. Returns the classes or the seed of
/// an improper class.
pub fn oracle_lambda_classes(g: &TemporalGraph) -> Result<Vec<Vec<DirEdge>>, usize> {
    let m = g.m();
    let codes = 2 * m;
    let mut parent: Vec<usize> = (0..codes).collect();
    fn find(parent: &mut Vec<usize>, x: usize) -> usize {
        if parent[x] != x {
            let r = find(parent, parent[x]);
            parent[x] = r;
        }
        parent[x]
    }
    let dirs = |code: usize| DirEdge::from_code(code);
    let pair_of = |d: DirEdge| {
        let e = g.edge(d.edge);
        e.ends(d.dir)
    };
    loop {
        let mut changed = false;
        for a in 0..codes {
            for b in 0..codes {
                if a == b {
                    continue;
                }
                if lambda_related(g, pair_of(dirs(a)), pair_of(dirs(b))) {
                    let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
                    if ra != rb {
                        parent[ra] = rb;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }
    let mut groups: HashMap<usize, Vec<DirEdge>> = HashMap::new();
    for code in 0..codes {
        groups.entry(find(&mut parent, code)).or_default().push(dirs(code));
    }
    // Improper iff some set contains an edge in both directions.
    for set in groups.values() {
        for d in set {
            if set.contains(&d.reversed()) {
                return Err(d.edge);
            }
        }
    }
    Ok(groups.into_values().collect())
}

/// Canonical form of a directed-edge partition for comparisons.
pub fn canonical_partition(classes: &[Vec<DirEdge>]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = classes
        .iter()
        .map(|cls| {
            let mut v: Vec<usize> = cls.iter().map(|d| d.code()).collect();
            v.sort_unstable();
            v
        })
        .collect();
    out.sort();
    out
}

/// Independent transitivity check enumerating all ordered vertex triples.
pub fn verify_by_triples(
    g: &TemporalGraph,
    f: &Orientation,
    variant: Variant,
) -> Result<Option<Violation>, ImproperOrientation> {
    if f.len() != g.m() || !f.is_proper() {
        return Err(ImproperOrientation);
    }
    let arc = |from: VertexId, to: VertexId| -> Option<TimeLabel> {
        g.edge_between(from, to).and_then(|e| {
            let d = f.get(e).unwrap();
            if g.edge(e).ends(d).0 == from {
                Some(g.edge(e).label)
            } else {
                None
            }
        })
    };
    for u in g.vertices() {
        for v in g.vertices() {
            for w in g.vertices() {
                if u == v || v == w || u == w {
                    continue;
                }
                let (t1, t2) = match (arc(u, v), arc(v, w)) {
                    (Some(t1), Some(t2)) => (t1, t2),
                    _ => continue,
                };
                if !variant.premise_holds(t1, t2) {
                    continue;
                }
                let ok = matches!(arc(u, w), Some(t3) if variant.conclusion_holds(t2, t3));
                if !ok {
                    let reason = match g.edge_between(u, w) {
                        None => crate::verify::ViolationReason::MissingEdge,
                        Some(_) if arc(u, w).is_none() => crate::verify::ViolationReason::WrongDirection,
                        Some(_) => crate::verify::ViolationReason::LabelTooSmall,
                    };
                    return Ok(Some(Violation {
                        first: DirectedTimeEdge { from: u, to: v, label: t1 },
                        second: DirectedTimeEdge { from: v, to: w, label: t2 },
                        reason,
                        required: t2,
                    }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::TemporalGraph;

    #[test]
    fn synchronous_triangle_tto_yes_strict_always_yes() {
        let g = TemporalGraph::from_edges(&[("u", "v", 1), ("v", "w", 1), ("w", "u", 1)]);
        let b = OracleBudget::default();
        assert!(oracle_recognize(&g, Variant::Tto, &b).unwrap());
        assert!(oracle_recognize(&g, Variant::Strict, &b).unwrap());
        assert!(!oracle_recognize(&g, Variant::Strong, &b).unwrap());
    }

    #[test]
    fn c5_not_orientable() {
        let g = TemporalGraph::from_edges(&[
            ("a", "b", 1),
            ("b", "c", 1),
            ("c", "d", 1),
            ("d", "e", 1),
            ("e", "a", 1),
        ]);
        let b = OracleBudget::default();
        assert!(!oracle_recognize(&g, Variant::Tto, &b).unwrap());
        // Cross-check: odd holes are not comparability graphs, so the naive
        // closure must flag an improper class.
        assert!(oracle_lambda_classes(&g).is_err());
    }

    #[test]
    fn budget_is_enforced() {
        let mut edges = Vec::new();
        let names: Vec<String> = (0..20).map(|i| format!("v{}", i)).collect();
        for i in 0..17 {
            edges.push((names[i].as_str(), names[i + 1].as_str(), 1u32));
        }
        let g = TemporalGraph::from_edges(&edges);
        let b = OracleBudget::default();
        assert!(matches!(
            oracle_recognize(&g, Variant::Tto, &b),
            Err(OracleError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn empty_multilayer_is_yes() {
        let g = MultiLabelTemporalGraph::from_edges(&[]);
        assert!(oracle_multilayer(&g, &OracleBudget::default()).unwrap());
    }

    #[test]
    fn lambda_oracle_p3() {
        let g = TemporalGraph::from_edges(&[("u", "v", 1), ("v", "w", 1)]);
        let classes = oracle_lambda_classes(&g).unwrap();
        assert_eq!(classes.len(), 2);
        assert!(classes.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn disconnected_equal_label_edges_stay_separate() {
        let g = TemporalGraph::from_edges(&[("a", "b", 1), ("c", "d", 1)]);
        let classes = oracle_lambda_classes(&g).unwrap();
        assert_eq!(classes.len(), 4);
        assert!(classes.iter().all(|c| c.len() == 1));
    }
}
