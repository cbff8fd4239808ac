//! Definition-level checkers for the four temporal transitivity variants and
//! for per-layer static transitivity.

use std::fmt;

use thiserror::Error;

use crate::graph::{
    DirectedTimeEdge, MultiLabelTemporalGraph, Orientation, TemporalGraph, TimeLabel, VertexId,
};

/// The four transitivity variants. Premise: a directed 2-path `(uv,t1),
/// (vw,t2)` triggers the constraint when `t2 >= t1` (strict variants:
/// `t2 > t1`); conclusion: a directed `u -> w` edge with label `t3 >= t2`
/// (strong variants: `t3 > t2`) must exist.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Variant {
    Tto,
    Strict,
    Strong,
    StrongStrict,
}

impl Variant {
    pub const ALL: [Variant; 4] = [Variant::Tto, Variant::Strict, Variant::Strong, Variant::StrongStrict];

    pub fn premise_holds(self, t1: TimeLabel, t2: TimeLabel) -> bool {
        match self {
            Variant::Tto | Variant::Strong => t2 >= t1,
            Variant::Strict | Variant::StrongStrict => t2 > t1,
        }
    }

    pub fn conclusion_holds(self, t2: TimeLabel, t3: TimeLabel) -> bool {
        match self {
            Variant::Tto | Variant::Strict => t3 >= t2,
            Variant::Strong | Variant::StrongStrict => t3 > t2,
        }
    }

    /// Strength order: STRONG implies TTO and STRONG_STRICT; TTO and
    /// STRONG_STRICT each imply STRICT.
    pub fn implies(self, other: Variant) -> bool {
        use Variant::*;
        self == other
            || matches!(
                (self, other),
                (Strong, Tto) | (Strong, StrongStrict) | (Strong, Strict) | (Tto, Strict) | (StrongStrict, Strict)
            )
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Variant::Tto => "tto",
            Variant::Strict => "strict",
            Variant::Strong => "strong",
            Variant::StrongStrict => "strong-strict",
        };
        write!(f, "{}", s)
    }
}

impl std::str::FromStr for Variant {
    type Err = String;

    fn from_str(s: &str) -> Result<Variant, String> {
        match s {
            "tto" => Ok(Variant::Tto),
            "strict" => Ok(Variant::Strict),
            "strong" => Ok(Variant::Strong),
            "strong-strict" => Ok(Variant::StrongStrict),
            other => Err(format!("unknown variant {:?} (expected tto|strict|strong|strong-strict)", other)),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ViolationReason {
    MissingEdge,
    WrongDirection,
    LabelTooSmall,
}

/// Witness of a failed transitivity constraint: the offending directed
/// 2-path and the label bound the completing edge would have needed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Violation {
    pub first: DirectedTimeEdge,
    pub second: DirectedTimeEdge,
    pub reason: ViolationReason,
    pub required: TimeLabel,
}

#[derive(Error, Debug, Clone, Copy, PartialEq, Eq)]
#[error("orientation is not proper over the edge set")]
pub struct ImproperOrientation;

struct Arcs {
    // Per vertex: (other endpoint, label) of incoming / outgoing arcs,
    // sorted by endpoint index for deterministic witnesses.
    inc: Vec<Vec<(VertexId, TimeLabel)>>,
    out: Vec<Vec<(VertexId, TimeLabel)>>,
}

fn directed_arcs(g: &TemporalGraph, f: &Orientation) -> Arcs {
    let mut inc = vec![Vec::new(); g.n()];
    let mut out = vec![Vec::new(); g.n()];
    for (e, edge) in g.edges().iter().enumerate() {
        let (from, to) = edge.ends(f.get(e).expect("proper orientation"));
        out[from.index()].push((to, edge.label));
        inc[to.index()].push((from, edge.label));
    }
    for row in inc.iter_mut().chain(out.iter_mut()) {
        row.sort_unstable();
    }
    Arcs { inc, out }
}

fn directed_label(g: &TemporalGraph, f: &Orientation, from: VertexId, to: VertexId) -> Option<TimeLabel> {
    let e = g.edge_between(from, to)?;
    let d = f.get(e).expect("proper orientation");
    if g.edge(e).ends(d).0 == from {
        Some(g.edge(e).label)
    } else {
        None
    }
}

fn check_closing(
    g: &TemporalGraph,
    f: &Orientation,
    u: VertexId,
    w: VertexId,
    t2: TimeLabel,
    variant: Variant,
) -> Option<ViolationReason> {
    match g.edge_between(u, w) {
        None => Some(ViolationReason::MissingEdge),
        Some(e) => {
            let d = f.get(e).expect("proper orientation");
            if g.edge(e).ends(d).0 != u {
                Some(ViolationReason::WrongDirection)
            } else if !variant.conclusion_holds(t2, g.edge(e).label) {
                Some(ViolationReason::LabelTooSmall)
            } else {
                None
            }
        }
    }
}

/// Check a proper orientation against a transitivity variant. Returns the
/// lexicographically first violation by `(u, v, w)` vertex index, or `None`
/// if the orientation is transitive in the requested sense.
pub fn verify_orientation(
    g: &TemporalGraph,
    f: &Orientation,
    variant: Variant,
) -> Result<Option<Violation>, ImproperOrientation> {
    if f.len() != g.m() || !f.is_proper() {
        return Err(ImproperOrientation);
    }
    let arcs = directed_arcs(g, f);
    let mut best: Option<([VertexId; 3], Violation)> = None;
    for v in g.vertices() {
        for &(u, t1) in &arcs.inc[v.index()] {
            for &(w, t2) in &arcs.out[v.index()] {
                if u == w || !variant.premise_holds(t1, t2) {
                    continue;
                }
                if let Some(reason) = check_closing(g, f, u, w, t2, variant) {
                    let key = [u, v, w];
                    if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
                        best = Some((
                            key,
                            Violation {
                                first: DirectedTimeEdge { from: u, to: v, label: t1 },
                                second: DirectedTimeEdge { from: v, to: w, label: t2 },
                                reason,
                                required: t2,
                            },
                        ));
                    }
                }
            }
        }
    }
    Ok(best.map(|(_, viol)| viol))
}

/// Early-exit variant check without witness construction. Used by the
/// exhaustive oracles.
pub fn orientation_ok(g: &TemporalGraph, f: &Orientation, variant: Variant) -> bool {
    let arcs = directed_arcs(g, f);
    for v in g.vertices() {
        for &(u, t1) in &arcs.inc[v.index()] {
            for &(w, t2) in &arcs.out[v.index()] {
                if u == w || !variant.premise_holds(t1, t2) {
                    continue;
                }
                if check_closing(g, f, u, w, t2, variant).is_some() {
                    return false;
                }
            }
        }
    }
    true
}

/// Check one orientation against all four variants in one pass over the
/// directed 2-paths.
pub fn orientation_ok_all(g: &TemporalGraph, f: &Orientation) -> [bool; 4] {
    let mut ok = [true; 4];
    let arcs = directed_arcs(g, f);
    for v in g.vertices() {
        for &(u, t1) in &arcs.inc[v.index()] {
            for &(w, t2) in &arcs.out[v.index()] {
                if u == w || t2 < t1 {
                    continue;
                }
                let strict_premise = t2 > t1;
                let closing = directed_label(g, f, u, w);
                let weak = matches!(closing, Some(t3) if t3 >= t2);
                let strong = matches!(closing, Some(t3) if t3 > t2);
                ok[0] &= weak;
                ok[2] &= strong;
                if strict_premise {
                    ok[1] &= weak;
                    ok[3] &= strong;
                }
                if !ok.iter().any(|&b| b) {
                    return ok;
                }
            }
        }
    }
    ok
}

/// Check a proper orientation of a multi-label graph: for every layer `t`,
/// the oriented graph induced by edges carrying `t` must be transitively
/// oriented in the static sense. Returns the first violating layer with a
/// witness.
pub fn verify_multilayer(
    g: &MultiLabelTemporalGraph,
    f: &Orientation,
) -> Result<Option<(TimeLabel, Violation)>, ImproperOrientation> {
    if f.len() != g.m() || !f.is_proper() {
        return Err(ImproperOrientation);
    }
    for t in g.layers() {
        let layer = g.layer_edges(t);
        let mut inc: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
        let mut out: Vec<Vec<VertexId>> = vec![Vec::new(); g.n()];
        let mut arc: std::collections::HashSet<(VertexId, VertexId)> = std::collections::HashSet::new();
        for &e in &layer {
            let (from, to) = g.edge(e).ends(f.get(e).unwrap());
            out[from.index()].push(to);
            inc[to.index()].push(from);
            arc.insert((from, to));
        }
        for row in inc.iter_mut().chain(out.iter_mut()) {
            row.sort_unstable();
        }
        let mut best: Option<([VertexId; 3], Violation)> = None;
        for v in g.vertices() {
            for &u in &inc[v.index()] {
                for &w in &out[v.index()] {
                    if u == w || arc.contains(&(u, w)) {
                        continue;
                    }
                    let reason = if arc.contains(&(w, u)) {
                        ViolationReason::WrongDirection
                    } else {
                        ViolationReason::MissingEdge
                    };
                    let key = [u, v, w];
                    if best.as_ref().map_or(true, |(bk, _)| key < *bk) {
                        best = Some((
                            key,
                            Violation {
                                first: DirectedTimeEdge { from: u, to: v, label: t },
                                second: DirectedTimeEdge { from: v, to: w, label: t },
                                reason,
                                required: t,
                            },
                        ));
                    }
                }
            }
        }
        if let Some((_, viol)) = best {
            return Ok(Some((t, viol)));
        }
    }
    Ok(None)
}

/// Describe a violation using vertex names.
pub fn describe_violation(names: &dyn Fn(VertexId) -> String, v: &Violation) -> String {
    let reason = match v.reason {
        ViolationReason::MissingEdge => "missing-edge",
        ViolationReason::WrongDirection => "wrong-direction",
        ViolationReason::LabelTooSmall => "label-too-small",
    };
    format!(
        "({}->{},{}),({}->{},{}) needs {}->{} with adequate label (>= or > {}): {}",
        names(v.first.from),
        names(v.first.to),
        v.first.label,
        names(v.second.from),
        names(v.second.to),
        v.second.label,
        names(v.first.from),
        names(v.second.to),
        v.required,
        reason
    )
}
