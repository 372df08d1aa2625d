// Copyright 2026 The zxsimp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Graph-like simplification of qubit diagrams.

use crate::diagram::{Diagram, NodeId};
use crate::error::{Error, Result};
use crate::graph_like::{kind_from_effect, to_graph_like, GraphLike, Simplified, VertexKind};
use crate::ledger;
use crate::phase::Phase;
use crate::scalar::ExactScalar;
use crate::trace::{Step, Trace};
use crate::Dim;

pub const LC: &str = "qubit_lc";
pub const CLIFFORD: &str = "qubit_clifford";
pub const PAULI_PAIR: &str = "qubit_pauli_pair";
pub const BASIS: &str = "qubit_basis";
pub const ISOLATED: &str = "qubit_isolated";
pub const ZERO_COLLAPSE: &str = "zero_collapse";

fn check_dim(g: &GraphLike) -> Result<()> {
    if g.dim() != Dim::Qubit {
        return Err(Error::DimensionMismatch(g.d(), 2));
    }
    Ok(())
}

fn qubit_k(g: &GraphLike, v: NodeId) -> Result<u8> {
    match g.kind(v)? {
        VertexKind::Phase(Phase::QubitStab { k }) => Ok(k),
        VertexKind::Phase(_) => Err(Error::NonStabilizer(v)),
        VertexKind::Basis(_) => Err(Error::WrongPhase(v)),
    }
}

fn interior(g: &GraphLike, v: NodeId) -> Result<()> {
    if !g.contains(v) {
        Err(Error::UnknownNode(v))
    } else if g.is_boundary(v) {
        Err(Error::BoundaryNode(v))
    } else {
        Ok(())
    }
}

/// Signature naming the effect of a vertex: `k=<phase>` or `basis=<k>`.
pub(crate) fn kind_signature(k: VertexKind) -> String {
    match k {
        VertexKind::Phase(Phase::QubitStab { k }) => format!("k={k}"),
        VertexKind::Phase(Phase::QutritStab { a, b }) => format!("({a},{b})"),
        VertexKind::Basis(s) => format!("basis={s}"),
        VertexKind::Phase(p) => format!("generic {p}"),
    }
}

/// Graph-like form of a qubit diagram, with an exact scalar.
pub fn to_graph_like_qubit(a: &Diagram) -> Result<GraphLike> {
    if a.dim() != Dim::Qubit {
        return Err(Error::DimensionMismatch(a.dim().value(), 2));
    }
    Ok(to_graph_like(a))
}

/// Toggles every edge inside the neighbourhood of `x`, turns the
/// neighbours by `-π/2` and rotates the effect of `x` by `√X` (up to the
/// tabulated factor).
pub(crate) fn lc_raw(g: &mut GraphLike, x: NodeId) -> Result<Step> {
    check_dim(g)?;
    interior(g, x)?;
    let kind = g.kind(x)?;
    let e = g.effect(x).ok_or(Error::NonStabilizer(x))?;
    let nb: Vec<NodeId> = g.neighbours(x).into_iter().map(|(v, _)| v).collect();
    let mut step = Step::new(LC, kind_signature(kind), nb.len(), &[x]);
    for (i, &u) in nb.iter().enumerate() {
        for &v in &nb[i + 1..] {
            g.add_weight(u, v, 1);
            step.edge_updates += 1;
        }
        g.add_phase(u, Phase::qubit(-1));
    }
    let c0 = ExactScalar::zeta(3) * ExactScalar::sqrt2_pow(-1);
    let c1 = ExactScalar::zeta(-3) * ExactScalar::sqrt2_pow(-1);
    let rotated = [c0 * e[0] + c1 * e[1], c1 * e[0] + c0 * e[1]];
    let (_, new_kind) = kind_from_effect(Dim::Qubit, &rotated).ok_or(Error::WrongPhase(x))?;
    g.set_kind(x, new_kind);
    Ok(step)
}

/// Local complementation at an interior vertex.
pub fn local_complement_qubit(g: &GraphLike, v: NodeId) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = lc_raw(&mut h, v)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

pub(crate) fn clifford_raw(g: &mut GraphLike, v: NodeId) -> Result<Step> {
    check_dim(g)?;
    interior(g, v)?;
    let k = qubit_k(g, v)?;
    if k % 2 == 0 {
        return Err(Error::WrongPhase(v));
    }
    let nb: Vec<NodeId> = g.neighbours(v).into_iter().map(|(u, _)| u).collect();
    let mut step = Step::new(CLIFFORD, format!("k={k}"), nb.len(), &[v]);
    for (i, &a) in nb.iter().enumerate() {
        for &b in &nb[i + 1..] {
            g.add_weight(a, b, 1);
            step.edge_updates += 1;
        }
        g.add_phase(a, Phase::qubit(-(k as i64)));
    }
    g.remove_vertex(v);
    Ok(step)
}

/// Removes an interior `±π/2` spider, complementing its neighbourhood.
pub fn eliminate_clifford(g: &GraphLike, v: NodeId) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = clifford_raw(&mut h, v)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

pub(crate) fn pauli_pair_raw(g: &mut GraphLike, u: NodeId, v: NodeId) -> Result<Step> {
    check_dim(g)?;
    interior(g, u)?;
    interior(g, v)?;
    let (ku, kv) = (qubit_k(g, u)?, qubit_k(g, v)?);
    if ku % 2 == 1 {
        return Err(Error::WrongPhase(u));
    }
    if kv % 2 == 1 {
        return Err(Error::WrongPhase(v));
    }
    if g.weight(u, v) == 0 {
        return Err(Error::NotAdjacent(u, v));
    }
    let (au, av) = (ku / 2, kv / 2);
    let nu: Vec<NodeId> = g.neighbours(u).into_iter().map(|(x, _)| x).filter(|&x| x != v).collect();
    let nv: Vec<NodeId> = g.neighbours(v).into_iter().map(|(x, _)| x).filter(|&x| x != u).collect();
    let mut touched: Vec<NodeId> = nu.iter().chain(&nv).copied().collect();
    touched.sort();
    touched.dedup();
    let mut step = Step::new(PAULI_PAIR, format!("a={au},b={av}"), touched.len(), &[u, v]);
    for &i in &nu {
        for &j in &nv {
            if i == j {
                g.add_phase(i, Phase::qubit(2));
            } else {
                g.add_weight(i, j, 1);
                step.edge_updates += 1;
            }
        }
        g.add_phase(i, Phase::qubit(2 * av as i64));
    }
    for &j in &nv {
        g.add_phase(j, Phase::qubit(2 * au as i64));
    }
    g.remove_vertex(u);
    g.remove_vertex(v);
    Ok(step)
}

/// Removes an adjacent pair of interior Pauli spiders by pivoting.
pub fn eliminate_pauli_pair(g: &GraphLike, u: NodeId, v: NodeId) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = pauli_pair_raw(&mut h, u, v)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

/// Removes an interior basis vertex: its value is substituted into the
/// neighbours' phases.
pub(crate) fn basis_raw(g: &mut GraphLike, v: NodeId) -> Result<Step> {
    check_dim(g)?;
    interior(g, v)?;
    let VertexKind::Basis(s) = g.kind(v)? else {
        return Err(Error::WrongPhase(v));
    };
    let nb = g.neighbours(v);
    let step = Step::new(BASIS, format!("basis={s}"), nb.len(), &[v]);
    for (u, _) in nb {
        g.add_phase(u, Phase::qubit(2 * s as i64));
    }
    g.remove_vertex(v);
    Ok(step)
}

/// Removes an isolated interior spider whose sum is nonzero.
pub(crate) fn isolated_raw(g: &mut GraphLike, v: NodeId) -> Result<Step> {
    interior(g, v)?;
    if g.degree(v) != 0 {
        return Err(Error::Invalid(format!("{v} is not isolated")));
    }
    let sig = kind_signature(g.kind(v)?);
    let rule = match g.dim() {
        Dim::Qubit => ISOLATED,
        Dim::Qutrit => crate::qutrit::ISOLATED,
    };
    g.remove_vertex(v);
    Ok(Step::new(rule, sig, 0, &[v]))
}

/// Keeps only `v`, an isolated vertex whose sum vanishes: the whole closed
/// graph is then zero.
pub(crate) fn zero_collapse(g: &mut GraphLike, v: NodeId) -> Step {
    let others: Vec<NodeId> = g.vertex_ids().into_iter().filter(|&u| u != v).collect();
    for &u in &others {
        g.remove_vertex(u);
    }
    Step::new(ZERO_COLLAPSE, String::new(), 0, &others)
}

/// Sum of the effect of `v`, when exact.
pub(crate) fn effect_sum(g: &GraphLike, v: NodeId) -> Option<ExactScalar> {
    g.effect(v).map(|e| e.into_iter().sum())
}

fn record(g: &mut GraphLike, trace: &mut Trace, step: Result<Step>) -> Result<()> {
    let mut step = step?;
    if step.rule != ZERO_COLLAPSE {
        ledger::apply(g, &mut step)?;
    }
    trace.push(step);
    Ok(())
}

fn next_qubit_step(g: &mut GraphLike, trace: &mut Trace) -> Result<bool> {
    let ids = g.vertex_ids();
    let inner: Vec<NodeId> = ids.iter().copied().filter(|&v| !g.is_boundary(v)).collect();
    let k_of = |g: &GraphLike, v: NodeId| match g.kind(v) {
        Ok(VertexKind::Phase(Phase::QubitStab { k })) => Some(k),
        _ => None,
    };
    if let Some(&v) = inner.iter().find(|&&v| k_of(g, v).is_some_and(|k| k % 2 == 1)) {
        let s = clifford_raw(g, v);
        record(g, trace, s)?;
        return Ok(true);
    }
    if let Some(&v) = inner.iter().find(|&&v| matches!(g.kind(v), Ok(VertexKind::Basis(_)))) {
        let s = basis_raw(g, v);
        record(g, trace, s)?;
        return Ok(true);
    }
    for &u in &inner {
        if !k_of(g, u).is_some_and(|k| k % 2 == 0) {
            continue;
        }
        let partner = g
            .neighbours(u)
            .into_iter()
            .map(|(v, _)| v)
            .find(|&v| v > u && !g.is_boundary(v) && k_of(g, v).is_some_and(|k| k % 2 == 0));
        if let Some(v) = partner {
            let s = pauli_pair_raw(g, u, v);
            record(g, trace, s)?;
            return Ok(true);
        }
    }
    finish_isolated(g, trace, &inner)
}

/// Clears isolated stabilizer spiders of a closed graph down to one.
pub(crate) fn finish_isolated(g: &mut GraphLike, trace: &mut Trace, inner: &[NodeId]) -> Result<bool> {
    if !g.is_closed() || g.vertex_count() <= 1 {
        return Ok(false);
    }
    for &v in inner {
        if g.degree(v) != 0 {
            continue;
        }
        match effect_sum(g, v) {
            Some(s) if s.is_zero() => {
                let step = zero_collapse(g, v);
                trace.push(step);
                return Ok(true);
            }
            Some(_) => {
                let s = isolated_raw(g, v);
                record(g, trace, s)?;
                return Ok(true);
            }
            None => {}
        }
    }
    Ok(false)
}

/// Runs the qubit rules on `g` until none applies, skipping non-stabilizer
/// spiders. Lowest ids go first: Clifford spiders, then basis vertices,
/// then Pauli pairs in lexicographic order.
pub fn reduce_qubit(g: &mut GraphLike) -> Result<Trace> {
    check_dim(g)?;
    let mut trace = Trace::default();
    while next_qubit_step(g, &mut trace)? {}
    Ok(trace)
}

pub(crate) fn finish(g: GraphLike, trace: Trace) -> Simplified {
    let closed_done = g.is_closed() && g.vertex_count() <= 1 && g.is_stabilizer();
    let scalar = if closed_done {
        g.exact_value().expect("closed stabilizer graph")
    } else {
        g.scalar()
    };
    Simplified {
        residual: g.to_diagram(),
        graph: g,
        scalar,
        partial: !closed_done,
        value: closed_done.then(|| scalar.to_complex()),
        trace,
    }
}

/// Simplifies a qubit stabilizer diagram. For a closed input at most one
/// spider is left and `scalar` is its exact value; an open input is
/// reduced on its interior only and flagged partial.
pub fn simplify_qubit(a: &Diagram) -> Result<Simplified> {
    if a.dim() != Dim::Qubit {
        return Err(Error::DimensionMismatch(a.dim().value(), 2));
    }
    if let Some((&id, _)) = a
        .nodes()
        .iter()
        .find(|(_, n)| n.kind.phase().is_some_and(|p| !p.is_stabilizer()))
    {
        return Err(Error::NonStabilizer(id));
    }
    let mut g = to_graph_like(a);
    let trace = reduce_qubit(&mut g)?;
    Ok(finish(g, trace))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle(k: i64) -> (GraphLike, Vec<NodeId>) {
        let mut g = GraphLike::new(Dim::Qubit);
        let ids: Vec<NodeId> = (0..3).map(|_| g.add_vertex(VertexKind::Phase(Phase::qubit(k)))).collect();
        g.set_weight(ids[0], ids[1], 1);
        g.set_weight(ids[1], ids[2], 1);
        g.set_weight(ids[0], ids[2], 1);
        (g, ids)
    }

    #[test]
    fn star_gains_edge() {
        let mut g = GraphLike::new(Dim::Qubit);
        let v = g.add_vertex(VertexKind::Phase(Phase::qubit(0)));
        let y = g.add_vertex(VertexKind::Phase(Phase::qubit(0)));
        let z = g.add_vertex(VertexKind::Phase(Phase::qubit(0)));
        g.set_weight(v, y, 1);
        g.set_weight(v, z, 1);
        let mut h = g.clone();
        lc_raw(&mut h, v).unwrap();
        assert_eq!(h.weight(y, z), 1);
        lc_raw(&mut h, v).unwrap();
        assert_eq!(h.edges(), g.edges());
    }

    #[test]
    fn isolated_lc_keeps_edges() {
        let mut g = GraphLike::new(Dim::Qubit);
        let v = g.add_vertex(VertexKind::Phase(Phase::qubit(1)));
        let w = g.add_vertex(VertexKind::Phase(Phase::qubit(0)));
        let mut h = g.clone();
        lc_raw(&mut h, v).unwrap();
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.kind(w).unwrap(), g.kind(w).unwrap());
    }

    #[test]
    fn clifford_on_triangle() {
        let (mut g, ids) = triangle(1);
        clifford_raw(&mut g, ids[0]).unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.weight(ids[1], ids[2]), 0);
        assert_eq!(g.phase(ids[1]), Some(Phase::qubit(0)));
        assert_eq!(g.phase(ids[2]), Some(Phase::qubit(0)));
    }

    #[test]
    fn rule_preconditions() {
        let (mut g, ids) = triangle(0);
        assert!(matches!(clifford_raw(&mut g, ids[0]), Err(Error::WrongPhase(_))));
        assert!(matches!(clifford_raw(&mut g, NodeId(99)), Err(Error::UnknownNode(_))));
        g.add_output(ids[2]);
        assert!(matches!(pauli_pair_raw(&mut g, ids[0], ids[2]), Err(Error::BoundaryNode(_))));
        let (mut g, ids) = triangle(0);
        g.set_weight(ids[0], ids[1], 0);
        assert!(matches!(pauli_pair_raw(&mut g, ids[0], ids[1]), Err(Error::NotAdjacent(..))));
    }

    #[test]
    fn pauli_pair_on_path() {
        let mut g = GraphLike::new(Dim::Qubit);
        let u = g.add_vertex(VertexKind::Phase(Phase::qubit(2)));
        let v = g.add_vertex(VertexKind::Phase(Phase::qubit(0)));
        let w = g.add_vertex(VertexKind::Phase(Phase::qubit(1)));
        g.set_weight(u, v, 1);
        g.set_weight(v, w, 1);
        pauli_pair_raw(&mut g, u, v).unwrap();
        assert_eq!(g.vertex_count(), 1);
        // w hangs off v, so it picks up u's π
        assert_eq!(g.phase(w), Some(Phase::qubit(3)));
    }
}
