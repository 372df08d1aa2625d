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

//! Graph-like simplification of qutrit diagrams.
//!
//! A stabilizer phase `(a, b)` is the phase function `φ(s) = αs + βs²` over
//! `Z_3` with `α = b - a` and `β = 2a - b`. Spiders split into three
//! families: `M` (`β = 0`), `P` (`α = 0`, `β ≠ 0`) and `N` (both nonzero).
//! P- and N-spiders are removed one at a time by completing the square in
//! the state sum; adjacent M-spiders are removed in pairs.

use std::collections::BTreeMap;

use crate::diagram::{Diagram, Edge, Node, NodeId, NodeKind, Port, Side};
use crate::error::{Error, Result};
use crate::graph_like::{kind_from_effect, to_graph_like, GraphLike, Simplified, VertexKind};
use crate::ledger;
use crate::phase::Phase;
use crate::qubit::{finish_isolated, kind_signature};
use crate::scalar::ExactScalar;
use crate::semantics;
use crate::trace::{Step, Trace};
use crate::Dim;

pub const LC: &str = "qutrit_lc";
pub const ELIM_P: &str = "qutrit_p";
pub const ELIM_N: &str = "qutrit_n";
pub const M_PAIR: &str = "qutrit_m_pair";
pub const BASIS: &str = "qutrit_basis";
pub const ISOLATED: &str = "qutrit_isolated";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SpiderFamily {
    M,
    N,
    P,
    NonStabilizer,
}

pub fn classify_spider(p: Phase) -> SpiderFamily {
    match p.qutrit_quadratic() {
        None => SpiderFamily::NonStabilizer,
        Some((_, 0)) => SpiderFamily::M,
        Some((0, _)) => SpiderFamily::P,
        Some(_) => SpiderFamily::N,
    }
}

fn check_dim(g: &GraphLike) -> Result<()> {
    if g.dim() != Dim::Qutrit {
        return Err(Error::DimensionMismatch(g.d(), 3));
    }
    Ok(())
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

fn family_of(g: &GraphLike, v: NodeId) -> Option<SpiderFamily> {
    g.phase(v).map(classify_spider)
}

fn quadratic(g: &GraphLike, v: NodeId) -> Result<(i64, i64)> {
    match g.kind(v)? {
        VertexKind::Phase(p) => p
            .qutrit_quadratic()
            .map(|(a, b)| (a as i64, b as i64))
            .ok_or(Error::NonStabilizer(v)),
        VertexKind::Basis(_) => Err(Error::WrongPhase(v)),
    }
}

fn m3(x: i64) -> i64 {
    x.rem_euclid(3)
}

/// `Σ_s ω^{β s²}`.
pub fn gauss_sum(beta: i64) -> ExactScalar {
    (0..3).map(|s| ExactScalar::omega(beta * s * s)).sum()
}

/// Sums parallel weighted edges mod 3; weight-0 pairs disappear.
pub fn reduce_parallel_h_edges(vertices: &[(NodeId, Phase)], edges: &[(NodeId, NodeId, u8)]) -> Result<GraphLike> {
    GraphLike::from_multi_edges(Dim::Qutrit, vertices, edges)
}

fn h_power(h: u8) -> u8 {
    match h {
        1 => 1,
        2 => 3,
        _ => 0,
    }
}

/// Shortens every chain of Hadamard boxes joined by plain wires: the
/// product of the chain is `H^p` with `p` mod 4, which is rebuilt as a
/// plain wire (`p = 0`), one box (`p = 1` or `3`, the latter as `H†`), or
/// two boxes around a phaseless spider (`p = 2`).
pub fn reduce_h_box_chain(a: &Diagram) -> Result<Diagram> {
    if a.dim() != Dim::Qutrit {
        return Err(Error::DimensionMismatch(a.dim().value(), 3));
    }
    let mut nodes: BTreeMap<NodeId, Node> = a.nodes().clone();
    let mut edges: Vec<Edge> = a.edges().to_vec();
    let mut inputs = a.inputs().to_vec();
    let mut outputs = a.outputs().to_vec();
    let mut next = nodes.keys().next_back().map_or(0, |v| v.0 + 1);
    let is_h = |nodes: &BTreeMap<NodeId, Node>, v: NodeId| matches!(nodes.get(&v).map(|n| n.kind), Some(NodeKind::H(_)));
    // the plain edge leaving an H box into the next H box of its chain
    let succ = |nodes: &BTreeMap<NodeId, Node>, edges: &[Edge], v: NodeId| -> Option<(usize, NodeId)> {
        edges.iter().enumerate().find_map(|(i, e)| {
            let (from, to) = if e.a == Port::output(v, 0) {
                (e.a, e.b)
            } else if e.b == Port::output(v, 0) {
                (e.b, e.a)
            } else {
                return None;
            };
            (e.h == 0 && from.node != to.node && to.side == Side::In && to.index == 0 && is_h(nodes, to.node))
                .then_some((i, to.node))
        })
    };
    let ids: Vec<NodeId> = nodes.keys().copied().collect();
    let mut done = std::collections::BTreeSet::new();
    for start in ids {
        if done.contains(&start) || !is_h(&nodes, start) {
            continue;
        }
        // walk back to the head of the chain
        let mut head = start;
        let mut seen = std::collections::BTreeSet::from([head]);
        loop {
            let pred = edges.iter().find_map(|e| {
                let (p, q) = if e.b == Port::input(head, 0) { (e.a, e.b) } else if e.a == Port::input(head, 0) { (e.b, e.a) } else { return None };
                let _ = q;
                (e.h == 0 && p.side == Side::Out && p.index == 0 && is_h(&nodes, p.node)).then_some(p.node)
            });
            match pred {
                Some(p) if !seen.contains(&p) => {
                    seen.insert(p);
                    head = p;
                }
                _ => break,
            }
        }
        let mut chain = vec![head];
        let mut inner_edges = Vec::new();
        while let Some((i, nxt)) = succ(&nodes, &edges, *chain.last().unwrap()) {
            if chain.contains(&nxt) {
                break;
            }
            inner_edges.push(i);
            chain.push(nxt);
        }
        done.extend(chain.iter().copied());
        if chain.len() < 2 || inner_edges.len() + 1 != chain.len() {
            continue;
        }
        let p = chain
            .iter()
            .map(|v| match nodes[v].kind {
                NodeKind::H(h) => h_power(h),
                _ => 0,
            })
            .sum::<u8>()
            % 4;
        let first_in = Port::input(chain[0], 0);
        let last_out = Port::output(*chain.last().unwrap(), 0);
        inner_edges.sort_unstable();
        for i in inner_edges.into_iter().rev() {
            edges.remove(i);
        }
        for v in &chain {
            nodes.remove(v);
        }
        let mut fresh = |kind: NodeKind, nodes: &mut BTreeMap<NodeId, Node>| {
            let id = NodeId(next);
            next += 1;
            nodes.insert(id, Node { kind, n_in: 1, n_out: 1 });
            id
        };
        let pieces: Vec<NodeId> = match p {
            0 => vec![fresh(NodeKind::Z(Phase::qutrit(0, 0)), &mut nodes)],
            1 => vec![fresh(NodeKind::H(1), &mut nodes)],
            3 => vec![fresh(NodeKind::H(2), &mut nodes)],
            _ => vec![
                fresh(NodeKind::H(1), &mut nodes),
                fresh(NodeKind::Z(Phase::qutrit(0, 0)), &mut nodes),
                fresh(NodeKind::H(1), &mut nodes),
            ],
        };
        for w in pieces.windows(2) {
            edges.push(Edge { a: Port::output(w[0], 0), b: Port::input(w[1], 0), h: 0 });
        }
        let new_in = Port::input(pieces[0], 0);
        let new_out = Port::output(*pieces.last().unwrap(), 0);
        let relabel = |q: &mut Port| {
            if *q == first_in {
                *q = new_in;
            } else if *q == last_out {
                *q = new_out;
            }
        };
        for e in edges.iter_mut() {
            relabel(&mut e.a);
            relabel(&mut e.b);
        }
        inputs.iter_mut().for_each(relabel);
        outputs.iter_mut().for_each(relabel);
        // a lone identity spider between two plain wires can go as well
        if p == 0 {
            let z = pieces[0];
            let ein = edges.iter().position(|e| e.h == 0 && (e.b == new_in || e.a == new_in));
            let eout = edges.iter().position(|e| e.h == 0 && (e.a == new_out || e.b == new_out));
            if let (Some(i), Some(o)) = (ein, eout) {
                let other = |e: &Edge, q: Port| if e.a == q { e.b } else { e.a };
                let (x, y) = (other(&edges[i], new_in), other(&edges[o], new_out));
                if x.side == Side::Out && y.side == Side::In && x.node != z && y.node != z {
                    let (hi, lo) = (i.max(o), i.min(o));
                    edges.remove(hi);
                    edges.remove(lo);
                    edges.push(Edge { a: x, b: y, h: 0 });
                    nodes.remove(&z);
                }
            }
        }
    }
    Diagram::from_parts(Dim::Qutrit, nodes, edges, inputs, outputs, a.scalar())
}

/// Graph-like form of a qutrit diagram, with an exact scalar.
pub fn to_graph_like_qutrit(a: &Diagram) -> Result<GraphLike> {
    let reduced = reduce_h_box_chain(a)?;
    Ok(to_graph_like(&reduced))
}

pub(crate) fn lc_raw(g: &mut GraphLike, x: NodeId, a: u8) -> Result<Step> {
    check_dim(g)?;
    interior(g, x)?;
    if a.is_multiple_of(3) {
        return Err(Error::Invalid("local complementation needs a ∈ {1, 2}".into()));
    }
    let a = (a % 3) as i64;
    let kind = g.kind(x)?;
    let e = g.effect(x).ok_or(Error::NonStabilizer(x))?;
    let nb = g.neighbours(x);
    let mut step = Step::new(LC, format!("{}|a={a}", kind_signature(kind)), nb.len(), &[x]);
    for (i, &(u, wu)) in nb.iter().enumerate() {
        for &(v, wv) in &nb[i + 1..] {
            g.add_weight(u, v, a * wu as i64 * wv as i64);
            step.edge_updates += 1;
        }
        g.add_phase(u, Phase::qutrit_from_quadratic(0, -a));
    }
    // e'(u) = Σ_t e(u - t) ω^{-a t²} / G(-a)
    let g_inv = gauss_sum(-a).inverse().expect("Gauss sums are units up to √3");
    let conv: Vec<ExactScalar> = (0..3)
        .map(|u| (0..3).map(|t| e[(u + 3 - t) % 3] * ExactScalar::omega(-a * (t * t) as i64)).sum::<ExactScalar>() * g_inv)
        .collect();
    let (_, new_kind) = kind_from_effect(Dim::Qutrit, &conv).ok_or(Error::WrongPhase(x))?;
    g.set_kind(x, new_kind);
    Ok(step)
}

/// `a`-local complementation at an interior vertex: `w_ij += a·w_ix·w_jx`
/// for all neighbours `i ≠ j` of `x`.
pub fn a_local_complement(g: &GraphLike, x: NodeId, a: u8) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = lc_raw(&mut h, x, a)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

pub(crate) fn pivot_raw(g: &mut GraphLike, i: NodeId, j: NodeId, a: u8) -> Result<Vec<Step>> {
    check_dim(g)?;
    for v in [i, j] {
        if !g.contains(v) {
            return Err(Error::UnknownNode(v));
        }
    }
    if g.weight(i, j) == 0 {
        return Err(Error::NotAdjacent(i, j));
    }
    let b = 3 - a % 3;
    Ok(vec![lc_raw(g, i, a)?, lc_raw(g, j, b)?, lc_raw(g, i, a)?])
}

/// The proper `a`-pivot along `ij`: local complementations with `a`, `-a`,
/// `a` at `i`, `j`, `i`.
pub fn proper_pivot(g: &GraphLike, i: NodeId, j: NodeId, a: u8) -> Result<GraphLike> {
    let mut h = g.clone();
    for mut step in pivot_raw(&mut h, i, j, a)? {
        ledger::apply(&mut h, &mut step)?;
    }
    Ok(h)
}

pub(crate) fn pn_raw(g: &mut GraphLike, x: NodeId, want: SpiderFamily) -> Result<Step> {
    check_dim(g)?;
    interior(g, x)?;
    let (alpha, beta) = quadratic(g, x)?;
    if family_of(g, x) != Some(want) {
        return Err(Error::WrongPhase(x));
    }
    let rule = if want == SpiderFamily::P { ELIM_P } else { ELIM_N };
    let nb = g.neighbours(x);
    let mut step = Step::new(rule, kind_signature(g.kind(x)?), nb.len(), &[x]);
    for (i, &(u, wu)) in nb.iter().enumerate() {
        for &(v, wv) in &nb[i + 1..] {
            g.add_weight(u, v, beta * wu as i64 * wv as i64);
            step.edge_updates += 1;
        }
        g.add_phase(u, Phase::qutrit_from_quadratic(m3(beta * alpha * wu as i64), -beta));
    }
    g.remove_vertex(x);
    Ok(step)
}

/// Removes an interior P-spider.
pub fn eliminate_p(g: &GraphLike, x: NodeId) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = pn_raw(&mut h, x, SpiderFamily::P)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

/// Removes an interior N-spider.
pub fn eliminate_n(g: &GraphLike, x: NodeId) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = pn_raw(&mut h, x, SpiderFamily::N)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

pub(crate) fn m_pair_raw(g: &mut GraphLike, i: NodeId, j: NodeId) -> Result<Step> {
    check_dim(g)?;
    interior(g, i)?;
    interior(g, j)?;
    let (ai, _) = quadratic(g, i)?;
    let (aj, _) = quadratic(g, j)?;
    for v in [i, j] {
        if family_of(g, v) != Some(SpiderFamily::M) {
            return Err(Error::WrongPhase(v));
        }
    }
    let w = g.weight(i, j) as i64;
    if w == 0 {
        return Err(Error::NotAdjacent(i, j));
    }
    let wi: BTreeMap<NodeId, i64> = g.neighbours(i).into_iter().filter(|&(v, _)| v != j).map(|(v, x)| (v, x as i64)).collect();
    let wj: BTreeMap<NodeId, i64> = g.neighbours(j).into_iter().filter(|&(v, _)| v != i).map(|(v, x)| (v, x as i64)).collect();
    let mut touched: Vec<NodeId> = wi.keys().chain(wj.keys()).copied().collect();
    touched.sort();
    touched.dedup();
    let sig = format!("{}|{}|w={w}", kind_signature(g.kind(i)?), kind_signature(g.kind(j)?));
    let mut step = Step::new(M_PAIR, sig, touched.len(), &[i, j]);
    let get = |m: &BTreeMap<NodeId, i64>, v: NodeId| m.get(&v).copied().unwrap_or(0);
    for (n, &u) in touched.iter().enumerate() {
        let (ui, uj) = (get(&wi, u), get(&wj, u));
        for &v in &touched[n + 1..] {
            let (vi, vj) = (get(&wi, v), get(&wj, v));
            let delta = m3(-w * (ui * vj + vi * uj));
            if delta != 0 {
                g.add_weight(u, v, delta);
                step.edge_updates += 1;
            }
        }
        let lin = -w * (ai * uj + aj * ui);
        let quad = -w * ui * uj;
        g.add_phase(u, Phase::qutrit_from_quadratic(m3(lin), m3(quad)));
    }
    g.remove_vertex(i);
    g.remove_vertex(j);
    Ok(step)
}

/// Removes an adjacent pair of interior M-spiders. The weights left behind
/// are those of a proper pivot along the pair.
pub fn eliminate_m_pair(g: &GraphLike, i: NodeId, j: NodeId) -> Result<GraphLike> {
    let mut h = g.clone();
    let mut step = m_pair_raw(&mut h, i, j)?;
    ledger::apply(&mut h, &mut step)?;
    Ok(h)
}

/// Removes an interior basis vertex, substituting its value.
pub(crate) fn basis_raw(g: &mut GraphLike, v: NodeId) -> Result<Step> {
    check_dim(g)?;
    interior(g, v)?;
    let VertexKind::Basis(s) = g.kind(v)? else {
        return Err(Error::WrongPhase(v));
    };
    let nb = g.neighbours(v);
    let step = Step::new(BASIS, format!("basis={s}"), nb.len(), &[v]);
    for (u, w) in nb {
        g.add_phase(u, Phase::qutrit_from_quadratic(s as i64 * w as i64, 0));
    }
    g.remove_vertex(v);
    Ok(step)
}

fn record(g: &mut GraphLike, trace: &mut Trace, step: Result<Step>) -> Result<()> {
    let mut step = step?;
    ledger::apply(g, &mut step)?;
    trace.push(step);
    Ok(())
}

fn next_qutrit_step(g: &mut GraphLike, trace: &mut Trace) -> Result<bool> {
    let inner: Vec<NodeId> = g.vertex_ids().into_iter().filter(|&v| !g.is_boundary(v)).collect();
    if let Some(&v) = inner.iter().find(|&&v| matches!(g.kind(v), Ok(VertexKind::Basis(_)))) {
        let s = basis_raw(g, v);
        record(g, trace, s)?;
        return Ok(true);
    }
    for want in [SpiderFamily::P, SpiderFamily::N] {
        if let Some(&v) = inner.iter().find(|&&v| family_of(g, v) == Some(want)) {
            let s = pn_raw(g, v, want);
            record(g, trace, s)?;
            return Ok(true);
        }
    }
    for &i in &inner {
        if family_of(g, i) != Some(SpiderFamily::M) {
            continue;
        }
        let partner = g
            .neighbours(i)
            .into_iter()
            .map(|(v, _)| v)
            .find(|&v| v > i && !g.is_boundary(v) && family_of(g, v) == Some(SpiderFamily::M));
        if let Some(j) = partner {
            let s = m_pair_raw(g, i, j);
            record(g, trace, s)?;
            return Ok(true);
        }
    }
    finish_isolated(g, trace, &inner)
}

/// Runs the qutrit rules until none applies: P-spiders first, then
/// N-spiders, then adjacent M-pairs, lowest ids first. Non-stabilizer
/// spiders are never touched.
pub fn reduce_qutrit(g: &mut GraphLike) -> Result<Trace> {
    check_dim(g)?;
    let mut trace = Trace::default();
    while next_qutrit_step(g, &mut trace)? {}
    Ok(trace)
}

/// Simplifies a qutrit diagram. A closed stabilizer input ends with at
/// most one spider and its exact value. If non-stabilizer spiders remain
/// and the rest fits the oracle, the value is finished numerically.
pub fn simplify_qutrit(a: &Diagram) -> Result<Simplified> {
    let mut g = to_graph_like_qutrit(a)?;
    let trace = reduce_qutrit(&mut g)?;
    let mut out = crate::qubit::finish(g, trace);
    if out.partial && out.graph.is_closed() {
        if let Ok(v) = semantics::contract_closed(&out.residual) {
            out.value = Some(v);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families_partition_phases() {
        let mut counts = BTreeMap::new();
        for a in 0..3 {
            for b in 0..3 {
                *counts.entry(format!("{:?}", classify_spider(Phase::qutrit(a, b)))).or_insert(0) += 1;
            }
        }
        assert_eq!(counts["M"], 3);
        assert_eq!(counts["N"], 4);
        assert_eq!(counts["P"], 2);
        assert_eq!(classify_spider(Phase::qutrit(0, 0)), SpiderFamily::M);
        assert_eq!(classify_spider(Phase::qutrit(0, 1)), SpiderFamily::N);
        assert_eq!(classify_spider(Phase::qutrit(2, 2)), SpiderFamily::P);
        assert_eq!(classify_spider(Phase::qutrit_angles(0.1, 0.0)), SpiderFamily::NonStabilizer);
    }

    #[test]
    fn parallel_edges_sum() {
        let vs = [(NodeId(0), Phase::qutrit(0, 0)), (NodeId(1), Phase::qutrit(0, 0))];
        let (x, y) = (NodeId(0), NodeId(1));
        assert_eq!(reduce_parallel_h_edges(&vs, &[(x, y, 1), (x, y, 1)]).unwrap().weight(x, y), 2);
        assert_eq!(reduce_parallel_h_edges(&vs, &[(x, y, 1), (y, x, 2)]).unwrap().weight(x, y), 0);
        assert_eq!(reduce_parallel_h_edges(&vs, &[(x, y, 1); 3]).unwrap().edge_count(), 0);
    }

    fn path3() -> (GraphLike, [NodeId; 3]) {
        let mut g = GraphLike::new(Dim::Qutrit);
        let ids = [(); 3].map(|_| g.add_vertex(VertexKind::Phase(Phase::qutrit(0, 0))));
        (g, ids)
    }

    #[test]
    fn lc_weight_updates() {
        let (mut g, [x, i, j]) = path3();
        g.set_weight(x, i, 1);
        g.set_weight(x, j, 1);
        let mut h = g.clone();
        lc_raw(&mut h, x, 1).unwrap();
        assert_eq!(h.weight(i, j), 1);
        let (mut g, [x, i, j]) = path3();
        g.set_weight(x, i, 1);
        g.set_weight(x, j, 2);
        g.set_weight(i, j, 1);
        lc_raw(&mut g, x, 1).unwrap();
        assert_eq!(g.weight(i, j), 0);
        lc_raw(&mut g, x, 2).unwrap();
        assert_eq!(g.weight(i, j), 1);
    }

    #[test]
    fn chain_reduction_shapes() {
        use crate::diagram::hadamard;
        let h = hadamard(Dim::Qutrit, 1);
        let h2 = h.then_after(&h).unwrap();
        let h3 = h.then_after(&h2).unwrap();
        let h4 = h.then_after(&h3).unwrap();
        let r4 = reduce_h_box_chain(&h4).unwrap();
        assert_eq!(r4.nodes().len(), 1);
        assert!(matches!(r4.nodes().values().next().unwrap().kind, NodeKind::Z(_)));
        let r3 = reduce_h_box_chain(&h3).unwrap();
        assert_eq!(r3.nodes().values().next().unwrap().kind, NodeKind::H(2));
        let r2 = reduce_h_box_chain(&h2).unwrap();
        assert_eq!(r2.nodes().len(), 3);
    }
}
