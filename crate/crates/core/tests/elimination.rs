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

//! Engine rewrites against the oracle on random instances, including open
//! ones whose boundary vertices must be left alone.

mod common;

use rand::seq::SliceRandom;
use rand::Rng;

use zxsimp::graph_like::{GraphLike, VertexKind};
use zxsimp::random::{random_graph_like, rng};
use zxsimp::semantics::{contract_closed, interpret, proportional_ratio};
use zxsimp::{qubit, qutrit, Dim, Error, NodeId, Phase};

use common::close;

const TOL: f64 = 1e-9;

fn interior(g: &GraphLike) -> Vec<NodeId> {
    g.vertex_ids().into_iter().filter(|&v| g.is_interior(v)).collect()
}

// The rewritten graph has the same value as the original, including its
// scalar, both as a dense tensor and as interpreted through a diagram.
fn assert_same_value(g: &GraphLike, h: &GraphLike, what: &str) {
    let before = g.value_tensor();
    let after = h.value_tensor();
    assert!(before.approx_eq(&after, TOL), "{what}: value changed");
    let via_diagram = interpret(&h.to_diagram()).unwrap();
    let ratio = proportional_ratio(&via_diagram, &after, TOL).unwrap();
    assert!(ratio.is_proportional(), "{what}: diagram disagrees with graph");
    if let Some(r) = ratio.ratio() {
        assert!((r - 1.0).norm() < 1e-8, "{what}: diagram off by {r}");
    }
}

#[test]
fn qubit_rewrites_on_closed_graphs() {
    let mut r = rng(11);
    for _ in 0..200 {
        let n = r.gen_range(2..=9);
        let mut g = random_graph_like(&mut r, Dim::Qubit, n, 0.5, 0, 0);
        let ids = g.vertex_ids();
        let x = *ids.choose(&mut r).unwrap();
        let lc = qubit::local_complement_qubit(&g, x).unwrap();
        assert_eq!(g.exact_value(), lc.exact_value());

        g.set_kind(x, VertexKind::Phase(Phase::qubit(if r.gen_bool(0.5) { 1 } else { 3 })));
        let cl = qubit::eliminate_clifford(&g, x).unwrap();
        assert_eq!(g.exact_value(), cl.exact_value());
        let z = contract_closed(&cl.to_diagram()).unwrap();
        assert!(close(z, g.exact_value().unwrap().to_complex(), TOL));

        let y = ids.iter().copied().find(|&y| y != x).unwrap();
        g.set_kind(x, VertexKind::Phase(Phase::qubit(2 * r.gen_range(0..2))));
        g.set_kind(y, VertexKind::Phase(Phase::qubit(2 * r.gen_range(0..2))));
        g.set_weight(x, y, 1);
        let pp = qubit::eliminate_pauli_pair(&g, x, y).unwrap();
        assert_eq!(g.exact_value(), pp.exact_value());
    }
}

#[test]
fn qutrit_rewrites_on_open_graphs() {
    let mut r = rng(12);
    let p_phases = [Phase::qutrit(1, 1), Phase::qutrit(2, 2)];
    let m_phases = [Phase::qutrit(0, 0), Phase::qutrit(1, 2), Phase::qutrit(2, 1)];
    let n_phases: Vec<Phase> = (0..3)
        .flat_map(|a| (0..3).map(move |b| Phase::qutrit(a, b)))
        .filter(|&p| qutrit::classify_spider(p) == qutrit::SpiderFamily::N)
        .collect();
    for case in 0..150 {
        let n = r.gen_range(4..=7);
        let mut g = random_graph_like(&mut r, Dim::Qutrit, n, 0.6, 1, 1);
        let inner = interior(&g);
        let (i, j) = (inner[0], inner[1]);
        let a = r.gen_range(1..3);
        let lc = qutrit::a_local_complement(&g, i, a).unwrap();
        assert_same_value(&g, &lc, &format!("case {case} lc"));

        if g.weight(i, j) == 0 {
            g.set_weight(i, j, 1);
        }
        let pv = qutrit::proper_pivot(&g, i, j, a).unwrap();
        assert_same_value(&g, &pv, &format!("case {case} pivot"));

        g.set_kind(i, VertexKind::Phase(*p_phases.choose(&mut r).unwrap()));
        let p = qutrit::eliminate_p(&g, i).unwrap();
        assert_same_value(&g, &p, &format!("case {case} p"));

        g.set_kind(i, VertexKind::Phase(*n_phases.choose(&mut r).unwrap()));
        let nn = qutrit::eliminate_n(&g, i).unwrap();
        assert_same_value(&g, &nn, &format!("case {case} n"));

        g.set_kind(i, VertexKind::Phase(*m_phases.choose(&mut r).unwrap()));
        g.set_kind(j, VertexKind::Phase(*m_phases.choose(&mut r).unwrap()));
        let m = qutrit::eliminate_m_pair(&g, i, j).unwrap();
        assert_same_value(&g, &m, &format!("case {case} m pair"));
    }
}

#[test]
fn preconditions_are_enforced() {
    let mut r = rng(13);
    let mut g = random_graph_like(&mut r, Dim::Qutrit, 4, 1.0, 1, 0);
    let ids = g.vertex_ids();
    let boundary = g.inputs()[0];
    assert!(matches!(qutrit::eliminate_p(&g, boundary), Err(Error::BoundaryNode(_))));
    let (x, y) = (ids[1], ids[2]);
    g.set_kind(x, VertexKind::Phase(Phase::qutrit(0, 0)));
    assert!(matches!(qutrit::eliminate_p(&g, x), Err(Error::WrongPhase(_))));
    assert!(matches!(qutrit::eliminate_n(&g, x), Err(Error::WrongPhase(_))));
    g.set_weight(x, y, 0);
    g.set_kind(y, VertexKind::Phase(Phase::qutrit(1, 2)));
    assert!(matches!(qutrit::eliminate_m_pair(&g, x, y), Err(Error::NotAdjacent(..))));
    assert!(qutrit::a_local_complement(&g, x, 3).is_err());
    let qubit_graph = random_graph_like(&mut r, Dim::Qubit, 3, 1.0, 0, 0);
    let v = qubit_graph.vertex_ids()[0];
    assert!(matches!(qutrit::eliminate_p(&qubit_graph, v), Err(Error::DimensionMismatch(..))));
}

#[test]
fn full_reduction_of_a_dense_graph_is_exact() {
    let mut r = rng(14);
    for _ in 0..20 {
        let mut g = random_graph_like(&mut r, Dim::Qutrit, 9, 0.7, 0, 0);
        let expected = g.exact_value().unwrap();
        let trace = qutrit::reduce_qutrit(&mut g).unwrap();
        assert!(g.vertex_count() <= 1);
        assert_eq!(g.exact_value().unwrap(), expected);
        assert!(trace.len() <= 9);
    }
}
