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

use std::time::{Duration, Instant};

use zxsimp::qutrit::reduce_qutrit;
use zxsimp::random::{random_diagram, random_graph_like, rng, DiagramShape};
use zxsimp::{qubit, Dim};

#[test]
fn dense_qutrit_graph_reduces_quickly() {
    let mut g = random_graph_like(&mut rng(31), Dim::Qutrit, 200, 0.1, 0, 0);
    let n = g.vertex_count();
    let start = Instant::now();
    let trace = reduce_qutrit(&mut g).unwrap();
    assert!(start.elapsed() < Duration::from_secs(10));
    assert!(g.vertex_count() <= 1);
    assert!(trace.len() <= n);
    assert!(trace.max_edge_updates() <= n * n / 2);
}

#[test]
fn large_qubit_diagram_reduces() {
    let a = random_diagram(&mut rng(32), Dim::Qubit, DiagramShape::closed(400, 700));
    let s = qubit::simplify_qubit(&a).unwrap();
    assert!(!s.partial);
    assert!(s.spiders_left() <= 1);
    assert!(s.trace.len() <= a.spider_count());
}
