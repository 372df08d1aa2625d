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

//! Seeded generators of random diagrams and problem instances.

use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::diagram::{Diagram, DiagramBuilder, NodeId};
use crate::graph_like::{GraphLike, VertexKind};
use crate::phase::Phase;
use crate::Dim;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn stabilizer_phase<R: Rng>(r: &mut R, dim: Dim) -> Phase {
    match dim {
        Dim::Qubit => Phase::qubit(r.gen_range(0..4)),
        Dim::Qutrit => Phase::qutrit(r.gen_range(0..3), r.gen_range(0..3)),
    }
}

pub fn generic_phase<R: Rng>(r: &mut R, dim: Dim) -> Phase {
    let t = std::f64::consts::TAU;
    match dim {
        Dim::Qubit => Phase::qubit_angle(r.gen_range(0.0..t)),
        Dim::Qutrit => Phase::qutrit_angles(r.gen_range(0.0..t), r.gen_range(0.0..t)),
    }
}

/// Shape parameters for [`random_diagram`].
#[derive(Clone, Copy, Debug)]
pub struct DiagramShape {
    pub spiders: usize,
    pub edges: usize,
    pub inputs: usize,
    pub outputs: usize,
    /// Probability that a node is a Hadamard box instead of a spider.
    pub hbox_rate: f64,
    /// Probability that a spider carries a non-stabilizer phase.
    pub generic_rate: f64,
}

impl DiagramShape {
    pub fn closed(spiders: usize, edges: usize) -> Self {
        DiagramShape {
            spiders,
            edges,
            inputs: 0,
            outputs: 0,
            hbox_rate: 0.0,
            generic_rate: 0.0,
        }
    }
}

/// A random valid diagram. Every edge is drawn out-port to in-port, so the
/// qutrit direction rule holds whatever its Hadamard power.
pub fn random_diagram<R: Rng>(r: &mut R, dim: Dim, shape: DiagramShape) -> Diagram {
    let mut b = DiagramBuilder::new(dim);
    let hmax: u8 = if dim == Dim::Qubit { 1 } else { 2 };
    let mut spiders = Vec::new();
    for _ in 0..shape.spiders.max(1) {
        let p = if r.gen_bool(shape.generic_rate) {
            generic_phase(r, dim)
        } else {
            stabilizer_phase(r, dim)
        };
        spiders.push(if r.gen_bool(0.5) { b.z(p) } else { b.x(p) });
    }
    for _ in 0..shape.edges {
        let u = *spiders.choose(r).unwrap();
        let v = *spiders.choose(r).unwrap();
        let h = r.gen_range(0..=hmax);
        if r.gen_bool(shape.hbox_rate) {
            let x = b.hbox(r.gen_range(1..=hmax));
            b.wire(u, x, 0).wire(x, v, h);
        } else {
            b.wire(u, v, h);
        }
    }
    for _ in 0..shape.inputs {
        let u = *spiders.choose(r).unwrap();
        b.input(u);
    }
    for _ in 0..shape.outputs {
        let u = *spiders.choose(r).unwrap();
        b.output(u);
    }
    b.build().expect("random diagram is valid")
}

/// A random graph-like diagram on `n` vertices with edge probability `p`;
/// the first `n_in` vertices are inputs and the next `n_out` outputs.
pub fn random_graph_like<R: Rng>(r: &mut R, dim: Dim, n: usize, p: f64, n_in: usize, n_out: usize) -> GraphLike {
    let mut g = GraphLike::new(dim);
    let ids: Vec<NodeId> = (0..n)
        .map(|_| g.add_vertex(VertexKind::Phase(stabilizer_phase(r, dim))))
        .collect();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                let w = if dim == Dim::Qubit { 1 } else { r.gen_range(1..3) };
                g.set_weight(ids[i], ids[j], w);
            }
        }
    }
    for &v in ids.iter().take(n_in.min(n)) {
        g.add_input(v);
    }
    for &v in ids.iter().skip(n_in).take(n_out) {
        g.add_output(v);
    }
    g
}

/// Random simple undirected graph as an edge list.
pub fn random_simple_graph<R: Rng>(r: &mut R, n: usize, p: f64) -> Vec<(usize, usize)> {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    e
}

/// Random signed multigraph with `m` edges and no self-loops.
pub fn random_signed_graph<R: Rng>(r: &mut R, n: usize, m: usize) -> Vec<(usize, usize, bool)> {
    if n < 2 {
        return Vec::new();
    }
    (0..m)
        .map(|_| {
            let u = r.gen_range(0..n);
            let mut v = r.gen_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (u, v, r.gen_bool(0.5))
        })
        .collect()
}
