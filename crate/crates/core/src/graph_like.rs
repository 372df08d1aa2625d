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

//! Graph-like diagrams: Z-spiders joined only by Hadamard edges.
//!
//! Edge weights live in `Z_d` (`d = 2` or `3`): a weight-`w` edge between
//! `u` and `v` contributes `ζ_d^{w·x_u·x_v}` to each term of the state sum,
//! where `ζ_2 = -1` and `ζ_3 = ω`. The constant `1/√d` (and for qutrits the
//! global phase of `H` or `H†`) that an actual Hadamard edge carries is kept
//! in the scalar instead, so the value of a graph is
//!
//! `scalar · Σ_x Π_v e_v(x_v) · Π_{uv} ζ_d^{w_uv x_u x_v}`
//!
//! summed over the values of interior vertices; a boundary vertex takes the
//! value of its boundary index. `e_v` is `e^{iφ_v(x)}` for a phase vertex and
//! the indicator `[x = k]` for a basis vertex.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

use crate::diagram::{Diagram, DiagramBuilder, NodeId, NodeKind, Port, Side};
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::scalar::ExactScalar;
use crate::semantics::Tensor;
use crate::Dim;

/// What a vertex contributes to the state sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum VertexKind {
    Phase(Phase),
    /// Projection onto the computational basis state `k`.
    Basis(u8),
}

impl VertexKind {
    pub fn phase(&self) -> Option<Phase> {
        match *self {
            VertexKind::Phase(p) => Some(p),
            VertexKind::Basis(_) => None,
        }
    }

    pub fn is_stabilizer(&self) -> bool {
        match self {
            VertexKind::Phase(p) => p.is_stabilizer(),
            VertexKind::Basis(_) => true,
        }
    }

    /// `e(x)` as a complex number.
    pub fn factor(&self, x: usize) -> Complex64 {
        match *self {
            VertexKind::Phase(p) => p.factor(x),
            VertexKind::Basis(k) => Complex64::new(if x == k as usize { 1.0 } else { 0.0 }, 0.0),
        }
    }

    /// `e(x)` exactly, for stabilizer kinds.
    pub fn exact_factor(&self, x: usize) -> Option<ExactScalar> {
        match *self {
            VertexKind::Phase(p) => p.exact_factor(x),
            VertexKind::Basis(k) => Some(if x == k as usize {
                ExactScalar::one()
            } else {
                ExactScalar::zero()
            }),
        }
    }
}

/// `ζ₂₄` exponent of `ζ_d`.
pub(crate) fn edge_root(dim: Dim) -> i64 {
    match dim {
        Dim::Qubit => 12,
        Dim::Qutrit => 8,
    }
}

/// Writes an exact effect vector as `c · e_kind`, if it has that form.
pub fn kind_from_effect(dim: Dim, e: &[ExactScalar]) -> Option<(ExactScalar, VertexKind)> {
    let support: Vec<usize> = (0..e.len()).filter(|&x| !e[x].is_zero()).collect();
    match support.as_slice() {
        [] => None,
        [k] => Some((e[*k], VertexKind::Basis(*k as u8))),
        _ if support.len() == e.len() => {
            let c = e[0];
            let inv = c.inverse()?;
            let mut exps = Vec::new();
            for v in &e[1..] {
                let (z, a, b) = (*v * inv).as_unit_monomial()?;
                if a != 0 || b != 0 || z % 2 != 0 {
                    return None;
                }
                exps.push(z);
            }
            let p = match dim {
                Dim::Qubit => {
                    if exps[0] % 6 != 0 {
                        return None;
                    }
                    Phase::qubit(exps[0] / 6)
                }
                Dim::Qutrit => {
                    if exps.iter().any(|z| z % 8 != 0) {
                        return None;
                    }
                    Phase::qutrit(exps[0] / 8, exps[1] / 8)
                }
            };
            Some((c, VertexKind::Phase(p)))
        }
        _ => None,
    }
}

/// A graph-like diagram with an exact scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphLike {
    dim: Dim,
    vertices: BTreeMap<NodeId, VertexKind>,
    adj: BTreeMap<NodeId, BTreeMap<NodeId, u8>>,
    inputs: Vec<NodeId>,
    outputs: Vec<NodeId>,
    scalar: ExactScalar,
    next_id: usize,
}

impl GraphLike {
    pub fn new(dim: Dim) -> Self {
        GraphLike {
            dim,
            vertices: BTreeMap::new(),
            adj: BTreeMap::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            scalar: ExactScalar::one(),
            next_id: 0,
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn d(&self) -> usize {
        self.dim.value()
    }

    pub fn scalar(&self) -> ExactScalar {
        self.scalar
    }

    pub fn set_scalar(&mut self, s: ExactScalar) {
        self.scalar = s;
    }

    pub fn mul_scalar(&mut self, s: ExactScalar) {
        self.scalar *= s;
    }

    pub fn inputs(&self) -> &[NodeId] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[NodeId] {
        &self.outputs
    }

    pub fn is_closed(&self) -> bool {
        self.inputs.is_empty() && self.outputs.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(|m| m.len()).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> impl Iterator<Item = (NodeId, VertexKind)> + '_ {
        self.vertices.iter().map(|(&v, &k)| (v, k))
    }

    pub fn vertex_ids(&self) -> Vec<NodeId> {
        self.vertices.keys().copied().collect()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        self.vertices.contains_key(&v)
    }

    pub fn kind(&self, v: NodeId) -> Result<VertexKind> {
        self.vertices.get(&v).copied().ok_or(Error::UnknownNode(v))
    }

    pub fn phase(&self, v: NodeId) -> Option<Phase> {
        self.vertices.get(&v).and_then(|k| k.phase())
    }

    pub fn set_kind(&mut self, v: NodeId, k: VertexKind) {
        *self.vertices.get_mut(&v).expect("vertex exists") = k;
    }

    /// Adds `p` to the phase of `v`; a basis vertex absorbs it as a scalar.
    pub fn add_phase(&mut self, v: NodeId, p: Phase) {
        let k = self.vertices.get_mut(&v).expect("vertex exists");
        match *k {
            VertexKind::Phase(q) => *k = VertexKind::Phase(q.add(&p)),
            VertexKind::Basis(b) => {
                let f = p.exact_factor(b as usize).expect("stabilizer increment");
                self.scalar *= f;
            }
        }
    }

    pub fn is_boundary(&self, v: NodeId) -> bool {
        self.inputs.contains(&v) || self.outputs.contains(&v)
    }

    pub fn is_interior(&self, v: NodeId) -> bool {
        self.contains(v) && !self.is_boundary(v)
    }

    pub fn add_vertex(&mut self, k: VertexKind) -> NodeId {
        let id = NodeId(self.next_id);
        self.next_id += 1;
        self.vertices.insert(id, k);
        self.adj.insert(id, BTreeMap::new());
        id
    }

    pub(crate) fn add_vertex_with_id(&mut self, id: NodeId, k: VertexKind) {
        self.vertices.insert(id, k);
        self.adj.insert(id, BTreeMap::new());
        self.next_id = self.next_id.max(id.0 + 1);
    }

    pub fn add_input(&mut self, v: NodeId) {
        self.inputs.push(v);
    }

    pub fn add_output(&mut self, v: NodeId) {
        self.outputs.push(v);
    }

    pub fn weight(&self, u: NodeId, v: NodeId) -> u8 {
        self.adj.get(&u).and_then(|m| m.get(&v)).copied().unwrap_or(0)
    }

    pub fn set_weight(&mut self, u: NodeId, v: NodeId, w: u8) {
        assert_ne!(u, v, "graph-like diagrams have no self-loops");
        let w = w % self.d() as u8;
        if w == 0 {
            self.adj.get_mut(&u).unwrap().remove(&v);
            self.adj.get_mut(&v).unwrap().remove(&u);
        } else {
            self.adj.get_mut(&u).unwrap().insert(v, w);
            self.adj.get_mut(&v).unwrap().insert(u, w);
        }
    }

    /// Adds `w` to the weight of `uv` (mod `d`), as parallel edges combine.
    pub fn add_weight(&mut self, u: NodeId, v: NodeId, w: i64) {
        let d = self.d() as i64;
        let nw = (self.weight(u, v) as i64 + w).rem_euclid(d) as u8;
        self.set_weight(u, v, nw);
    }

    /// Neighbours of `v` with their weights, in id order.
    pub fn neighbours(&self, v: NodeId) -> Vec<(NodeId, u8)> {
        self.adj
            .get(&v)
            .map(|m| m.iter().map(|(&u, &w)| (u, w)).collect())
            .unwrap_or_default()
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adj.get(&v).map_or(0, |m| m.len())
    }

    pub fn edges(&self) -> Vec<(NodeId, NodeId, u8)> {
        let mut out = Vec::new();
        for (&u, m) in &self.adj {
            for (&v, &w) in m {
                if u < v {
                    out.push((u, v, w));
                }
            }
        }
        out
    }

    pub fn remove_vertex(&mut self, v: NodeId) {
        if let Some(m) = self.adj.remove(&v) {
            for u in m.keys() {
                self.adj.get_mut(u).unwrap().remove(&v);
            }
        }
        self.vertices.remove(&v);
        self.inputs.retain(|&x| x != v);
        self.outputs.retain(|&x| x != v);
    }

    /// Structural predicate: weights in range, symmetric, no self-loops,
    /// each vertex carries at most one boundary.
    pub fn is_graph_like(&self) -> bool {
        let d = self.d() as u8;
        let sym = self.adj.iter().all(|(&u, m)| {
            m.iter()
                .all(|(&v, &w)| u != v && w > 0 && w < d && self.weight(v, u) == w && self.contains(v))
        });
        let mut seen = std::collections::BTreeSet::new();
        let boundary_ok = self.inputs.iter().chain(&self.outputs).all(|v| seen.insert(*v));
        sym && boundary_ok && self.vertices.keys().all(|v| self.adj.contains_key(v))
    }

    pub fn is_stabilizer(&self) -> bool {
        self.vertices.values().all(|k| k.is_stabilizer())
    }

    /// The exact effect vector of `v`.
    pub fn effect(&self, v: NodeId) -> Option<Vec<ExactScalar>> {
        let k = self.vertices.get(&v)?;
        (0..self.d()).map(|x| k.exact_factor(x)).collect()
    }

    /// Brute-force dense value (outputs then inputs). Exponential in the
    /// number of vertices; intended for checking.
    pub fn value_tensor(&self) -> Tensor {
        let d = self.d();
        let ids = self.vertex_ids();
        let index: BTreeMap<NodeId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let bnd: Vec<usize> = self.outputs.iter().chain(&self.inputs).map(|v| index[v]).collect();
        let interior: Vec<usize> = (0..ids.len()).filter(|i| !bnd.contains(i)).collect();
        let kinds: Vec<VertexKind> = ids.iter().map(|v| self.vertices[v]).collect();
        let edges: Vec<(usize, usize, u8)> = self.edges().iter().map(|(u, v, w)| (index[u], index[v], *w)).collect();
        let zd = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / d as f64);
        let zpow: Vec<Complex64> = (0..d).map(|k| zd.powu(k as u32)).collect();
        let nb = d.pow(bnd.len() as u32);
        let ni = d.pow(interior.len() as u32);
        let mut x = vec![0usize; ids.len()];
        let mut data = Vec::with_capacity(nb);
        for bi in 0..nb {
            let mut r = bi;
            for &p in bnd.iter().rev() {
                x[p] = r % d;
                r /= d;
            }
            let mut total = Complex64::new(0.0, 0.0);
            for ii in 0..ni {
                let mut r = ii;
                for &p in &interior {
                    x[p] = r % d;
                    r /= d;
                }
                let mut term = Complex64::new(1.0, 0.0);
                for (k, &xv) in kinds.iter().zip(&x) {
                    term *= k.factor(xv);
                    if term == Complex64::new(0.0, 0.0) {
                        break;
                    }
                }
                if term == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let e: usize = edges.iter().map(|&(u, v, w)| w as usize * x[u] * x[v]).sum();
                total += term * zpow[e % d];
            }
            data.push(total * self.scalar.to_complex());
        }
        Tensor::new(d, self.outputs.len(), self.inputs.len(), data).expect("consistent shape")
    }

    /// Exact brute-force value of a closed stabilizer graph.
    pub fn exact_value(&self) -> Option<ExactScalar> {
        if !self.is_closed() || !self.is_stabilizer() {
            return None;
        }
        let d = self.d();
        let ids = self.vertex_ids();
        let index: BTreeMap<NodeId, usize> = ids.iter().enumerate().map(|(i, v)| (*v, i)).collect();
        let edges: Vec<(usize, usize, u8)> = self.edges().iter().map(|(u, v, w)| (index[u], index[v], *w)).collect();
        // e_v(x) as ζ₂₄ exponents, or None for zero
        let tables: Vec<Vec<Option<i64>>> = ids
            .iter()
            .map(|v| {
                (0..d)
                    .map(|x| match self.vertices[v] {
                        VertexKind::Phase(Phase::QubitStab { k }) => Some(6 * (k as i64) * (x as i64)),
                        VertexKind::Phase(Phase::QutritStab { a, b }) => Some(8 * [0, a, b][x] as i64),
                        VertexKind::Basis(k) => (x == k as usize).then_some(0),
                        _ => unreachable!("stabilizer checked"),
                    })
                    .collect()
            })
            .collect();
        let root = edge_root(self.dim);
        let mut bins = [0i64; 24];
        let n = ids.len();
        let mut x = vec![0usize; n];
        'outer: for idx in 0..d.pow(n as u32) {
            let mut r = idx;
            for v in x.iter_mut() {
                *v = r % d;
                r /= d;
            }
            let mut e = 0i64;
            for (t, &xv) in tables.iter().zip(&x) {
                match t[xv] {
                    Some(z) => e += z,
                    None => continue 'outer,
                }
            }
            for &(u, v, w) in &edges {
                e += root * (w as usize * x[u] * x[v]) as i64;
            }
            bins[e.rem_euclid(24) as usize] += 1;
        }
        let sum: ExactScalar = bins
            .iter()
            .enumerate()
            .map(|(k, &c)| ExactScalar::from_int(c) * ExactScalar::zeta(k as i64))
            .sum();
        Some(sum * self.scalar)
    }

    /// A diagram with the same value: vertices become Z-spiders, weights
    /// become `H` (weight 1) or `H†` (weight 2) edges, and the Hadamard
    /// constants are divided back out of the scalar.
    pub fn to_diagram(&self) -> Diagram {
        let dim = self.dim;
        let mut b = DiagramBuilder::new(dim);
        let mut scalar = self.scalar;
        let mut map: BTreeMap<NodeId, NodeId> = BTreeMap::new();
        for (&v, k) in &self.vertices {
            let id = match *k {
                VertexKind::Phase(p) => b.z(p),
                VertexKind::Basis(s) => {
                    let z = b.z0();
                    let eff = match dim {
                        Dim::Qubit => Phase::qubit(2 * s as i64),
                        Dim::Qutrit => Phase::qutrit(s as i64, 2 * s as i64),
                    };
                    let x = b.x(eff);
                    b.wire(z, x, 0);
                    scalar *= ExactScalar::root_dim_pow(dim.value() as u32, -1);
                    z
                }
            };
            map.insert(v, id);
        }
        for (u, v, w) in self.edges() {
            b.wire(map[&u], map[&v], w);
            scalar *= match (dim, w) {
                (Dim::Qubit, _) => ExactScalar::sqrt2_pow(1),
                (Dim::Qutrit, 1) => ExactScalar::sqrt3_pow(1) * ExactScalar::zeta(6),
                (Dim::Qutrit, _) => ExactScalar::sqrt3_pow(1) * ExactScalar::zeta(18),
            };
        }
        for v in &self.inputs {
            b.input(map[v]);
        }
        for v in &self.outputs {
            b.output(map[v]);
        }
        b.scale(scalar);
        b.build().expect("graph-like translation is valid")
    }

    /// Builds a graph from a multiset of weighted edges, summing parallel
    /// weights mod `d`; self-loops are not accepted.
    pub fn from_multi_edges(
        dim: Dim,
        vertices: &[(NodeId, Phase)],
        edges: &[(NodeId, NodeId, u8)],
    ) -> Result<GraphLike> {
        let mut g = GraphLike::new(dim);
        for &(v, p) in vertices {
            g.add_vertex_with_id(v, VertexKind::Phase(p));
        }
        for &(u, v, w) in edges {
            if !g.contains(u) {
                return Err(Error::UnknownNode(u));
            }
            if !g.contains(v) {
                return Err(Error::UnknownNode(v));
            }
            if u == v {
                return Err(Error::Invalid(format!("self-loop at {u}")));
            }
            g.add_weight(u, v, w as i64);
        }
        Ok(g)
    }
}

/// Outcome of a simplification run.
#[derive(Clone, Debug)]
pub struct Simplified {
    /// What is left, as a diagram.
    pub residual: Diagram,
    /// What is left, as a graph.
    pub graph: GraphLike,
    /// For a closed input, the exact value of the whole diagram; otherwise
    /// the scalar accumulated so far.
    pub scalar: ExactScalar,
    /// Set when rewriting stopped before reaching a single number.
    pub partial: bool,
    /// Numerical value of a closed input, when known.
    pub value: Option<Complex64>,
    pub trace: crate::trace::Trace,
}

impl Simplified {
    pub fn spiders_left(&self) -> usize {
        self.residual.spider_count()
    }
}

fn find_signed(parent: &mut BTreeMap<NodeId, (NodeId, i8)>, x: NodeId) -> (NodeId, i8) {
    let (p, s) = parent[&x];
    if p == x {
        return (x, 1);
    }
    let (r, t) = find_signed(parent, p);
    parent.insert(x, (r, s * t));
    (r, s * t)
}

/// Converts any diagram into an equal graph-like one.
///
/// Every `X` spider becomes a `Z` spider with Fourier transforms on its
/// legs, and every Hadamard box or edge becomes a Fourier transform times a
/// constant. Transforms along a wire multiply to a power of `F`: power 0
/// wires are fused, `F` and `F†` become weight-1 and weight-2 edges, and the
/// qutrit `F² = P` (the map `x ↦ -x`) fuses its ends with one of them
/// negated.
/// Boundary wires that are not plain, or that land on an already used
/// vertex, get fresh boundary vertices.
pub fn to_graph_like(a: &Diagram) -> GraphLike {
    let dim = a.dim();
    let d = dim.value();
    let order: u8 = match dim {
        Dim::Qubit => 2,
        Dim::Qutrit => 4,
    };
    let inv_root_d = ExactScalar::root_dim_pow(d as u32, -1);
    // F-power and constant of H^h
    let h_power = |h: u8| -> (u8, ExactScalar) {
        match (dim, h) {
            (_, 0) => (0, ExactScalar::one()),
            (Dim::Qubit, _) => (1, ExactScalar::one()),
            (Dim::Qutrit, 1) => (1, ExactScalar::zeta(18)),
            (Dim::Qutrit, _) => (3, ExactScalar::zeta(6)),
        }
    };
    let mut scalar = a.scalar();
    let leg = |p: &Port| -> u8 {
        match a.node(p.node).expect("port on a node").kind {
            NodeKind::Z(_) => 0,
            NodeKind::X(_) => match p.side {
                Side::Out => 1,
                Side::In => order - 1,
            },
            NodeKind::H(h) => match p.side {
                Side::In => h_power(h).0,
                Side::Out => 0,
            },
        }
    };
    for n in a.nodes().values() {
        if let NodeKind::H(h) = n.kind {
            scalar *= h_power(h).1;
        }
    }
    // x_v = sign · x_root; power-2 wires fuse with a sign flip
    let mut parent: BTreeMap<NodeId, (NodeId, i8)> = a.nodes().keys().map(|&v| (v, (v, 1))).collect();
    let mut pinned: BTreeSet<NodeId> = BTreeSet::new();
    let mut wires = Vec::new();
    for e in a.edges() {
        let (hp, hc) = h_power(e.h);
        scalar *= hc;
        let q = (leg(&e.a) + hp + leg(&e.b)) % order;
        if q == 0 || q == 2 {
            let t = if q == 0 { 1 } else { -1 };
            let ((ra, sa), (rb, sb)) = (find_signed(&mut parent, e.a.node), find_signed(&mut parent, e.b.node));
            let rel = sa * t * sb;
            if ra == rb {
                // x = -x leaves only x = 0
                if rel == -1 {
                    pinned.insert(ra);
                }
                continue;
            }
            // smallest id represents the fused class
            let (keep, gone) = if ra < rb { (ra, rb) } else { (rb, ra) };
            parent.insert(gone, (keep, rel));
            if pinned.remove(&gone) {
                pinned.insert(keep);
            }
        } else {
            wires.push((e.a.node, e.b.node, q));
        }
    }
    let mut g = GraphLike::new(dim);
    let mut phases: BTreeMap<NodeId, Phase> = BTreeMap::new();
    for (&v, n) in a.nodes() {
        let (r, sign) = find_signed(&mut parent, v);
        let p = n.kind.phase().unwrap_or_else(|| Phase::zero(dim));
        let p = if sign == 1 { p } else { p.swapped() };
        let acc = phases.entry(r).or_insert_with(|| Phase::zero(dim));
        *acc = acc.add(&p);
    }
    for (&r, &p) in &phases {
        // a pinned class only keeps x = 0, where every phase is 1
        let kind = if pinned.contains(&r) { VertexKind::Basis(0) } else { VertexKind::Phase(p) };
        g.add_vertex_with_id(r, kind);
    }
    g.next_id = a.nodes().keys().next_back().map_or(0, |v| v.0 + 1);
    let power_edge = |g: &mut GraphLike, u: NodeId, v: NodeId, q: u8, scalar: &mut ExactScalar| match q {
        1 | 3 => {
            let w: i64 = if q == 1 { 1 } else { -1 };
            *scalar *= inv_root_d;
            if u == v {
                // F self-loop: e(x) gains ζ_d^{w x²}
                let p = match dim {
                    Dim::Qubit => Phase::qubit(2),
                    Dim::Qutrit => Phase::qutrit_from_quadratic(0, w),
                };
                g.add_phase(u, p);
            } else {
                g.add_weight(u, v, w);
            }
        }
        2 => {
            let m = g.add_vertex(VertexKind::Phase(Phase::zero(dim)));
            g.add_weight(u, m, 1);
            g.add_weight(v, m, 1);
            *scalar *= ExactScalar::root_dim_pow(3, -2);
        }
        _ => {}
    };
    for (u, v, q) in wires {
        let ((ru, su), (rv, sv)) = (find_signed(&mut parent, u), find_signed(&mut parent, v));
        // F^q between signed ends: F^1 and F^3 only change weight sign
        let q = if su * sv == 1 { q } else { (order - q) % order };
        power_edge(&mut g, ru, rv, q, &mut scalar);
    }
    let mut used = BTreeSet::new();
    let bnd: Vec<(Port, bool)> = a
        .inputs()
        .iter()
        .map(|p| (*p, true))
        .chain(a.outputs().iter().map(|p| (*p, false)))
        .collect();
    for (p, is_input) in bnd {
        let (r, sign) = find_signed(&mut parent, p.node);
        let q = if sign == 1 { leg(&p) } else { (leg(&p) + 2) % order };
        let attach = if q == 0 && !used.contains(&r) {
            r
        } else {
            let u = g.add_vertex(VertexKind::Phase(Phase::zero(dim)));
            if q == 0 {
                // identity as F followed by F†
                let m = g.add_vertex(VertexKind::Phase(Phase::zero(dim)));
                g.add_weight(u, m, 1);
                g.add_weight(m, r, -1);
                scalar *= inv_root_d * inv_root_d;
            } else {
                power_edge(&mut g, u, r, q, &mut scalar);
            }
            u
        };
        used.insert(attach);
        if is_input {
            g.add_input(attach);
        } else {
            g.add_output(attach);
        }
    }
    g.scalar = scalar;
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{hadamard, spider};
    use crate::semantics::{interpret, proportional_ratio};

    fn same_tensor(a: &Diagram, g: &GraphLike) {
        let t = interpret(a).unwrap();
        let u = g.value_tensor();
        assert!(t.approx_eq(&u, 1e-9), "{t:?}\n{u:?}");
        let back = interpret(&g.to_diagram()).unwrap();
        assert!(t.approx_eq(&back, 1e-9));
    }

    #[test]
    fn x_spider_converts_exactly() {
        for dim in [Dim::Qubit, Dim::Qutrit] {
            for p in [Phase::zero(dim), if dim == Dim::Qubit { Phase::qubit(1) } else { Phase::qutrit(1, 0) }] {
                let x = spider(dim, NodeKind::X(p), 2, 1);
                let g = to_graph_like(&x);
                assert!(g.is_graph_like());
                same_tensor(&x, &g);
            }
        }
    }

    #[test]
    fn hadamard_wires_convert_exactly() {
        for h in [1, 2] {
            let d = hadamard(Dim::Qutrit, h);
            same_tensor(&d, &to_graph_like(&d));
            let dd = d.then_after(&d).unwrap();
            same_tensor(&dd, &to_graph_like(&dd));
        }
        let d = hadamard(Dim::Qubit, 1);
        same_tensor(&d, &to_graph_like(&d));
    }

    #[test]
    fn loops_and_parallel_edges() {
        let mut b = DiagramBuilder::new(Dim::Qutrit);
        let (u, v) = (b.z(Phase::qutrit(1, 0)), b.z0());
        b.wire(u, v, 1).wire(u, v, 1).wire(v, u, 2).wire(u, u, 1).wire(v, v, 0);
        let a = b.build().unwrap();
        let g = to_graph_like(&a);
        assert_eq!(g.weight(NodeId(0), NodeId(1)), 1);
        let r = proportional_ratio(&interpret(&a).unwrap(), &g.value_tensor(), 1e-9).unwrap();
        assert!((r.ratio().unwrap() - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        assert!((g.exact_value().unwrap().to_complex() - g.value_tensor().data()[0]).norm() < 1e-12);
    }

    #[test]
    fn basis_vertex_round_trip() {
        for (dim, k) in [(Dim::Qubit, 1u8), (Dim::Qutrit, 2)] {
            let mut g = GraphLike::new(dim);
            let a = g.add_vertex(VertexKind::Basis(k));
            let b = g.add_vertex(VertexKind::Phase(Phase::zero(dim)));
            g.set_weight(a, b, 1);
            g.add_output(b);
            let t = interpret(&g.to_diagram()).unwrap();
            assert!(t.approx_eq(&g.value_tensor(), 1e-9));
        }
    }

    #[test]
    fn effect_normal_forms() {
        let e = [ExactScalar::from_int(2), ExactScalar::from_int(2) * ExactScalar::omega(1), ExactScalar::from_int(2)];
        let (c, k) = kind_from_effect(Dim::Qutrit, &e).unwrap();
        assert_eq!(c, ExactScalar::from_int(2));
        assert_eq!(k, VertexKind::Phase(Phase::qutrit(1, 0)));
        let e = [ExactScalar::zero(), ExactScalar::zeta(3), ExactScalar::zero()];
        assert_eq!(kind_from_effect(Dim::Qutrit, &e).unwrap().1, VertexKind::Basis(1));
        let e = [ExactScalar::one(), ExactScalar::zero(), ExactScalar::one()];
        assert!(kind_from_effect(Dim::Qutrit, &e).is_none());
    }
}
