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

//! Open ZX-diagrams as port graphs.
//!
//! Every node owns ordered input and output ports. A port is used exactly
//! once: either as the endpoint of an edge or as a diagram boundary. For
//! qutrits the port side matters, since there is no plain cup or cap: a
//! plain edge must run from an output port to an input port, diagram inputs
//! sit on input ports and diagram outputs on output ports. Edges carrying a
//! Hadamard power may join ports of either side.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::scalar::ExactScalar;
use crate::Dim;

pub const SCHEMA_VERSION: &str = "zxsimp-v1";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct NodeId(pub usize);

impl fmt::Display for NodeId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n{}", self.0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    In,
    Out,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::In => Side::Out,
            Side::Out => Side::In,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize, Side)", into = "(usize, usize, Side)")]
pub struct Port {
    pub node: NodeId,
    pub index: usize,
    pub side: Side,
}

impl From<(usize, usize, Side)> for Port {
    fn from((n, i, s): (usize, usize, Side)) -> Self {
        Port::new(NodeId(n), s, i)
    }
}

impl From<Port> for (usize, usize, Side) {
    fn from(p: Port) -> Self {
        (p.node.0, p.index, p.side)
    }
}

impl Port {
    pub fn new(node: NodeId, side: Side, index: usize) -> Port {
        Port { node, index, side }
    }

    pub fn input(node: NodeId, index: usize) -> Port {
        Port::new(node, Side::In, index)
    }

    pub fn output(node: NodeId, index: usize) -> Port {
        Port::new(node, Side::Out, index)
    }
}

impl fmt::Display for Port {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self.side {
            Side::In => "in",
            Side::Out => "out",
        };
        write!(f, "{}.{}{}", self.node, s, self.index)
    }
}

/// Generator carried by a node.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum NodeKind {
    Z(Phase),
    X(Phase),
    /// Hadamard box `H^h`: `h = 1` is `H`, `h = 2` is `H†` (qutrit only).
    H(u8),
}

impl NodeKind {
    pub fn is_spider(&self) -> bool {
        !matches!(self, NodeKind::H(_))
    }

    pub fn phase(&self) -> Option<Phase> {
        match *self {
            NodeKind::Z(p) | NodeKind::X(p) => Some(p),
            NodeKind::H(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Node {
    pub kind: NodeKind,
    pub n_in: usize,
    pub n_out: usize,
}

impl Node {
    pub fn arity(&self) -> usize {
        self.n_in + self.n_out
    }

    fn ports(&self, id: NodeId) -> impl Iterator<Item = Port> + '_ {
        (0..self.n_in)
            .map(move |i| Port::input(id, i))
            .chain((0..self.n_out).map(move |i| Port::output(id, i)))
    }
}

/// A wire between two ports carrying `H^h` (`h = 0` is a plain wire).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Edge {
    pub a: Port,
    pub b: Port,
    pub h: u8,
}

/// An invariant violation reported by [`Diagram::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    /// A port used by zero or several edges/boundaries.
    DanglingPort { port: Port, degree: usize },
    /// A port that does not exist on its node.
    UnknownPort(Port),
    /// A plain qutrit edge joining two ports of the same side.
    DirectionViolation { a: Port, b: Port },
    /// A qutrit boundary attached to a port of the wrong side.
    BoundaryDirection(Port),
    /// A Hadamard box without exactly one input and one output.
    HadamardArity(NodeId),
    /// A phase or Hadamard power that does not fit the diagram dimension.
    DimensionMismatch(NodeId),
    /// Edge Hadamard power out of range for the dimension.
    EdgeKind { a: Port, b: Port, h: u8 },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DanglingPort { port, degree } => write!(f, "dangling port {port} (degree {degree})"),
            Violation::UnknownPort(p) => write!(f, "unknown port {p}"),
            Violation::DirectionViolation { a, b } => {
                write!(f, "direction violation: plain qutrit edge {a} -- {b}")
            }
            Violation::BoundaryDirection(p) => write!(f, "boundary on wrong port side {p}"),
            Violation::HadamardArity(n) => write!(f, "Hadamard box {n} must have one input and one output"),
            Violation::DimensionMismatch(n) => write!(f, "node {n} does not match the diagram dimension"),
            Violation::EdgeKind { a, b, h } => write!(f, "edge {a} -- {b} has invalid Hadamard power {h}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Composition {
    Sequential,
    Parallel,
}

/// An open ZX-diagram with an exact global scalar.
#[derive(Clone, Debug, PartialEq)]
pub struct Diagram {
    dim: Dim,
    nodes: BTreeMap<NodeId, Node>,
    edges: Vec<Edge>,
    inputs: Vec<Port>,
    outputs: Vec<Port>,
    scalar: ExactScalar,
}

impl Diagram {
    /// The empty closed diagram (value 1).
    pub fn empty(dim: Dim) -> Diagram {
        Diagram {
            dim,
            nodes: BTreeMap::new(),
            edges: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            scalar: ExactScalar::one(),
        }
    }

    /// Assembles and validates a diagram from parts.
    pub fn from_parts(
        dim: Dim,
        nodes: BTreeMap<NodeId, Node>,
        edges: Vec<Edge>,
        inputs: Vec<Port>,
        outputs: Vec<Port>,
        scalar: ExactScalar,
    ) -> Result<Diagram> {
        let d = Diagram {
            dim,
            nodes,
            edges,
            inputs,
            outputs,
            scalar,
        };
        match d.validate().into_iter().next() {
            Some(v) => Err(Error::Violation(v)),
            None => Ok(d),
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn nodes(&self) -> &BTreeMap<NodeId, Node> {
        &self.nodes
    }

    pub fn node(&self, id: NodeId) -> Option<&Node> {
        self.nodes.get(&id)
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn inputs(&self) -> &[Port] {
        &self.inputs
    }

    pub fn outputs(&self) -> &[Port] {
        &self.outputs
    }

    pub fn scalar(&self) -> ExactScalar {
        self.scalar
    }

    pub fn with_scalar(mut self, s: ExactScalar) -> Diagram {
        self.scalar = s;
        self
    }

    pub fn scale(mut self, s: ExactScalar) -> Diagram {
        self.scalar *= s;
        self
    }

    pub fn is_closed(&self) -> bool {
        self.inputs.is_empty() && self.outputs.is_empty()
    }

    /// Number of Z and X spiders (Hadamard boxes excluded).
    pub fn spider_count(&self) -> usize {
        self.nodes.values().filter(|n| n.kind.is_spider()).count()
    }

    /// Number of wires, counting each edge and each boundary once.
    pub fn wire_count(&self) -> usize {
        self.edges.len() + self.inputs.len() + self.outputs.len()
    }

    pub fn is_stabilizer(&self) -> bool {
        self.nodes
            .values()
            .all(|n| n.kind.phase().is_none_or(|p| p.is_stabilizer()))
    }

    fn next_id(&self) -> usize {
        self.nodes.keys().next_back().map_or(0, |n| n.0 + 1)
    }

    /// Lists every invariant violation; empty iff the diagram is valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        let dmax = match self.dim {
            Dim::Qubit => 1,
            Dim::Qutrit => 2,
        };
        for (&id, node) in &self.nodes {
            match node.kind {
                NodeKind::H(h) => {
                    if node.n_in != 1 || node.n_out != 1 {
                        out.push(Violation::HadamardArity(id));
                    }
                    if h == 0 || h > dmax {
                        out.push(Violation::DimensionMismatch(id));
                    }
                }
                NodeKind::Z(p) | NodeKind::X(p) => {
                    if p.dim() != self.dim {
                        out.push(Violation::DimensionMismatch(id));
                    }
                }
            }
        }
        let mut degree: BTreeMap<Port, usize> = BTreeMap::new();
        for (&id, node) in &self.nodes {
            for p in node.ports(id) {
                degree.insert(p, 0);
            }
        }
        let mut touch = |p: Port, out: &mut Vec<Violation>| match degree.get_mut(&p) {
            Some(c) => *c += 1,
            None => out.push(Violation::UnknownPort(p)),
        };
        for e in &self.edges {
            touch(e.a, &mut out);
            touch(e.b, &mut out);
            if e.h > dmax {
                out.push(Violation::EdgeKind { a: e.a, b: e.b, h: e.h });
            }
            if self.dim == Dim::Qutrit && e.h == 0 && e.a.side == e.b.side {
                out.push(Violation::DirectionViolation { a: e.a, b: e.b });
            }
        }
        for &p in &self.inputs {
            touch(p, &mut out);
            if self.dim == Dim::Qutrit && p.side != Side::In {
                out.push(Violation::BoundaryDirection(p));
            }
        }
        for &p in &self.outputs {
            touch(p, &mut out);
            if self.dim == Dim::Qutrit && p.side != Side::Out {
                out.push(Violation::BoundaryDirection(p));
            }
        }
        for (port, degree) in degree {
            if degree != 1 {
                out.push(Violation::DanglingPort { port, degree });
            }
        }
        out
    }

    /// Sequential (`self ∘ first`: `first` runs before `self`) or parallel
    /// composition.
    pub fn compose(&self, other: &Diagram, mode: Composition) -> Result<Diagram> {
        if self.dim != other.dim {
            return Err(Error::DimensionMismatch(self.dim.value(), other.dim.value()));
        }
        match mode {
            Composition::Sequential => {
                if other.outputs.len() != self.inputs.len() {
                    return Err(Error::ArityMismatch(other.outputs.len(), self.inputs.len()));
                }
                let (mut d, shift) = Diagram::disjoint_union(other, self);
                for (o, i) in other.outputs.iter().zip(&self.inputs) {
                    d.edges.push(Edge {
                        a: *o,
                        b: shift(*i),
                        h: 0,
                    });
                }
                d.inputs = other.inputs.clone();
                d.outputs = self.outputs.iter().map(|p| shift(*p)).collect();
                Ok(d)
            }
            Composition::Parallel => {
                let (mut d, shift) = Diagram::disjoint_union(self, other);
                d.inputs = self
                    .inputs
                    .iter()
                    .copied()
                    .chain(other.inputs.iter().map(|p| shift(*p)))
                    .collect();
                d.outputs = self
                    .outputs
                    .iter()
                    .copied()
                    .chain(other.outputs.iter().map(|p| shift(*p)))
                    .collect();
                Ok(d)
            }
        }
    }

    /// `self ∘ first`.
    pub fn then_after(&self, first: &Diagram) -> Result<Diagram> {
        self.compose(first, Composition::Sequential)
    }

    /// `self ⊗ other`.
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram> {
        self.compose(other, Composition::Parallel)
    }

    /// Feeds output `i` back into input `i` for every `i`, giving a closed
    /// diagram.
    pub fn trace(&self) -> Result<Diagram> {
        if self.inputs.len() != self.outputs.len() {
            return Err(Error::ArityMismatch(self.outputs.len(), self.inputs.len()));
        }
        let mut d = self.clone();
        for (o, i) in self.outputs.iter().zip(&self.inputs) {
            d.edges.push(Edge { a: *o, b: *i, h: 0 });
        }
        d.inputs.clear();
        d.outputs.clear();
        Ok(d)
    }

    // Union of nodes and edges; `b`'s ids are shifted past `a`'s. Boundaries
    // are left empty for the caller.
    fn disjoint_union(a: &Diagram, b: &Diagram) -> (Diagram, impl Fn(Port) -> Port) {
        let off = a.next_id();
        let shift = move |p: Port| Port::new(NodeId(p.node.0 + off), p.side, p.index);
        let mut nodes = a.nodes.clone();
        for (id, n) in &b.nodes {
            nodes.insert(NodeId(id.0 + off), n.clone());
        }
        let mut edges = a.edges.clone();
        edges.extend(b.edges.iter().map(|e| Edge {
            a: shift(e.a),
            b: shift(e.b),
            h: e.h,
        }));
        let d = Diagram {
            dim: a.dim,
            nodes,
            edges,
            inputs: Vec::new(),
            outputs: Vec::new(),
            scalar: a.scalar * b.scalar,
        };
        (d, shift)
    }

    /// The adjoint: inputs and outputs swap, decorations are negated and
    /// the scalar is conjugated.
    pub fn adjoint(&self) -> Diagram {
        let neg_h = |h: u8| match self.dim {
            Dim::Qubit => h,
            Dim::Qutrit => (3 - h) % 3,
        };
        let flip = |p: Port| Port::new(p.node, p.side.flip(), p.index);
        let nodes = self
            .nodes
            .iter()
            .map(|(&id, n)| {
                let kind = match n.kind {
                    NodeKind::Z(p) => NodeKind::Z(p.neg()),
                    NodeKind::X(p) => NodeKind::X(p.neg()),
                    NodeKind::H(h) => NodeKind::H(neg_h(h)),
                };
                (
                    id,
                    Node {
                        kind,
                        n_in: n.n_out,
                        n_out: n.n_in,
                    },
                )
            })
            .collect();
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                a: flip(e.a),
                b: flip(e.b),
                h: neg_h(e.h),
            })
            .collect();
        Diagram {
            dim: self.dim,
            nodes,
            edges,
            inputs: self.outputs.iter().map(|p| flip(*p)).collect(),
            outputs: self.inputs.iter().map(|p| flip(*p)).collect(),
            scalar: self.scalar.conj(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&RawDiagram::from(self)).expect("diagram serialises")
    }

    pub fn to_json_value(&self) -> serde_json::Value {
        serde_json::to_value(RawDiagram::from(self)).expect("diagram serialises")
    }

    pub fn from_json(text: &str) -> Result<Diagram> {
        let raw: RawDiagram = serde_json::from_str(text).map_err(|e| {
            let msg = e.to_string();
            if msg.contains("unknown field") {
                Error::SchemaVersion(msg)
            } else {
                Error::Parse {
                    line: e.line(),
                    column: e.column(),
                    msg,
                }
            }
        })?;
        raw.into_diagram()
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSpider {
    id: usize,
    colour: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    phase: Option<Phase>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    h: Option<u8>,
    #[serde(rename = "in")]
    n_in: usize,
    #[serde(rename = "out")]
    n_out: usize,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawEdge {
    a: Port,
    b: Port,
    h: u8,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDiagram {
    version: String,
    d: u8,
    spiders: Vec<RawSpider>,
    edges: Vec<RawEdge>,
    inputs: Vec<Port>,
    outputs: Vec<Port>,
    scalar: ExactScalar,
}

impl From<&Diagram> for RawDiagram {
    fn from(d: &Diagram) -> Self {
        RawDiagram {
            version: SCHEMA_VERSION.to_string(),
            d: d.dim.value() as u8,
            spiders: d
                .nodes
                .iter()
                .map(|(id, n)| {
                    let (colour, phase, h) = match n.kind {
                        NodeKind::Z(p) => ("Z", Some(p), None),
                        NodeKind::X(p) => ("X", Some(p), None),
                        NodeKind::H(h) => ("H", None, Some(h)),
                    };
                    RawSpider {
                        id: id.0,
                        colour: colour.to_string(),
                        phase,
                        h,
                        n_in: n.n_in,
                        n_out: n.n_out,
                    }
                })
                .collect(),
            edges: d
                .edges
                .iter()
                .map(|e| RawEdge { a: e.a, b: e.b, h: e.h })
                .collect(),
            inputs: d.inputs.clone(),
            outputs: d.outputs.clone(),
            scalar: d.scalar,
        }
    }
}

impl RawDiagram {
    fn into_diagram(self) -> Result<Diagram> {
        if self.version != SCHEMA_VERSION {
            return Err(Error::SchemaVersion(format!(
                "expected version {SCHEMA_VERSION:?}, found {:?}",
                self.version
            )));
        }
        let dim = Dim::from_value(self.d as u32)?;
        let mut nodes = BTreeMap::new();
        for s in self.spiders {
            let kind = match (s.colour.as_str(), s.phase, s.h) {
                ("Z", Some(p), None) => NodeKind::Z(p),
                ("X", Some(p), None) => NodeKind::X(p),
                ("H", None, Some(h)) => NodeKind::H(h),
                (c, ..) => return Err(Error::Invalid(format!("malformed node {} of colour {c:?}", s.id))),
            };
            let node = Node {
                kind,
                n_in: s.n_in,
                n_out: s.n_out,
            };
            if nodes.insert(NodeId(s.id), node).is_some() {
                return Err(Error::Invalid(format!("duplicate node id {}", s.id)));
            }
        }
        let edges = self
            .edges
            .into_iter()
            .map(|e| Edge { a: e.a, b: e.b, h: e.h })
            .collect();
        Diagram::from_parts(dim, nodes, edges, self.inputs, self.outputs, self.scalar)
    }
}

/// Incremental diagram construction.
///
/// Ports are allocated on demand: [`DiagramBuilder::wire`] appends an output
/// port to its source and an input port to its target.
#[derive(Clone, Debug)]
pub struct DiagramBuilder {
    dim: Dim,
    nodes: BTreeMap<NodeId, Node>,
    edges: Vec<Edge>,
    inputs: Vec<Port>,
    outputs: Vec<Port>,
    scalar: ExactScalar,
    next: usize,
}

impl DiagramBuilder {
    pub fn new(dim: Dim) -> Self {
        DiagramBuilder {
            dim,
            nodes: BTreeMap::new(),
            edges: Vec::new(),
            inputs: Vec::new(),
            outputs: Vec::new(),
            scalar: ExactScalar::one(),
            next: 0,
        }
    }

    pub fn dim(&self) -> Dim {
        self.dim
    }

    pub fn add(&mut self, kind: NodeKind) -> NodeId {
        let id = NodeId(self.next);
        self.next += 1;
        self.nodes.insert(
            id,
            Node {
                kind,
                n_in: 0,
                n_out: 0,
            },
        );
        id
    }

    pub fn z(&mut self, p: Phase) -> NodeId {
        self.add(NodeKind::Z(p))
    }

    pub fn x(&mut self, p: Phase) -> NodeId {
        self.add(NodeKind::X(p))
    }

    pub fn z0(&mut self) -> NodeId {
        self.z(Phase::zero(self.dim))
    }

    pub fn hbox(&mut self, h: u8) -> NodeId {
        self.add(NodeKind::H(h))
    }

    fn node_mut(&mut self, id: NodeId) -> &mut Node {
        self.nodes.get_mut(&id).expect("builder node exists")
    }

    pub fn new_port(&mut self, id: NodeId, side: Side) -> Port {
        let n = self.node_mut(id);
        let index = match side {
            Side::In => {
                n.n_in += 1;
                n.n_in - 1
            }
            Side::Out => {
                n.n_out += 1;
                n.n_out - 1
            }
        };
        Port::new(id, side, index)
    }

    /// A wire from a new output port of `from` to a new input port of `to`.
    pub fn wire(&mut self, from: NodeId, to: NodeId, h: u8) -> &mut Self {
        let a = self.new_port(from, Side::Out);
        let b = self.new_port(to, Side::In);
        self.edges.push(Edge { a, b, h });
        self
    }

    /// An edge between explicitly chosen new ports.
    pub fn wire_sides(&mut self, a: NodeId, sa: Side, b: NodeId, sb: Side, h: u8) -> &mut Self {
        let pa = self.new_port(a, sa);
        let pb = self.new_port(b, sb);
        self.edges.push(Edge { a: pa, b: pb, h });
        self
    }

    pub fn edge(&mut self, a: Port, b: Port, h: u8) -> &mut Self {
        self.edges.push(Edge { a, b, h });
        self
    }

    /// Appends a diagram input feeding a new input port of `id`.
    pub fn input(&mut self, id: NodeId) -> &mut Self {
        let p = self.new_port(id, Side::In);
        self.inputs.push(p);
        self
    }

    /// Appends a diagram output leaving a new output port of `id`.
    pub fn output(&mut self, id: NodeId) -> &mut Self {
        let p = self.new_port(id, Side::Out);
        self.outputs.push(p);
        self
    }

    pub fn boundary_port(&mut self, p: Port, is_input: bool) -> &mut Self {
        if is_input {
            self.inputs.push(p);
        } else {
            self.outputs.push(p);
        }
        self
    }

    pub fn scale(&mut self, s: ExactScalar) -> &mut Self {
        self.scalar *= s;
        self
    }

    pub fn build(&self) -> Result<Diagram> {
        Diagram::from_parts(
            self.dim,
            self.nodes.clone(),
            self.edges.clone(),
            self.inputs.clone(),
            self.outputs.clone(),
            self.scalar,
        )
    }
}

/// A bare wire: one phaseless Z spider with one input and one output.
pub fn identity(dim: Dim) -> Diagram {
    let mut b = DiagramBuilder::new(dim);
    let z = b.z0();
    b.input(z).output(z);
    b.build().expect("identity is valid")
}

/// `n` parallel bare wires.
pub fn identity_n(dim: Dim, n: usize) -> Diagram {
    let mut b = DiagramBuilder::new(dim);
    for _ in 0..n {
        let z = b.z0();
        b.input(z).output(z);
    }
    b.build().expect("identity is valid")
}

/// A single Hadamard box `H^h` as a one-wire diagram.
pub fn hadamard(dim: Dim, h: u8) -> Diagram {
    let mut b = DiagramBuilder::new(dim);
    let x = b.hbox(h);
    b.input(x).output(x);
    b.build().expect("Hadamard box is valid")
}

/// A single spider with `n_in` inputs and `n_out` outputs.
pub fn spider(dim: Dim, kind: NodeKind, n_in: usize, n_out: usize) -> Diagram {
    let mut b = DiagramBuilder::new(dim);
    let s = b.add(kind);
    for _ in 0..n_in {
        b.input(s);
    }
    for _ in 0..n_out {
        b.output(s);
    }
    b.build().expect("spider is valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_simple_diagrams() {
        let id = identity(Dim::Qubit);
        assert_eq!(id.spider_count(), 1);
        assert!(id.validate().is_empty());
        let closed = spider(Dim::Qutrit, NodeKind::Z(Phase::qutrit(0, 0)), 0, 0);
        assert!(closed.is_closed());
        assert_eq!(closed.scalar(), ExactScalar::one());
    }

    #[test]
    fn qutrit_plain_output_to_output_is_rejected() {
        let mut b = DiagramBuilder::new(Dim::Qutrit);
        let (u, v) = (b.z0(), b.z0());
        b.wire_sides(u, Side::Out, v, Side::Out, 0);
        match b.build() {
            Err(Error::Violation(Violation::DirectionViolation { .. })) => {}
            other => panic!("expected direction violation, got {other:?}"),
        }
        // The same edge is fine with a Hadamard on it, or for qubits.
        let mut b = DiagramBuilder::new(Dim::Qutrit);
        let (u, v) = (b.z0(), b.z0());
        b.wire_sides(u, Side::Out, v, Side::Out, 1);
        assert!(b.build().is_ok());
        let mut b = DiagramBuilder::new(Dim::Qubit);
        let (u, v) = (b.z0(), b.z0());
        b.wire_sides(u, Side::Out, v, Side::Out, 0);
        assert!(b.build().is_ok());
    }

    #[test]
    fn validate_reports_double_use() {
        let mut b = DiagramBuilder::new(Dim::Qubit);
        let (u, v) = (b.z0(), b.z0());
        b.wire(u, v, 0);
        b.boundary_port(Port::output(u, 0), false);
        let d = Diagram {
            dim: Dim::Qubit,
            nodes: b.nodes.clone(),
            edges: b.edges.clone(),
            inputs: vec![],
            outputs: b.outputs.clone(),
            scalar: ExactScalar::one(),
        };
        let report = d.validate();
        assert!(report.contains(&Violation::DanglingPort {
            port: Port::output(u, 0),
            degree: 2
        }));
        assert!(identity(Dim::Qutrit).validate().is_empty());
    }

    #[test]
    fn dangling_and_bad_dimension() {
        let mut b = DiagramBuilder::new(Dim::Qubit);
        let u = b.z0();
        b.new_port(u, Side::Out);
        assert!(matches!(b.build(), Err(Error::Violation(Violation::DanglingPort { .. }))));
        assert!(matches!(Dim::from_value(5), Err(Error::BadDimension(5))));
    }

    #[test]
    fn adjoint_negates_and_swaps() {
        let d = spider(Dim::Qutrit, NodeKind::Z(Phase::qutrit(1, 2)), 2, 3);
        let a = d.adjoint();
        assert_eq!(a.inputs().len(), 3);
        assert_eq!(a.outputs().len(), 2);
        assert_eq!(a.node(NodeId(0)).unwrap().kind, NodeKind::Z(Phase::qutrit(2, 1)));
        assert_eq!(hadamard(Dim::Qutrit, 1).adjoint(), hadamard(Dim::Qutrit, 2));
        assert_eq!(a.adjoint(), d);
    }

    #[test]
    fn json_errors() {
        assert!(matches!(Diagram::from_json("{ not json"), Err(Error::Parse { .. })));
        let text = identity(Dim::Qubit).to_json().replace("\"d\": 2", "\"d\": 2, \"colour_scheme\": 1");
        assert!(matches!(Diagram::from_json(&text), Err(Error::SchemaVersion(_))));
        let text = identity(Dim::Qubit).to_json().replace("zxsimp-v1", "zxsimp-v0");
        assert!(matches!(Diagram::from_json(&text), Err(Error::SchemaVersion(_))));
    }

    #[test]
    fn compose_checks() {
        let q = identity(Dim::Qubit);
        let t = identity(Dim::Qutrit);
        assert!(matches!(q.then_after(&t), Err(Error::DimensionMismatch(2, 3))));
        let two = identity_n(Dim::Qubit, 2);
        assert!(matches!(q.then_after(&two), Err(Error::ArityMismatch(2, 1))));
        let par = q.tensor(&q).unwrap();
        assert_eq!(par.inputs().len(), 2);
        assert!(par.validate().is_empty());
    }
}
