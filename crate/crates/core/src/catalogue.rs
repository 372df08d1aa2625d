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

//! Catalogue of rewrite rules, each checked against the tensor oracle.
//!
//! An entry pairs a finite parameter space with a builder producing the
//! two sides of the rule as open diagrams. [`verify_rule`] interprets both
//! sides at every parameter choice and records the ratio; a single
//! non-proportional instance is an [`Error::UnsoundRule`].
//!
//! Hand-written entries state the rules directly. Entries of family
//! [`RuleFamily::Engine`] instead run the rewrite functions of the
//! simplifiers on small open witnesses, with ledger factors applied, so
//! their ratio must be exactly one.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::diagram::{hadamard, identity, spider, Diagram, DiagramBuilder, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::graph_like::{GraphLike, VertexKind};
use crate::phase::Phase;
use crate::semantics::{interpret, proportional_ratio, Proportionality};
use crate::{qubit, qutrit, Dim};

/// Default relative tolerance for proportionality.
pub const DEFAULT_TOL: f64 = 1e-9;

/// One point of a parameter space.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Params(BTreeMap<&'static str, i64>);

impl Params {
    pub fn get(&self, key: &str) -> i64 {
        *self.0.get(key).unwrap_or_else(|| panic!("parameter {key} is declared"))
    }

    fn with(mut self, key: &'static str, v: i64) -> Params {
        self.0.insert(key, v);
        self
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}", parts.join(","))
    }
}

// Cartesian product of named integer ranges.
fn grid(axes: &[(&'static str, std::ops::Range<i64>)]) -> Vec<Params> {
    axes.iter().fold(vec![Params::default()], |acc, (name, range)| {
        acc.into_iter()
            .flat_map(|p| range.clone().map(move |v| p.clone().with(name, v)))
            .collect()
    })
}

// Base-`base` digits of `x`, least significant first.
fn digits(mut x: i64, base: i64, n: usize) -> Vec<i64> {
    (0..n)
        .map(|_| {
            let d = x % base;
            x /= base;
            d
        })
        .collect()
}

/// Where a rule comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum RuleFamily {
    /// A defining rule of the calculus.
    Axiom,
    /// A consequence of the defining rules.
    Derived,
    /// A rewrite function of the simplifiers, run with its ledger factor.
    Engine,
}

type Builder = fn(&Params) -> Result<(Diagram, Diagram)>;

/// A rule with both sides built over a finite parameter space.
#[derive(Clone)]
pub struct RuleCatalogueEntry {
    pub name: &'static str,
    pub dim: Dim,
    pub family: RuleFamily,
    pub space: Vec<Params>,
    build: Builder,
}

impl fmt::Debug for RuleCatalogueEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RuleCatalogueEntry")
            .field("name", &self.name)
            .field("dim", &self.dim)
            .field("family", &self.family)
            .field("instances", &self.space.len())
            .finish()
    }
}

impl RuleCatalogueEntry {
    fn new(name: &'static str, dim: Dim, family: RuleFamily, space: Vec<Params>, build: Builder) -> Self {
        RuleCatalogueEntry {
            name,
            dim,
            family,
            space,
            build,
        }
    }

    /// Both sides at one parameter choice.
    pub fn instance(&self, p: &Params) -> Result<(Diagram, Diagram)> {
        let (lhs, rhs) = (self.build)(p)?;
        if lhs.inputs().len() != rhs.inputs().len() || lhs.outputs().len() != rhs.outputs().len() {
            return Err(Error::Invalid(format!(
                "{} [{p}]: boundaries differ ({}→{} vs {}→{})",
                self.name,
                lhs.inputs().len(),
                lhs.outputs().len(),
                rhs.inputs().len(),
                rhs.outputs().len()
            )));
        }
        Ok((lhs, rhs))
    }
}

/// Result of one instance: `lhs = ratio · rhs`, or `None` if both sides
/// vanish.
#[derive(Clone, Debug, Serialize)]
pub struct InstanceOutcome {
    pub params: Params,
    pub ratio: Option<[f64; 2]>,
}

/// All instances of one rule.
#[derive(Clone, Debug, Serialize)]
pub struct RuleReport {
    pub rule: &'static str,
    pub dim: Dim,
    pub family: RuleFamily,
    pub instances: Vec<InstanceOutcome>,
    /// Instances where both sides are zero.
    pub zero_instances: usize,
    /// Set when every instance is identically zero, so the rule was never
    /// really tested.
    pub needs_review: bool,
}

/// Checks every instance of a rule.
pub fn verify_rule(entry: &RuleCatalogueEntry, tol: f64) -> Result<RuleReport> {
    let mut instances = Vec::with_capacity(entry.space.len());
    let mut zero_instances = 0;
    for p in &entry.space {
        let (lhs, rhs) = entry.instance(p)?;
        let (x, y) = (interpret(&lhs)?, interpret(&rhs)?);
        let unsound = || Error::UnsoundRule {
            rule: entry.name.to_string(),
            params: p.to_string(),
            lhs: Box::new(x.clone()),
            rhs: Box::new(y.clone()),
        };
        let ratio = match proportional_ratio(&x, &y, tol)? {
            Proportionality::NotProportional => return Err(unsound()),
            Proportionality::BothZero => {
                zero_instances += 1;
                None
            }
            Proportionality::Ratio(r) => {
                if entry.family == RuleFamily::Engine && (r - 1.0).norm() > tol.max(1e-9) * 10.0 {
                    return Err(unsound());
                }
                Some([r.re, r.im])
            }
        };
        instances.push(InstanceOutcome {
            params: p.clone(),
            ratio,
        });
    }
    Ok(RuleReport {
        rule: entry.name,
        dim: entry.dim,
        family: entry.family,
        instances,
        zero_instances,
        needs_review: zero_instances == entry.space.len(),
    })
}

/// A failed entry in a catalogue run.
#[derive(Clone, Debug, Serialize)]
pub struct RuleFailure {
    pub rule: &'static str,
    pub reason: String,
}

/// Outcome of verifying the whole catalogue.
#[derive(Clone, Debug, Serialize)]
pub struct CatalogueReport {
    pub rules: Vec<RuleReport>,
    pub failures: Vec<RuleFailure>,
    pub instances: usize,
}

impl CatalogueReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Verifies every catalogue entry, one thread per entry.
pub fn verify_catalogue(tol: f64) -> CatalogueReport {
    let entries = catalogue();
    let results: Vec<Result<RuleReport>> = std::thread::scope(|s| {
        let handles: Vec<_> = entries.iter().map(|e| s.spawn(move || verify_rule(e, tol))).collect();
        handles.into_iter().map(|h| h.join().expect("verification thread")).collect()
    });
    let mut rules = Vec::new();
    let mut failures = Vec::new();
    for (e, r) in entries.iter().zip(results) {
        match r {
            Ok(report) => rules.push(report),
            Err(err) => failures.push(RuleFailure {
                rule: e.name,
                reason: err.to_string(),
            }),
        }
    }
    let instances = rules.iter().map(|r| r.instances.len()).sum();
    CatalogueReport {
        rules,
        failures,
        instances,
    }
}

// ---------------------------------------------------------------------------
// diagram helpers

fn coloured(colour: i64, p: Phase) -> NodeKind {
    if colour == 0 {
        NodeKind::Z(p)
    } else {
        NodeKind::X(p)
    }
}

fn qb(k: i64) -> Phase {
    Phase::qubit(k)
}

fn qt(a: i64, b: i64) -> Phase {
    Phase::qutrit(a, b)
}

// Qutrit phase from an index in 0..9.
fn qt_index(s: i64) -> Phase {
    qt(s / 3, s % 3)
}

// One-wire chain of 1→1 nodes.
fn chain(dim: Dim, kinds: &[NodeKind]) -> Result<Diagram> {
    let mut b = DiagramBuilder::new(dim);
    let ids: Vec<NodeId> = kinds.iter().map(|&k| b.add(k)).collect();
    b.input(ids[0]);
    for w in ids.windows(2) {
        b.wire(w[0], w[1], 0);
    }
    b.output(*ids.last().expect("nonempty chain"));
    b.build()
}

// A spider with `Hᵒ` on each output and `Hⁱ` on each input.
fn dressed(dim: Dim, kind: NodeKind, n_in: usize, n_out: usize, h_in: u8, h_out: u8) -> Result<Diagram> {
    let mut b = DiagramBuilder::new(dim);
    let s = b.add(kind);
    for _ in 0..n_in {
        let h = b.hbox(h_in);
        b.input(h).wire(h, s, 0);
    }
    for _ in 0..n_out {
        let h = b.hbox(h_out);
        b.wire(s, h, 0).output(h);
    }
    b.build()
}

// `state` (0→1) plugged into a 1→n spider.
fn plugged(dim: Dim, state: NodeKind, target: NodeKind, n: usize) -> Result<Diagram> {
    let mut b = DiagramBuilder::new(dim);
    let s = b.add(state);
    let t = b.add(target);
    b.wire(s, t, 0);
    for _ in 0..n {
        b.output(t);
    }
    b.build()
}

// `n` copies of a 0→1 state.
fn states(dim: Dim, state: NodeKind, n: usize) -> Result<Diagram> {
    let mut b = DiagramBuilder::new(dim);
    for _ in 0..n {
        let s = b.add(state);
        b.output(s);
    }
    b.build()
}

// Qutrit `x ↦ -x`, as a Z cup closed by an X cap.
fn dualiser() -> Result<Diagram> {
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let cup = b.z0();
    let cap = b.x(qt(0, 0));
    b.input(cap);
    b.wire(cup, cap, 0);
    b.output(cup);
    b.build()
}

// Two Z spiders with one output each, joined by the given edges.
fn pair_with_edges(dim: Dim, p: Phase, q: Phase, edges: &[u8]) -> Result<Diagram> {
    let mut b = DiagramBuilder::new(dim);
    let u = b.z(p);
    let v = b.z(q);
    for &h in edges {
        b.wire(u, v, h);
    }
    b.output(u).output(v);
    b.build()
}

fn pairs(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|i| (i + 1..k).map(move |j| (i, j))).collect()
}

// ---------------------------------------------------------------------------
// qubit rules

fn qubit_fusion(p: &Params) -> Result<(Diagram, Diagram)> {
    let c = p.get("colour");
    let (m, n) = (p.get("m") as usize, p.get("n") as usize);
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let s = b.add(coloured(c, qb(p.get("a"))));
    let t = b.add(coloured(c, qb(p.get("b"))));
    for _ in 0..m {
        b.input(s);
    }
    b.wire(s, t, 0);
    for _ in 0..n {
        b.output(t);
    }
    Ok((b.build()?, spider(Dim::Qubit, coloured(c, qb(p.get("a") + p.get("b"))), m, n)))
}

// Copy spiders of one colour on the inputs, merge spiders of the other on
// the outputs, fully connected.
fn bialgebra(dim: Dim, c: i64) -> Result<(Diagram, Diagram)> {
    let zero = Phase::zero(dim);
    let mut b = DiagramBuilder::new(dim);
    let copies = [b.add(coloured(c, zero)), b.add(coloured(c, zero))];
    let merges = [b.add(coloured(1 - c, zero)), b.add(coloured(1 - c, zero))];
    for &s in &copies {
        b.input(s);
    }
    for &s in &copies {
        for &t in &merges {
            b.wire(s, t, 0);
        }
    }
    for &t in &merges {
        b.output(t);
    }
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(dim);
    let merge = b.add(coloured(1 - c, zero));
    let copy = b.add(coloured(c, zero));
    b.input(merge).input(merge);
    b.wire(merge, copy, 0);
    b.output(copy).output(copy);
    Ok((lhs, b.build()?))
}

fn qubit_bialgebra(p: &Params) -> Result<(Diagram, Diagram)> {
    bialgebra(Dim::Qubit, p.get("colour"))
}

fn qubit_euler(p: &Params) -> Result<(Diagram, Diagram)> {
    let s = qb(p.get("sign"));
    let rhs = chain(Dim::Qubit, &[NodeKind::Z(s), NodeKind::X(s), NodeKind::Z(s)])?;
    Ok((hadamard(Dim::Qubit, 1), rhs))
}

fn qubit_copy(p: &Params) -> Result<(Diagram, Diagram)> {
    let c = p.get("colour");
    let n = p.get("n") as usize;
    let state = coloured(1 - c, qb(p.get("k")));
    let lhs = plugged(Dim::Qubit, state, coloured(c, qb(0)), n)?;
    Ok((lhs, states(Dim::Qubit, state, n)?))
}

fn qubit_pi(p: &Params) -> Result<(Diagram, Diagram)> {
    let c = p.get("colour");
    let a = p.get("a");
    let n = p.get("n") as usize;
    let pi = coloured(1 - c, qb(2));
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let x = b.add(pi);
    let s = b.add(coloured(c, qb(a)));
    b.input(x).wire(x, s, 0);
    for _ in 0..n {
        b.output(s);
    }
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let s = b.add(coloured(c, qb(-a)));
    b.input(s);
    for _ in 0..n {
        let x = b.add(pi);
        b.wire(s, x, 0).output(x);
    }
    Ok((lhs, b.build()?))
}

fn qubit_identity(p: &Params) -> Result<(Diagram, Diagram)> {
    let lhs = spider(Dim::Qubit, coloured(p.get("colour"), qb(0)), 1, 1);
    Ok((lhs, identity(Dim::Qubit)))
}

fn qubit_hadamard(_: &Params) -> Result<(Diagram, Diagram)> {
    Ok((chain(Dim::Qubit, &[NodeKind::H(1), NodeKind::H(1)])?, identity(Dim::Qubit)))
}

fn qubit_colour_change(p: &Params) -> Result<(Diagram, Diagram)> {
    let (m, n) = (p.get("m") as usize, p.get("n") as usize);
    let a = qb(p.get("a"));
    let lhs = spider(Dim::Qubit, NodeKind::X(a), m, n);
    Ok((lhs, dressed(Dim::Qubit, NodeKind::Z(a), m, n, 1, 1)?))
}

fn qubit_parallel_h_edges(p: &Params) -> Result<(Diagram, Diagram)> {
    let (u, v) = (qb(p.get("a")), qb(p.get("b")));
    Ok((
        pair_with_edges(Dim::Qubit, u, v, &[1, 1])?,
        pair_with_edges(Dim::Qubit, u, v, &[])?,
    ))
}

fn qubit_self_loop(p: &Params) -> Result<(Diagram, Diagram)> {
    let h = p.get("h") as u8;
    let a = p.get("a");
    let n = p.get("n") as usize;
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let s = b.z(qb(a));
    b.wire(s, s, h);
    for _ in 0..n {
        b.output(s);
    }
    let shift = if h == 1 { 2 } else { 0 };
    Ok((b.build()?, spider(Dim::Qubit, NodeKind::Z(qb(a + shift)), 0, n)))
}

fn qubit_clifford_elimination(p: &Params) -> Result<(Diagram, Diagram)> {
    let k = p.get("k") as usize;
    let s = p.get("sign");
    let phases = digits(p.get("phases"), 4, k);
    let mask = digits(p.get("mask"), 2, pairs(k).len());
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let v = b.z(qb(s));
    let us: Vec<NodeId> = phases.iter().map(|&a| b.z(qb(a))).collect();
    for &u in &us {
        b.wire(v, u, 1);
    }
    for (&(i, j), &m) in pairs(k).iter().zip(&mask) {
        if m == 1 {
            b.wire(us[i], us[j], 1);
        }
    }
    for &u in &us {
        b.output(u);
    }
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let us: Vec<NodeId> = phases.iter().map(|&a| b.z(qb(a - s))).collect();
    for (&(i, j), &m) in pairs(k).iter().zip(&mask) {
        if m == 0 {
            b.wire(us[i], us[j], 1);
        }
    }
    for &u in &us {
        b.output(u);
    }
    Ok((lhs, b.build()?))
}

// Neighbour classes: 0 sees only `u`, 1 only `v`, 2 both.
fn qubit_pauli_elimination(p: &Params) -> Result<(Diagram, Diagram)> {
    let n = p.get("n") as usize;
    let (j, k) = (2 * p.get("j"), 2 * p.get("k"));
    let classes = digits(p.get("classes"), 3, n);
    let phases = digits(p.get("phases"), 4, n);
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let u = b.z(qb(j));
    let v = b.z(qb(k));
    b.wire(u, v, 1);
    let ws: Vec<NodeId> = phases.iter().map(|&a| b.z(qb(a))).collect();
    for (&w, &c) in ws.iter().zip(&classes) {
        if c != 1 {
            b.wire(u, w, 1);
        }
        if c != 0 {
            b.wire(v, w, 1);
        }
    }
    for &w in &ws {
        b.output(w);
    }
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(Dim::Qubit);
    let ws: Vec<NodeId> = phases
        .iter()
        .zip(&classes)
        .map(|(&a, &c)| {
            let shift = match c {
                0 => k,
                1 => j,
                _ => j + k + 2,
            };
            b.z(qb(a + shift))
        })
        .collect();
    for (x, y) in pairs(n) {
        if classes[x] != classes[y] {
            b.wire(ws[x], ws[y], 1);
        }
    }
    for &w in &ws {
        b.output(w);
    }
    Ok((lhs, b.build()?))
}

// ---------------------------------------------------------------------------
// qutrit rules

fn qutrit_fusion(p: &Params) -> Result<(Diagram, Diagram)> {
    let c = p.get("colour");
    let (m, n) = (p.get("m") as usize, p.get("n") as usize);
    let (first, second) = (qt_index(p.get("first")), qt_index(p.get("second")));
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let s = b.add(coloured(c, first));
    let t = b.add(coloured(c, second));
    for _ in 0..m {
        b.input(s);
    }
    b.wire(s, t, 0);
    for _ in 0..n {
        b.output(t);
    }
    let sum = first.add(&second);
    Ok((b.build()?, spider(Dim::Qutrit, coloured(c, sum), m, n)))
}

fn qutrit_identity(p: &Params) -> Result<(Diagram, Diagram)> {
    let lhs = spider(Dim::Qutrit, coloured(p.get("colour"), qt(0, 0)), 1, 1);
    Ok((lhs, identity(Dim::Qutrit)))
}

fn qutrit_twisted_cup(p: &Params) -> Result<(Diagram, Diagram)> {
    let h = p.get("h") as u8;
    let lhs = spider(Dim::Qutrit, NodeKind::X(qt(0, 0)), 0, 2);
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let cup = b.z0();
    b.output(cup);
    let h1 = b.hbox(h);
    let h2 = b.hbox(h);
    b.wire(cup, h1, 0).wire(h1, h2, 0).output(h2);
    Ok((lhs, b.build()?))
}

fn qutrit_copy_zero(p: &Params) -> Result<(Diagram, Diagram)> {
    let n = p.get("n") as usize;
    let state = NodeKind::X(qt(0, 0));
    let lhs = plugged(Dim::Qutrit, state, NodeKind::Z(qt_index(p.get("phase"))), n)?;
    Ok((lhs, states(Dim::Qutrit, state, n)?))
}

fn qutrit_bialgebra(p: &Params) -> Result<(Diagram, Diagram)> {
    bialgebra(Dim::Qutrit, p.get("colour"))
}

fn qutrit_copy_m(p: &Params) -> Result<(Diagram, Diagram)> {
    let m = p.get("m");
    let n = p.get("n") as usize;
    let state = NodeKind::X(qt(m, -m));
    let lhs = plugged(Dim::Qutrit, state, NodeKind::Z(qt(0, 0)), n)?;
    Ok((lhs, states(Dim::Qutrit, state, n)?))
}

// `X(m, -m)` shifts the basis by `-m`; a Z spider after the shift is the
// shifted Z spider before it.
fn qutrit_commute(p: &Params) -> Result<(Diagram, Diagram)> {
    let m = p.get("m");
    let n = p.get("n") as usize;
    let (a, b_) = (p.get("a"), p.get("b"));
    let shift = NodeKind::X(qt(m, -m));
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let x = b.add(shift);
    let z = b.z(qt(a, b_));
    b.input(x).wire(x, z, 0);
    for _ in 0..n {
        b.output(z);
    }
    let lhs = b.build()?;
    let moved = if m == 1 { qt(-b_, a - b_) } else { qt(b_ - a, -a) };
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let z = b.z(moved);
    b.input(z);
    for _ in 0..n {
        let x = b.add(shift);
        b.wire(z, x, 0).output(x);
    }
    Ok((lhs, b.build()?))
}

fn qutrit_hadamard(p: &Params) -> Result<(Diagram, Diagram)> {
    let h = p.get("h") as u8;
    Ok((chain(Dim::Qutrit, &[NodeKind::H(h), NodeKind::H(3 - h)])?, identity(Dim::Qutrit)))
}

fn euler(h: i64, middle_z: bool) -> Result<(Diagram, Diagram)> {
    let s = qt(-h, -h);
    let (outer, inner) = if middle_z {
        (NodeKind::X(s), NodeKind::Z(s))
    } else {
        (NodeKind::Z(s), NodeKind::X(s))
    };
    Ok((hadamard(Dim::Qutrit, h as u8), chain(Dim::Qutrit, &[outer, inner, outer])?))
}

fn qutrit_euler(p: &Params) -> Result<(Diagram, Diagram)> {
    euler(p.get("h"), false)
}

fn qutrit_hadamard_decompositions(p: &Params) -> Result<(Diagram, Diagram)> {
    euler(p.get("h"), p.get("order") == 1)
}

fn qutrit_colour_change(p: &Params) -> Result<(Diagram, Diagram)> {
    let (m, n) = (p.get("m") as usize, p.get("n") as usize);
    let (a, b) = (p.get("a"), p.get("b"));
    let flip = p.get("flip") == 1;
    let (x, h_in, h_out) = if flip { (qt(b, a), 1, 2) } else { (qt(a, b), 2, 1) };
    let lhs = spider(Dim::Qutrit, NodeKind::X(x), m, n);
    Ok((lhs, dressed(Dim::Qutrit, NodeKind::Z(qt(a, b)), m, n, h_in, h_out)?))
}

fn qutrit_derived_colour_change(p: &Params) -> Result<(Diagram, Diagram)> {
    let (m, n) = (p.get("m") as usize, p.get("n") as usize);
    let (a, b) = (p.get("a"), p.get("b"));
    let flip = p.get("flip") == 1;
    let (z, h_in, h_out) = if flip { (qt(b, a), 2, 1) } else { (qt(a, b), 1, 2) };
    let lhs = spider(Dim::Qutrit, NodeKind::Z(z), m, n);
    Ok((lhs, dressed(Dim::Qutrit, NodeKind::X(qt(a, b)), m, n, h_in, h_out)?))
}

// Variants 0, 1: snakes of Z or X caps and cups; 2, 3: a Z cup with `H` or
// `H†` on both legs is the X cup.
fn qutrit_snake(p: &Params) -> Result<(Diagram, Diagram)> {
    let variant = p.get("variant");
    if variant < 2 {
        let kind = coloured(variant, qt(0, 0));
        let mut b = DiagramBuilder::new(Dim::Qutrit);
        let cap = b.add(kind);
        let cup = b.add(kind);
        b.input(cap).wire(cup, cap, 0).output(cup);
        return Ok((b.build()?, identity(Dim::Qutrit)));
    }
    let h = (variant - 1) as u8;
    let lhs = dressed(Dim::Qutrit, NodeKind::Z(qt(0, 0)), 0, 2, h, h)?;
    Ok((lhs, spider(Dim::Qutrit, NodeKind::X(qt(0, 0)), 0, 2)))
}

fn qutrit_reluctant_fusion(p: &Params) -> Result<(Diagram, Diagram)> {
    let h = p.get("h") as u8;
    let (s, t) = (qt_index(p.get("first")), qt_index(p.get("second")));
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let u = b.z(s);
    let v = b.z(t);
    b.wire(u, v, 0).wire(u, v, h).output(u).output(v);
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let u = b.z(s);
    let v = b.z(t);
    let m = b.z0();
    b.wire(u, m, 1).wire(m, v, 2).wire(u, v, h).output(u).output(v);
    Ok((lhs, b.build()?))
}

const EDGE_PATTERNS: [&[u8]; 5] = [&[1, 2], &[1, 1], &[2, 2], &[1, 1, 1], &[2, 2, 2]];

fn qutrit_h_edges_mod_3(p: &Params) -> Result<(Diagram, Diagram)> {
    let edges = EDGE_PATTERNS[p.get("pattern") as usize];
    let (s, t) = (qt_index(p.get("first")), qt_index(p.get("second")));
    let w = edges.iter().map(|&h| h as u32).sum::<u32>() % 3;
    let reduced: Vec<u8> = if w == 0 { vec![] } else { vec![w as u8] };
    Ok((
        pair_with_edges(Dim::Qutrit, s, t, edges)?,
        pair_with_edges(Dim::Qutrit, s, t, &reduced)?,
    ))
}

fn qutrit_h_boxes_mod_4(p: &Params) -> Result<(Diagram, Diagram)> {
    let h = p.get("h") as u8;
    let count = p.get("count") as usize;
    let lhs = chain(Dim::Qutrit, &vec![NodeKind::H(h); count])?;
    let rhs = match count {
        4 => identity(Dim::Qutrit),
        3 => hadamard(Dim::Qutrit, 3 - h),
        _ => dualiser()?,
    };
    Ok((lhs, rhs))
}

// Variant 0: three plain wires; 1, 2: one plain wire and one through `H²`
// resp. `H†²`.
fn qutrit_hopf(p: &Params) -> Result<(Diagram, Diagram)> {
    let variant = p.get("variant");
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let z = b.z0();
    let x = b.x(qt(0, 0));
    b.input(z);
    if variant == 0 {
        for _ in 0..3 {
            b.wire(z, x, 0);
        }
    } else {
        let h = variant as u8;
        b.wire(z, x, 0);
        let h1 = b.hbox(h);
        let h2 = b.hbox(h);
        b.wire(z, h1, 0).wire(h1, h2, 0).wire(h2, x, 0);
    }
    b.output(x);
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let z = b.z0();
    let x = b.x(qt(0, 0));
    b.input(z).output(x);
    Ok((lhs, b.build()?))
}

fn qutrit_leg_flip(p: &Params) -> Result<(Diagram, Diagram)> {
    let (m, n) = (p.get("m") as usize, p.get("n") as usize);
    let h = p.get("h") as u8;
    let phase = qt_index(p.get("phase"));
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let cup = b.z0();
    let x = b.x(phase);
    b.wire(cup, x, 0);
    for _ in 1..m {
        b.input(x);
    }
    for _ in 0..n {
        b.output(x);
    }
    b.output(cup);
    let lhs = b.build()?;
    let mut b = DiagramBuilder::new(Dim::Qutrit);
    let x = b.x(phase);
    for _ in 1..m {
        b.input(x);
    }
    for _ in 0..n {
        b.output(x);
    }
    let h1 = b.hbox(h);
    let h2 = b.hbox(h);
    b.wire(x, h1, 0).wire(h1, h2, 0).output(h2);
    Ok((lhs, b.build()?))
}

fn qutrit_m_copy(p: &Params) -> Result<(Diagram, Diagram)> {
    let m = p.get("m");
    let n = p.get("n") as usize;
    let state = NodeKind::X(qt(m, -m));
    let lhs = plugged(Dim::Qutrit, state, NodeKind::Z(qt_index(p.get("phase"))), n)?;
    Ok((lhs, states(Dim::Qutrit, state, n)?))
}

fn qutrit_p_state(p: &Params) -> Result<(Diagram, Diagram)> {
    let q = p.get("p");
    Ok((
        spider(Dim::Qutrit, NodeKind::Z(qt(q, q)), 0, 1),
        spider(Dim::Qutrit, NodeKind::X(qt(-q, -q)), 0, 1),
    ))
}

const N_PHASES: [(i64, i64); 4] = [(0, 1), (0, 2), (1, 0), (2, 0)];

fn qutrit_n_state(p: &Params) -> Result<(Diagram, Diagram)> {
    let i = p.get("phase") as usize;
    let (a, b) = N_PHASES[i];
    let (c, d) = [(2, 0), (0, 1), (0, 2), (1, 0)][i];
    Ok((
        spider(Dim::Qutrit, NodeKind::Z(qt(a, b)), 0, 1),
        spider(Dim::Qutrit, NodeKind::X(qt(c, d)), 0, 1),
    ))
}

fn qutrit_n_effect(p: &Params) -> Result<(Diagram, Diagram)> {
    let i = p.get("phase") as usize;
    let (a, b) = N_PHASES[i];
    let (c, d) = [(0, 2), (1, 0), (2, 0), (0, 1)][i];
    let mut builder = DiagramBuilder::new(Dim::Qutrit);
    let h = builder.hbox(1);
    let z = builder.z(qt(a, b));
    builder.input(h).wire(h, z, 0);
    Ok((builder.build()?, spider(Dim::Qutrit, NodeKind::Z(qt(c, d)), 1, 0)))
}

// ---------------------------------------------------------------------------
// engine rewrites on open witnesses

// A vertex joined to outputs-carrying neighbours with the given weights.
fn star(dim: Dim, centre: Phase, nbrs: &[(Phase, u8)]) -> (GraphLike, NodeId) {
    let mut g = GraphLike::new(dim);
    let x = g.add_vertex(VertexKind::Phase(centre));
    for &(p, w) in nbrs {
        let u = g.add_vertex(VertexKind::Phase(p));
        g.set_weight(x, u, w);
        g.add_output(u);
    }
    (g, x)
}

fn engine_pair(g: &GraphLike, h: Result<GraphLike>) -> Result<(Diagram, Diagram)> {
    Ok((g.to_diagram(), h?.to_diagram()))
}

fn qubit_star(p: &Params) -> (GraphLike, NodeId) {
    let k = p.get("k") as usize;
    let spectator = qb(p.get("spectator"));
    let (mut g, x) = star(Dim::Qubit, qb(p.get("phase")), &vec![(spectator, 1); k]);
    let us: Vec<NodeId> = g.neighbours(x).into_iter().map(|(u, _)| u).collect();
    for (&(i, j), &m) in pairs(k).iter().zip(&digits(p.get("mask"), 2, pairs(k).len())) {
        if m == 1 {
            g.set_weight(us[i], us[j], 1);
        }
    }
    (g, x)
}

fn engine_qubit_lc(p: &Params) -> Result<(Diagram, Diagram)> {
    let (g, x) = qubit_star(p);
    engine_pair(&g, qubit::local_complement_qubit(&g, x))
}

fn engine_qubit_clifford(p: &Params) -> Result<(Diagram, Diagram)> {
    let (g, x) = qubit_star(p);
    engine_pair(&g, qubit::eliminate_clifford(&g, x))
}

// Two adjacent vertices, each neighbour of class 0 (first only), 1 (second
// only) or 2 (both).
fn pair_witness(dim: Dim, first: Phase, second: Phase, w: u8, nbrs: &[(i64, Phase, u8, u8)]) -> (GraphLike, NodeId, NodeId) {
    let mut g = GraphLike::new(dim);
    let i = g.add_vertex(VertexKind::Phase(first));
    let j = g.add_vertex(VertexKind::Phase(second));
    g.set_weight(i, j, w);
    for &(class, phase, wi, wj) in nbrs {
        let u = g.add_vertex(VertexKind::Phase(phase));
        if class != 1 {
            g.set_weight(i, u, wi);
        }
        if class != 0 {
            g.set_weight(j, u, wj);
        }
        g.add_output(u);
    }
    (g, i, j)
}

fn engine_qubit_pauli(p: &Params) -> Result<(Diagram, Diagram)> {
    let n = p.get("n") as usize;
    let nbrs: Vec<(i64, Phase, u8, u8)> = digits(p.get("classes"), 3, n)
        .into_iter()
        .map(|c| (c, qb(p.get("spectator")), 1, 1))
        .collect();
    let (g, i, j) = pair_witness(Dim::Qubit, qb(2 * p.get("j")), qb(2 * p.get("k")), 1, &nbrs);
    engine_pair(&g, qubit::eliminate_pauli_pair(&g, i, j))
}

fn qutrit_star(p: &Params, centre: Phase) -> (GraphLike, NodeId) {
    let k = p.get("k") as usize;
    let spectator = qt_index(p.get("spectator"));
    let nbrs: Vec<(Phase, u8)> = digits(p.get("weights"), 2, k)
        .into_iter()
        .map(|w| (spectator, w as u8 + 1))
        .collect();
    star(Dim::Qutrit, centre, &nbrs)
}

fn engine_qutrit_lc(p: &Params) -> Result<(Diagram, Diagram)> {
    let (g, x) = qutrit_star(p, qt_index(p.get("phase")));
    engine_pair(&g, qutrit::a_local_complement(&g, x, p.get("a") as u8))
}

const P_PHASES: [(i64, i64); 2] = [(1, 1), (2, 2)];
const M_PHASES: [(i64, i64); 3] = [(0, 0), (1, 2), (2, 1)];

fn engine_qutrit_p(p: &Params) -> Result<(Diagram, Diagram)> {
    let (a, b) = P_PHASES[p.get("phase") as usize];
    let (g, x) = qutrit_star(p, qt(a, b));
    engine_pair(&g, qutrit::eliminate_p(&g, x))
}

fn engine_qutrit_n(p: &Params) -> Result<(Diagram, Diagram)> {
    let (a, b) = N_PHASES[p.get("phase") as usize];
    let (g, x) = qutrit_star(p, qt(a, b));
    engine_pair(&g, qutrit::eliminate_n(&g, x))
}

// Neighbour code 1..=8: class (code - 1) / 2 for the first two classes,
// weights from the low bits; codes past 4 are shared neighbours.
fn qutrit_pair_nbrs(codes: &[i64], spectator: Phase) -> Vec<(i64, Phase, u8, u8)> {
    codes
        .iter()
        .map(|&c| match c {
            0..=1 => (0, spectator, c as u8 + 1, 0),
            2..=3 => (1, spectator, 0, c as u8 - 1),
            _ => (2, spectator, ((c - 4) / 2) as u8 + 1, ((c - 4) % 2) as u8 + 1),
        })
        .collect()
}

fn engine_qutrit_pivot(p: &Params) -> Result<(Diagram, Diagram)> {
    let codes = digits(p.get("nbrs"), 8, p.get("n") as usize);
    let nbrs = qutrit_pair_nbrs(&codes, qt(1, 2));
    let w = p.get("w") as u8;
    let (g, i, j) = pair_witness(Dim::Qutrit, qt_index(p.get("first")), qt_index(p.get("second")), w, &nbrs);
    engine_pair(&g, qutrit::proper_pivot(&g, i, j, p.get("a") as u8))
}

fn engine_qutrit_m_pair(p: &Params) -> Result<(Diagram, Diagram)> {
    let codes = digits(p.get("nbrs"), 8, p.get("n") as usize);
    let nbrs = qutrit_pair_nbrs(&codes, qt(1, 0));
    let (a, b) = M_PHASES[p.get("first") as usize];
    let (c, d) = M_PHASES[p.get("second") as usize];
    let (g, i, j) = pair_witness(Dim::Qutrit, qt(a, b), qt(c, d), p.get("w") as u8, &nbrs);
    engine_pair(&g, qutrit::eliminate_m_pair(&g, i, j))
}

// ---------------------------------------------------------------------------

fn pow(base: i64, n: i64) -> i64 {
    base.pow(n as u32)
}

// Union of grids over a neighbour count, with per-count digit ranges.
fn by_count(counts: std::ops::Range<i64>, fixed: &[(&'static str, std::ops::Range<i64>)], per: &[(&'static str, fn(i64) -> i64)]) -> Vec<Params> {
    counts
        .flat_map(|k| {
            let mut axes: Vec<(&'static str, std::ops::Range<i64>)> = fixed.to_vec();
            axes.push(("k", k..k + 1));
            axes.extend(per.iter().map(|&(name, f)| (name, 0..f(k))));
            grid(&axes)
        })
        .collect()
}

fn rename_count(space: Vec<Params>) -> Vec<Params> {
    space
        .into_iter()
        .map(|mut p| {
            let k = p.0.remove("k").expect("count axis");
            p.with("n", k)
        })
        .collect()
}

/// Every rule the simplifiers rely on, with its parameter space.
pub fn catalogue() -> Vec<RuleCatalogueEntry> {
    use RuleFamily::*;
    let (qb_, qt_) = (Dim::Qubit, Dim::Qutrit);
    let n_pairs = |k: i64| pow(2, k * (k - 1) / 2);
    vec![
        RuleCatalogueEntry::new(
            "qubit_fusion",
            qb_,
            Axiom,
            grid(&[("colour", 0..2), ("a", 0..4), ("b", 0..4), ("m", 0..3), ("n", 0..3)]),
            qubit_fusion,
        ),
        RuleCatalogueEntry::new("qubit_bialgebra", qb_, Axiom, grid(&[("colour", 0..2)]), qubit_bialgebra),
        RuleCatalogueEntry::new("qubit_euler", qb_, Axiom, vec![Params::default().with("sign", 1), Params::default().with("sign", 3)], qubit_euler),
        RuleCatalogueEntry::new(
            "qubit_copy",
            qb_,
            Axiom,
            grid(&[("colour", 0..2), ("k", 0..3), ("n", 0..4)]).into_iter().filter(|p| p.get("k") != 1).collect(),
            qubit_copy,
        ),
        RuleCatalogueEntry::new("qubit_pi", qb_, Axiom, grid(&[("colour", 0..2), ("a", 0..4), ("n", 1..4)]), qubit_pi),
        RuleCatalogueEntry::new("qubit_identity", qb_, Axiom, grid(&[("colour", 0..2)]), qubit_identity),
        RuleCatalogueEntry::new("qubit_hadamard", qb_, Axiom, vec![Params::default()], qubit_hadamard),
        RuleCatalogueEntry::new("qubit_colour_change", qb_, Axiom, grid(&[("a", 0..4), ("m", 0..3), ("n", 0..3)]), qubit_colour_change),
        RuleCatalogueEntry::new("qubit_parallel_h_edges", qb_, Derived, grid(&[("a", 0..4), ("b", 0..4)]), qubit_parallel_h_edges),
        RuleCatalogueEntry::new("qubit_self_loop", qb_, Derived, grid(&[("h", 0..2), ("a", 0..4), ("n", 1..3)]), qubit_self_loop),
        RuleCatalogueEntry::new(
            "qubit_clifford_elimination",
            qb_,
            Derived,
            by_count(1..4, &[("sign", 1..2)], &[("phases", |k| pow(4, k)), ("mask", n_pairs)])
                .into_iter()
                .flat_map(|p| [p.clone(), p.with("sign", 3)])
                .collect(),
            qubit_clifford_elimination,
        ),
        RuleCatalogueEntry::new(
            "qubit_pauli_elimination",
            qb_,
            Derived,
            rename_count(by_count(0..4, &[("j", 0..2)], &[("classes", |n| pow(3, n)), ("phases", |n| pow(4, n))]))
                .into_iter()
                .flat_map(|p| [p.clone().with("k", 0), p.with("k", 1)])
                .collect(),
            qubit_pauli_elimination,
        ),
        RuleCatalogueEntry::new(
            "qutrit_fusion",
            qt_,
            Axiom,
            grid(&[("colour", 0..2), ("first", 0..9), ("second", 0..9), ("m", 0..3), ("n", 0..3)]),
            qutrit_fusion,
        ),
        RuleCatalogueEntry::new("qutrit_identity", qt_, Axiom, grid(&[("colour", 0..2)]), qutrit_identity),
        RuleCatalogueEntry::new("qutrit_twisted_cup", qt_, Axiom, grid(&[("h", 1..3)]), qutrit_twisted_cup),
        RuleCatalogueEntry::new("qutrit_copy_zero", qt_, Axiom, grid(&[("phase", 0..9), ("n", 0..4)]), qutrit_copy_zero),
        RuleCatalogueEntry::new("qutrit_bialgebra", qt_, Axiom, grid(&[("colour", 0..2)]), qutrit_bialgebra),
        RuleCatalogueEntry::new("qutrit_copy_m", qt_, Axiom, grid(&[("m", 1..3), ("n", 0..4)]), qutrit_copy_m),
        RuleCatalogueEntry::new("qutrit_commute", qt_, Axiom, grid(&[("m", 1..3), ("a", 0..3), ("b", 0..3), ("n", 1..4)]), qutrit_commute),
        RuleCatalogueEntry::new("qutrit_hadamard", qt_, Axiom, grid(&[("h", 1..3)]), qutrit_hadamard),
        RuleCatalogueEntry::new("qutrit_euler", qt_, Axiom, grid(&[("h", 1..3)]), qutrit_euler),
        RuleCatalogueEntry::new(
            "qutrit_colour_change",
            qt_,
            Axiom,
            grid(&[("flip", 0..2), ("a", 0..3), ("b", 0..3), ("m", 0..3), ("n", 0..3)]),
            qutrit_colour_change,
        ),
        RuleCatalogueEntry::new("qutrit_snake", qt_, Axiom, grid(&[("variant", 0..4)]), qutrit_snake),
        RuleCatalogueEntry::new(
            "qutrit_derived_colour_change",
            qt_,
            Derived,
            grid(&[("flip", 0..2), ("a", 0..3), ("b", 0..3), ("m", 0..3), ("n", 0..3)]),
            qutrit_derived_colour_change,
        ),
        RuleCatalogueEntry::new("qutrit_hopf", qt_, Derived, grid(&[("variant", 0..3)]), qutrit_hopf),
        RuleCatalogueEntry::new(
            "qutrit_hadamard_decompositions",
            qt_,
            Derived,
            grid(&[("h", 1..3), ("order", 0..2)]),
            qutrit_hadamard_decompositions,
        ),
        RuleCatalogueEntry::new(
            "qutrit_reluctant_fusion",
            qt_,
            Derived,
            grid(&[("h", 1..3), ("first", 0..9), ("second", 0..9)]),
            qutrit_reluctant_fusion,
        ),
        RuleCatalogueEntry::new(
            "qutrit_h_edges_mod_3",
            qt_,
            Derived,
            grid(&[("pattern", 0..EDGE_PATTERNS.len() as i64), ("first", 0..9), ("second", 0..9)]),
            qutrit_h_edges_mod_3,
        ),
        RuleCatalogueEntry::new("qutrit_h_boxes_mod_4", qt_, Derived, grid(&[("h", 1..3), ("count", 2..5)]), qutrit_h_boxes_mod_4),
        RuleCatalogueEntry::new(
            "qutrit_leg_flip",
            qt_,
            Derived,
            grid(&[("phase", 0..9), ("m", 1..3), ("n", 0..3), ("h", 1..3)]),
            qutrit_leg_flip,
        ),
        RuleCatalogueEntry::new("qutrit_m_copy", qt_, Derived, grid(&[("m", 0..3), ("phase", 0..9), ("n", 0..4)]), qutrit_m_copy),
        RuleCatalogueEntry::new("qutrit_p_state_colour_change", qt_, Derived, grid(&[("p", 1..3)]), qutrit_p_state),
        RuleCatalogueEntry::new("qutrit_n_state_colour_change", qt_, Derived, grid(&[("phase", 0..4)]), qutrit_n_state),
        RuleCatalogueEntry::new("qutrit_n_effect", qt_, Derived, grid(&[("phase", 0..4)]), qutrit_n_effect),
        RuleCatalogueEntry::new(
            "qubit_local_complementation",
            qb_,
            Engine,
            by_count(1..4, &[("phase", 0..4), ("spectator", 0..4)], &[("mask", n_pairs)]),
            engine_qubit_lc,
        ),
        RuleCatalogueEntry::new(
            "qubit_clifford_rewrite",
            qb_,
            Engine,
            by_count(0..4, &[("phase", 1..2), ("spectator", 0..4)], &[("mask", n_pairs)])
                .into_iter()
                .flat_map(|p| [p.clone(), p.with("phase", 3)])
                .collect(),
            engine_qubit_clifford,
        ),
        RuleCatalogueEntry::new(
            "qubit_pauli_rewrite",
            qb_,
            Engine,
            rename_count(by_count(0..4, &[("j", 0..2), ("spectator", 0..4)], &[("classes", |n| pow(3, n))]))
                .into_iter()
                .flat_map(|p| [p.clone().with("k", 0), p.with("k", 1)])
                .collect(),
            engine_qubit_pauli,
        ),
        RuleCatalogueEntry::new(
            "qutrit_local_complementation",
            qt_,
            Engine,
            by_count(1..4, &[("phase", 0..9), ("a", 1..3), ("spectator", 0..9)], &[("weights", |k| pow(2, k))]),
            engine_qutrit_lc,
        ),
        RuleCatalogueEntry::new(
            "qutrit_proper_pivot",
            qt_,
            Engine,
            rename_count(by_count(0..2, &[("first", 0..9), ("second", 0..9), ("a", 1..3), ("w", 1..3)], &[("nbrs", |n| pow(8, n))])),
            engine_qutrit_pivot,
        ),
        RuleCatalogueEntry::new(
            "qutrit_p_elimination",
            qt_,
            Engine,
            by_count(0..4, &[("phase", 0..2), ("spectator", 0..9)], &[("weights", |k| pow(2, k))]),
            engine_qutrit_p,
        ),
        RuleCatalogueEntry::new(
            "qutrit_n_elimination",
            qt_,
            Engine,
            by_count(0..4, &[("phase", 0..4), ("spectator", 0..9)], &[("weights", |k| pow(2, k))]),
            engine_qutrit_n,
        ),
        RuleCatalogueEntry::new(
            "qutrit_m_pair_elimination",
            qt_,
            Engine,
            rename_count(by_count(0..3, &[("first", 0..3), ("second", 0..3), ("w", 1..3)], &[("nbrs", |n| pow(8, n))])),
            engine_qutrit_m_pair,
        ),
    ]
}

/// Looks up an entry by name.
pub fn entry(name: &str) -> Option<RuleCatalogueEntry> {
    catalogue().into_iter().find(|e| e.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_distinct() {
        let mut names: Vec<&str> = catalogue().iter().map(|e| e.name).collect();
        let n = names.len();
        names.sort();
        names.dedup();
        assert_eq!(names.len(), n);
    }

    #[test]
    fn grid_is_a_product() {
        let g = grid(&[("a", 0..3), ("b", 1..3)]);
        assert_eq!(g.len(), 6);
        assert_eq!(g[0].to_string(), "a=0,b=1");
    }

    #[test]
    fn fusion_of_quarter_turns_has_ratio_one() {
        let e = entry("qubit_fusion").unwrap();
        let p = Params::default().with("colour", 0).with("a", 1).with("b", 1).with("m", 1).with("n", 1);
        let (lhs, rhs) = e.instance(&p).unwrap();
        let r = proportional_ratio(&interpret(&lhs).unwrap(), &interpret(&rhs).unwrap(), DEFAULT_TOL).unwrap();
        let r = r.ratio().unwrap();
        assert!((r - 1.0).norm() < 1e-12);
    }

    #[test]
    fn wrong_rule_is_caught() {
        fn bad(_: &Params) -> Result<(Diagram, Diagram)> {
            Ok((hadamard(Dim::Qubit, 1), identity(Dim::Qubit)))
        }
        let e = RuleCatalogueEntry::new("bad", Dim::Qubit, RuleFamily::Axiom, vec![Params::default()], bad);
        assert!(matches!(verify_rule(&e, DEFAULT_TOL), Err(Error::UnsoundRule { .. })));
    }

    #[test]
    fn every_entry_builds_valid_sides() {
        for e in catalogue() {
            let (lhs, rhs) = e.instance(&e.space[0]).unwrap();
            assert!(lhs.validate().is_empty(), "{}", e.name);
            assert!(rhs.validate().is_empty(), "{}", e.name);
        }
    }
}
