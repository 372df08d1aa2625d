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

//! Exact multiplicative factors of the rewrite rules.
//!
//! Each rule is identified by a name and a parameter signature. Its factor
//! may depend on the number `k` of neighbours the rule touches and has the
//! shape `base · per_k^k`, where both parts are exact scalars. The factors
//! are measured against the tensor oracle by [`calibrate_rule_factor`] and
//! stored in a checked-in table; rewriting only looks them up.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use num_complex::Complex64;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, DiagramBuilder, NodeId, NodeKind};
use crate::error::{Error, Result};
use crate::graph_like::{GraphLike, VertexKind};
use crate::phase::Phase;
use crate::problems::{pm_box_signature, potts_body, potts_wires, weighted_potts_sum, Sign, SignedGraph, PM_BOX};
use crate::qutrit::{classify_spider, SpiderFamily};
use crate::random::{rng, stabilizer_phase};
use crate::scalar::ExactScalar;
use crate::semantics::{network, oracle_cap};
use crate::trace::Step;
use crate::{qubit, qutrit, Dim};

/// Closed form `base · per_k^k` of a rule factor.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorLaw {
    pub base: ExactScalar,
    pub per_k: ExactScalar,
}

impl FactorLaw {
    pub fn at(&self, k: usize) -> ExactScalar {
        self.base * self.per_k.pow(k as u32)
    }
}

/// rule → signature → law.
pub type CalibrationTable = BTreeMap<String, BTreeMap<String, FactorLaw>>;

/// Path of the checked-in table, relative to the crate root.
pub const TABLE_PATH: &str = "calibration.json";

const TABLE_JSON: &str = include_str!("../calibration.json");

pub fn table() -> &'static CalibrationTable {
    static TABLE: OnceLock<CalibrationTable> = OnceLock::new();
    TABLE.get_or_init(|| serde_json::from_str(TABLE_JSON).expect("calibration table parses"))
}

/// A factor at a particular neighbour count.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RuleFactor {
    pub rule: String,
    pub signature: String,
    pub k: usize,
    pub factor: ExactScalar,
}

pub fn lookup(rule: &str, signature: &str, k: usize) -> Result<ExactScalar> {
    table()
        .get(rule)
        .and_then(|m| m.get(signature))
        .map(|law| law.at(k))
        .ok_or_else(|| Error::Calibration {
            rule: rule.to_string(),
            params: signature.to_string(),
            reason: "no entry in the calibration table".to_string(),
        })
}

/// Multiplies the tabulated factor of `step` into `g` and records it.
pub(crate) fn apply(g: &mut GraphLike, step: &mut Step) -> Result<()> {
    let f = lookup(&step.rule, &step.signature, step.k)?;
    step.factor = f;
    g.mul_scalar(f);
    Ok(())
}

/// Relative tolerance when snapping an oracle ratio to an exact scalar.
pub const SNAP_TOL: f64 = 1e-9;
/// Neighbour counts the closed form is fitted on.
pub const FIT_KS: std::ops::RangeInclusive<usize> = 0..=5;
/// Neighbour counts the closed form must predict.
pub const CHECK_KS: [usize; 2] = [6, 7];
/// Pluggings tried per neighbour count before giving up on a witness.
pub const PLUGS: u64 = 48;
const WITNESS_CAP: usize = 12;

/// Result of calibrating one rule signature.
#[derive(Clone, Debug, Serialize)]
pub struct Calibration {
    pub rule: String,
    pub signature: String,
    pub law: FactorLaw,
    /// Measured factor at every neighbour count that was swept.
    pub samples: Vec<RuleFactor>,
    /// Counts at which every plugging of the witness vanished.
    pub skipped: Vec<usize>,
}

#[derive(Clone, Copy, Debug)]
enum Case {
    QubitClifford(u8),
    QubitPauliPair(u8, u8),
    QubitLc(VertexKind),
    QubitBasis(u8),
    QubitIsolated,
    QutritLc(VertexKind, u8),
    QutritPn(Phase),
    QutritMPair(Phase, Phase, u8),
    QutritBasis(u8),
    QutritIsolated,
    PmBox(u32, Sign),
    Euler(Dim, u8),
}

impl Case {
    fn dim(self) -> Dim {
        match self {
            Case::QubitClifford(_)
            | Case::QubitPauliPair(..)
            | Case::QubitLc(_)
            | Case::QubitBasis(_)
            | Case::QubitIsolated => Dim::Qubit,
            Case::PmBox(d, _) => potts_wires(d).map(|(dim, _)| dim).unwrap_or(Dim::Qubit),
            Case::Euler(dim, _) => dim,
            _ => Dim::Qutrit,
        }
    }

    // Only isolated spiders have no neighbour count to sweep.
    fn sweeps_k(self) -> bool {
        !matches!(self, Case::QubitIsolated | Case::QutritIsolated)
    }

    fn key(self) -> (String, String) {
        let (rule, sig) = match self {
            Case::QubitClifford(k) => (qubit::CLIFFORD, format!("k={k}")),
            Case::QubitPauliPair(a, b) => (qubit::PAULI_PAIR, format!("a={a},b={b}")),
            Case::QubitLc(kind) => (qubit::LC, qubit::kind_signature(kind)),
            Case::QubitBasis(s) => (qubit::BASIS, format!("basis={s}")),
            Case::QubitIsolated => (qubit::ISOLATED, "k=0".to_string()),
            Case::QutritLc(kind, a) => (qutrit::LC, format!("{}|a={a}", qubit::kind_signature(kind))),
            Case::QutritPn(p) => {
                let rule = if classify_spider(p) == SpiderFamily::P { qutrit::ELIM_P } else { qutrit::ELIM_N };
                (rule, qubit::kind_signature(VertexKind::Phase(p)))
            }
            Case::QutritMPair(p, q, w) => (
                qutrit::M_PAIR,
                format!(
                    "{}|{}|w={w}",
                    qubit::kind_signature(VertexKind::Phase(p)),
                    qubit::kind_signature(VertexKind::Phase(q))
                ),
            ),
            Case::QutritBasis(s) => (qutrit::BASIS, format!("basis={s}")),
            Case::QutritIsolated => (qutrit::ISOLATED, "(0,0)".to_string()),
            Case::PmBox(d, sign) => (PM_BOX, pm_box_signature(d, sign)),
            Case::Euler(Dim::Qubit, h) => (EULER_QUBIT, format!("h={h}")),
            Case::Euler(Dim::Qutrit, h) => (EULER_QUTRIT, format!("h={h}")),
        };
        (rule.to_string(), sig)
    }
}

/// Rule name of the Hadamard Euler decompositions.
pub const EULER_QUBIT: &str = "qubit_euler";
pub const EULER_QUTRIT: &str = "qutrit_euler";

fn cases() -> Vec<Case> {
    let mut out = Vec::new();
    out.extend([1, 3].map(Case::QubitClifford));
    for a in 0..2 {
        for b in 0..2 {
            out.push(Case::QubitPauliPair(a, b));
        }
    }
    for k in 0..4 {
        out.push(Case::QubitLc(VertexKind::Phase(Phase::qubit(k))));
    }
    out.extend([0, 1].map(|s| Case::QubitLc(VertexKind::Basis(s))));
    out.extend([0, 1].map(Case::QubitBasis));
    out.push(Case::QubitIsolated);
    let qutrit_kinds: Vec<VertexKind> = (0..3)
        .flat_map(|a| (0..3).map(move |b| VertexKind::Phase(Phase::qutrit(a, b))))
        .chain((0..3).map(VertexKind::Basis))
        .collect();
    for &kind in &qutrit_kinds {
        for a in 1..3 {
            out.push(Case::QutritLc(kind, a));
        }
    }
    let phases: Vec<Phase> = (0..3).flat_map(|a| (0..3).map(move |b| Phase::qutrit(a, b))).collect();
    for &p in &phases {
        if matches!(classify_spider(p), SpiderFamily::P | SpiderFamily::N) {
            out.push(Case::QutritPn(p));
        }
    }
    let ms: Vec<Phase> = phases.iter().copied().filter(|&p| classify_spider(p) == SpiderFamily::M).collect();
    for &p in &ms {
        for &q in &ms {
            for w in 1..3 {
                out.push(Case::QutritMPair(p, q, w));
            }
        }
    }
    out.extend((0..3).map(Case::QutritBasis));
    out.push(Case::QutritIsolated);
    for d in 2..=4 {
        for sign in [Sign::Plus, Sign::Minus] {
            out.push(Case::PmBox(d, sign));
        }
    }
    out.push(Case::Euler(Dim::Qubit, 1));
    out.extend([1, 2].map(|h| Case::Euler(Dim::Qutrit, h)));
    out
}

/// Every `(rule, signature)` pair the table must cover.
pub fn calibration_cases() -> Vec<(String, String)> {
    cases().into_iter().map(Case::key).collect()
}

fn calibration_error(rule: &str, sig: &str, reason: impl Into<String>) -> Error {
    Error::Calibration {
        rule: rule.to_string(),
        params: sig.to_string(),
        reason: reason.into(),
    }
}

fn contract_witness(a: &Diagram) -> Result<Complex64> {
    let d = a.dim().value();
    let out = network(a).contract(oracle_cap(d).max(WITNESS_CAP))?;
    Ok(out[0])
}

fn random_weight<R: Rng>(r: &mut R, dim: Dim) -> u8 {
    match dim {
        Dim::Qubit => 1,
        Dim::Qutrit => r.gen_range(1..3),
    }
}

// Closed graph with `targets` and `k` random stabilizer neighbours, each
// attached to a nonempty subset of the targets. Consecutive neighbours
// are sometimes joined too.
fn graph_witness<R: Rng>(r: &mut R, dim: Dim, targets: &[VertexKind], k: usize) -> (GraphLike, Vec<NodeId>) {
    let mut g = GraphLike::new(dim);
    let ts: Vec<NodeId> = targets.iter().map(|&t| g.add_vertex(t)).collect();
    let mut prev = None;
    for _ in 0..k {
        let v = g.add_vertex(VertexKind::Phase(stabilizer_phase(r, dim)));
        let mask = if ts.len() == 1 { 1 } else { r.gen_range(1..1u32 << ts.len()) };
        for (i, &t) in ts.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.set_weight(t, v, random_weight(r, dim));
            }
        }
        if let Some(p) = prev {
            if r.gen_bool(0.5) {
                g.set_weight(p, v, random_weight(r, dim));
            }
        }
        prev = Some(v);
    }
    (g, ts)
}

// lhs and rhs of a witness, or `None` when the case has no witness at `k`.
fn witness(case: Case, k: usize, plug: u64) -> Result<(Complex64, Complex64)> {
    let (rule, sig) = case.key();
    let mut r = rng(plug * 64 + k as u64);
    let dim = case.dim();
    let q = |k: u8| VertexKind::Phase(Phase::qubit(k as i64));
    let graph_case = |targets: &[VertexKind], r: &mut _| -> (GraphLike, Vec<NodeId>) {
        let (mut g, ts) = graph_witness(r, dim, targets, k);
        if let [u, v] = ts[..] {
            let w = match case {
                Case::QutritMPair(_, _, w) => w,
                _ => 1,
            };
            g.set_weight(u, v, w);
        }
        (g, ts)
    };
    let (before, ts) = match case {
        Case::QubitClifford(kk) => graph_case(&[q(kk)], &mut r),
        Case::QubitPauliPair(a, b) => graph_case(&[q(2 * a), q(2 * b)], &mut r),
        Case::QubitLc(kind) | Case::QutritLc(kind, _) => graph_case(&[kind], &mut r),
        Case::QubitBasis(s) | Case::QutritBasis(s) => graph_case(&[VertexKind::Basis(s)], &mut r),
        Case::QubitIsolated => graph_case(&[q(0)], &mut r),
        Case::QutritIsolated => graph_case(&[VertexKind::Phase(Phase::zero(Dim::Qutrit))], &mut r),
        Case::QutritPn(p) => graph_case(&[VertexKind::Phase(p)], &mut r),
        Case::QutritMPair(p, q2, _) => graph_case(&[VertexKind::Phase(p), VertexKind::Phase(q2)], &mut r),
        Case::PmBox(d, sign) => return pm_box_witness(&mut r, d, sign, k),
        Case::Euler(dim, h) => return euler_witness(&mut r, dim, h, k),
    };
    let mut after = before.clone();
    let step = match case {
        Case::QubitClifford(_) => qubit::clifford_raw(&mut after, ts[0])?,
        Case::QubitPauliPair(..) => qubit::pauli_pair_raw(&mut after, ts[0], ts[1])?,
        Case::QubitLc(_) => qubit::lc_raw(&mut after, ts[0])?,
        Case::QubitBasis(_) => qubit::basis_raw(&mut after, ts[0])?,
        Case::QubitIsolated | Case::QutritIsolated => qubit::isolated_raw(&mut after, ts[0])?,
        Case::QutritLc(_, a) => qutrit::lc_raw(&mut after, ts[0], a)?,
        Case::QutritPn(p) => qutrit::pn_raw(&mut after, ts[0], classify_spider(p))?,
        Case::QutritMPair(..) => qutrit::m_pair_raw(&mut after, ts[0], ts[1])?,
        Case::QutritBasis(_) => qutrit::basis_raw(&mut after, ts[0])?,
        Case::PmBox(..) | Case::Euler(..) => unreachable!("handled above"),
    };
    if step.rule != rule || step.signature != sig || step.k != k {
        return Err(calibration_error(
            &rule,
            &sig,
            format!("witness fired {} [{}] with k = {}", step.rule, step.signature, step.k),
        ));
    }
    Ok((contract_witness(&before.to_diagram())?, contract_witness(&after.to_diagram())?))
}

// A cycle of `k` boxes between plugged vertex spiders (a single vertex when
// `k = 0`), against the direct sum with the same vertex weights.
fn pm_box_witness<R: Rng>(r: &mut R, d: u32, sign: Sign, k: usize) -> Result<(Complex64, Complex64)> {
    let (dim, wires) = potts_wires(d)?;
    let n = k.max(1);
    let edges = (0..k).map(|i| (i, (i + 1) % n, sign)).collect();
    let g = SignedGraph::new(n, edges)?;
    let plugs: Vec<Vec<Phase>> = (0..n).map(|_| (0..wires).map(|_| stabilizer_phase(r, dim)).collect()).collect();
    let lhs = contract_witness(&potts_body(&g, d, Some(&plugs))?)?;
    let weight = |v: usize, s: u32| -> Complex64 {
        match wires {
            1 => plugs[v][0].factor(s as usize),
            _ => plugs[v][0].factor((s / 2) as usize) * plugs[v][1].factor((s % 2) as usize),
        }
    };
    Ok((lhs, weighted_potts_sum(&g, d, weight)?))
}

// A plugged state through `k` Hadamard boxes into a plugged effect, against
// the same with every box replaced by its Z·X·Z form.
fn euler_witness<R: Rng>(r: &mut R, dim: Dim, h: u8, k: usize) -> Result<(Complex64, Complex64)> {
    let (state, effect) = (stabilizer_phase(r, dim), stabilizer_phase(r, dim));
    let euler = match (dim, h) {
        (Dim::Qubit, _) => Phase::qubit(1),
        (Dim::Qutrit, 1) => Phase::qutrit(2, 2),
        (Dim::Qutrit, _) => Phase::qutrit(1, 1),
    };
    let build = |expand: bool| -> Result<Diagram> {
        let mut b = DiagramBuilder::new(dim);
        let mut last = b.z(state);
        for _ in 0..k {
            if expand {
                for kind in [NodeKind::Z(euler), NodeKind::X(euler), NodeKind::Z(euler)] {
                    let next = b.add(kind);
                    b.wire(last, next, 0);
                    last = next;
                }
            } else {
                let next = b.hbox(h);
                b.wire(last, next, 0);
                last = next;
            }
        }
        let end = b.x(effect);
        b.wire(last, end, 0);
        b.build()
    };
    Ok((contract_witness(&build(false)?)?, contract_witness(&build(true)?)?))
}

// Requires `ζʲ·√p^a` with `p` the prime of the wire dimension.
fn check_shape(x: ExactScalar, dim: Dim) -> bool {
    match (x.as_unit_monomial(), dim) {
        (Some((_, _, 0)), Dim::Qubit) => true,
        (Some((_, 0, _)), Dim::Qutrit) => true,
        _ => false,
    }
}

fn measure(case: Case, k: usize) -> Result<ExactScalar> {
    let (rule, sig) = case.key();
    for plug in 0..PLUGS {
        let (lhs, rhs) = witness(case, k, plug).map_err(|e| match e {
            Error::Calibration { .. } => e,
            other => calibration_error(&rule, &sig, format!("k = {k}: {other}")),
        })?;
        let scale = lhs.norm().max(rhs.norm());
        let tiny = |z: Complex64| z.norm() <= SNAP_TOL * scale.max(1.0);
        match (tiny(lhs), tiny(rhs)) {
            (true, true) => continue,
            (false, false) => {}
            _ => {
                return Err(calibration_error(
                    &rule,
                    &sig,
                    format!("k = {k}, plugging {plug}: one side vanishes ({lhs} vs {rhs})"),
                ))
            }
        }
        let ratio = lhs / rhs;
        return ExactScalar::snap(ratio, SNAP_TOL)
            .filter(|s| !s.is_zero())
            .ok_or_else(|| calibration_error(&rule, &sig, format!("no exact scalar near {ratio} at k = {k}")));
    }
    Err(calibration_error(&rule, &sig, format!("zero witness: every plugging vanishes at k = {k}")))
}

/// Measures the factor of `(rule, signature)` on closed witnesses for every
/// neighbour count in [`FIT_KS`], fits `base · per_k^k`, and checks that the
/// fit predicts the witnesses at [`CHECK_KS`].
pub fn calibrate_rule_factor(rule: &str, signature: &str) -> Result<Calibration> {
    let case = cases()
        .into_iter()
        .find(|c| c.key() == (rule.to_string(), signature.to_string()))
        .ok_or_else(|| calibration_error(rule, signature, "unknown rule signature"))?;
    let ks: Vec<usize> = if case.sweeps_k() { FIT_KS.chain(CHECK_KS).collect() } else { vec![0] };
    let mut samples = Vec::new();
    let mut skipped = Vec::new();
    for &k in &ks {
        match measure(case, k) {
            Ok(factor) => samples.push(RuleFactor {
                rule: rule.to_string(),
                signature: signature.to_string(),
                k,
                factor,
            }),
            // a spider whose effect sums to zero has no nonzero witness
            // without neighbours; such counts are left out of the fit
            Err(Error::Calibration { reason, .. }) if reason.starts_with("zero witness") && case.sweeps_k() => skipped.push(k),
            Err(e) => return Err(e),
        }
    }
    let fitted = samples.iter().filter(|s| FIT_KS.contains(&s.k)).count();
    let checked = samples.iter().filter(|s| CHECK_KS.contains(&s.k)).count();
    if case.sweeps_k() && (fitted < 3 || checked < CHECK_KS.len()) {
        return Err(calibration_error(rule, signature, format!("zero witness at too many counts: {skipped:?}")));
    }
    let first = &samples[0];
    let per_k = match samples.get(1) {
        Some(s) if s.k == first.k + 1 => s.factor * first.factor.inverse().ok_or_else(|| calibration_error(rule, signature, "zero factor"))?,
        Some(_) => return Err(calibration_error(rule, signature, "no two consecutive counts to fit")),
        None => ExactScalar::one(),
    };
    let base = first.factor
        * per_k
            .pow(first.k as u32)
            .inverse()
            .ok_or_else(|| calibration_error(rule, signature, "zero factor"))?;
    let law = FactorLaw { base, per_k };
    if !check_shape(base, case.dim()) || !check_shape(per_k, case.dim()) {
        return Err(calibration_error(rule, signature, format!("factor {base} · ({per_k})^k has the wrong shape")));
    }
    for s in &samples {
        if law.at(s.k) != s.factor {
            let stage = if CHECK_KS.contains(&s.k) { "extrapolation" } else { "fit" };
            return Err(calibration_error(
                rule,
                signature,
                format!("{stage} fails at k = {}: measured {}, law gives {}", s.k, s.factor, law.at(s.k)),
            ));
        }
    }
    Ok(Calibration {
        rule: rule.to_string(),
        signature: signature.to_string(),
        law,
        samples,
        skipped,
    })
}

/// Calibrates every case. Failures are collected rather than aborting.
pub fn calibrate_all() -> (CalibrationTable, Vec<Error>) {
    let mut table = CalibrationTable::new();
    let mut errors = Vec::new();
    for (rule, sig) in calibration_cases() {
        match calibrate_rule_factor(&rule, &sig) {
            Ok(c) => {
                table.entry(rule).or_default().insert(sig, c.law);
            }
            Err(e) => errors.push(e),
        }
    }
    (table, errors)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Rewrites `calibration.json` from the oracle when `ZXSIMP_RECALIBRATE`
    /// is set.
    #[test]
    fn regenerate_table() {
        if std::env::var_os("ZXSIMP_RECALIBRATE").is_none() {
            return;
        }
        let (table, errors) = calibrate_all();
        for e in &errors {
            eprintln!("{e}");
        }
        let path = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join(TABLE_PATH);
        let text = serde_json::to_string_pretty(&table).expect("table serialises");
        std::fs::write(path, text + "\n").expect("table written");
    }

    #[test]
    fn laws_evaluate() {
        let law = FactorLaw {
            base: ExactScalar::from_int(2),
            per_k: ExactScalar::zeta(6),
        };
        assert_eq!(law.at(0), ExactScalar::from_int(2));
        assert_eq!(law.at(2), ExactScalar::from_int(-2));
    }

    #[test]
    fn unknown_signature_is_an_error() {
        assert!(matches!(calibrate_rule_factor("qubit_lc", "k=9"), Err(Error::Calibration { .. })));
        assert!(matches!(lookup("nope", "", 0), Err(Error::Calibration { .. })));
    }

    #[test]
    fn case_keys_are_distinct() {
        let keys = calibration_cases();
        let set: std::collections::BTreeSet<_> = keys.iter().collect();
        assert_eq!(set.len(), keys.len());
    }
}
