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

//! Encoders and evaluators for Potts partition functions at lattice roots
//! of unity, link invariants, and colouring counts.

pub mod colouring;
pub mod knots;

use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::diagram::{Diagram, DiagramBuilder, NodeId};
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::scalar::ExactScalar;
use crate::{ledger, qubit, qutrit, Dim};

pub use colouring::{colouring_diagram, count_colourings, ColouringCount, ColouringEncoding, Graph};
pub use knots::{jones_at_root, kauffman_bracket, pd_to_signed_graph, JonesReport, Laurent, PdCode};

/// Rule name of the ±-box decompositions in the calibration table.
pub const PM_BOX: &str = "pm_box";

/// How a value was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Stabilizer,
    Oracle,
}

/// Sign of a ±-box.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

/// Graph with signed, possibly parallel edges.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SignedGraph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize, Sign)>,
}

impl SignedGraph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize, Sign)>) -> Result<SignedGraph> {
        let g = SignedGraph { vertices, edges };
        g.check()?;
        Ok(g)
    }

    pub fn check(&self) -> Result<()> {
        match self.edges.iter().find(|(u, v, _)| *u >= self.vertices || *v >= self.vertices) {
            Some((u, v, _)) => Err(Error::Problem(format!("edge ({u}, {v}) has a dangling endpoint"))),
            None => Ok(()),
        }
    }
}

/// The root of `t² + (2 - d)t + 1 = 0` with nonnegative imaginary part. For
/// `d ≥ 4` both roots are real and the larger one is taken.
pub fn t_of_d(d: u32) -> Complex64 {
    let b = 2.0 - d as f64;
    let disc = b * b - 4.0;
    if disc < 0.0 {
        Complex64::new(-b / 2.0, (-disc).sqrt() / 2.0)
    } else {
        Complex64::new((-b + disc.sqrt()) / 2.0, 0.0)
    }
}

/// `t(d)` as an exact scalar, for `d ∈ {1, 2, 3, 4}`.
pub fn t_exact(d: u32) -> Option<ExactScalar> {
    match d {
        1 => Some(ExactScalar::zeta(8)),
        2 => Some(ExactScalar::zeta(6)),
        3 => Some(ExactScalar::zeta(4)),
        4 => Some(ExactScalar::one()),
        _ => None,
    }
}

/// Diagonal entry `-t^{∓1}` of a ±-box.
pub fn pm_diagonal(d: u32, sign: Sign) -> Complex64 {
    let t = t_of_d(d);
    match sign {
        Sign::Plus => -t.inv(),
        Sign::Minus => -t,
    }
}

fn pm_diagonal_exact(d: u32, sign: Sign) -> Option<ExactScalar> {
    let t = t_exact(d)?;
    Some(match sign {
        Sign::Plus => -t.inverse()?,
        Sign::Minus => -t,
    })
}

/// The ±-box as a `d × d` matrix: 1 off the diagonal, `-t^{∓1}` on it.
pub fn pm_box_matrix(d: u32, sign: Sign) -> Vec<Vec<Complex64>> {
    let diag = pm_diagonal(d, sign);
    (0..d)
        .map(|i| (0..d).map(|j| if i == j { diag } else { Complex64::new(1.0, 0.0) }).collect())
        .collect()
}

/// Calibration signature of a ±-box decomposition.
pub fn pm_box_signature(d: u32, sign: Sign) -> String {
    format!("d={d},{sign}")
}

/// Wire dimension and number of wires per colour used for `d`.
pub fn potts_wires(d: u32) -> Result<(Dim, usize)> {
    match d {
        2 => Ok((Dim::Qubit, 1)),
        3 => Ok((Dim::Qutrit, 1)),
        4 => Ok((Dim::Qubit, 2)),
        _ => Err(Error::Problem(format!("no stabilizer ±-box for d = {d}"))),
    }
}

// Phase of the single X spider standing for a ±-box when d is 2 or 3.
fn box_phase(d: u32, sign: Sign) -> Phase {
    match (d, sign) {
        (2, Sign::Plus) => Phase::qubit(1),
        (2, Sign::Minus) => Phase::qubit(3),
        (_, Sign::Plus) => Phase::qutrit(1, 1),
        (_, Sign::Minus) => Phase::qutrit(2, 2),
    }
}

/// Stabilizer diagram proportional to the ±-box. For `d = 4` colour `c`
/// is carried by two qubits `(c / 2, c % 2)`.
pub fn pm_box_decomposition(d: u32, sign: Sign) -> Result<Diagram> {
    let (dim, _) = potts_wires(d)?;
    let mut b = DiagramBuilder::new(dim);
    match d {
        2 | 3 => {
            let x = b.x(box_phase(d, sign));
            b.input(x).output(x);
        }
        _ => {
            let copy = b.x(Phase::qubit(2));
            let h = b.hbox(1);
            let compare = b.x(Phase::qubit(2));
            b.wire(copy, h, 0).wire(h, compare, 0);
            b.input(copy).input(compare).output(copy).output(compare);
        }
    }
    b.build()
}

/// The factor `f` with `⟦decomposition⟧ = f · (±-box)`, from the table.
pub fn pm_box_prefactor(d: u32, sign: Sign) -> Result<ExactScalar> {
    ledger::lookup(PM_BOX, &pm_box_signature(d, sign), 1)
}

/// Closed diagram whose value is the Potts partition function: a phaseless
/// spider (or pair of qubit spiders for `d = 4`) per vertex and a ±-box
/// decomposition per edge, with the decomposition factors divided out in
/// the scalar.
pub fn potts_diagram(g: &SignedGraph, d: u32) -> Result<Diagram> {
    let mut scalar = ExactScalar::one();
    for &(_, _, sign) in &g.edges {
        scalar *= pm_box_prefactor(d, sign)?
                .inverse()
                .ok_or_else(|| Error::Problem("±-box factor is not invertible".into()))?;
    }
    Ok(potts_body(g, d, None)?.scale(scalar))
}

/// [`potts_diagram`] without the scalar. `plugs[v][w]` is the phase of the
/// spider of vertex `v` on wire `w`; phaseless when absent.
pub(crate) fn potts_body(g: &SignedGraph, d: u32, plugs: Option<&[Vec<Phase>]>) -> Result<Diagram> {
    g.check()?;
    let (dim, wires) = potts_wires(d)?;
    let mut b = DiagramBuilder::new(dim);
    let spiders: Vec<Vec<NodeId>> = (0..g.vertices)
        .map(|v| {
            (0..wires)
                .map(|w| match plugs {
                    Some(p) => b.z(p[v][w]),
                    None => b.z0(),
                })
                .collect()
        })
        .collect();
    for &(u, v, sign) in &g.edges {
        if wires == 1 {
            let x = b.x(box_phase(d, sign));
            b.wire(spiders[u][0], x, 0).wire(x, spiders[v][0], 0);
        } else {
            let copy = b.x(Phase::qubit(2));
            let h = b.hbox(1);
            let compare = b.x(Phase::qubit(2));
            b.wire(spiders[u][0], copy, 0)
                .wire(spiders[u][1], compare, 0)
                .wire(copy, h, 0)
                .wire(h, compare, 0)
                .wire(copy, spiders[v][0], 0)
                .wire(compare, spiders[v][1], 0);
        }
    }
    b.build()
}

/// A Potts value with its provenance.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PottsValue {
    pub value: Complex64,
    pub exact: Option<ExactScalar>,
    pub method: Method,
}

/// Largest number of spin assignments the direct sum will enumerate.
pub const DIRECT_SUM_LIMIT: u64 = 1 << 24;

fn assignments(n: usize, d: u32) -> Result<u64> {
    (d as u64)
        .checked_pow(n as u32)
        .filter(|&m| m <= DIRECT_SUM_LIMIT)
        .ok_or(Error::TooLarge {
            rank: n,
            cap: (DIRECT_SUM_LIMIT as f64).log(d as f64).floor() as usize,
        })
}

fn for_each_spin(n: usize, d: u32, count: u64, mut f: impl FnMut(&[u32])) {
    let mut s = vec![0u32; n];
    for _ in 0..count {
        f(&s);
        for x in s.iter_mut() {
            *x += 1;
            if *x < d {
                break;
            }
            *x = 0;
        }
    }
}

/// `Σ_σ Π_edges box[σ_u][σ_v]` by enumeration, in floating point.
pub fn direct_potts_sum(g: &SignedGraph, d: u32) -> Result<Complex64> {
    weighted_potts_sum(g, d, |_, _| Complex64::new(1.0, 0.0))
}

/// The direct sum with an extra factor `weight(v, σ_v)` per vertex.
pub(crate) fn weighted_potts_sum(
    g: &SignedGraph,
    d: u32,
    weight: impl Fn(usize, u32) -> Complex64,
) -> Result<Complex64> {
    g.check()?;
    let count = assignments(g.vertices, d)?;
    let diag = [pm_diagonal(d, Sign::Plus), pm_diagonal(d, Sign::Minus)];
    let mut total = Complex64::new(0.0, 0.0);
    for_each_spin(g.vertices, d, count, |s| {
        let mut term: Complex64 = s.iter().enumerate().map(|(v, &x)| weight(v, x)).product();
        for &(u, v, sign) in &g.edges {
            if s[u] == s[v] {
                term *= diag[(sign == Sign::Minus) as usize];
            }
        }
        total += term;
    });
    Ok(total)
}

/// The direct sum in exact arithmetic, for `d ≤ 4`.
pub fn direct_potts_exact(g: &SignedGraph, d: u32) -> Result<ExactScalar> {
    g.check()?;
    let (Some(plus), Some(minus)) = (pm_diagonal_exact(d, Sign::Plus), pm_diagonal_exact(d, Sign::Minus)) else {
        return Err(Error::Problem(format!("t({d}) is not a lattice root of unity")));
    };
    let count = assignments(g.vertices, d)?;
    // Terms are monomials plus^a·minus^b; collect their multiplicities.
    let mut bins = std::collections::BTreeMap::<(u32, u32), i64>::new();
    for_each_spin(g.vertices, d, count, |s| {
        let mut key = (0, 0);
        for &(u, v, sign) in &g.edges {
            if s[u] == s[v] {
                match sign {
                    Sign::Plus => key.0 += 1,
                    Sign::Minus => key.1 += 1,
                }
            }
        }
        *bins.entry(key).or_default() += 1;
    });
    Ok(bins
        .into_iter()
        .map(|((a, b), m)| ExactScalar::from_int(m) * plus.pow(a) * minus.pow(b))
        .sum())
}

/// The Potts partition function of `g` at `t(d)`. For `d ∈ {2, 3, 4}` it
/// is computed exactly by simplifying [`potts_diagram`]; otherwise by the
/// direct sum, which must be small enough to enumerate.
pub fn evaluate_potts(g: &SignedGraph, d: u32) -> Result<PottsValue> {
    if d < 2 {
        return Err(Error::Problem(format!("Potts evaluation needs d ≥ 2, got {d}")));
    }
    if (2..=4).contains(&d) {
        let a = potts_diagram(g, d)?;
        let s = match a.dim() {
            Dim::Qubit => qubit::simplify_qubit(&a)?,
            Dim::Qutrit => qutrit::simplify_qutrit(&a)?,
        };
        if s.partial {
            return Err(Error::Problem("stabilizer simplification did not finish".into()));
        }
        return Ok(PottsValue {
            value: s.scalar.to_complex(),
            exact: Some(s.scalar),
            method: Method::Stabilizer,
        });
    }
    Ok(PottsValue {
        value: direct_potts_sum(g, d)?,
        exact: None,
        method: Method::Oracle,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semantics::{interpret, Tensor};

    #[test]
    fn lattice_roots() {
        assert!((t_of_d(2) - Complex64::new(0.0, 1.0)).norm() < 1e-12);
        assert!((t_of_d(4) - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        let w = Complex64::from_polar(1.0, 2.0 * std::f64::consts::PI / 3.0);
        assert!((t_of_d(1) - w).norm() < 1e-12);
        for d in 1..=4 {
            let t = t_of_d(d);
            assert!((t * t + (2.0 - d as f64) * t + 1.0).norm() < 1e-12);
            assert!((t_exact(d).unwrap().to_complex() - t).norm() < 1e-12);
        }
    }

    #[test]
    fn decompositions_are_proportional() {
        for d in 2..=4 {
            for sign in [Sign::Plus, Sign::Minus] {
                let dec = interpret(&pm_box_decomposition(d, sign).unwrap()).unwrap();
                let m = pm_box_matrix(d, sign);
                let n = d as usize;
                let r = dec.data()[0] / m[0][0];
                for i in 0..n {
                    for j in 0..n {
                        let entry = dec.data()[i * n + j];
                        assert!((entry - r * m[i][j]).norm() < 1e-12, "d={d} {sign}");
                    }
                }
                let _ = Tensor::from_matrix(&m);
            }
        }
    }

    #[test]
    fn edgeless_graph() {
        let g = SignedGraph::new(3, vec![]).unwrap();
        assert_eq!(direct_potts_exact(&g, 3).unwrap(), ExactScalar::from_int(27));
        assert!((direct_potts_sum(&g, 5).unwrap() - Complex64::new(125.0, 0.0)).norm() < 1e-9);
    }

    #[test]
    fn dangling_edge_rejected() {
        assert!(SignedGraph::new(2, vec![(0, 2, Sign::Plus)]).is_err());
    }
}
