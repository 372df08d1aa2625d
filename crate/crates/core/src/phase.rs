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

//! Spider phases for qubit and qutrit diagrams.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::scalar::ExactScalar;
use crate::Dim;

const TAU: f64 = 2.0 * PI;

fn wrap_angle(x: f64) -> f64 {
    let r = x.rem_euclid(TAU);
    if (TAU - r).abs() < 1e-15 {
        0.0
    } else {
        r
    }
}

/// A spider phase.
///
/// Stabilizer phases are stored as residues: a qubit phase `k` means `kπ/2`,
/// a qutrit phase `(a, b)` means `(2πa/3, 2πb/3)`. Generic phases are angles
/// in radians, normalised to `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "RawPhase", into = "RawPhase")]
pub enum Phase {
    QubitStab { k: u8 },
    QubitGen { alpha: f64 },
    QutritStab { a: u8, b: u8 },
    QutritGen { alpha: f64, beta: f64 },
}

/// Wire form: `{"kind": "stab", "k": ..}` / `{"kind": "stab", "a": .., "b": ..}`
/// / `{"kind": "gen", "alpha": ..[, "beta": ..]}`.
#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawPhase {
    kind: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    k: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    a: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    alpha: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    beta: Option<f64>,
}

impl TryFrom<RawPhase> for Phase {
    type Error = String;
    fn try_from(r: RawPhase) -> Result<Self, String> {
        match (r.kind.as_str(), r.k, r.a, r.b, r.alpha, r.beta) {
            ("stab", Some(k), None, None, None, None) => Ok(Phase::qubit(k)),
            ("stab", None, Some(a), Some(b), None, None) => Ok(Phase::qutrit(a, b)),
            ("gen", None, None, None, Some(x), None) => Ok(Phase::qubit_angle(x)),
            ("gen", None, None, None, Some(x), Some(y)) => Ok(Phase::qutrit_angles(x, y)),
            (kind, ..) => Err(format!("malformed phase of kind {kind:?}")),
        }
    }
}

impl From<Phase> for RawPhase {
    fn from(p: Phase) -> Self {
        let mut r = RawPhase {
            kind: if p.is_stabilizer() { "stab" } else { "gen" }.to_string(),
            k: None,
            a: None,
            b: None,
            alpha: None,
            beta: None,
        };
        match p {
            Phase::QubitStab { k } => r.k = Some(k as i64),
            Phase::QutritStab { a, b } => {
                r.a = Some(a as i64);
                r.b = Some(b as i64);
            }
            Phase::QubitGen { alpha } => r.alpha = Some(alpha),
            Phase::QutritGen { alpha, beta } => {
                r.alpha = Some(alpha);
                r.beta = Some(beta);
            }
        }
        r
    }
}

impl Phase {
    pub fn qubit(k: i64) -> Phase {
        Phase::QubitStab {
            k: k.rem_euclid(4) as u8,
        }
    }

    pub fn qubit_angle(alpha: f64) -> Phase {
        Phase::QubitGen {
            alpha: wrap_angle(alpha),
        }
    }

    pub fn qutrit(a: i64, b: i64) -> Phase {
        Phase::QutritStab {
            a: a.rem_euclid(3) as u8,
            b: b.rem_euclid(3) as u8,
        }
    }

    pub fn qutrit_angles(alpha: f64, beta: f64) -> Phase {
        Phase::QutritGen {
            alpha: wrap_angle(alpha),
            beta: wrap_angle(beta),
        }
    }

    pub fn zero(dim: Dim) -> Phase {
        match dim {
            Dim::Qubit => Phase::qubit(0),
            Dim::Qutrit => Phase::qutrit(0, 0),
        }
    }

    pub fn dim(&self) -> Dim {
        match self {
            Phase::QubitStab { .. } | Phase::QubitGen { .. } => Dim::Qubit,
            Phase::QutritStab { .. } | Phase::QutritGen { .. } => Dim::Qutrit,
        }
    }

    pub fn is_stabilizer(&self) -> bool {
        matches!(self, Phase::QubitStab { .. } | Phase::QutritStab { .. })
    }

    pub fn is_zero(&self) -> bool {
        match *self {
            Phase::QubitStab { k } => k == 0,
            Phase::QutritStab { a, b } => a == 0 && b == 0,
            Phase::QubitGen { alpha } => alpha == 0.0,
            Phase::QutritGen { alpha, beta } => alpha == 0.0 && beta == 0.0,
        }
    }

    /// Angles attached to basis states `1..d`.
    pub fn angles(&self) -> Vec<f64> {
        match *self {
            Phase::QubitStab { k } => vec![k as f64 * PI / 2.0],
            Phase::QubitGen { alpha } => vec![alpha],
            Phase::QutritStab { a, b } => vec![a as f64 * TAU / 3.0, b as f64 * TAU / 3.0],
            Phase::QutritGen { alpha, beta } => vec![alpha, beta],
        }
    }

    fn from_angles(dim: Dim, angles: &[f64]) -> Phase {
        match dim {
            Dim::Qubit => Phase::qubit_angle(angles[0]),
            Dim::Qutrit => Phase::qutrit_angles(angles[0], angles[1]),
        }
    }

    /// `e^{iφ_j}` for basis index `j` (with `φ_0 = 0`).
    pub fn factor(&self, j: usize) -> Complex64 {
        if j == 0 {
            Complex64::new(1.0, 0.0)
        } else {
            match *self {
                // exact residues give cleaner floats
                Phase::QubitStab { k } => ExactScalar::i_pow((k as usize * j) as i64).to_complex(),
                Phase::QutritStab { a, b } => {
                    ExactScalar::omega([0, a, b][j] as i64).to_complex()
                }
                _ => Complex64::from_polar(1.0, self.angles()[j - 1]),
            }
        }
    }

    /// Exact `e^{iφ_j}` for stabilizer phases.
    pub fn exact_factor(&self, j: usize) -> Option<ExactScalar> {
        match *self {
            Phase::QubitStab { k } => Some(ExactScalar::i_pow(if j == 0 { 0 } else { k as i64 })),
            Phase::QutritStab { a, b } => Some(ExactScalar::omega([0, a, b][j] as i64)),
            _ => None,
        }
    }

    pub fn neg(&self) -> Phase {
        match *self {
            Phase::QubitStab { k } => Phase::qubit(-(k as i64)),
            Phase::QutritStab { a, b } => Phase::qutrit(-(a as i64), -(b as i64)),
            _ => {
                let v: Vec<f64> = self.angles().iter().map(|x| -x).collect();
                Phase::from_angles(self.dim(), &v)
            }
        }
    }

    /// Sum of two phases of the same dimension.
    pub fn add(&self, other: &Phase) -> Phase {
        assert_eq!(self.dim(), other.dim(), "adding phases of different dimension");
        match (*self, *other) {
            (Phase::QubitStab { k: x }, Phase::QubitStab { k: y }) => Phase::qubit(x as i64 + y as i64),
            (Phase::QutritStab { a, b }, Phase::QutritStab { a: c, b: d }) => {
                Phase::qutrit(a as i64 + c as i64, b as i64 + d as i64)
            }
            _ => {
                let v: Vec<f64> = self
                    .angles()
                    .iter()
                    .zip(other.angles())
                    .map(|(x, y)| x + y)
                    .collect();
                Phase::from_angles(self.dim(), &v)
            }
        }
    }

    /// Swaps the two qutrit phases; identity on qubit phases.
    pub fn swapped(&self) -> Phase {
        match *self {
            Phase::QutritStab { a, b } => Phase::QutritStab { a: b, b: a },
            Phase::QutritGen { alpha, beta } => Phase::QutritGen { alpha: beta, beta: alpha },
            p => p,
        }
    }

    /// For a qutrit stabilizer phase, the coefficients `(α, β)` of the
    /// quadratic `φ(s) = αs + βs²` over `Z₃` with `φ(1) = a`, `φ(2) = b`.
    pub fn qutrit_quadratic(&self) -> Option<(u8, u8)> {
        match *self {
            Phase::QutritStab { a, b } => {
                let (a, b) = (a as i64, b as i64);
                Some(((b - a).rem_euclid(3) as u8, (2 * a - b).rem_euclid(3) as u8))
            }
            _ => None,
        }
    }

    /// Qutrit phase adding `α s + β s²` to the current phase function.
    pub fn qutrit_from_quadratic(alpha: i64, beta: i64) -> Phase {
        Phase::qutrit(alpha + beta, 2 * alpha + beta)
    }
}

impl fmt::Display for Phase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Phase::QubitStab { k } => write!(f, "{k}π/2"),
            Phase::QubitGen { alpha } => write!(f, "{alpha:.6}"),
            Phase::QutritStab { a, b } => write!(f, "({a},{b})"),
            Phase::QutritGen { alpha, beta } => write!(f, "({alpha:.6},{beta:.6})"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn residues_are_canonical() {
        assert_eq!(Phase::qubit(-1), Phase::QubitStab { k: 3 });
        assert_eq!(Phase::qutrit(4, -1), Phase::QutritStab { a: 1, b: 2 });
        match Phase::qubit_angle(-PI) {
            Phase::QubitGen { alpha } => assert!((alpha - PI).abs() < 1e-12),
            _ => unreachable!(),
        }
    }

    #[test]
    fn quadratic_form_round_trip() {
        for a in 0..3 {
            for b in 0..3 {
                let p = Phase::qutrit(a, b);
                let (al, be) = p.qutrit_quadratic().unwrap();
                assert_eq!(Phase::qutrit_from_quadratic(al as i64, be as i64), p);
                for s in 0..3usize {
                    let expect = (al as usize * s + be as usize * s * s) % 3;
                    assert_eq!(p.exact_factor(s).unwrap(), ExactScalar::omega(expect as i64));
                }
            }
        }
    }

    #[test]
    fn negation_and_addition() {
        let p = Phase::qutrit(1, 2);
        assert!(p.add(&p.neg()).is_zero());
        assert_eq!(Phase::qubit(3).add(&Phase::qubit(2)), Phase::qubit(1));
    }
}
