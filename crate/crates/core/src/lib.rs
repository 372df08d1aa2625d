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

//! Rewriting-based simplification of closed qubit and qutrit ZX-diagrams.
//!
//! A [`Diagram`] is an open port graph of Z/X spiders and Hadamard boxes
//! carrying an exact global scalar. Closed stabilizer diagrams are reduced
//! by graph-like rewriting ([`qubit::simplify_qubit`],
//! [`qutrit::simplify_qutrit`]) to at most one spider, and the scalar they
//! denote is returned exactly as an [`ExactScalar`]. The dense tensor
//! semantics in [`semantics`] serves as a brute-force reference for every
//! rule; [`ledger`] pins the multiplicative factor of each rewrite.

pub mod catalogue;
pub mod diagram;
pub mod error;
pub mod graph_like;
pub mod ledger;
pub mod phase;
pub mod problems;
pub mod qubit;
pub mod qutrit;
pub mod random;
pub mod scalar;
pub mod semantics;
pub mod trace;

use serde::{Deserialize, Serialize};

pub use diagram::{Diagram, DiagramBuilder, NodeId, NodeKind, Port, Side};
pub use error::{Error, Result};

pub use graph_like::Simplified;
pub use phase::Phase;
pub use scalar::ExactScalar;

/// Simplifies a diagram with the simplifier of its dimension.
pub fn simplify(a: &Diagram) -> Result<Simplified> {
    match a.dim() {
        Dim::Qubit => qubit::simplify_qubit(a),
        Dim::Qutrit => qutrit::simplify_qutrit(a),
    }
}

/// Wire dimension.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "u8", into = "u8")]
pub enum Dim {
    Qubit,
    Qutrit,
}

impl Dim {
    pub fn value(self) -> usize {
        match self {
            Dim::Qubit => 2,
            Dim::Qutrit => 3,
        }
    }

    pub fn from_value(d: u32) -> Result<Dim> {
        match d {
            2 => Ok(Dim::Qubit),
            3 => Ok(Dim::Qutrit),
            _ => Err(Error::BadDimension(d)),
        }
    }
}

impl TryFrom<u8> for Dim {
    type Error = String;
    fn try_from(d: u8) -> std::result::Result<Self, String> {
        Dim::from_value(d as u32).map_err(|e| e.to_string())
    }
}

impl From<Dim> for u8 {
    fn from(d: Dim) -> u8 {
        d.value() as u8
    }
}
