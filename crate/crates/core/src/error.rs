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

use thiserror::Error;

use crate::diagram::{NodeId, Violation};
use crate::semantics::Tensor;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("unsupported dimension {0}")]
    BadDimension(u32),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("arity mismatch: {0} outputs cannot feed {1} inputs")]
    ArityMismatch(usize, usize),
    #[error("{0}")]
    Violation(Violation),
    #[error("invalid diagram: {0}")]
    Invalid(String),
    #[error("parse error at line {line}, column {column}: {msg}")]
    Parse { line: usize, column: usize, msg: String },
    #[error("schema mismatch: {0}")]
    SchemaVersion(String),
    #[error("tensor too large for the oracle: rank {rank} exceeds cap {cap}")]
    TooLarge { rank: usize, cap: usize },
    #[error("diagram is not closed")]
    NotClosed,
    #[error("shape mismatch")]
    ShapeMismatch,
    #[error("unknown node {0}")]
    UnknownNode(NodeId),
    #[error("node {0} is attached to a boundary")]
    BoundaryNode(NodeId),
    #[error("node {0} does not carry the phase this rule needs")]
    WrongPhase(NodeId),
    #[error("nodes {0} and {1} are not adjacent")]
    NotAdjacent(NodeId, NodeId),
    #[error("non-stabilizer phase on node {0}")]
    NonStabilizer(NodeId),
    /// Carries the two interpretations as a counterexample.
    #[error("unsound rule {rule} at parameters {params}")]
    UnsoundRule {
        rule: String,
        params: String,
        lhs: Box<Tensor>,
        rhs: Box<Tensor>,
    },
    #[error("calibration failed for {rule} [{params}]: {reason}")]
    Calibration { rule: String, params: String, reason: String },
    #[error("{0}")]
    Problem(String),
}
