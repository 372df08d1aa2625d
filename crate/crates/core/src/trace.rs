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

//! Step traces of the simplifiers, written as JSON lines.

use serde::Serialize;

use crate::diagram::NodeId;
use crate::scalar::ExactScalar;

/// One applied rewrite.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Step {
    pub step: usize,
    pub rule: String,
    /// Parameter signature used to look up the rule's factor.
    pub signature: String,
    /// Number of neighbours the rule touched.
    pub k: usize,
    pub nodes: Vec<usize>,
    pub factor: ExactScalar,
    /// Number of edge weights written by the rule.
    pub edge_updates: usize,
}

impl Step {
    pub(crate) fn new(rule: &str, signature: String, k: usize, nodes: &[NodeId]) -> Step {
        Step {
            step: 0,
            rule: rule.to_string(),
            signature,
            k,
            nodes: nodes.iter().map(|n| n.0).collect(),
            factor: ExactScalar::one(),
            edge_updates: 0,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Trace {
    pub steps: Vec<Step>,
}

impl Trace {
    pub fn push(&mut self, mut s: Step) {
        s.step = self.steps.len();
        self.steps.push(s);
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn max_edge_updates(&self) -> usize {
        self.steps.iter().map(|s| s.edge_updates).max().unwrap_or(0)
    }

    pub fn to_json_lines(&self) -> String {
        let mut out = String::new();
        for s in &self.steps {
            out.push_str(&serde_json::to_string(s).expect("step serialises"));
            out.push('\n');
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steps_are_numbered() {
        let mut t = Trace::default();
        t.push(Step::new("a", "x".into(), 0, &[NodeId(3)]));
        t.push(Step::new("b", "y".into(), 1, &[]));
        assert_eq!(t.steps[1].step, 1);
        let lines = t.to_json_lines();
        assert_eq!(lines.lines().count(), 2);
        assert!(lines.contains("\"rule\":\"a\""));
    }
}
