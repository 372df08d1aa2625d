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

//! Counting proper colourings.

use std::collections::BTreeSet;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::Method;
use crate::diagram::{Diagram, DiagramBuilder};
use crate::error::{Error, Result};
use crate::phase::Phase;
use crate::scalar::ExactScalar;
use crate::semantics::{oracle_cap, LabelledTensor, TensorNetwork};
use crate::trace::Trace;
use crate::{qubit, Dim};

/// Undirected graph without self-loops.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Graph {
    pub vertices: usize,
    pub edges: Vec<(usize, usize)>,
}

impl Graph {
    pub fn new(vertices: usize, edges: Vec<(usize, usize)>) -> Result<Graph> {
        let g = Graph { vertices, edges };
        g.check()?;
        Ok(g)
    }

    pub fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph { vertices: n, edges }
    }

    pub fn check(&self) -> Result<()> {
        for &(u, v) in &self.edges {
            if u >= self.vertices || v >= self.vertices {
                return Err(Error::Problem(format!("edge ({u}, {v}) has a dangling endpoint")));
            }
            if u == v {
                return Err(Error::Problem(format!("self-loop at {u}")));
            }
        }
        Ok(())
    }
}

/// A colouring instance ready for evaluation.
#[derive(Clone, Debug)]
pub enum ColouringEncoding {
    /// Closed qubit diagram: a phaseless spider per vertex and a Pauli X
    /// per edge.
    Diagram(Diagram),
    /// Raw network: a copy tensor per vertex and a `J - I` matrix per edge.
    Network(TensorNetwork),
}

/// Encodes the number of proper `d`-colourings of `g`.
pub fn colouring_diagram(g: &Graph, d: u32) -> Result<ColouringEncoding> {
    g.check()?;
    if d < 2 {
        return Err(Error::BadDimension(d));
    }
    if d == 2 {
        let mut b = DiagramBuilder::new(Dim::Qubit);
        let vs: Vec<_> = (0..g.vertices).map(|_| b.z0()).collect();
        for &(u, v) in &g.edges {
            let x = b.x(Phase::qubit(2));
            b.wire(vs[u], x, 0).wire(x, vs[v], 0);
        }
        return Ok(ColouringEncoding::Diagram(b.build()?));
    }
    let d = d as usize;
    let mut legs: Vec<Vec<usize>> = vec![Vec::new(); g.vertices];
    let mut net = TensorNetwork::new(d);
    for (e, &(u, v)) in g.edges.iter().enumerate() {
        let (a, b) = (2 * e, 2 * e + 1);
        legs[u].push(a);
        legs[v].push(b);
        net.push(LabelledTensor::from_fn(d, &[a, b], |x| {
            Complex64::new(if x[0] == x[1] { 0.0 } else { 1.0 }, 0.0)
        }));
    }
    for l in &legs {
        net.push(LabelledTensor::from_fn(d, l, |x| {
            let value = match x.first() {
                None => d as f64,
                Some(&c) => x.iter().all(|&y| y == c) as u8 as f64,
            };
            Complex64::new(value, 0.0)
        }));
    }
    Ok(ColouringEncoding::Network(net))
}

/// A colouring count and how it was obtained.
#[derive(Clone, Debug, Serialize)]
pub struct ColouringCount {
    pub count: u64,
    pub method: Method,
    #[serde(skip)]
    pub trace: Option<Trace>,
}

/// Number of proper `d`-colourings. `d = 2` is simplified as a stabilizer
/// diagram; larger `d` is contracted by eliminating one vertex at a time,
/// each intermediate table over at most the oracle cap of vertices.
pub fn count_colourings(g: &Graph, d: u32) -> Result<ColouringCount> {
    g.check()?;
    match colouring_diagram(g, d)? {
        ColouringEncoding::Diagram(a) => {
            let s = qubit::simplify_qubit(&a)?;
            if s.partial {
                return Err(Error::Problem("stabilizer simplification did not finish".into()));
            }
            let z = s.scalar.to_complex();
            let n = z.re.round();
            if n < 0.0 || s.scalar != ExactScalar::from_int(n as i64) {
                return Err(Error::Problem(format!("colouring count {} is not a natural number", s.scalar)));
            }
            Ok(ColouringCount {
                count: n as u64,
                method: Method::Stabilizer,
                trace: Some(s.trace),
            })
        }
        ColouringEncoding::Network(_) => Ok(ColouringCount {
            count: eliminate(g, d as usize, oracle_cap(d as usize))?,
            method: Method::Oracle,
            trace: None,
        }),
    }
}

// A table over a set of vertices, indexed in the order of `scope`.
struct Factor {
    scope: Vec<usize>,
    table: Vec<u64>,
}

impl Factor {
    fn at(&self, d: usize, colour: &[usize]) -> u64 {
        self.table[self.scope.iter().fold(0, |acc, &v| acc * d + colour[v])]
    }
}

// Sum-product variable elimination with exact integer tables.
fn eliminate(g: &Graph, d: usize, cap: usize) -> Result<u64> {
    let mut factors: Vec<Factor> = g
        .edges
        .iter()
        .map(|&(u, v)| Factor {
            scope: vec![u, v],
            table: (0..d * d).map(|i| (i / d != i % d) as u64).collect(),
        })
        .collect();
    let mut free: u64 = 1;
    let mut left: BTreeSet<usize> = (0..g.vertices).collect();
    while !left.is_empty() {
        let neighbourhood = |v: usize, fs: &[Factor]| -> BTreeSet<usize> {
            fs.iter().filter(|f| f.scope.contains(&v)).flat_map(|f| f.scope.iter().copied()).filter(|&u| u != v).collect()
        };
        let v = *left.iter().min_by_key(|&&v| neighbourhood(v, &factors).len()).expect("nonempty");
        left.remove(&v);
        let scope: Vec<usize> = neighbourhood(v, &factors).into_iter().collect();
        if scope.len() > cap {
            return Err(Error::TooLarge { rank: scope.len(), cap });
        }
        let (touching, rest): (Vec<Factor>, Vec<Factor>) = factors.into_iter().partition(|f| f.scope.contains(&v));
        factors = rest;
        if touching.is_empty() {
            free *= d as u64;
            continue;
        }
        let mut colour = vec![0usize; g.vertices];
        let size = d.pow(scope.len() as u32);
        let mut table = vec![0u64; size];
        for (idx, slot) in table.iter_mut().enumerate() {
            let mut r = idx;
            for &u in scope.iter().rev() {
                colour[u] = r % d;
                r /= d;
            }
            for c in 0..d {
                colour[v] = c;
                *slot += touching.iter().map(|f| f.at(d, &colour)).product::<u64>();
            }
        }
        factors.push(Factor { scope, table });
    }
    Ok(free * factors.iter().map(|f| f.table[0]).product::<u64>())
}

/// Number of proper colourings by enumeration.
pub fn brute_force_colourings(g: &Graph, d: u32) -> u64 {
    let n = g.vertices;
    let mut colour = vec![0u32; n];
    let mut count = 0;
    loop {
        if g.edges.iter().all(|&(u, v)| colour[u] != colour[v]) {
            count += 1;
        }
        let mut k = 0;
        loop {
            if k == n {
                return count;
            }
            colour[k] += 1;
            if colour[k] < d {
                break;
            }
            colour[k] = 0;
            k += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn triangle_counts() {
        let k3 = Graph::complete(3);
        assert_eq!(count_colourings(&k3, 3).unwrap().count, 6);
        assert_eq!(count_colourings(&k3, 2).unwrap().count, 0);
        assert_eq!(brute_force_colourings(&k3, 3), 6);
    }

    #[test]
    fn single_vertex_and_empty() {
        let one = Graph::new(1, vec![]).unwrap();
        for d in 2..=4 {
            assert_eq!(count_colourings(&one, d).unwrap().count, d as u64);
        }
        let empty = Graph::new(0, vec![]).unwrap();
        assert_eq!(count_colourings(&empty, 3).unwrap().count, 1);
    }

    #[test]
    fn network_matches_elimination() {
        let g = Graph::new(4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]).unwrap();
        let ColouringEncoding::Network(net) = colouring_diagram(&g, 3).unwrap() else {
            panic!("d = 3 is a raw network");
        };
        let z = net.contract(9).unwrap()[0];
        assert!((z.re - brute_force_colourings(&g, 3) as f64).abs() < 1e-9);
    }

    #[test]
    fn self_loops_rejected() {
        assert!(Graph::new(2, vec![(1, 1)]).is_err());
    }
}
