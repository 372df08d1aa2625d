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

//! Reference computations shared by the integration tests. None of these
//! go through the rewriting code.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;

/// Laurent polynomial in `A` as exponent → coefficient.
pub type Poly = BTreeMap<i32, i64>;

fn poly_mul(x: &Poly, y: &Poly) -> Poly {
    let mut out = Poly::new();
    for (&e1, &c1) in x {
        for (&e2, &c2) in y {
            *out.entry(e1 + e2).or_default() += c1 * c2;
        }
    }
    out.retain(|_, c| *c != 0);
    out
}

fn poly_add(x: &mut Poly, y: &Poly) {
    for (&e, &c) in y {
        *x.entry(e).or_default() += c;
    }
    x.retain(|_, c| *c != 0);
}

// Number of closed loops formed by a perfect matching of arc ends, found
// by walking: each label has two ends joined across the arc itself.
fn count_loops(pairs: &[(u32, u32)]) -> usize {
    let mut adj: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
    for &(x, y) in pairs {
        adj.entry(x).or_default().push(y);
        adj.entry(y).or_default().push(x);
    }
    let mut seen = BTreeSet::new();
    let mut loops = 0;
    for &start in adj.keys() {
        if !seen.insert(start) {
            continue;
        }
        loops += 1;
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in &adj[&v] {
                if seen.insert(w) {
                    stack.push(w);
                }
            }
        }
    }
    loops
}

/// Kauffman bracket of a PD code by expanding one crossing at a time,
/// with `⟨unknot⟩ = 1`, `⟨X⟩ = A⟨A-smoothing⟩ + A⁻¹⟨B-smoothing⟩`, and
/// the A-smoothing of `(a, b, c, d)` joining `a b` and `c d`.
pub fn bracket_by_expansion(crossings: &[[u32; 4]]) -> Poly {
    fn go(rest: &[[u32; 4]], pairs: &mut Vec<(u32, u32)>, a_power: i32) -> Poly {
        match rest.split_first() {
            None => {
                let loops = count_loops(pairs).max(1);
                let delta: Poly = [(2, -1), (-2, -1)].into_iter().collect();
                let mut p: Poly = [(a_power, 1)].into_iter().collect();
                for _ in 1..loops {
                    p = poly_mul(&p, &delta);
                }
                p
            }
            Some((&[a, b, c, d], tail)) => {
                let n = pairs.len();
                pairs.extend([(a, b), (c, d)]);
                let mut total = go(tail, pairs, a_power + 1);
                pairs.truncate(n);
                pairs.extend([(a, d), (b, c)]);
                poly_add(&mut total, &go(tail, pairs, a_power - 1));
                pairs.truncate(n);
                total
            }
        }
    }
    go(crossings, &mut Vec::new(), 0)
}

pub fn eval_poly(p: &Poly, x: Complex64) -> Complex64 {
    p.iter().map(|(&e, &c)| x.powi(e) * c as f64).sum()
}

/// Chromatic polynomial at `k` by deletion and contraction.
pub fn chromatic(vertices: usize, edges: &[(usize, usize)], k: i64) -> i64 {
    fn go(n: usize, edges: BTreeSet<(usize, usize)>, k: i64) -> i64 {
        let Some(&(u, v)) = edges.iter().next() else {
            return k.pow(n as u32);
        };
        let mut deleted = edges.clone();
        deleted.remove(&(u, v));
        // contract v into u, then renumber the last vertex into v's slot
        let last = n - 1;
        let relabel = |x: usize| {
            let x = if x == v { u } else { x };
            if x == last {
                v
            } else {
                x
            }
        };
        let contracted: BTreeSet<(usize, usize)> = deleted
            .iter()
            .map(|&(x, y)| (relabel(x), relabel(y)))
            .filter(|(x, y)| x != y)
            .map(|(x, y)| (x.min(y), x.max(y)))
            .collect();
        go(n, deleted, k) - go(n - 1, contracted, k)
    }
    let set = edges.iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
    go(vertices, set, k)
}

/// Every simple graph on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Vec<(usize, usize)>> {
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << slots.len()).map(move |mask| {
        slots
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect()
    })
}

pub fn close(x: Complex64, y: Complex64, tol: f64) -> bool {
    (x - y).norm() <= tol * x.norm().max(y.norm()).max(1.0)
}
