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

//! Planar diagram codes, Tait graphs, and the Kauffman bracket.

use std::collections::BTreeMap;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{evaluate_potts, t_of_d, PottsValue, Sign, SignedGraph};
use crate::error::{Error, Result};

/// Most crossings the bracket state sum will expand.
pub const MAX_CROSSINGS: usize = 20;

/// A link diagram as a list of crossings. Each crossing lists its four arc
/// labels counterclockwise, starting at the incoming under-strand.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PdCode {
    pub crossings: Vec<[u32; 4]>,
}

impl PdCode {
    pub fn new(crossings: Vec<[u32; 4]>) -> Result<PdCode> {
        let pd = PdCode { crossings };
        pd.check()?;
        Ok(pd)
    }

    pub fn from_json(text: &str) -> Result<PdCode> {
        let pd: PdCode = serde_json::from_str(text).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            msg: e.to_string(),
        })?;
        pd.check()?;
        Ok(pd)
    }

    pub fn unknot() -> PdCode {
        PdCode { crossings: vec![] }
    }

    pub fn hopf() -> PdCode {
        PdCode {
            crossings: vec![[4, 1, 3, 2], [2, 3, 1, 4]],
        }
    }

    pub fn trefoil() -> PdCode {
        PdCode {
            crossings: vec![[1, 4, 2, 5], [3, 6, 4, 1], [5, 2, 6, 3]],
        }
    }

    pub fn check(&self) -> Result<()> {
        let mut count: BTreeMap<u32, usize> = BTreeMap::new();
        for x in &self.crossings {
            for &l in x {
                *count.entry(l).or_default() += 1;
            }
        }
        match count.iter().find(|(_, &n)| n != 2) {
            Some((l, n)) => Err(Error::Problem(format!("arc {l} appears {n} times"))),
            None => Ok(()),
        }
    }

    /// Sum of the crossing signs, with arcs numbered along the orientation.
    pub fn writhe(&self) -> i64 {
        self.crossings
            .iter()
            .map(|&[i, j, k, l]| {
                let (j, l) = (j as i64, l as i64);
                if i as i64 == j || k as i64 == l || j - l == 1 || l - j > 1 {
                    1
                } else {
                    -1
                }
            })
            .sum()
    }

    // The other occurrence of the arc at (crossing, position).
    fn partners(&self) -> BTreeMap<(usize, usize), (usize, usize)> {
        let mut seen: BTreeMap<u32, (usize, usize)> = BTreeMap::new();
        let mut out = BTreeMap::new();
        for (c, x) in self.crossings.iter().enumerate() {
            for (i, &l) in x.iter().enumerate() {
                if let Some(p) = seen.remove(&l) {
                    out.insert(p, (c, i));
                    out.insert((c, i), p);
                } else {
                    seen.insert(l, (c, i));
                }
            }
        }
        out
    }
}

/// Tait graph of the checkerboard shading.
///
/// Faces are traced as orbits of "follow the arc, then turn to the next
/// position counterclockwise". The face class containing the corner between
/// positions 0 and 1 of the first crossing is shaded. A crossing gives a `+`
/// edge when its shaded corners are those after the incoming under-strand
/// and after the outgoing under-strand, and a `-` edge otherwise.
pub fn pd_to_signed_graph(pd: &PdCode) -> Result<SignedGraph> {
    pd.check()?;
    if pd.crossings.is_empty() {
        return SignedGraph::new(1, vec![]);
    }
    let partner = pd.partners();
    // face id of every half-edge (crossing, outgoing position)
    let mut face: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut n_faces = 0;
    for c in 0..pd.crossings.len() {
        for i in 0..4 {
            if face.contains_key(&(c, i)) {
                continue;
            }
            let mut h = (c, i);
            while !face.contains_key(&h) {
                face.insert(h, n_faces);
                let (c2, j) = partner[&h];
                h = (c2, (j + 1) % 4);
            }
            n_faces += 1;
        }
    }
    // corner m lies between positions m and m + 1
    let corner = |c: usize, m: usize| face[&(c, (m + 1) % 4)];
    let mut colour: Vec<Option<bool>> = vec![None; n_faces];
    colour[corner(0, 0)] = Some(true);
    let mut changed = true;
    while changed {
        changed = false;
        for c in 0..pd.crossings.len() {
            for m in 0..4 {
                let (f, g) = (corner(c, m), corner(c, (m + 1) % 4));
                match (colour[f], colour[g]) {
                    (Some(a), None) => {
                        colour[g] = Some(!a);
                        changed = true;
                    }
                    (None, Some(b)) => {
                        colour[f] = Some(!b);
                        changed = true;
                    }
                    (Some(a), Some(b)) if a == b => {
                        return Err(Error::Problem("diagram has no checkerboard shading".into()));
                    }
                    _ => {}
                }
            }
        }
    }
    let mut index: BTreeMap<usize, usize> = BTreeMap::new();
    let mut vertex = |f: usize| {
        let n = index.len();
        *index.entry(f).or_insert(n)
    };
    let mut edges = Vec::new();
    for c in 0..pd.crossings.len() {
        let plus = colour[corner(c, 0)] == Some(true);
        let m = if plus { 0 } else { 1 };
        let (u, v) = (vertex(corner(c, m)), vertex(corner(c, m + 2)));
        edges.push((u, v, if plus { Sign::Plus } else { Sign::Minus }));
    }
    SignedGraph::new(index.len(), edges)
}

/// Laurent polynomial in one variable with integer coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct Laurent(pub BTreeMap<i32, i64>);

impl Laurent {
    pub fn monomial(coeff: i64, exp: i32) -> Laurent {
        let mut m = BTreeMap::new();
        if coeff != 0 {
            m.insert(exp, coeff);
        }
        Laurent(m)
    }

    pub fn from_terms(terms: &[(i64, i32)]) -> Laurent {
        let mut out = Laurent::default();
        for &(c, e) in terms {
            out.add_term(c, e);
        }
        out
    }

    fn add_term(&mut self, coeff: i64, exp: i32) {
        let e = self.0.entry(exp).or_insert(0);
        *e += coeff;
        if *e == 0 {
            self.0.remove(&exp);
        }
    }

    pub fn add(&self, other: &Laurent) -> Laurent {
        let mut out = self.clone();
        for (&e, &c) in &other.0 {
            out.add_term(c, e);
        }
        out
    }

    pub fn mul(&self, other: &Laurent) -> Laurent {
        let mut out = Laurent::default();
        for (&e1, &c1) in &self.0 {
            for (&e2, &c2) in &other.0 {
                out.add_term(c1 * c2, e1 + e2);
            }
        }
        out
    }

    pub fn eval(&self, x: Complex64) -> Complex64 {
        self.0.iter().map(|(&e, &c)| c as f64 * x.powi(e)).sum()
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("0");
        }
        let terms: Vec<String> = self.0.iter().rev().map(|(e, c)| format!("{c}A^{e}")).collect();
        f.write_str(&terms.join(" + "))
    }
}

fn find(parent: &mut BTreeMap<u32, u32>, x: u32) -> u32 {
    let p = parent[&x];
    if p == x {
        return x;
    }
    let r = find(parent, p);
    parent.insert(x, r);
    r
}

/// Kauffman bracket by the state sum over all smoothings, normalised so
/// that the crossingless unknot is 1. At a crossing `(a, b, c, d)` the
/// A-smoothing joins `a`–`b` and `c`–`d`.
pub fn kauffman_bracket(pd: &PdCode) -> Result<Laurent> {
    pd.check()?;
    let n = pd.crossings.len();
    if n > MAX_CROSSINGS {
        return Err(Error::TooLarge { rank: n, cap: MAX_CROSSINGS });
    }
    let loop_value = Laurent::from_terms(&[(-1, 2), (-1, -2)]);
    let mut powers = vec![Laurent::monomial(1, 0)];
    for k in 1..=n + 1 {
        powers.push(powers[k - 1].mul(&loop_value));
    }
    let mut total = Laurent::default();
    for state in 0u64..1 << n {
        let mut parent: BTreeMap<u32, u32> = BTreeMap::new();
        for x in &pd.crossings {
            for &l in x {
                parent.insert(l, l);
            }
        }
        let mut a_count = 0i32;
        for (c, &[a, b, cc, d]) in pd.crossings.iter().enumerate() {
            let pairs = if state >> c & 1 == 0 {
                a_count += 1;
                [(a, b), (cc, d)]
            } else {
                [(a, d), (b, cc)]
            };
            for (x, y) in pairs {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                parent.insert(rx, ry);
            }
        }
        let labels: Vec<u32> = parent.keys().copied().collect();
        let mut roots: Vec<u32> = labels.into_iter().map(|l| find(&mut parent, l)).collect();
        roots.sort();
        roots.dedup();
        let loops = roots.len().max(1);
        let b_count = n as i32 - a_count;
        total = total.add(&powers[loops - 1].mul(&Laurent::monomial(1, a_count - b_count)));
    }
    Ok(total)
}

/// Jones polynomial at `t(d)`, with the Potts value of the Tait graph
/// reported alongside.
#[derive(Clone, Debug, Serialize)]
pub struct JonesReport {
    pub bracket: Laurent,
    pub writhe: i64,
    pub t: Complex64,
    pub value: Complex64,
    pub potts: Option<PottsValue>,
}

/// `V(t) = (-A³)^{-w}·⟨L⟩` at `A = t^{-1/4}` (principal branch) for
/// `t = t(d)`, `d ∈ 1..=4`.
pub fn jones_at_root(pd: &PdCode, d: u32) -> Result<JonesReport> {
    if !(1..=4).contains(&d) {
        return Err(Error::Problem(format!("t({d}) is not a lattice root of unity")));
    }
    let bracket = kauffman_bracket(pd)?;
    let writhe = pd.writhe();
    let t = t_of_d(d);
    let a = Complex64::from_polar(1.0, -t.arg() / 4.0);
    let framing = (-a.powi(3)).powi(-writhe as i32);
    let potts = if d >= 2 {
        Some(evaluate_potts(&pd_to_signed_graph(pd)?, d)?)
    } else {
        None
    };
    Ok(JonesReport {
        value: framing * bracket.eval(a),
        bracket,
        writhe,
        t,
        potts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arc_counts_checked() {
        assert!(PdCode::new(vec![[1, 2, 3, 4]]).is_err());
        assert!(PdCode::from_json("[[1,1,2,2]]").is_ok());
    }

    #[test]
    fn unknot_graph_and_bracket() {
        let g = pd_to_signed_graph(&PdCode::unknot()).unwrap();
        assert_eq!((g.vertices, g.edges.len()), (1, 0));
        assert_eq!(kauffman_bracket(&PdCode::unknot()).unwrap(), Laurent::monomial(1, 0));
    }

    #[test]
    fn hopf_bracket() {
        let b = kauffman_bracket(&PdCode::hopf()).unwrap();
        assert_eq!(b, Laurent::from_terms(&[(-1, 4), (-1, -4)]));
    }

    #[test]
    fn tait_graph_shapes() {
        let h = pd_to_signed_graph(&PdCode::hopf()).unwrap();
        assert_eq!((h.vertices, h.edges.len()), (2, 2));
        let t = pd_to_signed_graph(&PdCode::trefoil()).unwrap();
        assert_eq!(t.edges.len(), 3);
        assert!(t.vertices == 2 || t.vertices == 3);
        assert!(t.edges.iter().all(|e| e.2 == t.edges[0].2));
    }

    #[test]
    fn kink_is_a_loop_or_bridge() {
        let g = pd_to_signed_graph(&PdCode::new(vec![[1, 1, 2, 2]]).unwrap()).unwrap();
        assert_eq!(g.edges.len(), 1);
    }
}
