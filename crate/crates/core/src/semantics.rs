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

//! Dense tensor semantics, used as the brute-force reference.
//!
//! Diagrams are translated into a labelled tensor network and contracted
//! greedily, always merging the pair of tensors whose product has the
//! smallest rank. A label may be shared by any number of tensors: every
//! `Z` spider becomes a single label shared by its neighbours. Any
//! intermediate tensor whose rank exceeds the oracle cap aborts with
//! [`Error::TooLarge`].

use std::collections::BTreeMap;
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::diagram::{Diagram, NodeKind, Port};
use crate::error::{Error, Result};
use crate::Dim;

/// Environment variable overriding the maximal tensor rank of the oracle.
pub const CAP_VAR: &str = "ZXSIMP_ORACLE_CAP";

/// Maximal rank of any tensor the oracle will materialise.
pub fn oracle_cap(d: usize) -> usize {
    if let Some(n) = std::env::var(CAP_VAR).ok().and_then(|v| v.trim().parse().ok()) {
        return n;
    }
    match d {
        2 => 12,
        3 => 9,
        _ => (20.0 / (d as f64).log2()).floor() as usize,
    }
}

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The normalised Fourier matrix `F[j][k] = e^{2πi jk/d}/√d`; for `d = 2`
/// this is the Hadamard gate.
pub fn fourier(d: usize) -> Vec<Vec<Complex64>> {
    let n = (d as f64).sqrt();
    (0..d)
        .map(|j| {
            (0..d)
                .map(|k| Complex64::from_polar(1.0 / n, 2.0 * PI * ((j * k) % d) as f64 / d as f64))
                .collect()
        })
        .collect()
}

/// Matrix (`[out][in]`) of the Hadamard box `H^h`.
///
/// For qutrits `H` is fixed by its Euler decomposition into `Z(2,2)`,
/// `X(2,2)`, `Z(2,2)`, which gives `H = -i F`, and `h = 2` is `H†`.
pub fn hadamard_matrix(dim: Dim, h: u8) -> Vec<Vec<Complex64>> {
    let d = dim.value();
    let f = fourier(d);
    match (dim, h % d as u8) {
        (_, 0) => (0..d)
            .map(|j| (0..d).map(|k| if j == k { c(1.0, 0.0) } else { c(0.0, 0.0) }).collect())
            .collect(),
        (Dim::Qubit, _) => f,
        (Dim::Qutrit, 1) => f.iter().map(|r| r.iter().map(|z| z * c(0.0, -1.0)).collect()).collect(),
        (Dim::Qutrit, _) => f
            .iter()
            .map(|r| r.iter().map(|z| z.conj() * c(0.0, 1.0)).collect())
            .collect(),
    }
}

/// A dense tensor with `n_out` output axes followed by `n_in` input axes,
/// all of extent `d`, stored row-major (first axis most significant).
#[derive(Clone, Debug, PartialEq)]
pub struct Tensor {
    d: usize,
    n_out: usize,
    n_in: usize,
    data: Vec<Complex64>,
}

impl Tensor {
    pub fn new(d: usize, n_out: usize, n_in: usize, data: Vec<Complex64>) -> Result<Tensor> {
        if data.len() != d.pow((n_out + n_in) as u32) {
            return Err(Error::ShapeMismatch);
        }
        Ok(Tensor { d, n_out, n_in, data })
    }

    pub fn scalar(z: Complex64) -> Tensor {
        Tensor {
            d: 2,
            n_out: 0,
            n_in: 0,
            data: vec![z],
        }
    }

    pub fn from_matrix(m: &[Vec<Complex64>]) -> Tensor {
        let d = m.len();
        Tensor {
            d,
            n_out: 1,
            n_in: 1,
            data: m.iter().flatten().copied().collect(),
        }
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn n_out(&self) -> usize {
        self.n_out
    }

    pub fn n_in(&self) -> usize {
        self.n_in
    }

    pub fn shape(&self) -> Vec<usize> {
        vec![self.d; self.n_out + self.n_in]
    }

    pub fn data(&self) -> &[Complex64] {
        &self.data
    }

    fn rows(&self) -> usize {
        self.d.pow(self.n_out as u32)
    }

    fn cols(&self) -> usize {
        self.d.pow(self.n_in as u32)
    }

    /// Entry at the given output and input indices.
    pub fn get(&self, outs: &[usize], ins: &[usize]) -> Complex64 {
        let idx = outs.iter().chain(ins).fold(0, |acc, &v| acc * self.d + v);
        self.data[idx]
    }

    /// The single entry of a rank-0 tensor.
    pub fn as_scalar(&self) -> Option<Complex64> {
        (self.n_out + self.n_in == 0).then(|| self.data[0])
    }

    pub fn scale(&self, z: Complex64) -> Tensor {
        Tensor {
            data: self.data.iter().map(|x| x * z).collect(),
            ..self.clone()
        }
    }

    /// Matrix product `self · first` (apply `first`, then `self`).
    pub fn matmul(&self, first: &Tensor) -> Result<Tensor> {
        if self.n_in != first.n_out || (self.d != first.d && self.n_in > 0) {
            return Err(Error::ShapeMismatch);
        }
        let (r, k, cc) = (self.rows(), self.cols(), first.cols());
        let mut data = vec![c(0.0, 0.0); r * cc];
        for i in 0..r {
            for m in 0..k {
                let a = self.data[i * k + m];
                if a == c(0.0, 0.0) {
                    continue;
                }
                for j in 0..cc {
                    data[i * cc + j] += a * first.data[m * cc + j];
                }
            }
        }
        Ok(Tensor {
            d: self.d,
            n_out: self.n_out,
            n_in: first.n_in,
            data,
        })
    }

    /// Tensor product with the axes of `self` before those of `other`,
    /// within outputs and within inputs.
    pub fn kron(&self, other: &Tensor) -> Tensor {
        let d = if self.n_out + self.n_in > 0 { self.d } else { other.d };
        let (r1, c1, r2, c2) = (self.rows(), self.cols(), other.rows(), other.cols());
        let mut data = vec![c(0.0, 0.0); r1 * r2 * c1 * c2];
        for i1 in 0..r1 {
            for i2 in 0..r2 {
                for j1 in 0..c1 {
                    for j2 in 0..c2 {
                        data[(i1 * r2 + i2) * (c1 * c2) + j1 * c2 + j2] =
                            self.data[i1 * c1 + j1] * other.data[i2 * c2 + j2];
                    }
                }
            }
        }
        Tensor {
            d,
            n_out: self.n_out + other.n_out,
            n_in: self.n_in + other.n_in,
            data,
        }
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> Tensor {
        let (r, cc) = (self.rows(), self.cols());
        let mut data = vec![c(0.0, 0.0); r * cc];
        for i in 0..r {
            for j in 0..cc {
                data[j * r + i] = self.data[i * cc + j].conj();
            }
        }
        Tensor {
            d: self.d,
            n_out: self.n_in,
            n_in: self.n_out,
            data,
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    /// Entrywise closeness relative to the larger of the two norms.
    pub fn approx_eq(&self, other: &Tensor, tol: f64) -> bool {
        self.shape() == other.shape() && {
            let scale = self.max_abs().max(other.max_abs()).max(1.0);
            self.data
                .iter()
                .zip(&other.data)
                .all(|(a, b)| (a - b).norm() <= tol * scale)
        }
    }
}

/// Outcome of comparing two tensors up to a scalar.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Proportionality {
    /// `x = λ·y`.
    Ratio(Complex64),
    NotProportional,
    BothZero,
}

impl Proportionality {
    pub fn ratio(&self) -> Option<Complex64> {
        match *self {
            Proportionality::Ratio(r) => Some(r),
            _ => None,
        }
    }

    pub fn is_proportional(&self) -> bool {
        !matches!(self, Proportionality::NotProportional)
    }
}

/// Finds `λ` with `x = λ·y` up to relative tolerance `tol`.
pub fn proportional_ratio(x: &Tensor, y: &Tensor, tol: f64) -> Result<Proportionality> {
    if x.shape() != y.shape() || (x.d != y.d && !x.shape().is_empty()) {
        return Err(Error::ShapeMismatch);
    }
    let (mx, my) = (x.max_abs(), y.max_abs());
    if mx < tol && my < tol {
        return Ok(Proportionality::BothZero);
    }
    if my < tol || mx < tol {
        return Ok(Proportionality::NotProportional);
    }
    let pivot = (0..y.data.len())
        .max_by(|&a, &b| y.data[a].norm().total_cmp(&y.data[b].norm()))
        .expect("nonempty tensor");
    let lambda = x.data[pivot] / y.data[pivot];
    let scale = mx.max(my);
    let ok = x
        .data
        .iter()
        .zip(&y.data)
        .all(|(a, b)| (a - lambda * b).norm() <= tol * scale);
    Ok(if ok {
        Proportionality::Ratio(lambda)
    } else {
        Proportionality::NotProportional
    })
}

/// A tensor whose axes are named by labels. Tensors sharing a label are
/// evaluated at equal indices along it; a label is summed over once no
/// tensor outside the contracted part carries it.
#[derive(Clone, Debug)]
pub struct LabelledTensor {
    labels: Vec<usize>,
    data: Vec<Complex64>,
}

impl LabelledTensor {
    /// Builds a tensor from its entry function over `legs`. A label given
    /// more than once is a single axis (the diagonal).
    pub fn from_fn(d: usize, legs: &[usize], f: impl Fn(&[usize]) -> Complex64) -> LabelledTensor {
        let mut labels: Vec<usize> = Vec::new();
        for &l in legs {
            if !labels.contains(&l) {
                labels.push(l);
            }
        }
        let pos: Vec<usize> = legs.iter().map(|l| labels.iter().position(|m| m == l).unwrap()).collect();
        let mut data = Vec::with_capacity(d.pow(labels.len() as u32));
        let mut vals = vec![0usize; labels.len()];
        let mut leg_vals = vec![0usize; legs.len()];
        for idx in 0..d.pow(labels.len() as u32) {
            let mut r = idx;
            for v in vals.iter_mut().rev() {
                *v = r % d;
                r /= d;
            }
            for (lv, &p) in leg_vals.iter_mut().zip(&pos) {
                *lv = vals[p];
            }
            data.push(f(&leg_vals));
        }
        LabelledTensor { labels, data }
    }

    pub fn labels(&self) -> &[usize] {
        &self.labels
    }

    // Sums out the labels in `gone`.
    fn sum_out(&self, d: usize, gone: &[usize]) -> LabelledTensor {
        if gone.is_empty() {
            return self.clone();
        }
        let kept: Vec<usize> = self.labels.iter().filter(|l| !gone.contains(l)).copied().collect();
        let order: Vec<usize> = kept.iter().chain(gone).copied().collect();
        let p = permute(d, self, &order);
        let inner = d.pow(gone.len() as u32);
        let data = p.chunks(inner).map(|c| c.iter().sum()).collect();
        LabelledTensor { labels: kept, data }
    }
}

/// A closed or open tensor network over wires of extent `d`.
#[derive(Clone, Debug)]
pub struct TensorNetwork {
    pub d: usize,
    pub tensors: Vec<LabelledTensor>,
    /// Labels left open, in the order of the result's axes. Each must be
    /// carried by exactly one tensor.
    pub open: Vec<usize>,
    pub factor: Complex64,
}

impl TensorNetwork {
    pub fn new(d: usize) -> Self {
        TensorNetwork {
            d,
            tensors: Vec::new(),
            open: Vec::new(),
            factor: c(1.0, 0.0),
        }
    }

    pub fn push(&mut self, t: LabelledTensor) {
        self.tensors.push(t);
    }

    /// Contracts everything; the result's axes follow `open`.
    pub fn contract(&self, cap: usize) -> Result<Vec<Complex64>> {
        let d = self.d;
        let count = |ts: &[LabelledTensor], l: usize| ts.iter().filter(|t| t.labels.contains(&l)).count();
        let mut ts: Vec<LabelledTensor> = Vec::with_capacity(self.tensors.len());
        for t in &self.tensors {
            let lonely: Vec<usize> = t
                .labels
                .iter()
                .filter(|&&l| !self.open.contains(&l) && count(&self.tensors, l) == 1)
                .copied()
                .collect();
            ts.push(t.sum_out(d, &lonely));
        }
        for t in &ts {
            if t.labels.len() > cap {
                return Err(Error::TooLarge {
                    rank: t.labels.len(),
                    cap,
                });
            }
        }
        loop {
            let mut best: Option<(usize, usize, usize)> = None;
            for i in 0..ts.len() {
                for j in i + 1..ts.len() {
                    let (a, b) = (&ts[i], &ts[j]);
                    if !a.labels.iter().any(|l| b.labels.contains(l)) {
                        continue;
                    }
                    let rank = a
                        .labels
                        .iter()
                        .chain(b.labels.iter().filter(|l| !a.labels.contains(l)))
                        .filter(|&&l| self.open.contains(&l) || count(&ts, l) > 2 || !(a.labels.contains(&l) && b.labels.contains(&l)))
                        .count();
                    if best.is_none_or(|(r, ..)| rank < r) {
                        best = Some((rank, i, j));
                    }
                }
            }
            let Some((rank, i, j)) = best else { break };
            if rank > cap {
                return Err(Error::TooLarge { rank, cap });
            }
            let b = ts.swap_remove(j);
            let a = ts.swap_remove(i);
            let summed: Vec<usize> = a
                .labels
                .iter()
                .filter(|l| b.labels.contains(l) && !self.open.contains(l) && count(&ts, **l) == 0)
                .copied()
                .collect();
            ts.push(contract_pair(d, &a, &b, &summed));
        }
        // disconnected pieces: scalars first, then outer products
        ts.sort_by_key(|t| t.labels.len());
        let mut acc = LabelledTensor {
            labels: vec![],
            data: vec![self.factor],
        };
        for t in &ts {
            let rank = acc.labels.len() + t.labels.len();
            if rank > cap {
                return Err(Error::TooLarge { rank, cap });
            }
            acc = contract_pair(d, &acc, t, &[]);
        }
        if acc.labels.len() != self.open.len() || self.open.iter().any(|l| !acc.labels.contains(l)) {
            return Err(Error::Invalid("open labels do not match the network".into()));
        }
        Ok(permute(d, &acc, &self.open))
    }
}

fn strides(d: usize, n: usize) -> Vec<usize> {
    let mut s = vec![1; n];
    for k in (0..n.saturating_sub(1)).rev() {
        s[k] = s[k + 1] * d;
    }
    s
}

fn permute(d: usize, t: &LabelledTensor, order: &[usize]) -> Vec<Complex64> {
    if t.labels == order {
        return t.data.clone();
    }
    let src = strides(d, t.labels.len());
    let map: Vec<usize> = order
        .iter()
        .map(|l| src[t.labels.iter().position(|m| m == l).unwrap()])
        .collect();
    let n = t.data.len();
    let mut out = Vec::with_capacity(n);
    let mut idx = vec![0usize; order.len()];
    for _ in 0..n {
        let off: usize = idx.iter().zip(&map).map(|(v, s)| v * s).sum();
        out.push(t.data[off]);
        for k in (0..idx.len()).rev() {
            idx[k] += 1;
            if idx[k] < d {
                break;
            }
            idx[k] = 0;
        }
    }
    out
}

// Product of `a` and `b`: shared labels in `summed` are summed over, other
// shared labels are kept once.
fn contract_pair(d: usize, a: &LabelledTensor, b: &LabelledTensor, summed: &[usize]) -> LabelledTensor {
    let kept: Vec<usize> = a.labels.iter().filter(|l| b.labels.contains(l) && !summed.contains(l)).copied().collect();
    let free_a: Vec<usize> = a.labels.iter().filter(|l| !b.labels.contains(l)).copied().collect();
    let free_b: Vec<usize> = b.labels.iter().filter(|l| !a.labels.contains(l)).copied().collect();
    let ord_a: Vec<usize> = kept.iter().chain(&free_a).chain(summed).copied().collect();
    let ord_b: Vec<usize> = kept.iter().chain(summed).chain(&free_b).copied().collect();
    let pa = permute(d, a, &ord_a);
    let pb = permute(d, b, &ord_b);
    let (nk, r, m, cc) = (
        d.pow(kept.len() as u32),
        d.pow(free_a.len() as u32),
        d.pow(summed.len() as u32),
        d.pow(free_b.len() as u32),
    );
    let mut data = vec![c(0.0, 0.0); nk * r * cc];
    for q in 0..nk {
        let (ba, bb) = (&pa[q * r * m..(q + 1) * r * m], &pb[q * m * cc..(q + 1) * m * cc]);
        let out = &mut data[q * r * cc..(q + 1) * r * cc];
        for i in 0..r {
            for s in 0..m {
                let x = ba[i * m + s];
                if x == c(0.0, 0.0) {
                    continue;
                }
                let row = &bb[s * cc..(s + 1) * cc];
                for (dst, y) in out[i * cc..(i + 1) * cc].iter_mut().zip(row) {
                    *dst += x * y;
                }
            }
        }
    }
    LabelledTensor {
        labels: kept.into_iter().chain(free_a).chain(free_b).collect(),
        data,
    }
}

fn find(parent: &mut [usize], x: usize) -> usize {
    let mut r = x;
    while parent[r] != r {
        r = parent[r];
    }
    let mut y = x;
    while parent[y] != r {
        let next = parent[y];
        parent[y] = r;
        y = next;
    }
    r
}

/// The tensor network of a diagram; open labels are outputs then inputs.
pub fn network(a: &Diagram) -> TensorNetwork {
    let dim = a.dim();
    let d = dim.value();
    let mut port_ids: BTreeMap<Port, usize> = BTreeMap::new();
    for (&id, n) in a.nodes() {
        for i in 0..n.n_in {
            let k = port_ids.len();
            port_ids.insert(Port::input(id, i), k);
        }
        for i in 0..n.n_out {
            let k = port_ids.len();
            port_ids.insert(Port::output(id, i), k);
        }
    }
    let n_ports = port_ids.len();
    let mut parent: Vec<usize> = (0..n_ports).collect();
    let join = |parent: &mut Vec<usize>, x: usize, y: usize| {
        let (rx, ry) = (find(parent, x), find(parent, y));
        parent[rx] = ry;
    };
    for e in a.edges() {
        if e.h == 0 {
            join(&mut parent, port_ids[&e.a], port_ids[&e.b]);
        }
    }
    // all legs of a Z spider share one label
    for (&id, n) in a.nodes() {
        if let NodeKind::Z(_) = n.kind {
            let ports: Vec<usize> = (0..n.n_in)
                .map(|i| port_ids[&Port::input(id, i)])
                .chain((0..n.n_out).map(|i| port_ids[&Port::output(id, i)]))
                .collect();
            for w in ports.windows(2) {
                join(&mut parent, w[0], w[1]);
            }
        }
    }
    let mut label = |p: &Port| find(&mut parent, port_ids[p]);
    let f = fourier(d);
    let mut net = TensorNetwork::new(d);
    let mut used: Vec<usize> = Vec::new();
    for (&id, n) in a.nodes() {
        let ins: Vec<usize> = (0..n.n_in).map(|i| label(&Port::input(id, i))).collect();
        let outs: Vec<usize> = (0..n.n_out).map(|i| label(&Port::output(id, i))).collect();
        let legs: Vec<usize> = outs.iter().chain(&ins).copied().collect();
        let n_out = outs.len();
        let t = match n.kind {
            NodeKind::Z(p) if legs.is_empty() => LabelledTensor::from_fn(d, &[], |_| (0..d).map(|j| p.factor(j)).sum()),
            NodeKind::Z(p) if p.is_zero() => continue,
            NodeKind::Z(p) => LabelledTensor::from_fn(d, &legs[..1], |v| p.factor(v[0])),
            NodeKind::X(p) => LabelledTensor::from_fn(d, &legs, |v| {
                (0..d)
                    .map(|k| {
                        let mut z = p.factor(k);
                        for (leg, &x) in v.iter().enumerate() {
                            z *= if leg < n_out { f[x][k] } else { f[x][k].conj() };
                        }
                        z
                    })
                    .sum()
            }),
            NodeKind::H(h) => {
                let m = hadamard_matrix(dim, h);
                LabelledTensor::from_fn(d, &legs, |v| m[v[0]][v[1]])
            }
        };
        used.extend(&t.labels);
        net.push(t);
    }
    for e in a.edges() {
        if e.h != 0 {
            let m = hadamard_matrix(dim, e.h);
            let legs = [label(&e.a), label(&e.b)];
            let t = LabelledTensor::from_fn(d, &legs, |v| m[v[0]][v[1]]);
            used.extend(&t.labels);
            net.push(t);
        }
    }
    // each boundary gets a fresh label tied to its wire by an identity
    let mut fresh = n_ports;
    let boundary: Vec<usize> = a.outputs().iter().chain(a.inputs()).map(&mut label).collect();
    for l in boundary {
        net.push(LabelledTensor::from_fn(d, &[fresh, l], |v| c((v[0] == v[1]) as u8 as f64, 0.0)));
        used.push(l);
        net.open.push(fresh);
        fresh += 1;
    }
    // wires touching no tensor are free sums
    let mut roots: Vec<usize> = (0..n_ports).map(|x| find(&mut parent, x)).collect();
    roots.sort();
    roots.dedup();
    let free = roots.iter().filter(|r| !used.contains(r)).count();
    net.factor = a.scalar().to_complex() * (d as f64).powi(free as i32);
    net
}

/// Dense interpretation of a diagram (outputs then inputs).
pub fn interpret(a: &Diagram) -> Result<Tensor> {
    let d = a.dim().value();
    let data = network(a).contract(oracle_cap(d))?;
    Tensor::new(d, a.outputs().len(), a.inputs().len(), data)
}

/// The number a closed diagram denotes, including its scalar.
pub fn contract_closed(a: &Diagram) -> Result<Complex64> {
    if !a.is_closed() {
        return Err(Error::NotClosed);
    }
    Ok(interpret(a)?.data[0])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{hadamard, identity, spider, DiagramBuilder};
    use crate::phase::Phase;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-9
    }

    #[test]
    fn closed_spiders() {
        let z = spider(Dim::Qubit, NodeKind::Z(Phase::qubit(2)), 0, 0);
        assert!(close(contract_closed(&z).unwrap(), c(0.0, 0.0)));
        let z = spider(Dim::Qutrit, NodeKind::Z(Phase::qutrit(0, 0)), 0, 0);
        assert!(close(contract_closed(&z).unwrap(), c(3.0, 0.0)));
        let z = spider(Dim::Qutrit, NodeKind::Z(Phase::qutrit(1, 2)), 0, 0);
        assert!(close(contract_closed(&z).unwrap(), c(0.0, 0.0)));
        let e = Diagram::empty(Dim::Qutrit);
        assert!(close(contract_closed(&e).unwrap(), c(1.0, 0.0)));
        assert!(matches!(contract_closed(&identity(Dim::Qubit)), Err(Error::NotClosed)));
    }

    #[test]
    fn two_spiders_one_wire() {
        let mut b = DiagramBuilder::new(Dim::Qubit);
        let (u, v) = (b.z0(), b.z0());
        b.wire(u, v, 0);
        let val = contract_closed(&b.build().unwrap()).unwrap();
        // direct sum over the single shared index
        let direct: Complex64 = (0..2).map(|_| c(1.0, 0.0)).sum();
        assert!(close(val, direct));
    }

    #[test]
    fn qutrit_hadamard_matches_euler_contraction() {
        let z = Phase::qutrit(2, 2);
        let mut b = DiagramBuilder::new(Dim::Qutrit);
        let (z1, x, z2) = (b.z(z), b.x(z), b.z(z));
        b.input(z1).wire(z1, x, 0).wire(x, z2, 0).output(z2);
        let euler = interpret(&b.build().unwrap()).unwrap();
        let h = interpret(&hadamard(Dim::Qutrit, 1)).unwrap();
        // the Euler form is the definition of the box
        assert!(euler.approx_eq(&h, 1e-12));
        // up to global phase it is the unitary Fourier matrix
        let w = Complex64::from_polar(1.0, 2.0 * PI / 3.0);
        let r3 = 3f64.sqrt();
        let one = c(1.0, 0.0);
        let m = vec![
            vec![one / r3, one / r3, one / r3],
            vec![one / r3, w / r3, w.conj() / r3],
            vec![one / r3, w.conj() / r3, w / r3],
        ];
        let f = Tensor::from_matrix(&m);
        assert!(proportional_ratio(&h, &f, 1e-9).unwrap().is_proportional());
    }

    #[test]
    fn qubit_x_pi_is_not() {
        let x = spider(Dim::Qubit, NodeKind::X(Phase::qubit(2)), 1, 1);
        let t = interpret(&x).unwrap();
        assert!(close(t.get(&[0], &[1]), c(1.0, 0.0)));
        assert!(close(t.get(&[0], &[0]), c(0.0, 0.0)));
    }

    #[test]
    fn proportionality_cases() {
        let y = Tensor::new(2, 1, 1, vec![c(1.0, 2.0), c(0.5, 0.0), c(-1.0, 0.0), c(0.0, 3.0)]).unwrap();
        let x = y.scale(c(2.0, 0.0));
        let r = proportional_ratio(&x, &y, 1e-9).unwrap().ratio().unwrap();
        assert!(close(r, c(2.0, 0.0)));
        let mut bumped = y.clone();
        bumped.data[0] += c(1e-3, 0.0);
        assert_eq!(proportional_ratio(&bumped, &y, 1e-9).unwrap(), Proportionality::NotProportional);
        let z = Tensor::new(2, 1, 0, vec![c(0.0, 0.0); 2]).unwrap();
        assert_eq!(proportional_ratio(&z, &z, 1e-9).unwrap(), Proportionality::BothZero);
        assert!(matches!(proportional_ratio(&z, &y, 1e-9), Err(Error::ShapeMismatch)));
    }

    #[test]
    fn self_loop_is_a_trace() {
        let mut b = DiagramBuilder::new(Dim::Qutrit);
        let h = b.hbox(1);
        b.wire(h, h, 0);
        let v = contract_closed(&b.build().unwrap()).unwrap();
        let m = hadamard_matrix(Dim::Qutrit, 1);
        let tr: Complex64 = (0..3).map(|j| m[j][j]).sum();
        assert!(close(v, tr));
    }

    #[test]
    fn cap_is_enforced() {
        let big = spider(Dim::Qutrit, NodeKind::Z(Phase::qutrit(0, 0)), 5, 6);
        assert!(matches!(interpret(&big), Err(Error::TooLarge { .. })));
    }
}
