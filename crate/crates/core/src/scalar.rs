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

//! Exact scalars in `Z[ζ]·√2^a·√3^b`, where `ζ = e^{iπ/12}` is a primitive
//! 24th root of unity.
//!
//! Every scalar produced by stabilizer rewriting (and every Potts weight at
//! the lattice roots of unity) lives in this ring, so simplification can
//! return values that compare for equality exactly.
//!
//! Elements are stored in canonical form: the cyclotomic part is reduced
//! modulo `Φ₂₄(x) = x⁸ − x⁴ + 1` and is not divisible by `√2` or `√3`
//! inside `Z[ζ]`. Zero is stored with both exponents equal to zero.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

/// Degree of `Φ₂₄`.
pub const DEGREE: usize = 8;

/// An exact complex number `(Σ cₖ ζᵏ) · √2^sqrt2_pow · √3^sqrt3_pow`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "RawScalar", into = "RawScalar")]
pub struct ExactScalar {
    coeffs: [i64; DEGREE],
    sqrt2_pow: i32,
    sqrt3_pow: i32,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawScalar {
    coeffs: [i64; DEGREE],
    sqrt2_pow: i32,
    sqrt3_pow: i32,
}

impl From<RawScalar> for ExactScalar {
    fn from(r: RawScalar) -> Self {
        ExactScalar::from_parts(r.coeffs, r.sqrt2_pow, r.sqrt3_pow)
    }
}

impl From<ExactScalar> for RawScalar {
    fn from(s: ExactScalar) -> Self {
        RawScalar {
            coeffs: s.coeffs,
            sqrt2_pow: s.sqrt2_pow,
            sqrt3_pow: s.sqrt3_pow,
        }
    }
}

// Multiply two reduced polynomials and reduce modulo x^8 - x^4 + 1.
fn poly_mul(a: &[i64; DEGREE], b: &[i64; DEGREE]) -> [i64; DEGREE] {
    let mut wide = [0i128; 2 * DEGREE - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            wide[i + j] += x as i128 * y as i128;
        }
    }
    reduce_wide(&mut wide)
}

fn reduce_wide(wide: &mut [i128]) -> [i64; DEGREE] {
    for k in (DEGREE..wide.len()).rev() {
        let c = wide[k];
        if c != 0 {
            wide[k - 4] += c;
            wide[k - 8] -= c;
            wide[k] = 0;
        }
    }
    let mut out = [0i64; DEGREE];
    for (o, w) in out.iter_mut().zip(wide.iter()) {
        *o = i64::try_from(*w).expect("cyclotomic coefficient overflow");
    }
    out
}

fn monomial(k: i64) -> [i64; DEGREE] {
    let k = k.rem_euclid(24) as usize;
    // ζ^12 = -1
    let (k, sign) = if k >= 12 { (k - 12, -1) } else { (k, 1) };
    let mut wide = [0i128; 12];
    wide[k] = sign;
    reduce_wide(&mut wide)
}

// √2 = ζ³ − ζ⁹ and √3 = ζ² − ζ¹⁰ as ring elements.
fn sqrt2_elem() -> [i64; DEGREE] {
    let mut wide = [0i128; 10];
    wide[3] = 1;
    wide[9] = -1;
    reduce_wide(&mut wide)
}

fn sqrt3_elem() -> [i64; DEGREE] {
    let mut wide = [0i128; 11];
    wide[2] = 1;
    wide[10] = -1;
    reduce_wide(&mut wide)
}

fn is_zero_poly(c: &[i64; DEGREE]) -> bool {
    c.iter().all(|&x| x == 0)
}

fn scale_poly(c: &[i64; DEGREE], k: i64) -> [i64; DEGREE] {
    let mut out = *c;
    for x in out.iter_mut() {
        *x = x.checked_mul(k).expect("cyclotomic coefficient overflow");
    }
    out
}

// Multiply by (√p)^n for n >= 0 as a ring element.
fn mul_root_pow(c: &[i64; DEGREE], p: i64, n: u32) -> [i64; DEGREE] {
    let mut out = scale_poly(c, p.pow(n / 2));
    if n % 2 == 1 {
        let r = if p == 2 { sqrt2_elem() } else { sqrt3_elem() };
        out = poly_mul(&out, &r);
    }
    out
}

fn try_divide_root(c: &[i64; DEGREE], p: i64) -> Option<[i64; DEGREE]> {
    let r = if p == 2 { sqrt2_elem() } else { sqrt3_elem() };
    let y = poly_mul(c, &r);
    if y.iter().all(|x| x % p == 0) {
        let mut out = y;
        for x in out.iter_mut() {
            *x /= p;
        }
        Some(out)
    } else {
        None
    }
}

// Apply the Galois automorphism ζ ↦ ζ^k.
fn galois(c: &[i64; DEGREE], k: i64) -> [i64; DEGREE] {
    let mut acc = [0i64; DEGREE];
    for (j, &x) in c.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let m = monomial(j as i64 * k);
        for (a, b) in acc.iter_mut().zip(m.iter()) {
            *a += x * b;
        }
    }
    acc
}

impl ExactScalar {
    /// Builds a scalar from raw parts and canonicalises it.
    pub fn from_parts(coeffs: [i64; DEGREE], sqrt2_pow: i32, sqrt3_pow: i32) -> Self {
        let mut s = ExactScalar {
            coeffs,
            sqrt2_pow,
            sqrt3_pow,
        };
        s.normalize();
        s
    }

    pub fn zero() -> Self {
        ExactScalar {
            coeffs: [0; DEGREE],
            sqrt2_pow: 0,
            sqrt3_pow: 0,
        }
    }

    pub fn one() -> Self {
        Self::zeta(0)
    }

    pub fn from_int(n: i64) -> Self {
        let mut c = [0; DEGREE];
        c[0] = n;
        Self::from_parts(c, 0, 0)
    }

    /// `ζᵏ = e^{iπk/12}`.
    pub fn zeta(k: i64) -> Self {
        ExactScalar {
            coeffs: monomial(k),
            sqrt2_pow: 0,
            sqrt3_pow: 0,
        }
    }

    /// `ω^a = e^{2πia/3}`.
    pub fn omega(a: i64) -> Self {
        Self::zeta(8 * a)
    }

    /// `i^k`.
    pub fn i_pow(k: i64) -> Self {
        Self::zeta(6 * k)
    }

    pub fn sqrt2_pow(n: i32) -> Self {
        Self::from_parts(monomial(0), n, 0)
    }

    pub fn sqrt3_pow(n: i32) -> Self {
        Self::from_parts(monomial(0), 0, n)
    }

    /// `(√d)^n` for `d ∈ {2, 3, 4}`.
    pub fn root_dim_pow(d: u32, n: i32) -> Self {
        match d {
            2 => Self::sqrt2_pow(n),
            3 => Self::sqrt3_pow(n),
            4 => Self::sqrt2_pow(2 * n),
            _ => panic!("no exact square root of {d} in the scalar ring"),
        }
    }

    pub fn coeffs(&self) -> &[i64; DEGREE] {
        &self.coeffs
    }

    pub fn sqrt2_exponent(&self) -> i32 {
        self.sqrt2_pow
    }

    pub fn sqrt3_exponent(&self) -> i32 {
        self.sqrt3_pow
    }

    pub fn is_zero(&self) -> bool {
        is_zero_poly(&self.coeffs)
    }

    fn normalize(&mut self) {
        if is_zero_poly(&self.coeffs) {
            self.sqrt2_pow = 0;
            self.sqrt3_pow = 0;
            return;
        }
        while let Some(c) = try_divide_root(&self.coeffs, 2) {
            self.coeffs = c;
            self.sqrt2_pow += 1;
        }
        while let Some(c) = try_divide_root(&self.coeffs, 3) {
            self.coeffs = c;
            self.sqrt3_pow += 1;
        }
    }

    /// Complex conjugate.
    pub fn conj(&self) -> Self {
        Self::from_parts(galois(&self.coeffs, 23), self.sqrt2_pow, self.sqrt3_pow)
    }

    /// Multiplicative inverse, when it exists in the ring.
    ///
    /// The cyclotomic part is inverted through its field norm, so this
    /// succeeds exactly when that norm is `±2^a·3^b`.
    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let mut others = monomial(0);
        for k in [5, 7, 11, 13, 17, 19, 23] {
            others = poly_mul(&others, &galois(&self.coeffs, k));
        }
        let norm_poly = poly_mul(&self.coeffs, &others);
        if norm_poly[1..].iter().any(|&x| x != 0) {
            return None;
        }
        let mut norm = norm_poly[0];
        let mut twos = 0;
        let mut threes = 0;
        let sign = norm.signum();
        norm = norm.abs();
        while norm % 2 == 0 {
            norm /= 2;
            twos += 1;
        }
        while norm % 3 == 0 {
            norm /= 3;
            threes += 1;
        }
        if norm != 1 {
            return None;
        }
        Some(Self::from_parts(
            scale_poly(&others, sign),
            -self.sqrt2_pow - 2 * twos,
            -self.sqrt3_pow - 2 * threes,
        ))
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc *= *self;
        }
        acc
    }

    pub fn to_complex(&self) -> Complex64 {
        let mut z = Complex64::new(0.0, 0.0);
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c != 0 {
                z += Complex64::from_polar(c as f64, std::f64::consts::PI * k as f64 / 12.0);
            }
        }
        z * 2f64.powf(self.sqrt2_pow as f64 / 2.0) * 3f64.powf(self.sqrt3_pow as f64 / 2.0)
    }

    /// If this scalar is `ζʲ·√2^a·√3^b`, returns `(j, a, b)` with `j ∈ 0..24`.
    pub fn as_unit_monomial(&self) -> Option<(i64, i32, i32)> {
        (0..24).find_map(|j| {
            (monomial(j) == self.coeffs).then_some((j, self.sqrt2_pow, self.sqrt3_pow))
        })
    }

    /// Snaps a floating-point value to the nearest `ζʲ·√2^a·√3^b` (or zero)
    /// if one lies within `tol` relative distance.
    pub fn snap(z: Complex64, tol: f64) -> Option<Self> {
        let mag = z.norm();
        if mag < tol {
            return Some(Self::zero());
        }
        let j = (z.arg() * 12.0 / std::f64::consts::PI).round() as i64;
        let ln2 = 2f64.ln();
        let ln3 = 3f64.ln();
        let target = 2.0 * mag.ln();
        for b in -60..=60 {
            let a = ((target - b as f64 * ln3) / ln2).round() as i32;
            if a.abs() > 120 {
                continue;
            }
            let cand = Self::zeta(j) * Self::sqrt2_pow(a) * Self::sqrt3_pow(b);
            if (cand.to_complex() - z).norm() <= tol * mag.max(1.0) {
                return Some(cand);
            }
        }
        None
    }

    fn aligned(a: &Self, b: &Self) -> ([i64; DEGREE], [i64; DEGREE], i32, i32) {
        let m2 = a.sqrt2_pow.min(b.sqrt2_pow);
        let m3 = a.sqrt3_pow.min(b.sqrt3_pow);
        let lift = |s: &Self| {
            let c = mul_root_pow(&s.coeffs, 2, (s.sqrt2_pow - m2) as u32);
            mul_root_pow(&c, 3, (s.sqrt3_pow - m3) as u32)
        };
        (lift(a), lift(b), m2, m3)
    }
}

impl Default for ExactScalar {
    fn default() -> Self {
        Self::one()
    }
}

impl Mul for ExactScalar {
    type Output = ExactScalar;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::from_parts(
            poly_mul(&self.coeffs, &rhs.coeffs),
            self.sqrt2_pow + rhs.sqrt2_pow,
            self.sqrt3_pow + rhs.sqrt3_pow,
        )
    }
}

impl std::ops::MulAssign for ExactScalar {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Add for ExactScalar {
    type Output = ExactScalar;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        let (a, b, m2, m3) = Self::aligned(&self, &rhs);
        let mut c = [0; DEGREE];
        for k in 0..DEGREE {
            c[k] = a[k] + b[k];
        }
        Self::from_parts(c, m2, m3)
    }
}

impl std::ops::AddAssign for ExactScalar {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl Neg for ExactScalar {
    type Output = ExactScalar;
    fn neg(self) -> Self {
        ExactScalar {
            coeffs: scale_poly(&self.coeffs, -1),
            ..self
        }
    }
}

impl Sub for ExactScalar {
    type Output = ExactScalar;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl std::iter::Product for ExactScalar {
    fn product<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::one(), |a, b| a * b)
    }
}

impl std::iter::Sum for ExactScalar {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(Self::zero(), |a, b| a + b)
    }
}

impl fmt::Debug for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for ExactScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut terms = Vec::new();
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            terms.push(match k {
                0 => format!("{c}"),
                _ => format!("{c}ζ^{k}"),
            });
        }
        write!(f, "({})", terms.join(" + "))?;
        if self.sqrt2_pow != 0 {
            write!(f, "·√2^{}", self.sqrt2_pow)?;
        }
        if self.sqrt3_pow != 0 {
            write!(f, "·√3^{}", self.sqrt3_pow)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: Complex64, b: Complex64) -> bool {
        (a - b).norm() < 1e-12
    }

    #[test]
    fn conjugate_product_of_pm_prefactors_is_half() {
        let a = ExactScalar::sqrt2_pow(-1) * ExactScalar::zeta(-3);
        let b = ExactScalar::sqrt2_pow(-1) * ExactScalar::zeta(3);
        assert_eq!(a * b, ExactScalar::sqrt2_pow(-2));
        assert!(close((a * b).to_complex(), Complex64::new(0.5, 0.0)));
    }

    #[test]
    fn unit_and_root_identities() {
        let x = ExactScalar::zeta(5) * ExactScalar::sqrt3_pow(3);
        assert_eq!(x * ExactScalar::one(), x);
        assert_eq!(ExactScalar::zeta(6) * ExactScalar::zeta(6), ExactScalar::from_int(-1));
        assert_eq!(ExactScalar::from_int(2), ExactScalar::sqrt2_pow(2));
        assert_eq!(ExactScalar::from_int(3), ExactScalar::sqrt3_pow(2));
        assert_eq!(ExactScalar::from_int(6), ExactScalar::sqrt2_pow(2) * ExactScalar::sqrt3_pow(2));
    }

    #[test]
    fn to_complex_values() {
        let s = ExactScalar::sqrt3_pow(-1) * ExactScalar::zeta(-2);
        assert!(close(s.to_complex(), Complex64::new(0.5, -0.28867513459481287)));
        assert_eq!(ExactScalar::zero().to_complex(), Complex64::new(0.0, 0.0));
        assert!((ExactScalar::root_dim_pow(3, 1).to_complex().re - 1.7320508075688772).abs() < 1e-12);
    }

    #[test]
    fn sums_cancel_exactly() {
        // 1 + ω + ω̄ = 0
        let s = ExactScalar::one() + ExactScalar::omega(1) + ExactScalar::omega(2);
        assert!(s.is_zero());
        // 1 + 2ω = i√3
        let g = ExactScalar::one() + ExactScalar::from_int(2) * ExactScalar::omega(1);
        assert_eq!(g, ExactScalar::i_pow(1) * ExactScalar::sqrt3_pow(1));
        // 1 + i = √2 ζ³
        let h = ExactScalar::one() + ExactScalar::i_pow(1);
        assert_eq!(h, ExactScalar::sqrt2_pow(1) * ExactScalar::zeta(3));
    }

    #[test]
    fn inverse_and_snap() {
        let x = ExactScalar::zeta(7) * ExactScalar::sqrt2_pow(-3) * ExactScalar::sqrt3_pow(5);
        assert_eq!(x * x.inverse().unwrap(), ExactScalar::one());
        let y = ExactScalar::from_int(1) + ExactScalar::zeta(1);
        let yi = y.inverse().unwrap();
        assert_eq!(y * yi, ExactScalar::one());
        assert_eq!(ExactScalar::snap(x.to_complex(), 1e-9), Some(x));
        assert_eq!(ExactScalar::from_int(5).inverse(), None);
    }

    #[test]
    fn serde_canonicalises() {
        let s: ExactScalar =
            serde_json::from_str(r#"{"coeffs":[2,0,0,0,0,0,0,0],"sqrt2_pow":0,"sqrt3_pow":0}"#).unwrap();
        assert_eq!(s, ExactScalar::sqrt2_pow(2));
        let back: ExactScalar = serde_json::from_str(&serde_json::to_string(&s).unwrap()).unwrap();
        assert_eq!(back, s);
    }

    use proptest::prelude::*;

    fn arb_scalar() -> impl Strategy<Value = ExactScalar> {
        (prop::array::uniform8(-3i64..=3), -4i32..=4, -4i32..=4)
            .prop_map(|(c, a, b)| ExactScalar::from_parts(c, a, b))
    }

    proptest! {
        #[test]
        fn ring_laws(x in arb_scalar(), y in arb_scalar(), z in arb_scalar()) {
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x + y, y + x);
            prop_assert_eq!(x * (y + z), x * y + x * z);
            let num = (x * y).to_complex();
            let expect = x.to_complex() * y.to_complex();
            prop_assert!((num - expect).norm() <= 1e-9 * expect.norm().max(1.0));
            prop_assert_eq!(x.conj().conj(), x);
        }
    }
}
