//! Dense univariate polynomials in the indeterminate `b` over the rationals.
//!
//! These are the per-`q^n` coefficients of the truncated hook-length and
//! colored-partition series. Degrees stay small (bounded by the number of
//! relevant hooks or multiplicities of a partition), so a dense coefficient
//! vector is the right shape.
//!
//! The canonical text encoding of a polynomial is a JSON array of rational
//! strings, index = degree of `b`.

use crate::ring::{CoeffRing, Rat};

/// Polynomial in `b` with exact rational coefficients.
///
/// `coeffs[d]` is the coefficient of `b^d`; the vector carries no trailing
/// zeros, and the zero polynomial is the empty vector.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BPoly {
    coeffs: Vec<Rat>,
}

impl BPoly {
    pub fn zero() -> Self {
        BPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        BPoly::constant(Rat::one())
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// Build from a coefficient vector (index = degree); trailing zeros are
    /// stripped to restore canonical form.
    pub fn from_coeffs(coeffs: Vec<Rat>) -> Self {
        let mut p = BPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree of the polynomial; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `b^d` (zero beyond the stored degree).
    pub fn coeff(&self, d: usize) -> Rat {
        self.coeffs.get(d).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, rhs: &BPoly) -> BPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for d in 0..n {
            let a = self.coeffs.get(d);
            let b = rhs.coeffs.get(d);
            out.push(match (a, b) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            });
        }
        BPoly::from_coeffs(out)
    }

    pub fn sub(&self, rhs: &BPoly) -> BPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> BPoly {
        BPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, rhs: &BPoly) -> BPoly {
        if self.is_zero() || rhs.is_zero() {
            return BPoly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += &(a * b);
            }
        }
        BPoly::from_coeffs(out)
    }

    pub fn scale(&self, c: &Rat) -> BPoly {
        BPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, e: usize) -> BPoly {
        let mut acc = BPoly::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Evaluate at a rational point by Horner's rule.
    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    /// Canonical JSON encoding: array of rational strings, index = degree.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.coeffs
                .iter()
                .map(|c| serde_json::Value::String(c.to_string()))
                .collect(),
        )
    }
}

/// `binom(m - b, m)` expanded as a polynomial in `b`: the product
/// `(1-b)(2-b)...(m-b) / m!`, of degree `m`. The empty product (m = 0) is 1.
pub fn bpoly_binom(m: usize) -> BPoly {
    let mut acc = BPoly::one();
    for t in 1..=m {
        // factor (t - b) / t
        let factor = BPoly::from_coeffs(vec![Rat::one(), Rat::new(-1, t as i64)]);
        acc = acc.mul(&factor);
    }
    acc
}

/// The polynomial ring Q[b] as a series coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct BPolyRing;

impl CoeffRing for BPolyRing {
    type Elem = BPoly;

    fn zero(&self) -> BPoly {
        BPoly::zero()
    }

    fn one(&self) -> BPoly {
        BPoly::one()
    }

    fn is_zero(&self, a: &BPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &BPoly, b: &BPoly) -> BPoly {
        a.add(b)
    }

    fn sub(&self, a: &BPoly, b: &BPoly) -> BPoly {
        a.sub(b)
    }

    fn mul(&self, a: &BPoly, b: &BPoly) -> BPoly {
        a.mul(b)
    }

    fn neg(&self, a: &BPoly) -> BPoly {
        a.neg()
    }

    fn embed(&self, r: &Rat) -> BPoly {
        BPoly::constant(r.clone())
    }

    fn encode(&self, a: &BPoly) -> serde_json::Value {
        a.to_json()
    }
}
