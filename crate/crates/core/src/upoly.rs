//! Sparse multivariate polynomials in auxiliary variables with per-variable
//! degree caps.
//!
//! These carry the shifted variables v_s = u_s - 1 of the bivariate and
//! multivariate generating functions: with that shift, extracting the
//! coefficient of `v^d` reads off a binomial moment directly, so no symbolic
//! differentiation is ever needed.
//!
//! The caps make the ring a quotient by the ideal (v_1^{c_1+1}, ...):
//! multiplication drops any term whose exponent exceeds its cap. Coefficients
//! at or below the caps are exact; anything above is never consumed.

use std::collections::BTreeMap;

use crate::ring::{CoeffRing, Rat};

/// Element of a capped multivariate polynomial ring.
///
/// Terms map a full-length exponent vector (one entry per declared variable)
/// to a nonzero rational coefficient. Zero is the empty map.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct UPoly {
    terms: BTreeMap<Vec<usize>, Rat>,
}

impl UPoly {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of the monomial with exponent vector `exps`.
    pub fn coeff(&self, exps: &[usize]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    /// Terms in lexicographic exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (&Vec<usize>, &Rat)> {
        self.terms.iter()
    }

    /// Canonical JSON encoding: an array of `{"exp": [...], "coeff": "p/q"}`
    /// objects in lexicographic exponent order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.terms
                .iter()
                .map(|(exps, c)| {
                    serde_json::json!({
                        "exp": exps,
                        "coeff": c.to_string(),
                    })
                })
                .collect(),
        )
    }
}

/// Ring descriptor: declares the variable count and the per-variable degree
/// caps. All elements combined through one descriptor respect its caps.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPolyRing {
    caps: Vec<usize>,
}

impl UPolyRing {
    pub fn new(caps: Vec<usize>) -> Self {
        UPolyRing { caps }
    }

    pub fn nvars(&self) -> usize {
        self.caps.len()
    }

    pub fn caps(&self) -> &[usize] {
        &self.caps
    }

    /// The variable v_s as an element. Panics if `s` is out of range or its
    /// cap is zero.
    pub fn var(&self, s: usize) -> UPoly {
        assert!(s < self.nvars(), "variable index out of range");
        assert!(self.caps[s] >= 1, "variable v_{s} has cap 0");
        let mut exps = vec![0; self.nvars()];
        exps[s] = 1;
        self.monomial(exps, Rat::one())
    }

    pub fn constant(&self, c: Rat) -> UPoly {
        self.monomial(vec![0; self.nvars()], c)
    }

    /// Single term `c * v^exps`; zero if `c` is zero or any exponent exceeds
    /// its cap.
    pub fn monomial(&self, exps: Vec<usize>, c: Rat) -> UPoly {
        assert_eq!(exps.len(), self.nvars(), "exponent vector length mismatch");
        let mut terms = BTreeMap::new();
        if !c.is_zero() && self.within_caps(&exps) {
            terms.insert(exps, c);
        }
        UPoly { terms }
    }

    fn within_caps(&self, exps: &[usize]) -> bool {
        exps.iter().zip(&self.caps).all(|(e, cap)| e <= cap)
    }
}

impl CoeffRing for UPolyRing {
    type Elem = UPoly;

    fn zero(&self) -> UPoly {
        UPoly::default()
    }

    fn one(&self) -> UPoly {
        self.constant(Rat::one())
    }

    fn is_zero(&self, a: &UPoly) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let mut terms = a.terms.clone();
        for (exps, c) in &b.terms {
            match terms.get_mut(exps) {
                Some(acc) => {
                    *acc += c;
                    if acc.is_zero() {
                        terms.remove(exps);
                    }
                }
                None => {
                    terms.insert(exps.clone(), c.clone());
                }
            }
        }
        UPoly { terms }
    }

    fn sub(&self, a: &UPoly, b: &UPoly) -> UPoly {
        self.add(a, &self.neg(b))
    }

    fn mul(&self, a: &UPoly, b: &UPoly) -> UPoly {
        let mut terms: BTreeMap<Vec<usize>, Rat> = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let exps: Vec<usize> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if !self.within_caps(&exps) {
                    continue;
                }
                let prod = ca * cb;
                match terms.get_mut(&exps) {
                    Some(acc) => {
                        *acc += &prod;
                        if acc.is_zero() {
                            terms.remove(&exps);
                        }
                    }
                    None => {
                        terms.insert(exps, prod);
                    }
                }
            }
        }
        UPoly { terms }
    }

    fn neg(&self, a: &UPoly) -> UPoly {
        UPoly {
            terms: a.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    fn embed(&self, r: &Rat) -> UPoly {
        self.constant(r.clone())
    }

    fn encode(&self, a: &UPoly) -> serde_json::Value {
        a.to_json()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn one_plus_v_powers() {
        let ring = UPolyRing::new(vec![2]);
        let v = ring.var(0);
        let f = ring.add(&ring.one(), &v); // 1 + v
        let f2 = ring.mul(&f, &f); // 1 + 2v + v^2
        assert_eq!(f2.coeff(&[0]), Rat::one());
        assert_eq!(f2.coeff(&[1]), Rat::from_int(2));
        assert_eq!(f2.coeff(&[2]), Rat::one());
        // cube: v^3 exceeds the cap and is dropped; lower coefficients exact
        let f3 = ring.mul(&f2, &f);
        assert_eq!(f3.coeff(&[1]), Rat::from_int(3));
        assert_eq!(f3.coeff(&[2]), Rat::from_int(3));
        assert_eq!(f3.coeff(&[3]), Rat::zero());
    }

    #[test]
    fn two_variables() {
        let ring = UPolyRing::new(vec![1, 1]);
        let f = ring.add(&ring.one(), &ring.var(0)); // 1 + v1
        let g = ring.add(&ring.one(), &ring.var(1)); // 1 + v2
        let fg = ring.mul(&f, &g);
        assert_eq!(fg.coeff(&[1, 1]), Rat::one());
        assert_eq!(fg.coeff(&[1, 0]), Rat::one());
        assert_eq!(fg.coeff(&[0, 0]), Rat::one());
    }

    #[test]
    fn cancellation_removes_terms() {
        let ring = UPolyRing::new(vec![3]);
        let v = ring.var(0);
        let diff = ring.sub(&v, &v);
        assert!(diff.is_zero());
    }

    #[test]
    fn json_encoding_is_ordered() {
        let ring = UPolyRing::new(vec![2, 2]);
        let a = ring.add(
            &ring.monomial(vec![1, 0], Rat::new(-1, 2)),
            &ring.monomial(vec![0, 2], Rat::one()),
        );
        assert_eq!(
            a.to_json().to_string(),
            r#"[{"coeff":"1","exp":[0,2]},{"coeff":"-1/2","exp":[1,0]}]"#
        );
    }
}
