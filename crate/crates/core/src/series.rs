//! Truncated formal power series in `q` over an exact coefficient ring.
//!
//! A series carries its ring descriptor and coefficients `[q^0] .. [q^N]` for
//! a fixed truncation order `N`. All arithmetic is exact: no floating point
//! anywhere, and every operation that combines two series insists they share
//! the same truncation order rather than silently aligning them.

use crate::ring::{CoeffRing, Rat, RationalField};

/// Error from a series construction that cannot produce exact coefficients.
#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SeriesError {
    /// An infinite-product construction saw too many consecutive factors
    /// without the settled prefix of the product advancing, so the requested
    /// truncation order would never be reached.
    #[error("product did not converge: lowest unsettled degree stuck at {stuck_at} for {factors} factors")]
    ProductDiverged { stuck_at: usize, factors: usize },
}

/// Truncated power series: coefficients of `q^0 .. q^N` in ring `R`.
#[derive(Clone, PartialEq, Debug)]
pub struct QSeries<R: CoeffRing> {
    ring: R,
    coeffs: Vec<R::Elem>,
}

impl<R: CoeffRing> QSeries<R> {
    /// The zero series to order `n`.
    pub fn zero(ring: R, n: usize) -> Self {
        let coeffs = (0..=n).map(|_| ring.zero()).collect();
        QSeries { ring, coeffs }
    }

    /// The constant series 1 to order `n`.
    pub fn one(ring: R, n: usize) -> Self {
        let mut s = Self::zero(ring, n);
        s.coeffs[0] = s.ring.one();
        s
    }

    /// The single term `c * q^m` to order `n` (zero if `m > n`).
    pub fn monomial(ring: R, m: usize, c: R::Elem, n: usize) -> Self {
        let mut s = Self::zero(ring, n);
        if m <= n {
            s.coeffs[m] = c;
        }
        s
    }

    /// Series with the given coefficients; the truncation order is
    /// `coeffs.len() - 1`. Panics on an empty vector.
    pub fn from_coeffs(ring: R, coeffs: Vec<R::Elem>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the q^0 coefficient"
        );
        QSeries { ring, coeffs }
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    /// Truncation order `N`: coefficients of `q^0 .. q^N` are stored.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `q^m`. Panics if `m` exceeds the truncation order:
    /// those coefficients are unknown, not zero.
    pub fn coeff(&self, m: usize) -> &R::Elem {
        assert!(
            m <= self.order(),
            "coefficient q^{m} beyond truncation order {}",
            self.order()
        );
        &self.coeffs[m]
    }

    pub fn coeffs(&self) -> &[R::Elem] {
        &self.coeffs
    }

    pub fn set_coeff(&mut self, m: usize, c: R::Elem) {
        assert!(
            m <= self.order(),
            "coefficient q^{m} beyond truncation order"
        );
        self.coeffs[m] = c;
    }

    fn assert_same_order(&self, other: &Self) {
        assert_eq!(
            self.order(),
            other.order(),
            "truncation orders differ: {} vs {}",
            self.order(),
            other.order()
        );
        assert!(self.ring == other.ring, "coefficient rings differ");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.add(a, b))
            .collect();
        QSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| self.ring.sub(a, b))
            .collect();
        QSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    pub fn neg(&self) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.neg(a)).collect();
        QSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Cauchy product, truncated to the shared order.
    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_order(other);
        let n = self.order();
        let mut coeffs: Vec<R::Elem> = (0..=n).map(|_| self.ring.zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if self.ring.is_zero(a) {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n + 1 - i).enumerate() {
                if self.ring.is_zero(b) {
                    continue;
                }
                let prod = self.ring.mul(a, b);
                coeffs[i + j] = self.ring.add(&coeffs[i + j], &prod);
            }
        }
        QSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Multiply every coefficient by `c`.
    pub fn scale(&self, c: &R::Elem) -> Self {
        let coeffs = self.coeffs.iter().map(|a| self.ring.mul(a, c)).collect();
        QSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Multiply by `q^m`, shifting coefficients up and discarding overflow.
    pub fn mul_qpow(&self, m: usize) -> Self {
        let n = self.order();
        let mut coeffs: Vec<R::Elem> = (0..=n).map(|_| self.ring.zero()).collect();
        for (i, a) in self.coeffs.iter().enumerate() {
            if i + m <= n {
                coeffs[i + m] = a.clone();
            }
        }
        QSeries {
            ring: self.ring.clone(),
            coeffs,
        }
    }

    /// Degree of the lowest nonzero coefficient, or `None` for the (truncated)
    /// zero series.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !self.ring.is_zero(c))
    }

    /// Canonical JSON encoding: the array of per-degree coefficient
    /// encodings for `q^0 .. q^N`.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(self.coeffs.iter().map(|c| self.ring.encode(c)).collect())
    }
}

impl QSeries<RationalField> {
    /// Lift a rational series into a larger ring via its `embed` injection.
    pub fn lift_into<R: CoeffRing>(&self, ring: R) -> QSeries<R> {
        let coeffs = self.coeffs.iter().map(|c| ring.embed(c)).collect();
        QSeries { ring, coeffs }
    }
}

/// `1 / (1 - c * q^m)` to order `n`: the geometric series
/// `1 + c q^m + c^2 q^{2m} + ...`. Panics if `m == 0`.
pub fn geometric_factor<R: CoeffRing>(ring: R, m: usize, c: &R::Elem, n: usize) -> QSeries<R> {
    assert!(m > 0, "geometric factor needs a positive exponent");
    let mut s = QSeries::zero(ring, n);
    let mut pow = s.ring.one();
    let mut deg = 0;
    while deg <= n {
        s.coeffs[deg] = pow.clone();
        pow = s.ring.mul(&pow, c);
        deg += m;
    }
    s
}

/// `1 / (q)_infinity = prod_{i>=1} 1/(1-q^i)` to order `n`: the partition
/// generating function.
pub fn euler_inverse(n: usize) -> QSeries<RationalField> {
    let mut s = QSeries::one(RationalField, n);
    for i in 1..=n {
        s = s.mul(&geometric_factor(RationalField, i, &Rat::one(), n));
    }
    s
}

/// Product of the series yielded by `factors`, truncated to order `n`.
///
/// The iterator is consumed lazily and stops at the first factor that equals
/// the constant series 1 to order `n`; for the products arising here, factor
/// `i` is `1 + O(q^i)`, so all later factors are 1 as well. As a guard
/// against a non-converging input, the construction fails if the lowest
/// degree at which a factor differs from 1 stays put for more than `n + 1`
/// consecutive factors.
pub fn product_truncated<R, I>(ring: R, n: usize, factors: I) -> Result<QSeries<R>, SeriesError>
where
    R: CoeffRing,
    I: IntoIterator<Item = QSeries<R>>,
{
    let one = QSeries::one(ring.clone(), n);
    let mut acc = one.clone();
    let mut settled = 0usize; // factors so far were 1 + O(q^{settled+1})
    let mut stuck = 0usize;
    for factor in factors {
        if factor == one {
            return Ok(acc);
        }
        let tail_start = factor.sub(&one).lowest_degree().unwrap_or(n + 1);
        if tail_start > settled {
            settled = tail_start;
            stuck = 0;
        } else {
            stuck += 1;
            if stuck > n + 1 {
                return Err(SeriesError::ProductDiverged {
                    stuck_at: settled,
                    factors: stuck,
                });
            }
        }
        acc = acc.mul(&factor);
    }
    Ok(acc)
}
