//! Scalar arithmetic and the coefficient-ring abstraction used by [`crate::series`].
//!
//! All computation in this crate is exact: the base scalar is an
//! arbitrary-precision rational ([`Rat`]), and every coefficient ring a
//! truncated q-series can range over (rationals, polynomials in `b`,
//! multivariate polynomials) implements [`CoeffRing`].
//!
//! A ring is represented by a small descriptor value rather than by the
//! element type alone, because some rings carry context (variable count and
//! degree caps for multivariate polynomials). Elements are created and
//! combined through the descriptor.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational number, always reduced to lowest terms with a
/// positive denominator.
///
/// The canonical text encoding is `"p/q"`, shortened to `"p"` when the
/// denominator is 1; `Display` and `FromStr` both use it.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    /// p/q from machine integers. Panics if `den` is zero.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "rational denominator must be nonzero");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_uint(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn from_bigint(n: BigInt) -> Self {
        Rat(BigRational::from_integer(n))
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_one()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    /// The value as a `u64`, if it is a non-negative integer that fits.
    pub fn to_u64(&self) -> Option<u64> {
        if self.0.is_integer() {
            self.0.numer().to_u64()
        } else {
            None
        }
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "cannot invert zero");
        Rat(self.0.recip())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Rat::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

impl fmt::Display for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        // BigRational renders "p/q", or "p" alone when the denominator is 1.
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl FromStr for Rat {
    type Err = num_rational::ParseRatioError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(Rat(BigRational::from_str(s)?))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat::from_uint(n)
    }
}

macro_rules! rat_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &Rat {
            type Output = Rat;
            fn $method(self, rhs: &Rat) -> Rat {
                Rat(std::ops::$trait::$method(&self.0, &rhs.0))
            }
        }

        impl std::ops::$trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat(std::ops::$trait::$method(self.0, rhs.0))
            }
        }
    };
}

rat_binop!(Add, add);
rat_binop!(Sub, sub);
rat_binop!(Mul, mul);
rat_binop!(Div, div);

impl std::ops::Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl std::ops::Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl std::ops::AddAssign<&Rat> for Rat {
    fn add_assign(&mut self, rhs: &Rat) {
        self.0 = &self.0 + &rhs.0;
    }
}

/// Binomial coefficient over machine integers. The arguments in this crate
/// stay far below any overflow threshold (statistics of partitions of n <= 40).
pub fn binom_u64(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u64 = 1;
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// A commutative ring with rational scalar action, addressed through a
/// descriptor value.
///
/// `embed` injects rational scalars, which is how rational series are lifted into
/// polynomial coefficient rings.
pub trait CoeffRing: Clone + PartialEq + fmt::Debug {
    type Elem: Clone + PartialEq + fmt::Debug;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn embed(&self, r: &Rat) -> Self::Elem;

    /// Canonical text encoding of an element, as a JSON value.
    fn encode(&self, a: &Self::Elem) -> serde_json::Value;
}

/// The field of rationals as a coefficient ring.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct RationalField;

impl CoeffRing for RationalField {
    type Elem = Rat;

    fn zero(&self) -> Rat {
        Rat::zero()
    }

    fn one(&self) -> Rat {
        Rat::one()
    }

    fn is_zero(&self, a: &Rat) -> bool {
        a.is_zero()
    }

    fn add(&self, a: &Rat, b: &Rat) -> Rat {
        a + b
    }

    fn sub(&self, a: &Rat, b: &Rat) -> Rat {
        a - b
    }

    fn mul(&self, a: &Rat, b: &Rat) -> Rat {
        a * b
    }

    fn neg(&self, a: &Rat) -> Rat {
        -a
    }

    fn embed(&self, r: &Rat) -> Rat {
        r.clone()
    }

    fn encode(&self, a: &Rat) -> serde_json::Value {
        serde_json::Value::String(a.to_string())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_and_display() {
        assert_eq!(Rat::new(4, 6).to_string(), "2/3");
        assert_eq!(Rat::new(-4, 6).to_string(), "-2/3");
        assert_eq!(Rat::new(4, -6).to_string(), "-2/3");
        assert_eq!(Rat::new(8, 2).to_string(), "4");
        assert_eq!(Rat::zero().to_string(), "0");
    }

    #[test]
    fn parse_round_trip() {
        for s in ["0", "7", "-5/2", "1/16"] {
            let r: Rat = s.parse().unwrap();
            assert_eq!(r.to_string(), s);
        }
    }

    #[test]
    fn arithmetic() {
        let a = Rat::new(1, 2);
        let b = Rat::new(1, 3);
        assert_eq!(&a + &b, Rat::new(5, 6));
        assert_eq!(&a - &b, Rat::new(1, 6));
        assert_eq!(&a * &b, Rat::new(1, 6));
        assert_eq!(&a / &b, Rat::new(3, 2));
        assert_eq!(-&a, Rat::new(-1, 2));
        assert_eq!(a.recip(), Rat::from_int(2));
        assert_eq!(Rat::new(2, 3).pow(3), Rat::new(8, 27));
    }

    #[test]
    fn integer_checks() {
        assert!(Rat::from_int(5).is_integer());
        assert_eq!(Rat::from_int(5).to_u64(), Some(5));
        assert!(!Rat::new(1, 2).is_integer());
        assert_eq!(Rat::new(1, 2).to_u64(), None);
        assert_eq!(Rat::from_int(-1).to_u64(), None);
    }

    #[test]
    fn binomials() {
        assert_eq!(binom_u64(5, 2), 10);
        assert_eq!(binom_u64(5, 0), 1);
        assert_eq!(binom_u64(3, 5), 0);
        assert_eq!(binom_u64(30, 4), 27405);
    }
}
