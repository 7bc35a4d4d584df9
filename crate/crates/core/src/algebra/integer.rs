use super::{Euclidean, Parseable, Ring, RingDescriptor};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An arbitrary-precision integer.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Integer(pub BigInt);

impl Integer {
    pub fn new(value: impl Into<BigInt>) -> Self {
        Integer(value.into())
    }

    pub fn value(&self) -> &BigInt {
        &self.0
    }
}

impl From<i64> for Integer {
    fn from(v: i64) -> Self {
        Integer(BigInt::from(v))
    }
}

impl fmt::Display for Integer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Integer {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Integer(BigInt::zero())
    }
    fn one(_: &()) -> Self {
        Integer(BigInt::one())
    }
    fn from_int(_: &(), value: &BigInt) -> Self {
        Integer(value.clone())
    }
    fn descriptor(_: &()) -> RingDescriptor {
        RingDescriptor::Integers
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Integer(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Integer(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Integer(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Integer(-&self.0)
    }
    fn inverse(&self) -> Option<Self> {
        (self.0.abs().is_one()).then(|| self.clone())
    }
}

impl Euclidean for Integer {
    type Size = BigUint;

    fn size(&self) -> BigUint {
        self.0.magnitude().clone()
    }

    /// Floor division; the remainder has the sign of the divisor and smaller
    /// magnitude.
    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.0.is_zero(), "division by zero");
        let (q, r) = self.0.div_mod_floor(&divisor.0);
        (Integer(q), Integer(r))
    }

    fn normalizing_unit(&self) -> Self {
        if self.0.sign() == Sign::Minus {
            Integer(BigInt::from(-1))
        } else {
            Integer(BigInt::one())
        }
    }
}

impl Parseable for Integer {
    fn from_rational(_: &(), value: &BigRational) -> Result<Self> {
        if value.is_integer() {
            Ok(Integer(value.to_integer()))
        } else {
            Err(Error::Parse(format!("{value} is not an integer")))
        }
    }

    fn symbol(_: &(), name: &str) -> Result<Self> {
        Err(Error::Parse(format!("symbol `{name}` not available over Z")))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(v: i64) -> Integer {
        Integer::from(v)
    }

    #[test]
    fn division_shrinks_remainder() {
        for a in -20..=20 {
            for b in [-7i64, -3, -1, 1, 2, 5] {
                let (q, r) = int(a).div_rem(&int(b));
                assert_eq!(q.mul(&int(b)).add(&r), int(a));
                assert!(r.is_zero() || r.size() < int(b).size());
            }
        }
    }

    #[test]
    fn normalization_is_positive() {
        assert_eq!(int(-6).normalized(), int(6));
        assert_eq!(int(4).gcd(&int(-6)), int(2));
        assert_eq!(int(0).normalized(), int(0));
    }

    #[test]
    fn units() {
        assert!(int(-1).is_unit());
        assert!(!int(2).is_unit());
        assert_eq!(int(-1).pow(-3), Some(int(-1)));
        assert_eq!(int(2).pow(-1), None);
        assert_eq!(int(3).pow(4), Some(int(81)));
    }
}
