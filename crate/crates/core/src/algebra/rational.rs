use super::{field_euclidean, Parseable, Ring, RingDescriptor};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// An arbitrary-precision rational in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: impl Into<BigInt>, denom: impl Into<BigInt>) -> Self {
        Rational(BigRational::new(numer.into(), denom.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational(BigRational::from_integer(BigInt::from(v)))
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl Ring for Rational {
    type Ctx = ();

    fn ctx(&self) {}
    fn zero(_: &()) -> Self {
        Rational(BigRational::zero())
    }
    fn one(_: &()) -> Self {
        Rational(BigRational::one())
    }
    fn from_int(_: &(), value: &BigInt) -> Self {
        Rational(BigRational::from_integer(value.clone()))
    }
    fn descriptor(_: &()) -> RingDescriptor {
        RingDescriptor::Rationals
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, other: &Self) -> Self {
        Rational(&self.0 + &other.0)
    }
    fn sub(&self, other: &Self) -> Self {
        Rational(&self.0 - &other.0)
    }
    fn mul(&self, other: &Self) -> Self {
        Rational(&self.0 * &other.0)
    }
    fn neg(&self) -> Self {
        Rational(-&self.0)
    }
    fn inverse(&self) -> Option<Self> {
        (!self.0.is_zero()).then(|| Rational(self.0.recip()))
    }
}

field_euclidean!(Rational);

impl Parseable for Rational {
    fn from_rational(_: &(), value: &BigRational) -> Result<Self> {
        Ok(Rational(value.clone()))
    }

    fn symbol(_: &(), name: &str) -> Result<Self> {
        Err(Error::Parse(format!("symbol `{name}` not available over Q")))
    }
}
