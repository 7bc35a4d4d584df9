use super::{field_euclidean, Parseable, Ring, RingDescriptor};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use std::fmt;

/// An element of `GF(p)`; the modulus travels with the value.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct PrimeField {
    value: u64,
    modulus: u64,
}

impl PrimeField {
    /// `modulus` must be prime; callers go through [`RingDescriptor`]
    /// validation or pass a known prime.
    pub fn new(value: i64, modulus: u64) -> Self {
        let m = modulus as i128;
        PrimeField { value: (value as i128).rem_euclid(m) as u64, modulus }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    fn reduce_big(value: &BigInt, modulus: u64) -> u64 {
        let m = BigInt::from(modulus);
        let r = ((value % &m) + &m) % &m;
        r.to_u64().expect("residue fits")
    }
}

impl fmt::Display for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Ring for PrimeField {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.modulus
    }
    fn zero(p: &u64) -> Self {
        PrimeField { value: 0, modulus: *p }
    }
    fn one(p: &u64) -> Self {
        PrimeField { value: 1 % *p, modulus: *p }
    }
    fn from_int(p: &u64, value: &BigInt) -> Self {
        PrimeField { value: Self::reduce_big(value, *p), modulus: *p }
    }
    fn descriptor(p: &u64) -> RingDescriptor {
        RingDescriptor::PrimeField(*p)
    }
    fn is_zero(&self) -> bool {
        self.value == 0
    }
    fn add(&self, other: &Self) -> Self {
        let v = (self.value as u128 + other.value as u128) % self.modulus as u128;
        PrimeField { value: v as u64, modulus: self.modulus }
    }
    fn sub(&self, other: &Self) -> Self {
        let m = self.modulus as u128;
        let v = (self.value as u128 + m - other.value as u128) % m;
        PrimeField { value: v as u64, modulus: self.modulus }
    }
    fn mul(&self, other: &Self) -> Self {
        let v = (self.value as u128 * other.value as u128) % self.modulus as u128;
        PrimeField { value: v as u64, modulus: self.modulus }
    }
    fn neg(&self) -> Self {
        PrimeField { value: (self.modulus - self.value) % self.modulus, modulus: self.modulus }
    }
    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            return None;
        }
        // Fermat: a^(p-2)
        let mut result = 1u128;
        let m = self.modulus as u128;
        let mut base = self.value as u128;
        let mut e = self.modulus - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % m;
            }
            base = base * base % m;
            e >>= 1;
        }
        Some(PrimeField { value: result as u64, modulus: self.modulus })
    }
}

field_euclidean!(PrimeField);

impl Parseable for PrimeField {
    fn from_rational(p: &u64, value: &BigRational) -> Result<Self> {
        let den = Self::from_int(p, value.denom());
        if den.is_zero() {
            return Err(Error::Parse(format!("{value} has denominator divisible by {p}")));
        }
        Ok(Self::from_int(p, value.numer()).mul(&den.inverse().expect("nonzero")))
    }

    fn symbol(p: &u64, name: &str) -> Result<Self> {
        Err(Error::Parse(format!("symbol `{name}` not available over GF({p})")))
    }
}
