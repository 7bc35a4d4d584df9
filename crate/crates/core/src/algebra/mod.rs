//! Exact coefficient rings.

mod cyclotomic;
mod descriptor;
mod integer;
mod laurent;
pub mod parse;
mod poly;
mod prime_field;
mod rational;
mod scalar;

pub use cyclotomic::{cyclotomic_poly, Cyclotomic, CyclotomicField};
pub use descriptor::RingDescriptor;
pub use integer::Integer;
pub use laurent::Laurent;
pub use poly::QPolynomial;
pub use prime_field::PrimeField;
pub use rational::Rational;
pub use scalar::{ring_of, Scalar, ScalarSize};

use num_bigint::BigInt;
use std::fmt;

/// A commutative ring with identity whose elements carry enough context to
/// build zero and one of the same ring.
pub trait Ring: Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    type Ctx: Clone + PartialEq + Eq + fmt::Debug + Send + Sync + 'static;

    fn ctx(&self) -> Self::Ctx;
    fn zero(ctx: &Self::Ctx) -> Self;
    fn one(ctx: &Self::Ctx) -> Self;
    fn from_int(ctx: &Self::Ctx, value: &BigInt) -> Self;
    fn descriptor(ctx: &Self::Ctx) -> RingDescriptor;

    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inverse(&self) -> Option<Self>;

    fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    fn from_i64(ctx: &Self::Ctx, value: i64) -> Self {
        Self::from_int(ctx, &BigInt::from(value))
    }

    fn is_one(&self) -> bool {
        *self == Self::one(&self.ctx())
    }

    fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Integer power; negative exponents need a unit.
    fn pow(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut acc = Self::one(&self.ctx());
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&sq);
            }
            e >>= 1;
            if e > 0 {
                sq = sq.mul(&sq);
            }
        }
        Some(acc)
    }
}

/// A Euclidean domain with a canonical representative in each unit orbit.
pub trait Euclidean: Ring {
    type Size: Ord + Clone + fmt::Debug;

    /// Euclidean size of a nonzero element.
    fn size(&self) -> Self::Size;

    /// Division with remainder; the remainder is zero or strictly smaller
    /// than `divisor`. Panics on a zero divisor.
    fn div_rem(&self, divisor: &Self) -> (Self, Self);

    /// A unit `u` such that `self * u` is the canonical associate
    /// (one for zero).
    fn normalizing_unit(&self) -> Self;

    fn normalized(&self) -> Self {
        self.mul(&self.normalizing_unit())
    }

    fn divides(&self, other: &Self) -> bool {
        if self.is_zero() {
            return other.is_zero();
        }
        other.div_rem(self).1.is_zero()
    }

    fn exact_div(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.normalized()
    }
}

/// Marker for fields; their Euclidean structure is trivial.
pub trait Field: Euclidean {}

/// Rings whose elements can be read from the textual scalar syntax.
pub trait Parseable: Ring {
    fn from_rational(ctx: &Self::Ctx, value: &num_rational::BigRational) -> crate::Result<Self>;
    fn symbol(ctx: &Self::Ctx, name: &str) -> crate::Result<Self>;
}

macro_rules! field_euclidean {
    ($ty:ty) => {
        impl $crate::algebra::Euclidean for $ty {
            type Size = ();
            fn size(&self) -> Self::Size {}
            fn div_rem(&self, divisor: &Self) -> (Self, Self) {
                let inv = $crate::algebra::Ring::inverse(divisor).expect("division by zero");
                (
                    $crate::algebra::Ring::mul(self, &inv),
                    <$ty as $crate::algebra::Ring>::zero(&$crate::algebra::Ring::ctx(self)),
                )
            }
            fn normalizing_unit(&self) -> Self {
                $crate::algebra::Ring::inverse(self)
                    .unwrap_or_else(|| <$ty as $crate::algebra::Ring>::one(&$crate::algebra::Ring::ctx(self)))
            }
        }
        impl $crate::algebra::Field for $ty {}
    };
}
pub(crate) use field_euclidean;

/// Number of residues coprime to `d` (Euler's totient).
pub fn totient(d: u32) -> u32 {
    let mut n = d;
    let mut result = d;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= p {
        if p.is_multiple_of(k) {
            return false;
        }
        k += 1;
    }
    true
}
