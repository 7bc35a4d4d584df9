use super::parse::parse_scalar;
use super::{Cyclotomic, CyclotomicField, Euclidean, Integer, Laurent, PrimeField, Rational, Ring, RingDescriptor};
use crate::{Error, Result};
use num_bigint::{BigInt, BigUint};
use std::fmt;

/// A scalar from any supported ring, tagged with its ring.
///
/// Binary operations require both operands to live in the same ring;
/// containers such as matrices check this once at construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Scalar {
    Int(Integer),
    Rat(Rational),
    Fp(PrimeField),
    Cyc(Cyclotomic),
    LaurentQ(Laurent<Rational>),
    LaurentFp(Laurent<PrimeField>),
    LaurentCyc(Laurent<Cyclotomic>),
}

/// Euclidean size of a [`Scalar`]; only comparable within one ring.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum ScalarSize {
    Magnitude(BigUint),
    Span(usize),
    Unit,
}

impl Scalar {
    /// Parses `text` as an element of `ring`.
    pub fn parse(text: &str, ring: &RingDescriptor) -> Result<Self> {
        Ok(match ring {
            RingDescriptor::Integers => Scalar::Int(parse_scalar(text, &())?),
            RingDescriptor::Rationals => Scalar::Rat(parse_scalar(text, &())?),
            RingDescriptor::PrimeField(p) => Scalar::Fp(parse_scalar(text, p)?),
            RingDescriptor::Cyclotomic(d) => Scalar::Cyc(parse_scalar(text, &CyclotomicField::new(*d))?),
            RingDescriptor::Laurent(base) => match base.as_ref() {
                RingDescriptor::Rationals => Scalar::LaurentQ(parse_scalar(text, &())?),
                RingDescriptor::PrimeField(p) => Scalar::LaurentFp(parse_scalar(text, p)?),
                RingDescriptor::Cyclotomic(d) => Scalar::LaurentCyc(parse_scalar(text, &CyclotomicField::new(*d))?),
                other => return Err(Error::Parse(format!("unsupported Laurent base {other}"))),
            },
        })
    }

    pub fn ring(&self) -> RingDescriptor {
        Ring::ctx(self)
    }

    fn mismatch(&self, other: &Self) -> ! {
        panic!("scalar ring mismatch: {} vs {}", self.ring(), other.ring())
    }
}

/// The common ring of a nonempty homogeneous list of scalars.
pub fn ring_of(values: &[Scalar]) -> Result<RingDescriptor> {
    let first = values.first().ok_or(Error::EmptyInput("ring_of needs at least one value"))?;
    let ring = first.ring();
    for v in &values[1..] {
        let other = v.ring();
        if other != ring {
            return Err(Error::MixedRings(ring.to_string(), other.to_string()));
        }
    }
    Ok(ring)
}

macro_rules! dispatch_unary {
    ($self:expr, $x:ident => $body:expr) => {
        match $self {
            Scalar::Int($x) => Scalar::Int($body),
            Scalar::Rat($x) => Scalar::Rat($body),
            Scalar::Fp($x) => Scalar::Fp($body),
            Scalar::Cyc($x) => Scalar::Cyc($body),
            Scalar::LaurentQ($x) => Scalar::LaurentQ($body),
            Scalar::LaurentFp($x) => Scalar::LaurentFp($body),
            Scalar::LaurentCyc($x) => Scalar::LaurentCyc($body),
        }
    };
}

macro_rules! dispatch_binary {
    ($self:expr, $other:expr, $a:ident, $b:ident => $body:expr) => {
        match ($self, $other) {
            (Scalar::Int($a), Scalar::Int($b)) => Scalar::Int($body),
            (Scalar::Rat($a), Scalar::Rat($b)) => Scalar::Rat($body),
            (Scalar::Fp($a), Scalar::Fp($b)) => Scalar::Fp($body),
            (Scalar::Cyc($a), Scalar::Cyc($b)) => Scalar::Cyc($body),
            (Scalar::LaurentQ($a), Scalar::LaurentQ($b)) => Scalar::LaurentQ($body),
            (Scalar::LaurentFp($a), Scalar::LaurentFp($b)) => Scalar::LaurentFp($body),
            (Scalar::LaurentCyc($a), Scalar::LaurentCyc($b)) => Scalar::LaurentCyc($body),
            (x, y) => x.mismatch(y),
        }
    };
}

macro_rules! dispatch_ref {
    ($self:expr, $x:ident => $body:expr) => {
        match $self {
            Scalar::Int($x) => $body,
            Scalar::Rat($x) => $body,
            Scalar::Fp($x) => $body,
            Scalar::Cyc($x) => $body,
            Scalar::LaurentQ($x) => $body,
            Scalar::LaurentFp($x) => $body,
            Scalar::LaurentCyc($x) => $body,
        }
    };
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        dispatch_ref!(self, x => write!(f, "{x}"))
    }
}

impl Ring for Scalar {
    type Ctx = RingDescriptor;

    fn ctx(&self) -> RingDescriptor {
        match self {
            Scalar::Int(_) => RingDescriptor::Integers,
            Scalar::Rat(_) => RingDescriptor::Rationals,
            Scalar::Fp(x) => RingDescriptor::PrimeField(x.modulus()),
            Scalar::Cyc(x) => RingDescriptor::Cyclotomic(x.field().order()),
            Scalar::LaurentQ(_) => RingDescriptor::laurent_over(RingDescriptor::Rationals),
            Scalar::LaurentFp(x) => RingDescriptor::laurent_over(RingDescriptor::PrimeField(*x.base_ctx())),
            Scalar::LaurentCyc(x) => RingDescriptor::laurent_over(RingDescriptor::Cyclotomic(x.base_ctx().order())),
        }
    }

    fn zero(ctx: &RingDescriptor) -> Self {
        Self::from_int(ctx, &BigInt::from(0))
    }

    fn one(ctx: &RingDescriptor) -> Self {
        Self::from_int(ctx, &BigInt::from(1))
    }

    fn from_int(ctx: &RingDescriptor, value: &BigInt) -> Self {
        match ctx {
            RingDescriptor::Integers => Scalar::Int(Integer::from_int(&(), value)),
            RingDescriptor::Rationals => Scalar::Rat(Rational::from_int(&(), value)),
            RingDescriptor::PrimeField(p) => Scalar::Fp(PrimeField::from_int(p, value)),
            RingDescriptor::Cyclotomic(d) => Scalar::Cyc(Cyclotomic::from_int(&CyclotomicField::new(*d), value)),
            RingDescriptor::Laurent(base) => match base.as_ref() {
                RingDescriptor::Rationals => Scalar::LaurentQ(Laurent::from_int(&(), value)),
                RingDescriptor::PrimeField(p) => Scalar::LaurentFp(Laurent::from_int(p, value)),
                RingDescriptor::Cyclotomic(d) => {
                    Scalar::LaurentCyc(Laurent::from_int(&CyclotomicField::new(*d), value))
                }
                other => panic!("unsupported Laurent base {other}"),
            },
        }
    }

    fn descriptor(ctx: &RingDescriptor) -> RingDescriptor {
        ctx.clone()
    }

    fn is_zero(&self) -> bool {
        dispatch_ref!(self, x => x.is_zero())
    }

    fn add(&self, other: &Self) -> Self {
        dispatch_binary!(self, other, a, b => a.add(b))
    }

    fn sub(&self, other: &Self) -> Self {
        dispatch_binary!(self, other, a, b => a.sub(b))
    }

    fn mul(&self, other: &Self) -> Self {
        dispatch_binary!(self, other, a, b => a.mul(b))
    }

    fn neg(&self) -> Self {
        dispatch_unary!(self, x => x.neg())
    }

    fn inverse(&self) -> Option<Self> {
        Some(match self {
            Scalar::Int(x) => Scalar::Int(x.inverse()?),
            Scalar::Rat(x) => Scalar::Rat(x.inverse()?),
            Scalar::Fp(x) => Scalar::Fp(x.inverse()?),
            Scalar::Cyc(x) => Scalar::Cyc(x.inverse()?),
            Scalar::LaurentQ(x) => Scalar::LaurentQ(x.inverse()?),
            Scalar::LaurentFp(x) => Scalar::LaurentFp(x.inverse()?),
            Scalar::LaurentCyc(x) => Scalar::LaurentCyc(x.inverse()?),
        })
    }
}

impl Euclidean for Scalar {
    type Size = ScalarSize;

    fn size(&self) -> ScalarSize {
        match self {
            Scalar::Int(x) => ScalarSize::Magnitude(x.size()),
            Scalar::Rat(_) | Scalar::Fp(_) | Scalar::Cyc(_) => ScalarSize::Unit,
            Scalar::LaurentQ(x) => ScalarSize::Span(x.size()),
            Scalar::LaurentFp(x) => ScalarSize::Span(x.size()),
            Scalar::LaurentCyc(x) => ScalarSize::Span(x.size()),
        }
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        match (self, divisor) {
            (Scalar::Int(a), Scalar::Int(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::Int(q), Scalar::Int(r))
            }
            (Scalar::Rat(a), Scalar::Rat(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::Rat(q), Scalar::Rat(r))
            }
            (Scalar::Fp(a), Scalar::Fp(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::Fp(q), Scalar::Fp(r))
            }
            (Scalar::Cyc(a), Scalar::Cyc(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::Cyc(q), Scalar::Cyc(r))
            }
            (Scalar::LaurentQ(a), Scalar::LaurentQ(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::LaurentQ(q), Scalar::LaurentQ(r))
            }
            (Scalar::LaurentFp(a), Scalar::LaurentFp(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::LaurentFp(q), Scalar::LaurentFp(r))
            }
            (Scalar::LaurentCyc(a), Scalar::LaurentCyc(b)) => {
                let (q, r) = a.div_rem(b);
                (Scalar::LaurentCyc(q), Scalar::LaurentCyc(r))
            }
            (x, y) => x.mismatch(y),
        }
    }

    fn normalizing_unit(&self) -> Self {
        dispatch_unary!(self, x => x.normalizing_unit())
    }
}

macro_rules! scalar_from {
    ($ty:ty, $variant:ident) => {
        impl From<$ty> for Scalar {
            fn from(v: $ty) -> Self {
                Scalar::$variant(v)
            }
        }
    };
}

scalar_from!(Integer, Int);
scalar_from!(Rational, Rat);
scalar_from!(PrimeField, Fp);
scalar_from!(Cyclotomic, Cyc);
scalar_from!(Laurent<Rational>, LaurentQ);
scalar_from!(Laurent<PrimeField>, LaurentFp);
scalar_from!(Laurent<Cyclotomic>, LaurentCyc);
