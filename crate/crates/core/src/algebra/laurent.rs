use super::{Euclidean, Field, Parseable, Ring, RingDescriptor};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use std::fmt;

/// A Laurent polynomial `Σ c_e t^e` over a field `K`.
///
/// Stored as a coefficient run starting at exponent `low`; the first and last
/// coefficients are nonzero, and zero is the empty run.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Laurent<K: Field> {
    ctx: K::Ctx,
    low: i64,
    coeffs: Vec<K>,
}

impl<K: Field> Laurent<K> {
    pub fn from_coeffs(ctx: K::Ctx, low: i64, coeffs: Vec<K>) -> Self {
        let mut out = Laurent { ctx, low, coeffs };
        out.trim();
        out
    }

    pub fn constant(value: K) -> Self {
        Self::monomial(value, 0)
    }

    pub fn monomial(coeff: K, exp: i64) -> Self {
        Self::from_coeffs(coeff.ctx(), exp, vec![coeff])
    }

    /// `t^exp` over the given base.
    pub fn t_power(ctx: &K::Ctx, exp: i64) -> Self {
        Self::monomial(K::one(ctx), exp)
    }

    pub fn base_ctx(&self) -> &K::Ctx {
        &self.ctx
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then_some(self.low)
    }

    pub fn high_degree(&self) -> Option<i64> {
        (!self.coeffs.is_empty()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    /// `max - min` of the exponent support.
    pub fn span(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coefficient(&self, exp: i64) -> K {
        let idx = exp - self.low;
        if idx < 0 || idx >= self.coeffs.len() as i64 {
            K::zero(&self.ctx)
        } else {
            self.coeffs[idx as usize].clone()
        }
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &K)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Value at a unit `x` of the base field.
    pub fn evaluate(&self, x: &K) -> Option<K> {
        let mut acc = K::zero(&self.ctx);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        Some(acc.mul(&x.pow(self.low)?))
    }

    /// The image under `t ↦ t^{-1}`.
    pub fn bar(&self) -> Self {
        if self.coeffs.is_empty() {
            return self.clone();
        }
        let high = self.low + self.coeffs.len() as i64 - 1;
        let coeffs = self.coeffs.iter().rev().cloned().collect();
        Laurent { ctx: self.ctx.clone(), low: -high, coeffs }
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    fn poly_div_rem(a: &[K], b: &[K]) -> (Vec<K>, Vec<K>) {
        let ctx = b[0].ctx();
        let lead_inv = b.last().unwrap().inverse().expect("nonzero leading coefficient");
        let mut rem = a.to_vec();
        if rem.len() < b.len() {
            return (Vec::new(), rem);
        }
        let mut quot = vec![K::zero(&ctx); rem.len() - b.len() + 1];
        while rem.len() >= b.len() {
            let shift = rem.len() - b.len();
            let factor = rem.last().unwrap().mul(&lead_inv);
            if !factor.is_zero() {
                for (i, c) in b.iter().enumerate() {
                    rem[shift + i] = rem[shift + i].sub(&factor.mul(c));
                }
            }
            quot[shift] = factor;
            rem.pop();
        }
        (quot, rem)
    }
}

impl<K: Field> fmt::Display for Laurent<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &K)> = self.terms().collect();
        if terms.is_empty() {
            return write!(f, "0");
        }
        let descriptor = K::descriptor(&self.ctx);
        for (i, (e, c)) in terms.iter().rev().enumerate() {
            let text = c.to_string();
            let (negative, magnitude) = match (&descriptor, text.strip_prefix('-')) {
                (RingDescriptor::Rationals, Some(rest)) => (true, rest.to_string()),
                (RingDescriptor::Cyclotomic(_), Some(rest)) if !rest.contains(" + ") && !rest.contains(" - ") => {
                    (true, rest.to_string())
                }
                _ => (false, text),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let compound = magnitude.contains(' ');
            let monomial = match *e {
                0 => String::new(),
                1 => "t".to_string(),
                e => format!("t^{e}"),
            };
            match (monomial.is_empty(), magnitude == "1", compound) {
                (true, _, _) => write!(f, "{magnitude}")?,
                (false, true, _) => write!(f, "{monomial}")?,
                (false, false, true) => write!(f, "({magnitude})*{monomial}")?,
                (false, false, false) => write!(f, "{magnitude}*{monomial}")?,
            }
        }
        Ok(())
    }
}

impl<K: Field> Ring for Laurent<K> {
    type Ctx = K::Ctx;

    fn ctx(&self) -> K::Ctx {
        self.ctx.clone()
    }
    fn zero(ctx: &K::Ctx) -> Self {
        Laurent { ctx: ctx.clone(), low: 0, coeffs: Vec::new() }
    }
    fn one(ctx: &K::Ctx) -> Self {
        Self::constant(K::one(ctx))
    }
    fn from_int(ctx: &K::Ctx, value: &BigInt) -> Self {
        Self::constant(K::from_int(ctx, value))
    }
    fn descriptor(ctx: &K::Ctx) -> RingDescriptor {
        RingDescriptor::laurent_over(K::descriptor(ctx))
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let low = self.low.min(other.low);
        let high = self.high_degree().unwrap().max(other.high_degree().unwrap());
        let coeffs = (low..=high).map(|e| self.coefficient(e).add(&other.coefficient(e))).collect();
        Self::from_coeffs(self.ctx.clone(), low, coeffs)
    }
    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(&self.ctx);
        }
        let mut coeffs = vec![K::zero(&self.ctx); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        Self::from_coeffs(self.ctx.clone(), self.low + other.low, coeffs)
    }
    fn neg(&self) -> Self {
        Laurent { ctx: self.ctx.clone(), low: self.low, coeffs: self.coeffs.iter().map(K::neg).collect() }
    }
    /// Units are exactly the nonzero monomials.
    fn inverse(&self) -> Option<Self> {
        if self.coeffs.len() != 1 {
            return None;
        }
        Some(Self::monomial(self.coeffs[0].inverse()?, -self.low))
    }
}

impl<K: Field> Euclidean for Laurent<K> {
    type Size = usize;

    fn size(&self) -> usize {
        self.span()
    }

    fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(!divisor.is_zero(), "division by zero");
        if self.is_zero() {
            return (Self::zero(&self.ctx), Self::zero(&self.ctx));
        }
        let (quot, rem) = Self::poly_div_rem(&self.coeffs, &divisor.coeffs);
        (
            Self::from_coeffs(self.ctx.clone(), self.low - divisor.low, quot),
            Self::from_coeffs(self.ctx.clone(), self.low, rem),
        )
    }

    /// Shifts to valuation zero and makes the leading coefficient one.
    fn normalizing_unit(&self) -> Self {
        match self.coeffs.last() {
            None => Self::one(&self.ctx),
            Some(lead) => Self::monomial(lead.inverse().expect("nonzero"), -self.low),
        }
    }
}

impl<K: Field + Parseable> Parseable for Laurent<K> {
    fn from_rational(ctx: &K::Ctx, value: &BigRational) -> Result<Self> {
        Ok(Self::constant(K::from_rational(ctx, value)?))
    }

    fn symbol(ctx: &K::Ctx, name: &str) -> Result<Self> {
        if name == "t" {
            return Ok(Self::t_power(ctx, 1));
        }
        K::symbol(ctx, name)
            .map(Self::constant)
            .map_err(|_| Error::Parse(format!("unknown symbol `{name}` in {}", Self::descriptor(ctx))))
    }
}
