use super::poly::{self, QPolynomial};
use super::{field_euclidean, totient, Parseable, Ring, RingDescriptor};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use once_cell::sync::Lazy;
use parking_lot::Mutex;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

static CYCLOTOMIC_POLYS: Lazy<Mutex<HashMap<u32, QPolynomial>>> = Lazy::new(|| Mutex::new(HashMap::new()));
static FIELDS: Lazy<Mutex<HashMap<u32, CyclotomicField>>> = Lazy::new(|| Mutex::new(HashMap::new()));

/// The `d`-th cyclotomic polynomial, obtained by dividing `x^d - 1` by
/// `Φ_e` for every proper divisor `e` of `d`.
pub fn cyclotomic_poly(d: u32) -> QPolynomial {
    assert!(d >= 1, "cyclotomic order must be positive");
    if let Some(p) = CYCLOTOMIC_POLYS.lock().get(&d) {
        return p.clone();
    }
    let mut coeffs = vec![BigRational::zero(); d as usize + 1];
    coeffs[0] = -BigRational::one();
    coeffs[d as usize] = BigRational::one();
    for e in (1..d).filter(|e| d.is_multiple_of(*e)) {
        let (quot, rem) = poly::div_rem(&coeffs, cyclotomic_poly(e).coefficients());
        debug_assert!(rem.is_empty());
        coeffs = quot;
    }
    let result = QPolynomial::new(coeffs);
    CYCLOTOMIC_POLYS.lock().insert(d, result.clone());
    result
}

#[derive(Debug)]
struct FieldData {
    order: u32,
    degree: usize,
    modulus: Vec<BigRational>,
}

/// The field `Q(ζ_d) = Q[x]/Φ_d`; handles are shared per order.
#[derive(Clone, Debug)]
pub struct CyclotomicField(Arc<FieldData>);

impl PartialEq for CyclotomicField {
    fn eq(&self, other: &Self) -> bool {
        self.0.order == other.0.order
    }
}

impl Eq for CyclotomicField {}

impl CyclotomicField {
    pub fn new(order: u32) -> Self {
        assert!(order >= 1, "cyclotomic order must be positive");
        let mut fields = FIELDS.lock();
        if let Some(f) = fields.get(&order) {
            return f.clone();
        }
        let modulus = cyclotomic_poly(order).coefficients().to_vec();
        let field = CyclotomicField(Arc::new(FieldData { order, degree: totient(order) as usize, modulus }));
        fields.insert(order, field.clone());
        field
    }

    pub fn order(&self) -> u32 {
        self.0.order
    }

    /// `φ(d)`, the dimension over `Q`.
    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// The primitive root `ζ_d`, the class of `x`.
    pub fn generator(&self) -> Cyclotomic {
        Cyclotomic::from_coeffs(self.clone(), vec![BigRational::zero(), BigRational::one()])
    }

    /// `ζ_d^k` for any integer `k`.
    pub fn root_power(&self, k: i64) -> Cyclotomic {
        let e = k.rem_euclid(self.order() as i64) as usize;
        let mut coeffs = vec![BigRational::zero(); e + 1];
        coeffs[e] = BigRational::one();
        Cyclotomic::from_coeffs(self.clone(), coeffs)
    }
}

/// An element of `Q(ζ_d)`, stored reduced modulo `Φ_d`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cyclotomic {
    field: CyclotomicField,
    coeffs: Vec<BigRational>,
}

impl Cyclotomic {
    pub fn from_coeffs(field: CyclotomicField, coeffs: Vec<BigRational>) -> Self {
        let coeffs = poly::div_rem(&coeffs, &field.0.modulus).1;
        Cyclotomic { field, coeffs }
    }

    pub fn from_rational(field: CyclotomicField, value: BigRational) -> Self {
        Self::from_coeffs(field, vec![value])
    }

    pub fn field(&self) -> &CyclotomicField {
        &self.field
    }

    /// Coefficients in the power basis `1, ζ, …, ζ^{φ(d)-1}`, padded to `φ(d)`.
    pub fn coefficients(&self) -> Vec<BigRational> {
        let mut c = self.coeffs.clone();
        c.resize(self.field.degree(), BigRational::zero());
        c
    }

    /// The rational value, if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        match self.coeffs.len() {
            0 => Some(BigRational::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }
}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c.clone()))
            .collect();
        poly::write_terms(f, &terms, &format!("z{}", self.field.order()))
    }
}

impl Ring for Cyclotomic {
    type Ctx = CyclotomicField;

    fn ctx(&self) -> CyclotomicField {
        self.field.clone()
    }
    fn zero(ctx: &CyclotomicField) -> Self {
        Cyclotomic { field: ctx.clone(), coeffs: Vec::new() }
    }
    fn one(ctx: &CyclotomicField) -> Self {
        Self::from_coeffs(ctx.clone(), vec![BigRational::one()])
    }
    fn from_int(ctx: &CyclotomicField, value: &BigInt) -> Self {
        Self::from_coeffs(ctx.clone(), vec![BigRational::from_integer(value.clone())])
    }
    fn descriptor(ctx: &CyclotomicField) -> RingDescriptor {
        RingDescriptor::Cyclotomic(ctx.order())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    fn add(&self, other: &Self) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: poly::add(&self.coeffs, &other.coeffs) }
    }
    fn sub(&self, other: &Self) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: poly::sub(&self.coeffs, &other.coeffs) }
    }
    fn mul(&self, other: &Self) -> Self {
        Self::from_coeffs(self.field.clone(), poly::mul(&self.coeffs, &other.coeffs))
    }
    fn neg(&self) -> Self {
        Cyclotomic { field: self.field.clone(), coeffs: poly::neg(&self.coeffs) }
    }
    fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let inv = poly::inverse_mod(&self.coeffs, &self.field.0.modulus)?;
        Some(Cyclotomic { field: self.field.clone(), coeffs: inv })
    }
}

field_euclidean!(Cyclotomic);

impl Parseable for Cyclotomic {
    fn from_rational(ctx: &CyclotomicField, value: &BigRational) -> Result<Self> {
        Ok(Self::from_rational(ctx.clone(), value.clone()))
    }

    /// `z` is `ζ_d`; `z<e>` (or `zeta<e>`) is `ζ_e = ζ_d^{d/e}` for `e | d`.
    fn symbol(ctx: &CyclotomicField, name: &str) -> Result<Self> {
        let digits = name
            .strip_prefix("zeta")
            .or_else(|| name.strip_prefix('z'))
            .ok_or_else(|| Error::Parse(format!("unknown symbol `{name}` in Q(z{})", ctx.order())))?;
        let digits = digits.trim_start_matches('_');
        let e: u32 = if digits.is_empty() {
            ctx.order()
        } else {
            digits.parse().map_err(|_| Error::Parse(format!("unknown symbol `{name}`")))?
        };
        if e == 0 || !ctx.order().is_multiple_of(e) {
            return Err(Error::Parse(format!("z{e} does not lie in Q(z{})", ctx.order())));
        }
        Ok(ctx.root_power((ctx.order() / e) as i64))
    }
}
