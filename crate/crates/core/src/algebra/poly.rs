use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use std::fmt;

/// Dense univariate polynomial over `Q`, coefficients from degree 0 upward,
/// with no trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct QPolynomial {
    coeffs: Vec<BigRational>,
}

impl QPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        trim(&mut coeffs);
        QPolynomial { coeffs }
    }

    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigRational::from_integer(BigInt::from(c))).collect())
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.coeffs.iter().rev().fold(BigRational::zero(), |acc, c| acc * x + c)
    }
}

impl fmt::Display for QPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, BigRational)> = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(e, c)| (e as i64, c.clone()))
            .collect();
        write_terms(f, &terms, "x")
    }
}

/// Writes `Σ c·var^e` with descending exponents in the scalar syntax.
pub(crate) fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i64, BigRational)], var: &str) -> fmt::Result {
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (e, c)) in terms.iter().enumerate() {
        let negative = c < &BigRational::zero();
        let magnitude = if negative { -c.clone() } else { c.clone() };
        if i == 0 {
            if negative {
                write!(f, "-")?;
            }
        } else {
            write!(f, "{}", if negative { " - " } else { " + " })?;
        }
        let monomial = match *e {
            0 => String::new(),
            1 => var.to_string(),
            e => format!("{var}^{e}"),
        };
        if monomial.is_empty() {
            write!(f, "{magnitude}")?;
        } else if magnitude.is_one() {
            write!(f, "{monomial}")?;
        } else {
            write!(f, "{magnitude}*{monomial}")?;
        }
    }
    Ok(())
}

pub(crate) fn trim(c: &mut Vec<BigRational>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

pub(crate) fn add(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let mut out: Vec<BigRational> = (0..n)
        .map(|i| match (a.get(i), b.get(i)) {
            (Some(x), Some(y)) => x + y,
            (Some(x), None) => x.clone(),
            (None, Some(y)) => y.clone(),
            (None, None) => unreachable!(),
        })
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[BigRational]) -> Vec<BigRational> {
    a.iter().map(|x| -x).collect()
}

pub(crate) fn sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    add(a, &neg(b))
}

pub(crate) fn mul(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(&mut out);
    out
}

pub(crate) fn scale(a: &[BigRational], s: &BigRational) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = a.iter().map(|x| x * s).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn div_rem(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let lead = b.last().expect("division by zero polynomial");
    let mut rem = a.to_vec();
    trim(&mut rem);
    if rem.len() < b.len() {
        return (Vec::new(), rem);
    }
    let mut quot = vec![BigRational::zero(); rem.len() - b.len() + 1];
    while rem.len() >= b.len() {
        let shift = rem.len() - b.len();
        let factor = rem.last().unwrap() / lead;
        for (i, c) in b.iter().enumerate() {
            rem[shift + i] -= &factor * c;
        }
        quot[shift] = factor;
        rem.pop();
        trim(&mut rem);
    }
    trim(&mut quot);
    (quot, rem)
}

/// Inverse of `a` modulo `m`, if `gcd(a, m) = 1`.
pub(crate) fn inverse_mod(a: &[BigRational], m: &[BigRational]) -> Option<Vec<BigRational>> {
    // invariant: old_s * a ≡ old_r (mod m)
    let (_, a_red) = div_rem(a, m);
    let mut old_r = a_red;
    let mut r = m.to_vec();
    let mut old_s = vec![BigRational::one()];
    let mut s: Vec<BigRational> = Vec::new();
    while !r.is_empty() {
        let (q, rem) = div_rem(&old_r, &r);
        let new_s = sub(&old_s, &mul(&q, &s));
        old_r = std::mem::replace(&mut r, rem);
        old_s = std::mem::replace(&mut s, new_s);
    }
    if old_r.len() != 1 {
        return None;
    }
    let inv_lead = old_r[0].recip();
    Some(div_rem(&scale(&old_s, &inv_lead), m).1)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<BigRational> {
        QPolynomial::from_integers(v).coefficients().to_vec()
    }

    #[test]
    fn division_identity() {
        let a = q(&[-1, 0, 0, 0, 0, 0, 1]);
        let b = q(&[1, 1, 1]);
        let (quot, rem) = div_rem(&a, &b);
        assert_eq!(add(&mul(&quot, &b), &rem), a);
        assert!(rem.len() < b.len());
    }

    #[test]
    fn modular_inverse() {
        let m = q(&[1, 1, 1]);
        let a = q(&[2, 3]);
        let inv = inverse_mod(&a, &m).unwrap();
        assert_eq!(div_rem(&mul(&a, &inv), &m).1, q(&[1]));
        assert!(inverse_mod(&q(&[1, 1]), &q(&[-1, 0, 1])).is_none());
    }

    #[test]
    fn display() {
        assert_eq!(QPolynomial::from_integers(&[1, -1, 1]).to_string(), "x^2 - x + 1");
        assert_eq!(QPolynomial::from_integers(&[-1, 1]).to_string(), "x - 1");
        assert_eq!(QPolynomial::from_integers(&[]).to_string(), "0");
    }
}
