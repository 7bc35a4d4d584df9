use super::is_prime;
use crate::{Error, Result};
use std::fmt;
use std::str::FromStr;

/// Identifies a coefficient ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    Rationals,
    PrimeField(u64),
    /// `Q(ζ_d)`.
    Cyclotomic(u32),
    /// `K[t, t^-1]` over the given base field.
    Laurent(Box<RingDescriptor>),
}

impl RingDescriptor {
    pub fn laurent_over(base: RingDescriptor) -> Self {
        RingDescriptor::Laurent(Box::new(base))
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingDescriptor::Rationals | RingDescriptor::PrimeField(_) | RingDescriptor::Cyclotomic(_))
    }

    pub fn is_laurent(&self) -> bool {
        matches!(self, RingDescriptor::Laurent(_))
    }

    /// The field underlying a Laurent ring, or the ring itself.
    pub fn base(&self) -> &RingDescriptor {
        match self {
            RingDescriptor::Laurent(b) => b,
            other => other,
        }
    }

    /// Characteristic zero rings can embed `Q` coefficients.
    pub fn characteristic(&self) -> u64 {
        match self.base() {
            RingDescriptor::PrimeField(p) => *p,
            _ => 0,
        }
    }

    fn validate(self) -> Result<Self> {
        match &self {
            RingDescriptor::PrimeField(p) if !is_prime(*p) => Err(Error::Parse(format!("{p} is not prime"))),
            RingDescriptor::PrimeField(p) if *p > u32::MAX as u64 => {
                Err(Error::Parse(format!("modulus {p} too large")))
            }
            RingDescriptor::Cyclotomic(0) => Err(Error::Parse("cyclotomic order must be positive".into())),
            RingDescriptor::Laurent(b) if !b.is_field() => {
                Err(Error::Parse(format!("Laurent ring needs a field base, got {b}")))
            }
            _ => Ok(self),
        }
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::Rationals => write!(f, "Q"),
            RingDescriptor::PrimeField(p) => write!(f, "GF({p})"),
            RingDescriptor::Cyclotomic(d) => write!(f, "Q(z{d})"),
            RingDescriptor::Laurent(b) => write!(f, "{b}[t,t^-1]"),
        }
    }
}

fn parse_number<T: FromStr>(s: &str, what: &str) -> Result<T> {
    s.trim().parse().map_err(|_| Error::Parse(format!("bad {what} `{s}`")))
}

impl FromStr for RingDescriptor {
    type Err = Error;

    /// Accepts the display form (`Z`, `Q`, `GF(7)`, `Q(z5)`, `Q[t,t^-1]`,
    /// `GF(7)[t,t^-1]`) and the short aliases `z`, `q`, `fp:7`,
    /// `cyclotomic:5`, `laurent`, `laurent:7`, `laurent:cyclotomic:5`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let lower = s.to_ascii_lowercase();
        if let Some(base) = s.strip_suffix("[t,t^-1]") {
            return RingDescriptor::laurent_over(base.parse()?).validate();
        }
        let parsed = match lower.as_str() {
            "z" | "integers" | "int" => RingDescriptor::Integers,
            "q" | "rationals" | "rat" => RingDescriptor::Rationals,
            "laurent" => RingDescriptor::laurent_over(RingDescriptor::Rationals),
            _ => {
                if let Some(rest) = lower.strip_prefix("laurent:") {
                    let base = match rest.parse::<u64>() {
                        Ok(p) => RingDescriptor::PrimeField(p),
                        Err(_) => rest.parse()?,
                    };
                    RingDescriptor::laurent_over(base)
                } else if let Some(rest) = lower.strip_prefix("fp:") {
                    RingDescriptor::PrimeField(parse_number(rest, "prime")?)
                } else if let Some(rest) = lower.strip_prefix("cyclotomic:") {
                    RingDescriptor::Cyclotomic(parse_number(rest, "cyclotomic order")?)
                } else if let Some(rest) = lower.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')) {
                    RingDescriptor::PrimeField(parse_number(rest, "prime")?)
                } else if let Some(rest) =
                    lower.strip_prefix("q(z").or_else(|| lower.strip_prefix("q(zeta")).and_then(|r| r.strip_suffix(')'))
                {
                    let rest = rest.trim_start_matches("eta").trim_start_matches('_');
                    RingDescriptor::Cyclotomic(parse_number(rest, "cyclotomic order")?)
                } else {
                    return Err(Error::Parse(format!("unknown ring `{s}`")));
                }
            }
        };
        parsed.validate()
    }
}
