//! First Betti numbers of Milnor fibers split along the eigenvalues of the
//! monodromy, and the divisibility obstruction they carry.

use crate::algebra::{Cyclotomic, CyclotomicField};
use crate::arrangement::Arrangement;
use crate::chain::homology;
use crate::fox::{alexander_complex, GroupPresentation, Specialization};
use crate::koszul::{complete_homology_generic_position, UnitAssignment};
use crate::{Error, Result};
use rayon::prelude::*;
use serde::Serialize;

/// `b_1^t(F)` for `t = 0..n`, where `n + 1` is the number of hyperplanes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MilnorSpectrum {
    n: usize,
    values: Vec<u64>,
}

impl MilnorSpectrum {
    /// Checks `b^0 = n` and the symmetry `b^t = b^{n+1-t}`.
    pub fn new(n: usize, values: Vec<u64>) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("a spectrum needs n >= 1".into()));
        }
        if values.len() != n + 1 {
            return Err(Error::InvalidInput(format!(
                "spectrum for n = {n} needs {} values, got {}",
                n + 1,
                values.len()
            )));
        }
        if values[0] != n as u64 {
            return Err(Error::InvalidInput(format!("b_1^0 must equal n = {n}, got {}", values[0])));
        }
        if let Some(t) = (1..=n).find(|&t| values[t] != values[n + 1 - t]) {
            return Err(Error::InvalidInput(format!(
                "spectrum is not conjugation symmetric: b^{t} = {} but b^{} = {}",
                values[t],
                n + 1 - t,
                values[n + 1 - t]
            )));
        }
        Ok(MilnorSpectrum { n, values })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn values(&self) -> &[u64] {
        &self.values
    }

    pub fn b1_total(&self) -> u64 {
        self.values.iter().sum()
    }
}

fn root_units(field: &CyclotomicField, t: usize, n: usize) -> Vec<Cyclotomic> {
    vec![field.root_power(t as i64); n]
}

/// `b_1^t = dim H_1(M; L_t)` with every meridian acting by `ζ_{n+1}^t`.
pub fn spectrum_from_presentation(p: &GroupPresentation) -> Result<MilnorSpectrum> {
    p.check_meridians()?;
    let n = p.generators();
    if n == 0 {
        return Err(Error::InvalidInput("presentation has no generators".into()));
    }
    let field = CyclotomicField::new(n as u32 + 1);
    let values = (0..=n)
        .into_par_iter()
        .map(|t| {
            let phi = Specialization::new(field.clone(), root_units(&field, t, n))?;
            let c = alexander_complex(p, &phi)?;
            Ok(homology(&c, 1)?.free_rank as u64)
        })
        .collect::<Result<Vec<u64>>>()?;
    if values[0] != n as u64 {
        return Err(Error::Disagreement(format!("b_1^0 = {} but the presentation has {n} meridians", values[0])));
    }
    MilnorSpectrum::new(n, values).map_err(|e| Error::Disagreement(e.to_string()))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Obstructed,
    NotObstructed,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ObstructionReport {
    pub n: usize,
    pub spectrum: Vec<u64>,
    pub b1_total: u64,
    /// `b_1^t` constant for `1 ≤ t ≤ n`.
    pub constant_tail: bool,
    /// `n | b_1(F)`.
    pub divides: bool,
    pub verdict: Verdict,
    pub certificate: Option<String>,
}

pub fn obstruction_report(s: &MilnorSpectrum) -> ObstructionReport {
    let n = s.n();
    let tail = &s.values()[1..];
    let constant_tail = tail.windows(2).all(|w| w[0] == w[1]);
    let total = s.b1_total();
    let divides = total.is_multiple_of(n as u64);
    debug_assert!(!constant_tail || divides);
    let (verdict, certificate) = if constant_tail && divides {
        (Verdict::NotObstructed, None)
    } else {
        let mut reasons = Vec::new();
        if !constant_tail {
            reasons.push("b_1^t is not constant for 1 <= t <= n".to_string());
        }
        if !divides {
            reasons.push(format!("n = {n} does not divide b_1(F) = {total}"));
        }
        let certificate = format!(
            "{}: no arrangement with this spectrum is relatively minimal (k = 1) inside a Boolean ambient arrangement",
            reasons.join(" and ")
        );
        (Verdict::Obstructed, Some(certificate))
    };
    ObstructionReport {
        n,
        spectrum: s.values().to_vec(),
        b1_total: total,
        constant_tail,
        divides,
        verdict,
        certificate,
    }
}

/// `b_s^t(F)` for every degree `s` of a generic-position arrangement,
/// indexed `[s][t]`, together with the degree-one spectrum.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenericMilnorBetti {
    pub n: usize,
    pub by_degree: Vec<Vec<u64>>,
    pub totals: Vec<u64>,
}

impl GenericMilnorBetti {
    pub fn spectrum(&self) -> Result<MilnorSpectrum> {
        let values = self.by_degree.get(1).cloned().ok_or(Error::DegreeOutOfRange { degree: 1, top: 0 })?;
        MilnorSpectrum::new(self.n, values)
    }
}

pub fn spectrum_generic_position(a: &Arrangement) -> Result<GenericMilnorBetti> {
    let n = a.n();
    let field = CyclotomicField::new(n as u32 + 1);
    let columns = (0..=n)
        .into_par_iter()
        .map(|t| {
            let u = UnitAssignment::scalars(field.clone(), root_units(&field, t, n))?;
            let h = complete_homology_generic_position(a, &u)?;
            Ok(h.groups.iter().map(|g| g.free_rank as u64).collect::<Vec<u64>>())
        })
        .collect::<Result<Vec<_>>>()?;
    let degrees = columns[0].len();
    let by_degree: Vec<Vec<u64>> = (0..degrees).map(|s| columns.iter().map(|c| c[s]).collect()).collect();
    let totals = by_degree.iter().map(|row| row.iter().sum()).collect();
    Ok(GenericMilnorBetti { n, by_degree, totals })
}
