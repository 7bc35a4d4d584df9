use crate::{CliError, CliResult};
use arrtwist_core::algebra::{parse::infer_ring, RingDescriptor, Scalar};
use arrtwist_core::arrangement::{Arrangement, Character};
use arrtwist_core::chain::FreeChainComplex;
use arrtwist_core::formats::{weights_by_name, ArrangementFile, ChainFile, PresentationFile, TowerFile};
use arrtwist_core::fox::GroupPresentation;
use arrtwist_core::tower::{TowerCharacter, TowerSpec};
use serde::de::DeserializeOwned;
use std::collections::BTreeMap;
use std::path::Path;

pub fn read_json<T: DeserializeOwned>(path: &Path) -> CliResult<T> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io { path: path.into(), source })?;
    serde_json::from_str(&text).map_err(|source| CliError::Json { path: path.into(), source })
}

pub fn arrangement(path: &Path) -> CliResult<Arrangement> {
    Ok(read_json::<ArrangementFile>(path)?.to_arrangement()?)
}

pub fn presentation(path: &Path) -> CliResult<GroupPresentation> {
    Ok(read_json::<PresentationFile>(path)?.to_presentation()?)
}

pub fn complex(path: &Path) -> CliResult<FreeChainComplex<Scalar>> {
    Ok(read_json::<ChainFile>(path)?.to_complex()?)
}

pub struct TowerInput {
    pub tower: TowerSpec,
    pub character: TowerCharacter,
}

/// Loads a tower; `--weights name=value,...` replaces the file's weights.
pub fn tower(path: &Path, weights: Option<&str>) -> CliResult<TowerInput> {
    let file: TowerFile = read_json(path)?;
    let tower = file.to_tower()?;
    let character = match weights {
        Some(text) => weights_by_name(&tower, &named_weights(text)?)?,
        None => file.character(&tower)?.unwrap_or_else(|| TowerCharacter::trivial(&tower)),
    };
    Ok(TowerInput { tower, character })
}

pub fn int_list(text: &str, what: &str) -> CliResult<Vec<i64>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|_| CliError::Usage(format!("bad {what} entry `{}`", s.trim()))))
        .collect()
}

pub fn named_weights(text: &str) -> CliResult<BTreeMap<String, i64>> {
    let mut out = BTreeMap::new();
    for pair in text.split(',').map(str::trim).filter(|s| !s.is_empty()) {
        let (name, value) =
            pair.split_once('=').ok_or_else(|| CliError::Usage(format!("expected name=weight, got `{pair}`")))?;
        let value = value
            .trim()
            .parse::<i64>()
            .map_err(|_| CliError::Usage(format!("bad weight `{}` for `{}`", value.trim(), name.trim())))?;
        if out.insert(name.trim().to_string(), value).is_some() {
            return Err(CliError::Usage(format!("weight for `{}` given twice", name.trim())));
        }
    }
    Ok(out)
}

pub fn ring(text: Option<&str>, default: RingDescriptor) -> CliResult<RingDescriptor> {
    match text {
        Some(t) => Ok(t.parse()?),
        None => Ok(default),
    }
}

pub fn laurent_q() -> RingDescriptor {
    RingDescriptor::laurent_over(RingDescriptor::Rationals)
}

/// A character of an arrangement from `γ_0..γ_n` (summing to zero) or
/// from the meridian weights `γ_1..γ_n`.
pub fn character(a: &Arrangement, text: &str) -> CliResult<Character> {
    let weights = int_list(text, "weight")?;
    if weights.len() == a.hyperplane_count() {
        Ok(Character::new(weights)?)
    } else if weights.len() == a.n() {
        Ok(Character::from_meridian_weights(&weights))
    } else {
        Err(CliError::Usage(format!(
            "{} weights for {} hyperplanes: give all {} or the {} meridian weights",
            weights.len(),
            a.hyperplane_count(),
            a.hyperplane_count(),
            a.n()
        )))
    }
}

/// Unit scalars `u_1..u_count` from integer weights or explicit units.
///
/// Over a Laurent ring a weight `γ` becomes `t^γ`, over `Q(ζ_d)` it becomes
/// `ζ_d^γ`; constant rings only admit zero weights.
pub fn units(
    count: usize,
    weights: Option<&[i64]>,
    explicit: Option<&str>,
    ring_text: Option<&str>,
) -> CliResult<(RingDescriptor, Vec<Scalar>)> {
    if let Some(text) = explicit {
        let texts: Vec<&str> = text.split(',').map(str::trim).collect();
        if texts.len() != count {
            return Err(CliError::Usage(format!("{} units given, {count} needed", texts.len())));
        }
        let ring = match ring_text {
            Some(r) => r.parse()?,
            None => infer_ring(&texts)?,
        };
        let values = texts.iter().map(|t| Scalar::parse(t, &ring)).collect::<arrtwist_core::Result<_>>()?;
        return Ok((ring, values));
    }
    let zeros = vec![0; count];
    let weights = weights.unwrap_or(&zeros);
    if weights.len() != count {
        return Err(CliError::Usage(format!("{} weights given, {count} needed", weights.len())));
    }
    let ring = ring(ring_text, laurent_q())?;
    let texts: Vec<String> = match &ring {
        RingDescriptor::Laurent(_) => weights.iter().map(|w| format!("t^{w}")).collect(),
        RingDescriptor::Cyclotomic(_) => weights.iter().map(|w| format!("z^{w}")).collect(),
        other => {
            if weights.iter().any(|&w| w != 0) {
                return Err(CliError::Usage(format!(
                    "nonzero weights need a Laurent or cyclotomic ring, not {other}; use --units for explicit values"
                )));
            }
            vec!["1".to_string(); count]
        }
    };
    let values = texts.iter().map(|t| Scalar::parse(t, &ring)).collect::<arrtwist_core::Result<_>>()?;
    Ok((ring, values))
}
