//! JSON file formats for complexes, arrangements, presentations and towers,
//! and the homology summaries written back out.

use crate::algebra::{parse::parse_scalar, Rational, Ring, RingDescriptor, Scalar};
use crate::arrangement::Arrangement;
use crate::automorphism::Substitution;
use crate::chain::{FreeChainComplex, HomologyGroup};
use crate::fox::{FreeWord, GroupPresentation};
use crate::linalg::Matrix;
use crate::tower::{default_names, TowerCharacter, TowerSpec};
use crate::{Error, Result};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};

/// A scalar written either as a JSON integer or as a string such as
/// `"3/4"`, `"t^-2 + 1"` or `"z3^2"`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ScalarText {
    Int(i64),
    Text(String),
}

impl ScalarText {
    pub fn as_text(&self) -> String {
        match self {
            ScalarText::Int(v) => v.to_string(),
            ScalarText::Text(s) => s.clone(),
        }
    }
}

/// `{"ring": "Z", "ranks": [1, 1], "boundaries": [["2"]]}`; boundary `q` is
/// the row-major `ranks[q-1] x ranks[q]` matrix of `d_q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ChainFile {
    pub ring: String,
    pub ranks: Vec<usize>,
    pub boundaries: Vec<Vec<ScalarText>>,
}

impl ChainFile {
    pub fn to_complex(&self) -> Result<FreeChainComplex<Scalar>> {
        let ring: RingDescriptor = self.ring.parse()?;
        if self.ranks.is_empty() {
            return Err(Error::EmptyInput("chain complex ranks"));
        }
        if self.boundaries.len() + 1 != self.ranks.len() {
            return Err(Error::Dimension(format!(
                "{} ranks need {} boundaries, got {}",
                self.ranks.len(),
                self.ranks.len() - 1,
                self.boundaries.len()
            )));
        }
        let boundaries = self
            .boundaries
            .iter()
            .enumerate()
            .map(|(i, entries)| {
                let data = entries.iter().map(|e| Scalar::parse(&e.as_text(), &ring)).collect::<Result<Vec<_>>>()?;
                Matrix::new(ring.clone(), self.ranks[i], self.ranks[i + 1], data)
                    .map_err(|e| Error::Dimension(format!("boundary d_{}: {e}", i + 1)))
            })
            .collect::<Result<Vec<_>>>()?;
        FreeChainComplex::new(ring, self.ranks.clone(), boundaries)
    }

    pub fn from_complex<R: Ring>(c: &FreeChainComplex<R>) -> Self {
        ChainFile {
            ring: c.ring().to_string(),
            ranks: c.ranks().to_vec(),
            boundaries: c
                .boundaries()
                .iter()
                .map(|m| m.entries().iter().map(|e| ScalarText::Text(e.to_string())).collect())
                .collect(),
        }
    }
}

/// `{"r": 3, "forms": [[1, 0, 0], ...], "labels": [...]}`; form `0` is the
/// distinguished hyperplane.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    pub r: usize,
    pub forms: Vec<Vec<ScalarText>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ArrangementFile {
    pub fn to_arrangement(&self) -> Result<Arrangement> {
        let forms = self
            .forms
            .iter()
            .map(|row| row.iter().map(|e| parse_scalar::<Rational>(&e.as_text(), &())).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Arrangement::new(self.r, forms, self.labels.clone())
    }

    pub fn from_arrangement(a: &Arrangement) -> Self {
        ArrangementFile {
            r: a.ambient(),
            forms: a.forms().iter().map(|row| row.iter().map(|e| ScalarText::Text(e.to_string())).collect()).collect(),
            labels: Some(a.labels().to_vec()),
        }
    }
}

/// `{"generators": 3, "relators": ["aba-1b-1"], "meridians": true}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PresentationFile {
    pub generators: usize,
    #[serde(default)]
    pub relators: Vec<String>,
    #[serde(default)]
    pub meridians: bool,
}

impl PresentationFile {
    pub fn to_presentation(&self) -> Result<GroupPresentation> {
        let relators = self.relators.iter().map(|r| FreeWord::parse_letters(r)).collect::<Result<Vec<_>>>()?;
        GroupPresentation::new(self.generators, relators, self.meridians)
    }

    pub fn from_presentation(p: &GroupPresentation) -> Self {
        PresentationFile {
            generators: p.generators(),
            relators: p.relators().iter().map(ToString::to_string).collect(),
            meridians: p.meridians(),
        }
    }
}

/// `{"exponents": [2, 1], "monodromy": {"level_3": {"y1": ["x1", "x1 x2 x1-1"]}},
/// "weights": {"y1": 1}}`. Exponents are listed from the top level `ℓ` down
/// to level 2; a missing monodromy entry is the identity and a missing
/// weight is zero. The optional `generators` map renames the generators of
/// a level.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TowerFile {
    pub exponents: Vec<usize>,
    #[serde(default)]
    pub monodromy: BTreeMap<String, BTreeMap<String, Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub weights: Option<BTreeMap<String, i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub generators: Option<BTreeMap<String, Vec<String>>>,
}

fn level_key(level: usize) -> String {
    format!("level_{}", level + 2)
}

impl TowerFile {
    pub fn to_tower(&self) -> Result<TowerSpec> {
        let exponents: Vec<usize> = self.exponents.iter().rev().copied().collect();
        let count = exponents.len();
        let valid_keys: Vec<String> = (0..count).map(level_key).collect();
        for key in self.monodromy.keys().chain(self.generators.iter().flat_map(|g| g.keys())) {
            if !valid_keys.contains(key) {
                return Err(Error::InvalidInput(format!("unknown tower level `{key}`")));
            }
        }
        let mut names = default_names(&exponents);
        if let Some(custom) = &self.generators {
            for (level, slot) in names.iter_mut().enumerate() {
                if let Some(given) = custom.get(&level_key(level)) {
                    *slot = given.clone();
                }
            }
        }
        let mut global: HashMap<String, usize> = HashMap::new();
        let mut monodromy = Vec::with_capacity(count);
        for level in 0..count {
            let d = exponents[level];
            if names[level].len() != d {
                return Err(Error::InvalidInput(format!("{} needs {d} generator names", level_key(level))));
            }
            let local: HashMap<String, usize> = names[level].iter().cloned().enumerate().map(|(k, n)| (n, k)).collect();
            let entries = self.monodromy.get(&level_key(level));
            if let Some(unknown) = entries.into_iter().flatten().map(|(y, _)| y).find(|y| !global.contains_key(*y)) {
                return Err(Error::InvalidInput(format!(
                    "{}: `{unknown}` is not a generator of a lower level",
                    level_key(level)
                )));
            }
            let mut subs = vec![Substitution::identity(d); global.len()];
            for (y, images) in entries.into_iter().flatten() {
                if images.len() != d {
                    return Err(Error::InvalidInput(format!(
                        "{}: `{y}` needs {d} images, got {}",
                        level_key(level),
                        images.len()
                    )));
                }
                let words = images.iter().map(|w| FreeWord::parse_tokens(w, &local)).collect::<Result<Vec<_>>>()?;
                subs[global[y]] = Substitution::new(words);
            }
            monodromy.push(subs);
            for name in &names[level] {
                let index = global.len();
                global.insert(name.clone(), index);
            }
        }
        TowerSpec::new(exponents, monodromy, Some(names))
    }

    /// The `weights` map as a character of `tw`; `None` when absent.
    pub fn character(&self, tw: &TowerSpec) -> Result<Option<TowerCharacter>> {
        self.weights.as_ref().map(|w| weights_by_name(tw, w)).transpose()
    }
}

/// A character from generator names; unnamed generators get weight zero.
pub fn weights_by_name(tw: &TowerSpec, weights: &BTreeMap<String, i64>) -> Result<TowerCharacter> {
    let names = tw.generator_names();
    if let Some(unknown) = weights.keys().find(|k| !names.contains(k)) {
        return Err(Error::InvalidInput(format!("weight for unknown generator `{unknown}`")));
    }
    TowerCharacter::new(tw, names.iter().map(|n| weights.get(n).copied().unwrap_or(0)).collect())
}

/// One degree of a homology report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyEntry {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<String>,
}

impl<R: Ring> From<&HomologyGroup<R>> for HomologyEntry {
    fn from(h: &HomologyGroup<R>) -> Self {
        HomologyEntry { degree: h.degree, free_rank: h.free_rank, torsion: h.torsion_strings() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chain::homology;
    use crate::tower::check_tower;

    #[test]
    fn chain_round_trip() {
        let file: ChainFile = serde_json::from_str(r#"{"ring": "Z", "ranks": [1, 1], "boundaries": [[2]]}"#).unwrap();
        let c = file.to_complex().unwrap();
        assert_eq!(homology(&c, 0).unwrap().torsion_strings(), vec!["2"]);
        let back = ChainFile::from_complex(&c);
        assert_eq!(back.to_complex().unwrap(), c);
        let bad: ChainFile = serde_json::from_str(r#"{"ring": "Z", "ranks": [1, 2], "boundaries": [["1"]]}"#).unwrap();
        assert!(bad.to_complex().is_err());
        let laurent: ChainFile =
            serde_json::from_str(r#"{"ring": "laurent", "ranks": [1, 1], "boundaries": [["t^-1 - 1"]]}"#).unwrap();
        let h = homology(&laurent.to_complex().unwrap(), 0).unwrap();
        assert_eq!(h.torsion_strings(), vec!["t - 1"]);
    }

    #[test]
    fn arrangement_file() {
        let file: ArrangementFile = serde_json::from_str(r#"{"r": 2, "forms": [[1, 0], [0, 1], ["1/2", 1]]}"#).unwrap();
        let a = file.to_arrangement().unwrap();
        assert_eq!(a.hyperplane_count(), 3);
        assert!(serde_json::from_str::<ArrangementFile>(r#"{"r": 2, "forms": [], "extra": 1}"#).is_err());
    }

    #[test]
    fn presentation_file() {
        let file: PresentationFile =
            serde_json::from_str(r#"{"generators": 2, "relators": ["aba-1b-1"], "meridians": true}"#).unwrap();
        let p = file.to_presentation().unwrap();
        assert_eq!(PresentationFile::from_presentation(&p), file);
    }

    #[test]
    fn tower_file() {
        let text = r#"{"exponents": [2, 1], "monodromy": {"level_3": {"y1": ["x1", "x1 x2 x1-1"]}},
                       "weights": {"y1": 1, "x2": -1}}"#;
        let file: TowerFile = serde_json::from_str(text).unwrap();
        let tw = file.to_tower().unwrap();
        assert_eq!(tw.exponents(), vec![1, 2]);
        assert!(check_tower(&tw).valid);
        assert_eq!(file.character(&tw).unwrap().unwrap().weights(), &[1, 0, -1]);

        let unknown = r#"{"exponents": [2, 1], "monodromy": {"level_3": {"q": ["x1", "x2"]}}}"#;
        assert!(serde_json::from_str::<TowerFile>(unknown).unwrap().to_tower().is_err());
        let renamed = r#"{"exponents": [1, 1], "generators": {"level_2": ["a"], "level_3": ["b"]},
                          "monodromy": {"level_3": {"a": ["a b a-1"]}}}"#;
        assert!(serde_json::from_str::<TowerFile>(renamed).unwrap().to_tower().is_err());
        let renamed = r#"{"exponents": [1, 1], "generators": {"level_2": ["a"], "level_3": ["b"]},
                          "monodromy": {"level_3": {"a": ["b"]}}}"#;
        let tw = serde_json::from_str::<TowerFile>(renamed).unwrap().to_tower().unwrap();
        assert_eq!(tw.generator_names(), vec!["a", "b"]);
    }
}
