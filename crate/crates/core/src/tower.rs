//! Almost-direct products of free groups `F_{d_ℓ} ⋊ ... ⋊ F_{d_2}` and their
//! equivariant chain complexes specialized along a character.

use crate::algebra::{Field, Laurent, Ring};
use crate::automorphism::Substitution;
use crate::chain::{homology, FreeChainComplex, HomologyGroup};
use crate::fox::{fox_derivative, FreeWord, GroupPresentation, Letter};
use crate::koszul::{cokernel, PiPresentation};
use crate::linalg::Matrix;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::Serialize;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

const LEVEL_LETTERS: [&str; 8] = ["x", "y", "z", "w", "v", "u", "s", "r"];

/// Generator names for levels listed bottom first: the top level is
/// `x1, x2, ..`, the next `y1, ..`, and so on.
pub fn default_names(exponents: &[usize]) -> Vec<Vec<String>> {
    let count = exponents.len();
    exponents
        .iter()
        .enumerate()
        .map(|(i, &d)| {
            let depth = count - 1 - i;
            (0..d)
                .map(|k| match LEVEL_LETTERS.get(depth) {
                    Some(letter) => format!("{letter}{}", k + 1),
                    None => format!("x{}_{}", i + 2, k + 1),
                })
                .collect()
        })
        .collect()
}

/// Coefficients of `∏ (1 + d_j T)`.
pub fn poincare_coefficients(exponents: &[usize]) -> Vec<u64> {
    let mut coeffs = vec![1u64];
    for &d in exponents {
        let mut next = vec![0u64; coeffs.len() + 1];
        for (q, &c) in coeffs.iter().enumerate() {
            next[q] += c;
            next[q + 1] += c * d as u64;
        }
        coeffs = next;
    }
    coeffs
}

#[derive(Clone, Debug, PartialEq, Eq)]
struct Level {
    names: Vec<String>,
    monodromy: Vec<Substitution>,
}

/// Levels are stored bottom first: level index `0` is the factor `F_{d_2}`.
/// Generators are numbered globally in the same order, and the monodromy of
/// level `i` holds one automorphism of `F_{d_i}` per generator below it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerSpec {
    levels: Vec<Level>,
}

impl TowerSpec {
    pub fn new(
        exponents: Vec<usize>,
        monodromy: Vec<Vec<Substitution>>,
        names: Option<Vec<Vec<String>>>,
    ) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyInput("tower exponents"));
        }
        if exponents.contains(&0) {
            return Err(Error::InvalidInput("tower exponents must be positive".into()));
        }
        if monodromy.len() != exponents.len() {
            return Err(Error::InvalidInput(format!(
                "{} monodromy levels for {} exponents",
                monodromy.len(),
                exponents.len()
            )));
        }
        let names = names.unwrap_or_else(|| default_names(&exponents));
        if names.len() != exponents.len() || names.iter().zip(&exponents).any(|(n, &d)| n.len() != d) {
            return Err(Error::InvalidInput("generator names do not match the exponents".into()));
        }
        let mut seen = std::collections::HashSet::new();
        if let Some(dup) = names.iter().flatten().find(|n| !seen.insert(n.as_str())) {
            return Err(Error::InvalidInput(format!("generator name `{dup}` used twice")));
        }
        let mut below = 0;
        let mut levels = Vec::with_capacity(exponents.len());
        for (i, (subs, names)) in monodromy.into_iter().zip(names).enumerate() {
            let d = exponents[i];
            if subs.len() != below {
                return Err(Error::InvalidInput(format!(
                    "level {} needs {below} monodromy automorphisms, got {}",
                    i + 2,
                    subs.len()
                )));
            }
            for s in &subs {
                if s.rank() != d || s.images().iter().any(|w| w.max_generator().is_some_and(|g| g >= d)) {
                    return Err(Error::InvalidInput(format!(
                        "level {} monodromy is not an endomorphism of F_{d}",
                        i + 2
                    )));
                }
            }
            levels.push(Level { names, monodromy: subs });
            below += d;
        }
        Ok(TowerSpec { levels })
    }

    /// Trivial monodromy everywhere.
    pub fn direct_product(exponents: Vec<usize>) -> Result<Self> {
        let mut below = 0;
        let monodromy = exponents
            .iter()
            .map(|&d| {
                let level = vec![Substitution::identity(d); below];
                below += d;
                level
            })
            .collect();
        Self::new(exponents, monodromy, None)
    }

    /// Number of levels, `ℓ - 1`; also the top degree of the complex.
    pub fn level_count(&self) -> usize {
        self.levels.len()
    }

    /// `d_2, ..., d_ℓ`, bottom first.
    pub fn exponents(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.names.len()).collect()
    }

    pub fn rank(&self, level: usize) -> usize {
        self.levels[level].names.len()
    }

    pub fn generator_count(&self) -> usize {
        self.levels.iter().map(|l| l.names.len()).sum()
    }

    /// Global index of the first generator of `level`.
    pub fn offset(&self, level: usize) -> usize {
        self.levels[..level].iter().map(|l| l.names.len()).sum()
    }

    pub fn level_of(&self, generator: usize) -> usize {
        let mut start = 0;
        for (i, l) in self.levels.iter().enumerate() {
            start += l.names.len();
            if generator < start {
                return i;
            }
        }
        panic!("generator {generator} out of range")
    }

    pub fn level_names(&self, level: usize) -> &[String] {
        &self.levels[level].names
    }

    pub fn generator_names(&self) -> Vec<String> {
        self.levels.iter().flat_map(|l| l.names.iter().cloned()).collect()
    }

    /// `α(y)` on `F_{d_level}` for a global generator `y` below `level`.
    pub fn monodromy(&self, level: usize, generator: usize) -> &Substitution {
        &self.levels[level].monodromy[generator]
    }

    /// A level-local word rewritten in global generator indices.
    pub fn globalize(&self, level: usize, w: &FreeWord) -> FreeWord {
        let offset = self.offset(level);
        FreeWord::from_letters(
            w.letters().iter().map(|l| Letter { generator: l.generator + offset, exponent: l.exponent }),
        )
    }

    /// Conjugation relators `y x y^{-1} α(y)(x)^{-1}` of the levels below
    /// `levels`, with the lower generator `y` of each.
    fn relators_below(&self, levels: usize) -> Vec<(usize, FreeWord)> {
        let mut out = Vec::new();
        for i in 1..levels {
            let offset = self.offset(i);
            for y in 0..offset {
                let alpha = self.monodromy(i, y);
                for k in 0..self.rank(i) {
                    let yw = FreeWord::generator(y);
                    let x = FreeWord::generator(offset + k);
                    let image = self.globalize(i, alpha.image(k));
                    out.push((y, yw.mul(&x).mul(&yw.inverse()).mul(&image.inverse())));
                }
            }
        }
        out
    }

    /// All generators, with the conjugation relators of every level.
    pub fn standard_presentation(&self) -> GroupPresentation {
        let relators = self.relators_below(self.level_count()).into_iter().map(|(_, r)| r).collect();
        GroupPresentation::new(self.generator_count(), relators, false).expect("relators use tower generators")
    }

    fn name_of(&self, generator: usize) -> String {
        let level = self.level_of(generator);
        self.levels[level].names[generator - self.offset(level)].clone()
    }
}

/// Integer weight per generator (global order).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TowerCharacter {
    weights: Vec<i64>,
}

impl TowerCharacter {
    pub fn new(tw: &TowerSpec, weights: Vec<i64>) -> Result<Self> {
        if weights.len() != tw.generator_count() {
            return Err(Error::InvalidInput(format!(
                "{} weights for {} tower generators",
                weights.len(),
                tw.generator_count()
            )));
        }
        Ok(TowerCharacter { weights })
    }

    pub fn trivial(tw: &TowerSpec) -> Self {
        TowerCharacter { weights: vec![0; tw.generator_count()] }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `ν(w)` for a word in global generators.
    pub fn value(&self, w: &FreeWord) -> i64 {
        w.letters().iter().map(|l| self.weights[l.generator] * l.exponent as i64).sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerViolation {
    /// Level in the `2..=ℓ` numbering.
    pub level: usize,
    pub generator: String,
    pub reason: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TowerReport {
    pub valid: bool,
    pub violations: Vec<TowerViolation>,
}

/// Checks that every monodromy is an automorphism acting trivially on
/// homology, and that the conjugation relators of each sub-tower act
/// trivially on the next level.
pub fn check_tower(tw: &TowerSpec) -> TowerReport {
    let mut violations = Vec::new();
    for level in 1..tw.level_count() {
        let mut invertible = true;
        for y in 0..tw.offset(level) {
            let alpha = tw.monodromy(level, y);
            let mut push = |reason: &str| {
                violations.push(TowerViolation { level: level + 2, generator: tw.name_of(y), reason: reason.into() })
            };
            if !alpha.trivial_on_homology() {
                push("monodromy acts nontrivially on homology");
            }
            if alpha.inverse().is_err() {
                push("monodromy is not an automorphism");
                invertible = false;
            }
        }
        if !invertible {
            continue;
        }
        let action = Action::new(tw).expect("automorphisms invert");
        for (y, relator) in tw.relators_below(level) {
            if !action.substitution(level, &relator).is_identity() {
                violations.push(TowerViolation {
                    level: level + 2,
                    generator: tw.name_of(y),
                    reason: format!(
                        "conjugation relator {} does not act as the identity",
                        relator.display_with(&tw.generator_names())
                    ),
                });
            }
        }
    }
    TowerReport { valid: violations.is_empty(), violations }
}

fn validate(tw: &TowerSpec) -> Result<()> {
    let report = check_tower(tw);
    if let Some(v) = report.violations.first() {
        return Err(Error::TowerInvalid(format!("level {}, generator {}: {}", v.level, v.generator, v.reason)));
    }
    Ok(())
}

/// Monodromies with their inverses, for evaluating `α(g)` on arbitrary
/// words `g` of the lower levels.
struct Action<'a> {
    tw: &'a TowerSpec,
    inverses: Vec<Vec<Substitution>>,
}

impl<'a> Action<'a> {
    fn new(tw: &'a TowerSpec) -> Result<Self> {
        let inverses = tw
            .levels
            .iter()
            .map(|l| l.monodromy.iter().map(Substitution::inverse).collect::<Result<Vec<_>>>())
            .collect::<Result<_>>()?;
        Ok(Action { tw, inverses })
    }

    fn letter(&self, level: usize, l: Letter) -> &Substitution {
        if l.exponent > 0 {
            self.tw.monodromy(level, l.generator)
        } else {
            &self.inverses[level][l.generator]
        }
    }

    /// `α(g)` on `F_{d_level}` for a word `g` in global lower generators.
    fn substitution(&self, level: usize, g: &FreeWord) -> Substitution {
        g.letters()
            .iter()
            .fold(Substitution::identity(self.tw.rank(level)), |acc, &l| acc.compose(self.letter(level, l)))
    }
}

/// A group element `w_top ⋯ w_2` in normal form, stored bottom first.
type Element = Vec<FreeWord>;

fn flatten(tw: &TowerSpec, g: &[FreeWord]) -> FreeWord {
    g.iter().enumerate().rev().fold(FreeWord::identity(), |acc, (level, w)| acc.mul(&tw.globalize(level, w)))
}

/// Integer combination of normal-form elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
struct Symbolic(BTreeMap<Element, BigInt>);

impl Symbolic {
    fn add_term(&mut self, g: Element, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(g) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }
}

struct SymbolicMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Symbolic>,
}

impl SymbolicMatrix {
    fn zeros(rows: usize, cols: usize) -> Self {
        SymbolicMatrix { rows, cols, data: vec![Symbolic::default(); rows * cols] }
    }

    fn get(&self, i: usize, j: usize) -> &Symbolic {
        &self.data[i * self.cols + j]
    }

    fn entry(&mut self, i: usize, j: usize) -> &mut Symbolic {
        &mut self.data[i * self.cols + j]
    }
}

struct SymbolicComplex {
    ranks: Vec<usize>,
    boundaries: Vec<SymbolicMatrix>,
}

fn sign(degree: usize) -> BigInt {
    if degree.is_multiple_of(2) {
        BigInt::one()
    } else {
        -BigInt::one()
    }
}

fn level_generator(level: usize, k: usize) -> Element {
    let mut g = vec![FreeWord::identity(); level + 1];
    g[level] = FreeWord::generator(k);
    g
}

fn base_complex(d: usize) -> SymbolicComplex {
    let mut d1 = SymbolicMatrix::zeros(1, d);
    for k in 0..d {
        let entry = d1.entry(0, k);
        entry.add_term(level_generator(0, k), BigInt::one());
        entry.add_term(vec![FreeWord::identity()], -BigInt::one());
    }
    SymbolicComplex { ranks: vec![1, d], boundaries: vec![d1] }
}

/// `C_q = D_q ⊕ D_{q-1}^d` for the extension by level `level`. A basis vector
/// `b ⊗ e_k` maps to `(-1)^{|b|}(x_k - 1) b` plus, for each term `n·g` of
/// `∂b`, the block `n·g·∂(α(g^{-1})(x_k))/∂x_m` onto the `e_m` copies.
/// On the last level only the character value of the new component is
/// needed, so it is left unrewritten.
fn extend(action: &Action<'_>, lower: &SymbolicComplex, level: usize, last: bool) -> SymbolicComplex {
    let d = action.tw.rank(level);
    let n = &lower.ranks;
    let top = n.len();
    let lower_rank = |q: usize| n.get(q).copied().unwrap_or(0);
    let ranks: Vec<usize> = (0..=top).map(|q| lower_rank(q) + d * if q == 0 { 0 } else { n[q - 1] }).collect();
    let mut cache: HashMap<Element, (Substitution, Substitution)> = HashMap::new();
    let mut boundaries = Vec::with_capacity(top);
    for q in 1..=top {
        let mut m = SymbolicMatrix::zeros(ranks[q - 1], ranks[q]);
        if let Some(inner) = lower.boundaries.get(q - 1) {
            for i in 0..inner.rows {
                for j in 0..inner.cols {
                    for (g, c) in &inner.get(i, j).0 {
                        let mut lifted = g.clone();
                        lifted.push(FreeWord::identity());
                        m.entry(i, j).add_term(lifted, c.clone());
                    }
                }
            }
        }
        for b in 0..n[q - 1] {
            for k in 0..d {
                let col = lower_rank(q) + b * d + k;
                let slot = m.entry(b, col);
                slot.add_term(level_generator(level, k), sign(q - 1));
                slot.add_term(vec![FreeWord::identity(); level + 1], -sign(q - 1));
            }
        }
        if q >= 2 {
            let inner = &lower.boundaries[q - 2];
            for b in 0..n[q - 1] {
                for b2 in 0..n[q - 2] {
                    for (g, c) in &inner.get(b2, b).0 {
                        let (forward, backward) = cache.entry(g.clone()).or_insert_with(|| {
                            let word = flatten(action.tw, g);
                            (action.substitution(level, &word), action.substitution(level, &word.inverse()))
                        });
                        for k in 0..d {
                            let moved = backward.image(k);
                            for m_index in 0..d {
                                for (p, coefficient) in fox_derivative(moved, m_index).terms() {
                                    let mut element = g.clone();
                                    element.push(if last { p.clone() } else { forward.apply(p) });
                                    let row = n[q - 1] + b2 * d + m_index;
                                    let col = lower_rank(q) + b * d + k;
                                    m.entry(row, col).add_term(element, c * coefficient);
                                }
                            }
                        }
                    }
                }
            }
        }
        boundaries.push(m);
    }
    SymbolicComplex { ranks, boundaries }
}

fn specialize_element<K: Field>(tw: &TowerSpec, ch: &TowerCharacter, ctx: &K::Ctx, g: &Element) -> Laurent<K> {
    let exponent: i64 = g.iter().enumerate().map(|(level, w)| ch.value(&tw.globalize(level, w))).sum();
    Laurent::t_power(ctx, -exponent)
}

/// The free resolution of `Z` over the tower group, tensored with
/// `K[t, t^-1]` along `g ↦ t^{-ν(g)}`. The base level is the Koszul complex
/// with entries `t^{-γ_k} - 1`.
pub fn build_tower_complex<K: Field>(
    tw: &TowerSpec,
    ch: &TowerCharacter,
    ctx: K::Ctx,
) -> Result<FreeChainComplex<Laurent<K>>> {
    validate(tw)?;
    if ch.weights().len() != tw.generator_count() {
        return Err(Error::InvalidInput(format!(
            "{} weights for {} tower generators",
            ch.weights().len(),
            tw.generator_count()
        )));
    }
    let action = Action::new(tw)?;
    let mut complex = base_complex(tw.rank(0));
    for level in 1..tw.level_count() {
        complex = extend(&action, &complex, level, level + 1 == tw.level_count());
    }
    let zero = Laurent::<K>::zero(&ctx);
    let boundaries = complex
        .boundaries
        .iter()
        .map(|m| {
            let data = m
                .data
                .iter()
                .map(|entry| {
                    entry.0.iter().fold(zero.clone(), |acc, (g, c)| {
                        acc.add(&specialize_element(tw, ch, &ctx, g).mul(&Laurent::from_int(&ctx, c)))
                    })
                })
                .collect();
            Matrix::new(ctx.clone(), m.rows, m.cols, data)
        })
        .collect::<Result<Vec<_>>>()?;
    FreeChainComplex::new(ctx, complex.ranks, boundaries)
}

/// `ρ̄(g) = t^{ν(g)} J̄(g)^T` with `J̄(g)_{km} = ν(∂(α(g)(x_k))/∂x_m)`, for a
/// word `g` in the generators below `level`.
pub fn jacobian_rep<K: Field>(
    tw: &TowerSpec,
    level: usize,
    g: &FreeWord,
    ch: &TowerCharacter,
    ctx: K::Ctx,
) -> Result<Matrix<Laurent<K>>> {
    let jacobian = jacobian(tw, level, g, ch, ctx.clone())?;
    let scale = Laurent::t_power(&ctx, ch.value(g));
    Ok(jacobian.transpose().scale(&scale))
}

/// `J̄(g)_{km} = ν(∂(α(g)(x_k))/∂x_m)`.
pub fn jacobian<K: Field>(
    tw: &TowerSpec,
    level: usize,
    g: &FreeWord,
    ch: &TowerCharacter,
    ctx: K::Ctx,
) -> Result<Matrix<Laurent<K>>> {
    if level == 0 || level >= tw.level_count() {
        return Err(Error::InvalidInput(format!("level index {level} has no lower generators")));
    }
    if g.max_generator().is_some_and(|y| y >= tw.offset(level)) {
        return Err(Error::InvalidInput("element must lie in the lower levels".into()));
    }
    let action = Action::new(tw)?;
    let alpha = action.substitution(level, g);
    let d = tw.rank(level);
    let zero = Laurent::<K>::zero(&ctx);
    let mut out = Matrix::zeros(ctx.clone(), d, d);
    for k in 0..d {
        for m in 0..d {
            let value = fox_derivative(alpha.image(k), m).terms().fold(zero.clone(), |acc, (p, c)| {
                let power = Laurent::t_power(&ctx, ch.value(&tw.globalize(level, p)));
                acc.add(&power.mul(&Laurent::from_int(&ctx, c)))
            });
            out.set(k, m, value);
        }
    }
    Ok(out)
}

/// `Tor_q(Z, K[t,t^-1])` for `q ≤ max_q`; zero above the top level.
pub fn tor_groups<K: Field>(
    tw: &TowerSpec,
    ch: &TowerCharacter,
    max_q: usize,
    ctx: K::Ctx,
) -> Result<Vec<HomologyGroup<Laurent<K>>>> {
    let c = build_tower_complex(tw, ch, ctx)?;
    (0..=max_q)
        .map(|q| {
            if q <= c.top_degree() {
                homology(&c, q)
            } else {
                Ok(HomologyGroup { degree: q, free_rank: 0, torsion: Vec::new() })
            }
        })
        .collect()
}

/// `∂_{p+2}` of the tower complex and its cokernel.
pub fn pi_p_presentation_fibertype<K: Field>(
    tw: &TowerSpec,
    p: usize,
    ch: &TowerCharacter,
    ctx: K::Ctx,
) -> Result<PiPresentation<Laurent<K>>> {
    if p + 2 > tw.level_count() {
        return Err(Error::DegreeUnavailable { needed: p + 2, top: tw.level_count() });
    }
    let c = build_tower_complex(tw, ch, ctx)?;
    let matrix = c.boundary(p + 2).expect("degree checked").clone();
    let cokernel = cokernel(&matrix, p);
    Ok(PiPresentation { p, matrix, cokernel })
}

/// `(-1)^{r-1} [χ - Σ_{q=0}^{r} (-1)^q tor_q]`.
pub fn rank_formula_general(chi: i64, r: usize, tor_ranks: &[usize]) -> Result<i64> {
    if r < 3 {
        return Err(Error::InvalidInput(format!("rank formula needs r >= 3, got {r}")));
    }
    if tor_ranks.len() < r + 1 {
        return Err(Error::InvalidInput(format!("need Tor ranks in degrees 0..={r}, got {}", tor_ranks.len())));
    }
    let alternating: i64 = tor_ranks[..=r].iter().enumerate().map(|(q, &t)| sign_i64(q) * t as i64).sum();
    Ok(sign_i64(r - 1) * (chi - alternating))
}

fn sign_i64(q: usize) -> i64 {
    if q.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NonresonantCase {
    /// `r + 1 < m`: the value is `(-1)^{r-1} χ`.
    Euler,
    /// `r + 1 = m`: the value is `b_r(π)`.
    TopBetti,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NonresonantRank {
    pub value: i64,
    pub case: NonresonantCase,
    /// `∏ d_j`, when exponents with `r` levels are supplied.
    pub exponent_product: Option<u64>,
}

/// Rank of `π_{r-1} ⊗ K[t,t^-1]` for a nonresonant character, `m` hyperplanes.
pub fn rank_formula_nonresonant(
    chi: i64,
    r: usize,
    m: usize,
    b_r_pi: Option<u64>,
    exponents: Option<&[usize]>,
) -> Result<NonresonantRank> {
    if r < 3 {
        return Err(Error::InvalidInput(format!("rank formula needs r >= 3, got {r}")));
    }
    let exponent_product = exponents.filter(|e| e.len() == r).map(|e| e.iter().map(|&d| d as u64).product());
    let (value, case) = if r + 1 < m {
        (sign_i64(r - 1) * chi, NonresonantCase::Euler)
    } else if r + 1 == m {
        let b = b_r_pi
            .or_else(|| exponents.and_then(|e| poincare_coefficients(e).get(r).copied()))
            .ok_or_else(|| Error::InvalidInput("case r + 1 = m needs b_r(π) or the exponents".into()))?;
        (b as i64, NonresonantCase::TopBetti)
    } else {
        return Err(Error::InvalidInput(format!("need m >= r + 1, got m = {m}, r = {r}")));
    };
    Ok(NonresonantRank { value, case, exponent_product })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse::parse_scalar, Rational};
    use crate::chain::decide_isomorphic;
    use crate::fox::{alexander_complex, Specialization};
    use crate::koszul::{build_koszul, UnitAssignment};

    type LQ = Laurent<Rational>;

    fn lq(text: &str) -> LQ {
        parse_scalar(text, &()).unwrap()
    }

    fn w(text: &str) -> FreeWord {
        FreeWord::parse_letters(text).unwrap()
    }

    /// `F_2 ⋊ F_1` with `y: x1 ↦ x1, x2 ↦ x1 x2 x1^-1`.
    fn f2_f1() -> TowerSpec {
        let alpha = Substitution::new(vec![w("a"), w("aba-1")]);
        TowerSpec::new(vec![1, 2], vec![vec![], vec![alpha]], None).unwrap()
    }

    #[test]
    fn names_and_poincare() {
        assert_eq!(default_names(&[1, 2]), vec![vec!["y1".to_string()], vec!["x1".to_string(), "x2".to_string()]]);
        assert_eq!(poincare_coefficients(&[1, 2, 3]), vec![1, 6, 11, 6]);
        let tw = f2_f1();
        assert_eq!(tw.generator_names(), vec!["y1", "x1", "x2"]);
        assert_eq!(tw.level_of(2), 1);
    }

    #[test]
    fn validation_examples() {
        assert!(check_tower(&f2_f1()).valid);
        let swap = Substitution::new(vec![w("b"), w("a")]);
        let tw = TowerSpec::new(vec![1, 2], vec![vec![], vec![swap]], None).unwrap();
        let report = check_tower(&tw);
        assert!(!report.valid);
        assert_eq!(report.violations[0].level, 3);
        assert_eq!(report.violations[0].generator, "y1");
        let square = Substitution::new(vec![w("aa"), w("b")]);
        let tw = TowerSpec::new(vec![1, 2], vec![vec![], vec![square]], None).unwrap();
        assert!(!check_tower(&tw).valid);
        assert!(matches!(
            build_tower_complex::<Rational>(&tw, &TowerCharacter::trivial(&tw), ()),
            Err(Error::TowerInvalid(_))
        ));
    }

    #[test]
    fn ill_defined_action_is_reported() {
        let level3 = Substitution::new(vec![w("a"), w("aba-1")]);
        let by_a = Substitution::conjugation(2, &w("a"));
        let by_b = Substitution::conjugation(2, &w("b"));
        let top = |images: Vec<Substitution>| {
            TowerSpec::new(vec![1, 2, 2], vec![vec![], vec![level3.clone()], images], None).unwrap()
        };
        assert!(check_tower(&top(vec![by_a.clone(), Substitution::identity(2), by_a.compose(&by_a)])).valid);
        let report = check_tower(&top(vec![by_a, Substitution::identity(2), by_b]));
        assert!(!report.valid);
        assert_eq!(report.violations.len(), 1);
        assert_eq!((report.violations[0].level, report.violations[0].generator.as_str()), (4, "z1"));
    }

    #[test]
    fn jacobian_example() {
        let tw = f2_f1();
        let ch = TowerCharacter::new(&tw, vec![3, 1, 2]).unwrap();
        let rho = jacobian_rep::<Rational>(&tw, 1, &w("a"), &ch, ()).unwrap();
        let expected =
            Matrix::from_rows((), vec![vec![lq("t^3"), lq("t^3 - t^5")], vec![lq("0"), lq("t^4")]], 2).unwrap();
        assert_eq!(rho, expected);
        let identity = jacobian_rep::<Rational>(&tw, 1, &FreeWord::identity(), &ch, ()).unwrap();
        assert_eq!(identity, Matrix::identity((), 2));
    }

    #[test]
    fn f2_f1_complex() {
        let tw = f2_f1();
        let ch = TowerCharacter::new(&tw, vec![1, 1, 1]).unwrap();
        let c = build_tower_complex::<Rational>(&tw, &ch, ()).unwrap();
        assert_eq!(c.ranks(), &[1, 3, 2]);
        let tor = tor_groups::<Rational>(&tw, &ch, 2, ()).unwrap();
        assert_eq!(tor[0].torsion, vec![lq("t - 1")]);
        let phi = Specialization::new((), vec![lq("t^-1"); 3]).unwrap();
        let alexander = alexander_complex(&tw.standard_presentation(), &phi).unwrap();
        for q in 0..2 {
            assert_eq!(homology(&c, q).unwrap(), homology(&alexander, q).unwrap());
        }
        assert!(decide_isomorphic(&c, &alexander).unwrap().isomorphic);
    }

    #[test]
    fn direct_product_is_koszul() {
        let tw = TowerSpec::direct_product(vec![1, 1, 1, 1]).unwrap();
        let ch = TowerCharacter::new(&tw, vec![2, -1, 1, 3]).unwrap();
        let c = build_tower_complex::<Rational>(&tw, &ch, ()).unwrap();
        let kc = build_koszul(&UnitAssignment::<LQ>::laurent_character((), &[2, -1, 1, 3]), 4).unwrap();
        assert_eq!(c, kc.complex);
        let p = pi_p_presentation_fibertype::<Rational>(&tw, 2, &ch, ()).unwrap();
        assert_eq!(&p.matrix, kc.complex.boundary(4).unwrap());
        assert_eq!(
            pi_p_presentation_fibertype::<Rational>(&f2_f1(), 1, &TowerCharacter::trivial(&f2_f1()), ()).unwrap_err(),
            Error::DegreeUnavailable { needed: 3, top: 2 }
        );
    }

    #[test]
    fn trivial_character_is_free() {
        let tw = f2_f1();
        let tor = tor_groups::<Rational>(&tw, &TowerCharacter::trivial(&tw), 3, ()).unwrap();
        let ranks: Vec<usize> = tor.iter().map(|h| h.free_rank).collect();
        assert_eq!(ranks, vec![1, 3, 2, 0]);
    }

    #[test]
    fn rank_formulas() {
        assert_eq!(rank_formula_general(3, 3, &[1, 4, 6, 4]).unwrap(), 4);
        assert_eq!(rank_formula_general(3, 3, &[0, 0, 0, 0]).unwrap(), 3);
        assert_eq!(rank_formula_general(1, 3, &[0, 0, 0, 0]).unwrap(), 1);
        assert!(rank_formula_general(1, 2, &[0, 0, 0]).is_err());
        assert_eq!(rank_formula_nonresonant(3, 3, 5, None, None).unwrap().value, 3);
        let top = rank_formula_nonresonant(1, 3, 4, Some(1), None).unwrap();
        assert_eq!((top.value, top.case), (1, NonresonantCase::TopBetti));
        let product = rank_formula_nonresonant(0, 3, 4, None, Some(&[1, 2, 3])).unwrap();
        assert_eq!((product.value, product.exponent_product), (6, Some(6)));
    }
}
