//! Free groups, their integral group rings, Fox derivatives, and the
//! Alexander chain complex of a finite presentation.

use crate::algebra::{Euclidean, Ring};
use crate::chain::FreeChainComplex;
use crate::linalg::Matrix;
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// `x_generator^exponent`, exponent `±1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub generator: usize,
    pub exponent: i8,
}

impl Letter {
    pub fn new(generator: usize, inverse: bool) -> Self {
        Letter { generator, exponent: if inverse { -1 } else { 1 } }
    }

    pub fn inverse(self) -> Self {
        Letter { generator: self.generator, exponent: -self.exponent }
    }
}

/// A freely reduced word.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreeWord {
    letters: Vec<Letter>,
}

impl FreeWord {
    pub fn identity() -> Self {
        FreeWord::default()
    }

    pub fn generator(i: usize) -> Self {
        FreeWord { letters: vec![Letter::new(i, false)] }
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        let mut out = FreeWord::identity();
        for l in letters {
            out.push(l);
        }
        out
    }

    /// Builds from `(generator, ±1)` pairs.
    pub fn from_pairs(pairs: &[(usize, i8)]) -> Self {
        Self::from_letters(pairs.iter().map(|&(g, e)| Letter { generator: g, exponent: e.signum() }))
    }

    fn push(&mut self, l: Letter) {
        if self.letters.last() == Some(&l.inverse()) {
            self.letters.pop();
        } else {
            self.letters.push(l);
        }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &l in &other.letters {
            out.push(l);
        }
        out
    }

    pub fn inverse(&self) -> Self {
        FreeWord { letters: self.letters.iter().rev().map(|l| l.inverse()).collect() }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        (0..k.unsigned_abs()).fold(FreeWord::identity(), |acc, _| acc.mul(&base))
    }

    /// `u w u^{-1}`.
    pub fn conjugate_by(&self, u: &Self) -> Self {
        u.mul(self).mul(&u.inverse())
    }

    /// Exponent sums per generator.
    pub fn abelianization(&self, generators: usize) -> Vec<i64> {
        let mut v = vec![0i64; generators];
        for l in &self.letters {
            if l.generator < generators {
                v[l.generator] += l.exponent as i64;
            }
        }
        v
    }

    pub fn max_generator(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.generator).max()
    }

    /// Parses the compact syntax `aba-1b-1`: letters `a..z` are generators
    /// `0..25`, a `-1` suffix inverts.
    pub fn parse_letters(text: &str) -> Result<Self> {
        let chars: Vec<char> = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut letters = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            if !c.is_ascii_lowercase() {
                return Err(Error::Parse(format!("unexpected `{c}` in word `{text}`")));
            }
            let generator = (c as u8 - b'a') as usize;
            i += 1;
            let inverse = if chars.get(i) == Some(&'-') {
                if chars.get(i + 1) != Some(&'1') {
                    return Err(Error::Parse(format!("expected `-1` in word `{text}`")));
                }
                i += 2;
                true
            } else {
                false
            };
            letters.push(Letter::new(generator, inverse));
        }
        Ok(Self::from_letters(letters))
    }

    /// Parses whitespace-separated tokens `name` or `name-1`; `1` alone is
    /// the identity.
    pub fn parse_tokens(text: &str, names: &HashMap<String, usize>) -> Result<Self> {
        let mut letters = Vec::new();
        for token in text.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (name, inverse) = match token.strip_suffix("-1") {
                Some(base) => (base, true),
                None => (token, false),
            };
            let generator =
                *names.get(name).ok_or_else(|| Error::Parse(format!("unknown generator `{name}` in `{text}`")))?;
            letters.push(Letter::new(generator, inverse));
        }
        Ok(Self::from_letters(letters))
    }

    /// Renders with the given generator names, tokens separated by spaces.
    pub fn display_with(&self, names: &[String]) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters
            .iter()
            .map(|l| {
                let name = &names[l.generator];
                if l.exponent < 0 {
                    format!("{name}-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for FreeWord {
    /// Compact letters when every generator is below 26, tokens `x1 x2-1`
    /// (1-based) otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        if self.letters.iter().all(|l| l.generator < 26) {
            for l in &self.letters {
                write!(f, "{}", (b'a' + l.generator as u8) as char)?;
                if l.exponent < 0 {
                    write!(f, "-1")?;
                }
            }
            Ok(())
        } else {
            let names: Vec<String> = (0..=self.max_generator().unwrap()).map(|i| format!("x{}", i + 1)).collect();
            write!(f, "{}", self.display_with(&names))
        }
    }
}

/// A finite integer combination of free-group elements.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroupRingElement {
    terms: BTreeMap<FreeWord, BigInt>,
}

impl GroupRingElement {
    pub fn zero() -> Self {
        GroupRingElement::default()
    }

    pub fn one() -> Self {
        Self::from_word(FreeWord::identity())
    }

    pub fn from_word(w: FreeWord) -> Self {
        Self::term(w, 1)
    }

    pub fn term(w: FreeWord, coefficient: impl Into<BigInt>) -> Self {
        let mut out = Self::zero();
        out.add_term(w, coefficient.into());
        out
    }

    pub fn add_term(&mut self, w: FreeWord, coefficient: BigInt) {
        if coefficient.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(coefficient);
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += coefficient;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&FreeWord, &BigInt)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        GroupRingElement { terms: self.terms.iter().map(|(w, c)| (w.clone(), -c)).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.mul(v), a * b);
            }
        }
        out
    }

    /// Image under a map of words extended linearly.
    pub fn map_words(&self, f: impl Fn(&FreeWord) -> FreeWord) -> Self {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Sum of coefficients (the augmentation).
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }
}

impl fmt::Display for GroupRingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (w, c)) in self.terms.iter().enumerate() {
            let negative = c.is_negative();
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if negative { " - " } else { " + " })?;
            }
            let magnitude = c.abs();
            if magnitude.is_one() {
                write!(f, "{w}")?;
            } else {
                write!(f, "{magnitude}*{w}")?;
            }
        }
        Ok(())
    }
}

/// `∂w/∂x_i`, with `∂(uv) = ∂u + u ∂v`.
pub fn fox_derivative(w: &FreeWord, i: usize) -> GroupRingElement {
    let mut out = GroupRingElement::zero();
    let mut prefix = FreeWord::identity();
    for &l in w.letters() {
        if l.generator == i {
            if l.exponent > 0 {
                out.add_term(prefix.clone(), BigInt::one());
            } else {
                out.add_term(prefix.mul(&FreeWord::from_letters([l])), -BigInt::one());
            }
        }
        prefix = prefix.mul(&FreeWord::from_letters([l]));
    }
    out
}

/// Images of the generators in a commutative ring, with their inverses.
#[derive(Clone, Debug)]
pub struct Specialization<R: Ring> {
    ctx: R::Ctx,
    values: Vec<R>,
    inverses: Vec<R>,
}

impl<R: Ring> Specialization<R> {
    pub fn new(ctx: R::Ctx, values: Vec<R>) -> Result<Self> {
        let inverses = values
            .iter()
            .enumerate()
            .map(|(i, v)| v.inverse().ok_or_else(|| Error::NotInvertible(format!("image {v} of generator {}", i + 1))))
            .collect::<Result<_>>()?;
        Ok(Specialization { ctx, values, inverses })
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn values(&self) -> &[R] {
        &self.values
    }

    pub fn word(&self, w: &FreeWord) -> Result<R> {
        let mut acc = R::one(&self.ctx);
        for l in w.letters() {
            let table = if l.exponent > 0 { &self.values } else { &self.inverses };
            let v = table
                .get(l.generator)
                .ok_or_else(|| Error::InvalidInput(format!("generator {} has no assigned image", l.generator + 1)))?;
            acc = acc.mul(v);
        }
        Ok(acc)
    }

    pub fn element(&self, e: &GroupRingElement) -> Result<R> {
        let mut acc = R::zero(&self.ctx);
        for (w, c) in e.terms() {
            acc = acc.add(&self.word(w)?.mul(&R::from_int(&self.ctx, c)));
        }
        Ok(acc)
    }
}

/// Ring homomorphism image of a group-ring element.
pub fn specialize<R: Ring>(e: &GroupRingElement, phi: &Specialization<R>) -> Result<R> {
    phi.element(e)
}

/// `⟨x_1..x_n | relators⟩`, optionally marked as a meridian presentation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroupPresentation {
    generators: usize,
    relators: Vec<FreeWord>,
    meridians: bool,
}

impl GroupPresentation {
    pub fn new(generators: usize, relators: Vec<FreeWord>, meridians: bool) -> Result<Self> {
        for (k, r) in relators.iter().enumerate() {
            if r.max_generator().is_some_and(|g| g >= generators) {
                return Err(Error::InvalidInput(format!("relator {k} uses a generator beyond {generators}")));
            }
        }
        Ok(GroupPresentation { generators, relators, meridians })
    }

    pub fn free(n: usize) -> Self {
        GroupPresentation { generators: n, relators: Vec::new(), meridians: true }
    }

    /// `Z^n` presented by all commutators `x_i x_j x_i^{-1} x_j^{-1}`, `i < j`.
    pub fn free_abelian(n: usize) -> Self {
        let mut relators = Vec::new();
        for j in 0..n {
            for i in 0..j {
                relators.push(FreeWord::from_pairs(&[(i, 1), (j, 1), (i, -1), (j, -1)]));
            }
        }
        GroupPresentation { generators: n, relators, meridians: true }
    }

    pub fn generators(&self) -> usize {
        self.generators
    }

    pub fn relators(&self) -> &[FreeWord] {
        &self.relators
    }

    pub fn meridians(&self) -> bool {
        self.meridians
    }

    /// Checks the meridian marking: flagged, and every relator has zero
    /// exponent sums so that `H_1` is free on the generators.
    pub fn check_meridians(&self) -> Result<()> {
        if !self.meridians {
            return Err(Error::NotMeridianMarked("presentation is not flagged as meridian".into()));
        }
        for (k, r) in self.relators.iter().enumerate() {
            if r.abelianization(self.generators).iter().any(|&e| e != 0) {
                return Err(Error::NotMeridianMarked(format!(
                    "relator {k} ({r}) has nonzero exponent sum, so H_1 is not free on the meridians"
                )));
            }
        }
        Ok(())
    }
}

/// `R <- R^n <- R^m`: `d_1` column `j` is `φ(x_j) - 1`, `d_2` entry
/// `(j, k)` is `φ(∂r_k/∂x_j)`.
pub fn alexander_complex<R: Euclidean>(p: &GroupPresentation, phi: &Specialization<R>) -> Result<FreeChainComplex<R>> {
    if phi.values().len() != p.generators() {
        return Err(Error::InvalidInput(format!("{} images for {} generators", phi.values().len(), p.generators())));
    }
    let ctx = phi.ctx().clone();
    for (index, r) in p.relators().iter().enumerate() {
        let value = phi.word(r)?;
        if !value.is_one() {
            return Err(Error::RelatorNotKilled { index, value: value.to_string() });
        }
    }
    let n = p.generators();
    let m = p.relators().len();
    let one = R::one(&ctx);
    let d1 = Matrix::from_fn(ctx.clone(), 1, n, |_, j| phi.values()[j].sub(&one));
    let mut d2 = Matrix::zeros(ctx.clone(), n, m);
    for (k, r) in p.relators().iter().enumerate() {
        for j in 0..n {
            d2.set(j, k, phi.element(&fox_derivative(r, j))?);
        }
    }
    FreeChainComplex::new(ctx, vec![1, n, m], vec![d1, d2])
}
