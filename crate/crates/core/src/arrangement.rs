//! Projective hyperplane arrangements given by rational linear forms, and
//! the combinatorics of their cone: flats, girth, dense edges, Betti numbers.

use crate::algebra::{Integer, Rational};
use crate::linalg::{rank, Matrix};
use crate::subsets::{binomial, colex_subsets, indices_of, mask_of};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_integer::Integer as _;
use num_rational::BigRational;
use parking_lot::Mutex;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::Arc;

const MAX_HYPERPLANES: usize = 63;

/// `n + 1` hyperplanes in `P^{r-1}`; index 0 is the distinguished `H_0`.
#[derive(Clone, Debug)]
pub struct Arrangement {
    ambient: usize,
    forms: Vec<Vec<Rational>>,
    labels: Vec<String>,
    rank: usize,
    // forms scaled to primitive integer vectors, for fast ranks
    integral: Vec<Vec<Integer>>,
    rank_cache: Arc<Mutex<HashMap<u64, usize>>>,
}

impl PartialEq for Arrangement {
    fn eq(&self, other: &Self) -> bool {
        self.ambient == other.ambient && self.forms == other.forms && self.labels == other.labels
    }
}

impl Eq for Arrangement {}

fn integral_form(form: &[Rational]) -> Vec<Integer> {
    let lcm = form.iter().fold(BigInt::from(1), |acc, x| acc.lcm(x.0.denom()));
    form.iter().map(|x| Integer((&x.0 * BigRational::from_integer(lcm.clone())).to_integer())).collect()
}

impl Arrangement {
    pub fn new(ambient: usize, forms: Vec<Vec<Rational>>, labels: Option<Vec<String>>) -> Result<Self> {
        if forms.is_empty() {
            return Err(Error::InvalidArrangement("no hyperplanes".into()));
        }
        if forms.len() > MAX_HYPERPLANES {
            return Err(Error::InvalidArrangement(format!("at most {MAX_HYPERPLANES} hyperplanes supported")));
        }
        for (i, f) in forms.iter().enumerate() {
            if f.len() != ambient {
                return Err(Error::InvalidArrangement(format!(
                    "form {i} has {} coordinates, expected {ambient}",
                    f.len()
                )));
            }
            if f.iter().all(|x| x.0 == BigRational::from_integer(BigInt::from(0))) {
                return Err(Error::InvalidArrangement(format!("form {i} is zero")));
            }
        }
        let labels = match labels {
            Some(l) if l.len() != forms.len() => {
                return Err(Error::InvalidArrangement(format!("{} labels for {} hyperplanes", l.len(), forms.len())))
            }
            Some(l) => l,
            None => (0..forms.len()).map(|i| format!("H{i}")).collect(),
        };
        let integral = forms.iter().map(|f| integral_form(f)).collect();
        let mut arrangement =
            Arrangement { ambient, forms, labels, rank: 0, integral, rank_cache: Arc::new(Mutex::new(HashMap::new())) };
        for i in 0..arrangement.forms.len() {
            for j in 0..i {
                if arrangement.rank_of_mask(mask_of(&[i, j])) < 2 {
                    return Err(Error::InvalidArrangement(format!("forms {j} and {i} are proportional")));
                }
            }
        }
        arrangement.rank = arrangement.rank_of_mask(arrangement.full_mask());
        Ok(arrangement)
    }

    pub fn from_integer_forms(ambient: usize, forms: &[Vec<i64>]) -> Result<Self> {
        let forms = forms.iter().map(|f| f.iter().map(|&x| Rational::from(x)).collect()).collect();
        Self::new(ambient, forms, None)
    }

    /// `count` hyperplanes in general position in `P^{r-1}`, from the
    /// moment curve `(1, s, s^2, ...)` at `s = 1..=count`.
    pub fn generic(count: usize, ambient: usize) -> Self {
        let forms: Vec<Vec<i64>> =
            (1..=count as i64).map(|s| (0..ambient as u32).map(|k| s.pow(k)).collect()).collect();
        Self::from_integer_forms(ambient, &forms).expect("moment curve points are distinct")
    }

    /// The `r` coordinate hyperplanes of `P^{r-1}`.
    pub fn boolean(ambient: usize) -> Self {
        let forms: Vec<Vec<i64>> = (0..ambient).map(|i| (0..ambient).map(|j| i64::from(i == j)).collect()).collect();
        Self::from_integer_forms(ambient, &forms).expect("coordinate hyperplanes")
    }

    /// Number of coordinates `r` (the arrangement lives in `P^{r-1}`).
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// `n`: the number of hyperplanes other than `H_0`.
    pub fn n(&self) -> usize {
        self.forms.len() - 1
    }

    pub fn hyperplane_count(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[Vec<Rational>] {
        &self.forms
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_essential(&self) -> bool {
        self.rank == self.ambient
    }

    fn full_mask(&self) -> u64 {
        (1u64 << self.forms.len()) - 1
    }

    fn rank_of_mask(&self, mask: u64) -> usize {
        if let Some(&r) = self.rank_cache.lock().get(&mask) {
            return r;
        }
        let idx = indices_of(mask);
        let rows = idx.iter().map(|&i| self.integral[i].clone()).collect();
        let r = rank(&Matrix::from_rows((), rows, self.ambient).expect("form lengths checked"));
        self.rank_cache.lock().insert(mask, r);
        r
    }

    /// Rank of the forms with the given indices.
    pub fn rank_of(&self, indices: &[usize]) -> usize {
        self.rank_of_mask(mask_of(indices))
    }

    fn closure_mask(&self, mask: u64) -> u64 {
        let base = self.rank_of_mask(mask);
        let mut closed = mask;
        for i in 0..self.forms.len() {
            let bit = 1u64 << i;
            if mask & bit == 0 && self.rank_of_mask(mask | bit) == base {
                closed |= bit;
            }
        }
        closed
    }

    /// All hyperplanes containing the intersection of the given ones.
    pub fn closure(&self, indices: &[usize]) -> Vec<usize> {
        indices_of(self.closure_mask(mask_of(indices)))
    }

    fn require_essential(&self) -> Result<()> {
        if self.is_essential() {
            Ok(())
        } else {
            Err(Error::NotEssential { rank: self.rank, ambient: self.ambient })
        }
    }
}

/// A flat of the cone's matroid: a closed set of hyperplane indices.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Flat {
    pub codim: usize,
    pub indices: Vec<usize>,
}

impl Flat {
    fn mask(&self) -> u64 {
        mask_of(&self.indices)
    }

    pub fn contains(&self, hyperplane: usize) -> bool {
        self.indices.contains(&hyperplane)
    }
}

impl fmt::Display for Flat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let idx: Vec<String> = self.indices.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", idx.join(","))
    }
}

/// The lattice of flats of the cone, ordered by inclusion of index sets.
#[derive(Clone, Debug)]
pub struct IntersectionLattice {
    ambient: usize,
    flats: Vec<Flat>,
    mobius: Vec<i64>,
}

impl IntersectionLattice {
    /// Every flat, from the empty flat (the whole space) up to the center,
    /// sorted by codimension then indices.
    pub fn flats(&self) -> &[Flat] {
        &self.flats
    }

    pub fn by_codim(&self, codim: usize) -> impl Iterator<Item = &Flat> {
        self.flats.iter().filter(move |f| f.codim == codim)
    }

    /// Flats that are nonempty proper edges of the projective arrangement:
    /// codimension between 1 and `r - 1`.
    pub fn edges(&self) -> Vec<&Flat> {
        self.flats.iter().filter(|f| f.codim >= 1 && f.codim < self.ambient).collect()
    }

    /// `μ(0̂, X)` aligned with [`Self::flats`].
    pub fn mobius(&self) -> &[i64] {
        &self.mobius
    }

    pub fn mobius_of(&self, flat: &Flat) -> Option<i64> {
        self.flats.iter().position(|f| f == flat).map(|i| self.mobius[i])
    }
}

pub fn intersection_lattice(a: &Arrangement) -> IntersectionLattice {
    let mut layers: Vec<BTreeSet<u64>> = vec![BTreeSet::from([0u64])];
    loop {
        let mut next = BTreeSet::new();
        for &flat in layers.last().unwrap() {
            for i in 0..a.hyperplane_count() {
                if flat & (1u64 << i) == 0 {
                    next.insert(a.closure_mask(flat | (1u64 << i)));
                }
            }
        }
        if next.is_empty() {
            break;
        }
        layers.push(next);
    }
    let mut flats = Vec::new();
    for (codim, layer) in layers.iter().enumerate() {
        let mut sorted: Vec<Flat> = layer.iter().map(|&m| Flat { codim, indices: indices_of(m) }).collect();
        sorted.sort();
        flats.extend(sorted);
    }
    let masks: Vec<u64> = flats.iter().map(Flat::mask).collect();
    let mut mobius = vec![0i64; flats.len()];
    for x in 0..flats.len() {
        mobius[x] = if x == 0 {
            1
        } else {
            -(0..x).filter(|&y| masks[y] & !masks[x] == 0 && masks[y] != masks[x]).map(|y| mobius[y]).sum::<i64>()
        };
    }
    IntersectionLattice { ambient: a.ambient(), flats, mobius }
}

/// The girth `c(A)`: least size of a dependent set of forms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(c) => write!(f, "{c}"),
            Girth::Infinite => write!(f, "infinity"),
        }
    }
}

pub fn girth(a: &Arrangement) -> Girth {
    let count = a.hyperplane_count();
    for k in 3..=count.min(a.rank() + 1) {
        if colex_subsets(count, k).iter().any(|s| a.rank_of(s) < k) {
            return Girth::Finite(k);
        }
    }
    Girth::Infinite
}

/// Whether the restriction of the matroid to `flat` is connected. Components
/// are found by linking each element outside a basis with its fundamental
/// circuit.
fn is_connected(a: &Arrangement, flat: &Flat) -> bool {
    let elements = &flat.indices;
    if elements.len() <= 1 {
        return true;
    }
    let mut basis: Vec<usize> = Vec::new();
    for &e in elements {
        let mut trial = basis.clone();
        trial.push(e);
        if a.rank_of(&trial) == trial.len() {
            basis = trial;
        }
    }
    let mut parent: BTreeMap<usize, usize> = elements.iter().map(|&e| (e, e)).collect();
    fn find(parent: &mut BTreeMap<usize, usize>, x: usize) -> usize {
        let p = parent[&x];
        if p == x {
            return x;
        }
        let root = find(parent, p);
        parent.insert(x, root);
        root
    }
    for &e in elements.iter().filter(|e| !basis.contains(e)) {
        for &b in &basis {
            let mut swapped: Vec<usize> = basis.iter().copied().filter(|&x| x != b).collect();
            swapped.push(e);
            if a.rank_of(&swapped) == basis.len() {
                let (re, rb) = (find(&mut parent, e), find(&mut parent, b));
                parent.insert(re, rb);
            }
        }
    }
    let root = find(&mut parent, elements[0]);
    elements.iter().all(|&e| find(&mut parent, e) == root)
}

/// Dense edges: flats whose localization has a connected matroid. The
/// center is included when dense; use [`Flat::codim`] to tell it apart.
pub fn dense_edges(a: &Arrangement) -> Vec<Flat> {
    intersection_lattice(a).flats().iter().filter(|f| f.codim >= 1 && is_connected(a, f)).cloned().collect()
}

/// Integer weights `γ_0..γ_n`, one per hyperplane, summing to zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    weights: Vec<i64>,
}

impl Character {
    pub fn new(weights: Vec<i64>) -> Result<Self> {
        let sum: i64 = weights.iter().sum();
        if sum != 0 {
            return Err(Error::InvalidCharacter(sum));
        }
        Ok(Character { weights })
    }

    /// Completes weights `γ_1..γ_n` with `γ_0 = -Σ γ_i`.
    pub fn from_meridian_weights(rest: &[i64]) -> Self {
        let mut weights = vec![-rest.iter().sum::<i64>()];
        weights.extend_from_slice(rest);
        Character { weights }
    }

    pub fn weights(&self) -> &[i64] {
        &self.weights
    }

    /// `γ_1..γ_n`, the values on the meridians other than `H_0`'s.
    pub fn meridian_weights(&self) -> &[i64] {
        &self.weights[1..]
    }

    pub fn is_trivial(&self) -> bool {
        self.weights.iter().all(|&w| w == 0)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NonresonanceReport {
    pub nonresonant: bool,
    pub violators: Vec<Flat>,
}

/// Checks `Σ_{H_i ⊇ S} γ_i ≠ 0` for every dense edge `S ⊆ H_0`.
pub fn is_nonresonant(a: &Arrangement, ch: &Character) -> Result<NonresonanceReport> {
    if ch.weights().len() != a.hyperplane_count() {
        return Err(Error::InvalidInput(format!(
            "{} weights for {} hyperplanes",
            ch.weights().len(),
            a.hyperplane_count()
        )));
    }
    let violators: Vec<Flat> = dense_edges(a)
        .into_iter()
        .filter(|f| f.contains(0) && f.codim < a.ambient())
        .filter(|f| f.indices.iter().map(|&i| ch.weights()[i]).sum::<i64>() == 0)
        .collect();
    Ok(NonresonanceReport { nonresonant: violators.is_empty(), violators })
}

/// Searches characters with `|γ_i| <= bound` for `i >= 1` in a fixed order
/// and returns the first nonresonant one.
pub fn find_nonresonant_character(a: &Arrangement, bound: i64) -> Option<Character> {
    let n = a.n();
    let preferred = Character::from_meridian_weights(&vec![1; n]);
    if is_nonresonant(a, &preferred).ok()?.nonresonant {
        return Some(preferred);
    }
    let width = (2 * bound + 1) as u64;
    let total = width.checked_pow(n as u32)?;
    (0..total).find_map(|code| {
        let mut c = code;
        let rest: Vec<i64> = (0..n)
            .map(|_| {
                let digit = (c % width) as i64 - bound;
                c /= width;
                digit
            })
            .collect();
        let ch = Character::from_meridian_weights(&rest);
        is_nonresonant(a, &ch).ok()?.nonresonant.then_some(ch)
    })
}

/// Betti numbers `b_0..b_{r-1}` of the projective complement and its Euler
/// characteristic.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiData {
    pub betti: Vec<u64>,
    pub euler: i64,
}

/// `b_q = Σ |μ(0̂, X)|` over codimension-`q` flats avoiding `H_0`.
pub fn betti_data(a: &Arrangement) -> Result<BettiData> {
    a.require_essential()?;
    let lattice = intersection_lattice(a);
    let mut betti = vec![0u64; a.ambient()];
    for (flat, mu) in lattice.flats().iter().zip(lattice.mobius()) {
        if !flat.contains(0) && flat.codim < a.ambient() {
            betti[flat.codim] += mu.unsigned_abs();
        }
    }
    let euler = betti.iter().enumerate().map(|(q, &b)| if q % 2 == 0 { b as i64 } else { -(b as i64) }).sum();
    Ok(BettiData { betti, euler })
}

/// `p = c - 2` (`None` when `c` is infinite) and whether the arrangement is
/// a generic section of a Boolean arrangement (`c = r + 1`, `n + 1 > r`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenericProfile {
    pub girth: Girth,
    pub p: Option<usize>,
    pub generic_position: bool,
}

pub fn generic_position_profile(a: &Arrangement) -> Result<GenericProfile> {
    a.require_essential()?;
    let c = girth(a);
    match c {
        Girth::Finite(3) => Err(Error::GirthTooSmall),
        Girth::Finite(c_value) => Ok(GenericProfile {
            girth: c,
            p: Some(c_value - 2),
            generic_position: c_value == a.ambient() + 1 && a.hyperplane_count() > a.ambient(),
        }),
        Girth::Infinite => Ok(GenericProfile { girth: c, p: None, generic_position: false }),
    }
}

/// Poincaré coefficients `C(n, q)`, `q = 0..r-1`, of a generic arrangement.
pub fn generic_betti(n: usize, ambient: usize) -> Vec<u64> {
    (0..ambient).map(|q| binomial(n, q) as u64).collect()
}
