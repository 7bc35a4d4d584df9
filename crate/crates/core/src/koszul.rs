//! The Koszul complex of `Z^n` with coefficients in a module on which the
//! generators act by units, and the homology computations it supports for
//! arrangements of small girth.

use crate::algebra::{Euclidean, Field, Laurent, Ring};
use crate::arrangement::{betti_data, generic_position_profile, girth, Arrangement, Character, Girth};
use crate::chain::{homology, FreeChainComplex, HomologyGroup};
use crate::linalg::{inverse, rank, smith_normal_form, Matrix};
use crate::subsets::{binomial, colex_index, colex_subsets, mask_of};
use crate::{Error, Result};

/// Actions `x_1..x_n` on a free module of rank `module_rank`, each given by
/// an invertible matrix (1x1 for characters).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnitAssignment<R: Ring> {
    ctx: R::Ctx,
    module_rank: usize,
    units: Vec<Matrix<R>>,
    inverses: Vec<Matrix<R>>,
}

impl<R: Euclidean> UnitAssignment<R> {
    pub fn scalars(ctx: R::Ctx, units: Vec<R>) -> Result<Self> {
        let mut matrices = Vec::with_capacity(units.len());
        let mut inverses = Vec::with_capacity(units.len());
        for (i, u) in units.into_iter().enumerate() {
            let inv = u.inverse().ok_or_else(|| Error::NotInvertible(format!("unit {} = {u}", i + 1)))?;
            matrices.push(Matrix::new(ctx.clone(), 1, 1, vec![u])?);
            inverses.push(Matrix::new(ctx.clone(), 1, 1, vec![inv])?);
        }
        Ok(UnitAssignment { ctx, module_rank: 1, units: matrices, inverses })
    }

    pub fn matrices(ctx: R::Ctx, module_rank: usize, units: Vec<Matrix<R>>) -> Result<Self> {
        let mut inverses = Vec::with_capacity(units.len());
        for (i, u) in units.iter().enumerate() {
            if u.rows() != module_rank || u.cols() != module_rank {
                return Err(Error::Dimension(format!(
                    "unit {} is {}x{}, expected {module_rank}x{module_rank}",
                    i + 1,
                    u.rows(),
                    u.cols()
                )));
            }
            inverses.push(inverse(u).map_err(|_| Error::NotInvertible(format!("unit matrix {}", i + 1)))?);
        }
        Ok(UnitAssignment { ctx, module_rank, units, inverses })
    }

    /// All generators acting trivially.
    pub fn trivial(ctx: R::Ctx, n: usize) -> Self {
        Self::scalars(ctx.clone(), vec![R::one(&ctx); n]).expect("one is a unit")
    }
}

impl<K: Field> UnitAssignment<Laurent<K>> {
    /// `x_i ↦ t^{γ_i}` over `K[t, t^-1]`.
    pub fn laurent_character(ctx: K::Ctx, weights: &[i64]) -> Self {
        let units = weights.iter().map(|&w| Laurent::t_power(&ctx, w)).collect();
        Self::scalars(ctx, units).expect("monomials are units")
    }
}

impl<R: Ring> UnitAssignment<R> {
    pub fn n(&self) -> usize {
        self.units.len()
    }

    pub fn module_rank(&self) -> usize {
        self.module_rank
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn unit(&self, i: usize) -> &Matrix<R> {
        &self.units[i]
    }

    pub fn unit_inverse(&self, i: usize) -> &Matrix<R> {
        &self.inverses[i]
    }
}

/// The Koszul complex together with its basis: in degree `q`, block `k`
/// corresponds to the `k`-th `q`-subset of generators in colex order.
#[derive(Clone, Debug)]
pub struct KoszulComplex<R: Ring> {
    pub complex: FreeChainComplex<R>,
    pub subsets: Vec<Vec<Vec<usize>>>,
    pub module_rank: usize,
}

/// `∂(x_{i_1} ∧ ... ∧ x_{i_s} ⊗ v) = Σ_r (-1)^{r-1} x_{i_1} ∧ ..x̂_{i_r}.. ∧ x_{i_s} ⊗ (x_{i_r}^{-1} - 1) v`.
pub fn build_koszul<R: Euclidean>(u: &UnitAssignment<R>, top_degree: usize) -> Result<KoszulComplex<R>> {
    let n = u.n();
    if top_degree > n {
        return Err(Error::DegreeOutOfRange { degree: top_degree, top: n });
    }
    let d = u.module_rank();
    let ctx = u.ctx().clone();
    let identity = Matrix::identity(ctx.clone(), d);
    let slots: Vec<Matrix<R>> = (0..n).map(|i| u.unit_inverse(i).sub(&identity)).collect();
    let subsets: Vec<Vec<Vec<usize>>> = (0..=top_degree).map(|q| colex_subsets(n, q)).collect();
    let ranks: Vec<usize> = subsets.iter().map(|s| s.len() * d).collect();
    let mut boundaries = Vec::with_capacity(top_degree);
    for s in 1..=top_degree {
        let target = colex_index(&subsets[s - 1]);
        let mut m = Matrix::zeros(ctx.clone(), ranks[s - 1], ranks[s]);
        for (col, subset) in subsets[s].iter().enumerate() {
            for (r, &generator) in subset.iter().enumerate() {
                let face: Vec<usize> = subset.iter().copied().filter(|&x| x != generator).collect();
                let row = target[&mask_of(&face)];
                let block = if r % 2 == 0 { slots[generator].clone() } else { slots[generator].neg() };
                m.set_block(row * d, col * d, &block);
            }
        }
        boundaries.push(m);
    }
    Ok(KoszulComplex { complex: FreeChainComplex::new(ctx, ranks, boundaries)?, subsets, module_rank: d })
}

/// Homology valid in the range `q < c - 2` (all degrees when `c = ∞`).
#[derive(Clone, Debug)]
pub struct GenericRangeHomology<R: Ring> {
    pub girth: Girth,
    pub groups: Vec<HomologyGroup<R>>,
    pub note: Option<String>,
}

fn check_unit_count<R: Ring>(a: &Arrangement, u: &UnitAssignment<R>) -> Result<()> {
    if u.n() != a.n() {
        return Err(Error::InvalidInput(format!("{} units for an arrangement with n = {}", u.n(), a.n())));
    }
    Ok(())
}

pub fn generic_range_homology<R: Euclidean>(a: &Arrangement, u: &UnitAssignment<R>) -> Result<GenericRangeHomology<R>> {
    check_unit_count(a, u)?;
    let c = girth(a);
    let (degrees, note) = match c {
        Girth::Finite(3) => return Err(Error::GirthTooSmall),
        Girth::Finite(c) => (c - 2, None),
        Girth::Infinite => (
            a.n() + 1,
            Some("c(A) is infinite: the complement is a complex torus and every degree is valid".to_string()),
        ),
    };
    let top = degrees.min(a.n());
    let kc = build_koszul(u, top)?;
    let groups = (0..degrees.min(top + 1)).map(|q| homology(&kc.complex, q)).collect::<Result<_>>()?;
    Ok(GenericRangeHomology { girth: c, groups, note })
}

/// All homology of a generic-position arrangement; the top degree `r - 1`
/// is computed as a kernel and, independently, from the Euler
/// characteristic and the lower Tor ranks.
#[derive(Clone, Debug)]
pub struct CompleteHomology<R: Ring> {
    pub groups: Vec<HomologyGroup<R>>,
    pub euler: i64,
    pub kappa: i64,
    pub kernel_rank: usize,
    pub formula_rank: i64,
}

fn require_generic_position(a: &Arrangement) -> Result<()> {
    let profile = generic_position_profile(a).map_err(|e| match e {
        Error::GirthTooSmall => Error::NotGenericPosition("c(A) = 3".into()),
        other => other,
    })?;
    if !profile.generic_position {
        return Err(Error::NotGenericPosition(format!(
            "need c(A) = r + 1 = {} and more than r hyperplanes, got c(A) = {} with {} hyperplanes",
            a.ambient() + 1,
            profile.girth,
            a.hyperplane_count()
        )));
    }
    Ok(())
}

fn signed(q: usize, value: i64) -> i64 {
    if q.is_multiple_of(2) {
        value
    } else {
        -value
    }
}

pub fn complete_homology_generic_position<R: Euclidean>(
    a: &Arrangement,
    u: &UnitAssignment<R>,
) -> Result<CompleteHomology<R>> {
    check_unit_count(a, u)?;
    require_generic_position(a)?;
    let r = a.ambient();
    let d = u.module_rank() as i64;
    let euler = betti_data(a)?.euler;
    let kc = build_koszul(u, r - 1)?;
    let mut groups: Vec<HomologyGroup<R>> = (0..r - 1).map(|q| homology(&kc.complex, q)).collect::<Result<_>>()?;
    let kappa: i64 = groups.iter().map(|h| signed(h.degree, h.free_rank as i64)).sum();
    let top = kc.complex.boundary(r - 1).expect("r >= 2");
    let kernel_rank = kc.complex.ranks()[r - 1] - rank(top);
    let formula_rank = signed(r - 1, d * euler - kappa);
    if formula_rank != kernel_rank as i64 {
        return Err(Error::Disagreement(format!(
            "H_{}: kernel rank {kernel_rank} but Euler-characteristic formula gives {formula_rank}",
            r - 1
        )));
    }
    groups.push(HomologyGroup { degree: r - 1, free_rank: kernel_rank, torsion: Vec::new() });
    Ok(CompleteHomology { groups, euler, kappa, kernel_rank, formula_rank })
}

/// A presentation matrix of `π_p ⊗ KZ` and its cokernel.
#[derive(Clone, Debug)]
pub struct PiPresentation<R: Ring> {
    pub p: usize,
    pub matrix: Matrix<R>,
    pub cokernel: HomologyGroup<R>,
}

pub(crate) fn cokernel<R: Euclidean>(m: &Matrix<R>, degree: usize) -> HomologyGroup<R> {
    let snf = smith_normal_form(m);
    HomologyGroup { degree, free_rank: m.rows() - snf.rank, torsion: snf.nonunit_divisors() }
}

/// `∂_{p+2}` of the Koszul complex with units `t^{γ_i}`, `p = r - 1`.
pub fn pi_p_presentation_boolean<K: Field>(
    a: &Arrangement,
    ch: &Character,
    base: K::Ctx,
) -> Result<PiPresentation<Laurent<K>>> {
    require_generic_position(a)?;
    if ch.weights().len() != a.hyperplane_count() {
        return Err(Error::InvalidInput(format!(
            "{} weights for {} hyperplanes",
            ch.weights().len(),
            a.hyperplane_count()
        )));
    }
    let r = a.ambient();
    let n = a.n();
    let u = UnitAssignment::laurent_character(base.clone(), ch.meridian_weights());
    let matrix = if r < n {
        let kc = build_koszul(&u, r + 1)?;
        kc.complex.boundary(r + 1).unwrap().clone()
    } else {
        Matrix::zeros(base, binomial(n, r), 0)
    };
    let cokernel = cokernel(&matrix, r - 1);
    Ok(PiPresentation { p: r - 1, matrix, cokernel })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse::parse_scalar, Cyclotomic, CyclotomicField, Rational};

    type LQ = Laurent<Rational>;

    fn lq(text: &str) -> LQ {
        parse_scalar(text, &()).unwrap()
    }

    #[test]
    fn trivial_units_give_zero_boundaries() {
        let u = UnitAssignment::<Rational>::trivial((), 2);
        let kc = build_koszul(&u, 2).unwrap();
        assert_eq!(kc.complex.ranks(), &[1, 2, 1]);
        assert!(kc.complex.boundaries().iter().all(Matrix::is_zero));
    }

    #[test]
    fn single_slot() {
        let u = UnitAssignment::<LQ>::laurent_character((), &[1]);
        let kc = build_koszul(&u, 1).unwrap();
        assert_eq!(kc.complex.boundary(1).unwrap().entries(), &[lq("t^-1 - 1")]);
    }

    #[test]
    fn hand_expanded_two_generators() {
        let field = CyclotomicField::new(3);
        let z = field.generator();
        let u = UnitAssignment::scalars(field.clone(), vec![z.clone(), z.clone()]).unwrap();
        let kc = build_koszul(&u, 2).unwrap();
        let slot = z.inverse().unwrap().sub(&Cyclotomic::one(&field));
        assert_eq!(kc.complex.boundary(1).unwrap().entries(), &[slot.clone(), slot.clone()]);
        assert_eq!(kc.complex.boundary(2).unwrap().entries(), &[slot.neg(), slot.clone()]);
    }

    #[test]
    fn matrix_units() {
        let rows = vec![vec![Rational::from(1), Rational::from(1)], vec![Rational::from(0), Rational::from(1)]];
        let shear = Matrix::from_rows((), rows, 2).unwrap();
        let u = UnitAssignment::matrices((), 2, vec![shear.clone(), shear.clone(), shear]).unwrap();
        let kc = build_koszul(&u, 3).unwrap();
        assert_eq!(kc.complex.ranks(), &[2, 6, 6, 2]);
        let singular = Matrix::<Rational>::zeros((), 2, 2);
        assert!(UnitAssignment::matrices((), 2, vec![singular]).is_err());
    }

    #[test]
    fn generic_range_examples() {
        let four = Arrangement::generic(4, 3);
        let trivial = generic_range_homology(&four, &UnitAssignment::<Rational>::trivial((), 3)).unwrap();
        let ranks: Vec<usize> = trivial.groups.iter().map(|h| h.free_rank).collect();
        assert_eq!(ranks, vec![1, 3]);

        let field = CyclotomicField::new(3);
        let z = field.generator();
        let u = UnitAssignment::scalars(field, vec![z.clone(), z.clone(), z]).unwrap();
        let h = generic_range_homology(&four, &u).unwrap();
        assert!(h.groups.iter().all(HomologyGroup::is_zero));

        let boolean = Arrangement::boolean(3);
        let u = UnitAssignment::<LQ>::laurent_character((), &[1, 1]);
        let h = generic_range_homology(&boolean, &u).unwrap();
        assert!(h.note.is_some());
        assert_eq!(h.groups[0].torsion, vec![lq("t - 1")]);
        assert_eq!(h.groups.len(), 3);

        let near_pencil =
            Arrangement::from_integer_forms(3, &[vec![1, 0, 0], vec![0, 1, 0], vec![1, 1, 0], vec![0, 0, 1]]).unwrap();
        let u = UnitAssignment::<Rational>::trivial((), 3);
        assert_eq!(generic_range_homology(&near_pencil, &u).unwrap_err(), Error::GirthTooSmall);
    }

    #[test]
    fn complete_homology_examples() {
        let five = Arrangement::generic(5, 3);
        let trivial =
            complete_homology_generic_position(&five, &UnitAssignment::<LQ>::laurent_character((), &[0; 4])).unwrap();
        assert_eq!(trivial.groups[2].free_rank, 6);
        assert_eq!(trivial.kappa, -3);

        let nonres =
            complete_homology_generic_position(&five, &UnitAssignment::<LQ>::laurent_character((), &[1; 4])).unwrap();
        assert_eq!(nonres.groups[0].free_rank, 0);
        assert_eq!(nonres.groups[1].free_rank, 0);
        assert!(!nonres.groups[0].torsion.is_empty());
        assert_eq!(nonres.groups[2].free_rank, 3);

        let four = Arrangement::generic(4, 3);
        let h = complete_homology_generic_position(&four, &UnitAssignment::<Rational>::trivial((), 3)).unwrap();
        assert_eq!(h.groups[2].free_rank, 3);

        let boolean = Arrangement::boolean(3);
        assert!(matches!(
            complete_homology_generic_position(&boolean, &UnitAssignment::<Rational>::trivial((), 2)),
            Err(Error::NotGenericPosition(_))
        ));
    }

    #[test]
    fn pi_presentation_examples() {
        let five = Arrangement::generic(5, 3);
        let nonres = Character::from_meridian_weights(&[1, 1, 1, 1]);
        let p = pi_p_presentation_boolean::<Rational>(&five, &nonres, ()).unwrap();
        assert_eq!((p.p, p.matrix.rows(), p.matrix.cols()), (2, 4, 1));
        assert_eq!(p.cokernel.free_rank, 3);
        let trivial = Character::from_meridian_weights(&[0; 4]);
        assert_eq!(pi_p_presentation_boolean::<Rational>(&five, &trivial, ()).unwrap().cokernel.free_rank, 4);
        let four = Arrangement::generic(4, 3);
        let any = Character::from_meridian_weights(&[2, -1, 3]);
        let p = pi_p_presentation_boolean::<Rational>(&four, &any, ()).unwrap();
        assert_eq!((p.matrix.rows(), p.matrix.cols(), p.cokernel.free_rank), (1, 0, 1));
    }
}
