//! Free chain complexes, their homology, and the elementary-divisor
//! isomorphism test for complexes of free modules over a PID.

use crate::algebra::{Euclidean, Ring, RingDescriptor};
use crate::linalg::{rank, smith_normal_form, smith_with_transforms, Matrix};
use crate::{Error, Result};
use std::fmt;

/// `0 <- C_0 <- C_1 <- ... <- C_top` with `d_q: C_q -> C_{q-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeChainComplex<R: Ring> {
    ctx: R::Ctx,
    ranks: Vec<usize>,
    boundaries: Vec<Matrix<R>>,
}

impl<R: Ring> FreeChainComplex<R> {
    /// `boundaries[q-1]` is `d_q`, of shape `ranks[q-1] x ranks[q]`.
    pub fn new(ctx: R::Ctx, ranks: Vec<usize>, boundaries: Vec<Matrix<R>>) -> Result<Self> {
        if ranks.is_empty() {
            return Err(Error::EmptyInput("a chain complex needs at least C_0"));
        }
        if boundaries.len() + 1 != ranks.len() {
            return Err(Error::Dimension(format!(
                "{} ranks need {} boundary matrices, got {}",
                ranks.len(),
                ranks.len() - 1,
                boundaries.len()
            )));
        }
        for (i, d) in boundaries.iter().enumerate() {
            let q = i + 1;
            if d.ctx() != &ctx {
                return Err(Error::MixedRings(R::descriptor(&ctx).to_string(), R::descriptor(d.ctx()).to_string()));
            }
            if d.rows() != ranks[q - 1] || d.cols() != ranks[q] {
                return Err(Error::Dimension(format!(
                    "d_{q} is {}x{}, expected {}x{}",
                    d.rows(),
                    d.cols(),
                    ranks[q - 1],
                    ranks[q]
                )));
            }
        }
        for q in 1..boundaries.len() {
            if !boundaries[q - 1].mul(&boundaries[q]).is_zero() {
                return Err(Error::NotAComplex { degree: q });
            }
        }
        Ok(FreeChainComplex { ctx, ranks, boundaries })
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn ring(&self) -> RingDescriptor {
        R::descriptor(&self.ctx)
    }

    pub fn ranks(&self) -> &[usize] {
        &self.ranks
    }

    pub fn top_degree(&self) -> usize {
        self.ranks.len() - 1
    }

    /// `d_q` for `1 <= q <= top`.
    pub fn boundary(&self, q: usize) -> Option<&Matrix<R>> {
        q.checked_sub(1).and_then(|i| self.boundaries.get(i))
    }

    pub fn boundaries(&self) -> &[Matrix<R>] {
        &self.boundaries
    }

    /// `d_q` including the zero maps `d_0` and `d_{top+1}`.
    pub fn boundary_or_zero(&self, q: usize) -> Matrix<R> {
        match self.boundary(q) {
            Some(d) => d.clone(),
            None if q == 0 => Matrix::zeros(self.ctx.clone(), 0, self.ranks[0]),
            None => {
                let rows = self.ranks.get(q - 1).copied().unwrap_or(0);
                Matrix::zeros(self.ctx.clone(), rows, 0)
            }
        }
    }

    pub fn euler_characteristic(&self) -> i64 {
        euler_characteristic(&self.ranks)
    }

    /// The complex with every entry mapped through a ring homomorphism.
    pub fn map_entries<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Result<FreeChainComplex<S>> {
        let boundaries = self.boundaries.iter().map(|d| d.convert(ctx.clone(), &f)).collect();
        FreeChainComplex::new(ctx, self.ranks.clone(), boundaries)
    }

    /// The truncation `C_0 <- ... <- C_top` with `top <= self.top_degree()`.
    pub fn truncate(&self, top: usize) -> Self {
        let top = top.min(self.top_degree());
        FreeChainComplex {
            ctx: self.ctx.clone(),
            ranks: self.ranks[..=top].to_vec(),
            boundaries: self.boundaries[..top].to_vec(),
        }
    }
}

/// `Σ (-1)^q ranks[q]`.
pub fn euler_characteristic(ranks: &[usize]) -> i64 {
    ranks.iter().enumerate().map(|(q, &n)| if q % 2 == 0 { n as i64 } else { -(n as i64) }).sum()
}

/// `H_q = R^free_rank ⊕ ⨁ R/(torsion_i)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyGroup<R: Ring> {
    pub degree: usize,
    pub free_rank: usize,
    pub torsion: Vec<R>,
}

impl<R: Ring> HomologyGroup<R> {
    pub fn is_zero(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    pub fn torsion_strings(&self) -> Vec<String> {
        self.torsion.iter().map(ToString::to_string).collect()
    }
}

impl<R: Ring> fmt::Display for HomologyGroup<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("R".to_string()),
            n => parts.push(format!("R^{n}")),
        }
        parts.extend(self.torsion.iter().map(|d| format!("R/({d})")));
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// `H_q` of the complex. Over a field the torsion is always empty.
pub fn homology<R: Euclidean>(c: &FreeChainComplex<R>, q: usize) -> Result<HomologyGroup<R>> {
    if q > c.top_degree() {
        return Err(Error::DegreeOutOfRange { degree: q, top: c.top_degree() });
    }
    let outgoing = c.boundary(q).map_or(0, rank);
    let (incoming, torsion) = match c.boundary(q + 1) {
        Some(d) => {
            let snf = smith_normal_form(d);
            (snf.rank, snf.nonunit_divisors())
        }
        None => (0, Vec::new()),
    };
    Ok(HomologyGroup { degree: q, free_rank: c.ranks()[q] - outgoing - incoming, torsion })
}

/// Homology in every degree `0..=top`.
pub fn homology_all<R: Euclidean>(c: &FreeChainComplex<R>) -> Vec<HomologyGroup<R>> {
    (0..=c.top_degree()).map(|q| homology(c, q).expect("degree in range")).collect()
}

/// Outcome of comparing two complexes by their boundary divisor chains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IsomorphismReport<R: Ring> {
    pub isomorphic: bool,
    pub reason: Option<String>,
    /// Per boundary `d_q` (q = 1..top): the two normalized divisor chains.
    pub divisors: Vec<(Vec<R>, Vec<R>)>,
}

/// Decides whether two free complexes over the same PID are isomorphic,
/// by comparing ranks and the Smith divisor chains of every boundary.
pub fn decide_isomorphic<R: Euclidean>(
    a: &FreeChainComplex<R>,
    b: &FreeChainComplex<R>,
) -> Result<IsomorphismReport<R>> {
    if a.ctx() != b.ctx() {
        return Err(Error::MixedRings(a.ring().to_string(), b.ring().to_string()));
    }
    if a.ranks() != b.ranks() {
        return Ok(IsomorphismReport {
            isomorphic: false,
            reason: Some(format!("ranks differ: {:?} vs {:?}", a.ranks(), b.ranks())),
            divisors: Vec::new(),
        });
    }
    let mut divisors = Vec::new();
    let mut reason = None;
    for q in 1..=a.top_degree() {
        let da = smith_normal_form(a.boundary(q).unwrap()).divisors;
        let db = smith_normal_form(b.boundary(q).unwrap()).divisors;
        if da != db && reason.is_none() {
            let show = |v: &[R]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(", ");
            reason = Some(format!("d_{q} divisors differ: ({}) vs ({})", show(&da), show(&db)));
        }
        divisors.push((da, db));
    }
    Ok(IsomorphismReport { isomorphic: reason.is_none(), reason, divisors })
}

/// Bases adapted to the complex: in degree q the columns of `basis[q]` are
/// `N_q` (mapped by `d_q` to multiples of the next cycles) followed by a
/// basis of the cycles `Z_q`, arranged so that `d_{q+1}` sends the j-th
/// vector of `N_{q+1}` to `divisors[q][j]` times the j-th cycle.
struct AdaptedBases<R: Ring> {
    basis: Vec<Matrix<R>>,
    basis_inverse: Vec<Matrix<R>>,
}

fn adapted_bases<R: Euclidean>(c: &FreeChainComplex<R>) -> AdaptedBases<R> {
    let ctx = c.ctx().clone();
    let top = c.top_degree();
    let mut current = Matrix::identity(ctx.clone(), c.ranks()[0]);
    let mut current_inv = current.clone();
    let mut boundary_rank = 0;
    let mut basis = Vec::new();
    let mut basis_inverse = Vec::new();
    for q in 0..=top {
        let n = c.ranks()[q];
        if q == top {
            basis.push(current);
            basis_inverse.push(current_inv);
            break;
        }
        let d = c.boundary(q + 1).unwrap();
        let coords = current_inv.mul(d);
        let cycles_part = coords.row_range(boundary_rank, n);
        let snf = smith_with_transforms(&cycles_part);
        let t = snf.transforms.unwrap();
        let mut change = Matrix::identity(ctx.clone(), n);
        change.set_block(boundary_rank, boundary_rank, &t.left_inverse);
        let mut change_inv = Matrix::identity(ctx.clone(), n);
        change_inv.set_block(boundary_rank, boundary_rank, &t.left);
        basis.push(current.mul(&change));
        basis_inverse.push(change_inv.mul(&current_inv));
        current = t.right;
        current_inv = t.right_inverse;
        boundary_rank = snf.rank;
    }
    AdaptedBases { basis, basis_inverse }
}

/// An explicit degreewise isomorphism `f_q: C_q -> C'_q` with
/// `d'_q f_q = f_{q-1} d_q`, or `None` when the complexes are not isomorphic.
pub fn isomorphism_witness<R: Euclidean>(
    a: &FreeChainComplex<R>,
    b: &FreeChainComplex<R>,
) -> Result<Option<Vec<Matrix<R>>>> {
    if !decide_isomorphic(a, b)?.isomorphic {
        return Ok(None);
    }
    let ba = adapted_bases(a);
    let bb = adapted_bases(b);
    Ok(Some(bb.basis.iter().zip(&ba.basis_inverse).map(|(target, source_inv)| target.mul(source_inv)).collect()))
}
