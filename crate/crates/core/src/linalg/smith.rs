use super::Matrix;
use crate::algebra::{Euclidean, Ring};
use crate::{Error, Result};

/// Rank over the fraction field by fraction-free (Bareiss) elimination.
pub fn rank<R: Euclidean>(m: &Matrix<R>) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut prev = R::one(m.ctx());
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in r + 1..rows {
            for j in c + 1..cols {
                let num = a[r][c].mul(&a[i][j]).sub(&a[i][c].mul(&a[r][j]));
                a[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][c] = R::zero(m.ctx());
        }
        prev = a[r][c].clone();
        r += 1;
    }
    r
}

/// Unimodular transforms with `left * m * right = diag(divisors)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithTransforms<R: Ring> {
    pub left: Matrix<R>,
    pub left_inverse: Matrix<R>,
    pub right: Matrix<R>,
    pub right_inverse: Matrix<R>,
}

/// Smith normal form: a normalized divisor chain `d_1 | d_2 | ... | d_s`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm<R: Ring> {
    pub divisors: Vec<R>,
    pub rank: usize,
    pub transforms: Option<SmithTransforms<R>>,
}

impl<R: Euclidean> SmithForm<R> {
    /// Divisors that are not units, i.e. the torsion of the cokernel.
    pub fn nonunit_divisors(&self) -> Vec<R> {
        self.divisors.iter().filter(|d| !d.is_unit()).cloned().collect()
    }
}

type Rows<R> = Vec<Vec<R>>;

struct Work<R: Euclidean> {
    a: Rows<R>,
    track: Option<[Rows<R>; 4]>,
    ctx: R::Ctx,
}

fn identity_rows<R: Ring>(ctx: &R::Ctx, n: usize) -> Rows<R> {
    (0..n).map(|i| (0..n).map(|j| if i == j { R::one(ctx) } else { R::zero(ctx) }).collect()).collect()
}

fn add_row_multiple<R: Ring>(m: &mut Rows<R>, target: usize, source: usize, c: &R) {
    for j in 0..m[target].len() {
        let v = m[source][j].mul(c);
        m[target][j] = m[target][j].add(&v);
    }
}

fn add_col_multiple<R: Ring>(m: &mut Rows<R>, target: usize, source: usize, c: &R) {
    for row in m.iter_mut() {
        let v = row[source].mul(c);
        row[target] = row[target].add(&v);
    }
}

impl<R: Euclidean> Work<R> {
    // Transform layout: [left, left_inverse, right, right_inverse].

    /// row_i += c * row_j
    fn row_add(&mut self, i: usize, j: usize, c: &R) {
        add_row_multiple(&mut self.a, i, j, c);
        if let Some([p, pinv, _, _]) = &mut self.track {
            add_row_multiple(p, i, j, c);
            add_col_multiple(pinv, j, i, &c.neg());
        }
    }

    /// col_i += c * col_j
    fn col_add(&mut self, i: usize, j: usize, c: &R) {
        add_col_multiple(&mut self.a, i, j, c);
        if let Some([_, _, q, qinv]) = &mut self.track {
            add_col_multiple(q, i, j, c);
            add_row_multiple(qinv, j, i, &c.neg());
        }
    }

    fn row_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        self.a.swap(i, j);
        if let Some([p, pinv, _, _]) = &mut self.track {
            p.swap(i, j);
            for row in pinv.iter_mut() {
                row.swap(i, j);
            }
        }
    }

    fn col_swap(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for row in self.a.iter_mut() {
            row.swap(i, j);
        }
        if let Some([_, _, q, qinv]) = &mut self.track {
            for row in q.iter_mut() {
                row.swap(i, j);
            }
            qinv.swap(i, j);
        }
    }

    fn row_scale(&mut self, i: usize, unit: &R) {
        let inv = unit.inverse().expect("scaling by a unit");
        for x in self.a[i].iter_mut() {
            *x = x.mul(unit);
        }
        if let Some([p, pinv, _, _]) = &mut self.track {
            for x in p[i].iter_mut() {
                *x = x.mul(unit);
            }
            for row in pinv.iter_mut() {
                row[i] = row[i].mul(&inv);
            }
        }
    }

    fn smallest_entry(&self, k: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize, R::Size)> = None;
        for (i, row) in self.a.iter().enumerate().skip(k) {
            for (j, x) in row.iter().enumerate().skip(k) {
                if x.is_zero() {
                    continue;
                }
                let size = x.size();
                if best.as_ref().is_none_or(|(_, _, s)| size < *s) {
                    best = Some((i, j, size));
                }
            }
        }
        best.map(|(i, j, _)| (i, j))
    }

    fn run(&mut self) -> Vec<R> {
        let rows = self.a.len();
        let cols = self.a.first().map_or(0, |r| r.len());
        let mut divisors = Vec::new();
        for k in 0..rows.min(cols) {
            let Some((pi, pj)) = self.smallest_entry(k) else {
                break;
            };
            self.row_swap(k, pi);
            self.col_swap(k, pj);
            loop {
                let mut dirty = false;
                for i in k + 1..rows {
                    if self.a[i][k].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[i][k].div_rem(&self.a[k][k]);
                    self.row_add(i, k, &q.neg());
                    dirty |= !r.is_zero();
                }
                for j in k + 1..cols {
                    if self.a[k][j].is_zero() {
                        continue;
                    }
                    let (q, r) = self.a[k][j].div_rem(&self.a[k][k]);
                    self.col_add(j, k, &q.neg());
                    dirty |= !r.is_zero();
                }
                if dirty {
                    // a remainder is now smaller than the pivot
                    let (pi, pj) = self.smallest_entry(k).expect("nonzero entries remain");
                    self.row_swap(k, pi);
                    self.col_swap(k, pj);
                    continue;
                }
                let offender = (k + 1..rows)
                    .find_map(|i| (k + 1..cols).find(|&j| !self.a[k][k].divides(&self.a[i][j])).map(|_| i));
                match offender {
                    Some(i) => {
                        let one = R::one(&self.ctx);
                        self.row_add(k, i, &one);
                    }
                    None => break,
                }
            }
            let unit = self.a[k][k].normalizing_unit();
            self.row_scale(k, &unit);
            divisors.push(self.a[k][k].clone());
        }
        divisors
    }
}

fn compute<R: Euclidean>(m: &Matrix<R>, track: bool) -> SmithForm<R> {
    let ctx = m.ctx().clone();
    let track = track.then(|| {
        [
            identity_rows(&ctx, m.rows()),
            identity_rows(&ctx, m.rows()),
            identity_rows(&ctx, m.cols()),
            identity_rows(&ctx, m.cols()),
        ]
    });
    let mut work = Work { a: m.to_rows(), track, ctx: ctx.clone() };
    let divisors = work.run();
    let transforms = work.track.map(|[p, pinv, q, qinv]| {
        let build = |rows: Rows<R>, n: usize| Matrix::from_rows(ctx.clone(), rows, n).expect("square");
        SmithTransforms {
            left: build(p, m.rows()),
            left_inverse: build(pinv, m.rows()),
            right: build(q, m.cols()),
            right_inverse: build(qinv, m.cols()),
        }
    });
    SmithForm { rank: divisors.len(), divisors, transforms }
}

pub fn smith_normal_form<R: Euclidean>(m: &Matrix<R>) -> SmithForm<R> {
    compute(m, false)
}

pub fn smith_with_transforms<R: Euclidean>(m: &Matrix<R>) -> SmithForm<R> {
    compute(m, true)
}

/// A basis of the kernel as columns; over a PID the basis is saturated
/// (it spans the kernel of the map of free modules).
pub fn kernel_basis<R: Euclidean>(m: &Matrix<R>) -> Matrix<R> {
    let snf = smith_with_transforms(m);
    let right = snf.transforms.expect("tracked").right;
    right.column_range(snf.rank, m.cols())
}

/// Inverse of a matrix that is invertible over the ring itself.
pub fn inverse<R: Euclidean>(m: &Matrix<R>) -> Result<Matrix<R>> {
    if m.rows() != m.cols() {
        return Err(Error::Dimension(format!("{}x{} matrix is not square", m.rows(), m.cols())));
    }
    let snf = smith_with_transforms(m);
    if snf.rank != m.rows() || snf.divisors.iter().any(|d| !d.is_unit()) {
        return Err(Error::NotInvertible(format!("matrix {m}")));
    }
    let t = snf.transforms.expect("tracked");
    // left * m * right = I after unit normalization
    Ok(t.right.mul(&t.left))
}
