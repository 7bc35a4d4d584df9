use crate::algebra::Ring;
use crate::{Error, Result};
use std::fmt;

/// A dense row-major matrix whose entries share one ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix<R: Ring> {
    ctx: R::Ctx,
    rows: usize,
    cols: usize,
    data: Vec<R>,
}

impl<R: Ring> Matrix<R> {
    pub fn new(ctx: R::Ctx, rows: usize, cols: usize, data: Vec<R>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{rows}x{cols} matrix needs {} entries, got {}",
                rows * cols,
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|x| x.ctx() != ctx) {
            return Err(Error::MixedRings(R::descriptor(&ctx).to_string(), R::descriptor(&bad.ctx()).to_string()));
        }
        Ok(Matrix { ctx, rows, cols, data })
    }

    pub fn from_rows(ctx: R::Ctx, rows: Vec<Vec<R>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Dimension(format!("row of length {} in a matrix with {cols} columns", bad.len())));
        }
        Self::new(ctx, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(ctx: R::Ctx, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { ctx, rows, cols, data }
    }

    pub fn zeros(ctx: R::Ctx, rows: usize, cols: usize) -> Self {
        let zero = R::zero(&ctx);
        Matrix { data: vec![zero; rows * cols], ctx, rows, cols }
    }

    pub fn identity(ctx: R::Ctx, n: usize) -> Self {
        let (zero, one) = (R::zero(&ctx), R::one(&ctx));
        Self::from_fn(ctx, n, n, |i, j| if i == j { one.clone() } else { zero.clone() })
    }

    pub fn ctx(&self) -> &R::Ctx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[R] {
        &self.data
    }

    pub fn get(&self, i: usize, j: usize) -> &R {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of bounds");
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[R] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<R> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<R>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(R::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.ctx.clone(), self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Product; panics when the inner dimensions differ.
    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("matrix dimensions")
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.ctx.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * other.cols + j;
                    out.data[idx] = out.data[idx].add(&a.mul(b));
                }
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix dimensions");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.add(b)).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix dimensions");
        let data = self.data.iter().zip(&other.data).map(|(a, b)| a.sub(b)).collect();
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, s: &R) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn neg(&self) -> Self {
        self.map(R::neg)
    }

    pub fn map(&self, f: impl Fn(&R) -> R) -> Self {
        Matrix { ctx: self.ctx.clone(), rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    /// Entrywise change of ring.
    pub fn convert<S: Ring>(&self, ctx: S::Ctx, f: impl Fn(&R) -> S) -> Matrix<S> {
        Matrix { ctx, rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Self::from_fn(self.ctx.clone(), rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    /// Columns `start..end`.
    pub fn column_range(&self, start: usize, end: usize) -> Self {
        Self::from_fn(self.ctx.clone(), self.rows, end - start, |i, j| self.get(i, start + j).clone())
    }

    /// Rows `start..end`.
    pub fn row_range(&self, start: usize, end: usize) -> Self {
        Self::from_fn(self.ctx.clone(), end - start, self.cols, |i, j| self.get(start + i, j).clone())
    }

    pub fn hstack(&self, other: &Self) -> Self {
        assert_eq!(self.rows, other.rows, "row counts");
        Self::from_fn(self.ctx.clone(), self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.get(i, j).clone()
            } else {
                other.get(i, j - self.cols).clone()
            }
        })
    }

    /// Copies `block` into `self` with its top-left corner at `(row, col)`.
    pub fn set_block(&mut self, row: usize, col: usize, block: &Self) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(row + i, col + j, block.get(i, j).clone());
            }
        }
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Integer;

    fn int_matrix(rows: &[&[i64]]) -> Matrix<Integer> {
        let cols = rows.first().map_or(0, |r| r.len());
        Matrix::from_rows((), rows.iter().map(|r| r.iter().map(|&v| Integer::from(v)).collect()).collect(), cols)
            .unwrap()
    }

    #[test]
    fn construction_checks_shape() {
        assert!(Matrix::<Integer>::new((), 2, 2, vec![Integer::from(1)]).is_err());
        assert!(Matrix::<Integer>::new((), 0, 3, vec![]).is_ok());
    }

    #[test]
    fn product_and_transpose() {
        let a = int_matrix(&[&[1, 2], &[3, 4]]);
        let b = int_matrix(&[&[0, 1], &[1, 0]]);
        assert_eq!(a.mul(&b), int_matrix(&[&[2, 1], &[4, 3]]));
        assert_eq!(a.transpose(), int_matrix(&[&[1, 3], &[2, 4]]));
        assert!(a.checked_mul(&int_matrix(&[&[1, 2, 3]])).is_err());
        let empty = Matrix::<Integer>::zeros((), 2, 0);
        assert_eq!(empty.mul(&Matrix::zeros((), 0, 3)), Matrix::zeros((), 2, 3));
    }

    #[test]
    fn display() {
        assert_eq!(int_matrix(&[&[1, -2], &[0, 3]]).to_string(), "[[1, -2], [0, 3]]");
    }
}
