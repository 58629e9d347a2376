//! Row-major matrices over an arbitrary entry type.
//!
//! The entry type only has to be `Clone` for structural work (circulants,
//! block assembly, index transport), which lets the composite-matrix engine
//! run over symbolic coefficient indices. Arithmetic needs [`Ring`].

use std::fmt;

use crate::error::{invalid, Result};
use crate::scalar::Ring;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Clone> DenseMatrix<T> {
    pub fn filled(rows: usize, cols: usize, value: T) -> Self {
        DenseMatrix { rows, cols, data: vec![value; rows * cols] }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn from_rows(rows: &[Vec<T>]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return invalid("matrix needs at least one row");
        };
        let cols = first.len();
        if cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return invalid("rows must be non-empty and of equal length");
        }
        Ok(DenseMatrix { rows: rows.len(), cols, data: rows.concat() })
    }

    /// Circulant matrix: row `i` is `first_row` cyclically shifted right by `i`.
    pub fn circulant(first_row: &[T]) -> Result<Self> {
        let m = first_row.len();
        if m == 0 {
            return invalid("circulant of an empty row");
        }
        Ok(Self::from_fn(m, m, |i, j| first_row[(j + m - i) % m].clone()))
    }

    /// Assembles a matrix from a rectangular grid of blocks.
    pub fn from_blocks(grid: &[Vec<&DenseMatrix<T>>]) -> Result<Self> {
        if grid.is_empty() || grid[0].is_empty() {
            return invalid("empty block grid");
        }
        let width = grid[0].len();
        let mut row_heights = Vec::with_capacity(grid.len());
        let mut col_widths = Vec::with_capacity(width);
        for block in &grid[0] {
            col_widths.push(block.cols);
        }
        for brow in grid {
            if brow.len() != width {
                return invalid("ragged block grid");
            }
            let h = brow[0].rows;
            for (b, &w) in brow.iter().zip(&col_widths) {
                if b.rows != h || b.cols != w {
                    return invalid("block dimensions do not line up");
                }
            }
            row_heights.push(h);
        }
        let rows: usize = row_heights.iter().sum();
        let cols: usize = col_widths.iter().sum();
        let mut data = Vec::with_capacity(rows * cols);
        for (brow, &h) in grid.iter().zip(&row_heights) {
            for i in 0..h {
                for block in brow {
                    data.extend_from_slice(block.row(i));
                }
            }
        }
        Ok(DenseMatrix { rows, cols, data })
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Copy of the `h x w` window whose top-left corner is `(r0, c0)`.
    pub fn submatrix(&self, r0: usize, c0: usize, h: usize, w: usize) -> Self {
        assert!(r0 + h <= self.rows && c0 + w <= self.cols, "window out of range");
        Self::from_fn(h, w, |i, j| self.get(r0 + i, c0 + j).clone())
    }

    pub fn map<U: Clone>(&self, mut f: impl FnMut(&T) -> U) -> DenseMatrix<U> {
        DenseMatrix { rows: self.rows, cols: self.cols, data: self.data.iter().map(&mut f).collect() }
    }
}

impl<T> DenseMatrix<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: T) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn iter_rows(&self) -> impl Iterator<Item = &[T]> {
        self.data.chunks(self.cols)
    }
}

impl<T: Ring> DenseMatrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self::filled(rows, cols, T::zero())
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| if i == j { T::one() } else { T::zero() })
    }

    /// Schoolbook product.
    pub fn mul(&self, rhs: &Self) -> Result<Self> {
        if self.cols != rhs.rows {
            return invalid(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            ));
        }
        Ok(Self::from_fn(self.rows, rhs.cols, |i, j| {
            (0..self.cols).fold(T::zero(), |acc, t| acc + *self.get(i, t) * *rhs.get(t, j))
        }))
    }

    pub fn add(&self, rhs: &Self) -> Result<Self> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return invalid("cannot add matrices of different shapes");
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(&a, &b)| a + b).collect(),
        })
    }

    /// `self * other^T`.
    pub fn mul_transpose(&self, other: &Self) -> Result<Self> {
        self.mul(&other.transpose())
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = *self.get(i, j);
                    if i == j { e == T::one() } else { e == T::zero() }
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|e| e.is_zero())
    }

    /// `[I | self]`.
    pub fn prepend_identity(&self) -> Self {
        let n = self.rows;
        Self::from_fn(n, n + self.cols, |i, j| {
            if j < n {
                if i == j { T::one() } else { T::zero() }
            } else {
                *self.get(i, j - n)
            }
        })
    }
}

impl<T: fmt::Display> fmt::Debug for DenseMatrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "DenseMatrix {}x{} [", self.rows, self.cols)?;
        for r in self.iter_rows() {
            let cells: Vec<String> = r.iter().map(|e| e.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;

    #[test]
    fn circulant_shifts_right() {
        let c = DenseMatrix::circulant(&[1, 2, 3]).unwrap();
        assert_eq!(c.row(0), &[1, 2, 3]);
        assert_eq!(c.row(1), &[3, 1, 2]);
        assert_eq!(c.row(2), &[2, 3, 1]);
        assert!(DenseMatrix::<u8>::circulant(&[]).is_err());
    }

    #[test]
    fn blocks_line_up() {
        let a = DenseMatrix::filled(2, 2, 1);
        let b = DenseMatrix::filled(2, 3, 2);
        let m = DenseMatrix::from_blocks(&[vec![&a, &b], vec![&b.submatrix(0, 0, 2, 2), &b]]).unwrap();
        assert_eq!((m.rows(), m.cols()), (4, 5));
        assert_eq!(m.row(0), &[1, 1, 2, 2, 2]);
        assert!(DenseMatrix::from_blocks(&[vec![&a], vec![&b]]).is_err());
    }

    #[test]
    fn identity_product() {
        let m = DenseMatrix::from_fn(3, 3, |i, j| Gf2((i * 7 + j * 3) % 5 < 2));
        let i3 = DenseMatrix::<Gf2>::identity(3);
        assert_eq!(i3.mul(&m).unwrap(), m);
        assert_eq!(m.mul(&i3).unwrap(), m);
        assert!(m.mul(&DenseMatrix::identity(4)).is_err());
    }
}
