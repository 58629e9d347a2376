//! Dense GF(2) matrices with bit-packed rows.
//!
//! Row storage uses one `u64` per 64 columns; column `j` lives in word
//! `j / 64` at bit `j % 64` (little-endian within a word). Padding bits past
//! `cols` are always zero, so row weights are plain popcounts.

use std::fmt;

use crate::dense::DenseMatrix;
use crate::error::{invalid, Error, Result};
use crate::scalar::Gf2;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

fn words_for(cols: usize) -> usize {
    cols.div_ceil(64)
}

impl BitMatrix {
    /// # Panics
    ///
    /// Panics if either dimension is zero.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        assert!(rows >= 1 && cols >= 1, "BitMatrix dimensions must be positive");
        let stride = words_for(cols);
        BitMatrix { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    /// Builds a matrix from rows of at most 64 columns given as words.
    pub fn from_u64_rows(rows: &[u64], cols: usize) -> Result<Self> {
        if rows.is_empty() || cols == 0 || cols > 64 {
            return invalid("from_u64_rows needs 1..=64 columns and at least one row");
        }
        let mask = low_mask(cols);
        if rows.iter().any(|r| r & !mask != 0) {
            return invalid("row word has bits beyond the column count");
        }
        Ok(BitMatrix { rows: rows.len(), cols, stride: 1, data: rows.to_vec() })
    }

    pub fn from_bool_rows(rows: &[Vec<bool>]) -> Result<Self> {
        let Some(first) = rows.first() else {
            return invalid("matrix needs at least one row");
        };
        let cols = first.len();
        if cols == 0 || rows.iter().any(|r| r.len() != cols) {
            return invalid("rows must be non-empty and of equal length");
        }
        let mut m = Self::zeros(rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &b) in r.iter().enumerate() {
                if b {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    pub fn from_dense(d: &DenseMatrix<Gf2>) -> Self {
        let mut m = Self::zeros(d.rows(), d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                if d.get(i, j).0 {
                    m.set(i, j, true);
                }
            }
        }
        m
    }

    pub fn to_dense(&self) -> DenseMatrix<Gf2> {
        DenseMatrix::from_fn(self.rows, self.cols, |i, j| Gf2(self.get(i, j)))
    }

    /// Circulant matrix whose row `i` is `first_row` cyclically shifted right by `i`.
    pub fn circulant(first_row: &[bool]) -> Result<Self> {
        let m = first_row.len();
        if m == 0 {
            return invalid("circulant of an empty row");
        }
        let mut out = Self::zeros(m, m);
        for i in 0..m {
            for (j, &b) in first_row.iter().enumerate() {
                if b {
                    out.set(i, (j + i) % m, true);
                }
            }
        }
        Ok(out)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        debug_assert!(i < self.rows && j < self.cols);
        (self.data[i * self.stride + j / 64] >> (j % 64)) & 1 == 1
    }

    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        assert!(i < self.rows && j < self.cols, "index ({i},{j}) out of range");
        let w = &mut self.data[i * self.stride + j / 64];
        let bit = 1u64 << (j % 64);
        if value {
            *w |= bit;
        } else {
            *w &= !bit;
        }
    }

    pub fn row_words(&self, i: usize) -> &[u64] {
        &self.data[i * self.stride..(i + 1) * self.stride]
    }

    fn row_words_mut(&mut self, i: usize) -> &mut [u64] {
        &mut self.data[i * self.stride..(i + 1) * self.stride]
    }

    /// Row `i` as a single word. Only valid when `cols <= 64`.
    pub fn row_u64(&self, i: usize) -> u64 {
        assert!(self.cols <= 64, "row_u64 on a matrix wider than 64 columns");
        self.data[i]
    }

    pub fn row_weight(&self, i: usize) -> usize {
        self.row_words(i).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn row_bits(&self, i: usize) -> Vec<bool> {
        (0..self.cols).map(|j| self.get(i, j)).collect()
    }

    pub fn xor_row_into(&mut self, src: usize, dst: usize) {
        if src == dst {
            self.row_words_mut(dst).fill(0);
            return;
        }
        let (s, d) = (src * self.stride, dst * self.stride);
        for w in 0..self.stride {
            self.data[d + w] ^= self.data[s + w];
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for w in 0..self.stride {
                self.data.swap(a * self.stride + w, b * self.stride + w);
            }
        }
    }

    pub fn transpose(&self) -> Self {
        let mut out = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let j = wi * 64 + w.trailing_zeros() as usize;
                    out.set(j, i, true);
                    w &= w - 1;
                }
            }
        }
        out
    }

    /// Product over GF(2).
    pub fn mat_mul(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.cols != rhs.rows {
            return Err(Error::InvalidArgument(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, rhs.rows, rhs.cols
            )));
        }
        let mut out = Self::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            let dst = i * out.stride;
            for (wi, &word) in self.row_words(i).iter().enumerate() {
                let mut w = word;
                while w != 0 {
                    let t = wi * 64 + w.trailing_zeros() as usize;
                    for (k, &r) in rhs.row_words(t).iter().enumerate() {
                        out.data[dst + k] ^= r;
                    }
                    w &= w - 1;
                }
            }
        }
        Ok(out)
    }

    /// `self * self^T`, computed from row inner products.
    pub fn gram(&self) -> BitMatrix {
        let mut out = Self::zeros(self.rows, self.rows);
        for i in 0..self.rows {
            for j in i..self.rows {
                if self.row_dot(i, self, j) {
                    out.set(i, j, true);
                    out.set(j, i, true);
                }
            }
        }
        out
    }

    /// Inner product of row `i` of `self` with row `j` of `other`.
    pub fn row_dot(&self, i: usize, other: &BitMatrix, j: usize) -> bool {
        let parity: u32 = self
            .row_words(i)
            .iter()
            .zip(other.row_words(j))
            .map(|(a, b)| (a & b).count_ones())
            .sum();
        parity & 1 == 1
    }

    pub fn add(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            return invalid("cannot add matrices of different shapes");
        }
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&rhs.data) {
            *a ^= b;
        }
        Ok(out)
    }

    /// GF(2) row rank. Works on a copy.
    pub fn rank(&self) -> usize {
        let mut m = self.clone();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == m.rows {
                break;
            }
            let Some(p) = (rank..m.rows).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(p, rank);
            for r in 0..m.rows {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                self.row_words(i).iter().enumerate().all(|(wi, &w)| {
                    let expect = if i / 64 == wi { 1u64 << (i % 64) } else { 0 };
                    w == expect
                })
            })
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&w| w == 0)
    }

    /// `[self | rhs]`.
    pub fn hconcat(&self, rhs: &BitMatrix) -> Result<BitMatrix> {
        if self.rows != rhs.rows {
            return invalid("hconcat needs equal row counts");
        }
        let mut out = Self::zeros(self.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                if self.get(i, j) {
                    out.set(i, j, true);
                }
            }
            for j in 0..rhs.cols {
                if rhs.get(i, j) {
                    out.set(i, self.cols + j, true);
                }
            }
        }
        Ok(out)
    }

    /// One line per row of `'0'`/`'1'` characters.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.rows * (self.cols + 1));
        for i in 0..self.rows {
            for j in 0..self.cols {
                s.push(if self.get(i, j) { '1' } else { '0' });
            }
            s.push('\n');
        }
        s
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (ln, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let mut row = Vec::with_capacity(line.len());
            for (col, ch) in line.chars().enumerate() {
                match ch {
                    '0' => row.push(false),
                    '1' => row.push(true),
                    _ => {
                        return Err(Error::Format(format!(
                            "unexpected {ch:?} at line {}, column {}",
                            ln + 1,
                            col + 1
                        )))
                    }
                }
            }
            rows.push(row);
        }
        Self::from_bool_rows(&rows)
    }
}

pub(crate) fn low_mask(bits: usize) -> u64 {
    if bits >= 64 { u64::MAX } else { (1u64 << bits) - 1 }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        f.write_str(&self.to_text())
    }
}
