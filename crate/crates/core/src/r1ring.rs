//! The ring `R1 = F2 + uF2` with `u^2 = 0`, matrices over it, the Gray map
//! and the projection onto `F2`.

use std::fmt;
use std::ops::{Add, Mul};
use std::str::FromStr;

use num_traits::{One, Zero};

use crate::bitmat::BitMatrix;
use crate::dense::DenseMatrix;
use crate::error::{invalid, Error, Result};
use crate::scalar::Gf2;

/// `a + b·u`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct R1 {
    pub a: bool,
    pub b: bool,
}

impl R1 {
    pub const ZERO: R1 = R1 { a: false, b: false };
    pub const ONE: R1 = R1 { a: true, b: false };
    pub const U: R1 = R1 { a: false, b: true };
    pub const ONE_PLUS_U: R1 = R1 { a: true, b: true };
    pub const ALL: [R1; 4] = [R1::ZERO, R1::ONE, R1::U, R1::ONE_PLUS_U];

    pub const fn new(a: bool, b: bool) -> Self {
        R1 { a, b }
    }

    /// Lee weight: 0, 1, 2, 1 for 0, 1, u, 1+u.
    pub fn lee_weight(self) -> usize {
        match (self.a, self.b) {
            (false, false) => 0,
            (false, true) => 2,
            _ => 1,
        }
    }

    /// `μ(a + bu) = a`.
    pub fn project(self) -> Gf2 {
        Gf2(self.a)
    }

    /// Canonical token: `0`, `1`, `u`, `u+1`.
    pub fn token(self) -> &'static str {
        match (self.a, self.b) {
            (false, false) => "0",
            (true, false) => "1",
            (false, true) => "u",
            (true, true) => "u+1",
        }
    }
}

impl From<Gf2> for R1 {
    fn from(x: Gf2) -> Self {
        R1 { a: x.0, b: false }
    }
}

impl Add for R1 {
    type Output = R1;
    fn add(self, rhs: R1) -> R1 {
        R1 { a: self.a ^ rhs.a, b: self.b ^ rhs.b }
    }
}

impl Mul for R1 {
    type Output = R1;
    fn mul(self, rhs: R1) -> R1 {
        R1 { a: self.a & rhs.a, b: (self.a & rhs.b) ^ (self.b & rhs.a) }
    }
}

impl Zero for R1 {
    fn zero() -> Self {
        R1::ZERO
    }
    fn is_zero(&self) -> bool {
        *self == R1::ZERO
    }
}

impl One for R1 {
    fn one() -> Self {
        R1::ONE
    }
}

impl fmt::Display for R1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.token())
    }
}

impl FromStr for R1 {
    type Err = ();
    /// Whitespace-insensitive; accepts `1+u` as well as `u+1`.
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        match t.as_str() {
            "0" => Ok(R1::ZERO),
            "1" => Ok(R1::ONE),
            "u" => Ok(R1::U),
            "u+1" | "1+u" => Ok(R1::ONE_PLUS_U),
            _ => Err(()),
        }
    }
}

pub fn lee_weight(v: &[R1]) -> usize {
    v.iter().map(|x| x.lee_weight()).sum()
}

pub fn lee_distance(v: &[R1], w: &[R1]) -> usize {
    v.iter().zip(w).map(|(&x, &y)| (x + y).lee_weight()).sum()
}

/// `φ(ā + b̄u) = (b̄, ā + b̄)`: the first `n` output bits are the `b` parts,
/// the last `n` the sums `a + b`.
pub fn gray_map(v: &[R1]) -> Vec<Gf2> {
    let n = v.len();
    let mut out = vec![Gf2::ZERO; 2 * n];
    for (i, x) in v.iter().enumerate() {
        out[i] = Gf2(x.b);
        out[n + i] = Gf2(x.a ^ x.b);
    }
    out
}

/// Componentwise `μ`.
pub fn project(v: &[R1]) -> Vec<Gf2> {
    v.iter().map(|x| x.project()).collect()
}

/// Parses a comma separated token list, optionally wrapped in parentheses,
/// e.g. `(u,0,u + 1,1)`.
pub fn parse_r1_vector(text: &str) -> Result<Vec<R1>> {
    parse_tokens(text, |t| t.parse::<R1>().ok())
}

pub fn parse_gf2_vector(text: &str) -> Result<Vec<Gf2>> {
    parse_tokens(text, |t| t.trim().parse::<Gf2>().ok())
}

fn parse_tokens<T>(text: &str, parse: impl Fn(&str) -> Option<T>) -> Result<Vec<T>> {
    let t = text.trim();
    let t = t.strip_prefix('(').unwrap_or(t);
    let t = t.strip_suffix(')').unwrap_or(t);
    if t.trim().is_empty() {
        return invalid("empty vector");
    }
    t.split(',')
        .enumerate()
        .map(|(i, tok)| {
            parse(tok).ok_or_else(|| Error::Parse { token: tok.trim().to_string(), position: i + 1 })
        })
        .collect()
}

/// `(t1,t2,...)` with canonical tokens.
pub fn format_r1_vector(v: &[R1]) -> String {
    let toks: Vec<&str> = v.iter().map(|x| x.token()).collect();
    format!("({})", toks.join(","))
}

/// A matrix over R1 stored as two GF(2) planes: entry `(i,j)` is
/// `a[i][j] + b[i][j]·u`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct R1Matrix {
    a: BitMatrix,
    b: BitMatrix,
}

impl R1Matrix {
    pub fn from_planes(a: BitMatrix, b: BitMatrix) -> Result<Self> {
        if a.rows() != b.rows() || a.cols() != b.cols() {
            return invalid("R1 planes must have equal dimensions");
        }
        Ok(R1Matrix { a, b })
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        R1Matrix { a: BitMatrix::zeros(rows, cols), b: BitMatrix::zeros(rows, cols) }
    }

    pub fn identity(n: usize) -> Self {
        R1Matrix { a: BitMatrix::identity(n), b: BitMatrix::zeros(n, n) }
    }

    pub fn from_dense(d: &DenseMatrix<R1>) -> Self {
        let mut m = Self::zeros(d.rows(), d.cols());
        for i in 0..d.rows() {
            for j in 0..d.cols() {
                m.set(i, j, *d.get(i, j));
            }
        }
        m
    }

    pub fn to_dense(&self) -> DenseMatrix<R1> {
        DenseMatrix::from_fn(self.rows(), self.cols(), |i, j| self.get(i, j))
    }

    /// Embeds a binary matrix (`b` plane zero).
    pub fn from_binary(a: &BitMatrix) -> Self {
        R1Matrix { a: a.clone(), b: BitMatrix::zeros(a.rows(), a.cols()) }
    }

    pub fn rows(&self) -> usize {
        self.a.rows()
    }

    pub fn cols(&self) -> usize {
        self.a.cols()
    }

    pub fn a_plane(&self) -> &BitMatrix {
        &self.a
    }

    pub fn b_plane(&self) -> &BitMatrix {
        &self.b
    }

    pub fn get(&self, i: usize, j: usize) -> R1 {
        R1 { a: self.a.get(i, j), b: self.b.get(i, j) }
    }

    pub fn set(&mut self, i: usize, j: usize, x: R1) {
        self.a.set(i, j, x.a);
        self.b.set(i, j, x.b);
    }

    pub fn row(&self, i: usize) -> Vec<R1> {
        (0..self.cols()).map(|j| self.get(i, j)).collect()
    }

    /// `μ` applied entrywise.
    pub fn project(&self) -> BitMatrix {
        self.a.clone()
    }

    /// Multiplies every entry by `u`.
    pub fn times_u(&self) -> R1Matrix {
        R1Matrix { a: BitMatrix::zeros(self.rows(), self.cols()), b: self.a.clone() }
    }

    pub fn transpose(&self) -> R1Matrix {
        R1Matrix { a: self.a.transpose(), b: self.b.transpose() }
    }

    /// Product over R1 on bit planes: `a = Aa·Ba`, `b = Aa·Bb + Ab·Ba`.
    pub fn mat_mul(&self, rhs: &R1Matrix) -> Result<R1Matrix> {
        let a = self.a.mat_mul(&rhs.a)?;
        let b = self.a.mat_mul(&rhs.b)?.add(&self.b.mat_mul(&rhs.a)?)?;
        Ok(R1Matrix { a, b })
    }

    /// `self * self^T` from row inner products.
    pub fn gram(&self) -> R1Matrix {
        let n = self.rows();
        let mut out = R1Matrix::zeros(n, n);
        for i in 0..n {
            for j in i..n {
                let x = R1 {
                    a: self.a.row_dot(i, &self.a, j),
                    b: self.a.row_dot(i, &self.b, j) ^ self.b.row_dot(i, &self.a, j),
                };
                out.set(i, j, x);
                out.set(j, i, x);
            }
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_identity() && self.b.is_zero()
    }

    /// `[I | self]`.
    pub fn prepend_identity(&self) -> R1Matrix {
        let n = self.rows();
        R1Matrix {
            a: BitMatrix::identity(n).hconcat(&self.a).expect("rows agree"),
            b: BitMatrix::zeros(n, n).hconcat(&self.b).expect("rows agree"),
        }
    }

    /// Binary generator of the Gray image of the R1-linear code spanned by the
    /// rows of `self`: for each row `g` it emits `φ(g)` and `φ(u·g)`.
    pub fn gray_image_generator(&self) -> BitMatrix {
        let (k, n) = (self.rows(), self.cols());
        let mut out = BitMatrix::zeros(2 * k, 2 * n);
        for i in 0..k {
            for j in 0..n {
                let x = self.get(i, j);
                // φ(x) = (b, a + b); u·x = a·u, so φ(u·x) = (a, a).
                out.set(2 * i, j, x.b);
                out.set(2 * i, n + j, x.a ^ x.b);
                out.set(2 * i + 1, j, x.a);
                out.set(2 * i + 1, n + j, x.a);
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r1_strategy() -> impl Strategy<Value = R1> {
        (any::<bool>(), any::<bool>()).prop_map(|(a, b)| R1 { a, b })
    }

    #[test]
    fn multiplication_table() {
        assert_eq!(R1::U * R1::U, R1::ZERO);
        assert_eq!(R1::ONE_PLUS_U * R1::ONE_PLUS_U, R1::ONE);
        for x in R1::ALL {
            assert_eq!(R1::ONE * x, x);
            assert_eq!(x + x, R1::ZERO);
        }
    }

    #[test]
    fn gray_and_lee_of_single_symbols() {
        let bits = |x: R1| gray_map(&[x]).iter().map(|g| g.0 as u8).collect::<Vec<_>>();
        assert_eq!(bits(R1::ZERO), [0, 0]);
        assert_eq!(bits(R1::ONE), [0, 1]);
        assert_eq!(bits(R1::U), [1, 1]);
        assert_eq!(bits(R1::ONE_PLUS_U), [1, 0]);
        let lee: Vec<usize> = R1::ALL.iter().map(|x| x.lee_weight()).collect();
        assert_eq!(lee, [0, 1, 2, 1]);
    }

    #[test]
    fn projection() {
        assert_eq!(R1::ONE_PLUS_U.project(), Gf2::ONE);
        assert_eq!(R1::U.project(), Gf2::ZERO);
    }

    #[test]
    fn tokens() {
        assert_eq!(parse_r1_vector("(u,0,u + 1,1, 1+u)").unwrap(), vec![R1::U, R1::ZERO, R1::ONE_PLUS_U, R1::ONE, R1::ONE_PLUS_U]);
        assert_eq!(
            parse_r1_vector("0,1,v"),
            Err(Error::Parse { token: "v".into(), position: 3 })
        );
        assert!(parse_r1_vector("()").is_err());
        let v = vec![R1::U, R1::ONE_PLUS_U, R1::ZERO];
        assert_eq!(format_r1_vector(&v), "(u,u+1,0)");
        assert_eq!(parse_r1_vector(&format_r1_vector(&v)).unwrap(), v);
        assert_eq!(parse_gf2_vector("1, 0,1").unwrap(), vec![Gf2::ONE, Gf2::ZERO, Gf2::ONE]);
    }

    #[test]
    fn u_times_u_matrices_vanish() {
        let m = R1Matrix::from_dense(&DenseMatrix::from_fn(3, 3, |i, j| R1::ALL[(i + 2 * j) % 4]));
        let um = m.times_u();
        assert!(um.mat_mul(&um).unwrap().a_plane().is_zero());
        assert!(um.mat_mul(&um).unwrap().b_plane().is_zero());
        assert_eq!(R1Matrix::identity(3).mat_mul(&m).unwrap(), m);
    }

    proptest! {
        #[test]
        fn plane_product_matches_schoolbook(a in proptest::collection::vec(r1_strategy(), 9),
                                            b in proptest::collection::vec(r1_strategy(), 9)) {
            let da = DenseMatrix::from_fn(3, 3, |i, j| a[3 * i + j]);
            let db = DenseMatrix::from_fn(3, 3, |i, j| b[3 * i + j]);
            // schoolbook oracle, written out rather than via DenseMatrix::mul
            let mut expect = DenseMatrix::filled(3, 3, R1::ZERO);
            for i in 0..3 {
                for j in 0..3 {
                    let mut acc = R1::ZERO;
                    for t in 0..3 {
                        acc = acc + a[3 * i + t] * b[3 * t + j];
                    }
                    expect.set(i, j, acc);
                }
            }
            let got = R1Matrix::from_dense(&da).mat_mul(&R1Matrix::from_dense(&db)).unwrap();
            prop_assert_eq!(got.to_dense(), expect);
            let g = R1Matrix::from_dense(&da).gram();
            prop_assert_eq!(g.to_dense(), da.mul(&da.transpose()).unwrap());
        }

        #[test]
        fn gray_map_is_isometry(v in proptest::collection::vec(r1_strategy(), 1..40), seed in any::<u64>()) {
            let w: Vec<R1> = v.iter().enumerate()
                .map(|(i, _)| R1::ALL[((seed >> (2 * (i % 32))) & 3) as usize]).collect();
            let gv = gray_map(&v);
            let gw = gray_map(&w);
            let ham = gv.iter().zip(&gw).filter(|(x, y)| x != y).count();
            prop_assert_eq!(lee_distance(&v, &w), ham);
            prop_assert_eq!(lee_weight(&v), gv.iter().filter(|x| x.0).count());
        }

        #[test]
        fn ring_axioms(x in r1_strategy(), y in r1_strategy(), z in r1_strategy()) {
            prop_assert_eq!(x * y, y * x);
            prop_assert_eq!((x * y) * z, x * (y * z));
            prop_assert_eq!(x * (y + z), x * y + x * z);
        }
    }
}
