//! Minimum distance, low-weight counts and weight-enumerator parameters of
//! binary self-dual codes.
//!
//! A self-dual code with generator `[I | A]` (after a column permutation)
//! also has generator `[A^T | I]`, because `A·A^T = I`. The left and right
//! halves are therefore both information sets, and every codeword of weight
//! at most `2w + 1` has weight at most `w` on one of them. Enumerating
//! information vectors of weight `<= w` on each side covers those codewords.

use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitmat::BitMatrix;
use crate::combinations::RevolvingDoor;
use crate::error::{invalid, Error, Result};

/// A binary code brought to `[I | A]` form by row reduction and a column
/// permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StandardForm {
    n: usize,
    k: usize,
    /// Original column of each information coordinate.
    info: Vec<usize>,
    /// Original column of each redundancy coordinate.
    rest: Vec<usize>,
    /// Rows of `A`, bit `j` = redundancy coordinate `j`.
    a_rows: Vec<u64>,
    /// Rows of `A^T` when `A·A^T = I`.
    at_rows: Option<Vec<u64>>,
}

impl StandardForm {
    /// Accepts only generators already in `[I_k | A]` form.
    pub fn from_systematic(gen: &BitMatrix) -> Result<Self> {
        let k = gen.rows();
        if gen.cols() < k {
            return invalid("generator has more rows than columns");
        }
        for i in 0..k {
            for j in 0..k {
                if gen.get(i, j) != (i == j) {
                    return invalid("generator is not in standard form [I | A]");
                }
            }
        }
        let info: Vec<usize> = (0..k).collect();
        let rest: Vec<usize> = (k..gen.cols()).collect();
        Self::assemble(gen, info, rest)
    }

    /// Row-reduces any full-rank generator, choosing pivot columns left to
    /// right.
    pub fn from_generator(gen: &BitMatrix) -> Result<Self> {
        let mut m = gen.clone();
        let (k, n) = (m.rows(), m.cols());
        let mut pivots = Vec::with_capacity(k);
        let mut rank = 0;
        for col in 0..n {
            if rank == k {
                break;
            }
            let Some(p) = (rank..k).find(|&r| m.get(r, col)) else {
                continue;
            };
            m.swap_rows(p, rank);
            for r in 0..k {
                if r != rank && m.get(r, col) {
                    m.xor_row_into(rank, r);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        if rank < k {
            return invalid(format!("generator has rank {rank} < {k} rows"));
        }
        let rest: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        Self::assemble(&m, pivots, rest)
    }

    fn assemble(reduced: &BitMatrix, info: Vec<usize>, rest: Vec<usize>) -> Result<Self> {
        let (k, n) = (info.len(), info.len() + rest.len());
        if k > 64 || rest.len() > 64 {
            return invalid("low-weight enumeration supports k <= 64 and n - k <= 64");
        }
        let a_rows: Vec<u64> = (0..k)
            .map(|i| {
                rest.iter()
                    .enumerate()
                    .fold(0u64, |w, (j, &c)| if reduced.get(i, c) { w | 1 << j } else { w })
            })
            .collect();
        let mut sf = StandardForm { n, k, info, rest, a_rows, at_rows: None };
        if sf.n == 2 * sf.k && sf.gram_is_identity() {
            sf.at_rows = Some(transpose_words(&sf.a_rows, sf.k));
        }
        Ok(sf)
    }

    fn gram_is_identity(&self) -> bool {
        let a = &self.a_rows;
        (0..self.k).all(|i| (i..self.k).all(|j| ((a[i] & a[j]).count_ones() & 1) == (i == j) as u32))
    }

    pub fn length(&self) -> usize {
        self.n
    }

    pub fn dimension(&self) -> usize {
        self.k
    }

    pub fn a_rows(&self) -> &[u64] {
        &self.a_rows
    }

    /// `true` when `n = 2k` and `A·A^T = I`.
    pub fn is_self_dual(&self) -> bool {
        self.at_rows.is_some()
    }

    fn require_self_dual(&self) -> Result<&[u64]> {
        self.at_rows
            .as_deref()
            .ok_or_else(|| Error::InvalidArgument("code is not self-dual ([I|A] with A·A^T = I)".into()))
    }

    /// Support of a codeword (given by its information and redundancy bits)
    /// in original coordinates, ascending.
    pub fn support(&self, info_bits: u64, rest_bits: u64) -> Vec<usize> {
        let mut s: Vec<usize> = bits_of(info_bits)
            .map(|i| self.info[i])
            .chain(bits_of(rest_bits).map(|j| self.rest[j]))
            .collect();
        s.sort_unstable();
        s
    }

    /// The codeword with information vector `info_bits` as a bit vector in
    /// original coordinates.
    pub fn encode(&self, info_bits: u64) -> Vec<bool> {
        let rest = xor_rows(&self.a_rows, info_bits);
        let mut v = vec![false; self.n];
        for c in self.support(info_bits, rest) {
            v[c] = true;
        }
        v
    }
}

fn transpose_words(rows: &[u64], width: usize) -> Vec<u64> {
    (0..width)
        .map(|j| rows.iter().enumerate().fold(0u64, |w, (i, &r)| w | (((r >> j) & 1) << i)))
        .collect()
}

fn bits_of(mut w: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if w == 0 {
            None
        } else {
            let b = w.trailing_zeros() as usize;
            w &= w - 1;
            Some(b)
        }
    })
}

fn xor_rows(rows: &[u64], mask: u64) -> u64 {
    bits_of(mask).fold(0, |acc, i| acc ^ rows[i])
}

/// Which information set a low-weight codeword was found on.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum InfoSide {
    /// `[I | A]`: information on the pivot coordinates.
    Left,
    /// `[A^T | I]`: information on the redundancy coordinates.
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LowWeightWord {
    pub side: InfoSide,
    /// Bits on the pivot coordinates.
    pub left: u64,
    /// Bits on the redundancy coordinates.
    pub right: u64,
    pub weight: usize,
    /// Both halves have weight `<= w`, so the word is produced by both passes.
    pub duplicate: bool,
}

/// Stream of every nonzero codeword whose left half has weight `<= half_cap`,
/// followed by every one whose right half has weight `<= half_cap`.
pub struct LowWeightCodewords<'a> {
    left_rows: &'a [u64],
    right_rows: &'a [u64],
    cap: usize,
    side: InfoSide,
    t: usize,
    door: RevolvingDoor,
    prev: u64,
    acc: u64,
}

pub fn low_weight_codewords(sf: &StandardForm, half_cap: usize) -> Result<LowWeightCodewords<'_>> {
    let right_rows = sf.require_self_dual()?;
    if half_cap > sf.k {
        return invalid(format!("half-weight cap {half_cap} exceeds dimension {}", sf.k));
    }
    Ok(LowWeightCodewords {
        left_rows: &sf.a_rows,
        right_rows,
        cap: half_cap,
        side: InfoSide::Left,
        t: 1,
        door: RevolvingDoor::new(sf.k, 1.min(sf.k)),
        prev: 0,
        acc: 0,
    })
}

impl Iterator for LowWeightCodewords<'_> {
    type Item = LowWeightWord;

    fn next(&mut self) -> Option<LowWeightWord> {
        loop {
            if self.t > self.cap {
                match self.side {
                    InfoSide::Left => {
                        self.side = InfoSide::Right;
                        self.t = 1;
                        self.door = RevolvingDoor::new(self.right_rows.len(), 1.min(self.right_rows.len()));
                        self.prev = 0;
                        self.acc = 0;
                        continue;
                    }
                    InfoSide::Right => return None,
                }
            }
            let rows = match self.side {
                InfoSide::Left => self.left_rows,
                InfoSide::Right => self.right_rows,
            };
            let Some(mask) = self.door.next() else {
                self.t += 1;
                if self.t <= self.cap {
                    self.door = RevolvingDoor::new(rows.len(), self.t);
                }
                self.prev = 0;
                self.acc = 0;
                continue;
            };
            for b in bits_of(mask ^ self.prev) {
                self.acc ^= rows[b];
            }
            self.prev = mask;
            let other = self.acc.count_ones() as usize;
            let (left, right) = match self.side {
                InfoSide::Left => (mask, self.acc),
                InfoSide::Right => (self.acc, mask),
            };
            return Some(LowWeightWord {
                side: self.side,
                left,
                right,
                weight: self.t + other,
                duplicate: other <= self.cap,
            });
        }
    }
}

const BINS: usize = 65;

/// Joint histogram of (information weight, other-half weight) over both
/// information sets, for information weights up to `half_cap`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightProfile {
    half_cap: usize,
    left: Vec<u64>,
    right: Vec<u64>,
}

fn histogram(rows: &[u64], cap: usize) -> Vec<u64> {
    fn walk(rows: &[u64], start: usize, depth: usize, cap: usize, acc: u64, hist: &mut [u64]) {
        let next = depth + 1;
        let base = next * BINS;
        if next == cap {
            for &r in &rows[start..] {
                hist[base + (acc ^ r).count_ones() as usize] += 1;
            }
            return;
        }
        for i in start..rows.len() {
            let a = acc ^ rows[i];
            hist[base + a.count_ones() as usize] += 1;
            walk(rows, i + 1, next, cap, a, hist);
        }
    }
    let size = (cap + 1) * BINS;
    // one shard per smallest chosen position
    let mut hist = (0..rows.len())
        .into_par_iter()
        .map(|first| {
            let mut h = vec![0u64; size];
            if cap >= 1 {
                h[BINS + rows[first].count_ones() as usize] += 1;
                if cap >= 2 {
                    walk(rows, first + 1, 1, cap, rows[first], &mut h);
                }
            }
            h
        })
        .reduce(
            || vec![0u64; size],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );
    hist[0] = 1;
    hist
}

impl WeightProfile {
    pub fn compute(sf: &StandardForm, half_cap: usize) -> Result<Self> {
        let right_rows = sf.require_self_dual()?;
        let cap = half_cap.min(sf.k);
        Ok(WeightProfile { half_cap: cap, left: histogram(&sf.a_rows, cap), right: histogram(right_rows, cap) })
    }

    pub fn half_cap(&self) -> usize {
        self.half_cap
    }

    /// Largest total weight whose count is exact.
    pub fn coverage(&self) -> usize {
        2 * self.half_cap + 1
    }

    fn at(h: &[u64], info_w: usize, other_w: usize) -> u64 {
        if other_w >= BINS {
            0
        } else {
            h[info_w * BINS + other_w]
        }
    }

    /// Number of codewords of the given weight (including the zero word for
    /// weight 0), or `None` past the coverage.
    pub fn count(&self, weight: usize) -> Option<u64> {
        if weight > self.coverage() {
            return None;
        }
        let cap = self.half_cap;
        // words with both halves light are taken from the right pass only
        let mut total = 0u64;
        for wl in 0..=cap.min(weight) {
            let wr = weight - wl;
            if wr > cap {
                total += Self::at(&self.left, wl, wr);
            }
        }
        for wr in 0..=cap.min(weight) {
            total += Self::at(&self.right, wr, weight - wr);
        }
        Some(total)
    }

    /// Smallest nonzero weight within the coverage.
    pub fn min_weight(&self) -> Option<usize> {
        (1..=self.coverage()).find(|&w| self.count(w).unwrap_or(0) > 0)
    }
}

/// Exact minimum distance of a self-dual code, widening the half cap until
/// the lightest word found is inside the coverage.
pub fn minimum_distance(sf: &StandardForm) -> Result<usize> {
    sf.require_self_dual()?;
    for cap in 1..=sf.k {
        let p = WeightProfile::compute(sf, cap)?;
        if let Some(d) = p.min_weight() {
            return Ok(d);
        }
    }
    invalid("code has no nonzero codewords")
}

/// Result of checking a claimed minimum distance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistanceCertificate {
    pub claimed: usize,
    /// Exact minimum distance.
    pub d: usize,
    /// Support (original coordinates) of a codeword of weight `d`.
    pub witness: Vec<usize>,
}

impl DistanceCertificate {
    pub fn confirms_claim(&self) -> bool {
        self.d == self.claimed
    }
}

/// Confirms there is no nonzero codeword lighter than `claimed_d` and finds a
/// witness of the exact minimum weight. A lighter word, or none at
/// `claimed_d`, yields the true distance instead.
pub fn certify_min_distance(sf: &StandardForm, claimed_d: usize) -> Result<DistanceCertificate> {
    sf.require_self_dual()?;
    if claimed_d == 0 {
        return invalid("claimed distance must be positive");
    }
    let cap = (claimed_d / 2).clamp(1, sf.k);
    let profile = WeightProfile::compute(sf, cap)?;
    let d = match profile.min_weight() {
        Some(d) if d <= claimed_d => d,
        _ => minimum_distance(sf)?,
    };
    let witness_cap = (d / 2).clamp(1, sf.k);
    let word = low_weight_codewords(sf, witness_cap)?
        .find(|w| w.weight == d)
        .ok_or_else(|| Error::Inconsistent(format!("no witness of weight {d} in the enumeration")))?;
    Ok(DistanceCertificate { claimed: claimed_d, d, witness: sf.support(word.left, word.right) })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CodeType {
    #[serde(rename = "I")]
    TypeI,
    #[serde(rename = "II")]
    TypeII,
}

impl fmt::Display for CodeType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CodeType::TypeI => "Type I",
            CodeType::TypeII => "Type II",
        })
    }
}

/// Type II iff every generator row has weight divisible by 4. For a
/// self-dual code rows pairwise meet evenly, so this extends to all words.
pub fn classify_type(gen: &BitMatrix) -> CodeType {
    if (0..gen.rows()).all(|i| gen.row_weight(i) % 4 == 0) {
        CodeType::TypeII
    } else {
        CodeType::TypeI
    }
}

/// Upper bound on the minimum distance of a self-dual code of length `n`.
pub fn extremal_bound(n: usize, ty: CodeType) -> usize {
    let base = 4 * (n / 24);
    match ty {
        CodeType::TypeI if n % 24 == 22 => base + 6,
        _ => base + 4,
    }
}

/// The two possible weight enumerators of a Type I `[72,36,12]` code.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "W72,1")]
    W72_1,
    #[serde(rename = "W72,2")]
    W72_2,
}

impl Family {
    /// `(A14 at γ = 0, A16 at β = γ = 0)`.
    fn constants(self) -> (i64, i64) {
        match self {
            Family::W72_1 => (8640, 124_281),
            Family::W72_2 => (7616, 134_521),
        }
    }

    /// `(A12, A14, A16)` for given parameters.
    pub fn low_coefficients(self, gamma: i64, beta: i64) -> (i64, i64, i64) {
        let (c14, c16) = self.constants();
        (2 * beta, c14 - 64 * gamma, c16 - 24 * beta + 384 * gamma)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Family::W72_1 => "W72,1",
            Family::W72_2 => "W72,2",
        })
    }
}

/// Recovers `(family, γ, β)` from `A12, A14, A16`. Exactly one family must
/// reproduce all three counts with integer `γ >= 0`.
pub fn extract_family_gamma_beta(a12: u64, a14: u64, a16: u64) -> Result<(Family, i64, i64)> {
    if a12 % 2 != 0 {
        return Err(Error::Inconsistent(format!("A12 = {a12} is odd")));
    }
    let beta = (a12 / 2) as i64;
    let (a14, a16) = (a14 as i64, a16 as i64);
    let matches: Vec<(Family, i64)> = [Family::W72_1, Family::W72_2]
        .into_iter()
        .filter_map(|fam| {
            let (c14, _) = fam.constants();
            let diff = c14 - a14;
            if diff < 0 || diff % 64 != 0 {
                return None;
            }
            let gamma = diff / 64;
            (fam.low_coefficients(gamma, beta).2 == a16).then_some((fam, gamma))
        })
        .collect();
    match matches.as_slice() {
        [(fam, gamma)] => Ok((*fam, *gamma, beta)),
        [] => Err(Error::Inconsistent(format!("no enumerator family fits A12={a12}, A14={a14}, A16={a16}"))),
        _ => Err(Error::Inconsistent(format!("both families fit A12={a12}, A14={a14}, A16={a16}"))),
    }
}

/// Derived parameters of a binary self-dual code.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CodeParams {
    pub n: usize,
    pub k: usize,
    pub d: usize,
    #[serde(rename = "type")]
    pub code_type: CodeType,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub family: Option<Family>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub gamma: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub beta: Option<i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a12: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a14: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub a16: Option<u64>,
}

/// Counts of weights 12, 14 and 16 (exact: half cap 8 covers weight 17).
pub fn weight_counts(sf: &StandardForm) -> Result<(u64, u64, u64)> {
    let p = WeightProfile::compute(sf, 8)?;
    Ok((p.count(12).unwrap(), p.count(14).unwrap(), p.count(16).unwrap()))
}

/// Full analysis of a binary self-dual code given by any generator matrix.
/// For `[72,36]` codes with `d = 12` the enumerator parameters are added.
pub fn analyze(gen: &BitMatrix) -> Result<CodeParams> {
    let sf = StandardForm::from_generator(gen)?;
    if !sf.is_self_dual() {
        return invalid("code is not self-dual");
    }
    let d = minimum_distance(&sf)?;
    let mut params = CodeParams {
        n: sf.n,
        k: sf.k,
        d,
        code_type: classify_type(gen),
        family: None,
        gamma: None,
        beta: None,
        a12: None,
        a14: None,
        a16: None,
    };
    if sf.n == 72 && d == 12 && params.code_type == CodeType::TypeI {
        let (a12, a14, a16) = weight_counts(&sf)?;
        let (fam, gamma, beta) = extract_family_gamma_beta(a12, a14, a16)?;
        params.family = Some(fam);
        params.gamma = Some(gamma);
        params.beta = Some(beta);
        params.a12 = Some(a12);
        params.a14 = Some(a14);
        params.a16 = Some(a16);
    }
    Ok(params)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn hamming8() -> BitMatrix {
        BitMatrix::from_text("10000111\n01001011\n00101101\n00011110").unwrap()
    }

    #[test]
    fn trivial_length_four() {
        let g = BitMatrix::from_text("1010\n0101").unwrap();
        let sf = StandardForm::from_systematic(&g).unwrap();
        assert!(sf.is_self_dual());
        let words: Vec<_> = low_weight_codewords(&sf, 1).unwrap().collect();
        assert!(words.iter().all(|w| w.weight == 2 && w.duplicate));
        assert_eq!(words.len(), 4);
        assert_eq!(minimum_distance(&sf).unwrap(), 2);
        assert_eq!(classify_type(&g), CodeType::TypeI);
    }

    #[test]
    fn extended_hamming() {
        let g = hamming8();
        assert_eq!(classify_type(&g), CodeType::TypeII);
        let sf = StandardForm::from_systematic(&g).unwrap();
        let cert = certify_min_distance(&sf, 4).unwrap();
        assert!(cert.confirms_claim());
        assert_eq!(cert.witness.len(), 4);
        let p = WeightProfile::compute(&sf, 4).unwrap();
        assert_eq!(p.count(4), Some(14));
        assert_eq!(p.count(8), Some(1));
        // claiming too little or too much still reports the truth
        assert_eq!(certify_min_distance(&sf, 2).unwrap().d, 4);
        assert_eq!(certify_min_distance(&sf, 6).unwrap().d, 4);
    }

    #[test]
    fn non_standard_inputs() {
        let g = BitMatrix::from_text("0110\n1001").unwrap();
        assert!(StandardForm::from_systematic(&g).is_err());
        let sf = StandardForm::from_generator(&g).unwrap();
        assert_eq!(sf.info, vec![0, 1]);
        assert!(StandardForm::from_generator(&BitMatrix::from_text("11\n11").unwrap()).is_err());
        let not_sd = StandardForm::from_systematic(&BitMatrix::from_text("1011\n0101").unwrap()).unwrap();
        assert!(!not_sd.is_self_dual());
        assert!(low_weight_codewords(&not_sd, 1).is_err());
    }

    #[test]
    fn bounds() {
        assert_eq!(extremal_bound(72, CodeType::TypeII), 16);
        assert_eq!(extremal_bound(36, CodeType::TypeI), 8);
        assert_eq!(extremal_bound(22, CodeType::TypeI), 6);
        assert_eq!(extremal_bound(72, CodeType::TypeI), 16);
    }

    #[test]
    fn family_extraction() {
        assert_eq!(extract_family_gamma_beta(384, 8640, 124_281 - 24 * 192).unwrap(), (Family::W72_1, 0, 192));
        assert_eq!(extract_family_gamma_beta(942, 8640, 124_281 - 24 * 471).unwrap(), (Family::W72_1, 0, 471));
        assert_eq!(extract_family_gamma_beta(0, 8640, 124_281).unwrap(), (Family::W72_1, 0, 0));
        let (a12, a14, a16) = Family::W72_2.low_coefficients(3, 100);
        assert_eq!(
            extract_family_gamma_beta(a12 as u64, a14 as u64, a16 as u64).unwrap(),
            (Family::W72_2, 3, 100)
        );
        assert!(extract_family_gamma_beta(384, 8641, 0).is_err());
        assert!(extract_family_gamma_beta(383, 8640, 124_281).is_err());
        assert!(extract_family_gamma_beta(384, 8640, 124_282).is_err());
    }

    #[test]
    fn stream_orders_and_flags() {
        let sf = StandardForm::from_systematic(&hamming8()).unwrap();
        let words: Vec<_> = low_weight_codewords(&sf, 2).unwrap().collect();
        // 4 + 6 info vectors per side
        assert_eq!(words.len(), 20);
        assert!(words[..10].iter().all(|w| w.side == InfoSide::Left));
        for w in &words {
            assert_eq!(w.weight, (w.left.count_ones() + w.right.count_ones()) as usize);
        }
    }
}
