//! The three order-18 composite matrices in explicit block-circulant form,
//! generator assembly and the block self-duality conditions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::bitmat::BitMatrix;
use crate::dense::DenseMatrix;
use crate::error::{invalid, Error, Result};
use crate::groupring::{omega, presets, CompositeSpec};
use crate::r1ring::{R1Matrix, R1};
use crate::scalar::{Gf2, Ring};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ConstructionId {
    Omega1,
    Omega2,
    Omega3,
}

impl ConstructionId {
    pub const ALL: [ConstructionId; 3] = [ConstructionId::Omega1, ConstructionId::Omega2, ConstructionId::Omega3];

    pub fn name(self) -> &'static str {
        match self {
            ConstructionId::Omega1 => "omega1",
            ConstructionId::Omega2 => "omega2",
            ConstructionId::Omega3 => "omega3",
        }
    }

    /// Lengths of the first-row vectors `r_B, r_C[, r_D]`.
    pub fn row_lengths(self) -> &'static [usize] {
        match self {
            ConstructionId::Omega1 => &[9, 9],
            _ => &[6, 6, 6],
        }
    }

    pub fn composite_spec(self) -> CompositeSpec {
        match self {
            ConstructionId::Omega1 => presets::omega1(),
            ConstructionId::Omega2 => presets::omega2(),
            ConstructionId::Omega3 => presets::omega3(),
        }
    }

    /// Explicit `Ω(v)` for this construction.
    pub fn explicit<T: Clone>(self, alphas: &[T]) -> Result<DenseMatrix<T>> {
        match self {
            ConstructionId::Omega1 => omega1_explicit(alphas),
            ConstructionId::Omega2 => omega2_explicit(alphas),
            ConstructionId::Omega3 => omega3_explicit(alphas),
        }
    }

    /// `Ω(v)` through the generic composite engine.
    pub fn generic<T: Clone>(self, alphas: &[T]) -> Result<DenseMatrix<T>> {
        omega(alphas, &self.composite_spec())
    }
}

impl fmt::Display for ConstructionId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ConstructionId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "omega1" | "1" => Ok(ConstructionId::Omega1),
            "omega2" | "2" => Ok(ConstructionId::Omega2),
            "omega3" | "3" => Ok(ConstructionId::Omega3),
            other => invalid(format!("unknown construction {other:?}")),
        }
    }
}

/// First rows `r_B, r_C[, r_D]` of a construction; together they are the 18
/// coefficients `α_1..α_18`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FirstRows<T> {
    id: ConstructionId,
    rows: Vec<Vec<T>>,
}

impl<T: Clone> FirstRows<T> {
    pub fn new(id: ConstructionId, rows: Vec<Vec<T>>) -> Result<Self> {
        let want = id.row_lengths();
        if rows.len() != want.len() {
            return invalid(format!("{id} takes {} first rows, got {}", want.len(), rows.len()));
        }
        for (i, (r, &len)) in rows.iter().zip(want).enumerate() {
            if r.len() != len {
                return invalid(format!(
                    "{id}: {} needs {len} entries, got {}",
                    ["rB", "rC", "rD"][i],
                    r.len()
                ));
            }
        }
        Ok(FirstRows { id, rows })
    }

    pub fn from_alphas(id: ConstructionId, alphas: &[T]) -> Result<Self> {
        if alphas.len() != 18 {
            return invalid(format!("expected 18 coefficients, got {}", alphas.len()));
        }
        let mut rows = Vec::new();
        let mut at = 0;
        for &len in id.row_lengths() {
            rows.push(alphas[at..at + len].to_vec());
            at += len;
        }
        Self::new(id, rows)
    }

    pub fn id(&self) -> ConstructionId {
        self.id
    }

    pub fn rows(&self) -> &[Vec<T>] {
        &self.rows
    }

    pub fn alphas(&self) -> Vec<T> {
        self.rows.concat()
    }

    pub fn omega(&self) -> DenseMatrix<T> {
        self.id.explicit(&self.alphas()).expect("lengths validated")
    }

    pub fn map<U: Clone>(&self, f: impl Fn(&T) -> U) -> FirstRows<U> {
        FirstRows { id: self.id, rows: self.rows.iter().map(|r| r.iter().map(&f).collect()).collect() }
    }
}

fn check_len<T>(alphas: &[T]) -> Result<()> {
    if alphas.len() != 18 {
        return invalid(format!("expected 18 coefficients, got {}", alphas.len()));
    }
    Ok(())
}

/// `circ(α_i, α_j, α_k)` with 1-based indices.
fn circ3<T: Clone>(alphas: &[T], idx: [usize; 3]) -> DenseMatrix<T> {
    let row: Vec<T> = idx.iter().map(|&i| alphas[i - 1].clone()).collect();
    DenseMatrix::circulant(&row).expect("non-empty")
}

/// `Ω(v_1)` over `D18`: a 6x6 grid of 3x3 circulants.
pub fn omega1_explicit<T: Clone>(alphas: &[T]) -> Result<DenseMatrix<T>> {
    check_len(alphas)?;
    let c = |idx| circ3(alphas, idx);
    let (b1, b2, b3) = (c([1, 2, 3]), c([4, 5, 6]), c([7, 8, 9]));
    let (b2p, b3p) = (c([6, 4, 5]), c([9, 7, 8]));
    let (c1, c2, c3) = (c([10, 11, 12]), c([13, 14, 15]), c([16, 17, 18]));
    let (c2p, c3p) = (c([15, 13, 14]), c([18, 16, 17]));
    let (d1, d2, d3) = (c([10, 18, 17]), c([16, 15, 14]), c([13, 12, 11]));
    let (d2p, d3p) = (c([14, 16, 15]), c([11, 13, 12]));
    // E's first row is (α1, α9, α8, ..., α2), the y-coset products y·x^i y.
    let (e1, e2, e3) = (c([1, 9, 8]), c([7, 6, 5]), c([4, 3, 2]));
    let (e2p, e3p) = (c([5, 7, 6]), c([2, 4, 3]));
    DenseMatrix::from_blocks(&[
        vec![&b1, &b2, &b3, &c1, &c2, &c3],
        vec![&b3p, &b1, &b2, &c3p, &c1, &c2],
        vec![&b2p, &b3p, &b1, &c2p, &c3p, &c1],
        vec![&d1, &d2, &d3, &e1, &e2, &e3],
        vec![&d3p, &d1, &d2, &e3p, &e1, &e2],
        vec![&d2p, &d3p, &d1, &e2p, &e3p, &e1],
    ])
}

/// `Ω(v_2)` over `C3 x C6` with inner group `D6`: block circulant in
/// `B, C, D`, each `[[X1, X2], [X2^T, X1^T]]`.
pub fn omega2_explicit<T: Clone>(alphas: &[T]) -> Result<DenseMatrix<T>> {
    check_len(alphas)?;
    let c = |idx| circ3(alphas, idx);
    let (b1, b2) = (c([1, 2, 3]), c([4, 5, 6]));
    let (c1, c2) = (c([7, 8, 9]), c([10, 11, 12]));
    let (d1, d2) = (c([13, 14, 15]), c([16, 17, 18]));
    let (b1t, b2t, c1t, c2t, d1t, d2t) =
        (b1.transpose(), b2.transpose(), c1.transpose(), c2.transpose(), d1.transpose(), d2.transpose());
    DenseMatrix::from_blocks(&[
        vec![&b1, &b2, &c1, &c2, &d1, &d2],
        vec![&b2t, &b1t, &c2t, &c1t, &d2t, &d1t],
        vec![&d1, &d2, &b1, &b2, &c1, &c2],
        vec![&d2t, &d1t, &b2t, &b1t, &c2t, &c1t],
        vec![&c1, &c2, &d1, &d2, &b1, &b2],
        vec![&c2t, &c1t, &d2t, &d1t, &b2t, &b1t],
    ])
}

/// `Ω(v_3)` over `C3 x C6` with inner group `C6`: block circulant in
/// `B, C, D`, each `[[X1, X2], [X2', X1]]`.
pub fn omega3_explicit<T: Clone>(alphas: &[T]) -> Result<DenseMatrix<T>> {
    check_len(alphas)?;
    let c = |idx| circ3(alphas, idx);
    let (b1, b2, b2p) = (c([1, 2, 3]), c([4, 5, 6]), c([6, 4, 5]));
    let (c1, c2, c2p) = (c([7, 8, 9]), c([10, 11, 12]), c([12, 10, 11]));
    let (d1, d2, d2p) = (c([13, 14, 15]), c([16, 17, 18]), c([18, 16, 17]));
    DenseMatrix::from_blocks(&[
        vec![&b1, &b2, &c1, &c2, &d1, &d2],
        vec![&b2p, &b1, &c2p, &c1, &d2p, &d1],
        vec![&d1, &d2, &b1, &b2, &c1, &c2],
        vec![&d2p, &d1, &b2p, &b1, &c2p, &c1],
        vec![&c1, &c2, &d1, &d2, &b1, &b2],
        vec![&c2p, &c1, &d2p, &d1, &b2p, &b1],
    ])
}

/// `[I_18 | Ω]`.
pub fn gen_matrix<T: Ring>(omega: &DenseMatrix<T>) -> Result<DenseMatrix<T>> {
    if omega.rows() != omega.cols() {
        return invalid("Ω must be square");
    }
    Ok(omega.prepend_identity())
}

/// Outcome of the block equations for one construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionReport {
    pub construction: ConstructionId,
    /// `(equation, holds)` in the order the conditions are stated.
    pub equations: Vec<(&'static str, bool)>,
}

impl ConditionReport {
    pub fn holds(&self) -> bool {
        self.equations.iter().all(|&(_, ok)| ok)
    }

    pub fn failures(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.equations.iter().filter(|(_, ok)| !ok).map(|&(e, _)| e)
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (eq, ok) in &self.equations {
            writeln!(f, "{} {eq}", if *ok { "holds" } else { "fails" })?;
        }
        Ok(())
    }
}

/// Evaluates the block self-duality equations over the entry ring.
///
/// For `omega1` the quadrants `B, C, D, E` (9x9) must satisfy
/// `BB^T+CC^T=I_9`, `BD^T+CE^T=0`, `DB^T+EC^T=0`, `DD^T+EE^T=I_9`; for
/// `omega2`/`omega3` the 6x6 blocks `B, C, D` of the first block row must
/// satisfy `BB^T+CC^T+DD^T=I_6`, `BD^T+CB^T+DC^T=0`, `BC^T+CD^T+DB^T=0`.
pub fn check_selfdual_blocks<T: Ring>(fr: &FirstRows<T>) -> ConditionReport {
    let m = fr.omega();
    let mt = |x: &DenseMatrix<T>, y: &DenseMatrix<T>| x.mul_transpose(y).expect("square blocks");
    let sum = |terms: &[DenseMatrix<T>]| {
        terms[1..].iter().fold(terms[0].clone(), |acc, t| acc.add(t).expect("same shape"))
    };
    let equations = match fr.id() {
        ConstructionId::Omega1 => {
            let b = m.submatrix(0, 0, 9, 9);
            let c = m.submatrix(0, 9, 9, 9);
            let d = m.submatrix(9, 0, 9, 9);
            let e = m.submatrix(9, 9, 9, 9);
            vec![
                ("BB^T+CC^T=I_9", sum(&[mt(&b, &b), mt(&c, &c)]).is_identity()),
                ("BD^T+CE^T=0", sum(&[mt(&b, &d), mt(&c, &e)]).is_zero()),
                ("DB^T+EC^T=0", sum(&[mt(&d, &b), mt(&e, &c)]).is_zero()),
                ("DD^T+EE^T=I_9", sum(&[mt(&d, &d), mt(&e, &e)]).is_identity()),
            ]
        }
        ConstructionId::Omega2 | ConstructionId::Omega3 => {
            let b = m.submatrix(0, 0, 6, 6);
            let c = m.submatrix(0, 6, 6, 6);
            let d = m.submatrix(0, 12, 6, 6);
            vec![
                ("BB^T+CC^T+DD^T=I_6", sum(&[mt(&b, &b), mt(&c, &c), mt(&d, &d)]).is_identity()),
                ("BD^T+CB^T+DC^T=0", sum(&[mt(&b, &d), mt(&c, &b), mt(&d, &c)]).is_zero()),
                ("BC^T+CD^T+DB^T=0", sum(&[mt(&b, &c), mt(&c, &d), mt(&d, &b)]).is_zero()),
            ]
        }
    };
    ConditionReport { construction: fr.id(), equations }
}

/// Fast bit-level builder: precomputed placement masks per coefficient, so
/// `Ω` for a binary or R1 coefficient vector is a handful of word XORs.
#[derive(Clone, Debug)]
pub struct OmegaLayout {
    id: ConstructionId,
    /// `masks[c][i]`: columns of row `i` holding coefficient `c`.
    masks: Vec<[u64; 18]>,
}

impl OmegaLayout {
    pub fn new(id: ConstructionId) -> Self {
        let symbolic: Vec<usize> = (0..18).collect();
        let m = id.explicit(&symbolic).expect("18 symbols");
        let mut masks = vec![[0u64; 18]; 18];
        for i in 0..18 {
            for (j, &c) in m.row(i).iter().enumerate() {
                masks[c][i] |= 1 << j;
            }
        }
        OmegaLayout { id, masks }
    }

    pub fn id(&self) -> ConstructionId {
        self.id
    }

    /// Rows of `Ω` for a coefficient bitmask (bit `c` is `α_{c+1}`).
    pub fn rows(&self, coeffs: u32) -> [u64; 18] {
        let mut rows = [0u64; 18];
        let mut c = coeffs & 0x3_FFFF;
        while c != 0 {
            let t = c.trailing_zeros() as usize;
            for (r, m) in rows.iter_mut().zip(&self.masks[t]) {
                *r ^= m;
            }
            c &= c - 1;
        }
        rows
    }

    pub fn binary(&self, coeffs: u32) -> BitMatrix {
        BitMatrix::from_u64_rows(&self.rows(coeffs), 18).expect("18 columns")
    }

    /// `Ω` over R1 from the `a` and `b` coefficient bitmasks.
    pub fn r1(&self, a: u32, b: u32) -> R1Matrix {
        R1Matrix::from_planes(self.binary(a), self.binary(b)).expect("same shape")
    }
}

/// `Ω·Ω^T = I` over GF(2) from row words.
pub fn rows_self_dual(rows: &[u64; 18]) -> bool {
    for i in 0..18 {
        for j in i..18 {
            let p = (rows[i] & rows[j]).count_ones() & 1;
            if p != (i == j) as u32 {
                return false;
            }
        }
    }
    true
}

/// `Ω·Ω^T = I` over R1 from plane row words.
pub fn planes_self_dual(a: &[u64; 18], b: &[u64; 18]) -> bool {
    if !rows_self_dual(a) {
        return false;
    }
    for i in 0..18 {
        for j in i..18 {
            let p = (a[i] & b[j]).count_ones() ^ (b[i] & a[j]).count_ones();
            if p & 1 != 0 {
                return false;
            }
        }
    }
    true
}

/// Packs binary coefficients into a bitmask (bit `c` is `α_{c+1}`).
pub fn pack_gf2(alphas: &[Gf2]) -> u32 {
    alphas.iter().enumerate().fold(0, |m, (i, x)| m | ((x.0 as u32) << i))
}

/// Packs R1 coefficients into `(a-mask, b-mask)`.
pub fn pack_r1(alphas: &[R1]) -> (u32, u32) {
    alphas.iter().enumerate().fold((0, 0), |(ma, mb), (i, x)| {
        (ma | ((x.a as u32) << i), mb | ((x.b as u32) << i))
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bits(v: &[u8]) -> Vec<Gf2> {
        v.iter().map(|&b| Gf2(b == 1)).collect()
    }

    #[test]
    fn unit_alpha_gives_identity() {
        let mut e = vec![Gf2::ZERO; 18];
        e[0] = Gf2::ONE;
        for id in ConstructionId::ALL {
            assert!(id.explicit(&e).unwrap().is_identity(), "{id}");
        }
    }

    #[test]
    fn first_row_is_alphas() {
        let alphas: Vec<usize> = (1..=18).collect();
        for id in ConstructionId::ALL {
            assert_eq!(id.explicit(&alphas).unwrap().row(0), alphas.as_slice());
        }
    }

    #[test]
    fn wrong_lengths() {
        assert!(omega1_explicit(&[0u8; 17]).is_err());
        assert!(FirstRows::new(ConstructionId::Omega1, vec![vec![Gf2::ZERO; 8], vec![Gf2::ZERO; 9]]).is_err());
        assert!(FirstRows::new(ConstructionId::Omega2, vec![vec![Gf2::ZERO; 6], vec![Gf2::ZERO; 6]]).is_err());
    }

    #[test]
    fn zero_rows_fail() {
        let fr = FirstRows::from_alphas(ConstructionId::Omega1, &[Gf2::ZERO; 18]).unwrap();
        let rep = check_selfdual_blocks(&fr);
        assert!(!rep.holds());
        assert!(rep.failures().any(|e| e == "BB^T+CC^T=I_9"));
    }

    #[test]
    fn omega2_omega3_block_circulant() {
        let alphas: Vec<usize> = (0..18).collect();
        for id in [ConstructionId::Omega2, ConstructionId::Omega3] {
            let m = id.explicit(&alphas).unwrap();
            for br in 0..3 {
                for bc in 0..3 {
                    let blk = m.submatrix(6 * br, 6 * bc, 6, 6);
                    let src = m.submatrix(0, 6 * ((bc + 3 - br) % 3), 6, 6);
                    assert_eq!(blk, src);
                }
            }
        }
    }

    #[test]
    fn layout_matches_dense() {
        let layout = OmegaLayout::new(ConstructionId::Omega1);
        let alphas = bits(&[0, 0, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 1, 0, 1, 0, 1]);
        let dense = BitMatrix::from_dense(&omega1_explicit(&alphas).unwrap());
        assert_eq!(layout.binary(pack_gf2(&alphas)), dense);
    }

    #[test]
    fn generator_shape() {
        let g = gen_matrix(&DenseMatrix::<Gf2>::identity(18)).unwrap();
        assert_eq!((g.rows(), g.cols()), (18, 36));
        assert!(g.submatrix(0, 18, 18, 18).is_identity());
        assert!(gen_matrix(&DenseMatrix::<Gf2>::zeros(3, 4)).is_err());
    }
}
