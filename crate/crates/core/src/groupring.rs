//! Finite groups as multiplication tables, the group-ring matrix `σ(v)` and
//! the composite matrix `Ω(v)`.
//!
//! Group elements are indices into a fixed listing; index 0 is always the
//! identity. A coefficient vector `alphas` is indexed by the same listing, so
//! `alphas[t]` is the coefficient of the `t`-th listed element.

use std::fmt;
use std::str::FromStr;

use crate::dense::DenseMatrix;
use crate::error::{invalid, Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct GroupTable {
    label: String,
    order: usize,
    mul: Vec<usize>,
    inv: Vec<usize>,
}

impl GroupTable {
    /// Validates identity at index 0, the Latin-square property and
    /// associativity, then derives the inverse table.
    pub fn from_table(label: impl Into<String>, order: usize, mul: Vec<usize>) -> Result<Self> {
        if order == 0 || mul.len() != order * order {
            return invalid("multiplication table has the wrong size");
        }
        if mul.iter().any(|&x| x >= order) {
            return invalid("multiplication table entry out of range");
        }
        let at = |a: usize, b: usize| mul[a * order + b];
        for a in 0..order {
            if at(0, a) != a || at(a, 0) != a {
                return invalid("element 0 is not the identity");
            }
            let mut row_seen = vec![false; order];
            let mut col_seen = vec![false; order];
            for b in 0..order {
                row_seen[at(a, b)] = true;
                col_seen[at(b, a)] = true;
            }
            if row_seen.contains(&false) || col_seen.contains(&false) {
                return invalid("multiplication table is not a Latin square");
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if at(at(a, b), c) != at(a, at(b, c)) {
                        return invalid(format!("not associative at ({a},{b},{c})"));
                    }
                }
            }
        }
        let inv = (0..order)
            .map(|a| (0..order).find(|&b| at(b, a) == 0).expect("Latin square has an inverse"))
            .collect();
        Ok(GroupTable { label: label.into(), order, mul, inv })
    }

    /// Builds the table from an element product on some representation.
    fn from_elements<E: PartialEq>(label: &str, elems: &[E], op: impl Fn(&E, &E) -> E) -> Result<Self> {
        let n = elems.len();
        let mut mul = Vec::with_capacity(n * n);
        for x in elems {
            for y in elems {
                let p = op(x, y);
                let idx = elems
                    .iter()
                    .position(|e| *e == p)
                    .ok_or_else(|| Error::InvalidArgument(format!("{label}: product escapes the listing")))?;
                mul.push(idx);
            }
        }
        Self::from_table(label, n, mul)
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.order + b]
    }

    pub fn inv(&self, a: usize) -> usize {
        self.inv[a]
    }

    pub fn is_abelian(&self) -> bool {
        (0..self.order).all(|a| (0..self.order).all(|b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut x = a;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }

    /// The same group under a new listing: new element `t` is old element
    /// `listing[t]`. The identity must stay first.
    pub fn relisted(&self, listing: &[usize]) -> Result<Self> {
        let n = self.order;
        if listing.len() != n || listing.first() != Some(&0) {
            return invalid("listing must be a permutation starting with the identity");
        }
        let mut pos = vec![usize::MAX; n];
        for (t, &old) in listing.iter().enumerate() {
            if old >= n || pos[old] != usize::MAX {
                return invalid("listing is not a permutation");
            }
            pos[old] = t;
        }
        let mut mul = Vec::with_capacity(n * n);
        for &x in listing {
            for &y in listing {
                mul.push(pos[self.mul(x, y)]);
            }
        }
        Self::from_table(self.label.clone(), n, mul)
    }

    /// Group-ring product of two coefficient vectors:
    /// coefficient of `g_k` is the sum of `v_i w_j` over `g_i g_j = g_k`.
    pub fn convolve<T: crate::scalar::Ring>(&self, v: &[T], w: &[T]) -> Result<Vec<T>> {
        if v.len() != self.order || w.len() != self.order {
            return invalid("coefficient vectors must match the group order");
        }
        let mut out = vec![T::zero(); self.order];
        for (i, &x) in v.iter().enumerate() {
            for (j, &y) in w.iter().enumerate() {
                let k = self.mul(i, j);
                out[k] = out[k] + x * y;
            }
        }
        Ok(out)
    }
}

impl fmt::Debug for GroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GroupTable({}, order {})", self.label, self.order)
    }
}

/// The group families the constructions need.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Presentation {
    /// `C_m = <a | a^m = 1>`, listed `a^0, ..., a^(m-1)`.
    Cyclic(usize),
    /// `D_{2m} = <x, y | x^m = y^2 = 1, x^y = x^-1>` of order `2m`, listed
    /// `x^i y^j` with `i` running fastest.
    Dihedral(usize),
    /// `C3 x C6 = <x, y | x^6 = y^3 = 1, xy = yx>`, listed `x^i y^j` with `i`
    /// running fastest.
    C3xC6,
}

impl FromStr for Presentation {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        if t.eq_ignore_ascii_case("C3xC6") {
            return Ok(Presentation::C3xC6);
        }
        let parse_num = |rest: &str| rest.parse::<usize>().ok();
        match t.split_at(1.min(t.len())) {
            ("C" | "c", rest) => match parse_num(rest) {
                Some(m) if m >= 2 => Ok(Presentation::Cyclic(m)),
                _ => invalid(format!("unsupported presentation {t:?}")),
            },
            ("D" | "d", rest) => match parse_num(rest) {
                Some(n) if n >= 4 && n % 2 == 0 => Ok(Presentation::Dihedral(n / 2)),
                _ => invalid(format!("unsupported presentation {t:?}")),
            },
            _ => invalid(format!("unsupported presentation {t:?}")),
        }
    }
}

pub fn build_group(p: Presentation) -> Result<GroupTable> {
    match p {
        Presentation::Cyclic(m) => {
            if m < 2 {
                return invalid("cyclic group needs m >= 2");
            }
            let elems: Vec<usize> = (0..m).collect();
            GroupTable::from_elements(&format!("C{m}"), &elems, |a, b| (a + b) % m)
        }
        Presentation::Dihedral(m) => {
            if m < 2 {
                return invalid("dihedral group needs m >= 2");
            }
            // (i, j) = x^i y^j; y x^k = x^-k y.
            let elems: Vec<(usize, usize)> = (0..2).flat_map(|j| (0..m).map(move |i| (i, j))).collect();
            GroupTable::from_elements(&format!("D{}", 2 * m), &elems, |&(i, j), &(k, l)| {
                let k = if j == 1 { (m - k) % m } else { k };
                ((i + k) % m, (j + l) % 2)
            })
        }
        Presentation::C3xC6 => {
            let elems: Vec<(usize, usize)> = (0..3).flat_map(|j| (0..6).map(move |i| (i, j))).collect();
            GroupTable::from_elements("C3xC6", &elems, |&(i, j), &(k, l)| ((i + k) % 6, (j + l) % 3))
        }
    }
}

/// `σ(v)`: entry `(i, j)` is the coefficient of `g_i^-1 g_j`.
pub fn sigma<T: Clone>(alphas: &[T], group: &GroupTable) -> Result<DenseMatrix<T>> {
    let n = group.order();
    if alphas.len() != n {
        return invalid(format!("expected {n} coefficients, got {}", alphas.len()));
    }
    Ok(DenseMatrix::from_fn(n, n, |i, j| alphas[group.mul(group.inv(i), j)].clone()))
}

/// How one `r x r` block of a composite matrix is indexed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum BlockForm {
    /// `α_{g_{j+s}^-1 g_{k+t}}`: a window of `σ(v)`.
    Group,
    /// First row from `G`, remaining rows transported from the listed inner
    /// group `H` through `φ_l : (h)_t ↦ g_j^-1 g_{k+t}`.
    Inner(GroupTable),
}

/// Data for one composite matrix `Ω(v)`: the outer group with its listing,
/// the block size and a row-major grid of block forms.
#[derive(Clone, Debug)]
pub struct CompositeSpec {
    outer: GroupTable,
    block: usize,
    forms: Vec<BlockForm>,
}

impl CompositeSpec {
    pub fn new(outer: GroupTable, block: usize, forms: Vec<BlockForm>) -> Result<Self> {
        let n = outer.order();
        if block <= 1 || block >= n || n % block != 0 {
            return invalid(format!("block size {block} must be a proper factor (> 1) of {n}"));
        }
        let per = n / block;
        if forms.len() != per * per {
            return invalid(format!("expected {} block forms, got {}", per * per, forms.len()));
        }
        for f in &forms {
            if let BlockForm::Inner(h) = f {
                if h.order() != block {
                    return invalid(format!("inner group {} has order {}, block size is {block}", h.label(), h.order()));
                }
            }
        }
        Ok(CompositeSpec { outer, block, forms })
    }

    /// Every block a [`BlockForm::Group`] block; `omega` then equals `sigma`.
    pub fn all_group_blocks(outer: GroupTable, block: usize) -> Result<Self> {
        let n = outer.order();
        let per = if block > 0 { n / block } else { 0 };
        Self::new(outer, block, vec![BlockForm::Group; per * per])
    }

    pub fn outer(&self) -> &GroupTable {
        &self.outer
    }

    pub fn block_size(&self) -> usize {
        self.block
    }

    pub fn forms(&self) -> &[BlockForm] {
        &self.forms
    }

    /// The 0-based anchor `(j, k)` of block `l` (row-major); 1-based this is
    /// `l=1 ↦ (1,1)`, `l=2 ↦ (1, r+1)`, ..., `l=n/r+1 ↦ (r+1, 1)`.
    pub fn anchor(&self, l: usize) -> (usize, usize) {
        let per = self.outer.order() / self.block;
        ((l / per) * self.block, (l % per) * self.block)
    }
}

/// Assembles `Ω(v)` block by block.
pub fn omega<T: Clone>(alphas: &[T], spec: &CompositeSpec) -> Result<DenseMatrix<T>> {
    let g = &spec.outer;
    let n = g.order();
    if alphas.len() != n {
        return invalid(format!("expected {n} coefficients, got {}", alphas.len()));
    }
    let r = spec.block;
    let per = n / r;
    let mut index = vec![0usize; n * n];
    for (l, form) in spec.forms.iter().enumerate() {
        let (j, k) = spec.anchor(l);
        for s in 0..r {
            for t in 0..r {
                let elem = match form {
                    BlockForm::Group => g.mul(g.inv(j + s), k + t),
                    BlockForm::Inner(h) => {
                        let m = h.mul(h.inv(s), t);
                        g.mul(g.inv(j), k + m)
                    }
                };
                index[(j + s) * n + (k + t)] = elem;
            }
        }
    }
    debug_assert_eq!(per * r, n);
    Ok(DenseMatrix::from_fn(n, n, |i, c| alphas[index[i * n + c]].clone()))
}

/// Cyclic group `C_{p·q}` listed so that position `q·i + j` holds `a^(p·j + i)`
/// (`i < p`, `j < q`). With this listing `σ` over the group is a `p x p` grid
/// of `q x q` circulants, the shape the order-18 constructions print.
pub fn interleaved_cyclic(p: usize, q: usize) -> Result<GroupTable> {
    let base = build_group(Presentation::Cyclic(p * q))?;
    let listing: Vec<usize> = (0..p).flat_map(|i| (0..q).map(move |j| p * j + i)).collect();
    base.relisted(&listing)
}

/// Named composite specs for the three order-18 constructions.
pub mod presets {
    use super::*;

    /// `D18` outer group, `r = 9`, all four blocks indexed through `C9`.
    pub fn omega1() -> CompositeSpec {
        let g = build_group(Presentation::Dihedral(9)).expect("D18");
        let h = interleaved_cyclic(3, 3).expect("C9");
        CompositeSpec::new(g, 9, vec![BlockForm::Inner(h); 4]).expect("valid preset")
    }

    /// `C3 x C6` outer group, `r = 6`, all nine blocks indexed through `D6`
    /// listed `1, a, a^2, b, ab, a^2 b`.
    pub fn omega2() -> CompositeSpec {
        let g = build_group(Presentation::C3xC6).expect("C3xC6");
        let h = build_group(Presentation::Dihedral(3)).expect("D6");
        CompositeSpec::new(g, 6, vec![BlockForm::Inner(h); 9]).expect("valid preset")
    }

    /// `C3 x C6` outer group, `r = 6`, all nine blocks indexed through `C6`.
    pub fn omega3() -> CompositeSpec {
        let g = build_group(Presentation::C3xC6).expect("C3xC6");
        let h = interleaved_cyclic(2, 3).expect("C6");
        CompositeSpec::new(g, 6, vec![BlockForm::Inner(h); 9]).expect("valid preset")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Gf2;
    use proptest::prelude::*;

    #[test]
    fn cyclic_law() {
        let c9 = build_group(Presentation::Cyclic(9)).unwrap();
        for i in 0..9 {
            for j in 0..9 {
                assert_eq!(c9.mul(i, j), (i + j) % 9);
            }
        }
        assert_eq!(c9.label(), "C9");
    }

    #[test]
    fn dihedral_involutions() {
        let d18 = build_group(Presentation::Dihedral(9)).unwrap();
        assert_eq!(d18.order(), 18);
        assert!(!d18.is_abelian());
        // every element of the y-coset is an involution
        let coset_involutions = (9..18).filter(|&g| d18.element_order(g) == 2).count();
        assert_eq!(coset_involutions, 9);
        let rot_involutions = (0..9).filter(|&g| d18.element_order(g) <= 2).count();
        assert_eq!(rot_involutions, 1);
        // x^y = x^-1
        let (x, y) = (1, 9);
        assert_eq!(d18.mul(d18.mul(d18.inv(y), x), y), d18.inv(x));
    }

    #[test]
    fn c3xc6_is_abelian() {
        let g = build_group(Presentation::C3xC6).unwrap();
        assert_eq!(g.order(), 18);
        assert!(g.is_abelian());
        assert_eq!(g.element_order(1), 6);
        assert_eq!(g.element_order(6), 3);
    }

    #[test]
    fn parse_presentations() {
        assert_eq!("C9".parse::<Presentation>().unwrap(), Presentation::Cyclic(9));
        assert_eq!("D18".parse::<Presentation>().unwrap(), Presentation::Dihedral(9));
        assert_eq!("c3xc6".parse::<Presentation>().unwrap(), Presentation::C3xC6);
        assert!("Q8".parse::<Presentation>().is_err());
        assert!("D7".parse::<Presentation>().is_err());
        assert!("C1".parse::<Presentation>().is_err());
    }

    #[test]
    fn table_validation() {
        // not a Latin square
        assert!(GroupTable::from_table("bad", 2, vec![0, 1, 1, 1]).is_err());
        // identity not first
        assert!(GroupTable::from_table("bad", 2, vec![1, 0, 0, 1]).is_err());
        // Latin square with identity but not associative (order 5 loop)
        let loop5 = vec![
            0, 1, 2, 3, 4, //
            1, 0, 3, 4, 2, //
            2, 4, 0, 1, 3, //
            3, 2, 4, 0, 1, //
            4, 3, 1, 2, 0,
        ];
        assert!(GroupTable::from_table("loop", 5, loop5).is_err());
    }

    #[test]
    fn sigma_examples() {
        let c3 = build_group(Presentation::Cyclic(3)).unwrap();
        let s = sigma(&[1, 1, 0], &c3).unwrap();
        assert_eq!(s, DenseMatrix::circulant(&[1, 1, 0]).unwrap());
        let g = build_group(Presentation::Dihedral(9)).unwrap();
        let mut e = vec![Gf2::ZERO; 18];
        e[0] = Gf2::ONE;
        assert!(sigma(&e, &g).unwrap().is_identity());
        assert!(sigma(&e[..17], &g).is_err());
        let alphas: Vec<usize> = (0..18).collect();
        assert_eq!(sigma(&alphas, &g).unwrap().row(0), alphas.as_slice());
    }

    #[test]
    fn omega_degenerates_to_sigma() {
        for p in [Presentation::Dihedral(9), Presentation::C3xC6] {
            let g = build_group(p).unwrap();
            for r in [2, 3, 6, 9] {
                if 18 % r != 0 {
                    continue;
                }
                let spec = CompositeSpec::all_group_blocks(g.clone(), r).unwrap();
                let alphas: Vec<usize> = (0..18).collect();
                assert_eq!(omega(&alphas, &spec).unwrap(), sigma(&alphas, &g).unwrap());
            }
        }
    }

    #[test]
    fn spec_validation() {
        let g = build_group(Presentation::Dihedral(9)).unwrap();
        assert!(CompositeSpec::all_group_blocks(g.clone(), 1).is_err());
        assert!(CompositeSpec::all_group_blocks(g.clone(), 18).is_err());
        assert!(CompositeSpec::all_group_blocks(g.clone(), 4).is_err());
        let c6 = build_group(Presentation::Cyclic(6)).unwrap();
        assert!(CompositeSpec::new(g.clone(), 9, vec![BlockForm::Inner(c6); 4]).is_err());
        let spec = CompositeSpec::all_group_blocks(g, 9).unwrap();
        assert_eq!(spec.anchor(0), (0, 0));
        assert_eq!(spec.anchor(1), (0, 9));
        assert_eq!(spec.anchor(2), (9, 0));
        assert!(omega(&[0u8; 17], &spec).is_err());
    }

    #[test]
    fn preset_first_rows_are_alphas() {
        let alphas: Vec<usize> = (1..=18).collect();
        for spec in [presets::omega1(), presets::omega2(), presets::omega3()] {
            assert_eq!(omega(&alphas, &spec).unwrap().row(0), alphas.as_slice());
        }
    }

    #[test]
    fn preset_block_rows_are_permutations() {
        let alphas: Vec<usize> = (0..18).collect();
        for spec in [presets::omega1(), presets::omega2(), presets::omega3()] {
            let m = omega(&alphas, &spec).unwrap();
            let r = spec.block_size();
            for i in 0..18 {
                for bc in 0..18 / r {
                    let head = i - i % r;
                    let mut a: Vec<usize> = m.row(head)[bc * r..(bc + 1) * r].to_vec();
                    let mut b: Vec<usize> = m.row(i)[bc * r..(bc + 1) * r].to_vec();
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                }
            }
        }
    }

    proptest! {
        #[test]
        fn sigma_is_multiplicative(v in proptest::collection::vec(any::<bool>(), 18),
                                   w in proptest::collection::vec(any::<bool>(), 18),
                                   which in 0usize..3) {
            let g = match which {
                0 => build_group(Presentation::Dihedral(9)).unwrap(),
                1 => build_group(Presentation::C3xC6).unwrap(),
                _ => interleaved_cyclic(3, 6).unwrap(),
            };
            let v: Vec<Gf2> = v.into_iter().map(Gf2).collect();
            let w: Vec<Gf2> = w.into_iter().map(Gf2).collect();
            let lhs = sigma(&v, &g).unwrap().mul(&sigma(&w, &g).unwrap()).unwrap();
            let rhs = sigma(&g.convolve(&v, &w).unwrap(), &g).unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn circulant_is_cyclic_sigma(row in proptest::collection::vec(any::<bool>(), 2..20)) {
            let g = build_group(Presentation::Cyclic(row.len())).unwrap();
            let s = sigma(&row, &g).unwrap();
            let c = crate::bitmat::BitMatrix::circulant(&row).unwrap();
            prop_assert_eq!(crate::bitmat::BitMatrix::from_dense(&s.map(|&b| Gf2(b))), c);
        }
    }
}
