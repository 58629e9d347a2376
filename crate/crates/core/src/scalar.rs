//! Entry rings for matrices.
//!
//! Everything in this crate works over rings of characteristic 2. The
//! [`Ring`] trait collects the `num-traits` bounds the generic matrix code
//! needs; [`Gf2`] is the binary field and [`crate::r1ring::R1`] the four
//! element ring `F2 + uF2`.

use std::fmt;
use std::ops::{Add, Mul};

use num_traits::{One, Zero};

/// A commutative ring of characteristic 2 (so `x + x == 0` and subtraction
/// coincides with addition).
pub trait Ring:
    Copy + Eq + fmt::Debug + Zero + One + Add<Output = Self> + Mul<Output = Self>
{
}

impl<T> Ring for T where
    T: Copy + Eq + fmt::Debug + Zero + One + Add<Output = T> + Mul<Output = T>
{
}

/// An element of GF(2).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Gf2(pub bool);

impl Gf2 {
    pub const ZERO: Gf2 = Gf2(false);
    pub const ONE: Gf2 = Gf2(true);

    pub fn bit(self) -> bool {
        self.0
    }
}

impl From<bool> for Gf2 {
    fn from(b: bool) -> Self {
        Gf2(b)
    }
}

impl From<Gf2> for bool {
    fn from(x: Gf2) -> Self {
        x.0
    }
}

impl Add for Gf2 {
    type Output = Gf2;
    fn add(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 ^ rhs.0)
    }
}

impl Mul for Gf2 {
    type Output = Gf2;
    fn mul(self, rhs: Gf2) -> Gf2 {
        Gf2(self.0 & rhs.0)
    }
}

impl Zero for Gf2 {
    fn zero() -> Self {
        Gf2::ZERO
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
}

impl One for Gf2 {
    fn one() -> Self {
        Gf2::ONE
    }
}

impl fmt::Display for Gf2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(if self.0 { "1" } else { "0" })
    }
}

impl std::str::FromStr for Gf2 {
    type Err = ();
    fn from_str(s: &str) -> std::result::Result<Self, ()> {
        match s.trim() {
            "0" => Ok(Gf2::ZERO),
            "1" => Ok(Gf2::ONE),
            _ => Err(()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_tables() {
        for a in [Gf2::ZERO, Gf2::ONE] {
            assert_eq!(a + a, Gf2::ZERO);
            assert_eq!(a * Gf2::ONE, a);
            assert_eq!(a * Gf2::ZERO, Gf2::ZERO);
        }
        assert_eq!(Gf2::ONE + Gf2::ZERO, Gf2::ONE);
    }
}
