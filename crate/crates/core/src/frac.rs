//! Fixed-denominator exact rationals.
//!
//! Potentials live in units of 1/21 (ε = 1/21, δ = 8/21). Charges also move
//! in quarters, so the discharging ledger uses units of 1/84.

use core::fmt;
use core::iter::Sum;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

/// `numerator / D`, exact.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Frac<const D: i64>(i64);

pub type Rat21 = Frac<21>;
pub type Rat84 = Frac<84>;

impl<const D: i64> Frac<D> {
    pub const ZERO: Self = Frac(0);

    pub const fn from_numerator(num: i64) -> Self {
        Frac(num)
    }

    pub const fn from_integer(k: i64) -> Self {
        Frac(k * D)
    }

    pub const fn numerator(self) -> i64 {
        self.0
    }

    pub const fn denominator(self) -> i64 {
        D
    }

    /// Re-expresses the value over denominator `E`, if `E` is a multiple of `D`.
    pub const fn rescale<const E: i64>(self) -> Option<Frac<E>> {
        if E % D == 0 {
            Some(Frac(self.0 * (E / D)))
        } else {
            None
        }
    }

    pub const fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl Rat21 {
    pub const fn to_84(self) -> Rat84 {
        Frac(self.0 * 4)
    }
}

impl<const D: i64> fmt::Display for Frac<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0, D)
    }
}

impl<const D: i64> fmt::Debug for Frac<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0, D)
    }
}

impl<const D: i64> Add for Frac<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Frac(self.0 + rhs.0)
    }
}

impl<const D: i64> Sub for Frac<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Frac(self.0 - rhs.0)
    }
}

impl<const D: i64> Neg for Frac<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Frac(-self.0)
    }
}

impl<const D: i64> Mul<i64> for Frac<D> {
    type Output = Self;
    fn mul(self, rhs: i64) -> Self {
        Frac(self.0 * rhs)
    }
}

impl<const D: i64> AddAssign for Frac<D> {
    fn add_assign(&mut self, rhs: Self) {
        self.0 += rhs.0;
    }
}

impl<const D: i64> SubAssign for Frac<D> {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 -= rhs.0;
    }
}

impl<const D: i64> Sum for Frac<D> {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        Frac(iter.map(|x| x.0).sum())
    }
}
