//! The ring interface the group laws and matrices are evaluated over.

use std::fmt::Debug;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{to_f64, Rational};

/// A commutative ring element that the symbolic layer can be evaluated in.
///
/// Elements of rings with runtime parameters (the prime of `F_p` or of
/// `Z[zeta_p]`) carry them in `Ctx`; constants are produced through it.
/// Arithmetic operators panic when two elements come from different
/// contexts, like integer overflow would; use the checked methods on the
/// concrete types when that is a recoverable condition.
pub trait Scalar:
    Clone
    + PartialEq
    + Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    type Ctx: Clone + Debug;

    fn ctx(&self) -> Self::Ctx;

    /// Image of a rational constant, or `None` when the denominator is not
    /// invertible in the ring.
    fn from_rational(ctx: &Self::Ctx, r: &Rational) -> Option<Self>;

    fn is_zero_elem(&self) -> bool;

    /// Multiplicative inverse, when it exists.
    fn inverse(&self) -> Option<Self>;

    fn zero_in(ctx: &Self::Ctx) -> Self {
        Self::from_rational(ctx, &Rational::zero()).expect("0 embeds in every ring")
    }

    fn one_in(ctx: &Self::Ctx) -> Self {
        Self::from_rational(ctx, &Rational::one()).expect("1 embeds in every ring")
    }

    fn from_int(ctx: &Self::Ctx, n: i64) -> Self {
        Self::from_rational(ctx, &Rational::from_integer(n.into())).expect("integers embed")
    }

    fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one_in(&self.ctx());
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base.clone();
            }
            e >>= 1;
            if e > 0 {
                base = base.clone() * base;
            }
        }
        acc
    }

    fn try_div(&self, other: &Self) -> Option<Self> {
        other.inverse().map(|inv| self.clone() * inv)
    }
}

impl Scalar for Rational {
    type Ctx = ();

    fn ctx(&self) {}

    fn from_rational(_: &(), r: &Rational) -> Option<Self> {
        Some(r.clone())
    }

    fn is_zero_elem(&self) -> bool {
        Zero::is_zero(self)
    }

    fn inverse(&self) -> Option<Self> {
        if Zero::is_zero(self) {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Scalar for f64 {
    type Ctx = ();

    fn ctx(&self) {}

    fn from_rational(_: &(), r: &Rational) -> Option<Self> {
        Some(to_f64(r))
    }

    fn is_zero_elem(&self) -> bool {
        *self == 0.0
    }

    fn inverse(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::rat;

    #[test]
    fn pow_by_squaring() {
        assert_eq!(rat(2, 3).pow(5), rat(32, 243));
        assert_eq!(rat(7, 1).pow(0), rat(1, 1));
        assert_eq!(Scalar::pow(&1.5f64, 2), 2.25);
    }

    #[test]
    fn zero_has_no_inverse() {
        assert!(Scalar::inverse(&rat(0, 1)).is_none());
        assert!(Scalar::inverse(&0.0f64).is_none());
        assert_eq!(rat(1, 2).try_div(&rat(1, 4)), Some(rat(2, 1)));
    }
}
