//! Prime fields `F_p` and dense univariate polynomials over them.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::rational::{is_prime, Rational};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// Element of `F_p`, stored as its least non-negative residue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FpElem {
    p: u64,
    value: u64,
}

impl FpElem {
    pub fn new(p: u64, value: i64) -> Result<Self> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(Error::NotPrime(p));
        }
        Ok(Self::reduce(p, value))
    }

    fn reduce(p: u64, value: i64) -> Self {
        let value = value.rem_euclid(p as i64) as u64;
        Self { p, value }
    }

    pub(crate) fn from_bigint(p: u64, n: &BigInt) -> Self {
        let r = n % BigInt::from(p);
        let v = r.to_i64().expect("residue fits");
        Self::reduce(p, v)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    /// Representative in `(-p/2, p/2]`, used for display.
    pub fn symmetric(&self) -> i64 {
        if self.value > self.p / 2 {
            self.value as i64 - self.p as i64
        } else {
            self.value as i64
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.p == other.p {
            Ok(())
        } else {
            Err(Error::ModulusMismatch {
                left: self.p,
                right: other.p,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            p: self.p,
            value: (self.value + other.value) % self.p,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            p: self.p,
            value: (self.value + self.p - other.value) % self.p,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let v = (self.value as u128 * other.value as u128) % self.p as u128;
        Ok(Self {
            p: self.p,
            value: v as u64,
        })
    }

    pub fn pow_u64(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = Self {
            p: self.p,
            value: 1 % self.p,
        };
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }
}

impl fmt::Display for FpElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.p)
    }
}

impl Add for FpElem {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .expect("F_p operands must share a modulus")
    }
}

impl Sub for FpElem {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs)
            .expect("F_p operands must share a modulus")
    }
}

impl Mul for FpElem {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("F_p operands must share a modulus")
    }
}

impl Neg for FpElem {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            p: self.p,
            value: (self.p - self.value) % self.p,
        }
    }
}

impl Scalar for FpElem {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }

    fn from_rational(p: &u64, r: &Rational) -> Option<Self> {
        let num = Self::from_bigint(*p, r.numer());
        let den = Self::from_bigint(*p, r.denom());
        den.inverse().map(|d| num * d)
    }

    fn is_zero_elem(&self) -> bool {
        self.value == 0
    }

    fn inverse(&self) -> Option<Self> {
        if self.value == 0 {
            None
        } else {
            // Fermat: a^(p-2) = a^(-1).
            Some(self.pow_u64(self.p - 2))
        }
    }
}

/// Dense polynomial in one variable over `F_p`, lowest degree first, with
/// no trailing zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FpPoly {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPoly {
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = FpElem>) -> Self {
        let mut coeffs: Vec<u64> = coeffs
            .into_iter()
            .map(|c| {
                assert_eq!(c.p, p, "coefficient modulus mismatch");
                c.value
            })
            .collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        Self { p, coeffs }
    }

    /// `u^p - u`, the Artin-Schreier polynomial.
    pub fn artin_schreier(p: u64) -> Self {
        let mut coeffs = vec![FpElem::reduce(p, 0); p as usize + 1];
        coeffs[1] = FpElem::reduce(p, -1);
        coeffs[p as usize] = FpElem::reduce(p, 1);
        Self::new(p, coeffs)
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> FpElem {
        FpElem {
            p: self.p,
            value: self.coeffs.get(i).copied().unwrap_or(0),
        }
    }

    pub fn constant_term(&self) -> Option<FpElem> {
        match self.degree() {
            None => Some(FpElem {
                p: self.p,
                value: 0,
            }),
            Some(0) => Some(self.coeff(0)),
            _ => None,
        }
    }

    pub fn scale(&self, c: FpElem) -> Self {
        Self::new(self.p, (0..self.coeffs.len()).map(|i| self.coeff(i) * c))
    }

    pub fn eval(&self, x: FpElem) -> FpElem {
        self.coeffs.iter().rev().fold(
            FpElem {
                p: self.p,
                value: 0,
            },
            |acc, &c| {
                acc * x
                    + FpElem {
                        p: self.p,
                        value: c,
                    }
            },
        )
    }
}

impl fmt::Display for FpPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = self.coeff(i).symmetric();
            if c == 0 {
                continue;
            }
            let (sign, mag) = if c < 0 { ("-", -c) } else { ("+", c) };
            if first {
                if sign == "-" {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            match (i, mag) {
                (0, m) => write!(f, "{m}")?,
                (1, 1) => f.write_str("u")?,
                (1, m) => write!(f, "{m}u")?,
                (e, 1) => write!(f, "u^{e}")?,
                (e, m) => write!(f, "{m}u^{e}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}
