//! Quotients of multivariate polynomials.
//!
//! No gcd is ever taken. Equality is decided by cross-multiplication, so a
//! `RatFunc` may carry common factors without affecting any comparison.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::poly::MultiPoly;
use crate::arith::{Rational, Scalar};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: MultiPoly, den: MultiPoly) -> Self {
        debug_assert!(!den.is_zero());
        if let Some(c) = den.as_constant() {
            return Self {
                num: num.scale(&c.recip()),
                den: MultiPoly::one(),
            };
        }
        let lc = den.leading_coeff().expect("nonzero").clone();
        if lc.is_negative() {
            Self {
                num: -num,
                den: -den,
            }
        } else {
            Self { num, den }
        }
    }

    pub fn poly(p: MultiPoly) -> Self {
        Self {
            num: p,
            den: MultiPoly::one(),
        }
    }

    pub fn var(name: &str) -> Self {
        Self::poly(MultiPoly::var(name))
    }

    pub fn constant(c: Rational) -> Self {
        Self::poly(MultiPoly::constant(c))
    }

    pub fn int(n: i64) -> Self {
        Self::poly(MultiPoly::int(n))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn as_constant(&self) -> Option<Rational> {
        let n = self.num.as_constant()?;
        let d = self.den.as_constant()?;
        Some(n / d)
    }

    pub fn recip(&self) -> Result<Self> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.recip()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        Self {
            num: self.num.pow(e),
            den: self.den.pow(e),
        }
    }

    /// Simultaneous substitution of variables by rational functions.
    ///
    /// Each bound variable `x -> n/d` is pushed through numerator and
    /// denominator homogenized to the same power of `d`, so the common
    /// factor cancels without a gcd.
    pub fn substitute(&self, bindings: &BTreeMap<&str, RatFunc>) -> Result<Self> {
        let mut vars: Vec<String> = self
            .num
            .vars()
            .iter()
            .chain(self.den.vars())
            .cloned()
            .collect();
        vars.sort();
        vars.dedup();
        let num = self.num.lift_to(&vars);
        let den = self.den.lift_to(&vars);

        let mut nums = Vec::with_capacity(vars.len());
        let mut dens = Vec::with_capacity(vars.len());
        let mut tops = Vec::with_capacity(vars.len());
        for v in &vars {
            match bindings.get(v.as_str()) {
                Some(r) => {
                    nums.push(r.num.clone());
                    if r.den.as_constant().is_some_and(|c| c.is_one()) {
                        dens.push(None);
                        tops.push(0);
                    } else {
                        dens.push(Some(r.den.clone()));
                        tops.push(num.degree_in(v).max(den.degree_in(v)));
                    }
                }
                None => {
                    nums.push(MultiPoly::var(v));
                    dens.push(None);
                    tops.push(0);
                }
            }
        }
        let n = num.combine(&nums, &tops, &dens);
        let d = den.combine(&nums, &tops, &dens);
        Self::new(n, d)
    }

    /// Value at a point of any scalar ring.
    pub fn eval<S: Scalar>(&self, ctx: &S::Ctx, bindings: &BTreeMap<&str, S>) -> Result<S> {
        let n = self.num.eval(ctx, bindings)?;
        let d = self.den.eval(ctx, bindings)?;
        d.inverse().map(|inv| n * inv).ok_or(Error::DivisionByZero)
    }
}

/// Equality as rational functions: `f.num * g.den - g.num * f.den == 0`.
pub fn ratfunc_eq(f: &RatFunc, g: &RatFunc) -> bool {
    (&f.num * &g.den - &g.num * &f.den).is_zero()
}

/// Alias used at call sites that read better as a free function.
pub fn substitute(f: &RatFunc, bindings: &BTreeMap<&str, RatFunc>) -> Result<RatFunc> {
    f.substitute(bindings)
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        ratfunc_eq(self, other)
    }
}

impl From<MultiPoly> for RatFunc {
    fn from(p: MultiPoly) -> Self {
        Self::poly(p)
    }
}

impl From<Rational> for RatFunc {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.den == rhs.den {
            return RatFunc::normalized(&self.num + &rhs.num, self.den.clone());
        }
        RatFunc::normalized(
            &self.num * &rhs.den + &rhs.num * &self.den,
            &self.den * &rhs.den,
        )
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs.clone())
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for RatFunc {
    type Output = RatFunc;
    /// Panics on division by the zero function; see [`RatFunc::checked_div`].
    fn div(self, rhs: RatFunc) -> RatFunc {
        self.checked_div(&rhs)
            .expect("division by the zero rational function")
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl Scalar for RatFunc {
    type Ctx = ();

    fn ctx(&self) {}

    fn from_rational(_: &(), r: &Rational) -> Option<Self> {
        Some(Self::constant(r.clone()))
    }

    fn is_zero_elem(&self) -> bool {
        self.num.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        self.recip().ok()
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

impl Zero for RatFunc {
    fn zero() -> Self {
        Self::poly(MultiPoly::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}
