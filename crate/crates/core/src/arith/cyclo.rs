//! The cyclotomic field `Q(zeta_p)` and its ring of integers `Z[zeta_p]`.
//!
//! Elements are coordinate vectors on the integral basis
//! `1, zeta, ..., zeta^(p-2)`; an element is integral exactly when every
//! coordinate is an integer. The prime above `p` is generated by the
//! uniformizer `h = zeta - 1`, and the residue map `Z[zeta_p] -> F_p` sends
//! `zeta` to `1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::fp::FpElem;
use super::rational::{binomial, is_integral, is_prime, p_adic_order, Rational};
use super::scalar::Scalar;
use crate::error::{Error, Result};

/// An element of `Q(zeta_p)` in canonical coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CycloNum {
    p: u64,
    coeffs: Vec<Rational>,
}

/// `h`-adic valuation; `Infinity` only for zero.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Valuation {
    Finite(i64),
    Infinity,
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(k) => write!(f, "{k}"),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

/// Reduces a coefficient vector indexed by powers of zeta onto the basis.
fn canonicalize(p: u64, raw: Vec<Rational>) -> Vec<Rational> {
    let p = p as usize;
    let d = p - 1;
    // zeta^p = 1 folds everything below degree p.
    let mut folded = vec![Rational::zero(); p];
    for (i, c) in raw.into_iter().enumerate() {
        folded[i % p] += c;
    }
    // zeta^(p-1) = -(1 + zeta + ... + zeta^(p-2)).
    let top = folded.pop().expect("p >= 2");
    if !top.is_zero() {
        for c in folded.iter_mut() {
            *c -= &top;
        }
    }
    debug_assert_eq!(folded.len(), d);
    folded
}

impl CycloNum {
    /// Canonical element from coefficients of `1, zeta, zeta^2, ...` of any
    /// length; higher powers are reduced with the cyclotomic relation.
    pub fn make(p: u64, raw: Vec<Rational>) -> Result<Self> {
        check_prime(p)?;
        if raw.is_empty() {
            return Err(Error::Empty);
        }
        Ok(Self {
            p,
            coeffs: canonicalize(p, raw),
        })
    }

    pub fn from_ints(p: u64, raw: &[i64]) -> Result<Self> {
        Self::make(
            p,
            raw.iter()
                .map(|&c| Rational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_rational(p: u64, r: Rational) -> Result<Self> {
        Self::make(p, vec![r])
    }

    pub fn zero(p: u64) -> Result<Self> {
        Self::from_rational(p, Rational::zero())
    }

    pub fn one(p: u64) -> Result<Self> {
        Self::from_rational(p, Rational::one())
    }

    /// The primitive root `zeta_p`.
    pub fn zeta(p: u64) -> Result<Self> {
        Self::from_ints(p, &[0, 1])
    }

    /// The uniformizer `h = zeta - 1`.
    pub fn uniformizer(p: u64) -> Result<Self> {
        Self::from_ints(p, &[-1, 1])
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(is_integral)
    }

    /// The rational value, when the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        if self.coeffs[1..].iter().all(Zero::is_zero) {
            Some(&self.coeffs[0])
        } else {
            None
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
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self { p: self.p, coeffs })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.coeffs.len();
        let mut raw = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    raw[i + j] += a * b;
                }
            }
        }
        Ok(Self {
            p: self.p,
            coeffs: canonicalize(self.p, raw),
        })
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        Scalar::pow(self, e)
    }

    /// Image under the Galois automorphism `zeta -> zeta^k`, `p` not dividing `k`.
    pub fn galois(&self, k: u64) -> Self {
        let p = self.p;
        let mut raw = vec![Rational::zero(); p as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            raw[((i as u64 * k) % p) as usize] += c;
        }
        Self {
            p,
            coeffs: canonicalize(p, raw),
        }
    }

    /// Product of all conjugates but the identity; `self * adjugate = norm`.
    fn adjugate(&self) -> Self {
        (2..self.p).fold(Self::one(self.p).expect("prime"), |acc, k| {
            acc * self.galois(k)
        })
    }

    /// Field norm `N(a) = prod_k sigma_k(a)`, a rational number.
    pub fn norm(&self) -> Rational {
        let n = self.clone() * self.adjugate();
        n.as_rational().cloned().expect("norm lies in Q")
    }

    /// Inverse in `Q(zeta_p)` as `adjugate / norm`.
    pub fn checked_inv(&self) -> Result<Self> {
        let adj = self.adjugate();
        let n = (self.clone() * adj.clone())
            .as_rational()
            .cloned()
            .expect("norm lies in Q");
        if n.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(adj.scale(&n.recip()))
    }

    /// Integral element that is invertible in `Z[zeta_p]`.
    pub fn is_unit(&self) -> bool {
        self.is_integral() && self.norm().abs().is_one()
    }

    /// Residue in `F_p` under `zeta -> 1`.
    pub fn reduce_mod_h(&self) -> Result<FpElem> {
        if !self.is_integral() {
            return Err(Error::NonIntegral);
        }
        let sum: BigInt = self.coeffs.iter().map(|c| c.numer().clone()).sum();
        Ok(FpElem::from_bigint(self.p, &sum))
    }

    /// Exact quotient by `h`, failing when `h` does not divide `self` in
    /// `Z[zeta_p]`.
    pub fn div_by_h(&self) -> Result<Self> {
        if self.reduce_mod_h()?.value() != 0 {
            return Err(Error::InexactDivision("residue is nonzero".into()));
        }
        let h_inv = Self::uniformizer(self.p)?.checked_inv()?;
        let q = self.clone() * h_inv;
        if !q.is_integral() {
            return Err(Error::InexactDivision(format!("{q} is not integral")));
        }
        Ok(q)
    }

    /// `h`-adic valuation, extended to the field by clearing denominators.
    pub fn h_valuation(&self) -> Valuation {
        if self.is_zero() {
            return Valuation::Infinity;
        }
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        // v_h(p) = p - 1, so v_h(n) = (p - 1) v_p(n) for rational integers.
        let shift = (self.p - 1) as i64 * p_adic_order(&lcm, self.p) as i64;
        let mut a = self.scale(&Rational::from_integer(lcm));
        let mut k = 0i64;
        while a.reduce_mod_h().expect("integral").value() == 0 {
            a = a
                .div_by_h()
                .expect("residue zero implies divisibility by h");
            k += 1;
        }
        Valuation::Finite(k - shift)
    }

    /// Coordinates on the basis `1, h, ..., h^(p-2)` (`zeta = 1 + h`).
    pub fn h_coordinates(&self) -> Vec<Rational> {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, c) in self.coeffs.iter().enumerate() {
            for (j, slot) in out.iter_mut().enumerate().take(i + 1) {
                *slot += c * Rational::from_integer(binomial(i as u64, j as u64));
            }
        }
        out
    }

    /// Renders in the basis `1, h, h^2, ...` with unit coefficients elided,
    /// e.g. `-1 - h`.
    pub fn display_in_h(&self) -> String {
        render(&self.h_coordinates(), "h", false)
    }
}

/// `w = h^(p-1) / p`, checked to be an integral unit congruent to `-1`
/// modulo `h`.
pub fn compute_unit_w(p: u64) -> Result<CycloNum> {
    check_prime(p)?;
    let h = CycloNum::uniformizer(p)?;
    let w = h
        .pow((p - 1) as u32)
        .scale(&Rational::new(BigInt::one(), BigInt::from(p)));
    if !w.is_integral() {
        return Err(Error::InexactDivision(format!("h^{} / {p} = {w}", p - 1)));
    }
    if !w.is_unit() {
        return Err(Error::NotInvertible(w.to_string()));
    }
    let inv = w.checked_inv()?;
    if !inv.is_integral() {
        return Err(Error::NotInvertible(w.to_string()));
    }
    let residue = w.reduce_mod_h()?;
    if residue.value() != p - 1 {
        return Err(Error::InvalidArgument(format!(
            "w reduces to {residue}, expected -1"
        )));
    }
    Ok(w)
}

fn render(coords: &[Rational], var: &str, explicit_one: bool) -> String {
    let mut out = String::new();
    for (i, c) in coords.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mon = match i {
            0 => String::new(),
            1 => var.to_string(),
            e => format!("{var}^{e}"),
        };
        if i == 0 {
            out.push_str(&mag.to_string());
        } else if mag.is_one() && !explicit_one {
            out.push_str(&mon);
        } else {
            out.push_str(&format!("{mag}·{mon}"));
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for CycloNum {
    /// Basis form with explicit coefficients, e.g. `-1 - 1·ζ (p=3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (p={})", render(&self.coeffs, "ζ", true), self.p)
    }
}

impl Add for CycloNum {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs)
            .expect("cyclotomic operands must share p")
    }
}

impl Sub for CycloNum {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs)
            .expect("cyclotomic operands must share p")
    }
}

impl Mul for CycloNum {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs)
            .expect("cyclotomic operands must share p")
    }
}

impl Neg for CycloNum {
    type Output = Self;
    fn neg(self) -> Self {
        Self {
            p: self.p,
            coeffs: self.coeffs.into_iter().map(|c| -c).collect(),
        }
    }
}

impl Scalar for CycloNum {
    type Ctx = u64;

    fn ctx(&self) -> u64 {
        self.p
    }

    fn from_rational(p: &u64, r: &Rational) -> Option<Self> {
        CycloNum::from_rational(*p, r.clone()).ok()
    }

    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }

    fn inverse(&self) -> Option<Self> {
        self.checked_inv().ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rational::{int, rat};

    fn c(p: u64, raw: &[i64]) -> CycloNum {
        CycloNum::from_ints(p, raw).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn make_reduces_top_powers() {
        assert_eq!(c(3, &[0, 0, 1]).coeffs(), ints(&[-1, -1]).as_slice());
        assert_eq!(c(3, &[1]).coeffs(), ints(&[1, 0]).as_slice());
        assert_eq!(
            c(5, &[0, 0, 0, 0, 1]).coeffs(),
            ints(&[-1, -1, -1, -1]).as_slice()
        );
        assert_eq!(
            c(5, &[0, 0, 0, 0, 0, 1]).coeffs(),
            ints(&[1, 0, 0, 0]).as_slice()
        );
        assert_eq!(c(2, &[0, 1]).coeffs(), ints(&[-1]).as_slice());
    }

    #[test]
    fn make_rejects_bad_input() {
        assert_eq!(CycloNum::from_ints(4, &[1]), Err(Error::NotPrime(4)));
        assert_eq!(CycloNum::make(3, vec![]), Err(Error::Empty));
    }

    #[test]
    fn make_is_idempotent() {
        let a = c(7, &[3, -1, 4, 1, -5, 9, 2, 6, 5]);
        let again = CycloNum::make(7, a.coeffs().to_vec()).unwrap();
        assert_eq!(a, again);
    }

    #[test]
    fn uniformizer_squares() {
        let h3 = CycloNum::uniformizer(3).unwrap();
        assert_eq!(h3.clone() * h3, c(3, &[0, -3]));
        let h5 = CycloNum::uniformizer(5).unwrap();
        assert_eq!(h5.clone() * h5, c(5, &[1, -2, 1]));
        let x = c(5, &[2, 0, -1, 7]);
        assert_eq!(CycloNum::one(5).unwrap() * x.clone(), x);
    }

    #[test]
    fn mismatched_primes() {
        let a = c(3, &[1]);
        let b = c(5, &[1]);
        assert_eq!(
            a.checked_mul(&b),
            Err(Error::ModulusMismatch { left: 3, right: 5 })
        );
    }

    #[test]
    fn residues() {
        for p in [2, 3, 5, 7] {
            assert_eq!(
                CycloNum::zeta(p).unwrap().reduce_mod_h().unwrap().value(),
                1 % p
            );
            assert_eq!(
                CycloNum::uniformizer(p)
                    .unwrap()
                    .reduce_mod_h()
                    .unwrap()
                    .value(),
                0
            );
        }
        assert_eq!(c(3, &[0, -1]).reduce_mod_h().unwrap().value(), 2);
        let half = CycloNum::from_rational(3, rat(1, 2)).unwrap();
        assert_eq!(half.reduce_mod_h(), Err(Error::NonIntegral));
    }

    #[test]
    fn valuations() {
        for p in [2, 3, 5, 7, 11, 13] {
            let h = CycloNum::uniformizer(p).unwrap();
            assert_eq!(h.h_valuation(), Valuation::Finite(1));
            let pp = CycloNum::from_rational(p, int(p as i64)).unwrap();
            assert_eq!(pp.h_valuation(), Valuation::Finite(p as i64 - 1));
            assert_eq!(
                CycloNum::one(p).unwrap().h_valuation(),
                Valuation::Finite(0)
            );
            assert_eq!(
                CycloNum::zero(p).unwrap().h_valuation(),
                Valuation::Infinity
            );
            let inv_p = CycloNum::from_rational(p, rat(1, p as i64)).unwrap();
            assert_eq!(inv_p.h_valuation(), Valuation::Finite(1 - p as i64));
        }
    }

    #[test]
    fn unit_w() {
        assert_eq!(compute_unit_w(3).unwrap(), c(3, &[0, -1]));
        assert_eq!(compute_unit_w(3).unwrap().display_in_h(), "-1 - h");
        assert_eq!(compute_unit_w(2).unwrap(), c(2, &[-1]));
        assert_eq!(
            compute_unit_w(5).unwrap().reduce_mod_h().unwrap().value(),
            4
        );
        assert_eq!(compute_unit_w(9), Err(Error::NotPrime(9)));
    }

    #[test]
    fn inverses() {
        let one_plus_zeta = c(3, &[1, 1]);
        // w = -zeta = (1 + zeta)^(-1).
        assert_eq!(one_plus_zeta.checked_inv().unwrap(), c(3, &[0, -1]));
        let a = c(7, &[2, -1, 0, 3, 1, 1]);
        assert_eq!(
            a.clone() * a.checked_inv().unwrap(),
            CycloNum::one(7).unwrap()
        );
        assert_eq!(
            CycloNum::zero(5).unwrap().checked_inv(),
            Err(Error::DivisionByZero)
        );
    }

    #[test]
    fn norms() {
        // N(h) = prod (zeta^k - 1) = (-1)^(p-1) Phi_p(1) = p for odd p.
        assert_eq!(CycloNum::uniformizer(5).unwrap().norm(), int(5));
        assert_eq!(CycloNum::uniformizer(2).unwrap().norm(), int(-2));
        assert_eq!(CycloNum::from_rational(5, int(3)).unwrap().norm(), int(81));
    }

    #[test]
    fn display_forms() {
        assert_eq!(c(3, &[-1, -1]).to_string(), "-1 - 1·ζ (p=3)");
        assert_eq!(c(3, &[0, -3]).to_string(), "-3·ζ (p=3)");
        assert_eq!(CycloNum::zero(5).unwrap().to_string(), "0 (p=5)");
        assert_eq!(CycloNum::uniformizer(5).unwrap().display_in_h(), "h");
    }
}
