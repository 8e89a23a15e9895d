//! Sparse multivariate polynomials with rational coefficients.
//!
//! Variables are named. Each polynomial carries its own sorted variable
//! list and exponent vectors of matching arity; binary operations first
//! lift both operands to the union of their variable lists, so callers can
//! freely mix polynomials built in different variables.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::arith::{Rational, Scalar};
use crate::error::{Error, Result};

type Exponents = Vec<u32>;

#[derive(Clone, Debug)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Exponents, Rational>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        Self {
            vars: Vec::new(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        Self {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn int(n: i64) -> Self {
        Self::constant(Rational::from_integer(n.into()))
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Rational::one());
        Self {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds from `(coefficient, [(variable, exponent)])` pairs.
    pub fn from_terms<'a>(
        terms: impl IntoIterator<Item = (Rational, Vec<(&'a str, u32)>)>,
    ) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, (c, mono)| {
            let t = mono
                .into_iter()
                .fold(Self::constant(c), |m, (v, e)| m * Self::var(v).pow(e));
            acc + t
        })
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Rational)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the polynomial has no variable terms.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (e, c) = self.terms.iter().next()?;
                e.iter().all(|&x| x == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    /// Variables that occur with positive exponent somewhere.
    pub fn support(&self) -> Vec<&str> {
        self.vars
            .iter()
            .enumerate()
            .filter(|(i, _)| self.terms.keys().any(|e| e[*i] > 0))
            .map(|(_, v)| v.as_str())
            .collect()
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    /// Coefficient of the greatest exponent vector in the stored order.
    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.values().next_back()
    }

    /// Re-expresses over a sorted superset of the current variables.
    pub(crate) fn lift_to(&self, target: &[String]) -> Self {
        if self.vars == target {
            return self.clone();
        }
        let map: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                target
                    .iter()
                    .position(|t| t == v)
                    .expect("target covers vars")
            })
            .collect();
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut ne = vec![0; target.len()];
                for (i, &x) in e.iter().enumerate() {
                    ne[map[i]] = x;
                }
                (ne, c.clone())
            })
            .collect();
        Self {
            vars: target.to_vec(),
            terms,
        }
    }

    fn union_vars(a: &[String], b: &[String]) -> Vec<String> {
        let mut out: Vec<String> = a.iter().chain(b).cloned().collect();
        out.sort();
        out.dedup();
        out
    }

    fn aligned(&self, other: &Self) -> (Self, Self) {
        let vars = Self::union_vars(&self.vars, &other.vars);
        (self.lift_to(&vars), other.lift_to(&vars))
    }

    fn add_term(terms: &mut BTreeMap<Exponents, Rational>, e: Exponents, c: Rational) {
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(slot) => {
                if !c.is_zero() {
                    slot.insert(c);
                }
            }
            Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self {
                vars: self.vars.clone(),
                terms: BTreeMap::new(),
            };
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x * c)).collect();
        Self {
            vars: self.vars.clone(),
            terms,
        }
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Evaluates in any scalar ring. Every variable in the support must be
    /// bound; rational coefficients must embed into the ring.
    pub fn eval<S: Scalar>(&self, ctx: &S::Ctx, bindings: &BTreeMap<&str, S>) -> Result<S> {
        let mut values = Vec::with_capacity(self.vars.len());
        for (i, v) in self.vars.iter().enumerate() {
            let used = self.terms.keys().any(|e| e[i] > 0);
            match bindings.get(v.as_str()) {
                Some(x) => values.push(Some(x.clone())),
                None if used => return Err(Error::UnboundVariable(v.clone())),
                None => values.push(None),
            }
        }
        let mut acc = S::zero_in(ctx);
        for (e, c) in &self.terms {
            let mut t =
                S::from_rational(ctx, c).ok_or_else(|| Error::NotEmbeddable(c.to_string()))?;
            for (i, &x) in e.iter().enumerate() {
                if x > 0 {
                    t = t * values[i].as_ref().expect("bound").pow(x);
                }
            }
            acc = acc + t;
        }
        Ok(acc)
    }

    /// Evaluates with every variable mapped to another polynomial.
    /// Unbound variables are left in place.
    pub fn compose(&self, bindings: &BTreeMap<&str, MultiPoly>) -> MultiPoly {
        let images: Vec<MultiPoly> = self
            .vars
            .iter()
            .map(|v| {
                bindings
                    .get(v.as_str())
                    .cloned()
                    .unwrap_or_else(|| Self::var(v))
            })
            .collect();
        self.combine(
            &images,
            &vec![0; self.vars.len()],
            &vec![None; self.vars.len()],
        )
    }

    /// Homogenized substitution: with `x_i -> num_i / den_i` and per-variable
    /// exponent ceilings `top_i`, returns
    /// `sum c * prod num_i^a_i * den_i^(top_i - a_i)`.
    pub(crate) fn combine(
        &self,
        nums: &[MultiPoly],
        tops: &[u32],
        dens: &[Option<MultiPoly>],
    ) -> MultiPoly {
        let mut cache: Vec<BTreeMap<u32, MultiPoly>> = vec![BTreeMap::new(); self.vars.len()];
        let mut den_cache: Vec<BTreeMap<u32, MultiPoly>> = vec![BTreeMap::new(); self.vars.len()];
        let mut acc = MultiPoly::zero();
        for (e, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone());
            for (i, &a) in e.iter().enumerate() {
                if a > 0 {
                    let f = cache[i].entry(a).or_insert_with(|| nums[i].pow(a));
                    t = &t * f;
                }
                if let Some(d) = &dens[i] {
                    let k = tops[i] - a;
                    if k > 0 {
                        let f = den_cache[i].entry(k).or_insert_with(|| d.pow(k));
                        t = &t * f;
                    }
                }
            }
            acc = acc + t;
        }
        acc
    }
}

/// Elementary symmetric polynomial `sigma_k` in the given variables.
pub fn elementary_symmetric(k: usize, vars: &[&str]) -> Result<MultiPoly> {
    if k > vars.len() {
        return Err(Error::OutOfRange {
            index: k,
            max: vars.len(),
        });
    }
    fn go(k: usize, vars: &[&str]) -> MultiPoly {
        if k == 0 {
            return MultiPoly::one();
        }
        if vars.len() < k {
            return MultiPoly::zero();
        }
        let (first, rest) = vars.split_first().expect("non-empty");
        go(k, rest) + MultiPoly::var(first) * go(k - 1, rest)
    }
    Ok(go(k, vars))
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        (self - other).is_zero()
    }
}

impl Eq for MultiPoly {}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            MultiPoly::add_term(&mut a.terms, e, c);
        }
        a
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        let (mut a, b) = self.aligned(rhs);
        for (e, c) in b.terms {
            MultiPoly::add_term(&mut a.terms, e, -c);
        }
        a
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    #[allow(clippy::suspicious_arithmetic_impl)] // exponents add when monomials multiply
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        let (a, b) = self.aligned(rhs);
        let mut terms = BTreeMap::new();
        for (ea, ca) in &a.terms {
            for (eb, cb) in &b.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                MultiPoly::add_term(&mut terms, e, ca * cb);
            }
        }
        MultiPoly {
            vars: a.vars,
            terms,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(mut self) -> MultiPoly {
        for c in self.terms.values_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if n == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let mag = c.abs();
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(x, _)| **x > 0)
                .map(|(&x, v)| {
                    if x == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{x}")
                    }
                })
                .collect();
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{mag}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::{int, rat};

    fn v(name: &str) -> MultiPoly {
        MultiPoly::var(name)
    }

    #[test]
    fn arithmetic_across_universes() {
        let lhs = (v("u") + v("v")) * (v("u") - v("v"));
        let rhs = v("u").pow(2) - v("v").pow(2);
        assert_eq!(lhs, rhs);
        assert!((v("w") - v("w")).is_zero());
        assert_ne!(v("u"), v("v"));
    }

    #[test]
    fn symmetric_functions() {
        assert_eq!(
            elementary_symmetric(1, &["u", "v"]).unwrap(),
            v("u") + v("v")
        );
        assert_eq!(
            elementary_symmetric(2, &["u", "v", "w"]).unwrap(),
            v("u") * v("v") + v("u") * v("w") + v("v") * v("w")
        );
        assert_eq!(
            elementary_symmetric(0, &["u", "v"]).unwrap(),
            MultiPoly::one()
        );
        assert_eq!(
            elementary_symmetric(3, &["u", "v"]),
            Err(Error::OutOfRange { index: 3, max: 2 })
        );
    }

    #[test]
    fn evaluation() {
        let f = v("u").pow(2) * v("h") + MultiPoly::constant(rat(1, 2));
        let mut b = BTreeMap::new();
        b.insert("u", int(3));
        b.insert("h", rat(1, 3));
        assert_eq!(f.eval(&(), &b).unwrap(), rat(7, 2));
        b.remove("h");
        assert_eq!(f.eval(&(), &b), Err(Error::UnboundVariable("h".into())));
    }

    #[test]
    fn polynomial_composition() {
        let f = v("u") * v("v") + v("u");
        let mut b = BTreeMap::new();
        b.insert("u", v("x") + MultiPoly::one());
        let g = f.compose(&b);
        assert_eq!(g, v("x") * v("v") + v("v") + v("x") + MultiPoly::one());
    }

    #[test]
    fn display() {
        let f = v("u").pow(3) - v("u") + MultiPoly::int(2);
        assert_eq!(f.to_string(), "u^3 - u + 2");
        assert_eq!(MultiPoly::zero().to_string(), "0");
    }

    #[test]
    fn degrees_and_support() {
        let f = v("u").pow(3) * v("h") + v("v");
        assert_eq!(f.degree_in("u"), 3);
        assert_eq!(f.degree_in("t"), 0);
        assert_eq!(f.total_degree(), Some(4));
        let g = f.clone() - v("v");
        assert_eq!(g.support(), vec!["h", "u"]);
    }
}
