//! Morphisms from the deformed laws to the multiplicative group and the
//! Kummer maps they induce.
//!
//! `alpha_h(u) = 1 + hu` identifies `u + v + huv` with multiplication; the
//! square of `beta_h(u) = sqrt((1 + hu)/(1 - hu))` does the same for the
//! velocity law. Transporting the `n`-th power map through them gives
//! `psi_n` and `phi_n`. All statements about `beta_h` are made through its
//! square or its rational inverse, so no square roots appear.

use num_traits::Zero;

use crate::arith::{Rational, Scalar};
use crate::error::{Error, Result};
use crate::laws::{lorentz_law, multiplicative_law, sos_law, symbolic_h, GroupLaw, H, U, V};
use crate::report::{Check, Report, Status};
use crate::symbolic::{bind, ratfunc_eq, RatFunc};

/// A rational map between group laws, in the variable `u` (and `h`).
#[derive(Clone, Debug)]
pub struct Morphism {
    name: String,
    source: GroupLaw,
    target: GroupLaw,
    map: RatFunc,
}

impl Morphism {
    /// Fails unless the map sends the source neutral to the target neutral.
    pub fn new(
        name: impl Into<String>,
        source: GroupLaw,
        target: GroupLaw,
        map: RatFunc,
    ) -> Result<Self> {
        let name = name.into();
        let e = RatFunc::constant(source.neutral().clone());
        let image = map.substitute(&bind(&[(U, e)]))?;
        if !ratfunc_eq(&image, &RatFunc::constant(target.neutral().clone())) {
            return Err(Error::InvalidArgument(format!(
                "{name} does not preserve the neutral element"
            )));
        }
        Ok(Self {
            name,
            source,
            target,
            map,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn source(&self) -> &GroupLaw {
        &self.source
    }

    pub fn target(&self) -> &GroupLaw {
        &self.target
    }

    pub fn map(&self) -> &RatFunc {
        &self.map
    }

    pub fn apply_symbolic(&self, x: &RatFunc) -> Result<RatFunc> {
        self.map.substitute(&bind(&[(U, x.clone())]))
    }

    pub fn apply_point<S: Scalar>(&self, x: &S) -> Result<S> {
        self.map.eval(&x.ctx(), &bind(&[(U, x.clone())]))
    }

    pub fn apply_point_at<S: Scalar>(&self, h: &S, x: &S) -> Result<S> {
        self.map
            .eval(&x.ctx(), &bind(&[(U, x.clone()), (H, h.clone())]))
    }

    /// `f(u *_src v) = f(u) *_tgt f(v)` as rational functions.
    pub fn is_homomorphism(&self) -> Result<bool> {
        let (u, v) = (RatFunc::var(U), RatFunc::var(V));
        let lhs = self.apply_symbolic(&self.source.compose_symbolic(&u, &v)?)?;
        let rhs = self
            .target
            .compose_symbolic(&self.apply_symbolic(&u)?, &self.apply_symbolic(&v)?)?;
        Ok(ratfunc_eq(&lhs, &rhs))
    }

    /// Pointwise homomorphism check at `(x, y)`; `None` when either side is
    /// undefined there.
    pub fn homomorphic_at<S: Scalar>(&self, h: &S, x: &S, y: &S) -> Option<bool> {
        let lhs = self
            .apply_point_at(h, &self.source.compose_points_at(h, x, y).ok()?)
            .ok()?;
        let fx = self.apply_point_at(h, x).ok()?;
        let fy = self.apply_point_at(h, y).ok()?;
        let rhs = self.target.compose_points_at(h, &fx, &fy).ok()?;
        Some(lhs == rhs)
    }

    /// Composite `other . self`.
    pub fn then(&self, other: &Morphism) -> Result<Morphism> {
        let map = other.apply_symbolic(&self.map)?;
        Morphism::new(
            format!("{} . {}", other.name, self.name),
            self.source.clone(),
            other.target.clone(),
            map,
        )
    }
}

fn one() -> RatFunc {
    RatFunc::int(1)
}

fn u() -> RatFunc {
    RatFunc::var(U)
}

fn require_invertible(h: &RatFunc) -> Result<()> {
    if h.is_zero() {
        Err(Error::NotInvertible(format!("h = {h}")))
    } else {
        Ok(())
    }
}

/// `alpha_h: u -> 1 + hu`, from `u + v + huv` to multiplication.
pub fn alpha(h: impl Into<RatFunc>) -> Morphism {
    let h = h.into();
    Morphism::new(
        format!("alpha(h = {h})"),
        sos_law(h.clone()),
        multiplicative_law(),
        one() + h * u(),
    )
    .expect("alpha(0) = 1")
}

/// `alpha_h^-1: v -> (v - 1)/h`; needs `h` invertible.
pub fn alpha_inverse(h: impl Into<RatFunc>) -> Result<Morphism> {
    let h = h.into();
    require_invertible(&h)?;
    Morphism::new(
        format!("alpha^-1(h = {h})"),
        multiplicative_law(),
        sos_law(h.clone()),
        (u() - one()).checked_div(&h)?,
    )
}

/// `beta_h^2: u -> (1 + hu)/(1 - hu)`, from the velocity law to
/// multiplication.
pub fn beta_squared(h: impl Into<RatFunc>) -> Morphism {
    let h = h.into();
    let hu = h.clone() * u();
    Morphism::new(
        format!("beta^2(h = {h})"),
        lorentz_law(h.clone()),
        multiplicative_law(),
        (one() + hu.clone())
            .checked_div(&(one() - hu))
            .expect("1 - hu is nonzero"),
    )
    .expect("beta^2(0) = 1")
}

/// `beta_h^-1: v -> (v^2 - 1) / (h (v^2 + 1))`, from multiplication to the
/// velocity law.
pub fn beta_inverse(h: impl Into<RatFunc>) -> Result<Morphism> {
    let h = h.into();
    require_invertible(&h)?;
    let v2 = u().pow(2);
    Morphism::new(
        format!("beta^-1(h = {h})"),
        multiplicative_law(),
        lorentz_law(h.clone()),
        (v2.clone() - one()).checked_div(&(h * (v2 + one())))?,
    )
}

/// Pointwise `beta_h^-1(v)` in any ring.
pub fn beta_inv<S: Scalar>(h: &S, v: &S) -> Result<S> {
    let ctx = v.ctx();
    let h_inv = h
        .inverse()
        .ok_or_else(|| Error::NotInvertible(format!("h = {h:?}")))?;
    let v2 = v.clone() * v.clone();
    let den = (v2.clone() + S::one_in(&ctx))
        .inverse()
        .ok_or_else(|| Error::NotInvertible(format!("v^2 + 1 at v = {v:?}")))?;
    Ok(h_inv * (v2 - S::one_in(&ctx)) * den)
}

/// Pointwise `beta_h^2(u) = (1 + hu)/(1 - hu)`.
pub fn beta_squared_point<S: Scalar>(h: &S, u: &S) -> Result<S> {
    let one = S::one_in(&u.ctx());
    let hu = h.clone() * u.clone();
    (one.clone() + hu.clone())
        .try_div(&(one - hu))
        .ok_or(Error::DivisionByZero)
}

/// `psi_n(u) = ((hu + 1)^n - 1) / h^n`, from `S_h` to `S_(h^n)`.
pub fn kummer_psi(h: impl Into<RatFunc>, n: u32) -> Result<Morphism> {
    let h = h.into();
    if n == 0 {
        return Err(Error::InvalidArgument("Kummer maps need n >= 1".into()));
    }
    if n >= 2 {
        require_invertible(&h)?;
    }
    let num = (h.clone() * u() + one()).pow(n) - one();
    let map = num.checked_div(&h.pow(n))?;
    Morphism::new(
        format!("psi_{n}(h = {h})"),
        sos_law(h.clone()),
        sos_law(h.pow(n)),
        map,
    )
}

/// Numerator and denominator of `phi_n`:
/// `((1 + hu)^n - (1 - hu)^n)` and `h^n ((1 + hu)^n + (1 - hu)^n)`.
pub fn phi_parts(h: &RatFunc, n: u32) -> (RatFunc, RatFunc) {
    let hu = h.clone() * u();
    let plus = (one() + hu.clone()).pow(n);
    let minus = (one() - hu).pow(n);
    (plus.clone() - minus.clone(), h.pow(n) * (plus + minus))
}

/// `phi_n`, from the velocity law with parameter `h` to the one with `h^n`;
/// the unique rational map with `beta_(h^n)^2 . phi_n = (beta_h^2)^n`.
pub fn kummer_phi(h: impl Into<RatFunc>, n: u32) -> Result<Morphism> {
    let h = h.into();
    if n == 0 {
        return Err(Error::InvalidArgument("Kummer maps need n >= 1".into()));
    }
    require_invertible(&h)?;
    let (num, den) = phi_parts(&h, n);
    let map = num.checked_div(&den)?;
    Morphism::new(
        format!("phi_{n}(h = {h})"),
        lorentz_law(h.clone()),
        lorentz_law(h.pow(n)),
        map,
    )
}

/// The formula with the argument `1 + nh` in place of `1 + hu`, kept only
/// to demonstrate that it cannot satisfy the defining square.
pub fn misprinted_phi(h: &RatFunc, n: u32) -> Result<RatFunc> {
    let nh = RatFunc::int(n as i64) * h.clone();
    let plus = (one() + nh.clone()).pow(n);
    let minus = (one() - nh).pow(n);
    (plus.clone() - minus.clone()).checked_div(&(h.pow(n) * (plus + minus)))
}

/// `alpha_(h^n)(psi_n(u)) = alpha_h(u)^n`.
pub fn psi_square_commutes(n: u32) -> Result<bool> {
    let h = symbolic_h();
    let psi = kummer_psi(h.clone(), n)?;
    let lhs = alpha(h.pow(n)).apply_symbolic(psi.map())?;
    let rhs = alpha(h).map().pow(n);
    Ok(ratfunc_eq(&lhs, &rhs))
}

/// `beta_(h^n)^2(phi_n(u)) = beta_h^2(u)^n`.
pub fn phi_square_commutes(n: u32) -> Result<bool> {
    let h = symbolic_h();
    let phi = kummer_phi(h.clone(), n)?;
    let lhs = beta_squared(h.pow(n)).apply_symbolic(phi.map())?;
    let rhs = beta_squared(h).map().pow(n);
    Ok(ratfunc_eq(&lhs, &rhs))
}

/// Same square for an arbitrary candidate map.
fn phi_candidate_commutes(candidate: &RatFunc, n: u32) -> Result<bool> {
    let h = symbolic_h();
    let lhs = beta_squared(h.pow(n)).apply_symbolic(candidate)?;
    Ok(ratfunc_eq(&lhs, &beta_squared(h).map().pow(n)))
}

/// `psi_m . psi_n = psi_(mn)`, where the outer map uses parameter `h^n`.
pub fn psi_functorial(m: u32, n: u32) -> Result<bool> {
    let h = symbolic_h();
    let inner = kummer_psi(h.clone(), n)?;
    let outer = kummer_psi(h.pow(n), m)?;
    let composite = inner.then(&outer)?;
    Ok(ratfunc_eq(composite.map(), kummer_psi(h, m * n)?.map()))
}

/// Symbolic verification of the morphisms and Kummer squares.
pub fn verify_morphisms() -> Result<Report> {
    let mut r = Report::new("morphisms");
    r.anchor("alpha_h(u) = 1 + hu, alpha_h^-1(v) = (v - 1)/h");
    r.anchor("(1 + hx)(1 + hy) = 1 + h(x + y + hxy)");
    r.anchor("beta_h(u) = (1 + hu)/sqrt(1 - h^2 u^2) = sqrt((1 + hu)/(1 - hu))");
    r.anchor("beta_h^-1(v) = (1/h)(v^2 - 1)/(v^2 + 1)");
    r.anchor("psi_n(u) = ((hu + 1)^n - 1)/h^n");
    r.anchor("phi_n defined by beta_(h^n) . phi_n = (.)^n . beta_h");

    let h = symbolic_h();
    let a = alpha(h.clone());
    r.push(Check::verdict(
        "alpha.homomorphism",
        "(1 + hu)(1 + hv) = 1 + h(u + v + huv)",
        a.is_homomorphism()?,
        format!("alpha_h(u) = {}", a.map()),
    ));
    let a_inv = alpha_inverse(h.clone())?;
    r.push(Check::verdict(
        "alpha.inverse",
        "alpha_h^-1 . alpha_h = id and alpha_h^-1 is a homomorphism",
        ratfunc_eq(&a_inv.apply_symbolic(a.map())?, &u()) && a_inv.is_homomorphism()?,
        "",
    ));

    let b2 = beta_squared(h.clone());
    r.push(Check::verdict(
        "beta_squared.homomorphism",
        "beta^2(u (+)_h v) = beta^2(u) beta^2(v)",
        b2.is_homomorphism()?,
        format!("beta_h^2(u) = {}", b2.map()),
    ));
    let b_inv = beta_inverse(h.clone())?;
    r.push(Check::verdict(
        "beta_inverse.round_trip",
        "beta^2(beta^-1(v)) = v^2",
        ratfunc_eq(&b2.apply_symbolic(b_inv.map())?, &u().pow(2)),
        format!("beta_h^-1(v) = {}", b_inv.map()),
    ));
    r.push(Check::verdict(
        "beta_inverse.homomorphism",
        "beta^-1(vw) = beta^-1(v) (+)_h beta^-1(w)",
        b_inv.is_homomorphism()?,
        "",
    ));
    let v = RatFunc::var(V);
    let hu = h.clone() * u();
    let hv = h.clone() * v.clone();
    let b = one() + hu.clone() * hv.clone();
    let factored = ((one() + hu.clone()) * (one() + hv.clone())).checked_div(&b)?;
    r.push(Check::verdict(
        "beta.numerator_identity",
        "1 + h (u (+)_h v) = (1 + hu)(1 + hv)/(1 + h^2 uv)",
        ratfunc_eq(
            &(one() + h.clone() * lorentz_law(h.clone()).compose().clone()),
            &factored,
        ),
        "",
    ));

    for n in 1..=7 {
        let psi = kummer_psi(h.clone(), n)?;
        r.push(Check::verdict(
            format!("psi.square.n{n}"),
            format!("alpha_(h^{n}) . psi_{n} = (.)^{n} . alpha_h, i.e. 1 + h^{n} psi_{n}(u) = (1 + hu)^{n}"),
            psi_square_commutes(n)?,
            format!("psi_{n}(u) = {}", psi.map()),
        ));
    }
    for n in 1..=4 {
        r.push(Check::verdict(
            format!("psi.homomorphism.n{n}"),
            format!("psi_{n}(u (+)'_h v) = psi_{n}(u) (+)'_(h^{n}) psi_{n}(v)"),
            kummer_psi(h.clone(), n)?.is_homomorphism()?,
            "",
        ));
    }
    let mut functorial = true;
    for m in 1..=3 {
        for n in 1..=3 {
            functorial &= psi_functorial(m, n)?;
        }
    }
    r.push(Check::verdict(
        "psi.functorial",
        "psi_m . psi_n = psi_(mn) for m, n <= 3",
        functorial,
        "",
    ));

    for n in [1, 2, 3, 4, 5] {
        r.push(Check::verdict(
            format!("phi.square.n{n}"),
            format!("beta_(h^{n})^2 . phi_{n} = (beta_h^2)^{n}"),
            phi_square_commutes(n)?,
            "",
        ));
    }
    for n in [2, 3] {
        r.push(Check::verdict(
            format!("phi.homomorphism.n{n}"),
            format!("phi_{n}(u (+)_h v) = phi_{n}(u) (+)_(h^{n}) phi_{n}(v)"),
            kummer_phi(h.clone(), n)?.is_homomorphism()?,
            "",
        ));
    }

    let mut printed_ok = true;
    for n in [2, 3, 5] {
        printed_ok &= phi_candidate_commutes(&misprinted_phi(&h, n)?, n)?;
    }
    r.push(Check::new(
        "phi.printed_argument",
        "printed phi_n / phi_p formula with argument (1 + nh), (1 + ph)",
        if printed_ok {
            Status::Pass
        } else {
            Status::Flagged
        },
        if printed_ok {
            "printed argument satisfies the defining square".to_string()
        } else {
            "the printed argument (1 + nh)^n (and (1 + ph)^n for n = p) does not depend on u and \
             fails the defining square for n = 2, 3, 5; the square forces (1 + hu)^n and (1 - hu)^n"
                .to_string()
        },
    ));
    Ok(r)
}

/// `phi_n(u)` evaluated in any ring where `h` is invertible.
pub fn phi_point<S: Scalar>(h: &S, n: u32, u: &S) -> Result<S> {
    let one = S::one_in(&u.ctx());
    let hu = h.clone() * u.clone();
    let plus = (one.clone() + hu.clone()).pow(n);
    let minus = (one - hu).pow(n);
    let den = h.pow(n) * (plus.clone() + minus.clone());
    (plus - minus).try_div(&den).ok_or(Error::DivisionByZero)
}

/// `psi_n(u)` evaluated in any ring where `h` is invertible.
pub fn psi_point<S: Scalar>(h: &S, n: u32, u: &S) -> Result<S> {
    let one = S::one_in(&u.ctx());
    let num = (h.clone() * u.clone() + one.clone()).pow(n) - one;
    num.try_div(&h.pow(n)).ok_or(Error::DivisionByZero)
}

/// Polynomial `psi_n` written out as `sum_{i >= 1} C(n, i) h^(i - n) u^i`,
/// with a rational `h`.
pub fn psi_coefficients(h: &Rational, n: u32) -> Result<Vec<Rational>> {
    if h.is_zero() {
        return Err(Error::NotInvertible("h = 0".into()));
    }
    let mut out = vec![Rational::zero(); n as usize + 1];
    for (i, slot) in out.iter_mut().enumerate().skip(1) {
        let c = Rational::from_integer(crate::arith::rational::binomial(n as u64, i as u64));
        *slot = c * Scalar::pow(&h.recip(), n - i as u32);
    }
    Ok(out)
}

impl PartialEq for Morphism {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && ratfunc_eq(&self.map, &other.map)
    }
}
