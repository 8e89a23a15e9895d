//! Specialization of the Kummer maps over `Z[zeta_p]` with `h = zeta - 1`.
//!
//! `h` is a uniformizer above `p` with `h^(p-1) = w p`, `w` a unit congruent
//! to `-1`. Hence `psi_p` has integral coefficients and its reduction mod
//! `h` is the Artin-Schreier polynomial `u^p - u`; for odd `p` the same holds
//! for `phi_p`, whose denominator reduces to the constant 2.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::rational::binomial;
use crate::arith::{is_prime, CycloNum, FpElem, FpPoly, Rational, Scalar, Valuation};
use crate::error::{Error, Result};
use crate::report::{Check, Report};

/// `u^p - u` in `F_p`.
pub fn artin_schreier(p: u64, u: FpElem) -> Result<FpElem> {
    if u.modulus() != p {
        return Err(Error::ModulusMismatch {
            left: p,
            right: u.modulus(),
        });
    }
    Ok(u.pow_u64(p) - u)
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NotPrime(p))
    }
}

#[derive(Clone, Debug)]
pub struct SpecializationReport {
    pub p: u64,
    pub w: CycloNum,
    /// Coefficients of `psi_p`, index = power of `u`.
    pub psi_coeffs: Vec<CycloNum>,
    pub psi_mod_h: Option<FpPoly>,
    pub phi_num_mod_h: Option<FpPoly>,
    pub phi_den_mod_h: Option<FpPoly>,
    pub phi_mod_h: Option<FpPoly>,
    pub verdicts: Vec<(String, bool)>,
}

impl SpecializationReport {
    pub fn all_passed(&self) -> bool {
        self.verdicts.iter().all(|(_, ok)| *ok)
    }

    pub fn verdict(&self, name: &str) -> Option<bool> {
        self.verdicts
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, ok)| *ok)
    }
}

/// `C(n, i) h^(i - n)` in `Q(zeta_p)`, for `0 <= i <= n`.
fn binomial_over_h(n: u64, i: u64, h_inv: &CycloNum) -> CycloNum {
    let c = Rational::from_integer(binomial(n, i));
    h_inv.pow((n - i) as u32).scale(&c)
}

/// Coefficients of `psi_p(u) = ((hu + 1)^p - 1)/h^p` over `Q(zeta_p)`.
pub fn psi_coefficients(p: u64) -> Result<Vec<CycloNum>> {
    check_prime(p)?;
    let h_inv = CycloNum::uniformizer(p)?.checked_inv()?;
    let mut out = vec![CycloNum::zero(p)?];
    out.extend((1..=p).map(|i| binomial_over_h(p, i, &h_inv)));
    Ok(out)
}

/// Numerator `N = ((1 + hu)^p - (1 - hu)^p)/h^p` and denominator
/// `D = (1 + hu)^p + (1 - hu)^p` of `phi_p`, as coefficient vectors.
pub fn phi_coefficients(p: u64) -> Result<(Vec<CycloNum>, Vec<CycloNum>)> {
    check_prime(p)?;
    let h = CycloNum::uniformizer(p)?;
    let h_inv = h.checked_inv()?;
    let two = Rational::from_integer(BigInt::from(2));
    let zero = CycloNum::zero(p)?;
    let mut num = Vec::with_capacity(p as usize + 1);
    let mut den = Vec::with_capacity(p as usize + 1);
    for i in 0..=p {
        // (1 + hu)^p -+ (1 - hu)^p keeps the odd (resp. even) terms twice.
        if i % 2 == 1 {
            num.push(binomial_over_h(p, i, &h_inv).scale(&two));
            den.push(zero.clone());
        } else {
            num.push(zero.clone());
            let c = Rational::from_integer(binomial(p, i));
            den.push(h.pow(i as u32).scale(&(c * &two)));
        }
    }
    Ok((num, den))
}

fn reduce_all(p: u64, coeffs: &[CycloNum]) -> Result<FpPoly> {
    let residues = coeffs
        .iter()
        .map(CycloNum::reduce_mod_h)
        .collect::<Result<Vec<_>>>()?;
    Ok(FpPoly::new(p, residues))
}

/// Evaluates a polynomial with cyclotomic coefficients by Horner's rule.
pub fn eval_cyclo_poly(coeffs: &[CycloNum], x: &CycloNum) -> Result<CycloNum> {
    let mut acc = CycloNum::zero(x.prime())?;
    for c in coeffs.iter().rev() {
        acc = acc.checked_mul(x)?.checked_add(c)?;
    }
    Ok(acc)
}

fn unit_w(p: u64) -> Result<CycloNum> {
    let h = CycloNum::uniformizer(p)?;
    Ok(h.pow((p - 1) as u32)
        .scale(&Rational::new(BigInt::one(), BigInt::from(p))))
}

fn ramification_verdicts(p: u64) -> Result<(CycloNum, Vec<(String, bool)>)> {
    let w = unit_w(p)?;
    let p_elem = CycloNum::from_rational(p, Rational::from_integer(BigInt::from(p)))?;
    let mut v = vec![(
        "valuation".to_string(),
        p_elem.h_valuation() == Valuation::Finite(p as i64 - 1),
    )];
    let integral = w.is_integral();
    let unit = integral && w.is_unit() && w.checked_inv().map(|i| i.is_integral()).unwrap_or(false);
    v.push(("w_integral".to_string(), integral));
    v.push(("w_unit".to_string(), unit));
    let residue_ok = integral && w.reduce_mod_h()?.value() == p - 1;
    v.push(("w_residue".to_string(), residue_ok));
    Ok((w, v))
}

/// Checks of `h^(p-1) = w p`: `v_h(p) = p - 1`, `w` an integral unit and
/// `w = -1 mod h`.
pub fn verify_ramification(p: u64) -> Result<SpecializationReport> {
    check_prime(p)?;
    let (w, verdicts) = ramification_verdicts(p)?;
    Ok(SpecializationReport {
        p,
        w,
        psi_coeffs: Vec::new(),
        psi_mod_h: None,
        phi_num_mod_h: None,
        phi_den_mod_h: None,
        phi_mod_h: None,
        verdicts,
    })
}

/// Ramification plus the `psi_p` part: integral coefficients and special
/// fiber `u^p - u`.
pub fn specialize_psi(p: u64) -> Result<SpecializationReport> {
    let mut r = verify_ramification(p)?;
    let coeffs = psi_coefficients(p)?;
    let integral = coeffs.iter().all(CycloNum::is_integral);
    r.verdicts.push(("psi_integral".into(), integral));
    let one = CycloNum::one(p)?;
    r.verdicts.push((
        "psi_extreme_coeffs".into(),
        coeffs[0].is_zero() && coeffs[p as usize] == one,
    ));
    if integral {
        let fiber = reduce_all(p, &coeffs)?;
        r.verdicts
            .push(("psi_fiber".into(), fiber == FpPoly::artin_schreier(p)));
        r.psi_mod_h = Some(fiber);
    } else {
        r.verdicts.push(("psi_fiber".into(), false));
    }
    r.psi_coeffs = coeffs;
    Ok(r)
}

/// `specialize_psi` plus the `phi_p` part; `p = 2` is rejected because the
/// denominator of `phi_2` vanishes mod `h`.
pub fn specialize_phi(p: u64) -> Result<SpecializationReport> {
    check_prime(p)?;
    if p == 2 {
        return Err(Error::InvalidArgument(
            "phi_p needs p odd: its denominator vanishes mod h for p = 2".into(),
        ));
    }
    let mut r = specialize_psi(p)?;
    let (num, den) = phi_coefficients(p)?;
    let num_integral = num.iter().all(CycloNum::is_integral);
    let den_integral = den.iter().all(CycloNum::is_integral);
    r.verdicts.push(("phi_num_integral".into(), num_integral));
    r.verdicts.push(("phi_den_integral".into(), den_integral));
    r.verdicts.push((
        "phi_at_zero".into(),
        num[0].is_zero() && den[0].as_rational() == Some(&Rational::from_integer(BigInt::from(2))),
    ));
    if !(num_integral && den_integral) {
        for name in ["phi_num_fiber", "phi_den_fiber", "phi_fiber"] {
            r.verdicts.push((name.into(), false));
        }
        return Ok(r);
    }
    let n_mod = reduce_all(p, &num)?;
    let d_mod = reduce_all(p, &den)?;
    let two = FpElem::new(p, 2)?;
    let as_poly = FpPoly::artin_schreier(p);
    r.verdicts
        .push(("phi_num_fiber".into(), n_mod == as_poly.scale(two)));
    let d_const = d_mod.constant_term();
    r.verdicts
        .push(("phi_den_fiber".into(), d_const == Some(two)));
    let quotient = d_const
        .and_then(|d| d.inverse())
        .map(|inv| n_mod.scale(inv));
    r.verdicts
        .push(("phi_fiber".into(), quotient.as_ref() == Some(&as_poly)));
    r.phi_num_mod_h = Some(n_mod);
    r.phi_den_mod_h = Some(d_mod);
    r.phi_mod_h = quotient;
    Ok(r)
}

/// `specialize_phi` for odd `p`, `specialize_psi` for `p = 2`.
pub fn specialize(p: u64) -> Result<SpecializationReport> {
    if p == 2 {
        specialize_psi(p)
    } else {
        specialize_phi(p)
    }
}

fn describe(name: &str, p: u64) -> String {
    match name {
        "valuation" => format!("v_h({p}) = {}", p - 1),
        "w_integral" => format!("w = h^{} / {p} is integral", p - 1),
        "w_unit" => "w is a unit of Z[zeta_p]".into(),
        "w_residue" => "w = -1 mod h".into(),
        "psi_integral" => format!("psi_{p} has coefficients in Z[zeta_{p}]"),
        "psi_extreme_coeffs" => "coefficient of u^p is 1, constant term is 0".into(),
        "psi_fiber" => format!("psi_{p} mod h = u^{p} - u"),
        "phi_num_integral" => format!("numerator of phi_{p} is integral"),
        "phi_den_integral" => format!("denominator of phi_{p} is integral"),
        "phi_at_zero" => "N(0) = 0 and D(0) = 2".into(),
        "phi_num_fiber" => format!("N mod h = 2u^{p} - 2u"),
        "phi_den_fiber" => "D mod h = 2".into(),
        "phi_fiber" => format!("phi_{p} mod h = N/D mod h = u^{p} - u"),
        other => other.to_string(),
    }
}

/// Extra detail lines reproducing the explicit `p = 3` computation.
fn p3_details(r: &SpecializationReport) -> Result<Vec<Check>> {
    let h = CycloNum::uniformizer(3)?;
    let zeta = CycloNum::zeta(3)?;
    let h2 = h.pow(2);
    let minus_3_zeta = zeta.scale(&Rational::from_integer(BigInt::from(-3)));
    let w_expected = -(CycloNum::one(3)? + h.clone());
    Ok(vec![
        Check::verdict(
            "p3.h_squared",
            "h^2 = -3 zeta",
            h2 == minus_3_zeta,
            format!("h^2 = {h2}"),
        ),
        Check::verdict(
            "p3.w_explicit",
            "w = -zeta = (1 + zeta)^-1 = -1 - h",
            r.w == w_expected
                && r.w == -zeta.clone()
                && (CycloNum::one(3)? + zeta).checked_inv()? == r.w,
            format!("w = {} = {}", r.w, r.w.display_in_h()),
        ),
    ])
}

/// Full cyclotomic suite over the given primes.
pub fn verify_cyclotomic(primes: &[u64]) -> Result<Report> {
    let mut report = Report::new("cyclotomic");
    report.anchor("h = zeta_p - 1, h^(p-1) = w p, w = -1 mod h");
    report.anchor("psi_p mod h = u^p - u (Artin-Schreier)");
    report.anchor("phi_p mod h = u^p - u for odd p");
    for &p in primes {
        check_prime(p)?;
        let r = specialize(p)?;
        for (name, ok) in &r.verdicts {
            let detail = match name.as_str() {
                "w_residue" => format!("w = {} = {}", r.w, r.w.display_in_h()),
                "psi_fiber" => r
                    .psi_mod_h
                    .as_ref()
                    .map(|f| format!("fiber: {f}"))
                    .unwrap_or_default(),
                "phi_num_fiber" => r
                    .phi_num_mod_h
                    .as_ref()
                    .map(|f| format!("N mod h = {f}"))
                    .unwrap_or_default(),
                "phi_den_fiber" => r
                    .phi_den_mod_h
                    .as_ref()
                    .map(|f| format!("D mod h = {f}"))
                    .unwrap_or_default(),
                "phi_fiber" => r
                    .phi_mod_h
                    .as_ref()
                    .map(|f| format!("fiber: {f}"))
                    .unwrap_or_default(),
                _ => String::new(),
            };
            report.push(Check::verdict(
                format!("p{p}.{name}"),
                describe(name, p),
                *ok,
                detail,
            ));
        }
        if p == 2 {
            report.push(Check::verdict(
                "p2.phi_inapplicable",
                "phi_2 has no special fiber: its denominator vanishes mod h",
                specialize_phi(2).is_err(),
                "inapplicable for p = 2",
            ));
        }
        if p == 3 {
            for c in p3_details(&r)? {
                report.push(c);
            }
        }
        let (pointwise_ok, samples) = pointwise_fiber_check(&r)?;
        report.push(Check::verdict(
            format!("p{p}.psi_pointwise"),
            format!("psi_{p}(x) mod h = (x mod h)^{p} - (x mod h) on integral samples"),
            pointwise_ok,
            format!("{samples} samples"),
        ));
    }
    Ok(report)
}

/// Deterministic integral samples `a + b zeta + c zeta^2` with small
/// coefficients.
pub fn sample_integers(p: u64) -> Result<Vec<CycloNum>> {
    let mut out = Vec::new();
    for a in -2i64..=2 {
        for b in -1i64..=1 {
            let raw = if p == 2 {
                vec![a + b]
            } else {
                vec![a, b, a - b]
            };
            out.push(CycloNum::from_ints(p, &raw)?);
        }
    }
    Ok(out)
}

fn pointwise_fiber_check(r: &SpecializationReport) -> Result<(bool, usize)> {
    if !r.psi_coeffs.iter().all(CycloNum::is_integral) {
        return Ok((false, 0));
    }
    let xs = sample_integers(r.p)?;
    let mut ok = true;
    for x in &xs {
        let y = eval_cyclo_poly(&r.psi_coeffs, x)?;
        ok &= y.is_integral() && y.reduce_mod_h()? == artin_schreier(r.p, x.reduce_mod_h()?)?;
    }
    Ok((ok, xs.len()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;
    use crate::report::Status;

    fn fp(p: u64, v: i64) -> FpElem {
        FpElem::new(p, v).unwrap()
    }

    #[test]
    fn artin_schreier_values() {
        assert_eq!(artin_schreier(5, fp(5, 0)).unwrap().value(), 0);
        assert_eq!(artin_schreier(5, fp(5, 1)).unwrap().value(), 0);
        for x in 0..5 {
            assert_eq!(artin_schreier(5, fp(5, x)).unwrap().value(), 0);
        }
        assert!(matches!(
            artin_schreier(3, fp(5, 1)),
            Err(Error::ModulusMismatch { .. })
        ));
    }

    #[test]
    fn psi_two_is_u2_minus_u() {
        let c = psi_coefficients(2).unwrap();
        let r: Vec<_> = c
            .iter()
            .map(|x| x.as_rational().cloned().unwrap())
            .collect();
        assert_eq!(r, vec![int(0), int(-1), int(1)]);
        let s = specialize_psi(2).unwrap();
        assert!(s.all_passed(), "{:?}", s.verdicts);
        assert_eq!(s.w, CycloNum::from_ints(2, &[-1]).unwrap());
    }

    #[test]
    fn psi_three_explicit() {
        let c = psi_coefficients(3).unwrap();
        let zeta = CycloNum::zeta(3).unwrap();
        let h = CycloNum::uniformizer(3).unwrap();
        let z2 = zeta.pow(2);
        assert_eq!(c[3], CycloNum::one(3).unwrap());
        assert_eq!(c[2], -(z2.clone() * h));
        assert_eq!(c[1], -z2);
        assert_eq!(c[2], CycloNum::from_ints(3, &[-2, -1]).unwrap());
        assert_eq!(c[1], CycloNum::from_ints(3, &[1, 1]).unwrap());
        let s = specialize_psi(3).unwrap();
        assert_eq!(s.psi_mod_h.unwrap().to_string(), "u^3 - u");
    }

    #[test]
    fn phi_three_and_five() {
        let s = specialize_phi(3).unwrap();
        assert!(s.all_passed(), "{:?}", s.verdicts);
        assert_eq!(
            s.phi_num_mod_h.as_ref().unwrap(),
            &FpPoly::artin_schreier(3).scale(fp(3, 2))
        );
        assert_eq!(
            s.phi_den_mod_h.as_ref().unwrap().constant_term(),
            Some(fp(3, 2))
        );
        assert_eq!(s.phi_mod_h.unwrap().to_string(), "u^3 - u");
        let s5 = specialize_phi(5).unwrap();
        assert_eq!(s5.phi_mod_h.unwrap(), FpPoly::artin_schreier(5));
        assert!(matches!(specialize_phi(2), Err(Error::InvalidArgument(_))));
        assert!(matches!(specialize_phi(9), Err(Error::NotPrime(9))));
    }

    #[test]
    fn ramification_seven() {
        let r = verify_ramification(7).unwrap();
        assert!(r.all_passed(), "{:?}", r.verdicts);
        let r3 = verify_ramification(3).unwrap();
        assert_eq!(r3.w.display_in_h(), "-1 - h");
    }

    #[test]
    fn cyclotomic_suite() {
        let r = verify_cyclotomic(&[2, 3, 5, 7]).unwrap();
        assert!(r.all_passed(), "{}", r.render_text());
        assert_eq!(r.count(Status::Flagged), 0);
        let text = r.render_text();
        assert!(text.contains("h^2 = -3·ζ (p=3)"), "{text}");
        assert!(text.contains("= -1 - h"), "{text}");
    }

    #[test]
    fn psi_pointwise_homomorphism() {
        let p = 5;
        let h = CycloNum::uniformizer(p).unwrap();
        let hp = h.pow(p as u32);
        let c = psi_coefficients(p).unwrap();
        let xs = sample_integers(p).unwrap();
        for x in xs.iter().take(6) {
            for y in xs.iter().skip(4).take(4) {
                let xy = x.clone() + y.clone() + h.clone() * x.clone() * y.clone();
                let lhs = eval_cyclo_poly(&c, &xy).unwrap();
                let (a, b) = (
                    eval_cyclo_poly(&c, x).unwrap(),
                    eval_cyclo_poly(&c, y).unwrap(),
                );
                let rhs = a.clone() + b.clone() + hp.clone() * a * b;
                assert_eq!(lhs, rhs);
            }
        }
        assert!(h.inverse().is_some());
    }
}
