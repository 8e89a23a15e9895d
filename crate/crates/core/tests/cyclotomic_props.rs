//! Residue map, valuation and the special fiber of psi_p at the level of
//! points.

use kas_core::arith::{CycloNum, Valuation};
use kas_core::cyclotomic::{artin_schreier, eval_cyclo_poly, psi_coefficients, verify_cyclotomic};
use kas_core::report::Status;
use proptest::prelude::*;
use std::time::Instant;

const PRIMES: [u64; 4] = [3, 5, 7, 11];

fn integral(p: u64) -> impl Strategy<Value = CycloNum> {
    prop::collection::vec(-6i64..=6, (p - 1) as usize)
        .prop_map(move |c| CycloNum::from_ints(p, &c).unwrap())
}

fn add_val(a: Valuation, b: Valuation) -> Valuation {
    match (a, b) {
        (Valuation::Finite(x), Valuation::Finite(y)) => Valuation::Finite(x + y),
        _ => Valuation::Infinity,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn reduction_is_ring_hom((x, y) in (0usize..4).prop_flat_map(|i| (integral(PRIMES[i]), integral(PRIMES[i])))) {
        let (rx, ry) = (x.reduce_mod_h().unwrap(), y.reduce_mod_h().unwrap());
        prop_assert_eq!((x.clone() + y.clone()).reduce_mod_h().unwrap(), rx + ry);
        prop_assert_eq!((x.clone() * y.clone()).reduce_mod_h().unwrap(), rx * ry);
        prop_assert_eq!(add_val(x.h_valuation(), y.h_valuation()), (x * y).h_valuation());
    }

    #[test]
    fn psi_fiber_pointwise_p3(x in integral(3)) {
        let c = psi_coefficients(3).unwrap();
        let y = eval_cyclo_poly(&c, &x).unwrap();
        prop_assert!(y.is_integral());
        prop_assert_eq!(y.reduce_mod_h().unwrap(), artin_schreier(3, x.reduce_mod_h().unwrap()).unwrap());
    }

    #[test]
    fn psi_fiber_pointwise_p5(x in integral(5)) {
        let c = psi_coefficients(5).unwrap();
        let y = eval_cyclo_poly(&c, &x).unwrap();
        prop_assert_eq!(y.reduce_mod_h().unwrap(), artin_schreier(5, x.reduce_mod_h().unwrap()).unwrap());
    }

    #[test]
    fn psi_homomorphism_p3(x in integral(3), y in integral(3)) {
        let p = 3;
        let h = CycloNum::uniformizer(p).unwrap();
        let hp = h.pow(p as u32);
        let c = psi_coefficients(p).unwrap();
        let xy = x.clone() + y.clone() + h * x.clone() * y.clone();
        let (a, b) = (eval_cyclo_poly(&c, &x).unwrap(), eval_cyclo_poly(&c, &y).unwrap());
        prop_assert_eq!(eval_cyclo_poly(&c, &xy).unwrap(), a.clone() + b.clone() + hp * a * b);
    }
}

#[test]
fn valuation_of_uniformizer_powers() {
    for p in PRIMES {
        let h = CycloNum::uniformizer(p).unwrap();
        for k in 0..5 {
            assert_eq!(h.pow(k).h_valuation(), Valuation::Finite(k as i64));
        }
        let inv = h.checked_inv().unwrap();
        assert_eq!(inv.h_valuation(), Valuation::Finite(-1));
        assert_eq!(
            CycloNum::zero(p).unwrap().h_valuation(),
            Valuation::Infinity
        );
    }
}

#[test]
fn full_prime_set_is_fast_and_green() {
    let t = Instant::now();
    let r = verify_cyclotomic(&[2, 3, 5, 7, 11, 13]).unwrap();
    assert!(r.all_passed(), "{}", r.render_text());
    assert_eq!(r.count(Status::Flagged), 0);
    assert!(t.elapsed().as_secs() < 30);
}
