//! Evaluation is a ring homomorphism, so identities proved with
//! `ratfunc_eq` must survive evaluation at random points.

use kas_core::arith::{rat, Rational};
use kas_core::symbolic::{bind, elementary_symmetric, ratfunc_eq, MultiPoly, RatFunc};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-30i64..=30, 1i64..=11).prop_map(|(n, d)| rat(n, d))
}

/// Small random polynomial in `x, y`.
fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec(((-5i64..=5), 0u32..3, 0u32..3), 1..5).prop_map(|terms| {
        MultiPoly::from_terms(
            terms
                .into_iter()
                .map(|(c, i, j)| (rat(c, 1), vec![("x", i), ("y", j)])),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn eval_respects_ring_ops(f in poly(), g in poly(), x in rational(), y in rational()) {
        let b = bind(&[("x", x), ("y", y)]);
        let (fv, gv): (Rational, Rational) = (f.eval(&(), &b).unwrap(), g.eval(&(), &b).unwrap());
        prop_assert_eq!((&f + &g).eval(&(), &b).unwrap(), &fv + &gv);
        prop_assert_eq!((&f * &g).eval(&(), &b).unwrap(), &fv * &gv);
        prop_assert_eq!((&f - &g).eval(&(), &b).unwrap(), fv - gv);
    }

    #[test]
    fn equal_ratfuncs_agree_pointwise(f in poly(), g in poly(), k in poly(), x in rational(), y in rational()) {
        prop_assume!(!g.is_zero() && !k.is_zero());
        let a = RatFunc::new(f.clone(), g.clone()).unwrap();
        let b = RatFunc::new(&f * &k, &g * &k).unwrap();
        prop_assert!(ratfunc_eq(&a, &b));
        let pt = bind(&[("x", x), ("y", y)]);
        if let (Ok(av), Ok(bv)) = (a.eval::<Rational>(&(), &pt), b.eval::<Rational>(&(), &pt)) {
            prop_assert_eq!(av, bv);
        }
    }

    #[test]
    fn elementary_symmetric_generating_function(xs in prop::collection::vec(rational(), 1..6), t in rational()) {
        // prod (1 + x_i t) = sum sigma_k t^k
        let names: Vec<String> = (0..xs.len()).map(|i| format!("x{i}")).collect();
        let vars: Vec<&str> = names.iter().map(String::as_str).collect();
        let b: std::collections::BTreeMap<&str, Rational> = vars.iter().copied().zip(xs.iter().cloned()).collect();
        let lhs = xs.iter().fold(rat(1, 1), |acc, x| acc * (rat(1, 1) + x * &t));
        let mut rhs = rat(0, 1);
        let mut tk = rat(1, 1);
        for k in 0..=xs.len() {
            rhs += elementary_symmetric(k, &vars).unwrap().eval(&(), &b).unwrap() * &tk;
            tk *= &t;
        }
        prop_assert_eq!(lhs, rhs);
    }
}
