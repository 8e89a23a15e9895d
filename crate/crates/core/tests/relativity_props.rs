use kas_core::relativity::{
    add_velocity, add_velocity_f64, beta_real, boost_matrix, galilean_limit_probe, rapidity,
    Velocity,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn vel(x: f64, c: f64) -> Velocity {
    Velocity::new(x, c).unwrap()
}

fn max_entry_diff(a: &kas_core::matrix::Mat2<f64>, b: &kas_core::matrix::Mat2<f64>) -> f64 {
    let mut m: f64 = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            m = m.max((a.m[i][j] - b.m[i][j]).abs());
        }
    }
    m
}

#[test]
fn closure_and_monotonicity() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let c = 3.0;
    for _ in 0..10_000 {
        let u = vel(rng.gen_range(-0.999_999..0.999_999) * c, c);
        let v = vel(rng.gen_range(-0.999_999..0.999_999) * c, c);
        let w = add_velocity(&u, &v).unwrap();
        assert!(w.is_interior(), "{u} + {v} = {w}");
        let bump = vel(u.value() + 1e-3 * (c - u.value()), c);
        let w2 = add_velocity(&bump, &v).unwrap();
        assert!(w2.exact_value() > w.exact_value());
    }
}

#[test]
fn boosts_compose_within_tolerance() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (bound, tol) in [(0.99, 1e-12), (0.999_999, 1e-9)] {
        for _ in 0..2000 {
            let u = vel(rng.gen_range(-bound..=bound), 1.0);
            let v = vel(rng.gen_range(-bound..=bound), 1.0);
            let (lu, lv) = (boost_matrix(&u).unwrap(), boost_matrix(&v).unwrap());
            let lw = boost_matrix(&add_velocity(&u, &v).unwrap()).unwrap();
            let err = max_entry_diff(&(&lu.matrix * &lv.matrix), &lw.matrix);
            assert!(err <= tol, "u={u} v={v} err={err:e}");
            if bound <= 0.99 {
                assert!((lu.matrix.det() - 1.0).abs() <= 1e-12);
            }
        }
    }
}

#[test]
fn rapidity_is_additive_and_log_beta() {
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    for _ in 0..5000 {
        let c = rng.gen_range(0.5..50.0);
        let u = vel(rng.gen_range(-0.99..0.99) * c, c);
        let v = vel(rng.gen_range(-0.99..0.99) * c, c);
        let w = add_velocity(&u, &v).unwrap();
        let (ru, rv, rw) = (
            rapidity(&u).unwrap(),
            rapidity(&v).unwrap(),
            rapidity(&w).unwrap(),
        );
        assert!((ru + rv - rw).abs() <= 1e-12);
        assert!((beta_real(&u).unwrap().ln() - ru).abs() <= 1e-12);
        let bw = beta_real(&w).unwrap();
        assert!((beta_real(&u).unwrap() * beta_real(&v).unwrap() - bw).abs() <= 1e-12 * bw);
    }
}

#[test]
fn light_speed_is_fixed() {
    let mut rng = ChaCha8Rng::seed_from_u64(17);
    for _ in 0..1000 {
        let c = rng.gen_range(0.1..1e6);
        let u = rng.gen_range(-0.999..0.999) * c;
        let w = add_velocity(&vel(u, c), &vel(c, c)).unwrap();
        assert_eq!(w.exact_value(), w.exact_c());
        let f = add_velocity_f64(u, c, c);
        assert!(((f - c) / c).abs() <= 1e-15, "u={u} c={c} f={f}");
    }
}

#[test]
fn galilean_deviation_scales_like_inverse_square() {
    let cs = [1e3, 1e4, 1e5, 1e6];
    let d = galilean_limit_probe(1.0, 1.0, &cs).unwrap();
    let scaled: Vec<f64> = d.iter().zip(cs).map(|(d, c)| d * c * c).collect();
    for s in &scaled {
        assert!((s / scaled[0] - 1.0).abs() < 0.1, "{scaled:?}");
    }
}
