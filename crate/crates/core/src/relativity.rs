//! Velocities on `(-c, c)` with `h = 1/c`: addition, boosts, rapidity and
//! the Galilean limit.
//!
//! Inputs and outputs are doubles, but every velocity is held as the exact
//! rational value of its double. Compositions and the quantities that lose
//! precision near the light cone (`1 - u^2/c^2`, `(c + u)/(c - u)`, the
//! Galilean deviation) are formed exactly and rounded once. A plain
//! floating-point `u (+) v` is still available as [`add_velocity_f64`].

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::arith::rational::{from_f64, to_f64};
use crate::arith::Rational;
use crate::error::{Error, Result};
use crate::matrix::Mat2;

#[derive(Clone, Debug, PartialEq)]
pub struct Velocity {
    value: Rational,
    c: Rational,
}

fn exact(x: f64, what: &str) -> Result<Rational> {
    from_f64(x).ok_or_else(|| Error::InvalidArgument(format!("{what} must be finite, got {x}")))
}

impl Velocity {
    /// `|value| <= c`; `|value| = c` is admitted as a light-speed probe.
    pub fn new(value: f64, c: f64) -> Result<Self> {
        Self::from_exact(exact(value, "velocity")?, exact(c, "c")?)
    }

    pub fn from_exact(value: Rational, c: Rational) -> Result<Self> {
        if !c.is_positive() {
            return Err(Error::InvalidArgument(format!(
                "c must be positive, got {}",
                to_f64(&c)
            )));
        }
        if value.abs() > c {
            return Err(Error::Superluminal {
                value: to_f64(&value),
                c: to_f64(&c),
            });
        }
        Ok(Self { value, c })
    }

    pub fn value(&self) -> f64 {
        to_f64(&self.value)
    }

    pub fn c(&self) -> f64 {
        to_f64(&self.c)
    }

    pub fn exact_value(&self) -> &Rational {
        &self.value
    }

    pub fn exact_c(&self) -> &Rational {
        &self.c
    }

    /// Strictly inside the light cone.
    pub fn is_interior(&self) -> bool {
        self.value.abs() < self.c
    }

    /// `u / c`.
    pub fn fraction(&self) -> Rational {
        &self.value / &self.c
    }

    fn require_interior(&self) -> Result<()> {
        if self.is_interior() {
            Ok(())
        } else {
            Err(Error::Superluminal {
                value: self.value(),
                c: self.c(),
            })
        }
    }
}

impl fmt::Display for Velocity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (c = {})", self.value(), self.c())
    }
}

/// `(u + v) / (1 + uv/c^2)`, exactly.
pub fn add_velocity(u: &Velocity, v: &Velocity) -> Result<Velocity> {
    if u.c != v.c {
        return Err(Error::LightSpeedMismatch {
            left: u.c(),
            right: v.c(),
        });
    }
    let den = Rational::one() + &u.value * &v.value / (&u.c * &u.c);
    if den.is_zero() {
        return Err(Error::UndefinedComposition);
    }
    Velocity::from_exact((&u.value + &v.value) / den, u.c.clone())
}

/// Same law in plain double precision, evaluated on `u/c` and `v/c` so
/// that `v = c` gives back `c` exactly.
pub fn add_velocity_f64(u: f64, v: f64, c: f64) -> f64 {
    let (a, b) = (u / c, v / c);
    c * ((a + b) / (1.0 + a * b))
}

#[derive(Clone, Debug, PartialEq)]
pub struct Boost {
    /// `gamma [[1, -u/c^2], [-u, 1]]` acting on `(x, t)`.
    pub matrix: Mat2<f64>,
    pub u: Velocity,
}

/// `1 - u^2/c^2`, exact.
fn lorentz_factor_sq_inv(u: &Velocity) -> Rational {
    let f = u.fraction();
    Rational::one() - &f * &f
}

pub fn gamma(u: &Velocity) -> Result<f64> {
    u.require_interior()?;
    Ok(1.0 / to_f64(&lorentz_factor_sq_inv(u)).sqrt())
}

pub fn boost_matrix(u: &Velocity) -> Result<Boost> {
    let g = gamma(u)?;
    let over_c2 = to_f64(&(&u.value / (&u.c * &u.c)));
    let m = Mat2::new(g, -g * over_c2, -g * u.value(), g);
    Ok(Boost {
        matrix: m,
        u: u.clone(),
    })
}

/// `(1 + u/c)/(1 - u/c)`, exact then rounded.
fn beta_sq(u: &Velocity) -> Result<f64> {
    u.require_interior()?;
    Ok(to_f64(&((&u.c + &u.value) / (&u.c - &u.value))))
}

/// Positive square root of `(1 + u/c)/(1 - u/c)`.
pub fn beta_real(u: &Velocity) -> Result<f64> {
    Ok(beta_sq(u)?.sqrt())
}

/// `artanh(u/c) = ln beta(u)`.
pub fn rapidity(u: &Velocity) -> Result<f64> {
    Ok(0.5 * beta_sq(u)?.ln())
}

/// `c tanh(r)`, inverse of [`rapidity`].
pub fn from_rapidity(r: f64, c: f64) -> Result<Velocity> {
    Velocity::new(c * r.tanh(), c)
}

/// `|(u (+)_c v) - (u + v)|` for each `c`; scales like `c^-2`.
pub fn galilean_limit_probe(u: f64, v: f64, cs: &[f64]) -> Result<Vec<f64>> {
    let (ue, ve) = (exact(u, "u")?, exact(v, "v")?);
    cs.iter()
        .map(|&c| {
            let ce = exact(c, "c")?;
            if ue.abs() >= ce || ve.abs() >= ce {
                return Err(Error::Superluminal {
                    value: u.abs().max(v.abs()),
                    c,
                });
            }
            let w = add_velocity(
                &Velocity::from_exact(ue.clone(), ce.clone())?,
                &Velocity::from_exact(ve.clone(), ce)?,
            )?;
            Ok(to_f64(&(w.value - &ue - &ve).abs()))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn vel(x: f64, c: f64) -> Velocity {
        Velocity::new(x, c).unwrap()
    }

    #[test]
    fn addition_examples() {
        let w = add_velocity(&vel(0.5, 1.0), &vel(0.5, 1.0)).unwrap();
        assert_eq!(w.value(), 0.8);
        let w = add_velocity(&vel(150.0, 300.0), &vel(150.0, 300.0)).unwrap();
        assert_eq!(w.value(), 240.0);
        assert_eq!(
            add_velocity(&vel(0.3, 1.0), &vel(0.0, 1.0))
                .unwrap()
                .value(),
            0.3
        );
        let fixed = add_velocity(&vel(0.3, 1.0), &vel(1.0, 1.0)).unwrap();
        assert_eq!(fixed.exact_value(), fixed.exact_c());
        assert_eq!(
            add_velocity(&vel(1.0, 1.0), &vel(-1.0, 1.0)),
            Err(Error::UndefinedComposition)
        );
        assert!(matches!(
            add_velocity(&vel(0.1, 1.0), &vel(0.1, 2.0)),
            Err(Error::LightSpeedMismatch { .. })
        ));
        assert!(matches!(
            Velocity::new(2.0, 1.0),
            Err(Error::Superluminal { .. })
        ));
        assert!(Velocity::new(0.1, 0.0).is_err());
        assert!(Velocity::new(f64::NAN, 1.0).is_err());
    }

    #[test]
    fn boost_examples() {
        let b = boost_matrix(&vel(0.0, 1.0)).unwrap();
        assert_eq!(b.matrix, Mat2::new(1.0, 0.0, 0.0, 1.0));
        let b = boost_matrix(&vel(0.6, 1.0)).unwrap();
        let want = [[1.25, -0.75], [-0.75, 1.25]];
        for (row, want_row) in b.matrix.m.iter().zip(want) {
            for (x, y) in row.iter().zip(want_row) {
                assert!((x - y).abs() < 1e-15);
            }
        }
        assert!((b.matrix.det() - 1.0).abs() < 1e-12);
        assert!(boost_matrix(&vel(1.0, 1.0)).is_err());
        // Off-diagonal entries differ by h^2 = 1/c^2.
        let b = boost_matrix(&vel(3.0, 10.0)).unwrap();
        assert!((b.matrix.m[0][1] - b.matrix.m[1][0] / 100.0).abs() < 1e-15);
    }

    #[test]
    fn boost_composition() {
        let (u, v) = (vel(0.3, 1.0), vel(0.5, 1.0));
        let prod = &boost_matrix(&u).unwrap().matrix * &boost_matrix(&v).unwrap().matrix;
        let direct = boost_matrix(&add_velocity(&u, &v).unwrap()).unwrap().matrix;
        for i in 0..2 {
            for j in 0..2 {
                assert!((prod.m[i][j] - direct.m[i][j]).abs() <= 1e-12);
            }
        }
    }

    #[test]
    fn beta_and_rapidity() {
        assert_eq!(beta_real(&vel(0.0, 1.0)).unwrap(), 1.0);
        assert!((beta_real(&vel(0.8, 1.0)).unwrap() - 3.0).abs() < 1e-15);
        let b5 = beta_real(&vel(0.5, 1.0)).unwrap();
        assert!((b5 * b5 - 3.0).abs() < 1e-15);
        assert_eq!(rapidity(&vel(0.0, 1.0)).unwrap(), 0.0);
        assert!((rapidity(&vel(0.8, 1.0)).unwrap() - 3f64.ln()).abs() < 1e-15);
        let u = vel(0.9999, 1.0);
        let back = from_rapidity(rapidity(&u).unwrap(), 1.0).unwrap();
        assert!((back.value() - 0.9999).abs() < 1e-12);
        assert!(rapidity(&vel(-1.0, 1.0)).is_err());
    }

    #[test]
    fn galilean_probe() {
        let d = galilean_limit_probe(1.0, 1.0, &[10.0, 100.0]).unwrap();
        assert!((d[0] - 0.019801980198019802).abs() < 1e-15);
        assert!((d[1] - 1.9998000199980002e-4).abs() < 1e-17);
        assert_eq!(galilean_limit_probe(0.0, 0.0, &[5.0]).unwrap(), vec![0.0]);
        assert!(galilean_limit_probe(3.0, 0.0, &[2.0]).is_err());
    }

    #[test]
    fn float_fixed_point() {
        for u in [-0.9, -0.3, 0.0, 0.5, 0.99] {
            let w = add_velocity_f64(u * 7.0, 7.0, 7.0);
            assert!(((w - 7.0) / 7.0).abs() <= 1e-15);
        }
    }
}
