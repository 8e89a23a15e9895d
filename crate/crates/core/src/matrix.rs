//! The 2x2 matrix model `A_h(u) = [[1, -h^2 u], [-u, 1]]`.
//!
//! `A_h(u) A_h(v) = (1 + h^2 uv) A_h(u (+)_h v)`, so the matrices form a
//! group up to a scalar cocycle. The normalized family `A / sqrt(det A)`
//! is never built over exact rings; its multiplicativity is checked in a
//! square-root-free form instead.

use std::fmt;
use std::ops::Mul;

use crate::arith::Scalar;
use crate::error::{Error, Result};
use crate::laws::{lorentz_law, symbolic_h};
use crate::report::{Check, Report};
use crate::symbolic::{elementary_symmetric, RatFunc};

#[derive(Clone, Debug, PartialEq)]
pub struct Mat2<S> {
    pub m: [[S; 2]; 2],
}

impl<S: Scalar> Mat2<S> {
    pub fn new(a: S, b: S, c: S, d: S) -> Self {
        Self {
            m: [[a, b], [c, d]],
        }
    }

    pub fn identity(ctx: &S::Ctx) -> Self {
        Self::diag(S::one_in(ctx), S::one_in(ctx))
    }

    pub fn diag(a: S, d: S) -> Self {
        let ctx = a.ctx();
        Self::new(a, S::zero_in(&ctx), S::zero_in(&ctx), d)
    }

    pub fn det(&self) -> S {
        let [[a, b], [c, d]] = &self.m;
        a.clone() * d.clone() - b.clone() * c.clone()
    }

    pub fn transpose(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(a, c, b, d)
    }

    pub fn scale(&self, k: &S) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(k.clone() * a, k.clone() * b, k.clone() * c, k.clone() * d)
    }

    /// Entrywise square (not the matrix square).
    pub fn hadamard_square(&self) -> Self {
        let [[a, b], [c, d]] = self.m.clone();
        Self::new(a.clone() * a, b.clone() * b, c.clone() * c, d.clone() * d)
    }

    pub fn apply(&self, x: &(S, S)) -> (S, S) {
        let [[a, b], [c, d]] = &self.m;
        (
            a.clone() * x.0.clone() + b.clone() * x.1.clone(),
            c.clone() * x.0.clone() + d.clone() * x.1.clone(),
        )
    }

    pub fn inverse(&self) -> Result<Self> {
        let inv = self
            .det()
            .inverse()
            .ok_or_else(|| Error::NotInvertible("matrix".into()))?;
        let [[a, b], [c, d]] = self.m.clone();
        Ok(Self::new(d, -b, -c, a).scale(&inv))
    }

    pub fn row(&self, i: usize) -> (S, S) {
        (self.m[i][0].clone(), self.m[i][1].clone())
    }

    pub fn col(&self, j: usize) -> (S, S) {
        (self.m[0][j].clone(), self.m[1][j].clone())
    }
}

impl<S: Scalar> Mul for &Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: &Mat2<S>) -> Mat2<S> {
        let e = |i: usize, j: usize| {
            self.m[i][0].clone() * rhs.m[0][j].clone() + self.m[i][1].clone() * rhs.m[1][j].clone()
        };
        Mat2::new(e(0, 0), e(0, 1), e(1, 0), e(1, 1))
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Mat2<S>;
    fn mul(self, rhs: Mat2<S>) -> Mat2<S> {
        &self * &rhs
    }
}

impl<S: fmt::Display> fmt::Display for Mat2<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}, {}], [{}, {}]]",
            self.m[0][0], self.m[0][1], self.m[1][0], self.m[1][1]
        )
    }
}

/// `A_h(u)`.
pub fn mat_a<S: Scalar>(h: &S, u: &S) -> Mat2<S> {
    let one = S::one_in(&u.ctx());
    Mat2::new(
        one.clone(),
        -(h.clone() * h.clone() * u.clone()),
        -u.clone(),
        one,
    )
}

/// `a_h(u) = det A_h(u) = 1 - h^2 u^2`.
pub fn det_a<S: Scalar>(h: &S, u: &S) -> S {
    S::one_in(&u.ctx()) - h.clone() * h.clone() * u.clone() * u.clone()
}

/// The cocycle `b_h(u, v) = 1 + h^2 uv`.
pub fn cocycle<S: Scalar>(h: &S, u: &S, v: &S) -> S {
    S::one_in(&u.ctx()) + h.clone() * h.clone() * u.clone() * v.clone()
}

/// The bilinear form `((a, b), (a', b'))_h = h^2 aa' - bb'`.
#[derive(Clone, Debug, PartialEq)]
pub struct MinkowskiForm<S> {
    pub h: S,
}

impl<S: Scalar> MinkowskiForm<S> {
    pub fn new(h: S) -> Self {
        Self { h }
    }

    pub fn dot(&self, x: &(S, S), y: &(S, S)) -> S {
        self.h.clone() * self.h.clone() * x.0.clone() * y.0.clone() - x.1.clone() * y.1.clone()
    }

    /// Gram matrix `diag(h^2, -1)`.
    pub fn gram(&self) -> Mat2<S> {
        let ctx = self.h.ctx();
        Mat2::diag(self.h.clone() * self.h.clone(), -S::one_in(&ctx))
    }
}

pub fn minkowski_dot<S: Scalar>(form: &MinkowskiForm<S>, x: &(S, S), y: &(S, S)) -> S {
    form.dot(x, y)
}

/// `C_h = [[-h, h], [1, 1]]`, whose columns are the eigenvectors `(-h, 1)`
/// and `(h, 1)` of every `A_h(u)`.
pub fn conjugator<S: Scalar>(h: &S) -> Mat2<S> {
    let one = S::one_in(&h.ctx());
    Mat2::new(-h.clone(), h.clone(), one.clone(), one)
}

/// Returns `(C_h, C_h^-1 A_h(u) C_h)`. Fails when `det C_h = -2h` is not
/// invertible, which is where the torus degenerates to the unipotent group.
pub fn conjugate_to_diagonal<S: Scalar>(h: &S, u: &S) -> Result<(Mat2<S>, Mat2<S>)> {
    let c = conjugator(h);
    let c_inv = c
        .inverse()
        .map_err(|_| Error::NotInvertible(format!("2h with h = {h:?}")))?;
    let d = &(&c_inv * &mat_a(h, u)) * &c;
    Ok((c, d))
}

/// Outcome of [`verify_cocycle_identities`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CocycleReport {
    /// `A(u) A(v) = b(u, v) A(u (+) v)`.
    pub product: bool,
    /// `a(u) a(v) = b(u, v)^2 a(u (+) v)`.
    pub determinant: bool,
    /// `b = sigma_0 + h^2 sigma_2`.
    pub cocycle_symmetric: bool,
    /// `(A(u)A(v))^2 a(u (+) v) = a(u) a(v) A(u (+) v)^2`, both as matrix
    /// squares and entrywise.
    pub normalized: bool,
}

impl CocycleReport {
    pub fn all(&self) -> bool {
        self.product && self.determinant && self.cocycle_symmetric && self.normalized
    }
}

fn sym() -> (RatFunc, RatFunc, RatFunc) {
    (symbolic_h(), RatFunc::var("u"), RatFunc::var("v"))
}

/// Proves the cocycle identities with `h`, `u`, `v` symbolic.
pub fn verify_cocycle_identities() -> Result<CocycleReport> {
    let (h, u, v) = sym();
    let w = lorentz_law(h.clone()).compose().clone();
    let b = cocycle(&h, &u, &v);
    let au = mat_a(&h, &u);
    let av = mat_a(&h, &v);
    let aw = mat_a(&h, &w);
    let prod = &au * &av;

    let product = prod == aw.scale(&b);
    let determinant = det_a(&h, &u) * det_a(&h, &v) == b.clone() * b.clone() * det_a(&h, &w);
    let sigma = |k| RatFunc::from(elementary_symmetric(k, &["u", "v"]).expect("k <= 2"));
    let cocycle_symmetric = b == sigma(0) + h.clone() * h.clone() * sigma(2);

    let auav = det_a(&h, &u) * det_a(&h, &v);
    let aw_det = det_a(&h, &w);
    let squared = (&prod * &prod).scale(&aw_det) == (&aw * &aw).scale(&auav);
    let entrywise = prod.hadamard_square().scale(&aw_det) == aw.hadamard_square().scale(&auav);
    Ok(CocycleReport {
        product,
        determinant,
        cocycle_symmetric,
        normalized: squared && entrywise,
    })
}

/// Symbolic and spot-check verification of the matrix model.
pub fn verify_matrices() -> Result<Report> {
    let mut r = Report::new("matrices");
    r.anchor("A_h(u) = [[1, -h^2 u], [-u, 1]], a_h(u) = det A_h(u) = 1 - h^2 u^2");
    r.anchor("((a,b),(a',b'))_h = h^2 aa' - bb'");
    r.anchor("A(u)A(v) = (1 + h^2 uv) A(u (+)_h v)");
    r.anchor("a(u (+) v)/(a(u)a(v)) = 1/b(u,v)^2");
    r.anchor("B_h(u)B_h(v) = B_h(u (+)_h v), B_h = A_h/a_h^(1/2)");
    r.anchor("C_h^-1 A_h(u) C_h = diag(1 + hu, 1 - hu), C_h = [[-h, h], [1, 1]]");

    let (h, u, v) = sym();
    let a = mat_a(&h, &u);
    let form = MinkowskiForm::new(h.clone());
    let zero = RatFunc::int(0);

    r.push(Check::verdict(
        "matrices.det",
        "det A_h(u) = 1 - h^2 u^2",
        a.det() == det_a(&h, &u),
        format!("A_h(u) = {a}"),
    ));
    r.push(Check::verdict(
        "matrices.rows_orthogonal",
        "rows of A_h(u) are orthogonal for ( , )_h",
        form.dot(&a.row(0), &a.row(1)) == zero,
        "",
    ));
    r.push(Check::verdict(
        "matrices.similitude",
        "A_h(u) G A_h(u)^T = a_h(u) G with G = diag(h^2, -1)",
        &(&a * &form.gram()) * &a.transpose() == form.gram().scale(&det_a(&h, &u)),
        "",
    ));
    let dual = (a.col(0).0.clone() * a.col(1).0.clone())
        - h.clone() * h.clone() * a.col(0).1.clone() * a.col(1).1.clone();
    r.push(Check::verdict(
        "matrices.columns_orthogonal_dual",
        "columns of A_h(u) are orthogonal for the dual form aa' - h^2 bb'",
        dual == zero,
        "",
    ));

    let c = verify_cocycle_identities()?;
    r.push(Check::verdict(
        "matrices.cocycle_product",
        "A(u)A(v) = b(u,v) A(u (+) v)",
        c.product,
        "",
    ));
    r.push(Check::verdict(
        "matrices.cocycle_determinant",
        "a(u)a(v) = b(u,v)^2 a(u (+) v), i.e. a(u (+) v)/(a(u)a(v)) = 1/b^2",
        c.determinant,
        "",
    ));
    r.push(Check::verdict(
        "matrices.cocycle_sigma",
        "b(u,v) = sigma_0(u,v) + h^2 sigma_2(u,v)",
        c.cocycle_symmetric,
        "",
    ));
    r.push(Check::verdict(
        "matrices.normalized_multiplicative",
        "B(u)B(v) = B(u (+) v) in square-root-free form",
        c.normalized,
        "(A(u)A(v))^2 a(u (+) v) = a(u)a(v) A(u (+) v)^2, as matrix and entrywise squares",
    ));

    let av = mat_a(&h, &v);
    r.push(Check::verdict(
        "matrices.det_multiplicative",
        "det(A(u)A(v)) = det A(u) det A(v)",
        (&a * &av).det() == a.det() * av.det(),
        "",
    ));

    let one = RatFunc::int(1);
    let v_plus = (-h.clone(), one.clone());
    let v_minus = (h.clone(), one.clone());
    let hu = h.clone() * u.clone();
    let eig_plus = a.apply(&v_plus)
        == (
            v_plus.0.clone() * (one.clone() + hu.clone()),
            one.clone() + hu.clone(),
        );
    let eig_minus = a.apply(&v_minus)
        == (
            v_minus.0.clone() * (one.clone() - hu.clone()),
            one.clone() - hu.clone(),
        );
    r.push(Check::verdict(
        "matrices.eigenvectors",
        "A_h(u) v_(+/-) = (1 +/- hu) v_(+/-), v_(+/-) = (-/+h, 1)",
        eig_plus && eig_minus,
        "",
    ));

    let (_, d) = conjugate_to_diagonal(&h, &u)?;
    let expected = Mat2::diag(one.clone() + hu.clone(), one.clone() - hu.clone());
    r.push(Check::verdict(
        "matrices.conjugation",
        "C_h^-1 A_h(u) C_h = diag(1 + hu, 1 - hu)",
        d == expected,
        format!("D = {d}"),
    ));

    let zero_h = RatFunc::int(0);
    let unipotent =
        &mat_a(&zero_h, &u) * &mat_a(&zero_h, &v) == mat_a(&zero_h, &(u.clone() + v.clone()));
    r.push(Check::verdict(
        "matrices.unipotent_h0",
        "A_0(u)A_0(v) = A_0(u + v), lower unipotent",
        unipotent && mat_a(&zero_h, &u).m[0][1] == zero,
        "",
    ));

    use crate::arith::{int, rat, Rational};
    let (h1, u1, v1) = (int(1), rat(1, 2), rat(1, 3));
    let spot = &mat_a(&h1, &u1) * &mat_a(&h1, &v1) == mat_a(&h1, &rat(5, 7)).scale(&rat(7, 6));
    r.push(Check::verdict(
        "matrices.spot_check",
        "h = 1: A(1/2)A(1/3) = (7/6) A(5/7)",
        spot,
        format!("{}", &mat_a::<Rational>(&h1, &u1) * &mat_a(&h1, &v1)),
    ));
    Ok(r)
}
