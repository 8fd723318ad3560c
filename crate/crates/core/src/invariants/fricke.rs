//! SL₂ trace coordinates for the four-punctured sphere and the Fricke–Klein cubic.

use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, Polynomial, Rational};
use crate::error::{Error, Result};

/// Whether the ordered product `M₁⋯M_n` is the identity.
///
/// Every factor must be 2×2 with determinant 1.
pub fn verify_relation(matrices: &[Matrix<Rational>]) -> Result<bool> {
    for m in matrices {
        require_sl2(m)?;
    }
    if matrices.is_empty() {
        return Ok(true);
    }
    Ok(Matrix::product(matrices)? == Matrix::identity(2))
}

fn require_sl2(m: &Matrix<Rational>) -> Result<()> {
    if m.rows() != 2 || m.cols() != 2 {
        return Err(Error::Dimension(format!(
            "expected a 2x2 matrix, got {}x{}",
            m.rows(),
            m.cols()
        )));
    }
    let det = m.det()?;
    if !det.is_one() {
        return Err(Error::NotUnimodular(det.to_string()));
    }
    Ok(())
}

/// The seven generators of the invariant ring for n = 4.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceCoordinates4 {
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
    pub a1: Rational,
    pub a2: Rational,
    pub a3: Rational,
    pub a4: Rational,
}

impl TraceCoordinates4 {
    pub fn x(&self) -> [Rational; 3] {
        [self.x1.clone(), self.x2.clone(), self.x3.clone()]
    }

    pub fn a(&self) -> [Rational; 4] {
        [
            self.a1.clone(),
            self.a2.clone(),
            self.a3.clone(),
            self.a4.clone(),
        ]
    }

    /// `f_a(x)` at these coordinates; zero for every genuine triple.
    pub fn fk_value(&self) -> Rational {
        fk_cubic(&self.x(), &self.a())
    }
}

/// `x₁ = Tr(M₃M₂)`, `x₂ = Tr(M₁M₃)`, `x₃ = Tr(M₂M₁)`, `aᵢ = Tr(Mᵢ)`, `a₄ = Tr(M₃M₂M₁)`.
pub fn fk_coordinates(
    m1: &Matrix<Rational>,
    m2: &Matrix<Rational>,
    m3: &Matrix<Rational>,
) -> Result<TraceCoordinates4> {
    for m in [m1, m2, m3] {
        require_sl2(m)?;
    }
    let m32 = m3 * m2;
    Ok(TraceCoordinates4 {
        x1: m32.trace()?,
        x2: (m1 * m3).trace()?,
        x3: (m2 * m1).trace()?,
        a1: m1.trace()?,
        a2: m2.trace()?,
        a3: m3.trace()?,
        a4: (&m32 * m1).trace()?,
    })
}

/// `θᵢ = aᵢa₄ + a_j a_k` for `(i,j,k)` cyclic, and
/// `θ₄ = a₁a₂a₃a₄ + a₁² + a₂² + a₃² + a₄² − 4`.
pub fn theta(a: &[Rational; 4]) -> [Rational; 4] {
    let [a1, a2, a3, a4] = a;
    let t1 = a1 * a4 + a2 * a3;
    let t2 = a2 * a4 + a3 * a1;
    let t3 = a3 * a4 + a1 * a2;
    let t4 = a1 * a2 * a3 * a4 + a.iter().map(|v| v * v).sum::<Rational>() - Rational::from(4);
    [t1, t2, t3, t4]
}

/// `f_a(x) = x₁x₂x₃ + x₁² + x₂² + x₃² − θ₁x₁ − θ₂x₂ − θ₃x₃ + θ₄`.
pub fn fk_cubic(x: &[Rational; 3], a: &[Rational; 4]) -> Rational {
    let th = theta(a);
    let [x1, x2, x3] = x;
    x1 * x2 * x3 + x.iter().map(|v| v * v).sum::<Rational>()
        - x.iter().zip(&th).map(|(xi, ti)| xi * ti).sum::<Rational>()
        + &th[3]
}

/// `f_a` as a polynomial in `x1, x2, x3` for fixed boundary traces `a`.
pub fn fk_polynomial(a: &[Rational; 4]) -> Polynomial {
    let th = theta(a);
    let xs: Vec<Polynomial> = ["x1", "x2", "x3"].iter().map(|v| Polynomial::var(v)).collect();
    let mut f = &(&xs[0] * &xs[1]) * &xs[2];
    for (xi, ti) in xs.iter().zip(&th) {
        f = &f + &(&xi.pow(2) - &xi.scale(ti));
    }
    &f + &Polynomial::constant(th[3].clone())
}

/// Homogenizes a polynomial of degree ≤ 3 in `x1, x2, x3` with a new
/// variable `W`, sets `W = 0`, and returns the resulting cubic form in `X, Y, Z`.
///
/// ```
/// use charvar::algebra::{Polynomial, Rational};
/// use charvar::invariants::{fk_polynomial, leading_form_at_infinity};
///
/// let a = [2, 2, 3, 6].map(Rational::from);
/// let lead = leading_form_at_infinity(&fk_polynomial(&a)).unwrap();
/// let xyz = &(&Polynomial::var("X") * &Polynomial::var("Y")) * &Polynomial::var("Z");
/// assert_eq!(lead, xyz);
/// ```
pub fn leading_form_at_infinity(cubic: &Polynomial) -> Result<Polynomial> {
    if let Some(v) = cubic
        .variables()
        .iter()
        .find(|v| !["x1", "x2", "x3"].contains(&v.as_str()))
    {
        return Err(Error::Dimension(format!(
            "unexpected variable `{v}`; expected x1, x2, x3"
        )));
    }
    let renamed = cubic.rename(&[("x1", "X"), ("x2", "Y"), ("x3", "Z")]);
    let homogeneous = renamed.homogenize("W", 3)?;
    Ok(homogeneous.substitute("W", &Polynomial::zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    fn m(d: [i64; 4]) -> Matrix<Rational> {
        Matrix::from_ints(2, 2, &d).unwrap()
    }

    fn ints<const N: usize>(v: [i64; N]) -> [Rational; N] {
        v.map(Rational::from)
    }

    #[test]
    fn coordinates_examples() {
        let t = fk_coordinates(&m([1, 1, 0, 1]), &m([1, 0, 1, 1]), &m([2, 1, 1, 1])).unwrap();
        assert_eq!(t.x(), ints([4, 4, 3]));
        assert_eq!(t.a(), ints([2, 2, 3, 6]));

        let id = Matrix::identity(2);
        let t = fk_coordinates(&id, &id, &id).unwrap();
        assert_eq!(t.x(), ints([2, 2, 2]));
        assert_eq!(t.a(), ints([2, 2, 2, 2]));

        let d = Matrix::new(2, 2, vec![qi(2), qi(0), qi(0), q(1, 2)]).unwrap();
        let t = fk_coordinates(&d, &d.inverse().unwrap(), &id).unwrap();
        assert_eq!((t.a1, t.a2, t.a3, t.x3), (q(5, 2), q(5, 2), qi(2), qi(2)));
    }

    #[test]
    fn coordinates_reject_non_unimodular() {
        let err = fk_coordinates(&m([2, 0, 0, 1]), &m([1, 0, 0, 1]), &m([1, 0, 0, 1]));
        assert!(matches!(err, Err(Error::NotUnimodular(_))));
    }

    #[test]
    fn theta_and_cubic_examples() {
        assert_eq!(theta(&ints([2, 2, 2, 2])), ints([8, 8, 8, 28]));
        assert_eq!(theta(&ints([0, 0, 0, 0])), ints([0, 0, 0, -4]));
        assert_eq!(theta(&ints([2, 2, 3, 6])), ints([18, 18, 22, 121]));
        assert!(fk_cubic(&ints([4, 4, 3]), &ints([2, 2, 3, 6])).is_zero());
        assert!(fk_cubic(&ints([2, 2, 2]), &ints([2, 2, 2, 2])).is_zero());
        assert_eq!(fk_cubic(&ints([0, 0, 0]), &ints([0, 0, 0, 0])), qi(-4));
    }

    #[test]
    fn polynomial_matches_value() {
        let a = ints([2, 2, 3, 6]);
        let v = fk_polynomial(&a)
            .eval_pairs(&[("x1", qi(4)), ("x2", qi(4)), ("x3", qi(3))])
            .unwrap();
        assert!(v.is_zero());
    }

    #[test]
    fn relation_examples() {
        let a = m([2, 1, 1, 1]);
        assert!(verify_relation(&[a.clone(), a.inverse().unwrap()]).unwrap());
        let id = Matrix::identity(2);
        assert!(verify_relation(&[id.clone(), id.clone(), id]).unwrap());
        let (m1, m2, m3) = (m([1, 1, 0, 1]), m([1, 0, 1, 1]), m([2, 1, 1, 1]));
        let m4 = (&(&m1 * &m2) * &m3).inverse().unwrap();
        assert!(verify_relation(&[m1.clone(), m2.clone(), m3, m4]).unwrap());
        assert!(!verify_relation(&[m1, m2]).unwrap());
        assert!(verify_relation(&[m([2, 0, 0, 1])]).is_err());
    }

    #[test]
    fn leading_forms() {
        assert!(leading_form_at_infinity(&Polynomial::from(7)).unwrap().is_zero());
        let x = Polynomial::var("x1");
        assert!(matches!(
            leading_form_at_infinity(&x.pow(4)),
            Err(Error::DegreeTooHigh(4, 3))
        ));
    }
}
