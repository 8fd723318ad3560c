//! SL₃ trace invariants of a pair and interpolation of the quadratic relation
//! satisfied by the commutator trace.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, Polynomial, Rational};
use crate::error::{Error, Result};
use crate::sampling::random_nonzero_rational;

/// The nine generators for a pair `(M₁, M₂)` in SL₃.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Sl3Invariants {
    pub a1: Rational,
    pub a2: Rational,
    pub b1: Rational,
    pub b2: Rational,
    pub c1: Rational,
    pub c2: Rational,
    pub x1: Rational,
    pub x2: Rational,
    pub x3: Rational,
}

impl Sl3Invariants {
    /// `(a₁, a₂, b₁, b₂, c₁, c₂)`, the values fixed by the boundary classes.
    pub fn boundary(&self) -> [&Rational; 6] {
        [&self.a1, &self.a2, &self.b1, &self.b2, &self.c1, &self.c2]
    }
}

fn require_sl3(m: &Matrix<Rational>) -> Result<()> {
    if m.rows() != 3 || m.cols() != 3 {
        return Err(Error::Dimension(format!(
            "expected a 3x3 matrix, got {}x{}",
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

/// `a₁ = Tr M₁`, `a₂ = Tr M₁⁻¹`, `b₁ = Tr M₂`, `b₂ = Tr M₂⁻¹`,
/// `c₁ = Tr(M₁⁻¹M₂⁻¹)`, `c₂ = Tr(M₁M₂)`, `x₁ = Tr(M₁M₂⁻¹)`, `x₂ = Tr(M₁⁻¹M₂)`,
/// `x₃ = Tr(M₁M₂M₁⁻¹M₂⁻¹)`.
pub fn sl3_invariants(m1: &Matrix<Rational>, m2: &Matrix<Rational>) -> Result<Sl3Invariants> {
    require_sl3(m1)?;
    require_sl3(m2)?;
    let i1 = m1.inverse()?;
    let i2 = m2.inverse()?;
    let m12 = m1 * m2;
    Ok(Sl3Invariants {
        a1: m1.trace()?,
        a2: i1.trace()?,
        b1: m2.trace()?,
        b2: i2.trace()?,
        c1: (&i1 * &i2).trace()?,
        c2: m12.trace()?,
        x1: (m1 * &i2).trace()?,
        x2: (&i1 * m2).trace()?,
        x3: (&(&m12 * &i1) * &i2).trace()?,
    })
}

/// A fixed choice of boundary data for sampling pairs with prescribed
/// `(a₁, a₂, b₁, b₂, c₁, c₂)`.
///
/// `M₁` is lower triangular with diagonal `λ` and `M₂` upper triangular with
/// diagonal `μ`. Both traces of each matrix are then fixed by the diagonals.
/// For free choices of `l₂₁, u₁₂, u₁₃, u₂₃`, both `Tr(M₁M₂)` and the second
/// elementary symmetric function of `M₁M₂` (which equals `Tr((M₁M₂)⁻¹)`) are
/// affine in the remaining entries `l₃₁, l₃₂`, so a 2×2 linear solve lands
/// the sample on the prescribed fiber.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl3Boundary {
    pub lambda: [Rational; 3],
    pub mu: [Rational; 3],
    pub c1: Rational,
    pub c2: Rational,
}

fn unit_diagonal(rng: &mut impl Rng) -> [Rational; 3] {
    loop {
        let x = random_nonzero_rational(rng, 5, 3);
        let y = random_nonzero_rational(rng, 5, 3);
        let z = (&x * &y).recip().expect("nonzero");
        if x != y && y != z && x != z {
            return [x, y, z];
        }
    }
}

fn lower(lambda: &[Rational; 3], l21: &Rational, l31: &Rational, l32: &Rational) -> Matrix<Rational> {
    let z = Rational::zero;
    Matrix::new(
        3,
        3,
        vec![
            lambda[0].clone(), z(), z(),
            l21.clone(), lambda[1].clone(), z(),
            l31.clone(), l32.clone(), lambda[2].clone(),
        ],
    )
    .expect("3x3")
}

fn upper(mu: &[Rational; 3], u: &[Rational; 3]) -> Matrix<Rational> {
    let z = Rational::zero;
    Matrix::new(
        3,
        3,
        vec![
            mu[0].clone(), u[0].clone(), u[1].clone(),
            z(), mu[1].clone(), u[2].clone(),
            z(), z(), mu[2].clone(),
        ],
    )
    .expect("3x3")
}

/// `(Tr P, e₂(P))` for `P = M₁M₂`.
fn product_invariants(p: &Matrix<Rational>) -> (Rational, Rational) {
    let tr = p.trace().expect("square");
    let mut e2 = Rational::zero();
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        e2 += &p.submatrix(&[i, j], &[i, j]).det().expect("square");
    }
    (tr, e2)
}

impl Sl3Boundary {
    /// Random diagonals and a random reference pair fixing `c₁, c₂`.
    pub fn random(rng: &mut impl Rng) -> Self {
        let lambda = unit_diagonal(rng);
        let mu = unit_diagonal(rng);
        let r = |rng: &mut _| random_nonzero_rational(rng, 4, 2);
        let m1 = lower(&lambda, &r(rng), &r(rng), &r(rng));
        let m2 = upper(&mu, &[r(rng), r(rng), r(rng)]);
        let (c2, c1) = product_invariants(&(&m1 * &m2));
        Sl3Boundary { lambda, mu, c1, c2 }
    }

    /// A pair on this fiber, or `None` when the random free entries make the
    /// 2×2 system singular.
    pub fn try_sample(&self, rng: &mut impl Rng) -> Option<(Matrix<Rational>, Matrix<Rational>)> {
        let r = |rng: &mut _| random_nonzero_rational(rng, 6, 3);
        let l21 = r(rng);
        let m2 = upper(&self.mu, &[r(rng), r(rng), r(rng)]);
        let (zero, one) = (Rational::zero(), Rational::one());
        let at = |l31: &Rational, l32: &Rational| {
            product_invariants(&(&lower(&self.lambda, &l21, l31, l32) * &m2))
        };
        let (t0, e0) = at(&zero, &zero);
        let (t1, e1) = at(&one, &zero);
        let (t2, e2) = at(&zero, &one);
        let sys = Matrix::new(2, 2, vec![&t1 - &t0, &t2 - &t0, &e1 - &e0, &e2 - &e0]).ok()?;
        let sol = sys.solve(&[&self.c2 - &t0, &self.c1 - &e0]).ok()?;
        Some((lower(&self.lambda, &l21, &sol[0], &sol[1]), m2))
    }

    pub fn sample(&self, rng: &mut impl Rng) -> (Matrix<Rational>, Matrix<Rational>) {
        loop {
            if let Some(pair) = self.try_sample(rng) {
                return pair;
            }
        }
    }
}

/// `x₃² − f·x₃ + g = 0` with `f` of degree ≤ 2 and `g` of degree ≤ 3 in `x₁, x₂`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sl3Relation {
    pub f: Polynomial,
    pub g: Polynomial,
}

impl Sl3Relation {
    /// `x₃² − f·x₃ + g` as a polynomial in `x1, x2, x3`.
    pub fn polynomial(&self) -> Polynomial {
        let x3 = Polynomial::var("x3");
        &(&x3.pow(2) - &(&self.f * &x3)) + &self.g
    }
}

/// Exponents `(i, j)` of `x₁ⁱx₂ʲ` with `i + j ≤ d`, lowest degree first.
fn monomials(d: u32) -> Vec<(u32, u32)> {
    (0..=d)
        .flat_map(|t| (0..=t).rev().map(move |i| (i, t - i)))
        .collect()
}

const F_DEGREE: u32 = 2;
const G_DEGREE: u32 = 3;

/// Solves exactly for the coefficients of `f` and `g`.
///
/// All samples must share their boundary values. With 6 unknowns in `f` and
/// 10 in `g`, at least 18 samples are required, and the system must have
/// full column rank and be consistent.
pub fn fit_sl3_relation(samples: &[Sl3Invariants]) -> Result<Sl3Relation> {
    let fm = monomials(F_DEGREE);
    let gm = monomials(G_DEGREE);
    let unknowns = fm.len() + gm.len();
    if samples.len() <= unknowns + 1 {
        return Err(Error::DegenerateSamples(format!(
            "{} samples, need more than {}",
            samples.len(),
            unknowns + 1
        )));
    }
    let b0 = samples[0].boundary();
    if let Some(k) = samples.iter().position(|s| s.boundary() != b0) {
        return Err(Error::MixedBoundaryTraces(format!(
            "sample {k} differs from sample 0"
        )));
    }
    let mut data = Vec::with_capacity(samples.len() * unknowns);
    let mut rhs = Vec::with_capacity(samples.len());
    for s in samples {
        let mono = |&(i, j): &(u32, u32)| s.x1.pow(i) * s.x2.pow(j);
        data.extend(fm.iter().map(|m| -(mono(m) * &s.x3)));
        data.extend(gm.iter().map(mono));
        rhs.push(-(&s.x3 * &s.x3));
    }
    let system = Matrix::new(samples.len(), unknowns, data)?;
    let coeffs = system.solve(&rhs)?;
    let build = |mons: &[(u32, u32)], cs: &[Rational]| {
        Polynomial::from_terms(
            &["x1", "x2"],
            mons.iter().zip(cs).map(|(&(i, j), c)| (vec![i, j], c.clone())),
        )
        .expect("arity matches")
    };
    Ok(Sl3Relation {
        f: build(&fm, &coeffs[..fm.len()]),
        g: build(&gm, &coeffs[fm.len()..]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};
    use crate::sampling::sample_rng;

    #[test]
    fn invariants_examples() {
        let id = Matrix::identity(3);
        let v = sl3_invariants(&id, &id).unwrap();
        assert!([&v.a1, &v.a2, &v.b1, &v.b2, &v.c1, &v.c2, &v.x1, &v.x2, &v.x3]
            .iter()
            .all(|x| **x == qi(3)));

        let d = Matrix::new(
            3,
            3,
            vec![qi(2), qi(0), qi(0), qi(0), qi(1), qi(0), qi(0), qi(0), q(1, 2)],
        )
        .unwrap();
        let v = sl3_invariants(&d, &id).unwrap();
        assert_eq!((v.a1, v.a2, v.b1, v.x3), (q(7, 2), q(7, 2), qi(3), qi(3)));
        assert!(matches!(
            sl3_invariants(&id.scale(&qi(2)), &id),
            Err(Error::NotUnimodular(_))
        ));
    }

    #[test]
    fn sampler_stays_on_fiber() {
        let mut rng = sample_rng(3, 0);
        let b = Sl3Boundary::random(&mut rng);
        let first = {
            let (m1, m2) = b.sample(&mut rng);
            sl3_invariants(&m1, &m2).unwrap()
        };
        for _ in 0..5 {
            let (m1, m2) = b.sample(&mut rng);
            let v = sl3_invariants(&m1, &m2).unwrap();
            assert_eq!(v.boundary(), first.boundary());
            assert_eq!(v.c1, b.c1);
            assert_eq!(v.c2, b.c2);
        }
    }

    #[test]
    fn fit_needs_enough_samples() {
        let mut rng = sample_rng(1, 0);
        let b = Sl3Boundary::random(&mut rng);
        let few: Vec<_> = (0..17)
            .map(|_| {
                let (m1, m2) = b.sample(&mut rng);
                sl3_invariants(&m1, &m2).unwrap()
            })
            .collect();
        assert!(matches!(fit_sl3_relation(&few), Err(Error::DegenerateSamples(_))));
        // identical samples give a rank-deficient system
        let same = vec![few[0].clone(); 30];
        assert!(matches!(fit_sl3_relation(&same), Err(Error::DegenerateSamples(_))));
    }

    #[test]
    fn fit_recovers_leading_terms() {
        let mut rng = sample_rng(5, 0);
        let b = Sl3Boundary::random(&mut rng);
        let samples: Vec<_> = (0..24)
            .map(|_| {
                let (m1, m2) = b.sample(&mut rng);
                sl3_invariants(&m1, &m2).unwrap()
            })
            .collect();
        let rel = fit_sl3_relation(&samples).unwrap();
        let s = &samples[0];
        assert_eq!(rel.f.coefficient(&[("x1", 1), ("x2", 1)]), qi(1));
        assert_eq!(rel.f.coefficient(&[("x1", 1)]), -(&s.a2 * &s.b1));
        assert_eq!(rel.f.coefficient(&[("x2", 1)]), -(&s.a1 * &s.b2));
        assert_eq!(rel.g.coefficient(&[("x1", 3)]), qi(1));
        assert_eq!(rel.g.coefficient(&[("x2", 3)]), qi(1));
        for s in &samples {
            let v = rel
                .polynomial()
                .eval_pairs(&[("x1", s.x1.clone()), ("x2", s.x2.clone()), ("x3", s.x3.clone())])
                .unwrap();
            assert!(v.is_zero());
        }
    }
}
