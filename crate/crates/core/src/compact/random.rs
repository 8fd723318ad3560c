//! Random points and configurations for tests and sampling commands.

use rand::Rng;

use crate::algebra::{Matrix, Rational};
use crate::compact::{p1p1_to_matrix, CompactifiedMatrix, Configuration, EigenvalueData, P1P1Point};
use crate::sampling::random_nonzero_rational;

/// A rational `p/q` with `|p| ≤ 9`, `q ≤ 5`, avoiding `0` and `±1`.
pub fn random_alpha(rng: &mut impl Rng) -> Rational {
    loop {
        let a = random_nonzero_rational(rng, 9, 5);
        if !a.abs().is_one() {
            return a;
        }
    }
}

/// Random eigenvalue data; with `generic` set, retries until
/// [`EigenvalueData::is_generic`] holds.
pub fn random_eigen(n: usize, generic: bool, rng: &mut impl Rng) -> EigenvalueData {
    loop {
        let e = EigenvalueData::new((0..n).map(|_| random_alpha(rng)).collect())
            .expect("alphas avoid 0 and ±1");
        if !generic || e.is_generic() {
            return e;
        }
    }
}

fn small_pair(rng: &mut impl Rng) -> (Rational, Rational) {
    loop {
        let x = rng.gen_range(-4i64..=4);
        let y = rng.gen_range(-4i64..=4);
        if x != 0 || y != 0 {
            return (x.into(), y.into());
        }
    }
}

pub fn random_p1p1(rng: &mut impl Rng) -> P1P1Point {
    let (s, t) = small_pair(rng);
    let (u, v) = small_pair(rng);
    P1P1Point::new(s, t, u, v).expect("nonzero pairs")
}

/// The boundary point whose block is the nilpotent `[[st, s²], [−t², −st]]`,
/// with kernel spanned by `(s, −t)`.
pub fn nilpotent_from_line(s: &Rational, t: &Rational) -> CompactifiedMatrix {
    CompactifiedMatrix::new(s * t, s * s, -(t * t), -(s * t), Rational::zero())
        .expect("(s, t) is nonzero")
}

/// Chooses `[U : V]` for the last slot, given `[S : T]`, so that the trace
/// condition holds.
///
/// For fixed `(S, T)` the condition is linear in `(U, V)`, say `c₁U + c₂V = 0`;
/// the solution is `[c₂ : −c₁]`. When both coefficients vanish every `(U, V)`
/// works and `fallback` is used. Returns the completed configuration, or
/// `None` if validation fails.
pub fn complete_last_slot(
    eigen: &EigenvalueData,
    first: &[CompactifiedMatrix],
    s: &Rational,
    t: &Rational,
    fallback: (Rational, Rational),
) -> Option<Configuration> {
    let n = eigen.n();
    if first.len() + 2 != n {
        return None;
    }
    let alpha = eigen.alpha_plus(n - 2);
    let residual = |u: i64, v: i64| -> Option<Rational> {
        let p = P1P1Point::new(s.clone(), t.clone(), u.into(), v.into()).ok()?;
        let mut mats = first.to_vec();
        mats.push(p1p1_to_matrix(&p, alpha));
        let cfg = Configuration::candidate(eigen.clone(), mats).ok()?;
        // the normalization rescales the last matrix, so undo it against a fixed lift
        let (l, r) = cfg.trace_sides();
        let m = cfg.matrices().last()?.clone();
        let lift = raw_lift(s, t, &u.into(), &v.into(), alpha);
        let scale = ratio(&lift, &m)?;
        Some((l - r) * scale)
    };
    let c1 = residual(1, 0)?;
    let c2 = residual(0, 1)?;
    let (u, v) = if c1.is_zero() && c2.is_zero() {
        fallback
    } else {
        (c2, -c1)
    };
    let p = P1P1Point::new(s.clone(), t.clone(), u, v).ok()?;
    let mut mats = first.to_vec();
    mats.push(p1p1_to_matrix(&p, alpha));
    Configuration::new(eigen.clone(), mats).ok()
}

/// The un-normalized image `(a, b, c, d, e)` of `(S, T, U, V)`.
fn raw_lift(s: &Rational, t: &Rational, u: &Rational, v: &Rational, alpha: &Rational) -> [Rational; 5] {
    let am = alpha.recip().expect("nonzero");
    let delta = alpha - &am;
    let su = s * u;
    let tv = t * v;
    [
        (&am * &su + alpha * &tv) / &delta,
        s * v,
        t * u,
        (alpha * &su + &am * &tv) / &delta,
        (&su + &tv) / &delta,
    ]
}

/// `λ` with `raw = λ · m`, assuming they are proportional.
fn ratio(raw: &[Rational; 5], m: &CompactifiedMatrix) -> Option<Rational> {
    let i = m.coords().iter().position(|x| !x.is_zero())?;
    raw[i].checked_div(&m.coords()[i]).ok()
}

/// A random point of the compactified representation variety: random
/// closure points in the first `n − 2` slots and a solved last slot.
pub fn random_configuration(eigen: &EigenvalueData, rng: &mut impl Rng) -> Configuration {
    let n = eigen.n();
    loop {
        let first: Vec<CompactifiedMatrix> = (0..n - 2)
            .map(|i| p1p1_to_matrix(&random_p1p1(rng), eigen.alpha_plus(i)))
            .collect();
        let (s, t) = small_pair(rng);
        let fallback = small_pair(rng);
        if let Some(cfg) = complete_last_slot(eigen, &first, &s, &t, fallback) {
            return cfg;
        }
    }
}

/// A configuration whose matrices all lie in SL₂ (no boundary points).
pub fn random_interior_configuration(eigen: &EigenvalueData, rng: &mut impl Rng) -> Configuration {
    loop {
        let cfg = random_configuration(eigen, rng);
        if cfg.matrices().iter().all(|m| !m.is_nilpotent()) {
            return cfg;
        }
    }
}

/// Conjugates by a random invertible rational matrix.
pub fn random_conjugate(cfg: &Configuration, rng: &mut impl Rng) -> (Configuration, Matrix<Rational>) {
    let g = crate::sampling::random_gl2(rng);
    (cfg.conjugate(&g).expect("invertible"), g)
}
