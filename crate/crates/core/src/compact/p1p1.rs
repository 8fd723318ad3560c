//! The isomorphism between ℙ¹×ℙ¹ and the closure of a semisimple class.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::compact::point::normalize_projective;
use crate::compact::CompactifiedMatrix;
use crate::error::{Error, Result};

/// `([S : T], [U : V])`, each pair in canonical projective form.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct P1P1Point {
    st: [Rational; 2],
    uv: [Rational; 2],
}

impl P1P1Point {
    pub fn new(s: Rational, t: Rational, u: Rational, v: Rational) -> Result<Self> {
        Ok(P1P1Point {
            st: normalize_projective([s, t])?,
            uv: normalize_projective([u, v])?,
        })
    }

    pub fn from_ints(s: i64, t: i64, u: i64, v: i64) -> Result<Self> {
        P1P1Point::new(s.into(), t.into(), u.into(), v.into())
    }

    pub fn s(&self) -> &Rational {
        &self.st[0]
    }
    pub fn t(&self) -> &Rational {
        &self.st[1]
    }
    pub fn u(&self) -> &Rational {
        &self.uv[0]
    }
    pub fn v(&self) -> &Rational {
        &self.uv[1]
    }
}

impl fmt::Display for P1P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "([{} : {}], [{} : {}])", self.st[0], self.st[1], self.uv[0], self.uv[1])
    }
}

impl fmt::Debug for P1P1Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// With `α⁺ = alpha`, `α⁻ = 1/alpha` and `Δ = α⁺ − α⁻`:
/// `a = (α⁻SU + α⁺TV)/Δ`, `b = SV`, `c = TU`, `d = (α⁺SU + α⁻TV)/Δ`, `e = (SU + TV)/Δ`.
///
/// ```
/// use charvar::algebra::{q, qi};
/// use charvar::compact::{p1p1_to_matrix, CompactifiedMatrix, P1P1Point};
/// let p = P1P1Point::from_ints(1, 1, 1, 1).unwrap();
/// let m = p1p1_to_matrix(&p, &qi(2));
/// let expected = CompactifiedMatrix::new(q(5, 3), qi(1), qi(1), q(5, 3), q(4, 3)).unwrap();
/// assert_eq!(m, expected);
/// ```
pub fn p1p1_to_matrix(p: &P1P1Point, alpha: &Rational) -> CompactifiedMatrix {
    let ap = alpha;
    let am = alpha.recip().expect("alpha is nonzero");
    let delta = ap - &am;
    let su = p.s() * p.u();
    let tv = p.t() * p.v();
    let a = (&am * &su + ap * &tv) / &delta;
    let d = (ap * &su + &am * &tv) / &delta;
    let e = (&su + &tv) / &delta;
    CompactifiedMatrix::new(a, p.s() * p.v(), p.t() * p.u(), d, e)
        .expect("the Segre image of a point is nonzero")
}

/// Inverse of [`p1p1_to_matrix`]: recovers `SU = α⁺e − a`, `TV = a − α⁻e`,
/// `SV = b`, `TU = c` and reads off both factors.
pub fn matrix_to_p1p1(m: &CompactifiedMatrix, alpha: &Rational) -> Result<P1P1Point> {
    let k = crate::compact::trace_of(alpha);
    if !m.in_closure(&k) {
        return Err(Error::NotOnQuadric(m.to_string()));
    }
    let am = alpha.recip().expect("alpha is nonzero");
    let su = alpha * m.e() - m.a();
    let tv = m.a() - &(&am * m.e());
    let sv = m.b().clone();
    let tu = m.c().clone();
    // rank-one matrix [[SU, SV], [TU, TV]]
    let (u, v) = if !su.is_zero() || !sv.is_zero() {
        (su.clone(), sv.clone())
    } else {
        (tu.clone(), tv.clone())
    };
    let (s, t) = if !su.is_zero() || !tu.is_zero() {
        (su, tu)
    } else {
        (sv, tv)
    };
    P1P1Point::new(s, t, u, v)
}
