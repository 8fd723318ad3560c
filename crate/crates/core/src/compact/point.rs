use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::algebra::{denominator_lcm, Matrix, Rational};
use crate::error::{Error, Result};

/// A point `[a : b : c : d : e]` of ℙ⁴, read as the 3×3 matrix
/// `diag([[a, b], [c, d]], e)`.
///
/// The tuple is stored in canonical projective form: coprime integers with
/// the first nonzero entry positive. Equality is therefore projective equality.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawPoint", into = "RawPoint")]
pub struct CompactifiedMatrix {
    coords: [Rational; 5],
}

#[derive(Serialize, Deserialize)]
struct RawPoint {
    a: Rational,
    b: Rational,
    c: Rational,
    d: Rational,
    e: Rational,
}

impl TryFrom<RawPoint> for CompactifiedMatrix {
    type Error = Error;
    fn try_from(r: RawPoint) -> Result<Self> {
        CompactifiedMatrix::new(r.a, r.b, r.c, r.d, r.e)
    }
}

impl From<CompactifiedMatrix> for RawPoint {
    fn from(m: CompactifiedMatrix) -> Self {
        let [a, b, c, d, e] = m.coords;
        RawPoint { a, b, c, d, e }
    }
}

/// Scales a nonzero vector to coprime integers with positive leading entry.
pub(crate) fn normalize_projective<const N: usize>(v: [Rational; N]) -> Result<[Rational; N]> {
    let Some(first) = v.iter().find(|x| !x.is_zero()) else {
        return Err(Error::ZeroPoint);
    };
    let lcm = denominator_lcm(v.iter());
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let mut g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if first.is_negative() {
        g = -g;
    }
    Ok(std::array::from_fn(|i| Rational::from(&ints[i] / &g)))
}

impl CompactifiedMatrix {
    pub fn new(a: Rational, b: Rational, c: Rational, d: Rational, e: Rational) -> Result<Self> {
        Ok(CompactifiedMatrix {
            coords: normalize_projective([a, b, c, d, e])?,
        })
    }

    pub fn from_ints(v: [i64; 5]) -> Result<Self> {
        let [a, b, c, d, e] = v.map(Rational::from);
        CompactifiedMatrix::new(a, b, c, d, e)
    }

    /// The lift `[A : 1]` of a 2×2 matrix.
    pub fn from_block(m: &Matrix<Rational>, e: Rational) -> Result<Self> {
        if m.rows() != 2 || m.cols() != 2 {
            return Err(Error::Dimension("expected a 2x2 block".into()));
        }
        CompactifiedMatrix::new(
            m.get(0, 0).clone(),
            m.get(0, 1).clone(),
            m.get(1, 0).clone(),
            m.get(1, 1).clone(),
            e,
        )
    }

    /// `[0 : 1 : 0 : 0 : 0]`.
    pub fn standard_nilpotent() -> Self {
        CompactifiedMatrix::from_ints([0, 1, 0, 0, 0]).expect("nonzero")
    }

    /// `[0 : 0 : 1 : 0 : 0]`, the transpose of the standard nilpotent.
    pub fn lower_nilpotent() -> Self {
        CompactifiedMatrix::from_ints([0, 0, 1, 0, 0]).expect("nonzero")
    }

    pub fn identity() -> Self {
        CompactifiedMatrix::from_ints([1, 0, 0, 1, 1]).expect("nonzero")
    }

    pub fn coords(&self) -> &[Rational; 5] {
        &self.coords
    }

    pub fn a(&self) -> &Rational {
        &self.coords[0]
    }
    pub fn b(&self) -> &Rational {
        &self.coords[1]
    }
    pub fn c(&self) -> &Rational {
        &self.coords[2]
    }
    pub fn d(&self) -> &Rational {
        &self.coords[3]
    }
    pub fn e(&self) -> &Rational {
        &self.coords[4]
    }

    /// The 2×2 block `[[a, b], [c, d]]`.
    pub fn block(&self) -> Matrix<Rational> {
        Matrix::new(2, 2, self.coords[..4].to_vec()).expect("2x2")
    }

    /// Boundary points are the ones with `e = 0`.
    pub fn is_nilpotent(&self) -> bool {
        self.e().is_zero()
    }

    pub fn is_standard_nilpotent(&self) -> bool {
        *self == CompactifiedMatrix::standard_nilpotent()
    }

    pub fn is_upper_triangular(&self) -> bool {
        self.c().is_zero()
    }

    pub fn in_closure(&self, k: &Rational) -> bool {
        in_closure(&self.coords, k)
    }

    /// `[gAg⁻¹ : e]`.
    pub fn conjugate(&self, g: &Matrix<Rational>, g_inv: &Matrix<Rational>) -> Self {
        let block = &(g * &self.block()) * g_inv;
        CompactifiedMatrix::from_block(&block, self.e().clone()).expect("conjugation keeps it nonzero")
    }

    /// Transpose of the block.
    pub fn transpose(&self) -> Self {
        let [a, b, c, d, e] = self.coords.clone();
        CompactifiedMatrix::new(a, c, b, d, e).expect("nonzero")
    }
}

fn in_closure(v: &[Rational; 5], k: &Rational) -> bool {
    let [a, b, c, d, e] = v;
    &(a * d) - &(b * c) == e * e && a + d == k * e
}

/// Whether `[a:b:c:d:e]` satisfies `ad − bc = e²` and `a + d = k·e`.
///
/// ```
/// use charvar::compact::closure_membership;
/// use charvar::algebra::{q, qi};
/// let z = qi(0);
/// assert!(closure_membership(&[z.clone(), qi(1), z.clone(), z.clone(), z.clone()], &qi(3)).unwrap());
/// assert!(!closure_membership(&[qi(1), z.clone(), z.clone(), qi(1), qi(1)], &qi(3)).unwrap());
/// assert!(closure_membership(&[qi(2), z.clone(), z.clone(), q(1, 2), qi(1)], &q(5, 2)).unwrap());
/// ```
pub fn closure_membership(v: &[Rational; 5], k: &Rational) -> Result<bool> {
    if v.iter().all(Rational::is_zero) {
        return Err(Error::ZeroPoint);
    }
    Ok(in_closure(v, k))
}

/// `[AA' : ee']`. Fails when the result is the zero tuple, which can only
/// happen when both factors are boundary points.
pub fn star_product(m: &CompactifiedMatrix, m2: &CompactifiedMatrix) -> Result<CompactifiedMatrix> {
    let block = &m.block() * &m2.block();
    let e = m.e() * m2.e();
    if block.is_zero() && e.is_zero() {
        return Err(Error::UndefinedStarProduct);
    }
    CompactifiedMatrix::from_block(&block, e)
}

impl fmt::Display for CompactifiedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [a, b, c, d, e] = &self.coords;
        write!(f, "[{a} : {b} : {c} : {d} | {e}]")
    }
}

impl fmt::Debug for CompactifiedMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    #[test]
    fn canonical_form() {
        let m = CompactifiedMatrix::new(q(-1, 2), qi(0), q(3, 4), qi(1), qi(0)).unwrap();
        assert_eq!(m.coords(), &[qi(2), qi(0), qi(-3), qi(-4), qi(0)]);
        assert_eq!(
            CompactifiedMatrix::from_ints([0, 5, 0, 0, 0]).unwrap(),
            CompactifiedMatrix::standard_nilpotent()
        );
        assert!(matches!(
            CompactifiedMatrix::from_ints([0; 5]),
            Err(Error::ZeroPoint)
        ));
    }

    #[test]
    fn closure_needs_nonzero() {
        let z = qi(0);
        let v = [z.clone(), z.clone(), z.clone(), z.clone(), z];
        assert_eq!(closure_membership(&v, &qi(3)), Err(Error::ZeroPoint));
    }

    #[test]
    fn star_examples() {
        let n = CompactifiedMatrix::standard_nilpotent();
        let alpha = qi(3);
        let diag = CompactifiedMatrix::new(alpha.clone(), qi(0), qi(0), alpha.recip().unwrap(), qi(1)).unwrap();
        assert_eq!(star_product(&n, &diag).unwrap(), n);
        let id = CompactifiedMatrix::identity();
        assert_eq!(star_product(&id, &diag).unwrap(), diag);
        let upper = CompactifiedMatrix::from_ints([2, 7, 0, 5, 3]).unwrap();
        assert_eq!(star_product(&upper, &n).unwrap(), n);
        assert_eq!(star_product(&n, &n), Err(Error::UndefinedStarProduct));
        // N · Nᵀ is nonzero, so the product is defined
        assert!(star_product(&n, &n.transpose()).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let m = CompactifiedMatrix::new(q(5, 3), qi(1), qi(1), q(5, 3), q(4, 3)).unwrap();
        let s = serde_json::to_string(&m).unwrap();
        assert_eq!(s, r#"{"a":"5","b":"3","c":"3","d":"5","e":"4"}"#);
        let back: CompactifiedMatrix = serde_json::from_str(&s).unwrap();
        assert_eq!(back, m);
    }
}
