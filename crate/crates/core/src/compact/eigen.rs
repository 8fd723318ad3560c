use serde::{Deserialize, Serialize};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Rational eigenvalues `α₁, …, α_n`, one per puncture. The class of puncture
/// `i` has eigenvalues `α⁺ = αᵢ`, `α⁻ = 1/αᵢ` and trace `kᵢ = αᵢ + 1/αᵢ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<Rational>", into = "Vec<Rational>")]
pub struct EigenvalueData {
    alphas: Vec<Rational>,
}

impl EigenvalueData {
    pub fn new(alphas: Vec<Rational>) -> Result<Self> {
        for a in &alphas {
            if a.is_zero() || a.abs().is_one() {
                return Err(Error::BadEigenvalue(a.to_string()));
            }
        }
        Ok(EigenvalueData { alphas })
    }

    pub fn from_ints(alphas: &[i64]) -> Result<Self> {
        EigenvalueData::new(alphas.iter().map(|&a| Rational::from(a)).collect())
    }

    pub fn n(&self) -> usize {
        self.alphas.len()
    }

    pub fn alphas(&self) -> &[Rational] {
        &self.alphas
    }

    /// `α⁺` of class `i` (0-based).
    pub fn alpha_plus(&self, i: usize) -> &Rational {
        &self.alphas[i]
    }

    /// `α⁻ = 1/α⁺` of class `i` (0-based).
    pub fn alpha_minus(&self, i: usize) -> Rational {
        self.alphas[i].recip().expect("alpha is nonzero")
    }

    /// `kᵢ = α⁺ + α⁻` of class `i` (0-based).
    pub fn k(&self, i: usize) -> Rational {
        trace_of(&self.alphas[i])
    }

    /// No product `Π αᵢ^{εᵢ}` with signs `εᵢ = ±1` equals 1.
    pub fn is_generic(&self) -> bool {
        is_generic(&self.alphas)
    }
}

/// `α + 1/α`.
pub fn trace_of(alpha: &Rational) -> Rational {
    alpha + &alpha.recip().expect("alpha is nonzero")
}

/// Whether no sign vector `ε ∈ {±1}ⁿ` gives `Π αᵢ^{εᵢ} = 1`.
///
/// ```
/// use charvar::compact::is_generic;
/// use charvar::algebra::Rational;
/// let a = |v: &[i64]| v.iter().map(|&x| Rational::from(x)).collect::<Vec<_>>();
/// assert!(is_generic(&a(&[2, 3, 5, 7])));
/// assert!(!is_generic(&a(&[2, 3, 6])));
/// ```
pub fn is_generic(alphas: &[Rational]) -> bool {
    let mut products = vec![Rational::one()];
    for a in alphas {
        let inv = a.recip().expect("alpha is nonzero");
        products = products.iter().flat_map(|p| [p * a, p * &inv]).collect();
    }
    products.iter().all(|p| !p.is_one())
}

impl TryFrom<Vec<Rational>> for EigenvalueData {
    type Error = Error;
    fn try_from(v: Vec<Rational>) -> Result<Self> {
        EigenvalueData::new(v)
    }
}

impl From<EigenvalueData> for Vec<Rational> {
    fn from(e: EigenvalueData) -> Self {
        e.alphas
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{q, qi};

    #[test]
    fn genericity_examples() {
        assert!(EigenvalueData::from_ints(&[2, 3, 5, 7]).unwrap().is_generic());
        // 2 · 2 · (1/4) = 1
        let e = EigenvalueData::new(vec![qi(2), qi(2), q(1, 4)]).unwrap();
        assert!(!e.is_generic());
        assert!(!EigenvalueData::from_ints(&[2, 2, 3, 12]).unwrap().is_generic());
        // an inverse pair only matters when the remaining classes also cancel
        let e = EigenvalueData::new(vec![qi(2), q(1, 2)]).unwrap();
        assert!(!e.is_generic());
        let e = EigenvalueData::new(vec![qi(2), q(1, 2), qi(3), qi(3)]).unwrap();
        assert!(!e.is_generic());
        let e = EigenvalueData::new(vec![qi(2), q(1, 2), qi(3), qi(5)]).unwrap();
        assert!(e.is_generic());
    }

    #[test]
    fn rejects_degenerate_eigenvalues() {
        for bad in [0, 1, -1] {
            assert!(matches!(
                EigenvalueData::from_ints(&[2, bad]),
                Err(Error::BadEigenvalue(_))
            ));
        }
        assert_eq!(EigenvalueData::from_ints(&[2]).unwrap().k(0), q(5, 2));
    }
}
