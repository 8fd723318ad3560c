use serde::{Deserialize, Serialize};

use crate::algebra::{Matrix, Rational};
use crate::compact::{CompactifiedMatrix, EigenvalueData};
use crate::error::{Error, Result};

/// A point of the compactified representation variety: closure points
/// `M₁, …, M_{n−1}` for the first `n − 1` classes. The last class enters only
/// through the trace condition `Tr(A₁⋯A_{n−1}) = k_n·e₁⋯e_{n−1}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ConfigurationJson", into = "ConfigurationJson")]
pub struct Configuration {
    eigen: EigenvalueData,
    mats: Vec<CompactifiedMatrix>,
}

/// Wire format: `{ "n": …, "alphas": ["p/q", …], "matrices": [{"a": …, …}, …] }`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigurationJson {
    pub n: usize,
    pub alphas: Vec<Rational>,
    pub matrices: Vec<CompactifiedMatrix>,
}

impl Configuration {
    /// Validates closure membership of every matrix and the trace condition.
    pub fn new(eigen: EigenvalueData, mats: Vec<CompactifiedMatrix>) -> Result<Self> {
        let cfg = Configuration::candidate(eigen, mats)?;
        let (lhs, rhs) = cfg.trace_sides();
        if lhs != rhs {
            return Err(Error::TraceCondition {
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            });
        }
        Ok(cfg)
    }

    /// Validates closure membership only; the trace condition may fail.
    pub fn candidate(eigen: EigenvalueData, mats: Vec<CompactifiedMatrix>) -> Result<Self> {
        if eigen.n() < 2 || mats.len() != eigen.n() - 1 {
            return Err(Error::Dimension(format!(
                "{} matrices for n = {}; expected n - 1",
                mats.len(),
                eigen.n()
            )));
        }
        for (i, m) in mats.iter().enumerate() {
            let k = eigen.k(i);
            let [a, b, c, d, e] = m.coords();
            if &(a * d) - &(b * c) != e * e {
                return Err(Error::NotInClosure {
                    index: i + 1,
                    reason: "ad - bc != e^2".into(),
                });
            }
            if a + d != &k * e {
                return Err(Error::NotInClosure {
                    index: i + 1,
                    reason: format!("a + d != k e with k = {k}"),
                });
            }
        }
        Ok(Configuration { eigen, mats })
    }

    /// Parses the JSON wire format with full validation.
    pub fn from_json(s: &str) -> Result<Self> {
        let raw: ConfigurationJson = serde_json::from_str(s)?;
        Configuration::try_from(raw)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn n(&self) -> usize {
        self.eigen.n()
    }

    pub fn eigen(&self) -> &EigenvalueData {
        &self.eigen
    }

    pub fn matrices(&self) -> &[CompactifiedMatrix] {
        &self.mats
    }

    /// `(Tr(A₁⋯A_{n−1}), k_n·e₁⋯e_{n−1})`.
    pub fn trace_sides(&self) -> (Rational, Rational) {
        let blocks: Vec<Matrix<Rational>> = self.mats.iter().map(CompactifiedMatrix::block).collect();
        let lhs = Matrix::product(&blocks)
            .and_then(|p| p.trace())
            .expect("2x2 blocks");
        let e: Rational = self.mats.iter().map(|m| m.e().clone()).product();
        (lhs, self.eigen.k(self.n() - 1) * e)
    }

    pub fn trace_condition(&self) -> bool {
        let (l, r) = self.trace_sides();
        l == r
    }

    /// Simultaneous conjugation `Mᵢ ↦ gMᵢg⁻¹` by an invertible rational `g`.
    pub fn conjugate(&self, g: &Matrix<Rational>) -> Result<Self> {
        let g_inv = g.inverse()?;
        Ok(Configuration {
            eigen: self.eigen.clone(),
            mats: self.mats.iter().map(|m| m.conjugate(g, &g_inv)).collect(),
        })
    }
}

/// The trace condition for a tuple that has not been validated otherwise.
pub fn trace_condition(eigen: &EigenvalueData, mats: &[CompactifiedMatrix]) -> Result<bool> {
    Ok(Configuration::candidate(eigen.clone(), mats.to_vec())?.trace_condition())
}

impl TryFrom<ConfigurationJson> for Configuration {
    type Error = Error;
    fn try_from(raw: ConfigurationJson) -> Result<Self> {
        if raw.n != raw.alphas.len() {
            return Err(Error::Dimension(format!(
                "n = {} but {} alphas given",
                raw.n,
                raw.alphas.len()
            )));
        }
        Configuration::new(EigenvalueData::new(raw.alphas)?, raw.matrices)
    }
}

impl From<Configuration> for ConfigurationJson {
    fn from(c: Configuration) -> Self {
        ConfigurationJson {
            n: c.eigen.n(),
            alphas: c.eigen.alphas().to_vec(),
            matrices: c.mats,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s1() -> Configuration {
        let n = CompactifiedMatrix::standard_nilpotent();
        let nt = CompactifiedMatrix::lower_nilpotent();
        Configuration::new(
            EigenvalueData::from_ints(&[2, 3, 5, 7, 11]).unwrap(),
            vec![n.clone(), n, nt.clone(), nt],
        )
        .unwrap()
    }

    #[test]
    fn s1_satisfies_trace_condition() {
        let cfg = s1();
        assert_eq!(cfg.trace_sides(), (Rational::zero(), Rational::zero()));
    }

    #[test]
    fn perturbation_breaks_trace_condition() {
        // N·Nᵀ has trace 1, and e = 0 on the right
        let n = CompactifiedMatrix::standard_nilpotent();
        let nt = CompactifiedMatrix::lower_nilpotent();
        let eigen = EigenvalueData::from_ints(&[2, 3, 5]).unwrap();
        assert!(!trace_condition(&eigen, &[n.clone(), nt.clone()]).unwrap());
        assert!(matches!(
            Configuration::new(eigen, vec![n, nt]),
            Err(Error::TraceCondition { .. })
        ));
    }

    #[test]
    fn closure_failure_names_index() {
        let n = CompactifiedMatrix::standard_nilpotent();
        let eigen = EigenvalueData::from_ints(&[2, 3, 5]).unwrap();
        let err = Configuration::new(eigen, vec![n, CompactifiedMatrix::identity()]).unwrap_err();
        assert!(matches!(err, Error::NotInClosure { index: 2, .. }));
        assert!(err.to_string().contains("matrix 2"));
    }

    #[test]
    fn json_round_trip() {
        let cfg = s1();
        let back = Configuration::from_json(&cfg.to_json()).unwrap();
        assert_eq!(back, cfg);
        let bad = cfg.to_json().replace("\"n\": 5", "\"n\": 4");
        assert!(Configuration::from_json(&bad).is_err());
    }
}
