//! Affine charts around the orbit of `s₁` for n = 5 and the generators of
//! its ideal there.

use serde::Serialize;

use crate::algebra::Rational;
use crate::compact::{matrix_to_p1p1, Configuration, EigenvalueData};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Chart {
    /// `b₁, b₂, c₃, c₄ ≠ 0`, coordinates `([1:xᵢ],[yᵢ:1])` for i = 1, 2 and
    /// `([xᵢ:1],[1:yᵢ])` for i = 3, 4.
    U1,
    /// `c₁, c₂, b₃, b₄ ≠ 0`, coordinates `([zᵢ:1],[1:wᵢ])` for i = 1, 2 and
    /// `([1:zᵢ],[wᵢ:1])` for i = 3, 4.
    U2,
}

impl Chart {
    /// Torus weights of the six generators under `diag(a, a⁻¹)`.
    pub fn weights(self) -> [i32; 6] {
        match self {
            Chart::U1 => [-2, -2, 2, 2, -2, 2],
            Chart::U2 => [2, 2, -2, -2, 2, -2],
        }
    }
}

/// Affine coordinates `(xᵢ, yᵢ)` or `(zᵢ, wᵢ)` of a point in one of the charts.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChartPoint {
    pub chart: Chart,
    pub coords: [(Rational, Rational); 4],
}

impl ChartPoint {
    /// Coordinates of an n = 5 configuration, if it lies in the chart.
    pub fn from_configuration(cfg: &Configuration, chart: Chart) -> Result<Self> {
        if cfg.n() != 5 {
            return Err(Error::Dimension(format!("charts need n = 5, got {}", cfg.n())));
        }
        let mats = cfg.matrices();
        let b_slots = match chart {
            Chart::U1 => [0, 1],
            Chart::U2 => [2, 3],
        };
        let mut coords = Vec::with_capacity(4);
        for (i, m) in mats.iter().enumerate() {
            let uses_b = b_slots.contains(&i);
            let needed = if uses_b { m.b() } else { m.c() };
            if needed.is_zero() {
                return Err(Error::ChartViolation(format!(
                    "{} of matrix {} is zero",
                    if uses_b { "b" } else { "c" },
                    i + 1
                )));
            }
            let p = matrix_to_p1p1(m, cfg.eigen().alpha_plus(i))?;
            let ratio = |num: &Rational, den: &Rational| num / den;
            // b-slots read as ([1:x],[y:1]), c-slots as ([x:1],[1:y]) in both charts
            let pair = if uses_b {
                (ratio(p.t(), p.s()), ratio(p.u(), p.v()))
            } else {
                (ratio(p.s(), p.t()), ratio(p.v(), p.u()))
            };
            coords.push(pair);
        }
        Ok(ChartPoint {
            chart,
            coords: coords.try_into().expect("four factors"),
        })
    }
}

/// The six generators `X₀…X₅` (chart `U₁`) or `Y₀…Y₅` (chart `U₂`) at `p`,
/// and their torus weights.
///
/// `X_{i−1} = (xᵢ + yᵢ)/(αᵢ⁺ − αᵢ⁻)` is `eᵢ` in the chart, `X₄ = x₁ − x₂` and
/// `X₅ = x₃ − x₄`; the `Y`s are the same expressions in `(zᵢ, wᵢ)`.
pub fn chart_generators(p: &ChartPoint, eigen: &EigenvalueData) -> Result<([Rational; 6], [i32; 6])> {
    if eigen.n() != 5 {
        return Err(Error::Dimension(format!("charts need n = 5, got {}", eigen.n())));
    }
    let c = &p.coords;
    let e = |i: usize| {
        let delta = eigen.alpha_plus(i) - &eigen.alpha_minus(i);
        (&c[i].0 + &c[i].1) / delta
    };
    let values = [e(0), e(1), e(2), e(3), &c[0].0 - &c[1].0, &c[2].0 - &c[3].0];
    Ok((values, p.chart.weights()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Matrix;
    use crate::stability::limit::s1;

    #[test]
    fn generators_vanish_on_s1_orbit() {
        let eigen = EigenvalueData::from_ints(&[2, 3, 5, 7, 11]).unwrap();
        let g = Matrix::from_ints(2, 2, &[2, 1, 3, 5]).unwrap();
        let cfg = s1(&eigen).unwrap().conjugate(&g).unwrap();
        for chart in [Chart::U1, Chart::U2] {
            let p = ChartPoint::from_configuration(&cfg, chart).unwrap();
            let (vals, _) = chart_generators(&p, &eigen).unwrap();
            assert!(vals.iter().all(Rational::is_zero), "{chart:?}: {vals:?}");
        }
    }

    #[test]
    fn s1_itself_is_outside_both_charts() {
        // b₃ = 0 at s₁, and c₁ = 0
        let eigen = EigenvalueData::from_ints(&[2, 3, 5, 7, 11]).unwrap();
        let cfg = s1(&eigen).unwrap();
        assert!(ChartPoint::from_configuration(&cfg, Chart::U2).is_err());
        // but in U₁: b₁ = b₂ = 1, c₃ = c₄ = 1
        assert!(ChartPoint::from_configuration(&cfg, Chart::U1).is_ok());
    }

    #[test]
    fn weights() {
        assert_eq!(Chart::U2.weights(), [2, 2, -2, -2, 2, -2]);
        assert_eq!(Chart::U1.weights(), [-2, -2, 2, 2, -2, 2]);
    }
}
