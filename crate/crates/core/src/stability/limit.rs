//! Limits under the one-parameter subgroup `λ(t) = diag(t, t⁻¹)` and the
//! two closed strictly semistable orbits for n = 5.

use crate::algebra::{Matrix, Rational};
use crate::compact::{CompactifiedMatrix, Configuration, EigenvalueData};
use crate::error::{Error, Result};

/// `lim_{t→0} λ(t)^{direction} · cfg`, computed factor by factor.
///
/// With `direction = 1` the coordinates scale as `[a : t²b : t⁻²c : d : e]`,
/// so a factor with `c ≠ 0` tends to `[0:0:1:0:0]`, one with `c = 0` but some
/// of `a, d, e` nonzero loses its `b`, and the standard nilpotent is fixed.
/// `direction = -1` exchanges the roles of `b` and `c`.
pub fn one_ps_limit(cfg: &Configuration, direction: i32) -> Result<Configuration> {
    if direction != 1 && direction != -1 {
        return Err(Error::IndeterminateLimit(format!(
            "direction must be 1 or -1, got {direction}"
        )));
    }
    let mats = cfg
        .matrices()
        .iter()
        .map(|m| factor_limit(m, direction))
        .collect::<Result<Vec<_>>>()?;
    Configuration::new(cfg.eigen().clone(), mats)
        .map_err(|e| Error::IndeterminateLimit(format!("limit is not a valid configuration: {e}")))
}

fn factor_limit(m: &CompactifiedMatrix, direction: i32) -> Result<CompactifiedMatrix> {
    let [a, b, c, d, e] = m.coords().clone();
    let z = Rational::zero;
    // the coordinate scaled by t^{-2}
    let dominant = if direction == 1 { &c } else { &b };
    let [a, b, c, d, e] = if !dominant.is_zero() {
        if direction == 1 {
            [z(), z(), c, z(), z()]
        } else {
            [z(), b, z(), z(), z()]
        }
    } else if !(a.is_zero() && d.is_zero() && e.is_zero()) {
        [a, z(), z(), d, e]
    } else {
        [a, b, c, d, e]
    };
    CompactifiedMatrix::new(a, b, c, d, e)
}

fn n5_eigen_check(eigen: &EigenvalueData) -> Result<()> {
    if eigen.n() != 5 {
        return Err(Error::Dimension(format!("expected n = 5, got {}", eigen.n())));
    }
    Ok(())
}

/// `s₁ = (N, N, Nᵀ, Nᵀ)` with `N = [[0, 1], [0, 0]]`.
pub fn s1(eigen: &EigenvalueData) -> Result<Configuration> {
    n5_eigen_check(eigen)?;
    let n = CompactifiedMatrix::standard_nilpotent();
    let nt = CompactifiedMatrix::lower_nilpotent();
    Configuration::new(eigen.clone(), vec![n.clone(), n, nt.clone(), nt])
}

/// `s₂ = (N, Nᵀ, Nᵀ, N)`.
pub fn s2(eigen: &EigenvalueData) -> Result<Configuration> {
    n5_eigen_check(eigen)?;
    let n = CompactifiedMatrix::standard_nilpotent();
    let nt = CompactifiedMatrix::lower_nilpotent();
    Configuration::new(eigen.clone(), vec![n.clone(), nt.clone(), nt, n])
}

/// Some `g` with `g · target · g⁻¹ = cfg`, when `target` consists of
/// boundary points with two distinct kernels (as `s₁`, `s₂` do).
///
/// A nonzero nilpotent 2×2 block is determined up to scale by its kernel, so
/// `g` only has to carry the two kernels of `target` to the corresponding
/// kernels of `cfg`; the result is then checked factor by factor.
pub fn orbit_witness(cfg: &Configuration, target: &Configuration) -> Option<Matrix<Rational>> {
    if cfg.n() != target.n() || !target.matrices().iter().all(CompactifiedMatrix::is_nilpotent) {
        return None;
    }
    let kernel = |m: &CompactifiedMatrix| -> Option<Vec<Rational>> {
        m.block().kernel().into_iter().next()
    };
    let tm = target.matrices();
    let i = 0;
    let j = (1..tm.len()).find(|&j| tm[j] != tm[i])?;
    let cols = |a: Vec<Rational>, b: Vec<Rational>| {
        Matrix::new(2, 2, vec![a[0].clone(), b[0].clone(), a[1].clone(), b[1].clone()]).ok()
    };
    let src = cols(kernel(&tm[i])?, kernel(&tm[j])?)?;
    let cm = cfg.matrices();
    if !cm[i].is_nilpotent() || !cm[j].is_nilpotent() {
        return None;
    }
    let dst = cols(kernel(&cm[i])?, kernel(&cm[j])?)?;
    let g = &dst * &src.inverse().ok()?;
    g.inverse().ok()?;
    (target.conjugate(&g).ok()?.matrices() == cfg.matrices()).then_some(g)
}

/// Which of the orbits of `s₁`, `s₂` contains `cfg`, with a witness.
pub fn s_orbit(cfg: &Configuration) -> Option<(&'static str, Matrix<Rational>)> {
    let eigen = cfg.eigen();
    if let Some(g) = orbit_witness(cfg, &s1(eigen).ok()?) {
        return Some(("s1", g));
    }
    orbit_witness(cfg, &s2(eigen).ok()?).map(|g| ("s2", g))
}
