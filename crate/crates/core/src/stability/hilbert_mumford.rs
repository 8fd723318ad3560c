//! Hilbert–Mumford weights for the standard one-parameter subgroup
//! `λ(t) = diag(t, t⁻¹)`, and an oracle minimizing them over conjugates.
//!
//! Under `λ(t)` a closure point `[a : b : c : d : e]` becomes
//! `[a : t²b : t⁻²c : d : e]`. The weight of a configuration is the maximum
//! of `−Σ wᵢ` over the monomials not vanishing on it, where `wᵢ` is the
//! weight of the coordinate chosen from the `i`-th factor.

use crate::algebra::{Matrix, Rational};
use crate::compact::{CompactifiedMatrix, Configuration};
use crate::stability::criterion::{nilpotent_grouping, StabilityReport, Verdict};

/// Count form of the weight: `#{i : cᵢ ≠ 0} − #{i : Mᵢ = [0:1:0:0:0]}`.
///
/// Matrices with `c ≠ 0` contribute `+1`, the standard nilpotent `−1`,
/// everything else (upper triangular with a nonzero diagonal or `e`) `0`.
pub fn hm_mu(cfg: &Configuration) -> i64 {
    cfg.matrices().iter().map(factor_mu).sum()
}

fn factor_mu(m: &CompactifiedMatrix) -> i64 {
    if !m.c().is_zero() {
        1
    } else if m.is_standard_nilpotent() {
        -1
    } else {
        0
    }
}

/// Weight by enumerating every multi-index of nonzero coordinates, with
/// coordinate weights `(0, r, −r, 0, 0)` for `(a, b, c, d, e)`. Equals
/// `r · hm_mu(cfg)`; exponential in `n`, intended as a cross-check.
pub fn hm_mu_max_form(cfg: &Configuration, r: i64) -> i64 {
    let weights = [0, r, -r, 0, 0];
    let supports: Vec<Vec<i64>> = cfg
        .matrices()
        .iter()
        .map(|m| {
            m.coords()
                .iter()
                .zip(weights)
                .filter(|(x, _)| !x.is_zero())
                .map(|(_, w)| w)
                .collect()
        })
        .collect();
    let mut best = i64::MIN;
    let mut idx = vec![0usize; supports.len()];
    loop {
        let total: i64 = idx.iter().zip(&supports).map(|(&k, s)| s[k]).sum();
        best = best.max(-total);
        // odometer increment
        let mut pos = 0;
        loop {
            if pos == idx.len() {
                return best;
            }
            idx[pos] += 1;
            if idx[pos] < supports[pos].len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

/// Lines in ℚ² whose stabilizing conjugators can lower the weight.
///
/// After a conjugation `g` the weight only depends on the line
/// `L = g⁻¹·span(e₁)`: factor `i` contributes `+1` unless `L` is invariant
/// under `Aᵢ`, and `−1` exactly when `Aᵢ` is nilpotent with kernel `L`. The
/// minimum over all lines is therefore attained on the kernels of the
/// nilpotent members or the eigenlines of the others; both are rational here
/// because the eigenvalues `e·α±` are. The line `span(e₁)` (the identity) is
/// included as well.
pub fn candidate_lines(cfg: &Configuration) -> Vec<[Rational; 2]> {
    let mut lines: Vec<[Rational; 2]> = vec![[Rational::one(), Rational::zero()]];
    let mut push = |v: Vec<Rational>| {
        let line = normalize_line([v[0].clone(), v[1].clone()]);
        if !lines.contains(&line) {
            lines.push(line);
        }
    };
    for (i, m) in cfg.matrices().iter().enumerate() {
        let block = m.block();
        if m.is_nilpotent() {
            for v in block.kernel() {
                push(v);
            }
        } else {
            let ap = cfg.eigen().alpha_plus(i).clone();
            let am = cfg.eigen().alpha_minus(i);
            for ev in [m.e() * &ap, m.e() * &am] {
                let shifted = &block - &Matrix::identity(2).scale(&ev);
                for v in shifted.kernel() {
                    push(v);
                }
            }
        }
    }
    lines
}

fn normalize_line(v: [Rational; 2]) -> [Rational; 2] {
    if v[0].is_zero() {
        [Rational::zero(), Rational::one()]
    } else {
        let s = v[0].recip().expect("nonzero");
        [Rational::one(), &v[1] * &s]
    }
}

/// A conjugator `g` with `g⁻¹e₁` spanning `line`.
pub fn conjugator_for_line(line: &[Rational; 2]) -> Matrix<Rational> {
    let w = if line[0].is_zero() {
        [Rational::one(), Rational::zero()]
    } else {
        [Rational::zero(), Rational::one()]
    };
    let g_inv = Matrix::new(
        2,
        2,
        vec![line[0].clone(), w[0].clone(), line[1].clone(), w[1].clone()],
    )
    .expect("2x2");
    g_inv.inverse().expect("columns are independent")
}

/// Minimum of [`hm_mu`] over the conjugates given by [`candidate_lines`],
/// with the verdict read off its sign.
pub fn stability_oracle(cfg: &Configuration) -> StabilityReport {
    let mu_min = candidate_lines(cfg)
        .iter()
        .map(|line| {
            let g = conjugator_for_line(line);
            hm_mu(&cfg.conjugate(&g).expect("invertible"))
        })
        .min()
        .expect("the identity line is always a candidate");
    let grouping = nilpotent_grouping(cfg);
    StabilityReport {
        m1: grouping.m1(),
        m2: grouping.m2(),
        grouping,
        verdict: Verdict::from_mu(mu_min),
        mu_min: Some(mu_min),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::compact::random::{random_configuration, random_eigen};
    use crate::compact::EigenvalueData;
    use crate::sampling::sample_rng;

    fn s(n: &[CompactifiedMatrix]) -> Configuration {
        Configuration::new(
            EigenvalueData::from_ints(&[2, 3, 5, 7, 11][..n.len() + 1]).unwrap(),
            n.to_vec(),
        )
        .unwrap()
    }

    #[test]
    fn weight_examples() {
        let n = CompactifiedMatrix::standard_nilpotent();
        let nt = CompactifiedMatrix::lower_nilpotent();
        let s1 = s(&[n.clone(), n.clone(), nt.clone(), nt.clone()]);
        assert_eq!(hm_mu(&s1), 0);
        assert_eq!(stability_oracle(&s1).mu_min, Some(0));
        let s2 = s(&[n.clone(), nt.clone(), nt, n]);
        assert_eq!(stability_oracle(&s2).mu_min, Some(0));
        assert_eq!(stability_oracle(&s2).verdict, Verdict::StrictlySemistable);
    }

    #[test]
    fn max_form_scales_with_r() {
        let mut rng = sample_rng(2, 0);
        for _ in 0..20 {
            let eigen = random_eigen(5, true, &mut rng);
            let cfg = random_configuration(&eigen, &mut rng);
            for r in 1..=3 {
                assert_eq!(hm_mu_max_form(&cfg, r), r * hm_mu(&cfg));
            }
        }
    }

    #[test]
    fn conjugator_moves_line_to_e1() {
        let line = [Rational::from(2), Rational::from(-3)];
        let g = conjugator_for_line(&line);
        let v = Matrix::new(2, 1, line.to_vec()).unwrap();
        let image = &g * &v;
        assert!(image.get(1, 0).is_zero());
    }
}
