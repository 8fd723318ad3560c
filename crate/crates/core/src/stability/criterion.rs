//! Nilpotent groupings and the m₁/m₂ stability criterion.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compact::{star_product, Configuration};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Stable,
    StrictlySemistable,
    Unstable,
}

impl Verdict {
    /// Verdict from the sign of a Hilbert–Mumford weight: positive is
    /// stable, zero strictly semistable, negative unstable.
    pub fn from_mu(mu: i64) -> Self {
        match mu {
            m if m > 0 => Verdict::Stable,
            0 => Verdict::StrictlySemistable,
            _ => Verdict::Unstable,
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Stable => "stable",
            Verdict::StrictlySemistable => "strictly_semistable",
            Verdict::Unstable => "unstable",
        })
    }
}

/// Boundary members of a configuration, grouped by projective equality.
/// Indices are 0-based positions in [`Configuration::matrices`].
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct NilpotentGrouping {
    pub i_nil: Vec<usize>,
    pub groups: Vec<Vec<usize>>,
    /// For group `l`, the non-nilpotent `j` with `M_j * M_i = M_i * M_j = M_i`.
    pub j_sets: Vec<Vec<usize>>,
}

impl NilpotentGrouping {
    /// Largest group size, 0 without boundary members.
    pub fn m1(&self) -> usize {
        self.groups.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Largest `#J_l` among the groups of maximal size.
    pub fn m2(&self) -> usize {
        let m1 = self.m1();
        self.groups
            .iter()
            .zip(&self.j_sets)
            .filter(|(g, _)| g.len() == m1)
            .map(|(_, j)| j.len())
            .max()
            .unwrap_or(0)
    }
}

pub fn nilpotent_grouping(cfg: &Configuration) -> NilpotentGrouping {
    let mats = cfg.matrices();
    let i_nil: Vec<usize> = (0..mats.len()).filter(|&i| mats[i].is_nilpotent()).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &i in &i_nil {
        match groups.iter_mut().find(|g| mats[g[0]] == mats[i]) {
            Some(g) => g.push(i),
            None => groups.push(vec![i]),
        }
    }
    let fixes = |j: usize, i: usize| {
        let (mj, mi) = (&mats[j], &mats[i]);
        star_product(mj, mi).is_ok_and(|p| &p == mi) && star_product(mi, mj).is_ok_and(|p| &p == mi)
    };
    let j_sets = groups
        .iter()
        .map(|g| {
            (0..mats.len())
                .filter(|&j| !mats[j].is_nilpotent() && fixes(j, g[0]))
                .collect()
        })
        .collect();
    NilpotentGrouping {
        i_nil,
        groups,
        j_sets,
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StabilityReport {
    #[serde(skip)]
    pub grouping: NilpotentGrouping,
    pub m1: usize,
    pub m2: usize,
    pub verdict: Verdict,
    pub mu_min: Option<i64>,
}

/// Compares `n − 1` with `2m₁ + m₂`: greater is stable, equal strictly
/// semistable, smaller unstable.
pub fn classify_stability(cfg: &Configuration) -> StabilityReport {
    let grouping = nilpotent_grouping(cfg);
    let (m1, m2) = (grouping.m1(), grouping.m2());
    let lhs = (cfg.n() - 1) as i64;
    let rhs = (2 * m1 + m2) as i64;
    StabilityReport {
        grouping,
        m1,
        m2,
        verdict: Verdict::from_mu(lhs - rhs),
        mu_min: None,
    }
}
