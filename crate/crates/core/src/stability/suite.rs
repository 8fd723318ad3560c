//! Shape suite: configurations built from a small alphabet of factor types,
//! used to compare [`classify_stability`] with [`stability_oracle`] across
//! many `(m₁, m₂)` combinations.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use serde::Serialize;

use crate::algebra::{Matrix, Polynomial, Rational};
use crate::compact::random::{complete_last_slot, nilpotent_from_line};
use crate::compact::{p1p1_to_matrix, CompactifiedMatrix, Configuration, EigenvalueData, P1P1Point};
use crate::sampling::par_samples;
use crate::stability::{classify_stability, stability_oracle, Verdict};

/// Factor types. `N`, `Nt` and `K` are the boundary points with kernels
/// `(1, 0)`, `(0, 1)` and `(1, 1)`; `U` is an upper triangular point of SL₂
/// (so it fixes `N`), `G` anything with `c ≠ 0` and `e ≠ 0`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Letter {
    N,
    Nt,
    K,
    U,
    G,
}

pub const ALPHABET: [Letter; 5] = [Letter::N, Letter::Nt, Letter::K, Letter::U, Letter::G];

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

pub fn letter_of(m: &CompactifiedMatrix) -> Letter {
    if m.is_nilpotent() {
        if m.is_standard_nilpotent() {
            Letter::N
        } else if *m == CompactifiedMatrix::lower_nilpotent() {
            Letter::Nt
        } else {
            Letter::K
        }
    } else if m.c().is_zero() {
        Letter::U
    } else {
        Letter::G
    }
}

fn k_point() -> CompactifiedMatrix {
    nilpotent_from_line(&Rational::one(), &-Rational::one())
}

/// All words of length `len` over [`ALPHABET`], in lexicographic order.
pub fn shape_words(len: usize) -> Vec<Vec<Letter>> {
    let mut words = vec![Vec::new()];
    for _ in 0..len {
        words = words
            .into_iter()
            .flat_map(|w| {
                ALPHABET.iter().map(move |&l| {
                    let mut w = w.clone();
                    w.push(l);
                    w
                })
            })
            .collect();
    }
    words
}

fn small(rng: &mut impl Rng, nonzero: bool) -> Rational {
    loop {
        let x = rng.gen_range(-4i64..=4);
        if !nonzero || x != 0 {
            return x.into();
        }
    }
}

fn random_factor(letter: Letter, alpha: &Rational, rng: &mut impl Rng) -> Option<CompactifiedMatrix> {
    let z = Rational::zero;
    let o = Rational::one;
    Some(match letter {
        Letter::N => CompactifiedMatrix::standard_nilpotent(),
        Letter::Nt => CompactifiedMatrix::lower_nilpotent(),
        Letter::K => k_point(),
        Letter::U => p1p1_to_matrix(&P1P1Point::new(o(), z(), small(rng, true), small(rng, false)).ok()?, alpha),
        Letter::G => {
            let p = P1P1Point::new(small(rng, false), small(rng, true), small(rng, true), small(rng, false)).ok()?;
            p1p1_to_matrix(&p, alpha)
        }
    })
}

/// `[S : T]` forced by the letter of the last slot.
fn last_line(letter: Letter, rng: &mut impl Rng) -> (Rational, Rational) {
    match letter {
        Letter::N | Letter::U => (Rational::one(), Rational::zero()),
        Letter::Nt => (Rational::zero(), Rational::one()),
        Letter::K => (Rational::one(), -Rational::one()),
        Letter::G => (small(rng, false), small(rng, true)),
    }
}

/// Tries up to `attempts` random realizations of `word` (length `n − 1`)
/// satisfying the trace condition.
pub fn realize_shape(
    eigen: &EigenvalueData,
    word: &[Letter],
    attempts: usize,
    rng: &mut impl Rng,
) -> Option<Configuration> {
    let n = eigen.n();
    if word.len() + 1 != n || n < 3 {
        return None;
    }
    for _ in 0..attempts {
        let Some(first) = word[..n - 2]
            .iter()
            .enumerate()
            .map(|(i, &l)| random_factor(l, eigen.alpha_plus(i), rng))
            .collect::<Option<Vec<_>>>()
        else {
            continue;
        };
        let (s, t) = last_line(word[n - 2], rng);
        let fallback = (small(rng, true), small(rng, true));
        if let Some(cfg) = complete_last_slot(eigen, &first, &s, &t, fallback) {
            if cfg.matrices().iter().map(letter_of).eq(word.iter().copied()) {
                return Some(cfg);
            }
        }
    }
    None
}

#[derive(Clone, Debug, Serialize)]
pub struct ShapeOutcome {
    pub word: String,
    pub realized: bool,
    pub m1: Option<usize>,
    pub m2: Option<usize>,
    pub criterion: Option<Verdict>,
    pub oracle: Option<Verdict>,
}

impl ShapeOutcome {
    pub fn agrees(&self) -> bool {
        self.criterion == self.oracle
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SuiteReport {
    pub n: usize,
    pub outcomes: Vec<ShapeOutcome>,
    /// Number of realized shapes for each `(m₁, m₂)`.
    pub coverage: BTreeMap<String, usize>,
    pub realized: usize,
    pub disagreements: usize,
}

/// Realizes every word of length `n − 1` (64 attempts each) and compares
/// the two stability verdicts on the realized ones.
pub fn run_shape_suite(eigen: &EigenvalueData, seed: u64) -> SuiteReport {
    let words = shape_words(eigen.n() - 1);
    let outcomes = par_samples(seed, words.len(), |i, rng| {
        let word = &words[i];
        let label = word.iter().map(Letter::to_string).collect::<Vec<_>>().join(",");
        match realize_shape(eigen, word, 64, rng) {
            Some(cfg) => {
                let crit = classify_stability(&cfg);
                let oracle = stability_oracle(&cfg);
                ShapeOutcome {
                    word: label,
                    realized: true,
                    m1: Some(crit.m1),
                    m2: Some(crit.m2),
                    criterion: Some(crit.verdict),
                    oracle: Some(oracle.verdict),
                }
            }
            None => ShapeOutcome {
                word: label,
                realized: false,
                m1: None,
                m2: None,
                criterion: None,
                oracle: None,
            },
        }
    });
    let mut coverage = BTreeMap::new();
    for o in outcomes.iter().filter(|o| o.realized) {
        let key = format!("({}, {})", o.m1.unwrap_or(0), o.m2.unwrap_or(0));
        *coverage.entry(key).or_insert(0) += 1;
    }
    SuiteReport {
        n: eigen.n(),
        realized: outcomes.iter().filter(|o| o.realized).count(),
        disagreements: outcomes.iter().filter(|o| !o.agrees()).count(),
        outcomes,
        coverage,
    }
}

/// A random configuration with at least one boundary member, drawn by
/// realizing random words that contain `N`, `Nt` or `K`.
pub fn random_boundary_configuration(eigen: &EigenvalueData, rng: &mut impl Rng) -> Configuration {
    let len = eigen.n() - 1;
    loop {
        let word: Vec<Letter> = (0..len).map(|_| ALPHABET[rng.gen_range(0..ALPHABET.len())]).collect();
        if !word.iter().any(|l| matches!(l, Letter::N | Letter::Nt | Letter::K)) {
            continue;
        }
        if let Some(cfg) = realize_shape(eigen, &word, 4, rng) {
            return cfg;
        }
    }
}

/// An n = 5 configuration with the standard nilpotent at the consecutive
/// slots `first, first + 1` (0-based) and `c ≠ 0` everywhere else, so that
/// `(m₁, m₂) = (2, 0)`. The trace condition holds for any choice because
/// `N² = 0`.
pub fn sample_double_nilpotent(eigen: &EigenvalueData, first: usize, rng: &mut impl Rng) -> Option<Configuration> {
    if eigen.n() != 5 || first > 2 {
        return None;
    }
    let word: Vec<Letter> = (0..4)
        .map(|i| if i == first || i == first + 1 { Letter::N } else { Letter::G })
        .collect();
    realize_shape(eigen, &word, 64, rng)
}

/// One of the two normalized shapes for a non-stable n = 4 point, in one
/// ordering, with the trace `Tr(A₁A₂A₃)` as a polynomial in the free entries.
#[derive(Clone, Debug)]
pub struct LemmaCase {
    pub shape: usize,
    /// The letters `i`, `j`, `k` in slot order.
    pub order: [char; 3],
    pub trace: Polynomial,
}

impl LemmaCase {
    /// The right-hand side `k₄e₁e₂e₃` vanishes because `eᵢ = 0`, while the
    /// trace is a single monomial in `c_j`, `a_k`, `d_k`. Those are nonzero:
    /// `c_j ≠ 0` by assumption, and `a_k d_k = e_k² ≠ 0` since `M_k` is not
    /// nilpotent (otherwise it would equal `M_i` and `m₁ = 2`).
    pub fn violates_trace_condition(&self) -> bool {
        let allowed = ["cj", "ak", "dk"];
        self.trace.num_terms() == 1
            && self.trace.variables().iter().all(|v| allowed.contains(&v.as_str()))
    }
}

/// Both shapes in all six slot orders.
pub fn n4_lemma_cases() -> Vec<LemmaCase> {
    let v = Polynomial::var;
    let z = Polynomial::zero;
    let block = |e: [Polynomial; 4]| Matrix::new(2, 2, e.to_vec()).expect("2x2");
    let n = block([z(), Polynomial::one(), z(), z()]);
    let nt = block([z(), z(), Polynomial::one(), z()]);
    let generic_j = block([v("aj"), v("bj"), v("cj"), v("dj")]);
    let upper_k = block([v("ak"), v("bk"), z(), v("dk")]);
    let orders = [
        ['i', 'j', 'k'],
        ['i', 'k', 'j'],
        ['j', 'i', 'k'],
        ['j', 'k', 'i'],
        ['k', 'i', 'j'],
        ['k', 'j', 'i'],
    ];
    let mut out = Vec::new();
    for (shape, mj) in [(1, &generic_j), (2, &nt)] {
        for order in orders {
            let pick = |c: char| match c {
                'i' => &n,
                'j' => mj,
                _ => &upper_k,
            };
            let prod = Matrix::product([pick(order[0]), pick(order[1]), pick(order[2])]);
            let trace = prod.and_then(|p| p.trace()).expect("2x2 blocks");
            out.push(LemmaCase { shape, order, trace });
        }
    }
    out
}
