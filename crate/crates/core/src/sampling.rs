//! Deterministic seeding and random exact objects.
//!
//! Sample `i` of a run with seed `s` draws from its own generator, seeded
//! with `splitmix64(s + i·0x9E3779B97F4A7C15)` (wrapping arithmetic). Results
//! are therefore independent of thread count and of evaluation order.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{Matrix, Rational};

pub type SampleRng = ChaCha8Rng;

const GOLDEN_GAMMA: u64 = 0x9E37_79B9_7F4A_7C15;

pub fn splitmix64(mut z: u64) -> u64 {
    z = z.wrapping_add(GOLDEN_GAMMA);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

pub fn sample_seed(seed: u64, index: u64) -> u64 {
    splitmix64(seed.wrapping_add(index.wrapping_mul(GOLDEN_GAMMA)))
}

pub fn sample_rng(seed: u64, index: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(sample_seed(seed, index))
}

/// Evaluates `f(index, rng)` for `index in 0..count` in parallel and returns
/// the results in index order.
pub fn par_samples<T, F>(seed: u64, count: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize, &mut SampleRng) -> T + Sync,
{
    (0..count)
        .into_par_iter()
        .map(|i| f(i, &mut sample_rng(seed, i as u64)))
        .collect()
}

/// A product of 4 to 8 elementary matrices `[[1,u],[0,1]]`, `[[1,0],[v,1]]`
/// with `u, v ∈ [-3, 3]`; the determinant is exactly 1.
pub fn random_unimodular(rng: &mut impl Rng) -> Matrix<Rational> {
    let len = rng.gen_range(4..=8);
    let mut m = Matrix::identity(2);
    for step in 0..len {
        let x = Rational::from(rng.gen_range(-3i64..=3));
        let e = if step % 2 == 0 {
            Matrix::new(2, 2, vec![Rational::one(), x, Rational::zero(), Rational::one()])
        } else {
            Matrix::new(2, 2, vec![Rational::one(), Rational::zero(), x, Rational::one()])
        }
        .expect("2x2");
        m = &m * &e;
    }
    m
}

/// A rational `p/q` with `|p| ≤ max_num` and `1 ≤ q ≤ max_den`.
pub fn random_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    let p = rng.gen_range(-max_num..=max_num);
    let q = rng.gen_range(1..=max_den);
    Rational::frac(p, q)
}

/// A nonzero rational `p/q` as in [`random_rational`].
pub fn random_nonzero_rational(rng: &mut impl Rng, max_num: i64, max_den: i64) -> Rational {
    loop {
        let r = random_rational(rng, max_num, max_den);
        if !r.is_zero() {
            return r;
        }
    }
}

/// An invertible 2×2 rational matrix with small entries.
pub fn random_gl2(rng: &mut impl Rng) -> Matrix<Rational> {
    loop {
        let d: Vec<Rational> = (0..4).map(|_| random_rational(rng, 4, 3)).collect();
        let m = Matrix::new(2, 2, d).expect("2x2");
        if !m.det().expect("square").is_zero() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn per_index_streams_are_reproducible() {
        let a: Vec<u64> = par_samples(7, 20, |_, rng| rng.gen());
        let b: Vec<u64> = (0..20).map(|i| sample_rng(7, i).gen()).collect();
        assert_eq!(a, b);
        assert_ne!(sample_seed(0, 0), sample_seed(0, 1));
        assert_ne!(sample_seed(0, 1), sample_seed(1, 1));
    }

    #[test]
    fn unimodular_has_det_one() {
        let mut rng = sample_rng(0, 0);
        for _ in 0..50 {
            assert!(random_unimodular(&mut rng).det().unwrap().is_one());
        }
    }
}
