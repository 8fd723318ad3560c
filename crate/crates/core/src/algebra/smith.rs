//! Smith normal form over ℤ.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::algebra::Matrix;

/// `u · a · v = d` with `u`, `v` unimodular and `d` diagonal.
#[derive(Clone, Debug)]
pub struct SmithForm {
    /// Nonzero invariant factors `d₁ | d₂ | … | d_r`, all positive.
    pub diagonal: Vec<BigInt>,
    pub rank: usize,
    pub u: Matrix<BigInt>,
    pub v: Matrix<BigInt>,
    pub d: Matrix<BigInt>,
}

/// Invariant factors and rank of an integer matrix.
///
/// ```
/// use charvar::algebra::{smith_normal_form, Matrix};
/// let m = Matrix::from_i64(2, 2, &[2, 0, 0, 3]).unwrap();
/// let (diag, rank) = smith_normal_form(&m);
/// assert_eq!(diag, vec![1.into(), 6.into()]);
/// assert_eq!(rank, 2);
/// ```
pub fn smith_normal_form(m: &Matrix<BigInt>) -> (Vec<BigInt>, usize) {
    let f = reduce(m, false);
    let rank = f.diagonal.len();
    (f.diagonal, rank)
}

/// Smith normal form together with the transforms.
pub fn smith_normal_form_with_transforms(m: &Matrix<BigInt>) -> SmithForm {
    reduce(m, true)
}

struct Work {
    a: Matrix<BigInt>,
    u: Option<Matrix<BigInt>>,
    v: Option<Matrix<BigInt>>,
}

impl Work {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap_rows_int(i, j);
        if let Some(u) = &mut self.u {
            u.swap_rows_int(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        self.a.swap_cols_int(i, j);
        if let Some(v) = &mut self.v {
            v.swap_cols_int(i, j);
        }
    }

    /// row[dst] += f · row[src]
    fn add_row(&mut self, dst: usize, src: usize, f: &BigInt) {
        add_row(&mut self.a, dst, src, f);
        if let Some(u) = &mut self.u {
            add_row(u, dst, src, f);
        }
    }

    /// col[dst] += f · col[src]
    fn add_col(&mut self, dst: usize, src: usize, f: &BigInt) {
        add_col(&mut self.a, dst, src, f);
        if let Some(v) = &mut self.v {
            add_col(v, dst, src, f);
        }
    }

    fn negate_row(&mut self, i: usize) {
        negate_row(&mut self.a, i);
        if let Some(u) = &mut self.u {
            negate_row(u, i);
        }
    }
}

fn add_row(m: &mut Matrix<BigInt>, dst: usize, src: usize, f: &BigInt) {
    for j in 0..m.cols() {
        let s = m.get(src, j) * f;
        if !s.is_zero() {
            *m.get_mut(dst, j) += s;
        }
    }
}

fn add_col(m: &mut Matrix<BigInt>, dst: usize, src: usize, f: &BigInt) {
    for i in 0..m.rows() {
        let s = m.get(i, src) * f;
        if !s.is_zero() {
            *m.get_mut(i, dst) += s;
        }
    }
}

fn negate_row(m: &mut Matrix<BigInt>, i: usize) {
    for j in 0..m.cols() {
        let v = -m.get(i, j).clone();
        *m.get_mut(i, j) = v;
    }
}

fn reduce(m: &Matrix<BigInt>, track: bool) -> SmithForm {
    let (rows, cols) = (m.rows(), m.cols());
    let mut w = Work {
        a: m.clone(),
        u: track.then(|| Matrix::identity(rows)),
        v: track.then(|| Matrix::identity(cols)),
    };
    let mut diagonal = Vec::new();
    let mut t = 0;
    while t < rows.min(cols) {
        // smallest nonzero entry of the trailing block becomes the pivot
        let mut best: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                let x = w.a.get(i, j);
                if x.is_zero() {
                    continue;
                }
                if best.map_or(true, |(bi, bj)| x.abs() < w.a.get(bi, bj).abs()) {
                    best = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = best else { break };
        w.swap_rows(t, pi);
        w.swap_cols(t, pj);

        loop {
            let mut changed = false;
            for i in t + 1..rows {
                if w.a.get(i, t).is_zero() {
                    continue;
                }
                let q = w.a.get(i, t).div_floor(w.a.get(t, t));
                w.add_row(i, t, &-q);
                if !w.a.get(i, t).is_zero() {
                    // remainder is smaller than the pivot
                    w.swap_rows(t, i);
                    changed = true;
                }
            }
            for j in t + 1..cols {
                if w.a.get(t, j).is_zero() {
                    continue;
                }
                let q = w.a.get(t, j).div_floor(w.a.get(t, t));
                w.add_col(j, t, &-q);
                if !w.a.get(t, j).is_zero() {
                    w.swap_cols(t, j);
                    changed = true;
                }
            }
            if changed {
                continue;
            }
            // row and column t are clear; enforce divisibility of the rest
            let p = w.a.get(t, t).clone();
            let bad = (t + 1..rows).find(|&i| {
                (t + 1..cols).any(|j| !w.a.get(i, j).is_multiple_of(&p))
            });
            match bad {
                Some(i) => w.add_row(t, i, &BigInt::from(1)),
                None => break,
            }
        }
        if w.a.get(t, t).is_negative() {
            w.negate_row(t);
        }
        diagonal.push(w.a.get(t, t).clone());
        t += 1;
    }
    let rank = diagonal.len();
    SmithForm {
        diagonal,
        rank,
        u: w.u.unwrap_or_else(|| Matrix::zeros(0, 0)),
        v: w.v.unwrap_or_else(|| Matrix::zeros(0, 0)),
        d: w.a,
    }
}
