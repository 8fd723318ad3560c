//! Dense matrices over a commutative ring.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::algebra::{Polynomial, Rational};
use crate::error::{Error, Result};

/// The commutative-ring operations the matrix code needs.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
}

impl Ring for Rational {
    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for Polynomial {
    fn zero() -> Self {
        Polynomial::zero()
    }
    fn one() -> Self {
        Polynomial::one()
    }
    fn is_zero(&self) -> bool {
        Polynomial::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

impl Ring for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Ring> Matrix<T> {
    /// Row-major construction. `data.len()` must equal `rows * cols`.
    pub fn new(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if data.len() != rows * cols {
            return Err(Error::Dimension(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        Ok(Matrix { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::Dimension("ragged rows".into()));
        }
        Matrix::new(r, c, rows.into_iter().flatten().collect())
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![T::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m.data[i * n + i] = T::one();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub(crate) fn get_mut(&mut self, i: usize, j: usize) -> &mut T {
        &mut self.data[i * self.cols + j]
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn entries(&self) -> &[T] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Ring::is_zero)
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&T) -> S) -> Matrix<S> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    pub fn scale(&self, s: &T) -> Self {
        self.map(|x| x.mul(s))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.add(b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.same_shape(other)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a.sub(b))
            .collect();
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data,
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::Dimension(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out: Matrix<T> = Matrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let prod = a.mul(other.get(k, j));
                    let slot = out.get_mut(i, j);
                    *slot = slot.add(&prod);
                }
            }
        }
        Ok(out)
    }

    /// Product of a nonempty list of matrices, left to right.
    pub fn product<'a>(mats: impl IntoIterator<Item = &'a Matrix<T>>) -> Result<Self>
    where
        T: 'a,
    {
        let mut it = mats.into_iter();
        let first = it
            .next()
            .ok_or_else(|| Error::Dimension("empty product".into()))?
            .clone();
        it.try_fold(first, |acc, m| acc.checked_mul(m))
    }

    pub fn trace(&self) -> Result<T> {
        self.require_square()?;
        let mut t = T::zero();
        for i in 0..self.rows {
            t = t.add(self.get(i, i));
        }
        Ok(t)
    }

    /// Determinant by cofactor expansion along the first row; intended for
    /// the small (2×2, 3×3) matrices where the entries are polynomials.
    pub fn det(&self) -> Result<T> {
        self.require_square()?;
        Ok(self.det_unchecked())
    }

    fn det_unchecked(&self) -> T {
        let n = self.rows;
        match n {
            0 => T::one(),
            1 => self.data[0].clone(),
            2 => self.data[0].mul(&self.data[3]).sub(&self.data[1].mul(&self.data[2])),
            _ => {
                let mut total = T::zero();
                for j in 0..n {
                    let a = self.get(0, j);
                    if a.is_zero() {
                        continue;
                    }
                    let term = a.mul(&self.minor(0, j).det_unchecked());
                    total = if j % 2 == 0 { total.add(&term) } else { total.sub(&term) };
                }
                total
            }
        }
    }

    /// The submatrix with row `r` and column `c` deleted.
    pub fn minor(&self, r: usize, c: usize) -> Self {
        let mut data = Vec::with_capacity((self.rows - 1) * (self.cols - 1));
        for i in (0..self.rows).filter(|&i| i != r) {
            for j in (0..self.cols).filter(|&j| j != c) {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: self.rows - 1,
            cols: self.cols - 1,
            data,
        }
    }

    /// The submatrix on the given row and column indices.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols.len());
        for &i in rows {
            for &j in cols {
                data.push(self.get(i, j).clone());
            }
        }
        Matrix {
            rows: rows.len(),
            cols: cols.len(),
            data,
        }
    }

    fn require_square(&self) -> Result<()> {
        if !self.is_square() {
            return Err(Error::Dimension(format!(
                "expected a square matrix, got {}x{}",
                self.rows, self.cols
            )));
        }
        Ok(())
    }

    fn same_shape(&self, other: &Self) -> Result<()> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::Dimension(format!(
                "shapes {}x{} and {}x{} differ",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }
}

impl Matrix<Rational> {
    pub fn from_ints(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        Matrix::new(rows, cols, data.iter().map(|&x| Rational::from(x)).collect())
    }

    /// Reduced row echelon form and the pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                continue;
            };
            m.swap_rows(r, p);
            let inv = m.get(r, c).recip().expect("pivot is nonzero");
            for j in c..m.cols {
                let v = m.get(r, j) * &inv;
                *m.get_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let f = m.get(i, c).clone();
                for j in c..m.cols {
                    let v = m.get(i, j) - &(&f * m.get(r, j));
                    *m.get_mut(i, j) = v;
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn inverse(&self) -> Result<Self> {
        self.require_square()?;
        let n = self.rows;
        let mut aug = Matrix::zeros(n, 2 * n);
        for i in 0..n {
            for j in 0..n {
                *aug.get_mut(i, j) = self.get(i, j).clone();
            }
            *aug.get_mut(i, n + i) = Rational::one();
        }
        let (red, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return Err(Error::DivisionByZero);
        }
        let cols: Vec<usize> = (n..2 * n).collect();
        let rows: Vec<usize> = (0..n).collect();
        Ok(red.submatrix(&rows, &cols))
    }

    /// Solves `self · x = rhs` exactly. Errors unless the solution is unique.
    pub fn solve(&self, rhs: &[Rational]) -> Result<Vec<Rational>> {
        if rhs.len() != self.rows {
            return Err(Error::Dimension(format!(
                "right-hand side of length {} for {} rows",
                rhs.len(),
                self.rows
            )));
        }
        let n = self.cols;
        let mut aug = Matrix::zeros(self.rows, n + 1);
        for i in 0..self.rows {
            for j in 0..n {
                *aug.get_mut(i, j) = self.get(i, j).clone();
            }
            *aug.get_mut(i, n) = rhs[i].clone();
        }
        let (red, pivots) = aug.rref();
        if pivots.last() == Some(&n) {
            return Err(Error::DegenerateSamples("inconsistent linear system".into()));
        }
        if pivots.len() < n {
            return Err(Error::DegenerateSamples(format!(
                "rank {} below {} unknowns",
                pivots.len(),
                n
            )));
        }
        Ok((0..n).map(|i| red.get(i, n).clone()).collect())
    }

    /// Right kernel basis, one vector per free column.
    pub fn kernel(&self) -> Vec<Vec<Rational>> {
        let (red, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![Rational::zero(); self.cols];
                v[f] = Rational::one();
                for (r, &p) in pivots.iter().enumerate() {
                    v[p] = -red.get(r, f);
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }
}

impl Matrix<BigInt> {
    pub fn from_i64(rows: usize, cols: usize, data: &[i64]) -> Result<Self> {
        Matrix::new(rows, cols, data.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub(crate) fn swap_rows_int(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    pub(crate) fn swap_cols_int(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }
}

impl<T: Ring> Mul for &Matrix<T> {
    type Output = Matrix<T>;
    /// Panics on a shape mismatch; see [`Matrix::checked_mul`].
    fn mul(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_mul(rhs).expect("matrix shapes agree")
    }
}

impl<T: Ring> Add for &Matrix<T> {
    type Output = Matrix<T>;
    fn add(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_add(rhs).expect("matrix shapes agree")
    }
}

impl<T: Ring> Sub for &Matrix<T> {
    type Output = Matrix<T>;
    fn sub(self, rhs: &Matrix<T>) -> Matrix<T> {
        self.checked_sub(rhs).expect("matrix shapes agree")
    }
}

impl<T: Ring + fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl<T: Ring + fmt::Display> fmt::Debug for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(rows: usize, cols: usize, d: &[i64]) -> Matrix<Rational> {
        Matrix::from_ints(rows, cols, d).unwrap()
    }

    #[test]
    fn product_trace_det() {
        let a = q(2, 2, &[1, 1, 0, 1]);
        let b = q(2, 2, &[1, 0, 1, 1]);
        let ab = &a * &b;
        assert_eq!(ab, q(2, 2, &[2, 1, 1, 1]));
        assert_eq!(ab.trace().unwrap(), Rational::from(3));
        assert_eq!(ab.det().unwrap(), Rational::one());
        let m = q(3, 3, &[2, 0, 1, 1, 3, 0, 0, 1, 4]);
        assert_eq!(m.det().unwrap(), Rational::from(25));
    }

    #[test]
    fn inverse_round_trip() {
        let m = q(3, 3, &[2, 0, 1, 1, 3, 0, 0, 1, 4]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Matrix::identity(3));
        assert!(q(2, 2, &[1, 2, 2, 4]).inverse().is_err());
    }

    #[test]
    fn solve_and_kernel() {
        let m = q(2, 2, &[1, 2, 3, 4]);
        let x = m.solve(&[Rational::from(5), Rational::from(6)]).unwrap();
        assert_eq!(x, vec![Rational::from(-4), Rational::frac(9, 2)]);
        let k = q(1, 2, &[1, -1]).kernel();
        assert_eq!(k, vec![vec![Rational::one(), Rational::one()]]);
        assert!(q(2, 2, &[1, 2, 2, 4])
            .solve(&[Rational::one(), Rational::one()])
            .is_err());
    }

    #[test]
    fn shape_errors() {
        assert!(Matrix::<Rational>::new(2, 2, vec![Rational::one()]).is_err());
        assert!(q(2, 3, &[0; 6]).checked_mul(&q(2, 3, &[0; 6])).is_err());
        assert!(q(2, 3, &[0; 6]).trace().is_err());
    }

    #[test]
    fn polynomial_entries() {
        let x = Polynomial::var("x");
        let m = Matrix::from_rows(vec![
            vec![x.clone(), Polynomial::one()],
            vec![Polynomial::zero(), x.clone()],
        ])
        .unwrap();
        assert_eq!(m.det().unwrap(), x.pow(2));
    }
}
