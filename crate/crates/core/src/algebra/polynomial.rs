//! Sparse multivariate polynomials over ℚ.
//!
//! A [`Polynomial`] keeps its variable list sorted and restricted to the
//! variables that actually occur, and its terms in a [`BTreeMap`] keyed by
//! exponent vectors under graded-lexicographic order. Zero coefficients are
//! never stored. Together these make equality syntactic: two polynomials are
//! equal as elements of ℚ[x…] exactly when their representations are equal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::algebra::Rational;
use crate::error::{Error, Result};

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exponents: Vec<u32>) -> Self {
        Monomial(exponents)
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Polynomial {
    vars: Vec<String>,
    terms: BTreeMap<Monomial, Rational>,
}

impl Polynomial {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn one() -> Self {
        Polynomial::constant(Rational::one())
    }

    pub fn constant(c: impl Into<Rational>) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Monomial(Vec::new()), c);
        }
        Polynomial {
            vars: Vec::new(),
            terms,
        }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(Monomial(vec![1]), Rational::one());
        Polynomial {
            vars: vec![name.to_string()],
            terms,
        }
    }

    /// Builds a polynomial from `(exponents, coefficient)` pairs over `vars`.
    /// Repeated monomials are summed.
    pub fn from_terms(
        vars: &[&str],
        terms: impl IntoIterator<Item = (Vec<u32>, Rational)>,
    ) -> Result<Self> {
        let mut out = Polynomial::zero();
        let var_polys: Vec<Polynomial> = vars.iter().map(|v| Polynomial::var(v)).collect();
        for (exps, coeff) in terms {
            if exps.len() != vars.len() {
                return Err(Error::Dimension(format!(
                    "exponent vector of length {} for {} variables",
                    exps.len(),
                    vars.len()
                )));
            }
            let mut term = Polynomial::constant(coeff);
            for (v, &e) in var_polys.iter().zip(&exps) {
                term = &term * &v.pow(e);
            }
            out = &out + &term;
        }
        Ok(out)
    }

    pub fn variables(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    /// Total degree; the zero polynomial reports 0.
    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Coefficient of the monomial `Π var^exp`; variables not listed have exponent 0.
    pub fn coefficient(&self, powers: &[(&str, u32)]) -> Rational {
        let mut exps = vec![0u32; self.vars.len()];
        for &(name, e) in powers {
            match self.vars.iter().position(|v| v == name) {
                Some(i) => exps[i] += e,
                None if e == 0 => {}
                None => return Rational::zero(),
            }
        }
        self.terms
            .get(&Monomial(exps))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coefficient(&[])
    }

    /// Sum of the terms of total degree exactly `degree`.
    pub fn homogeneous_part(&self, degree: u32) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .filter(|(m, _)| m.degree() == degree)
            .map(|(m, c)| (m.clone(), c.clone()))
            .collect();
        Polynomial::normalized(self.vars.clone(), terms)
    }

    /// Homogenizes to total degree `degree` with the fresh variable `h`.
    pub fn homogenize(&self, h: &str, degree: u32) -> Result<Polynomial> {
        let d = self.total_degree();
        if d > degree {
            return Err(Error::DegreeTooHigh(d, degree));
        }
        if self.vars.iter().any(|v| v == h) {
            return Err(Error::Dimension(format!(
                "homogenizing variable `{h}` already occurs"
            )));
        }
        let hv = Polynomial::var(h);
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let term = self.monomial_poly(m, c);
            out = &out + &(&term * &hv.pow(degree - m.degree()));
        }
        Ok(out)
    }

    /// Renames variables; names missing from `map` are kept.
    pub fn rename(&self, map: &[(&str, &str)]) -> Polynomial {
        let assign: BTreeMap<String, Polynomial> = map
            .iter()
            .map(|&(from, to)| (from.to_string(), Polynomial::var(to)))
            .collect();
        self.substitute_all(&assign)
    }

    pub fn pow(&self, exp: u32) -> Polynomial {
        let mut acc = Polynomial::one();
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact evaluation. Every variable of `self` must be assigned.
    pub fn eval(&self, assignment: &BTreeMap<String, Rational>) -> Result<Rational> {
        let values: Vec<&Rational> = self
            .vars
            .iter()
            .map(|v| {
                assignment
                    .get(v)
                    .ok_or_else(|| Error::MissingVariable(v.clone()))
            })
            .collect::<Result<_>>()?;
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (value, &e) in values.iter().zip(m.exponents()) {
                if e > 0 {
                    t *= &value.pow(e);
                }
            }
            total += &t;
        }
        Ok(total)
    }

    /// Convenience form of [`Polynomial::eval`] taking `(name, value)` pairs.
    pub fn eval_pairs(&self, pairs: &[(&str, Rational)]) -> Result<Rational> {
        let map = pairs
            .iter()
            .map(|(k, v)| (k.to_string(), v.clone()))
            .collect();
        self.eval(&map)
    }

    /// Substitutes `value` for `var`.
    pub fn substitute(&self, var: &str, value: &Polynomial) -> Polynomial {
        let mut map = BTreeMap::new();
        map.insert(var.to_string(), value.clone());
        self.substitute_all(&map)
    }

    /// Simultaneous substitution; unlisted variables are left alone.
    pub fn substitute_all(&self, map: &BTreeMap<String, Polynomial>) -> Polynomial {
        let images: Vec<Polynomial> = self
            .vars
            .iter()
            .map(|v| map.get(v).cloned().unwrap_or_else(|| Polynomial::var(v)))
            .collect();
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(c.clone());
            for (img, &e) in images.iter().zip(m.exponents()) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Multiplies every coefficient by `r`.
    pub fn scale(&self, r: &Rational) -> Polynomial {
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| (m.clone(), c * r))
            .collect();
        Polynomial::normalized(self.vars.clone(), terms)
    }

    fn monomial_poly(&self, m: &Monomial, c: &Rational) -> Polynomial {
        let mut terms = BTreeMap::new();
        terms.insert(m.clone(), c.clone());
        Polynomial::normalized(self.vars.clone(), terms)
    }

    /// Restores the invariants: no zero coefficients, no unused variables.
    fn normalized(vars: Vec<String>, terms: BTreeMap<Monomial, Rational>) -> Polynomial {
        let terms: BTreeMap<Monomial, Rational> =
            terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let used: Vec<usize> = (0..vars.len())
            .filter(|&i| terms.keys().any(|m| m.0[i] > 0))
            .collect();
        if used.len() == vars.len() {
            return Polynomial { vars, terms };
        }
        let vars = used.iter().map(|&i| vars[i].clone()).collect();
        let terms = terms
            .into_iter()
            .map(|(m, c)| (Monomial(used.iter().map(|&i| m.0[i]).collect()), c))
            .collect();
        Polynomial { vars, terms }
    }

    /// Both operands re-expressed over the union of their variables.
    fn align(&self, other: &Polynomial) -> (Vec<String>, Vec<(Monomial, Rational)>, Vec<(Monomial, Rational)>) {
        let union: Vec<String> = self
            .vars
            .iter()
            .chain(&other.vars)
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let remap = |p: &Polynomial| -> Vec<(Monomial, Rational)> {
            let idx: Vec<usize> = p
                .vars
                .iter()
                .map(|v| union.binary_search(v).expect("variable in union"))
                .collect();
            p.terms
                .iter()
                .map(|(m, c)| {
                    let mut e = vec![0u32; union.len()];
                    for (k, &i) in idx.iter().enumerate() {
                        e[i] = m.0[k];
                    }
                    (Monomial(e), c.clone())
                })
                .collect()
        };
        let a = remap(self);
        let b = remap(other);
        (union, a, b)
    }
}

/// `true` iff `p - q` is the zero polynomial.
pub fn poly_equal(p: &Polynomial, q: &Polynomial) -> bool {
    (p - q).is_zero()
}

impl Add<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (vars, a, b) = self.align(rhs);
        let mut terms: BTreeMap<Monomial, Rational> = a.into_iter().collect();
        for (m, c) in b {
            *terms.entry(m).or_insert_with(Rational::zero) += &c;
        }
        Polynomial::normalized(vars, terms)
    }
}

impl Sub<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Mul<&Polynomial> for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let (vars, a, b) = self.align(rhs);
        let mut terms: BTreeMap<Monomial, Rational> = BTreeMap::new();
        for (ma, ca) in &a {
            for (mb, cb) in &b {
                let e: Vec<u32> = ma.0.iter().zip(&mb.0).map(|(x, y)| x + y).collect();
                *terms.entry(Monomial(e)).or_insert_with(Rational::zero) += &(ca * cb);
            }
        }
        Polynomial::normalized(vars, terms)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            vars: self.vars.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! owned_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $tr::$method(&self, &rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: &Polynomial) -> Polynomial {
                $tr::$method(&self, rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                $tr::$method(self, &rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl From<Rational> for Polynomial {
    fn from(r: Rational) -> Self {
        Polynomial::constant(r)
    }
}

impl From<i64> for Polynomial {
    fn from(n: i64) -> Self {
        Polynomial::constant(Rational::from(n))
    }
}

impl fmt::Display for Polynomial {
    /// Terms from the largest monomial down, e.g. `x1^3 + x2^3 - 3/2*x1 + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let mag = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let factors: Vec<String> = self
                .vars
                .iter()
                .zip(m.exponents())
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| if e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            if factors.is_empty() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "{mag}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Polynomial {
        Polynomial::var("x")
    }
    fn y() -> Polynomial {
        Polynomial::var("y")
    }

    #[test]
    fn eval_examples() {
        let p = &x().pow(2) + &y();
        let v = p
            .eval_pairs(&[("x", Rational::from(2)), ("y", Rational::from(3))])
            .unwrap();
        assert_eq!(v, Rational::from(7));
        assert_eq!(
            Polynomial::constant(Rational::from(5))
                .eval(&BTreeMap::new())
                .unwrap(),
            Rational::from(5)
        );
        let zero = &x() - &x();
        assert!(zero.is_zero());
        assert_eq!(
            zero.eval_pairs(&[("x", Rational::frac(9, 4))]).unwrap(),
            Rational::zero()
        );
    }

    #[test]
    fn eval_missing_variable_is_named() {
        let p = &x() * &y();
        let err = p.eval_pairs(&[("x", Rational::one())]).unwrap_err();
        assert_eq!(err, Error::MissingVariable("y".into()));
    }

    #[test]
    fn equality_examples() {
        let lhs = (&x() + &y()).pow(2);
        let rhs = &(&x().pow(2) + &(&x() * &y()).scale(&Rational::from(2))) + &y().pow(2);
        assert!(poly_equal(&lhs, &rhs));
        assert!(poly_equal(&(&x() * &y()), &(&y() * &x())));
        assert!(!poly_equal(&x(), &(&x() + &Polynomial::one())));
    }

    #[test]
    fn unused_variables_are_dropped() {
        let p = &(&x() + &y()) - &y();
        assert_eq!(p.variables(), &["x".to_string()]);
        assert_eq!(p, x());
    }

    #[test]
    fn homogenize_and_leading_part() {
        // x^2 + x*y*z - 3
        let p = &(&x().pow(2) + &(&x() * &y()).mul(Polynomial::var("z"))) - &Polynomial::from(3);
        let h = p.homogenize("w", 3).unwrap();
        assert_eq!(h.total_degree(), 3);
        assert!(h.terms().all(|(m, _)| m.degree() == 3));
        let at_infinity = h.substitute("w", &Polynomial::zero());
        assert_eq!(at_infinity, p.homogeneous_part(3));
        assert!(matches!(p.homogenize("w", 2), Err(Error::DegreeTooHigh(3, 2))));
    }

    #[test]
    fn coefficient_lookup() {
        let p = Polynomial::from_terms(
            &["x1", "x2"],
            vec![(vec![1, 1], Rational::one()), (vec![1, 0], Rational::frac(-3, 2))],
        )
        .unwrap();
        assert_eq!(p.coefficient(&[("x1", 1), ("x2", 1)]), Rational::one());
        assert_eq!(p.coefficient(&[("x1", 1)]), Rational::frac(-3, 2));
        assert_eq!(p.coefficient(&[("x3", 1)]), Rational::zero());
        assert_eq!(p.to_string(), "x1*x2 - 3/2*x1");
    }

    #[test]
    fn grlex_order() {
        // degree first, then lexicographic
        assert!(Monomial(vec![0, 2]) > Monomial(vec![1, 0]));
        assert!(Monomial(vec![2, 0]) > Monomial(vec![1, 1]));
        assert!(Monomial(vec![1, 1]) > Monomial(vec![0, 2]));
    }
}
