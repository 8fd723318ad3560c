//! Exact arithmetic: rationals, sparse polynomials, matrices, Smith normal form.

mod matrix;
mod polynomial;
mod rational;
mod smith;

pub use matrix::{Matrix, Ring};
pub use polynomial::{poly_equal, Monomial, Polynomial};
pub use rational::{denominator_lcm, numerator_gcd, Rational};
pub use smith::{smith_normal_form, smith_normal_form_with_transforms, SmithForm};

/// Shorthand for a rational literal `p/q`.
pub fn q(p: i64, d: i64) -> Rational {
    Rational::frac(p, d)
}

/// Shorthand for an integer-valued rational.
pub fn qi(n: i64) -> Rational {
    Rational::from(n)
}
