//! Exact computations on compactified SL₂ character varieties of the
//! n-punctured projective line.
//!
//! Everything is done over ℚ: eigenvalues are chosen rational, so every
//! matrix entry, trace and polynomial coefficient is an exact [`Rational`].
//!
//! - [`algebra`]: rationals, sparse polynomials, ring-generic matrices, Smith normal form.
//! - [`invariants`]: trace coordinates, the dimension formula, the Fricke–Klein cubic,
//!   leading forms at infinity and recovery of the SL₃ relation by interpolation.
//! - [`compact`]: closure points of SL₂ in ℙ(M₃), the ℙ¹×ℙ¹ parametrization and configurations.
//! - [`stability`]: nilpotent groupings, the m₁/m₂ stability criterion, a Hilbert–Mumford
//!   oracle, one-parameter-subgroup limits, blow-up chart generators and symbolic identities.
//! - [`complex`]: simplicial complexes, integral homology and sphere certification.
//!
//! ```
//! use charvar::invariants::{fk_coordinates, fk_cubic};
//! use charvar::algebra::Matrix;
//!
//! let m1 = Matrix::from_ints(2, 2, &[1, 1, 0, 1]).unwrap();
//! let m2 = Matrix::from_ints(2, 2, &[1, 0, 1, 1]).unwrap();
//! let m3 = Matrix::from_ints(2, 2, &[2, 1, 1, 1]).unwrap();
//! let t = fk_coordinates(&m1, &m2, &m3).unwrap();
//! assert!(fk_cubic(&t.x(), &t.a()).is_zero());
//! ```

pub mod algebra;
pub mod compact;
pub mod complex;
mod error;
pub mod invariants;
pub mod sampling;
pub mod stability;

pub use algebra::{Matrix, Polynomial, Rational};
pub use error::{Error, Result};
