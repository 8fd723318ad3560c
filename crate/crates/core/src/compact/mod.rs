//! The closure of SL₂ in ℙ(M₃) and configurations of closure points.
//!
//! A 2×2 matrix `A` of determinant 1 is sent to the 3×3 matrix
//! `diag(A, 1)`; its class in ℙ(M₃) is recorded as `[a : b : c : d : e]`.
//! The closure of SL₂ is the quadric `ad − bc = e²`, and the closure of the
//! semisimple class with trace `k` is cut out further by `a + d = k·e`.
//! Points with `e = 0` are nilpotent blocks, the boundary.

mod config;
mod eigen;
mod p1p1;
mod point;
pub mod random;

pub use config::{trace_condition, Configuration, ConfigurationJson};
pub use eigen::{is_generic, trace_of, EigenvalueData};
pub use p1p1::{matrix_to_p1p1, p1p1_to_matrix, P1P1Point};
pub use point::{closure_membership, star_product, CompactifiedMatrix};
