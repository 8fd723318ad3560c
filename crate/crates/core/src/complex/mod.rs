//! Abstract simplicial complexes, reduced integral homology, sphere
//! certification and the boundary complexes for n = 4 and n = 5.

mod fixtures;
mod homology;
mod simplicial;

pub use fixtures::{
    intersection_table, boundary_complex, table_consistency, BoundaryCase, IntersectionEntry, IntersectionStatus,
    TableCase,
};
pub use homology::{certify_sphere, homology, HomologyProfile};
pub use simplicial::{build_complex, random_complex, ComplexJson, SimplicialComplex};
