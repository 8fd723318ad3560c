//! Trace coordinates and relations in the invariant rings.

mod fricke;
mod partition;
mod sl3;

pub use fricke::{
    fk_coordinates, fk_cubic, fk_polynomial, leading_form_at_infinity, theta, verify_relation,
    TraceCoordinates4,
};
pub use partition::{dim2_list, dimension, is_dim2_case, PartitionTuple};
pub use sl3::{fit_sl3_relation, sl3_invariants, Sl3Boundary, Sl3Invariants, Sl3Relation};
