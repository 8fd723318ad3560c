// mdbook cannot run snippets that depend on a crate outside the standard
// library. Each chapter is pulled in here as the docs of an empty module so
// that `cargo test --doc` compiles and runs every block against charvar.
// One module per chapter keeps failures traceable to their file.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}
#[doc = include_str!("../../../book/src/exact-arithmetic.md")]
pub mod exact_arithmetic {}
#[doc = include_str!("../../../book/src/trace-coordinates.md")]
pub mod trace_coordinates {}
#[doc = include_str!("../../../book/src/compactified-classes.md")]
pub mod compactified_classes {}
#[doc = include_str!("../../../book/src/stability.md")]
pub mod stability {}
#[doc = include_str!("../../../book/src/charts-and-identities.md")]
pub mod charts_and_identities {}
#[doc = include_str!("../../../book/src/boundary-complexes.md")]
pub mod boundary_complexes {}
#[doc = include_str!("../../../book/src/command-line.md")]
pub mod command_line {}
