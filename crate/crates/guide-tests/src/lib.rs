//! Compiles and runs every code block of the guide in `book/` as a
//! doc-test, via `cargo test --doc -p guide-tests`.
//!
//! mdbook renders the chapters but cannot execute them; rustdoc can.
//! Each chapter is included as the documentation of an empty module, so
//! a failing snippet is reported under its chapter's module name.

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod introduction {}

#[doc = include_str!("../../../book/src/exact-geometry.md")]
pub mod exact_geometry {}

#[doc = include_str!("../../../book/src/lattice-points.md")]
pub mod lattice_points {}

#[doc = include_str!("../../../book/src/idp-pairs.md")]
pub mod idp_pairs {}

#[doc = include_str!("../../../book/src/rounding.md")]
pub mod rounding {}

#[doc = include_str!("../../../book/src/classification.md")]
pub mod classification {}

#[doc = include_str!("../../../book/src/unimodularity.md")]
pub mod unimodularity {}

#[doc = include_str!("../../../book/src/triangulations.md")]
pub mod triangulations {}

#[doc = include_str!("../../../book/src/constructions.md")]
pub mod constructions {}

#[doc = include_str!("../../../book/src/cli.md")]
pub mod cli {}
