//! Exact-arithmetic toolkit for lattice polytopes.
//!
//! `odakit` decides and constructs integer decomposition properties (IDP) of
//! Minkowski sums of lattice polytopes, entirely over arbitrary-precision
//! integers and rationals — no floating point anywhere.
//!
//! The main entry points, roughly bottom-up:
//!
//! - [`exact`]: big integers/rationals, fraction-free determinants, Hermite
//!   normal form.
//! - [`geometry`]: exact V-/H-representations, hull conversion by the double
//!   description method, polar duality, face and normal fans.
//! - [`lattice`]: lattice-point enumeration, dilation, IDP and normality of a
//!   single polytope.
//! - [`classify`]: reflexive / simplicial / smooth / smooth Fano predicates
//!   and the hypothesis checker for decomposition guarantees on pairs.
//! - [`unimodular`]: facet-normal matrices, (total) unimodularity tests with
//!   witness minors, column sign normalization, and facet-basis transforms.
//! - [`idp`]: Minkowski sums, the brute-force IDP-pair oracle, and the
//!   constructive rounding decomposition.
//! - [`construct`]: symmetric edge polytopes, duals, wedges, and the fixture
//!   catalog.
//! - [`triangulate`]: placing triangulations, boundary and centric
//!   triangulations, exact verification.
//! - [`io`]: JSON ingestion (plain polytope files and polymake-style
//!   homogeneous records) and deterministic report serialization.
//!
//! # Example
//!
//! ```
//! use odakit::construct::catalog;
//! use odakit::idp::idp_pair_check;
//!
//! let p = catalog("oda2d_P")?;
//! let q = catalog("oda2d_Q")?;
//! let report = idp_pair_check(&p, &q)?;
//! assert!(!report.is_idp_pair());
//! assert!(report.gaps.iter().any(|g| g == &odakit::exact::vec_i(&[1, 1])));
//! # Ok::<(), odakit::Error>(())
//! ```

pub mod classify;
pub mod construct;
pub mod error;
pub mod exact;
pub mod geometry;
pub mod idp;
pub mod io;
pub mod lattice;
pub mod triangulate;
pub mod unimodular;

pub use error::{Error, Result};
pub use geometry::{Containment, Polytope};
