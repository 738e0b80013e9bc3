//! Cluster structures on open Richardson strata.
//!
//! The crate is organised bottom-up: [`weyl`] handles Weyl group
//! combinatorics, [`prepro`] is an exact module engine for preprojective
//! algebras, [`strata`] builds the cluster-tilting data of a category
//! attached to `v ≤ w`, [`minors`] evaluates the corresponding minors on
//! unitriangular matrices in type A and [`cluster`] mutates seeds of Laurent
//! polynomials. [`job`] wires them together and [`verify`] holds the
//! reproducible check suites.

pub mod cluster;
pub mod error;
pub mod job;
pub mod linalg;
pub mod minors;
pub mod prepro;
pub mod strata;
pub mod verify;
pub mod weyl;

pub use error::{Error, Result};
