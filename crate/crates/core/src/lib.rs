//! Fission schemes of the triangular scheme T(q+1).
//!
//! The subgroups PSL(2,q) <= PGL(2,q), M(q) <= PGammaL(2,q) all act
//! transitively on the 2-subsets of the projective line PG(1,q). Their
//! orbitals are association schemes refining T(q+1). This crate builds them
//! three ways (on 2-subsets, on secant lines of the conic `x1^2 = x0 x2`, and
//! on the poles of those lines), checks the scheme axioms, and compares the
//! results with the closed-form class descriptions in [`paper`].
//!
//! The crate is `no_std` with `alloc`; IO, timing and the command line live
//! in the `scheme-forge` crate.

#![cfg_attr(not(test), no_std)]
// class-count formulas are written as they are usually stated
#![allow(clippy::manual_div_ceil)]

extern crate alloc;

pub mod domain;
pub mod error;
pub mod field;
pub mod geometry;
pub mod group;
pub mod orbitals;
pub mod paper;
pub mod scheme;

pub use error::{Error, Result};
pub use field::{Fe, Field, FieldSpec};
pub use geometry::{LineClass, Pair, ProjLine, ProjPoint1, ProjPoint2};
pub use group::{GroupId, Moebius, Semilinear3};
pub use scheme::{Permutation, RelationLabel, Scheme};
