//! Exact weighted lattice-point sums over lattice polytopes.
//!
//! The crate computes the two-variable generating function `G_φ(q, y)` that
//! packages the weighted sums of a homogeneous polynomial `φ` over the
//! lattice points of every dilated face, checks its functional equation
//! `G(q, y) = (-y)^{n+deg φ} G(-q, 1/y)`, and, for simple polytopes,
//! recomputes `G_φ` from the integral of `φ` over a deformed dilate by
//! applying a Todd-y differential operator.
//!
//! All arithmetic is exact.

pub mod algebra;
pub mod corpus;
pub mod error;
pub mod face_poly;
pub mod gfun;
pub mod json;
pub mod polytope;
pub mod todd;
pub mod wsum;

pub use error::{Error, Result};
