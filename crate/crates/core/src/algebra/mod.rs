//! Exact arithmetic: rationals, sparse polynomials, cyclotomic numbers,
//! interpolation, Bernoulli numbers and small linear algebra.

pub mod bernoulli;
pub mod cyclo;
pub mod interp;
pub mod linalg;
pub mod poly;
pub mod rational;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use cyclo::{cyclo_root_of_unity, CycloNumber};
pub use interp::interpolate;
pub use poly::{var_names, MultiPoly, Ring};
pub use rational::{format_scalar, parse_scalar, Scalar};
