//! Euler–Maclaurin summation for simple lattice polytopes via the Todd-y
//! operator.

pub mod apply;
pub mod coeffs;
pub mod fan;
pub mod integral;

pub use apply::{apply_todd, theorem2_sides, verify_theorem2};
pub use coeffs::{todd_coeffs, todd_coeffs_with, Route, ToddCoeffs};
pub use fan::{gamma_set, normal_fan, Cone, GammaPoint, GammaSet, NormalFan};
pub use integral::{deformed_vertex, symbolic_integral, symbolic_integral_anchored, SymbolicIntegral};
