//! Polar Jacobi polynomials.
//!
//! `P_n(z; alpha, beta; xi)` is the monic degree-n polynomial orthogonal with
//! respect to the operator `L_xi[f] = f + (z - xi) f'` and the Jacobi weight
//! `(1-z)^alpha (1+z)^beta`; equivalently, `(z - xi) P_n(z)` is the monic
//! polynomial of degree n+1 orthogonal under the point-plus-derivative inner
//! product `<f, g> = f(xi) g(xi) + integral f' g' dmu`. This crate builds
//! these polynomials by two independent routes, verifies their recurrence,
//! structure, orthogonality and symmetry identities, locates their zeros, and
//! checks the geometric statements those zeros satisfy (disk bound, level
//! curve, multiplicity, exclusion and accumulation ellipses).
//!
//! Modules:
//! - [`poly`]: dense complex polynomial arithmetic and divided differences
//! - [`hull`]: planar convex hulls and tolerant membership
//! - [`gamma`]: complex Gamma (Lanczos) and log-Gamma
//! - [`jacobi`]: classical monic Jacobi polynomials and their coefficients
//! - [`polar`]: the polar constructions and identity checks
//! - [`moments`]: the moment functional and orthogonality verification
//! - [`zeros`]: root finding and zero-location validators
//! - [`verify`]: aggregate verification suites over deterministic sweeps

pub mod dd;
pub mod error;
pub mod gamma;
pub mod hull;
pub mod jacobi;
pub mod moments;
pub mod polar;
pub mod poly;
pub mod verify;
pub mod zeros;

pub use error::{Error, Result};
pub use jacobi::{JacobiParams, Regime};
pub use num_complex::Complex64;
pub use polar::{FactorSide, PolarSpec};
pub use poly::Poly;
pub use zeros::ZeroSet;
