//! Exact symbolic engine for Hermitean Clifford analysis: the Witt-basis
//! spinor space, spinor-valued polynomials with the Hermitean Dirac
//! operators, the Cauchy–Kovalevskaya extension of homogeneous polynomial
//! data, and dimension counts for the spaces of Hermitean monogenic
//! polynomials checked against an exact nullspace oracle.
//!
//! All arithmetic is over Gaussian rationals; nothing is rounded.

pub mod algebra;
pub mod ck;
pub mod dims;
mod error;
pub mod linalg;
pub mod par;
pub mod poly;
pub mod random;

pub use algebra::{Blade, GaussianRational, Generator, SpinorElement};
pub use ck::{CkData, Condition, SpecialSide, Violation};
pub use dims::{FischerSide, SpaceDescriptor, SpaceKind};
pub use error::{Error, Result};
pub use linalg::ExactMatrix;
pub use par::Execution;
pub use poly::{Dirac, Monomial, SpinorPoly, Var};
