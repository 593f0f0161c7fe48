//! Exact computer algebra for hyperplane arrangements: intersection lattices,
//! combinatorial Bernstein-Sato zero-locus predictions, and logarithmic
//! derivations and forms for possibly non-reduced divisors.

pub mod arrangement;
pub mod bsideals;
pub mod error;
pub mod groebner;
pub mod linalg;
pub mod logarithmic;
mod parse;
pub mod poly;
pub mod rational;

pub use error::{Error, Result};
pub use groebner::{GrobnerBasis, ModuleOrder, PolyModule};
pub use linalg::QMatrix;
pub use poly::{Monomial, Poly};
pub use rational::Rational;
