//! Cluster characters of 2-Calabi–Yau categories, computed from the module
//! category of the endomorphism algebra of a cluster-tilting object.
//!
//! The algebra is given as a quiver with relations ([`quiver::Algebra`]), its
//! modules as representations ([`modules::Representation`]). From those the
//! crate computes quiver Grassmannian Euler characteristics by point counting,
//! the Euler form and its antisymmetrization, index and coindex, and finally the
//! Laurent polynomial `X_M` ([`character::cc_value`]). Two independent checks
//! ship alongside: a seed-mutation engine ([`cluster`]) and the polygon model of
//! type A ([`polygon`]).

pub mod character;
pub mod cluster;
pub mod error;
pub mod forms;
pub mod grassmannian;
pub mod laurent;
pub mod linalg;
pub mod modules;
pub mod polygon;
pub mod quiver;
pub mod scalar;

use num_bigint::BigInt;
use num_rational::BigRational;

pub use error::{Error, ErrorKind, Result};

/// Exact rationals, the default scalar domain.
pub type QField = scalar::Rationals<BigInt>;
/// An element of [`QField`].
pub type Rational = BigRational;
/// Dense matrix over the rationals.
pub type QMatrix = linalg::Matrix<QField>;
/// Dense matrix over a prime field.
pub type FpMatrix = linalg::Matrix<scalar::PrimeField>;
/// Laurent polynomial with arbitrary-precision integer coefficients.
pub type LaurentPoly = laurent::Laurent<BigInt>;

pub use character::CCObject;
pub use modules::Representation;
pub use quiver::Algebra;
