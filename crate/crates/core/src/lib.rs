//! Exact computations with double determinantal ideals: Gröbner bases,
//! Hilbert series, charts, toric kernels and multiplicities.

pub mod ddideal;
pub mod error;
pub mod groebner;
pub mod hilbert;
pub mod lech;
pub mod polyring;
pub mod scalar;
pub mod toric;

use num_rational::BigRational;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// The coefficient field.
pub type Q = BigRational;
pub type QPolynomial = polyring::Polynomial<Q>;
pub type QGroebnerBasis = groebner::GroebnerBasis<Q>;
pub type QAmbient = hilbert::Ambient<Q>;
