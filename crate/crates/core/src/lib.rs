//! Exact computer algebra for the binary cubic generic Clifford algebra.

pub mod cliffordf;
pub mod curves;
pub mod error;
pub mod expr;
pub mod freealg;
pub mod forms;
pub mod gca;
pub mod gl2;
pub mod linalg;
pub mod poly;
pub mod report;
pub mod scalars;

pub use error::{Error, Result};
pub use scalars::{
    CubicExtension, CyclotomicOmega, Field, FieldSpec, PrimeField, QwElem, Rationals, Scalar,
    ScalarValue,
};
