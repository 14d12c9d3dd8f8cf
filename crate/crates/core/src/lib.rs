//! Nonassociative cyclic algebras over finite and local fields.

pub mod base;
pub mod classify;
pub mod error;
pub mod extension;
pub mod ffield;
pub mod linalg;
pub mod literal;
pub mod localfield;
pub mod nacalg;
pub mod oracle;
pub mod poly;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;
