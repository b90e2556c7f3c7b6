//! The 16-dimensional complexified algebra of nonhomogeneous differential
//! forms in the orthonormal tetrad basis.
//!
//! All constructions here are pointwise and exact: blade products carry
//! integer signs, and the conjugations, trace and scalar product are closed
//! formulas on the 16 coefficients. Coordinate (dx) forms never appear at
//! this layer; they are derived objects owned by the geometry module.

mod blade;
mod multivector;

pub use blade::{central_product, wedge_product, Blade, BLADE_COUNT, ETA_DIAG};
pub use multivector::{Coeff, Multivector, Mv};

use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum AlgebraError {
    #[error("invalid grade {k}: grades run 0..=4")]
    InvalidGrade { k: usize },
}
