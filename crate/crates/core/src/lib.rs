//! Pointwise-exact computational engine for the complexified exterior algebra
//! over a tetrad-equipped 4-manifold with signature (+,-,-,-).
//!
//! The crate is organised bottom-up:
//!
//! * [`algebra`]: the 16-dimensional algebra of complex nonhomogeneous forms
//!   in the orthonormal tetrad basis; central (Clifford) product, wedge,
//!   conjugations, trace, scalar product.
//! * [`spin`]: the spin group sitting inside the even subalgebra, its
//!   exponential maps and the induced Lorentz matrices.
//! * [`ideals`]: idempotents, left-ideal bases, commutant Lie algebras
//!   u(1)⊕su(k) and their structure constants.
//! * [`rep`]: the left/right regular representations on ideal bases
//!   (dense complex matrices) and the column map bridging tensor and matrix
//!   forms of the Dirac operator.
//! * [`jet`]: truncated multivariate Taylor arithmetic, the exact-derivative
//!   substrate for every analytic field in the crate.
//! * [`fields`]: analytic scalar and form-valued fields built on jets,
//!   including seeded random field generators.
//! * [`geometry`]: tetrad fields, metric, Levi-Civita connection, curvature,
//!   covariant derivatives, plus an independent finite-difference oracle.
//! * [`calculus`]: the covariant operators on form-valued tensors, the
//!   grade-2 connection form, and their identity checkers.
//! * [`equations`]: residual evaluators for the Dirac-type tensor equation,
//!   the Yang-Mills system, gauge transformations, the Lagrangian density and
//!   the even-form equivalences.
//! * [`suites`]: the named verification suites shared by the CLI and the
//!   acceptance tests.

// Index loops over the fixed 0..4 tensor ranges read better than iterator
// chains when three or four arrays share the same indices.
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod calculus;
pub mod equations;
pub mod fields;
pub mod geometry;
pub mod ideals;
pub mod jet;
pub mod rep;
pub mod spin;
pub mod suites;

/// Tolerance for generic-coefficient algebra identities. Basis-blade products
/// are exact in integer arithmetic; only accumulated rounding of generic
/// complex coefficients is measured against this.
pub const EPS_ALG: f64 = 1e-12;

/// Tolerance for spin-group membership and induced Lorentz matrices: one
/// order looser than [`EPS_ALG`] to absorb exponential-series truncation.
pub const EPS_SPIN: f64 = 1e-10;

/// Tolerance for exact-derivative geometric identities.
pub const EPS_GEO: f64 = 1e-9;

/// Tolerance for field-level identities (covariant operators, conservation
/// laws, gauge covariance) evaluated on analytic fields.
pub const EPS_FIELD: f64 = 1e-8;
