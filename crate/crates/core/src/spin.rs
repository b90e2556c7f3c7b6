//! The spin group inside the even subalgebra: elements S with S*S = 1,
//! their exponential constructions, the adjoint action on the algebra and
//! the induced proper orthochronous Lorentz matrices.

use nalgebra::Matrix4;
use thiserror::Error;

use crate::algebra::{Blade, Coeff, Multivector, Mv};
use crate::EPS_SPIN;

/// Hard cap on exponential-series terms; factorial decay makes this generous
/// for desk-scale generators.
pub const EXP_MAX_TERMS: usize = 200;

#[derive(Debug, Error)]
pub enum SpinError {
    #[error("generator must be a real 2-form: off-grade/imaginary norm {residual:.3e}")]
    InvalidGenerator { residual: f64 },
    #[error("exponential series did not converge within {max_terms} terms")]
    NonConvergence { max_terms: usize },
    #[error("exterior exponent undefined: lambda = {lambda:.6e} <= 0")]
    OutsideDomain { lambda: f64 },
    #[error(
        "element is not in the spin group: odd norm {odd:.3e}, unitarity residual {unitarity:.3e}"
    )]
    NotSpin { odd: f64, unitarity: f64 },
    #[error("adjoint action leaks grade or reality: residual {residual:.3e}")]
    Representation { residual: f64 },
}

/// An even element with S*S = 1, up to the overall +/- sign ambiguity.
/// The sign is never normalized: every downstream use is sign-invariant.
#[derive(Debug, Clone)]
pub struct SpinElement(Mv);

impl SpinElement {
    pub fn value(&self) -> &Mv {
        &self.0
    }

    pub fn identity() -> Self {
        SpinElement(Mv::one())
    }

    /// Inverse through the defining relation: S^{-1} = S*.
    pub fn inverse_value(&self) -> Mv {
        self.0.star_conj()
    }

    /// Wraps an already-computed multivector after a membership check.
    pub fn from_checked(s: Mv, tol: f64) -> Result<Self, SpinError> {
        let (ok, odd, unitarity) = is_spin(&s, tol);
        if ok {
            Ok(SpinElement(s))
        } else {
            Err(SpinError::NotSpin { odd, unitarity })
        }
    }
}

fn generator_residual(u: &Mv) -> f64 {
    u.off_grade_norm(2).max(u.imag_part_norm())
}

/// Central-product exponential by series, for any coefficient ring.
/// Stops when a term drops below `tol` in sup-norm.
pub fn exp_central<T: Coeff>(u: &Multivector<T>, tol: f64) -> Result<Multivector<T>, SpinError> {
    let mut sum = Multivector::<T>::one();
    let mut term = Multivector::<T>::one();
    for n in 1..=EXP_MAX_TERMS {
        term = term.mul(u).scaled(1.0 / n as f64);
        sum = sum + term.clone();
        if term.norm_sup() < tol {
            return Ok(sum);
        }
    }
    Err(SpinError::NonConvergence { max_terms: EXP_MAX_TERMS })
}

/// Exponential of a real 2-form generator, summed to `tol`.
pub fn exp_series(u: &Mv, tol: f64) -> Result<SpinElement, SpinError> {
    let residual = generator_residual(u);
    if residual > EPS_SPIN {
        return Err(SpinError::InvalidGenerator { residual });
    }
    let s = exp_central(u, tol)?;
    SpinElement::from_checked(s, EPS_SPIN.max(tol * 10.0))
}

/// The degree-4 polynomial controlling the exterior exponent, in the six
/// 2-form coefficients u_{ab} (a < b).
pub fn exterior_exp_lambda(u: &Mv) -> f64 {
    let g = |label: &str| u.get(Blade::from_label(label).unwrap()).re;
    let (u01, u02, u03) = (g("01"), g("02"), g("03"));
    let (u12, u13, u23) = (g("12"), g("13"), g("23"));
    1.0 - u01 * u01 - u02 * u02 - u03 * u03 + u12 * u12
        - u03 * u03 * u12 * u12
        + 2.0 * u02 * u03 * u12 * u13
        + u13 * u13
        - u02 * u02 * u13 * u13
        - 2.0 * u01 * u03 * u12 * u23
        + 2.0 * u01 * u02 * u13 * u23
        + u23 * u23
        - u01 * u01 * u23 * u23
}

/// Closed-form spin element `(1/sqrt(lambda)) (1 + U + 1/2 U∧U)` for a real
/// 2-form U with lambda(U) > 0.
pub fn exterior_exp(u: &Mv) -> Result<SpinElement, SpinError> {
    let residual = generator_residual(u);
    if residual > EPS_SPIN {
        return Err(SpinError::InvalidGenerator { residual });
    }
    let lambda = exterior_exp_lambda(u);
    if lambda <= 0.0 {
        return Err(SpinError::OutsideDomain { lambda });
    }
    let s = (Mv::one() + u.clone() + u.wedge(u).scaled(0.5)).scaled(1.0 / lambda.sqrt());
    SpinElement::from_checked(s, EPS_SPIN)
}

/// Membership test: returns (ok, odd-part norm, ||S*S - 1||).
pub fn is_spin(s: &Mv, tol: f64) -> (bool, f64, f64) {
    let odd = s.odd_part().norm_sup();
    let unitarity = (s.star_conj().mul(s) - Mv::one()).norm_sup();
    (odd < tol && unitarity < tol, odd, unitarity)
}

/// Adjoint action S^{-1} U S; preserves every grade.
pub fn adjoint(s: &SpinElement, u: &Mv) -> Mv {
    s.inverse_value().mul(u).mul(s.value())
}

/// Proper orthochronous Lorentz matrix p^a_b, rows indexed by a.
#[derive(Debug, Clone, PartialEq)]
pub struct LorentzMatrix(pub Matrix4<f64>);

impl LorentzMatrix {
    /// Max residual over the three defining conditions: P^T eta P = eta,
    /// det P = 1, p^0_0 > 0 (reported as a violation magnitude).
    pub fn invariant_residual(&self) -> f64 {
        let eta = Matrix4::from_diagonal(&nalgebra::Vector4::new(1.0, -1.0, -1.0, -1.0));
        let ortho = (self.0.transpose() * eta * self.0 - eta).abs().max();
        let det = (self.0.determinant() - 1.0).abs();
        let chron = if self.0[(0, 0)] > 0.0 { 0.0 } else { self.0[(0, 0)].abs() };
        ortho.max(det).max(chron)
    }
}

/// Reads the Lorentz matrix off the adjoint action on the four generators:
/// S^{-1} e^a S = p^a_b e^b.
pub fn lorentz_matrix(s: &SpinElement) -> Result<LorentzMatrix, SpinError> {
    let mut p = Matrix4::zeros();
    let mut leak: f64 = 0.0;
    for a in 0..4 {
        let rotated = adjoint(s, &Mv::basis_vector(a));
        leak = leak.max(rotated.off_grade_norm(1)).max(rotated.imag_part_norm());
        for b in 0..4 {
            p[(a, b)] = rotated.get(Blade::vector(b)).re;
        }
    }
    if leak > EPS_SPIN {
        return Err(SpinError::Representation { residual: leak });
    }
    Ok(LorentzMatrix(p))
}
