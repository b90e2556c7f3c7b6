//! Matrix representations of the algebra on ideal bases: the left regular
//! map gamma (a homomorphism), the right commutant map theta (an
//! anti-homomorphism), the coordinate column map, and the matrix form of the
//! Dirac operator used to bridge tensor and column pictures.
//!
//! Index convention: the upper index of `gamma(U)^K_N = (t^K, U t_N)`
//! enumerates rows. For k = 1 this reproduces the four classical Dirac
//! matrices exactly, which pins any transposition ambiguity.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::Mv;
use crate::ideals::IdealFrame;
use crate::spin::{lorentz_matrix, SpinElement, SpinError};
use crate::EPS_ALG;

#[derive(Debug, Error)]
pub enum RepError {
    #[error("element is not in the commutant K(t): [V,t] residual {residual:.3e}")]
    NotInCommutant { residual: f64 },
    #[error("element is not in the ideal I(t): projection residual {residual:.3e}")]
    NotInIdeal { residual: f64 },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error(transparent)]
    Spin(#[from] SpinError),
}

/// Dense complex matrix produced by the gamma/theta maps against a frame.
#[derive(Debug, Clone, PartialEq)]
pub struct RepMatrix {
    pub entries: DMatrix<Complex64>,
    pub k: usize,
}

impl RepMatrix {
    pub fn dim(&self) -> usize {
        4 * self.k
    }

    pub fn identity(k: usize) -> Self {
        RepMatrix { entries: DMatrix::identity(4 * k, 4 * k), k }
    }

    pub fn norm_max(&self) -> f64 {
        self.entries.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }
}

/// Left regular representation: `gamma(U)^K_N = (t^K, U t_N)`.
pub fn gamma_map(frame: &IdealFrame, u: &Mv) -> RepMatrix {
    let d = frame.dim_complex();
    let mut m = DMatrix::zeros(d, d);
    for (n, tn) in frame.basis.iter().enumerate() {
        let image = u.mul(tn);
        for (k, tk) in frame.basis.iter().enumerate() {
            m[(k, n)] = tk.scalar_product(&image);
        }
    }
    RepMatrix { entries: m, k: frame.k }
}

/// Right commutant representation: `theta(V)^K_N = (t^K, t_N V)`;
/// anti-homomorphic and commuting with every gamma image.
pub fn theta_map(frame: &IdealFrame, v: &Mv) -> Result<RepMatrix, RepError> {
    let residual = v.commutator(&frame.t).norm_sup();
    if residual > EPS_ALG * 1e2 {
        return Err(RepError::NotInCommutant { residual });
    }
    let d = frame.dim_complex();
    let mut m = DMatrix::zeros(d, d);
    for (n, tn) in frame.basis.iter().enumerate() {
        let image = tn.mul(v);
        for (k, tk) in frame.basis.iter().enumerate() {
            m[(k, n)] = tk.scalar_product(&image);
        }
    }
    Ok(RepMatrix { entries: m, k: frame.k })
}

/// Coordinates of an ideal element against the orthonormal basis.
pub fn column(frame: &IdealFrame, omega: &Mv) -> Result<DVector<Complex64>, RepError> {
    let residual = frame.ideal_membership_residual(omega);
    if residual > EPS_ALG * 1e3 {
        return Err(RepError::NotInIdeal { residual });
    }
    Ok(DVector::from_vec(frame.coordinates(omega)))
}

/// Reconstructs the ideal element `omega^K t_K` from its coordinates.
pub fn from_column(frame: &IdealFrame, psi: &DVector<Complex64>) -> Mv {
    let mut out = Mv::zero();
    for (tk, w) in frame.basis.iter().zip(psi.iter()) {
        out = out + tk.scaled_c(*w);
    }
    out
}

/// The four frame fixtures `gamma(e^a)`.
pub fn gamma_vectors(frame: &IdealFrame) -> [RepMatrix; 4] {
    std::array::from_fn(|a| gamma_map(frame, &Mv::basis_vector(a)))
}

/// Matrix-form Dirac residual
/// `gamma^mu (d_mu + theta(A_mu) + gamma(B_mu)) psi + i m psi`
/// for a column field with supplied exact partials. `dx_coeffs[mu][a]` are
/// the coefficients of the coordinate 1-forms dx^mu over the tetrad blades
/// e^a at the evaluation point (the inverse tetrad).
pub fn dirac_operator_matrix(
    frame: &IdealFrame,
    dx_coeffs: &[[f64; 4]; 4],
    a_mu: &[Mv; 4],
    b_mu: &[Mv; 4],
    mass: f64,
    psi: &DVector<Complex64>,
    dpsi: &[DVector<Complex64>; 4],
) -> Result<DVector<Complex64>, RepError> {
    let d = frame.dim_complex();
    if psi.len() != d || dpsi.iter().any(|v| v.len() != d) {
        return Err(RepError::Dimension { expected: d, got: psi.len() });
    }
    let gammas = gamma_vectors(frame);
    let mut out = DVector::from_element(d, Complex64::new(0.0, 0.0));
    for mu in 0..4 {
        // gamma^mu = e^mu{}_a gamma(e^a)
        let mut gamma_mu = DMatrix::zeros(d, d);
        for (a, g) in gammas.iter().enumerate() {
            gamma_mu += &g.entries * Complex64::new(dx_coeffs[mu][a], 0.0);
        }
        let theta_a = theta_map(frame, &a_mu[mu])?;
        let gamma_b = gamma_map(frame, &b_mu[mu]);
        out += gamma_mu * (&dpsi[mu] + (theta_a.entries + gamma_b.entries) * psi);
    }
    out += psi * Complex64::new(0.0, mass);
    Ok(out)
}

/// R = gamma(S) for a spin element; conjugation by it realizes the Lorentz
/// rotation on the fixture matrices.
pub fn spin_conjugation_matrix(frame: &IdealFrame, s: &SpinElement) -> RepMatrix {
    gamma_map(frame, s.value())
}

/// Residual of `R^{-1} gamma(e^a) R = p^a_b gamma(e^b)` with R = gamma(S)
/// and p the Lorentz matrix induced by S; R^{-1} = gamma(S*) exactly on the
/// group, and R gamma(S*) = identity is folded into the residual.
pub fn spin_conjugation_residual(frame: &IdealFrame, s: &SpinElement) -> Result<f64, RepError> {
    let r = spin_conjugation_matrix(frame, s);
    let r_inv = gamma_map(frame, &s.inverse_value());
    let p = lorentz_matrix(s)?;
    let gammas = gamma_vectors(frame);
    let ident = (&r.entries * &r_inv.entries - DMatrix::identity(r.dim(), r.dim()))
        .iter()
        .map(|c| c.norm())
        .fold(0.0, f64::max);
    let mut worst = ident;
    for a in 0..4 {
        let lhs = &r_inv.entries * &gammas[a].entries * &r.entries;
        let mut rhs = DMatrix::zeros(r.dim(), r.dim());
        for (b, g) in gammas.iter().enumerate() {
            rhs += &g.entries * Complex64::new(p.0[(a, b)], 0.0);
        }
        worst = worst.max((lhs - rhs).iter().map(|c| c.norm()).fold(0.0, f64::max));
    }
    Ok(worst)
}
