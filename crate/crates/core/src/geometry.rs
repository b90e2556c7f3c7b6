//! Analytic tetrad fields and the derived pseudo-Riemannian structure:
//! metric, Levi-Civita connection, curvature tensors and covariant
//! derivatives of classical tensors.
//!
//! Exact derivatives are primary: every preset supplies closed-form jets, so
//! the identities here are checked to rounding error. A central
//! finite-difference adaptor exists only as an independent oracle and never
//! feeds the main path.

use std::sync::Arc;

use nalgebra::Matrix4;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{Blade, Mv, ETA_DIAG};
use crate::fields::ScalarField;
use crate::jet::{coordinate_jets, RJet};
use crate::spin::{exterior_exp, lorentz_matrix, SpinError};

#[derive(Debug, Error)]
pub enum GeometryError {
    #[error("degenerate tetrad at {x:?}: det e = {det:.3e}")]
    DegenerateTetrad { x: [f64; 4], det: f64 },
    #[error("tensor rank mismatch: expected {expected} indices, got {got}")]
    RankMismatch { expected: usize, got: usize },
    #[error(transparent)]
    Spin(#[from] SpinError),
}

type TetradEval = dyn Fn(&[RJet; 4]) -> [[RJet; 4]; 4] + Send + Sync;

/// Analytic tetrad `e_mu{}^a(x)`, evaluated all at once as jets.
#[derive(Clone)]
pub struct TetradField {
    components: Arc<TetradEval>,
    name: String,
}

/// Conformal factor options for the conformal preset.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", deny_unknown_fields)]
pub enum ConformalFactor {
    /// Omega = exp(kappa . x)
    Exponential { kappa: [f64; 4] },
    /// Omega = 1 + c . x  (keep |c| small against the sample box)
    Polynomial { linear: [f64; 4] },
}

/// Oscillation profile for the position-dependent spin rotation.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(rename_all = "snake_case", tag = "kind", deny_unknown_fields)]
pub enum RotationProfile {
    Linear { wave: [f64; 4], amp: f64 },
    Sin { wave: [f64; 4], amp: f64 },
}

impl RotationProfile {
    fn field(&self) -> ScalarField {
        match self.clone() {
            RotationProfile::Linear { wave, amp } => {
                crate::fields::linear_phase(wave).scale(amp)
            }
            RotationProfile::Sin { wave, amp } => {
                crate::fields::linear_phase(wave).sin().scale(amp)
            }
        }
    }
}

impl TetradField {
    pub fn new(
        name: impl Into<String>,
        f: impl Fn(&[RJet; 4]) -> [[RJet; 4]; 4] + Send + Sync + 'static,
    ) -> Self {
        TetradField { components: Arc::new(f), name: name.into() }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// e_mu{}^a = delta_mu^a.
    pub fn flat() -> Self {
        Self::new("flat", |_| {
            std::array::from_fn(|mu| {
                std::array::from_fn(|a| RJet::constant(if mu == a { 1.0 } else { 0.0 }))
            })
        })
    }

    /// e_mu{}^a = Omega(x) delta_mu^a.
    pub fn conformal(factor: ConformalFactor) -> Self {
        let omega: ScalarField = match factor {
            ConformalFactor::Exponential { kappa } => crate::fields::linear_phase(kappa).exp(),
            ConformalFactor::Polynomial { linear } => {
                crate::fields::linear_phase(linear).add(&ScalarField::constant(1.0))
            }
        };
        Self::new("conformal", move |x| {
            let w = omega.eval(x);
            std::array::from_fn(|mu| {
                std::array::from_fn(|a| if mu == a { w } else { RJet::zero() })
            })
        })
    }

    /// Constant proper Lorentz matrix applied to the flat tetrad, built from
    /// the exterior exponent of a constant 2-form generator.
    pub fn rotated(generator: Mv) -> Result<Self, GeometryError> {
        let s = exterior_exp(&generator)?;
        let p = lorentz_matrix(&s)?.0;
        Ok(Self::new("rotated", move |_| {
            // e_mu{}^a = p^a_mu, constant coefficients
            std::array::from_fn(|mu| std::array::from_fn(|a| RJet::constant(p[(a, mu)])))
        }))
    }

    /// Position-dependent Lorentz rotation of the flat tetrad:
    /// S(x) = exterior_exp(f(x) G) with a constant real 2-form G, giving
    /// e_mu{}^a(x) = p^a_mu(x). The metric stays flat while the tetrad
    /// coefficients vary, which turns on the grade-2 connection form.
    pub fn spin_rotated(generator: Mv, profile: RotationProfile) -> Self {
        let f = profile.field();
        Self::new("spin_rotated", move |x| {
            let p = lorentz_jets(&generator, &f, x);
            std::array::from_fn(|mu| std::array::from_fn(|a| p[a][mu]))
        })
    }

    /// Pulls the tetrad back through an analytic map x = phi(x'), producing
    /// the components in the primed chart:
    /// e'_mu{}^a(x') = (d phi^nu / d x'^mu) e_nu{}^a(phi(x')).
    pub fn compose_diffeomorphism(&self, phi: [ScalarField; 4]) -> Self {
        let base = self.clone();
        Self::new(format!("{}+diffeo", self.name), move |xp| {
            let mapped: [RJet; 4] = std::array::from_fn(|nu| phi[nu].eval(xp));
            let jac: [[RJet; 4]; 4] =
                std::array::from_fn(|nu| std::array::from_fn(|mu| mapped[nu].partial(mu)));
            let e = base.eval(&mapped);
            std::array::from_fn(|mu| {
                std::array::from_fn(|a| {
                    let mut acc = RJet::zero();
                    for nu in 0..4 {
                        acc = acc + jac[nu][mu] * e[nu][a];
                    }
                    acc
                })
            })
        })
    }

    pub fn eval(&self, x: &[RJet; 4]) -> [[RJet; 4]; 4] {
        (self.components)(x)
    }

    pub fn eval_at(&self, point: &[f64; 4]) -> [[RJet; 4]; 4] {
        self.eval(&coordinate_jets(point))
    }
}

/// The Lorentz-matrix jets p^a_b(x) of S(x) = exterior_exp(f(x) G),
/// computed in the jet-coefficient algebra and projected to real parts.
pub fn lorentz_jets(generator: &Mv, f: &ScalarField, x: &[RJet; 4]) -> [[RJet; 4]; 4] {
    use crate::jet::MvJet;
    let fj = f.eval(x).complexify();
    let u = generator.map(|c| fj.scale_c(*c));
    let s = exterior_exp_jet(&u);
    let s_star = s.star_conj();
    std::array::from_fn(|a| {
        let ea = MvJet::from_const(&Mv::basis_vector(a));
        let rotated = s_star.mul(&ea).mul(&s);
        std::array::from_fn(|b| rotated.get(Blade::vector(b)).real_part())
    })
}

/// Exterior exponent in the jet ring: (1 + U + 1/2 U∧U) / sqrt(lambda(U)).
/// Panics if the value part of lambda is not positive; presets built from
/// rotation-like generators keep lambda >= 1 everywhere.
pub fn exterior_exp_jet(u: &crate::jet::MvJet) -> crate::jet::MvJet {
    let lambda = exterior_lambda_jet(u);
    let inv_sqrt = lambda.sqrt().recip().complexify();
    let s = crate::jet::MvJet::one() + u.clone() + u.wedge(u).scaled(0.5);
    s.map(|c| *c * inv_sqrt)
}

/// The quartic lambda polynomial evaluated on jet coefficients.
pub fn exterior_lambda_jet(u: &crate::jet::MvJet) -> RJet {
    let g = |label: &str| u.get(Blade::from_label(label).unwrap()).real_part();
    let (u01, u02, u03) = (g("01"), g("02"), g("03"));
    let (u12, u13, u23) = (g("12"), g("13"), g("23"));
    RJet::constant(1.0) - u01 * u01 - u02 * u02 - u03 * u03 + u12 * u12
        - u03 * u03 * u12 * u12
        + (u02 * u03 * u12 * u13).scale(2.0)
        + u13 * u13
        - u02 * u02 * u13 * u13
        - (u01 * u03 * u12 * u23).scale(2.0)
        + (u01 * u02 * u13 * u23).scale(2.0)
        + u23 * u23
        - u01 * u01 * u23 * u23
}

/// 4x4 determinant on jets by cofactor expansion.
fn det4(m: &[[RJet; 4]; 4]) -> RJet {
    let mut det = RJet::zero();
    // permutations of (0,1,2,3) with signs
    const PERMS: [([usize; 4], f64); 24] = [
        ([0, 1, 2, 3], 1.0),
        ([0, 1, 3, 2], -1.0),
        ([0, 2, 1, 3], -1.0),
        ([0, 2, 3, 1], 1.0),
        ([0, 3, 1, 2], 1.0),
        ([0, 3, 2, 1], -1.0),
        ([1, 0, 2, 3], -1.0),
        ([1, 0, 3, 2], 1.0),
        ([1, 2, 0, 3], 1.0),
        ([1, 2, 3, 0], -1.0),
        ([1, 3, 0, 2], -1.0),
        ([1, 3, 2, 0], 1.0),
        ([2, 0, 1, 3], 1.0),
        ([2, 0, 3, 1], -1.0),
        ([2, 1, 0, 3], -1.0),
        ([2, 1, 3, 0], 1.0),
        ([2, 3, 0, 1], 1.0),
        ([2, 3, 1, 0], -1.0),
        ([3, 0, 1, 2], 1.0),
        ([3, 0, 2, 1], 1.0),
        ([3, 1, 0, 2], 1.0),
        ([3, 1, 2, 0], -1.0),
        ([3, 2, 0, 1], -1.0),
        ([3, 2, 1, 0], 1.0),
    ];
    for (perm, sign) in PERMS {
        let term = m[0][perm[0]] * m[1][perm[1]] * m[2][perm[2]] * m[3][perm[3]];
        det = det + term.scale(sign);
    }
    det
}

/// Gauss-Jordan inverse on jets; pivots on value magnitude.
fn invert4(m: &[[RJet; 4]; 4]) -> Option<[[RJet; 4]; 4]> {
    let mut a = *m;
    let mut inv: [[RJet; 4]; 4] = std::array::from_fn(|i| {
        std::array::from_fn(|j| RJet::constant(if i == j { 1.0 } else { 0.0 }))
    });
    for col in 0..4 {
        let pivot_row = (col..4).max_by(|&r1, &r2| {
            a[r1][col].value().abs().partial_cmp(&a[r2][col].value().abs()).unwrap()
        })?;
        if a[pivot_row][col].value().abs() < 1e-14 {
            return None;
        }
        a.swap(col, pivot_row);
        inv.swap(col, pivot_row);
        let scale = a[col][col].recip();
        for j in 0..4 {
            a[col][j] = a[col][j] * scale;
            inv[col][j] = inv[col][j] * scale;
        }
        for row in 0..4 {
            if row == col {
                continue;
            }
            let factor = a[row][col];
            for j in 0..4 {
                a[row][j] = a[row][j] - factor * a[col][j];
                inv[row][j] = inv[row][j] - factor * inv[col][j];
            }
        }
    }
    Some(inv)
}

/// Everything the derived structure knows at one chart point, jet-valued.
pub struct Geometry {
    pub x: [f64; 4],
    /// e_mu{}^a
    pub e: [[RJet; 4]; 4],
    /// e^mu{}_a, indexed `[a][mu]` (matrix inverse of e)
    pub e_inv: [[RJet; 4]; 4],
    /// g_{mu nu}
    pub g: [[RJet; 4]; 4],
    /// g^{mu nu}
    pub g_inv: [[RJet; 4]; 4],
    /// sqrt(-det g) = |det e|
    pub sqrt_neg_g: RJet,
    /// Gamma_{mu nu}{}^lambda as `gamma[mu][nu][lambda]`
    pub gamma: [[[RJet; 4]; 4]; 4],
}

impl Geometry {
    pub fn at(tetrad: &TetradField, x: &[f64; 4]) -> Result<Geometry, GeometryError> {
        let e = tetrad.eval_at(x);
        let det = det4(&e);
        if det.value().abs() < 1e-10 {
            return Err(GeometryError::DegenerateTetrad { x: *x, det: det.value() });
        }
        let minv = invert4(&e)
            .ok_or(GeometryError::DegenerateTetrad { x: *x, det: det.value() })?;
        // minv[a][mu] = e^mu{}_a
        let e_inv = minv;
        let mut g: [[RJet; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| RJet::zero()));
        let mut g_inv: [[RJet; 4]; 4] =
            std::array::from_fn(|_| std::array::from_fn(|_| RJet::zero()));
        for mu in 0..4 {
            for nu in 0..4 {
                let mut acc = RJet::zero();
                let mut acc_inv = RJet::zero();
                for a in 0..4 {
                    acc = acc + (e[mu][a] * e[nu][a]).scale(ETA_DIAG[a] as f64);
                    acc_inv = acc_inv + (e_inv[a][mu] * e_inv[a][nu]).scale(ETA_DIAG[a] as f64);
                }
                g[mu][nu] = acc;
                g_inv[mu][nu] = acc_inv;
            }
        }
        let sqrt_neg_g = if det.value() >= 0.0 { det } else { det.scale(-1.0) };
        // Levi-Civita from the metric jets
        let dg: [[[RJet; 4]; 4]; 4] = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| std::array::from_fn(|kappa| g[mu][nu].partial(kappa)))
        });
        let gamma = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                std::array::from_fn(|lam| {
                    let mut acc = RJet::zero();
                    for kappa in 0..4 {
                        let sym = dg[nu][kappa][mu] + dg[mu][kappa][nu] - dg[mu][nu][kappa];
                        acc = acc + g_inv[lam][kappa] * sym;
                    }
                    acc.scale(0.5)
                })
            })
        });
        Ok(Geometry { x: *x, e, e_inv, g, g_inv, sqrt_neg_g, gamma })
    }

    /// dx^mu in the tetrad basis: dx^mu = e^mu{}_a e^a.
    pub fn dx_coeff(&self, mu: usize, a: usize) -> RJet {
        self.e_inv[a][mu]
    }

    /// Curvature tensor R_{lambda mu nu}{}^kappa, storage order
    /// `[lambda][mu][nu][kappa]`.
    pub fn riemann(&self) -> [[[[RJet; 4]; 4]; 4]; 4] {
        let dgamma: [[[[RJet; 4]; 4]; 4]; 4] = std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                std::array::from_fn(|lam| {
                    std::array::from_fn(|rho| self.gamma[mu][nu][lam].partial(rho))
                })
            })
        });
        std::array::from_fn(|lam| {
            std::array::from_fn(|mu| {
                std::array::from_fn(|nu| {
                    std::array::from_fn(|kappa| {
                        let mut acc = dgamma[nu][lam][kappa][mu] - dgamma[mu][lam][kappa][nu];
                        for eta in 0..4 {
                            acc = acc + self.gamma[mu][eta][kappa] * self.gamma[nu][lam][eta]
                                - self.gamma[nu][eta][kappa] * self.gamma[mu][lam][eta];
                        }
                        acc
                    })
                })
            })
        })
    }

    /// The mixed tensor R^lambda{}_{rho mu nu} appearing in the Ricci
    /// identity (and, with flipped sign, in the commutator of the covariant
    /// form operators): R^lambda{}_{rho mu nu} = -R_{rho mu nu}{}^lambda.
    pub fn riemann_mixed(&self) -> [[[[RJet; 4]; 4]; 4]; 4] {
        let r = self.riemann();
        std::array::from_fn(|lam| {
            std::array::from_fn(|rho| {
                std::array::from_fn(|mu| std::array::from_fn(|nu| r[rho][mu][nu][lam].scale(-1.0)))
            })
        })
    }

    /// Ricci tensor R_{nu rho} = R^mu{}_{nu mu rho}.
    pub fn ricci(&self) -> [[RJet; 4]; 4] {
        let rm = self.riemann_mixed();
        std::array::from_fn(|nu| {
            std::array::from_fn(|rho| {
                let mut acc = RJet::zero();
                for mu in 0..4 {
                    acc = acc + rm[mu][nu][mu][rho];
                }
                acc
            })
        })
    }

    /// Scalar curvature R = g^{rho nu} R_{rho nu}.
    pub fn scalar_curvature(&self) -> RJet {
        let ric = self.ricci();
        let mut acc = RJet::zero();
        for rho in 0..4 {
            for nu in 0..4 {
                acc = acc + self.g_inv[rho][nu] * ric[rho][nu];
            }
        }
        acc
    }

    /// Covariant derivative of a tensor with jet components; the derivative
    /// index is appended as the last (lower) slot.
    pub fn covariant_derivative(&self, t: &Tensor) -> Tensor {
        let rank = t.variances.len();
        let mut variances = t.variances.clone();
        variances.push(Variance::Down);
        let size = 4usize.pow(rank as u32 + 1);
        let mut data = vec![RJet::zero(); size];
        let mut idx = vec![0usize; rank];
        for flat in 0..t.data.len() {
            // decode the row-major index
            let mut rem = flat;
            for i in (0..rank).rev() {
                idx[i] = rem % 4;
                rem /= 4;
            }
            let _ = rem;
            for mu in 0..4 {
                let mut acc = t.data[flat].partial(mu);
                for (slot, variance) in t.variances.iter().enumerate() {
                    for lam in 0..4 {
                        let mut other = idx.clone();
                        other[slot] = lam;
                        let val = t.data[Tensor::flat_index(&other)];
                        match variance {
                            // + Gamma_{lam mu}{}^{nu_slot} u^{... lam ...}
                            Variance::Up => {
                                acc = acc + self.gamma[lam][mu][idx[slot]] * val;
                            }
                            // - Gamma_{nu_slot mu}{}^{lam} u_{... lam ...}
                            Variance::Down => {
                                acc = acc - self.gamma[idx[slot]][mu][lam] * val;
                            }
                        }
                    }
                }
                data[flat * 4 + mu] = acc;
            }
        }
        Tensor { variances, data }
    }
}

/// Index variance of one tensor slot.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    Up,
    Down,
}

/// Dense tensor of jets over the chart, row-major in its indices.
#[derive(Debug, Clone)]
pub struct Tensor {
    pub variances: Vec<Variance>,
    pub data: Vec<RJet>,
}

impl Tensor {
    pub fn new(variances: Vec<Variance>, data: Vec<RJet>) -> Result<Self, GeometryError> {
        let expected = 4usize.pow(variances.len() as u32);
        if data.len() != expected {
            return Err(GeometryError::RankMismatch { expected, got: data.len() });
        }
        Ok(Tensor { variances, data })
    }

    pub fn scalar(j: RJet) -> Self {
        Tensor { variances: vec![], data: vec![j] }
    }

    pub fn rank(&self) -> usize {
        self.variances.len()
    }

    pub fn flat_index(idx: &[usize]) -> usize {
        idx.iter().fold(0, |acc, &i| acc * 4 + i)
    }

    pub fn get(&self, idx: &[usize]) -> RJet {
        self.data[Self::flat_index(idx)]
    }

    /// Tensor product, right operand indices appended.
    pub fn tensor_product(&self, rhs: &Tensor) -> Tensor {
        let mut variances = self.variances.clone();
        variances.extend(rhs.variances.iter().copied());
        let mut data = Vec::with_capacity(self.data.len() * rhs.data.len());
        for a in &self.data {
            for b in &rhs.data {
                data.push(*a * *b);
            }
        }
        Tensor { variances, data }
    }

    pub fn sub(&self, rhs: &Tensor) -> Tensor {
        assert_eq!(self.variances, rhs.variances);
        Tensor {
            variances: self.variances.clone(),
            data: self.data.iter().zip(rhs.data.iter()).map(|(a, b)| *a - *b).collect(),
        }
    }

    pub fn norm_sup_values(&self) -> f64 {
        self.data.iter().map(|j| j.value().abs()).fold(0.0, f64::max)
    }
}

/// Plain-value snapshot for reporting.
#[derive(Debug, Clone, Serialize)]
pub struct GeometryPoint {
    pub x: [f64; 4],
    pub g: [[f64; 4]; 4],
    pub g_inv: [[f64; 4]; 4],
    pub sqrt_neg_g: f64,
    pub gamma: [[[f64; 4]; 4]; 4],
    pub riemann: Vec<Vec<Vec<Vec<f64>>>>,
    pub ricci: [[f64; 4]; 4],
    pub scalar_curvature: f64,
}

impl GeometryPoint {
    pub fn from_geometry(geo: &Geometry) -> GeometryPoint {
        let riem = geo.riemann();
        let ric = geo.ricci();
        GeometryPoint {
            x: geo.x,
            g: std::array::from_fn(|m| std::array::from_fn(|n| geo.g[m][n].value())),
            g_inv: std::array::from_fn(|m| std::array::from_fn(|n| geo.g_inv[m][n].value())),
            sqrt_neg_g: geo.sqrt_neg_g.value(),
            gamma: std::array::from_fn(|m| {
                std::array::from_fn(|n| std::array::from_fn(|l| geo.gamma[m][n][l].value()))
            }),
            riemann: (0..4)
                .map(|l| {
                    (0..4)
                        .map(|m| {
                            (0..4)
                                .map(|n| (0..4).map(|k| riem[l][m][n][k].value()).collect())
                                .collect()
                        })
                        .collect()
                })
                .collect(),
            ricci: std::array::from_fn(|m| std::array::from_fn(|n| ric[m][n].value())),
            scalar_curvature: geo.scalar_curvature().value(),
        }
    }
}

/// Metric signature check: one positive and three negative eigenvalues,
/// g_00 > 0, det g < 0.
pub fn signature_ok(geo: &Geometry) -> bool {
    let m = Matrix4::from_fn(|i, j| geo.g[i][j].value());
    let eigen = m.symmetric_eigen();
    let pos = eigen.eigenvalues.iter().filter(|&&l| l > 0.0).count();
    let neg = eigen.eigenvalues.iter().filter(|&&l| l < 0.0).count();
    pos == 1 && neg == 3 && geo.g[0][0].value() > 0.0 && m.determinant() < 0.0
}

/// Central finite differences of the metric values: the independent oracle
/// for the connection (second order, step h).
pub fn fd_connection(
    tetrad: &TetradField,
    x: &[f64; 4],
    h: f64,
) -> Result<[[[f64; 4]; 4]; 4], GeometryError> {
    let metric_values = |p: &[f64; 4]| -> Result<[[f64; 4]; 4], GeometryError> {
        let geo = Geometry::at(tetrad, p)?;
        Ok(std::array::from_fn(|m| std::array::from_fn(|n| geo.g[m][n].value())))
    };
    let base = Geometry::at(tetrad, x)?;
    let mut dg = [[[0.0; 4]; 4]; 4]; // dg[kappa][mu][nu] = d_kappa g_{mu nu}
    for kappa in 0..4 {
        let mut xp = *x;
        let mut xm = *x;
        xp[kappa] += h;
        xm[kappa] -= h;
        let gp = metric_values(&xp)?;
        let gm = metric_values(&xm)?;
        for mu in 0..4 {
            for nu in 0..4 {
                dg[kappa][mu][nu] = (gp[mu][nu] - gm[mu][nu]) / (2.0 * h);
            }
        }
    }
    Ok(std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            std::array::from_fn(|lam| {
                let mut acc = 0.0;
                for kappa in 0..4 {
                    acc += base.g_inv[lam][kappa].value()
                        * (dg[mu][nu][kappa] + dg[nu][mu][kappa] - dg[kappa][mu][nu]);
                }
                0.5 * acc
            })
        })
    }))
}

/// Central finite differences of the connection values: the independent
/// oracle for the curvature tensor.
pub fn fd_riemann(
    tetrad: &TetradField,
    x: &[f64; 4],
    h: f64,
) -> Result<[[[[f64; 4]; 4]; 4]; 4], GeometryError> {
    let gamma_values = |p: &[f64; 4]| -> Result<[[[f64; 4]; 4]; 4], GeometryError> {
        let geo = Geometry::at(tetrad, p)?;
        Ok(std::array::from_fn(|m| {
            std::array::from_fn(|n| std::array::from_fn(|l| geo.gamma[m][n][l].value()))
        }))
    };
    let base = Geometry::at(tetrad, x)?;
    let mut dgamma = [[[[0.0; 4]; 4]; 4]; 4]; // dgamma[rho][mu][nu][lam] = d_rho Gamma
    for rho in 0..4 {
        let mut xp = *x;
        let mut xm = *x;
        xp[rho] += h;
        xm[rho] -= h;
        let gp = gamma_values(&xp)?;
        let gm = gamma_values(&xm)?;
        for mu in 0..4 {
            for nu in 0..4 {
                for lam in 0..4 {
                    dgamma[rho][mu][nu][lam] = (gp[mu][nu][lam] - gm[mu][nu][lam]) / (2.0 * h);
                }
            }
        }
    }
    Ok(std::array::from_fn(|lam| {
        std::array::from_fn(|mu| {
            std::array::from_fn(|nu| {
                std::array::from_fn(|kappa| {
                    let mut acc = dgamma[mu][nu][lam][kappa] - dgamma[nu][mu][lam][kappa];
                    for eta in 0..4 {
                        acc += base.gamma[mu][eta][kappa].value() * base.gamma[nu][lam][eta].value()
                            - base.gamma[nu][eta][kappa].value()
                                * base.gamma[mu][lam][eta].value();
                    }
                    acc
                })
            })
        })
    }))
}
