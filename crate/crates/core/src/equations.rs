//! Residual evaluators and identity checkers for the coupled Dirac-type /
//! Yang-Mills tensor system: the wave equation on a left ideal, the current
//! and its conservation law, field strength and the second Yang-Mills
//! equation, unitary and spin gauge transformations, the Lagrangian density,
//! and the even-form equivalences of the k=1,2 special cases.
//!
//! Nothing here integrates in time. Every claim of the system is an identity
//! or a covariance over analytic fields, checkable pointwise to near machine
//! precision through the jet substrate.

use std::sync::Arc;

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{Blade, Mv};
use crate::calculus::{alpha_form, b_field, d_op, dx_form, h_form};
use crate::fields::{random_complex_field, random_real_field, CScalarField, FormField, ScalarField};
use crate::geometry::Geometry;
use crate::ideals::IdealFrame;
use crate::jet::{coordinate_jets, MvJet, RJet};
use crate::rep::{column, dirac_operator_matrix, RepError};
use crate::spin::{exp_central, SpinError};
use crate::EPS_ALG;

#[derive(Debug, Error)]
pub enum EquationError {
    #[error("ideal index k = {k} unsupported here")]
    UnsupportedK { k: usize },
    #[error("field leaves its domain: {what}, residual {residual:.3e}")]
    Domain { what: &'static str, residual: f64 },
    #[error("even-solve system is rank deficient")]
    RankDeficient,
    #[error(transparent)]
    Rep(#[from] RepError),
    #[error(transparent)]
    Spin(#[from] SpinError),
}

/// Everything point-local the residual evaluators need: the geometry jets
/// and the connection form.
pub struct PointContext {
    pub geo: Geometry,
    pub b: [MvJet; 4],
}

impl PointContext {
    pub fn new(geo: Geometry) -> Self {
        let b = b_field(&geo);
        PointContext { geo, b }
    }
}

/// Wave function constrained to the left ideal: psi(x) t = psi(x).
#[derive(Clone)]
pub struct WaveField {
    pub psi: FormField,
    pub frame: Arc<IdealFrame>,
}

impl WaveField {
    /// Membership by construction: psi = sum_K c_K(x) t_K.
    pub fn from_coordinates(frame: Arc<IdealFrame>, coords: Vec<CScalarField>) -> Self {
        assert_eq!(coords.len(), frame.dim_complex());
        let terms = coords.into_iter().zip(frame.basis.iter().cloned()).collect();
        WaveField { psi: FormField::combination_c(terms), frame }
    }

    pub fn random(frame: Arc<IdealFrame>, rng: &mut impl rand::Rng, scale: f64) -> Self {
        let coords =
            (0..frame.dim_complex()).map(|_| random_complex_field(rng, scale)).collect();
        Self::from_coordinates(frame, coords)
    }

    /// The rest-frame plane wave exp(-i m x^0) t^1; annihilated by the flat
    /// free operator.
    pub fn rest_frame_solution(frame: Arc<IdealFrame>, mass: f64) -> Self {
        let mut coords = vec![CScalarField::zero(); frame.dim_complex()];
        coords[0] = CScalarField::new(move |x| {
            x[0].complexify().scale_c(Complex64::new(0.0, -mass)).exp()
        });
        Self::from_coordinates(frame, coords)
    }

    pub fn eval(&self, x: &[RJet; 4]) -> MvJet {
        self.psi.eval(x)
    }
}

/// Gauge potential with values in the commutant Lie algebra L(t).
#[derive(Clone)]
pub struct PotentialField {
    pub a: [FormField; 4],
    pub frame: Arc<IdealFrame>,
}

impl PotentialField {
    pub fn zero(frame: Arc<IdealFrame>) -> Self {
        PotentialField { a: std::array::from_fn(|_| FormField::zero()), frame }
    }

    /// Membership by construction: A_mu = sum_n f_mu^n(x) tau_n with real
    /// coefficient fields.
    pub fn random(frame: Arc<IdealFrame>, rng: &mut impl rand::Rng, scale: f64) -> Self {
        let a = std::array::from_fn(|_| {
            let terms = frame
                .generators
                .taus
                .iter()
                .map(|tau| (random_real_field(rng, scale), tau.clone()))
                .collect();
            FormField::combination_r(terms)
        });
        PotentialField { a, frame }
    }

    pub fn eval(&self, x: &[RJet; 4]) -> [MvJet; 4] {
        std::array::from_fn(|mu| self.a[mu].eval(x))
    }
}

/// The four per-direction operator terms D_mu psi + psi A_mu + B_mu psi.
fn dirac_inner(ctx: &PointContext, psi: &MvJet, a: &[MvJet; 4]) -> [MvJet; 4] {
    std::array::from_fn(|mu| d_op(psi, mu) + psi.mul(&a[mu]) + ctx.b[mu].mul(psi))
}

/// Left-hand side of the Dirac-type tensor equation,
/// dx^mu (D_mu psi + psi A_mu + B_mu psi) + i m psi, as jets.
pub fn dirac_residual_jet(ctx: &PointContext, psi: &MvJet, a: &[MvJet; 4], mass: f64) -> MvJet {
    let inner = dirac_inner(ctx, psi, a);
    let mut out = MvJet::zero();
    for mu in 0..4 {
        out = out + dx_form(&ctx.geo, mu).mul(&inner[mu]);
    }
    out + psi.scaled_c(Complex64::new(0.0, mass))
}

/// Point value of the Dirac residual; the result stays in the ideal.
pub fn dirac_residual(
    ctx: &PointContext,
    wave: &WaveField,
    potential: &PotentialField,
    mass: f64,
    x: &[f64; 4],
) -> Result<Mv, EquationError> {
    let xj = coordinate_jets(x);
    let psi = wave.eval(&xj);
    let a = potential.eval(&xj);
    let residual = dirac_residual_jet(ctx, &psi, &a, mass).value_mv();
    let membership = wave.frame.ideal_membership_residual(&residual);
    if membership > crate::EPS_FIELD * 1e2 * (1.0 + residual.norm_sup()) {
        return Err(EquationError::Domain { what: "dirac residual outside ideal", residual: membership });
    }
    Ok(residual)
}

/// The H-projected operator
/// `Q = alpha^mu (D_mu psi + psi A_mu + B_mu psi) + i m H psi`,
/// whose Hermitian pairing with psi produces the charge conservation
/// identity.
pub fn q_form_jet(ctx: &PointContext, psi: &MvJet, a: &[MvJet; 4], mass: f64) -> MvJet {
    let inner = dirac_inner(ctx, psi, a);
    let mut out = MvJet::zero();
    for mu in 0..4 {
        out = out + alpha_form(&ctx.geo, mu).mul(&inner[mu]);
    }
    out + h_form().mul(psi).scaled_c(Complex64::new(0.0, mass))
}

/// Current J^mu = i psi^dagger alpha^mu psi; optionally the traceless
/// variant J^mu - Tr(J^mu).
pub fn current_jet(ctx: &PointContext, psi: &MvJet, traceless: bool) -> [MvJet; 4] {
    let dag = psi.hermitian_conj();
    std::array::from_fn(|mu| {
        let j = dag.mul(&alpha_form(&ctx.geo, mu)).mul(psi).scaled_c(Complex64::i());
        if traceless {
            let tr = j.trace();
            j - MvJet::scalar(tr)
        } else {
            j
        }
    })
}

/// The covariant divergence (1/sqrt(-g)) D_mu (sqrt(-g) V^mu) - [A_mu, V^mu].
fn gauge_divergence(ctx: &PointContext, v: &[MvJet; 4], a: &[MvJet; 4]) -> MvJet {
    let sg = ctx.geo.sqrt_neg_g.complexify();
    let inv_sg = ctx.geo.sqrt_neg_g.recip().complexify();
    let mut out = MvJet::zero();
    for mu in 0..4 {
        let scaled = v[mu].map(|c| *c * sg);
        out = out + d_op(&scaled, mu).map(|c| *c * inv_sg);
        out = out - a[mu].commutator(&v[mu]);
    }
    out
}

/// Both sides of the conservation identity
/// i (psi^dagger Q + Q^dagger psi)
///   = (1/sqrt(-g)) D_mu (sqrt(-g) J^mu) - [A_mu, J^mu],
/// valid for arbitrary analytic fields, not only solutions.
pub fn conservation_pair(
    ctx: &PointContext,
    psi: &MvJet,
    a: &[MvJet; 4],
    mass: f64,
) -> (Mv, Mv) {
    let q = q_form_jet(ctx, psi, a, mass);
    let lhs = (psi.hermitian_conj().mul(&q) + q.hermitian_conj().mul(psi))
        .scaled_c(Complex64::i());
    let j = current_jet(ctx, psi, false);
    let rhs = gauge_divergence(ctx, &j, a);
    (lhs.value_mv(), rhs.value_mv())
}

/// Field strength F_{mu nu} = D_mu A_nu - D_nu A_mu - [A_mu, A_nu].
pub fn field_strength_jet(a: &[MvJet; 4]) -> [[MvJet; 4]; 4] {
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            d_op(&a[nu], mu) - d_op(&a[mu], nu) - a[mu].commutator(&a[nu])
        })
    })
}

/// Raised field strength F^{mu nu} = g^{mu alpha} g^{nu beta} F_{alpha beta}.
pub fn raise_strength(geo: &Geometry, f: &[[MvJet; 4]; 4]) -> [[MvJet; 4]; 4] {
    std::array::from_fn(|mu| {
        std::array::from_fn(|nu| {
            let mut acc = MvJet::zero();
            for alpha in 0..4 {
                for beta in 0..4 {
                    let w = (geo.g_inv[mu][alpha] * geo.g_inv[nu][beta]).complexify();
                    acc = acc + f[alpha][beta].map(|c| *c * w);
                }
            }
            acc
        })
    })
}

/// Left-hand side of the second Yang-Mills equation,
/// R^nu = (1/sqrt(-g)) D_mu (sqrt(-g) F^{mu nu}) - [A_mu, F^{mu nu}].
pub fn ym_lhs_jet(ctx: &PointContext, a: &[MvJet; 4]) -> [MvJet; 4] {
    let f_down = field_strength_jet(a);
    let f_up = raise_strength(&ctx.geo, &f_down);
    let sg = ctx.geo.sqrt_neg_g.complexify();
    let inv_sg = ctx.geo.sqrt_neg_g.recip().complexify();
    std::array::from_fn(|nu| {
        let mut acc = MvJet::zero();
        for mu in 0..4 {
            let scaled = f_up[mu][nu].map(|c| *c * sg);
            acc = acc + d_op(&scaled, mu).map(|c| *c * inv_sg);
            acc = acc - a[mu].commutator(&f_up[mu][nu]);
        }
        acc
    })
}

/// Residual of the sourced Yang-Mills equation, R^nu - J^nu, as point values.
pub fn ym_residual(ctx: &PointContext, a: &[MvJet; 4], j: &[MvJet; 4]) -> [Mv; 4] {
    let lhs = ym_lhs_jet(ctx, a);
    std::array::from_fn(|nu| (lhs[nu].clone() - j[nu].clone()).value_mv())
}

/// The consistency identity on the Yang-Mills left-hand side: its own gauge
/// divergence vanishes for arbitrary analytic potentials.
pub fn ym_consistency_residual(ctx: &PointContext, a: &[MvJet; 4]) -> f64 {
    let r = ym_lhs_jet(ctx, a);
    gauge_divergence(ctx, &r, a).value_mv().norm_sup()
}

/// Unitary gauge field U(x) = exp(Lambda(x)) with Lambda valued in L(t).
#[derive(Clone)]
pub struct UnitaryGaugeField {
    lambda: FormField,
}

impl UnitaryGaugeField {
    pub fn new(lambda: FormField) -> Self {
        UnitaryGaugeField { lambda }
    }

    /// Constant gauge element from a fixed Lie-algebra element.
    pub fn constant(generator: Mv) -> Self {
        Self::new(FormField::constant(generator))
    }

    /// Random L(t)-valued generator field.
    pub fn random(frame: &IdealFrame, rng: &mut impl rand::Rng, scale: f64) -> Self {
        let terms = frame
            .generators
            .taus
            .iter()
            .map(|tau| (random_real_field(rng, scale), tau.clone()))
            .collect();
        Self::new(FormField::combination_r(terms))
    }

    pub fn u_jet(&self, x: &[RJet; 4]) -> Result<MvJet, EquationError> {
        Ok(exp_central(&self.lambda.eval(x), 1e-14)?)
    }

    pub fn u_inv_jet(&self, x: &[RJet; 4]) -> Result<MvJet, EquationError> {
        let neg = self.lambda.eval(x).scaled(-1.0);
        Ok(exp_central(&neg, 1e-14)?)
    }

    /// Unitarity check U^dagger U = 1 at a point.
    pub fn check_unitary(&self, x: &[RJet; 4], tol: f64) -> Result<(), EquationError> {
        let u = self.u_jet(x)?;
        let residual =
            (u.hermitian_conj().mul(&u).value_mv() - Mv::one()).norm_sup();
        if residual > tol {
            return Err(EquationError::Domain { what: "gauge element not unitary", residual });
        }
        Ok(())
    }
}

/// The transformed pair (psi U, U^{-1} A_mu U - U^{-1} D_mu U) as fields.
pub fn gauge_transform_unitary(
    wave: &WaveField,
    potential: &PotentialField,
    gauge: &UnitaryGaugeField,
) -> (WaveField, PotentialField) {
    let g1 = gauge.clone();
    let psi = wave.psi.clone();
    let new_psi = FormField::new(move |x| {
        let u = g1.u_jet(x).expect("gauge exponential");
        psi.eval(x).mul(&u)
    });
    let new_a: [FormField; 4] = std::array::from_fn(|mu| {
        let g = gauge.clone();
        let a = potential.a[mu].clone();
        FormField::new(move |x| {
            let u = g.u_jet(x).expect("gauge exponential");
            let u_inv = g.u_inv_jet(x).expect("gauge exponential");
            u_inv.mul(&a.eval(x)).mul(&u) - u_inv.mul(&d_op(&u, mu))
        })
    });
    (
        WaveField { psi: new_psi, frame: wave.frame.clone() },
        PotentialField { a: new_a, frame: potential.frame.clone() },
    )
}

/// Spin gauge field S(x) built from a constant real 2-form generator and a
/// scalar amplitude profile, through the exterior exponent.
#[derive(Clone)]
pub struct SpinGaugeField {
    generator: Mv,
    profile: ScalarField,
}

impl SpinGaugeField {
    pub fn new(generator: Mv, profile: ScalarField) -> Self {
        SpinGaugeField { generator, profile }
    }

    pub fn s_jet(&self, x: &[RJet; 4]) -> MvJet {
        let fj = self.profile.eval(x).complexify();
        let u = self.generator.map(|c| fj.scale_c(*c));
        crate::geometry::exterior_exp_jet(&u)
    }
}

/// Residual covariance of the spin gauge transformation: evaluates the
/// checked system
///   dx^mu (D-check_mu psi-check + psi-check A-check_mu + B-check_mu psi-check)
///     + i m psi-check
/// with psi-check = psi S, A-check = S^{-1} A S, B-check = B - S^{-1} D S,
/// D-check = D + [S^{-1} D S, .], and returns its difference from
/// (original residual) S.
pub fn spin_covariance_residual(
    ctx: &PointContext,
    psi: &MvJet,
    a: &[MvJet; 4],
    mass: f64,
    s: &MvJet,
) -> f64 {
    let s_inv = s.star_conj();
    let psi_check = psi.mul(s);
    let a_check: [MvJet; 4] = std::array::from_fn(|mu| s_inv.mul(&a[mu]).mul(s));
    let omega = dirac_residual_jet(ctx, psi, a, mass);
    // checked system, assembled term by term
    let mut omega_check = MvJet::zero();
    for mu in 0..4 {
        let ds = d_op(s, mu);
        let connection_shift = s_inv.mul(&ds);
        let d_check =
            d_op(&psi_check, mu) + connection_shift.commutator(&psi_check);
        let b_check = ctx.b[mu].clone() - connection_shift;
        let term = d_check + psi_check.mul(&a_check[mu]) + b_check.mul(&psi_check);
        omega_check = omega_check + dx_form(&ctx.geo, mu).mul(&term);
    }
    omega_check = omega_check + psi_check.scaled_c(Complex64::new(0.0, mass));
    (omega_check.value_mv() - omega.mul(s).value_mv()).norm_sup()
}

/// Checked Hermitian conjugation for the spin-transformed system:
/// U -> H-check U^* H-check with H-check = S^{-1} H S.
pub fn checked_hermitian_conj(u: &MvJet, s: &MvJet) -> MvJet {
    let h_check = s.star_conj().mul(&h_form()).mul(s);
    h_check.mul(&u.star_conj()).mul(&h_check)
}

/// Lagrangian density
///   L = 1/4 i sqrt(-g) Tr(psi^dagger H Q - Q^dagger H psi)
///     + C 1/4 sqrt(-g) Tr(1/8 F_{mu nu} F^{mu nu});
/// returns (value, imaginary residual).
pub fn lagrangian_density(
    ctx: &PointContext,
    psi: &MvJet,
    a: &[MvJet; 4],
    mass: f64,
    coupling: f64,
) -> (f64, f64) {
    let q = q_form_jet(ctx, psi, a, mass);
    let h = h_form();
    let matter = (psi.hermitian_conj().mul(&h).mul(&q)
        - q.hermitian_conj().mul(&h).mul(psi))
    .trace()
    .value()
        * Complex64::i();
    let f_down = field_strength_jet(a);
    let f_up = raise_strength(&ctx.geo, &f_down);
    let mut yang_mills = Complex64::new(0.0, 0.0);
    for mu in 0..4 {
        for nu in 0..4 {
            yang_mills += f_down[mu][nu].mul(&f_up[mu][nu]).trace().value();
        }
    }
    let sg = ctx.geo.sqrt_neg_g.value();
    let total = 0.25 * sg * matter + Complex64::new(coupling * 0.25 * sg / 8.0, 0.0) * yang_mills;
    (total.re, total.im.abs())
}

/// The special-case generator of the k=1 even picture: the real 2-form
/// -e^{12}, satisfying I t_(1) = i t_(1), (1/4)(1+H)(1-iI) = t_(1) and
/// I^dagger = -I.
pub fn even_generator_i() -> Mv {
    Mv::from_blade(Blade::from_label("12").unwrap()).scaled(-1.0)
}

/// Generators of the even-picture gauge algebra for k = 2:
/// i, e^{23}, -e^{13}, e^{12}.
pub fn even_generators_k2() -> [Mv; 4] {
    [
        Mv::i(),
        Mv::from_blade(Blade::from_label("23").unwrap()),
        Mv::from_blade(Blade::from_label("13").unwrap()).scaled(-1.0),
        Mv::from_blade(Blade::from_label("12").unwrap()),
    ]
}

fn even_blades() -> Vec<Blade> {
    Blade::all().filter(|b| b.grade() % 2 == 0).collect()
}

/// Solves psi t_(k) = phi for the unique even psi (real coefficients for
/// k = 1, complex for k = 2) by the full-rank linear system on the even
/// subalgebra.
pub fn even_solve(k: usize, phi: &Mv) -> Result<Mv, EquationError> {
    if k != 1 && k != 2 {
        return Err(EquationError::UnsupportedK { k });
    }
    let frame = IdealFrame::new(k).expect("valid k");
    let membership = frame.ideal_membership_residual(phi);
    if membership > EPS_ALG * 1e3 * (1.0 + phi.norm_sup()) {
        return Err(EquationError::Domain { what: "phi outside ideal", residual: membership });
    }
    let blades = even_blades();
    let rhs_coords = frame.coordinates(phi);
    if k == 1 {
        // 8 real unknowns against Re/Im of the 4 ideal coordinates
        let mut m = DMatrix::<f64>::zeros(8, 8);
        for (col, blade) in blades.iter().enumerate() {
            let image = Mv::from_blade(*blade).mul(&frame.t);
            for (pair, w) in frame.coordinates(&image).iter().enumerate() {
                m[(2 * pair, col)] = w.re;
                m[(2 * pair + 1, col)] = w.im;
            }
        }
        let mut rhs = DVector::<f64>::zeros(8);
        for (pair, w) in rhs_coords.iter().enumerate() {
            rhs[2 * pair] = w.re;
            rhs[2 * pair + 1] = w.im;
        }
        let solution = m.lu().solve(&rhs).ok_or(EquationError::RankDeficient)?;
        let mut out = Mv::zero();
        for (col, blade) in blades.iter().enumerate() {
            out.set(*blade, Complex64::new(solution[col], 0.0));
        }
        Ok(out)
    } else {
        // 8 complex unknowns against the 8 ideal coordinates
        let mut m = DMatrix::<Complex64>::zeros(8, 8);
        for (col, blade) in blades.iter().enumerate() {
            let image = Mv::from_blade(*blade).mul(&frame.t);
            for (row, w) in frame.coordinates(&image).iter().enumerate() {
                m[(row, col)] = *w;
            }
        }
        let rhs = DVector::from_vec(rhs_coords);
        let solution = m.lu().solve(&rhs).ok_or(EquationError::RankDeficient)?;
        let mut out = Mv::zero();
        for (col, blade) in blades.iter().enumerate() {
            out.set(*blade, solution[col]);
        }
        Ok(out)
    }
}

/// Even-form residual of the k = 1 picture:
/// dx^mu (D psi + psi a + B psi) H + m psi I, with I = -e^{12}.
pub fn even_residual_k1(ctx: &PointContext, psi: &MvJet, a: &[MvJet; 4], mass: f64) -> MvJet {
    let inner = dirac_inner(ctx, psi, a);
    let mut out = MvJet::zero();
    for mu in 0..4 {
        out = out + dx_form(&ctx.geo, mu).mul(&inner[mu]);
    }
    out.mul(&h_form()) + psi.mul(&MvJet::from_const(&even_generator_i())).scaled(mass)
}

/// Even-form residual of the k = 2 picture:
/// dx^mu (D psi + psi a + B psi) H + i m psi.
pub fn even_residual_k2(ctx: &PointContext, psi: &MvJet, a: &[MvJet; 4], mass: f64) -> MvJet {
    let inner = dirac_inner(ctx, psi, a);
    let mut out = MvJet::zero();
    for mu in 0..4 {
        out = out + dx_form(&ctx.geo, mu).mul(&inner[mu]);
    }
    out.mul(&h_form()) + psi.scaled_c(Complex64::new(0.0, mass))
}

/// Compares the even-form residual (right-multiplied by t_(k)) with the
/// ideal-form residual of the projected system; both must agree identically
/// and vanish together on solutions.
pub fn even_equivalence_residual(
    ctx: &PointContext,
    k: usize,
    psi_even: &MvJet,
    a_even: &[MvJet; 4],
    mass: f64,
) -> Result<f64, EquationError> {
    if k != 1 && k != 2 {
        return Err(EquationError::UnsupportedK { k });
    }
    let frame = IdealFrame::new(k).expect("valid k");
    let t = MvJet::from_const(&frame.t);
    let even = if k == 1 {
        even_residual_k1(ctx, psi_even, a_even, mass)
    } else {
        even_residual_k2(ctx, psi_even, a_even, mass)
    };
    let psi_ideal = psi_even.mul(&t);
    let a_ideal: [MvJet; 4] = std::array::from_fn(|mu| a_even[mu].mul(&t));
    let ideal = dirac_residual_jet(ctx, &psi_ideal, &a_ideal, mass);
    Ok((even.mul(&t).value_mv() - ideal.value_mv()).norm_sup())
}

/// The matrix-form residual of the same configuration, through the column
/// map: gamma^mu (d_mu + theta(A_mu) + gamma(B_mu)) psi + i m psi.
pub fn bridge_pair(
    ctx: &PointContext,
    wave: &WaveField,
    potential: &PotentialField,
    mass: f64,
    x: &[f64; 4],
) -> Result<(DVector<Complex64>, DVector<Complex64>), EquationError> {
    let frame = &wave.frame;
    let xj = coordinate_jets(x);
    let psi = wave.eval(&xj);
    let a = potential.eval(&xj);

    // tensor side, then through the column map
    let omega = dirac_residual_jet(ctx, &psi, &a, mass).value_mv();
    let tensor_column = column(frame, &omega)?;

    // matrix side from exact coefficient partials
    let coords = frame.coordinates(&psi.value_mv());
    let psi_col = DVector::from_vec(coords);
    let dpsi: [DVector<Complex64>; 4] = std::array::from_fn(|mu| {
        DVector::from_vec(frame.coordinates(&psi.partial_mv(mu).value_mv()))
    });
    let dx_coeffs: [[f64; 4]; 4] =
        std::array::from_fn(|mu| std::array::from_fn(|a| ctx.geo.dx_coeff(mu, a).value()));
    let a_vals: [Mv; 4] = std::array::from_fn(|mu| a[mu].value_mv());
    let b_vals: [Mv; 4] = std::array::from_fn(|mu| ctx.b[mu].value_mv());
    let matrix_column =
        dirac_operator_matrix(frame, &dx_coeffs, &a_vals, &b_vals, mass, &psi_col, &dpsi)?;
    Ok((tensor_column, matrix_column))
}
