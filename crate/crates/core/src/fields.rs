//! Analytic fields over the chart: scalar evaluators producing jets, and
//! multivector-valued fields given by tetrad-basis coefficient fields.
//!
//! Fields are closures over coordinate jets, so composition (gauge
//! transforms, coordinate changes, spin rotations of the tetrad) is ordinary
//! function composition and stays exact to the jet order. Random fields are
//! low-degree polynomials times complex exponentials with seeded
//! coefficients, which keeps magnitudes of order one across the sample box.

use std::sync::Arc;

use num_complex::Complex64;
use rand::Rng;

use crate::algebra::Mv;
use crate::jet::{coordinate_jets, CJet, MvJet, RJet};

type RealEval = dyn Fn(&[RJet; 4]) -> RJet + Send + Sync;
type ComplexEval = dyn Fn(&[RJet; 4]) -> CJet + Send + Sync;
type FormEval = dyn Fn(&[RJet; 4]) -> MvJet + Send + Sync;

/// Real analytic scalar field with exact derivatives to the jet order.
#[derive(Clone)]
pub struct ScalarField(Arc<RealEval>);

impl ScalarField {
    pub fn new(f: impl Fn(&[RJet; 4]) -> RJet + Send + Sync + 'static) -> Self {
        ScalarField(Arc::new(f))
    }

    pub fn constant(v: f64) -> Self {
        Self::new(move |_| RJet::constant(v))
    }

    pub fn coordinate(mu: usize) -> Self {
        Self::new(move |x| x[mu])
    }

    pub fn eval(&self, x: &[RJet; 4]) -> RJet {
        (self.0)(x)
    }

    pub fn eval_at(&self, point: &[f64; 4]) -> RJet {
        self.eval(&coordinate_jets(point))
    }

    pub fn add(&self, other: &ScalarField) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::new(move |x| a.eval(x) + b.eval(x))
    }

    pub fn mul(&self, other: &ScalarField) -> Self {
        let (a, b) = (self.clone(), other.clone());
        Self::new(move |x| a.eval(x) * b.eval(x))
    }

    pub fn scale(&self, s: f64) -> Self {
        let a = self.clone();
        Self::new(move |x| a.eval(x).scale(s))
    }

    pub fn exp(&self) -> Self {
        let a = self.clone();
        Self::new(move |x| a.eval(x).exp())
    }

    pub fn sin(&self) -> Self {
        let a = self.clone();
        Self::new(move |x| a.eval(x).sin())
    }
}

/// Complex analytic scalar field.
#[derive(Clone)]
pub struct CScalarField(Arc<ComplexEval>);

impl CScalarField {
    pub fn new(f: impl Fn(&[RJet; 4]) -> CJet + Send + Sync + 'static) -> Self {
        CScalarField(Arc::new(f))
    }

    pub fn constant(v: Complex64) -> Self {
        Self::new(move |_| CJet::constant(v))
    }

    pub fn zero() -> Self {
        Self::constant(Complex64::new(0.0, 0.0))
    }

    pub fn from_real(f: ScalarField) -> Self {
        Self::new(move |x| f.eval(x).complexify())
    }

    pub fn eval(&self, x: &[RJet; 4]) -> CJet {
        (self.0)(x)
    }

    pub fn eval_at(&self, point: &[f64; 4]) -> CJet {
        self.eval(&coordinate_jets(point))
    }
}

/// Linear phase k.x as a real field.
pub fn linear_phase(k: [f64; 4]) -> ScalarField {
    ScalarField::new(move |x| {
        let mut acc = RJet::zero();
        for mu in 0..4 {
            acc = acc + x[mu].scale(k[mu]);
        }
        acc
    })
}

/// Random real polynomial of total degree <= 2 with coefficients in
/// (-scale, scale), plus a sinusoidal term for non-polynomial structure.
pub fn random_real_field(rng: &mut impl Rng, scale: f64) -> ScalarField {
    let c0 = rng.gen_range(-scale..scale);
    let lin: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-scale..scale));
    let quad: [[f64; 4]; 4] = std::array::from_fn(|_| std::array::from_fn(|_| {
        rng.gen_range(-scale..scale) * 0.5
    }));
    let wave: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-0.5..0.5));
    let amp = rng.gen_range(-scale..scale);
    ScalarField::new(move |x| {
        let mut acc = RJet::constant(c0);
        for mu in 0..4 {
            acc = acc + x[mu].scale(lin[mu]);
            for nu in 0..4 {
                acc = acc + (x[mu] * x[nu]).scale(quad[mu][nu]);
            }
        }
        let mut phase = RJet::zero();
        for mu in 0..4 {
            phase = phase + x[mu].scale(wave[mu]);
        }
        acc + phase.sin().scale(amp)
    })
}

/// Random complex field: (complex polynomial of degree <= 2) * exp(i k.x).
pub fn random_complex_field(rng: &mut impl Rng, scale: f64) -> CScalarField {
    let re = random_real_field(rng, scale);
    let im = random_real_field(rng, scale);
    let k: [f64; 4] = std::array::from_fn(|_| rng.gen_range(-0.5..0.5));
    CScalarField::new(move |x| {
        let poly = re.eval(x).complexify() + im.eval(x).complexify().scale_c(Complex64::i());
        let mut phase = RJet::zero();
        for mu in 0..4 {
            phase = phase + x[mu].scale(k[mu]);
        }
        poly * phase.complexify().scale_c(Complex64::i()).exp()
    })
}

/// Multivector-valued field in the canonical tetrad-basis representation.
#[derive(Clone)]
pub struct FormField(Arc<FormEval>);

impl FormField {
    pub fn new(f: impl Fn(&[RJet; 4]) -> MvJet + Send + Sync + 'static) -> Self {
        FormField(Arc::new(f))
    }

    pub fn zero() -> Self {
        Self::new(|_| MvJet::zero())
    }

    /// Constant coefficients (annihilated by the covariant operators).
    pub fn constant(m: Mv) -> Self {
        Self::new(move |_| MvJet::from_const(&m))
    }

    /// One complex coefficient field per blade, mask order.
    pub fn from_coefficients(coeffs: Vec<CScalarField>) -> Self {
        assert_eq!(coeffs.len(), 16);
        Self::new(move |x| {
            let mut i = 0;
            MvJet::from_fn(|_| {
                let j = coeffs[i].eval(x);
                i += 1;
                j
            })
        })
    }

    /// Linear combination of constant forms with scalar coefficient fields:
    /// the membership-by-construction builder for ideal- and Lie-valued
    /// fields.
    pub fn combination_c(terms: Vec<(CScalarField, Mv)>) -> Self {
        Self::new(move |x| {
            let mut acc = MvJet::zero();
            for (f, m) in &terms {
                let j = f.eval(x);
                acc = acc + m.map(|c| j.scale_c(*c));
            }
            acc
        })
    }

    /// Real-coefficient combination (for Lie-algebra-valued fields).
    pub fn combination_r(terms: Vec<(ScalarField, Mv)>) -> Self {
        Self::combination_c(
            terms.into_iter().map(|(f, m)| (CScalarField::from_real(f), m)).collect(),
        )
    }

    pub fn eval(&self, x: &[RJet; 4]) -> MvJet {
        (self.0)(x)
    }

    pub fn eval_at(&self, point: &[f64; 4]) -> MvJet {
        self.eval(&coordinate_jets(point))
    }

    /// Pointwise product of two fields.
    pub fn product(&self, rhs: &FormField) -> Self {
        let (a, b) = (self.clone(), rhs.clone());
        Self::new(move |x| a.eval(x).mul(&b.eval(x)))
    }

    pub fn add(&self, rhs: &FormField) -> Self {
        let (a, b) = (self.clone(), rhs.clone());
        Self::new(move |x| a.eval(x) + b.eval(x))
    }
}

/// Uniform sample points in the box (-0.4, 0.4)^4.
pub fn sample_points(rng: &mut impl Rng, n: usize) -> Vec<[f64; 4]> {
    (0..n).map(|_| std::array::from_fn(|_| rng.gen_range(-0.4..0.4))).collect()
}
