//! Nonhomogeneous elements of the complexified algebra, generic over the
//! coefficient ring so that the same product/conjugation code serves plain
//! complex points and jet-valued fields.

use num_complex::Complex64;
use serde::de::{MapAccess, Visitor};
use serde::ser::SerializeMap;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::blade::{central_product, wedge_product, Blade, ETA_DIAG, BLADE_COUNT};
use super::AlgebraError;

/// Coefficient ring of a multivector: complex numbers or complex-valued jets.
pub trait Coeff:
    Clone
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + 'static
{
    fn zero() -> Self;
    fn from_c64(c: Complex64) -> Self;
    /// Complex conjugation (conjugates every Taylor coefficient for jets).
    fn conj(&self) -> Self;
    fn scale(&self, s: f64) -> Self;
    /// Sup-norm used by tolerance checks.
    fn abs_sup(&self) -> f64;
    /// Exact-zero test used to short-circuit blade products.
    fn is_exactly_zero(&self) -> bool;
}

impl Coeff for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn from_c64(c: Complex64) -> Self {
        c
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn scale(&self, s: f64) -> Self {
        self * s
    }
    fn abs_sup(&self) -> f64 {
        self.norm()
    }
    fn is_exactly_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
}

/// Element of the algebra: 16 coefficients over the canonical tetrad blades.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector<T = Complex64> {
    coeff: [T; BLADE_COUNT],
}

/// Point value in the algebra (plain complex coefficients).
pub type Mv = Multivector<Complex64>;

impl<T: Coeff> Default for Multivector<T> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<T: Coeff> Multivector<T> {
    pub fn zero() -> Self {
        Multivector { coeff: std::array::from_fn(|_| T::zero()) }
    }

    pub fn one() -> Self {
        Self::scalar(T::from_c64(Complex64::new(1.0, 0.0)))
    }

    /// The imaginary unit as a grade-0 element.
    pub fn i() -> Self {
        Self::scalar(T::from_c64(Complex64::new(0.0, 1.0)))
    }

    pub fn scalar(value: T) -> Self {
        let mut m = Self::zero();
        m.coeff[0] = value;
        m
    }

    pub fn from_blade(b: Blade) -> Self {
        let mut m = Self::zero();
        m.coeff[b.index()] = T::from_c64(Complex64::new(1.0, 0.0));
        m
    }

    /// Tetrad 1-form `e^a`.
    pub fn basis_vector(a: usize) -> Self {
        Self::from_blade(Blade::vector(a))
    }

    /// Lowered tetrad 1-form `e_a = eta_{ab} e^b`.
    pub fn basis_covector(a: usize) -> Self {
        Self::from_blade(Blade::vector(a)).scaled(ETA_DIAG[a] as f64)
    }

    pub fn from_fn(f: impl FnMut(Blade) -> T) -> Self {
        let mut f = f;
        Multivector { coeff: std::array::from_fn(|i| f(Blade(i as u8))) }
    }

    #[inline]
    pub fn get(&self, b: Blade) -> &T {
        &self.coeff[b.index()]
    }

    #[inline]
    pub fn set(&mut self, b: Blade, value: T) {
        self.coeff[b.index()] = value;
    }

    pub fn map<U: Coeff>(&self, f: impl Fn(&T) -> U) -> Multivector<U> {
        Multivector { coeff: std::array::from_fn(|i| f(&self.coeff[i])) }
    }

    pub fn scaled(&self, s: f64) -> Self {
        self.map(|c| c.scale(s))
    }

    pub fn scaled_c(&self, s: Complex64) -> Self {
        let s = T::from_c64(s);
        self.map(|c| c.clone() * s.clone())
    }

    /// Multiplies every coefficient by a ring element (scalar field value).
    pub fn scaled_t(&self, s: &T) -> Self {
        self.map(|c| c.clone() * s.clone())
    }

    /// Central (Clifford) product.
    pub fn mul(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..BLADE_COUNT {
            if self.coeff[i].is_exactly_zero() {
                continue;
            }
            for j in 0..BLADE_COUNT {
                if rhs.coeff[j].is_exactly_zero() {
                    continue;
                }
                let (sign, target) = central_product(Blade(i as u8), Blade(j as u8));
                let term = (self.coeff[i].clone() * rhs.coeff[j].clone()).scale(sign as f64);
                let slot = &mut out.coeff[target.index()];
                *slot = slot.clone() + term;
            }
        }
        out
    }

    /// Exterior product.
    pub fn wedge(&self, rhs: &Self) -> Self {
        let mut out = Self::zero();
        for i in 0..BLADE_COUNT {
            if self.coeff[i].is_exactly_zero() {
                continue;
            }
            for j in 0..BLADE_COUNT {
                if rhs.coeff[j].is_exactly_zero() {
                    continue;
                }
                let (sign, target) = wedge_product(Blade(i as u8), Blade(j as u8));
                if sign == 0 {
                    continue;
                }
                let term = (self.coeff[i].clone() * rhs.coeff[j].clone()).scale(sign as f64);
                let slot = &mut out.coeff[target.index()];
                *slot = slot.clone() + term;
            }
        }
        out
    }

    pub fn commutator(&self, rhs: &Self) -> Self {
        self.mul(rhs) - rhs.mul(self)
    }

    /// Keeps exactly the grade-`k` coefficients.
    pub fn grade_project(&self, k: usize) -> Result<Self, AlgebraError> {
        if k > 4 {
            return Err(AlgebraError::InvalidGrade { k });
        }
        Ok(Self::from_fn(|b| {
            if b.grade() == k {
                self.coeff[b.index()].clone()
            } else {
                T::zero()
            }
        }))
    }

    pub fn even_part(&self) -> Self {
        Self::from_fn(|b| if b.grade() % 2 == 0 { self.coeff[b.index()].clone() } else { T::zero() })
    }

    pub fn odd_part(&self) -> Self {
        Self::from_fn(|b| if b.grade() % 2 == 1 { self.coeff[b.index()].clone() } else { T::zero() })
    }

    /// Reversion conjugation: grade sign `(-1)^{k(k-1)/2}` together with
    /// complex conjugation of the coefficients.
    pub fn star_conj(&self) -> Self {
        Self::from_fn(|b| self.coeff[b.index()].conj().scale(b.reversion_sign() as f64))
    }

    /// Hermitian conjugation `H U^* H` with `H = e^0`.
    pub fn hermitian_conj(&self) -> Self {
        let h = Self::basis_vector(0);
        h.mul(&self.star_conj()).mul(&h)
    }

    /// Grade-0 coefficient.
    pub fn trace(&self) -> T {
        self.coeff[0].clone()
    }

    /// Hermitian scalar product `(U, V) = Tr(U^dagger V)`, conjugate-linear
    /// in the first slot.
    pub fn scalar_product(&self, rhs: &Self) -> T {
        self.hermitian_conj().mul(rhs).trace()
    }

    /// `sum_a e^a U e_a`; grade-diagonal with weights 4, -2, 0, 2, -4.
    pub fn contract_vectors(&self) -> Self {
        let mut out = Self::zero();
        for a in 0..4 {
            let ea = Self::basis_vector(a);
            let ea_down = Self::basis_covector(a);
            out = out + ea.mul(self).mul(&ea_down);
        }
        out
    }

    /// Max over blades of the coefficient sup-norm.
    pub fn norm_sup(&self) -> f64 {
        self.coeff.iter().map(|c| c.abs_sup()).fold(0.0, f64::max)
    }

    pub fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        (self.clone() - rhs.clone()).norm_sup() <= tol
    }

    /// Max-norm of the part outside grade `k`.
    pub fn off_grade_norm(&self, k: usize) -> f64 {
        Blade::all()
            .filter(|b| b.grade() != k)
            .map(|b| self.coeff[b.index()].abs_sup())
            .fold(0.0, f64::max)
    }
}

impl Mv {
    /// All sixteen blades with unit coefficient, mask order.
    pub fn basis_blades() -> Vec<Mv> {
        Blade::all().map(Mv::from_blade).collect()
    }

    /// The orthonormal anti-Hermitian basis `T_0 ... T_15`:
    /// i, ie^0, e^1, e^2, e^3, ie^{01}, ie^{02}, ie^{03}, e^{12}, e^{13},
    /// e^{23}, e^{012}, e^{013}, e^{023}, ie^{123}, e^{0123}.
    pub fn anti_hermitian_basis() -> Vec<Mv> {
        let i = Complex64::new(0.0, 1.0);
        let one = Complex64::new(1.0, 0.0);
        let entries: [(&str, Complex64); 16] = [
            ("", i),
            ("0", i),
            ("1", one),
            ("2", one),
            ("3", one),
            ("01", i),
            ("02", i),
            ("03", i),
            ("12", one),
            ("13", one),
            ("23", one),
            ("012", one),
            ("013", one),
            ("023", one),
            ("123", i),
            ("0123", one),
        ];
        entries.iter()
            .map(|(label, c)| Mv::from_blade(Blade::from_label(label).unwrap()).scaled_c(*c))
            .collect()
    }

    pub fn real_part_norm(&self) -> f64 {
        self.coeff.iter().map(|c| c.re.abs()).fold(0.0, f64::max)
    }

    pub fn imag_part_norm(&self) -> f64 {
        self.coeff.iter().map(|c| c.im.abs()).fold(0.0, f64::max)
    }
}

impl<T: Coeff> Add for Multivector<T> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Multivector {
            coeff: std::array::from_fn(|i| self.coeff[i].clone() + rhs.coeff[i].clone()),
        }
    }
}

impl<T: Coeff> Sub for Multivector<T> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Multivector {
            coeff: std::array::from_fn(|i| self.coeff[i].clone() - rhs.coeff[i].clone()),
        }
    }
}

impl<T: Coeff> Neg for Multivector<T> {
    type Output = Self;
    fn neg(self) -> Self {
        self.map(|c| -c.clone())
    }
}

impl<'a, T: Coeff> Mul<&'a Multivector<T>> for &'a Multivector<T> {
    type Output = Multivector<T>;
    fn mul(self, rhs: &'a Multivector<T>) -> Multivector<T> {
        Multivector::mul(self, rhs)
    }
}

impl fmt::Display for Mv {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for b in Blade::all() {
            let c = self.coeff[b.index()];
            if c.is_exactly_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            if b == Blade::SCALAR {
                write!(f, "({:.6}{:+.6}i)", c.re, c.im)?;
            } else {
                write!(f, "({:.6}{:+.6}i) e{}", c.re, c.im, b.label())?;
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// JSON form: object mapping blade labels to [re, im] pairs; zero
// coefficients are omitted on output and default on input.
impl Serialize for Mv {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let nonzero: Vec<Blade> =
            Blade::all().filter(|b| !self.coeff[b.index()].is_exactly_zero()).collect();
        let mut map = serializer.serialize_map(Some(nonzero.len()))?;
        for b in nonzero {
            let c = self.coeff[b.index()];
            map.serialize_entry(&b.label(), &[c.re, c.im])?;
        }
        map.end()
    }
}

impl<'de> Deserialize<'de> for Mv {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        struct MvVisitor;
        impl<'de> Visitor<'de> for MvVisitor {
            type Value = Mv;
            fn expecting(&self, f: &mut fmt::Formatter) -> fmt::Result {
                write!(f, "a map from blade labels to [re, im] pairs")
            }
            fn visit_map<A: MapAccess<'de>>(self, mut access: A) -> Result<Mv, A::Error> {
                let mut out = Mv::zero();
                while let Some((label, pair)) = access.next_entry::<String, [f64; 2]>()? {
                    let blade = Blade::from_label(&label).ok_or_else(|| {
                        serde::de::Error::custom(format!("invalid blade label {label:?}"))
                    })?;
                    out.set(blade, Complex64::new(pair[0], pair[1]));
                }
                Ok(out)
            }
        }
        deserializer.deserialize_map(MvVisitor)
    }
}
