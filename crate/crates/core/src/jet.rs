//! Truncated multivariate Taylor arithmetic in the four chart coordinates.
//!
//! A [`Jet`] holds the Taylor coefficients of an analytic function about the
//! evaluation point, up to total degree [`JET_ORDER`]. Ring operations and
//! analytic primitives (exp, sin, cos, sqrt, recip) propagate those
//! coefficients exactly, so any expression built from them carries exact
//! partial derivatives to the truncation order; no finite differencing
//! anywhere on the main path.
//!
//! Extracting a partial derivative (`partial`) shifts the table and loses
//! one degree: after `d` extractions the coefficients of degree
//! `JET_ORDER - d` and below are still exact, and in particular the value
//! slot stays exact for up to `JET_ORDER` nested derivatives. That bound
//! covers the deepest chains in the crate (third derivatives of the tetrad
//! for the contracted Bianchi test, third derivatives of potentials for the
//! double Yang-Mills divergence).

use num_complex::Complex64;
use once_cell::sync::Lazy;

/// Truncation order (max total degree of retained Taylor coefficients).
pub const JET_ORDER: usize = 3;

/// Number of multi-indices of total degree <= 3 in 4 variables.
pub const JET_LEN: usize = 35;

/// Multi-indices in (degree, lexicographic) order.
static MULTI_INDICES: Lazy<Vec<[u8; 4]>> = Lazy::new(|| {
    let mut list = Vec::with_capacity(JET_LEN);
    for degree in 0..=JET_ORDER as u8 {
        for a0 in 0..=degree {
            for a1 in 0..=degree - a0 {
                for a2 in 0..=degree - a0 - a1 {
                    let a3 = degree - a0 - a1 - a2;
                    list.push([a0, a1, a2, a3]);
                }
            }
        }
    }
    debug_assert_eq!(list.len(), JET_LEN);
    list
});

/// Dense lookup: packed exponents (each 0..=3) -> slot, or NONE if degree > 3.
static INDEX_OF: Lazy<[u8; 256]> = Lazy::new(|| {
    let mut table = [u8::MAX; 256];
    for (slot, mi) in MULTI_INDICES.iter().enumerate() {
        let key = mi[0] as usize | (mi[1] as usize) << 2 | (mi[2] as usize) << 4 | (mi[3] as usize) << 6;
        table[key] = slot as u8;
    }
    table
});

#[inline]
fn index_of(mi: [u8; 4]) -> Option<usize> {
    if mi.iter().map(|&x| x as usize).sum::<usize>() > JET_ORDER {
        return None;
    }
    let key = mi[0] as usize | (mi[1] as usize) << 2 | (mi[2] as usize) << 4 | (mi[3] as usize) << 6;
    let slot = INDEX_OF[key];
    (slot != u8::MAX).then_some(slot as usize)
}

/// Convolution plan: all (i, j, k) with index_k = index_i + index_j.
static PRODUCT_PLAN: Lazy<Vec<(u16, u16, u16)>> = Lazy::new(|| {
    let mut plan = Vec::new();
    for (i, a) in MULTI_INDICES.iter().enumerate() {
        for (j, b) in MULTI_INDICES.iter().enumerate() {
            let sum = [a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]];
            if let Some(k) = index_of(sum) {
                plan.push((i as u16, j as u16, k as u16));
            }
        }
    }
    plan
});

/// Scalar type a jet can carry.
pub trait JetScalar:
    Copy
    + Send
    + Sync
    + std::ops::Add<Output = Self>
    + std::ops::Sub<Output = Self>
    + std::ops::Mul<Output = Self>
    + std::ops::Neg<Output = Self>
    + PartialEq
    + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;
    fn scale(self, s: f64) -> Self;
    fn abs(self) -> f64;
    fn conj(self) -> Self;
}

impl JetScalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_f64(x: f64) -> Self {
        x
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn abs(self) -> f64 {
        f64::abs(self)
    }
    fn conj(self) -> Self {
        self
    }
}

impl JetScalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn from_f64(x: f64) -> Self {
        Complex64::new(x, 0.0)
    }
    fn scale(self, s: f64) -> Self {
        self * s
    }
    fn abs(self) -> f64 {
        self.norm()
    }
    fn conj(self) -> Self {
        Complex64::conj(&self)
    }
}

/// Taylor coefficients `c_alpha = d^alpha f / alpha!` about the evaluation
/// point, total degree <= [`JET_ORDER`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Jet<T = f64> {
    c: [T; JET_LEN],
}

pub type RJet = Jet<f64>;
pub type CJet = Jet<Complex64>;

impl<T: JetScalar> Jet<T> {
    pub fn zero() -> Self {
        Jet { c: [T::zero(); JET_LEN] }
    }

    pub fn constant(v: T) -> Self {
        let mut j = Self::zero();
        j.c[0] = v;
        j
    }

    /// Coordinate jet: value `x0` and unit derivative along variable `mu`.
    pub fn variable(mu: usize, x0: T) -> Self {
        let mut j = Self::constant(x0);
        let mut mi = [0u8; 4];
        mi[mu] = 1;
        j.c[index_of(mi).expect("degree 1 stored")] = T::one();
        j
    }

    #[inline]
    pub fn value(&self) -> T {
        self.c[0]
    }

    /// First partial as a scalar, `d_mu f` at the point.
    pub fn d(&self, mu: usize) -> T {
        let mut mi = [0u8; 4];
        mi[mu] = 1;
        self.c[index_of(mi).expect("degree 1 stored")]
    }

    /// Second partial `d_mu d_nu f` at the point.
    pub fn dd(&self, mu: usize, nu: usize) -> T {
        let mut mi = [0u8; 4];
        mi[mu] += 1;
        mi[nu] += 1;
        let slot = index_of(mi).expect("degree 2 always stored");
        // stored as Taylor coefficient: multiply back the multinomial weight
        let factor = if mu == nu { 2.0 } else { 1.0 };
        self.c[slot].scale(factor)
    }

    /// Derivative jet: exact to degree `JET_ORDER - 1`, zero at top degree.
    pub fn partial(&self, mu: usize) -> Self {
        let mut out = Self::zero();
        for (slot, mi) in MULTI_INDICES.iter().enumerate() {
            if mi.iter().map(|&x| x as usize).sum::<usize>() == JET_ORDER {
                continue;
            }
            let mut up = *mi;
            up[mu] += 1;
            if let Some(src) = index_of(up) {
                out.c[slot] = self.c[src].scale(up[mu] as f64);
            }
        }
        out
    }

    pub fn scale(&self, s: f64) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c = c.scale(s);
        }
        out
    }

    /// Zeroes all coefficients above `max_degree`; used when comparing
    /// quantities whose top truncation slots are not meaningful.
    pub fn truncate(&self, max_degree: usize) -> Self {
        let mut out = *self;
        for (slot, mi) in MULTI_INDICES.iter().enumerate() {
            if mi.iter().map(|&x| x as usize).sum::<usize>() > max_degree {
                out.c[slot] = T::zero();
            }
        }
        out
    }

    pub fn conj(&self) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c = c.conj();
        }
        out
    }

    pub fn abs_sup(&self) -> f64 {
        self.c.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    pub fn is_exactly_zero(&self) -> bool {
        self.c.iter().all(|c| *c == T::zero())
    }

    /// Composes an analytic function given its derivatives at the value:
    /// `h(f) = sum_k h_k / k! * (f - f0)^k` exactly in the truncated ring.
    pub fn compose(&self, derivs: [T; JET_ORDER + 1]) -> Self {
        let mut pure = *self;
        pure.c[0] = T::zero();
        let mut out = Self::constant(derivs[0]);
        let mut power = Self::constant(T::one());
        let mut factorial = 1.0;
        for (k, h) in derivs.iter().enumerate().skip(1) {
            factorial *= k as f64;
            power = power * pure;
            out = out + power.scale(1.0 / factorial).scale_t(*h);
        }
        out
    }

    fn scale_t(&self, s: T) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c = *c * s;
        }
        out
    }
}

impl<T: JetScalar> std::ops::Add for Jet<T> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a = *a + *b;
        }
        self
    }
}

impl<T: JetScalar> std::ops::Sub for Jet<T> {
    type Output = Self;
    fn sub(mut self, rhs: Self) -> Self {
        for (a, b) in self.c.iter_mut().zip(rhs.c.iter()) {
            *a = *a - *b;
        }
        self
    }
}

impl<T: JetScalar> std::ops::Neg for Jet<T> {
    type Output = Self;
    fn neg(mut self) -> Self {
        for a in self.c.iter_mut() {
            *a = -*a;
        }
        self
    }
}

impl<T: JetScalar> std::ops::Mul for Jet<T> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let mut out = Self::zero();
        for &(i, j, k) in PRODUCT_PLAN.iter() {
            let a = self.c[i as usize];
            if a == T::zero() {
                continue;
            }
            let b = rhs.c[j as usize];
            if b == T::zero() {
                continue;
            }
            out.c[k as usize] = out.c[k as usize] + a * b;
        }
        out
    }
}

impl RJet {
    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        self.compose([e, e, e, e])
    }

    pub fn sin(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        self.compose([s, c, -s, -c])
    }

    pub fn cos(&self) -> Self {
        let (s, c) = self.value().sin_cos();
        self.compose([c, -s, -c, s])
    }

    pub fn cosh(&self) -> Self {
        let (s, c) = (self.value().sinh(), self.value().cosh());
        self.compose([c, s, c, s])
    }

    pub fn sinh(&self) -> Self {
        let (s, c) = (self.value().sinh(), self.value().cosh());
        self.compose([s, c, s, c])
    }

    /// Requires a strictly positive value part.
    pub fn sqrt(&self) -> Self {
        let v = self.value();
        assert!(v > 0.0, "jet sqrt needs positive value, got {v}");
        let r = v.sqrt();
        self.compose([r, 0.5 / r, -0.25 / (r * v), 0.375 / (r * v * v)])
    }

    /// Requires a nonzero value part.
    pub fn recip(&self) -> Self {
        let v = self.value();
        assert!(v != 0.0, "jet recip needs nonzero value");
        let r = 1.0 / v;
        self.compose([r, -r * r, 2.0 * r * r * r, -6.0 * r * r * r * r])
    }

    /// Embeds a real jet into the complex coefficient ring.
    pub fn complexify(&self) -> CJet {
        let mut out = CJet::zero();
        for (dst, src) in out.c.iter_mut().zip(self.c.iter()) {
            *dst = Complex64::new(*src, 0.0);
        }
        out
    }
}

impl CJet {
    pub fn exp(&self) -> Self {
        let e = self.value().exp();
        self.compose([e, e, e, e])
    }

    pub fn recip(&self) -> Self {
        let v = self.value();
        assert!(v.norm() > 0.0, "jet recip needs nonzero value");
        let r = v.inv();
        self.compose([r, -r * r, r * r * r * 2.0, -r * r * r * r * 6.0])
    }

    pub fn real_part(&self) -> RJet {
        let mut out = RJet::zero();
        for (dst, src) in out.c.iter_mut().zip(self.c.iter()) {
            *dst = src.re;
        }
        out
    }

    pub fn imag_part(&self) -> RJet {
        let mut out = RJet::zero();
        for (dst, src) in out.c.iter_mut().zip(self.c.iter()) {
            *dst = src.im;
        }
        out
    }

    pub fn scale_c(&self, s: Complex64) -> Self {
        let mut out = *self;
        for c in out.c.iter_mut() {
            *c *= s;
        }
        out
    }
}

/// Coordinate jets at a chart point: the seed for every field evaluation.
pub fn coordinate_jets(x: &[f64; 4]) -> [RJet; 4] {
    std::array::from_fn(|mu| RJet::variable(mu, x[mu]))
}

/// Multivector with jet coefficients; the workhorse value of the calculus
/// and field-equation layers.
pub type MvJet = crate::algebra::Multivector<CJet>;

impl crate::algebra::Coeff for CJet {
    fn zero() -> Self {
        Jet::zero()
    }
    fn from_c64(c: Complex64) -> Self {
        Jet::constant(c)
    }
    fn conj(&self) -> Self {
        Jet::conj(self)
    }
    fn scale(&self, s: f64) -> Self {
        Jet::scale(self, s)
    }
    fn abs_sup(&self) -> f64 {
        Jet::abs_sup(self)
    }
    fn is_exactly_zero(&self) -> bool {
        Jet::is_exactly_zero(self)
    }
}

impl MvJet {
    /// Point value of a jet-valued multivector.
    pub fn value_mv(&self) -> crate::algebra::Mv {
        self.map(|j| j.value())
    }

    /// Coefficient-wise partial derivative.
    pub fn partial_mv(&self, mu: usize) -> MvJet {
        self.map(|j| j.partial(mu))
    }

    /// Lifts a constant multivector into the jet ring.
    pub fn from_const(m: &crate::algebra::Mv) -> MvJet {
        m.map(|c| Jet::constant(*c))
    }
}
