//! Basis blades of the 16-dimensional algebra, indexed by 4-bit masks.
//!
//! Bit `a` of the mask is set iff the tetrad 1-form `e^a` is a factor of the
//! blade; factors are always kept in ascending label order, so each of the 16
//! masks names exactly one canonical blade: `1, e^0, e^1, e^{01}, ... ,
//! e^{0123}`.

/// Index of a canonical basis blade. The empty mask is the scalar blade `1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Blade(pub u8);

/// Diagonal of the Minkowski matrix, `eta^{aa} = eta_{aa}`.
pub const ETA_DIAG: [i8; 4] = [1, -1, -1, -1];

/// Number of basis blades.
pub const BLADE_COUNT: usize = 16;

impl Blade {
    /// Scalar blade `1`.
    pub const SCALAR: Blade = Blade(0);
    /// Volume blade `e^{0123}`.
    pub const VOLUME: Blade = Blade(0b1111);

    /// Blade for the single tetrad 1-form `e^a`.
    #[inline]
    pub fn vector(a: usize) -> Blade {
        debug_assert!(a < 4);
        Blade(1 << a)
    }

    /// All 16 blades in mask order.
    pub fn all() -> impl Iterator<Item = Blade> {
        (0..BLADE_COUNT as u8).map(Blade)
    }

    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }

    /// Number of 1-form factors.
    #[inline]
    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Sign of the reversion `(e^{a_1}...e^{a_k})^* = e^{a_k}...e^{a_1}`,
    /// i.e. `(-1)^{k(k-1)/2}` for grade `k`.
    #[inline]
    pub fn reversion_sign(self) -> i8 {
        let k = self.grade() as i32;
        if (k * (k - 1) / 2) % 2 == 0 {
            1
        } else {
            -1
        }
    }

    /// Label used in the JSON encoding: "", "0", "01", ..., "0123".
    pub fn label(self) -> String {
        (0..4).filter(|a| self.0 & (1 << a) != 0).map(|a| char::from(b'0' + a as u8)).collect()
    }

    /// Parses a blade label; labels must be strictly ascending.
    pub fn from_label(s: &str) -> Option<Blade> {
        let mut mask = 0u8;
        let mut prev: i8 = -1;
        for ch in s.chars() {
            let a = ch.to_digit(10)? as i8;
            if a > 3 || a <= prev {
                return None;
            }
            mask |= 1 << a;
            prev = a;
        }
        Some(Blade(mask))
    }
}

/// Parity sign from merging the ascending factor lists of `a` and `b` into a
/// single ascending list: counts pairs (x in a, y in b) with x > y.
#[inline]
fn merge_sign(a: u8, b: u8) -> i8 {
    let mut inversions = 0u32;
    for y in 0..4 {
        if b & (1 << y) != 0 {
            inversions += (a >> (y + 1)).count_ones();
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Central (Clifford) product of two basis blades: returns the sign and the
/// resulting blade. Repeated factors contract through the Minkowski diagonal.
#[inline]
pub fn central_product(a: Blade, b: Blade) -> (i8, Blade) {
    let mut sign = merge_sign(a.0, b.0);
    let common = a.0 & b.0;
    for l in 0..4 {
        if common & (1 << l) != 0 {
            sign *= ETA_DIAG[l];
        }
    }
    (sign, Blade(a.0 ^ b.0))
}

/// Wedge product of two basis blades: zero (sign 0) on any repeated factor.
#[inline]
pub fn wedge_product(a: Blade, b: Blade) -> (i8, Blade) {
    if a.0 & b.0 != 0 {
        (0, Blade(a.0 | b.0))
    } else {
        (merge_sign(a.0, b.0), Blade(a.0 | b.0))
    }
}
