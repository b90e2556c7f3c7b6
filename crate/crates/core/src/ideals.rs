//! Idempotents, left-ideal bases and the commutant Lie algebras u(1)⊕su(k).
//!
//! The sixteen matrix-unit forms `Y^n_k` are golden fixtures (hard-coded
//! rational coefficients, not re-derived); the matrix-unit law and every
//! basis invariant are then tests against the central-product oracle rather
//! than inputs to the construction.

use num_complex::Complex64;
use thiserror::Error;

use crate::algebra::{Blade, Mv};
use crate::EPS_ALG;

#[derive(Debug, Error)]
pub enum IdealError {
    #[error("ideal index k = {k} out of range 1..=4")]
    InvalidK { k: usize },
    #[error("generator commutators leave the span: residual {residual:.3e}")]
    NonClosure { residual: f64 },
}

/// One term of a Y-form: (blade label, numerator over 4, imaginary?).
type YTerm = (&'static str, f64, bool);

/// The sixteen forms whose images under the k=1 representation are the
/// elementary matrix units E^n_k (1 at row n, column k). Entries are quarters
/// of unit blades, real or imaginary, exactly as dyadic rationals.
fn y_table() -> [[Vec<YTerm>; 4]; 4] {
    // Y[n-1][k-1] lists the terms of Y^n_k.
    [
        [
            vec![("", 1.0, false), ("0", 1.0, false), ("012", 1.0, true), ("12", 1.0, true)],
            vec![("013", 1.0, false), ("13", 1.0, false), ("023", 1.0, true), ("23", 1.0, true)],
            vec![("03", 1.0, false), ("3", 1.0, false), ("0123", 1.0, true), ("123", 1.0, true)],
            vec![("01", 1.0, false), ("1", 1.0, false), ("02", 1.0, true), ("2", 1.0, true)],
        ],
        [
            vec![("013", -1.0, false), ("13", -1.0, false), ("023", 1.0, true), ("23", 1.0, true)],
            vec![("", 1.0, false), ("0", 1.0, false), ("012", -1.0, true), ("12", -1.0, true)],
            vec![("01", 1.0, false), ("1", 1.0, false), ("02", -1.0, true), ("2", -1.0, true)],
            vec![("03", -1.0, false), ("3", -1.0, false), ("0123", 1.0, true), ("123", 1.0, true)],
        ],
        [
            vec![("03", 1.0, false), ("3", -1.0, false), ("0123", 1.0, true), ("123", -1.0, true)],
            vec![("01", 1.0, false), ("1", -1.0, false), ("02", 1.0, true), ("2", -1.0, true)],
            vec![("", 1.0, false), ("0", -1.0, false), ("012", -1.0, true), ("12", 1.0, true)],
            vec![("013", -1.0, false), ("13", 1.0, false), ("023", -1.0, true), ("23", 1.0, true)],
        ],
        [
            vec![("01", 1.0, false), ("1", -1.0, false), ("02", -1.0, true), ("2", 1.0, true)],
            vec![("03", -1.0, false), ("3", 1.0, false), ("0123", 1.0, true), ("123", -1.0, true)],
            vec![("013", 1.0, false), ("13", -1.0, false), ("023", -1.0, true), ("23", 1.0, true)],
            vec![("", 1.0, false), ("0", -1.0, false), ("012", 1.0, true), ("12", -1.0, true)],
        ],
    ]
}

fn from_terms(terms: &[YTerm]) -> Mv {
    let mut out = Mv::zero();
    for (label, num, imag) in terms {
        let blade = Blade::from_label(label).expect("fixture label");
        let c = if *imag {
            Complex64::new(0.0, num / 4.0)
        } else {
            Complex64::new(num / 4.0, 0.0)
        };
        out.set(blade, *out.get(blade) + c);
    }
    out
}

/// Matrix-unit forms `Y^n_k`, indexed `[n-1][k-1]`.
pub fn matrix_unit_forms() -> [[Mv; 4]; 4] {
    let table = y_table();
    std::array::from_fn(|n| std::array::from_fn(|k| from_terms(&table[n][k])))
}

/// The primitive-idempotent chain: partial sums of the diagonal Y forms.
///
/// k=1 is 1/4 (1 + e^0)(1 + i e^{12}); k=2 is 1/2 (1 + e^0); k=4 is 1.
pub fn primitive_idempotent(k: usize) -> Result<Mv, IdealError> {
    if !(1..=4).contains(&k) {
        return Err(IdealError::InvalidK { k });
    }
    let y = matrix_unit_forms();
    let mut t = Mv::zero();
    for n in 0..k {
        t = t + y[n][n].clone();
    }
    Ok(t)
}

/// Orthonormal basis of the left ideal generated by `t_(k)`:
/// `t^{4(n-1)+j} = 2 Y^j_n` for columns n = 1..k and rows j = 1..4.
pub fn ideal_basis_forms(k: usize) -> Result<Vec<Mv>, IdealError> {
    if !(1..=4).contains(&k) {
        return Err(IdealError::InvalidK { k });
    }
    let y = matrix_unit_forms();
    let mut basis = Vec::with_capacity(4 * k);
    for n in 0..k {
        for j in 0..4 {
            basis.push(y[j][n].scaled(2.0));
        }
    }
    Ok(basis)
}

/// An idempotent together with its ideal basis and Lie generators.
/// Built once and shared read-only; every stored form has constant tetrad
/// coefficients, so the covariant operators annihilate all of them.
#[derive(Debug, Clone)]
pub struct IdealFrame {
    pub k: usize,
    pub t: Mv,
    /// 4k orthonormal basis forms of the ideal.
    pub basis: Vec<Mv>,
    pub generators: LieBasis,
}

impl IdealFrame {
    pub fn new(k: usize) -> Result<Self, IdealError> {
        Ok(IdealFrame {
            k,
            t: primitive_idempotent(k)?,
            basis: ideal_basis_forms(k)?,
            generators: lie_generators(k)?,
        })
    }

    pub fn dim_complex(&self) -> usize {
        4 * self.k
    }

    /// Orthonormal coordinates of an algebra element against the basis.
    pub fn coordinates(&self, omega: &Mv) -> Vec<Complex64> {
        self.basis.iter().map(|t| t.scalar_product(omega)).collect()
    }

    /// Residual of the right-unit property `omega t = omega`.
    pub fn ideal_membership_residual(&self, omega: &Mv) -> f64 {
        (omega.mul(&self.t) - omega.clone()).norm_sup()
    }
}

/// Generators of L(t_(k)) with their structure constants.
#[derive(Debug, Clone)]
pub struct LieBasis {
    pub k: usize,
    pub taus: Vec<Mv>,
    /// `c[m][n][l]` with commutators `[tau_n, tau_l] = c^m_{nl} tau_m`.
    pub structure: Vec<Vec<Vec<f64>>>,
}

/// The su(3)-flavored forms lambda_1..lambda_8 assembled from Y units.
pub fn gell_mann_forms() -> [Mv; 8] {
    let y = matrix_unit_forms();
    let i = Complex64::new(0.0, 1.0);
    let y_ = |n: usize, k: usize| y[n - 1][k - 1].clone();
    [
        y_(1, 2) + y_(2, 1),
        y_(1, 2).scaled_c(-i) + y_(2, 1).scaled_c(i),
        y_(1, 1) - y_(2, 2),
        y_(1, 3) + y_(3, 1),
        y_(1, 3).scaled_c(-i) + y_(3, 1).scaled_c(i),
        y_(2, 3) + y_(3, 2),
        y_(2, 3).scaled_c(-i) + y_(3, 2).scaled_c(i),
        (y_(1, 1) + y_(2, 2) - y_(3, 3).scaled(2.0)).scaled(1.0 / 3f64.sqrt()),
    ]
}

/// Generators of the commutant Lie algebra, per ideal index:
/// k=1 the single u(1) generator; k=2,3 the normalized su(k) sets plus
/// `i t_(k)`; k=4 the sixteen-element anti-Hermitian basis.
pub fn lie_generators(k: usize) -> Result<LieBasis, IdealError> {
    let t = primitive_idempotent(k)?;
    let i = Complex64::new(0.0, 1.0);
    let lam = gell_mann_forms();
    let taus: Vec<Mv> = match k {
        1 => vec![t.scaled_c(i)],
        2 => {
            let mut v = vec![t.scaled_c(i)];
            v.extend(lam[..3].iter().map(|l| l.scaled_c(i)));
            v
        }
        3 => {
            let mut v = vec![t.scaled_c(i)];
            let w = (3.0f64 / 2.0).sqrt();
            v.extend(lam.iter().map(|l| l.scaled_c(i * w)));
            v
        }
        4 => Mv::anti_hermitian_basis(),
        _ => unreachable!(),
    };
    let structure = structure_constants(k, &taus, EPS_ALG * 1e2)?;
    Ok(LieBasis { k, taus, structure })
}

/// Normalized scalar product on L(t_(k)): `(u, v)_(k) = (4/k) (u, v)`.
pub fn normalized_scalar_product(k: usize, u: &Mv, v: &Mv) -> Complex64 {
    u.scalar_product(v) * (4.0 / k as f64)
}

/// Extracts real structure constants `c^m_{nl} = Re (tau^m, [tau_n, tau_l])_(k)`
/// and verifies closure: any commutator component outside the span, or any
/// imaginary residue in the extracted constants, fails.
pub fn structure_constants(
    k: usize,
    taus: &[Mv],
    tol: f64,
) -> Result<Vec<Vec<Vec<f64>>>, IdealError> {
    let d = taus.len();
    let mut c = vec![vec![vec![0.0; d]; d]; d];
    let mut worst: f64 = 0.0;
    for n in 0..d {
        for l in 0..d {
            let comm = taus[n].commutator(&taus[l]);
            let mut recomposed = Mv::zero();
            for m in 0..d {
                let coeff = normalized_scalar_product(k, &taus[m], &comm);
                worst = worst.max(coeff.im.abs());
                c[m][n][l] = coeff.re;
                recomposed = recomposed + taus[m].scaled(coeff.re);
            }
            worst = worst.max((comm - recomposed).norm_sup());
        }
    }
    if worst > tol {
        return Err(IdealError::NonClosure { residual: worst });
    }
    Ok(c)
}

/// Residual-based membership report for the commutant sets around an
/// idempotent: `K(t) = {[V,t]=0}`, `K_0(t) = K(t) ∩ I(t)`, and the real Lie
/// algebra L(t) of anti-Hermitian elements of K_0(t).
#[derive(Debug, Clone, Copy)]
pub struct CommutantMembership {
    pub in_k: bool,
    pub in_k0: bool,
    pub in_l: bool,
    pub commutator_residual: f64,
    pub ideal_residual: f64,
    pub antihermitian_residual: f64,
}

pub fn commutant_membership(t: &Mv, u: &Mv, tol: f64) -> CommutantMembership {
    let commutator_residual = u.commutator(t).norm_sup();
    let ideal_residual = (u.mul(t) - u.clone()).norm_sup();
    let antihermitian_residual = (u.hermitian_conj() + u.clone()).norm_sup();
    let in_k = commutator_residual <= tol;
    let in_k0 = in_k && ideal_residual <= tol;
    let in_l = in_k0 && antihermitian_residual <= tol;
    CommutantMembership {
        in_k,
        in_k0,
        in_l,
        commutator_residual,
        ideal_residual,
        antihermitian_residual,
    }
}

/// Removes the u(1) component of `u` in L(t_(k)): subtracts the projection
/// onto the orthonormal tau_0 = i t_(k), which zeroes the trace.
pub fn traceless_projection(k: usize, u: &Mv) -> Result<Mv, IdealError> {
    let tau0 = primitive_idempotent(k)?.scaled_c(Complex64::new(0.0, 1.0));
    let coeff = normalized_scalar_product(k, &tau0, u);
    Ok(u.clone() - tau0.scaled_c(coeff))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn mv(label: &str) -> Mv {
        Mv::from_blade(Blade::from_label(label).unwrap())
    }

    #[test]
    fn idempotent_fixtures() {
        // t_(1) = 1/4 (1 + e^0 + i e^{12} + i e^{012})
        let t1 = primitive_idempotent(1).unwrap();
        let expect = (Mv::one() + mv("0") + mv("12").scaled_c(c(0.0, 1.0))
            + mv("012").scaled_c(c(0.0, 1.0)))
        .scaled(0.25);
        assert!(t1.approx_eq(&expect, 0.0));
        // product form 1/4 (1 + e^0)(1 + i e^{12})
        let prod = (Mv::one() + mv("0"))
            .mul(&(Mv::one() + mv("12").scaled_c(c(0.0, 1.0))))
            .scaled(0.25);
        assert!(t1.approx_eq(&prod, 0.0));

        let t2 = primitive_idempotent(2).unwrap();
        assert!(t2.approx_eq(&(Mv::one() + mv("0")).scaled(0.5), 0.0));

        // t_(3) = 1/4 (3 + e^0 + i e^{12} - i e^{012})
        let t3 = primitive_idempotent(3).unwrap();
        let expect3 = (Mv::one().scaled(3.0) + mv("0") + mv("12").scaled_c(c(0.0, 1.0))
            - mv("012").scaled_c(c(0.0, 1.0)))
        .scaled(0.25);
        assert!(t3.approx_eq(&expect3, 0.0));

        assert!(primitive_idempotent(4).unwrap().approx_eq(&Mv::one(), 0.0));
        assert!(primitive_idempotent(0).is_err());
        assert!(primitive_idempotent(5).is_err());
    }

    #[test]
    fn idempotent_axioms_exact() {
        for k in 1..=4 {
            let t = primitive_idempotent(k).unwrap();
            assert!(t.mul(&t).approx_eq(&t, 0.0), "t^2 = t for k={k}");
            assert!(t.hermitian_conj().approx_eq(&t, 0.0), "t^dagger = t for k={k}");
        }
    }

    #[test]
    fn matrix_unit_law_all_64_triples() {
        let y = matrix_unit_forms();
        for n in 0..4 {
            for k in 0..4 {
                for m in 0..4 {
                    let prod = y[n][k].mul(&y[k][m]);
                    assert!(prod.approx_eq(&y[n][m], EPS_ALG), "Y^{n}_{k} Y^{k}_{m}");
                }
            }
        }
        // Orthogonality across mismatched middle indices.
        for n in 0..4 {
            for k in 0..4 {
                for p in 0..4 {
                    for m in 0..4 {
                        if p != k {
                            assert!(y[n][k].mul(&y[p][m]).approx_eq(&Mv::zero(), EPS_ALG));
                        }
                    }
                }
            }
        }
        // Sum of diagonal units is the unit of the algebra.
        let sum = (0..4).fold(Mv::zero(), |acc, n| acc + y[n][n].clone());
        assert!(sum.approx_eq(&Mv::one(), 0.0));
        assert!(y[0][0].approx_eq(&primitive_idempotent(1).unwrap(), 0.0));
    }

    #[test]
    fn ideal_basis_fixtures_k1() {
        let basis = ideal_basis_forms(1).unwrap();
        assert_eq!(basis.len(), 4);
        let i = c(0.0, 1.0);
        // t^1 = 1/2 (1 + e^0 + i e^{12} + i e^{012})
        let t1 = (Mv::one() + mv("0") + mv("12").scaled_c(i) + mv("012").scaled_c(i)).scaled(0.5);
        // t^2 = 1/2 (-e^{13} + i e^{23} - e^{013} + i e^{023})
        let t2 = (mv("13").scaled(-1.0) + mv("23").scaled_c(i) + mv("013").scaled(-1.0)
            + mv("023").scaled_c(i))
        .scaled(0.5);
        // t^3 = 1/2 (-e^3 + e^{03} - i e^{123} + i e^{0123})
        let t3 = (mv("3").scaled(-1.0) + mv("03") + mv("123").scaled_c(-i)
            + mv("0123").scaled_c(i))
        .scaled(0.5);
        // t^4 = 1/2 (-e^1 + i e^2 + e^{01} - i e^{02})
        let t4 = (mv("1").scaled(-1.0) + mv("2").scaled_c(i) + mv("01") + mv("02").scaled_c(-i))
            .scaled(0.5);
        for (got, want) in basis.iter().zip([t1, t2, t3, t4].iter()) {
            assert!(got.approx_eq(want, 0.0));
        }
        // generator products: t^2 = -2 e^{13} t_(1), t^3 = 2 e^{03} t_(1), t^4 = 2 e^{01} t_(1)
        let t = primitive_idempotent(1).unwrap();
        assert!(basis[1].approx_eq(&mv("13").scaled(-2.0).mul(&t), 0.0));
        assert!(basis[2].approx_eq(&mv("03").scaled(2.0).mul(&t), 0.0));
        assert!(basis[3].approx_eq(&mv("01").scaled(2.0).mul(&t), 0.0));
    }

    #[test]
    fn ideal_basis_orthonormal_and_in_ideal() {
        for k in 1..=4 {
            let frame = IdealFrame::new(k).unwrap();
            assert_eq!(frame.basis.len(), 4 * k);
            assert_eq!(frame.dim_complex(), 4 * k);
            for (a, ta) in frame.basis.iter().enumerate() {
                assert!(frame.ideal_membership_residual(ta) <= EPS_ALG, "t_K t = t_K");
                for (b, tb) in frame.basis.iter().enumerate() {
                    let want = if a == b { c(1.0, 0.0) } else { c(0.0, 0.0) };
                    assert!((ta.scalar_product(tb) - want).norm() <= EPS_ALG);
                }
            }
        }
    }

    #[test]
    fn ideal_dimension_by_rank() {
        // rank of U -> U t_(k) over the 16 basis blades equals 4k.
        for k in 1..=4 {
            let t = primitive_idempotent(k).unwrap();
            let mut m = nalgebra::DMatrix::<Complex64>::zeros(16, 16);
            for (col, blade) in Blade::all().enumerate() {
                let img = Mv::from_blade(blade).mul(&t);
                for row in Blade::all() {
                    m[(row.index(), col)] = *img.get(row);
                }
            }
            assert_eq!(m.rank(1e-10), 4 * k, "dim I(t_({k}))");
        }
    }

    #[test]
    fn right_mul_restricted_to_even_has_trivial_kernel() {
        // The 8x8 real matrix of U -> U t_(1) on real even forms is full rank.
        let t = primitive_idempotent(1).unwrap();
        let frame = IdealFrame::new(1).unwrap();
        let even: Vec<Blade> = Blade::all().filter(|b| b.grade() % 2 == 0).collect();
        let mut m = nalgebra::DMatrix::<f64>::zeros(8, 8);
        for (col, blade) in even.iter().enumerate() {
            let img = Mv::from_blade(*blade).mul(&t);
            let coords = frame.coordinates(&img);
            for (pair, w) in coords.iter().enumerate() {
                m[(2 * pair, col)] = w.re;
                m[(2 * pair + 1, col)] = w.im;
            }
        }
        assert_eq!(m.rank(1e-10), 8);
    }

    #[test]
    fn commutant_membership_cases() {
        let t = primitive_idempotent(1).unwrap();
        let m = commutant_membership(&t, &t, EPS_ALG);
        assert!(m.in_k && m.in_k0 && !m.in_l);
        let m = commutant_membership(&t, &t.scaled_c(c(0.0, 1.0)), EPS_ALG);
        assert!(m.in_l);
        let m = commutant_membership(&t, &Mv::basis_vector(1), EPS_ALG);
        assert!(!m.in_k);
    }

    #[test]
    fn generator_counts_and_invariants() {
        for (k, count) in [(1usize, 1usize), (2, 4), (3, 9), (4, 16)] {
            let basis = lie_generators(k).unwrap();
            assert_eq!(basis.taus.len(), count);
            let t = primitive_idempotent(k).unwrap();
            for (n, tau) in basis.taus.iter().enumerate() {
                let m = commutant_membership(&t, tau, EPS_ALG);
                assert!(m.in_l, "tau_{n} in L(t_({k}))");
                for (l, tau2) in basis.taus.iter().enumerate() {
                    let want = if n == l { c(1.0, 0.0) } else { c(0.0, 0.0) };
                    let got = normalized_scalar_product(k, tau, tau2);
                    assert!((got - want).norm() <= EPS_ALG, "orthonormality (k={k},{n},{l})");
                }
            }
        }
        // k=1 generator is i t_(1) and the algebra is abelian.
        let b1 = lie_generators(1).unwrap();
        assert!(b1.taus[0].approx_eq(&primitive_idempotent(1).unwrap().scaled_c(c(0.0, 1.0)), 0.0));
        assert_eq!(b1.structure[0][0][0], 0.0);
    }

    #[test]
    fn normalized_product_fixtures() {
        for k in 1..=4 {
            let it = primitive_idempotent(k).unwrap().scaled_c(c(0.0, 1.0));
            let got = normalized_scalar_product(k, &it, &it);
            assert!((got - c(1.0, 0.0)).norm() <= EPS_ALG);
        }
        // k=4 factor is one: plain scalar product.
        let u = mv("12");
        assert_eq!(normalized_scalar_product(4, &u, &u), u.scalar_product(&u));
        // linearity in the second slot.
        let v = mv("01");
        let got = normalized_scalar_product(2, &v, &v.scaled(2.0));
        assert!((got - normalized_scalar_product(2, &v, &v) * 2.0).norm() <= EPS_ALG);
    }

    #[test]
    fn su2_structure_pattern() {
        // The even-algebra triple e^{23}, -e^{13}, e^{12} closes with
        // [tau_1, tau_2] = 2 tau_3 cyclically, exactly.
        let tri = [mv("23"), mv("13").scaled(-1.0), mv("12")];
        for (a, b, cc) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            assert!(tri[a].commutator(&tri[b]).approx_eq(&tri[cc].scaled(2.0), 0.0));
        }
        // Its image U -> U t_(2) lands in L(t_(2)) with the same constants.
        let t2 = primitive_idempotent(2).unwrap();
        let mapped: Vec<Mv> = tri.iter().map(|u| u.mul(&t2)).collect();
        for u in &mapped {
            assert!(commutant_membership(&t2, u, EPS_ALG).in_l);
        }
        for (a, b, cc) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
            assert!(mapped[a].commutator(&mapped[b]).approx_eq(&mapped[cc].scaled(2.0), EPS_ALG));
        }
        // The shipped generators close on the same |c| = 2 pattern.
        let basis = lie_generators(2).unwrap();
        for n in 1..4 {
            for l in 1..4 {
                for m in 1..4 {
                    let want = if n != l && l != m && n != m { 2.0 } else { 0.0 };
                    assert!(
                        (basis.structure[m][n][l].abs() - want).abs() <= EPS_ALG * 10.0,
                        "|c^{m}_{n}{l}|"
                    );
                }
            }
        }
        // tau_0 is central.
        for n in 0..4 {
            assert!(basis.taus[0].commutator(&basis.taus[n]).norm_sup() <= EPS_ALG);
        }
    }

    /// su(3) antisymmetric constants from the numeric 3x3 Gell-Mann basis:
    /// an oracle independent of the form algebra.
    fn su3_f_constants() -> Vec<Vec<Vec<f64>>> {
        use nalgebra::DMatrix;
        let i = c(0.0, 1.0);
        let z = c(0.0, 0.0);
        let o = c(1.0, 0.0);
        let s3 = 1.0 / 3.0f64.sqrt();
        let mats: Vec<DMatrix<Complex64>> = vec![
            DMatrix::from_row_slice(3, 3, &[z, o, z, o, z, z, z, z, z]),
            DMatrix::from_row_slice(3, 3, &[z, -i, z, i, z, z, z, z, z]),
            DMatrix::from_row_slice(3, 3, &[o, z, z, z, -o, z, z, z, z]),
            DMatrix::from_row_slice(3, 3, &[z, z, o, z, z, z, o, z, z]),
            DMatrix::from_row_slice(3, 3, &[z, z, -i, z, z, z, i, z, z]),
            DMatrix::from_row_slice(3, 3, &[z, z, z, z, z, o, z, o, z]),
            DMatrix::from_row_slice(3, 3, &[z, z, z, z, z, -i, z, i, z]),
            DMatrix::from_row_slice(3, 3, &[o * s3, z, z, z, o * s3, z, z, z, -o * 2.0 * s3]),
        ];
        let mut f = vec![vec![vec![0.0; 8]; 8]; 8];
        for a in 0..8 {
            for b in 0..8 {
                let comm = &mats[a] * &mats[b] - &mats[b] * &mats[a];
                for cc in 0..8 {
                    // [la, lb] = 2 i f_abc lc with Tr(lc ld) = 2 delta_cd
                    let tr = (&comm * &mats[cc]).trace();
                    f[a][b][cc] = (tr / c(0.0, 4.0)).re;
                }
            }
        }
        f
    }

    #[test]
    fn su3_structure_proportional_to_f_constants() {
        let basis = lie_generators(3).unwrap();
        let f = su3_f_constants();
        // c^m_{nl} for the su(3) block (indices 1..8) must be a single real
        // multiple of f_{(n)(l)(m)}; fit the ratio on f_123 and check all.
        let ratio = basis.structure[3][1][2] / f[0][1][2];
        assert!(ratio.is_finite() && ratio.abs() > 0.1);
        let mut worst: f64 = 0.0;
        for n in 1..9 {
            for l in 1..9 {
                for m in 1..9 {
                    let want = ratio * f[n - 1][l - 1][m - 1];
                    worst = worst.max((basis.structure[m][n][l] - want).abs());
                    // antisymmetry in the lower pair
                    worst = worst.max((basis.structure[m][n][l] + basis.structure[m][l][n]).abs());
                }
            }
        }
        assert!(worst <= 1e-10, "worst deviation {worst:.3e}");
        // tau_0 commutes with everything.
        for n in 0..9 {
            assert!(basis.taus[0].commutator(&basis.taus[n]).norm_sup() <= EPS_ALG);
        }
    }

    #[test]
    fn k4_generators_are_the_antihermitian_basis() {
        let basis = lie_generators(4).unwrap();
        let ah = Mv::anti_hermitian_basis();
        for (a, b) in basis.taus.iter().zip(ah.iter()) {
            assert!(a.approx_eq(b, 0.0));
        }
    }

    #[test]
    fn traceless_projection_properties() {
        let mut rng = StdRng::seed_from_u64(41);
        for k in 1..=4 {
            let basis = lie_generators(k).unwrap();
            // random element of L(t_(k))
            let mut u = Mv::zero();
            for tau in &basis.taus {
                u = u + tau.scaled(rng.gen_range(-1.0..1.0));
            }
            let p = traceless_projection(k, &u).unwrap();
            assert!(p.trace().norm() <= EPS_ALG * 10.0, "trace killed (k={k})");
            let t = primitive_idempotent(k).unwrap();
            assert!(commutant_membership(&t, &p, EPS_ALG * 10.0).in_l, "stays in L (k={k})");
            let pp = traceless_projection(k, &p).unwrap();
            assert!(pp.approx_eq(&p, EPS_ALG * 10.0), "idempotent projection (k={k})");
        }
        // i t_(2) projects to zero trace.
        let it2 = primitive_idempotent(2).unwrap().scaled_c(c(0.0, 1.0));
        let p = traceless_projection(2, &it2).unwrap();
        assert!(p.trace().norm() <= EPS_ALG);
    }
}
