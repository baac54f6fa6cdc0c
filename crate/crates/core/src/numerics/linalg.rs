use nalgebra::{DMatrix, Schur, SymmetricEigen, SVD};
use num_complex::Complex64;

use super::matrix::{ComplexMatrix, HermitianMatrix, TolerancePolicy};
use crate::error::{Error, Result};

/// Reciprocal 1-norm condition number below which a matrix is treated as singular.
pub const SINGULARITY_RCOND: f64 = 1e-14;

const I: Complex64 = Complex64::new(0.0, 1.0);

/// `(A + A*) / 2`.
pub fn real_part(a: &ComplexMatrix) -> HermitianMatrix {
    HermitianMatrix::hermitian_part(a)
}

/// `(A - A*) / (2i)`.
pub fn imag_part(a: &ComplexMatrix) -> HermitianMatrix {
    // (A - A*)/(2i) is the Hermitian part of -iA.
    HermitianMatrix::hermitian_part(&a.scale(-I))
}

fn one_norm(m: &DMatrix<Complex64>) -> f64 {
    m.column_iter()
        .map(|c| c.iter().map(|z| z.norm()).sum::<f64>())
        .fold(0.0, f64::max)
}

pub fn inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let inner = a.as_inner();
    let inv = inner
        .clone()
        .lu()
        .try_inverse()
        .ok_or(Error::Singular { rcond: 0.0 })?;
    let rcond = 1.0 / (one_norm(inner) * one_norm(&inv));
    if !(rcond > SINGULARITY_RCOND) {
        return Err(Error::Singular {
            rcond: if rcond.is_nan() { 0.0 } else { rcond },
        });
    }
    Ok(ComplexMatrix::from_inner(inv))
}

/// Spectral decomposition of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEig {
    pub values: Vec<f64>,
    /// Orthonormal eigenvectors, one per column, in the order of `values`.
    pub vectors: ComplexMatrix,
}

impl HermitianEig {
    pub fn min(&self) -> f64 {
        self.values[0]
    }

    pub fn max(&self) -> f64 {
        self.values[self.values.len() - 1]
    }

    /// `V f(diag) V*`, Hermitian by construction.
    pub fn map(&self, f: impl Fn(f64) -> f64) -> HermitianMatrix {
        let v = self.vectors.as_inner();
        let mut scaled = v.clone();
        for (j, &lambda) in self.values.iter().enumerate() {
            let fl = f(lambda);
            scaled.column_mut(j).iter_mut().for_each(|z| *z *= fl);
        }
        let product = ComplexMatrix::from_inner(scaled * v.adjoint());
        HermitianMatrix::hermitian_part(&product)
    }
}

pub fn hermitian_eig(h: &HermitianMatrix) -> HermitianEig {
    let n = h.dim();
    let eig = SymmetricEigen::new(h.as_inner().clone());
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| eig.eigenvalues[i].total_cmp(&eig.eigenvalues[j]));
    let values = order.iter().map(|&i| eig.eigenvalues[i]).collect();
    let vectors = DMatrix::from_fn(n, n, |r, c| eig.eigenvectors[(r, order[c])]);
    HermitianEig {
        values,
        vectors: ComplexMatrix::from_inner(vectors),
    }
}

pub fn hermitian_eigenvalues(h: &HermitianMatrix) -> Vec<f64> {
    let mut values: Vec<f64> = h.as_inner().clone().symmetric_eigenvalues().iter().copied().collect();
    values.sort_by(f64::total_cmp);
    values
}

pub fn lambda_min(h: &HermitianMatrix) -> f64 {
    hermitian_eigenvalues(h)[0]
}

pub fn lambda_max(h: &HermitianMatrix) -> f64 {
    *hermitian_eigenvalues(h).last().expect("nonempty")
}

/// Spectral norm of a Hermitian matrix.
pub fn hermitian_norm2(h: &HermitianMatrix) -> f64 {
    let values = hermitian_eigenvalues(h);
    values[0].abs().max(values[values.len() - 1].abs())
}

fn require_pd(eig: &HermitianEig) -> Result<()> {
    if !(eig.min() > 0.0) {
        return Err(Error::NotPositiveDefinite {
            min_eigenvalue: eig.min(),
        });
    }
    Ok(())
}

/// Positive definite square root.
pub fn sqrt_pd(h: &HermitianMatrix) -> Result<HermitianMatrix> {
    let eig = hermitian_eig(h);
    require_pd(&eig)?;
    Ok(eig.map(f64::sqrt))
}

/// Real power `H^p` of a positive definite matrix.
pub fn pd_power(h: &HermitianMatrix, p: f64) -> Result<HermitianMatrix> {
    let eig = hermitian_eig(h);
    require_pd(&eig)?;
    Ok(eig.map(|x| x.powf(p)))
}

/// Outcome of a Loewner comparison `H <= K`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LoewnerOutcome {
    pub holds: bool,
    /// `lambda_min(K - H)`.
    pub margin: f64,
    /// `max(1, ||H||_2, ||K||_2)`.
    pub scale: f64,
}

impl LoewnerOutcome {
    pub fn relative_margin(&self) -> f64 {
        self.margin / self.scale
    }
}

/// Tests `H <= K`: holds iff `lambda_min(K - H) >= -rel_eps * max(1, ||H||, ||K||)`.
pub fn loewner_leq(
    h: &HermitianMatrix,
    k: &HermitianMatrix,
    tol: TolerancePolicy,
) -> Result<LoewnerOutcome> {
    if h.dim() != k.dim() {
        return Err(Error::DimensionMismatch {
            expected: h.dim(),
            found: k.dim(),
        });
    }
    let margin = lambda_min(&k.sub(h));
    let scale = 1.0_f64.max(hermitian_norm2(h)).max(hermitian_norm2(k));
    Ok(LoewnerOutcome {
        holds: margin >= -tol.rel_eps * scale,
        margin,
        scale,
    })
}

/// Singular values, descending.
pub fn singular_values(a: &ComplexMatrix) -> Vec<f64> {
    let svd = SVD::new(a.as_inner().clone(), false, false);
    let mut values: Vec<f64> = svd.singular_values.iter().copied().collect();
    values.sort_by(|x, y| y.total_cmp(x));
    values
}

pub fn operator_norm(a: &ComplexMatrix) -> f64 {
    singular_values(a)[0]
}

/// Eigen-decomposition of a general complex matrix.
#[derive(Debug, Clone)]
pub struct Eigensystem {
    pub values: Vec<Complex64>,
    /// Unit-norm eigenvectors as columns.
    pub vectors: ComplexMatrix,
}

/// Eigenvalues and eigenvectors from the complex Schur form `A = Q T Q*`,
/// with the eigenvectors of `T` obtained by back substitution.
pub fn eigensystem(a: &ComplexMatrix) -> Result<Eigensystem> {
    let n = a.dim();
    let schur = Schur::try_new(a.as_inner().clone(), f64::EPSILON, 10_000).ok_or(Error::NoConvergence)?;
    let (q, t) = schur.unpack();
    let values: Vec<Complex64> = (0..n).map(|i| t[(i, i)]).collect();
    let small = f64::EPSILON * t.iter().fold(0.0_f64, |acc, z| acc.max(z.norm())).max(f64::MIN_POSITIVE);

    let mut y = DMatrix::<Complex64>::zeros(n, n);
    for k in 0..n {
        let lambda = values[k];
        y[(k, k)] = Complex64::new(1.0, 0.0);
        for i in (0..k).rev() {
            let mut acc = Complex64::new(0.0, 0.0);
            for j in (i + 1)..=k {
                acc += t[(i, j)] * y[(j, k)];
            }
            let mut denom = t[(i, i)] - lambda;
            if denom.norm() < small {
                denom = Complex64::new(small, 0.0);
            }
            y[(i, k)] = -acc / denom;
        }
    }
    let mut v = q * y;
    for mut col in v.column_iter_mut() {
        let norm = col.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        col.iter_mut().for_each(|z| *z /= norm);
    }
    Ok(Eigensystem {
        values,
        vectors: ComplexMatrix::from_inner(v),
    })
}

pub fn eigenvalues(a: &ComplexMatrix) -> Result<Vec<Complex64>> {
    let schur = Schur::try_new(a.as_inner().clone(), f64::EPSILON, 10_000).ok_or(Error::NoConvergence)?;
    let (_, t) = schur.unpack();
    Ok((0..a.dim()).map(|i| t[(i, i)]).collect())
}

/// 2-norm condition number `sigma_max / sigma_min`.
pub fn condition_number(a: &ComplexMatrix) -> f64 {
    let sv = singular_values(a);
    let smallest = sv[sv.len() - 1];
    if smallest == 0.0 {
        f64::INFINITY
    } else {
        sv[0] / smallest
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cones::Sampler;
    use approx::assert_abs_diff_eq;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn cartesian_parts_of_simple_matrices() {
        let id = ComplexMatrix::identity(2);
        assert_eq!(real_part(&id).as_complex(), &id);
        assert_eq!(imag_part(&id).as_complex(), &ComplexMatrix::zeros(2));

        let i2 = id.scale(I);
        assert_eq!(real_part(&i2).as_complex(), &ComplexMatrix::zeros(2));
        assert_eq!(imag_part(&i2).as_complex(), &id);
    }

    #[test]
    fn cartesian_parts_of_upper_shift() {
        // (A - A*)/(2i) for [[1,2],[0,1]] is [[0,-i],[i,0]] entrywise.
        let a = ComplexMatrix::from_real_row_major(2, &[1.0, 2.0, 0.0, 1.0]).unwrap();
        let re = real_part(&a);
        let im = imag_part(&a);
        let expected_re = ComplexMatrix::from_real_row_major(2, &[1.0, 1.0, 1.0, 1.0]).unwrap();
        let expected_im =
            ComplexMatrix::from_row_major(2, &[c(0.0, 0.0), c(0.0, -1.0), c(0.0, 1.0), c(0.0, 0.0)]).unwrap();
        assert_eq!(re.as_complex(), &expected_re);
        assert_eq!(im.as_complex(), &expected_im);
    }

    #[test]
    fn cartesian_reconstruction() {
        let mut s = Sampler::new(11);
        for n in 1..7 {
            let a = s.complex_gaussian(n);
            let back = real_part(&a).as_complex() + imag_part(&a).as_complex().scale(I);
            let err = (&back - &a).max_abs();
            assert!(err <= 1e-14 * a.max_abs(), "n = {n}: {err}");
        }
    }

    #[test]
    fn inverse_examples() {
        let id = ComplexMatrix::identity(3);
        assert_eq!(inverse(&id).unwrap(), id);
        let d = ComplexMatrix::from_real_diagonal(&[2.0, 4.0]);
        assert_eq!(inverse(&d).unwrap(), ComplexMatrix::from_real_diagonal(&[0.5, 0.25]));
        let mut s = Sampler::new(3);
        for n in 2..9 {
            let a = s.accretive(n);
            let inv = inverse(&a).unwrap();
            let resid = (&(&a * &inv) - &ComplexMatrix::identity(n)).frobenius_norm();
            assert!(resid <= 1e-10 * n as f64, "{resid}");
        }
    }

    #[test]
    fn inverse_rejects_singular() {
        let a = ComplexMatrix::from_real_row_major(2, &[1.0, 2.0, 2.0, 4.0]).unwrap();
        assert!(matches!(inverse(&a), Err(Error::Singular { .. })));
        let tiny = ComplexMatrix::from_real_diagonal(&[1.0, 1e-16]);
        assert!(matches!(inverse(&tiny), Err(Error::Singular { .. })));
    }

    #[test]
    fn hermitian_eig_examples() {
        let e = hermitian_eig(&HermitianMatrix::from_real_diagonal(&[3.0, 1.0]));
        assert_eq!(e.values, vec![1.0, 3.0]);
        let pauli = HermitianMatrix::new(ComplexMatrix::from_real_row_major(2, &[0.0, 1.0, 1.0, 0.0]).unwrap()).unwrap();
        let e = hermitian_eig(&pauli);
        assert_abs_diff_eq!(e.values[0], -1.0, epsilon = 1e-14);
        assert_abs_diff_eq!(e.values[1], 1.0, epsilon = 1e-14);
    }

    #[test]
    fn hermitian_eig_reconstructs() {
        let mut s = Sampler::new(5);
        for n in 1..10 {
            let h = s.hermitian(n);
            let e = hermitian_eig(&h);
            assert!(e.values.windows(2).all(|w| w[0] <= w[1]));
            let v = &e.vectors;
            let orth = (&(&v.adjoint() * v) - &ComplexMatrix::identity(n)).frobenius_norm();
            assert!(orth <= 1e-10 * n as f64);
            let back = e.map(|x| x);
            assert!((back.as_complex() - h.as_complex()).frobenius_norm() <= 1e-10 * (1.0 + h.frobenius_norm()));
        }
    }

    #[test]
    fn sqrt_pd_examples() {
        let s = sqrt_pd(&HermitianMatrix::from_real_diagonal(&[4.0, 9.0])).unwrap();
        assert!(s.relative_distance(&ComplexMatrix::from_real_diagonal(&[2.0, 3.0])) < 1e-15);
        let id = sqrt_pd(&HermitianMatrix::identity(3)).unwrap();
        assert!(id.relative_distance(&ComplexMatrix::identity(3)) < 1e-15);
        let mut sampler = Sampler::new(8);
        for n in 1..9 {
            let h = real_part(&sampler.pd(n));
            let root = sqrt_pd(&h).unwrap();
            let resid = (&(root.as_complex() * root.as_complex()) - h.as_complex()).frobenius_norm();
            assert!(resid <= 1e-10 * h.frobenius_norm());
        }
        assert!(matches!(
            sqrt_pd(&HermitianMatrix::from_real_diagonal(&[1.0, -1.0])),
            Err(Error::NotPositiveDefinite { .. })
        ));
    }

    #[test]
    fn loewner_examples() {
        let tol = TolerancePolicy::default();
        let h = HermitianMatrix::from_real_diagonal(&[1.0, 2.0]);
        let k = HermitianMatrix::from_real_diagonal(&[2.0, 3.0]);
        let out = loewner_leq(&h, &k, tol).unwrap();
        assert!(out.holds);
        assert_abs_diff_eq!(out.margin, 1.0, epsilon = 1e-14);

        let out = loewner_leq(&h, &h, tol).unwrap();
        assert!(out.holds);
        assert_eq!(out.margin, 0.0);

        let h = HermitianMatrix::from_real_diagonal(&[2.0, 1.0]);
        let out = loewner_leq(&h, &k.sub(&HermitianMatrix::identity(2)), tol).unwrap();
        assert!(!out.holds);
        assert_abs_diff_eq!(out.margin, -1.0, epsilon = 1e-14);

        assert!(matches!(
            loewner_leq(&HermitianMatrix::identity(2), &HermitianMatrix::identity(3), tol),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn singular_value_examples() {
        let d = ComplexMatrix::from_real_diagonal(&[1.0, -2.0]);
        let sv = singular_values(&d);
        assert_abs_diff_eq!(sv[0], 2.0, epsilon = 1e-14);
        assert_abs_diff_eq!(sv[1], 1.0, epsilon = 1e-14);
        let mut s = Sampler::new(21);
        let u = s.unitary(5);
        for x in singular_values(&u) {
            assert_abs_diff_eq!(x, 1.0, epsilon = 1e-12);
        }
    }

    #[test]
    fn singular_values_are_unitarily_invariant() {
        let mut s = Sampler::new(99);
        for n in 2..8 {
            let a = s.complex_gaussian(n);
            let u = s.unitary(n);
            let v = s.unitary(n);
            let lhs = singular_values(&a);
            let rhs = singular_values(&(&(&u * &a) * &v));
            for (x, y) in lhs.iter().zip(&rhs) {
                assert!((x - y).abs() <= 1e-10 * lhs[0]);
            }
        }
    }

    #[test]
    fn singular_values_match_gram_eigenvalues() {
        let mut s = Sampler::new(123);
        for n in 1..8 {
            let a = s.complex_gaussian(n);
            let gram = HermitianMatrix::hermitian_part(&(&a.adjoint() * &a));
            let mut from_eig: Vec<f64> = hermitian_eigenvalues(&gram).iter().map(|x| x.max(0.0).sqrt()).collect();
            from_eig.reverse();
            let sv = singular_values(&a);
            for (x, y) in sv.iter().zip(&from_eig) {
                assert!((x - y).abs() <= 1e-10 * sv[0].max(1.0), "{x} vs {y}");
            }
        }
    }

    #[test]
    fn congruence_preserves_inertia() {
        let mut s = Sampler::new(4);
        for n in 2..8 {
            let h = s.hermitian(n);
            let g = s.complex_gaussian(n);
            let cong = HermitianMatrix::hermitian_part(&(&(&g.adjoint() * h.as_complex()) * &g));
            let signs = |v: Vec<f64>| {
                let pos = v.iter().filter(|&&x| x > 0.0).count();
                let neg = v.iter().filter(|&&x| x < 0.0).count();
                (pos, neg)
            };
            assert_eq!(signs(hermitian_eigenvalues(&h)), signs(hermitian_eigenvalues(&cong)));
        }
    }

    #[test]
    fn eigensystem_reconstructs_nonnormal_matrix() {
        let mut s = Sampler::new(77);
        for n in 1..8 {
            let a = s.accretive(n);
            let es = eigensystem(&a).unwrap();
            let lambda = ComplexMatrix::from_diagonal(&es.values);
            let av = &a * &es.vectors;
            let vl = &es.vectors * &lambda;
            assert!((&av - &vl).frobenius_norm() <= 1e-10 * a.frobenius_norm());
        }
    }
}
