//! Sector cones `S_alpha`, accretivity, and seeded generators of certified instances.
//!
//! A matrix `A` lies in `S_alpha` when its numerical range sits in the cone
//! `{z : Re z > 0, |Im z| <= tan(alpha) Re z}`. Membership is tested through the
//! equivalent pair of semidefinite conditions `tan(alpha) Re A +- Im A >= 0`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numerics::{
    hermitian_norm2, imag_part, lambda_min, loewner_leq, pd_power, real_part, sqrt_pd, ComplexMatrix,
    HermitianMatrix, TolerancePolicy,
};

/// Sector half-angle in `[0, pi/2)`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct SectorAngle(f64);

impl SectorAngle {
    pub fn new(alpha: f64) -> Result<Self> {
        if !(alpha >= 0.0 && alpha < FRAC_PI_2) {
            return Err(Error::InvalidAngle(alpha));
        }
        Ok(Self(alpha))
    }

    pub const ZERO: SectorAngle = SectorAngle(0.0);

    #[inline]
    pub fn radians(self) -> f64 {
        self.0
    }

    pub fn tan(self) -> f64 {
        self.0.tan()
    }

    pub fn cos(self) -> f64 {
        self.0.cos()
    }

    pub fn sec(self) -> f64 {
        1.0 / self.0.cos()
    }
}

/// A matrix with a verified sector bound.
#[derive(Debug, Clone)]
pub struct SectorCertificate {
    pub matrix: ComplexMatrix,
    pub alpha: SectorAngle,
    /// `lambda_min(Re A)`.
    pub accretivity_margin: f64,
}

impl SectorCertificate {
    pub fn certify(matrix: ComplexMatrix, alpha: SectorAngle, tol: TolerancePolicy) -> Result<Self> {
        let (accretive, margin) = is_accretive(&matrix, tol);
        if !accretive {
            return Err(Error::NotAccretive { margin });
        }
        if !in_sector(&matrix, alpha, tol) {
            return Err(Error::InvalidArgument(format!(
                "matrix is not in the sector of half-angle {}",
                alpha.radians()
            )));
        }
        Ok(Self {
            matrix,
            alpha,
            accretivity_margin: margin,
        })
    }

    /// The least angle whose sector contains this matrix.
    pub fn realized_angle(&self) -> SectorAngle {
        sector_angle(&self.matrix).expect("certified matrices are accretive")
    }
}

/// `(Re A > abs_floor, lambda_min(Re A))`.
pub fn is_accretive(a: &ComplexMatrix, tol: TolerancePolicy) -> (bool, f64) {
    let margin = lambda_min(&real_part(a));
    (margin > tol.abs_floor, margin)
}

/// Least `alpha` with `W(A)` inside `S_alpha`: `arctan(rho(R^{-1/2} Im A R^{-1/2}))`, `R = Re A`.
pub fn sector_angle(a: &ComplexMatrix) -> Result<SectorAngle> {
    let re = real_part(a);
    let margin = lambda_min(&re);
    if !(margin > 0.0) {
        return Err(Error::NotAccretive { margin });
    }
    let inv_sqrt = pd_power(&re, -0.5)?;
    let im = imag_part(a);
    let whitened = HermitianMatrix::hermitian_part(&(&(inv_sqrt.as_complex() * im.as_complex()) * inv_sqrt.as_complex()));
    let alpha = hermitian_norm2(&whitened).atan();
    // atan of a finite value is < pi/2; guard the rounding case.
    SectorAngle::new(alpha.min(FRAC_PI_2 - f64::EPSILON))
}

/// Relative membership slack for `S_alpha`: the smallest of the relative Loewner
/// margins of `Im A <= tan(alpha) Re A`, `-Im A <= tan(alpha) Re A` and of `0 < Re A`.
/// Nonnegative (up to rounding) exactly when `A` is in the closed cone.
pub fn sector_margin(a: &ComplexMatrix, alpha: SectorAngle) -> f64 {
    let tol = TolerancePolicy::default();
    let re = real_part(a);
    let im = imag_part(a);
    let bound = re.scale(alpha.tan());
    let upper = loewner_leq(&im, &bound, tol).expect("same dimension");
    let lower = loewner_leq(&im.scale(-1.0), &bound, tol).expect("same dimension");
    let re_margin = lambda_min(&re) / 1.0_f64.max(hermitian_norm2(&re));
    upper.relative_margin().min(lower.relative_margin()).min(re_margin)
}

pub fn in_sector(a: &ComplexMatrix, alpha: SectorAngle, tol: TolerancePolicy) -> bool {
    if !is_accretive(a, tol).0 {
        return false;
    }
    let re = real_part(a);
    let im = imag_part(a);
    let bound = re.scale(alpha.tan());
    let upper = loewner_leq(&im, &bound, tol).expect("same dimension");
    let lower = loewner_leq(&im.scale(-1.0), &bound, tol).expect("same dimension");
    upper.holds && lower.holds
}

/// Counter-based seed splitting: a pure function of `(master, stream, index)`.
pub fn derive_seed(master: u64, stream: &str, index: u64) -> u64 {
    // FNV-1a over the stream label, then splitmix64 finalization.
    let mut h: u64 = 0xcbf2_9ce4_8422_2325;
    for b in stream.bytes() {
        h ^= u64::from(b);
        h = h.wrapping_mul(0x0000_0100_0000_01b3);
    }
    splitmix64(splitmix64(master ^ h).wrapping_add(index.wrapping_mul(0x9e37_79b9_7f4a_7c15)))
}

fn splitmix64(x: u64) -> u64 {
    let mut z = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Deterministic random source for test instances.
#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn uniform(&mut self, lo: f64, hi: f64) -> f64 {
        lo + (hi - lo) * self.rng.random::<f64>()
    }

    pub fn index(&mut self, len: usize) -> usize {
        self.rng.random_range(0..len)
    }

    pub fn range_inclusive(&mut self, lo: usize, hi: usize) -> usize {
        self.rng.random_range(lo..=hi)
    }

    fn gaussian(&mut self) -> f64 {
        StandardNormal.sample(&mut self.rng)
    }

    /// Independent standard complex Gaussian entries (`E|z|^2 = 1`).
    pub fn complex_gaussian(&mut self, n: usize) -> ComplexMatrix {
        let scale = std::f64::consts::FRAC_1_SQRT_2;
        let entries: Vec<Complex64> = (0..n * n)
            .map(|_| Complex64::new(self.gaussian() * scale, self.gaussian() * scale))
            .collect();
        ComplexMatrix::from_row_major(n, &entries).expect("finite gaussian entries")
    }

    pub fn hermitian(&mut self, n: usize) -> HermitianMatrix {
        HermitianMatrix::hermitian_part(&self.complex_gaussian(n))
    }

    /// `G* G + 0.1 I`.
    pub fn pd(&mut self, n: usize) -> ComplexMatrix {
        let g = self.complex_gaussian(n);
        let gram = &g.adjoint() * &g;
        HermitianMatrix::hermitian_part(&gram)
            .into_complex()
            .shift_diagonal(Complex64::new(0.1, 0.0))
    }

    /// `H + iK` with `H` from [`Sampler::pd`] and `K` random Hermitian.
    pub fn accretive(&mut self, n: usize) -> ComplexMatrix {
        let h = self.pd(n);
        let k = self.hermitian(n);
        &h + &k.as_complex().scale(Complex64::new(0.0, 1.0))
    }

    /// `H + i H^{1/2} S H^{1/2}` with `||S||_2 = tau tan(alpha)`, `tau ~ U[0.5, 1]`.
    /// The realized sector angle is `arctan(tau tan(alpha))`, which lies in `[0.4 alpha, alpha]`.
    pub fn sectorial(&mut self, n: usize, alpha: SectorAngle) -> Result<SectorCertificate> {
        if !(alpha.radians() > 0.0) {
            return Err(Error::InvalidAngle(alpha.radians()));
        }
        let h = HermitianMatrix::hermitian_part(&self.pd(n));
        let s = self.hermitian(n);
        let tau = self.uniform(0.5, 1.0);
        let s_norm = hermitian_norm2(&s);
        let s = if s_norm > 0.0 {
            s.scale(tau * alpha.tan() / s_norm)
        } else {
            s
        };
        let root = sqrt_pd(&h)?;
        let im = HermitianMatrix::hermitian_part(&(&(root.as_complex() * s.as_complex()) * root.as_complex()));
        let a = h.as_complex() + &im.as_complex().scale(Complex64::new(0.0, 1.0));
        SectorCertificate::certify(a, alpha, TolerancePolicy::default())
    }

    /// Haar-distributed unitary from the QR factorization of a Gaussian matrix.
    pub fn unitary(&mut self, n: usize) -> ComplexMatrix {
        let g = self.complex_gaussian(n);
        let qr = g.into_inner().qr();
        let mut q = qr.q();
        let r = qr.r();
        for j in 0..n {
            let d = r[(j, j)];
            let phase = if d.norm() > 0.0 { d / d.norm() } else { Complex64::new(1.0, 0.0) };
            q.column_mut(j).iter_mut().for_each(|z| *z *= phase);
        }
        ComplexMatrix::new(q).expect("finite unitary")
    }
}

fn check_dim(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::InvalidArgument("dimension must be at least 1".into()));
    }
    Ok(())
}

pub fn gen_pd(n: usize, seed: u64) -> Result<ComplexMatrix> {
    check_dim(n)?;
    Ok(Sampler::new(seed).pd(n))
}

pub fn gen_accretive(n: usize, seed: u64) -> Result<ComplexMatrix> {
    check_dim(n)?;
    Ok(Sampler::new(seed).accretive(n))
}

pub fn gen_sectorial(n: usize, alpha: f64, seed: u64) -> Result<SectorCertificate> {
    check_dim(n)?;
    let alpha = SectorAngle::new(alpha)?;
    Sampler::new(seed).sectorial(n, alpha)
}

pub fn gen_unitary(n: usize, seed: u64) -> Result<ComplexMatrix> {
    check_dim(n)?;
    Ok(Sampler::new(seed).unitary(n))
}
