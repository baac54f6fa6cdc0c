//! Positive unital linear maps, unitarily invariant norms and the numerical radius.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cones::Sampler;
use crate::error::{Error, Result};
use crate::numerics::{hermitian_eigenvalues, singular_values, ComplexMatrix, HermitianMatrix};

/// The shape of a positive unital map `M_n -> M_k`.
#[derive(Debug, Clone, PartialEq)]
pub enum MapKind {
    /// Leading principal `k x k` block, `V* A V` with `V` the first `k` columns of `I_n`.
    Compression { k: usize },
    /// Keeps the diagonal blocks of the given sizes and zeroes the rest.
    Pinching { blocks: Vec<usize> },
    /// `sum_i p_i U_i* A U_i`.
    UnitaryMixture {
        unitaries: Vec<ComplexMatrix>,
        probabilities: Vec<f64>,
    },
    /// `tr(A)/n I_k`.
    TraceAverage { k: usize },
}

/// Labels used when maps are chosen round-robin.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MapLabel {
    Compression,
    Pinching,
    UnitaryMixture,
    TraceAverage,
}

impl MapLabel {
    pub const ALL: [MapLabel; 4] = [
        MapLabel::Compression,
        MapLabel::Pinching,
        MapLabel::UnitaryMixture,
        MapLabel::TraceAverage,
    ];
}

impl fmt::Display for MapLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            MapLabel::Compression => "compression",
            MapLabel::Pinching => "pinching",
            MapLabel::UnitaryMixture => "unitary_mixture",
            MapLabel::TraceAverage => "trace_average",
        };
        f.write_str(s)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PositiveUnitalMap {
    n: usize,
    kind: MapKind,
}

impl PositiveUnitalMap {
    pub fn new(n: usize, kind: MapKind) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidArgument("input dimension must be positive".into()));
        }
        match &kind {
            MapKind::Compression { k } | MapKind::TraceAverage { k } => {
                if *k == 0 || (*k > n && matches!(kind, MapKind::Compression { .. })) {
                    return Err(Error::InvalidArgument(format!("output dimension {k} is invalid for n = {n}")));
                }
            }
            MapKind::Pinching { blocks } => {
                if blocks.iter().any(|&b| b == 0) || blocks.iter().sum::<usize>() != n {
                    return Err(Error::InvalidArgument(format!(
                        "pinching blocks {blocks:?} must be positive and sum to {n}"
                    )));
                }
            }
            MapKind::UnitaryMixture {
                unitaries,
                probabilities,
            } => {
                if unitaries.is_empty() || unitaries.len() != probabilities.len() {
                    return Err(Error::InvalidArgument(
                        "unitary mixture needs one probability per unitary".into(),
                    ));
                }
                if probabilities.iter().any(|&p| !(p >= 0.0)) || (probabilities.iter().sum::<f64>() - 1.0).abs() > 1e-12 {
                    return Err(Error::InvalidArgument(
                        "mixture probabilities must be nonnegative and sum to 1".into(),
                    ));
                }
                for u in unitaries {
                    if u.dim() != n {
                        return Err(Error::DimensionMismatch {
                            expected: n,
                            found: u.dim(),
                        });
                    }
                    let defect = (&(&u.adjoint() * u) - &ComplexMatrix::identity(n)).frobenius_norm();
                    if defect > 1e-10 {
                        return Err(Error::InvalidArgument(format!("mixture element is not unitary ({defect:.2e})")));
                    }
                }
            }
        }
        Ok(Self { n, kind })
    }

    /// A random map of the requested kind with nontrivial parameters.
    pub fn random(label: MapLabel, n: usize, sampler: &mut Sampler) -> Result<Self> {
        let kind = match label {
            MapLabel::Compression => MapKind::Compression {
                k: if n == 1 { 1 } else { sampler.range_inclusive(1, n - 1) },
            },
            MapLabel::Pinching => {
                let mut blocks = Vec::new();
                let mut left = n;
                while left > 0 {
                    let b = sampler.range_inclusive(1, left.min(3));
                    blocks.push(b);
                    left -= b;
                }
                MapKind::Pinching { blocks }
            }
            MapLabel::UnitaryMixture => {
                let count = sampler.range_inclusive(2, 3);
                let unitaries = (0..count).map(|_| sampler.unitary(n)).collect();
                let raw: Vec<f64> = (0..count).map(|_| sampler.uniform(0.1, 1.0)).collect();
                let total: f64 = raw.iter().sum();
                let mut probabilities: Vec<f64> = raw.iter().map(|p| p / total).collect();
                // Exact unit sum.
                let head: f64 = probabilities[..count - 1].iter().sum();
                probabilities[count - 1] = 1.0 - head;
                MapKind::UnitaryMixture {
                    unitaries,
                    probabilities,
                }
            }
            MapLabel::TraceAverage => MapKind::TraceAverage {
                k: sampler.range_inclusive(1, n),
            },
        };
        Self::new(n, kind)
    }

    pub fn input_dim(&self) -> usize {
        self.n
    }

    pub fn output_dim(&self) -> usize {
        match &self.kind {
            MapKind::Compression { k } | MapKind::TraceAverage { k } => *k,
            MapKind::Pinching { .. } | MapKind::UnitaryMixture { .. } => self.n,
        }
    }

    pub fn kind(&self) -> &MapKind {
        &self.kind
    }

    pub fn label(&self) -> MapLabel {
        match self.kind {
            MapKind::Compression { .. } => MapLabel::Compression,
            MapKind::Pinching { .. } => MapLabel::Pinching,
            MapKind::UnitaryMixture { .. } => MapLabel::UnitaryMixture,
            MapKind::TraceAverage { .. } => MapLabel::TraceAverage,
        }
    }

    pub fn apply(&self, a: &ComplexMatrix) -> Result<ComplexMatrix> {
        apply_map(self, a)
    }
}

pub fn apply_map(phi: &PositiveUnitalMap, a: &ComplexMatrix) -> Result<ComplexMatrix> {
    if a.dim() != phi.n {
        return Err(Error::DimensionMismatch {
            expected: phi.n,
            found: a.dim(),
        });
    }
    Ok(match &phi.kind {
        MapKind::Compression { k } => a.leading_block(*k),
        MapKind::Pinching { blocks } => {
            let n = phi.n;
            let mut owner = Vec::with_capacity(n);
            for (idx, &b) in blocks.iter().enumerate() {
                owner.extend(std::iter::repeat(idx).take(b));
            }
            let inner = a.as_inner();
            let out = nalgebra::DMatrix::from_fn(n, n, |i, j| {
                if owner[i] == owner[j] {
                    inner[(i, j)]
                } else {
                    Complex64::new(0.0, 0.0)
                }
            });
            ComplexMatrix::new(out)?
        }
        MapKind::UnitaryMixture {
            unitaries,
            probabilities,
        } => {
            let mut sum = ComplexMatrix::zeros(phi.n);
            for (u, &p) in unitaries.iter().zip(probabilities) {
                sum = &sum + &(&(&u.adjoint() * a) * u).scale_real(p);
            }
            sum
        }
        MapKind::TraceAverage { k } => {
            ComplexMatrix::identity(*k).scale(a.trace() / phi.n as f64)
        }
    })
}

/// Unitarily invariant norms computed from singular values.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum NormKind {
    Operator,
    Frobenius,
    Trace,
    /// Sum of the `k` largest singular values.
    KyFan(usize),
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            NormKind::Operator => f.write_str("operator"),
            NormKind::Frobenius => f.write_str("frobenius"),
            NormKind::Trace => f.write_str("trace"),
            NormKind::KyFan(k) => write!(f, "kyfan:{k}"),
        }
    }
}

pub fn ui_norm(a: &ComplexMatrix, kind: NormKind) -> Result<f64> {
    let sv = singular_values(a);
    Ok(match kind {
        NormKind::Operator => sv[0],
        NormKind::Frobenius => sv.iter().map(|s| s * s).sum::<f64>().sqrt(),
        NormKind::Trace => sv.iter().sum(),
        NormKind::KyFan(k) => {
            if k == 0 || k > sv.len() {
                return Err(Error::InvalidArgument(format!("Ky Fan index {k} is outside [1, {}]", sv.len())));
            }
            sv[..k].iter().sum()
        }
    })
}

const RADIUS_GRID: usize = 720;
const RADIUS_THETA_TOL: f64 = 1e-10;

/// Largest eigenvalue of `Re(e^{-i theta} A)` and, from the same spectrum, the value at `theta + pi`.
fn support_pair(a: &ComplexMatrix, theta: f64) -> (f64, f64) {
    let rotated = a.scale(Complex64::from_polar(1.0, -theta));
    let eig = hermitian_eigenvalues(&HermitianMatrix::hermitian_part(&rotated));
    (eig[eig.len() - 1], -eig[0])
}

fn support(a: &ComplexMatrix, theta: f64) -> f64 {
    support_pair(a, theta).0
}

/// `w(A) = max_theta lambda_max((e^{-i theta} A + e^{i theta} A*) / 2)`.
///
/// The support function of the numerical range is sampled on a 720-point grid over
/// `[0, 2 pi)`, and every grid-local maximum is refined by golden-section search down
/// to `1e-10` in `theta`.
pub fn numerical_radius(a: &ComplexMatrix) -> f64 {
    let half = RADIUS_GRID / 2;
    let step = 2.0 * PI / RADIUS_GRID as f64;
    let mut values = vec![0.0; RADIUS_GRID];
    for i in 0..half {
        let (here, opposite) = support_pair(a, i as f64 * step);
        values[i] = here;
        values[i + half] = opposite;
    }
    let mut best = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    for i in 0..RADIUS_GRID {
        let prev = values[(i + RADIUS_GRID - 1) % RADIUS_GRID];
        let next = values[(i + 1) % RADIUS_GRID];
        if values[i] >= prev && values[i] >= next {
            let center = i as f64 * step;
            best = best.max(golden_max(a, center - step, center + step));
        }
    }
    debug_assert!({
        let norm = singular_values(a)[0];
        best <= norm * (1.0 + 1e-9) + 1e-300 && best >= 0.5 * norm * (1.0 - 1e-9)
    });
    best
}

fn golden_max(a: &ComplexMatrix, mut lo: f64, mut hi: f64) -> f64 {
    let ratio = (5.0_f64.sqrt() - 1.0) / 2.0;
    let mut x1 = hi - ratio * (hi - lo);
    let mut x2 = lo + ratio * (hi - lo);
    let mut f1 = support(a, x1);
    let mut f2 = support(a, x2);
    while hi - lo > RADIUS_THETA_TOL {
        if f1 < f2 {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + ratio * (hi - lo);
            f2 = support(a, x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - ratio * (hi - lo);
            f1 = support(a, x1);
        }
    }
    f1.max(f2)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::{lambda_min, operator_norm, real_part};

    /// max |<Ax, x>| over random unit vectors.
    fn sampled_radius(a: &ComplexMatrix, samples: usize, seed: u64) -> f64 {
        let mut s = Sampler::new(seed);
        let n = a.dim();
        let mut best = 0.0_f64;
        for _ in 0..samples {
            let x = s.complex_gaussian(n);
            let v: Vec<Complex64> = (0..n).map(|i| x.get(i, 0)).collect();
            let norm2: f64 = v.iter().map(|z| z.norm_sqr()).sum();
            let mut q = Complex64::new(0.0, 0.0);
            for i in 0..n {
                for j in 0..n {
                    q += v[i].conj() * a.get(i, j) * v[j];
                }
            }
            best = best.max(q.norm() / norm2);
        }
        best
    }

    #[test]
    fn compression_takes_leading_block() {
        let a = ComplexMatrix::from_real_row_major(2, &[1.0, 2.0, 3.0, 4.0]).unwrap();
        let phi = PositiveUnitalMap::new(2, MapKind::Compression { k: 1 }).unwrap();
        assert_eq!(phi.apply(&a).unwrap(), ComplexMatrix::from_real_diagonal(&[1.0]));
    }

    #[test]
    fn trace_average_example() {
        let phi = PositiveUnitalMap::new(2, MapKind::TraceAverage { k: 2 }).unwrap();
        let out = phi.apply(&ComplexMatrix::from_real_diagonal(&[1.0, 3.0])).unwrap();
        assert_eq!(out, ComplexMatrix::from_real_diagonal(&[2.0, 2.0]));
    }

    #[test]
    fn single_unitary_mixture_is_congruence() {
        let mut s = Sampler::new(6);
        let u = s.unitary(3);
        let phi = PositiveUnitalMap::new(
            3,
            MapKind::UnitaryMixture {
                unitaries: vec![u.clone()],
                probabilities: vec![1.0],
            },
        )
        .unwrap();
        let a = s.pd(3);
        let out = phi.apply(&a).unwrap();
        assert!(out.relative_distance(&(&(&u.adjoint() * &a) * &u)) < 1e-15);
        assert!(lambda_min(&real_part(&out)) > 0.0);
    }

    #[test]
    fn map_validation() {
        assert!(PositiveUnitalMap::new(3, MapKind::Compression { k: 4 }).is_err());
        assert!(PositiveUnitalMap::new(3, MapKind::Pinching { blocks: vec![1, 1] }).is_err());
        assert!(PositiveUnitalMap::new(
            2,
            MapKind::UnitaryMixture {
                unitaries: vec![ComplexMatrix::identity(2)],
                probabilities: vec![0.9],
            }
        )
        .is_err());
        assert!(PositiveUnitalMap::new(
            2,
            MapKind::UnitaryMixture {
                unitaries: vec![ComplexMatrix::from_real_diagonal(&[2.0, 1.0])],
                probabilities: vec![1.0],
            }
        )
        .is_err());
        let phi = PositiveUnitalMap::new(3, MapKind::TraceAverage { k: 2 }).unwrap();
        assert!(matches!(phi.apply(&ComplexMatrix::identity(2)), Err(Error::DimensionMismatch { .. })));
    }

    #[test]
    fn maps_are_linear_unital_and_positive() {
        let mut s = Sampler::new(100);
        for trial in 0..100 {
            let n = s.range_inclusive(1, 7);
            let label = MapLabel::ALL[trial % 4];
            let phi = PositiveUnitalMap::random(label, n, &mut s).unwrap();
            let k = phi.output_dim();
            let unit = phi.apply(&ComplexMatrix::identity(n)).unwrap();
            assert!(unit.relative_distance(&ComplexMatrix::identity(k)) < 1e-14, "{label}");

            let a = s.complex_gaussian(n);
            let b = s.complex_gaussian(n);
            let lam = Complex64::new(s.uniform(-2.0, 2.0), s.uniform(-2.0, 2.0));
            let lhs = phi.apply(&(&a + &b.scale(lam))).unwrap();
            let rhs = &phi.apply(&a).unwrap() + &phi.apply(&b).unwrap().scale(lam);
            assert!((&lhs - &rhs).max_abs() <= 1e-12 * (1.0 + lhs.max_abs()));

            let p = s.pd(n);
            let image = phi.apply(&p).unwrap();
            assert!(crate::numerics::hermitian_deviation(&image) < 1e-12 * (1.0 + image.max_abs()));
            assert!(lambda_min(&real_part(&image)) > 0.0);
        }
    }

    #[test]
    fn norm_examples() {
        let d = ComplexMatrix::from_real_diagonal(&[1.0, -2.0]);
        assert!((ui_norm(&d, NormKind::Trace).unwrap() - 3.0).abs() < 1e-14);
        assert!((ui_norm(&d, NormKind::Operator).unwrap() - 2.0).abs() < 1e-14);
        assert!((ui_norm(&d, NormKind::Frobenius).unwrap() - 5.0_f64.sqrt()).abs() < 1e-14);
        let mut s = Sampler::new(3);
        let u = s.unitary(4);
        assert!((ui_norm(&u, NormKind::Operator).unwrap() - 1.0).abs() < 1e-12);
        let a = s.complex_gaussian(4);
        assert_eq!(ui_norm(&a, NormKind::KyFan(1)).unwrap(), ui_norm(&a, NormKind::Operator).unwrap());
        assert!(ui_norm(&a, NormKind::KyFan(5)).is_err());
        assert!(ui_norm(&a, NormKind::KyFan(0)).is_err());
    }

    #[test]
    fn norms_are_unitarily_invariant() {
        let mut s = Sampler::new(44);
        for _ in 0..20 {
            let n = s.range_inclusive(2, 6);
            let a = s.complex_gaussian(n);
            let u = s.unitary(n);
            let v = s.unitary(n);
            let uav = &(&u * &a) * &v;
            for kind in [NormKind::Operator, NormKind::Frobenius, NormKind::Trace, NormKind::KyFan(2)] {
                let x = ui_norm(&a, kind).unwrap();
                let y = ui_norm(&uav, kind).unwrap();
                assert!((x - y).abs() <= 1e-9 * x);
            }
        }
    }

    #[test]
    fn radius_of_nilpotent_shift() {
        let shift = ComplexMatrix::from_real_row_major(2, &[0.0, 1.0, 0.0, 0.0]).unwrap();
        let w = numerical_radius(&shift);
        assert!((w - 0.5).abs() <= 1e-6);
        let sampled = sampled_radius(&shift, 200_000, 1);
        assert!(sampled <= w + 1e-9 && w - sampled < 1e-3);
    }

    #[test]
    fn radius_of_normal_matrix() {
        let normal = ComplexMatrix::from_diagonal(&[Complex64::new(1.0, 0.0), Complex64::new(0.0, 1.0)]);
        assert!((numerical_radius(&normal) - 1.0).abs() <= 1e-9);
    }

    #[test]
    fn radius_of_hermitian_is_spectral_radius() {
        let mut s = Sampler::new(9);
        for _ in 0..10 {
            let n = s.range_inclusive(2, 6);
            let h = s.hermitian(n);
            let eig = hermitian_eigenvalues(&h);
            let expected = eig[0].abs().max(eig[eig.len() - 1].abs());
            assert!((numerical_radius(&h) - expected).abs() <= 1e-9 * expected.max(1.0));
        }
    }

    #[test]
    fn radius_is_a_norm_between_half_and_full_operator_norm() {
        let mut s = Sampler::new(10);
        for _ in 0..20 {
            let n = s.range_inclusive(2, 6);
            let a = s.complex_gaussian(n);
            let b = s.complex_gaussian(n);
            let wa = numerical_radius(&a);
            let norm = operator_norm(&a);
            assert!(wa <= norm * (1.0 + 1e-12) && norm <= 2.0 * wa * (1.0 + 1e-12));
            let lam = Complex64::new(s.uniform(-3.0, 3.0), s.uniform(-3.0, 3.0));
            assert!((numerical_radius(&a.scale(lam)) - lam.norm() * wa).abs() <= 1e-9 * lam.norm() * wa);
            let wb = numerical_radius(&b);
            assert!(numerical_radius(&(&a + &b)) <= wa + wb + 1e-9 * (wa + wb));
        }
    }

    #[test]
    fn radius_brute_force_agreement() {
        let mut s = Sampler::new(12);
        let a = s.accretive(3);
        let w = numerical_radius(&a);
        let sampled = sampled_radius(&a, 200_000, 3);
        assert!(sampled <= w * (1.0 + 1e-12));
        assert!((w - sampled) / w < 1e-3);
    }
}
