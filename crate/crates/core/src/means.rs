//! Principal powers and weighted means of accretive matrices.
//!
//! Two independent engines compute `A^r`:
//! * [`principal_power_quad`] evaluates the resolvent integral representation of the
//!   branch containing `r` with a Gauss–Jacobi rule;
//! * [`principal_power_eigen`] diagonalizes `A` and applies the principal logarithm.
//!
//! The geometric mean `A #_r B = A^{1/2} (A^{-1/2} B A^{-1/2})^r A^{1/2}` is built on either
//! engine; [`geometric_mean_integral`] evaluates the direct integral forms instead.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::cones::is_accretive;
use crate::error::{Error, Result};
use crate::numerics::{condition_number, eigensystem, eigenvalues, inverse, singular_values, ComplexMatrix, TolerancePolicy};
use crate::quadrature::{quadrature_rule, Branch, MeanOrder, QuadratureRule, DEFAULT_NODES};

/// Eigenvector condition number above which the eigen oracle refuses an instance.
pub const MAX_EIGENBASIS_CONDITION: f64 = 1e8;

/// How principal powers are evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum MeanEngine {
    /// Gauss–Jacobi discretization of the integral representations.
    Quadrature { nodes: usize },
    /// Eigendecomposition with the principal logarithm.
    Eigen,
}

impl Default for MeanEngine {
    fn default() -> Self {
        MeanEngine::Quadrature { nodes: DEFAULT_NODES }
    }
}

fn require_accretive(a: &ComplexMatrix) -> Result<()> {
    let (ok, margin) = is_accretive(a, TolerancePolicy::default());
    if ok {
        Ok(())
    } else {
        Err(Error::NotAccretive { margin })
    }
}

fn require_same_dim(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.dim(),
            found: b.dim(),
        });
    }
    Ok(())
}

fn real(x: f64) -> Complex64 {
    Complex64::new(x, 0.0)
}

/// `A !_s B = ((1 - s) A^{-1} + s B^{-1})^{-1}`; exact pass-through at `s = 0` and `s = 1`.
pub fn harmonic_mean(a: &ComplexMatrix, b: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    require_same_dim(a, b)?;
    if !(0.0..=1.0).contains(&s) {
        return Err(Error::InvalidArgument(format!("harmonic weight {s} is outside [0, 1]")));
    }
    if s == 0.0 {
        return Ok(a.clone());
    }
    if s == 1.0 {
        return Ok(b.clone());
    }
    let combo = &inverse(a)?.scale_real(1.0 - s) + &inverse(b)?.scale_real(s);
    inverse(&combo)
}

/// `A nabla_r B = (1 - r) A + r B` for any real `r`.
pub fn arithmetic_mean(a: &ComplexMatrix, b: &ComplexMatrix, r: f64) -> ComplexMatrix {
    if r == 0.0 {
        return a.clone();
    }
    if r == 1.0 {
        return b.clone();
    }
    &a.scale_real(1.0 - r) + &b.scale_real(r)
}

/// `I !_s A = ((1 - s) I + s A^{-1})^{-1}`, given `A^{-1}`.
fn identity_harmonic(a_inv: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    inverse(&a_inv.scale_real(s).shift_diagonal(real(1.0 - s)))
}

/// `(s I + (1 - s) A)^{-1}`.
fn shifted_resolvent(a: &ComplexMatrix, s: f64) -> Result<ComplexMatrix> {
    inverse(&a.scale_real(1.0 - s).shift_diagonal(real(s)))
}

/// Geometric midpoint of the extreme singular values, used to center a spectrum around 1.
fn spectral_center(a: &ComplexMatrix) -> f64 {
    let sv = singular_values(a);
    let c = (sv[0] * sv[sv.len() - 1]).sqrt();
    if c.is_finite() && c > 0.0 {
        c
    } else {
        1.0
    }
}

/// Quadrature sum of the branch integrand, assuming the spectrum of `a` avoids `(-inf, 0]`.
///
/// The matrix is first scaled by a positive constant `c` so that its spectrum is centered
/// around modulus one, and the result is rescaled by `c^r`.
fn power_quad_unchecked(a: &ComplexMatrix, rule: &QuadratureRule) -> Result<ComplexMatrix> {
    let r = rule.order().value();
    let c = spectral_center(a);
    let scaled = a.scale_real(1.0 / c);
    let n = a.dim();
    let mut sum = ComplexMatrix::zeros(n);
    match rule.order().branch() {
        Branch::Unit => {
            let inv = inverse(&scaled)?;
            for (s, w) in rule.iter() {
                sum = &sum + &identity_harmonic(&inv, s)?.scale_real(w);
            }
        }
        Branch::Extended => {
            let square = &scaled * &scaled;
            for (s, w) in rule.iter() {
                sum = &sum + &(&square * &shifted_resolvent(&scaled, s)?).scale_real(w);
            }
        }
        Branch::Negative => {
            for (s, w) in rule.iter() {
                sum = &sum + &shifted_resolvent(&scaled, s)?.scale_real(w);
            }
        }
        Branch::Zero | Branch::One => unreachable!("rules are never built for the endpoints"),
    }
    Ok(sum.scale_real(c.powf(r)))
}

/// `A^r` by the integral representation of the branch of `rule.order()`.
pub fn principal_power_quad(a: &ComplexMatrix, rule: &QuadratureRule) -> Result<ComplexMatrix> {
    require_accretive(a)?;
    power_quad_unchecked(a, rule)
}

fn check_branch_cut(values: &[Complex64]) -> Result<()> {
    for z in values {
        if z.im == 0.0 && z.re <= 0.0 || z.norm() == 0.0 {
            return Err(Error::BranchCut { re: z.re, im: z.im });
        }
    }
    Ok(())
}

/// `A^r = V diag(exp(r Log lambda_i)) V^{-1}` with the principal logarithm.
pub fn principal_power_eigen(a: &ComplexMatrix, r: f64) -> Result<ComplexMatrix> {
    if !r.is_finite() {
        return Err(Error::InvalidArgument(format!("exponent {r} is not finite")));
    }
    if r == 0.0 {
        return Ok(ComplexMatrix::identity(a.dim()));
    }
    if r == 1.0 {
        return Ok(a.clone());
    }
    let es = eigensystem(a)?;
    check_branch_cut(&es.values)?;
    let condition = condition_number(&es.vectors);
    if !(condition <= MAX_EIGENBASIS_CONDITION) {
        return Err(Error::IllConditionedEigenbasis { condition });
    }
    let powered: Vec<Complex64> = es.values.iter().map(|z| (z.ln() * r).exp()).collect();
    let v_inv = inverse(&es.vectors)?;
    Ok(&(&es.vectors * &ComplexMatrix::from_diagonal(&powered)) * &v_inv)
}

/// `A^r` for accretive `A`, dispatching on the engine; exact at `r = 0` and `r = 1`.
pub fn principal_power(a: &ComplexMatrix, r: MeanOrder, engine: MeanEngine) -> Result<ComplexMatrix> {
    require_accretive(a)?;
    power_any(a, r, engine, true)
}

/// `A^r` when only the spectrum (not accretivity) is known to avoid `(-inf, 0]`.
fn power_any(a: &ComplexMatrix, r: MeanOrder, engine: MeanEngine, accretive: bool) -> Result<ComplexMatrix> {
    match r.branch() {
        Branch::Zero => return Ok(ComplexMatrix::identity(a.dim())),
        Branch::One => return Ok(a.clone()),
        _ => {}
    }
    match engine {
        MeanEngine::Eigen => principal_power_eigen(a, r.value()),
        MeanEngine::Quadrature { nodes } => {
            if !accretive {
                check_branch_cut(&eigenvalues(a)?)?;
            }
            power_quad_unchecked(a, &quadrature_rule(r, nodes)?)
        }
    }
}

/// A geometric mean with a flag recording whether `A^{-1/2} B A^{-1/2}` stayed accretive.
#[derive(Debug, Clone)]
pub struct GeometricMean {
    pub value: ComplexMatrix,
    /// `false` when the inner matrix left the accretive cone; its principal power was still
    /// taken because its spectrum avoids the closed negative axis.
    pub inner_accretive: bool,
}

/// `A #_r B = A^{1/2} (A^{-1/2} B A^{-1/2})^r A^{1/2}`.
pub fn geometric_mean(a: &ComplexMatrix, b: &ComplexMatrix, r: MeanOrder, engine: MeanEngine) -> Result<ComplexMatrix> {
    geometric_mean_detailed(a, b, r, engine).map(|g| g.value)
}

pub fn geometric_mean_detailed(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    r: MeanOrder,
    engine: MeanEngine,
) -> Result<GeometricMean> {
    require_same_dim(a, b)?;
    require_accretive(a)?;
    require_accretive(b)?;
    match r.branch() {
        Branch::Zero => {
            return Ok(GeometricMean {
                value: a.clone(),
                inner_accretive: true,
            })
        }
        Branch::One => {
            return Ok(GeometricMean {
                value: b.clone(),
                inner_accretive: true,
            })
        }
        _ => {}
    }
    let half = MeanOrder::new(0.5).expect("1/2 is admissible");
    let root = power_any(a, half, engine, true)?;
    let root_inv = inverse(&root)?;
    let inner = &(&root_inv * b) * &root_inv;
    let inner_accretive = is_accretive(&inner, TolerancePolicy::default()).0;
    let powered = power_any(&inner, r, engine, inner_accretive)?;
    Ok(GeometricMean {
        value: &(&root * &powered) * &root,
        inner_accretive,
    })
}

/// `A #_r B` from the direct integral forms:
/// * `r in (0, 1)`: `int (A !_s B) dmu_r(s)`;
/// * `r in (1, 2)`: `int ((1 - s) B^{-1} + s B^{-1} A B^{-1})^{-1} dmu(s)`;
/// * `r in (-1, 0)`: `int ((1 - s) A^{-1} B A^{-1} + s A^{-1})^{-1} dnu(s)`.
pub fn geometric_mean_integral(a: &ComplexMatrix, b: &ComplexMatrix, rule: &QuadratureRule) -> Result<ComplexMatrix> {
    require_same_dim(a, b)?;
    require_accretive(a)?;
    require_accretive(b)?;
    let r = rule.order().value();
    let a_inv = inverse(a)?;
    // A #_r (dB) = d^r (A #_r B); d centers the spectrum of A^{-1} B around modulus one.
    let d = 1.0 / spectral_center(&(&a_inv * b));
    let b = b.scale_real(d);
    let n = a.dim();
    let mut sum = ComplexMatrix::zeros(n);
    match rule.order().branch() {
        Branch::Unit => {
            let b_inv = inverse(&b)?;
            for (s, w) in rule.iter() {
                let term = inverse(&(&a_inv.scale_real(1.0 - s) + &b_inv.scale_real(s)))?;
                sum = &sum + &term.scale_real(w);
            }
        }
        Branch::Extended => {
            let b_inv = inverse(&b)?;
            let sandwich = &(&b_inv * a) * &b_inv;
            for (s, w) in rule.iter() {
                let term = inverse(&(&b_inv.scale_real(1.0 - s) + &sandwich.scale_real(s)))?;
                sum = &sum + &term.scale_real(w);
            }
        }
        Branch::Negative => {
            let sandwich = &(&a_inv * &b) * &a_inv;
            for (s, w) in rule.iter() {
                let term = inverse(&(&sandwich.scale_real(1.0 - s) + &a_inv.scale_real(s)))?;
                sum = &sum + &term.scale_real(w);
            }
        }
        Branch::Zero | Branch::One => unreachable!("rules are never built for the endpoints"),
    }
    Ok(sum.scale_real(d.powf(-r)))
}

fn require_extended(r: MeanOrder) -> Result<()> {
    if r.branch() != Branch::Extended {
        return Err(Error::InvalidArgument(format!("order {} is not in (1, 2)", r.value())));
    }
    Ok(())
}

fn require_negative(r: MeanOrder) -> Result<()> {
    if r.branch() != Branch::Negative {
        return Err(Error::InvalidArgument(format!("order {} is not in (-1, 0)", r.value())));
    }
    Ok(())
}

/// `B (A #_{2-r} B)^{-1} B` for `r in (1, 2)`; equals `A #_r B`.
pub fn reflection_identity(a: &ComplexMatrix, b: &ComplexMatrix, r: MeanOrder, engine: MeanEngine) -> Result<ComplexMatrix> {
    require_extended(r)?;
    let complement = MeanOrder::new(2.0 - r.value())?;
    let inner = geometric_mean(a, b, complement, engine)?;
    Ok(&(b * &inverse(&inner)?) * b)
}

/// `A (A^{-1} #_{-r} B^{-1}) A` for `r in (-1, 0)`; equals `A #_r B`.
pub fn negation_identity(a: &ComplexMatrix, b: &ComplexMatrix, r: MeanOrder, engine: MeanEngine) -> Result<ComplexMatrix> {
    require_negative(r)?;
    let flipped = MeanOrder::new(-r.value())?;
    let inner = geometric_mean(&inverse(a)?, &inverse(b)?, flipped, engine)?;
    Ok(&(a * &inner) * a)
}

/// `((A #_r B)^{-1}, A^{-1} #_r B^{-1})`, which coincide.
pub fn inverse_mean_identity(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    r: MeanOrder,
    engine: MeanEngine,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let lhs = inverse(&geometric_mean(a, b, r, engine)?)?;
    let rhs = geometric_mean(&inverse(a)?, &inverse(b)?, r, engine)?;
    Ok((lhs, rhs))
}

fn require_open_unit(s: f64) -> Result<()> {
    if !(s > 0.0 && s < 1.0) {
        return Err(Error::InvalidArgument(format!("s = {s} is outside (0, 1)")));
    }
    Ok(())
}

/// `(A^2 (sI + (1-s)A)^{-1}, A/(1-s) - s/(1-s) (I !_s A))`, which coincide for `s in (0, 1)`.
pub fn extended_resolvent_identity(a: &ComplexMatrix, s: f64) -> Result<(ComplexMatrix, ComplexMatrix)> {
    require_open_unit(s)?;
    let lhs = &(a * a) * &shifted_resolvent(a, s)?;
    let harmonic = identity_harmonic(&inverse(a)?, s)?;
    let rhs = &a.scale_real(1.0 / (1.0 - s)) - &harmonic.scale_real(s / (1.0 - s));
    Ok((lhs, rhs))
}

/// `((sI + (1-s)A)^{-1}, I/s - (1-s)/s (I !_s A))`, which coincide for `s in (0, 1)`.
pub fn negative_resolvent_identity(a: &ComplexMatrix, s: f64) -> Result<(ComplexMatrix, ComplexMatrix)> {
    require_open_unit(s)?;
    let lhs = shifted_resolvent(a, s)?;
    let harmonic = identity_harmonic(&inverse(a)?, s)?;
    let rhs = harmonic.scale_real(-(1.0 - s) / s).shift_diagonal(real(1.0 / s));
    Ok((lhs, rhs))
}
