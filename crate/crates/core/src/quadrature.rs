//! Gauss–Jacobi rules for the probability measures behind the integral
//! representations of `A^r` and `A #_r B`.
//!
//! For each admissible order `r` the measure is
//! `sin(lambda pi) / pi * s^(lambda - 1) (1 - s)^(-lambda) ds` on `(0, 1)`, where
//! `lambda` is `r`, `r - 1` or `r + 1` depending on the branch. Nodes and weights
//! come from the symmetric Jacobi matrix (Golub–Welsch).

use std::f64::consts::PI;

use nalgebra::{DMatrix, SymmetricEigen};
use serde::{Deserialize, Serialize};
use statrs::function::gamma::gamma;

use crate::error::{Error, Result};

/// Node count used when callers do not specify one.
pub const DEFAULT_NODES: usize = 80;

/// Which integral representation an order `r` uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Branch {
    /// `r = 0`: `A^0 = I`.
    Zero,
    /// `r = 1`: `A^1 = A`.
    One,
    /// `r in (-1, 0)`.
    Negative,
    /// `r in (0, 1)`.
    Unit,
    /// `r in (1, 2)`.
    Extended,
}

/// Exponent `r` in `(-1, 0) u (0, 1) u (1, 2)`, or exactly `0` or `1`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct MeanOrder(f64);

impl MeanOrder {
    pub fn new(r: f64) -> Result<Self> {
        let ok = r == 0.0
            || r == 1.0
            || (r > -1.0 && r < 0.0)
            || (r > 0.0 && r < 1.0)
            || (r > 1.0 && r < 2.0);
        if ok {
            Ok(Self(r))
        } else {
            Err(Error::InvalidOrder(r))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    pub fn branch(self) -> Branch {
        let r = self.0;
        if r == 0.0 {
            Branch::Zero
        } else if r == 1.0 {
            Branch::One
        } else if r < 0.0 {
            Branch::Negative
        } else if r < 1.0 {
            Branch::Unit
        } else {
            Branch::Extended
        }
    }

    /// Fractional exponent `lambda in (0, 1)` of the branch measure; `None` at the endpoints.
    pub fn measure_exponent(self) -> Option<f64> {
        match self.branch() {
            Branch::Zero | Branch::One => None,
            Branch::Negative => Some(self.0 + 1.0),
            Branch::Unit => Some(self.0),
            Branch::Extended => Some(self.0 - 1.0),
        }
    }
}

/// Nodes in `(0, 1)`, increasing, with positive weights summing to one.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadratureRule {
    order: MeanOrder,
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl QuadratureRule {
    pub fn new(order: MeanOrder, node_count: usize) -> Result<Self> {
        quadrature_rule(order, node_count)
    }

    pub fn order(&self) -> MeanOrder {
        self.order
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    /// `sum_i w_i f(s_i)`.
    pub fn integrate(&self, f: impl Fn(f64) -> f64) -> f64 {
        self.iter().map(|(s, w)| w * f(s)).sum()
    }
}

/// Gauss–Jacobi rule with `node_count` nodes for the measure of `order`.
pub fn quadrature_rule(order: MeanOrder, node_count: usize) -> Result<QuadratureRule> {
    let lambda = order.measure_exponent().ok_or(Error::InvalidOrder(order.value()))?;
    if node_count < 4 {
        return Err(Error::TooFewNodes(node_count));
    }
    // Weight s^b (1 - s)^a on (0, 1); on [-1, 1] this is (1 - x)^a (1 + x)^b.
    let a = -lambda;
    let b = lambda - 1.0;
    let (x, v0) = golub_welsch(node_count, a, b);

    // Mass of s^b (1-s)^a on (0,1) is B(b+1, a+1) = Gamma(lambda) Gamma(1 - lambda);
    // the sine prefactor turns the measure into a probability measure.
    let mass = gamma(lambda) * gamma(1.0 - lambda);
    let prefactor = (lambda * PI).sin() / PI;

    let mut pairs: Vec<(f64, f64)> = x
        .iter()
        .zip(&v0)
        .map(|(&xi, &vi)| (0.5 * (1.0 + xi), prefactor * mass * vi * vi))
        .collect();
    pairs.sort_by(|p, q| p.0.total_cmp(&q.0));
    let (nodes, weights): (Vec<f64>, Vec<f64>) = pairs.into_iter().unzip();

    debug_assert!(nodes.iter().all(|&s| s > 0.0 && s < 1.0));
    debug_assert!(nodes.windows(2).all(|w| w[0] < w[1]));
    Ok(QuadratureRule { order, nodes, weights })
}

/// Eigenvalues of the Jacobi matrix for `(1 - x)^alpha (1 + x)^beta` and the squared-norm
/// carrying first components of the normalized eigenvectors.
fn golub_welsch(n: usize, alpha: f64, beta: f64) -> (Vec<f64>, Vec<f64>) {
    let ab = alpha + beta;
    let mut jacobi = DMatrix::<f64>::zeros(n, n);
    for k in 0..n {
        let kf = k as f64;
        let diag = if k == 0 {
            (beta - alpha) / (ab + 2.0)
        } else {
            (beta * beta - alpha * alpha) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        jacobi[(k, k)] = diag;
        if k + 1 < n {
            let m = kf + 1.0;
            // The general expression is 0/0 at m = 1 when alpha + beta = -1.
            let off_sq = if k == 0 {
                4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab).powi(2) * (3.0 + ab))
            } else {
                let d = 2.0 * m + ab;
                4.0 * m * (m + alpha) * (m + beta) * (m + ab) / (d * d * (d + 1.0) * (d - 1.0))
            };
            let off = off_sq.sqrt();
            jacobi[(k, k + 1)] = off;
            jacobi[(k + 1, k)] = off;
        }
    }
    let eig = SymmetricEigen::new(jacobi);
    let nodes = eig.eigenvalues.iter().copied().collect();
    let first = (0..n).map(|j| eig.eigenvectors[(0, j)]).collect();
    (nodes, first)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Tanh–sinh rule on (0, 1); handles integrable endpoint singularities.
    /// The integrand receives `s` and `1 - s`, both computed without cancellation.
    fn tanh_sinh(f: impl Fn(f64, f64) -> f64) -> f64 {
        let h = 1.0 / 64.0;
        let mut sum = 0.0;
        for k in -400..=400 {
            let t = k as f64 * h;
            let u = 0.5 * PI * t.sinh();
            let s = 1.0 / (1.0 + (-2.0 * u).exp());
            let s_comp = 1.0 / (1.0 + (2.0 * u).exp());
            let ds = 0.25 * PI * t.cosh() / u.cosh().powi(2);
            if s <= 0.0 || s_comp <= 0.0 || ds == 0.0 || !ds.is_finite() {
                continue;
            }
            sum += f(s, s_comp) * ds;
        }
        sum * h
    }

    fn density(order: MeanOrder) -> impl Fn(f64, f64) -> f64 {
        let lambda = order.measure_exponent().unwrap();
        move |s: f64, s_comp: f64| (lambda * PI).sin() / PI * s.powf(lambda - 1.0) * s_comp.powf(-lambda)
    }

    #[test]
    fn order_validation() {
        for r in [-1.0, 2.0, -1.5, 2.5, f64::NAN] {
            assert!(MeanOrder::new(r).is_err(), "{r}");
        }
        assert_eq!(MeanOrder::new(0.0).unwrap().branch(), Branch::Zero);
        assert_eq!(MeanOrder::new(1.0).unwrap().branch(), Branch::One);
        assert_eq!(MeanOrder::new(-0.3).unwrap().branch(), Branch::Negative);
        assert_eq!(MeanOrder::new(0.3).unwrap().branch(), Branch::Unit);
        assert_eq!(MeanOrder::new(1.3).unwrap().branch(), Branch::Extended);
    }

    #[test]
    fn rule_rejects_endpoints_and_small_n() {
        assert!(quadrature_rule(MeanOrder::new(0.0).unwrap(), 16).is_err());
        assert!(quadrature_rule(MeanOrder::new(1.0).unwrap(), 16).is_err());
        assert!(matches!(
            quadrature_rule(MeanOrder::new(0.5).unwrap(), 3),
            Err(Error::TooFewNodes(3))
        ));
    }

    #[test]
    fn half_order_rule_is_symmetric() {
        for n in [4, 7, 16, 33] {
            let rule = quadrature_rule(MeanOrder::new(0.5).unwrap(), n).unwrap();
            for i in 0..n {
                let j = n - 1 - i;
                assert!((rule.nodes()[i] - (1.0 - rule.nodes()[j])).abs() < 1e-13);
                assert!((rule.weights()[i] - rule.weights()[j]).abs() < 1e-13);
            }
        }
    }

    #[test]
    fn mass_is_one() {
        let rule = quadrature_rule(MeanOrder::new(1.5).unwrap(), 64).unwrap();
        let total: f64 = rule.weights().iter().sum();
        assert!((total - 1.0).abs() <= 1e-12, "{total}");
    }

    #[test]
    fn nodes_inside_and_increasing() {
        for r in [-0.9, -0.5, 0.1, 0.9, 1.1, 1.9] {
            let rule = quadrature_rule(MeanOrder::new(r).unwrap(), 128).unwrap();
            assert!(rule.nodes().iter().all(|&s| s > 0.0 && s < 1.0));
            assert!(rule.nodes().windows(2).all(|w| w[0] < w[1]));
            assert!(rule.weights().iter().all(|&w| w > 0.0));
        }
    }

    #[test]
    fn first_moment_matches_adaptive_integration() {
        let order = MeanOrder::new(-0.5).unwrap();
        let rule = quadrature_rule(order, 64).unwrap();
        let dens = density(order);
        let reference = tanh_sinh(|s, c| s * dens(s, c));
        let gauss = rule.integrate(|s| s);
        assert!((gauss - reference).abs() <= 1e-10, "{gauss} vs {reference}");
        // The closed form of this moment is r + 1.
        assert!((reference - 0.5).abs() < 1e-10);
    }

    #[test]
    fn smooth_integrands_match_adaptive_integration() {
        for r in [-0.75, -0.25, 0.3, 0.7, 1.2, 1.8] {
            let order = MeanOrder::new(r).unwrap();
            let rule = quadrature_rule(order, 48).unwrap();
            let dens = density(order);
            let f = |s: f64| (1.0 + s).recip() + (3.0 * s).cos();
            let reference = tanh_sinh(|s, c| f(s) * dens(s, c));
            assert!((rule.integrate(f) - reference).abs() <= 1e-10, "r = {r}");
        }
    }
}
