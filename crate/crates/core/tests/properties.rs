use num_complex::Complex64;
use proptest::prelude::*;
use sectormeans::cones::{in_sector, sector_angle, Sampler, SectorAngle};
use sectormeans::maps_norms::{numerical_radius, MapLabel, PositiveUnitalMap};
use sectormeans::means::{geometric_mean, principal_power, MeanEngine};
use sectormeans::numerics::{
    lambda_min, loewner_leq, operator_norm, real_part, ComplexMatrix, HermitianMatrix, TolerancePolicy,
};
use sectormeans::quadrature::{quadrature_rule, MeanOrder};

fn order() -> impl Strategy<Value = f64> {
    prop_oneof![-0.95..-0.05f64, 0.05..0.95f64, 1.05..1.95f64]
}

fn engine() -> MeanEngine {
    MeanEngine::default()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn loewner_is_reflexive_and_monotone(seed in any::<u64>(), n in 1usize..6) {
        let mut s = Sampler::new(seed);
        let h = s.hermitian(n);
        let p = HermitianMatrix::hermitian_part(&s.pd(n));
        let tol = TolerancePolicy::default();
        prop_assert!(loewner_leq(&h, &h, tol).unwrap().holds);
        prop_assert!(loewner_leq(&h, &h.add(&p), tol).unwrap().holds);
        prop_assert!(!loewner_leq(&h.add(&p), &h, tol).unwrap().holds);
    }

    #[test]
    fn radius_is_a_unitarily_invariant_seminorm(seed in any::<u64>(), n in 1usize..6, c in -3.0..3.0f64) {
        let mut s = Sampler::new(seed);
        let a = s.complex_gaussian(n);
        let b = s.complex_gaussian(n);
        let u = s.unitary(n);
        let w = numerical_radius(&a);
        let z = Complex64::from_polar(c, 0.7 * c);
        prop_assert!((numerical_radius(&a.scale(z)) - c.abs() * w).abs() <= 1e-9 * (1.0 + w * c.abs()));
        prop_assert!((numerical_radius(&(&(&u.adjoint() * &a) * &u)) - w).abs() <= 1e-9 * (1.0 + w));
        prop_assert!(numerical_radius(&(&a + &b)) <= w + numerical_radius(&b) + 1e-9);
        let norm = operator_norm(&a);
        prop_assert!(0.5 * norm <= w * (1.0 + 1e-9) && w <= norm * (1.0 + 1e-9));
    }

    #[test]
    fn mean_of_a_matrix_with_itself(seed in any::<u64>(), n in 1usize..6, r in order()) {
        let a = Sampler::new(seed).accretive(n);
        let g = geometric_mean(&a, &a, MeanOrder::new(r).unwrap(), engine()).unwrap();
        prop_assert!(g.relative_distance(&a) < 1e-9);
    }

    #[test]
    fn commuting_positive_means_are_entrywise(diag in prop::collection::vec((0.1..10.0f64, 0.1..10.0f64), 1..6), r in order()) {
        let (x, y): (Vec<f64>, Vec<f64>) = diag.iter().copied().unzip();
        let a = ComplexMatrix::from_real_diagonal(&x);
        let b = ComplexMatrix::from_real_diagonal(&y);
        let g = geometric_mean(&a, &b, MeanOrder::new(r).unwrap(), engine()).unwrap();
        let want: Vec<f64> = x.iter().zip(&y).map(|(p, q)| p.powf(1.0 - r) * q.powf(r)).collect();
        prop_assert!(g.relative_distance(&ComplexMatrix::from_real_diagonal(&want)) < 1e-9);
    }

    #[test]
    fn complementary_powers_multiply_back(seed in any::<u64>(), n in 1usize..6, r in 0.05..0.95f64) {
        let a = Sampler::new(seed).accretive(n);
        let p = principal_power(&a, MeanOrder::new(r).unwrap(), engine()).unwrap();
        let q = principal_power(&a, MeanOrder::new(1.0 - r).unwrap(), engine()).unwrap();
        prop_assert!((&p * &q).relative_distance(&a) < 1e-8);
        prop_assert!((&p * &q).relative_distance(&(&q * &p)) < 1e-8);
    }

    #[test]
    fn sector_angle_is_scale_and_unitary_invariant(seed in any::<u64>(), n in 1usize..6, c in 0.01..100.0f64) {
        let mut s = Sampler::new(seed);
        let a = s.accretive(n);
        let u = s.unitary(n);
        let alpha = sector_angle(&a).unwrap().radians();
        prop_assert!((sector_angle(&a.scale_real(c)).unwrap().radians() - alpha).abs() < 1e-9);
        prop_assert!((sector_angle(&(&(&u.adjoint() * &a) * &u)).unwrap().radians() - alpha).abs() < 1e-9);
        let wider = SectorAngle::new((alpha + 1e-6).min(1.5707963)).unwrap();
        prop_assert!(in_sector(&a, wider, TolerancePolicy::default()));
    }

    #[test]
    fn rules_are_probability_measures(r in order(), n in 4usize..200) {
        let rule = quadrature_rule(MeanOrder::new(r).unwrap(), n).unwrap();
        let total: f64 = rule.weights().iter().sum();
        prop_assert!((total - 1.0).abs() <= 1e-12);
        prop_assert!(rule.weights().iter().all(|&w| w > 0.0));
    }

    #[test]
    fn maps_are_unital_and_positive(seed in any::<u64>(), n in 2usize..7, k in 0usize..4) {
        let mut s = Sampler::new(seed);
        let phi = PositiveUnitalMap::random(MapLabel::ALL[k], n, &mut s).unwrap();
        let m = phi.output_dim();
        prop_assert!(phi.apply(&ComplexMatrix::identity(n)).unwrap().relative_distance(&ComplexMatrix::identity(m)) < 1e-12);
        let image = real_part(&phi.apply(&s.pd(n)).unwrap());
        prop_assert!(lambda_min(&image) > 0.0);
        prop_assert!(operator_norm(&image) > 0.0);
    }
}
