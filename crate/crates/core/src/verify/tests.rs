use std::collections::HashSet;

use super::*;
use crate::numerics::ComplexMatrix;

fn quick(trials: usize) -> VerifyConfig {
    VerifyConfig {
        dims: (2, 4),
        trials,
        ..VerifyConfig::default()
    }
}

#[test]
fn catalog_has_unique_ids() {
    let cat = catalog();
    assert_eq!(cat.len(), 35);
    let ids: HashSet<_> = cat.iter().map(|c| c.id).collect();
    assert_eq!(ids.len(), 35);
    assert_eq!(cat.iter().filter(|c| c.kind == PredicateKind::Identity).count(), 6);
}

#[test]
fn sampled_orders_respect_hypotheses() {
    let config = quick(1);
    for check in catalog() {
        for i in 0..40 {
            let seed = trial_seed(9, check.id, i);
            let inst = sample_instance(&check, &config, seed, seed).unwrap();
            match inst.r {
                Some(r) => {
                    assert!(check.hypothesis.admits(r), "{} drew r = {r}", check.id);
                    assert!(check.hypothesis.r.iter().any(|iv| {
                        let (lo, hi) = iv.sampling_range();
                        lo <= r && r <= hi
                    }));
                }
                None => assert!(check.hypothesis.r.is_empty()),
            }
            assert!((2..=4).contains(&inst.n));
        }
    }
}

#[test]
fn suites_cover_the_catalog() {
    let mut seen = HashSet::new();
    for suite in [Suite::R01, Suite::R12, Suite::Rneg] {
        for c in suite.checks() {
            assert_ne!(c.kind, PredicateKind::Identity);
            seen.insert(c.id);
        }
    }
    assert_eq!(seen.len(), 29);
    assert_eq!(Suite::Identities.checks().len(), 6);
    assert_eq!(Suite::All.checks().len(), 35);
    let c25 = find_check("C25").unwrap();
    assert!(c25.in_suite(Suite::R12) && c25.in_suite(Suite::Rneg));
    assert_eq!("rneg".parse::<Suite>().unwrap(), Suite::Rneg);
    assert!("r34".parse::<Suite>().is_err());
}

#[test]
fn trial_seed_keeps_low_byte() {
    for i in [0u64, 1, 7, 255, 256, 1000] {
        assert_eq!(trial_seed(42, "C01", i) & 0xff, i & 0xff);
    }
    assert_ne!(trial_seed(42, "C01", 3), trial_seed(42, "C02", 3));
    assert_ne!(trial_seed(42, "C01", 3), trial_seed(43, "C01", 3));
}

#[test]
fn amgm_chain_on_scalars() {
    let check = find_check("C24").unwrap();
    let inst = Instance {
        seed: 0,
        n: 1,
        r: Some(0.5),
        alpha: 0.0,
        realized_alpha: None,
        a: ComplexMatrix::from_real_diagonal(&[1.0]),
        b: Some(ComplexMatrix::from_real_diagonal(&[4.0])),
        map: None,
        kyfan_fraction: 0.0,
        s_values: Vec::new(),
    };
    let ctx = EvalContext::new(MeanEngine::default(), DEFAULT_NODES);
    let eval = check.evaluate(&inst, &ctx).unwrap();
    let slacks: Vec<f64> = eval.primary.iter().map(|c| c.slack(false)).collect();
    // (2 - 8/5) / 2 and (5/2 - 2) / (5/2)
    assert!((slacks[0] - 0.2).abs() < 1e-12, "{slacks:?}");
    assert!((slacks[1] - 0.2).abs() < 1e-12, "{slacks:?}");
}

#[test]
fn scalar_and_identity_slacks() {
    let c = Comparison::Scalar { lower: 1.0, upper: 3.0 };
    assert_eq!(c.slack(false), 2.0 / 3.0);
    assert_eq!(c.slack(true), -2.0 / 3.0);
    let i = ComplexMatrix::identity(2);
    let id = Comparison::Identity {
        lhs: i.clone(),
        rhs: i.scale_real(1.0 + 1e-6),
    };
    assert!((id.slack(false) + 1e-6 / (1.0 + 1e-6)).abs() < 1e-15);
}

/// Checks whose stated constant is refuted by fuzzing; their proof-consistent variant
/// is reported as the informational statistic instead.
const REFUTED: [&str; 5] = ["C01", "C12", "C13", "C19", "C20"];

#[test]
fn every_check_passes_a_short_run() {
    let config = quick(6);
    for check in catalog() {
        let res = run_check(&check, &config, 11).unwrap();
        assert_eq!(res.sampler_failures, 0, "{res:?}");
        if REFUTED.contains(&check.id) {
            assert_eq!(res.informational.unwrap().violations, 0, "{}", check.id);
        } else {
            assert!(res.passed(), "{res:?}");
            assert!(res.worst_margin.unwrap() >= -config.tol);
        }
    }
}

#[test]
fn stated_constants_fail_past_the_midpoint() {
    let config = VerifyConfig {
        dims: (2, 6),
        ..quick(200)
    };
    for (id, cut) in [("C12", 1.5), ("C19", -0.5)] {
        let check = find_check(id).unwrap();
        let mut violations = 0;
        for i in 0..config.trials as u64 {
            let t = replay(&check, &config, trial_seed(42, id, i));
            if t.violated {
                violations += 1;
                let r = t.r.unwrap();
                assert!(if cut > 0.0 { r > cut } else { r < cut }, "{id} failed at r = {r}");
            }
            assert!(t.informational_margin.unwrap() >= -config.tol, "{id}: {t:?}");
        }
        assert!(violations > 0, "{id}");
    }
}

#[test]
fn worst_seed_replays() {
    let config = quick(12);
    let check = find_check("C12").unwrap();
    let res = run_check(&check, &config, 5).unwrap();
    let replayed = replay(&check, &config, res.worst_seed.unwrap());
    assert_eq!(replayed.margin, res.worst_margin);
}

#[test]
fn run_is_deterministic() {
    let config = quick(8);
    let a = run_suite(Suite::R12, &config, 3).unwrap().without_timing();
    let b = run_suite(Suite::R12, &config, 3).unwrap().without_timing();
    assert_eq!(a, b);
}

#[test]
fn flipped_mutant_is_caught() {
    let check = find_check("C09").unwrap().mutant().unwrap();
    assert!(check.is_mutant());
    let res = run_check(&check, &quick(100), 42).unwrap();
    assert!(res.violations > 0);
    assert!(find_check("I01").unwrap().mutant().is_none());
}

#[test]
fn positive_inputs_pinch_real_part_bounds() {
    let config = VerifyConfig {
        pd_only: true,
        ..quick(20)
    };
    for id in ["C09", "C12", "C28", "C29"] {
        let check = find_check(id).unwrap();
        let res = run_check(&check, &config, 1).unwrap();
        let flipped = run_check(&check.mutant().unwrap(), &config, 1).unwrap();
        assert_eq!(res.violations + flipped.violations, 0, "{id}");
        assert!(res.worst_margin.unwrap().abs() <= 1e-8);
        assert!(flipped.worst_margin.unwrap().abs() <= 1e-8);
    }
}

#[test]
fn order_override_skips_other_branches() {
    let config = VerifyConfig {
        r: Some(1.5),
        ..quick(2)
    };
    let report = run_suite(Suite::All, &config, 0).unwrap();
    let ids: Vec<_> = report.checks.iter().map(|c| c.id.as_str()).collect();
    assert!(ids.contains(&"C09") && ids.contains(&"C01") && ids.contains(&"I01"));
    assert!(!ids.contains(&"C17") && !ids.contains(&"C28"));
}

#[test]
fn invalid_config_is_rejected() {
    for config in [
        VerifyConfig { dims: (1, 3), ..quick(1) },
        VerifyConfig { dims: (5, 3), ..quick(1) },
        VerifyConfig { trials: 0, ..quick(1) },
        VerifyConfig { nodes: 2, ..quick(1) },
        VerifyConfig { alphas: vec![2.0], ..quick(1) },
        VerifyConfig { r: Some(2.5), ..quick(1) },
    ] {
        assert!(run_suite(Suite::R01, &config, 0).is_err());
    }
}

#[test]
fn single_secant_inverse_bound_fails_on_a_scalar() {
    use num_complex::Complex64;
    let alpha = 0.8_f64;
    let check = find_check("C01").unwrap();
    let inst = Instance {
        seed: 0,
        n: 1,
        r: None,
        alpha,
        realized_alpha: Some(alpha),
        a: ComplexMatrix::from_diagonal(&[Complex64::new(1.0, alpha.tan())]),
        b: None,
        map: None,
        kyfan_fraction: 0.0,
        s_values: Vec::new(),
    };
    let ctx = EvalContext::new(MeanEngine::default(), DEFAULT_NODES);
    let eval = check.evaluate(&inst, &ctx).unwrap();
    // Re(1/a) = cos^2, so the sec bound gives cos < 1 and the sec^2 bound is tight.
    let stated = min_slack(&eval.primary, false).unwrap();
    assert!((stated - (alpha.cos() - 1.0)).abs() < 1e-12, "{stated}");
    assert!(min_slack(&eval.informational, false).unwrap().abs() < 1e-12);
}
