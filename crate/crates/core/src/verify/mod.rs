//! Seeded fuzzing of the catalog of inequalities and identities.
//!
//! Each trial derives its own seed from `(master seed, check id, trial index)`, so a
//! [`CheckResult`] does not depend on how rayon schedules trials, and every reported
//! `worst_seed` can be replayed on its own with [`replay`].

mod catalog;

use std::fmt;
use std::str::FromStr;
use std::time::Instant;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::cones::{derive_seed, in_sector, is_accretive, sector_angle, sector_margin, Sampler, SectorAngle};
use crate::error::{Error, Result};
use crate::maps_norms::{MapLabel, PositiveUnitalMap};
use crate::means::MeanEngine;
use crate::numerics::{lambda_min, loewner_leq, ComplexMatrix, HermitianMatrix, TolerancePolicy};
use crate::quadrature::{MeanOrder, DEFAULT_NODES};

pub use catalog::{EvalContext, PredicateKind};

/// Fresh seeds tried after the first when an instance fails validation or evaluation.
pub const MAX_RETRIES: usize = 10;

/// Distance kept from the endpoints of every `r` interval when sampling.
pub const R_MARGIN: f64 = 0.05;

/// Default sector half-angles, in radians.
pub const DEFAULT_ALPHAS: [f64; 4] = [0.1, 0.4, 0.8, 1.2];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MatrixClass {
    Pd,
    Accretive,
    Sectorial,
}

/// An interval of admissible orders as stated by the hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct RInterval {
    pub lo: f64,
    pub hi: f64,
    pub closed: bool,
}

impl RInterval {
    pub const fn open(lo: f64, hi: f64) -> Self {
        Self { lo, hi, closed: false }
    }

    pub const fn closed(lo: f64, hi: f64) -> Self {
        Self { lo, hi, closed: true }
    }

    pub fn contains(&self, r: f64) -> bool {
        if self.closed {
            self.lo <= r && r <= self.hi
        } else {
            self.lo < r && r < self.hi
        }
    }

    /// The interval `r` is drawn from.
    pub fn sampling_range(&self) -> (f64, f64) {
        (self.lo + R_MARGIN, self.hi - R_MARGIN)
    }
}

/// What a check samples.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Hypothesis {
    pub a: MatrixClass,
    pub b: Option<MatrixClass>,
    /// Empty when the statement has no order parameter.
    pub r: &'static [RInterval],
    pub uses_map: bool,
    pub uses_norms: bool,
    /// Number of weights `s in (0, 1)` drawn per instance.
    pub s_samples: usize,
}

impl Hypothesis {
    fn has_sectorial(&self) -> bool {
        self.a == MatrixClass::Sectorial || self.b == Some(MatrixClass::Sectorial)
    }

    pub fn admits(&self, r: f64) -> bool {
        self.r.iter().any(|iv| iv.contains(r))
    }
}

/// One side-by-side comparison produced by a predicate.
#[derive(Debug, Clone)]
pub enum Comparison {
    /// `lower <= upper` in the Loewner order.
    Loewner { lower: HermitianMatrix, upper: HermitianMatrix },
    /// `lower <= upper` for reals.
    Scalar { lower: f64, upper: f64 },
    /// `matrix` lies in the closed sector `S_alpha`.
    Membership { matrix: ComplexMatrix, alpha: SectorAngle },
    /// `lhs = rhs`.
    Identity { lhs: ComplexMatrix, rhs: ComplexMatrix },
}

impl Comparison {
    /// Relative slack; negative means the comparison fails. With `flipped` the
    /// inequality direction is reversed.
    pub fn slack(&self, flipped: bool) -> f64 {
        match self {
            Comparison::Loewner { lower, upper } => {
                let (h, k) = if flipped { (upper, lower) } else { (lower, upper) };
                loewner_leq(h, k, TolerancePolicy::default())
                    .expect("comparisons are built from equal dimensions")
                    .relative_margin()
            }
            Comparison::Scalar { lower, upper } => {
                let scale = 1.0_f64.max(lower.abs()).max(upper.abs());
                let slack = (upper - lower) / scale;
                if flipped {
                    -slack
                } else {
                    slack
                }
            }
            Comparison::Membership { matrix, alpha } => {
                let margin = sector_margin(matrix, *alpha);
                if flipped {
                    -margin
                } else {
                    margin
                }
            }
            Comparison::Identity { lhs, rhs } => -lhs.relative_distance(rhs),
        }
    }
}

/// Comparisons for one instance.
#[derive(Debug, Clone, Default)]
pub struct Evaluation {
    /// Sec/cos factors at the requested angle; these decide pass/fail.
    pub primary: Vec<Comparison>,
    /// The same comparisons at the instance's realized angle.
    pub realized: Vec<Comparison>,
    /// The other reading of the statement, without pass/fail weight: the literal wording
    /// where the checked form follows the proof, or the bound the proof supports where
    /// the stated one fails.
    pub informational: Vec<Comparison>,
}

fn min_slack(comparisons: &[Comparison], flipped: bool) -> Option<f64> {
    comparisons.iter().map(|c| c.slack(flipped)).reduce(f64::min)
}

/// A sampled, validated input.
#[derive(Debug, Clone)]
pub struct Instance {
    pub seed: u64,
    pub n: usize,
    pub r: Option<f64>,
    /// Requested sector angle (`0` when no argument is sectorial).
    pub alpha: f64,
    /// Largest realized angle over the sectorial arguments.
    pub realized_alpha: Option<f64>,
    pub a: ComplexMatrix,
    pub b: Option<ComplexMatrix>,
    pub map: Option<PositiveUnitalMap>,
    pub kyfan_fraction: f64,
    pub s_values: Vec<f64>,
}

/// A catalog entry.
#[derive(Clone, Copy)]
pub struct Check {
    pub id: &'static str,
    pub name: &'static str,
    /// The statement, written out.
    pub anchor: &'static str,
    pub hypothesis: Hypothesis,
    pub kind: PredicateKind,
    flipped: bool,
    eval: catalog::EvalFn,
}

impl fmt::Debug for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Check")
            .field("id", &self.id)
            .field("name", &self.name)
            .field("hypothesis", &self.hypothesis)
            .field("kind", &self.kind)
            .field("flipped", &self.flipped)
            .finish()
    }
}

impl Check {
    /// The same check with its inequality direction reversed; `None` for identities.
    pub fn mutant(&self) -> Option<Check> {
        (self.kind != PredicateKind::Identity).then_some(Check {
            flipped: !self.flipped,
            ..*self
        })
    }

    pub fn is_mutant(&self) -> bool {
        self.flipped
    }

    pub fn evaluate(&self, instance: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
        (self.eval)(instance, ctx)
    }

    pub fn in_suite(&self, suite: Suite) -> bool {
        let identity = self.kind == PredicateKind::Identity;
        let within = |lo: f64, hi: f64| self.hypothesis.r.iter().any(|iv| iv.lo >= lo && iv.hi <= hi);
        match suite {
            Suite::All => true,
            Suite::Identities => identity,
            _ if identity => false,
            Suite::R01 => self.hypothesis.r.is_empty() || within(0.0, 1.0),
            Suite::R12 => within(1.0, 2.0),
            Suite::Rneg => within(-1.0, 0.0),
        }
    }
}

/// The full catalog, in id order.
pub fn catalog() -> Vec<Check> {
    catalog::ENTRIES
        .iter()
        .map(|e| {
            for iv in e.hypothesis.r {
                let (lo, hi) = iv.sampling_range();
                assert!(lo < hi && iv.contains(lo) && iv.contains(hi), "{}: bad r interval", e.id);
                assert!(MeanOrder::new(lo).is_ok() && MeanOrder::new(hi).is_ok(), "{}: inadmissible r", e.id);
            }
            Check {
                id: e.id,
                name: e.name,
                anchor: e.anchor,
                hypothesis: e.hypothesis,
                kind: e.kind,
                flipped: false,
                eval: e.eval,
            }
        })
        .collect()
}

pub fn find_check(id: &str) -> Option<Check> {
    catalog().into_iter().find(|c| c.id.eq_ignore_ascii_case(id))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    All,
    R12,
    Rneg,
    R01,
    Identities,
}

impl Suite {
    pub const ALL: [Suite; 5] = [Suite::All, Suite::R12, Suite::Rneg, Suite::R01, Suite::Identities];

    pub fn name(self) -> &'static str {
        match self {
            Suite::All => "all",
            Suite::R12 => "r12",
            Suite::Rneg => "rneg",
            Suite::R01 => "r01",
            Suite::Identities => "identities",
        }
    }

    pub fn checks(self) -> Vec<Check> {
        catalog().into_iter().filter(|c| c.in_suite(self)).collect()
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::InvalidArgument(format!("unknown suite {s:?}")))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EngineChoice {
    Quad,
    Eigen,
}

/// Settings of a verification run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerifyConfig {
    /// Inclusive dimension range.
    pub dims: (usize, usize),
    pub trials: usize,
    /// Relative tolerance on every slack.
    pub tol: f64,
    pub nodes: usize,
    pub engine: EngineChoice,
    pub alphas: Vec<f64>,
    /// Replace every matrix class by positive definite and every angle by zero.
    pub pd_only: bool,
    /// Fixed order; checks whose hypothesis excludes it are skipped.
    pub r: Option<f64>,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        Self {
            dims: (2, 8),
            trials: 500,
            tol: 1e-8,
            nodes: DEFAULT_NODES,
            engine: EngineChoice::Quad,
            alphas: DEFAULT_ALPHAS.to_vec(),
            pd_only: false,
            r: None,
        }
    }
}

impl VerifyConfig {
    pub fn validate(&self) -> Result<()> {
        let (lo, hi) = self.dims;
        if lo < 2 || lo > hi || hi > 64 {
            return Err(Error::InvalidArgument(format!(
                "dimension range {lo}..{hi} must satisfy 2 <= lo <= hi <= 64"
            )));
        }
        if self.trials == 0 {
            return Err(Error::InvalidArgument("trials must be at least 1".into()));
        }
        if !(self.tol.is_finite() && self.tol > 0.0) {
            return Err(Error::InvalidArgument(format!("tolerance {} must be positive", self.tol)));
        }
        if self.nodes < 4 {
            return Err(Error::TooFewNodes(self.nodes));
        }
        if self.alphas.is_empty() {
            return Err(Error::InvalidArgument("at least one sector angle is required".into()));
        }
        for &alpha in &self.alphas {
            SectorAngle::new(alpha)?;
        }
        if let Some(r) = self.r {
            MeanOrder::new(r)?;
        }
        Ok(())
    }

    fn engine_with(&self, nodes: usize) -> MeanEngine {
        match self.engine {
            EngineChoice::Quad => MeanEngine::Quadrature { nodes },
            EngineChoice::Eigen => MeanEngine::Eigen,
        }
    }

    /// Whether `check` runs under this configuration.
    pub fn admits(&self, check: &Check) -> bool {
        match self.r {
            Some(r) => check.hypothesis.r.is_empty() || check.hypothesis.admits(r),
            None => true,
        }
    }
}

/// Seed of trial `index`. Its low byte equals the low byte of `index`, which fixes the
/// map kind and sector angle round-robin while keeping the seed self-contained.
pub fn trial_seed(master: u64, id: &str, index: u64) -> u64 {
    (derive_seed(master, id, index) & !0xff) | (index & 0xff)
}

fn realized_angle_of(class: MatrixClass, m: &ComplexMatrix) -> Option<f64> {
    (class == MatrixClass::Sectorial).then(|| sector_angle(m).map(|a| a.radians()).unwrap_or(f64::NAN))
}

fn sample_matrix(class: MatrixClass, n: usize, alpha: f64, sampler: &mut Sampler) -> Result<ComplexMatrix> {
    Ok(match class {
        MatrixClass::Pd => sampler.pd(n),
        MatrixClass::Accretive => sampler.accretive(n),
        MatrixClass::Sectorial if alpha == 0.0 => sampler.pd(n),
        MatrixClass::Sectorial => sampler.sectorial(n, SectorAngle::new(alpha)?)?.matrix,
    })
}

/// Re-validates a sampled matrix against its class.
fn validate(class: MatrixClass, m: &ComplexMatrix, alpha: f64) -> Result<()> {
    let tol = TolerancePolicy::default();
    let (accretive, margin) = is_accretive(m, tol);
    if !accretive {
        return Err(Error::NotAccretive { margin });
    }
    match class {
        MatrixClass::Pd => {
            let h = HermitianMatrix::new(m.clone())?;
            let min_eigenvalue = lambda_min(&h);
            if !(min_eigenvalue > 0.0) {
                return Err(Error::NotPositiveDefinite { min_eigenvalue });
            }
        }
        MatrixClass::Accretive => {}
        MatrixClass::Sectorial => {
            if !in_sector(m, SectorAngle::new(alpha)?, tol) {
                return Err(Error::InvalidArgument(format!("sample left the sector of angle {alpha}")));
            }
        }
    }
    Ok(())
}

fn sample_instance(check: &Check, config: &VerifyConfig, seed: u64, attempt_seed: u64) -> Result<Instance> {
    let hyp = &check.hypothesis;
    let slot = (seed & 0xff) as usize;
    let label = MapLabel::ALL[slot % MapLabel::ALL.len()];
    let sectorial = hyp.has_sectorial() && !config.pd_only;
    let alpha = if sectorial {
        config.alphas[(slot / MapLabel::ALL.len()) % config.alphas.len()]
    } else {
        0.0
    };
    let class = |c: MatrixClass| if config.pd_only { MatrixClass::Pd } else { c };

    let mut sampler = Sampler::new(attempt_seed);
    let n = sampler.range_inclusive(config.dims.0, config.dims.1);
    let r = if hyp.r.is_empty() {
        None
    } else if let Some(r) = config.r {
        Some(r)
    } else {
        let iv = hyp.r[sampler.index(hyp.r.len())];
        let (lo, hi) = iv.sampling_range();
        Some(sampler.uniform(lo, hi))
    };
    let a_class = class(hyp.a);
    let a = sample_matrix(a_class, n, alpha, &mut sampler)?;
    validate(a_class, &a, alpha)?;
    let b = match hyp.b.map(class) {
        Some(b_class) => {
            let b = sample_matrix(b_class, n, alpha, &mut sampler)?;
            validate(b_class, &b, alpha)?;
            Some(b)
        }
        None => None,
    };
    let map = if hyp.uses_map {
        Some(PositiveUnitalMap::random(label, n, &mut sampler)?)
    } else {
        None
    };
    let kyfan_fraction = sampler.uniform(0.0, 1.0);
    let s_values = (0..hyp.s_samples).map(|_| sampler.uniform(R_MARGIN, 1.0 - R_MARGIN)).collect();

    let realized_alpha = if sectorial {
        let mut angles = vec![realized_angle_of(class(hyp.a), &a)];
        if let (Some(c), Some(m)) = (hyp.b, &b) {
            angles.push(realized_angle_of(class(c), m));
        }
        angles.into_iter().flatten().reduce(f64::max)
    } else {
        None
    };
    Ok(Instance {
        seed,
        n,
        r,
        alpha,
        realized_alpha: realized_alpha.filter(|a| a.is_finite()),
        a,
        b,
        map,
        kyfan_fraction,
        s_values,
    })
}

/// Outcome of one trial.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TrialReport {
    pub check: String,
    pub seed: u64,
    /// Extra seeds consumed before an instance validated and evaluated.
    pub retries: usize,
    pub n: Option<usize>,
    pub r: Option<f64>,
    pub alpha: Option<f64>,
    pub realized_alpha: Option<f64>,
    pub map: Option<String>,
    /// Smallest relative slack of the primary comparisons.
    pub margin: Option<f64>,
    pub violated: bool,
    /// A violation at the configured node count disappeared at twice as many nodes.
    pub discretization_resolved: bool,
    pub realized_margin: Option<f64>,
    pub informational_margin: Option<f64>,
    pub inner_nonaccretive: bool,
    /// Last error when every retry failed.
    pub error: Option<String>,
}

fn evaluate_once(check: &Check, instance: &Instance, config: &VerifyConfig, nodes: usize) -> Result<(Evaluation, bool)> {
    let ctx = EvalContext::new(config.engine_with(nodes), nodes);
    let eval = check.evaluate(instance, &ctx)?;
    if eval.primary.iter().any(|c| !slack_is_finite(c, check.flipped)) {
        return Err(Error::NoConvergence);
    }
    Ok((eval, ctx.inner_nonaccretive.get()))
}

fn slack_is_finite(c: &Comparison, flipped: bool) -> bool {
    c.slack(flipped).is_finite()
}

/// Runs the trial with the given seed; a pure function of `(check, config, seed)`.
pub fn replay(check: &Check, config: &VerifyConfig, seed: u64) -> TrialReport {
    let mut report = TrialReport {
        check: check.id.to_string(),
        seed,
        retries: 0,
        n: None,
        r: None,
        alpha: None,
        realized_alpha: None,
        map: None,
        margin: None,
        violated: false,
        discretization_resolved: false,
        realized_margin: None,
        informational_margin: None,
        inner_nonaccretive: false,
        error: None,
    };
    for attempt in 0..=MAX_RETRIES {
        let attempt_seed = if attempt == 0 {
            seed
        } else {
            derive_seed(seed, "retry", attempt as u64)
        };
        report.retries = attempt;
        let outcome = sample_instance(check, config, seed, attempt_seed).and_then(|inst| {
            let first = evaluate_once(check, &inst, config, config.nodes)?;
            Ok((inst, first))
        });
        let (inst, (mut eval, mut nonaccretive)) = match outcome {
            Ok(v) => v,
            Err(e) => {
                report.error = Some(e.to_string());
                continue;
            }
        };
        let tol = config.tol;
        let mut margin = min_slack(&eval.primary, check.flipped).unwrap_or(f64::INFINITY);
        if margin < -tol {
            // Separate genuine failures from discretization error.
            if let Ok((fine, fine_flag)) = evaluate_once(check, &inst, config, 2 * config.nodes) {
                let fine_margin = min_slack(&fine.primary, check.flipped).unwrap_or(f64::INFINITY);
                if fine_margin >= -tol {
                    report.discretization_resolved = true;
                    margin = fine_margin;
                    eval = fine;
                    nonaccretive = fine_flag;
                }
            }
        }
        report.error = None;
        report.n = Some(inst.n);
        report.r = inst.r;
        report.alpha = Some(inst.alpha);
        report.realized_alpha = inst.realized_alpha;
        report.map = inst.map.as_ref().map(|m| m.label().to_string());
        report.margin = Some(margin);
        report.violated = margin < -tol;
        report.realized_margin = min_slack(&eval.realized, check.flipped);
        report.informational_margin = min_slack(&eval.informational, check.flipped);
        report.inner_nonaccretive = nonaccretive;
        return report;
    }
    report
}

/// Violation count and worst case of a secondary statistic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SecondaryStat {
    pub violations: usize,
    pub worst_margin: Option<f64>,
    pub worst_seed: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckResult {
    pub id: String,
    pub name: String,
    pub paper_anchor: String,
    pub trials: usize,
    pub violations: usize,
    /// Most negative relative slack; reported even when positive.
    pub worst_margin: Option<f64>,
    pub worst_seed: Option<u64>,
    /// Trials for which no valid instance could be evaluated within the retry budget.
    pub sampler_failures: usize,
    /// Instances rejected and resampled across all trials.
    pub resampled: usize,
    pub discretization_resolved: usize,
    /// Trials in which `A^{-1/2} B A^{-1/2}` left the accretive cone.
    pub inner_nonaccretive: usize,
    /// The primary comparisons with sec/cos factors at the realized angle.
    pub realized_angle: Option<SecondaryStat>,
    /// Slack of [`Evaluation::informational`], without pass/fail weight.
    pub informational: Option<SecondaryStat>,
    pub mutated: bool,
    pub runtime_ms: f64,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.violations == 0 && self.sampler_failures == 0
    }
}

fn secondary(reports: &[TrialReport], tol: f64, pick: impl Fn(&TrialReport) -> Option<f64>) -> Option<SecondaryStat> {
    let mut stat: Option<SecondaryStat> = None;
    for t in reports {
        let Some(m) = pick(t) else { continue };
        let s = stat.get_or_insert(SecondaryStat {
            violations: 0,
            worst_margin: None,
            worst_seed: None,
        });
        if m < -tol {
            s.violations += 1;
        }
        if s.worst_margin.map_or(true, |w| m < w) {
            s.worst_margin = Some(m);
            s.worst_seed = Some(t.seed);
        }
    }
    stat
}

/// Runs `config.trials` seeded trials of `check`.
pub fn run_check(check: &Check, config: &VerifyConfig, master_seed: u64) -> Result<CheckResult> {
    config.validate()?;
    let start = Instant::now();
    let reports: Vec<TrialReport> = (0..config.trials as u64)
        .into_par_iter()
        .map(|i| replay(check, config, trial_seed(master_seed, check.id, i)))
        .collect();

    // Sequential reduction in trial order: ties keep the lowest index.
    let mut result = CheckResult {
        id: check.id.to_string(),
        name: check.name.to_string(),
        paper_anchor: check.anchor.to_string(),
        trials: config.trials,
        violations: 0,
        worst_margin: None,
        worst_seed: None,
        sampler_failures: 0,
        resampled: 0,
        discretization_resolved: 0,
        inner_nonaccretive: 0,
        realized_angle: secondary(&reports, config.tol, |t| t.realized_margin),
        informational: secondary(&reports, config.tol, |t| t.informational_margin),
        mutated: check.flipped,
        runtime_ms: 0.0,
    };
    for t in &reports {
        result.resampled += t.retries;
        let Some(m) = t.margin else {
            result.sampler_failures += 1;
            continue;
        };
        result.violations += usize::from(t.violated);
        result.discretization_resolved += usize::from(t.discretization_resolved);
        result.inner_nonaccretive += usize::from(t.inner_nonaccretive);
        if result.worst_margin.map_or(true, |w| m < w) {
            result.worst_margin = Some(m);
            result.worst_seed = Some(t.seed);
        }
    }
    result.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(result)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub checks: usize,
    pub trials: usize,
    pub violations: usize,
    pub sampler_failures: usize,
    pub failed: Vec<String>,
    pub passed: bool,
    pub runtime_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub seed: u64,
    pub config: VerifyConfig,
    pub checks: Vec<CheckResult>,
    pub summary: Summary,
}

impl SuiteReport {
    /// Zeroes every timing field, leaving a pure function of the inputs.
    pub fn without_timing(mut self) -> Self {
        self.summary.runtime_ms = 0.0;
        for c in &mut self.checks {
            c.runtime_ms = 0.0;
        }
        self
    }
}

/// Runs `checks` under `config` and aggregates the results.
pub fn run_checks(suite: &str, checks: &[Check], config: &VerifyConfig, master_seed: u64) -> Result<SuiteReport> {
    config.validate()?;
    let start = Instant::now();
    let mut results = Vec::new();
    for check in checks.iter().filter(|c| config.admits(c)) {
        results.push(run_check(check, config, master_seed)?);
    }
    let summary = Summary {
        checks: results.len(),
        trials: results.iter().map(|c| c.trials).sum(),
        violations: results.iter().map(|c| c.violations).sum(),
        sampler_failures: results.iter().map(|c| c.sampler_failures).sum(),
        failed: results.iter().filter(|c| !c.passed()).map(|c| c.id.clone()).collect(),
        passed: results.iter().all(CheckResult::passed),
        runtime_ms: start.elapsed().as_secs_f64() * 1e3,
    };
    Ok(SuiteReport {
        suite: suite.to_string(),
        seed: master_seed,
        config: config.clone(),
        checks: results,
        summary,
    })
}

pub fn run_suite(suite: Suite, config: &VerifyConfig, master_seed: u64) -> Result<SuiteReport> {
    run_checks(suite.name(), &suite.checks(), config, master_seed)
}

#[cfg(test)]
mod tests;
