//! The inequality and identity catalog.

use std::cell::Cell;

use crate::cones::SectorAngle;
use crate::error::{Error, Result};
use crate::maps_norms::{numerical_radius, ui_norm, NormKind, PositiveUnitalMap};
use crate::means::{
    arithmetic_mean, extended_resolvent_identity, geometric_mean, geometric_mean_detailed, geometric_mean_integral,
    harmonic_mean, inverse_mean_identity, negation_identity, negative_resolvent_identity, principal_power,
    principal_power_eigen, principal_power_quad, reflection_identity, MeanEngine,
};
use crate::numerics::{inverse, real_part, ComplexMatrix, HermitianMatrix};
use crate::quadrature::{quadrature_rule, MeanOrder};

use super::{Comparison, Evaluation, Hypothesis, Instance, MatrixClass, RInterval};

/// Numerical settings shared by every predicate of one trial.
pub struct EvalContext {
    pub engine: MeanEngine,
    /// Node count for checks that always use quadrature (integral forms).
    pub nodes: usize,
    pub(super) inner_nonaccretive: Cell<bool>,
}

impl EvalContext {
    pub fn new(engine: MeanEngine, nodes: usize) -> Self {
        Self {
            engine,
            nodes,
            inner_nonaccretive: Cell::new(false),
        }
    }

    fn gm(&self, a: &ComplexMatrix, b: &ComplexMatrix, r: f64) -> Result<ComplexMatrix> {
        let g = geometric_mean_detailed(a, b, MeanOrder::new(r)?, self.engine)?;
        if !g.inner_accretive {
            self.inner_nonaccretive.set(true);
        }
        Ok(g.value)
    }

    fn gm_h(&self, a: &HermitianMatrix, b: &HermitianMatrix, r: f64) -> Result<HermitianMatrix> {
        Ok(herm(&self.gm(a.as_complex(), b.as_complex(), r)?))
    }

    fn power(&self, a: &ComplexMatrix, r: f64) -> Result<ComplexMatrix> {
        principal_power(a, MeanOrder::new(r)?, self.engine)
    }
}

pub(super) type EvalFn = fn(&Instance, &EvalContext) -> Result<Evaluation>;

/// The kind of comparison a check's predicate makes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PredicateKind {
    Loewner,
    Scalar,
    Membership,
    Identity,
}

fn herm(m: &ComplexMatrix) -> HermitianMatrix {
    HermitianMatrix::hermitian_part(m)
}

fn re(m: &ComplexMatrix) -> HermitianMatrix {
    real_part(m)
}

fn le(lower: HermitianMatrix, upper: HermitianMatrix) -> Comparison {
    Comparison::Loewner { lower, upper }
}

fn sle(lower: f64, upper: f64) -> Comparison {
    Comparison::Scalar { lower, upper }
}

fn same(lhs: ComplexMatrix, rhs: ComplexMatrix) -> Comparison {
    Comparison::Identity { lhs, rhs }
}

fn order(inst: &Instance) -> Result<f64> {
    inst.r.ok_or_else(|| Error::InvalidArgument("check needs an order r".into()))
}

fn second(inst: &Instance) -> Result<&ComplexMatrix> {
    inst.b.as_ref().ok_or_else(|| Error::InvalidArgument("check needs a second matrix".into()))
}

fn map(inst: &Instance) -> Result<&PositiveUnitalMap> {
    inst.map.as_ref().ok_or_else(|| Error::InvalidArgument("check needs a positive unital map".into()))
}

/// All four norm kinds; the Ky Fan order is drawn per instance.
fn norms(inst: &Instance, dim: usize) -> [NormKind; 4] {
    let k = (1 + (inst.kyfan_fraction * dim as f64) as usize).min(dim);
    [NormKind::Operator, NormKind::Frobenius, NormKind::Trace, NormKind::KyFan(k)]
}

/// Builds the angle-dependent comparisons at the requested angle and, when the instance
/// has sectorial inputs, at the realized angle.
fn angled(inst: &Instance, f: impl Fn(SectorAngle) -> Vec<Comparison>) -> Result<Evaluation> {
    let primary = f(SectorAngle::new(inst.alpha)?);
    let realized = match inst.realized_alpha {
        Some(alpha) => f(SectorAngle::new(alpha)?),
        None => Vec::new(),
    };
    Ok(Evaluation {
        primary,
        realized,
        informational: Vec::new(),
    })
}

fn plain(primary: Vec<Comparison>) -> Result<Evaluation> {
    Ok(Evaluation {
        primary,
        realized: Vec::new(),
        informational: Vec::new(),
    })
}

fn c01(inst: &Instance, _: &EvalContext) -> Result<Evaluation> {
    let a = &inst.a;
    let ra_inv = herm(&inverse(re(a).as_complex())?);
    let re_a_inv = re(&inverse(a)?);
    let mut eval = angled(inst, |al| {
        vec![le(re_a_inv.clone(), ra_inv.clone()), le(ra_inv.clone(), re_a_inv.scale(al.sec()))]
    })?;
    // The single secant already fails for 1 + i tan(alpha); sec^2 is the bound the
    // later proofs actually use.
    let sec = SectorAngle::new(inst.alpha)?.sec();
    eval.informational = vec![le(re_a_inv.clone(), ra_inv.clone()), le(ra_inv.clone(), re_a_inv.scale(sec * sec))];
    Ok(eval)
}

fn c02(inst: &Instance, _: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lower = herm(&harmonic_mean(re(a).as_complex(), re(b).as_complex(), r)?);
    plain(vec![le(lower, re(&harmonic_mean(a, b, r)?))])
}

fn c03(inst: &Instance, _: &EvalContext) -> Result<Evaluation> {
    let a = &inst.a;
    let ra = re(a);
    let mut pairs = Vec::new();
    for kind in norms(inst, a.dim()) {
        pairs.push((ui_norm(a, kind)?, ui_norm(ra.as_complex(), kind)?));
    }
    angled(inst, |al| {
        pairs
            .iter()
            .flat_map(|&(na, nra)| [sle(al.cos() * na, nra), sle(nra, na)])
            .collect()
    })
}

fn c04(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let w_mean = numerical_radius(&ctx.gm(a, b, r)?);
    let bound = numerical_radius(a).powf(1.0 - r) * numerical_radius(b).powf(r);
    angled(inst, |al| vec![sle(w_mean, al.sec().powi(3) * bound)])
}

fn c05(inst: &Instance, _: &EvalContext) -> Result<Evaluation> {
    let a = &inst.a;
    let w_a = numerical_radius(a);
    let w_inv = numerical_radius(&inverse(a)?);
    angled(inst, |al| vec![sle(al.cos().powi(3) / w_a, w_inv)])
}

fn c06(inst: &Instance, _: &EvalContext) -> Result<Evaluation> {
    let (a, b, phi) = (&inst.a, second(inst)?, map(inst)?);
    let (pa, pb) = (phi.apply(a)?, phi.apply(b)?);
    let lower = herm(&(&(&pb * &inverse(&pa)?) * &pb));
    let upper = herm(&phi.apply(&(&(b * &inverse(a)?) * b))?);
    plain(vec![le(lower, upper)])
}

fn c07(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, r) = (&inst.a, order(inst)?);
    let upper = herm(&ctx.power(re(a).as_complex(), r)?);
    plain(vec![le(re(&ctx.power(a, r)?), upper)])
}

fn c08(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, r) = (&inst.a, order(inst)?);
    let lower = herm(&ctx.power(re(a).as_complex(), r)?);
    plain(vec![le(lower, re(&ctx.power(a, r)?))])
}

/// `Re(A #_r B) <= Re A #_r Re B`.
fn real_upper(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let upper = ctx.gm_h(&re(a), &re(b), r)?;
    plain(vec![le(re(&ctx.gm(a, b, r)?), upper)])
}

fn c10(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r, phi) = (&inst.a, second(inst)?, order(inst)?, map(inst)?);
    let lower = herm(&ctx.gm(&phi.apply(a)?, &phi.apply(b)?, r)?);
    let upper = herm(&phi.apply(&ctx.gm(a, b, r)?)?);
    plain(vec![le(lower, upper)])
}

/// `A #_r B` stays in the sector.
fn closure(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let g = ctx.gm(a, b, r)?;
    angled(inst, |alpha| vec![Comparison::Membership { matrix: g.clone(), alpha }])
}

/// Factor the real-part lower bounds carry once `Re(X^-1) >= cos^2(alpha) (Re X)^-1` is
/// pushed through `#_{2-r}` (first slot) or `#_{-r}` (second slot): `cos^{2(r-1)}` on
/// `(1, 2)` and `cos^{-2r}` on `(-1, 0)`. Smaller than `cos(alpha)` past `r = 3/2` and
/// `r = -1/2` respectively.
fn mean_factor(inst: &Instance, r: f64) -> Result<f64> {
    let c = SectorAngle::new(inst.alpha)?.cos();
    Ok(if r > 1.0 { c.powf(2.0 * (r - 1.0)) } else { c.powf(-2.0 * r) })
}

/// `cos(alpha) (Re A #_r Re B) <= Re(A #_r B)`.
fn real_lower(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lower = ctx.gm_h(&re(a), &re(b), r)?;
    let upper = re(&ctx.gm(a, b, r)?);
    let mut eval = angled(inst, |al| vec![le(lower.scale(al.cos()), upper.clone())])?;
    eval.informational = vec![le(lower.scale(mean_factor(inst, r)?), upper)];
    Ok(eval)
}

/// `cos(alpha) Re((1 - r) A + r B) <= Re(A #_r B)`.
fn nabla_lower(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lower = re(&arithmetic_mean(a, b, r));
    let upper = re(&ctx.gm(a, b, r)?);
    let mut eval = angled(inst, |al| vec![le(lower.scale(al.cos()), upper.clone())])?;
    eval.informational = vec![le(lower.scale(mean_factor(inst, r)?), upper)];
    Ok(eval)
}

/// `cos(alpha) Re(Phi(A) #_r Phi(B)) <= Re Phi(A #_r B)`.
fn map_real_lower(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r, phi) = (&inst.a, second(inst)?, order(inst)?, map(inst)?);
    let lower = re(&ctx.gm(&phi.apply(a)?, &phi.apply(b)?, r)?);
    let upper = re(&phi.apply(&ctx.gm(a, b, r)?)?);
    let mut eval = angled(inst, |al| vec![le(lower.scale(al.cos()), upper.clone())])?;
    eval.informational = vec![le(lower.scale(mean_factor(inst, r)?), upper)];
    Ok(eval)
}

/// `cos^2(alpha) |||Phi(A) #_r Phi(B)||| <= |||Phi(A #_r B)|||`.
fn map_norm_lower(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r, phi) = (&inst.a, second(inst)?, order(inst)?, map(inst)?);
    let inner = ctx.gm(&phi.apply(a)?, &phi.apply(b)?, r)?;
    let outer = phi.apply(&ctx.gm(a, b, r)?)?;
    let mut pairs = Vec::new();
    for kind in norms(inst, phi.output_dim()) {
        pairs.push((ui_norm(&inner, kind)?, ui_norm(&outer, kind)?));
    }
    let mut eval = angled(inst, |al| {
        let c2 = al.cos().powi(2);
        pairs.iter().map(|&(lo, hi)| sle(c2 * lo, hi)).collect()
    })?;
    let factor = SectorAngle::new(inst.alpha)?.cos() * mean_factor(inst, r)?;
    eval.informational = pairs.iter().map(|&(lo, hi)| sle(factor * lo, hi)).collect();
    Ok(eval)
}

fn c16(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let b_inv = inverse(b)?;
    let w_b_inv2 = numerical_radius(&(&b_inv * &b_inv));
    let base = numerical_radius(a).powf(1.0 - r) * numerical_radius(b).powf(r - 2.0) / w_b_inv2;
    let w_mean = numerical_radius(&ctx.gm(a, b, r)?);
    // A #_{-r} B = A (A^{-1} #_r B^{-1}) A, which keeps the order admissible.
    let reflected = &(a * &ctx.gm(&inverse(a)?, &b_inv, r)?) * a;
    let w_reflected = numerical_radius(&reflected);
    let mut eval = angled(inst, |al| vec![sle(al.cos().powi(6) * base, w_mean)])?;
    eval.informational = vec![sle(SectorAngle::new(inst.alpha)?.cos().powi(6) * base, w_reflected)];
    Ok(eval)
}

fn c23(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let a_inv = inverse(a)?;
    let w_a_inv2 = numerical_radius(&(&a_inv * &a_inv));
    let base = numerical_radius(a).powf(-(r + 1.0)) * numerical_radius(b).powf(r) / w_a_inv2;
    let w_mean = numerical_radius(&ctx.gm(a, b, r)?);
    let w_reflected = numerical_radius(&ctx.gm(a, b, -r)?);
    let mut eval = angled(inst, |al| vec![sle(al.cos().powi(6) * base, w_mean)])?;
    eval.informational = vec![sle(SectorAngle::new(inst.alpha)?.cos().powi(6) * base, w_reflected)];
    Ok(eval)
}

fn c24(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let g = herm(&ctx.gm(a, b, r)?);
    let h = herm(&harmonic_mean(a, b, r)?);
    let m = herm(&arithmetic_mean(a, b, r));
    plain(vec![le(h, g.clone()), le(g, m)])
}

fn c25(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    plain(vec![le(herm(&arithmetic_mean(a, b, r)), herm(&ctx.gm(a, b, r)?))])
}

fn c26(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r, phi) = (&inst.a, second(inst)?, order(inst)?, map(inst)?);
    let lower = herm(&phi.apply(&ctx.gm(a, b, r)?)?);
    let upper = herm(&ctx.gm(&phi.apply(a)?, &phi.apply(b)?, r)?);
    plain(vec![le(lower, upper)])
}

fn c28(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lower = ctx.gm_h(&re(a), &re(b), r)?;
    plain(vec![le(lower, re(&ctx.gm(a, b, r)?))])
}

fn c29(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lower = re(&ctx.gm(a, b, r)?);
    let upper = ctx.gm_h(&re(a), &re(b), r)?;
    angled(inst, |al| vec![le(lower.clone(), upper.scale(al.sec().powi(2)))])
}

fn i01(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lhs = reflection_identity(a, b, MeanOrder::new(r)?, ctx.engine)?;
    plain(vec![same(lhs, ctx.gm(a, b, r)?)])
}

fn i02(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let lhs = negation_identity(a, b, MeanOrder::new(r)?, ctx.engine)?;
    plain(vec![same(lhs, ctx.gm(a, b, r)?)])
}

fn i03(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let (lhs, rhs) = inverse_mean_identity(a, b, MeanOrder::new(r)?, ctx.engine)?;
    plain(vec![same(lhs, rhs)])
}

fn i04(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, b, r) = (&inst.a, second(inst)?, order(inst)?);
    let order = MeanOrder::new(r)?;
    let integral = geometric_mean_integral(a, b, &quadrature_rule(order, ctx.nodes)?)?;
    plain(vec![same(integral, geometric_mean(a, b, order, MeanEngine::Eigen)?)])
}

fn i05(inst: &Instance, ctx: &EvalContext) -> Result<Evaluation> {
    let (a, r) = (&inst.a, order(inst)?);
    let quad = principal_power_quad(a, &quadrature_rule(MeanOrder::new(r)?, ctx.nodes)?)?;
    plain(vec![same(quad, principal_power_eigen(a, r)?)])
}

fn i06(inst: &Instance, _: &EvalContext) -> Result<Evaluation> {
    let mut primary = Vec::new();
    for &s in &inst.s_values {
        let (lhs, rhs) = extended_resolvent_identity(&inst.a, s)?;
        primary.push(same(lhs, rhs));
        let (lhs, rhs) = negative_resolvent_identity(&inst.a, s)?;
        primary.push(same(lhs, rhs));
    }
    plain(primary)
}

const UNIT: &[RInterval] = &[RInterval::open(0.0, 1.0)];
const UNIT_CLOSED: &[RInterval] = &[RInterval::closed(0.0, 1.0)];
const EXTENDED: &[RInterval] = &[RInterval::open(1.0, 2.0)];
const NEGATIVE: &[RInterval] = &[RInterval::open(-1.0, 0.0)];
const OUTER: &[RInterval] = &[RInterval::open(1.0, 2.0), RInterval::open(-1.0, 0.0)];
const ALL_BRANCHES: &[RInterval] = &[
    RInterval::open(-1.0, 0.0),
    RInterval::open(0.0, 1.0),
    RInterval::open(1.0, 2.0),
];

const fn hyp(a: MatrixClass, b: Option<MatrixClass>, r: &'static [RInterval]) -> Hypothesis {
    Hypothesis {
        a,
        b,
        r,
        uses_map: false,
        uses_norms: false,
        s_samples: 0,
    }
}

const fn with_map(h: Hypothesis) -> Hypothesis {
    Hypothesis { uses_map: true, ..h }
}

const fn with_norms(h: Hypothesis) -> Hypothesis {
    Hypothesis { uses_norms: true, ..h }
}

use MatrixClass::{Accretive as Acc, Pd, Sectorial as Sec};
use PredicateKind::{Identity, Loewner, Membership, Scalar};

pub(super) struct Entry {
    pub id: &'static str,
    pub name: &'static str,
    pub anchor: &'static str,
    pub hypothesis: Hypothesis,
    pub kind: PredicateKind,
    pub eval: EvalFn,
}

const fn entry(
    id: &'static str,
    name: &'static str,
    anchor: &'static str,
    hypothesis: Hypothesis,
    kind: PredicateKind,
    eval: EvalFn,
) -> Entry {
    Entry {
        id,
        name,
        anchor,
        hypothesis,
        kind,
        eval,
    }
}

pub(super) const ENTRIES: &[Entry] = &[
    entry("C01", "inv-real-sandwich", "Re(A^-1) <= (Re A)^-1 <= sec(a) Re(A^-1)", hyp(Sec, None, &[]), Loewner, c01),
    entry("C02", "harmonic-real-lower", "Re(A !_r B) >= Re A !_r Re B", hyp(Acc, Some(Acc), UNIT), Loewner, c02),
    entry("C03", "norm-sandwich", "cos(a) |||A||| <= |||Re A||| <= |||A|||", with_norms(hyp(Sec, None, &[])), Scalar, c03),
    entry("C04", "radius-geo-upper", "w(A #_r B) <= sec^3(a) w(A)^(1-r) w(B)^r", hyp(Sec, Some(Sec), UNIT_CLOSED), Scalar, c04),
    entry("C05", "radius-inverse-lower", "cos^3(a) / w(A) <= w(A^-1)", hyp(Sec, None, &[]), Scalar, c05),
    entry("C06", "map-schwarz", "Phi(B) Phi(A)^-1 Phi(B) <= Phi(B A^-1 B)", with_map(hyp(Pd, Some(Pd), &[])), Loewner, c06),
    entry("C07", "power-real-upper-12", "Re(A^r) <= (Re A)^r", hyp(Acc, None, EXTENDED), Loewner, c07),
    entry("C08", "power-real-lower-01", "Re(A^r) >= (Re A)^r", hyp(Acc, None, UNIT_CLOSED), Loewner, c08),
    entry("C09", "geo-real-upper-12", "Re(A #_r B) <= Re A #_r Re B", hyp(Acc, Some(Acc), EXTENDED), Loewner, real_upper),
    entry("C10", "ando-reverse-12-pd", "Phi(A #_r B) >= Phi(A) #_r Phi(B)", with_map(hyp(Pd, Some(Pd), EXTENDED)), Loewner, c10),
    entry("C11", "sector-closure-12", "A #_r B in S_a", hyp(Sec, Some(Pd), EXTENDED), Membership, closure),
    entry("C12", "geo-real-lower-12", "cos(a) (Re A #_r Re B) <= Re(A #_r B)", hyp(Sec, Some(Pd), EXTENDED), Loewner, real_lower),
    entry("C13", "nabla-lower-12", "cos(a) Re((1-r)A + rB) <= Re(A #_r B)", hyp(Sec, Some(Pd), EXTENDED), Loewner, nabla_lower),
    entry("C14", "map-real-lower-12", "cos(a) Re(Phi(A) #_r Phi(B)) <= Re Phi(A #_r B)", with_map(hyp(Sec, Some(Pd), EXTENDED)), Loewner, map_real_lower),
    entry("C15", "map-norm-lower-12", "cos^2(a) |||Phi(A) #_r Phi(B)||| <= |||Phi(A #_r B)|||", with_norms(with_map(hyp(Sec, Some(Pd), EXTENDED))), Scalar, map_norm_lower),
    entry("C16", "radius-lower-12", "cos^6(a) w(B^-2)^-1 w(A)^(1-r) w(B)^(r-2) <= w(A #_r B)", hyp(Sec, Some(Pd), EXTENDED), Scalar, c16),
    entry("C17", "geo-real-upper-neg", "Re(A #_r B) <= Re A #_r Re B", hyp(Acc, Some(Acc), NEGATIVE), Loewner, real_upper),
    entry("C18", "sector-closure-neg", "A #_r B in S_a", hyp(Pd, Some(Sec), NEGATIVE), Membership, closure),
    entry("C19", "geo-real-lower-neg", "cos(a) (Re A #_r Re B) <= Re(A #_r B)", hyp(Pd, Some(Sec), NEGATIVE), Loewner, real_lower),
    entry("C20", "nabla-lower-neg", "cos(a) Re((1-r)A + rB) <= Re(A #_r B)", hyp(Pd, Some(Sec), NEGATIVE), Loewner, nabla_lower),
    entry("C21", "map-real-lower-neg", "cos(a) Re(Phi(A) #_r Phi(B)) <= Re Phi(A #_r B)", with_map(hyp(Pd, Some(Sec), NEGATIVE)), Loewner, map_real_lower),
    entry("C22", "map-norm-lower-neg", "cos^2(a) |||Phi(A) #_r Phi(B)||| <= |||Phi(A #_r B)|||", with_norms(with_map(hyp(Pd, Some(Sec), NEGATIVE))), Scalar, map_norm_lower),
    entry("C23", "radius-lower-neg", "cos^6(a) w(A^-2)^-1 w(A)^-(r+1) w(B)^r <= w(A #_r B)", hyp(Pd, Some(Sec), NEGATIVE), Scalar, c23),
    entry("C24", "amgm-chain-01", "A !_r B <= A #_r B <= A nabla_r B", hyp(Pd, Some(Pd), UNIT_CLOSED), Loewner, c24),
    entry("C25", "nabla-reverse-pd", "(1-r)A + rB <= A #_r B", hyp(Pd, Some(Pd), OUTER), Loewner, c25),
    entry("C26", "ando-pd", "Phi(A #_r B) <= Phi(A) #_r Phi(B)", with_map(hyp(Pd, Some(Pd), UNIT_CLOSED)), Loewner, c26),
    entry("C27", "fujii-pd", "Phi(A #_r B) >= Phi(A) #_r Phi(B)", with_map(hyp(Pd, Some(Pd), NEGATIVE)), Loewner, c10),
    entry("C28", "geo-real-lower-01", "Re(A #_r B) >= Re A #_r Re B", hyp(Acc, Some(Acc), UNIT), Loewner, c28),
    entry("C29", "geo-real-sec2-upper-01", "Re(A #_r B) <= sec^2(a) (Re A #_r Re B)", hyp(Sec, Some(Sec), UNIT_CLOSED), Loewner, c29),
    entry("I01", "reflection", "A #_r B = B (A #_{2-r} B)^-1 B", hyp(Acc, Some(Acc), EXTENDED), Identity, i01),
    entry("I02", "negation", "A #_r B = A (A^-1 #_{-r} B^-1) A", hyp(Acc, Some(Acc), NEGATIVE), Identity, i02),
    entry("I03", "inverse-mean", "(A #_r B)^-1 = A^-1 #_r B^-1", hyp(Acc, Some(Acc), ALL_BRANCHES), Identity, i03),
    entry("I04", "integral-vs-congruence", "int (integrand) d(measure) = A^1/2 (A^-1/2 B A^-1/2)^r A^1/2", hyp(Acc, Some(Acc), ALL_BRANCHES), Identity, i04),
    entry("I05", "quad-vs-eigen", "int (integrand) d(measure) = V diag(lambda^r) V^-1", hyp(Acc, None, ALL_BRANCHES), Identity, i05),
    entry(
        "I06",
        "identity-propositions",
        "A^2 (sI + (1-s)A)^-1 = A/(1-s) - s/(1-s) (I !_s A); (sI + (1-s)A)^-1 = I/s - (1-s)/s (I !_s A)",
        Hypothesis {
            s_samples: 10,
            ..hyp(Acc, None, &[])
        },
        Identity,
        i06,
    ),
];
