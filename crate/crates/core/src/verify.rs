//! Per-singularity verification: hypotheses, minor degree bounds, the cube
//! inclusion, gradedness, agreement of the two matrix variants, and the
//! absence of negative-degree derivations.
//!
//! A check that falls outside the scope of the statement it tests is
//! reported as skipped with a reason from [`SkipReason`], never as a failure.

use std::collections::BTreeMap;
use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::json;

use crate::derivations::{derivation_spaces, negative_window, GradedDerivation};
use crate::error::Error;
use crate::groebner::{groebner_basis, ideal_equal, quotient_basis, GradedQuotient};
use crate::jacobian::{
    bareiss_determinant, build_jacobian, jacobian_cube_generators, maximal_minors, predicted_minor_degree,
    JacobianMatrix, MinorIdeal, Variant,
};
use crate::multi_index::MultiIndex;
use crate::order::MonomialOrder;
use crate::parse::parse_polynomial;
use crate::poly::Polynomial;
use crate::weights::WeightSystem;

/// One catalog entry as stored on disk.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CatalogEntry {
    pub name: String,
    pub poly: String,
    pub weights: Vec<u32>,
    #[serde(default = "default_n_range")]
    pub n_range: Vec<u32>,
}

fn default_n_range() -> Vec<u32> {
    vec![2, 3]
}

#[derive(Clone, Debug)]
pub struct SingularityInstance {
    pub name: String,
    pub f: Polynomial,
    pub w: WeightSystem,
    pub n_range: Vec<u32>,
}

impl SingularityInstance {
    pub fn new(name: &str, poly: &str, weights: &[u32], n_range: &[u32]) -> Result<Self, Error> {
        let w = WeightSystem::new(weights.to_vec())?;
        let f = parse_polynomial(poly, w.nvars())?;
        Ok(SingularityInstance { name: name.to_string(), f, w, n_range: n_range.to_vec() })
    }

    pub fn from_entry(entry: &CatalogEntry) -> Result<Self, Error> {
        let wrap = |message: String| Error::Catalog { entry: entry.name.clone(), message };
        let w = WeightSystem::new(entry.weights.clone()).map_err(|e| wrap(e.to_string()))?;
        let f = parse_polynomial(&entry.poly, w.nvars()).map_err(|e| wrap(e.render()))?;
        if let Some(&n) = entry.n_range.iter().find(|&&n| n == 0) {
            return Err(wrap(format!("order n = {n} is invalid")));
        }
        Ok(SingularityInstance { name: entry.name.clone(), f, w, n_range: entry.n_range.clone() })
    }

    pub fn nvars(&self) -> usize {
        self.w.nvars()
    }

    pub fn order(&self) -> MonomialOrder {
        MonomialOrder::new(self.w.clone())
    }

    /// `deg_w(f)` if `f` is nonzero and weighted homogeneous.
    pub fn degree(&self) -> Option<u64> {
        self.f.weighted_degree(&self.w).filter(|d| d.homogeneous).map(|d| d.degree)
    }

    pub fn show(&self, p: &Polynomial) -> String {
        p.to_string_with(&self.order())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckKind {
    Hypotheses,
    DegreeBound,
    InclusionCubed,
    Gradedness,
    VariantEquivalence,
    MainTheorem,
    /// Negative-degree scan at `n = 1`; reported, never judged.
    BaselineScan,
    GeneralizedSet,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SkipReason {
    HypothesisFailed,
    OrderBelowTwo,
    OutsideCaseSplit,
    TooLarge,
    InfiniteDimensional,
    NotWeightedHomogeneous,
    DegreeBelowBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "kebab-case")]
pub enum Outcome {
    Pass,
    Fail,
    Skipped { reason: SkipReason, detail: String },
    Info,
}

impl Outcome {
    fn skipped(reason: SkipReason, detail: impl Into<String>) -> Self {
        Outcome::Skipped { reason, detail: detail.into() }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Fail => "fail",
            Outcome::Skipped { .. } => "skipped",
            Outcome::Info => "info",
        }
    }
}

/// Evidence attached to a failing check; re-checkable with [`recheck_witness`].
#[derive(Clone, Debug, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    Minor {
        n: u32,
        variant: Variant,
        #[serde(skip)]
        col_indices: Vec<usize>,
        columns: Vec<MultiIndex>,
        polynomial: String,
        degree: Option<u64>,
        predicted: Option<i64>,
        bound: Option<u64>,
    },
    Derivation {
        n: u32,
        degree: i64,
        images: Vec<String>,
        #[serde(skip)]
        raw: Vec<Polynomial>,
    },
    NonMember {
        n: u32,
        polynomial: String,
        #[serde(skip)]
        raw: Option<Polynomial>,
    },
    Hypothesis {
        detail: String,
    },
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub check: CheckKind,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    pub outcome: Outcome,
    pub summary: String,
    #[serde(skip_serializing_if = "serde_json::Value::is_null")]
    pub data: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl CheckResult {
    fn new(check: CheckKind, n: Option<u32>, outcome: Outcome, summary: impl Into<String>) -> Self {
        CheckResult { check, n, outcome, summary: summary.into(), data: serde_json::Value::Null, witness: None }
    }

    fn with_data(mut self, data: serde_json::Value) -> Self {
        self.data = data;
        self
    }

    fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn is_fail(&self) -> bool {
        self.outcome == Outcome::Fail
    }
}

#[derive(Clone, Copy, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct VerifyConfig {
    pub max_minors: usize,
    /// Run inclusion, gradedness and variant checks too, not just the
    /// hypotheses, the degree bound and the negative-derivation scan.
    pub full_battery: bool,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig { max_minors: crate::DEFAULT_MAX_MINORS, full_battery: true }
    }
}

/// Result of [`check_hypotheses`]: the verdict plus what later checks need.
#[derive(Clone, Debug)]
pub struct HypothesisSummary {
    pub result: CheckResult,
    pub degree: Option<u64>,
    pub satisfied: bool,
}

/// Weighted homogeneity, `d ≥ 2w_1 ≥ … ≥ 2w_s > 0` after sorting the
/// weights descending, a singular point at the origin, and an isolated
/// singularity (finite-dimensional `Q[x]/⟨f_1, …, f_s⟩`).
pub fn check_hypotheses(inst: &SingularityInstance) -> HypothesisSummary {
    let (sorted, perm) = inst.w.sorted_descending();
    let degree = inst.degree();
    let mut failures = Vec::new();

    let homogeneous = degree.is_some();
    if !homogeneous {
        failures.push("f is not weighted homogeneous".to_string());
    }
    let chain = degree.is_some_and(|d| d >= 2 * sorted[0] as u64);
    if homogeneous && !chain {
        failures.push(format!("weight chain fails: d = {} < 2·{}", degree.unwrap_or(0), sorted[0]));
    }
    let low_order = inst.f.terms().any(|(m, _)| m.norm() <= 1);
    if low_order {
        failures.push("f has a constant or linear term".to_string());
    }
    let jq = quotient_basis(&inst.f.gradient(), &inst.order());
    let isolated = jq.is_finite();
    if !isolated {
        failures.push(format!(
            "Jacobian ideal is not zero-dimensional (no pure power of {})",
            jq.basis
                .free_variables()
                .iter()
                .map(|&i| crate::poly::variable_name(i, inst.nvars()))
                .collect::<Vec<_>>()
                .join(", ")
        ));
    }
    let satisfied = failures.is_empty();
    let data = json!({
        "degree": degree,
        "sorted_weights": sorted,
        "weight_permutation": perm,
        "weighted_homogeneous": homogeneous,
        "weight_chain": chain,
        "singular_at_origin": !low_order,
        "isolated": isolated,
        "milnor_number": jq.dimension(),
    });
    let result = if satisfied {
        CheckResult::new(
            CheckKind::Hypotheses,
            None,
            Outcome::Pass,
            format!(
                "d = {} ≥ 2·{}; Jacobian quotient has dimension {}",
                degree.unwrap_or(0),
                sorted[0],
                jq.dimension().unwrap_or(0)
            ),
        )
    } else {
        let detail = failures.join("; ");
        CheckResult::new(CheckKind::Hypotheses, None, Outcome::Fail, detail.clone())
            .with_witness(Witness::Hypothesis { detail })
    };
    HypothesisSummary { result: result.with_data(data), degree, satisfied }
}

/// Everything computed once per order `n`.
pub struct OrderContext {
    pub n: u32,
    pub jacobian: JacobianMatrix,
    pub minors: Result<MinorIdeal, Error>,
}

impl OrderContext {
    pub fn new(inst: &SingularityInstance, n: u32, cfg: &VerifyConfig) -> Result<Self, Error> {
        let jacobian = build_jacobian(&inst.f, n, Variant::ZeroDiagonal)?;
        let minors = maximal_minors(&jacobian, cfg.max_minors);
        Ok(OrderContext { n, jacobian, minors })
    }

    /// Generators of `⟨f, J_n(f)⟩`.
    pub fn tn_generators(&self) -> Option<Vec<Polynomial>> {
        let minors = self.minors.as_ref().ok()?;
        let mut gens = vec![self.jacobian.f.clone()];
        gens.extend(minors.generators.iter().cloned());
        Some(gens)
    }
}

fn too_large(check: CheckKind, n: u32, err: &Error) -> CheckResult {
    CheckResult::new(check, Some(n), Outcome::skipped(SkipReason::TooLarge, err.to_string()), "not computed")
}

/// Every nonzero maximal minor `g` has `deg_w(g) ≥ deg_w(f)`; requires `n ≥ 2`.
pub fn check_degree_bound(inst: &SingularityInstance, ctx: &OrderContext, hyp: &HypothesisSummary) -> CheckResult {
    let kind = CheckKind::DegreeBound;
    let n = ctx.n;
    if n < 2 {
        return CheckResult::new(
            kind,
            Some(n),
            Outcome::skipped(SkipReason::OrderBelowTwo, "the bound is stated for n ≥ 2"),
            "partials have degree d − w_i < d",
        );
    }
    if !hyp.satisfied {
        return CheckResult::new(kind, Some(n), Outcome::skipped(SkipReason::HypothesisFailed, hyp.result.summary.clone()), "");
    }
    let minors = match &ctx.minors {
        Ok(m) => m,
        Err(e) => return too_large(kind, n, e),
    };
    let d = hyp.degree.expect("hypotheses imply homogeneity");
    let mut min_degree: Option<u64> = None;
    for (g, src) in minors.generators.iter().zip(&minors.sources) {
        let gd = g.weighted_degree(&inst.w).map(|x| x.degree).unwrap_or(0);
        min_degree = Some(min_degree.map_or(gd, |m| m.min(gd)));
        if gd < d {
            return CheckResult::new(kind, Some(n), Outcome::Fail, format!("minor of degree {gd} < d = {d}"))
                .with_witness(Witness::Minor {
                    n,
                    variant: Variant::ZeroDiagonal,
                    col_indices: src[0].clone(),
                    columns: ctx.jacobian.column_labels(&src[0]),
                    polynomial: inst.show(g),
                    degree: Some(gd),
                    predicted: None,
                    bound: Some(d),
                });
        }
    }
    CheckResult::new(
        kind,
        Some(n),
        Outcome::Pass,
        format!("min minor degree {} ≥ d = {d}", min_degree.map_or("-".into(), |m| m.to_string())),
    )
    .with_data(json!({
        "d": d,
        "min_minor_degree": min_degree,
        "generators": minors.len(),
        "nonzero_minors": minors.nonzero_minors,
        "subsets": minors.subset_count.to_string(),
    }))
}

/// `J_n(f) ⊆ J_1(f)^3` for `s ≥ 3, n ≥ 2` or `s = 2, n ≥ 3`.
pub fn check_inclusion_cubed(inst: &SingularityInstance, ctx: &OrderContext) -> CheckResult {
    let kind = CheckKind::InclusionCubed;
    let (s, n) = (inst.nvars(), ctx.n);
    let in_scope = (s >= 3 && n >= 2) || (s == 2 && n >= 3);
    if !in_scope {
        return CheckResult::new(
            kind,
            Some(n),
            Outcome::skipped(SkipReason::OutsideCaseSplit, format!("s = {s}, n = {n}: checked directly from the generators")),
            "outside the case split",
        );
    }
    let minors = match &ctx.minors {
        Ok(m) => m,
        Err(e) => return too_large(kind, n, e),
    };
    let cube = jacobian_cube_generators(&inst.f);
    let gb = groebner_basis(&cube, &inst.order());
    for g in &minors.generators {
        if !gb.contains(g) {
            return CheckResult::new(kind, Some(n), Outcome::Fail, "a minor lies outside J_1(f)^3").with_witness(
                Witness::NonMember { n, polynomial: inst.show(g), raw: Some(g.clone()) },
            );
        }
    }
    CheckResult::new(kind, Some(n), Outcome::Pass, format!("{} generators reduce to zero modulo J_1(f)^3", minors.len()))
        .with_data(json!({ "cube_generators": cube.len(), "cube_basis": gb.len() }))
}

/// Every minor is weighted homogeneous with the degree predicted from its columns.
pub fn check_gradedness(inst: &SingularityInstance, ctx: &OrderContext) -> CheckResult {
    let kind = CheckKind::Gradedness;
    let n = ctx.n;
    let Some(d) = inst.degree() else {
        return CheckResult::new(
            kind,
            Some(n),
            Outcome::skipped(SkipReason::NotWeightedHomogeneous, "f is not weighted homogeneous"),
            "",
        );
    };
    let minors = match &ctx.minors {
        Ok(m) => m,
        Err(e) => return too_large(kind, n, e),
    };
    let mut checked = 0usize;
    for (g, src) in minors.generators.iter().zip(&minors.sources) {
        let wd = g.weighted_degree(&inst.w).expect("nonzero minor");
        for cols in src {
            let predicted = predicted_minor_degree(&ctx.jacobian, &inst.w, d, cols);
            checked += 1;
            if !wd.homogeneous || predicted != wd.degree as i64 {
                return CheckResult::new(kind, Some(n), Outcome::Fail, "minor degree disagrees with prediction")
                    .with_witness(Witness::Minor {
                        n,
                        variant: Variant::ZeroDiagonal,
                        col_indices: cols.clone(),
                        columns: ctx.jacobian.column_labels(cols),
                        polynomial: inst.show(g),
                        degree: wd.homogeneous.then_some(wd.degree),
                        predicted: Some(predicted),
                        bound: None,
                    });
            }
        }
    }
    CheckResult::new(kind, Some(n), Outcome::Pass, format!("{checked} nonzero minors homogeneous of predicted degree"))
        .with_data(json!({ "minors_checked": checked }))
}

/// `⟨f⟩ + J_n(f)` is the same ideal for both diagonal conventions.
pub fn check_variant_equivalence(inst: &SingularityInstance, ctx: &OrderContext, cfg: &VerifyConfig) -> CheckResult {
    let kind = CheckKind::VariantEquivalence;
    let n = ctx.n;
    if inst.degree().is_none() {
        return CheckResult::new(
            kind,
            Some(n),
            Outcome::skipped(SkipReason::NotWeightedHomogeneous, "f is not weighted homogeneous"),
            "",
        );
    }
    let Some(zero) = ctx.tn_generators() else {
        return too_large(kind, n, ctx.minors.as_ref().unwrap_err());
    };
    let jf = build_jacobian(&inst.f, n, Variant::FDiagonal).expect("n ≥ 1");
    let fminors = match maximal_minors(&jf, cfg.max_minors) {
        Ok(m) => m,
        Err(e) => return too_large(kind, n, &e),
    };
    let mut fgens = vec![inst.f.clone()];
    fgens.extend(fminors.generators.iter().cloned());
    if ideal_equal(&zero, &fgens, &inst.order()) {
        CheckResult::new(kind, Some(n), Outcome::Pass, "both variants give the same ideal modulo f")
    } else {
        let gb = groebner_basis(&zero, &inst.order());
        let outside = fgens.iter().find(|g| !gb.contains(g)).cloned();
        let witness = match outside {
            Some(g) => Witness::NonMember { n, polynomial: inst.show(&g), raw: Some(g) },
            None => Witness::Hypothesis { detail: "zero-diagonal ideal is strictly larger".into() },
        };
        CheckResult::new(kind, Some(n), Outcome::Fail, "variants disagree modulo f").with_witness(witness)
    }
}

/// Negative-degree derivation scan of a graded quotient, with the first
/// nonzero basis element as a witness if one exists.
pub fn scan_negative(q: &GradedQuotient, w: &WeightSystem) -> Result<(BTreeMap<i64, usize>, Option<GradedDerivation>), Error> {
    let reports = derivation_spaces(q, w, negative_window(w))?;
    let witness = reports.iter().find_map(|r| r.basis.first().cloned());
    Ok((reports.into_iter().map(|r| (r.degree, r.dimension)).collect(), witness))
}

fn scan_data(scan: &BTreeMap<i64, usize>, q: &GradedQuotient) -> serde_json::Value {
    json!({
        "negative_dims": scan.iter().map(|(e, d)| (e.to_string(), *d)).collect::<BTreeMap<_, _>>(),
        "algebra_dimension": q.dimension(),
        "socle_degree": q.socle_degree(),
    })
}

/// No negative-degree derivations on `Q[x]/⟨f, J_n(f)⟩` for `n ≥ 2`; at `n = 1`
/// the scan is reported as information only.
pub fn check_main_theorem(inst: &SingularityInstance, ctx: &OrderContext, hyp: &HypothesisSummary) -> CheckResult {
    let n = ctx.n;
    let kind = if n < 2 { CheckKind::BaselineScan } else { CheckKind::MainTheorem };
    if n >= 2 && !hyp.satisfied {
        return CheckResult::new(kind, Some(n), Outcome::skipped(SkipReason::HypothesisFailed, hyp.result.summary.clone()), "");
    }
    if inst.degree().is_none() {
        return CheckResult::new(
            kind,
            Some(n),
            Outcome::skipped(SkipReason::NotWeightedHomogeneous, "f is not weighted homogeneous"),
            "",
        );
    }
    let Some(gens) = ctx.tn_generators() else {
        return too_large(kind, n, ctx.minors.as_ref().unwrap_err());
    };
    let q = quotient_basis(&gens, &inst.order());
    if !q.is_finite() {
        return CheckResult::new(
            kind,
            Some(n),
            Outcome::skipped(SkipReason::InfiniteDimensional, "quotient is not finite-dimensional"),
            "",
        );
    }
    let (scan, witness) = match scan_negative(&q, &inst.w) {
        Ok(r) => r,
        Err(e) => return CheckResult::new(kind, Some(n), Outcome::skipped(SkipReason::NotWeightedHomogeneous, e.to_string()), ""),
    };
    let data = scan_data(&scan, &q);
    let dims = scan.values().map(|d| d.to_string()).collect::<Vec<_>>().join(",");
    if n < 2 {
        return CheckResult::new(kind, Some(n), Outcome::Info, format!("negative dims [{dims}]")).with_data(data);
    }
    match witness {
        None => CheckResult::new(kind, Some(n), Outcome::Pass, format!("negative dims [{dims}] all zero")).with_data(data),
        Some(d) => CheckResult::new(kind, Some(n), Outcome::Fail, format!("negative dims [{dims}]"))
            .with_data(data)
            .with_witness(Witness::Derivation {
                n,
                degree: d.degree,
                images: d.images.iter().map(|p| inst.show(p)).collect(),
                raw: d.images,
            }),
    }
}

/// Negative-degree scan of `Q[x]/⟨f, S⟩` for an arbitrary set `S` of weighted
/// homogeneous polynomials of degree at least `deg_w(f)`.
pub fn check_generalized_set(inst: &SingularityInstance, set: &[Polynomial]) -> CheckResult {
    let kind = CheckKind::GeneralizedSet;
    let hyp = check_hypotheses(inst);
    if !hyp.satisfied {
        return CheckResult::new(kind, None, Outcome::skipped(SkipReason::HypothesisFailed, hyp.result.summary), "");
    }
    let d = hyp.degree.expect("homogeneous");
    for (i, g) in set.iter().enumerate() {
        match g.weighted_degree(&inst.w) {
            Some(wd) if wd.homogeneous && wd.degree >= d => {}
            Some(wd) if wd.homogeneous => {
                return CheckResult::new(
                    kind,
                    None,
                    Outcome::skipped(SkipReason::DegreeBelowBound, format!("element {i} has degree {} < {d}", wd.degree)),
                    "",
                )
            }
            _ => {
                return CheckResult::new(
                    kind,
                    None,
                    Outcome::skipped(SkipReason::NotWeightedHomogeneous, format!("element {i} is not homogeneous")),
                    "",
                )
            }
        }
    }
    let mut gens = vec![inst.f.clone()];
    gens.extend(set.iter().filter(|g| !g.is_zero()).cloned());
    let q = quotient_basis(&gens, &inst.order());
    if !q.is_finite() {
        return CheckResult::new(
            kind,
            None,
            Outcome::skipped(SkipReason::InfiniteDimensional, "quotient is not finite-dimensional"),
            "",
        );
    }
    let (scan, witness) = scan_negative(&q, &inst.w).expect("validated input");
    let data = scan_data(&scan, &q);
    match witness {
        None => CheckResult::new(kind, None, Outcome::Pass, "no negative derivations").with_data(data),
        Some(d) => CheckResult::new(kind, None, Outcome::Fail, "negative derivation found").with_data(data).with_witness(
            Witness::Derivation { n: 0, degree: d.degree, images: d.images.iter().map(|p| inst.show(p)).collect(), raw: d.images },
        ),
    }
}

/// Independently re-establishes what a witness claims. For a minor: the
/// Bareiss determinant of that column subset is nonzero and violates the
/// bound or the predicted degree. For a derivation: it is nonzero, of
/// negative degree, and maps every generator of `⟨f, J_n(f)⟩` into the ideal.
/// For a non-member: it is a minor-ideal element outside `J_1(f)^3`.
pub fn recheck_witness(inst: &SingularityInstance, witness: &Witness) -> bool {
    match witness {
        Witness::Minor { n, variant, col_indices, bound, predicted, .. } => {
            let Ok(j) = build_jacobian(&inst.f, *n, *variant) else {
                return false;
            };
            if col_indices.len() != j.num_rows() || col_indices.iter().any(|&c| c >= j.num_cols()) {
                return false;
            }
            let det = bareiss_determinant(&j.submatrix(col_indices));
            let Some(wd) = det.weighted_degree(&inst.w) else {
                return false;
            };
            let below = bound.is_some_and(|b| wd.homogeneous && wd.degree < b);
            let mispredicted = predicted.is_some_and(|p| !wd.homogeneous || p != wd.degree as i64);
            below || mispredicted
        }
        Witness::Derivation { n, degree, raw, .. } => {
            if *degree >= 0 || raw.iter().all(Polynomial::is_zero) {
                return false;
            }
            let Ok(ctx) = OrderContext::new(inst, *n, &VerifyConfig::default()) else {
                return false;
            };
            let Some(gens) = ctx.tn_generators() else {
                return false;
            };
            let q = quotient_basis(&gens, &inst.order());
            let d = GradedDerivation { degree: *degree, images: raw.clone() };
            !raw.iter().all(|r| q.basis.contains(r)) && d.preserves_ideal(&q)
        }
        Witness::NonMember { raw: Some(g), .. } => {
            let gb = groebner_basis(&jacobian_cube_generators(&inst.f), &inst.order());
            !gb.contains(g)
        }
        Witness::NonMember { raw: None, .. } => false,
        Witness::Hypothesis { .. } => !check_hypotheses(inst).satisfied,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InstanceReport {
    pub name: String,
    pub poly: String,
    pub weights: Vec<u32>,
    pub degree: Option<u64>,
    pub n_range: Vec<u32>,
    pub checks: Vec<CheckResult>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

/// Runs every check for every order in the instance's range.
pub fn verify_instance(inst: &SingularityInstance, cfg: &VerifyConfig) -> InstanceReport {
    let hyp = check_hypotheses(inst);
    let mut checks = vec![hyp.result.clone()];
    for &n in &inst.n_range {
        let ctx = match OrderContext::new(inst, n, cfg) {
            Ok(c) => c,
            Err(e) => {
                checks.push(CheckResult::new(CheckKind::DegreeBound, Some(n), Outcome::Fail, e.to_string()));
                continue;
            }
        };
        checks.push(check_degree_bound(inst, &ctx, &hyp));
        if cfg.full_battery {
            checks.push(check_inclusion_cubed(inst, &ctx));
            checks.push(check_gradedness(inst, &ctx));
            checks.push(check_variant_equivalence(inst, &ctx, cfg));
        }
        checks.push(check_main_theorem(inst, &ctx, &hyp));
    }
    let count = |f: fn(&Outcome) -> bool| checks.iter().filter(|c| f(&c.outcome)).count();
    InstanceReport {
        name: inst.name.clone(),
        poly: inst.show(&inst.f),
        weights: inst.w.as_slice().to_vec(),
        degree: inst.degree(),
        n_range: inst.n_range.clone(),
        passed: count(|o| *o == Outcome::Pass),
        failed: count(|o| *o == Outcome::Fail),
        skipped: count(|o| matches!(o, Outcome::Skipped { .. })),
        checks,
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CatalogReport {
    pub instances: Vec<InstanceReport>,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

impl CatalogReport {
    pub fn any_failed(&self) -> bool {
        self.failed > 0
    }
}

/// Parses a catalog: a JSON array of `{name, poly, weights, n_range}`.
pub fn parse_catalog(text: &str) -> Result<Vec<SingularityInstance>, Error> {
    let entries: Vec<CatalogEntry> = serde_json::from_str(text)
        .map_err(|e| Error::CatalogFormat(format!("line {} column {}: {e}", e.line(), e.column())))?;
    entries.iter().map(SingularityInstance::from_entry).collect()
}

/// Verifies instances concurrently; report order follows input order.
pub fn verify_all(instances: &[SingularityInstance], cfg: &VerifyConfig) -> CatalogReport {
    let reports: Vec<InstanceReport> = instances.par_iter().map(|i| verify_instance(i, cfg)).collect();
    CatalogReport {
        passed: reports.iter().map(|r| r.passed).sum(),
        failed: reports.iter().map(|r| r.failed).sum(),
        skipped: reports.iter().map(|r| r.skipped).sum(),
        instances: reports,
    }
}

pub fn run_catalog(path: &Path, cfg: &VerifyConfig) -> Result<CatalogReport, Error> {
    let text = std::fs::read_to_string(path)?;
    Ok(verify_all(&parse_catalog(&text)?, cfg))
}

/// The catalog shipped with the crate.
pub const BUNDLED_CATALOG: &str = include_str!("../data/catalog.json");

pub fn bundled_catalog() -> Vec<SingularityInstance> {
    parse_catalog(BUNDLED_CATALOG).expect("bundled catalog is valid")
}

/// Fixed-width summary table, one row per check.
pub fn render_table(report: &CatalogReport) -> String {
    let mut rows = vec![["instance".to_string(), "n".into(), "check".into(), "outcome".into(), "summary".into()]];
    for inst in &report.instances {
        for c in &inst.checks {
            let outcome = match &c.outcome {
                Outcome::Skipped { reason, .. } => format!("skipped ({})", kebab(reason)),
                o => o.label().to_string(),
            };
            rows.push([
                inst.name.clone(),
                c.n.map_or("-".into(), |n| n.to_string()),
                kebab(&c.check),
                outcome,
                c.summary.clone(),
            ]);
        }
    }
    let widths: Vec<usize> = (0..4).map(|k| rows.iter().map(|r| r[k].chars().count()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in &rows {
        for k in 0..4 {
            out.push_str(&format!("{:<width$}  ", r[k], width = widths[k]));
        }
        out.push_str(r[4].trim_end());
        out.push('\n');
    }
    out.push_str(&format!(
        "\n{} instances: {} passed, {} failed, {} skipped\n",
        report.instances.len(),
        report.passed,
        report.failed,
        report.skipped
    ));
    out
}

fn kebab<T: Serialize>(v: &T) -> String {
    serde_json::to_value(v).ok().and_then(|x| x.as_str().map(String::from)).unwrap_or_default()
}
