//! Seeded instance families evaluated against the checks in parallel,
//! with a deterministic record order and an NDJSON report.

use std::sync::Arc;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{
    diameter_conclusion, verify_ann_condition_diameter, verify_annihilator_intersection,
    verify_content_diameter, verify_core_theorem, verify_diameter_theorem,
    verify_maximal_ideal_cor, verify_path_dichotomy, verify_residual_graph_diameter,
    verify_residual_interpolation, verify_residual_laws, verify_semilattice_prop,
    verify_uniontrirect,
};
use crate::algebra::{
    content_onto_all_ideals, has_annihilator_condition, is_content_semimodule, FiniteModule,
    FiniteSemiring,
};
use crate::caps::Caps;
use crate::gamma::{ClosureCheck, Codomain, LabeledFunction};
use crate::report::{CheckId, ReasonCode, VerdictReport};
use crate::semigroup::{enumerate_semigroups, BoundedSemilattice, EnumBudget, SemigroupTable};

/// One seeded generator of corpus instances.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FamilySpec {
    /// Identity instances over the multiplicative semigroups of Zn.
    ZnIdentity { min: usize, max: usize },
    /// Subset semilattices of exponents 0..=max_exponent.
    SubsetSemilattices { max_exponent: usize },
    /// Total orders under min, sizes 1..=max_order.
    ChainSemilattices { max_order: usize },
    /// Identity instances over every enumerated semigroup of one order.
    EnumeratedIdentity { order: usize },
    /// Seeded random instances over the catalog, kept only when they pass
    /// image closure with a non-empty graph.
    RandomInstances {
        count: usize,
        seed: u64,
        max_order: usize,
        max_domain: usize,
    },
    /// Zn as a module over itself.
    ZnModules { min: usize, max: usize },
    /// Zn x Zn as a module over Zn.
    ZnSquareModules { min: usize, max: usize },
    /// A deliberately broken graph fixture that must FAIL, proving the
    /// harness can see red.
    CorruptedFixture,
}

/// What to run: families to generate, checks to apply, resource caps.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusConfig {
    pub seed: u64,
    #[serde(default)]
    pub caps: Caps,
    /// None means every applicable check.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub checks: Option<Vec<CheckId>>,
    pub families: Vec<FamilySpec>,
}

impl CorpusConfig {
    fn selected(&self, check: CheckId) -> bool {
        self.checks.as_ref().map_or(true, |c| c.contains(&check))
    }
}

/// One verdict with its wall-clock cost; generation failures keep the
/// error text alongside a CAP_EXCEEDED placeholder verdict.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusRecord {
    #[serde(flatten)]
    pub report: VerdictReport,
    pub millis: u128,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusSummary {
    pub seed: u64,
    pub records: usize,
    pub pass: usize,
    pub fail: usize,
    pub vacuous: usize,
    pub not_applicable: usize,
    pub errors: usize,
    pub millis: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusReport {
    pub records: Vec<CorpusRecord>,
    pub summary: CorpusSummary,
}

impl CorpusReport {
    pub fn any_fail(&self) -> bool {
        self.summary.fail > 0
    }

    /// One JSON object per record, then a summary line.
    pub fn to_ndjson(&self) -> String {
        let mut out = String::new();
        for record in &self.records {
            out.push_str(&serde_json::to_string(record).expect("records serialize"));
            out.push('\n');
        }
        out.push_str(
            &serde_json::to_string(&serde_json::json!({ "summary": self.summary }))
                .expect("summary serializes"),
        );
        out.push('\n');
        out
    }
}

type CheckRun = Box<dyn Fn() -> Result<VerdictReport, String> + Send + Sync>;

struct Job {
    check_id: CheckId,
    instance_ref: String,
    run: CheckRun,
}

impl Job {
    fn new(
        check_id: CheckId,
        instance_ref: impl Into<String>,
        run: impl Fn() -> Result<VerdictReport, String> + Send + Sync + 'static,
    ) -> Self {
        Job {
            check_id,
            instance_ref: instance_ref.into(),
            run: Box::new(run),
        }
    }

    fn broken(check_id: CheckId, instance_ref: impl Into<String>, error: String) -> Self {
        Job::new(check_id, instance_ref, move || Err(error.clone()))
    }
}

const GRAPH_CHECKS: [CheckId; 4] = [
    CheckId::ClosureDiameter,
    CheckId::TriangleRectangleCover,
    CheckId::CoreShortCycles,
    CheckId::PathCommonNeighborDichotomy,
];

fn graph_check_jobs(
    cfg: &CorpusConfig,
    instance_ref: &str,
    inst: &Arc<LabeledFunction>,
    jobs: &mut Vec<Job>,
) {
    for check in GRAPH_CHECKS {
        if !cfg.selected(check) {
            continue;
        }
        let inst = inst.clone();
        let name = instance_ref.to_string();
        jobs.push(Job::new(check, instance_ref, move || {
            Ok(match check {
                CheckId::ClosureDiameter => verify_diameter_theorem(&inst, &name),
                CheckId::TriangleRectangleCover => verify_uniontrirect(&inst, &name),
                CheckId::CoreShortCycles => verify_core_theorem(&inst, &name),
                CheckId::PathCommonNeighborDichotomy => {
                    verify_path_dichotomy(&inst.build_graph(), &name)
                }
                _ => unreachable!("graph check list"),
            })
        }));
    }
}

const MODULE_CHECKS: [CheckId; 10] = [
    CheckId::AnnihilatorCondition,
    CheckId::AnnihilatorIntersection,
    CheckId::AnnihilatorConditionDiameter,
    CheckId::ContentSemimodule,
    CheckId::ContentOntoIdeals,
    CheckId::ContentDiameter,
    CheckId::ResidualIdealLaws,
    CheckId::ResidualGraphDiameter,
    CheckId::OrderedInterpolationDiameter,
    CheckId::NilpotentMaximalIdealDiameter,
];

fn module_check_jobs(cfg: &CorpusConfig, owner: &Arc<FiniteModule>, jobs: &mut Vec<Job>) {
    let caps = cfg.caps.clone();
    let instance_ref = owner.qualified_name();
    for check in MODULE_CHECKS {
        if !cfg.selected(check) {
            continue;
        }
        let owner = owner.clone();
        let caps = caps.clone();
        jobs.push(Job::new(check, instance_ref.clone(), move || {
            let run = || match check {
                CheckId::AnnihilatorCondition => has_annihilator_condition(&owner),
                CheckId::AnnihilatorIntersection => verify_annihilator_intersection(&owner),
                CheckId::AnnihilatorConditionDiameter => {
                    verify_ann_condition_diameter(&owner, &caps)
                }
                CheckId::ContentSemimodule => is_content_semimodule(&owner, &caps),
                CheckId::ContentOntoIdeals => content_onto_all_ideals(&owner, &caps),
                CheckId::ContentDiameter => verify_content_diameter(&owner, &caps),
                CheckId::ResidualIdealLaws => verify_residual_laws(&owner, &caps),
                CheckId::ResidualGraphDiameter => verify_residual_graph_diameter(&owner, &caps),
                CheckId::OrderedInterpolationDiameter => {
                    verify_residual_interpolation(&owner, &caps)
                }
                CheckId::NilpotentMaximalIdealDiameter => verify_maximal_ideal_cor(&owner, &caps),
                _ => unreachable!("module check list"),
            };
            run().map_err(|e| e.to_string())
        }));
    }
}

fn zn_identity_jobs(cfg: &CorpusConfig, min: usize, max: usize, jobs: &mut Vec<Job>) {
    for n in min..=max {
        let instance_ref = format!("Z{} identity", n);
        match SemigroupTable::zn_multiplicative(n) {
            Ok(s) => {
                let inst = Arc::new(LabeledFunction::identity(&s));
                graph_check_jobs(cfg, &instance_ref, &inst, jobs);
            }
            Err(e) => jobs.push(Job::broken(
                CheckId::ClosureDiameter,
                instance_ref,
                e.to_string(),
            )),
        }
    }
}

fn semilattice_jobs(
    cfg: &CorpusConfig,
    built: Result<BoundedSemilattice, crate::semigroup::SemigroupError>,
    instance_ref: String,
    jobs: &mut Vec<Job>,
) {
    if !cfg.selected(CheckId::SemilatticeDiameterOne) {
        return;
    }
    match built {
        Ok(s) => {
            let inst = LabeledFunction::identity(s.base());
            let name = instance_ref.clone();
            jobs.push(Job::new(
                CheckId::SemilatticeDiameterOne,
                instance_ref,
                move || Ok(verify_semilattice_prop(&s, &inst, &name)),
            ));
        }
        Err(e) => jobs.push(Job::broken(
            CheckId::SemilatticeDiameterOne,
            instance_ref,
            e.to_string(),
        )),
    }
}

fn enumerated_jobs(cfg: &CorpusConfig, order: usize, jobs: &mut Vec<Job>) {
    match enumerate_semigroups(order, &EnumBudget::default(), None, &cfg.caps) {
        Ok(outcome) => {
            for (i, table) in outcome.tables.into_iter().enumerate() {
                let instance_ref = format!("enum(order={})#{} identity", order, i);
                let inst = Arc::new(LabeledFunction::identity(&table));
                graph_check_jobs(cfg, &instance_ref, &inst, jobs);
            }
        }
        Err(e) => jobs.push(Job::broken(
            CheckId::ClosureDiameter,
            format!("enum(order={})", order),
            e.to_string(),
        )),
    }
}

fn catalog(max_order: usize, caps: &Caps) -> Vec<(String, SemigroupTable)> {
    let mut out = Vec::new();
    for n in 2..=max_order {
        if let Ok(s) = SemigroupTable::zn_multiplicative(n) {
            out.push((format!("Z{}", n), s));
        }
    }
    for order in 2..=max_order.min(4) {
        if let Ok(outcome) = enumerate_semigroups(order, &EnumBudget::default(), None, caps) {
            for (i, table) in outcome.tables.into_iter().enumerate() {
                out.push((format!("enum(order={})#{}", order, i), table));
            }
        }
    }
    out
}

fn random_instance_jobs(
    cfg: &CorpusConfig,
    count: usize,
    seed: u64,
    max_order: usize,
    max_domain: usize,
    jobs: &mut Vec<Job>,
) {
    if max_order < 2 || max_domain < 2 {
        jobs.push(Job::broken(
            CheckId::ClosureDiameter,
            "random instances",
            "random instances need max_order >= 2 and max_domain >= 2".to_string(),
        ));
        return;
    }
    let catalog = catalog(max_order, &cfg.caps);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted = 0usize;
    let mut attempts = 0usize;
    let attempt_cap = count.saturating_mul(1000);
    while accepted < count && attempts < attempt_cap {
        attempts += 1;
        let (name, table) = &catalog[rng.gen_range(0..catalog.len())];
        let domain = rng.gen_range(2..=max_domain);
        let assignments: Vec<(String, usize)> = (0..domain)
            .map(|i| (format!("x{:02}", i), rng.gen_range(0..table.order())))
            .collect();
        let inst = LabeledFunction::new(assignments, Codomain::Plain(table.clone()))
            .expect("fresh labels and in-range values");
        if inst.check_closure() != ClosureCheck::Pass {
            continue;
        }
        if inst.build_graph().vertex_count() == 0 {
            continue;
        }
        accepted += 1;
        let instance_ref = format!("random#{} ({}, |X|={})", accepted, name, domain);
        graph_check_jobs(cfg, &instance_ref, &Arc::new(inst), jobs);
    }
}

fn zn_module_jobs(cfg: &CorpusConfig, min: usize, max: usize, square: bool, jobs: &mut Vec<Job>) {
    for n in min..=max {
        let scalars = match FiniteSemiring::zn(n) {
            Ok(s) => s,
            Err(e) => {
                jobs.push(Job::broken(
                    CheckId::ResidualGraphDiameter,
                    format!("Z{} module", n),
                    e.to_string(),
                ));
                continue;
            }
        };
        let base = FiniteModule::regular(&scalars);
        let owner = if square {
            match FiniteModule::product(&base, &base) {
                Ok(m) => m,
                Err(e) => {
                    jobs.push(Job::broken(
                        CheckId::ResidualGraphDiameter,
                        format!("Z{}xZ{} module", n, n),
                        e.to_string(),
                    ));
                    continue;
                }
            }
        } else {
            base
        };
        module_check_jobs(cfg, &owner, jobs);
    }
}

fn corrupted_fixture_job(cfg: &CorpusConfig, jobs: &mut Vec<Job>) {
    if !cfg.selected(CheckId::ClosureDiameter) {
        return;
    }
    let instance_ref = "corrupted fixture: Z6 identity minus its first edge";
    jobs.push(Job::new(
        CheckId::ClosureDiameter,
        instance_ref,
        move || {
            let s = SemigroupTable::zn_multiplicative(6).map_err(|e| e.to_string())?;
            let g = LabeledFunction::identity(&s).build_graph();
            let (u, v) = g.edges().into_iter().next().ok_or("fixture graph is empty")?;
            let broken = g.without_edge(&u, &v).map_err(|e| e.to_string())?;
            Ok(diameter_conclusion(
                CheckId::ClosureDiameter,
                instance_ref,
                &broken,
            ))
        },
    ));
}

fn build_jobs(cfg: &CorpusConfig) -> Vec<Job> {
    let mut jobs = Vec::new();
    for family in &cfg.families {
        match family {
            FamilySpec::ZnIdentity { min, max } => zn_identity_jobs(cfg, *min, *max, &mut jobs),
            FamilySpec::SubsetSemilattices { max_exponent } => {
                for k in 0..=*max_exponent {
                    semilattice_jobs(
                        cfg,
                        BoundedSemilattice::subset_meet(k, &cfg.caps),
                        format!("subset_meet({}) identity", k),
                        &mut jobs,
                    );
                }
            }
            FamilySpec::ChainSemilattices { max_order } => {
                for n in 1..=*max_order {
                    semilattice_jobs(
                        cfg,
                        BoundedSemilattice::chain(n),
                        format!("chain({}) identity", n),
                        &mut jobs,
                    );
                }
            }
            FamilySpec::EnumeratedIdentity { order } => enumerated_jobs(cfg, *order, &mut jobs),
            FamilySpec::RandomInstances {
                count,
                seed,
                max_order,
                max_domain,
            } => random_instance_jobs(cfg, *count, *seed, *max_order, *max_domain, &mut jobs),
            FamilySpec::ZnModules { min, max } => {
                zn_module_jobs(cfg, *min, *max, false, &mut jobs)
            }
            FamilySpec::ZnSquareModules { min, max } => {
                zn_module_jobs(cfg, *min, *max, true, &mut jobs)
            }
            FamilySpec::CorruptedFixture => corrupted_fixture_job(cfg, &mut jobs),
        }
    }
    jobs
}

/// Generate every family, run every selected check on every instance, and
/// aggregate. Record order is the deterministic generation order no matter
/// how many threads execute the checks.
pub fn run_corpus(cfg: &CorpusConfig) -> CorpusReport {
    let started = Instant::now();
    let jobs = build_jobs(cfg);
    let records: Vec<CorpusRecord> = jobs
        .par_iter()
        .map(|job| {
            let check_started = Instant::now();
            let outcome = (job.run)();
            let millis = check_started.elapsed().as_millis();
            match outcome {
                Ok(report) => CorpusRecord {
                    report,
                    millis,
                    error: None,
                },
                Err(error) => CorpusRecord {
                    report: VerdictReport::not_applicable(
                        job.check_id,
                        job.instance_ref.clone(),
                        ReasonCode::CapExceeded,
                    ),
                    millis,
                    error: Some(error),
                },
            }
        })
        .collect();
    let mut summary = CorpusSummary {
        seed: cfg.seed,
        records: records.len(),
        pass: 0,
        fail: 0,
        vacuous: 0,
        not_applicable: 0,
        errors: 0,
        millis: 0,
    };
    for record in &records {
        match record.report.status {
            crate::report::Status::Pass => summary.pass += 1,
            crate::report::Status::Fail => summary.fail += 1,
            crate::report::Status::Vacuous => summary.vacuous += 1,
            crate::report::Status::NotApplicable => summary.not_applicable += 1,
        }
        if record.error.is_some() {
            summary.errors += 1;
        }
    }
    summary.millis = started.elapsed().as_millis();
    CorpusReport { records, summary }
}
