//! The structure theorems as executable checks. Each check classifies an
//! instance into PASS, FAIL (with witness), VACUOUS, or NOT_APPLICABLE,
//! so corpus statistics can separate "hypothesis failed" from "conclusion
//! held" from "nothing to quantify over".

pub mod corpus;

pub use corpus::{run_corpus, CorpusConfig, CorpusRecord, CorpusReport, CorpusSummary, FamilySpec};

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::algebra::{
    self, annihilator_pair_law, content_onto_all_ideals, gamma_ann, gamma_content, gamma_residual,
    has_annihilator_condition, ideal_product, is_content_semimodule, nilpotent_maximal_ideal,
    submodules, AlgebraError, FiniteModule, Ideal,
};
use crate::caps::Caps;
use crate::gamma::{ClosureCheck, InstanceError, InterpolationCheck, LabeledFunction};
use crate::graph::{Diameter, SimpleGraph};
use crate::report::{CheckId, CoveredEdge, ReasonCode, Status, VerdictReport, Witness};
use crate::semigroup::{BoundedSemilattice, LargestD};

/// A disconnected pair if one exists, otherwise a pair realizing the
/// largest finite distance. Callers guarantee at least two vertices.
fn distant_pair(g: &SimpleGraph) -> Witness {
    let labels = g.labels();
    let mut best: Option<(u32, usize, usize)> = None;
    for i in 0..labels.len() {
        for j in i + 1..labels.len() {
            match g
                .distance(&labels[i], &labels[j])
                .expect("labels enumerate the vertices")
            {
                None => {
                    return Witness::DistantPair {
                        u: labels[i].clone(),
                        v: labels[j].clone(),
                        distance: None,
                    }
                }
                Some(d) => {
                    if best.map_or(true, |(b, _, _)| d > b) {
                        best = Some((d, i, j));
                    }
                }
            }
        }
    }
    let (d, i, j) = best.expect("at least one vertex pair");
    Witness::DistantPair {
        u: labels[i].clone(),
        v: labels[j].clone(),
        distance: Some(d),
    }
}

fn connected_within(g: &SimpleGraph, bound: u32) -> bool {
    if !g.is_connected() {
        return false;
    }
    match g.diameter() {
        Diameter::Undefined => true,
        Diameter::Finite(d) => d <= bound,
        Diameter::Infinite => false,
    }
}

/// Shared conclusion of the diameter theorems: the graph, when non-empty,
/// must be connected with diameter at most three.
pub(crate) fn diameter_conclusion(
    check_id: CheckId,
    instance_ref: &str,
    g: &SimpleGraph,
) -> VerdictReport {
    if g.vertex_count() == 0 {
        return VerdictReport::vacuous(check_id, instance_ref, ReasonCode::EmptyGraph);
    }
    if connected_within(g, 3) {
        VerdictReport::pass(check_id, instance_ref)
    } else {
        VerdictReport::fail(check_id, instance_ref, distant_pair(g))
    }
}

/// Connectivity and diameter <= 3, gated on image closure.
pub fn verify_diameter_theorem(inst: &LabeledFunction, instance_ref: &str) -> VerdictReport {
    let check = CheckId::ClosureDiameter;
    if let ClosureCheck::Fail { x, y, product } = inst.check_closure() {
        return VerdictReport::not_applicable_with(
            check,
            instance_ref,
            ReasonCode::ClosureFailed,
            Witness::MissingProduct {
                x,
                y,
                product: inst.semigroup().label(product).to_string(),
            },
        );
    }
    diameter_conclusion(check, instance_ref, &inst.build_graph())
}

/// Connectivity and diameter <= 3, gated on order interpolation.
pub fn verify_ordered_theorem(
    inst: &LabeledFunction,
    instance_ref: &str,
) -> Result<VerdictReport, InstanceError> {
    let check = CheckId::OrderedInterpolationDiameter;
    if let InterpolationCheck::Fail { w, z, product } = inst.check_ordered_interpolation()? {
        return Ok(VerdictReport::not_applicable_with(
            check,
            instance_ref,
            ReasonCode::InterpolationFailed,
            Witness::InterpolationGap {
                w,
                z,
                product: inst.semigroup().label(product).to_string(),
            },
        ));
    }
    Ok(diameter_conclusion(check, instance_ref, &inst.build_graph()))
}

/// First path a - x - b whose endpoints share no neighbor besides x.
fn pinched_path(g: &SimpleGraph) -> Option<(String, String, String)> {
    for x in g.labels() {
        let around: Vec<String> = g
            .neighbors(x)
            .expect("labels enumerate the vertices")
            .into_iter()
            .collect();
        for (i, a) in around.iter().enumerate() {
            for b in &around[i + 1..] {
                let common = g.common_neighbors(a, b).expect("neighbors are vertices");
                if common.len() == 1 && common.contains(x.as_str()) {
                    return Some((a.clone(), x.clone(), b.clone()));
                }
            }
        }
    }
    None
}

/// Every edge on a cycle of length at most max_len, with the covering
/// cycles as the PASS witness.
fn cover_all_edges(
    check_id: CheckId,
    instance_ref: &str,
    g: &SimpleGraph,
    max_len: usize,
) -> VerdictReport {
    let mut covers = Vec::new();
    for (u, v) in g.edges() {
        match g
            .edge_in_short_cycle(&u, &v, max_len)
            .expect("edges() yields real edges")
        {
            Some(cycle) => covers.push(CoveredEdge { u, v, cycle }),
            None => {
                return VerdictReport::fail(
                    check_id,
                    instance_ref,
                    Witness::UncoveredEdge { u, v, max_len },
                )
            }
        }
    }
    VerdictReport::pass_with(check_id, instance_ref, Witness::CycleCover { covers })
}

/// Triangle-and-rectangle cover of the whole graph, applicable only to
/// connected graphs of diameter <= 3 without pinched paths.
pub fn uniontrirect_on_graph(g: &SimpleGraph, instance_ref: &str) -> VerdictReport {
    let check = CheckId::TriangleRectangleCover;
    if g.vertex_count() < 3 {
        return VerdictReport::not_applicable(
            check,
            instance_ref,
            ReasonCode::FewerThanThreeVertices,
        );
    }
    if !g.is_connected() {
        return VerdictReport::not_applicable(check, instance_ref, ReasonCode::NotConnected);
    }
    if !connected_within(g, 3) {
        return VerdictReport::not_applicable(
            check,
            instance_ref,
            ReasonCode::DiameterExceedsThree,
        );
    }
    if let Some((a, x, b)) = pinched_path(g) {
        return VerdictReport::not_applicable_with(
            check,
            instance_ref,
            ReasonCode::PinchedPath,
            Witness::PinchedPath { a, x, b },
        );
    }
    cover_all_edges(check, instance_ref, g, 4)
}

pub fn verify_uniontrirect(inst: &LabeledFunction, instance_ref: &str) -> VerdictReport {
    uniontrirect_on_graph(&inst.build_graph(), instance_ref)
}

/// Every core edge on a 3- or 4-cycle, gated on image closure and the
/// presence of a cycle.
pub fn verify_core_theorem(inst: &LabeledFunction, instance_ref: &str) -> VerdictReport {
    let check = CheckId::CoreShortCycles;
    let g = inst.build_graph();
    if g.vertex_count() < 3 {
        return VerdictReport::not_applicable(
            check,
            instance_ref,
            ReasonCode::FewerThanThreeVertices,
        );
    }
    if let ClosureCheck::Fail { x, y, product } = inst.check_closure() {
        return VerdictReport::not_applicable_with(
            check,
            instance_ref,
            ReasonCode::ClosureFailed,
            Witness::MissingProduct {
                x,
                y,
                product: inst.semigroup().label(product).to_string(),
            },
        );
    }
    if g.girth().is_none() {
        return VerdictReport::not_applicable(check, instance_ref, ReasonCode::NoCycle);
    }
    cover_all_edges(check, instance_ref, &g.core(), 4)
}

/// Common-neighbor dichotomy: every path a - x - b either pinches at x or
/// extends to a cycle of length at most 4 through a third common neighbor.
pub fn verify_path_dichotomy(g: &SimpleGraph, instance_ref: &str) -> VerdictReport {
    let check = CheckId::PathCommonNeighborDichotomy;
    let mut saw_path = false;
    for x in g.labels() {
        let around: Vec<String> = g
            .neighbors(x)
            .expect("labels enumerate the vertices")
            .into_iter()
            .collect();
        for (i, a) in around.iter().enumerate() {
            for b in &around[i + 1..] {
                saw_path = true;
                let common = g.common_neighbors(a, b).expect("neighbors are vertices");
                if common.len() == 1 && common.contains(x.as_str()) {
                    continue;
                }
                let third = common
                    .iter()
                    .find(|c| c.as_str() != x && g.has_edge(a, c) && g.has_edge(b, c));
                if third.is_none() {
                    return VerdictReport::fail(
                        check,
                        instance_ref,
                        Witness::DichotomyGap {
                            a: a.clone(),
                            x: x.clone(),
                            b: b.clone(),
                        },
                    );
                }
            }
        }
    }
    if !saw_path {
        return VerdictReport::vacuous(check, instance_ref, ReasonCode::NoPathOfLengthTwo);
    }
    VerdictReport::pass(check, instance_ref)
}

/// Diameter-one conclusion for bounded semilattices with a largest
/// nonzero d satisfying d*d = 0. Idempotence makes the candidate scan
/// come up empty, so the expected verdict is NOT_APPLICABLE.
pub fn verify_semilattice_prop(
    s: &BoundedSemilattice,
    inst: &LabeledFunction,
    instance_ref: &str,
) -> VerdictReport {
    let check = CheckId::SemilatticeDiameterOne;
    match s.find_largest_d() {
        Err(_) | Ok(LargestD::NoNilpotent) => {
            VerdictReport::not_applicable(check, instance_ref, ReasonCode::NoNilpotent)
        }
        Ok(LargestD::NoUniqueMaximum) => {
            VerdictReport::not_applicable(check, instance_ref, ReasonCode::NoUniqueMaximum)
        }
        Ok(LargestD::Found(d)) => {
            let g = inst.build_graph();
            if g.vertex_count() < 2 {
                return VerdictReport::vacuous(
                    check,
                    instance_ref,
                    ReasonCode::FewerThanTwoVertices,
                );
            }
            if g.diameter() == Diameter::Finite(1) {
                VerdictReport::pass_with(
                    check,
                    instance_ref,
                    Witness::NilpotentMaximum {
                        d: s.base().label(d).to_string(),
                    },
                )
            } else {
                VerdictReport::fail(check, instance_ref, distant_pair(&g))
            }
        }
    }
}

/// Diameter exactly one for the residual graph of a module whose scalars
/// have a unique maximal ideal squaring to zero.
pub fn verify_maximal_ideal_cor(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let check = CheckId::NilpotentMaximalIdealDiameter;
    let instance = owner.qualified_name();
    match nilpotent_maximal_ideal(owner.scalars(), caps)? {
        Err(reason) => Ok(VerdictReport::not_applicable(check, instance, reason)),
        Ok(maximal) => {
            let g = gamma_residual(owner, caps)?;
            if g.vertex_count() < 2 {
                return Ok(VerdictReport::not_applicable(
                    check,
                    instance,
                    ReasonCode::FewerThanTwoVertices,
                ));
            }
            if g.diameter() == Diameter::Finite(1) {
                Ok(VerdictReport::pass_with(
                    check,
                    instance,
                    Witness::NilpotentMaximum {
                        d: maximal.render(),
                    },
                ))
            } else {
                Ok(VerdictReport::fail(check, instance, distant_pair(&g)))
            }
        }
    }
}

/// The three residuation laws, exhaustively over all submodule pairs:
/// every residual is an ideal, residual products land in the residual of
/// the intersection, and residuation is monotone.
pub fn verify_residual_laws(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let check = CheckId::ResidualIdealLaws;
    let instance = owner.qualified_name();
    let scalars = owner.scalars();
    let subs = submodules(owner, caps)?;
    let mut residuals = Vec::with_capacity(subs.len());
    for sub in &subs {
        let raw = algebra::residual_set(owner, sub.elements());
        match Ideal::new(scalars.clone(), raw) {
            Ok(ideal) => residuals.push(ideal),
            Err(err) => {
                return Ok(VerdictReport::fail(
                    check,
                    instance,
                    Witness::ResidualViolation {
                        clause: "ideal".into(),
                        p: sub.render(),
                        q: sub.render(),
                        element: err.to_string(),
                    },
                ))
            }
        }
    }
    for i in 0..subs.len() {
        for j in i..subs.len() {
            let product = ideal_product(&residuals[i], &residuals[j])?;
            let meet: BTreeSet<usize> = subs[i]
                .elements()
                .intersection(subs[j].elements())
                .copied()
                .collect();
            let residual_of_meet = algebra::residual_set(owner, &meet);
            if let Some(stray) = product
                .elements()
                .iter()
                .find(|s| !residual_of_meet.contains(s))
            {
                return Ok(VerdictReport::fail(
                    check,
                    instance,
                    Witness::ResidualViolation {
                        clause: "product".into(),
                        p: subs[i].render(),
                        q: subs[j].render(),
                        element: scalars.label(*stray).to_string(),
                    },
                ));
            }
        }
    }
    for i in 0..subs.len() {
        for j in 0..subs.len() {
            if !subs[i].elements().is_subset(subs[j].elements()) {
                continue;
            }
            if let Some(stray) = residuals[i]
                .elements()
                .iter()
                .find(|s| !residuals[j].elements().contains(s))
            {
                return Ok(VerdictReport::fail(
                    check,
                    instance,
                    Witness::ResidualViolation {
                        clause: "monotone".into(),
                        p: subs[i].render(),
                        q: subs[j].render(),
                        element: scalars.label(*stray).to_string(),
                    },
                ));
            }
        }
    }
    Ok(VerdictReport::pass(check, instance))
}

/// Pair annihilators coincide with intersections of the singleton ones.
pub fn verify_annihilator_intersection(
    owner: &Arc<FiniteModule>,
) -> Result<VerdictReport, AlgebraError> {
    let check = CheckId::AnnihilatorIntersection;
    let instance = owner.qualified_name();
    match annihilator_pair_law(owner)? {
        None => Ok(VerdictReport::pass(check, instance)),
        Some((x, y)) => Ok(VerdictReport::fail(
            check,
            instance,
            Witness::AnnihilatorGap {
                x: owner.label(x).to_string(),
                y: owner.label(y).to_string(),
            },
        )),
    }
}

/// Diameter conclusion for the annihilator graph, gated on the
/// annihilator condition.
pub fn verify_ann_condition_diameter(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let check = CheckId::AnnihilatorConditionDiameter;
    let instance = owner.qualified_name();
    let gate = has_annihilator_condition(owner)?;
    if gate.status == Status::Fail {
        let witness = gate.witness.expect("FAIL verdicts carry witnesses");
        return Ok(VerdictReport::not_applicable_with(
            check,
            instance,
            ReasonCode::AnnihilatorConditionFailed,
            witness,
        ));
    }
    let g = gamma_ann(owner, caps)?;
    Ok(diameter_conclusion(check, &instance, &g))
}

/// Diameter conclusion for the content graph, gated on the content
/// semimodule property and content being onto the ideals.
pub fn verify_content_diameter(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let check = CheckId::ContentDiameter;
    let instance = owner.qualified_name();
    let semimodule = is_content_semimodule(owner, caps)?;
    if semimodule.status == Status::Fail {
        let witness = semimodule.witness.expect("FAIL verdicts carry witnesses");
        return Ok(VerdictReport::not_applicable_with(
            check,
            instance,
            ReasonCode::NotContentSemimodule,
            witness,
        ));
    }
    let onto = content_onto_all_ideals(owner, caps)?;
    if onto.status == Status::Fail {
        let witness = onto.witness.expect("FAIL verdicts carry witnesses");
        return Ok(VerdictReport::not_applicable_with(
            check,
            instance,
            ReasonCode::ContentNotOnto,
            witness,
        ));
    }
    let g = gamma_content(owner, caps)?;
    Ok(diameter_conclusion(check, &instance, &g))
}

/// Diameter conclusion for the residual graph; the theorem carries no
/// extra hypothesis beyond non-emptiness.
pub fn verify_residual_graph_diameter(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let check = CheckId::ResidualGraphDiameter;
    let instance = owner.qualified_name();
    let g = gamma_residual(owner, caps)?;
    Ok(diameter_conclusion(check, &instance, &g))
}

/// The residual instance as a labeled function, for the interpolation
/// route to the same conclusion.
pub fn verify_residual_interpolation(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let inst = algebra::residual_instance(owner, caps)?;
    Ok(verify_ordered_theorem(&inst, &owner.qualified_name())?)
}
