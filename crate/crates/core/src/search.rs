//! Budgeted search over a semigroup catalog for instances whose graph
//! realizes a target, and for extremal instances probing how far the
//! diameter can stretch once the image-closure hypothesis is dropped.
//!
//! The space is partitioned into (semigroup, domain size) cells scanned in
//! a fixed order; within a cell, assignments are enumerated as value
//! multisets reduced modulo semigroup automorphisms, so relabelings of the
//! same instance are never explored twice. A negative answer is only ever
//! "impossible" when a sound structural filter applies or the whole space
//! was covered; running out of budget is a distinct outcome that carries
//! the frontier.

use std::collections::BTreeMap;

use itertools::Itertools;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::caps::Caps;
use crate::gamma::{ClosureCheck, Codomain, InterpolationCheck, LabeledFunction};
use crate::graph::{iso_check, Diameter, GraphError, SimpleGraph};
use crate::semigroup::{
    enumerate_semigroups, natural_order, automorphisms, BoundedSemilattice, EnumBudget,
    SemigroupError, SemigroupTable,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("search needs max_order >= 2 and max_domain >= 1")]
    BadCaps,
    #[error("realization targets are capped at 8 vertices, got {0}")]
    TargetTooLarge(usize),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Node limit for one search call; a node is one candidate assignment
/// evaluated against the target or predicate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchBudget {
    pub max_nodes: u64,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_nodes: u64::MAX,
        }
    }
}

fn default_true() -> bool {
    true
}

/// What to scan: catalog size, domain cap, budget, and whether the sound
/// structural filters may shortcut the scan.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchSpec {
    /// Largest semigroup order admitted into the catalog.
    pub max_order: usize,
    /// Largest domain size |X| tried.
    pub max_domain: usize,
    /// Recorded in outputs; exploration order is fixed and does not
    /// consume randomness.
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub budget: SearchBudget,
    /// Off means pure exhaustion, used to cross-check that the filters
    /// never reject a realizable target.
    #[serde(default = "default_true")]
    pub structural_filters: bool,
    #[serde(default)]
    pub caps: Caps,
}

impl SearchSpec {
    pub fn new(max_order: usize, max_domain: usize, seed: u64) -> Self {
        SearchSpec {
            max_order,
            max_domain,
            seed,
            budget: SearchBudget::default(),
            structural_filters: true,
            caps: Caps::default(),
        }
    }

    fn validate(&self) -> Result<(), SearchError> {
        if self.max_order < 2 || self.max_domain < 1 {
            return Err(SearchError::BadCaps);
        }
        Ok(())
    }
}

/// How far a stopped search got.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Frontier {
    pub cells_done: usize,
    pub cells_total: usize,
    pub nodes: u64,
}

/// A verified realization: rebuilding the graph from the assignments and
/// running the isomorphism check again reproduces `mapping`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub semigroup_name: String,
    pub semigroup: SemigroupTable,
    /// Domain label to semigroup element index.
    pub assignments: BTreeMap<String, usize>,
    /// Built-graph vertex to target vertex.
    pub mapping: BTreeMap<String, String>,
    pub nodes: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ImpossibleGrounds {
    /// No graph built here ever has an isolated vertex, so a target with
    /// one is unrealizable outright.
    IsolatedVertex { vertex: String },
    /// The whole catalog-and-domain space was scanned without a witness.
    SpaceExhausted { cells: usize, nodes: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RealizeOutcome {
    Witness(Realization),
    Impossible(ImpossibleGrounds),
    /// Budget ran out before the space was covered.
    Exhausted(Frontier),
}

/// Property an extremal instance must exhibit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ExtremalPredicate {
    Disconnected,
    DiameterAtLeast { bound: u32 },
}

/// One matching instance, re-verified, with the hypothesis flags that
/// locate it relative to the connectivity theorem.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalHit {
    pub semigroup_name: String,
    pub semigroup: SemigroupTable,
    pub assignments: BTreeMap<String, usize>,
    pub connected: bool,
    pub diameter: Option<u32>,
    pub closure_pass: bool,
    /// None when the semigroup has no compatible natural partial order.
    pub interpolation_pass: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtremalOutcome {
    pub hits: Vec<ExtremalHit>,
    pub frontier: Frontier,
    /// True when every cell was scanned within budget.
    pub complete: bool,
}

fn catalog(spec: &SearchSpec) -> Result<Vec<(String, SemigroupTable)>, SearchError> {
    let mut out = Vec::new();
    for n in 2..=spec.max_order {
        out.push((format!("Z{}", n), SemigroupTable::zn_multiplicative(n)?));
    }
    for k in 1..=usize::BITS as usize {
        if (1usize << k) > spec.max_order {
            break;
        }
        let s = BoundedSemilattice::subset_meet(k, &spec.caps)?;
        out.push((format!("subset_meet({})", k), s.base().clone()));
    }
    for n in 2..=spec.max_order {
        let s = BoundedSemilattice::chain(n)?;
        out.push((format!("chain({})", n), s.base().clone()));
    }
    let enum_cap = spec.max_order.min(spec.caps.semigroup_enum_max_order);
    for order in 2..=enum_cap {
        let outcome = enumerate_semigroups(order, &EnumBudget::default(), None, &spec.caps)?;
        for (i, table) in outcome.tables.into_iter().enumerate() {
            out.push((format!("enum(order={})#{}", order, i), table));
        }
    }
    Ok(out)
}

/// Keep only the lexicographically smallest image of the multiset under
/// the automorphism group, so equivalent assignments cost one node.
fn canonical(combo: &[usize], auts: &[Vec<usize>]) -> bool {
    auts.iter().all(|a| {
        let mut mapped: Vec<usize> = combo.iter().map(|&v| a[v]).collect();
        mapped.sort_unstable();
        mapped.as_slice() >= combo
    })
}

fn assignments_for(combo: &[usize]) -> Vec<(String, usize)> {
    combo
        .iter()
        .enumerate()
        .map(|(i, &v)| (format!("x{}", i), v))
        .collect()
}

fn instance_for(combo: &[usize], table: &SemigroupTable) -> LabeledFunction {
    LabeledFunction::new(assignments_for(combo), Codomain::Plain(table.clone()))
        .expect("generated labels are distinct and values in range")
}

/// Scan for an instance whose graph is isomorphic to `target`.
pub fn search_realization(
    target: &SimpleGraph,
    spec: &SearchSpec,
) -> Result<RealizeOutcome, SearchError> {
    spec.validate()?;
    let target_n = target.vertex_count();
    if target_n > 8 {
        return Err(SearchError::TargetTooLarge(target_n));
    }
    if spec.structural_filters {
        for label in target.labels() {
            if target.degree(label)? == 0 {
                return Ok(RealizeOutcome::Impossible(
                    ImpossibleGrounds::IsolatedVertex {
                        vertex: label.clone(),
                    },
                ));
            }
        }
    }
    let min_domain = if spec.structural_filters {
        target_n.max(1)
    } else {
        1
    };
    let catalog = catalog(spec)?;
    let mut cells = Vec::new();
    for ci in 0..catalog.len() {
        for k in min_domain..=spec.max_domain {
            cells.push((ci, k));
        }
    }
    let cells_total = cells.len();
    let mut nodes = 0u64;
    for (cells_done, &(ci, k)) in cells.iter().enumerate() {
        let (name, table) = &catalog[ci];
        let auts = automorphisms(table);
        for combo in (0..table.order()).combinations_with_replacement(k) {
            if !canonical(&combo, &auts) {
                continue;
            }
            if nodes == spec.budget.max_nodes {
                return Ok(RealizeOutcome::Exhausted(Frontier {
                    cells_done,
                    cells_total,
                    nodes,
                }));
            }
            nodes += 1;
            let g = instance_for(&combo, table).build_graph();
            if g.vertex_count() != target_n || g.edge_count() != target.edge_count() {
                continue;
            }
            if iso_check(&g, target, &spec.caps)?.is_none() {
                continue;
            }
            let rebuilt = instance_for(&combo, table).build_graph();
            let mapping = iso_check(&rebuilt, target, &spec.caps)?
                .expect("rebuild of a matching candidate matches again");
            return Ok(RealizeOutcome::Witness(Realization {
                semigroup_name: name.clone(),
                semigroup: table.clone(),
                assignments: assignments_for(&combo).into_iter().collect(),
                mapping,
                nodes,
            }));
        }
    }
    Ok(RealizeOutcome::Impossible(
        ImpossibleGrounds::SpaceExhausted {
            cells: cells_total,
            nodes,
        },
    ))
}

fn matches_predicate(g: &SimpleGraph, predicate: ExtremalPredicate) -> bool {
    match predicate {
        ExtremalPredicate::Disconnected => !g.is_connected(),
        ExtremalPredicate::DiameterAtLeast { bound } => match g.diameter() {
            Diameter::Finite(d) => g.is_connected() && d >= bound,
            _ => false,
        },
    }
}

fn hit_for(
    name: &str,
    table: &SemigroupTable,
    combo: &[usize],
    g: &SimpleGraph,
) -> ExtremalHit {
    let inst = instance_for(combo, table);
    let closure_pass = inst.check_closure() == ClosureCheck::Pass;
    let interpolation_pass = natural_order(table).ok().map(|ordered| {
        let inst = LabeledFunction::new(assignments_for(combo), Codomain::Ordered(ordered))
            .expect("generated labels are distinct and values in range");
        inst.check_ordered_interpolation()
            .expect("codomain is ordered")
            == InterpolationCheck::Pass
    });
    ExtremalHit {
        semigroup_name: name.to_string(),
        semigroup: table.clone(),
        assignments: assignments_for(combo).into_iter().collect(),
        connected: g.is_connected(),
        diameter: match g.diameter() {
            Diameter::Finite(d) => Some(d),
            _ => None,
        },
        closure_pass,
        interpolation_pass,
    }
}

/// Collect every instance in the space whose non-empty graph satisfies the
/// predicate, with closure and interpolation flags attached.
pub fn search_extremal(
    predicate: ExtremalPredicate,
    spec: &SearchSpec,
) -> Result<ExtremalOutcome, SearchError> {
    spec.validate()?;
    let catalog = catalog(spec)?;
    let mut cells = Vec::new();
    for ci in 0..catalog.len() {
        for k in 1..=spec.max_domain {
            cells.push((ci, k));
        }
    }
    let cells_total = cells.len();
    let mut nodes = 0u64;
    let mut hits = Vec::new();
    for (cells_done, &(ci, k)) in cells.iter().enumerate() {
        let (name, table) = &catalog[ci];
        let auts = automorphisms(table);
        for combo in (0..table.order()).combinations_with_replacement(k) {
            if !canonical(&combo, &auts) {
                continue;
            }
            if nodes == spec.budget.max_nodes {
                return Ok(ExtremalOutcome {
                    hits,
                    frontier: Frontier {
                        cells_done,
                        cells_total,
                        nodes,
                    },
                    complete: false,
                });
            }
            nodes += 1;
            let g = instance_for(&combo, table).build_graph();
            if g.vertex_count() == 0 || !matches_predicate(&g, predicate) {
                continue;
            }
            let regraph = instance_for(&combo, table).build_graph();
            debug_assert!(matches_predicate(&regraph, predicate));
            hits.push(hit_for(name, table, &combo, &regraph));
        }
    }
    Ok(ExtremalOutcome {
        hits,
        frontier: Frontier {
            cells_done: cells_total,
            cells_total,
            nodes,
        },
        complete: true,
    })
}
