//! Ideal semigroups of a semiring and the labeled functions they induce:
//! annihilator, content, and residual instances over a module.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use super::module::{annihilator, content_data, residual, submodules, FiniteModule};
use super::semiring::{ideal_intersection, ideal_product, ideals, FiniteSemiring, Ideal};
use super::AlgebraError;
use crate::caps::Caps;
use crate::gamma::{Codomain, LabeledFunction};
use crate::graph::SimpleGraph;
use crate::semigroup::{OrderedSemigroup, SemigroupTable};

/// Binary operation turning the ideal list into a semigroup.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOp {
    Product,
    Intersection,
}

/// Semigroup of all ideals under the chosen operation, ordered by
/// inclusion. The zero ideal sorts first and is the absorbing element.
pub fn ideal_semigroup(
    scalars: &Arc<FiniteSemiring>,
    op: IdealOp,
    caps: &Caps,
) -> Result<OrderedSemigroup, AlgebraError> {
    let list = ideals(scalars, caps)?;
    let index: BTreeMap<_, usize> = list
        .iter()
        .enumerate()
        .map(|(i, ideal)| (ideal.elements().clone(), i))
        .collect();
    let n = list.len();
    let mut mul = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let result = match op {
                IdealOp::Product => ideal_product(&list[i], &list[j])?,
                IdealOp::Intersection => ideal_intersection(&list[i], &list[j])?,
            };
            let k = index[result.elements()];
            mul[i][j] = k;
            mul[j][i] = k;
        }
    }
    let labels = list.iter().map(Ideal::render).collect();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = list[i].elements().is_subset(list[j].elements());
        }
    }
    let base = SemigroupTable::new(n, 0, mul, Some(labels))?;
    Ok(OrderedSemigroup::new(base, leq)?)
}

fn ideal_index(scalars: &Arc<FiniteSemiring>, caps: &Caps) -> Result<IdealIndex, AlgebraError> {
    let list = ideals(scalars, caps)?;
    let index = list
        .iter()
        .enumerate()
        .map(|(i, ideal)| (ideal.elements().clone(), i))
        .collect();
    Ok(IdealIndex { index })
}

struct IdealIndex {
    index: BTreeMap<BTreeSet<usize>, usize>,
}

impl IdealIndex {
    fn of(&self, ideal: &Ideal) -> usize {
        self.index[ideal.elements()]
    }
}

/// x maps to Ann(x) inside the intersection semigroup of ideals.
pub fn ann_instance(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<LabeledFunction, AlgebraError> {
    let codomain = ideal_semigroup(owner.scalars(), IdealOp::Intersection, caps)?;
    let lookup = ideal_index(owner.scalars(), caps)?;
    let mut assignments = Vec::with_capacity(owner.order());
    for x in 0..owner.order() {
        let ann = annihilator(owner, &[x].into())?;
        assignments.push((owner.label(x).to_string(), lookup.of(&ann)));
    }
    Ok(LabeledFunction::new(assignments, Codomain::Ordered(codomain))?)
}

/// x maps to its content c(x) inside the product semigroup of ideals.
pub fn content_instance(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<LabeledFunction, AlgebraError> {
    let codomain = ideal_semigroup(owner.scalars(), IdealOp::Product, caps)?;
    let data = content_data(owner, caps)?;
    let assignments = (0..owner.order())
        .map(|x| (owner.label(x).to_string(), data.content_index[x]))
        .collect::<Vec<_>>();
    Ok(LabeledFunction::new(assignments, Codomain::Ordered(codomain))?)
}

/// Each submodule N maps to the residual [N:M] inside the product
/// semigroup of ideals; domain labels are the submodule renders.
pub fn residual_instance(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<LabeledFunction, AlgebraError> {
    let codomain = ideal_semigroup(owner.scalars(), IdealOp::Product, caps)?;
    let lookup = ideal_index(owner.scalars(), caps)?;
    let subs = submodules(owner, caps)?;
    let mut assignments = Vec::with_capacity(subs.len());
    for sub in &subs {
        let quotient = residual(sub)?;
        assignments.push((sub.render(), lookup.of(&quotient)));
    }
    Ok(LabeledFunction::new(assignments, Codomain::Ordered(codomain))?)
}

pub fn gamma_ann(owner: &Arc<FiniteModule>, caps: &Caps) -> Result<SimpleGraph, AlgebraError> {
    Ok(ann_instance(owner, caps)?.build_graph())
}

pub fn gamma_content(owner: &Arc<FiniteModule>, caps: &Caps) -> Result<SimpleGraph, AlgebraError> {
    Ok(content_instance(owner, caps)?.build_graph())
}

pub fn gamma_residual(owner: &Arc<FiniteModule>, caps: &Caps) -> Result<SimpleGraph, AlgebraError> {
    Ok(residual_instance(owner, caps)?.build_graph())
}
