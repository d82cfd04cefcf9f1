//! JSON file shapes for everything the tool reads and writes, with
//! conversions into the validated core types. Path references are plain
//! strings here; resolving them against the filesystem is the caller's
//! job, so this module stays pure data.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::algebra::{AlgebraError, FiniteModule, FiniteSemiring};
use crate::gamma::{Codomain, InstanceError, LabeledFunction};
use crate::graph::{GraphError, SimpleGraph};
use crate::semigroup::{OrderedSemigroup, SemigroupError, SemigroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("duplicate domain label {0:?}")]
    DuplicateLabel(String),
    #[error("domain label {0:?} has no value under f")]
    MissingValue(String),
    #[error("f assigns {0:?}, which is not listed in the domain")]
    ExtraValue(String),
    #[error("reference points to {0:?}; load that file and resolve it first")]
    UnresolvedPath(String),
    #[error(transparent)]
    Semigroup(#[from] SemigroupError),
    #[error(transparent)]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// {"order": n, "zero": i, "mul": [[...]], "labels": [...], "leq": [[bool]]}
/// with labels and leq optional.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub order: usize,
    pub zero: usize,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub leq: Option<Vec<Vec<bool>>>,
}

impl SemigroupFile {
    pub fn to_table(&self) -> Result<SemigroupTable, FormatError> {
        Ok(SemigroupTable::new(
            self.order,
            self.zero,
            self.mul.clone(),
            self.labels.clone(),
        )?)
    }

    /// Ordered when a leq table is attached, plain otherwise.
    pub fn to_codomain(&self) -> Result<Codomain, FormatError> {
        let table = self.to_table()?;
        Ok(match &self.leq {
            Some(leq) => Codomain::Ordered(OrderedSemigroup::new(table, leq.clone())?),
            None => Codomain::Plain(table),
        })
    }

    pub fn from_table(t: &SemigroupTable) -> Self {
        SemigroupFile {
            order: t.order(),
            zero: t.zero(),
            mul: t.mul_table().clone(),
            labels: Some(t.labels().to_vec()),
            leq: None,
        }
    }

    pub fn from_ordered(o: &OrderedSemigroup) -> Self {
        SemigroupFile {
            leq: Some(o.leq_table().clone()),
            ..SemigroupFile::from_table(o.base())
        }
    }
}

/// Inline table or a path to a file holding one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemigroupRef {
    Path(String),
    Inline(SemigroupFile),
}

impl SemigroupRef {
    pub fn inline(&self) -> Result<&SemigroupFile, FormatError> {
        match self {
            SemigroupRef::Inline(f) => Ok(f),
            SemigroupRef::Path(p) => Err(FormatError::UnresolvedPath(p.clone())),
        }
    }
}

/// {"semigroup": <table or file ref>, "domain": [...], "f": {...},
/// "order": optional leq table overriding the codomain order}.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceFile {
    pub semigroup: SemigroupRef,
    pub domain: Vec<String>,
    pub f: BTreeMap<String, usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<Vec<bool>>>,
}

impl InstanceFile {
    /// Build with the semigroup data already resolved.
    pub fn to_instance_with(&self, semigroup: &SemigroupFile) -> Result<LabeledFunction, FormatError> {
        let mut seen = BTreeSet::new();
        for label in &self.domain {
            if !seen.insert(label.clone()) {
                return Err(FormatError::DuplicateLabel(label.clone()));
            }
            if !self.f.contains_key(label) {
                return Err(FormatError::MissingValue(label.clone()));
            }
        }
        for key in self.f.keys() {
            if !seen.contains(key) {
                return Err(FormatError::ExtraValue(key.clone()));
            }
        }
        let codomain = match &self.order {
            Some(leq) => {
                Codomain::Ordered(OrderedSemigroup::new(semigroup.to_table()?, leq.clone())?)
            }
            None => semigroup.to_codomain()?,
        };
        let assignments: Vec<(String, usize)> = self
            .domain
            .iter()
            .map(|l| (l.clone(), self.f[l]))
            .collect();
        Ok(LabeledFunction::new(assignments, codomain)?)
    }

    /// Build when the semigroup is inline.
    pub fn to_instance(&self) -> Result<LabeledFunction, FormatError> {
        self.to_instance_with(self.semigroup.inline()?)
    }

    pub fn from_instance(inst: &LabeledFunction) -> Self {
        let semigroup = match inst.codomain() {
            Codomain::Plain(t) => SemigroupFile::from_table(t),
            Codomain::Ordered(o) => SemigroupFile::from_ordered(o),
        };
        InstanceFile {
            semigroup: SemigroupRef::Inline(semigroup),
            domain: inst.domain().to_vec(),
            f: inst
                .domain()
                .iter()
                .zip(inst.values())
                .map(|(l, &v)| (l.clone(), v))
                .collect(),
            order: None,
        }
    }
}

/// {"vertices": [...], "edges": [[u, v], ...]}, both sorted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphFile {
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
}

impl GraphFile {
    pub fn to_graph(&self) -> Result<SimpleGraph, FormatError> {
        Ok(SimpleGraph::new(
            self.vertices.iter().cloned(),
            self.edges.clone(),
        )?)
    }

    pub fn from_graph(g: &SimpleGraph) -> Self {
        let mut edges = g.edges();
        edges.sort();
        GraphFile {
            vertices: g.labels().to_vec(),
            edges,
        }
    }
}

/// Mirrors the semigroup format with separate add and mul tables and a
/// designated one.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemiringFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub order: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl SemiringFile {
    pub fn to_semiring(&self) -> Result<Arc<FiniteSemiring>, FormatError> {
        Ok(Arc::new(FiniteSemiring::new(
            self.name.clone().unwrap_or_else(|| "semiring".to_string()),
            self.order,
            self.zero,
            self.one,
            self.add.clone(),
            self.mul.clone(),
            self.labels.clone(),
        )?))
    }

    pub fn from_semiring(s: &FiniteSemiring) -> Self {
        let n = s.order();
        let table = |op: &dyn Fn(usize, usize) -> usize| {
            (0..n).map(|a| (0..n).map(|b| op(a, b)).collect()).collect()
        };
        SemiringFile {
            name: Some(s.name().to_string()),
            order: n,
            zero: s.zero(),
            one: s.one(),
            add: table(&|a, b| s.add(a, b)),
            mul: table(&|a, b| s.mul(a, b)),
            labels: Some(s.labels().to_vec()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SemiringRef {
    Path(String),
    Inline(SemiringFile),
}

impl SemiringRef {
    pub fn inline(&self) -> Result<&SemiringFile, FormatError> {
        match self {
            SemiringRef::Inline(f) => Ok(f),
            SemiringRef::Path(p) => Err(FormatError::UnresolvedPath(p.clone())),
        }
    }
}

/// Mirrors the semigroup format with an add table and a scalar action
/// table (action[s][m]).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ModuleFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    pub scalars: SemiringRef,
    pub order: usize,
    pub zero: usize,
    pub add: Vec<Vec<usize>>,
    pub action: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ModuleFile {
    pub fn to_module_with(
        &self,
        scalars: Arc<FiniteSemiring>,
    ) -> Result<Arc<FiniteModule>, FormatError> {
        Ok(FiniteModule::new(
            self.name.clone().unwrap_or_else(|| "module".to_string()),
            scalars,
            self.order,
            self.zero,
            self.add.clone(),
            self.action.clone(),
            self.labels.clone(),
        )?)
    }

    pub fn to_module(&self) -> Result<Arc<FiniteModule>, FormatError> {
        self.to_module_with(self.scalars.inline()?.to_semiring()?)
    }

    pub fn from_module(m: &FiniteModule) -> Self {
        let n = m.order();
        let s = m.scalars();
        ModuleFile {
            name: Some(m.name().to_string()),
            scalars: SemiringRef::Inline(SemiringFile::from_semiring(s)),
            order: n,
            zero: m.zero(),
            add: (0..n)
                .map(|a| (0..n).map(|b| m.add(a, b)).collect())
                .collect(),
            action: (0..s.order())
                .map(|sc| (0..n).map(|x| m.act(sc, x)).collect())
                .collect(),
            labels: Some(m.labels().to_vec()),
        }
    }
}
