//! The zero-product graph of a labeled function into a semigroup with zero,
//! and the two hypothesis checks that gate the diameter results.

use std::collections::BTreeSet;

use thiserror::Error;

use crate::graph::SimpleGraph;
use crate::semigroup::{OrderedSemigroup, SemigroupTable};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("duplicate domain label {0:?}")]
    DuplicateLabel(String),
    #[error("value {value} for label {label:?} out of range for order {order}")]
    ValueOutOfRange {
        label: String,
        value: usize,
        order: usize,
    },
    #[error("unknown domain label {0:?}")]
    UnknownLabel(String),
    #[error("codomain carries no partial order")]
    UnorderedCodomain,
}

/// Codomain of an instance: a bare semigroup or one with a partial order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Codomain {
    Plain(SemigroupTable),
    Ordered(OrderedSemigroup),
}

impl Codomain {
    pub fn table(&self) -> &SemigroupTable {
        match self {
            Codomain::Plain(s) => s,
            Codomain::Ordered(o) => o.base(),
        }
    }

    pub fn ordered(&self) -> Option<&OrderedSemigroup> {
        match self {
            Codomain::Ordered(o) => Some(o),
            Codomain::Plain(_) => None,
        }
    }
}

/// A finite label set X with a total map into a semigroup with zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledFunction {
    domain: Vec<String>,
    values: Vec<usize>,
    codomain: Codomain,
}

/// Outcome of the image-closure hypothesis scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ClosureCheck {
    Pass,
    /// f(x)f(y) is nonzero yet no z in X maps to it.
    Fail { x: String, y: String, product: usize },
}

/// Outcome of the order-interpolation hypothesis scan.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum InterpolationCheck {
    Pass,
    /// f(w)f(z) is nonzero yet no v in X has f(w)f(z) <= f(v) <= f(w), f(z).
    Fail { w: String, z: String, product: usize },
}

impl LabeledFunction {
    pub fn new<I>(assignments: I, codomain: Codomain) -> Result<Self, InstanceError>
    where
        I: IntoIterator<Item = (String, usize)>,
    {
        let mut pairs: Vec<(String, usize)> = assignments.into_iter().collect();
        pairs.sort_by(|a, b| a.0.cmp(&b.0));
        if let Some(w) = pairs.windows(2).find(|w| w[0].0 == w[1].0) {
            return Err(InstanceError::DuplicateLabel(w[0].0.clone()));
        }
        let order = codomain.table().order();
        for (label, value) in &pairs {
            if *value >= order {
                return Err(InstanceError::ValueOutOfRange {
                    label: label.clone(),
                    value: *value,
                    order,
                });
            }
        }
        let (domain, values) = pairs.into_iter().unzip();
        Ok(LabeledFunction {
            domain,
            values,
            codomain,
        })
    }

    /// X = S with f the identity, using the semigroup's own labels.
    pub fn identity(s: &SemigroupTable) -> Self {
        let assignments = s
            .labels()
            .iter()
            .cloned()
            .zip(0..s.order())
            .collect::<Vec<_>>();
        LabeledFunction::new(assignments, Codomain::Plain(s.clone()))
            .expect("semigroup labels are distinct and in range")
    }

    /// Identity instance over an ordered codomain.
    pub fn identity_ordered(s: &OrderedSemigroup) -> Self {
        let assignments = s
            .base()
            .labels()
            .iter()
            .cloned()
            .zip(0..s.base().order())
            .collect::<Vec<_>>();
        LabeledFunction::new(assignments, Codomain::Ordered(s.clone()))
            .expect("semigroup labels are distinct and in range")
    }

    pub fn domain(&self) -> &[String] {
        &self.domain
    }

    pub fn codomain(&self) -> &Codomain {
        &self.codomain
    }

    pub fn semigroup(&self) -> &SemigroupTable {
        self.codomain.table()
    }

    pub fn value(&self, label: &str) -> Result<usize, InstanceError> {
        self.domain
            .binary_search_by(|l| l.as_str().cmp(label))
            .map(|i| self.values[i])
            .map_err(|_| InstanceError::UnknownLabel(label.to_string()))
    }

    pub fn values(&self) -> &[usize] {
        &self.values
    }

    /// Same map on a subset of the labels.
    pub fn restrict(&self, keep: &BTreeSet<String>) -> Self {
        let assignments: Vec<(String, usize)> = self
            .domain
            .iter()
            .zip(&self.values)
            .filter(|(l, _)| keep.contains(*l))
            .map(|(l, &v)| (l.clone(), v))
            .collect();
        LabeledFunction::new(assignments, self.codomain.clone())
            .expect("restriction preserves validity")
    }

    /// Vertices are labels x with f(x) nonzero and some other label y with
    /// f(y) nonzero and f(x)f(y) = 0; edges are exactly those pairs.
    /// Distinctness is on labels, not on mapped values.
    pub fn build_graph(&self) -> SimpleGraph {
        let s = self.semigroup();
        let zero = s.zero();
        let n = self.domain.len();
        let mut edges = Vec::new();
        let mut touched: BTreeSet<String> = BTreeSet::new();
        for i in 0..n {
            if self.values[i] == zero {
                continue;
            }
            for j in i + 1..n {
                if self.values[j] == zero {
                    continue;
                }
                if s.mul(self.values[i], self.values[j]) == zero {
                    edges.push((self.domain[i].clone(), self.domain[j].clone()));
                    touched.insert(self.domain[i].clone());
                    touched.insert(self.domain[j].clone());
                }
            }
        }
        SimpleGraph::new(touched, edges).expect("edge endpoints were recorded as vertices")
    }

    /// PASS when every nonzero product of two image values is itself hit
    /// by f; x = y is allowed, so squares count.
    pub fn check_closure(&self) -> ClosureCheck {
        let s = self.semigroup();
        let zero = s.zero();
        let image: BTreeSet<usize> = self.values.iter().copied().collect();
        for i in 0..self.domain.len() {
            for j in i..self.domain.len() {
                let p = s.mul(self.values[i], self.values[j]);
                if p != zero && !image.contains(&p) {
                    return ClosureCheck::Fail {
                        x: self.domain[i].clone(),
                        y: self.domain[j].clone(),
                        product: p,
                    };
                }
            }
        }
        ClosureCheck::Pass
    }

    /// PASS when every nonzero product f(w)f(z) admits a v in X with
    /// f(w)f(z) <= f(v), f(v) <= f(w) and f(v) <= f(z).
    pub fn check_ordered_interpolation(&self) -> Result<InterpolationCheck, InstanceError> {
        let ordered = self
            .codomain
            .ordered()
            .ok_or(InstanceError::UnorderedCodomain)?;
        let s = ordered.base();
        let zero = s.zero();
        for i in 0..self.domain.len() {
            for j in i..self.domain.len() {
                let (fw, fz) = (self.values[i], self.values[j]);
                let p = s.mul(fw, fz);
                if p == zero {
                    continue;
                }
                let found = self
                    .values
                    .iter()
                    .any(|&fv| ordered.leq(p, fv) && ordered.leq(fv, fw) && ordered.leq(fv, fz));
                if !found {
                    return Ok(InterpolationCheck::Fail {
                        w: self.domain[i].clone(),
                        z: self.domain[j].clone(),
                        product: p,
                    });
                }
            }
        }
        Ok(InterpolationCheck::Pass)
    }
}

/// The classic zero-divisor graph: the identity instance's graph.
pub fn build_classic(s: &SemigroupTable) -> SimpleGraph {
    LabeledFunction::identity(s).build_graph()
}
