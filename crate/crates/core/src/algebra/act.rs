//! Pointed acts of a commutative monoid with zero, and the annihilator
//! instance over a union-closed family of subsets, valued in the
//! intersection semilattice of s-ideals.

use std::collections::{BTreeMap, BTreeSet};

use super::AlgebraError;
use crate::caps::Caps;
use crate::gamma::{Codomain, LabeledFunction};
use crate::graph::SimpleGraph;
use crate::semigroup::{s_ideals, OrderedSemigroup, SemigroupTable};

/// A set with a distinguished zero point, acted on by a commutative
/// monoid with zero. The scalar zero collapses everything to the point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointedAct {
    monoid: SemigroupTable,
    one: usize,
    zero_point: usize,
    act: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl PointedAct {
    pub fn new(
        monoid: SemigroupTable,
        act: Vec<Vec<usize>>,
        zero_point: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        let ns = monoid.order();
        let one = (0..ns)
            .find(|&e| (0..ns).all(|x| monoid.mul(e, x) == x))
            .ok_or_else(|| AlgebraError::ActAxiom("acting monoid has no identity".into()))?;
        if act.len() != ns {
            return Err(AlgebraError::ActAxiom(format!(
                "act table has {} rows for a monoid of order {}",
                act.len(),
                ns
            )));
        }
        let points = act.first().map_or(0, Vec::len);
        if points == 0 || act.iter().any(|r| r.len() != points) {
            return Err(AlgebraError::ActAxiom(
                "act table rows must share one nonzero length".into(),
            ));
        }
        if zero_point >= points {
            return Err(AlgebraError::ElementOutOfRange {
                value: zero_point,
                order: points,
            });
        }
        for (s, row) in act.iter().enumerate() {
            for (g, &v) in row.iter().enumerate() {
                if v >= points {
                    return Err(AlgebraError::EntryOutOfRange {
                        table: "act",
                        a: s,
                        b: g,
                        value: v,
                        order: points,
                    });
                }
            }
        }
        for g in 0..points {
            if act[one][g] != g {
                return Err(AlgebraError::ActAxiom(format!(
                    "identity scalar moves point {}",
                    g
                )));
            }
            if act[monoid.zero()][g] != zero_point {
                return Err(AlgebraError::ActAxiom(format!(
                    "zero scalar does not send point {} to the zero point",
                    g
                )));
            }
        }
        for s in 0..ns {
            if act[s][zero_point] != zero_point {
                return Err(AlgebraError::ActAxiom(format!(
                    "scalar {} moves the zero point",
                    s
                )));
            }
            for t in 0..ns {
                for g in 0..points {
                    if act[monoid.mul(s, t)][g] != act[s][act[t][g]] {
                        return Err(AlgebraError::ActAxiom(format!(
                            "(s.t).g differs from s.(t.g) at s={}, t={}, g={}",
                            s, t, g
                        )));
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() != points => {
                return Err(AlgebraError::BadLabelCount {
                    order: points,
                    count: l.len(),
                })
            }
            Some(l) => l,
            None => (0..points).map(|i| i.to_string()).collect(),
        };
        Ok(PointedAct {
            monoid,
            one,
            zero_point,
            act,
            labels,
        })
    }

    /// A monoid acting on itself by multiplication.
    pub fn self_action(monoid: &SemigroupTable) -> Result<Self, AlgebraError> {
        PointedAct::new(
            monoid.clone(),
            monoid.mul_table().to_vec(),
            monoid.zero(),
            Some(monoid.labels().to_vec()),
        )
    }

    pub fn monoid(&self) -> &SemigroupTable {
        &self.monoid
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn zero_point(&self) -> usize {
        self.zero_point
    }

    pub fn apply(&self, s: usize, g: usize) -> usize {
        self.act[s][g]
    }

    pub fn label(&self, g: usize) -> &str {
        &self.labels[g]
    }

    /// Scalars sending every point of the subset to the zero point.
    pub fn annihilator(&self, subset: &BTreeSet<usize>) -> BTreeSet<usize> {
        (0..self.monoid.order())
            .filter(|&s| subset.iter().all(|&g| self.act[s][g] == self.zero_point))
            .collect()
    }

    fn render(&self, subset: &BTreeSet<usize>) -> String {
        let parts: Vec<&str> = subset.iter().map(|&g| self.label(g)).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Intersection semilattice of all s-ideals, ordered by inclusion, with
/// the singleton zero ideal as the absorbing element.
pub fn s_ideal_semigroup(
    monoid: &SemigroupTable,
    caps: &Caps,
) -> Result<(OrderedSemigroup, Vec<BTreeSet<usize>>), AlgebraError> {
    let list = s_ideals(monoid, caps)?;
    let index: BTreeMap<&BTreeSet<usize>, usize> =
        list.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let n = list.len();
    let mut mul = vec![vec![0; n]; n];
    for i in 0..n {
        for j in i..n {
            let meet: BTreeSet<usize> = list[i].intersection(&list[j]).copied().collect();
            let k = index[&meet];
            mul[i][j] = k;
            mul[j][i] = k;
        }
    }
    let labels = list
        .iter()
        .map(|s_ideal| {
            let parts: Vec<&str> = s_ideal.iter().map(|&x| monoid.label(x)).collect();
            format!("{{{}}}", parts.join(","))
        })
        .collect();
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        for j in 0..n {
            leq[i][j] = list[i].is_subset(&list[j]);
        }
    }
    let base = SemigroupTable::new(n, 0, mul, Some(labels))?;
    let ordered = OrderedSemigroup::new(base, leq)?;
    Ok((ordered, list))
}

/// Each family member A maps to Ann(A) inside the s-ideal semilattice.
/// The family must consist of nonempty subsets and be closed under union.
pub fn act_ann_instance(
    act: &PointedAct,
    family: &[BTreeSet<usize>],
    caps: &Caps,
) -> Result<LabeledFunction, AlgebraError> {
    for (index, member) in family.iter().enumerate() {
        if member.is_empty() {
            return Err(AlgebraError::EmptyFamilyMember { index });
        }
        for &g in member {
            if g >= act.points() {
                return Err(AlgebraError::ElementOutOfRange {
                    value: g,
                    order: act.points(),
                });
            }
        }
    }
    let present: BTreeSet<&BTreeSet<usize>> = family.iter().collect();
    for p in 0..family.len() {
        for q in p + 1..family.len() {
            let union: BTreeSet<usize> = family[p].union(&family[q]).copied().collect();
            if !present.contains(&union) {
                return Err(AlgebraError::FamilyNotUnionClosed { p, q });
            }
        }
    }
    let (codomain, list) = s_ideal_semigroup(act.monoid(), caps)?;
    let index: BTreeMap<&BTreeSet<usize>, usize> =
        list.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut assignments = Vec::with_capacity(family.len());
    for member in family {
        let ann = act.annihilator(member);
        assignments.push((act.render(member), index[&ann]));
    }
    Ok(LabeledFunction::new(assignments, Codomain::Ordered(codomain))?)
}

pub fn act_ann_graph(
    act: &PointedAct,
    family: &[BTreeSet<usize>],
    caps: &Caps,
) -> Result<SimpleGraph, AlgebraError> {
    Ok(act_ann_instance(act, family, caps)?.build_graph())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn caps() -> Caps {
        Caps::default()
    }

    fn z6_self_action() -> PointedAct {
        PointedAct::self_action(&SemigroupTable::zn_multiplicative(6).unwrap()).unwrap()
    }

    fn family_on(points: &[usize]) -> Vec<BTreeSet<usize>> {
        let mut family = Vec::new();
        for mask in 1u32..(1 << points.len()) {
            family.push(
                points
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, &g)| g)
                    .collect(),
            );
        }
        family
    }

    #[test]
    fn annihilators_of_the_z6_self_action() {
        let act = z6_self_action();
        assert_eq!(
            act.annihilator(&[2].into()),
            [0usize, 3].into_iter().collect::<BTreeSet<_>>()
        );
        assert_eq!(
            act.annihilator(&[2, 3].into()),
            [0usize].into_iter().collect::<BTreeSet<_>>()
        );
    }

    #[test]
    fn z6_subset_family_gives_a_star_around_three() {
        let act = z6_self_action();
        let family = family_on(&[2, 3, 4]);
        let g = act_ann_graph(&act, &family, &caps()).unwrap();
        assert_eq!(
            g.edges(),
            vec![
                ("{2,4}".to_string(), "{3}".to_string()),
                ("{2}".to_string(), "{3}".to_string()),
                ("{3}".to_string(), "{4}".to_string()),
            ]
        );
    }

    #[test]
    fn single_member_family_has_no_edges() {
        let act = z6_self_action();
        let family = vec![(0..6).collect::<BTreeSet<usize>>()];
        let g = act_ann_graph(&act, &family, &caps()).unwrap();
        assert_eq!(g.vertex_count(), 0);
    }

    #[test]
    fn family_must_be_union_closed() {
        let act = z6_self_action();
        let family = vec![[2usize].into(), [3usize].into()];
        assert_eq!(
            act_ann_instance(&act, &family, &caps()).err(),
            Some(AlgebraError::FamilyNotUnionClosed { p: 0, q: 1 })
        );
    }

    #[test]
    fn empty_member_rejected() {
        let act = z6_self_action();
        let family = vec![BTreeSet::new()];
        assert_eq!(
            act_ann_instance(&act, &family, &caps()).err(),
            Some(AlgebraError::EmptyFamilyMember { index: 0 })
        );
    }

    #[test]
    fn self_action_requires_an_identity() {
        let null = SemigroupTable::null(3).unwrap();
        assert!(matches!(
            PointedAct::self_action(&null),
            Err(AlgebraError::ActAxiom(_))
        ));
    }

    #[test]
    fn broken_action_rejected() {
        let monoid = SemigroupTable::zn_multiplicative(4).unwrap();
        // sending the zero scalar to the wrong point
        let mut table = monoid.mul_table().to_vec();
        table[0][1] = 1;
        assert!(matches!(
            PointedAct::new(monoid, table, 0, None),
            Err(AlgebraError::ActAxiom(_))
        ));
    }

    #[test]
    fn s_ideal_semilattice_of_z6() {
        let z6 = SemigroupTable::zn_multiplicative(6).unwrap();
        let (ordered, list) = s_ideal_semigroup(&z6, &caps()).unwrap();
        assert_eq!(list.len(), 5);
        assert_eq!(ordered.base().label(0), "{0}");
        assert!(ordered.compatible());
        for i in 0..5 {
            assert_eq!(ordered.base().mul(i, i), i);
        }
    }
}
