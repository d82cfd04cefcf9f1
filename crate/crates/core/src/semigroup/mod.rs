//! Finite commutative semigroups with zero as validated Cayley tables,
//! plus the ordered and semilattice refinements built on top of them.

mod enumerate;
mod iso;

pub use enumerate::{enumerate_semigroups, EnumBudget, EnumOutcome, ResumeToken};
pub use iso::{automorphisms, semigroup_iso};

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

use crate::caps::Caps;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemigroupError {
    #[error("a semigroup with zero needs at least one element")]
    EmptyOrder,
    #[error("mul table row {row} has length {len}, expected {order}")]
    BadShape { order: usize, row: usize, len: usize },
    #[error("zero index {zero} out of range for order {order}")]
    ZeroOutOfRange { zero: usize, order: usize },
    #[error("mul[{a}][{b}] = {value} out of range for order {order}")]
    IndexOutOfRange {
        a: usize,
        b: usize,
        value: usize,
        order: usize,
    },
    #[error("not commutative: mul[{a}][{b}] differs from mul[{b}][{a}]")]
    NotCommutative { a: usize, b: usize },
    #[error("not associative at ({a}, {b}, {c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("zero does not absorb element {a}")]
    ZeroNotAbsorbing { a: usize },
    #[error("expected {order} labels, got {count}")]
    BadLabelCount { order: usize, count: usize },
    #[error("duplicate label {label:?}")]
    DuplicateLabel { label: String },
    #[error("leq is not reflexive at {a}")]
    OrderNotReflexive { a: usize },
    #[error("leq is not antisymmetric on ({a}, {b})")]
    OrderNotAntisymmetric { a: usize, b: usize },
    #[error("leq is not transitive on ({a}, {b}, {c})")]
    OrderNotTransitive { a: usize, b: usize, c: usize },
    #[error("leq relation must be {order}x{order}")]
    BadOrderShape { order: usize },
    #[error("element {a} is not idempotent")]
    NotIdempotent { a: usize },
    #[error("element {one} is not an identity (fails on {a})")]
    NotIdentity { one: usize, a: usize },
    #[error("{what} {value} exceeds cap {cap}")]
    CapExceeded {
        what: &'static str,
        value: usize,
        cap: usize,
    },
    #[error("operation needs order >= {need}, got {order}")]
    OrderTooSmall { order: usize, need: usize },
    #[error("resume token does not match this search (expected order {expected}, token has {found})")]
    ResumeMismatch { expected: usize, found: usize },
    #[error("resume token encodes an inconsistent partial table")]
    ResumeCorrupt,
}

/// Cayley table of a finite commutative semigroup with an absorbing zero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SemigroupTable {
    order: usize,
    zero: usize,
    mul: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl SemigroupTable {
    /// Validate raw Cayley data, reporting the first violated axiom with a witness.
    pub fn new(
        order: usize,
        zero: usize,
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, SemigroupError> {
        if order == 0 {
            return Err(SemigroupError::EmptyOrder);
        }
        if zero >= order {
            return Err(SemigroupError::ZeroOutOfRange { zero, order });
        }
        if mul.len() != order {
            return Err(SemigroupError::BadShape {
                order,
                row: mul.len(),
                len: 0,
            });
        }
        for (row, r) in mul.iter().enumerate() {
            if r.len() != order {
                return Err(SemigroupError::BadShape {
                    order,
                    row,
                    len: r.len(),
                });
            }
        }
        for a in 0..order {
            for b in 0..order {
                let v = mul[a][b];
                if v >= order {
                    return Err(SemigroupError::IndexOutOfRange {
                        a,
                        b,
                        value: v,
                        order,
                    });
                }
            }
        }
        for a in 0..order {
            for b in a + 1..order {
                if mul[a][b] != mul[b][a] {
                    return Err(SemigroupError::NotCommutative { a, b });
                }
            }
        }
        for a in 0..order {
            if mul[zero][a] != zero {
                return Err(SemigroupError::ZeroNotAbsorbing { a });
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(SemigroupError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) => {
                if l.len() != order {
                    return Err(SemigroupError::BadLabelCount {
                        order,
                        count: l.len(),
                    });
                }
                let mut seen = BTreeSet::new();
                for name in &l {
                    if !seen.insert(name.clone()) {
                        return Err(SemigroupError::DuplicateLabel {
                            label: name.clone(),
                        });
                    }
                }
                l
            }
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        Ok(SemigroupTable {
            order,
            zero,
            mul,
            labels,
        })
    }

    /// The multiplicative semigroup (Zn, ·) with zero 0.
    pub fn zn_multiplicative(n: usize) -> Result<Self, SemigroupError> {
        if n == 0 {
            return Err(SemigroupError::EmptyOrder);
        }
        let mul = (0..n)
            .map(|a| (0..n).map(|b| a * b % n).collect())
            .collect();
        SemigroupTable::new(n, 0, mul, None)
    }

    /// The one-element semigroup {0}.
    pub fn trivial() -> Self {
        SemigroupTable::new(1, 0, vec![vec![0]], None).expect("trivial table is valid")
    }

    /// Order-n semigroup where every product is zero.
    pub fn null(n: usize) -> Result<Self, SemigroupError> {
        if n == 0 {
            return Err(SemigroupError::EmptyOrder);
        }
        SemigroupTable::new(n, 0, vec![vec![0; n]; n], None)
    }

    /// Componentwise product with elements labeled "(a,b)".
    pub fn direct_product(a: &SemigroupTable, b: &SemigroupTable) -> Self {
        let order = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut mul = vec![vec![0; order]; order];
        for xa in 0..a.order {
            for xb in 0..b.order {
                for ya in 0..a.order {
                    for yb in 0..b.order {
                        mul[idx(xa, xb)][idx(ya, yb)] = idx(a.mul[xa][ya], b.mul[xb][yb]);
                    }
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for x in 0..a.order {
            for y in 0..b.order {
                labels.push(format!("({},{})", a.labels[x], b.labels[y]));
            }
        }
        let zero = idx(a.zero, b.zero);
        SemigroupTable::new(order, zero, mul, Some(labels))
            .expect("product of valid tables is valid")
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn mul_table(&self) -> &Vec<Vec<usize>> {
        &self.mul
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    /// Same semigroup with elements renamed so the zero sits at index 0.
    pub fn normalized(&self) -> Self {
        if self.zero == 0 {
            return self.clone();
        }
        // swap indices 0 and zero
        let swap = |i: usize| {
            if i == 0 {
                self.zero
            } else if i == self.zero {
                0
            } else {
                i
            }
        };
        let mul = (0..self.order)
            .map(|a| {
                (0..self.order)
                    .map(|b| swap(self.mul[swap(a)][swap(b)]))
                    .collect()
            })
            .collect();
        let labels = (0..self.order)
            .map(|i| self.labels[swap(i)].clone())
            .collect();
        SemigroupTable::new(self.order, 0, mul, Some(labels)).expect("relabeling preserves axioms")
    }

    /// First non-idempotent element, if any.
    pub fn non_idempotent_witness(&self) -> Option<usize> {
        (0..self.order).find(|&a| self.mul[a][a] != a)
    }

    /// Replace display labels, keeping the table.
    pub fn with_labels(&self, labels: Vec<String>) -> Result<Self, SemigroupError> {
        SemigroupTable::new(self.order, self.zero, self.mul.clone(), Some(labels))
    }
}

impl fmt::Display for SemigroupTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "order {} zero {}", self.order, self.zero)?;
        for row in &self.mul {
            let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
            writeln!(f, "  {}", cells.join(" "))?;
        }
        Ok(())
    }
}

/// Witness that compatibility fails: a <= b but ac !<= bc.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CompatibilityGap {
    pub a: usize,
    pub b: usize,
    pub c: usize,
}

/// Witness that positivity fails: 0 < a, 0 < b but not 0 < ab.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PositivityGap {
    pub a: usize,
    pub b: usize,
}

/// Semigroup together with a partial order; the compatibility and
/// positivity flags are recomputed at construction and carry witnesses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrderedSemigroup {
    base: SemigroupTable,
    leq: Vec<Vec<bool>>,
    compatible: bool,
    compatibility_gap: Option<CompatibilityGap>,
    positive: bool,
    positivity_gap: Option<PositivityGap>,
}

impl OrderedSemigroup {
    pub fn new(base: SemigroupTable, leq: Vec<Vec<bool>>) -> Result<Self, SemigroupError> {
        let n = base.order();
        if leq.len() != n || leq.iter().any(|r| r.len() != n) {
            return Err(SemigroupError::BadOrderShape { order: n });
        }
        for a in 0..n {
            if !leq[a][a] {
                return Err(SemigroupError::OrderNotReflexive { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if a != b && leq[a][b] && leq[b][a] {
                    return Err(SemigroupError::OrderNotAntisymmetric { a, b });
                }
            }
        }
        for a in 0..n {
            for b in 0..n {
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if leq[b][c] && !leq[a][c] {
                        return Err(SemigroupError::OrderNotTransitive { a, b, c });
                    }
                }
            }
        }
        let mut compatibility_gap = None;
        'compat: for a in 0..n {
            for b in 0..n {
                if !leq[a][b] {
                    continue;
                }
                for c in 0..n {
                    if !leq[base.mul(a, c)][base.mul(b, c)] {
                        compatibility_gap = Some(CompatibilityGap { a, b, c });
                        break 'compat;
                    }
                }
            }
        }
        let zero = base.zero();
        let strictly_positive = |x: usize| x != zero && leq[zero][x];
        let mut positivity_gap = None;
        'pos: for a in 0..n {
            if !strictly_positive(a) {
                continue;
            }
            for b in 0..n {
                if strictly_positive(b) && !strictly_positive(base.mul(a, b)) {
                    positivity_gap = Some(PositivityGap { a, b });
                    break 'pos;
                }
            }
        }
        Ok(OrderedSemigroup {
            compatible: compatibility_gap.is_none(),
            positive: positivity_gap.is_none(),
            base,
            leq,
            compatibility_gap,
            positivity_gap,
        })
    }

    pub fn base(&self) -> &SemigroupTable {
        &self.base
    }

    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a][b]
    }

    pub fn leq_table(&self) -> &Vec<Vec<bool>> {
        &self.leq
    }

    pub fn compatible(&self) -> bool {
        self.compatible
    }

    pub fn compatibility_gap(&self) -> Option<CompatibilityGap> {
        self.compatibility_gap
    }

    pub fn positive(&self) -> bool {
        self.positive
    }

    pub fn positivity_gap(&self) -> Option<PositivityGap> {
        self.positivity_gap
    }
}

/// Order an idempotent semigroup by x <= y iff xy = x.
pub fn natural_order(s: &SemigroupTable) -> Result<OrderedSemigroup, SemigroupError> {
    if let Some(a) = s.non_idempotent_witness() {
        return Err(SemigroupError::NotIdempotent { a });
    }
    let n = s.order();
    let leq = (0..n)
        .map(|a| (0..n).map(|b| s.mul(a, b) == a).collect())
        .collect();
    OrderedSemigroup::new(s.clone(), leq)
}

/// Idempotent commutative monoid with absorbing zero and identity one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedSemilattice {
    base: SemigroupTable,
    one: usize,
}

/// Result of scanning a bounded semilattice for the largest nilpotent
/// element outside {0, 1}.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LargestD {
    Found(usize),
    NoNilpotent,
    NoUniqueMaximum,
}

impl BoundedSemilattice {
    pub fn new(base: SemigroupTable, one: usize) -> Result<Self, SemigroupError> {
        let n = base.order();
        if one >= n {
            return Err(SemigroupError::IndexOutOfRange {
                a: one,
                b: one,
                value: one,
                order: n,
            });
        }
        if let Some(a) = base.non_idempotent_witness() {
            return Err(SemigroupError::NotIdempotent { a });
        }
        for a in 0..n {
            if base.mul(one, a) != a {
                return Err(SemigroupError::NotIdentity { one, a });
            }
        }
        Ok(BoundedSemilattice { base, one })
    }

    /// Subsets of {1..k} under intersection; zero is the empty set.
    pub fn subset_meet(k: usize, caps: &Caps) -> Result<Self, SemigroupError> {
        if k > caps.subset_semilattice_max_exponent {
            return Err(SemigroupError::CapExceeded {
                what: "subset semilattice exponent",
                value: k,
                cap: caps.subset_semilattice_max_exponent,
            });
        }
        let order = 1usize << k;
        let mul = (0..order)
            .map(|a| (0..order).map(|b| a & b).collect())
            .collect();
        let labels = (0..order).map(|m| subset_label(m, k)).collect();
        let base = SemigroupTable::new(order, 0, mul, Some(labels))?;
        BoundedSemilattice::new(base, order - 1)
    }

    /// Total order 0 < 1 < ... < n-1 with product min.
    pub fn chain(n: usize) -> Result<Self, SemigroupError> {
        if n == 0 {
            return Err(SemigroupError::EmptyOrder);
        }
        let mul = (0..n)
            .map(|a| (0..n).map(|b| a.min(b)).collect())
            .collect();
        let base = SemigroupTable::new(n, 0, mul, None)?;
        BoundedSemilattice::new(base, n - 1)
    }

    pub fn base(&self) -> &SemigroupTable {
        &self.base
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// The induced order as an OrderedSemigroup.
    pub fn ordered(&self) -> OrderedSemigroup {
        natural_order(&self.base).expect("semilattice is idempotent")
    }

    /// Look for the largest element d of S - {0, 1} with d(squared) = 0.
    ///
    /// Idempotence forces d*d = d, so a nonzero d never qualifies; the
    /// scan exists to make that emptiness checkable rather than assumed.
    pub fn find_largest_d(&self) -> Result<LargestD, SemigroupError> {
        let n = self.base.order();
        if n < 2 {
            return Err(SemigroupError::OrderTooSmall { order: n, need: 2 });
        }
        let zero = self.base.zero();
        let middle: Vec<usize> = (0..n).filter(|&x| x != zero && x != self.one).collect();
        let nilpotent: Vec<usize> = middle
            .iter()
            .copied()
            .filter(|&d| self.base.mul(d, d) == zero)
            .collect();
        if nilpotent.is_empty() {
            return Ok(LargestD::NoNilpotent);
        }
        // x <= d in the induced order iff xd = x
        for &d in &nilpotent {
            if middle.iter().all(|&m| self.base.mul(m, d) == m) {
                return Ok(LargestD::Found(d));
            }
        }
        Ok(LargestD::NoUniqueMaximum)
    }
}

fn subset_label(mask: usize, k: usize) -> String {
    let parts: Vec<String> = (0..k)
        .filter(|i| mask >> i & 1 == 1)
        .map(|i| (i + 1).to_string())
        .collect();
    format!("{{{}}}", parts.join(","))
}

/// All subsets I with zero in I and S·I inside I, sorted by size then contents.
pub fn s_ideals(s: &SemigroupTable, caps: &Caps) -> Result<Vec<BTreeSet<usize>>, SemigroupError> {
    let n = s.order();
    let mut found: BTreeSet<Vec<usize>> = BTreeSet::new();
    if n <= caps.s_ideal_scan_max_order {
        for mask in 0u64..(1u64 << n) {
            if mask >> s.zero() & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let closed = members
                .iter()
                .all(|&a| (0..n).all(|t| mask >> s.mul(t, a) & 1 == 1));
            if closed {
                found.insert(members);
            }
        }
    } else {
        // every s-ideal is a union of principal ones, and unions of
        // s-ideals are s-ideals, so close the principals under union
        let mut principals: BTreeSet<Vec<u64>> = BTreeSet::new();
        let words = n.div_ceil(64);
        let set_bit = |bits: &mut Vec<u64>, i: usize| bits[i / 64] |= 1 << (i % 64);
        for a in 0..n {
            let mut bits = vec![0u64; words];
            set_bit(&mut bits, s.zero());
            set_bit(&mut bits, a);
            for t in 0..n {
                set_bit(&mut bits, s.mul(t, a));
            }
            principals.insert(bits);
        }
        let mut all: BTreeSet<Vec<u64>> = principals.clone();
        let mut frontier: Vec<Vec<u64>> = all.iter().cloned().collect();
        while let Some(cur) = frontier.pop() {
            for p in &principals {
                let merged: Vec<u64> = cur.iter().zip(p).map(|(x, y)| x | y).collect();
                if all.insert(merged.clone()) {
                    if all.len() > caps.s_ideal_max_count {
                        return Err(SemigroupError::CapExceeded {
                            what: "s-ideal count",
                            value: all.len(),
                            cap: caps.s_ideal_max_count,
                        });
                    }
                    frontier.push(merged);
                }
            }
        }
        for bits in all {
            let members: Vec<usize> = (0..n)
                .filter(|&i| bits[i / 64] >> (i % 64) & 1 == 1)
                .collect();
            found.insert(members);
        }
    }
    let mut out: Vec<Vec<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));
    Ok(out.into_iter().map(|v| v.into_iter().collect()).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> SemigroupTable {
        SemigroupTable::zn_multiplicative(n).unwrap()
    }

    #[test]
    fn z6_is_valid_and_has_expected_products() {
        let s = z(6);
        assert_eq!(s.mul(2, 3), 0);
        assert_eq!(s.mul(2, 4), 2);
        assert_eq!(s.zero(), 0);
    }

    #[test]
    fn zero_order_rejected() {
        assert_eq!(
            SemigroupTable::zn_multiplicative(0),
            Err(SemigroupError::EmptyOrder)
        );
    }

    #[test]
    fn non_absorbing_zero_rejected() {
        // 0*1 = 1 breaks absorption
        let err = SemigroupTable::new(2, 0, vec![vec![0, 1], vec![1, 1]], None).unwrap_err();
        assert_eq!(err, SemigroupError::ZeroNotAbsorbing { a: 1 });
    }

    #[test]
    fn two_element_semilattice_is_valid() {
        let s = SemigroupTable::new(2, 0, vec![vec![0, 0], vec![0, 1]], None).unwrap();
        assert_eq!(s.mul(1, 1), 1);
    }

    #[test]
    fn commutativity_violation_reported() {
        let err = SemigroupTable::new(
            3,
            0,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 0]],
            None,
        )
        .unwrap_err();
        assert_eq!(err, SemigroupError::NotCommutative { a: 1, b: 2 });
    }

    #[test]
    fn associativity_violation_reported() {
        // commutative and zero-absorbing but (1*1)*2 != 1*(1*2)
        let err = SemigroupTable::new(
            3,
            0,
            vec![vec![0, 0, 0], vec![0, 2, 0], vec![0, 0, 2]],
            None,
        )
        .unwrap_err();
        assert!(matches!(err, SemigroupError::NotAssociative { .. }));
    }

    #[test]
    fn normalized_moves_zero_to_front() {
        // relabel Z4 so zero sits at index 2, then normalize back
        let s = z(4);
        let perm = [2usize, 1, 0, 3]; // new index of old element
        let mul = (0..4)
            .map(|a| {
                (0..4)
                    .map(|b| {
                        let inv = |i: usize| perm.iter().position(|&p| p == i).unwrap();
                        perm[s.mul(inv(a), inv(b))]
                    })
                    .collect()
            })
            .collect();
        let shuffled = SemigroupTable::new(4, 2, mul, None).unwrap();
        let normal = shuffled.normalized();
        assert_eq!(normal.zero(), 0);
        assert!(semigroup_iso(&normal, &s).is_some());
    }

    #[test]
    fn direct_product_zero_absorbs() {
        let p = SemigroupTable::direct_product(&z(2), &z(2));
        assert_eq!(p.order(), 4);
        assert_eq!(p.zero(), 0);
        // (1,0)*(0,1) = (0,0)
        assert_eq!(p.mul(2, 1), 0);
        assert_eq!(p.label(3), "(1,1)");
    }

    #[test]
    fn natural_order_on_subsets_is_inclusion() {
        let caps = Caps::default();
        let sl = BoundedSemilattice::subset_meet(2, &caps).unwrap();
        let ord = sl.ordered();
        for a in 0..4usize {
            for b in 0..4usize {
                assert_eq!(ord.leq(a, b), a & b == a, "masks {} {}", a, b);
            }
        }
        assert!(ord.compatible());
        // {1} and {2} are strictly positive yet meet to the empty set
        assert!(!ord.positive());
        assert_eq!(ord.positivity_gap(), Some(PositivityGap { a: 1, b: 2 }));
    }

    #[test]
    fn chain_order_is_compatible_and_positive() {
        let ord = BoundedSemilattice::chain(4).unwrap().ordered();
        assert!(ord.compatible());
        assert!(ord.positive());
        assert!(ord.leq(1, 3));
        assert!(!ord.leq(3, 1));
    }

    #[test]
    fn natural_order_rejects_non_idempotent() {
        assert_eq!(
            natural_order(&z(6)),
            Err(SemigroupError::NotIdempotent { a: 2 })
        );
    }

    #[test]
    fn trivial_semigroup_orders_itself() {
        let ord = natural_order(&SemigroupTable::trivial()).unwrap();
        assert!(ord.leq(0, 0));
        assert!(ord.compatible());
        assert!(ord.positive());
    }

    #[test]
    fn find_largest_d_reports_no_nilpotent() {
        let caps = Caps::default();
        let sl = BoundedSemilattice::subset_meet(2, &caps).unwrap();
        assert_eq!(sl.find_largest_d().unwrap(), LargestD::NoNilpotent);
        let chain = BoundedSemilattice::chain(3).unwrap();
        assert_eq!(chain.find_largest_d().unwrap(), LargestD::NoNilpotent);
        let two = BoundedSemilattice::chain(2).unwrap();
        assert_eq!(two.find_largest_d().unwrap(), LargestD::NoNilpotent);
    }

    #[test]
    fn find_largest_d_needs_two_elements() {
        let one = BoundedSemilattice::chain(1).unwrap();
        assert_eq!(
            one.find_largest_d(),
            Err(SemigroupError::OrderTooSmall { order: 1, need: 2 })
        );
    }

    #[test]
    fn s_ideals_of_z6() {
        let caps = Caps::default();
        let ideals = s_ideals(&z(6), &caps).unwrap();
        let as_vecs: Vec<Vec<usize>> = ideals
            .iter()
            .map(|s| s.iter().copied().collect())
            .collect();
        assert_eq!(
            as_vecs,
            vec![
                vec![0],
                vec![0, 3],
                vec![0, 2, 4],
                vec![0, 2, 3, 4],
                vec![0, 1, 2, 3, 4, 5],
            ]
        );
    }

    #[test]
    fn s_ideals_closed_under_intersection() {
        let caps = Caps::default();
        for n in 2..=10 {
            let ideals = s_ideals(&z(n), &caps).unwrap();
            for a in &ideals {
                for b in &ideals {
                    let meet: BTreeSet<usize> = a.intersection(b).copied().collect();
                    assert!(ideals.contains(&meet), "Z{}  {:?} cap {:?}", n, a, b);
                }
            }
        }
    }

    #[test]
    fn s_ideals_scan_and_closure_agree() {
        let mut tight = Caps::default();
        tight.s_ideal_scan_max_order = 4; // force the closure path for Z6..Z8
        let caps = Caps::default();
        for n in [6usize, 7, 8] {
            assert_eq!(s_ideals(&z(n), &caps).unwrap(), s_ideals(&z(n), &tight).unwrap());
        }
    }

    #[test]
    fn subset_meet_labels_and_bounds() {
        let caps = Caps::default();
        let sl = BoundedSemilattice::subset_meet(2, &caps).unwrap();
        assert_eq!(sl.base().label(0), "{}");
        assert_eq!(sl.base().label(3), "{1,2}");
        assert_eq!(sl.one(), 3);
        let err = BoundedSemilattice::subset_meet(11, &caps).unwrap_err();
        assert!(matches!(err, SemigroupError::CapExceeded { .. }));
    }

    #[test]
    fn subset_meet_zero_exponent_is_trivial() {
        let caps = Caps::default();
        let sl = BoundedSemilattice::subset_meet(0, &caps).unwrap();
        assert_eq!(sl.base().order(), 1);
        assert_eq!(sl.one(), 0);
    }
}
