//! Commutative semirings with identity, given by explicit tables, and
//! their ideal lattices.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::AlgebraError;
use crate::caps::Caps;

/// Finite commutative semiring with a designated zero and one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemiring {
    name: String,
    order: usize,
    zero: usize,
    one: usize,
    add: Vec<Vec<usize>>,
    mul: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl FiniteSemiring {
    pub fn new(
        name: impl Into<String>,
        order: usize,
        zero: usize,
        one: usize,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Self, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::EmptyOrder);
        }
        for (table, data) in [("add", &add), ("mul", &mul)] {
            if data.len() != order || data.iter().any(|r| r.len() != order) {
                return Err(AlgebraError::BadShape { table, order });
            }
            for a in 0..order {
                for b in 0..order {
                    if data[a][b] >= order {
                        return Err(AlgebraError::EntryOutOfRange {
                            table,
                            a,
                            b,
                            value: data[a][b],
                            order,
                        });
                    }
                }
            }
        }
        for x in [zero, one] {
            if x >= order {
                return Err(AlgebraError::ElementOutOfRange { value: x, order });
            }
        }
        for a in 0..order {
            for b in a + 1..order {
                if add[a][b] != add[b][a] {
                    return Err(AlgebraError::AddNotCommutative { a, b });
                }
                if mul[a][b] != mul[b][a] {
                    return Err(AlgebraError::MulNotCommutative { a, b });
                }
            }
        }
        for a in 0..order {
            if add[zero][a] != a {
                return Err(AlgebraError::ZeroNotAddIdentity { a });
            }
            if mul[one][a] != a {
                return Err(AlgebraError::OneNotMulIdentity { a });
            }
            if mul[zero][a] != zero {
                return Err(AlgebraError::ZeroNotMulAbsorbing { a });
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(AlgebraError::AddNotAssociative { a, b, c });
                    }
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(AlgebraError::MulNotAssociative { a, b, c });
                    }
                    if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                        return Err(AlgebraError::NotDistributive { a, b, c });
                    }
                }
            }
        }
        let labels = match labels {
            Some(l) if l.len() != order => {
                return Err(AlgebraError::BadLabelCount {
                    order,
                    count: l.len(),
                })
            }
            Some(l) => l,
            None => (0..order).map(|i| i.to_string()).collect(),
        };
        Ok(FiniteSemiring {
            name: name.into(),
            order,
            zero,
            one,
            add,
            mul,
            labels,
        })
    }

    /// The ring of integers mod n.
    pub fn zn(n: usize) -> Result<Arc<Self>, AlgebraError> {
        if n == 0 {
            return Err(AlgebraError::EmptyOrder);
        }
        let add = (0..n).map(|a| (0..n).map(|b| (a + b) % n).collect()).collect();
        let mul = (0..n).map(|a| (0..n).map(|b| a * b % n).collect()).collect();
        Ok(Arc::new(FiniteSemiring::new(
            format!("Z{}", n),
            n,
            0,
            1 % n,
            add,
            mul,
            None,
        )?))
    }

    /// The two-element boolean semiring, where 1 + 1 = 1.
    pub fn boolean() -> Arc<Self> {
        Arc::new(
            FiniteSemiring::new(
                "B",
                2,
                0,
                1,
                vec![vec![0, 1], vec![1, 1]],
                vec![vec![0, 0], vec![0, 1]],
                None,
            )
            .expect("boolean semiring is valid"),
        )
    }

    /// Componentwise product semiring.
    pub fn product(a: &FiniteSemiring, b: &FiniteSemiring) -> Arc<Self> {
        let order = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut add = vec![vec![0; order]; order];
        let mut mul = vec![vec![0; order]; order];
        let mut labels = Vec::with_capacity(order);
        for xa in 0..a.order {
            for xb in 0..b.order {
                labels.push(format!("({},{})", a.labels[xa], b.labels[xb]));
                for ya in 0..a.order {
                    for yb in 0..b.order {
                        add[idx(xa, xb)][idx(ya, yb)] = idx(a.add[xa][ya], b.add[xb][yb]);
                        mul[idx(xa, xb)][idx(ya, yb)] = idx(a.mul[xa][ya], b.mul[xb][yb]);
                    }
                }
            }
        }
        Arc::new(
            FiniteSemiring::new(
                format!("{}x{}", a.name, b.name),
                order,
                idx(a.zero, b.zero),
                idx(a.one, b.one),
                add,
                mul,
                Some(labels),
            )
            .expect("product of valid semirings is valid"),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a][b]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

/// Subset of a semiring closed under addition and external multiplication.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    owner: Arc<FiniteSemiring>,
    elements: BTreeSet<usize>,
}

impl Ideal {
    pub fn new(owner: Arc<FiniteSemiring>, elements: BTreeSet<usize>) -> Result<Self, AlgebraError> {
        if !elements.contains(&owner.zero()) {
            return Err(AlgebraError::IdealMissingZero);
        }
        for &a in &elements {
            if a >= owner.order() {
                return Err(AlgebraError::ElementOutOfRange {
                    value: a,
                    order: owner.order(),
                });
            }
        }
        for &a in &elements {
            for &b in &elements {
                if !elements.contains(&owner.add(a, b)) {
                    return Err(AlgebraError::IdealNotAddClosed { a, b });
                }
            }
            for s in 0..owner.order() {
                if !elements.contains(&owner.mul(s, a)) {
                    return Err(AlgebraError::IdealNotMulClosed { s, a });
                }
            }
        }
        Ok(Ideal { owner, elements })
    }

    /// Construct without rechecking; for values closure already guarantees.
    pub(crate) fn trusted(owner: Arc<FiniteSemiring>, elements: BTreeSet<usize>) -> Self {
        debug_assert!(Ideal::new(owner.clone(), elements.clone()).is_ok());
        Ideal { owner, elements }
    }

    pub fn owner(&self) -> &Arc<FiniteSemiring> {
        &self.owner
    }

    pub fn elements(&self) -> &BTreeSet<usize> {
        &self.elements
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.elements.len() == 1
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elements.contains(&x)
    }

    /// Display form: sorted element labels in braces.
    pub fn render(&self) -> String {
        let parts: Vec<&str> = self
            .elements
            .iter()
            .map(|&i| self.owner.label(i))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn same_owner(i: &Ideal, j: &Ideal) -> Result<(), AlgebraError> {
    if i.owner == j.owner {
        Ok(())
    } else {
        Err(AlgebraError::OwnerMismatch)
    }
}

/// Close a subset under addition and external multiplication.
pub(crate) fn ideal_closure(owner: &FiniteSemiring, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(owner.zero());
    loop {
        let mut grew = false;
        let snapshot: Vec<usize> = set.iter().copied().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                grew |= set.insert(owner.add(a, b));
            }
            for s in 0..owner.order() {
                grew |= set.insert(owner.mul(s, a));
            }
        }
        if !grew {
            return set;
        }
    }
}

/// All ideals, sorted by size and then contents.
pub fn ideals(owner: &Arc<FiniteSemiring>, caps: &Caps) -> Result<Vec<Ideal>, AlgebraError> {
    let n = owner.order();
    if n > caps.ideal_max_order {
        return Err(AlgebraError::CapExceeded {
            what: "ideal enumeration order",
            value: n,
            cap: caps.ideal_max_order,
        });
    }
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    if n <= caps.ideal_scan_max_order {
        for mask in 0u64..(1u64 << n) {
            if mask >> owner.zero() & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let add_closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> owner.add(a, b) & 1 == 1));
            let mul_closed = members
                .iter()
                .all(|&a| (0..n).all(|s| mask >> owner.mul(s, a) & 1 == 1));
            if add_closed && mul_closed {
                found.insert(members.into_iter().collect());
            }
        }
    } else {
        // grow from the zero ideal by adjoining one generator at a time
        let zero_ideal: BTreeSet<usize> = [owner.zero()].into();
        let mut frontier = vec![zero_ideal.clone()];
        found.insert(zero_ideal);
        while let Some(current) = frontier.pop() {
            for x in 0..n {
                if current.contains(&x) {
                    continue;
                }
                let mut seed = current.clone();
                seed.insert(x);
                let closed = ideal_closure(owner, &seed);
                if found.insert(closed.clone()) {
                    frontier.push(closed);
                }
            }
        }
    }
    let mut out: Vec<BTreeSet<usize>> = found.into_iter().collect();
    out.sort_by(|a, b| {
        a.len()
            .cmp(&b.len())
            .then_with(|| a.iter().collect::<Vec<_>>().cmp(&b.iter().collect::<Vec<_>>()))
    });
    Ok(out
        .into_iter()
        .map(|elements| Ideal::trusted(owner.clone(), elements))
        .collect())
}

/// Smallest ideal containing all pairwise products.
pub fn ideal_product(i: &Ideal, j: &Ideal) -> Result<Ideal, AlgebraError> {
    same_owner(i, j)?;
    let owner = i.owner.clone();
    let mut seed = BTreeSet::new();
    for &a in &i.elements {
        for &b in &j.elements {
            seed.insert(owner.mul(a, b));
        }
    }
    let elements = ideal_closure(&owner, &seed);
    Ok(Ideal::trusted(owner, elements))
}

/// Set intersection; always an ideal.
pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal, AlgebraError> {
    same_owner(i, j)?;
    let elements: BTreeSet<usize> = i.elements.intersection(&j.elements).copied().collect();
    Ok(Ideal::trusted(i.owner.clone(), elements))
}

/// Maximal proper ideals: proper ideals contained in no larger proper ideal.
pub fn maximal_ideals(owner: &Arc<FiniteSemiring>, caps: &Caps) -> Result<Vec<Ideal>, AlgebraError> {
    let all = ideals(owner, caps)?;
    let proper: Vec<&Ideal> = all.iter().filter(|i| i.len() < owner.order()).collect();
    let mut out = Vec::new();
    for i in &proper {
        let dominated = proper.iter().any(|j| {
            j.elements != i.elements && i.elements.is_subset(&j.elements)
        });
        if !dominated {
            out.push((*i).clone());
        }
    }
    Ok(out)
}
