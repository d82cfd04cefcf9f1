//! Finite unital semimodules over a finite semiring: submodule lattices,
//! annihilators, residuals [N:M], and the content function.

use std::collections::BTreeSet;
use std::sync::Arc;

use super::semiring::{ideals, FiniteSemiring, Ideal};
use super::AlgebraError;
use crate::caps::Caps;
use crate::report::{CheckId, ReasonCode, VerdictReport, Witness};

/// Finite module over a semiring, given by an addition table and an action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteModule {
    name: String,
    scalars: Arc<FiniteSemiring>,
    order: usize,
    zero: usize,
    add: Vec<Vec<usize>>,
    action: Vec<Vec<usize>>,
    labels: Vec<String>,
}

impl FiniteModule {
    pub fn new(
        name: impl Into<String>,
        scalars: Arc<FiniteSemiring>,
        order: usize,
        zero: usize,
        add: Vec<Vec<usize>>,
        action: Vec<Vec<usize>>,
        labels: Option<Vec<String>>,
    ) -> Result<Arc<Self>, AlgebraError> {
        if order == 0 {
            return Err(AlgebraError::EmptyOrder);
        }
        if add.len() != order || add.iter().any(|r| r.len() != order) {
            return Err(AlgebraError::BadShape {
                table: "add",
                order,
            });
        }
        if action.len() != scalars.order() || action.iter().any(|r| r.len() != order) {
            return Err(AlgebraError::BadShape {
                table: "action",
                order,
            });
        }
        if zero >= order {
            return Err(AlgebraError::ElementOutOfRange { value: zero, order });
        }
        for (a, row) in add.iter().enumerate() {
            for (b, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(AlgebraError::EntryOutOfRange {
                        table: "add",
                        a,
                        b,
                        value: v,
                        order,
                    });
                }
            }
        }
        for (s, row) in action.iter().enumerate() {
            for (m, &v) in row.iter().enumerate() {
                if v >= order {
                    return Err(AlgebraError::EntryOutOfRange {
                        table: "action",
                        a: s,
                        b: m,
                        value: v,
                        order,
                    });
                }
            }
        }
        for a in 0..order {
            if add[zero][a] != a {
                return Err(AlgebraError::ZeroNotAddIdentity { a });
            }
            for b in a + 1..order {
                if add[a][b] != add[b][a] {
                    return Err(AlgebraError::AddNotCommutative { a, b });
                }
            }
        }
        for a in 0..order {
            for b in 0..order {
                for c in 0..order {
                    if add[add[a][b]][c] != add[a][add[b][c]] {
                        return Err(AlgebraError::AddNotAssociative { a, b, c });
                    }
                }
            }
        }
        let ns = scalars.order();
        for m in 0..order {
            if action[scalars.one()][m] != m {
                return Err(AlgebraError::OneNotActingIdentity { m });
            }
            if action[scalars.zero()][m] != zero {
                return Err(AlgebraError::ZeroScalarNotAbsorbing { m });
            }
        }
        for s in 0..ns {
            if action[s][zero] != zero {
                return Err(AlgebraError::ZeroElementNotFixed { s });
            }
        }
        for s in 0..ns {
            for m in 0..order {
                for n in 0..order {
                    if action[s][add[m][n]] != add[action[s][m]][action[s][n]] {
                        return Err(AlgebraError::ActionNotAddLinear { s, m, n });
                    }
                }
            }
        }
        for s in 0..ns {
            for t in 0..ns {
                for m in 0..order {
                    if action[scalars.add(s, t)][m] != add[action[s][m]][action[t][m]] {
                        return Err(AlgebraError::ActionNotScalarLinear { s, t, m });
                    }
                    if action[scalars.mul(s, t)][m] != action[s][action[t][m]] {
                        return Err(AlgebraError::ActionNotAssociative { s, t, m });
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
        Ok(Arc::new(FiniteModule {
            name: name.into(),
            scalars,
            order,
            zero,
            add,
            action,
            labels,
        }))
    }

    /// The semiring acting on itself by multiplication.
    pub fn regular(scalars: &Arc<FiniteSemiring>) -> Arc<Self> {
        let n = scalars.order();
        let add = (0..n)
            .map(|a| (0..n).map(|b| scalars.add(a, b)).collect())
            .collect();
        let action = (0..n)
            .map(|s| (0..n).map(|m| scalars.mul(s, m)).collect())
            .collect();
        FiniteModule::new(
            scalars.name().to_string(),
            scalars.clone(),
            n,
            scalars.zero(),
            add,
            action,
            Some(scalars.labels().to_vec()),
        )
        .expect("a semiring is a module over itself")
    }

    /// Componentwise product of two modules over the same scalars.
    pub fn product(a: &FiniteModule, b: &FiniteModule) -> Result<Arc<Self>, AlgebraError> {
        if a.scalars != b.scalars {
            return Err(AlgebraError::ScalarMismatch);
        }
        let order = a.order * b.order;
        let idx = |x: usize, y: usize| x * b.order + y;
        let mut add = vec![vec![0; order]; order];
        for xa in 0..a.order {
            for xb in 0..b.order {
                for ya in 0..a.order {
                    for yb in 0..b.order {
                        add[idx(xa, xb)][idx(ya, yb)] = idx(a.add[xa][ya], b.add[xb][yb]);
                    }
                }
            }
        }
        let ns = a.scalars.order();
        let mut action = vec![vec![0; order]; ns];
        for s in 0..ns {
            for xa in 0..a.order {
                for xb in 0..b.order {
                    action[s][idx(xa, xb)] = idx(a.action[s][xa], b.action[s][xb]);
                }
            }
        }
        let mut labels = Vec::with_capacity(order);
        for xa in 0..a.order {
            for xb in 0..b.order {
                labels.push(format!("({},{})", a.labels[xa], b.labels[xb]));
            }
        }
        FiniteModule::new(
            format!("{}x{}", a.name, b.name),
            a.scalars.clone(),
            order,
            idx(a.zero, b.zero),
            add,
            action,
            Some(labels),
        )
    }

    /// The one-element module.
    pub fn zero_module(scalars: &Arc<FiniteSemiring>) -> Arc<Self> {
        FiniteModule::new(
            "0",
            scalars.clone(),
            1,
            0,
            vec![vec![0]],
            vec![vec![0]; scalars.order()],
            Some(vec!["0".to_string()]),
        )
        .expect("the zero module is valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// "M over S" display form used in instance references.
    pub fn qualified_name(&self) -> String {
        format!("{} over {}", self.name, self.scalars.name())
    }

    pub fn scalars(&self) -> &Arc<FiniteSemiring> {
        &self.scalars
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn zero(&self) -> usize {
        self.zero
    }

    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a][b]
    }

    pub fn act(&self, s: usize, m: usize) -> usize {
        self.action[s][m]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }
}

/// Subset of a module containing zero, closed under addition and the action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Submodule {
    owner: Arc<FiniteModule>,
    elements: BTreeSet<usize>,
}

impl Submodule {
    pub fn new(owner: Arc<FiniteModule>, elements: BTreeSet<usize>) -> Result<Self, AlgebraError> {
        if !elements.contains(&owner.zero()) {
            return Err(AlgebraError::SubmoduleMissingZero);
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
                    return Err(AlgebraError::SubmoduleNotAddClosed { a, b });
                }
            }
            for s in 0..owner.scalars().order() {
                if !elements.contains(&owner.act(s, a)) {
                    return Err(AlgebraError::SubmoduleNotActionClosed { s, m: a });
                }
            }
        }
        Ok(Submodule { owner, elements })
    }

    fn trusted(owner: Arc<FiniteModule>, elements: BTreeSet<usize>) -> Self {
        debug_assert!(Submodule::new(owner.clone(), elements.clone()).is_ok());
        Submodule { owner, elements }
    }

    pub fn owner(&self) -> &Arc<FiniteModule> {
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

    pub fn render(&self) -> String {
        let parts: Vec<&str> = self
            .elements
            .iter()
            .map(|&i| self.owner.label(i))
            .collect();
        format!("{{{}}}", parts.join(","))
    }
}

fn submodule_closure(owner: &FiniteModule, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(owner.zero());
    loop {
        let mut grew = false;
        let snapshot: Vec<usize> = set.iter().copied().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                grew |= set.insert(owner.add(a, b));
            }
            for s in 0..owner.scalars().order() {
                grew |= set.insert(owner.act(s, a));
            }
        }
        if !grew {
            return set;
        }
    }
}

/// All submodules, sorted by size and then contents.
pub fn submodules(owner: &Arc<FiniteModule>, caps: &Caps) -> Result<Vec<Submodule>, AlgebraError> {
    let n = owner.order();
    if n > caps.submodule_max_order {
        return Err(AlgebraError::CapExceeded {
            what: "submodule enumeration order",
            value: n,
            cap: caps.submodule_max_order,
        });
    }
    let mut found: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    if n <= caps.submodule_scan_max_order {
        let ns = owner.scalars().order();
        for mask in 0u64..(1u64 << n) {
            if mask >> owner.zero() & 1 == 0 {
                continue;
            }
            let members: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
            let add_closed = members
                .iter()
                .all(|&a| members.iter().all(|&b| mask >> owner.add(a, b) & 1 == 1));
            let action_closed = members
                .iter()
                .all(|&a| (0..ns).all(|s| mask >> owner.act(s, a) & 1 == 1));
            if add_closed && action_closed {
                found.insert(members.into_iter().collect());
            }
        }
    } else {
        let zero_sub: BTreeSet<usize> = [owner.zero()].into();
        let mut frontier = vec![zero_sub.clone()];
        found.insert(zero_sub);
        while let Some(current) = frontier.pop() {
            for x in 0..n {
                if current.contains(&x) {
                    continue;
                }
                let mut seed = current.clone();
                seed.insert(x);
                let closed = submodule_closure(owner, &seed);
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
        .map(|elements| Submodule::trusted(owner.clone(), elements))
        .collect())
}

/// Scalars annihilating every element of the subset; always an ideal.
pub fn annihilator(
    owner: &Arc<FiniteModule>,
    subset: &BTreeSet<usize>,
) -> Result<Ideal, AlgebraError> {
    if subset.is_empty() {
        return Err(AlgebraError::EmptySubset);
    }
    for &x in subset {
        if x >= owner.order() {
            return Err(AlgebraError::ElementOutOfRange {
                value: x,
                order: owner.order(),
            });
        }
    }
    let scalars = owner.scalars();
    let elements: BTreeSet<usize> = (0..scalars.order())
        .filter(|&s| subset.iter().all(|&x| owner.act(s, x) == owner.zero()))
        .collect();
    Ideal::new(scalars.clone(), elements)
}

/// Scalars sending the whole module into the target set.
pub(crate) fn residual_set(owner: &FiniteModule, target: &BTreeSet<usize>) -> BTreeSet<usize> {
    (0..owner.scalars().order())
        .filter(|&s| (0..owner.order()).all(|m| target.contains(&owner.act(s, m))))
        .collect()
}

/// Scalars s with s.M contained in N.
pub fn residual(n: &Submodule) -> Result<Ideal, AlgebraError> {
    let owner = n.owner();
    Ideal::new(
        owner.scalars().clone(),
        residual_set(owner, n.elements()),
    )
}

/// Ideal list of the scalars plus, per ideal, the span IM (additive closure
/// of the products), plus each element's content index into the ideal list.
pub(crate) struct ContentData {
    pub ideals: Vec<Ideal>,
    pub spans: Vec<BTreeSet<usize>>,
    pub content_index: Vec<usize>,
}

pub(crate) fn content_data(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<ContentData, AlgebraError> {
    let ideal_list = ideals(owner.scalars(), caps)?;
    let spans: Vec<BTreeSet<usize>> = ideal_list
        .iter()
        .map(|ideal| span(owner, ideal))
        .collect();
    let mut content_index = Vec::with_capacity(owner.order());
    for x in 0..owner.order() {
        let mut meet: Option<BTreeSet<usize>> = None;
        for (ideal, sp) in ideal_list.iter().zip(&spans) {
            if sp.contains(&x) {
                meet = Some(match meet {
                    None => ideal.elements().clone(),
                    Some(m) => m.intersection(ideal.elements()).copied().collect(),
                });
            }
        }
        let meet = meet.expect("the unit ideal spans the whole module");
        let pos = ideal_list
            .iter()
            .position(|i| i.elements() == &meet)
            .expect("intersections of ideals are ideals");
        content_index.push(pos);
    }
    Ok(ContentData {
        ideals: ideal_list,
        spans,
        content_index,
    })
}

/// IM: additive closure of {s.m : s in I, m in M}.
fn span(owner: &FiniteModule, ideal: &Ideal) -> BTreeSet<usize> {
    let mut set: BTreeSet<usize> = [owner.zero()].into();
    for &s in ideal.elements() {
        for m in 0..owner.order() {
            set.insert(owner.act(s, m));
        }
    }
    loop {
        let mut grew = false;
        let snapshot: Vec<usize> = set.iter().copied().collect();
        for &a in &snapshot {
            for &b in &snapshot {
                grew |= set.insert(owner.add(a, b));
            }
        }
        if !grew {
            return set;
        }
    }
}

/// c(x): intersection of all ideals I with x in IM.
pub fn content(owner: &Arc<FiniteModule>, x: usize, caps: &Caps) -> Result<Ideal, AlgebraError> {
    if x >= owner.order() {
        return Err(AlgebraError::ElementOutOfRange {
            value: x,
            order: owner.order(),
        });
    }
    let data = content_data(owner, caps)?;
    Ok(data.ideals[data.content_index[x]].clone())
}

/// Content of every element, indexed like the module.
pub fn content_map(owner: &Arc<FiniteModule>, caps: &Caps) -> Result<Vec<Ideal>, AlgebraError> {
    let data = content_data(owner, caps)?;
    Ok(data
        .content_index
        .iter()
        .map(|&i| data.ideals[i].clone())
        .collect())
}

/// PASS when every pair annihilator coincides with some singleton
/// annihilator: for all x, y there is z with Ann(x,y) = Ann(z).
pub fn has_annihilator_condition(owner: &Arc<FiniteModule>) -> Result<VerdictReport, AlgebraError> {
    let instance = owner.qualified_name();
    let n = owner.order();
    let singles: Vec<Ideal> = (0..n)
        .map(|x| annihilator(owner, &[x].into()))
        .collect::<Result<_, _>>()?;
    let known: BTreeSet<&BTreeSet<usize>> = singles.iter().map(|i| i.elements()).collect();
    for x in 0..n {
        for y in x..n {
            let pair: BTreeSet<usize> = singles[x]
                .elements()
                .intersection(singles[y].elements())
                .copied()
                .collect();
            if !known.contains(&pair) {
                return Ok(VerdictReport::fail(
                    CheckId::AnnihilatorCondition,
                    instance,
                    Witness::AnnihilatorGap {
                        x: owner.label(x).to_string(),
                        y: owner.label(y).to_string(),
                    },
                ));
            }
        }
    }
    Ok(VerdictReport::pass(CheckId::AnnihilatorCondition, instance))
}

/// PASS when x lies in c(x)M for every x.
pub fn is_content_semimodule(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let instance = owner.qualified_name();
    let data = content_data(owner, caps)?;
    for x in 0..owner.order() {
        if !data.spans[data.content_index[x]].contains(&x) {
            return Ok(VerdictReport::fail(
                CheckId::ContentSemimodule,
                instance,
                Witness::ContentGap {
                    x: owner.label(x).to_string(),
                },
            ));
        }
    }
    Ok(VerdictReport::pass(CheckId::ContentSemimodule, instance))
}

/// PASS when every ideal of the scalars is the content of some element.
/// In a finite semiring every ideal is finitely generated, so the image
/// must be the whole ideal list.
pub fn content_onto_all_ideals(
    owner: &Arc<FiniteModule>,
    caps: &Caps,
) -> Result<VerdictReport, AlgebraError> {
    let instance = owner.qualified_name();
    let data = content_data(owner, caps)?;
    let image: BTreeSet<usize> = data.content_index.iter().copied().collect();
    for (i, ideal) in data.ideals.iter().enumerate() {
        if !image.contains(&i) {
            return Ok(VerdictReport::fail(
                CheckId::ContentOntoIdeals,
                instance,
                Witness::MissedIdeal {
                    ideal: ideal.render(),
                },
            ));
        }
    }
    Ok(VerdictReport::pass(CheckId::ContentOntoIdeals, instance))
}

/// Ann restricted to pair subsets equals the intersection of the singleton
/// annihilators; exposed for the harness as a cheap exhaustive law.
pub fn annihilator_pair_law(
    owner: &Arc<FiniteModule>,
) -> Result<Option<(usize, usize)>, AlgebraError> {
    let n = owner.order();
    let singles: Vec<Ideal> = (0..n)
        .map(|x| annihilator(owner, &[x].into()))
        .collect::<Result<_, _>>()?;
    for x in 0..n {
        for y in x..n {
            let pair = annihilator(owner, &[x, y].into())?;
            let meet: BTreeSet<usize> = singles[x]
                .elements()
                .intersection(singles[y].elements())
                .copied()
                .collect();
            if pair.elements() != &meet {
                return Ok(Some((x, y)));
            }
        }
    }
    Ok(None)
}

/// Reason the diameter-one corollary does not apply to a scalar semiring,
/// if any: it needs a unique maximal ideal squaring to zero.
pub fn nilpotent_maximal_ideal(
    scalars: &Arc<FiniteSemiring>,
    caps: &Caps,
) -> Result<Result<Ideal, ReasonCode>, AlgebraError> {
    let maxes = super::semiring::maximal_ideals(scalars, caps)?;
    if maxes.len() != 1 {
        return Ok(Err(ReasonCode::NoUniqueMaximalIdeal));
    }
    let m = maxes.into_iter().next().expect("checked length");
    let square = super::semiring::ideal_product(&m, &m)?;
    if square.is_zero() {
        Ok(Ok(m))
    } else {
        Ok(Err(ReasonCode::MaximalIdealSquareNonzero))
    }
}
