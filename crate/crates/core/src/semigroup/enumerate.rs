//! Exhaustive enumeration of commutative semigroups with zero, one table
//! per isomorphism class, with a node budget and a resume token.

use super::{SemigroupError, SemigroupTable};
use crate::caps::Caps;

const UNSET: usize = usize::MAX;

/// Node budget for one enumeration call; a node is one attempted cell value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumBudget {
    pub max_nodes: u64,
}

impl Default for EnumBudget {
    fn default() -> Self {
        EnumBudget {
            max_nodes: u64::MAX,
        }
    }
}

/// Where an interrupted enumeration should pick up again.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ResumeToken {
    order: usize,
    prefix: Vec<usize>,
    next: usize,
}

/// Result of one (possibly partial) enumeration run.
#[derive(Debug, Clone)]
pub struct EnumOutcome {
    pub tables: Vec<SemigroupTable>,
    pub nodes: u64,
    pub resume: Option<ResumeToken>,
}

/// Enumerate all commutative semigroups with zero of the given order, one
/// representative per isomorphism class, in a fixed deterministic order.
///
/// The zero is index 0 and its row is forced, so the search assigns only
/// cells (a, b) with 1 <= a <= b < order, pruning on partial associativity.
/// A completed table is emitted only if it is the lexicographically least
/// among its relabelings, which both deduplicates isomorphic tables and
/// keeps the output order stable.
pub fn enumerate_semigroups(
    order: usize,
    budget: &EnumBudget,
    resume: Option<&ResumeToken>,
    caps: &Caps,
) -> Result<EnumOutcome, SemigroupError> {
    if order == 0 {
        return Err(SemigroupError::EmptyOrder);
    }
    if order > caps.semigroup_enum_max_order {
        return Err(SemigroupError::CapExceeded {
            what: "semigroup enumeration order",
            value: order,
            cap: caps.semigroup_enum_max_order,
        });
    }
    if order == 1 {
        if resume.is_some() {
            return Ok(EnumOutcome {
                tables: Vec::new(),
                nodes: 0,
                resume: None,
            });
        }
        return Ok(EnumOutcome {
            tables: vec![SemigroupTable::trivial()],
            nodes: 1,
            resume: None,
        });
    }

    let cells: Vec<(usize, usize)> = (1..order)
        .flat_map(|a| (a..order).map(move |b| (a, b)))
        .collect();
    let mut table = vec![vec![UNSET; order]; order];
    for i in 0..order {
        table[0][i] = 0;
        table[i][0] = 0;
    }

    // prefix = validated assignments, one per depth; next = value to try
    // at depth prefix.len()
    let mut prefix: Vec<usize> = Vec::new();
    let mut next: usize = 0;
    if let Some(token) = resume {
        if token.order != order {
            return Err(SemigroupError::ResumeMismatch {
                expected: order,
                found: token.order,
            });
        }
        if token.prefix.len() > cells.len() || token.next > order {
            return Err(SemigroupError::ResumeCorrupt);
        }
        for (depth, &v) in token.prefix.iter().enumerate() {
            if v >= order {
                return Err(SemigroupError::ResumeCorrupt);
            }
            let (a, b) = cells[depth];
            table[a][b] = v;
            table[b][a] = v;
            if !partial_associative(&table, order) {
                return Err(SemigroupError::ResumeCorrupt);
            }
        }
        prefix = token.prefix.clone();
        next = token.next;
    }

    let mut tables = Vec::new();
    let mut nodes: u64 = 0;
    loop {
        // retreat past exhausted depths
        while next == order {
            match prefix.pop() {
                Some(v) => {
                    let (a, b) = cells[prefix.len()];
                    table[a][b] = UNSET;
                    table[b][a] = UNSET;
                    next = v + 1;
                }
                None => {
                    return Ok(EnumOutcome {
                        tables,
                        nodes,
                        resume: None,
                    });
                }
            }
        }
        if nodes == budget.max_nodes {
            return Ok(EnumOutcome {
                tables,
                nodes,
                resume: Some(ResumeToken {
                    order,
                    prefix,
                    next,
                }),
            });
        }
        nodes += 1;
        let depth = prefix.len();
        let (a, b) = cells[depth];
        table[a][b] = next;
        table[b][a] = next;
        if partial_associative(&table, order) {
            if depth + 1 == cells.len() {
                if is_canonical(&table, order) {
                    let mul = table.clone();
                    tables.push(
                        SemigroupTable::new(order, 0, mul, None)
                            .expect("search emits only valid tables"),
                    );
                }
                table[a][b] = UNSET;
                table[b][a] = UNSET;
                next += 1;
            } else {
                prefix.push(next);
                next = 0;
            }
        } else {
            table[a][b] = UNSET;
            table[b][a] = UNSET;
            next += 1;
        }
    }
}

/// Check every associativity triple whose involved products are all assigned.
fn partial_associative(table: &[Vec<usize>], order: usize) -> bool {
    for x in 0..order {
        for y in 0..order {
            let xy = table[x][y];
            if xy == UNSET {
                continue;
            }
            for z in 0..order {
                let yz = table[y][z];
                if yz == UNSET {
                    continue;
                }
                let left = table[xy][z];
                let right = table[x][yz];
                if left != UNSET && right != UNSET && left != right {
                    return false;
                }
            }
        }
    }
    true
}

/// A table is canonical when no relabeling fixing 0 yields a smaller
/// flattened table.
fn is_canonical(table: &[Vec<usize>], order: usize) -> bool {
    let mut perm: Vec<usize> = (0..order).collect();
    loop {
        if !next_permutation(&mut perm[1..]) {
            return true;
        }
        let mut inv = vec![0usize; order];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        // row-major comparison of the relabeled table against the original
        'cmp: for i in 0..order {
            for j in 0..order {
                let relabeled = perm[table[inv[i]][inv[j]]];
                let original = table[i][j];
                if relabeled < original {
                    return false;
                }
                if relabeled > original {
                    break 'cmp;
                }
            }
        }
    }
}

fn next_permutation(perm: &mut [usize]) -> bool {
    let n = perm.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && perm[i - 1] >= perm[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while perm[j] <= perm[i - 1] {
        j -= 1;
    }
    perm.swap(i - 1, j);
    perm[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::super::semigroup_iso;
    use super::*;

    fn run(order: usize) -> Vec<SemigroupTable> {
        let caps = Caps::default();
        let out =
            enumerate_semigroups(order, &EnumBudget::default(), None, &caps).unwrap();
        assert!(out.resume.is_none());
        out.tables
    }

    #[test]
    fn counts_up_to_order_four() {
        assert_eq!(run(1).len(), 1);
        assert_eq!(run(2).len(), 2);
        assert_eq!(run(3).len(), 8);
        assert_eq!(run(4).len(), 39);
    }

    #[test]
    fn count_order_five() {
        assert_eq!(run(5).len(), 226);
    }

    #[test]
    fn order_two_tables_are_null_and_semilattice() {
        let tables = run(2);
        let squares: Vec<usize> = tables.iter().map(|t| t.mul(1, 1)).collect();
        assert_eq!(squares, vec![0, 1]);
    }

    #[test]
    fn no_two_emitted_tables_isomorphic() {
        for order in 2..=4 {
            let tables = run(order);
            for i in 0..tables.len() {
                for j in i + 1..tables.len() {
                    assert!(
                        semigroup_iso(&tables[i], &tables[j]).is_none(),
                        "order {} tables {} and {}",
                        order,
                        i,
                        j
                    );
                }
            }
        }
    }

    #[test]
    fn emitted_tables_revalidate() {
        for t in run(4) {
            SemigroupTable::new(t.order(), t.zero(), t.mul_table().clone(), None).unwrap();
        }
    }

    #[test]
    fn budgeted_runs_resume_to_the_same_stream() {
        let caps = Caps::default();
        let full = run(4);
        let mut collected = Vec::new();
        let mut token: Option<ResumeToken> = None;
        let budget = EnumBudget { max_nodes: 97 };
        let mut rounds = 0;
        loop {
            let out = enumerate_semigroups(4, &budget, token.as_ref(), &caps).unwrap();
            collected.extend(out.tables);
            rounds += 1;
            assert!(rounds < 10_000, "runaway resume loop");
            match out.resume {
                Some(t) => token = Some(t),
                None => break,
            }
        }
        assert!(rounds > 1, "budget never triggered");
        assert_eq!(collected, full);
    }

    #[test]
    fn zero_budget_reports_exhaustion_immediately() {
        let caps = Caps::default();
        let out = enumerate_semigroups(
            5,
            &EnumBudget { max_nodes: 0 },
            None,
            &caps,
        )
        .unwrap();
        assert!(out.tables.is_empty());
        assert_eq!(out.nodes, 0);
        assert!(out.resume.is_some());
    }

    #[test]
    fn order_above_cap_rejected() {
        let caps = Caps::default();
        let err = enumerate_semigroups(6, &EnumBudget::default(), None, &caps).unwrap_err();
        assert!(matches!(err, SemigroupError::CapExceeded { .. }));
    }

    #[test]
    fn mismatched_resume_token_rejected() {
        let caps = Caps::default();
        let out = enumerate_semigroups(
            3,
            &EnumBudget { max_nodes: 5 },
            None,
            &caps,
        )
        .unwrap();
        let token = out.resume.unwrap();
        let err =
            enumerate_semigroups(4, &EnumBudget::default(), Some(&token), &caps).unwrap_err();
        assert!(matches!(err, SemigroupError::ResumeMismatch { .. }));
    }
}
