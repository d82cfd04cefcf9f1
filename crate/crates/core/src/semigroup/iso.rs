//! Brute-force semigroup isomorphism with cheap invariant pruning.

use super::SemigroupTable;

/// Profile of one element, invariant under isomorphism: how often its row
/// hits zero, whether it is idempotent, whether it squares to zero, and
/// the multiset of row-entry multiplicities.
fn profiles(s: &SemigroupTable) -> Vec<(usize, bool, bool, Vec<usize>)> {
    let n = s.order();
    (0..n)
        .map(|a| {
            let zero_hits = (0..n).filter(|&b| s.mul(a, b) == s.zero()).count();
            let idempotent = s.mul(a, a) == a;
            let nilpotent = s.mul(a, a) == s.zero();
            let mut counts = vec![0usize; n];
            for b in 0..n {
                counts[s.mul(a, b)] += 1;
            }
            counts.sort_unstable();
            counts.retain(|&c| c > 0);
            (zero_hits, idempotent, nilpotent, counts)
        })
        .collect()
}

/// Find a multiplication-preserving bijection sending a's zero to b's zero,
/// or None. The map is returned as new-index-per-old-index.
pub fn semigroup_iso(a: &SemigroupTable, b: &SemigroupTable) -> Option<Vec<usize>> {
    let mut found = None;
    search(a, b, true, &mut |map| {
        found = Some(map.to_vec());
    });
    found
}

/// All automorphisms of s, identity first, in lexicographic order.
pub fn automorphisms(s: &SemigroupTable) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    search(s, s, false, &mut |map| {
        out.push(map.to_vec());
    });
    out
}

fn search(
    a: &SemigroupTable,
    b: &SemigroupTable,
    stop_at_first: bool,
    emit: &mut dyn FnMut(&[usize]),
) {
    let n = a.order();
    if n != b.order() {
        return;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    {
        let mut sa = pa.clone();
        let mut sb = pb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return;
        }
    }
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    map[a.zero()] = b.zero();
    used[b.zero()] = true;
    let order: Vec<usize> = (0..n).filter(|&x| x != a.zero()).collect();
    extend(a, b, &pa, &pb, &order, 0, &mut map, &mut used, stop_at_first, emit);
}

#[allow(clippy::too_many_arguments)]
fn extend(
    a: &SemigroupTable,
    b: &SemigroupTable,
    pa: &[(usize, bool, bool, Vec<usize>)],
    pb: &[(usize, bool, bool, Vec<usize>)],
    order: &[usize],
    depth: usize,
    map: &mut [usize],
    used: &mut [bool],
    stop_at_first: bool,
    emit: &mut dyn FnMut(&[usize]),
) -> bool {
    if depth == order.len() {
        emit(map);
        return stop_at_first;
    }
    let x = order[depth];
    for y in 0..b.order() {
        if used[y] || pa[x] != pb[y] {
            continue;
        }
        // products with already-mapped elements must commute with the map
        let consistent = map.iter().enumerate().all(|(u, &mu)| {
            if mu == usize::MAX {
                return true;
            }
            let prod = map[a.mul(x, u)];
            prod == usize::MAX || prod == b.mul(y, mu)
        });
        if !consistent {
            continue;
        }
        map[x] = y;
        used[y] = true;
        if extend(a, b, pa, pb, order, depth + 1, map, used, stop_at_first, emit) {
            return true;
        }
        map[x] = usize::MAX;
        used[y] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: usize) -> SemigroupTable {
        SemigroupTable::zn_multiplicative(n).unwrap()
    }

    #[test]
    fn identical_tables_are_isomorphic() {
        let s = z(6);
        let map = semigroup_iso(&s, &s).unwrap();
        assert_eq!(map[0], 0);
    }

    #[test]
    fn null_and_semilattice_of_order_two_differ() {
        let null = SemigroupTable::null(2).unwrap();
        let sl = SemigroupTable::new(2, 0, vec![vec![0, 0], vec![0, 1]], None).unwrap();
        assert!(semigroup_iso(&null, &sl).is_none());
    }

    #[test]
    fn relabeled_table_is_isomorphic() {
        // swap elements 2 and 3 of Z6
        let s = z(6);
        let perm = [0usize, 1, 3, 2, 4, 5];
        let mul = (0..6)
            .map(|i| (0..6).map(|j| perm[s.mul(perm[i], perm[j])]).collect())
            .collect();
        let relabeled = SemigroupTable::new(6, 0, mul, None).unwrap();
        let map = semigroup_iso(&s, &relabeled).unwrap();
        for i in 0..6 {
            for j in 0..6 {
                assert_eq!(map[s.mul(i, j)], relabeled.mul(map[i], map[j]));
            }
        }
    }

    #[test]
    fn automorphisms_preserve_products() {
        let autos = automorphisms(&z(8));
        for map in &autos {
            assert_eq!(map[0], 0);
            for i in 0..8 {
                for j in 0..8 {
                    assert_eq!(map[i * j % 8], map[i] * map[j] % 8);
                }
            }
        }
        assert!(autos.iter().any(|m| (0..8).all(|i| m[i] == i)));
    }

    #[test]
    fn z4_has_trivial_automorphism_group() {
        let autos = automorphisms(&z(4));
        assert_eq!(autos.len(), 1);
    }

    #[test]
    fn null_semigroup_automorphisms_are_all_nonzero_permutations() {
        let autos = automorphisms(&SemigroupTable::null(4).unwrap());
        assert_eq!(autos.len(), 6);
    }
}
