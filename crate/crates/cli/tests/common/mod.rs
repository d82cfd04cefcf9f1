//! Brute-force oracles for the acceptance gate. Each helper recomputes its
//! quantity from first principles so the library paths under test are
//! audited by independent code instead of by themselves.

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use zdg_core::graph::{random_graph, SimpleGraph};
use zdg_core::semigroup::SemigroupTable;

pub fn lex_pair(a: String, b: String) -> (String, String) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Edge set of a graph as lexicographically normalized label pairs.
pub fn edge_set(g: &SimpleGraph) -> BTreeSet<(String, String)> {
    g.edges().into_iter().map(|(u, v)| lex_pair(u, v)).collect()
}

/// Zero-product graph of (Zn, *) rebuilt by scanning every product mod n:
/// an edge per unordered nonzero pair multiplying to zero, vertices being
/// exactly the edge endpoints.
pub fn modular_gamma(n: usize) -> (BTreeSet<String>, BTreeSet<(String, String)>) {
    let mut vertices = BTreeSet::new();
    let mut edges = BTreeSet::new();
    for x in 1..n {
        for y in 1..n {
            if x != y && x * y % n == 0 {
                vertices.insert(x.to_string());
                vertices.insert(y.to_string());
                edges.insert(lex_pair(x.to_string(), y.to_string()));
            }
        }
    }
    (vertices, edges)
}

/// All-pairs shortest path lengths by Floyd-Warshall, indexed like the
/// sorted label list.
pub fn floyd_warshall(g: &SimpleGraph) -> Vec<Vec<Option<u32>>> {
    let labels = g.labels();
    let n = labels.len();
    let mut dist = vec![vec![None; n]; n];
    for (i, row) in dist.iter_mut().enumerate() {
        row[i] = Some(0);
    }
    for (u, v) in g.edges() {
        let i = labels.iter().position(|l| *l == u).unwrap();
        let j = labels.iter().position(|l| *l == v).unwrap();
        dist[i][j] = Some(1);
        dist[j][i] = Some(1);
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if let (Some(a), Some(b)) = (dist[i][k], dist[k][j]) {
                    if dist[i][j].map_or(true, |d| a + b < d) {
                        dist[i][j] = Some(a + b);
                    }
                }
            }
        }
    }
    dist
}

/// Diameter read off the Floyd-Warshall table: None for fewer than two
/// vertices, Some(None) for a disconnected pair, Some(Some(d)) otherwise.
pub fn oracle_diameter(g: &SimpleGraph) -> Option<Option<u32>> {
    let dist = floyd_warshall(g);
    let n = dist.len();
    if n < 2 {
        return None;
    }
    let mut max = 0;
    for row in &dist {
        for d in row {
            match d {
                None => return Some(None),
                Some(d) => max = max.max(*d),
            }
        }
    }
    Some(Some(max))
}

/// Shortest alternate route between the endpoints of a deleted edge, by
/// breadth-first search over the remaining adjacency. A cycle through
/// {u, v} has length exactly this plus one; None means the edge is a
/// bridge and lies on no cycle at all.
pub fn dist_without_edge(g: &SimpleGraph, u: &str, v: &str) -> Option<u32> {
    let adj = g.adjacency();
    let empty = Vec::new();
    let mut seen: BTreeSet<&str> = BTreeSet::new();
    seen.insert(u);
    let mut frontier: Vec<&str> = vec![u];
    let mut depth = 0u32;
    while !frontier.is_empty() {
        depth += 1;
        let mut next: Vec<&str> = Vec::new();
        for cur in frontier {
            for nb in adj.get(cur).unwrap_or(&empty) {
                if cur == u && nb == v {
                    continue;
                }
                if nb == v {
                    return Some(depth);
                }
                if seen.insert(nb) {
                    next.push(nb);
                }
            }
        }
        frontier = next;
    }
    None
}

pub fn edge_on_cycle(g: &SimpleGraph, u: &str, v: &str) -> bool {
    dist_without_edge(g, u, v).is_some()
}

/// Count of nonzero elements squaring to zero, straight off the table.
pub fn nilpotent_count(s: &SemigroupTable) -> usize {
    (0..s.order())
        .filter(|&d| d != s.zero() && s.mul(d, d) == s.zero())
        .count()
}

/// Deterministic graph sample: sizes up to max_n, edge density uniform.
pub fn seeded_graphs(count: usize, max_n: usize, seed: u64) -> Vec<SimpleGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.gen_range(0..=max_n);
            let p = rng.gen::<f64>();
            random_graph(n, p, &mut rng)
        })
        .collect()
}
