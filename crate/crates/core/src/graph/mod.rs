//! Finite simple undirected graphs with stable string labels, plus the
//! metric, bridge, core, and short-cycle machinery the checks quantify over.

mod export;
mod iso;

pub use export::to_dot;
pub use iso::iso_check;

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use rand::Rng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("unknown edge {0:?} -- {1:?}")]
    UnknownEdge(String, String),
    #[error("self loop on {0:?}")]
    SelfLoop(String),
    #[error("duplicate vertex {0:?}")]
    DuplicateVertex(String),
    #[error("cycle length bound must be 3 or 4, got {0}")]
    BadCycleBound(usize),
    #[error("graph has {got} vertices, isomorphism check capped at {cap}")]
    IsoCapExceeded { got: usize, cap: usize },
}

/// Diameter of a graph, with the degenerate cases kept distinct.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Diameter {
    /// Fewer than two vertices: no pair to measure.
    Undefined,
    Finite(u32),
    Infinite,
}

impl Diameter {
    pub fn is_at_most(&self, bound: u32) -> bool {
        matches!(self, Diameter::Finite(d) if *d <= bound)
    }
}

/// Simple undirected graph; vertices are sorted labels, adjacency is by index.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimpleGraph {
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new<V, E>(vertices: V, edges: E) -> Result<Self, GraphError>
    where
        V: IntoIterator,
        V::Item: Into<String>,
        E: IntoIterator<Item = (String, String)>,
    {
        let mut labels: Vec<String> = vertices.into_iter().map(Into::into).collect();
        labels.sort();
        if let Some(w) = labels.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0].clone()));
        }
        let mut g = SimpleGraph {
            adj: vec![BTreeSet::new(); labels.len()],
            labels,
        };
        for (u, v) in edges {
            let ui = g.index_of(&u)?;
            let vi = g.index_of(&v)?;
            if ui == vi {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[ui].insert(vi);
            g.adj[vi].insert(ui);
        }
        Ok(g)
    }

    pub fn empty() -> Self {
        SimpleGraph {
            labels: Vec::new(),
            adj: Vec::new(),
        }
    }

    fn index_of(&self, label: &str) -> Result<usize, GraphError> {
        self.labels
            .binary_search_by(|l| l.as_str().cmp(label))
            .map_err(|_| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|n| n.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn has_vertex(&self, label: &str) -> bool {
        self.index_of(label).is_ok()
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        match (self.index_of(u), self.index_of(v)) {
            (Ok(ui), Ok(vi)) => self.adj[ui].contains(&vi),
            _ => false,
        }
    }

    /// Edges as label pairs, each pair sorted, the list sorted.
    pub fn edges(&self) -> Vec<(String, String)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                out.push((self.labels[u].clone(), self.labels[v].clone()));
            }
        }
        out.sort();
        out
    }

    pub fn neighbors(&self, label: &str) -> Result<BTreeSet<String>, GraphError> {
        let i = self.index_of(label)?;
        Ok(self.adj[i].iter().map(|&j| self.labels[j].clone()).collect())
    }

    pub fn degree(&self, label: &str) -> Result<usize, GraphError> {
        Ok(self.adj[self.index_of(label)?].len())
    }

    fn bfs(&self, start: usize, skip: Option<(usize, usize)>) -> Vec<Option<u32>> {
        let mut dist = vec![None; self.labels.len()];
        let mut queue = VecDeque::new();
        dist[start] = Some(0);
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].expect("queued vertices have distances");
            for &v in &self.adj[u] {
                if let Some((a, b)) = skip {
                    if (u, v) == (a, b) || (u, v) == (b, a) {
                        continue;
                    }
                }
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Shortest-path edge count, None when no path exists.
    pub fn distance(&self, u: &str, v: &str) -> Result<Option<u32>, GraphError> {
        let ui = self.index_of(u)?;
        let vi = self.index_of(v)?;
        Ok(self.bfs(ui, None)[vi])
    }

    pub fn is_connected(&self) -> bool {
        if self.labels.len() < 2 {
            return true;
        }
        self.bfs(0, None).iter().all(|d| d.is_some())
    }

    pub fn diameter(&self) -> Diameter {
        let n = self.labels.len();
        if n < 2 {
            return Diameter::Undefined;
        }
        let mut max = 0;
        for start in 0..n {
            for d in self.bfs(start, None) {
                match d {
                    None => return Diameter::Infinite,
                    Some(d) => max = max.max(d),
                }
            }
        }
        Diameter::Finite(max)
    }

    /// Length of a shortest cycle, None for forests.
    ///
    /// Every cycle through an edge survives as a path once that edge is
    /// removed, so min over edges of (distance without the edge) + 1.
    pub fn girth(&self) -> Option<u32> {
        let mut best: Option<u32> = None;
        for (u, nbrs) in self.adj.iter().enumerate() {
            for &v in nbrs.iter().filter(|&&v| v > u) {
                if let Some(d) = self.bfs(u, Some((u, v)))[v] {
                    let cycle = d + 1;
                    best = Some(best.map_or(cycle, |b| b.min(cycle)));
                }
            }
        }
        best
    }

    /// All edges whose removal disconnects their component, sorted.
    pub fn bridges(&self) -> Vec<(String, String)> {
        let n = self.labels.len();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![usize::MAX; n];
        let mut out = Vec::new();
        let mut timer = 0;
        for start in 0..n {
            if disc[start] == usize::MAX {
                self.bridge_dfs(start, usize::MAX, &mut timer, &mut disc, &mut low, &mut out);
            }
        }
        let mut labeled: Vec<(String, String)> = out
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = if self.labels[u] <= self.labels[v] {
                    (u, v)
                } else {
                    (v, u)
                };
                (self.labels[a].clone(), self.labels[b].clone())
            })
            .collect();
        labeled.sort();
        labeled
    }

    fn bridge_dfs(
        &self,
        u: usize,
        parent: usize,
        timer: &mut usize,
        disc: &mut [usize],
        low: &mut [usize],
        out: &mut Vec<(usize, usize)>,
    ) {
        disc[u] = *timer;
        low[u] = *timer;
        *timer += 1;
        for &v in &self.adj[u] {
            if disc[v] == usize::MAX {
                self.bridge_dfs(v, u, timer, disc, low, out);
                low[u] = low[u].min(low[v]);
                if low[v] > disc[u] {
                    out.push((u, v));
                }
            } else if v != parent {
                low[u] = low[u].min(disc[v]);
            }
        }
    }

    /// Largest subgraph in which every edge lies on a cycle: the non-bridge
    /// edges together with their endpoints.
    pub fn core(&self) -> SimpleGraph {
        let bridges: BTreeSet<(String, String)> = self.bridges().into_iter().collect();
        let edges: Vec<(String, String)> = self
            .edges()
            .into_iter()
            .filter(|e| !bridges.contains(e))
            .collect();
        let vertices: BTreeSet<String> = edges
            .iter()
            .flat_map(|(u, v)| [u.clone(), v.clone()])
            .collect();
        SimpleGraph::new(vertices, edges).expect("core edges reuse existing vertices")
    }

    pub fn common_neighbors(&self, a: &str, b: &str) -> Result<BTreeSet<String>, GraphError> {
        let ai = self.index_of(a)?;
        let bi = self.index_of(b)?;
        Ok(self.adj[ai]
            .intersection(&self.adj[bi])
            .map(|&i| self.labels[i].clone())
            .collect())
    }

    /// Find a cycle of length 3 (or 4 when allowed) through the edge, as a
    /// label list; None when no such cycle exists.
    pub fn edge_in_short_cycle(
        &self,
        u: &str,
        v: &str,
        max_len: usize,
    ) -> Result<Option<Vec<String>>, GraphError> {
        if max_len != 3 && max_len != 4 {
            return Err(GraphError::BadCycleBound(max_len));
        }
        let ui = self.index_of(u)?;
        let vi = self.index_of(v)?;
        if !self.adj[ui].contains(&vi) {
            return Err(GraphError::UnknownEdge(u.to_string(), v.to_string()));
        }
        if let Some(&w) = self.adj[ui].intersection(&self.adj[vi]).next() {
            return Ok(Some(vec![
                self.labels[ui].clone(),
                self.labels[vi].clone(),
                self.labels[w].clone(),
            ]));
        }
        if max_len == 4 {
            for &c in self.adj[vi].iter().filter(|&&c| c != ui) {
                for &d in self.adj[ui].iter().filter(|&&d| d != vi && d != c) {
                    if self.adj[c].contains(&d) {
                        return Ok(Some(vec![
                            self.labels[ui].clone(),
                            self.labels[vi].clone(),
                            self.labels[c].clone(),
                            self.labels[d].clone(),
                        ]));
                    }
                }
            }
        }
        Ok(None)
    }

    /// Same graph without one edge; used by oracles and fault injection.
    pub fn without_edge(&self, u: &str, v: &str) -> Result<SimpleGraph, GraphError> {
        let ui = self.index_of(u)?;
        let vi = self.index_of(v)?;
        if !self.adj[ui].contains(&vi) {
            return Err(GraphError::UnknownEdge(u.to_string(), v.to_string()));
        }
        let mut g = self.clone();
        g.adj[ui].remove(&vi);
        g.adj[vi].remove(&ui);
        Ok(g)
    }

    /// Vertex -> sorted neighbor labels, for serialization.
    pub fn adjacency(&self) -> BTreeMap<String, Vec<String>> {
        self.labels
            .iter()
            .enumerate()
            .map(|(i, l)| {
                (
                    l.clone(),
                    self.adj[i].iter().map(|&j| self.labels[j].clone()).collect(),
                )
            })
            .collect()
    }
}

/// Seeded random graph on labels v00, v01, ... with independent edges.
pub fn random_graph<R: Rng>(n: usize, edge_prob: f64, rng: &mut R) -> SimpleGraph {
    let width = if n <= 1 { 1 } else { (n - 1).to_string().len() };
    let labels: Vec<String> = (0..n).map(|i| format!("v{:0width$}", i)).collect();
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(edge_prob) {
                edges.push((labels[i].clone(), labels[j].clone()));
            }
        }
    }
    SimpleGraph::new(labels, edges).expect("generated labels are distinct")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(labels: &[&str]) -> SimpleGraph {
        let edges = labels
            .windows(2)
            .map(|w| (w[0].to_string(), w[1].to_string()))
            .collect::<Vec<_>>();
        SimpleGraph::new(labels.iter().map(|s| s.to_string()), edges).unwrap()
    }

    fn cycle(labels: &[&str]) -> SimpleGraph {
        let mut edges = labels
            .windows(2)
            .map(|w| (w[0].to_string(), w[1].to_string()))
            .collect::<Vec<_>>();
        edges.push((
            labels[labels.len() - 1].to_string(),
            labels[0].to_string(),
        ));
        SimpleGraph::new(labels.iter().map(|s| s.to_string()), edges).unwrap()
    }

    #[test]
    fn distance_on_a_path() {
        let g = path(&["2", "3", "4"]);
        assert_eq!(g.distance("2", "4").unwrap(), Some(2));
        assert_eq!(g.distance("3", "3").unwrap(), Some(0));
    }

    #[test]
    fn distance_across_components_is_none() {
        let g = SimpleGraph::new(
            ["a", "b", "c", "d"],
            vec![
                ("a".to_string(), "b".to_string()),
                ("c".to_string(), "d".to_string()),
            ],
        )
        .unwrap();
        assert_eq!(g.distance("a", "c").unwrap(), None);
        assert_eq!(g.diameter(), Diameter::Infinite);
        assert!(!g.is_connected());
    }

    #[test]
    fn diameter_cases() {
        assert_eq!(SimpleGraph::empty().diameter(), Diameter::Undefined);
        let single = SimpleGraph::new(["x"], Vec::new()).unwrap();
        assert_eq!(single.diameter(), Diameter::Undefined);
        assert_eq!(path(&["a", "b"]).diameter(), Diameter::Finite(1));
        assert_eq!(path(&["2", "3", "4"]).diameter(), Diameter::Finite(2));
    }

    #[test]
    fn girth_cases() {
        assert_eq!(cycle(&["a", "b", "c"]).girth(), Some(3));
        assert_eq!(cycle(&["a", "b", "c", "d"]).girth(), Some(4));
        assert_eq!(path(&["a", "b", "c"]).girth(), None);
        assert_eq!(SimpleGraph::empty().girth(), None);
    }

    #[test]
    fn bridges_of_path_and_cycle() {
        let p = path(&["a", "b", "c"]);
        assert_eq!(
            p.bridges(),
            vec![
                ("a".to_string(), "b".to_string()),
                ("b".to_string(), "c".to_string()),
            ]
        );
        assert!(cycle(&["a", "b", "c", "d"]).bridges().is_empty());
    }

    #[test]
    fn core_of_tree_is_empty_and_of_cycle_is_itself() {
        let t = path(&["a", "b", "c", "d"]);
        assert_eq!(t.core().vertex_count(), 0);
        let c = cycle(&["a", "b", "c", "d"]);
        assert_eq!(c.core(), c);
    }

    #[test]
    fn lollipop_core_is_the_cycle_part() {
        // triangle a-b-c with a tail c-d
        let g = SimpleGraph::new(
            ["a", "b", "c", "d"],
            vec![
                ("a".to_string(), "b".to_string()),
                ("b".to_string(), "c".to_string()),
                ("a".to_string(), "c".to_string()),
                ("c".to_string(), "d".to_string()),
            ],
        )
        .unwrap();
        assert_eq!(g.bridges(), vec![("c".to_string(), "d".to_string())]);
        let core = g.core();
        assert_eq!(core.vertex_count(), 3);
        assert_eq!(core.edge_count(), 3);
        assert!(!core.has_vertex("d"));
    }

    #[test]
    fn girth_none_iff_all_edges_bridges_iff_core_empty() {
        let samples = [
            path(&["a", "b", "c", "d"]),
            cycle(&["a", "b", "c"]),
            SimpleGraph::empty(),
        ];
        for g in &samples {
            let acyclic = g.girth().is_none();
            assert_eq!(acyclic, g.bridges().len() == g.edge_count() || g.edge_count() == 0);
            assert_eq!(acyclic, g.core().edge_count() == 0);
        }
    }

    #[test]
    fn common_neighbors_on_path_and_square() {
        let p = path(&["a", "x", "b"]);
        assert_eq!(
            p.common_neighbors("a", "b").unwrap(),
            BTreeSet::from(["x".to_string()])
        );
        let sq = cycle(&["a", "x", "b", "c"]);
        assert_eq!(
            sq.common_neighbors("a", "b").unwrap(),
            BTreeSet::from(["x".to_string(), "c".to_string()])
        );
    }

    fn assert_closed_cycle(g: &SimpleGraph, w: &[String]) {
        for pair in w.windows(2) {
            assert!(g.has_edge(&pair[0], &pair[1]), "{:?} not an edge", pair);
        }
        assert!(g.has_edge(&w[w.len() - 1], &w[0]));
        let distinct: BTreeSet<&String> = w.iter().collect();
        assert_eq!(distinct.len(), w.len());
    }

    #[test]
    fn short_cycle_witnesses() {
        let tri = cycle(&["a", "b", "c"]);
        let w = tri.edge_in_short_cycle("a", "b", 3).unwrap().unwrap();
        assert_eq!(w.len(), 3);
        assert_closed_cycle(&tri, &w);
        let sq = cycle(&["a", "b", "c", "d"]);
        assert_eq!(sq.edge_in_short_cycle("a", "b", 3).unwrap(), None);
        let w4 = sq.edge_in_short_cycle("a", "b", 4).unwrap().unwrap();
        assert_eq!(w4.len(), 4);
        assert_closed_cycle(&sq, &w4);
        let p = path(&["a", "b", "c"]);
        assert_eq!(p.edge_in_short_cycle("a", "b", 4).unwrap(), None);
        assert_eq!(
            p.edge_in_short_cycle("a", "b", 5),
            Err(GraphError::BadCycleBound(5))
        );
    }

    #[test]
    fn self_loops_and_unknown_labels_rejected() {
        let err = SimpleGraph::new(["a"], vec![("a".to_string(), "a".to_string())]).unwrap_err();
        assert_eq!(err, GraphError::SelfLoop("a".to_string()));
        let err = SimpleGraph::new(["a"], vec![("a".to_string(), "b".to_string())]).unwrap_err();
        assert_eq!(err, GraphError::UnknownVertex("b".to_string()));
    }

    #[test]
    fn random_graph_is_deterministic_per_seed() {
        use rand::SeedableRng;
        let mut r1 = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        let mut r2 = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        assert_eq!(random_graph(12, 0.3, &mut r1), random_graph(12, 0.3, &mut r2));
    }
}
