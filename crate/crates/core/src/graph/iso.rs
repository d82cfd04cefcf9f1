//! Brute-force graph isomorphism for small graphs, with degree pruning.

use std::collections::BTreeMap;

use super::{GraphError, SimpleGraph};
use crate::caps::Caps;

/// Adjacency-preserving bijection between the two vertex sets, or None.
pub fn iso_check(
    g: &SimpleGraph,
    h: &SimpleGraph,
    caps: &Caps,
) -> Result<Option<BTreeMap<String, String>>, GraphError> {
    let n = g.vertex_count();
    let cap = caps.iso_max_vertices;
    if n > cap || h.vertex_count() > cap {
        return Err(GraphError::IsoCapExceeded {
            got: n.max(h.vertex_count()),
            cap,
        });
    }
    if n != h.vertex_count() || g.edge_count() != h.edge_count() {
        return Ok(None);
    }
    let dg = degree_vec(g);
    let dh = degree_vec(h);
    {
        let mut a = dg.clone();
        let mut b = dh.clone();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Ok(None);
        }
    }
    let ag = adjacency_matrix(g);
    let ah = adjacency_matrix(h);
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if !assign(0, n, &ag, &ah, &dg, &dh, &mut map, &mut used) {
        return Ok(None);
    }
    let out = map
        .iter()
        .enumerate()
        .map(|(i, &j)| (g.labels()[i].clone(), h.labels()[j].clone()))
        .collect();
    Ok(Some(out))
}

fn degree_vec(g: &SimpleGraph) -> Vec<usize> {
    g.labels()
        .iter()
        .map(|l| g.degree(l).expect("own labels resolve"))
        .collect()
}

fn adjacency_matrix(g: &SimpleGraph) -> Vec<Vec<bool>> {
    let n = g.vertex_count();
    let mut m = vec![vec![false; n]; n];
    for (u, v) in g.edges() {
        let ui = g.labels().binary_search(&u).expect("edge endpoint exists");
        let vi = g.labels().binary_search(&v).expect("edge endpoint exists");
        m[ui][vi] = true;
        m[vi][ui] = true;
    }
    m
}

#[allow(clippy::too_many_arguments)]
fn assign(
    i: usize,
    n: usize,
    ag: &[Vec<bool>],
    ah: &[Vec<bool>],
    dg: &[usize],
    dh: &[usize],
    map: &mut [usize],
    used: &mut [bool],
) -> bool {
    if i == n {
        return true;
    }
    for j in 0..n {
        if used[j] || dg[i] != dh[j] {
            continue;
        }
        let ok = (0..i).all(|k| ag[i][k] == ah[j][map[k]]);
        if !ok {
            continue;
        }
        map[i] = j;
        used[j] = true;
        if assign(i + 1, n, ag, ah, dg, dh, map, used) {
            return true;
        }
        used[j] = false;
        map[i] = usize::MAX;
    }
    false
}
