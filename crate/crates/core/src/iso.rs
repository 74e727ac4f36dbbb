//! Isomorphism search for small graphs: color refinement, then backtracking.

use std::collections::BTreeMap;

use crate::graph::{Bijection, Graph};

/// Stable coloring of both graphs under 1-dimensional refinement, computed
/// jointly so that colors are comparable across the two graphs.
fn refine(x: &Graph, y: &Graph) -> (Vec<usize>, Vec<usize>) {
    let graphs = [x, y];
    let mut colors: [Vec<usize>; 2] =
        [(0..x.vertex_count()).map(|v| x.degree(v)).collect(), (0..y.vertex_count()).map(|v| y.degree(v)).collect()];
    let mut classes = usize::MAX;
    loop {
        let mut sigs: [Vec<(usize, Vec<usize>)>; 2] = [Vec::new(), Vec::new()];
        for k in 0..2 {
            for v in 0..graphs[k].vertex_count() {
                let mut around: Vec<usize> = graphs[k].neighbors(v).map(|w| colors[k][w]).collect();
                around.sort_unstable();
                sigs[k].push((colors[k][v], around));
            }
        }
        let mut ids = BTreeMap::new();
        for s in sigs.iter().flatten() {
            let next = ids.len();
            ids.entry(s.clone()).or_insert(next);
        }
        // BTreeMap iteration order gives ids independent of vertex numbering.
        for (i, (_, id)) in ids.iter_mut().enumerate() {
            *id = i;
        }
        for k in 0..2 {
            colors[k] = sigs[k].iter().map(|s| ids[s]).collect();
        }
        if ids.len() == classes {
            break;
        }
        classes = ids.len();
    }
    let [cx, cy] = colors;
    (cx, cy)
}

fn histogram(colors: &[usize]) -> BTreeMap<usize, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

/// Returns an isomorphism witness `x -> y` if one exists.
pub fn are_isomorphic(x: &Graph, y: &Graph) -> Option<Bijection> {
    if x.vertex_count() != y.vertex_count() || x.edge_count() != y.edge_count() {
        return None;
    }
    let n = x.vertex_count();
    let (cx, cy) = refine(x, y);
    let hx = histogram(&cx);
    if hx != histogram(&cy) {
        return None;
    }

    // Order: each next vertex has the most already-placed neighbors, ties broken
    // by smaller color class.
    let mut order = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .min_by_key(|&v| {
                let back = x.neighbors(v).filter(|&w| placed[w]).count();
                (usize::MAX - back, hx[&cx[v]], v)
            })
            .expect("unplaced vertex");
        placed[v] = true;
        order.push(v);
    }

    let mut forward = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if search(x, y, &cx, &cy, &order, 0, &mut forward, &mut used) {
        Bijection::from_forward(forward)
    } else {
        None
    }
}

#[allow(clippy::too_many_arguments)]
fn search(
    x: &Graph,
    y: &Graph,
    cx: &[usize],
    cy: &[usize],
    order: &[usize],
    depth: usize,
    forward: &mut [usize],
    used: &mut [bool],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let v = order[depth];
    for w in 0..y.vertex_count() {
        if used[w] || cy[w] != cx[v] {
            continue;
        }
        let consistent = order[..depth].iter().all(|&u| x.adjacent(u, v) == y.adjacent(forward[u], w));
        if !consistent {
            continue;
        }
        forward[v] = w;
        used[w] = true;
        if search(x, y, cx, cy, order, depth + 1, forward, used) {
            return true;
        }
        used[w] = false;
        forward[v] = usize::MAX;
    }
    false
}
