#![allow(dead_code)]

use proptest::prelude::*;
use reflex_core::Graph;

pub fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect()
}

/// A graph on `min..=max` vertices with a uniformly random edge set.
pub fn graph(min: usize, max: usize) -> impl Strategy<Value = Graph> {
    (min..=max).prop_flat_map(|n| {
        let p = pairs(n);
        proptest::collection::vec(any::<bool>(), p.len()).prop_map(move |bits| {
            let edges = p.iter().zip(&bits).filter(|(_, &b)| b).map(|(&e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

/// Independent edge test: every stored edge of `x` lands on equal or stored endpoints.
pub fn respects_edges(x: &Graph, y: &Graph, f: &[usize]) -> bool {
    x.edges().iter().all(|&(u, v)| {
        let (a, b) = (f[u], f[v]);
        a == b || y.edges().contains(&(a.min(b), a.max(b)))
    })
}

/// Every function `V(x) -> V(y)` in lexicographic order.
pub fn all_functions(n: usize, m: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    for _ in 0..n {
        out = out
            .into_iter()
            .flat_map(|f: Vec<usize>| {
                (0..m).map(move |w| {
                    let mut g = f.clone();
                    g.push(w);
                    g
                })
            })
            .collect();
    }
    out
}

/// Maps by brute force over all functions.
pub fn brute_maps(x: &Graph, y: &Graph) -> Vec<Vec<usize>> {
    all_functions(x.vertex_count(), y.vertex_count()).into_iter().filter(|f| respects_edges(x, y, f)).collect()
}
