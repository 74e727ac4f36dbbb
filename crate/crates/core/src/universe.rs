//! Test universes: every graph with at most `n` vertices, one per isomorphism class.

use std::collections::BTreeSet;

use crate::graph::Graph;

fn pair_list(k: usize) -> Vec<(usize, usize)> {
    (0..k).flat_map(|u| (u + 1..k).map(move |v| (u, v))).collect()
}

fn permutations(k: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; k], &mut out);
    out
}

/// One representative per isomorphism class of graphs on `0..=max_vertices`
/// vertices (the empty graph included), ordered by vertex count, edge count,
/// then canonical edge code.
///
/// Canonical forms are found by trying every permutation, so this is meant
/// for `max_vertices <= 6`.
pub fn graphs_up_to(max_vertices: usize) -> Vec<Graph> {
    assert!(max_vertices <= 6, "universe enumeration is factorial in the vertex count");
    let mut out = Vec::new();
    for k in 0..=max_vertices {
        let pairs = pair_list(k);
        let index = |u: usize, v: usize| {
            let (a, b) = (u.min(v), u.max(v));
            pairs.iter().position(|&p| p == (a, b)).expect("pair")
        };
        let perms = permutations(k);
        // remap[p][i]: position of pair i after applying permutation p
        let remap: Vec<Vec<usize>> =
            perms.iter().map(|p| pairs.iter().map(|&(u, v)| index(p[u], p[v])).collect()).collect();
        let mut seen = BTreeSet::new();
        for mask in 0u32..(1u32 << pairs.len()) {
            let canon = remap
                .iter()
                .map(|r| {
                    let mut m = 0u32;
                    for (i, &j) in r.iter().enumerate() {
                        if mask >> i & 1 == 1 {
                            m |= 1 << j;
                        }
                    }
                    m
                })
                .min()
                .unwrap_or(0);
            seen.insert((canon.count_ones(), canon));
        }
        for (_, code) in seen {
            let edges = pairs.iter().enumerate().filter(|(i, _)| code >> i & 1 == 1).map(|(_, &p)| p);
            out.push(Graph::new(k, edges).expect("valid pairs"));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::iso::are_isomorphic;

    #[test]
    fn class_counts() {
        // 1, 1, 2, 4, 11 isomorphism classes on 0..=4 vertices
        let counts: Vec<usize> =
            (0..=4).map(|k| graphs_up_to(4).iter().filter(|g| g.vertex_count() == k).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11]);
    }

    #[test]
    fn representatives_pairwise_distinct() {
        let u = graphs_up_to(4);
        for (i, a) in u.iter().enumerate() {
            for b in &u[i + 1..] {
                assert!(are_isomorphic(a, b).is_none());
            }
        }
    }
}
