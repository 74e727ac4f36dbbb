mod common;

use common::{all_functions, brute_maps, graph, respects_edges};
use proptest::prelude::*;
use reflex_core::graph::{edge, point};
use reflex_core::{are_isomorphic, count_maps, enumerate_maps, pushout, Graph, GraphMap};

proptest! {
    #[test]
    fn enumeration_matches_brute_force(x in graph(0, 4), y in graph(0, 4)) {
        let found: Vec<Vec<usize>> = enumerate_maps(&x, &y).iter().map(|m| m.images().to_vec()).collect();
        prop_assert_eq!(&found, &brute_maps(&x, &y));
        prop_assert_eq!(count_maps(&x, &y), found.len() as u64);
    }

    #[test]
    fn maps_from_representables(y in graph(0, 5)) {
        prop_assert_eq!(count_maps(&point(), &y), y.vertex_count() as u64);
        prop_assert_eq!(count_maps(&edge(), &y), (y.vertex_count() + 2 * y.edge_count()) as u64);
    }

    #[test]
    fn composites_are_maps(x in graph(1, 3), y in graph(1, 3), z in graph(1, 3)) {
        for f in enumerate_maps(&x, &y) {
            for g in enumerate_maps(&y, &z) {
                let h = g.after(&f).unwrap();
                prop_assert!(respects_edges(&x, &z, h.images()));
            }
        }
    }

    #[test]
    fn isomorphism_is_found_through_relabelling(x in graph(0, 6), seed in any::<u64>()) {
        let n = x.vertex_count();
        // a permutation from the seed, by repeated swaps
        let mut perm: Vec<usize> = (0..n).collect();
        let mut s = seed;
        for i in (1..n).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let y = Graph::new(n, x.edges().iter().map(|&(u, v)| (perm[u], perm[v]))).unwrap();
        let b = are_isomorphic(&x, &y).expect("relabelled copy");
        prop_assert!(b.is_isomorphism(&x, &y));
        prop_assert!(are_isomorphic(&y, &x).is_some());
        prop_assert!(are_isomorphic(&x, &x).is_some());
    }

    #[test]
    fn isomorphism_agrees_with_brute_force(x in graph(0, 5), y in graph(0, 5)) {
        let brute = x.vertex_count() == y.vertex_count()
            && x.edge_count() == y.edge_count()
            && all_functions(x.vertex_count(), y.vertex_count()).iter().any(|f| {
                let mut seen = vec![false; y.vertex_count()];
                f.iter().all(|&w| !std::mem::replace(&mut seen[w], true)) && respects_edges(&x, &y, f)
            });
        prop_assert_eq!(are_isomorphic(&x, &y).is_some(), brute);
    }

    #[test]
    fn pushout_is_universal(a in graph(0, 2), x in graph(1, 3), y in graph(1, 3), t in graph(1, 3), pick in any::<(u16, u16)>()) {
        let fs = enumerate_maps(&a, &x);
        let gs = enumerate_maps(&a, &y);
        prop_assume!(!fs.is_empty() && !gs.is_empty());
        let f = &fs[pick.0 as usize % fs.len()];
        let g = &gs[pick.1 as usize % gs.len()];
        let p = pushout(f, g).unwrap();
        // cocones over the span, counted directly
        let mut cocones = 0u64;
        for u in brute_maps(&x, &t) {
            for v in brute_maps(&y, &t) {
                if (0..a.vertex_count()).all(|i| u[f.apply(i)] == v[g.apply(i)]) {
                    cocones += 1;
                    // the mediating map exists and is unique
                    let mediating: Vec<Vec<usize>> = brute_maps(&p.graph, &t)
                        .into_iter()
                        .filter(|m| (0..x.vertex_count()).all(|i| m[p.left.apply(i)] == u[i])
                            && (0..y.vertex_count()).all(|i| m[p.right.apply(i)] == v[i]))
                        .collect();
                    prop_assert_eq!(mediating.len(), 1);
                }
            }
        }
        prop_assert_eq!(count_maps(&p.graph, &t), cocones);
    }
}

#[test]
fn identity_and_composition_errors() {
    let x = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
    let id = GraphMap::identity(&x);
    let f = GraphMap::between(&edge(), &x, vec![1, 2]).unwrap();
    assert_eq!(id.after(&f).unwrap(), f);
    assert!(f.after(&id).is_err());
}
