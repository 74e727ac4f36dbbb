mod common;

use common::graph;
use proptest::prelude::*;
use reflex_core::kan::{box_seed, categorical_seed, lan_map};
use reflex_core::monoidal::{certify_against, recheck, ProductUnderTest};
use reflex_core::{are_isomorphic, enumerate_maps, property_table, GraphMap, ProductKind};

fn seeds() -> [(reflex_core::FunctorSeed, ProductKind); 2] {
    [(box_seed(), ProductKind::Box), (categorical_seed(), ProductKind::Categorical)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn seeds_reproduce_their_products(x in graph(0, 4), y in graph(0, 4)) {
        for (seed, kind) in seeds() {
            prop_assert!(certify_against(&seed, kind, &x, &y).is_ok());
        }
    }

    #[test]
    fn lan_maps_preserve_identities_and_composites(
        x in graph(1, 2), y in graph(1, 2), x2 in graph(1, 2), y2 in graph(1, 2), x3 in graph(1, 2), y3 in graph(1, 2),
        pick in any::<[u16; 4]>(),
    ) {
        let choose = |maps: Vec<GraphMap>, i: u16| maps[i as usize % maps.len()].clone();
        let f = choose(enumerate_maps(&x, &x2), pick[0]);
        let g = choose(enumerate_maps(&y, &y2), pick[1]);
        let f2 = choose(enumerate_maps(&x2, &x3), pick[2]);
        let g2 = choose(enumerate_maps(&y2, &y3), pick[3]);
        for (seed, _) in seeds() {
            let id = lan_map(&seed, &GraphMap::identity(&x), &GraphMap::identity(&y)).unwrap();
            prop_assert!(id.images().iter().enumerate().all(|(i, &j)| i == j));
            let whole = lan_map(&seed, &f2.after(&f).unwrap(), &g2.after(&g).unwrap()).unwrap();
            let first = lan_map(&seed, &f, &g).unwrap();
            let second = lan_map(&seed, &f2, &g2).unwrap();
            let composite = second.after(&first).unwrap();
            prop_assert_eq!(whole.images(), composite.images());
        }
    }
}

#[test]
fn table_witnesses_recheck_and_really_differ() {
    let table = property_table(3);
    let mut failures = 0;
    for row in &table.rows {
        let p = ProductUnderTest::Kind(row.kind);
        for report in row.reports.iter().flat_map(|r| std::iter::once(r).chain(&r.parts)) {
            if let Some(w) = &report.witness {
                failures += 1;
                assert!(recheck(&p, w), "{} {}", row.kind, report.label);
                if let Some((a, b)) = &w.compared {
                    assert!(are_isomorphic(a, b).is_none(), "{} {}", row.kind, report.label);
                }
            }
        }
    }
    assert!(failures > 0);
}

#[test]
fn failures_persist_as_the_universe_grows() {
    let (small, large) = (property_table(2), property_table(3));
    for (a, b) in small.rows.iter().zip(&large.rows) {
        assert_eq!(a.kind, b.kind);
        for (ra, rb) in a.reports.iter().zip(&b.reports) {
            assert_eq!(ra.property, rb.property);
            assert!(ra.passed || !rb.passed, "{} {} failed at 2 but passed at 3", a.kind, ra.label);
        }
    }
}
