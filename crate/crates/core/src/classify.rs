//! Enumeration of candidate seeds and the classification sweep.
//!
//! Candidates with four distinct labelled vertices are graphs on those four
//! vertices. Candidates with merged labels live on at most three vertices and
//! carry free actions on their unlabelled vertices.

use std::fmt;

use thiserror::Error;

use crate::gg::GGMorphism;
use crate::graph::{complete, cycle, Graph};
use crate::iso::are_isomorphic;
use crate::kan::FunctorSeed;
use crate::kan::{lan, Generator, Label, SeedViolation, Side};
use crate::monoidal::{
    certify_against, check_adjunction_counts, check_associativity, check_cocontinuity, check_symmetry, check_unit,
    pairs_of, triples_of, CheckReport, ProductUnderTest, UnitCandidate,
};
use crate::products::ProductKind;

/// Label pairs in bitmask order: bit `k` of the mask is the `k`-th pair.
pub const LABEL_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// All 64 seeds on the four labelled vertices `ss, st, ts, tt`, ordered by
/// edge-set bitmask.
pub fn enumerate_labelled_seeds() -> Vec<FunctorSeed> {
    (0u32..64)
        .map(|mask| {
            let edges = LABEL_PAIRS.iter().enumerate().filter(|(k, _)| mask & (1 << k) != 0).map(|(_, &p)| p);
            let gee = Graph::new(4, edges).expect("pairs of four vertices");
            FunctorSeed::from_labels(gee, [0, 1, 2, 3]).expect("injective labels")
        })
        .collect()
}

pub fn validate_seed_functoriality(seed: &FunctorSeed) -> Result<(), SeedViolation> {
    seed.validate()
}

/// Which labels coincide.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MergePattern {
    /// All four labels distinct.
    Injective,
    /// `(s,b) = (t,b)`: the label ignores its first coordinate.
    FirstShared,
    /// `(a,s) = (a,t)`: the label ignores its second coordinate.
    SecondShared,
    Collapsed,
    /// Any other coincidence.
    Other,
}

impl MergePattern {
    pub fn of(labels: [usize; 4]) -> Self {
        let [ss, st, ts, tt] = labels;
        let first = ss == ts && st == tt;
        let second = ss == st && ts == tt;
        match (first, second) {
            (true, true) => MergePattern::Collapsed,
            (true, false) => MergePattern::FirstShared,
            (false, true) => MergePattern::SecondShared,
            _ if [ss, st, ts, tt].iter().enumerate().all(|(i, a)| labels[i + 1..].iter().all(|b| a != b)) => {
                MergePattern::Injective
            }
            _ => MergePattern::Other,
        }
    }

    /// The coordinates whose `sr` action must land on labelled vertices for
    /// the unit argument to collapse `I_0 ⊗ I_1` (or `I_1 ⊗ I_0`) to a point.
    pub fn collapsing_sides(self) -> &'static [Side] {
        match self {
            MergePattern::SecondShared => &[Side::Left],
            MergePattern::FirstShared => &[Side::Right],
            MergePattern::Collapsed => &[Side::Left, Side::Right],
            MergePattern::Injective | MergePattern::Other => &[],
        }
    }
}

impl fmt::Display for MergePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MergePattern::Injective => "injective",
            MergePattern::FirstShared => "first coordinate shared",
            MergePattern::SecondShared => "second coordinate shared",
            MergePattern::Collapsed => "collapsed",
            MergePattern::Other => "other",
        })
    }
}

/// True when some unlabelled vertex is sent to an unlabelled vertex by the
/// `sr` action of `side`. Then `{sr v, tr v}` is a nonempty set of unlabelled
/// vertices closed under `σ` and `sr`.
pub fn has_invariant_unlabelled_set(seed: &FunctorSeed, side: Side) -> bool {
    let sr = seed.endo(side, GGMorphism::SR);
    (0..seed.gee.vertex_count()).any(|v| !seed.is_labelled(v) && !seed.is_labelled(sr[v]))
}

/// Label partitions of `ss, st, ts, tt` with blocks numbered by first
/// occurrence, restricted to at most `max` blocks.
fn label_functions(max: usize) -> Vec<[usize; 4]> {
    let mut out = Vec::new();
    let mut current = [0usize; 4];
    fn go(i: usize, blocks: usize, max: usize, current: &mut [usize; 4], out: &mut Vec<[usize; 4]>) {
        if i == 4 {
            out.push(*current);
            return;
        }
        for b in 0..=blocks.min(max - 1) {
            current[i] = b;
            go(i + 1, blocks.max(b + 1), max, current, out);
        }
    }
    go(0, 0, max, &mut current, &mut out);
    out
}

/// Every validating seed on at most `max_vertices` vertices whose labels are
/// not injective, before any pattern filtering. Labelled vertices come first;
/// unlabelled vertices take every choice of `(σ,id), (id,σ), (sr,id), (id,sr)`,
/// with `tr = σ ∘ sr` on each side.
pub fn enumerate_non_injective_seeds(max_vertices: usize) -> Vec<FunctorSeed> {
    let mut out = Vec::new();
    for n in 1..=max_vertices {
        for labels in label_functions(n) {
            let k = labels.iter().max().expect("four labels") + 1;
            if k == 4 {
                continue;
            }
            let Some(fixed) = label_actions(labels, n) else { continue };
            let free: Vec<usize> = (k..n).collect();
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges = pairs.iter().enumerate().filter(|(b, _)| mask & (1 << b) != 0).map(|(_, &p)| p);
                let gee = Graph::new(n, edges).expect("pairs in range");
                let slots = free.len() * 4;
                let mut choice = vec![0usize; slots];
                loop {
                    let mut actions = fixed.clone();
                    for (i, &v) in free.iter().enumerate() {
                        let c = &choice[i * 4..i * 4 + 4];
                        actions[Generator::SigmaL.index()][v] = c[0];
                        actions[Generator::SigmaR.index()][v] = c[1];
                        actions[Generator::SrL.index()][v] = c[2];
                        actions[Generator::SrR.index()][v] = c[3];
                    }
                    for (sigma, sr, tr) in [
                        (Generator::SigmaL, Generator::SrL, Generator::TrL),
                        (Generator::SigmaR, Generator::SrR, Generator::TrR),
                    ] {
                        for &v in &free {
                            actions[tr.index()][v] = actions[sigma.index()][actions[sr.index()][v]];
                        }
                    }
                    let seed = FunctorSeed { gee: gee.clone(), labels, actions };
                    if seed.validate().is_ok() {
                        out.push(seed);
                    }
                    // odometer over the free slots
                    let mut i = 0;
                    while i < slots && choice[i] + 1 == n {
                        choice[i] = 0;
                        i += 1;
                    }
                    if i == slots {
                        break;
                    }
                    choice[i] += 1;
                }
            }
        }
    }
    out
}

/// Label-determined actions on the labelled vertices `0..k`, with unlabelled
/// entries left at 0. `None` if two labels on one vertex disagree.
fn label_actions(labels: [usize; 4], n: usize) -> Option<[Vec<usize>; 6]> {
    let mut actions: [Vec<usize>; 6] = Default::default();
    for g in Generator::ALL {
        let mut images = vec![usize::MAX; n];
        for l in Label::ALL {
            let moved = match g.side() {
                Side::Left => Label(l.0.act(g.morphism()), l.1),
                Side::Right => Label(l.0, l.1.act(g.morphism())),
            };
            let (v, w) = (labels[l.index()], labels[moved.index()]);
            if images[v] != usize::MAX && images[v] != w {
                return None;
            }
            images[v] = w;
        }
        actions[g.index()] = images.into_iter().map(|w| if w == usize::MAX { 0 } else { w }).collect();
    }
    Some(actions)
}

/// The functorial merged-label seeds on at most three vertices in one of the
/// three merge patterns, keeping only those whose unlabelled vertices all
/// reach a label under the relevant `sr` action. Seeds with an invariant set
/// of unlabelled vertices are left to user input.
pub fn enumerate_merged_label_seeds() -> Vec<FunctorSeed> {
    enumerate_non_injective_seeds(3)
        .into_iter()
        .filter(|s| {
            let sides = MergePattern::of(s.labels).collapsing_sides();
            sides.iter().any(|&side| !has_invariant_unlabelled_set(s, side))
        })
        .collect()
}

/// Vertex names: a labelled vertex is named by its labels joined with `=`,
/// an unlabelled one `u0, u1, ...` in index order.
pub fn seed_vertex_names(seed: &FunctorSeed) -> Vec<String> {
    let mut unlabelled = 0;
    (0..seed.gee.vertex_count())
        .map(|v| {
            let keys: Vec<&str> = seed.labels_of(v).map(|l| l.key()).collect();
            if keys.is_empty() {
                unlabelled += 1;
                format!("u{}", unlabelled - 1)
            } else {
                keys.join("=")
            }
        })
        .collect()
}

pub fn describe_seed(seed: &FunctorSeed) -> String {
    let names = seed_vertex_names(seed);
    let edges: Vec<String> = seed.gee.edges().iter().map(|&(u, v)| format!("{}-{}", names[u], names[v])).collect();
    let shape = shape_name(&seed.gee).map(|s| format!(" ({s})")).unwrap_or_default();
    format!("vertices [{}], edges [{}]{shape}", names.join(", "), edges.join(", "))
}

/// `C_4` or `K_4` when the graph is one of them.
pub fn shape_name(g: &Graph) -> Option<&'static str> {
    if g.vertex_count() != 4 {
        None
    } else if are_isomorphic(g, &cycle(4)).is_some() {
        Some("C_4")
    } else if are_isomorphic(g, &complete(4)).is_some() {
        Some("K_4")
    } else {
        None
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("the test graph list is empty")]
    EmptyTests,
}

/// The class-representative bijection to a built-in product, checked on every
/// pair of test graphs.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: ProductKind,
    pub pairs: usize,
}

#[derive(Clone, Debug)]
pub struct SeedRecord {
    pub seed: FunctorSeed,
    pub description: String,
    pub functoriality: Result<(), SeedViolation>,
    /// Empty when functoriality fails.
    pub checks: Vec<CheckReport>,
    pub certificate: Option<Certificate>,
}

impl SeedRecord {
    pub fn survived(&self) -> bool {
        self.functoriality.is_ok() && !self.checks.is_empty() && self.checks.iter().all(|c| c.passed)
    }
}

#[derive(Clone, Debug)]
pub struct ClassificationReport {
    pub records: Vec<SeedRecord>,
    /// Indices into `records`.
    pub survivors: Vec<usize>,
}

impl ClassificationReport {
    /// Every survivor carries a certificate.
    pub fn all_certified(&self) -> bool {
        self.survivors.iter().all(|&i| self.records[i].certificate.is_some())
    }
}

/// Graphs on which the expensive checks run: colimits of products of
/// products grow quickly with the vertex count.
const HEAVY_LIMIT: usize = 3;

/// The default test universe: every graph on at most three vertices, and
/// `path(3)`.
pub fn default_test_graphs() -> Vec<Graph> {
    let mut out = crate::universe::graphs_up_to(3);
    out.push(crate::graph::path(3));
    out
}

pub fn classify_seed(seed: &FunctorSeed, test_graphs: &[Graph]) -> SeedRecord {
    let description = describe_seed(seed);
    let functoriality = validate_seed_functoriality(seed);
    if functoriality.is_err() {
        return SeedRecord { seed: seed.clone(), description, functoriality, checks: vec![], certificate: None };
    }
    let heavy: Vec<Graph> = test_graphs.iter().filter(|g| g.vertex_count() <= HEAVY_LIMIT).cloned().collect();
    let triples = triples_of(&heavy);
    let p = ProductUnderTest::from(seed.clone());
    let checks = vec![
        check_unit(&p, &UnitCandidate::ALL, test_graphs),
        check_associativity(&p, &triples),
        check_symmetry(&p, &pairs_of(test_graphs)),
        check_adjunction_counts(&p, &triples),
        check_cocontinuity(&p, &triples),
    ];
    let mut record = SeedRecord { seed: seed.clone(), description, functoriality, checks, certificate: None };
    if record.survived() {
        let pairs = pairs_of(test_graphs);
        record.certificate = [ProductKind::Box, ProductKind::Categorical].into_iter().find_map(|kind| {
            pairs
                .iter()
                .all(|(x, y)| certify_against(seed, kind, x, y).is_ok())
                .then_some(Certificate { kind, pairs: pairs.len() })
        });
    }
    record
}

pub fn classify_seeds(seeds: &[FunctorSeed], test_graphs: &[Graph]) -> Result<ClassificationReport, ClassifyError> {
    if test_graphs.is_empty() {
        return Err(ClassifyError::EmptyTests);
    }
    // seeds are independent; chunks are joined back in enumeration order
    let threads = std::thread::available_parallelism().map_or(1, |n| n.get()).min(seeds.len().max(1));
    let chunk = seeds.len().div_ceil(threads).max(1);
    let records: Vec<SeedRecord> = std::thread::scope(|scope| {
        let handles: Vec<_> = seeds
            .chunks(chunk)
            .map(|part| scope.spawn(move || part.iter().map(|s| classify_seed(s, test_graphs)).collect::<Vec<_>>()))
            .collect();
        handles.into_iter().flat_map(|h| h.join().expect("classification thread panicked")).collect()
    });
    let survivors = records.iter().enumerate().filter(|(_, r)| r.survived()).map(|(i, _)| i).collect();
    Ok(ClassificationReport { records, survivors })
}

/// Whether `lan(seed, I_0, I_1)` or `lan(seed, I_1, I_0)` is a single vertex.
pub fn unit_collapses(seed: &FunctorSeed) -> bool {
    let (pt, e) = (crate::graph::point(), crate::graph::edge());
    let collapses = |x: &Graph, y: &Graph| lan(seed, x, y).is_ok_and(|r| r.graph().vertex_count() == 1);
    collapses(&pt, &e) || collapses(&e, &pt)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::edge;
    use crate::kan::{box_seed, categorical_seed};

    #[test]
    fn sixty_four_labelled_candidates() {
        let seeds = enumerate_labelled_seeds();
        assert_eq!(seeds.len(), 64);
        assert_eq!(seeds[63], categorical_seed());
        // edges between labels agreeing in one coordinate: bits 0, 1, 4, 5
        assert_eq!(seeds[0b110011], box_seed());
    }

    #[test]
    fn exactly_two_functorial_labelled_seeds() {
        let ok: Vec<usize> = enumerate_labelled_seeds()
            .iter()
            .enumerate()
            .filter(|(_, s)| validate_seed_functoriality(s).is_ok())
            .map(|(i, _)| i)
            .collect();
        assert_eq!(ok, vec![0b110011, 0b111111]);
    }

    #[test]
    fn single_diagonal_fails_on_sigma() {
        let s = &enumerate_labelled_seeds()[0b110111];
        assert!(matches!(validate_seed_functoriality(s), Err(SeedViolation::ActionNotGraphMap(_))));
        assert_eq!(
            validate_seed_functoriality(&enumerate_labelled_seeds()[0]),
            Err(SeedViolation::MissingForcedEdge(Label::ALL[0], Label::ALL[1]))
        );
    }

    #[test]
    fn label_functions_are_set_partitions() {
        // 1 + 7 + 6 partitions of four labels into at most three blocks
        assert_eq!(label_functions(3).len(), 14);
        assert_eq!(label_functions(4).len(), 15);
    }

    #[test]
    fn validating_merges_follow_the_three_patterns() {
        for s in enumerate_non_injective_seeds(3) {
            assert_ne!(MergePattern::of(s.labels), MergePattern::Other, "{}", describe_seed(&s));
        }
    }

    #[test]
    fn merged_examples() {
        let merged = enumerate_merged_label_seeds();
        let two = FunctorSeed::from_labels(edge(), [0, 0, 1, 1]).unwrap();
        assert!(merged.contains(&two));
        let one = FunctorSeed::from_labels(crate::graph::point(), [0, 0, 0, 0]).unwrap();
        assert!(merged.contains(&one));
        assert!(merged.iter().all(unit_collapses));
    }

    #[test]
    fn describe_names_labels() {
        let d = describe_seed(&box_seed());
        assert_eq!(d, "vertices [ss, st, ts, tt], edges [ss-st, ss-ts, st-tt, ts-tt] (C_4)");
        let two = FunctorSeed::from_labels(edge(), [0, 0, 1, 1]).unwrap();
        assert_eq!(describe_seed(&two), "vertices [ss=st, ts=tt], edges [ss=st-ts=tt]");
    }

    #[test]
    fn empty_test_list_is_an_error() {
        assert_eq!(classify_seeds(&[box_seed()], &[]).unwrap_err(), ClassifyError::EmptyTests);
    }
}
