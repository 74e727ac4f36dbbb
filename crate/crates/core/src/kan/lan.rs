//! Pointwise left Kan extension of a seed along `ŷ × ŷ`.
//!
//! `lan(F)(X, Y)` is the colimit of `F` over the comma category of cells of
//! `(X, Y)`. Restricting to the edge subcategory gives the same colimit, so
//! [`lan`] only ever needs `F(E, E)` and the endomorphism actions; the full
//! diagram is built by [`full_colimit`] to cross-check that restriction.

use std::sync::Arc;

use crate::gg::{gg_compose, gg_homset, yoneda_images, GGMorphism, GGObject};
use crate::graph::{is_isomorphism_map, Graph, GraphMap};
use crate::iso::are_isomorphic;
use crate::kan::colimit::{colimit, ColimitResult, Diagram, DiagramArrow};
use crate::kan::comma::{edge_comma_category, full_comma_category, CommaDiagram};
use crate::kan::seed::{End, FunctorSeed, Label, Side};
use crate::kan::KanError;

#[derive(Clone, Debug)]
pub struct LanResult {
    pub diagram: CommaDiagram,
    pub colimit: ColimitResult,
    /// For each class, the product vertex `(x, y)` it stands for, when every
    /// class has a labelled member and the assignment is a bijection onto
    /// `V(X) × V(Y)`.
    pub coords: Option<Vec<(usize, usize)>>,
}

impl LanResult {
    pub fn graph(&self) -> &Graph {
        &self.colimit.quotient
    }
}

/// Evaluates the seed's product on `(x, y)` over the edge subcategory.
pub fn lan(seed: &FunctorSeed, x: &Graph, y: &Graph) -> Result<LanResult, KanError> {
    seed.validate()?;
    let diagram = edge_comma_category(x, y);
    let mut actions = Vec::with_capacity(16);
    for h in GGMorphism::ENDO_E {
        for h2 in GGMorphism::ENDO_E {
            actions.push(seed.pair_action(h, h2));
        }
    }
    let arrows = diagram
        .arrows
        .iter()
        .filter(|a| !(a.left.is_identity() && a.right.is_identity()))
        .map(|a| {
            let k = a.left.endo_index().expect("edge cells") * 4 + a.right.endo_index().expect("edge cells");
            DiagramArrow { source: a.source, target: a.target, images: actions[k].clone() }
        })
        .collect();
    let graphs = Diagram { nodes: vec![seed.gee.clone(); diagram.node_count()], arrows };
    let colimit = colimit(&graphs)?;
    let coords = class_coords(seed, &diagram, &colimit);
    Ok(LanResult { diagram, colimit, coords })
}

pub fn lan_product(seed: &FunctorSeed, x: &Graph, y: &Graph) -> Result<Graph, KanError> {
    Ok(lan(seed, x, y)?.colimit.quotient)
}

/// The class-representative map: a labelled vertex `(a, b)` in the node of
/// cells `(f, g)` stands for `(f(a), g(b))`.
fn class_coords(seed: &FunctorSeed, diagram: &CommaDiagram, colimit: &ColimitResult) -> Option<Vec<(usize, usize)>> {
    let (nx, ny) = (diagram.left.graph.vertex_count(), diagram.right.graph.vertex_count());
    if colimit.classes.len() != nx * ny {
        return None;
    }
    let mut coords = Vec::with_capacity(colimit.classes.len());
    let mut hit = vec![false; nx * ny];
    for members in &colimit.classes {
        let mut found: Option<(usize, usize)> = None;
        for &(node, v) in members {
            let (f, g) = diagram.node(node);
            for l in seed.labels_of(v) {
                let c = (f.map[l.0.index()], g.map[l.1.index()]);
                match found {
                    Some(prev) if prev != c => return None,
                    _ => found = Some(c),
                }
            }
        }
        let c = found?;
        if std::mem::replace(&mut hit[c.0 * ny + c.1], true) {
            return None;
        }
        coords.push(c);
    }
    Some(coords)
}

/// The action of `lan(F)` on a pair of maps `f: X -> X'`, `g: Y -> Y'`.
pub fn lan_map(seed: &FunctorSeed, f: &GraphMap, g: &GraphMap) -> Result<GraphMap, KanError> {
    let from = lan(seed, f.source(), g.source())?;
    let to = lan(seed, f.target(), g.target())?;
    lan_map_between(&from, &to, f, g)
}

/// Like [`lan_map`] with both endpoints already evaluated.
pub fn lan_map_between(from: &LanResult, to: &LanResult, f: &GraphMap, g: &GraphMap) -> Result<GraphMap, KanError> {
    let (src, dst) = (&from.diagram, &to.diagram);
    let mut images = vec![usize::MAX; from.colimit.classes.len()];
    for node in 0..src.node_count() {
        let (a, b) = src.node(node);
        let fa: Vec<usize> = a.map.iter().map(|&v| f.apply(v)).collect();
        let gb: Vec<usize> = b.map.iter().map(|&v| g.apply(v)).collect();
        let i = dst.left.index_of(a.shape, &fa).ok_or(KanError::NotFunctorial)?;
        let j = dst.right.index_of(b.shape, &gb).ok_or(KanError::NotFunctorial)?;
        let image_node = dst.node_index(i, j);
        for (v, &c) in from.colimit.cocone[node].iter().enumerate() {
            let d = to.colimit.class_of(image_node, v);
            if images[c] != usize::MAX && images[c] != d {
                return Err(KanError::NotFunctorial);
            }
            images[c] = d;
        }
    }
    GraphMap::new(Arc::new(from.colimit.quotient.clone()), Arc::new(to.colimit.quotient.clone()), images)
        .map_err(|_| KanError::NotFunctorial)
}

/// A seed extended to all of `𝔾 × 𝔾` with `F(V,V) = I_0` and
/// `F(V,E) = F(E,V) = I_1`, the connecting maps read off the labels.
#[derive(Clone, Debug)]
pub struct FullFunctor {
    seed: FunctorSeed,
    /// `F(h, id)` from `F(E,E)` to `F(V,E)` for `h = r`.
    r_left: Vec<usize>,
    /// `F(id, r)` from `F(E,E)` to `F(E,V)`.
    r_right: Vec<usize>,
}

impl FullFunctor {
    pub fn new(seed: &FunctorSeed) -> Result<Self, KanError> {
        seed.validate()?;
        // F(r, id) ∘ F(s, id) = id forces F(s, -) to be injective on I_1, and
        // F(s, id) ∘ F(r, id) = F(sr, id) pins down F(r, id) on every vertex.
        let retract = |side: Side| -> Result<Vec<usize>, KanError> {
            let sr = seed.endo(side, GGMorphism::SR);
            let point = |e: End| match side {
                Side::Left => seed.label(Label(End::S, e)),
                Side::Right => seed.label(Label(e, End::S)),
            };
            let (ps, pt) = (point(End::S), point(End::T));
            if ps == pt {
                return Err(KanError::NotExtendable(format!(
                    "F(s,-) is not injective in the {side} coordinate, so F(r,-) cannot retract it"
                )));
            }
            sr.iter()
                .enumerate()
                .map(|(v, &w)| match w {
                    w if w == ps => Ok(0),
                    w if w == pt => Ok(1),
                    _ => Err(KanError::NotExtendable(format!(
                        "vertex {v} is sent off the image of F(s,-) by the {side}-coordinate sr action"
                    ))),
                })
                .collect()
        };
        let full = FullFunctor { seed: seed.clone(), r_left: retract(Side::Left)?, r_right: retract(Side::Right)? };
        full.check()?;
        Ok(full)
    }

    pub fn object(&self, a: GGObject, b: GGObject) -> Graph {
        match (a, b) {
            (GGObject::V, GGObject::V) => crate::graph::point(),
            (GGObject::E, GGObject::E) => self.seed.gee.clone(),
            _ => crate::graph::edge(),
        }
    }

    /// `F(h, id_other)`.
    fn left(&self, h: GGMorphism, other: GGObject) -> Vec<usize> {
        match other {
            GGObject::V => yoneda_images(h),
            GGObject::E => match h {
                GGMorphism::IdV => vec![0, 1],
                GGMorphism::S | GGMorphism::T => {
                    let a = End::of_morphism(h).expect("s or t");
                    End::BOTH.iter().map(|&b| self.seed.label(Label(a, b))).collect()
                }
                GGMorphism::R => self.r_left.clone(),
                _ => self.seed.endo(Side::Left, h),
            },
        }
    }

    /// `F(id_other, h)`.
    fn right(&self, other: GGObject, h: GGMorphism) -> Vec<usize> {
        match other {
            GGObject::V => yoneda_images(h),
            GGObject::E => match h {
                GGMorphism::IdV => vec![0, 1],
                GGMorphism::S | GGMorphism::T => {
                    let b = End::of_morphism(h).expect("s or t");
                    End::BOTH.iter().map(|&a| self.seed.label(Label(a, b))).collect()
                }
                GGMorphism::R => self.r_right.clone(),
                _ => self.seed.endo(Side::Right, h),
            },
        }
    }

    /// `F(h, h') = F(h, id) ∘ F(id, h')`.
    pub fn act(&self, h: GGMorphism, h2: GGMorphism) -> Vec<usize> {
        let first = self.right(h.source(), h2);
        let then = self.left(h, h2.target());
        first.into_iter().map(|v| then[v]).collect()
    }

    fn check(&self) -> Result<(), KanError> {
        let objs = [GGObject::V, GGObject::E];
        let compose = |after: &[usize], first: &[usize]| -> Vec<usize> { first.iter().map(|&v| after[v]).collect() };
        for &o in &objs {
            for g in GGMorphism::ALL {
                let side_maps = [
                    (self.left(g, o), self.object(g.source(), o), self.object(g.target(), o)),
                    (self.right(o, g), self.object(o, g.source()), self.object(o, g.target())),
                ];
                for (m, s, t) in &side_maps {
                    if !s.is_map_into(t, m).unwrap_or(false) {
                        return Err(KanError::NotExtendable(format!("F({g}) is not a graph map")));
                    }
                }
                for f in GGMorphism::ALL {
                    let Ok(gf) = gg_compose(g, f) else { continue };
                    if self.left(gf, o) != compose(&self.left(g, o), &self.left(f, o))
                        || self.right(o, gf) != compose(&self.right(o, g), &self.right(o, f))
                    {
                        return Err(KanError::NotExtendable(format!("composite {g}∘{f} is not preserved")));
                    }
                }
            }
        }
        for &a in &objs {
            for &b in &objs {
                for &a2 in &objs {
                    for &b2 in &objs {
                        for h in gg_homset(a, b) {
                            for h2 in gg_homset(a2, b2) {
                                let one = compose(&self.left(h, b2), &self.right(a, h2));
                                let other = compose(&self.right(b, h2), &self.left(h, a2));
                                if one != other {
                                    return Err(KanError::NotExtendable(format!(
                                        "({h},id) and (id,{h2}) do not commute"
                                    )));
                                }
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }
}

/// Colimit of the full functor over every cell shape.
pub fn full_colimit(seed: &FunctorSeed, x: &Graph, y: &Graph) -> Result<(CommaDiagram, ColimitResult), KanError> {
    let full = FullFunctor::new(seed)?;
    let diagram = full_comma_category(x, y);
    let nodes = (0..diagram.node_count())
        .map(|k| {
            let (a, b) = diagram.shape(k);
            full.object(a, b)
        })
        .collect();
    let arrows = diagram
        .arrows
        .iter()
        .filter(|a| !(a.left.is_identity() && a.right.is_identity()))
        .map(|a| DiagramArrow { source: a.source, target: a.target, images: full.act(a.left, a.right) })
        .collect();
    let result = colimit(&Diagram { nodes, arrows })?;
    Ok((diagram, result))
}

/// Outcome of comparing the edge-subcategory colimit with the full one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinalityReport {
    /// The map induced by the inclusion of the edge subcategory is an isomorphism.
    pub canonical_iso: bool,
    /// The two colimits are isomorphic by some bijection.
    pub isomorphic: bool,
    pub edge_vertices: usize,
    pub full_vertices: usize,
}

pub fn finality_report(seed: &FunctorSeed, x: &Graph, y: &Graph) -> Result<FinalityReport, KanError> {
    let edge = lan(seed, x, y)?;
    let (full_diagram, full) = full_colimit(seed, x, y)?;
    let d = &edge.diagram;
    let mut images = vec![usize::MAX; edge.colimit.classes.len()];
    for node in 0..d.node_count() {
        let (a, b) = d.node(node);
        let i = full_diagram.left.index_of(a.shape, &a.map).expect("edge cells are cells");
        let j = full_diagram.right.index_of(b.shape, &b.map).expect("edge cells are cells");
        let k = full_diagram.node_index(i, j);
        for (v, &c) in edge.colimit.cocone[node].iter().enumerate() {
            images[c] = full.class_of(k, v);
        }
    }
    let canonical_iso = is_isomorphism_map(&edge.colimit.quotient, &full.quotient, &images);
    let isomorphic = canonical_iso || are_isomorphic(&edge.colimit.quotient, &full.quotient).is_some();
    Ok(FinalityReport {
        canonical_iso,
        isomorphic,
        edge_vertices: edge.colimit.quotient.vertex_count(),
        full_vertices: full.quotient.vertex_count(),
    })
}

/// True iff the full-comma colimit is isomorphic to the edge-subcategory colimit.
pub fn check_finality(seed: &FunctorSeed, x: &Graph, y: &Graph) -> Result<bool, KanError> {
    Ok(finality_report(seed, x, y)?.isomorphic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, edge, path, point};
    use crate::kan::seed::{box_seed, categorical_seed};
    use crate::products::{product, ProductKind};

    #[test]
    fn box_seed_over_point_and_edge_is_an_edge() {
        assert_eq!(lan_product(&box_seed(), &point(), &edge()).unwrap(), edge());
    }

    #[test]
    fn box_seed_over_edges_is_the_square() {
        let r = lan(&box_seed(), &edge(), &edge()).unwrap();
        assert!(are_isomorphic(r.graph(), &cycle(4)).is_some());
        assert!(r.coords.is_some());
    }

    #[test]
    fn categorical_seed_matches_the_product_with_coordinates() {
        for (x, y) in [(path(2), edge()), (cycle(3), path(2)), (point(), complete(3))] {
            let r = lan(&categorical_seed(), &x, &y).unwrap();
            let coords = r.coords.clone().expect("labelled classes");
            let direct = product(ProductKind::Categorical, &x, &y);
            let forward: Vec<usize> = coords.iter().map(|&(a, b)| a * y.vertex_count() + b).collect();
            assert!(is_isomorphism_map(r.graph(), &direct, &forward));
        }
    }

    #[test]
    fn merged_labels_collapse_the_unit() {
        // (s,s) = (s,t) and (t,s) = (t,t) on a single edge
        let seed = FunctorSeed::from_labels(edge(), [0, 0, 1, 1]).unwrap();
        assert_eq!(seed.validate(), Ok(()));
        assert_eq!(lan_product(&seed, &point(), &edge()).unwrap(), point());
        assert!(matches!(FullFunctor::new(&seed), Err(KanError::NotExtendable(_))));
    }

    #[test]
    fn finality_small_cases() {
        assert!(check_finality(&box_seed(), &point(), &edge()).unwrap());
        let r = finality_report(&categorical_seed(), &edge(), &edge()).unwrap();
        assert!(r.canonical_iso);
        assert_eq!(r.full_vertices, 4);
    }

    #[test]
    fn lan_is_functorial_on_maps() {
        let seed = box_seed();
        let f = GraphMap::between(&edge(), &path(2), vec![1, 2]).unwrap();
        let g = GraphMap::between(&edge(), &point(), vec![0, 0]).unwrap();
        let m = lan_map(&seed, &f, &g).unwrap();
        assert_eq!(m.source().vertex_count(), 4);
        assert_eq!(m.target().vertex_count(), 3);
    }

    #[test]
    fn invalid_seed_is_rejected() {
        let mut seed = box_seed();
        seed.actions[0] = vec![0, 0, 0, 0];
        assert!(matches!(lan(&seed, &point(), &point()), Err(KanError::InvalidSeed(_))));
    }
}
