//! Binary graph products on `V(X) × V(Y)` and the internal homs of the two
//! closed ones.
//!
//! Product vertices are numbered row-major: `(x, y) ↦ x·|V(Y)| + y`.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::GraphError;
use crate::graph::{enumerate_vertex_maps, Graph, GraphMap};

/// The six products, each determined by an edge predicate on pairs of
/// distinct product vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ProductKind {
    /// One coordinate steps along an edge, the other stays.
    Box,
    /// Each coordinate stays or steps (the strong product).
    Categorical,
    /// Both coordinates step.
    Tensor,
    Lexicographic,
    Conormal,
    Modular,
}

impl ProductKind {
    pub const ALL: [ProductKind; 6] = [
        ProductKind::Box,
        ProductKind::Categorical,
        ProductKind::Tensor,
        ProductKind::Lexicographic,
        ProductKind::Conormal,
        ProductKind::Modular,
    ];

    /// Display name as used in the property table.
    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Box => "Box",
            ProductKind::Categorical => "Categorical",
            ProductKind::Tensor => "Tensor",
            ProductKind::Lexicographic => "Lexicographical",
            ProductKind::Conormal => "Conormal",
            ProductKind::Modular => "Modular",
        }
    }

    pub fn hom_kind(self) -> Option<HomKind> {
        match self {
            ProductKind::Box => Some(HomKind::Box),
            ProductKind::Categorical => Some(HomKind::Categorical),
            _ => None,
        }
    }

    /// Edge predicate between distinct vertices `(v, v')` and `(w, w')`.
    /// `~` means distinct and adjacent, `≁` distinct and not adjacent.
    pub fn joins(self, x: &Graph, y: &Graph, (v, vp): (usize, usize), (w, wp): (usize, usize)) -> bool {
        let step = x.adjacent(v, w);
        let step2 = y.adjacent(vp, wp);
        match self {
            ProductKind::Box => (step && vp == wp) || (v == w && step2),
            ProductKind::Categorical => x.linked(v, w) && y.linked(vp, wp),
            ProductKind::Tensor => step && step2,
            ProductKind::Lexicographic => step || (v == w && step2),
            ProductKind::Conormal => step || step2,
            ProductKind::Modular => {
                let apart = v != w && !step;
                let apart2 = vp != wp && !step2;
                (step && step2) || (apart && apart2)
            }
        }
    }
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// The two products with internal homs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HomKind {
    Box,
    Categorical,
}

impl HomKind {
    pub const ALL: [HomKind; 2] = [HomKind::Box, HomKind::Categorical];

    pub fn product_kind(self) -> ProductKind {
        match self {
            HomKind::Box => ProductKind::Box,
            HomKind::Categorical => ProductKind::Categorical,
        }
    }
}

impl fmt::Display for HomKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.product_kind().name())
    }
}

#[inline]
pub fn pair_index(y: &Graph, a: usize, b: usize) -> usize {
    a * y.vertex_count() + b
}

pub fn product(kind: ProductKind, x: &Graph, y: &Graph) -> Graph {
    let (nx, ny) = (x.vertex_count(), y.vertex_count());
    let n = nx * ny;
    let mut edges = Vec::new();
    for p in 0..n {
        for q in p + 1..n {
            if kind.joins(x, y, (p / ny, p % ny), (q / ny, q % ny)) {
                edges.push((p, q));
            }
        }
    }
    Graph::new(n, edges).expect("product edges are in range")
}

/// Row-major coordinates of the product vertex set.
pub fn product_coords(x: &Graph, y: &Graph) -> Vec<(usize, usize)> {
    let ny = y.vertex_count();
    (0..x.vertex_count() * ny).map(|p| (p / ny, p % ny)).collect()
}

/// The vertex function `(a, b) ↦ (f a, g b)`. Returns `None` when it is not a
/// graph map between the two products, which happens for kinds that are not
/// functorial on reflexive graphs.
pub fn product_map(kind: ProductKind, f: &GraphMap, g: &GraphMap) -> Option<GraphMap> {
    let source = product(kind, f.source(), g.source());
    let target = product(kind, f.target(), g.target());
    let images = product_coords(f.source(), g.source())
        .into_iter()
        .map(|(a, b)| pair_index(g.target(), f.apply(a), g.apply(b)))
        .collect();
    GraphMap::new(Arc::new(source), Arc::new(target), images).ok()
}

/// `hom(X, Y)`: vertices are the graph maps `X -> Y` in enumeration order.
#[derive(Clone, Debug)]
pub struct InternalHom {
    pub kind: HomKind,
    pub graph: Graph,
    pub maps: Vec<GraphMap>,
    lookup: HashMap<Vec<usize>, usize>,
}

impl InternalHom {
    pub fn vertex_of(&self, images: &[usize]) -> Option<usize> {
        self.lookup.get(images).copied()
    }
}

fn hom_joins(kind: HomKind, x: &Graph, y: &Graph, f: &[usize], g: &[usize]) -> bool {
    match kind {
        HomKind::Box => (0..x.vertex_count()).all(|v| y.linked(f[v], g[v])),
        HomKind::Categorical => {
            (0..x.vertex_count()).all(|v| (0..x.vertex_count()).all(|w| !x.linked(v, w) || y.linked(f[v], g[w])))
        }
    }
}

pub fn internal_hom(kind: HomKind, x: &Graph, y: &Graph) -> InternalHom {
    let raw = enumerate_vertex_maps(x, y);
    let mut edges = Vec::new();
    for i in 0..raw.len() {
        for j in i + 1..raw.len() {
            if hom_joins(kind, x, y, &raw[i], &raw[j]) {
                edges.push((i, j));
            }
        }
    }
    let graph = Graph::new(raw.len(), edges).expect("hom edges are in range");
    let (xs, ys) = (Arc::new(x.clone()), Arc::new(y.clone()));
    let lookup = raw.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let maps = raw.into_iter().map(|m| GraphMap::new_unchecked(xs.clone(), ys.clone(), m)).collect();
    InternalHom { kind, graph, maps, lookup }
}

/// The currying bijection `Hom(X ⊗ Y, Z) ≅ Hom(X, hom(Y, Z))` for one triple.
#[derive(Clone, Debug)]
pub struct Currying {
    pub kind: HomKind,
    pub x: Arc<Graph>,
    pub y: Arc<Graph>,
    pub z: Arc<Graph>,
    pub product: Arc<Graph>,
    pub hom: InternalHom,
    hom_graph: Arc<Graph>,
}

impl Currying {
    pub fn new(kind: HomKind, x: &Graph, y: &Graph, z: &Graph) -> Self {
        let hom = internal_hom(kind, y, z);
        Currying {
            kind,
            x: Arc::new(x.clone()),
            y: Arc::new(y.clone()),
            z: Arc::new(z.clone()),
            product: Arc::new(product(kind.product_kind(), x, y)),
            hom_graph: Arc::new(hom.graph.clone()),
            hom,
        }
    }

    /// Vertex-function form of [`Currying::curry`]; `h` must be a graph map `X ⊗ Y -> Z`.
    pub fn curry_images(&self, h: &[usize]) -> Result<Vec<usize>, GraphError> {
        if !self.product.is_map_into(&self.z, h)? {
            return Err(GraphError::NotAGraphMap);
        }
        let ny = self.y.vertex_count();
        let images = (0..self.x.vertex_count())
            .map(|a| {
                let slice = &h[a * ny..(a + 1) * ny];
                self.hom.vertex_of(slice).ok_or(GraphError::NotAGraphMap)
            })
            .collect::<Result<Vec<_>, _>>()?;
        if !self.x.is_map_into(&self.hom_graph, &images)? {
            return Err(GraphError::NotAGraphMap);
        }
        Ok(images)
    }

    pub fn uncurry_images(&self, g: &[usize]) -> Result<Vec<usize>, GraphError> {
        if !self.x.is_map_into(&self.hom_graph, g)? {
            return Err(GraphError::NotAGraphMap);
        }
        let images: Vec<usize> = g.iter().flat_map(|&m| self.hom.maps[m].images().iter().copied()).collect();
        if !self.product.is_map_into(&self.z, &images)? {
            return Err(GraphError::NotAGraphMap);
        }
        Ok(images)
    }

    pub fn curry(&self, h: &GraphMap) -> Result<GraphMap, GraphError> {
        if *h.source() != *self.product || *h.target() != *self.z {
            return Err(GraphError::NotComposable);
        }
        let images = self.curry_images(h.images())?;
        Ok(GraphMap::new_unchecked(self.x.clone(), self.hom_graph.clone(), images))
    }

    pub fn uncurry(&self, g: &GraphMap) -> Result<GraphMap, GraphError> {
        if *g.source() != *self.x || *g.target() != *self.hom_graph {
            return Err(GraphError::NotComposable);
        }
        let images = self.uncurry_images(g.images())?;
        Ok(GraphMap::new_unchecked(self.product.clone(), self.z.clone(), images))
    }

    pub fn hom_graph(&self) -> &Graph {
        &self.hom_graph
    }
}

/// Curries `h: X ⊗ Y -> Z` into `X -> hom(Y, Z)`.
pub fn curry(kind: HomKind, x: &Graph, y: &Graph, h: &GraphMap) -> Result<GraphMap, GraphError> {
    Currying::new(kind, x, y, h.target()).curry(h)
}

/// Uncurries `g: X -> hom(Y, Z)` into `X ⊗ Y -> Z`.
pub fn uncurry(kind: HomKind, y: &Graph, z: &Graph, g: &GraphMap) -> Result<GraphMap, GraphError> {
    Currying::new(kind, g.source(), y, z).uncurry(g)
}
