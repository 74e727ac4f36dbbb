//! Comma categories of cells over a pair of graphs.
//!
//! A cell of `X` is a shape `A ∈ {V, E}` with a graph map `ŷ(A) -> X`, i.e. a
//! vertex or an oriented (possibly degenerate) edge. A morphism of cells
//! `(A, f) -> (B, g)` is an `h: A -> B` in 𝔾 with `g ∘ ŷ(h) = f`. The comma
//! category over a pair `(X, Y)` is the product of the two cell categories.

use std::collections::HashMap;

use crate::gg::{gg_homset, yoneda_action, yoneda_images, yoneda_object, GGMorphism, GGObject};
use crate::graph::{enumerate_vertex_maps, Graph, GraphMap};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub shape: GGObject,
    /// Vertex function `ŷ(shape) -> X`.
    pub map: Vec<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CellArrow {
    pub source: usize,
    pub target: usize,
    pub morphism: GGMorphism,
}

/// Cells of one graph together with every morphism between them.
#[derive(Clone, Debug)]
pub struct CellCategory {
    pub graph: Graph,
    pub cells: Vec<Cell>,
    pub arrows: Vec<CellArrow>,
    lookup: HashMap<(GGObject, Vec<usize>), usize>,
}

impl CellCategory {
    /// Edge cells only: the maps `I_1 -> X`.
    pub fn edges_only(x: &Graph) -> Self {
        Self::build(x, &[GGObject::E])
    }

    /// Vertex cells followed by edge cells.
    pub fn full(x: &Graph) -> Self {
        Self::build(x, &[GGObject::V, GGObject::E])
    }

    fn build(x: &Graph, shapes: &[GGObject]) -> Self {
        let mut cells = Vec::new();
        for &shape in shapes {
            for map in enumerate_vertex_maps(&yoneda_object(shape), x) {
                cells.push(Cell { shape, map });
            }
        }
        let mut arrows = Vec::new();
        for (i, c) in cells.iter().enumerate() {
            for &b in shapes {
                for h in gg_homset(c.shape, b) {
                    let along = yoneda_images(h);
                    for (j, d) in cells.iter().enumerate() {
                        if d.shape == b && along.iter().zip(&c.map).all(|(&k, &v)| d.map[k] == v) {
                            arrows.push(CellArrow { source: i, target: j, morphism: h });
                        }
                    }
                }
            }
        }
        let lookup = cells.iter().enumerate().map(|(i, c)| ((c.shape, c.map.clone()), i)).collect();
        CellCategory { graph: x.clone(), cells, arrows, lookup }
    }

    pub fn index_of(&self, shape: GGObject, map: &[usize]) -> Option<usize> {
        self.lookup.get(&(shape, map.to_vec())).copied()
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CommaArrow {
    pub source: usize,
    pub target: usize,
    pub left: GGMorphism,
    pub right: GGMorphism,
}

/// The comma category `ŷ×ŷ ↓ (X, Y)` or its edge subcategory.
///
/// Node `k` is the pair of cells `(k / right.len(), k % right.len())`.
#[derive(Clone, Debug)]
pub struct CommaDiagram {
    pub left: CellCategory,
    pub right: CellCategory,
    pub arrows: Vec<CommaArrow>,
}

impl CommaDiagram {
    fn from_factors(left: CellCategory, right: CellCategory) -> Self {
        let nr = right.len();
        let mut arrows = Vec::with_capacity(left.arrows.len() * right.arrows.len());
        for la in &left.arrows {
            for ra in &right.arrows {
                arrows.push(CommaArrow {
                    source: la.source * nr + ra.source,
                    target: la.target * nr + ra.target,
                    left: la.morphism,
                    right: ra.morphism,
                });
            }
        }
        CommaDiagram { left, right, arrows }
    }

    pub fn node_count(&self) -> usize {
        self.left.len() * self.right.len()
    }

    pub fn node(&self, k: usize) -> (&Cell, &Cell) {
        let nr = self.right.len();
        (&self.left.cells[k / nr], &self.right.cells[k % nr])
    }

    pub fn node_index(&self, left: usize, right: usize) -> usize {
        left * self.right.len() + right
    }

    pub fn shape(&self, k: usize) -> (GGObject, GGObject) {
        let (a, b) = self.node(k);
        (a.shape, b.shape)
    }

    /// Re-checks the triangle `g ∘ ŷ(h) = f` in both coordinates, composing
    /// the realized maps rather than using the cached vertex functions.
    pub fn arrow_commutes(&self, arrow: &CommaArrow) -> bool {
        let (f, f2) = self.node(arrow.source);
        let (g, g2) = self.node(arrow.target);
        let side = |graph: &Graph, from: &Cell, to: &Cell, h: GGMorphism| {
            if h.source() != from.shape || h.target() != to.shape {
                return false;
            }
            let to_map = GraphMap::between(&yoneda_object(to.shape), graph, to.map.clone()).expect("cell map");
            to_map.after(&yoneda_action(h)).map(|m| m.images() == from.map.as_slice()).unwrap_or(false)
        };
        side(&self.left.graph, f, g, arrow.left) && side(&self.right.graph, f2, g2, arrow.right)
    }
}

pub fn edge_comma_category(x: &Graph, y: &Graph) -> CommaDiagram {
    CommaDiagram::from_factors(CellCategory::edges_only(x), CellCategory::edges_only(y))
}

pub fn full_comma_category(x: &Graph, y: &Graph) -> CommaDiagram {
    CommaDiagram::from_factors(CellCategory::full(x), CellCategory::full(y))
}
