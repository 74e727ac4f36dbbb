//! Colimits of finite diagrams of graphs.
//!
//! The colimit is the disjoint union of all node graphs, with vertices
//! identified along every arrow and the resulting parallel edges and loops
//! collapsed. Classes are numbered by their smallest global vertex index,
//! where node `k`'s vertices follow those of nodes `0..k`.

use crate::graph::Graph;
use crate::kan::KanError;
use crate::uf::UnionFind;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DiagramArrow {
    pub source: usize,
    pub target: usize,
    pub images: Vec<usize>,
}

/// A diagram of graphs: nodes carry graphs, arrows carry vertex functions.
#[derive(Clone, Debug, Default)]
pub struct Diagram {
    pub nodes: Vec<Graph>,
    pub arrows: Vec<DiagramArrow>,
}

impl Diagram {
    pub fn validate(&self) -> Result<(), KanError> {
        for (i, a) in self.arrows.iter().enumerate() {
            if a.source >= self.nodes.len() || a.target >= self.nodes.len() {
                return Err(KanError::DanglingArrow(i));
            }
            match self.nodes[a.source].is_map_into(&self.nodes[a.target], &a.images) {
                Ok(true) => {}
                _ => return Err(KanError::ArrowNotGraphMap(i)),
            }
        }
        Ok(())
    }

    fn offsets(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.nodes.len() + 1);
        let mut acc = 0;
        out.push(0);
        for g in &self.nodes {
            acc += g.vertex_count();
            out.push(acc);
        }
        out
    }
}

#[derive(Clone, Debug)]
pub struct ColimitResult {
    pub quotient: Graph,
    /// Per node, the vertex function into the quotient.
    pub cocone: Vec<Vec<usize>>,
    /// Members `(node, vertex)` of each class, in global index order.
    pub classes: Vec<Vec<(usize, usize)>>,
}

impl ColimitResult {
    pub fn class_of(&self, node: usize, v: usize) -> usize {
        self.cocone[node][v]
    }

    /// The mediating map for a cocone into `target`, if the cocone is constant
    /// on classes and the induced vertex function is a graph map.
    pub fn factor(&self, cocone: &[Vec<usize>], target: &Graph) -> Option<Vec<usize>> {
        let mut images = vec![usize::MAX; self.classes.len()];
        for (node, maps) in cocone.iter().enumerate() {
            for (v, &w) in maps.iter().enumerate() {
                let c = self.cocone[node][v];
                if images[c] != usize::MAX && images[c] != w {
                    return None;
                }
                images[c] = w;
            }
        }
        if images.contains(&usize::MAX) {
            return None;
        }
        self.quotient.is_map_into(target, &images).ok()?.then_some(images)
    }
}

pub fn colimit(diagram: &Diagram) -> Result<ColimitResult, KanError> {
    diagram.validate()?;
    let offsets = diagram.offsets();
    let total = *offsets.last().expect("offsets start at zero");
    let mut uf = UnionFind::new(total);
    for a in &diagram.arrows {
        let (s, t) = (offsets[a.source], offsets[a.target]);
        for (v, &w) in a.images.iter().enumerate() {
            uf.union(s + v, t + w);
        }
    }
    let (class, count) = uf.dense_classes();
    let mut edges = Vec::new();
    for (k, g) in diagram.nodes.iter().enumerate() {
        let base = offsets[k];
        edges.extend(g.edges().iter().map(|&(u, v)| (class[base + u], class[base + v])));
    }
    let quotient = Graph::collapse(count, edges);
    let cocone: Vec<Vec<usize>> =
        (0..diagram.nodes.len()).map(|k| class[offsets[k]..offsets[k + 1]].to_vec()).collect();
    let mut classes = vec![Vec::new(); count];
    for (k, maps) in cocone.iter().enumerate() {
        for (v, &c) in maps.iter().enumerate() {
            classes[c].push((k, v));
        }
    }
    Ok(ColimitResult { quotient, cocone, classes })
}

/// Every cocone from `diagram` into `target`, found by constraint search over
/// the disjoint union without computing the quotient. Each cocone is a list of
/// per-node vertex functions.
pub fn enumerate_cocones(diagram: &Diagram, target: &Graph) -> Result<Vec<Vec<Vec<usize>>>, KanError> {
    diagram.validate()?;
    let offsets = diagram.offsets();
    let total = *offsets.last().expect("offsets start at zero");
    // Constraints against earlier global vertices: must be equal, or must be linked.
    let mut equal: Vec<Vec<usize>> = vec![Vec::new(); total];
    let mut linked: Vec<Vec<usize>> = vec![Vec::new(); total];
    for a in &diagram.arrows {
        for (v, &w) in a.images.iter().enumerate() {
            let (p, q) = (offsets[a.source] + v, offsets[a.target] + w);
            if p != q {
                equal[p.max(q)].push(p.min(q));
            }
        }
    }
    for (k, g) in diagram.nodes.iter().enumerate() {
        for &(u, v) in g.edges() {
            linked[offsets[k] + v].push(offsets[k] + u);
        }
    }
    let mut out = Vec::new();
    let mut assign = vec![0usize; total];
    fn go(
        i: usize,
        assign: &mut [usize],
        equal: &[Vec<usize>],
        linked: &[Vec<usize>],
        target: &Graph,
        visit: &mut dyn FnMut(&[usize]),
    ) {
        if i == assign.len() {
            visit(assign);
            return;
        }
        for w in 0..target.vertex_count() {
            if equal[i].iter().all(|&j| assign[j] == w) && linked[i].iter().all(|&j| target.linked(assign[j], w)) {
                assign[i] = w;
                go(i + 1, assign, equal, linked, target, visit);
            }
        }
    }
    let mut visit = |a: &[usize]| {
        out.push((0..diagram.nodes.len()).map(|k| a[offsets[k]..offsets[k + 1]].to_vec()).collect());
    };
    go(0, &mut assign, &equal, &linked, target, &mut visit);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{count_maps, cycle, edge, path};
    use crate::iso::are_isomorphic;

    #[test]
    fn single_node_is_its_own_colimit() {
        let d = Diagram { nodes: vec![path(3)], arrows: vec![] };
        assert_eq!(colimit(&d).unwrap().quotient, path(3));
    }

    #[test]
    fn isomorphism_arrow_glues_two_copies() {
        let d = Diagram {
            nodes: vec![cycle(4), cycle(4)],
            arrows: vec![DiagramArrow { source: 0, target: 1, images: vec![1, 2, 3, 0] }],
        };
        let c = colimit(&d).unwrap();
        assert!(are_isomorphic(&c.quotient, &cycle(4)).is_some());
    }

    #[test]
    fn merging_adjacent_vertices_drops_the_loop() {
        let d = Diagram {
            nodes: vec![edge(), edge()],
            arrows: vec![DiagramArrow { source: 0, target: 1, images: vec![0, 0] }],
        };
        let c = colimit(&d).unwrap();
        assert_eq!(c.quotient, edge());
        assert_eq!(c.cocone, vec![vec![0, 0], vec![0, 1]]);
    }

    #[test]
    fn malformed_diagrams_are_rejected() {
        let dangling =
            Diagram { nodes: vec![edge()], arrows: vec![DiagramArrow { source: 0, target: 3, images: vec![0, 1] }] };
        assert_eq!(colimit(&dangling).unwrap_err(), KanError::DanglingArrow(0));
        let bad = Diagram {
            nodes: vec![edge(), path(2)],
            arrows: vec![DiagramArrow { source: 0, target: 1, images: vec![0, 2] }],
        };
        assert_eq!(colimit(&bad).unwrap_err(), KanError::ArrowNotGraphMap(0));
    }

    #[test]
    fn cocones_factor_uniquely() {
        let d = Diagram {
            nodes: vec![edge(), edge()],
            arrows: vec![DiagramArrow { source: 0, target: 1, images: vec![1, 1] }],
        };
        let c = colimit(&d).unwrap();
        for t in [edge(), path(2), cycle(3)] {
            let cocones = enumerate_cocones(&d, &t).unwrap();
            assert_eq!(cocones.len() as u64, count_maps(&c.quotient, &t));
            assert!(cocones.iter().all(|k| c.factor(k, &t).is_some()));
        }
    }
}
