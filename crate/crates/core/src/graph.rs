//! Finite reflexive graphs and the maps between them.
//!
//! A [`Graph`] stores only its non-loop edges. Every vertex implicitly carries
//! a loop, so a vertex function is a graph map as soon as each stored edge is
//! sent either to a stored edge or collapsed onto a single vertex.

use std::fmt;
use std::sync::Arc;

use crate::error::GraphError;
use crate::uf::UnionFind;

/// A finite simple graph with vertices `0..n` and an implicit loop at every vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<bool>,
}

impl Graph {
    /// Builds a graph, normalizing each pair to `(min, max)` and dropping duplicates.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::ExplicitLoop(u));
            }
            list.push((u.min(v), u.max(v)));
        }
        Ok(Self::from_normalized(n, list))
    }

    /// Builds a graph from pairs that may contain self-pairs; those are dropped.
    /// This is the reflector onto simple graphs used by quotients.
    pub(crate) fn collapse(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let list = edges.into_iter().filter(|&(u, v)| u != v).map(|(u, v)| (u.min(v), u.max(v))).collect();
        Self::from_normalized(n, list)
    }

    fn from_normalized(n: usize, mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_unstable();
        edges.dedup();
        let mut adj = vec![false; n * n];
        for &(u, v) in &edges {
            adj[u * n + v] = true;
            adj[v * n + u] = true;
        }
        Graph { n, edges, adj }
    }

    pub fn empty() -> Self {
        Self::from_normalized(0, Vec::new())
    }

    /// `n` isolated vertices.
    pub fn discrete(n: usize) -> Self {
        Self::from_normalized(n, Vec::new())
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Stored edges as sorted `(u, v)` pairs with `u < v`.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Distinct and joined by a stored edge.
    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u * self.n + v]
    }

    /// Equal, or adjacent. This is adjacency in the reflexive sense.
    #[inline]
    pub fn linked(&self, u: usize, v: usize) -> bool {
        u == v || self.adjacent(u, v)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.n).filter(move |&w| self.adjacent(v, w))
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Checks the reflexive homomorphism condition for `images` as a map `self -> target`.
    pub fn is_map_into(&self, target: &Graph, images: &[usize]) -> Result<bool, GraphError> {
        check_images(self, target, images)?;
        Ok(self.edges.iter().all(|&(u, v)| target.linked(images[u], images[v])))
    }

    /// The subgraph induced on `vertices`, renumbered in the given order.
    pub fn induced(&self, vertices: &[usize]) -> Graph {
        let mut edges = Vec::new();
        for (i, &u) in vertices.iter().enumerate() {
            for (j, &v) in vertices.iter().enumerate().skip(i + 1) {
                if self.adjacent(u, v) {
                    edges.push((i, j));
                }
            }
        }
        Self::from_normalized(vertices.len(), edges)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({}; {:?})", self.n, self.edges)
    }
}

fn check_images(source: &Graph, target: &Graph, images: &[usize]) -> Result<(), GraphError> {
    if images.len() != source.n {
        return Err(GraphError::MapArity { expected: source.n, found: images.len() });
    }
    if let Some(&bad) = images.iter().find(|&&w| w >= target.n) {
        return Err(GraphError::ImageOutOfRange { image: bad, n: target.n });
    }
    Ok(())
}

/// Standard graph families.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StandardKind {
    /// `I_n`: `n + 1` vertices in a line.
    Path,
    /// `C_n`, `n >= 3`.
    Cycle,
    /// `K_n`, `n >= 1`.
    Complete,
}

pub fn standard_graph(kind: StandardKind, n: usize) -> Result<Graph, GraphError> {
    match kind {
        StandardKind::Path => Ok(path(n)),
        StandardKind::Cycle if n < 3 => Err(GraphError::CycleTooShort(n)),
        StandardKind::Cycle => Ok(cycle(n)),
        StandardKind::Complete if n == 0 => Err(GraphError::EmptyComplete),
        StandardKind::Complete => Ok(complete(n)),
    }
}

pub fn path(n: usize) -> Graph {
    Graph::from_normalized(n + 1, (0..n).map(|i| (i, i + 1)).collect())
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    Graph::from_normalized(n, (0..n).map(|i| (i, (i + 1) % n)).map(|(u, v)| (u.min(v), u.max(v))).collect())
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::from_normalized(n, edges)
}

/// The single vertex `I_0`, the terminal graph.
pub fn point() -> Graph {
    path(0)
}

/// The single edge `I_1`. Vertex 0 is the source end, vertex 1 the target end.
pub fn edge() -> Graph {
    path(1)
}

/// A validated reflexive graph homomorphism.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GraphMap {
    source: Arc<Graph>,
    target: Arc<Graph>,
    images: Vec<usize>,
}

impl GraphMap {
    pub fn new(source: Arc<Graph>, target: Arc<Graph>, images: Vec<usize>) -> Result<Self, GraphError> {
        if !source.is_map_into(&target, &images)? {
            return Err(GraphError::NotAGraphMap);
        }
        Ok(GraphMap { source, target, images })
    }

    /// Same as [`GraphMap::new`] but clones the endpoint graphs.
    pub fn between(source: &Graph, target: &Graph, images: Vec<usize>) -> Result<Self, GraphError> {
        Self::new(Arc::new(source.clone()), Arc::new(target.clone()), images)
    }

    pub(crate) fn new_unchecked(source: Arc<Graph>, target: Arc<Graph>, images: Vec<usize>) -> Self {
        debug_assert!(source.is_map_into(&target, &images).unwrap_or(false));
        GraphMap { source, target, images }
    }

    pub fn identity(graph: &Graph) -> Self {
        let g = Arc::new(graph.clone());
        GraphMap { images: (0..g.n).collect(), source: g.clone(), target: g }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn source_arc(&self) -> &Arc<Graph> {
        &self.source
    }

    pub fn target_arc(&self) -> &Arc<Graph> {
        &self.target
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    pub fn apply(&self, v: usize) -> usize {
        self.images[v]
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &GraphMap) -> Result<GraphMap, GraphError> {
        if *first.target != *self.source {
            return Err(GraphError::NotComposable);
        }
        let images = first.images.iter().map(|&v| self.images[v]).collect();
        Ok(GraphMap { source: first.source.clone(), target: self.target.clone(), images })
    }
}

impl fmt::Debug for GraphMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GraphMap({} -> {}: {:?})", self.source.n, self.target.n, self.images)
    }
}

pub fn is_graph_map(source: &Graph, target: &Graph, images: &[usize]) -> Result<bool, GraphError> {
    source.is_map_into(target, images)
}

/// All graph maps `source -> target` as vertex functions, in lexicographic order.
pub fn enumerate_vertex_maps(source: &Graph, target: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_map(source, target, |m| out.push(m.to_vec()));
    out
}

/// All graph maps `source -> target`, in lexicographic order of their vertex functions.
pub fn enumerate_maps(source: &Graph, target: &Graph) -> Vec<GraphMap> {
    let s = Arc::new(source.clone());
    let t = Arc::new(target.clone());
    let mut out = Vec::new();
    for_each_map(source, target, |m| out.push(GraphMap { source: s.clone(), target: t.clone(), images: m.to_vec() }));
    out
}

pub fn count_maps(source: &Graph, target: &Graph) -> u64 {
    let mut count = 0u64;
    for_each_map(source, target, |_| count += 1);
    count
}

/// Backtracking over vertices in index order; values tried in ascending order,
/// which yields lexicographic output.
pub fn for_each_map(source: &Graph, target: &Graph, mut visit: impl FnMut(&[usize])) {
    let n = source.n;
    if n == 0 {
        visit(&[]);
        return;
    }
    if target.n == 0 {
        return;
    }
    let earlier: Vec<Vec<usize>> = (0..n).map(|v| (0..v).filter(|&u| source.adjacent(u, v)).collect()).collect();
    let mut images = vec![0usize; n];
    let mut depth = 0usize;
    let mut next = vec![0usize; n];
    loop {
        let mut placed = false;
        while next[depth] < target.n {
            let w = next[depth];
            next[depth] += 1;
            if earlier[depth].iter().all(|&u| target.linked(images[u], w)) {
                images[depth] = w;
                placed = true;
                break;
            }
        }
        if placed {
            if depth + 1 == n {
                visit(&images);
            } else {
                depth += 1;
                next[depth] = 0;
            }
        } else {
            if depth == 0 {
                return;
            }
            depth -= 1;
        }
    }
}

/// Inverse pair of vertex functions, used as an isomorphism witness.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bijection {
    pub forward: Vec<usize>,
    pub backward: Vec<usize>,
}

impl Bijection {
    pub fn from_forward(forward: Vec<usize>) -> Option<Self> {
        let mut backward = vec![usize::MAX; forward.len()];
        for (i, &j) in forward.iter().enumerate() {
            if j >= forward.len() || backward[j] != usize::MAX {
                return None;
            }
            backward[j] = i;
        }
        Some(Bijection { forward, backward })
    }

    /// True when both directions preserve edges, i.e. the bijection is a graph isomorphism.
    pub fn is_isomorphism(&self, x: &Graph, y: &Graph) -> bool {
        x.n == self.forward.len()
            && y.n == self.backward.len()
            && x.edge_count() == y.edge_count()
            && x.is_map_into(y, &self.forward).unwrap_or(false)
            && y.is_map_into(x, &self.backward).unwrap_or(false)
            && x.edges.iter().all(|&(u, v)| y.adjacent(self.forward[u], self.forward[v]))
    }
}

/// Checks that a vertex function is bijective and preserves and reflects stored edges.
pub fn is_isomorphism_map(x: &Graph, y: &Graph, images: &[usize]) -> bool {
    Bijection::from_forward(images.to_vec()).is_some_and(|b| b.is_isomorphism(x, y))
}

/// A binary coproduct with its injections.
#[derive(Clone, Debug)]
pub struct Coproduct {
    pub graph: Graph,
    pub left: GraphMap,
    pub right: GraphMap,
}

pub fn disjoint_union(x: &Graph, y: &Graph) -> Coproduct {
    let shift = x.n;
    let edges = x.edges.iter().copied().chain(y.edges.iter().map(|&(u, v)| (u + shift, v + shift))).collect();
    let graph = Arc::new(Graph::from_normalized(x.n + y.n, edges));
    let left = GraphMap::new_unchecked(Arc::new(x.clone()), graph.clone(), (0..x.n).collect());
    let right = GraphMap::new_unchecked(Arc::new(y.clone()), graph.clone(), (shift..shift + y.n).collect());
    Coproduct { graph: (*graph).clone(), left, right }
}

/// A pushout with its cospan `x -> graph <- y`.
#[derive(Clone, Debug)]
pub struct Pushout {
    pub graph: Graph,
    pub left: GraphMap,
    pub right: GraphMap,
}

/// Pushout of `x <- a -> y`: the quotient of `x ⊔ y` identifying `f(a)` with `g(a)`.
pub fn pushout(f: &GraphMap, g: &GraphMap) -> Result<Pushout, GraphError> {
    if f.source != g.source && *f.source != *g.source {
        return Err(GraphError::SpanMismatch);
    }
    let (x, y) = (f.target(), g.target());
    let shift = x.n;
    let mut uf = UnionFind::new(x.n + y.n);
    for a in 0..f.source.n {
        uf.union(f.images[a], g.images[a] + shift);
    }
    let (class, count) = uf.dense_classes();
    let edges = x
        .edges
        .iter()
        .map(|&(u, v)| (class[u], class[v]))
        .chain(y.edges.iter().map(|&(u, v)| (class[u + shift], class[v + shift])));
    let graph = Arc::new(Graph::collapse(count, edges));
    let left = GraphMap::new_unchecked(f.target.clone(), graph.clone(), class[..shift].to_vec());
    let right = GraphMap::new_unchecked(g.target.clone(), graph.clone(), class[shift..].to_vec());
    Ok(Pushout { graph: (*graph).clone(), left, right })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, e: &[(usize, usize)]) -> Graph {
        Graph::new(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn make_graph_normalizes() {
        let x = g(3, &[(2, 0), (0, 2), (1, 0)]);
        assert_eq!(x.edges(), &[(0, 1), (0, 2)]);
        assert_eq!(g(2, &[(0, 1)]), edge());
        assert_eq!(g(1, &[]), point());
    }

    #[test]
    fn make_graph_rejects_loops_and_range() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(GraphError::ExplicitLoop(0)));
        assert!(matches!(Graph::new(2, [(0, 2)]), Err(GraphError::EndpointOutOfRange { .. })));
        assert_eq!(GraphError::ExplicitLoop(0).to_string(), "explicit loop at vertex 0");
    }

    #[test]
    fn standard_families() {
        let p4 = standard_graph(StandardKind::Path, 4).unwrap();
        assert_eq!((p4.vertex_count(), p4.edges()), (5, &[(0, 1), (1, 2), (2, 3), (3, 4)][..]));
        assert_eq!(standard_graph(StandardKind::Path, 0).unwrap(), point());
        assert_eq!(standard_graph(StandardKind::Complete, 4).unwrap().edge_count(), 6);
        assert_eq!(standard_graph(StandardKind::Cycle, 2), Err(GraphError::CycleTooShort(2)));
        let c5 = standard_graph(StandardKind::Cycle, 5).unwrap();
        assert_eq!((c5.vertex_count(), c5.edge_count()), (5, 5));
    }

    #[test]
    fn coproducts() {
        let u = disjoint_union(&point(), &point());
        assert_eq!(u.graph, Graph::discrete(2));
        let u = disjoint_union(&edge(), &edge());
        assert_eq!(u.graph.edges(), &[(0, 1), (2, 3)]);
        assert_eq!(u.right.images(), &[2, 3]);
        let u = disjoint_union(&point(), &edge());
        assert_eq!((u.graph.vertex_count(), u.graph.edge_count()), (3, 1));
    }

    #[test]
    fn pushout_of_boundary_along_itself_is_an_edge() {
        let two = Graph::discrete(2);
        let d = GraphMap::between(&two, &edge(), vec![0, 1]).unwrap();
        let p = pushout(&d, &d).unwrap();
        assert_eq!(p.graph, edge());
    }

    #[test]
    fn pushout_gluing_one_endpoint_gives_a_path() {
        let s = GraphMap::between(&point(), &edge(), vec![0]).unwrap();
        let t = GraphMap::between(&point(), &edge(), vec![1]).unwrap();
        let p = pushout(&s, &t).unwrap();
        assert_eq!(p.graph.vertex_count(), 3);
        assert!(crate::iso::are_isomorphic(&p.graph, &path(2)).is_some());
        let id = GraphMap::identity(&point());
        assert_eq!(pushout(&id, &id).unwrap().graph, point());
    }

    #[test]
    fn graph_map_condition() {
        assert!(is_graph_map(&edge(), &edge(), &[0, 1]).unwrap());
        assert!(is_graph_map(&edge(), &point(), &[0, 0]).unwrap());
        assert!(!is_graph_map(&edge(), &path(2), &[0, 2]).unwrap());
        assert!(is_graph_map(&edge(), &point(), &[0, 1]).is_err());
    }

    #[test]
    fn enumerate_small_cases() {
        let maps = enumerate_vertex_maps(&edge(), &edge());
        assert_eq!(maps, vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]);
        assert_eq!(enumerate_maps(&edge(), &complete(3)).len(), 9);
        assert_eq!(enumerate_maps(&point(), &cycle(5)).len(), 5);
        assert_eq!(count_maps(&Graph::empty(), &Graph::empty()), 1);
        assert_eq!(count_maps(&point(), &Graph::empty()), 0);
    }

    #[test]
    fn composition_checks_endpoints() {
        let f = GraphMap::between(&edge(), &edge(), vec![1, 0]).unwrap();
        let c = GraphMap::between(&edge(), &point(), vec![0, 0]).unwrap();
        assert_eq!(c.after(&f).unwrap().images(), &[0, 0]);
        assert_eq!(f.after(&c), Err(GraphError::NotComposable));
    }
}
