//! Vertex names for constructed graphs.

use reflex_core::kan::{Cell, LanResult};
use reflex_core::products::{product_coords, InternalHom};

use crate::files::NamedGraph;

/// `(a,b)` in row-major order.
pub fn product_names(x: &NamedGraph, y: &NamedGraph) -> Vec<String> {
    product_coords(&x.graph, &y.graph).into_iter().map(|(a, b)| format!("({},{})", x.names[a], y.names[b])).collect()
}

/// `[a->p,b->q]` for each map, in hom vertex order.
pub fn hom_names(x: &NamedGraph, y: &NamedGraph, hom: &InternalHom) -> Vec<String> {
    hom.maps.iter().map(|m| map_signature(&x.names, &y.names, m.images())).collect()
}

pub fn map_signature(source: &[String], target: &[String], images: &[usize]) -> String {
    let parts: Vec<String> = images.iter().enumerate().map(|(v, &w)| format!("{}->{}", source[v], target[w])).collect();
    format!("[{}]", parts.join(","))
}

fn cell_name(names: &[String], cell: &Cell) -> String {
    let ends: Vec<&str> = cell.map.iter().map(|&v| names[v].as_str()).collect();
    ends.join("-")
}

/// `(a,b)` when the classes have coordinates, otherwise the smallest member
/// of each class as `vertex@(cell,cell)`.
pub fn lan_names(result: &LanResult, seed_names: &[String], x: &NamedGraph, y: &NamedGraph) -> Vec<String> {
    if let Some(coords) = &result.coords {
        return coords.iter().map(|&(a, b)| format!("({},{})", x.names[a], y.names[b])).collect();
    }
    result
        .colimit
        .classes
        .iter()
        .map(|members| {
            let (node, v) = members[0];
            let (f, g) = result.diagram.node(node);
            format!("{}@({},{})", seed_names[v], cell_name(&x.names, f), cell_name(&y.names, g))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use reflex_core::graph::{edge, point};
    use reflex_core::kan::{box_seed, lan};
    use reflex_core::FunctorSeed;

    fn named(g: reflex_core::Graph, names: &[&str]) -> NamedGraph {
        NamedGraph { graph: g, names: names.iter().map(|s| s.to_string()).collect() }
    }

    #[test]
    fn product_and_lan_names_agree_for_the_box_seed() {
        let (x, y) = (named(edge(), &["a", "b"]), named(edge(), &["c", "d"]));
        let r = lan(&box_seed(), &x.graph, &y.graph).unwrap();
        let mut from_lan = lan_names(&r, &[], &x, &y);
        from_lan.sort();
        assert_eq!(from_lan, product_names(&x, &y));
    }

    #[test]
    fn collapsed_classes_use_representatives() {
        let seed = FunctorSeed::from_labels(edge(), [0, 0, 1, 1]).unwrap();
        let (x, y) = (named(point(), &["p"]), named(edge(), &["c", "d"]));
        let r = lan(&seed, &x.graph, &y.graph).unwrap();
        let names = lan_names(&r, &["ss=st".into(), "ts=tt".into()], &x, &y);
        assert_eq!(names, ["ss=st@(p-p,c-c)"]);
    }
}
