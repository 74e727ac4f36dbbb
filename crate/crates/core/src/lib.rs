//! Closed symmetric monoidal structures on finite reflexive graphs.
//!
//! The crate computes graph products and internal homs, left Kan extensions
//! of candidate functors on the index category via comma-category colimits,
//! and exhaustive falsification checks for the monoidal, symmetric and closed
//! properties.

pub mod classify;
pub mod error;
pub mod gg;
pub mod graph;
pub mod iso;
pub mod kan;
pub mod monoidal;
pub mod products;
pub mod uf;
pub mod universe;

pub use error::GraphError;
pub use gg::{gg_compose, gg_homset, yoneda_action, GGMorphism, GGObject};
pub use graph::{
    count_maps, disjoint_union, enumerate_maps, enumerate_vertex_maps, is_graph_map, pushout, standard_graph,
    Bijection, Coproduct, Graph, GraphMap, Pushout, StandardKind,
};
pub use iso::are_isomorphic;
pub use kan::{
    check_finality, colimit, edge_comma_category, full_comma_category, lan, lan_product, ColimitResult, CommaDiagram,
    FunctorSeed, KanError,
};
pub use monoidal::{
    check_adjunction, check_associativity, check_cocontinuity, check_symmetry, check_unit, property_table, CheckReport,
    ProductUnderTest, PropertyTable, Verdict,
};
pub use products::{curry, internal_hom, product, uncurry, Currying, HomKind, InternalHom, ProductKind};
pub use universe::graphs_up_to;
