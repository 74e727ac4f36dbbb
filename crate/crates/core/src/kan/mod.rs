//! Left Kan extensions of seeds along `ŷ × ŷ`, computed as colimits over
//! comma categories of cells.

pub mod colimit;
pub mod comma;
pub mod lan;
pub mod seed;

use thiserror::Error;

pub use colimit::{colimit, enumerate_cocones, ColimitResult, Diagram, DiagramArrow};
pub use comma::{edge_comma_category, full_comma_category, Cell, CellCategory, CommaArrow, CommaDiagram};
pub use lan::{
    check_finality, finality_report, full_colimit, lan, lan_map, lan_map_between, lan_product, FinalityReport,
    FullFunctor, LanResult,
};
pub use seed::{box_seed, categorical_seed, labelled_seed, End, FunctorSeed, Generator, Label, SeedViolation, Side};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KanError {
    #[error("invalid seed: {0}")]
    InvalidSeed(#[from] SeedViolation),
    #[error("arrow {0} has an endpoint outside the diagram")]
    DanglingArrow(usize),
    #[error("arrow {0} does not carry a graph map between its node graphs")]
    ArrowNotGraphMap(usize),
    #[error("seed does not extend to the full index category: {0}")]
    NotExtendable(String),
    #[error("induced map between colimits is not well defined")]
    NotFunctorial,
}
