use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("explicit loop at vertex {0}")]
    ExplicitLoop(usize),
    #[error("cycle needs at least 3 vertices, got {0}")]
    CycleTooShort(usize),
    #[error("complete graph needs at least 1 vertex")]
    EmptyComplete,
    #[error("vertex function has {found} entries, source has {expected} vertices")]
    MapArity { expected: usize, found: usize },
    #[error("image {image} outside target vertex range 0..{n}")]
    ImageOutOfRange { image: usize, n: usize },
    #[error("vertex function is not a graph map")]
    NotAGraphMap,
    #[error("maps are not composable")]
    NotComposable,
    #[error("span legs do not share a source")]
    SpanMismatch,
}
