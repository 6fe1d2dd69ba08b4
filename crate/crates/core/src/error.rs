use thiserror::Error;

/// Errors surfaced by constructors and searches.
///
/// Validation failures are reported with enough context to identify the
/// offending element indices; resource refusals carry the bound that was hit
/// so callers can decide whether to raise it.
#[derive(Debug, Error)]
pub enum Error {
    #[error("not a group table: {0}")]
    InvalidTable(String),

    #[error("map is not a homomorphism: images[{x}·{y}] != images[{x}]·images[{y}]")]
    NotAHomomorphism { x: usize, y: usize },

    #[error("subgroup invariant violated: {0}")]
    InvalidSubgroup(String),

    #[error("subgroup is not normal: conjugate of element {element} by {by} escapes")]
    NotNormal { element: usize, by: usize },

    #[error("subgroup is not regular in the holomorph")]
    NotRegular,

    #[error("group of order {order} is not abelian")]
    NotAbelian { order: usize },

    #[error("brace relation fails at triple ({a}, {b}, {c})")]
    BraceRelation { a: usize, b: usize, c: usize },

    #[error("hypothesis (H) not verified for n = {n}, p = {p}: {reason}")]
    HypothesisNotVerified { n: usize, p: usize, reason: String },

    #[error("resource bound exceeded: {what} = {needed} > bound {bound}")]
    ResourceBound {
        what: &'static str,
        needed: usize,
        bound: usize,
    },

    #[error("mismatched arguments: {0}")]
    Mismatch(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("independent computation routes disagree: {0}")]
    RouteDisagreement(String),
}
