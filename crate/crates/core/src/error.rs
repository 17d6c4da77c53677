use thiserror::Error;

/// Errors raised by constructions, enumerations and formula evaluation.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("element id {id} out of range for a poset with {n} elements")]
    InvalidElement { id: usize, n: usize },

    #[error("cover relation contains a cycle")]
    Cyclic,

    #[error("cover pair ({lower}, {upper}) is implied by transitivity")]
    NotTransitivelyReduced { lower: usize, upper: usize },

    #[error("{what} has {actual} items, limit is {limit}")]
    SizeLimit {
        what: &'static str,
        actual: usize,
        limit: usize,
    },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("vertex set is not an interval of the lattice")]
    NotAnInterval,

    #[error("interval is not a cutting of the lattice")]
    NotACutting,

    #[error("graph is not graded: {0}")]
    NotGraded(String),

    #[error("malformed hexagonal chain code: {0}")]
    MalformedChain(String),

    #[error("search budget exhausted after {nodes} nodes in {what}")]
    SearchBudget { what: &'static str, nodes: u64 },

    #[error("series denominator must have constant term 1")]
    NotExpandable,

    #[error("inexact division: {0}")]
    InexactDivision(String),
}

pub type Result<T> = std::result::Result<T, Error>;
