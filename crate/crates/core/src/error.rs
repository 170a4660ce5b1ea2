use thiserror::Error;

use crate::fan::Violation;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero vector has no primitive generator")]
    ZeroVector,
    #[error("matrix is {rows}x{cols}, expected square")]
    NotSquare { rows: usize, cols: usize },
    #[error("basis has determinant {det}, expected +-1")]
    NotUnimodular { det: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("cone contains a line")]
    NotStronglyConvex,
    #[error("invalid fan: {}", format_violations(.0))]
    InvalidFan(Vec<Violation>),
    #[error("fan is not complete")]
    NotComplete,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("ray {ray} has infinitely many Demazure roots")]
    InfiniteRoots { ray: usize },
    #[error("no equivalence witness between the two collections")]
    NoWitness,
    #[error("rays do not span the ambient space")]
    RaysDoNotSpan,
    #[error("class group has torsion {0:?}")]
    TorsionClassGroup(Vec<String>),
    #[error("polytope is not full-dimensional")]
    DegeneratePolytope,
    #[error("invalid polytope: {0}")]
    InvalidPolytope(String),
    #[error("{vector} is not a Demazure root for ray {ray}")]
    NotARoot { ray: usize, vector: String },
    #[error("parse error: {0}")]
    Parse(String),
}

fn format_violations(v: &[Violation]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join("; ")
}
