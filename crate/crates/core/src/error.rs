use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("matrix is singular")]
    Singular,
    #[error("linear system has no solution")]
    NoSolution,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("table is not a group: {0}")]
    InvalidGroup(String),
    #[error("construction requires characteristic != {0}")]
    BadCharacteristic(u64),
    #[error("subspace is not a unital subring")]
    NotASubring,
    #[error("map is not well defined on the quotient: {0}")]
    IllDefined(String),
    #[error("no dual basis: coring is not finitely generated projective over its base")]
    NoDualBasis,
    #[error("linearity conditions do not cut out a subalgebra: {0}")]
    NotClosed(String),
    #[error("axiom check failed: {0}")]
    AxiomFailure(String),
    #[error("certificate failed: {0}")]
    CertificateFailure(String),
    #[error("coring is not Galois: {0}")]
    NotGalois(String),
    #[error("parse error: {0}")]
    Parse(String),
}
