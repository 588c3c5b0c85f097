use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid root system specification: {0}")]
    Spec(String),
    #[error("enumeration too large: {0}")]
    Size(String),
    #[error("point is not generic: {0}")]
    NotGeneric(String),
    #[error("lattice error: {0}")]
    Lattice(String),
    #[error("lift error: {0}")]
    Lift(String),
    #[error("coset error: {0}")]
    Coset(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    /// Errors a caller can fix by choosing different inputs, as opposed to
    /// malformed requests or broken invariants.
    pub fn is_domain(&self) -> bool {
        matches!(
            self,
            Error::NotGeneric(_) | Error::Lift(_) | Error::Coset(_) | Error::Domain(_) | Error::Lattice(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
