//! Library-wide error type.
//!
//! Each submodule keeps its own small error enum; this module aggregates them
//! so CLI and FFI layers can handle a single type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Spec(#[from] crate::numtheory::SpecError),
    #[error(transparent)]
    Count(#[from] crate::local_density::CountError),
    #[error(transparent)]
    Covolume(#[from] crate::covolume::CovolumeError),
    #[error(transparent)]
    Graph(#[from] crate::coxeter::GraphError),
    #[error(transparent)]
    Polytope(#[from] crate::polytope::PolytopeError),
    #[error(transparent)]
    MonteCarlo(#[from] crate::montecarlo::McError),
    #[error(transparent)]
    Symbolic(#[from] crate::arith::symbolic::ParseError),
}
