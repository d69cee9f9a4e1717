//! Error types shared across the engine.

use thiserror::Error;

/// Errors produced by the linear algebra and Lie algebra layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("matrix is not square ({rows}x{cols})")]
    NonSquareMatrix { rows: usize, cols: usize },

    #[error("matrix is not symmetric")]
    NonSymmetricMatrix,

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("matrix is singular")]
    SingularMatrix,

    #[error("zero polynomial has no root count")]
    ZeroPolynomial,

    #[error("Jacobi identity fails on basis triple ({0}, {1}, {2})", .triple.0, .triple.1, .triple.2)]
    NotLieAlgebra { triple: (usize, usize, usize) },

    #[error("algebra is not solvable")]
    NotSolvable,

    #[error("subspace is not closed under the bracket")]
    NotBracketClosed,

    #[error("generators do not form a torus: {0}")]
    NotTorus(TorusDefect),

    #[error("tori are defined over different algebras")]
    DifferentAlgebras,

    #[error("cochain degree {0} out of range (expected 0..=2)")]
    InvalidDegree(u8),

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("catalog entry `{0}` is a name-only stub without structure constants")]
    StubEntry(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// Why a generator set failed torus validation.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TorusDefect {
    #[error("generator {index} is not a derivation")]
    NotDerivation { index: usize },

    #[error("generators {i} and {j} do not commute")]
    NotCommuting { i: usize, j: usize },

    #[error("generator {index} is not semisimple")]
    NotSemisimple { index: usize },

    #[error("generator {index} is not a {expected}x{expected} matrix")]
    WrongShape { index: usize, expected: usize },
}
