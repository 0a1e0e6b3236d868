use alloc::string::String;

use crate::group::GroupId;

/// Everything that can go wrong while building fields, groups and schemes.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("characteristic {0} is not an odd prime")]
    BadCharacteristic(u32),
    #[error("field order {0} is not supported (need an odd prime power q >= 5)")]
    BadOrder(u64),
    #[error("modulus must be monic of degree {expected}, got {got} coefficients")]
    BadModulusShape { expected: usize, got: usize },
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u32 },
    #[error("no built-in modulus for q = {0}; supply one explicitly")]
    NoBuiltinModulus(u64),
    #[error("field element does not belong to GF({q})")]
    SpecMismatch { q: u32 },
    #[error("division by zero")]
    DivisionByZero,
    #[error("zero has no quadratic character")]
    ZeroSquareClass,
    #[error("GF({q}) has odd degree and no involutory automorphism")]
    NoInvolution { q: u32 },

    #[error("all projective coordinates are zero")]
    ZeroVector,
    #[error("a hyperbolic line needs two distinct conic points")]
    DegeneratePair,
    #[error("cross-ratio is indeterminate for this quadruple")]
    IndeterminateCrossRatio,

    #[error("matrix is singular")]
    SingularMatrix,
    #[error("{0} is not defined for this q")]
    InvalidGroup(GroupId),

    #[error("group action is not transitive ({orbits} orbits on {n} points)")]
    NotTransitive { orbits: usize, n: usize },
    #[error("domain {0} has no base pair; use the generic orbital path")]
    UnsupportedDomain(&'static str),
    #[error("not an association scheme: {0}")]
    NotAScheme(String),
    #[error("q = {q} exceeds the dense-table limit of {limit}")]
    TooLarge { q: u32, limit: u32 },
}

pub type Result<T, E = Error> = core::result::Result<T, E>;
