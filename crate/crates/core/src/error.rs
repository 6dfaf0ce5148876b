use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {left} vs {right}")]
    VariableMismatch { left: usize, right: usize },

    #[error("variable index {index} out of range for {nvars} variables")]
    VariableIndex { index: usize, nvars: usize },

    #[error("the zero polynomial has no weighted degree")]
    ZeroPolynomial,

    #[error("polynomial is not quasi-homogeneous")]
    NonHomogeneous,

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("weight system is not regular (pole of order {root_order})")]
    NotRegular { root_order: u64 },

    #[error("residue needs h >= 2, got {0}")]
    ResidueIndex(u32),

    #[error("label l = {l} outside 1..={max}")]
    LabelOutOfRange { l: i64, max: i64 },

    #[error("operation requires f = x^h in one variable of weight 1: {0}")]
    NotUnivariate(String),

    #[error("objects are over different potentials or weight systems")]
    PotentialMismatch,

    #[error("matrix shape mismatch: {0}")]
    Shape(String),

    #[error("morphism has degree {found}, expected {expected}")]
    WrongDegree { expected: i64, found: i64 },

    #[error("morphism is not closed under m1")]
    NotClosed,

    #[error("morphisms are not composable")]
    NotComposable,

    #[error("entry at {0} is not a legal slot for this degree")]
    IllegalSlot(String),

    #[error("the zero object has no {0}")]
    ZeroObject(&'static str),

    #[error("central charge is zero")]
    ZeroCentralCharge,

    #[error("Knörrer doubling: {0}")]
    Knorrer(String),

    #[error("matrix factorization failed verification: {0}")]
    NotAFactorization(String),

    #[error("Euler window [{lo}, {hi}] too small: nonzero Hom at degree {degree}")]
    WindowTooSmall { lo: i64, hi: i64, degree: i64 },

    #[error("matrix is singular")]
    Singular,

    #[error("parse error: {0}")]
    Parse(String),
}
