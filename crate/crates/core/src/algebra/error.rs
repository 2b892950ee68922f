use thiserror::Error;

use super::Signature;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("Cl({p},{q}) exceeds the supported dimension p+q <= 6")]
    DimensionTooLarge { p: usize, q: usize },
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: Signature, right: Signature },
    #[error("grade {grade} out of range for dimension {dim}")]
    GradeOutOfRange { grade: usize, dim: usize },
    #[error("expected {expected} coefficients, got {got}")]
    CoefficientCount { expected: usize, got: usize },
    #[error("linear combination needs at least one term")]
    EmptyCombination,
}
