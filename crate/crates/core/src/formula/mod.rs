//! Determinant-norm and inverse formulas as data.

mod catalog;
mod engine;
mod expr;
mod triplet;

use thiserror::Error;

use crate::algebra::{AlgebraError, GradeSet, Rational};

pub use catalog::{Catalog, EntryKind, FormulaEntry, Status};
pub use engine::{det_norm, even_inverse, inverse, Inversion};
pub use expr::{Evaluator, FormulaExpr};
pub use triplet::{TripletFamily, TripletSets};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum FormulaError {
    #[error("not invertible: determinant norm {det} from formula {formula}")]
    NonInvertible {
        det: Rational,
        formula: String,
        /// Basis vectors tried as the auxiliary vector (even formulas only).
        attempted: Vec<usize>,
    },
    #[error("formula {formula} left non-scalar grades {grades}")]
    CatalogDefect { formula: String, grades: GradeSet },
    #[error("unknown formula id '{0}'")]
    UnknownFormula(String),
    #[error("formula {formula} is for dimension {formula_dim}, input has dimension {input_dim}")]
    DimensionTooSmall {
        formula: String,
        formula_dim: usize,
        input_dim: usize,
    },
    #[error("no default formula for dimension {0}")]
    NoDefault(usize),
    #[error("even-subalgebra formula applied to a multivector with odd grades {0}")]
    OddGradePresent(GradeSet),
    #[error("auxiliary vector is not a nonisotropic vector")]
    BadAuxVector,
    #[error("formula needs an auxiliary vector")]
    MissingAux,
    #[error("expression syntax error at offset {offset}: {message}")]
    ExprSyntax { offset: usize, message: String },
    #[error("catalog line {line}: {message}")]
    CatalogSyntax { line: usize, message: String },
    #[error("triplet index ({i},{j},{k}) out of range for the {family} sets")]
    TripletIndex {
        family: TripletFamily,
        i: usize,
        j: usize,
        k: usize,
    },
    #[error("triplet terms must come all from the S sets or all from the T sets")]
    MixedTripletSets,
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
