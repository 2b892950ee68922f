//! Exact multivector inverses and determinant norms for Clifford algebras
//! Cl(p,q) with `p + q <= 6`.
//!
//! Inverses are computed from grade-negated self-products of the input:
//! a determinant norm `s = A f(A)` that is a pure scalar yields
//! `A^-1 = f(A) / s`. For `n = 6` the norm is a rational linear combination
//! of such products. Everything runs on exact rationals and is checked
//! against the left-regular matrix representation in [`oracle`].

pub mod algebra;
pub mod formula;
pub mod oracle;
pub mod parse;
pub mod random;
pub mod search;

pub use algebra::{Blade, GradeSet, Involution, Multivector, Rational, Signature};
pub use formula::{Catalog, FormulaEntry, FormulaError, FormulaExpr};
