//! Clifford algebra substrate: signatures, blades, canonical ordering,
//! geometric product, grade operations and the standard involutions.

mod blade;
mod error;
mod grade;
mod multivector;
mod scalar;
mod signature;

pub use blade::{
    binomial, blade_mul, canonical_cmp, grade_block_start, AlgebraTables, Blade, CanonicalOrder, ProductEntry,
    ProductTable,
};
pub use error::AlgebraError;
pub use grade::GradeSet;
pub use multivector::{Involution, Multivector};
pub use scalar::{exact_root, rational_from_str, rational_to_string, Rational, Scalar};
pub use signature::{Signature, MAX_DIM};
