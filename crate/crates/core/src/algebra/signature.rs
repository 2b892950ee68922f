use std::fmt;
use std::sync::OnceLock;

use super::blade::AlgebraTables;
use super::error::AlgebraError;

/// Largest supported vector-space dimension.
pub const MAX_DIM: usize = 6;

/// Metric signature of Cl(p,q): `p` basis vectors square to +1, the
/// following `q` square to -1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature {
    p: u8,
    q: u8,
}

impl Signature {
    pub fn new(p: usize, q: usize) -> Result<Self, AlgebraError> {
        if p + q > MAX_DIM {
            return Err(AlgebraError::DimensionTooLarge { p, q });
        }
        Ok(Self { p: p as u8, q: q as u8 })
    }

    pub fn p(self) -> usize {
        self.p as usize
    }

    pub fn q(self) -> usize {
        self.q as usize
    }

    pub fn dim(self) -> usize {
        (self.p + self.q) as usize
    }

    /// Number of basis blades, `2^n`.
    pub fn blade_count(self) -> usize {
        1 << self.dim()
    }

    /// Square of basis vector `e_i` (1-based).
    pub fn square_of(self, i: usize) -> i8 {
        debug_assert!(i >= 1 && i <= self.dim());
        if i <= self.p() {
            1
        } else {
            -1
        }
    }

    /// Every signature with `p + q = n`, ordered by increasing `q`.
    pub fn all_of_dim(n: usize) -> Vec<Signature> {
        assert!(n <= MAX_DIM);
        (0..=n).map(|q| Signature::new(n - q, q).unwrap()).collect()
    }

    /// Every supported signature, ordered by dimension then `q`.
    pub fn all() -> Vec<Signature> {
        (0..=MAX_DIM).flat_map(Signature::all_of_dim).collect()
    }

    /// Blade ordering and product tables, built once per signature.
    pub fn tables(self) -> &'static AlgebraTables {
        static TABLES: OnceLock<Vec<OnceLock<AlgebraTables>>> = OnceLock::new();
        let slots = TABLES.get_or_init(|| (0..(MAX_DIM + 1) * (MAX_DIM + 1)).map(|_| OnceLock::new()).collect());
        slots[self.p() * (MAX_DIM + 1) + self.q()].get_or_init(|| AlgebraTables::build(self))
    }
}

impl fmt::Display for Signature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cl({},{})", self.p, self.q)
    }
}
