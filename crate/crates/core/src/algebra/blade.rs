//! Basis blades as bitmasks, and the canonical degree-then-lexicographic
//! coefficient ordering.

use std::cmp::Ordering;
use std::fmt;

use super::Signature;

/// Basis blade `e_J`: bit `i-1` is set iff `e_i` participates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Blade(pub u8);

impl Blade {
    pub const SCALAR: Blade = Blade(0);

    /// Single basis vector `e_i`, 1-based.
    pub fn vector(i: usize) -> Blade {
        assert!((1..=8).contains(&i));
        Blade(1 << (i - 1))
    }

    pub fn grade(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Participating basis indices in increasing order, 1-based.
    pub fn indices(self) -> Vec<usize> {
        (0..8).filter(|b| self.0 & (1 << b) != 0).map(|b| b + 1).collect()
    }

    /// Canonical blade and reordering sign for a product of distinct basis
    /// vectors written in the given order. `None` if an index repeats.
    pub fn from_indices(indices: &[usize]) -> Option<(i8, Blade)> {
        let mut bits = 0u8;
        let mut inversions = 0usize;
        for (k, &i) in indices.iter().enumerate() {
            if !(1..=8).contains(&i) || bits & (1 << (i - 1)) != 0 {
                return None;
            }
            bits |= 1 << (i - 1);
            inversions += indices[..k].iter().filter(|&&j| j > i).count();
        }
        let sign = if inversions.is_multiple_of(2) { 1 } else { -1 };
        Some((sign, Blade(bits)))
    }
}

impl fmt::Display for Blade {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0 == 0 {
            return f.write_str("1");
        }
        f.write_str("e")?;
        for i in self.indices() {
            write!(f, "{i}")?;
        }
        Ok(())
    }
}

/// Product of two basis blades: `e_a e_b = sign * e_(a xor b)`.
///
/// The sign is the parity of the transpositions needed to sort the
/// concatenated index list, times -1 for every contracted index beyond `p`.
pub fn blade_mul(sig: Signature, a: Blade, b: Blade) -> (i8, Blade) {
    let mut swaps = 0u32;
    let mut rest = a.0 >> 1;
    while rest != 0 {
        swaps += (rest & b.0).count_ones();
        rest >>= 1;
    }
    let common = a.0 & b.0;
    let negative_mask: u8 = ((1u16 << sig.dim()) - (1u16 << sig.p())) as u8;
    swaps += (common & negative_mask).count_ones();
    let sign = if swaps.is_multiple_of(2) { 1 } else { -1 };
    (sign, Blade(a.0 ^ b.0))
}

/// Degree-then-lexicographic comparison of blades.
pub fn canonical_cmp(a: Blade, b: Blade) -> Ordering {
    a.grade().cmp(&b.grade()).then_with(|| a.indices().cmp(&b.indices()))
}

/// Bijection between blades and positions `0..2^n` in canonical order.
#[derive(Clone, Debug)]
pub struct CanonicalOrder {
    index_to_blade: Vec<Blade>,
    blade_to_index: Vec<u8>,
}

impl CanonicalOrder {
    pub fn new(n: usize) -> Self {
        let mut index_to_blade: Vec<Blade> = (0..(1u16 << n)).map(|b| Blade(b as u8)).collect();
        index_to_blade.sort_by(|&a, &b| canonical_cmp(a, b));
        let mut blade_to_index = vec![0u8; 1 << n];
        for (i, b) in index_to_blade.iter().enumerate() {
            blade_to_index[b.0 as usize] = i as u8;
        }
        Self {
            index_to_blade,
            blade_to_index,
        }
    }

    pub fn len(&self) -> usize {
        self.index_to_blade.len()
    }

    pub fn is_empty(&self) -> bool {
        self.index_to_blade.is_empty()
    }

    pub fn blade(&self, index: usize) -> Blade {
        self.index_to_blade[index]
    }

    pub fn index(&self, blade: Blade) -> usize {
        self.blade_to_index[blade.0 as usize] as usize
    }

    pub fn blades(&self) -> &[Blade] {
        &self.index_to_blade
    }
}

/// First canonical index of the grade-`r` block: `sum_{k<r} C(n,k)`.
pub fn grade_block_start(n: usize, r: usize) -> usize {
    (0..r).map(|k| binomial(n, k)).sum()
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ProductEntry {
    pub index: u8,
    pub grade: u8,
    pub negative: bool,
}

/// Blade product table in canonical index space.
#[derive(Clone, Debug)]
pub struct ProductTable {
    dim: usize,
    entries: Vec<ProductEntry>,
}

impl ProductTable {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[ProductEntry] {
        &self.entries[i * self.dim..(i + 1) * self.dim]
    }

    pub fn get(&self, i: usize, j: usize) -> ProductEntry {
        self.entries[i * self.dim + j]
    }
}

/// Per-signature lookup tables shared by every multivector of that algebra.
#[derive(Clone, Debug)]
pub struct AlgebraTables {
    pub order: CanonicalOrder,
    pub grades: Vec<u8>,
    pub product: ProductTable,
}

impl AlgebraTables {
    pub fn build(sig: Signature) -> Self {
        let n = sig.dim();
        let order = CanonicalOrder::new(n);
        let dim = order.len();
        let grades = order.blades().iter().map(|b| b.grade() as u8).collect();
        let mut entries = Vec::with_capacity(dim * dim);
        for &a in order.blades() {
            for &b in order.blades() {
                let (sign, c) = blade_mul(sig, a, b);
                entries.push(ProductEntry {
                    index: order.index(c) as u8,
                    grade: c.grade() as u8,
                    negative: sign < 0,
                });
            }
        }
        Self {
            order,
            grades,
            product: ProductTable { dim, entries },
        }
    }
}
