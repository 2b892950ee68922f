use std::fmt;

/// Set of grades, stored as a bitmask over `0..16`.
///
/// Grades absent from an algebra are allowed; negating them is a no-op.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradeSet(u16);

impl GradeSet {
    pub const EMPTY: GradeSet = GradeSet(0);
    pub const MAX_GRADE: usize = 15;

    pub fn from_bits(bits: u16) -> Self {
        GradeSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    /// Panics on grades above [`GradeSet::MAX_GRADE`].
    pub fn of(grades: &[usize]) -> Self {
        GradeSet(grades.iter().fold(0u16, |acc, &g| {
            assert!(g <= Self::MAX_GRADE, "grade {g} too large");
            acc | (1 << g)
        }))
    }

    /// `{0, 1, ..., n}`.
    pub fn all(n: usize) -> Self {
        GradeSet(((1u32 << (n + 1)) - 1) as u16)
    }

    pub fn contains(self, g: usize) -> bool {
        g <= Self::MAX_GRADE && self.0 & (1 << g) != 0
    }

    pub fn insert(&mut self, g: usize) {
        assert!(g <= Self::MAX_GRADE);
        self.0 |= 1 << g;
    }

    pub fn union(self, other: GradeSet) -> GradeSet {
        GradeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: GradeSet) -> GradeSet {
        GradeSet(self.0 & other.0)
    }

    pub fn difference(self, other: GradeSet) -> GradeSet {
        GradeSet(self.0 & !other.0)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..=Self::MAX_GRADE).filter(move |&g| self.contains(g))
    }

    /// Grades `r <= n` with `r mod 4` in `residues`.
    fn periodic(n: usize, residues: &[usize]) -> Self {
        let grades: Vec<usize> = (0..=n).filter(|r| residues.contains(&(r % 4))).collect();
        GradeSet::of(&grades)
    }

    /// Grades flipped by reversion: 2, 3, 6, 7, ...
    pub fn reverse(n: usize) -> Self {
        Self::periodic(n, &[2, 3])
    }

    /// Grades flipped by grade involution: 1, 3, 5, ...
    pub fn grade_involution(n: usize) -> Self {
        Self::periodic(n, &[1, 3])
    }

    /// Grades flipped by Clifford conjugation: 1, 2, 5, 6, ...
    pub fn clifford_conjugate(n: usize) -> Self {
        Self::periodic(n, &[1, 2])
    }
}

impl fmt::Display for GradeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (k, g) in self.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str("}")
    }
}

impl FromIterator<usize> for GradeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let v: Vec<usize> = iter.into_iter().collect();
        GradeSet::of(&v)
    }
}
