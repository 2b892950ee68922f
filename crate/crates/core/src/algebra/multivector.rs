use std::ops::{Add, Mul, Neg, Sub};

use super::blade::Blade;
use super::error::AlgebraError;
use super::grade::GradeSet;
use super::scalar::{Rational, Scalar};
use super::Signature;

/// The three standard involutions, each a fixed grade negation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Involution {
    Reverse,
    GradeInvolution,
    CliffordConjugate,
}

impl Involution {
    pub fn grades(self, n: usize) -> GradeSet {
        match self {
            Involution::Reverse => GradeSet::reverse(n),
            Involution::GradeInvolution => GradeSet::grade_involution(n),
            Involution::CliffordConjugate => GradeSet::clifford_conjugate(n),
        }
    }

    pub const ALL: [Involution; 3] = [
        Involution::Reverse,
        Involution::GradeInvolution,
        Involution::CliffordConjugate,
    ];
}

/// Dense multivector: `2^n` coefficients in canonical blade order.
#[derive(Clone, Debug, PartialEq)]
pub struct Multivector<T: Scalar = Rational> {
    sig: Signature,
    coeffs: Vec<T>,
}

impl<T: Scalar> Multivector<T> {
    pub fn zero(sig: Signature) -> Self {
        Self {
            sig,
            coeffs: vec![T::zero(); sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: T) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[0] = value;
        mv
    }

    pub fn one(sig: Signature) -> Self {
        Self::scalar(sig, T::one())
    }

    pub fn from_coeffs(sig: Signature, coeffs: Vec<T>) -> Result<Self, AlgebraError> {
        if coeffs.len() != sig.blade_count() {
            return Err(AlgebraError::CoefficientCount {
                expected: sig.blade_count(),
                got: coeffs.len(),
            });
        }
        Ok(Self { sig, coeffs })
    }

    /// `value * blade`.
    pub fn blade(sig: Signature, blade: Blade, value: T) -> Self {
        let mut mv = Self::zero(sig);
        mv.coeffs[sig.tables().order.index(blade)] = value;
        mv
    }

    /// Basis vector `e_i`, 1-based.
    pub fn basis_vector(sig: Signature, i: usize) -> Self {
        Self::blade(sig, Blade::vector(i), T::one())
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    pub fn coeff(&self, blade: Blade) -> &T {
        &self.coeffs[self.sig.tables().order.index(blade)]
    }

    pub fn set_coeff(&mut self, blade: Blade, value: T) {
        let i = self.sig.tables().order.index(blade);
        self.coeffs[i] = value;
    }

    /// Nonzero `(blade, coefficient)` pairs in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (Blade, &T)> + '_ {
        let order = &self.sig.tables().order;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (order.blade(i), c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Grades carrying at least one nonzero coefficient.
    pub fn grades(&self) -> GradeSet {
        let tables = self.sig.tables();
        let mut set = GradeSet::EMPTY;
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                set.insert(tables.grades[i] as usize);
            }
        }
        set
    }

    pub fn is_scalar(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    pub fn scalar_part(&self) -> &T {
        &self.coeffs[0]
    }

    /// True when only even grades are present.
    pub fn is_even(&self) -> bool {
        self.grades().iter().all(|g| g % 2 == 0)
    }

    fn check_sig(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.sig != other.sig {
            return Err(AlgebraError::SignatureMismatch {
                left: self.sig,
                right: other.sig,
            });
        }
        Ok(())
    }

    /// Geometric product.
    pub fn gp(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.gp_skip(other, GradeSet::EMPTY)
    }

    /// Geometric product with the output grades in `skip` left uncomputed
    /// (zero).
    pub fn gp_skip(&self, other: &Self, skip: GradeSet) -> Result<Self, AlgebraError> {
        self.check_sig(other)?;
        let keep = !skip.bits();
        let coeffs = T::product_kernel(&self.sig.tables().product, &self.coeffs, &other.coeffs, keep);
        Ok(Self { sig: self.sig, coeffs })
    }

    /// `<A>_r`.
    pub fn grade_part(&self, r: usize) -> Result<Self, AlgebraError> {
        let n = self.sig.dim();
        if r > n {
            return Err(AlgebraError::GradeOutOfRange { grade: r, dim: n });
        }
        let grades = &self.sig.tables().grades;
        let coeffs = self
            .coeffs
            .iter()
            .zip(grades)
            .map(|(c, &g)| if g as usize == r { c.clone() } else { T::zero() })
            .collect();
        Ok(Self { sig: self.sig, coeffs })
    }

    /// Flips the sign of every grade in `grades`; absent grades are ignored.
    pub fn grade_negate(&self, grades: GradeSet) -> Self {
        let table = &self.sig.tables().grades;
        let coeffs = self
            .coeffs
            .iter()
            .zip(table)
            .map(|(c, &g)| {
                if grades.contains(g as usize) && !c.is_zero() {
                    -c.clone()
                } else {
                    c.clone()
                }
            })
            .collect();
        Self { sig: self.sig, coeffs }
    }

    pub fn involution(&self, kind: Involution) -> Self {
        self.grade_negate(kind.grades(self.sig.dim()))
    }

    pub fn reverse(&self) -> Self {
        self.involution(Involution::Reverse)
    }

    pub fn grade_involution(&self) -> Self {
        self.involution(Involution::GradeInvolution)
    }

    pub fn clifford_conjugate(&self) -> Self {
        self.involution(Involution::CliffordConjugate)
    }

    pub fn scale(&self, factor: &T) -> Self {
        Self {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c.clone() * factor.clone()).collect(),
        }
    }

    /// Exact weighted sum `sum w_k A_k`.
    pub fn linear_combine<'a, I>(terms: I) -> Result<Self, AlgebraError>
    where
        I: IntoIterator<Item = (&'a T, &'a Self)>,
        T: 'a,
    {
        let mut iter = terms.into_iter();
        let (w0, first) = iter.next().ok_or(AlgebraError::EmptyCombination)?;
        let mut acc = first.scale(w0);
        for (w, mv) in iter {
            acc.check_sig(mv)?;
            for (a, b) in acc.coeffs.iter_mut().zip(&mv.coeffs) {
                if !b.is_zero() && !w.is_zero() {
                    *a = a.clone() + w.clone() * b.clone();
                }
            }
        }
        Ok(acc)
    }

    /// Image under the inclusion Cl(p,q) -> Cl(p',q') with `p <= p'`,
    /// `q <= q'`: positive vectors keep their index, negative vector
    /// `e_(p+k)` maps to `e_(p'+k)`.
    pub fn embed(&self, target: Signature) -> Result<Self, AlgebraError> {
        if target.p() < self.sig.p() || target.q() < self.sig.q() {
            return Err(AlgebraError::SignatureMismatch {
                left: self.sig,
                right: target,
            });
        }
        let shift = target.p() - self.sig.p();
        let p = self.sig.p();
        let mut out = Self::zero(target);
        for (blade, c) in self.terms() {
            let mapped: Vec<usize> = blade
                .indices()
                .into_iter()
                .map(|i| if i <= p { i } else { i + shift })
                .collect();
            // index map is monotone, so no reordering sign
            let (_, b) = Blade::from_indices(&mapped).expect("distinct indices");
            out.set_coeff(b, c.clone());
        }
        Ok(out)
    }
}

impl Multivector<Rational> {
    pub fn from_integers(sig: Signature, coeffs: &[i64]) -> Result<Self, AlgebraError> {
        Self::from_coeffs(sig, coeffs.iter().map(|&c| Rational::from_i64(c)).collect())
    }

    /// Floating-point copy, for benchmarking only.
    pub fn to_f64(&self) -> Multivector<f64> {
        use num_traits::ToPrimitive;
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c.to_f64().unwrap_or(f64::NAN)).collect(),
        }
    }
}

impl<T: Scalar> Mul for &Multivector<T> {
    type Output = Multivector<T>;

    /// Panics on mismatched signatures; use [`Multivector::gp`] to handle
    /// that case.
    fn mul(self, rhs: Self) -> Multivector<T> {
        self.gp(rhs).expect("geometric product of different algebras")
    }
}

impl<T: Scalar> Add for &Multivector<T> {
    type Output = Multivector<T>;

    fn add(self, rhs: Self) -> Multivector<T> {
        let one = T::one();
        Multivector::linear_combine([(&one, self), (&one, rhs)]).expect("sum of different algebras")
    }
}

impl<T: Scalar> Sub for &Multivector<T> {
    type Output = Multivector<T>;

    fn sub(self, rhs: Self) -> Multivector<T> {
        let one = T::one();
        let minus = -T::one();
        Multivector::linear_combine([(&one, self), (&minus, rhs)]).expect("difference of different algebras")
    }
}

impl<T: Scalar> Neg for &Multivector<T> {
    type Output = Multivector<T>;

    fn neg(self) -> Multivector<T> {
        self.scale(&-T::one())
    }
}
