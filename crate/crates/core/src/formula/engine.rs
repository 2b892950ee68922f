//! Determinant norms and inverses from catalog entries.

use num_traits::Zero;

use super::catalog::{Catalog, EntryKind, FormulaEntry};
use super::expr::{expect_scalar, Evaluator};
use super::FormulaError;
use crate::algebra::{GradeSet, Multivector, Rational, Scalar};

/// Result of a successful inversion: `inverse = adjugate / det`.
#[derive(Clone, Debug, PartialEq)]
pub struct Inversion<T: Scalar = Rational> {
    pub inverse: Multivector<T>,
    pub adjugate: Multivector<T>,
    pub det: T,
    pub formula: String,
}

impl FormulaEntry {
    fn check_dim<T: Scalar>(&self, a: &Multivector<T>) -> Result<(), FormulaError> {
        let n = a.sig().dim();
        if self.dim < n {
            return Err(FormulaError::DimensionTooSmall {
                formula: self.id.clone(),
                formula_dim: self.dim,
                input_dim: n,
            });
        }
        Ok(())
    }

    /// Adjugate and determinant. The determinant is computed as `A * adj`,
    /// which is the determinant expression up to associativity.
    fn adjugate_and_det<T: Scalar>(
        &self,
        a: &Multivector<T>,
        aux: Option<&Multivector<T>>,
    ) -> Result<(Multivector<T>, T), FormulaError> {
        self.check_dim(a)?;
        let mut ev = Evaluator::new(a, aux);
        let adj = ev.eval(&self.adjugate)?;
        let det = expect_scalar(&a.gp(&adj)?, &self.id)?;
        Ok((adj, det))
    }

    /// Evaluates the determinant expression and requires a scalar result.
    pub fn det_norm<T: Scalar>(&self, a: &Multivector<T>) -> Result<T, FormulaError> {
        self.check_dim(a)?;
        expect_scalar(&self.det.eval(a)?, &self.id)
    }

    pub fn invert(&self, a: &Multivector) -> Result<Inversion, FormulaError> {
        self.invert_with(a, None)
    }

    fn invert_with(&self, a: &Multivector, aux: Option<&Multivector>) -> Result<Inversion, FormulaError> {
        let (adjugate, det) = self.adjugate_and_det(a, aux)?;
        if det.is_zero() {
            return Err(FormulaError::NonInvertible {
                det,
                formula: self.id.clone(),
                attempted: Vec::new(),
            });
        }
        let inverse = adjugate.scale(&(Rational::from_integer(1.into()) / &det));
        Ok(Inversion {
            inverse,
            adjugate,
            det,
            formula: self.id.clone(),
        })
    }
}

/// Determinant norm of `a` by catalog id, or by the default formula for
/// its dimension.
pub fn det_norm(a: &Multivector, id: Option<&str>) -> Result<Rational, FormulaError> {
    let entry = Catalog::builtin().resolve(id, a.sig().dim())?;
    entry.det_norm(a)
}

/// Inverse of `a` by catalog id or the dimension default.
pub fn inverse(a: &Multivector, id: Option<&str>) -> Result<Inversion, FormulaError> {
    let entry = Catalog::builtin().resolve(id, a.sig().dim())?;
    entry.invert(a)
}

/// Inverse of an even multivector using the auxiliary-vector formulas.
///
/// With `v = None` the basis vectors `e1, e2, ...` are tried in order until
/// one gives a nonzero denominator.
pub fn even_inverse(a: &Multivector, v: Option<&Multivector>) -> Result<Inversion, FormulaError> {
    let sig = a.sig();
    let n = sig.dim();
    let odd = a.grades().difference(GradeSet::all(n).intersection(even_grades(n)));
    if !odd.is_empty() {
        return Err(FormulaError::OddGradePresent(odd));
    }
    if n <= 1 {
        let det = a.scalar_part().clone();
        if det.is_zero() {
            return Err(FormulaError::NonInvertible {
                det,
                formula: "scalar".to_string(),
                attempted: Vec::new(),
            });
        }
        return Ok(Inversion {
            inverse: Multivector::scalar(sig, Rational::from_integer(1.into()) / &det),
            adjugate: Multivector::one(sig),
            det,
            formula: "scalar".to_string(),
        });
    }
    let entry = Catalog::builtin().even_default_for(n)?;
    debug_assert_eq!(entry.kind, EntryKind::Even);
    if let Some(v) = v {
        if v.sig() != sig || !v.grades().difference(GradeSet::of(&[1])).is_empty() {
            return Err(FormulaError::BadAuxVector);
        }
        let sq = v.gp(v)?;
        if !sq.is_scalar() || sq.scalar_part().is_zero() {
            return Err(FormulaError::BadAuxVector);
        }
        return entry.invert_with(a, Some(v));
    }
    let mut attempted = Vec::new();
    let mut last_det = Rational::zero();
    for i in 1..=n {
        attempted.push(i);
        let v = Multivector::basis_vector(sig, i);
        match entry.invert_with(a, Some(&v)) {
            Ok(inv) => return Ok(inv),
            Err(FormulaError::NonInvertible { det, .. }) => last_det = det,
            Err(e) => return Err(e),
        }
    }
    Err(FormulaError::NonInvertible {
        det: last_det,
        formula: entry.id.clone(),
        attempted,
    })
}

fn even_grades(n: usize) -> GradeSet {
    (0..=n).filter(|r| r % 2 == 0).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Signature;
    use crate::random::Sampler;

    fn mv(p: usize, q: usize, c: &[i64]) -> Multivector {
        Multivector::from_integers(Signature::new(p, q).unwrap(), c).unwrap()
    }

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn scalar_inverse() {
        let a = mv(0, 0, &[2]);
        let inv = inverse(&a, None).unwrap();
        assert_eq!(inv.inverse.scalar_part(), &q(1, 2));
        assert_eq!(inv.formula, "inv-n0");
    }

    #[test]
    fn zero_is_not_invertible() {
        let a = Multivector::zero(Signature::new(2, 1).unwrap());
        match inverse(&a, None) {
            Err(FormulaError::NonInvertible { det, formula, .. }) => {
                assert!(det.is_zero());
                assert_eq!(formula, "inv-n3");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn defaults_invert_random_elements() {
        let mut rng = Sampler::new(11);
        for n in 0..=6usize {
            for sig in Signature::all_of_dim(n) {
                let a = rng.general(sig);
                let inv = inverse(&a, None).unwrap();
                let one = Multivector::one(sig);
                assert_eq!(a.gp(&inv.inverse).unwrap(), one, "{sig}");
                assert_eq!(inv.inverse.gp(&a).unwrap(), one, "{sig}");
            }
        }
    }

    #[test]
    fn formula_for_smaller_dimension_is_rejected() {
        let a = mv(3, 0, &[1, 2, 0, 0, 0, 0, 0, 0]);
        assert!(matches!(
            inverse(&a, Some("inv-n2")),
            Err(FormulaError::DimensionTooSmall {
                formula_dim: 2,
                input_dim: 3,
                ..
            })
        ));
    }

    #[test]
    fn even_quaternion() {
        // 1 + e12 in Cl(3,0)
        let a = mv(3, 0, &[1, 0, 0, 0, 1, 0, 0, 0]);
        let inv = even_inverse(&a, None).unwrap();
        assert_eq!(inv.inverse, mv(3, 0, &[1, 0, 0, 0, -1, 0, 0, 0]).scale(&q(1, 2)));
    }

    #[test]
    fn even_rejects_odd_and_bad_aux() {
        let sig = Signature::new(2, 0).unwrap();
        let a = mv(2, 0, &[1, 1, 0, 0]);
        assert!(matches!(even_inverse(&a, None), Err(FormulaError::OddGradePresent(_))));
        let b = mv(2, 0, &[1, 0, 0, 2]);
        let null = Multivector::from_integers(Signature::new(1, 1).unwrap(), &[0, 1, 1, 0]).unwrap();
        let b11 = Multivector::from_integers(Signature::new(1, 1).unwrap(), &[1, 0, 0, 2]).unwrap();
        assert_eq!(even_inverse(&b11, Some(&null)), Err(FormulaError::BadAuxVector));
        assert_eq!(
            even_inverse(&b, Some(&Multivector::one(sig))),
            Err(FormulaError::BadAuxVector)
        );
        let v = Multivector::basis_vector(sig, 2);
        let inv = even_inverse(&b, Some(&v)).unwrap();
        assert_eq!(b.gp(&inv.inverse).unwrap(), Multivector::one(sig));
    }

    #[test]
    fn even_zero_reports_attempts() {
        let a = Multivector::zero(Signature::new(2, 2).unwrap());
        match even_inverse(&a, None) {
            Err(FormulaError::NonInvertible { attempted, .. }) => assert_eq!(attempted, [1, 2, 3, 4]),
            other => panic!("{other:?}"),
        }
    }
}
