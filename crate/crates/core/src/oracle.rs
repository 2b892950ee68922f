//! Left-regular matrix representation and exact linear algebra on it.
//!
//! Column `j` of `left_matrix(A)` holds the coefficients of `A e_J` for the
//! `j`-th canonical blade, so `left_matrix(A) x` is the coefficient vector
//! of `A X`. Elimination runs on an integer matrix (the rational matrix
//! times a common denominator) with the fraction-free Bareiss scheme.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Multivector, Rational, Signature};
use crate::formula::{Catalog, FormulaError};
use crate::random::Sampler;

/// Dense square matrix of exact rationals, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactMatrix {
    dim: usize,
    entries: Vec<Rational>,
}

impl ExactMatrix {
    pub fn zero(dim: usize) -> Self {
        Self {
            dim,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Self::zero(dim);
        for i in 0..dim {
            m.entries[i * dim + i] = Rational::one();
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> &Rational {
        &self.entries[row * self.dim + col]
    }

    pub fn set(&mut self, row: usize, col: usize, value: Rational) {
        self.entries[row * self.dim + col] = value;
    }

    pub fn mul(&self, other: &ExactMatrix) -> ExactMatrix {
        assert_eq!(self.dim, other.dim, "matrix size mismatch");
        let n = self.dim;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        out.entries[i * n + j] += a * b;
                    }
                }
            }
        }
        out
    }

    /// Integer matrix `D * self` and the denominator `D`.
    fn to_integer(&self) -> (Vec<Vec<BigInt>>, BigInt) {
        let mut den = BigInt::one();
        for e in &self.entries {
            if !e.denom().is_one() {
                den = den.lcm(e.denom());
            }
        }
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let e = self.get(i, j);
                        e.numer() * (&den / e.denom())
                    })
                    .collect()
            })
            .collect();
        (rows, den)
    }

    /// Exact determinant.
    pub fn det(&self) -> Rational {
        let (rows, den) = self.to_integer();
        match bareiss(rows, None) {
            Some(elim) => Rational::new(elim.det, num_traits::pow(den, self.dim)),
            None => Rational::zero(),
        }
    }

    /// Solution of `self x = b`, or `None` when the matrix is singular.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.dim, "right-hand side length");
        let (rows, den) = self.to_integer();
        // self x = b  <=>  (D self) x = D b; scale D b to integers as well.
        let mut bden = BigInt::one();
        for v in b {
            if !v.denom().is_one() {
                bden = bden.lcm(v.denom());
            }
        }
        let rhs: Vec<BigInt> = b.iter().map(|v| v.numer() * (&bden / v.denom()) * &den).collect();
        let elim = bareiss(rows, Some(rhs))?;
        let y = elim.back_substitute();
        let scale = elim.det * bden;
        Some(y.into_iter().map(|yi| Rational::new(yi, scale.clone())).collect())
    }
}

impl fmt::Display for ExactMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| crate::algebra::rational_to_string(self.get(i, j)))
                .collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// Upper-triangular result of fraction-free elimination.
struct Eliminated {
    rows: Vec<Vec<BigInt>>,
    rhs: Vec<BigInt>,
    det: BigInt,
}

impl Eliminated {
    /// `y = det * x` for `U x = rhs`; every `y_i` is an integer.
    fn back_substitute(&self) -> Vec<BigInt> {
        let n = self.rows.len();
        let mut y = vec![BigInt::zero(); n];
        for i in (0..n).rev() {
            let mut acc = &self.det * &self.rhs[i];
            for (u, yj) in self.rows[i][i + 1..].iter().zip(&y[i + 1..]) {
                if !u.is_zero() {
                    acc -= u * yj;
                }
            }
            y[i] = acc / &self.rows[i][i];
        }
        y
    }
}

/// Bareiss elimination with first-nonzero pivoting. `None` if singular.
fn bareiss(mut m: Vec<Vec<BigInt>>, rhs: Option<Vec<BigInt>>) -> Option<Eliminated> {
    let n = m.len();
    let mut rhs = rhs.unwrap_or_else(|| vec![BigInt::zero(); n]);
    let mut prev = BigInt::one();
    let mut negate = false;
    for k in 0..n {
        let pivot = (k..n).find(|&r| !m[r][k].is_zero())?;
        if pivot != k {
            m.swap(pivot, k);
            rhs.swap(pivot, k);
            negate = !negate;
        }
        let (top, bottom) = m.split_at_mut(k + 1);
        let pivot_row = &top[k];
        let pkk = &pivot_row[k];
        for (off, row) in bottom.iter_mut().enumerate() {
            let i = k + 1 + off;
            let rik = std::mem::take(&mut row[k]);
            for j in k + 1..n {
                let v = &row[j] * pkk - &rik * &pivot_row[j];
                row[j] = v / &prev;
            }
            rhs[i] = (&rhs[i] * pkk - &rik * &rhs[k]) / &prev;
        }
        prev = pkk.clone();
    }
    let mut det = m.last().and_then(|r| r.last()).cloned().unwrap_or_else(BigInt::one);
    if negate {
        det = -det;
    }
    Some(Eliminated { rows: m, rhs, det })
}

/// Matrix of `X -> A X` in the canonical blade basis.
pub fn left_matrix(a: &Multivector) -> ExactMatrix {
    let tables = a.sig().tables();
    let dim = a.coeffs().len();
    let mut m = ExactMatrix::zero(dim);
    for (i, ai) in a.coeffs().iter().enumerate() {
        if ai.is_zero() {
            continue;
        }
        let row = tables.product.row(i);
        for (j, e) in row.iter().enumerate() {
            let k = e.index as usize;
            let slot = &mut m.entries[k * dim + j];
            if e.negative {
                *slot -= ai;
            } else {
                *slot += ai;
            }
        }
    }
    m
}

/// Inverse by solving `left_matrix(A) x = 1`.
pub fn oracle_inverse(a: &Multivector) -> Option<Multivector> {
    let m = left_matrix(a);
    let mut unit = vec![Rational::zero(); m.dim()];
    unit[0] = Rational::one();
    let x = m.solve(&unit)?;
    Some(Multivector::from_coeffs(a.sig(), x).expect("solution has 2^n entries"))
}

pub fn oracle_det(a: &Multivector) -> Rational {
    left_matrix(a).det()
}

pub fn oracle_is_invertible(a: &Multivector) -> bool {
    !oracle_det(a).is_zero()
}

/// Exponent `k` in `|oracle_det(A)| = |det_norm(A)|^k` for dimension `n`:
/// the blade count over the degree of the dimension-`n` default formula.
pub fn norm_exponent(n: usize) -> u32 {
    let degree = Catalog::builtin().default_for(n).map(|e| e.factor_count()).unwrap_or(1);
    ((1usize << n) / degree) as u32
}

/// Observed relation between the matrix determinant and the default
/// determinant norm on one signature.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub sig: Signature,
    pub exponent: u32,
    /// Sign of `oracle_det / det_norm^exponent` if it was the same on every
    /// invertible sample.
    pub sign: Option<i8>,
    /// Samples on which the magnitudes matched.
    pub matched: usize,
    pub samples: usize,
}

/// Measures [`Relation`] on random samples.
pub fn measure_relation(sig: Signature, samples: usize, seed: u64) -> Result<Relation, FormulaError> {
    let n = sig.dim();
    let exponent = norm_exponent(n);
    let entry = Catalog::builtin().default_for(n)?;
    let mut rng = Sampler::derived(seed, (sig.p() as u64) << 8 | sig.q() as u64);
    let mut sign: Option<Option<i8>> = None;
    let mut matched = 0;
    for _ in 0..samples {
        let a = rng.general(sig);
        let d = entry.det_norm(&a)?;
        let o = oracle_det(&a);
        let power = num_traits::pow(d, exponent as usize);
        if o.abs() == power.abs() {
            matched += 1;
        }
        if power.is_zero() || o.is_zero() {
            continue;
        }
        let s = if (o / power).is_positive() { 1 } else { -1 };
        sign = Some(match sign {
            None => Some(s),
            Some(Some(prev)) if prev == s => Some(s),
            _ => None,
        });
    }
    Ok(Relation {
        sig,
        exponent,
        sign: sign.flatten(),
        matched,
        samples,
    })
}
