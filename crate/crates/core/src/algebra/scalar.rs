//! Coefficient fields.
//!
//! Every correctness path runs on [`Rational`]. The `f64` implementation
//! exists so the product kernel can be benchmarked against floating point.

use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::blade::ProductTable;

/// Exact arbitrary-precision rational.
pub type Rational = BigRational;

/// A field the geometric product can be evaluated over.
pub trait Scalar:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Send
    + Sync
{
    fn from_i64(v: i64) -> Self;

    fn from_rational(r: &Rational) -> Self;

    /// Dense product kernel: `out[k] = sum sign(i,j) a[i] b[j]` over all
    /// canonical index pairs whose product blade `k` has a grade in `keep`.
    fn product_kernel(table: &ProductTable, a: &[Self], b: &[Self], keep: u16) -> Vec<Self> {
        let dim = table.dim();
        let mut out = vec![Self::zero(); dim];
        for (i, ai) in a.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let row = table.row(i);
            for (j, bj) in b.iter().enumerate() {
                if bj.is_zero() {
                    continue;
                }
                let entry = row[j];
                if keep & (1 << entry.grade) == 0 {
                    continue;
                }
                let k = entry.index as usize;
                let term = ai.clone() * bj.clone();
                out[k] = if entry.negative {
                    out[k].clone() - term
                } else {
                    out[k].clone() + term
                };
            }
        }
        out
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn from_rational(r: &Rational) -> Self {
        num_traits::ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
    }
}

/// Splits rational coefficients into integer numerators over one common
/// denominator.
fn common_denominator(values: &[Rational]) -> (Vec<BigInt>, BigInt) {
    let mut den = BigInt::one();
    for v in values {
        if !v.is_zero() && !v.denom().is_one() {
            den = den.lcm(v.denom());
        }
    }
    let nums = values
        .iter()
        .map(|v| {
            if v.is_zero() {
                BigInt::zero()
            } else if v.denom() == &den {
                v.numer().clone()
            } else {
                v.numer() * (&den / v.denom())
            }
        })
        .collect();
    (nums, den)
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }

    // Integer accumulation over a shared denominator: one normalisation per
    // output coefficient instead of one gcd per term.
    fn product_kernel(table: &ProductTable, a: &[Self], b: &[Self], keep: u16) -> Vec<Self> {
        let dim = table.dim();
        let (an, ad) = common_denominator(a);
        let (bn, bd) = common_denominator(b);
        let bnz: Vec<usize> = (0..dim).filter(|&j| !bn[j].is_zero()).collect();
        let mut acc = vec![BigInt::zero(); dim];
        for (i, ai) in an.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            let row = table.row(i);
            for &j in &bnz {
                let entry = row[j];
                if keep & (1 << entry.grade) == 0 {
                    continue;
                }
                let term = ai * &bn[j];
                let slot = &mut acc[entry.index as usize];
                if entry.negative {
                    *slot -= term;
                } else {
                    *slot += term;
                }
            }
        }
        let den = ad * bd;
        acc.into_iter()
            .map(|n| {
                if n.is_zero() {
                    Rational::zero()
                } else {
                    Rational::new(n, den.clone())
                }
            })
            .collect()
    }
}

/// `p/q` text for a rational, `p` for integers.
pub fn rational_to_string(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `p`, `-p`, `p/q`; rejects zero denominators.
pub fn rational_from_str(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Rational::from_integer),
    }
}

/// Exact `k`-th root of a non-negative rational, if it has one.
pub fn exact_root(value: &Rational, k: u32) -> Option<Rational> {
    if value.is_negative() {
        return None;
    }
    let n = value.numer().nth_root(k);
    let d = value.denom().nth_root(k);
    let candidate = Rational::new(n, d);
    if num_traits::pow(candidate.clone(), k as usize) == *value {
        Some(candidate)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn text_round_trip() {
        for r in [q(0, 1), q(-7, 3), q(12, 4), q(5, -10)] {
            assert_eq!(rational_from_str(&rational_to_string(&r)), Some(r));
        }
        assert_eq!(rational_from_str("1/0"), None);
        assert_eq!(rational_from_str("x"), None);
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&q(16, 81), 4), Some(q(2, 3)));
        assert_eq!(exact_root(&q(2, 1), 2), None);
        assert_eq!(exact_root(&q(-8, 1), 3), None);
        let big = Rational::from_integer(BigInt::from(259164901u64).pow(2));
        assert_eq!(exact_root(&big, 2), Some(Rational::from_integer(259164901u64.into())));
    }

    #[test]
    fn common_denominator_scales() {
        let (nums, den) = common_denominator(&[q(1, 2), q(1, 3), q(0, 1)]);
        assert_eq!(den, BigInt::from(6));
        assert_eq!(nums, vec![BigInt::from(3), BigInt::from(2), BigInt::from(0)]);
    }
}
