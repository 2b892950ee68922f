//! Seeded exact random multivectors for identity testing.
//!
//! Coefficients are rationals with numerators in `[-99, 99]` and
//! denominators in `[1, 9]`.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Blade, Multivector, Rational, Signature};

pub const NUMERATOR_BOUND: i64 = 99;
pub const DENOMINATOR_BOUND: i64 = 9;

/// Deterministic sampler; equal seeds give equal streams.
#[derive(Clone, Debug)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    /// Independent stream derived from `seed` and a label, so that shards
    /// of a computation do not depend on evaluation order.
    pub fn derived(seed: u64, label: u64) -> Self {
        Self::new(seed ^ label.wrapping_mul(0x9E37_79B9_7F4A_7C15).rotate_left(17))
    }

    pub fn rational(&mut self) -> Rational {
        let n = self.rng.gen_range(-NUMERATOR_BOUND..=NUMERATOR_BOUND);
        let d = self.rng.gen_range(1..=DENOMINATOR_BOUND);
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn integer(&mut self, lo: i64, hi: i64) -> i64 {
        self.rng.gen_range(lo..=hi)
    }

    pub fn general(&mut self, sig: Signature) -> Multivector {
        let coeffs = (0..sig.blade_count()).map(|_| self.rational()).collect();
        Multivector::from_coeffs(sig, coeffs).unwrap()
    }

    /// Random element of the even subalgebra.
    pub fn even(&mut self, sig: Signature) -> Multivector {
        let mut mv = Multivector::zero(sig);
        for &b in sig.tables().order.blades() {
            if b.grade() % 2 == 0 {
                let c = self.rational();
                mv.set_coeff(b, c);
            }
        }
        mv
    }

    /// Scalar plus random coefficients on the given blades.
    pub fn on_blades(&mut self, sig: Signature, blades: &[Blade]) -> Multivector {
        let mut mv = Multivector::scalar(sig, self.rational());
        for &b in blades {
            let c = self.rational();
            mv.set_coeff(b, c);
        }
        mv
    }

    /// Like [`Sampler::on_blades`] but with integer coefficients and a
    /// scalar part exceeding the sum of the other magnitudes. Every element
    /// on the segment from 1 to such a multivector is invertible, so any
    /// determinant-like polynomial normalised to 1 at the identity is
    /// positive there.
    pub fn scalar_dominant(&mut self, sig: Signature, blades: &[Blade]) -> Multivector {
        let mut mv = Multivector::zero(sig);
        let mut total = 0i64;
        for &b in blades {
            let c = self.integer(-NUMERATOR_BOUND, NUMERATOR_BOUND);
            total += c.abs();
            mv.set_coeff(b, Rational::from_integer(c.into()));
        }
        let a0 = total + self.integer(1, 1000);
        mv.set_coeff(Blade::SCALAR, Rational::from_integer(a0.into()));
        mv
    }
}
