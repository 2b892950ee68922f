use mvinverse::formula::{inverse, FormulaError};
use mvinverse::oracle::{
    left_matrix, measure_relation, norm_exponent, oracle_det, oracle_inverse, oracle_is_invertible, ExactMatrix,
};
use mvinverse::parse::parse;
use mvinverse::random::Sampler;
use mvinverse::{Multivector, Rational, Signature};
use num_traits::Zero;

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

fn int(text: &str) -> Rational {
    Rational::from_integer(text.parse().unwrap())
}

#[test]
fn left_matrix_is_a_homomorphism() {
    let s = sig(2, 1);
    let mut rng = Sampler::new(1);
    for _ in 0..20 {
        let (a, b) = (rng.general(s), rng.general(s));
        assert_eq!(left_matrix(&(&a * &b)), left_matrix(&a).mul(&left_matrix(&b)));
    }
    assert_eq!(left_matrix(&Multivector::one(s)), ExactMatrix::identity(8));
}

/// `(1 + v) X` with `v^2 = 1` is a zero divisor for every `X`.
fn zero_divisor(s: Signature, rng: &mut Sampler) -> Multivector {
    let v = Multivector::basis_vector(s, 1);
    &(&Multivector::one(s) + &v) * &rng.general(s)
}

#[test]
fn formula_and_matrix_inverses_agree() {
    let mut rng = Sampler::new(2);
    for s in Signature::all().into_iter().filter(|s| s.dim() <= 5) {
        for _ in 0..3 {
            let a = rng.general(s);
            let from_formula = inverse(&a, None).ok().map(|i| i.inverse);
            assert_eq!(from_formula, oracle_inverse(&a), "{s}");
        }
        if s.p() > 0 {
            let a = zero_divisor(s, &mut rng);
            assert!(!oracle_is_invertible(&a), "{s}");
            assert!(oracle_inverse(&a).is_none());
            assert!(
                matches!(inverse(&a, None), Err(FormulaError::NonInvertible { .. })),
                "{s}"
            );
        }
    }
}

#[test]
fn six_dimensional_agreement() {
    let mut rng = Sampler::new(3);
    for s in [sig(3, 3), sig(0, 6)] {
        let a = rng.general(s);
        assert_eq!(Some(inverse(&a, None).unwrap().inverse), oracle_inverse(&a), "{s}");
    }
}

#[test]
fn published_inverse() {
    let s = sig(5, 0);
    let a = parse(s, "1+2e1+3e23+4e2345").unwrap();
    let adj = parse(
        s,
        "3576+96e1-53832e23-15072e45-8592e123-28992e145+47424e2345-8256e12345",
    )
    .unwrap();
    let expected = adj.scale(&Rational::new(1.into(), 354960.into()));
    assert_eq!(oracle_inverse(&a), Some(expected));
    assert_eq!(oracle_det(&a), num_traits::pow(int("354960"), 4));

    let b = parse(sig(4, 1), "3+e2+e5-e12-e15+3 e125").unwrap();
    assert!(oracle_det(&b).is_zero());
    assert!(matches!(inverse(&b, None), Err(FormulaError::NonInvertible { .. })));
}

#[test]
fn matrix_determinant_is_a_power_of_the_norm() {
    let a = parse(sig(2, 2), "45+55e1+84e12+39e134+93e234+15e1234").unwrap();
    assert_eq!(oracle_det(&a), num_traits::pow(int("259164901"), 4));
    assert_eq!([0, 1, 2, 3, 4, 5, 6].map(norm_exponent), [1, 1, 2, 2, 4, 4, 8]);
    for s in Signature::all().into_iter().filter(|s| s.dim() <= 4) {
        let r = measure_relation(s, 3, 4).unwrap();
        assert_eq!(r.matched, 3, "{s}");
        assert_eq!(r.sign, Some(1), "{s}");
    }
}

#[test]
fn solve_rejects_singular_systems() {
    let mut m = ExactMatrix::zero(2);
    m.set(0, 0, int("1"));
    m.set(0, 1, int("2"));
    m.set(1, 0, int("2"));
    m.set(1, 1, int("4"));
    assert!(m.det().is_zero());
    assert!(m.solve(&[int("1"), int("0")]).is_none());
    m.set(1, 1, int("5"));
    assert_eq!(m.det(), int("1"));
    assert_eq!(m.solve(&[int("1"), int("0")]), Some(vec![int("5"), int("-2")]));
}
