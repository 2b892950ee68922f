//! Worked multivectors with published intermediate values.

use mvinverse::formula::{det_norm, inverse, Catalog, FormulaError};
use mvinverse::parse::parse;
use mvinverse::{GradeSet, Multivector, Rational, Signature};

fn sig(p: usize, q: usize) -> Signature {
    Signature::new(p, q).unwrap()
}

fn mv(s: Signature, text: &str) -> Multivector {
    parse(s, text).unwrap()
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

fn int(text: &str) -> Rational {
    Rational::from_integer(text.parse().unwrap())
}

fn neg(a: &Multivector, g: &[usize]) -> Multivector {
    a.grade_negate(GradeSet::of(g))
}

fn gp(a: &Multivector, b: &Multivector) -> Multivector {
    a.gp(b).unwrap()
}

#[test]
fn cl50_single_product_chain() {
    let s = sig(5, 0);
    let a = mv(s, "1+2e1+3e23+4e2345");
    let h = gp(&a, &neg(&a, &[2, 3]));
    assert_eq!(h, mv(s, "30+4e1+8e2345+16e12345"));
    assert_eq!(h.grade_part(4).unwrap(), mv(s, "8e2345"));
    let hh15 = gp(&h, &neg(&h, &[1, 5]));
    assert_eq!(hh15, mv(s, "692+352e2345"));
    let d1 = gp(&hh15, &neg(&hh15, &[3, 4]));
    assert_eq!(d1, mv(s, "354960"));
    assert_eq!(det_norm(&a, Some("n5-25")).unwrap(), int("354960"));
    assert_eq!(det_norm(&a, None).unwrap(), int("354960"));
}

#[test]
fn cl50_alternative_chain() {
    let s = sig(5, 0);
    let a = mv(s, "1+2e1+3e23+4e2345");
    let h = gp(&a, &neg(&a, &[2, 3]));
    let x = gp(&h, &neg(&h, &[4, 5]));
    assert_eq!(x, mv(s, "596-16e1"));
    let y = gp(&x, &neg(&h, &[1, 5]));
    assert_eq!(y, mv(s, "17944-2864e1+5024e2345-9664e12345"));
    assert_eq!(gp(&y, &neg(&h, &[1, 4])), mv(s, "354960"));
    assert_eq!(det_norm(&a, Some("n5-28")).unwrap(), int("354960"));
}

#[test]
fn cl50_inverse() {
    let s = sig(5, 0);
    let a = mv(s, "1+2e1+3e23+4e2345");
    let adj = mv(
        s,
        "3576+96e1-53832e23-15072e45-8592e123-28992e145+47424e2345-8256e12345",
    );
    for id in [None, Some("n5-25"), Some("n5-28")] {
        let inv = inverse(&a, id).unwrap();
        assert_eq!(inv.det, int("354960"));
        assert_eq!(inv.inverse, adj.scale(&q(1, 354960)));
    }
}

#[test]
fn cl41_isotropic_factor() {
    let s = sig(4, 1);
    let a = mv(s, "3+e2+e5-e12-e15+3 e125");
    assert!(gp(&a, &neg(&a, &[2, 3])).is_zero());
    let h = gp(&a, &neg(&a, &[1, 2, 5]));
    assert_eq!(h, mv(s, "18+18e125"));
    assert!(gp(&h, &neg(&h, &[3])).is_zero());
    assert_eq!(det_norm(&a, None).unwrap(), int("0"));
    match inverse(&a, None) {
        Err(FormulaError::NonInvertible { det, formula, .. }) => {
            assert_eq!(det, int("0"));
            assert_eq!(formula, "inv-n5");
        }
        other => panic!("expected NonInvertible, got {other:?}"),
    }
}

#[test]
fn cl42_isotropic_factor() {
    let s = sig(4, 2);
    let a = mv(s, "2+e1+e5-2e15+3e26+3e1256");
    let h = gp(&a, &neg(&a, &[2, 3, 6]));
    assert_eq!(h, mv(s, "8e1+8e5"));
    assert!(gp(&h, &h).is_zero());
    assert!(gp(&neg(&h, &[4]), &neg(&h, &[4])).is_zero());

    let a2 = mv(s, "1+2e1+3e126");
    let h2 = gp(&a2, &neg(&a2, &[2, 3, 6]));
    assert_eq!(h2, mv(s, "-4+4e1"));
    let hh = gp(&h2, &h2);
    assert_eq!(hh, mv(s, "32-32e1"));
    assert!(gp(&hh, &neg(&hh, &[1, 4, 5])).is_zero());

    let catalog = Catalog::builtin();
    let table: Vec<_> = catalog
        .general_of_dim(6)
        .filter(|e| e.id.starts_with("n6-") && e.id.len() == 5)
        .collect();
    assert_eq!(table.len(), 20);
    for e in table {
        assert_eq!(e.det_norm(&a).unwrap(), int("0"), "{}", e.id);
        assert_eq!(e.det_norm(&a2).unwrap(), int("0"), "{}", e.id);
    }
}

#[test]
fn cl15_default_formula_steps() {
    let s = sig(1, 5);
    let a = mv(s, "2+e1+4e3+e15+3e126");
    let h = gp(&a, &neg(&a, &[2, 3, 6]));
    assert_eq!(h, mv(s, "-3+4e1+16e3-2e5-24e1236"));
    let hh = gp(&h, &h);
    assert_eq!(hh, mv(s, "-811-24e1-96e3+12e5+144e1236-96e12356"));
    let t1 = gp(&hh, &neg(&hh, &[1, 4, 5])).scale(&q(1, 3));
    assert_eq!(
        t1,
        mv(s, "678025+27648e5+2304e1236+18432e1256-4608e2356+3456e12356").scale(&q(1, 3))
    );
    let h4 = neg(&h, &[4]);
    let inner = neg(&gp(&h4, &h4), &[1, 4, 5]);
    assert_eq!(inner, mv(s, "-811+24e1+96e3-12e5+144e1236-96e12356"));
    let outer = neg(&gp(&h4, &inner), &[4]);
    assert_eq!(
        outer,
        mv(s, "-2487-3316e1-13264e3-646e5+19704e1236-1536e1256+384e2356+864e12356")
    );
    let t2 = gp(&h, &outer).scale(&q(2, 3));
    assert_eq!(
        t2,
        mv(s, "678025-13824e5-1152e1236-9216e1256+2304e2356-1728e12356").scale(&q(2, 3))
    );
    assert_eq!(&t1 + &t2, mv(s, "678025"));
    assert_eq!(det_norm(&a, None).unwrap(), int("678025"));
}

#[test]
fn cl15_inverse() {
    let s = sig(1, 5);
    let a = mv(s, "2+e1+4e3+e15+3e126");
    let inv = inverse(&a, None).unwrap();
    assert_eq!(inv.det, int("678025"));
    let expected = mv(
        s,
        "44766-9765e1-95588e3+1841e15+8412e26-1720e35-71355e126-12112e135+19416e236-6162e1256+20760e2356-5184e12356",
    );
    assert_eq!(inv.inverse, expected.scale(&q(1, 678025)));

    // The two weighted groups of the adjugate separately.
    let ar = neg(&a, &[2, 3, 6]);
    let h = gp(&a, &ar);
    let hh = gp(&h, &h);
    let g1 = gp(&gp(&ar, &h), &neg(&hh, &[1, 4, 5]));
    assert_eq!(
        g1,
        mv(s, "44766-9765e1-95588e3+1841e15+8412e26-5176e35-71355e126-12112e135+20568e236-1554e1256+19608e2356-7488e12356")
    );
    let h4 = neg(&h, &[4]);
    let g2 = gp(&ar, &neg(&gp(&h4, &neg(&gp(&h4, &h4), &[1, 4, 5])), &[4]));
    assert_eq!(
        g2,
        mv(
            s,
            "44766-9765e1-95588e3+1841e15+8412e26+8e35-71355e126-12112e135+18840e236-8466e1256+21336e2356-4032e12356"
        )
    );
}

#[test]
fn cl15_first_class_terms() {
    let s = sig(1, 5);
    let a = mv(s, "2+e1+4e3+e15+3e126");
    let e = Catalog::builtin().get("n6-01").unwrap();
    let mvinverse::FormulaExpr::WeightedSum(terms) = &e.det else {
        panic!("two-term formula expected");
    };
    let values: Vec<Rational> = terms
        .iter()
        .map(|(w, t)| {
            let v = t.eval(&a).unwrap();
            assert!(v.is_scalar());
            w * v.scalar_part()
        })
        .collect();
    assert_eq!(values, vec![q(678025, 3), q(1356050, 3)]);
    assert_eq!(e.det_norm(&a).unwrap(), int("678025"));
}

#[test]
fn cl22_through_six_dimensional_formula() {
    let s = sig(2, 2);
    let a = mv(s, "45+55e1+84e12+39e134+93e234+15e1234");
    let h = gp(&a, &neg(&a, &[2, 3, 6]));
    assert_eq!(h, mv(s, "22501+7740e1-10410e2-8880e1234"));
    let hh = gp(&h, &h);
    assert_eq!(hh, mv(s, "753425101+348315480e1-468470820e2-399617760e1234"));
    let x = gp(&h, &neg(&hh, &[1, 4, 5]));
    assert_eq!(gp(&h, &x).scale(&q(1, 3)), mv(s, "67166445910339801/3"));
    let h4 = neg(&h, &[4]);
    let h4h4 = gp(&h4, &h4);
    assert_eq!(h4h4, mv(s, "753425101+348315480e1-468470820e2+399617760e1234"));
    let y = neg(&gp(&h4, &neg(&h4h4, &[1, 4, 5])), &[4]);
    assert_eq!(
        gp(&h, &y).scale(&q(2, 3)),
        Multivector::scalar(s, int("67166445910339801") * q(2, 3))
    );
    let step7 = &x + &y.scale(&q(2, 1));
    assert_eq!(
        step7,
        mv(s, "17494408312203-6017809001220e1+8093719858230e2+6904152962640e1234")
    );

    let ag = int("67166445910339801");
    assert_eq!(ag, int("259164901") * int("259164901"));
    assert_eq!(det_norm(&a, Some("inv-n6a")).unwrap(), ag);
    assert_eq!(det_norm(&a, None).unwrap(), int("259164901"));

    let six = inverse(&a, Some("inv-n6a")).unwrap();
    let four = inverse(&a, None).unwrap();
    assert_eq!(six.inverse, four.inverse);
    let expected = mv(
        s,
        "720045-811025e1+164610e2-1317534e12+79650e34-721389e134-1488093e234-388695e1234",
    );
    assert_eq!(four.inverse, expected.scale(&q(1, 259164901)));
    let unreduced = mv(
        s,
        "559831173421635-630567641500575e1+127983403060830e2-1024375706022402e12+61927453093950e34-560876126302467e134-1156984425071379e234-302208303582585e1234",
    );
    assert_eq!(six.inverse.scale(&(int("3") * &ag)), unreduced);
}

#[test]
fn cl21_single_product_shape() {
    let s = sig(2, 1);
    let c: Vec<i64> = vec![3, -1, 4, 1, -5, 9, -2, 6];
    let a = Multivector::from_integers(s, &c).unwrap();
    let b = gp(&a, &neg(&a, &[1, 2]));
    assert_eq!(b.grades(), GradeSet::of(&[0, 3]));
    let b0 =
        c[0] * c[0] - c[1] * c[1] - c[2] * c[2] + c[3] * c[3] + c[4] * c[4] - c[5] * c[5] - c[6] * c[6] + c[7] * c[7];
    let b7 = -2 * c[3] * c[4] + 2 * c[2] * c[5] - 2 * c[1] * c[6] + 2 * c[0] * c[7];
    assert_eq!(b.coeffs()[0], Rational::from_integer(b0.into()));
    assert_eq!(b.coeffs()[7], Rational::from_integer(b7.into()));
}

#[test]
fn cl20_clifford_conjugate_norm() {
    let s = sig(2, 0);
    let a = mv(s, "2-3e1+5e2+7e12");
    let n = gp(&a, &neg(&a, &[1, 2]));
    assert_eq!(n, mv(s, &(4 - 9 - 25 + 49).to_string()));
}
