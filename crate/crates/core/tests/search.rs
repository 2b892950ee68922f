use mvinverse::formula::EntryKind;
use mvinverse::random::Sampler;
use mvinverse::search::{
    all_grade4_blades, fit_weights, grade4_family, is_closed, rediscover, sign_assignment_sweep, single_product_sweep,
    surviving_grades, CandidatePattern, FitProblem, SearchConfig, SearchError,
};
use mvinverse::{FormulaEntry, FormulaExpr, GradeSet, Rational, Signature};

fn gs(g: &[usize]) -> GradeSet {
    GradeSet::of(g)
}

fn config() -> SearchConfig {
    SearchConfig {
        verify_samples: 10,
        ..SearchConfig::default()
    }
}

#[test]
fn small_dimensions() {
    let one = rediscover(1, &config()).unwrap();
    assert_eq!(one.verified_steps(), vec![vec![gs(&[1])]]);
    let two = rediscover(2, &config()).unwrap();
    assert_eq!(two.verified_steps(), vec![vec![gs(&[1, 2])]]);
}

#[test]
fn three_dimensions() {
    let report = rediscover(3, &config()).unwrap();
    let steps = report.verified_steps();
    assert!(steps.contains(&vec![gs(&[1, 2]), gs(&[3])]));
    assert!(steps.contains(&vec![gs(&[2, 3]), gs(&[1])]));
    assert!(steps.contains(&vec![gs(&[1, 3]), gs(&[1, 2])]));
    assert_eq!(steps.len(), 3);
}

#[test]
fn four_dimensions() {
    let report = rediscover(4, &config()).unwrap();
    assert_eq!(
        report.verified_steps(),
        vec![vec![gs(&[1, 2]), gs(&[3, 4])], vec![gs(&[2, 3]), gs(&[1, 4])]]
    );
    let rejected = report
        .rejected
        .iter()
        .find(|r| r.pattern.steps == [gs(&[1, 3]), gs(&[2, 4])])
        .expect("{1,3}>{2,4} is tried");
    assert!(!rejected.witness.difference(gs(&[0])).is_empty());
    assert!(report.truncations.is_empty());

    let lines = report.catalog_lines();
    assert_eq!(lines.len(), 2);
    let sig = Signature::new(2, 2).unwrap();
    let a = Sampler::new(9).general(sig);
    let reference = mvinverse::formula::det_norm(&a, None).unwrap();
    for line in &lines {
        let e = FormulaEntry::parse_line(line, EntryKind::General).unwrap();
        assert_eq!(e.dim, 4);
        assert_eq!(e.det_norm(&a).unwrap(), reference, "{line}");
    }
}

#[test]
fn depth_limit_is_reported() {
    let limited = SearchConfig {
        max_depth: 1,
        ..config()
    };
    let report = rediscover(4, &limited).unwrap();
    assert!(report.verified.is_empty());
    assert_eq!(report.truncations.len(), 1);
    assert!(matches!(
        rediscover(5, &config()),
        Err(SearchError::DimensionUnsupported(5))
    ));
}

#[test]
fn parallel_and_serial_agree() {
    let serial = SearchConfig {
        parallel: false,
        ..config()
    };
    assert_eq!(rediscover(3, &serial).unwrap(), rediscover(3, &config()).unwrap());
    let family = grade4_family();
    assert_eq!(
        single_product_sweep(6, Some(&family), &serial).unwrap(),
        single_product_sweep(6, Some(&family), &config()).unwrap()
    );
}

#[test]
fn six_dimensional_single_products() {
    let full = single_product_sweep(6, None, &config()).unwrap();
    assert!(full.verified.is_empty());
    let row = |g: &[usize]| full.sweep.iter().find(|r| r.negated == gs(g)).unwrap().surviving;
    assert_eq!(row(&[2, 3, 6]), gs(&[0, 1, 4, 5]));
    assert_eq!(row(&[1, 2, 5, 6]), gs(&[0, 3, 4]));
    assert_eq!(full.sweep.len(), 64);

    let family = grade4_family();
    assert!(is_closed(&family));
    assert!(!is_closed(&all_grade4_blades()));
    let restricted = single_product_sweep(6, Some(&family), &config()).unwrap();
    assert!(restricted.sweep.iter().all(|r| r.surviving.contains(4)));
    assert!(restricted.notes.iter().any(|n| n == "closed under the product: true"));
    assert!(restricted
        .notes
        .iter()
        .any(|n| n == "grade 4 survives every negation set: true"));
}

#[test]
fn surviving_grades_of_a_known_norm() {
    let expr = FormulaExpr::self_product(&[1, 2]);
    for sig in Signature::all_of_dim(2) {
        assert_eq!(surviving_grades(&expr, sig, 4, 1).unwrap(), gs(&[0]));
    }
    let bad = FormulaExpr::self_product(&[1]);
    assert!(surviving_grades(&bad, Signature::new(2, 0).unwrap(), 4, 1)
        .unwrap()
        .contains(2));
}

#[test]
fn sign_assignments() {
    let sigs = [Signature::new(6, 0).unwrap()];
    let solutions = sign_assignment_sweep(&sigs, &config()).unwrap();
    assert_eq!(solutions.len(), 2);
    let third = Rational::new(1.into(), 3.into());
    let two_thirds = Rational::new(2.into(), 3.into());
    let mut weights: Vec<Vec<Rational>> = solutions.iter().map(|s| s.fit.weights.clone()).collect();
    weights.sort();
    assert_eq!(
        weights,
        vec![vec![third.clone(), two_thirds.clone()], vec![two_thirds, third]]
    );
    // The two solutions are the same pair of terms in swapped order.
    let [a, b] = [solutions[0].assignment, solutions[1].assignment];
    assert_eq!(a & 31, b >> 5);
    assert_eq!(a >> 5, b & 31);
}

#[test]
fn fitting_needs_two_terms() {
    let family = grade4_family();
    let problem = FitProblem::new(&[Signature::new(6, 0).unwrap()], 4, &family, None, &config()).unwrap();
    let single = CandidatePattern::from_terms("one", vec![FormulaExpr::Input]);
    assert!(matches!(
        fit_weights(&single.terms, &problem),
        Err(SearchError::TooFewTerms)
    ));
}
