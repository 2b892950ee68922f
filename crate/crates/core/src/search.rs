//! Search for determinant-norm formulas by enumerating grade-negation
//! patterns, and exact weight fitting for multi-term formulas.
//!
//! A candidate is screened by evaluating it on random exact multivectors
//! and collecting the grades that survive. Candidates that leave only a
//! scalar are re-checked on fresh samples in every signature of the
//! dimension before being reported as verified.
//!
//! Weight fitting replaces symbolic solving: term values on sampled inputs
//! give a linear system in the weights whose right-hand side is the root of
//! the matrix determinant from [`crate::oracle`].

use std::fmt::{self, Write as _};

use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::algebra::{exact_root, rational_to_string, Blade, GradeSet, Multivector, Rational, Signature};
use crate::formula::{EntryKind, FormulaEntry, FormulaError, FormulaExpr, Status};
use crate::oracle::oracle_det;
use crate::random::Sampler;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum SearchError {
    #[error("full enumeration supports dimensions up to 4, got {0}")]
    DimensionUnsupported(usize),
    #[error("weight fitting needs at least two terms")]
    TooFewTerms,
    #[error("no consistent weights: {0}")]
    Infeasible(String),
    #[error(transparent)]
    Formula(#[from] FormulaError),
}

/// Search limits and sample counts.
#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub seed: u64,
    /// Samples per signature when screening a candidate.
    pub screen_samples: usize,
    /// Fresh samples per signature before a pattern is reported verified.
    pub verify_samples: usize,
    /// Samples used to set up a weight system, and again to validate it.
    pub fit_samples: usize,
    /// Longest negation chain enumerated.
    pub max_depth: usize,
    /// Most negation sets tried at a single step.
    pub max_sets_per_step: usize,
    pub parallel: bool,
}

impl Default for SearchConfig {
    fn default() -> Self {
        Self {
            seed: 1,
            screen_samples: 2,
            verify_samples: 50,
            fit_samples: 8,
            max_depth: 2,
            max_sets_per_step: 64,
            parallel: true,
        }
    }
}

/// One or more product terms with optional weights.
#[derive(Clone, Debug, PartialEq)]
pub struct CandidatePattern {
    pub id: String,
    /// Negation sets of a self-product chain `B_{k+1} = B_k (B_k)_{G_k}`,
    /// empty for patterns given directly as expressions.
    pub steps: Vec<GradeSet>,
    pub terms: Vec<FormulaExpr>,
    pub weights: Option<Vec<Rational>>,
}

impl CandidatePattern {
    /// `B_0 = A`, `B_{k+1} = B_k (B_k)_{G_k}`.
    pub fn chain(steps: &[GradeSet]) -> Self {
        let mut expr = FormulaExpr::Input;
        for g in steps {
            expr = FormulaExpr::prod(vec![expr.clone(), FormulaExpr::Negate(*g, Box::new(expr))]);
        }
        let id = if steps.is_empty() {
            "A".to_string()
        } else {
            steps.iter().map(GradeSet::to_string).collect::<Vec<_>>().join(">")
        };
        Self {
            id,
            steps: steps.to_vec(),
            terms: vec![expr],
            weights: None,
        }
    }

    pub fn from_terms(id: impl Into<String>, terms: Vec<FormulaExpr>) -> Self {
        Self {
            id: id.into(),
            steps: Vec::new(),
            terms,
            weights: None,
        }
    }

    /// Input factors per term.
    pub fn degree(&self) -> usize {
        self.terms.first().map_or(0, FormulaExpr::degree)
    }

    /// Single term, or the weighted sum (unit weights if none were fitted).
    pub fn expr(&self) -> FormulaExpr {
        if self.terms.len() == 1 && self.weights.as_ref().is_none_or(|w| w[0].is_one()) {
            return self.terms[0].flatten();
        }
        let weights = self
            .weights
            .clone()
            .unwrap_or_else(|| vec![Rational::one(); self.terms.len()]);
        FormulaExpr::WeightedSum(
            weights
                .into_iter()
                .zip(&self.terms)
                .filter(|(w, _)| !w.is_zero())
                .map(|(w, t)| (w, t.flatten()))
                .collect(),
        )
    }

    /// Catalog entry for this pattern.
    pub fn to_entry(&self, n: usize, id: &str) -> Option<FormulaEntry> {
        let det = self.expr();
        let adjugate = det.strip_leading_input()?;
        Some(FormulaEntry {
            id: id.to_string(),
            dim: n,
            det,
            adjugate,
            provenance: format!("rediscovered, pattern {}", self.id),
            status: Status::Verified,
            kind: EntryKind::General,
        })
    }
}

/// Negation set and the grades left by `A A_G`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SweepRow {
    pub negated: GradeSet,
    pub surviving: GradeSet,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verified {
    pub pattern: CandidatePattern,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Rejected {
    pub pattern: CandidatePattern,
    /// Non-scalar grades seen on the samples.
    pub witness: GradeSet,
}

#[derive(Clone, Debug, PartialEq, Default)]
pub struct SearchReport {
    pub title: String,
    pub dim: usize,
    pub verified: Vec<Verified>,
    pub rejected: Vec<Rejected>,
    pub sweep: Vec<SweepRow>,
    pub notes: Vec<String>,
    /// Limits that cut the enumeration short.
    pub truncations: Vec<String>,
}

impl SearchReport {
    pub fn verified_steps(&self) -> Vec<Vec<GradeSet>> {
        self.verified.iter().map(|v| v.pattern.steps.clone()).collect()
    }

    /// Verified patterns in catalog line format.
    pub fn catalog_lines(&self) -> Vec<String> {
        self.verified
            .iter()
            .enumerate()
            .filter_map(|(i, v)| {
                let id = format!("found-n{}-{:02}", self.dim, i + 1);
                v.pattern.to_entry(self.dim, &id).map(|e| e.to_line())
            })
            .collect()
    }
}

impl fmt::Display for SearchReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# {}", self.title)?;
        for row in &self.sweep {
            writeln!(f, "sweep {} -> {}", row.negated, row.surviving)?;
        }
        for v in &self.verified {
            write!(f, "verified {}", v.pattern.id)?;
            if let Some(w) = &v.pattern.weights {
                let w: Vec<String> = w.iter().map(rational_to_string).collect();
                write!(f, " weights ({})", w.join(", "))?;
            }
            writeln!(f)?;
        }
        for r in &self.rejected {
            writeln!(f, "rejected {} survives {}", r.pattern.id, r.witness)?;
        }
        for n in &self.notes {
            writeln!(f, "note {n}")?;
        }
        for t in &self.truncations {
            writeln!(f, "truncated {t}")?;
        }
        for line in self.catalog_lines() {
            writeln!(f, "{line}")?;
        }
        Ok(())
    }
}

fn sig_label(sig: Signature) -> u64 {
    ((sig.p() as u64) << 8) | sig.q() as u64
}

fn sample(rng: &mut Sampler, sig: Signature, family: Option<&[Blade]>) -> Multivector {
    match family {
        Some(blades) => rng.on_blades(sig, blades),
        None => rng.general(sig),
    }
}

fn grades_of(
    expr: &FormulaExpr,
    sig: Signature,
    family: Option<&[Blade]>,
    samples: usize,
    rng: &mut Sampler,
) -> Result<GradeSet, FormulaError> {
    let mut seen = GradeSet::EMPTY;
    for _ in 0..samples {
        let a = sample(rng, sig, family);
        seen = seen.union(expr.eval(&a)?.grades());
    }
    Ok(seen)
}

/// Union of the grades with nonzero coefficients in `expr(A)` over random
/// samples `A` of `sig`.
pub fn surviving_grades(
    expr: &FormulaExpr,
    sig: Signature,
    samples: usize,
    seed: u64,
) -> Result<GradeSet, FormulaError> {
    let mut rng = Sampler::derived(seed, sig_label(sig));
    grades_of(expr, sig, None, samples.max(1), &mut rng)
}

/// As [`surviving_grades`], with samples drawn from scalar plus the given
/// blades.
pub fn surviving_grades_on(
    expr: &FormulaExpr,
    sig: Signature,
    family: &[Blade],
    samples: usize,
    seed: u64,
) -> Result<GradeSet, FormulaError> {
    let mut rng = Sampler::derived(seed, sig_label(sig));
    grades_of(expr, sig, Some(family), samples.max(1), &mut rng)
}

/// Grades surviving in every signature of dimension `n`, combined.
fn grades_all_sigs(
    expr: &FormulaExpr,
    n: usize,
    family: Option<&[Blade]>,
    samples: usize,
    seed: u64,
) -> Result<GradeSet, FormulaError> {
    let mut seen = GradeSet::EMPTY;
    for sig in Signature::all_of_dim(n) {
        let mut rng = Sampler::derived(seed, sig_label(sig));
        seen = seen.union(grades_of(expr, sig, family, samples, &mut rng)?);
    }
    Ok(seen)
}

/// The blades `e1256, e1346, e2345`, which with the scalar span a
/// subalgebra on which no single product `A A_G` removes grade 4.
pub fn grade4_family() -> Vec<Blade> {
    [&[1, 2, 5, 6][..], &[1, 3, 4, 6], &[2, 3, 4, 5]]
        .iter()
        .map(|ix| Blade::from_indices(ix).expect("distinct").1)
        .collect()
}

/// All fifteen grade-4 blades for `n = 6`.
pub fn all_grade4_blades() -> Vec<Blade> {
    Signature::new(6, 0)
        .expect("valid")
        .tables()
        .order
        .blades()
        .iter()
        .copied()
        .filter(|b| b.grade() == 4)
        .collect()
}

/// True if products of scalar multiples of `{1} + blades` stay in that span.
pub fn is_closed(blades: &[Blade]) -> bool {
    let mut span = vec![Blade::SCALAR];
    span.extend_from_slice(blades);
    span.iter()
        .all(|a| span.iter().all(|b| span.contains(&Blade(a.0 ^ b.0))))
}

fn subsets(n: usize, include_empty: bool) -> impl Iterator<Item = GradeSet> {
    let start = if include_empty { 0 } else { 1 };
    (start..1u16 << n).map(|bits| GradeSet::from_bits(bits << 1))
}

/// `A A_G` for every `G` in the subsets of `{1..n}`, over all signatures
/// of dimension `n`, optionally restricted to scalar plus `restriction`.
pub fn single_product_sweep(
    n: usize,
    restriction: Option<&[Blade]>,
    config: &SearchConfig,
) -> Result<SearchReport, SearchError> {
    let sets: Vec<GradeSet> = subsets(n, true).collect();
    let rows = map_ordered(&sets, config.parallel, |g| {
        let expr = FormulaExpr::prod(vec![
            FormulaExpr::Input,
            FormulaExpr::Negate(*g, Box::new(FormulaExpr::Input)),
        ]);
        grades_all_sigs(&expr, n, restriction, config.screen_samples.max(1), config.seed)
            .map(|surviving| SweepRow { negated: *g, surviving })
    })?;
    let mut report = SearchReport {
        title: match restriction {
            Some(b) => format!(
                "single products A A_G, n = {n}, A in span of 1, {}",
                b.iter().map(Blade::to_string).collect::<Vec<_>>().join(", ")
            ),
            None => format!("single products A A_G, n = {n}"),
        },
        dim: n,
        ..Default::default()
    };
    for row in &rows {
        if row.surviving.difference(GradeSet::of(&[0])).is_empty() {
            report.verified.push(Verified {
                pattern: CandidatePattern::chain(&[row.negated]),
            });
        }
    }
    if let Some(b) = restriction {
        report.notes.push(format!("closed under the product: {}", is_closed(b)));
    }
    if n >= 4 {
        let all = rows.iter().all(|r| r.surviving.contains(4));
        report.notes.push(format!("grade 4 survives every negation set: {all}"));
    }
    report.sweep = rows;
    Ok(report)
}

/// Runs `f` over `items`, in parallel if asked, keeping input order.
fn map_ordered<T: Sync, R: Send, E: Send>(
    items: &[T],
    parallel: bool,
    f: impl Fn(&T) -> Result<R, E> + Sync,
) -> Result<Vec<R>, E> {
    if parallel {
        items.par_iter().map(&f).collect()
    } else {
        items.iter().map(f).collect()
    }
}

/// Number of self-product steps whose factor count matches the known
/// formulas: one step (2 factors) for `n <= 2`, two (4 factors) for
/// `n = 3, 4`.
fn depth_for(n: usize) -> usize {
    match n {
        0 => 0,
        1 | 2 => 1,
        3 | 4 => 2,
        _ => 3,
    }
}

/// Enumerates self-product chains of the right depth for dimension `n` and
/// keeps those that are scalar in every signature of that dimension.
///
/// At each step, negating grades that the current factor does not have is
/// a no-op, so negation sets are reduced to the grades present and
/// duplicates are dropped.
pub fn rediscover(n: usize, config: &SearchConfig) -> Result<SearchReport, SearchError> {
    if n > 4 {
        return Err(SearchError::DimensionUnsupported(n));
    }
    let mut report = SearchReport {
        title: format!("self-product chains, n = {n}"),
        dim: n,
        ..Default::default()
    };
    let mut depth = depth_for(n);
    if depth > config.max_depth {
        report
            .truncations
            .push(format!("depth {depth} needed, limited to {}", config.max_depth));
        depth = config.max_depth;
    }
    let input_grades = GradeSet::all(n);
    let mut frontier: Vec<(Vec<GradeSet>, GradeSet)> = vec![(Vec::new(), input_grades)];
    for step in 0..depth {
        let mut next = Vec::new();
        for (steps, present) in &frontier {
            let mut seen = Vec::new();
            let mut tried = 0;
            for g in subsets(n, false) {
                let g = g.intersection(*present);
                if g.is_empty() || seen.contains(&g) {
                    continue;
                }
                if tried == config.max_sets_per_step {
                    report.truncations.push(format!(
                        "step {} after {}: more than {} negation sets",
                        step + 1,
                        CandidatePattern::chain(steps).id,
                        config.max_sets_per_step
                    ));
                    break;
                }
                tried += 1;
                seen.push(g);
                let mut s = steps.clone();
                s.push(g);
                next.push(s);
            }
        }
        let screened = map_ordered(&next, config.parallel, |steps| {
            let pattern = CandidatePattern::chain(steps);
            grades_all_sigs(&pattern.terms[0], n, None, config.screen_samples.max(1), config.seed)
                .map(|g| (steps.clone(), g))
        })?;
        frontier = screened;
    }
    if depth == 0 {
        report.verified.push(Verified {
            pattern: CandidatePattern::chain(&[]),
        });
        return Ok(report);
    }
    let scalar = GradeSet::of(&[0]);
    let checks = map_ordered(&frontier, config.parallel, |(steps, grades)| {
        let pattern = CandidatePattern::chain(steps);
        if !grades.difference(scalar).is_empty() {
            return Ok::<_, FormulaError>((pattern, grades.difference(scalar)));
        }
        let fresh = grades_all_sigs(
            &pattern.terms[0],
            n,
            None,
            config.verify_samples,
            config.seed.wrapping_add(0x5eed),
        )?;
        Ok((pattern, fresh.difference(scalar)))
    })?;
    for (pattern, witness) in checks {
        if witness.is_empty() {
            report.verified.push(Verified { pattern });
        } else {
            report.rejected.push(Rejected { pattern, witness });
        }
    }
    Ok(report)
}

/// Inputs and targets for one weight-fitting problem, shared by every
/// candidate term list.
#[derive(Clone, Debug)]
pub struct FitProblem {
    /// Power relating the fitted norm to the matrix determinant.
    pub exponent: u32,
    fit: Vec<(Multivector, Rational)>,
    holdout: Vec<(Multivector, Rational)>,
    revalidate: Vec<(Multivector, Rational)>,
}

impl FitProblem {
    /// Fit samples are scalar-dominant integer elements of scalar plus
    /// `family`, where the norm is positive, so the target is the positive
    /// root of the matrix determinant. Held-out samples are general
    /// rationals on `family`; the optional second family is used for a
    /// final check.
    pub fn new(
        sigs: &[Signature],
        degree: usize,
        family: &[Blade],
        revalidate_family: Option<&[Blade]>,
        config: &SearchConfig,
    ) -> Result<Self, SearchError> {
        let sig0 = sigs
            .first()
            .ok_or_else(|| SearchError::Infeasible("no signature".into()))?;
        let exponent = (sig0.blade_count() / degree.max(1)) as u32;
        let k = config.fit_samples.max(1);
        let mut fit = Vec::new();
        let mut holdout = Vec::new();
        let mut revalidate = Vec::new();
        for &sig in sigs {
            let mut rng = Sampler::derived(config.seed, sig_label(sig) ^ 0xf17);
            for _ in 0..k {
                let a = rng.scalar_dominant(sig, family);
                let det = oracle_det(&a);
                let target = exact_root(&det.abs(), exponent).ok_or_else(|| {
                    SearchError::Infeasible(format!(
                        "matrix determinant {det} has no exact root of order {exponent}"
                    ))
                })?;
                fit.push((a, target));
            }
            for _ in 0..k {
                let a = rng.on_blades(sig, family);
                let det = oracle_det(&a).abs();
                holdout.push((a, det));
            }
            if let Some(wide) = revalidate_family {
                for _ in 0..k {
                    let a = rng.on_blades(sig, wide);
                    let det = oracle_det(&a).abs();
                    revalidate.push((a, det));
                }
            }
        }
        Ok(Self {
            exponent,
            fit,
            holdout,
            revalidate,
        })
    }
}

/// Fitted weights for a term list.
#[derive(Clone, Debug, PartialEq)]
pub struct WeightFit {
    pub weights: Vec<Rational>,
    /// Some terms coincided on every sample, or the system had free
    /// directions; the weights are then one representative, with the free
    /// weights set to zero.
    pub degenerate: bool,
}

/// Finds weights `b` with `sum b_k term_k(A)` scalar and equal to the norm
/// implied by the matrix determinant, then validates on held-out samples.
pub fn fit_weights(terms: &[FormulaExpr], problem: &FitProblem) -> Result<WeightFit, SearchError> {
    if terms.len() < 2 {
        return Err(SearchError::TooFewTerms);
    }
    let columns: Vec<Vec<Multivector>> = terms
        .iter()
        .map(|t| {
            problem
                .fit
                .iter()
                .map(|(a, _)| t.eval(a))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<_, _>>()?;
    let targets: Vec<&Rational> = problem.fit.iter().map(|(_, t)| t).collect();
    let fit = solve_weights(&columns, &targets)?;
    let check = |samples: &[(Multivector, Rational)], label: &str| -> Result<(), SearchError> {
        for (a, det) in samples {
            let mut total = Multivector::zero(a.sig());
            for (w, t) in fit.weights.iter().zip(terms) {
                if !w.is_zero() {
                    total = &total + &t.eval(a)?.scale(w);
                }
            }
            if !total.is_scalar() {
                return Err(SearchError::Infeasible(format!(
                    "{label} sample leaves grades {}",
                    total.grades().difference(GradeSet::of(&[0]))
                )));
            }
            if num_traits::pow(total.scalar_part().abs(), problem.exponent as usize) != *det {
                return Err(SearchError::Infeasible(format!(
                    "{label} sample disagrees with the matrix determinant"
                )));
            }
        }
        Ok(())
    };
    check(&problem.holdout, "held-out")?;
    check(&problem.revalidate, "wide-family")?;
    Ok(fit)
}

/// Exact least-structure solve of `sum_k b_k columns[k][s] = targets[s]`
/// (scalar part) and `= 0` (other coefficients) over all samples `s`.
fn solve_weights(columns: &[Vec<Multivector>], targets: &[&Rational]) -> Result<WeightFit, SearchError> {
    let m = columns.len();
    // Merge terms that coincide on every sample.
    let mut rep: Vec<usize> = (0..m).collect();
    for j in 0..m {
        if let Some(i) = (0..j).find(|&i| rep[i] == i && columns[i] == columns[j]) {
            rep[j] = i;
        }
    }
    let unique: Vec<usize> = (0..m).filter(|&j| rep[j] == j).collect();
    let mut degenerate = unique.len() < m;

    let mut rows: Vec<Vec<Rational>> = Vec::new();
    for (s, target) in targets.iter().enumerate() {
        let len = columns[0][s].coeffs().len();
        for k in 0..len {
            let mut row: Vec<Rational> = unique.iter().map(|&j| columns[j][s].coeffs()[k].clone()).collect();
            let rhs = if k == 0 { (*target).clone() } else { Rational::zero() };
            if row.iter().all(Zero::is_zero) {
                if !rhs.is_zero() {
                    return Err(SearchError::Infeasible("scalar target with vanishing terms".into()));
                }
                continue;
            }
            row.push(rhs);
            rows.push(row);
        }
    }
    let (solution, free) =
        rref_solve(rows, unique.len()).ok_or_else(|| SearchError::Infeasible("inconsistent linear system".into()))?;
    degenerate |= free;
    let mut weights = vec![Rational::zero(); m];
    for (slot, &j) in unique.iter().enumerate() {
        weights[j] = solution[slot].clone();
    }
    // Each term is 1 at the identity, so this is the norm of 1.
    let at_identity: Rational = weights.iter().sum();
    if at_identity.is_negative() {
        for w in &mut weights {
            *w = -w.clone();
        }
    }
    Ok(WeightFit { weights, degenerate })
}

/// Reduced row echelon solve of an augmented system with `unknowns`
/// columns. Returns a solution (free variables zero) and whether any
/// variable was free, or `None` if inconsistent.
fn rref_solve(mut rows: Vec<Vec<Rational>>, unknowns: usize) -> Option<(Vec<Rational>, bool)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..unknowns {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = Rational::one() / &rows[r][c];
        for v in rows[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &f * pv;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if rows[r..].iter().any(|row| !row[unknowns].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); unknowns];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = rows[i][unknowns].clone();
    }
    Some((x, pivots.len() < unknowns))
}

/// `f` is the identity or the grade-4 negation according to one bit.
fn neg4_if(bit: bool, e: FormulaExpr) -> FormulaExpr {
    if bit {
        FormulaExpr::neg(&[4], e)
    } else {
        e
    }
}

/// Term `B f5(f4(B) f3(f2(B) f1(B)))` for the low five bits of `bits`
/// (bit 0 is `f1`), each `f` either the identity or the grade-4 negation.
pub fn chain_term(bits: u16) -> FormulaExpr {
    let b = || FormulaExpr::Input;
    let f = |k: u16, e: FormulaExpr| neg4_if(bits & (1 << (k - 1)) != 0, e);
    let inner = FormulaExpr::prod(vec![f(2, b()), f(1, b())]);
    let middle = FormulaExpr::prod(vec![f(4, b()), f(3, inner)]);
    FormulaExpr::prod(vec![b(), f(5, middle)])
}

/// One sign assignment that admits consistent weights.
#[derive(Clone, Debug, PartialEq)]
pub struct SignSolution {
    /// Ten bits: the low five select the first term, the high five the
    /// second.
    pub assignment: u16,
    pub fit: WeightFit,
}

/// Tries every assignment of identity / grade-4 negation to the ten slots
/// of two chain terms on the family `1, e1256, e1346, e2345` of `sigs`, and
/// returns those for which exact weights exist and survive validation.
pub fn sign_assignment_sweep(sigs: &[Signature], config: &SearchConfig) -> Result<Vec<SignSolution>, SearchError> {
    let family = grade4_family();
    let wide = all_grade4_blades();
    let problem = FitProblem::new(sigs, 4, &family, Some(&wide), config)?;
    let terms: Vec<FormulaExpr> = (0..32).map(chain_term).collect();
    let assignments: Vec<u16> = (0..1024).collect();
    let results = map_ordered(&assignments, config.parallel, |&bits| {
        let pair = [terms[(bits & 31) as usize].clone(), terms[(bits >> 5) as usize].clone()];
        match fit_weights(&pair, &problem) {
            Ok(fit) => Ok(Some(SignSolution { assignment: bits, fit })),
            Err(SearchError::Infeasible(_)) => Ok(None),
            Err(e) => Err(e),
        }
    })?;
    Ok(results.into_iter().flatten().collect())
}

/// Text table of a sign sweep.
pub fn format_sign_solutions(solutions: &[SignSolution]) -> String {
    let mut out = String::new();
    for s in solutions {
        let w: Vec<String> = s.fit.weights.iter().map(rational_to_string).collect();
        let _ = writeln!(
            out,
            "assignment {:010b}: {} * {} + {} * {}{}",
            s.assignment,
            w[0],
            chain_term(s.assignment & 31),
            w[1],
            chain_term(s.assignment >> 5),
            if s.fit.degenerate { " (degenerate)" } else { "" }
        );
    }
    let _ = writeln!(out, "{} of 1024 assignments admit weights", solutions.len());
    out
}
