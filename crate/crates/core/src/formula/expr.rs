//! Formula expressions over a bound input multivector.
//!
//! Text syntax (also the catalog file syntax):
//!
//! ```text
//! expr := 'A' | 'rev(A)' | 'v'
//!       | 'neg{' grade (',' grade)* '}(' expr ')'
//!       | 'prod(' [expr (',' expr)*] ')'
//!       | 'sum(' weight '*' expr (',' weight '*' expr)* ')'
//! ```
//!
//! `v` is the auxiliary vector of the even-subalgebra formulas. The empty
//! product `prod()` is the unit.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::FormulaError;
use crate::algebra::{rational_from_str, rational_to_string, GradeSet, Multivector, Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum FormulaExpr {
    Input,
    ReversedInput,
    Aux,
    Negate(GradeSet, Box<FormulaExpr>),
    Product(Vec<FormulaExpr>),
    WeightedSum(Vec<(Rational, FormulaExpr)>),
}

impl FormulaExpr {
    pub fn neg(grades: &[usize], child: FormulaExpr) -> Self {
        FormulaExpr::Negate(GradeSet::of(grades), Box::new(child))
    }

    pub fn prod(children: Vec<FormulaExpr>) -> Self {
        FormulaExpr::Product(children)
    }

    /// `A A_G`.
    pub fn self_product(grades: &[usize]) -> Self {
        FormulaExpr::prod(vec![FormulaExpr::Input, FormulaExpr::neg(grades, FormulaExpr::Input)])
    }

    /// Occurrences of the input, i.e. the polynomial degree in the
    /// coefficients of `A`. For sums, the degree of the first term.
    pub fn degree(&self) -> usize {
        match self {
            FormulaExpr::Input | FormulaExpr::ReversedInput => 1,
            FormulaExpr::Aux => 0,
            FormulaExpr::Negate(_, c) => c.degree(),
            FormulaExpr::Product(cs) => cs.iter().map(FormulaExpr::degree).sum(),
            FormulaExpr::WeightedSum(ts) => ts.first().map_or(0, |(_, e)| e.degree()),
        }
    }

    /// True when every term of every sum has the same degree.
    pub fn is_homogeneous(&self) -> bool {
        match self {
            FormulaExpr::Input | FormulaExpr::ReversedInput | FormulaExpr::Aux => true,
            FormulaExpr::Negate(_, c) => c.is_homogeneous(),
            FormulaExpr::Product(cs) => cs.iter().all(FormulaExpr::is_homogeneous),
            FormulaExpr::WeightedSum(ts) => {
                let d = self.degree();
                ts.iter().all(|(_, e)| e.is_homogeneous() && e.degree() == d)
            }
        }
    }

    pub fn uses_aux(&self) -> bool {
        match self {
            FormulaExpr::Aux => true,
            FormulaExpr::Input | FormulaExpr::ReversedInput => false,
            FormulaExpr::Negate(_, c) => c.uses_aux(),
            FormulaExpr::Product(cs) => cs.iter().any(FormulaExpr::uses_aux),
            FormulaExpr::WeightedSum(ts) => ts.iter().any(|(_, e)| e.uses_aux()),
        }
    }

    /// Highest grade named in any negation.
    pub fn max_grade(&self) -> usize {
        match self {
            FormulaExpr::Input | FormulaExpr::ReversedInput | FormulaExpr::Aux => 0,
            FormulaExpr::Negate(g, c) => g.iter().max().unwrap_or(0).max(c.max_grade()),
            FormulaExpr::Product(cs) => cs.iter().map(FormulaExpr::max_grade).max().unwrap_or(0),
            FormulaExpr::WeightedSum(ts) => ts.iter().map(|(_, e)| e.max_grade()).max().unwrap_or(0),
        }
    }

    /// Splices nested products into their parent and unwraps single-factor
    /// products. Evaluation is unchanged by associativity.
    pub fn flatten(&self) -> FormulaExpr {
        match self {
            FormulaExpr::Input | FormulaExpr::ReversedInput | FormulaExpr::Aux => self.clone(),
            FormulaExpr::Negate(g, c) => FormulaExpr::Negate(*g, Box::new(c.flatten())),
            FormulaExpr::WeightedSum(ts) => {
                FormulaExpr::WeightedSum(ts.iter().map(|(w, e)| (w.clone(), e.flatten())).collect())
            }
            FormulaExpr::Product(cs) => {
                let mut out = Vec::new();
                for c in cs {
                    match c.flatten() {
                        FormulaExpr::Product(inner) => out.extend(inner),
                        other => out.push(other),
                    }
                }
                if out.len() == 1 {
                    out.pop().unwrap()
                } else {
                    FormulaExpr::Product(out)
                }
            }
        }
    }

    /// Removes the leading input factor: `A f(A)` becomes `f(A)`, termwise
    /// for sums. `None` if some product does not start with the input.
    pub fn strip_leading_input(&self) -> Option<FormulaExpr> {
        match self.flatten() {
            FormulaExpr::Input => Some(FormulaExpr::Product(Vec::new())),
            FormulaExpr::Product(mut cs) if cs.first() == Some(&FormulaExpr::Input) => {
                cs.remove(0);
                Some(FormulaExpr::Product(cs).flatten())
            }
            FormulaExpr::WeightedSum(ts) => ts
                .into_iter()
                .map(|(w, e)| e.strip_leading_input().map(|s| (w, s)))
                .collect::<Option<Vec<_>>>()
                .map(FormulaExpr::WeightedSum),
            _ => None,
        }
    }

    /// Right-handed counterpart: products reversed in order and the input
    /// replaced by its reverse. Since reversion is an anti-automorphism that
    /// commutes with every grade negation, `mirror(e)(A) = reverse(e(A))`.
    pub fn mirror(&self) -> FormulaExpr {
        match self {
            FormulaExpr::Input => FormulaExpr::ReversedInput,
            FormulaExpr::ReversedInput => FormulaExpr::Input,
            FormulaExpr::Aux => FormulaExpr::Aux,
            FormulaExpr::Negate(g, c) => FormulaExpr::Negate(*g, Box::new(c.mirror())),
            FormulaExpr::Product(cs) => FormulaExpr::Product(cs.iter().rev().map(FormulaExpr::mirror).collect()),
            FormulaExpr::WeightedSum(ts) => {
                FormulaExpr::WeightedSum(ts.iter().map(|(w, e)| (w.clone(), e.mirror())).collect())
            }
        }
    }

    /// Number of grade negations written in the expression, counting each
    /// negated grade once per occurrence.
    pub fn negation_count(&self) -> usize {
        match self {
            FormulaExpr::Input | FormulaExpr::ReversedInput | FormulaExpr::Aux => 0,
            FormulaExpr::Negate(g, c) => g.len() + c.negation_count(),
            FormulaExpr::Product(cs) => cs.iter().map(FormulaExpr::negation_count).sum(),
            FormulaExpr::WeightedSum(ts) => ts.iter().map(|(_, e)| e.negation_count()).sum(),
        }
    }

    pub fn eval<T: Scalar>(&self, input: &Multivector<T>) -> Result<Multivector<T>, FormulaError> {
        Evaluator::new(input, None).eval(self)
    }

    pub fn eval_with_aux<T: Scalar>(
        &self,
        input: &Multivector<T>,
        aux: &Multivector<T>,
    ) -> Result<Multivector<T>, FormulaError> {
        Evaluator::new(input, Some(aux)).eval(self)
    }
}

/// Bottom-up evaluator. Structurally equal subtrees are computed once per
/// evaluation, which matters because the tabulated formulas repeat the
/// same self-product many times.
pub struct Evaluator<'a, 'e, T: Scalar> {
    input: &'a Multivector<T>,
    aux: Option<&'a Multivector<T>>,
    cache: HashMap<&'e FormulaExpr, Multivector<T>>,
}

impl<'a, 'e, T: Scalar> Evaluator<'a, 'e, T> {
    pub fn new(input: &'a Multivector<T>, aux: Option<&'a Multivector<T>>) -> Self {
        Self {
            input,
            aux,
            cache: HashMap::new(),
        }
    }

    pub fn eval(&mut self, expr: &'e FormulaExpr) -> Result<Multivector<T>, FormulaError> {
        if let Some(hit) = self.cache.get(expr) {
            return Ok(hit.clone());
        }
        let value = match expr {
            FormulaExpr::Input => self.input.clone(),
            FormulaExpr::ReversedInput => self.input.reverse(),
            FormulaExpr::Aux => {
                let aux = self.aux.ok_or(FormulaError::MissingAux)?;
                if aux.sig() != self.input.sig() {
                    return Err(crate::algebra::AlgebraError::SignatureMismatch {
                        left: self.input.sig(),
                        right: aux.sig(),
                    }
                    .into());
                }
                aux.clone()
            }
            FormulaExpr::Negate(g, c) => self.eval(c)?.grade_negate(*g),
            FormulaExpr::Product(cs) => {
                let mut acc: Option<Multivector<T>> = None;
                for c in cs {
                    let v = self.eval(c)?;
                    acc = Some(match acc {
                        None => v,
                        Some(a) => a.gp(&v)?,
                    });
                }
                acc.unwrap_or_else(|| Multivector::one(self.input.sig()))
            }
            FormulaExpr::WeightedSum(ts) => {
                let mut acc = Multivector::zero(self.input.sig());
                for (w, e) in ts {
                    let v = self.eval(e)?;
                    let w = T::from_rational(w);
                    acc = Multivector::linear_combine([(&T::one(), &acc), (&w, &v)])?;
                }
                acc
            }
        };
        self.cache.insert(expr, value.clone());
        Ok(value)
    }
}

impl fmt::Display for FormulaExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FormulaExpr::Input => f.write_str("A"),
            FormulaExpr::ReversedInput => f.write_str("rev(A)"),
            FormulaExpr::Aux => f.write_str("v"),
            FormulaExpr::Negate(g, c) => {
                f.write_str("neg{")?;
                for (k, grade) in g.iter().enumerate() {
                    if k > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{grade}")?;
                }
                write!(f, "}}({c})")
            }
            FormulaExpr::Product(cs) => {
                f.write_str("prod(")?;
                for (k, c) in cs.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{c}")?;
                }
                f.write_str(")")
            }
            FormulaExpr::WeightedSum(ts) => {
                f.write_str("sum(")?;
                for (k, (w, e)) in ts.iter().enumerate() {
                    if k > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{}*{e}", rational_to_string(w))?;
                }
                f.write_str(")")
            }
        }
    }
}

impl FromStr for FormulaExpr {
    type Err = FormulaError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = ExprParser { src: s, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != s.len() {
            return Err(p.error("trailing input"));
        }
        Ok(e)
    }
}

struct ExprParser<'s> {
    src: &'s str,
    pos: usize,
}

impl ExprParser<'_> {
    fn error(&self, message: &str) -> FormulaError {
        FormulaError::ExprSyntax {
            offset: self.pos,
            message: message.to_string(),
        }
    }

    fn rest(&self) -> &str {
        &self.src[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.src.len() - trimmed.len();
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(token) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, token: &str) -> Result<(), FormulaError> {
        if self.eat(token) {
            Ok(())
        } else {
            Err(self.error(&format!("expected '{token}'")))
        }
    }

    fn expr(&mut self) -> Result<FormulaExpr, FormulaError> {
        self.skip_ws();
        if self.eat("rev(") {
            self.expect("A")?;
            self.expect(")")?;
            Ok(FormulaExpr::ReversedInput)
        } else if self.eat("neg{") {
            let mut grades = GradeSet::EMPTY;
            loop {
                self.skip_ws();
                let digits: String = self.rest().chars().take_while(char::is_ascii_digit).collect();
                let g: usize = digits.parse().map_err(|_| self.error("expected grade"))?;
                if g > GradeSet::MAX_GRADE {
                    return Err(self.error("grade too large"));
                }
                self.pos += digits.len();
                grades.insert(g);
                if !self.eat(",") {
                    break;
                }
            }
            self.expect("}")?;
            self.expect("(")?;
            let child = self.expr()?;
            self.expect(")")?;
            Ok(FormulaExpr::Negate(grades, Box::new(child)))
        } else if self.eat("prod(") {
            let mut children = Vec::new();
            if !self.eat(")") {
                loop {
                    children.push(self.expr()?);
                    if self.eat(")") {
                        break;
                    }
                    self.expect(",")?;
                }
            }
            Ok(FormulaExpr::Product(children))
        } else if self.eat("sum(") {
            let mut terms = Vec::new();
            loop {
                self.skip_ws();
                let text: String = self
                    .rest()
                    .chars()
                    .take_while(|c| c.is_ascii_digit() || matches!(c, '/' | '-' | '+' | ' '))
                    .collect();
                let w = rational_from_str(text.trim_start_matches('+'))
                    .ok_or_else(|| self.error("expected rational weight"))?;
                self.pos += text.len();
                self.expect("*")?;
                terms.push((w, self.expr()?));
                if self.eat(")") {
                    break;
                }
                self.expect(",")?;
            }
            Ok(FormulaExpr::WeightedSum(terms))
        } else if self.eat("A") {
            Ok(FormulaExpr::Input)
        } else if self.eat("v") {
            Ok(FormulaExpr::Aux)
        } else {
            Err(self.error("expected expression"))
        }
    }
}

/// Scalar value of an evaluation that must be a pure scalar.
pub(crate) fn expect_scalar<T: Scalar>(value: &Multivector<T>, formula: &str) -> Result<T, FormulaError> {
    if value.is_scalar() {
        Ok(value.scalar_part().clone())
    } else {
        let residue = value.grades().difference(GradeSet::of(&[0]));
        Err(FormulaError::CatalogDefect {
            formula: formula.to_string(),
            grades: residue,
        })
    }
}
