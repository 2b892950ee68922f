//! Three-term n = 6 determinant norms with all weights 1/3.
//!
//! One term is taken from each of three sets, either `S1, S2, S3` (four
//! members each, 64 triplets) or `T1, T2, T3` (two members each, 8
//! triplets).

use std::fmt;

use super::catalog::{parse_fields, EntryKind, FormulaEntry, Status};
use super::{FormulaError, FormulaExpr};
use crate::algebra::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TripletFamily {
    S,
    T,
}

impl TripletFamily {
    pub fn set_size(self) -> usize {
        match self {
            TripletFamily::S => 4,
            TripletFamily::T => 2,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            TripletFamily::S => "s",
            TripletFamily::T => "t",
        }
    }
}

impl fmt::Display for TripletFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            TripletFamily::S => "S",
            TripletFamily::T => "T",
        })
    }
}

#[derive(Clone, Debug)]
struct Term {
    det: FormulaExpr,
    adjugate: FormulaExpr,
}

/// The six term sets, loaded from data.
#[derive(Clone, Debug)]
pub struct TripletSets {
    s: [Vec<Term>; 3],
    t: [Vec<Term>; 3],
}

impl TripletSets {
    pub fn parse(text: &str) -> Result<Self, FormulaError> {
        let mut s: [Vec<Term>; 3] = Default::default();
        let mut t: [Vec<Term>; 3] = Default::default();
        for (lineno, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: &str| FormulaError::CatalogSyntax {
                line: lineno + 1,
                message: message.to_string(),
            };
            let fields = parse_fields(line, 4).map_err(|m| err(&m))?;
            let name = fields[0];
            let (family, set) = match (name.get(..1), name[1..].parse::<usize>()) {
                (Some("S"), Ok(k @ 1..=3)) => (&mut s, k - 1),
                (Some("T"), Ok(k @ 1..=3)) => (&mut t, k - 1),
                _ => return Err(err("unknown set name")),
            };
            let index: usize = fields[1].parse().map_err(|_| err("bad index"))?;
            if index != family[set].len() + 1 {
                return Err(err("set members must be listed in order"));
            }
            let det: FormulaExpr = fields[2].parse()?;
            let adjugate: FormulaExpr = fields[3].parse()?;
            if det.strip_leading_input() != Some(adjugate.flatten()) {
                return Err(err("det-term is not A times adjugate-term"));
            }
            family[set].push(Term { det, adjugate });
        }
        for (family, sets) in [(TripletFamily::S, &s), (TripletFamily::T, &t)] {
            if sets.iter().any(|v| v.len() != family.set_size()) {
                return Err(FormulaError::CatalogSyntax {
                    line: 0,
                    message: format!("{family} sets must have {} members each", family.set_size()),
                });
            }
        }
        Ok(Self { s, t })
    }

    /// Determinant-norm term `k` (1-based) of set `set` (1..=3), unweighted.
    pub fn term(&self, family: TripletFamily, set: usize, k: usize) -> Option<&FormulaExpr> {
        let sets = match family {
            TripletFamily::S => &self.s,
            TripletFamily::T => &self.t,
        };
        sets.get(set.checked_sub(1)?)?.get(k.checked_sub(1)?).map(|t| &t.det)
    }

    pub fn id(family: TripletFamily, i: usize, j: usize, k: usize) -> String {
        format!("n6-{}-{i}-{j}-{k}", family.tag())
    }

    /// Entry for the triplet `(set1[i], set2[j], set3[k])`, 1-based.
    pub fn formula(&self, family: TripletFamily, i: usize, j: usize, k: usize) -> Result<FormulaEntry, FormulaError> {
        let sets = match family {
            TripletFamily::S => &self.s,
            TripletFamily::T => &self.t,
        };
        let size = family.set_size();
        if [i, j, k].iter().any(|&x| x == 0 || x > size) {
            return Err(FormulaError::TripletIndex { family, i, j, k });
        }
        let third = Rational::new(1.into(), 3.into());
        let picked = [&sets[0][i - 1], &sets[1][j - 1], &sets[2][k - 1]];
        let det = FormulaExpr::WeightedSum(picked.iter().map(|t| (third.clone(), t.det.clone())).collect());
        let adjugate = FormulaExpr::WeightedSum(picked.iter().map(|t| (third.clone(), t.adjugate.clone())).collect());
        Ok(FormulaEntry {
            id: Self::id(family, i, j, k),
            dim: 6,
            det,
            adjugate,
            provenance: format!("n6 triplet {family}1[{i}] + {family}2[{j}] + {family}3[{k}]"),
            status: Status::Verified,
            kind: EntryKind::General,
        })
    }

    /// Triplet named by set labels, e.g. `[("S1", 1), ("S2", 2), ("S3", 4)]`.
    /// The labels must name sets 1, 2, 3 of one family, in that order.
    pub fn formula_by_names(&self, picks: [(&str, usize); 3]) -> Result<FormulaEntry, FormulaError> {
        let families: Vec<Option<TripletFamily>> = picks
            .iter()
            .map(|(name, _)| match name.chars().next() {
                Some('S') => Some(TripletFamily::S),
                Some('T') => Some(TripletFamily::T),
                _ => None,
            })
            .collect();
        let family = families[0].ok_or(FormulaError::MixedTripletSets)?;
        if families.iter().any(|f| *f != Some(family)) {
            return Err(FormulaError::MixedTripletSets);
        }
        for (pos, (name, _)) in picks.iter().enumerate() {
            if name[1..] != (pos + 1).to_string() {
                return Err(FormulaError::TripletIndex {
                    family,
                    i: picks[0].1,
                    j: picks[1].1,
                    k: picks[2].1,
                });
            }
        }
        self.formula(family, picks[0].1, picks[1].1, picks[2].1)
    }

    /// All 64 + 8 triplet entries, S family first, lexicographic indices.
    pub fn all(&self) -> Vec<FormulaEntry> {
        let mut out = Vec::new();
        for family in [TripletFamily::S, TripletFamily::T] {
            let m = family.set_size();
            for i in 1..=m {
                for j in 1..=m {
                    for k in 1..=m {
                        out.push(self.formula(family, i, j, k).expect("index in range"));
                    }
                }
            }
        }
        out
    }
}
