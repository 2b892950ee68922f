//! Formula registry loaded from the text files under `catalog/`.
//!
//! Line format: `id | n | det-expression | adjugate-expression | provenance | status`.
//! Blank lines and lines starting with `#` are ignored.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::triplet::TripletSets;
use super::{FormulaError, FormulaExpr};

const INVERSE_DEFAULTS: &str = include_str!("../../catalog/inverse_defaults.txt");
const N5_FORMS: &str = include_str!("../../catalog/n5_forms.txt");
const N6_FORMS: &str = include_str!("../../catalog/n6_forms.txt");
const N6_TRIPLET_SETS: &str = include_str!("../../catalog/n6_triplet_sets.txt");
const EVEN_FORMS: &str = include_str!("../../catalog/even_forms.txt");

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    Verified,
    Unverified,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Verified => "verified",
            Status::Unverified => "unverified",
        })
    }
}

/// General formulas take any multivector; even formulas take an element of
/// the even subalgebra plus an auxiliary vector `v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EntryKind {
    General,
    Even,
}

#[derive(Clone, Debug, PartialEq)]
pub struct FormulaEntry {
    pub id: String,
    pub dim: usize,
    pub det: FormulaExpr,
    /// `det` with its leading input factor removed; `A^-1 = adjugate / det`.
    pub adjugate: FormulaExpr,
    pub provenance: String,
    pub status: Status,
    pub kind: EntryKind,
}

impl FormulaEntry {
    /// The structural relation `det = A * adjugate`, up to associativity.
    pub fn structure_holds(&self) -> bool {
        self.det.strip_leading_input() == Some(self.adjugate.flatten())
    }

    /// Number of input factors in each determinant term.
    pub fn factor_count(&self) -> usize {
        self.det.degree()
    }

    /// Catalog line for this entry.
    pub fn to_line(&self) -> String {
        format!(
            "{} | {} | {} | {} | {} | {}",
            self.id, self.dim, self.det, self.adjugate, self.provenance, self.status
        )
    }
}

pub(crate) fn parse_fields(line: &str, count: usize) -> Result<Vec<&str>, String> {
    let fields: Vec<&str> = line.split('|').map(str::trim).collect();
    if fields.len() != count {
        return Err(format!("expected {count} '|'-separated fields, found {}", fields.len()));
    }
    Ok(fields)
}

impl FormulaEntry {
    /// Parses one catalog line, checking that the determinant is the input
    /// times the adjugate.
    pub fn parse_line(line: &str, kind: EntryKind) -> Result<FormulaEntry, FormulaError> {
        parse_line(line, kind, 1)
    }
}

fn parse_entries(text: &str, kind: EntryKind) -> Result<Vec<FormulaEntry>, FormulaError> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        out.push(parse_line(line, kind, lineno + 1)?);
    }
    Ok(out)
}

fn parse_line(line: &str, kind: EntryKind, lineno: usize) -> Result<FormulaEntry, FormulaError> {
    let err = |message: String| FormulaError::CatalogSyntax { line: lineno, message };
    let fields = parse_fields(line, 6).map_err(err)?;
    let dim: usize = fields[1]
        .parse()
        .map_err(|_| err(format!("bad dimension '{}'", fields[1])))?;
    let status = match fields[5] {
        "verified" => Status::Verified,
        "unverified" => Status::Unverified,
        other => return Err(err(format!("bad status '{other}'"))),
    };
    let entry = FormulaEntry {
        id: fields[0].to_string(),
        dim,
        det: fields[2].parse()?,
        adjugate: fields[3].parse()?,
        provenance: fields[4].to_string(),
        status,
        kind,
    };
    if !entry.structure_holds() {
        return Err(err(format!("{}: det is not A times the adjugate", entry.id)));
    }
    if entry.det.uses_aux() != (kind == EntryKind::Even) {
        return Err(err(format!(
            "{}: auxiliary vector use does not match entry kind",
            entry.id
        )));
    }
    Ok(entry)
}

/// All formulas, keyed by id, plus the default choice per dimension.
#[derive(Clone, Debug)]
pub struct Catalog {
    entries: BTreeMap<String, FormulaEntry>,
    defaults: BTreeMap<usize, String>,
    even_defaults: BTreeMap<usize, String>,
    triplets: TripletSets,
}

impl Catalog {
    /// The shipped catalog, parsed once.
    pub fn builtin() -> &'static Catalog {
        static CATALOG: OnceLock<Catalog> = OnceLock::new();
        CATALOG.get_or_init(|| Catalog::load_builtin().expect("shipped catalog is well formed"))
    }

    pub fn load_builtin() -> Result<Catalog, FormulaError> {
        let triplets = TripletSets::parse(N6_TRIPLET_SETS)?;
        let mut general = Vec::new();
        for text in [INVERSE_DEFAULTS, N5_FORMS, N6_FORMS] {
            general.extend(parse_entries(text, EntryKind::General)?);
        }
        general.extend(triplets.all());
        let even = parse_entries(EVEN_FORMS, EntryKind::Even)?;

        let mut entries = BTreeMap::new();
        for e in general.into_iter().chain(even) {
            if let Some(dup) = entries.insert(e.id.clone(), e) {
                return Err(FormulaError::CatalogSyntax {
                    line: 0,
                    message: format!("duplicate id {}", dup.id),
                });
            }
        }
        let defaults = [
            (0, "inv-n0"),
            (1, "inv-n1"),
            (2, "inv-n2"),
            (3, "inv-n3"),
            (4, "inv-n4a"),
            (5, "inv-n5"),
            (6, "inv-n6a"),
        ]
        .into_iter()
        .map(|(n, id)| (n, id.to_string()))
        .collect();
        let even_defaults = (2..=6).map(|n| (n, format!("even-n{n}"))).collect();
        Ok(Catalog {
            entries,
            defaults,
            even_defaults,
            triplets,
        })
    }

    pub fn get(&self, id: &str) -> Result<&FormulaEntry, FormulaError> {
        self.entries
            .get(id)
            .ok_or_else(|| FormulaError::UnknownFormula(id.to_string()))
    }

    pub fn default_for(&self, n: usize) -> Result<&FormulaEntry, FormulaError> {
        let id = self.defaults.get(&n).ok_or(FormulaError::NoDefault(n))?;
        self.get(id)
    }

    pub fn even_default_for(&self, n: usize) -> Result<&FormulaEntry, FormulaError> {
        let id = self.even_defaults.get(&n).ok_or(FormulaError::NoDefault(n))?;
        self.get(id)
    }

    /// Named entry, or the default for dimension `n`.
    pub fn resolve(&self, id: Option<&str>, n: usize) -> Result<&FormulaEntry, FormulaError> {
        match id {
            Some(id) => self.get(id),
            None => self.default_for(n),
        }
    }

    pub fn entries(&self) -> impl Iterator<Item = &FormulaEntry> {
        self.entries.values()
    }

    /// General-purpose entries of dimension `n`, ordered by id.
    pub fn general_of_dim(&self, n: usize) -> impl Iterator<Item = &FormulaEntry> {
        self.entries
            .values()
            .filter(move |e| e.dim == n && e.kind == EntryKind::General)
    }

    /// `(id, provenance, status)` for the general entries of dimension `n`.
    pub fn list_formulas(&self, n: usize) -> Vec<(String, String, Status)> {
        self.general_of_dim(n)
            .map(|e| (e.id.clone(), e.provenance.clone(), e.status))
            .collect()
    }

    pub fn triplets(&self) -> &TripletSets {
        &self.triplets
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_loads() {
        let c = Catalog::builtin();
        assert_eq!(c.list_formulas(5).len(), 53);
        assert_eq!(c.list_formulas(6).len(), 94);
        assert_eq!(c.list_formulas(4).len(), 2);
        let n0 = c.list_formulas(0);
        assert_eq!(n0.len(), 1);
        assert_eq!(n0[0].0, "inv-n0");
        assert_eq!(c.general_of_dim(5).filter(|e| e.id.starts_with("n5-")).count(), 52);
        assert_eq!(
            c.general_of_dim(6)
                .filter(|e| e.id.starts_with("n6-t-") || e.id.starts_with("n6-s-"))
                .count(),
            72
        );
        assert_eq!(c.entries().filter(|e| e.kind == EntryKind::Even).count(), 5);
    }

    #[test]
    fn every_entry_has_its_adjugate() {
        for e in Catalog::builtin().entries() {
            assert!(e.structure_holds(), "{}", e.id);
            assert!(e.det.is_homogeneous(), "{}", e.id);
        }
    }

    #[test]
    fn factor_counts() {
        let c = Catalog::builtin();
        let expected = [(0, 1), (1, 2), (2, 2), (3, 4), (4, 4), (5, 8), (6, 8)];
        for (n, m) in expected {
            for e in c.general_of_dim(n) {
                assert_eq!(e.factor_count(), m, "{}", e.id);
            }
        }
    }

    #[test]
    fn listing_is_sorted_and_unknown_ids_fail() {
        let c = Catalog::builtin();
        let ids: Vec<String> = c.list_formulas(6).into_iter().map(|x| x.0).collect();
        let mut sorted = ids.clone();
        sorted.sort();
        assert_eq!(ids, sorted);
        assert!(matches!(c.get("nope"), Err(FormulaError::UnknownFormula(_))));
        assert!(matches!(c.default_for(7), Err(FormulaError::NoDefault(7))));
    }

    #[test]
    fn unbalanced_rows_are_unverified() {
        let c = Catalog::builtin();
        let unverified: Vec<&str> = c
            .entries()
            .filter(|e| e.status == Status::Unverified)
            .map(|e| e.id.as_str())
            .collect();
        assert_eq!(unverified, ["n5-12", "n5-52"]);
    }

    #[test]
    fn line_round_trip() {
        let c = Catalog::builtin();
        let e = c.get("n5-25").unwrap();
        let parsed = parse_entries(&e.to_line(), EntryKind::General).unwrap();
        assert_eq!(&parsed[0], e);
    }

    #[test]
    fn malformed_lines() {
        assert!(parse_entries("x | 1 | A", EntryKind::General).is_err());
        assert!(parse_entries("x | 1 | A | prod() | p | maybe", EntryKind::General).is_err());
        assert!(parse_entries("x | 1 | A | A | p | verified", EntryKind::General).is_err());
        assert!(parse_entries("x | one | A | prod() | p | verified", EntryKind::General).is_err());
        assert!(parse_entries("# comment\n\nx | 0 | A | prod() | p | verified", EntryKind::General).is_ok());
    }
}
