//! Command-line front end. [`run`] takes the full argument vector and
//! returns the exit code and the text to print, so it can be tested without
//! spawning a process.

use std::fmt::Write as _;

use clap::{Args, Parser, Subcommand, ValueEnum};
use mvinverse::algebra::rational_to_string;
use mvinverse::formula::{det_norm, even_inverse, inverse, Catalog, FormulaError, Inversion};
use mvinverse::oracle::{oracle_det, oracle_inverse};
use mvinverse::parse::{format_plain, format_scaled, json_value, parse};
use mvinverse::random::Sampler;
use mvinverse::search::{
    format_sign_solutions, grade4_family, rediscover, sign_assignment_sweep, single_product_sweep, SearchConfig,
    SearchError,
};
use mvinverse::{Multivector, Signature};
use num_traits::Zero;
use rayon::prelude::*;
use serde_json::{json, Value};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NON_INVERTIBLE: i32 = 2;
pub const EXIT_USAGE: i32 = 3;
pub const EXIT_UNKNOWN_FORMULA: i32 = 4;
pub const EXIT_CATALOG_DEFECT: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "mvinverse",
    version,
    about = "Exact multivector inverses in Cl(p,q), p + q <= 6"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Clone)]
struct Common {
    /// Signature as p,q
    #[arg(long, value_parser = parse_sig)]
    sig: Option<Signature>,
    /// Catalog formula id; defaults to the formula for the input dimension
    #[arg(long)]
    formula: Option<String>,
    #[arg(long)]
    json: bool,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    #[arg(long, default_value_t = 20)]
    trials: usize,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Inverse, adjugate and determinant norm of a multivector
    Inverse {
        #[command(flatten)]
        common: Common,
        /// Use the even-subalgebra formulas
        #[arg(long)]
        even: bool,
        /// Auxiliary vector for --even
        #[arg(long, requires = "even")]
        aux: Option<String>,
        #[arg(allow_hyphen_values = true)]
        mv: String,
    },
    /// Determinant norm only
    Det {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        mv: String,
    },
    /// Inverse by solving the left-multiplication matrix
    Oracle {
        #[command(flatten)]
        common: Common,
        #[arg(allow_hyphen_values = true)]
        mv: String,
    },
    /// List catalog formulas of one dimension
    Formulas {
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        dim: usize,
    },
    /// Compare formula inverses with the matrix oracle on random inputs
    Check {
        #[command(flatten)]
        common: Common,
        /// Restrict to signatures of this dimension
        #[arg(long)]
        dim: Option<usize>,
        /// Also compare every catalog formula of the dimension
        #[arg(long)]
        all_formulas: bool,
    },
    /// Search for determinant-norm formulas
    Search {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value_t = Mode::Rediscover)]
        mode: Mode,
        #[arg(long, default_value_t = 4)]
        dim: usize,
        /// Restrict sweep inputs to 1, e1256, e1346, e2345
        #[arg(long)]
        grade4_family: bool,
        #[arg(long)]
        max_depth: Option<usize>,
        #[arg(long)]
        max_sets: Option<usize>,
        #[arg(long)]
        screen_samples: Option<usize>,
        #[arg(long)]
        verify_samples: Option<usize>,
        #[arg(long)]
        fit_samples: Option<usize>,
        #[arg(long)]
        serial: bool,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum Mode {
    /// Self-product chains for n <= 4
    Rediscover,
    /// Single products A A_G
    Sweep,
    /// Two-term sign assignments with fitted weights
    Signs,
}

fn parse_sig(text: &str) -> Result<Signature, String> {
    let (p, q) = text.split_once(',').ok_or("expected p,q")?;
    let p: usize = p.trim().parse().map_err(|_| format!("bad p '{p}'"))?;
    let q: usize = q.trim().parse().map_err(|_| format!("bad q '{q}'"))?;
    Signature::new(p, q).map_err(|e| e.to_string())
}

type Output = (i32, String);

fn usage(message: impl std::fmt::Display) -> Output {
    (EXIT_USAGE, format!("error: {message}\n"))
}

fn formula_error(e: &FormulaError) -> Output {
    let code = match e {
        FormulaError::NonInvertible { .. } => EXIT_NON_INVERTIBLE,
        FormulaError::UnknownFormula(_) => EXIT_UNKNOWN_FORMULA,
        FormulaError::CatalogDefect { .. } => EXIT_CATALOG_DEFECT,
        _ => EXIT_USAGE,
    };
    (code, format!("error: {e}\n"))
}

fn require_sig(common: &Common) -> Result<Signature, Output> {
    common.sig.ok_or_else(|| usage("--sig p,q is required"))
}

fn read_mv(common: &Common, text: &str) -> Result<Multivector, Output> {
    let sig = require_sig(common)?;
    parse(sig, text).map_err(|e| usage(format!("cannot parse '{text}': {e}")))
}

/// Parses `argv` (including the program name) and runs the command.
pub fn run<I, S>(argv: I) -> Output
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    let result = match cli.command {
        Command::Inverse { common, even, aux, mv } => cmd_inverse(&common, even, aux.as_deref(), &mv),
        Command::Det { common, mv } => cmd_det(&common, &mv),
        Command::Oracle { common, mv } => cmd_oracle(&common, &mv),
        Command::Formulas { common, dim } => cmd_formulas(&common, dim),
        Command::Check {
            common,
            dim,
            all_formulas,
        } => cmd_check(&common, dim, all_formulas),
        Command::Search {
            common,
            mode,
            dim,
            grade4_family,
            max_depth,
            max_sets,
            screen_samples,
            verify_samples,
            fit_samples,
            serial,
        } => {
            let mut config = SearchConfig {
                seed: common.seed,
                parallel: !serial,
                ..SearchConfig::default()
            };
            let overrides = [
                (max_depth, &mut config.max_depth),
                (max_sets, &mut config.max_sets_per_step),
                (screen_samples, &mut config.screen_samples),
                (verify_samples, &mut config.verify_samples),
                (fit_samples, &mut config.fit_samples),
            ];
            for (value, slot) in overrides {
                if let Some(v) = value {
                    *slot = v;
                }
            }
            cmd_search(&common, mode, dim, grade4_family, &config)
        }
    };
    result.unwrap_or_else(|e| e)
}

fn envelope(mv: &Multivector, det: &mvinverse::Rational, formula: &str) -> Value {
    let mut v = json_value(mv);
    v["det"] = json!(rational_to_string(det));
    v["formula"] = json!(formula);
    v
}

fn show_inversion(common: &Common, inv: &Inversion) -> String {
    if common.json {
        return format!("{}\n", envelope(&inv.inverse, &inv.det, &inv.formula));
    }
    format!(
        "formula: {}\ndet: {}\nadjugate: {}\ninverse: {}\n",
        inv.formula,
        rational_to_string(&inv.det),
        format_plain(&inv.adjugate),
        format_scaled(&inv.inverse, &(mvinverse::Rational::from_integer(1.into()) / &inv.det)),
    )
}

fn cmd_inverse(common: &Common, even: bool, aux: Option<&str>, text: &str) -> Result<Output, Output> {
    let a = read_mv(common, text)?;
    let result = if even {
        if common.formula.is_some() {
            return Err(usage("--formula cannot be combined with --even"));
        }
        let v = aux.map(|t| read_mv(common, t)).transpose()?;
        even_inverse(&a, v.as_ref())
    } else {
        inverse(&a, common.formula.as_deref())
    };
    match result {
        Ok(inv) => Ok((EXIT_OK, show_inversion(common, &inv))),
        Err(FormulaError::NonInvertible { det, formula, .. }) => {
            let text = if common.json {
                format!(
                    "{}\n",
                    json!({"det": rational_to_string(&det), "formula": formula, "invertible": false})
                )
            } else {
                format!(
                    "formula: {formula}\ndet: {}\nnot invertible\n",
                    rational_to_string(&det)
                )
            };
            Ok((EXIT_NON_INVERTIBLE, text))
        }
        Err(e) => Err(formula_error(&e)),
    }
}

fn cmd_det(common: &Common, text: &str) -> Result<Output, Output> {
    let a = read_mv(common, text)?;
    let catalog = Catalog::builtin();
    let entry = catalog
        .resolve(common.formula.as_deref(), a.sig().dim())
        .map_err(|e| formula_error(&e))?;
    let det = det_norm(&a, Some(&entry.id)).map_err(|e| formula_error(&e))?;
    let code = if det.is_zero() { EXIT_NON_INVERTIBLE } else { EXIT_OK };
    let text = if common.json {
        format!("{}\n", json!({"det": rational_to_string(&det), "formula": entry.id}))
    } else {
        format!("{}\n", rational_to_string(&det))
    };
    Ok((code, text))
}

fn cmd_oracle(common: &Common, text: &str) -> Result<Output, Output> {
    let a = read_mv(common, text)?;
    let det = oracle_det(&a);
    let Some(inv) = oracle_inverse(&a) else {
        let text = if common.json {
            format!("{}\n", json!({"det": "0", "formula": "oracle", "invertible": false}))
        } else {
            "matrix det: 0\nnot invertible\n".to_string()
        };
        return Ok((EXIT_NON_INVERTIBLE, text));
    };
    let text = if common.json {
        format!("{}\n", envelope(&inv, &det, "oracle"))
    } else {
        format!(
            "matrix det: {}\ninverse: {}\n",
            rational_to_string(&det),
            format_plain(&inv)
        )
    };
    Ok((EXIT_OK, text))
}

fn cmd_formulas(common: &Common, dim: usize) -> Result<Output, Output> {
    if dim > mvinverse::algebra::MAX_DIM {
        return Err(usage(format!(
            "dimension {dim} is above {}",
            mvinverse::algebra::MAX_DIM
        )));
    }
    let list = Catalog::builtin().list_formulas(dim);
    let text = if common.json {
        let rows: Vec<Value> = list
            .iter()
            .map(|(id, prov, status)| json!({"id": id, "provenance": prov, "status": status.to_string()}))
            .collect();
        format!("{}\n", Value::Array(rows))
    } else {
        let mut out = String::new();
        for (id, prov, status) in &list {
            let _ = writeln!(out, "{id:<14} {status:<10} {prov}");
        }
        out
    };
    Ok((EXIT_OK, text))
}

/// Result of one check trial.
enum Trial {
    Invertible,
    Singular,
    Defect(String),
}

fn check_one(a: &Multivector, formula: Option<&str>, all_formulas: bool) -> Result<Trial, FormulaError> {
    let oracle = oracle_inverse(a);
    let formula_result = inverse(a, formula);
    let trial = match (formula_result, &oracle) {
        (Ok(inv), Some(o)) if &inv.inverse == o => Trial::Invertible,
        (Ok(inv), _) => Trial::Defect(format!("{} disagrees with the oracle on {a}", inv.formula)),
        (Err(FormulaError::NonInvertible { .. }), None) => Trial::Singular,
        (Err(FormulaError::NonInvertible { formula, .. }), Some(_)) => {
            Trial::Defect(format!("{formula} reports a zero norm for invertible {a}"))
        }
        (Err(e), _) => return Err(e),
    };
    if all_formulas && !matches!(trial, Trial::Defect(_)) {
        let catalog = Catalog::builtin();
        let reference = catalog.default_for(a.sig().dim())?.det_norm(a)?;
        for e in catalog.general_of_dim(a.sig().dim()) {
            match e.det_norm(a) {
                Ok(d) if d == reference => {}
                Ok(d) => {
                    return Ok(Trial::Defect(format!(
                        "{} gives {} on {a}",
                        e.id,
                        rational_to_string(&d)
                    )))
                }
                Err(FormulaError::CatalogDefect { formula, grades }) => {
                    return Ok(Trial::Defect(format!("{formula} leaves grades {grades} on {a}")))
                }
                Err(err) => return Err(err),
            }
        }
    }
    Ok(trial)
}

fn cmd_check(common: &Common, dim: Option<usize>, all_formulas: bool) -> Result<Output, Output> {
    let sigs: Vec<Signature> = match (common.sig, dim) {
        (Some(s), _) => vec![s],
        (None, Some(n)) if n <= mvinverse::algebra::MAX_DIM => Signature::all_of_dim(n),
        (None, Some(n)) => return Err(usage(format!("dimension {n} is above {}", mvinverse::algebra::MAX_DIM))),
        (None, None) => Signature::all(),
    };
    if let Some(id) = &common.formula {
        Catalog::builtin().get(id).map_err(|e| formula_error(&e))?;
    }
    let jobs: Vec<(Signature, usize)> = sigs
        .iter()
        .flat_map(|&s| (0..common.trials).map(move |k| (s, k)))
        .collect();
    let results: Vec<Result<Trial, FormulaError>> = jobs
        .par_iter()
        .map(|&(s, k)| {
            let label = ((s.p() as u64) << 8 | s.q() as u64) << 32 | k as u64;
            let a = Sampler::derived(common.seed, label).general(s);
            check_one(&a, common.formula.as_deref(), all_formulas)
        })
        .collect();

    let mut out = String::new();
    let mut defects = Vec::new();
    let mut total_singular = 0;
    for (i, &s) in sigs.iter().enumerate() {
        let chunk = &results[i * common.trials..(i + 1) * common.trials];
        let mut singular = 0;
        let mut bad = 0;
        for r in chunk {
            match r {
                Ok(Trial::Invertible) => {}
                Ok(Trial::Singular) => singular += 1,
                Ok(Trial::Defect(msg)) => {
                    bad += 1;
                    defects.push(format!("{s}: {msg}"));
                }
                Err(e) => return Err(formula_error(e)),
            }
        }
        total_singular += singular;
        let verdict = if bad == 0 { "ok" } else { "FAILED" };
        let _ = writeln!(out, "{s}: {} trials, {singular} singular, {verdict}", common.trials);
    }
    for d in &defects {
        let _ = writeln!(out, "defect {d}");
    }
    let summary = format!(
        "{} trials over {} signatures, {total_singular} singular, {} defects",
        jobs.len(),
        sigs.len(),
        defects.len()
    );
    if common.json {
        out = format!(
            "{}\n",
            json!({"trials": jobs.len(), "signatures": sigs.len(), "singular": total_singular, "defects": defects})
        );
    } else {
        let _ = writeln!(out, "{} {summary}", if defects.is_empty() { "PASS" } else { "FAIL" });
    }
    let code = if defects.is_empty() {
        EXIT_OK
    } else {
        EXIT_CATALOG_DEFECT
    };
    Ok((code, out))
}

fn search_error(e: SearchError) -> Output {
    match e {
        SearchError::Formula(f) => formula_error(&f),
        SearchError::Infeasible(_) => (EXIT_CATALOG_DEFECT, format!("error: {e}\n")),
        other => usage(other),
    }
}

fn cmd_search(common: &Common, mode: Mode, dim: usize, family: bool, config: &SearchConfig) -> Result<Output, Output> {
    let text = match mode {
        Mode::Rediscover => rediscover(dim, config).map_err(search_error)?.to_string(),
        Mode::Sweep => {
            if dim > mvinverse::algebra::MAX_DIM {
                return Err(usage(format!(
                    "dimension {dim} is above {}",
                    mvinverse::algebra::MAX_DIM
                )));
            }
            let blades = grade4_family();
            if family && dim != 6 {
                return Err(usage("--grade4-family needs --dim 6"));
            }
            let restriction = family.then_some(blades.as_slice());
            single_product_sweep(dim, restriction, config)
                .map_err(search_error)?
                .to_string()
        }
        Mode::Signs => {
            let sig = common.sig.unwrap_or(Signature::new(6, 0).expect("valid"));
            if sig.dim() != 6 {
                return Err(usage("sign assignments are defined for dimension 6"));
            }
            let solutions = sign_assignment_sweep(&[sig], config).map_err(search_error)?;
            format_sign_solutions(&solutions)
        }
    };
    Ok((EXIT_OK, text))
}
