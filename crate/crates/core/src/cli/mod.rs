//! The `aritylab` command line.
//!
//! Every command produces one JSON document with a stable key order; the
//! table format is rendered from that document. Exit codes: 0 success,
//! 1 usage error, 2 input error, 3 budget exceeded, 4 internal invariant
//! violation.

mod args;
mod report;

use std::ffi::OsString;
use std::path::Path;

use serde::Serialize;

pub use args::{Bounds, Cli, Command, ExpandMode, FamilyKind, Format, GlobalArgs};
pub use report::{render_table, ConfigView, Provenance, Report};

use crate::arity::{
    almost_arity_check, check_arit_hypotheses, is_n_ary_relation, relation_arity, theory_arity_in, ArityReport,
    HypothesisReport, RelationVerdict, WitnessReport,
};
use crate::automorph::Permutation;
use crate::error::{Error, Result};
use crate::expansions::{expand_finite_range, expand_general_algebra, expand_singletons, IdentityRows};
use crate::limits::Limits;
use crate::oracle::{brute_relation_arity, brute_theory_arity, OracleCaps};
use crate::orbits::{OrbitTable, TupleSet};
use crate::structures::{
    classify, gen_family, parse_structure, serialize_structure, ClassReport, Family, FiniteStructure, Signature,
};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INVARIANT: i32 = 4;

pub fn exit_code(err: &Error) -> i32 {
    match err {
        e if e.is_budget() => EXIT_BUDGET,
        Error::InvariantViolation(_) => EXIT_INVARIANT,
        _ => EXIT_INPUT,
    }
}

/// Effective run configuration.
#[derive(Clone, Debug)]
pub struct RunConfig {
    pub limits: Limits,
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    pub oracle: bool,
    pub threads: usize,
    pub timings: bool,
}

/// Rendered output of one command.
#[derive(Debug)]
pub struct Outcome {
    pub text: String,
    pub warnings: Vec<String>,
    pub exit_code: i32,
}

/// Parses arguments, runs the command, prints, and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match <Cli as clap::Parser>::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(outcome) => {
            for w in &outcome.warnings {
                eprintln!("warning: {w}");
            }
            let written = match &cli.global.output {
                Some(path) => std::fs::write(path, &outcome.text).map_err(Error::from),
                None => {
                    print!("{}", outcome.text);
                    Ok(())
                }
            };
            match written {
                Ok(()) => outcome.exit_code,
                Err(e) => {
                    eprintln!("error: {e}");
                    exit_code(&e)
                }
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}

/// Runs a parsed command on a rayon pool of the requested size.
pub fn execute(cli: &Cli) -> Result<Outcome> {
    let mut limits = Limits::from_env()?;
    limits.max_size = cli.global.max_size;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.threads)
        .build()
        .map_err(|e| Error::InvalidParameter(format!("thread pool: {e}")))?;
    pool.install(|| dispatch(cli, limits))
}

fn load(file: &str) -> Result<FiniteStructure> {
    if let Some(name) = file.strip_prefix("corpus:") {
        let found = crate::corpus::get(name).or_else(|| crate::corpus::get(&format!("{name}.struct")));
        return found.unwrap_or_else(|| Err(Error::InvalidParameter(format!("no bundled structure `{name}`"))));
    }
    parse_structure(&std::fs::read_to_string(Path::new(file))?)
}

fn emit<T: Serialize>(report: &Report<T>, format: Format) -> String {
    match format {
        Format::Json => report.to_json(),
        Format::Table => render_table(&serde_json::to_value(report).expect("report serializes")),
    }
}

fn dispatch(cli: &Cli, limits: Limits) -> Result<Outcome> {
    let format = cli.global.format;
    let timings = cli.global.timings;
    match &cli.command {
        Command::Validate { file } => validate(&load(file)?, &limits, format),
        Command::Arity { file, bounds, oracle } => {
            let config = RunConfig {
                limits,
                max_m: bounds.max_m,
                max_n: bounds.max_n,
                oracle: *oracle,
                threads: cli.global.threads,
                timings,
            };
            arity(&load(file)?, &config, format)
        }
        Command::RelArity {
            file,
            graph_of,
            power,
            relation,
            check_hypotheses,
            sol_bound,
            cofinite_slack,
            oracle,
        } => {
            let structure = load(file)?;
            let (description, set) = match (graph_of, relation) {
                (Some(f), _) => match power {
                    Some(n) => (
                        format!("graph of y = x1·…·x{n} under `{f}`"),
                        structure.power_graph_of(f, *n)?,
                    ),
                    None => (format!("graph of `{f}`"), structure.graph_of(f)?),
                },
                (None, Some(r)) => (
                    format!("relation `{r}`"),
                    structure
                        .relation(r)
                        .ok_or_else(|| Error::UnknownSymbol(r.clone()))?
                        .tuples
                        .clone(),
                ),
                (None, None) => unreachable!("clap requires a source"),
            };
            let hypotheses = check_hypotheses.then_some((*sol_bound, *cofinite_slack));
            rel_arity(&structure, description, &set, hypotheses, *oracle, &limits, format)
        }
        Command::Expand {
            file,
            mode,
            include_identity,
            emit: emit_path,
            bounds,
        } => {
            let rows = if *include_identity {
                IdentityRows::Include
            } else {
                IdentityRows::Exclude
            };
            let outcome = expand(&load(file)?, *mode, rows, *bounds, &limits, format)?;
            if let Some(path) = emit_path {
                std::fs::write(path, &outcome.1)?;
            }
            Ok(outcome.0)
        }
        Command::Family { kind, params, sweep } => family(*kind, params, sweep, &limits, format),
    }
}

#[derive(Serialize)]
struct ValidateResult {
    structure: String,
    size: usize,
    signature: Signature,
    classification: Option<ClassReport>,
    warnings: Vec<String>,
}

fn validate(structure: &FiniteStructure, limits: &Limits, format: Format) -> Result<Outcome> {
    let classification = match classify(structure) {
        Ok(c) => Some(c),
        Err(Error::NoBinaryOperation) => None,
        Err(e) => return Err(e),
    };
    let mut warnings = Vec::new();
    match &classification {
        Some(c) if !c.is_associative => warnings.push(format!(
            "operation `{}` is not associative (witness {:?}); analysed as a magma",
            c.operation,
            c.non_associative_witness
                .expect("witness for non-associative operation")
        )),
        None => warnings.push("no binary function symbol: classification skipped".into()),
        _ => {}
    }
    let result = ValidateResult {
        structure: structure.name().to_string(),
        size: structure.size(),
        signature: structure.signature(),
        classification,
        warnings: warnings.clone(),
    };
    let report = Report::new("validate", ConfigView::new(limits, None, None, false), result);
    Ok(Outcome {
        text: emit(&report, format),
        warnings,
        exit_code: EXIT_OK,
    })
}

#[derive(Serialize)]
struct GroupSummary {
    order: u64,
    generators: Vec<Permutation>,
    chain_orders: Vec<usize>,
}

#[derive(Serialize)]
struct ArityResult {
    automorphisms: GroupSummary,
    report: ArityReport,
    oracle: Option<OracleOutcome>,
}

#[derive(Clone, Debug, Serialize)]
struct OracleOutcome {
    status: &'static str,
    value: Option<usize>,
    note: Option<String>,
}

fn resolve_bounds(size: usize, max_m: Option<usize>, max_n: Option<usize>) -> (usize, usize) {
    let m = max_m.unwrap_or(size).max(1);
    (m, max_n.unwrap_or(m).max(1))
}

fn oracle_theory(structure: &FiniteStructure, engine: Option<usize>) -> Result<OracleOutcome> {
    let s = structure.size();
    let caps = OracleCaps {
        max_n: s,
        ..OracleCaps::default()
    };
    if s > caps.max_size {
        return Ok(OracleOutcome {
            status: "skipped",
            value: None,
            note: Some(format!("universe {s} above oracle cap {}", caps.max_size)),
        });
    }
    let value = brute_theory_arity(structure, &caps)?;
    let status = if value == engine { "agrees" } else { "disagrees" };
    Ok(OracleOutcome {
        status,
        value,
        note: None,
    })
}

pub(crate) fn run_theory(
    structure: &FiniteStructure,
    limits: &Limits,
    max_m: usize,
    max_n: usize,
) -> Result<(OrbitTable, ArityReport)> {
    let mut table = OrbitTable::for_structure(structure, *limits)?;
    let report = theory_arity_in(&mut table, max_m, max_n)?;
    Ok((table, report))
}

fn timings_value(report: &ArityReport) -> serde_json::Value {
    serde_json::to_value(&report.timings).expect("timings serialize")
}

fn arity(structure: &FiniteStructure, config: &RunConfig, format: Format) -> Result<Outcome> {
    let (max_m, max_n) = resolve_bounds(structure.size(), config.max_m, config.max_n);
    let (table, report) = run_theory(structure, &config.limits, max_m, max_n)?;
    let oracle = if config.oracle {
        Some(oracle_theory(structure, report.theory_arity.value())?)
    } else {
        None
    };
    let mut provenance = vec![Provenance::engine(
        "theory_arity",
        serde_json::to_value(report.theory_arity).expect("serializes"),
    )];
    if let Some(o) = &oracle {
        provenance.push(Provenance::oracle("theory_arity", o.status));
    }
    let exit_code = match &oracle {
        Some(o) if o.status == "disagrees" => EXIT_INVARIANT,
        _ => EXIT_OK,
    };
    let timings = config.timings.then(|| timings_value(&report));
    let result = ArityResult {
        automorphisms: GroupSummary {
            order: table.aut().order(),
            generators: table.aut().generators().to_vec(),
            chain_orders: table.aut().chain_orders().to_vec(),
        },
        report,
        oracle,
    };
    let mut out = Report::new(
        "arity",
        ConfigView::new(&config.limits, Some(max_m), Some(max_n), config.oracle),
        result,
    );
    out.provenance = provenance;
    out.timings = timings;
    Ok(Outcome {
        text: emit(&out, format),
        warnings: Vec::new(),
        exit_code,
    })
}

#[derive(Serialize)]
struct RelArityResult {
    structure: String,
    relation: String,
    arity: usize,
    members: usize,
    relation_arity: usize,
    levels: Vec<RelationVerdict>,
    oracle: Option<OracleOutcome>,
    hypotheses: Option<HypothesisReport>,
}

fn rel_arity(
    structure: &FiniteStructure,
    description: String,
    set: &TupleSet,
    hypotheses: Option<(usize, usize)>,
    oracle: bool,
    limits: &Limits,
    format: Format,
) -> Result<Outcome> {
    let mut table = OrbitTable::for_structure(structure, *limits)?;
    let value = relation_arity(set, &mut table)?;
    let levels = (0..=set.arity())
        .map(|n| is_n_ary_relation(set, n, &mut table))
        .collect::<Result<Vec<_>>>()?;
    let mut provenance = vec![Provenance::engine("relation_arity", value)];
    let oracle = if oracle {
        let caps = OracleCaps {
            max_n: set.arity(),
            ..OracleCaps::default()
        };
        let outcome = if structure.size() > caps.max_size || set.arity() > caps.max_m {
            OracleOutcome {
                status: "skipped",
                value: None,
                note: Some("outside oracle caps".into()),
            }
        } else {
            let brute = brute_relation_arity(structure, set, &caps)?;
            OracleOutcome {
                status: if brute == value { "agrees" } else { "disagrees" },
                value: Some(brute),
                note: None,
            }
        };
        provenance.push(Provenance::oracle("relation_arity", outcome.status));
        Some(outcome)
    } else {
        None
    };
    let hypotheses = match hypotheses {
        Some((f, c)) => {
            let report = check_arit_hypotheses(set, f, c, limits)?;
            provenance.push(Provenance::engine(
                "hypotheses",
                format!(
                    "bounded_solutions={} cofinite_projections={}",
                    report.bounded_solutions.holds, report.cofinite_projections.holds
                ),
            ));
            Some(report)
        }
        None => None,
    };
    let exit_code = match &oracle {
        Some(o) if o.status == "disagrees" => EXIT_INVARIANT,
        _ => EXIT_OK,
    };
    let result = RelArityResult {
        structure: structure.name().to_string(),
        relation: description,
        arity: set.arity(),
        members: set.len(),
        relation_arity: value,
        levels,
        oracle,
        hypotheses,
    };
    let mut out = Report::new(
        "rel-arity",
        ConfigView::new(limits, None, None, oracle_flag(&result)),
        result,
    );
    out.provenance = provenance;
    Ok(Outcome {
        text: emit(&out, format),
        warnings: Vec::new(),
        exit_code,
    })
}

fn oracle_flag(result: &RelArityResult) -> bool {
    result.oracle.is_some()
}

#[derive(Serialize)]
struct AddedSummary {
    name: String,
    arity: usize,
    members: usize,
}

#[derive(Serialize)]
struct ExpandResult {
    mode: &'static str,
    base: String,
    combined: String,
    added: Vec<AddedSummary>,
    notes: Vec<String>,
    base_theory_arity: ArityReport,
    combined_theory_arity: ArityReport,
    /// Finite-range mode: level-1 signatures plus substitution instances of
    /// the operation's graph, checked on the unexpanded structure.
    almost_unary_with_graph: Option<WitnessReport>,
    expansion_file: String,
}

fn expand(
    structure: &FiniteStructure,
    mode: ExpandMode,
    rows: IdentityRows,
    bounds: Bounds,
    limits: &Limits,
    format: Format,
) -> Result<(Outcome, String)> {
    let (expansion, mode_name) = match mode {
        ExpandMode::Singletons => (expand_singletons(structure)?, "singletons"),
        ExpandMode::FiniteRange => (expand_finite_range(structure, rows)?, "finite-range"),
        ExpandMode::General => (expand_general_algebra(structure)?, "general"),
    };
    let (max_m, max_n) = resolve_bounds(structure.size(), bounds.max_m, bounds.max_n);
    let (mut base_table, base_report) = run_theory(structure, limits, max_m, max_n)?;
    let (_, combined_report) = run_theory(&expansion.combined, limits, max_m, max_n)?;
    let almost = match mode {
        ExpandMode::FiniteRange => {
            let op = structure.operation().ok_or(Error::NoBinaryOperation)?;
            let graph = structure.graph_of(&op.name)?;
            Some(almost_arity_check(&mut base_table, &[graph], 1, max_m.max(3))?)
        }
        _ => None,
    };
    let file = serialize_structure(&expansion.combined);
    let mut provenance = vec![
        Provenance::engine(
            "base_theory_arity",
            serde_json::to_value(base_report.theory_arity).expect("serializes"),
        ),
        Provenance::engine(
            "combined_theory_arity",
            serde_json::to_value(combined_report.theory_arity).expect("serializes"),
        ),
    ];
    if let Some(a) = &almost {
        provenance.push(Provenance::engine("almost_unary_with_graph", a.holds));
    }
    let result = ExpandResult {
        mode: mode_name,
        base: structure.name().to_string(),
        combined: expansion.combined.name().to_string(),
        added: expansion
            .added
            .iter()
            .map(|p| AddedSummary {
                name: p.name.clone(),
                arity: p.arity,
                members: p.tuples.len(),
            })
            .collect(),
        notes: expansion.notes.clone(),
        base_theory_arity: base_report,
        combined_theory_arity: combined_report,
        almost_unary_with_graph: almost,
        expansion_file: file.clone(),
    };
    let mut out = Report::new(
        "expand",
        ConfigView::new(limits, Some(max_m), Some(max_n), false),
        result,
    );
    out.provenance = provenance;
    Ok((
        Outcome {
            text: emit(&out, format),
            warnings: Vec::new(),
            exit_code: EXIT_OK,
        },
        file,
    ))
}

#[derive(Serialize)]
struct FamilyRow {
    parameter: usize,
    structure: String,
    size: usize,
    aut_order: u64,
    theory_arity: crate::arity::TheoryArity,
    exact: bool,
    expanded_theory_arity: Option<crate::arity::TheoryArity>,
}

#[derive(Serialize)]
struct FamilyResult {
    kind: &'static str,
    params: Vec<usize>,
    sweep: [usize; 2],
    rows: Vec<FamilyRow>,
    infinite_limit: &'static str,
}

fn parse_sweep(text: &str) -> Result<(usize, usize)> {
    let bad = || Error::InvalidParameter(format!("sweep `{text}` is not of the form a..b"));
    let (a, b) = text.split_once("..").ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().trim_start_matches('=').parse().map_err(|_| bad())?;
    if a > b {
        return Err(bad());
    }
    Ok((a, b))
}

fn family(kind: FamilyKind, params: &[usize], sweep: &str, limits: &Limits, format: Format) -> Result<Outcome> {
    let (lo, hi) = parse_sweep(sweep)?;
    let param = |i: usize, name: &str| {
        params
            .get(i)
            .copied()
            .ok_or_else(|| Error::InvalidParameter(format!("missing --params value for {name}")))
    };
    let mut rows = Vec::new();
    for p in lo..=hi {
        let fam = match kind {
            FamilyKind::Cyclic => Family::Cyclic(p),
            FamilyKind::FlatMonoid => Family::FlatMonoid(p),
            FamilyKind::DirectProduct => Family::DirectProduct(p, param(0, "b")?),
            FamilyKind::FiniteRange => Family::FiniteRangeMonoid {
                k: p,
                r: param(0, "r")?,
            },
        };
        let structure = gen_family(fam, limits)?;
        let s = structure.size();
        let (_, report) = run_theory(&structure, limits, s, s)?;
        let expanded = match kind {
            FamilyKind::FiniteRange => {
                let e = expand_finite_range(&structure, IdentityRows::Exclude)?;
                Some(run_theory(&e.combined, limits, s, s)?.1.theory_arity)
            }
            _ => None,
        };
        rows.push(FamilyRow {
            parameter: p,
            structure: structure.name().to_string(),
            size: s,
            aut_order: report.aut_order,
            theory_arity: report.theory_arity,
            exact: report.exact,
            expanded_theory_arity: expanded,
        });
    }
    let kind_name = match kind {
        FamilyKind::Cyclic => "cyclic",
        FamilyKind::DirectProduct => "direct-product",
        FamilyKind::FlatMonoid => "flat-monoid",
        FamilyKind::FiniteRange => "finite-range",
    };
    let result = FamilyResult {
        kind: kind_name,
        params: params.to_vec(),
        sweep: [lo, hi],
        rows,
        infinite_limit: "not desk-testable: only finite members are analysed",
    };
    let mut out = Report::new("family", ConfigView::new(limits, None, None, false), result);
    out.provenance = vec![Provenance::engine("theory_arity", "per row")];
    Ok(Outcome {
        text: emit(&out, format),
        warnings: Vec::new(),
        exit_code: EXIT_OK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sweep_syntax() {
        assert_eq!(parse_sweep("2..5").unwrap(), (2, 5));
        assert_eq!(parse_sweep("3..=3").unwrap(), (3, 3));
        assert!(parse_sweep("5..2").is_err());
        assert!(parse_sweep("x").is_err());
    }

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Error::SizeCap { size: 13, cap: 12 }), EXIT_BUDGET);
        assert_eq!(exit_code(&Error::InvariantViolation("x".into())), EXIT_INVARIANT);
        assert_eq!(exit_code(&Error::NoBinaryOperation), EXIT_INPUT);
    }

    #[test]
    fn bounds_default_to_universe() {
        assert_eq!(resolve_bounds(4, None, None), (4, 4));
        assert_eq!(resolve_bounds(4, Some(3), None), (3, 3));
        assert_eq!(resolve_bounds(4, None, Some(2)), (4, 2));
    }
}
