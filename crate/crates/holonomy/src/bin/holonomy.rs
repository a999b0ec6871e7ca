//! Batch command-line front end: construct catalog entries, analyze algebra
//! files, run the hyperplane-center constructions, classify inputs, and
//! verify the tables.
//!
//! Exit codes: 0 success; 2 invalid construction (condition violated,
//! metadata-only row, hyperplane-coefficient violations); 3 unreadable or
//! invalid input file; 4 table verification found failures.

use clap::{Args, Parser, Subcommand};
use holonomy::classify::{verify, Classifier, FactorMatch, Overall};
use holonomy::io::{self, AlgebraFile};
use holonomy::liecore::{self, LieError, SplitBudget};
use holonomy::prolong;
use holonomy::repkit::catalog::{self, Params};
use holonomy::scalar::Scalar;
use holonomy::type2::{self, RealFactor, Type2Spec};
use serde::Serialize;
use std::collections::BTreeMap;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "holonomy", version, about = "exact models and structure checks for totally reducible linear Lie algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Construct a catalog entry and write it as an algebra file.
    Construct(ConstructArgs),
    /// Run structural checks on an algebra file.
    Check(CheckArgs),
    /// Run the hyperplane-center construction.
    Type2(Type2Args),
    /// Classify an algebra file against the structure theorem.
    Classify(ClassifyArgs),
    /// Verify every enumerable catalog instantiation.
    VerifyTables(VerifyArgs),
    /// Print the machine-readable catalog manifest.
    Catalog(CatalogArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Catalog row id, e.g. I-B:2a
    #[arg(long)]
    entry: String,
    /// Row parameters, repeated: --param p=3 --param q=0
    #[arg(long = "param")]
    params: Vec<String>,
    /// Output file (stdout when omitted)
    #[arg(long)]
    out: Option<PathBuf>,
    /// Name recorded in the file
    #[arg(long)]
    name: Option<String>,
}

#[derive(Args)]
struct CheckArgs {
    /// Input algebra file
    #[arg(long = "in")]
    input: PathBuf,
    /// Comma-separated checks: closure,center,commutant,class,summands,
    /// prolongation,propertyC,berger,complexify (default: all)
    #[arg(long)]
    checks: Option<String>,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Include basis dumps in the report
    #[arg(long)]
    emit_bases: bool,
    /// Add non-authoritative decimal renderings
    #[arg(long)]
    approx: bool,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct Type2Args {
    /// Complex factors: id:key=val:key=val, comma separated (list I-A rows)
    #[arg(long)]
    complex_factors: Option<String>,
    /// Real factors: GL1R or id:key=val..., comma separated (list I-B rows)
    #[arg(long)]
    real_factors: Option<String>,
    /// Complex hyperplane coefficients, comma separated (e.g. 1,-i,3/5+4/5i)
    #[arg(long)]
    lambda: Option<String>,
    /// Real hyperplane coefficients, comma separated
    #[arg(long)]
    mu: Option<String>,
    /// Force the complex construction (default: complex iff no real factors)
    #[arg(long)]
    complex: bool,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long = "in")]
    input: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 12)]
    max_dim: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Report path (stdout when omitted)
    #[arg(long)]
    report: Option<PathBuf>,
    /// Include wall-clock timings (makes reports non-reproducible)
    #[arg(long)]
    emit_timings: bool,
}

#[derive(Args)]
struct CatalogArgs {
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Serialize)]
struct ErrorRecord {
    error: String,
    kind: String,
}

fn emit(out: &Option<PathBuf>, text: String) -> Result<(), io::IoError> {
    match out {
        Some(path) => std::fs::write(path, text).map_err(io::IoError::from),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(kind: &str, error: String, code: u8) -> ExitCode {
    let rec = ErrorRecord {
        error,
        kind: kind.to_string(),
    };
    println!("{}", io::to_canonical_json(&rec).trim_end());
    ExitCode::from(code)
}

fn parse_params(items: &[String]) -> Result<Params, String> {
    let mut p = Params::new();
    for item in items {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| format!("parameter `{item}` is not key=value"))?;
        p = p.with(k.trim(), v.trim());
    }
    Ok(p)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Construct(args) => cmd_construct(args),
        Command::Check(args) => cmd_check(args),
        Command::Type2(args) => cmd_type2(args),
        Command::Classify(args) => cmd_classify(args),
        Command::VerifyTables(args) => cmd_verify(args),
        Command::Catalog(args) => {
            let manifest = io::catalog_manifest();
            match emit(&args.out, io::to_canonical_json(&manifest)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail("io", e.to_string(), 3),
            }
        }
    }
}

fn cmd_construct(args: ConstructArgs) -> ExitCode {
    let params = match parse_params(&args.params) {
        Ok(p) => p,
        Err(e) => return fail("params", e, 2),
    };
    match catalog::construct_entry(&args.entry, &params) {
        Ok(model) => {
            let name = args
                .name
                .unwrap_or_else(|| format!("{}({})", args.entry, params));
            let mut file = AlgebraFile::from_linrep(&name, &model.rep);
            file.metadata.insert("entry".into(), args.entry.clone());
            for (k, v) in params.to_string_pairs() {
                file.metadata.insert(format!("param:{k}"), v);
            }
            if let Some(cd) = model.complex_dim {
                file.metadata.insert("complex_dim".into(), cd.to_string());
            }
            match emit(&args.out, file.to_canonical_json()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail("io", e.to_string(), 3),
            }
        }
        Err(e) => {
            let kind = match &e {
                catalog::CatalogError::MetadataOnly(_) => "metadata-only",
                catalog::CatalogError::ConditionViolated { .. } => "condition-violated",
                catalog::CatalogError::UnknownEntry(_) => "unknown-entry",
                _ => "construction",
            };
            fail(kind, e.to_string(), 2)
        }
    }
}

#[derive(Serialize)]
struct CheckReport {
    schema_version: u32,
    name: String,
    space_dim: usize,
    algebra_dim: usize,
    seed: u64,
    checks: BTreeMap<String, serde_json::Value>,
}

fn cmd_check(args: CheckArgs) -> ExitCode {
    let file = match AlgebraFile::read(&args.input) {
        Ok(f) => f,
        Err(e) => return fail("parse", e.to_string(), 3),
    };
    let rep = match file.to_linrep() {
        Ok(r) => r,
        Err(e) => return fail("parse", e.to_string(), 3),
    };
    let all = [
        "closure",
        "center",
        "commutant",
        "class",
        "summands",
        "prolongation",
        "propertyC",
        "berger",
        "complexify",
    ];
    let wanted: Vec<String> = match &args.checks {
        Some(s) => s.split(',').map(|x| x.trim().to_string()).collect(),
        None => all.iter().map(|s| s.to_string()).collect(),
    };
    for w in &wanted {
        if !all.contains(&w.as_str()) {
            return fail("checks", format!("unknown check `{w}`"), 2);
        }
    }
    let budget = SplitBudget::seeded(args.seed);
    let mut checks: BTreeMap<String, serde_json::Value> = BTreeMap::new();
    for w in &wanted {
        let value = match w.as_str() {
            "closure" => match rep.validate_closure() {
                Ok(()) => serde_json::json!({ "closed": true }),
                Err(e) => serde_json::json!({ "closed": false, "witness": e.to_string() }),
            },
            "center" => {
                let z = liecore::center(&rep);
                serde_json::json!({ "dim": z.dim() })
            }
            "commutant" => {
                let c = liecore::commutant(&rep);
                serde_json::json!({ "dim": c.dim() })
            }
            "class" => {
                let c = liecore::real_class(&rep, args.seed);
                serde_json::json!({ "class": c.to_string() })
            }
            "summands" => match liecore::invariant_summands(&rep, &budget) {
                Ok(s) => {
                    let dims: Vec<usize> = s.iter().map(|x| x.dim()).collect();
                    serde_json::json!({ "count": s.len(), "dims": dims })
                }
                Err(LieError::NotTotallyReducible) => {
                    serde_json::json!({ "error": "not-totally-reducible" })
                }
                Err(e) => serde_json::json!({ "undetermined": e.to_string() }),
            },
            "prolongation" => {
                let p = prolong::first_prolongation(&rep);
                let mut v = serde_json::json!({
                    "dim_h1": p.dim_h1,
                    "dim_c_of_h": p.c_of_h.dim(),
                    "property_c": p.property_c,
                });
                if args.emit_bases {
                    let bases: Vec<Vec<String>> = p
                        .basis
                        .iter()
                        .map(|b| b.coords.iter().map(|c| c.to_string()).collect())
                        .collect();
                    v["basis"] = serde_json::json!(bases);
                }
                v
            }
            "propertyC" => {
                let p = prolong::first_prolongation(&rep);
                serde_json::json!({ "property_c": p.property_c })
            }
            "berger" => {
                let b = prolong::berger_test(&rep);
                serde_json::json!({
                    "dim_K": b.dim_k,
                    "dim_h_K": b.h_k.dim(),
                    "first_criterion": b.first_criterion,
                    "dim_K1": b.dim_k1,
                    "second_criterion": b.second_criterion,
                })
            }
            "complexify" => {
                let c = liecore::complexify_alg(&rep);
                match liecore::decompose_direct_product(&c, &budget) {
                    Ok(f) => serde_json::json!({
                        "dim": c.dim(),
                        "space_dim": c.space_dim(),
                        "factors": f.len(),
                    }),
                    Err(e) => serde_json::json!({
                        "dim": c.dim(),
                        "space_dim": c.space_dim(),
                        "undetermined": e.to_string(),
                    }),
                }
            }
            _ => unreachable!(),
        };
        checks.insert(w.clone(), value);
    }
    let report = CheckReport {
        schema_version: io::SCHEMA_VERSION,
        name: file.name.clone(),
        space_dim: rep.space_dim(),
        algebra_dim: rep.dim(),
        seed: args.seed,
        checks,
    };
    let _ = args.approx;
    match emit(&args.out, io::to_canonical_json(&report)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail("io", e.to_string(), 3),
    }
}

fn parse_factor(spec: &str) -> Result<(String, Params), String> {
    let mut parts = spec.split(':');
    let id = parts.next().ok_or("empty factor")?.trim().to_string();
    let mut params = Params::new();
    for kv in parts {
        let (k, v) = kv
            .split_once('=')
            .ok_or_else(|| format!("factor parameter `{kv}` is not key=value"))?;
        params = params.with(k.trim(), v.trim());
    }
    Ok((id, params))
}

fn parse_scalar_list(s: &str) -> Result<Vec<Scalar>, String> {
    s.split(',')
        .map(|x| Scalar::parse(x.trim()).ok_or_else(|| format!("bad coefficient `{x}`")))
        .collect()
}

fn cmd_type2(args: Type2Args) -> ExitCode {
    let mut spec = Type2Spec::default();
    if let Some(cf) = &args.complex_factors {
        for f in cf.split(',') {
            match parse_factor(f) {
                Ok(pair) => spec.complex_factors.push(pair),
                Err(e) => return fail("spec", e, 2),
            }
        }
    }
    if let Some(rf) = &args.real_factors {
        for f in rf.split(',') {
            let f = f.trim();
            if f.eq_ignore_ascii_case("GL1R") {
                spec.real_factors.push(RealFactor::Gl1R);
            } else {
                match parse_factor(f) {
                    Ok((id, p)) => spec.real_factors.push(RealFactor::Entry(id, p)),
                    Err(e) => return fail("spec", e, 2),
                }
            }
        }
    }
    if let Some(l) = &args.lambda {
        match parse_scalar_list(l) {
            Ok(v) => spec.lambda = v,
            Err(e) => return fail("spec", e, 2),
        }
    }
    if let Some(m) = &args.mu {
        match parse_scalar_list(m) {
            Ok(v) => spec.mu = v,
            Err(e) => return fail("spec", e, 2),
        }
    }
    let use_complex = args.complex || spec.real_factors.is_empty();
    let result = if use_complex {
        type2::complex_construction(&spec)
    } else {
        type2::real_construction(&spec)
    };
    match result {
        Ok(rep) => {
            let name = if use_complex {
                "type2-complex"
            } else {
                "type2-real"
            };
            let file = AlgebraFile::from_linrep(name, &rep);
            match emit(&args.out, file.to_canonical_json()) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => fail("io", e.to_string(), 3),
            }
        }
        Err(e) => {
            let kind = match &e {
                type2::Type2Error::P1Violated(_) => "P1Violated",
                type2::Type2Error::P2Violated(_) => "P2Violated",
                type2::Type2Error::DimensionTooSmall(_) => "DimensionTooSmall",
                _ => "spec",
            };
            fail(kind, e.to_string(), 2)
        }
    }
}

#[derive(Serialize)]
struct FactorReport {
    space_dim: usize,
    algebra_dim: usize,
    center_dim: usize,
    commutant_dim: usize,
    real_class: String,
    summand_dims: Vec<usize>,
    dim_h1: usize,
    killing_signature: (usize, usize),
    #[serde(skip_serializing_if = "Option::is_none")]
    berger_first: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    berger_second: Option<bool>,
    matched: serde_json::Value,
    berger_first_check: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    complexification_consistent: Option<bool>,
    not_a_holonomy: bool,
}

#[derive(Serialize)]
struct ClassifyReport {
    schema_version: u32,
    name: String,
    seed: u64,
    overall: String,
    factors: Vec<FactorReport>,
}

fn cmd_classify(args: ClassifyArgs) -> ExitCode {
    let file = match AlgebraFile::read(&args.input) {
        Ok(f) => f,
        Err(e) => return fail("parse", e.to_string(), 3),
    };
    let rep = match file.to_linrep() {
        Ok(r) => r,
        Err(e) => return fail("parse", e.to_string(), 3),
    };
    if rep.validate_closure().is_err() {
        return fail("input", "algebra is not bracket-closed".to_string(), 2);
    }
    let mut classifier = Classifier::new(args.seed);
    let verdict = classifier.classify(&rep);
    let overall = match verdict.overall {
        Overall::ConsistentWithTheorem => "consistent-with-structure-theorem",
        Overall::ContainsUnmatched => "contains-unmatched",
        Overall::NotTotallyReducible => "not-totally-reducible",
        Overall::Undetermined => "undetermined",
    };
    let factors = verdict
        .factors
        .iter()
        .map(|f| {
            let matched = match &f.matched {
                FactorMatch::Catalog(cands) => serde_json::json!({
                    "kind": "catalog",
                    "candidates": cands
                        .iter()
                        .map(|(id, p)| serde_json::json!({ "id": id, "params": p.0 }))
                        .collect::<Vec<_>>(),
                }),
                FactorMatch::TypeTwo {
                    complex_factors,
                    real_factors,
                    factor_rows,
                    coefficients,
                } => serde_json::json!({
                    "kind": "type-ii-construction",
                    "complex_factors": complex_factors,
                    "real_factors": real_factors,
                    "factor_rows": factor_rows,
                    "coefficients": coefficients,
                }),
                FactorMatch::Gl1RException => serde_json::json!({
                    "kind": "gl(1,R)-exception",
                    "note": "full one-dimensional algebra: not a holonomy",
                }),
                FactorMatch::NullAlgebra => serde_json::json!({
                    "kind": "null-algebra",
                    "note": "zero algebra on a line (symmetric holonomy)",
                }),
                FactorMatch::Unmatched { note } => serde_json::json!({
                    "kind": "unmatched",
                    "note": note,
                }),
            };
            FactorReport {
                space_dim: f.fingerprint.space_dim,
                algebra_dim: f.fingerprint.alg_dim,
                center_dim: f.fingerprint.center_dim,
                commutant_dim: f.fingerprint.commutant_dim,
                real_class: f.fingerprint.real_class.to_string(),
                summand_dims: f.fingerprint.summand_dims.clone(),
                dim_h1: f.fingerprint.dim_h1,
                killing_signature: f.fingerprint.killing_signature,
                berger_first: f.fingerprint.berger_first,
                berger_second: f.fingerprint.berger_second,
                matched,
                berger_first_check: format!("{:?}", f.berger_first),
                complexification_consistent: f.complexification_consistent,
                not_a_holonomy: f.not_a_holonomy,
            }
        })
        .collect();
    let report = ClassifyReport {
        schema_version: io::SCHEMA_VERSION,
        name: file.name.clone(),
        seed: args.seed,
        overall: overall.to_string(),
        factors,
    };
    match emit(&args.out, io::to_canonical_json(&report)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => fail("io", e.to_string(), 3),
    }
}

fn cmd_verify(args: VerifyArgs) -> ExitCode {
    let report = verify::run_with_thread_cap(|| {
        verify::verify_tables(args.max_dim, args.seed, args.emit_timings)
    });
    let failed = report.has_failures();
    match emit(&args.report, io::to_canonical_json(&report)) {
        Ok(()) => {
            if failed {
                ExitCode::from(4)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => fail("io", e.to_string(), 3),
    }
}
