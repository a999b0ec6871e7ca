//! Table verification: construct every enumerable catalog instantiation and
//! check it against the data the lists promise. Entries run in parallel;
//! the report is assembled in sorted order so identical inputs produce
//! byte-identical reports.

use crate::liecore::{self, RealClass, SplitBudget};
use crate::prolong::{self, FirstCriterion};
use crate::repkit::catalog::{self, Params};
use rayon::prelude::*;
use serde::Serialize;
use std::collections::BTreeMap;

#[derive(Clone, Debug, Serialize, PartialEq, Eq)]
#[serde(tag = "status", content = "detail")]
pub enum CheckResult {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail(String),
    #[serde(rename = "skip")]
    Skip(String),
}

#[derive(Clone, Debug, Serialize)]
pub struct EntryReport {
    pub id: String,
    pub params: BTreeMap<String, String>,
    pub realified_dim: usize,
    pub checks: BTreeMap<String, CheckResult>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timings_ms: Option<BTreeMap<String, u64>>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Aggregate {
    pub entries: usize,
    pub passed: usize,
    pub failed: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct TableReport {
    pub schema_version: u32,
    pub max_dim: usize,
    pub seed: u64,
    pub aggregate: Aggregate,
    pub entries: Vec<EntryReport>,
}

impl TableReport {
    pub fn has_failures(&self) -> bool {
        self.aggregate.failed > 0
    }
}

/// Curvature-system budget for the first-criterion check inside the tables.
const TABLE_BERGER_BUDGET: usize = 1400;

/// Runs every check on every modeled instantiation with realified dimension
/// at most `max_dim`. `emit_timings` adds wall-clock fields (excluded by
/// default so reports are reproducible byte for byte).
pub fn verify_tables(max_dim: usize, seed: u64, emit_timings: bool) -> TableReport {
    let mut instances = catalog::enumerate_instances(max_dim);
    instances.sort_by(|a, b| (a.0.as_str(), format!("{}", a.1)).cmp(&(b.0.as_str(), format!("{}", b.1))));
    let reports: Vec<EntryReport> = instances
        .par_iter()
        .map(|(id, params)| verify_one(id, params, seed, emit_timings))
        .collect();
    let mut passed = 0;
    let mut failed = 0;
    let mut skipped = 0;
    for r in &reports {
        for c in r.checks.values() {
            match c {
                CheckResult::Pass => passed += 1,
                CheckResult::Fail(_) => failed += 1,
                CheckResult::Skip(_) => skipped += 1,
            }
        }
    }
    TableReport {
        schema_version: crate::io::SCHEMA_VERSION,
        max_dim,
        seed,
        aggregate: Aggregate {
            entries: reports.len(),
            passed,
            failed,
            skipped,
        },
        entries: reports,
    }
}

fn verify_one(id: &str, params: &Params, seed: u64, emit_timings: bool) -> EntryReport {
    let mut checks: BTreeMap<String, CheckResult> = BTreeMap::new();
    let mut timings: BTreeMap<String, u64> = BTreeMap::new();
    let started = std::time::Instant::now();
    let expected_dim = catalog::realified_dim(id, params).unwrap_or(0);
    let model = match catalog::construct_entry(id, params) {
        Ok(m) => m,
        Err(e) => {
            checks.insert("construct".into(), CheckResult::Fail(e.to_string()));
            return EntryReport {
                id: id.to_string(),
                params: params.0.clone(),
                realified_dim: expected_dim,
                checks,
                timings_ms: emit_timings.then(|| timings.clone()),
            };
        }
    };
    let h = &model.rep;
    let n = h.space_dim();

    // Dimension column.
    checks.insert(
        "dim".into(),
        if n == expected_dim {
            CheckResult::Pass
        } else {
            CheckResult::Fail(format!("constructed {n}, column says {expected_dim}"))
        },
    );
    timings.insert("construct".into(), started.elapsed().as_millis() as u64);

    // Irreducibility / summand count.
    let t = std::time::Instant::now();
    let budget = SplitBudget::seeded(seed);
    match liecore::invariant_summands(h, &budget) {
        Ok(s) => {
            checks.insert(
                "summands".into(),
                if s.len() == model.expected.summands {
                    CheckResult::Pass
                } else {
                    CheckResult::Fail(format!(
                        "{} summands, expected {}",
                        s.len(),
                        model.expected.summands
                    ))
                },
            );
        }
        Err(e) => {
            checks.insert("summands".into(), CheckResult::Fail(e.to_string()));
        }
    }
    timings.insert("summands".into(), t.elapsed().as_millis() as u64);

    // Real/complex class per list part.
    let t = std::time::Instant::now();
    let class = liecore::real_class(h, seed);
    checks.insert(
        "real-class".into(),
        if class == model.expected.real_class {
            CheckResult::Pass
        } else {
            CheckResult::Fail(format!(
                "classified {class}, list part says {}",
                model.expected.real_class
            ))
        },
    );
    timings.insert("real-class".into(), t.elapsed().as_millis() as u64);

    // Prolongation-span property for list I rows.
    let t = std::time::Instant::now();
    let prolongation = if model.expected.property_c.is_some() && n <= 16 {
        let p = prolong::first_prolongation(h);
        checks.insert(
            "property-c".into(),
            if p.property_c && p.dim_h1 > 0 {
                CheckResult::Pass
            } else {
                CheckResult::Fail(format!(
                    "dim h1 = {}, contraction span = {}, center needed",
                    p.dim_h1,
                    p.c_of_h.dim()
                ))
            },
        );
        Some(p)
    } else {
        if model.expected.property_c.is_some() {
            checks.insert(
                "property-c".into(),
                CheckResult::Skip("prolongation beyond size bound".into()),
            );
        }
        None
    };
    timings.insert("property-c".into(), t.elapsed().as_millis() as u64);

    // Complexification behavior (decomposable iff totally complex).
    let t = std::time::Instant::now();
    if n <= 12 {
        let c = liecore::complexify_alg(h);
        match liecore::decompose_direct_product(&c, &budget) {
            Ok(factors) => {
                let decomposable = factors.len() > 1;
                let is_tc = model.expected.real_class == RealClass::TotallyComplex;
                checks.insert(
                    "complexification".into(),
                    if decomposable == is_tc {
                        CheckResult::Pass
                    } else {
                        CheckResult::Fail(format!(
                            "complexification has {} factors, class {}",
                            factors.len(),
                            model.expected.real_class
                        ))
                    },
                );
            }
            Err(e) => {
                checks.insert("complexification".into(), CheckResult::Fail(e.to_string()));
            }
        }
    } else {
        checks.insert(
            "complexification".into(),
            CheckResult::Skip("doubled system beyond size bound".into()),
        );
    }
    timings.insert("complexification".into(), t.elapsed().as_millis() as u64);

    // Berger's first criterion (budgeted; the cheap certificate settles all
    // rows with spanning contractions).
    let t = std::time::Instant::now();
    let fc = prolong::first_criterion_budgeted(h, prolongation.as_ref(), TABLE_BERGER_BUDGET);
    checks.insert(
        "berger-first".into(),
        match fc {
            FirstCriterion::Passed => CheckResult::Pass,
            FirstCriterion::Failed => CheckResult::Fail("curvature values do not span".into()),
            FirstCriterion::Skipped => {
                CheckResult::Skip("curvature system beyond size bound".into())
            }
        },
    );
    timings.insert("berger-first".into(), t.elapsed().as_millis() as u64);

    EntryReport {
        id: id.to_string(),
        params: params.0.clone(),
        realified_dim: expected_dim,
        checks,
        timings_ms: emit_timings.then_some(timings),
    }
}

/// Builds a rayon pool honoring the thread-cap environment variable.
pub fn run_with_thread_cap<T: Send>(f: impl FnOnce() -> T + Send) -> T {
    let cap = std::env::var("HOLONOMY_THREADS")
        .ok()
        .and_then(|v| v.parse::<usize>().ok());
    match cap {
        Some(n) if n > 0 => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(f),
        _ => f(),
    }
}
