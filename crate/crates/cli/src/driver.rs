//! Resolve a configuration, run the engine, emit one run record.
//!
//! Records are ordered key/value pairs; kv mode prints them as
//! `key=value` lines so runs can be diffed exactly (time_ms is the only
//! nondeterministic field), table mode aligns them for reading.

use std::time::Instant;

use siggb::engine::build_module_order;
use siggb::verify::check_labeled_gb;
use siggb::{
    agc_run, buchberger, is_groebner, reduce_basis, EngineConfig, Field, ModuleOrderKind, Monomial,
    PolyRing, Polynomial, PrimeField, Rationals, RewriteOrderKind, RunStatus, Strategy, TermOrder,
};

use crate::ideal_file::{IdealFile, IntPoly};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum StatsFormat {
    Kv,
    Table,
}

impl StatsFormat {
    pub fn parse(s: &str) -> Option<StatsFormat> {
        match s {
            "kv" => Some(StatsFormat::Kv),
            "table" => Some(StatsFormat::Table),
            _ => None,
        }
    }
}

/// A fully resolved run: file content with all flag overrides applied.
#[derive(Clone, Debug)]
pub struct RunConfig {
    /// Echoed as `input=` (file path or benchmark name).
    pub label: String,
    pub ideal: IdealFile,
    pub module_order: ModuleOrderKind,
    pub rewrite_order: RewriteOrderKind,
    pub strategy: Strategy,
    pub verify: bool,
    pub seed: u64,
    pub max_pairs: u64,
    pub max_degree: u32,
}

/// Exit codes: 0 complete (verified if requested), 1 bad input, 2 capped,
/// 3 verification or engine failure.
#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub record: Vec<(String, String)>,
    pub exit: u8,
    pub error: Option<String>,
}

pub fn int_poly<K: Field>(ring: &PolyRing<K>, p: &IntPoly) -> Polynomial<K> {
    ring.from_terms(
        p.iter()
            .map(|(c, e)| (Monomial::from_exps(e), ring.field().from_i128(*c)))
            .collect(),
    )
}

pub fn ideal_polys<K: Field>(ring: &PolyRing<K>, ideal: &IdealFile) -> Vec<Polynomial<K>> {
    ideal.polys.iter().map(|p| int_poly(ring, p)).collect()
}

pub fn run(cfg: &RunConfig) -> RunOutcome {
    if cfg.ideal.characteristic == 0 {
        run_typed(cfg, Rationals)
    } else {
        match PrimeField::new(cfg.ideal.characteristic) {
            Ok(k) => run_typed(cfg, k),
            Err(e) => RunOutcome {
                record: Vec::new(),
                exit: 1,
                error: Some(format!("bad characteristic: {e}")),
            },
        }
    }
}

fn run_typed<K: Field>(cfg: &RunConfig, field: K) -> RunOutcome {
    let order = TermOrder::new(cfg.ideal.order, cfg.ideal.vars.len());
    let ring = PolyRing::new(field, order);
    let gens = ideal_polys(&ring, &cfg.ideal);
    let engine_cfg = EngineConfig {
        module_order: cfg.module_order,
        rewrite_order: cfg.rewrite_order,
        strategy: cfg.strategy,
        max_pairs: cfg.max_pairs,
        max_degree: cfg.max_degree,
    };
    let mut record = vec![
        ("input".to_string(), cfg.label.clone()),
        ("char".to_string(), cfg.ideal.characteristic.to_string()),
        ("order".to_string(), cfg.ideal.order.name().to_string()),
        (
            "module_order".to_string(),
            cfg.module_order.name().to_string(),
        ),
        (
            "rewrite_order".to_string(),
            cfg.rewrite_order.name().to_string(),
        ),
        ("strategy".to_string(), cfg.strategy.name().to_string()),
        ("seed".to_string(), cfg.seed.to_string()),
        ("max_pairs".to_string(), cfg.max_pairs.to_string()),
        ("max_degree".to_string(), cfg.max_degree.to_string()),
    ];
    let started = Instant::now();
    let report = match agc_run(&ring, &gens, &engine_cfg) {
        Ok(r) => r,
        Err(siggb::engine::EngineError::Input(e)) => {
            return RunOutcome {
                record: Vec::new(),
                exit: 1,
                error: Some(format!("invalid input: {e}")),
            }
        }
        Err(e) => {
            record.push(("outcome".to_string(), "failed".to_string()));
            return RunOutcome {
                record,
                exit: 3,
                error: Some(e.to_string()),
            };
        }
    };
    let time_ms = started.elapsed().as_millis();
    let nonzero: Vec<Polynomial<K>> = report
        .basis
        .members()
        .iter()
        .filter(|m| !m.is_syzygy())
        .map(|m| m.poly().clone())
        .collect();
    let reduced = if report.status == RunStatus::Complete {
        reduce_basis(&ring, &nonzero)
    } else {
        Vec::new()
    };
    record.push(("all_pairs".to_string(), report.all_pairs.to_string()));
    record.push((
        "reduced_pairs".to_string(),
        report.stats.reduced_pairs().to_string(),
    ));
    record.push((
        "nonzero_generators".to_string(),
        report.basis.nonzero_count().to_string(),
    ));
    record.push((
        "syzygy_signatures".to_string(),
        report.basis.syzygy_sigs().len().to_string(),
    ));
    record.push(("reduced_gb_size".to_string(), reduced.len().to_string()));
    record.push(("time_ms".to_string(), time_ms.to_string()));
    match report.status {
        RunStatus::CappedPairs => record.push(("capped_by".to_string(), "pairs".to_string())),
        RunStatus::CappedDegree => record.push(("capped_by".to_string(), "degree".to_string())),
        RunStatus::Complete => {}
    }
    let mut exit = match report.status {
        RunStatus::Complete => 0u8,
        _ => 2u8,
    };
    let mut error = None;
    if cfg.verify && report.status == RunStatus::Complete {
        let mut failures: Vec<String> = Vec::new();
        if !is_groebner(&ring, &nonzero) {
            failures.push("groebner-test".to_string());
        }
        let mord = build_module_order(&ring, &gens, cfg.module_order)
            .expect("inputs validated by the run");
        let samples = check_labeled_gb(&ring, &report.basis, &mord, 1000, cfg.seed);
        if !samples.ok() {
            failures.push(format!("labeled-sampler({})", samples.failures.len()));
        }
        // The criteria-free oracle is only tractable on small systems.
        if ring.nvars() <= 3 && gens.len() <= 4 {
            let oracle = reduce_basis(&ring, &buchberger(&ring, &gens));
            if oracle != reduced {
                failures.push("oracle-mismatch".to_string());
            }
        }
        if failures.is_empty() {
            record.push(("verify".to_string(), "pass".to_string()));
        } else {
            record.push(("verify".to_string(), "fail".to_string()));
            record.push(("verify_detail".to_string(), failures.join(",")));
            error = Some(format!("verification failed: {}", failures.join(", ")));
            exit = 3;
        }
    }
    record.push((
        "outcome".to_string(),
        match report.status {
            RunStatus::Complete => "complete",
            _ => "capped",
        }
        .to_string(),
    ));
    RunOutcome {
        record,
        exit,
        error,
    }
}

pub fn format_record(record: &[(String, String)], format: StatsFormat) -> String {
    match format {
        StatsFormat::Kv => {
            let mut out = String::new();
            for (k, v) in record {
                out.push_str(k);
                out.push('=');
                out.push_str(v);
                out.push('\n');
            }
            out
        }
        StatsFormat::Table => {
            let width = record.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            let mut out = String::new();
            for (k, v) in record {
                out.push_str(&format!("{k:<width$}  {v}\n"));
            }
            out
        }
    }
}
