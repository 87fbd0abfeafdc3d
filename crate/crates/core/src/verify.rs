//! The verification grid: coefficient extraction against the symmetrizer
//! oracle, the Grassmannian closed form, Schur positivity, vanishing for tied
//! weights and split-bundle evaluation.

use std::fmt;
use std::time::Instant;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::SparsePoly;
use crate::charclasses::{is_zero_class, same_class, schur_expand, to_chern, CharPoly};
use crate::combinatorics::{weight_grid, FlagType, WeightVector};
use crate::error::{Error, Result};
use crate::gysin::{build_ftilde_weight, dp_segre, grassmannian_segre, grassmannian_source};
use crate::oracle::{oracle_chern, split_eval};

/// A push-forward implementation under test: `(flag, F̃, n) ↦ Segre class`.
pub type Engine = fn(&FlagType, &SparsePoly, u32) -> Result<CharPoly>;

/// The production engine.
pub fn default_engine(flag: &FlagType, ftilde: &SparsePoly, n: u32) -> Result<CharPoly> {
    dp_segre(flag, ftilde, n)
}

/// Runs `f` on a thread pool with the requested number of workers, falling
/// back to `GYSIN_WORKERS` and then to rayon's default.
pub fn with_workers<T: Send>(workers: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    let workers = workers.or_else(|| {
        std::env::var("GYSIN_WORKERS")
            .ok()
            .and_then(|v| v.trim().parse().ok())
    });
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = workers.filter(|&n| n > 0) {
        builder = builder.num_threads(n);
    }
    let pool = builder
        .build()
        .map_err(|e| Error::Contract(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(f))
}

#[derive(Debug, Clone)]
pub struct VerifyConfig {
    pub max_rank: u32,
    pub max_k: u32,
    /// Largest weight entry in the strict and tied weight grids.
    pub max_entry: i64,
    /// Split-bundle checks run for ranks up to this bound.
    pub split_max_rank: u32,
    /// Split bundles use root values `1..=split_max_root`.
    pub split_max_root: i64,
    pub workers: Option<usize>,
    pub engine: Engine,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            max_rank: 3,
            max_k: 2,
            max_entry: 4,
            split_max_rank: 3,
            split_max_root: 4,
            workers: None,
            engine: default_engine,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    Oracle,
    Grassmannian,
    Positivity,
    Vanishing,
    SplitBundle,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Oracle,
        Check::Grassmannian,
        Check::Positivity,
        Check::Vanishing,
        Check::SplitBundle,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Check::Oracle => "oracle",
            Check::Grassmannian => "grassmannian",
            Check::Positivity => "positivity",
            Check::Vanishing => "vanishing",
            Check::SplitBundle => "split-bundle",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    pub flag: String,
    pub weight: String,
    pub k: u32,
    pub detail: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: flag=({}) weight=({}) k={}: {}",
            self.check.name(),
            self.flag,
            self.weight,
            self.k,
            self.detail
        )
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckCount {
    pub check: Check,
    pub cases: usize,
    pub failures: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub counts: Vec<CheckCount>,
    pub failures: Vec<Failure>,
    #[serde(skip)]
    pub seconds: f64,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn cases(&self, check: Check) -> usize {
        self.counts
            .iter()
            .find(|c| c.check == check)
            .map_or(0, |c| c.cases)
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for c in &self.counts {
            out.push_str(&format!(
                "{:<13} {:>6} cases  {} failed\n",
                c.check.name(),
                c.cases,
                c.failures
            ));
        }
        if self.passed() {
            let total: usize = self.counts.iter().map(|c| c.cases).sum();
            out.push_str(&format!("all checks passed ({total} cases)\n"));
        } else {
            for f in &self.failures {
                out.push_str(&format!("FAIL {f}\n"));
            }
        }
        out
    }

    pub fn render_json(&self) -> String {
        #[derive(Serialize)]
        struct Doc<'a> {
            schema: u32,
            passed: bool,
            #[serde(flatten)]
            report: &'a VerifyReport,
        }
        let mut s = serde_json::to_string(&Doc {
            schema: crate::render::SCHEMA,
            passed: self.passed(),
            report: self,
        })
        .expect("plain data serializes");
        s.push('\n');
        s
    }
}

#[derive(Debug, Clone)]
enum Cell {
    /// Strict weight: oracle, positivity and (for small rank) split bundles.
    Strict {
        flag: FlagType,
        weight: WeightVector,
        k: u32,
    },
    /// Tied weight: the push-forward must vanish.
    Tied {
        flag: FlagType,
        weight: WeightVector,
        k: u32,
    },
    /// Grassmannian closed form against extraction.
    Grassmannian { r: u32, d: u32, big_n: u32 },
}

fn cells(config: &VerifyConfig) -> Vec<Cell> {
    let mut out = Vec::new();
    for r in 1..=config.max_rank {
        for flag in FlagType::all_of_rank(r) {
            let (strict, tied) = weight_grid(&flag, config.max_entry);
            for k in 0..=config.max_k {
                for weight in &strict {
                    out.push(Cell::Strict {
                        flag: flag.clone(),
                        weight: weight.clone(),
                        k,
                    });
                }
                for weight in &tied {
                    out.push(Cell::Tied {
                        flag: flag.clone(),
                        weight: weight.clone(),
                        k,
                    });
                }
            }
        }
        for d in 1..r {
            let base = d * (r - d);
            for big_n in base..=base + config.max_k {
                out.push(Cell::Grassmannian { r, d, big_n });
            }
        }
    }
    out
}

fn failure(
    check: Check,
    flag: &FlagType,
    weight: &str,
    k: u32,
    detail: impl Into<String>,
) -> Failure {
    Failure {
        check,
        flag: flag.to_string(),
        weight: weight.to_string(),
        k,
        detail: detail.into(),
    }
}

/// Evaluates one cell, returning the checks it ran and any failures.
fn run_cell(cell: &Cell, config: &VerifyConfig) -> (Vec<Check>, Vec<Failure>) {
    let engine = config.engine;
    let mut ran = Vec::new();
    let mut failed = Vec::new();
    match cell {
        Cell::Strict { flag, weight, k } => {
            let r = flag.rank();
            let w = weight.to_string();
            let n = (*k).max(1);
            let computed = build_ftilde_weight(flag, weight, flag.relative_dim() + k)
                .and_then(|ft| Ok((engine(flag, &ft, n)?, oracle_chern(flag, &ft)?)));
            ran.push(Check::Oracle);
            ran.push(Check::Positivity);
            let split = r <= config.split_max_rank;
            if split {
                ran.push(Check::SplitBundle);
            }
            let (dp, oracle) = match computed {
                Ok(pair) => pair,
                Err(e) => {
                    failed.push(failure(Check::Oracle, flag, &w, *k, e.to_string()));
                    return (ran, failed);
                }
            };
            match same_class(&dp, &oracle, r) {
                Ok(true) => {}
                Ok(false) => failed.push(failure(
                    Check::Oracle,
                    flag,
                    &w,
                    *k,
                    format!("extraction gives {dp}, oracle gives {oracle}"),
                )),
                Err(e) => failed.push(failure(Check::Oracle, flag, &w, *k, e.to_string())),
            }
            match to_chern(&dp, r).and_then(|c| schur_expand(&c, r)) {
                Ok(e) if e.is_positive() => {}
                Ok(e) => failed.push(failure(
                    Check::Positivity,
                    flag,
                    &w,
                    *k,
                    format!("Schur expansion {e} has a negative coefficient"),
                )),
                Err(e) => failed.push(failure(Check::Positivity, flag, &w, *k, e.to_string())),
            }
            if split {
                if let Some(detail) = split_mismatch(&dp, &oracle, r, config.split_max_root) {
                    failed.push(failure(Check::SplitBundle, flag, &w, *k, detail));
                }
            }
        }
        Cell::Tied { flag, weight, k } => {
            ran.push(Check::Vanishing);
            let w = weight.to_string();
            let result = build_ftilde_weight(flag, weight, flag.relative_dim() + k)
                .and_then(|ft| engine(flag, &ft, (*k).max(1)))
                .and_then(|p| Ok((is_zero_class(&p, flag.rank())?, p)));
            match result {
                Ok((true, _)) => {}
                Ok((false, p)) => failed.push(failure(
                    Check::Vanishing,
                    flag,
                    &w,
                    *k,
                    format!("expected 0, got {p}"),
                )),
                Err(e) => failed.push(failure(Check::Vanishing, flag, &w, *k, e.to_string())),
            }
        }
        Cell::Grassmannian { r, d, big_n } => {
            ran.push(Check::Grassmannian);
            let k = big_n - d * (r - d);
            let n = k.max(1);
            let outcome = grassmannian_source(*r, *d).and_then(|(flag, weight)| {
                let ft = build_ftilde_weight(&flag, &weight, *big_n)?;
                let dp = engine(&flag, &ft, n)?;
                let closed = grassmannian_segre(*r, *d, *big_n, n)?;
                Ok((flag, weight, same_class(&dp, &closed, *r)?, dp, closed))
            });
            match outcome {
                Ok((_, _, true, _, _)) => {}
                Ok((flag, weight, false, dp, closed)) => failed.push(failure(
                    Check::Grassmannian,
                    &flag,
                    &weight.to_string(),
                    k,
                    format!("extraction gives {dp}, closed form gives {closed}"),
                )),
                Err(e) => {
                    let flag = FlagType::new(vec![0, r - d, *r]).expect("valid");
                    failed.push(failure(Check::Grassmannian, &flag, "", k, e.to_string()));
                }
            }
        }
    }
    (ran, failed)
}

/// `None` when `dp − oracle` vanishes on every split bundle with roots in
/// `1..=max_root`, otherwise a description of the first nonzero value.
fn split_mismatch(dp: &CharPoly, oracle: &CharPoly, r: u32, max_root: i64) -> Option<String> {
    let diff = match (to_chern(dp, r), to_chern(oracle, r)) {
        (Ok(a), Ok(b)) => a.poly() - b.poly(),
        (Err(e), _) | (_, Err(e)) => return Some(e.to_string()),
    };
    let mut m = vec![1i64; r as usize];
    loop {
        match split_eval(&diff, &m) {
            Ok(v) if v.is_zero() => {}
            Ok(v) => return Some(format!("dp - oracle = {v} on roots {m:?}")),
            Err(e) => return Some(e.to_string()),
        }
        // odometer over {1..max_root}^r
        let mut i = 0;
        loop {
            if i == m.len() {
                return None;
            }
            if m[i] < max_root {
                m[i] += 1;
                break;
            }
            m[i] = 1;
            i += 1;
        }
    }
}

/// Runs the whole grid in parallel; the report lists cells in a fixed order
/// independent of the worker count.
pub fn run_verify(config: &VerifyConfig) -> Result<VerifyReport> {
    let start = Instant::now();
    let cells = cells(config);
    let results: Vec<(Vec<Check>, Vec<Failure>)> = with_workers(config.workers, || {
        cells.par_iter().map(|c| run_cell(c, config)).collect()
    })?;
    let mut counts: Vec<CheckCount> = Check::ALL
        .iter()
        .map(|&check| CheckCount {
            check,
            cases: 0,
            failures: 0,
        })
        .collect();
    let mut failures = Vec::new();
    for (ran, failed) in results {
        for check in ran {
            counts[check as usize].cases += 1;
        }
        for f in failed {
            counts[f.check as usize].failures += 1;
            failures.push(f);
        }
    }
    Ok(VerifyReport {
        counts,
        failures,
        seconds: start.elapsed().as_secs_f64(),
    })
}
