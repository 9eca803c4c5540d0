//! Exhaustive verification over every normalized spec within bounds.

use std::io::Write;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde_json::{json, Value};

use crate::error::{invalid, Error, Result};
use crate::ideal::VariableUniverse;
use crate::mixed::{MixedProductSpec, Summand};
use crate::report::{classify, ClassificationReport, ClassifyOptions, Mismatch, OracleLevel};
use crate::Caps;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_n: usize,
    pub max_m: usize,
    pub max_s: usize,
    pub oracle: OracleLevel,
    /// Worker threads; `0` lets the pool decide.
    pub workers: usize,
    pub caps: Caps,
    pub perturb: bool,
}

impl Default for SweepConfig {
    fn default() -> Self {
        SweepConfig {
            max_n: 4,
            max_m: 4,
            max_s: 3,
            oracle: OracleLevel::Full,
            workers: 0,
            caps: Caps::default(),
            perturb: false,
        }
    }
}

impl SweepConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_n == 0 || self.max_m == 0 || self.max_s == 0 {
            return Err(invalid("sweep bounds must be at least 1"));
        }
        Ok(())
    }
}

/// What happened to one spec.
#[derive(Debug, Clone)]
pub enum SpecStatus {
    Checked {
        report: Box<ClassificationReport>,
        mismatches: Vec<Mismatch>,
    },
    /// An enumeration cap was hit; the spec is counted but not judged.
    Skipped {
        spec: MixedProductSpec,
        reason: String,
    },
}

#[derive(Debug, Clone)]
pub struct SpecOutcome {
    pub index: usize,
    pub status: SpecStatus,
}

impl SpecOutcome {
    pub fn spec(&self) -> &MixedProductSpec {
        match &self.status {
            SpecStatus::Checked { report, .. } => &report.spec,
            SpecStatus::Skipped { spec, .. } => spec,
        }
    }

    pub fn mismatches(&self) -> &[Mismatch] {
        match &self.status {
            SpecStatus::Checked { mismatches, .. } => mismatches,
            SpecStatus::Skipped { .. } => &[],
        }
    }

    /// One JSON-lines record.
    pub fn to_json(&self) -> Value {
        match &self.status {
            SpecStatus::Checked { report, mismatches } => json!({
                "index": self.index,
                "status": if mismatches.is_empty() { "ok" } else { "mismatch" },
                "report": report.to_json(),
                "mismatches": mismatches.iter().map(mismatch_json).collect::<Vec<_>>(),
            }),
            SpecStatus::Skipped { spec, reason } => json!({
                "index": self.index,
                "status": "skipped",
                "spec": {
                    "n": spec.n(),
                    "m": spec.m(),
                    "pairs": spec.summands().iter().map(|s| [s.q, s.r]).collect::<Vec<_>>(),
                },
                "reason": reason,
            }),
        }
    }
}

fn mismatch_json(m: &Mismatch) -> Value {
    json!({
        "field": m.field,
        "closed_form": m.closed_form,
        "oracle": m.oracle,
        "witness": m.witness,
    })
}

#[derive(Debug, Clone)]
pub struct SweepResult {
    pub configs_checked: usize,
    pub skipped: usize,
    /// `(spec, mismatch)` pairs in enumeration order.
    pub mismatches: Vec<(MixedProductSpec, Mismatch)>,
    pub outcomes: Vec<SpecOutcome>,
    pub elapsed: Duration,
}

impl SweepResult {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
    }

    pub fn write_json_lines<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        for o in &self.outcomes {
            writeln!(out, "{}", o.to_json())?;
        }
        Ok(())
    }

    pub fn summary_json(&self) -> Value {
        json!({
            "configs_checked": self.configs_checked,
            "skipped": self.skipped,
            "mismatches": self.mismatches.len(),
            "elapsed_ms": self.elapsed.as_millis() as u64,
        })
    }
}

/// All normalized specs with `n ≤ max_n`, `m ≤ max_m`, `s ≤ max_s`, ordered by
/// `(n, m, s, pairs)` lexicographically.
pub fn enumerate_specs(max_n: usize, max_m: usize, max_s: usize) -> Vec<MixedProductSpec> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        for m in 0..=max_m {
            let Ok(universe) = VariableUniverse::new(n, m) else {
                continue;
            };
            for s in 1..=max_s {
                let mut current = Vec::with_capacity(s);
                chains(universe, s, &mut current, &mut out);
            }
        }
    }
    out
}

/// Pair lists with strictly increasing `q` and strictly decreasing `r`.
fn chains(
    universe: VariableUniverse,
    s: usize,
    current: &mut Vec<Summand>,
    out: &mut Vec<MixedProductSpec>,
) {
    if current.len() == s {
        let spec = MixedProductSpec::new(universe, current).expect("chains are proper");
        debug_assert_eq!(spec.summands(), current.as_slice());
        out.push(spec);
        return;
    }
    let (q_lo, r_hi) = match current.last() {
        Some(last) => {
            if last.r == 0 {
                return;
            }
            (last.q + 1, last.r - 1)
        }
        None => (0, universe.m()),
    };
    for q in q_lo..=universe.n() {
        for r in 0..=r_hi {
            if q == 0 && r == 0 {
                continue;
            }
            current.push(Summand::new(q, r));
            chains(universe, s, current, out);
            current.pop();
        }
    }
}

pub fn run_sweep(config: &SweepConfig) -> Result<SweepResult> {
    config.validate()?;
    let start = Instant::now();
    let specs = enumerate_specs(config.max_n, config.max_m, config.max_s);
    let options = ClassifyOptions {
        oracle: config.oracle,
        caps: config.caps,
        perturb: config.perturb,
        timing: false,
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| invalid(format!("cannot start worker pool: {e}")))?;
    let results: Vec<Result<SpecOutcome>> = pool.install(|| {
        specs
            .par_iter()
            .enumerate()
            .map(|(index, spec)| check_one(index, spec, &options))
            .collect()
    });
    let outcomes = results.into_iter().collect::<Result<Vec<_>>>()?;

    let mut mismatches = Vec::new();
    let mut skipped = 0;
    for o in &outcomes {
        match &o.status {
            SpecStatus::Skipped { .. } => skipped += 1,
            SpecStatus::Checked {
                report,
                mismatches: ms,
            } => {
                mismatches.extend(ms.iter().map(|m| (report.spec.clone(), m.clone())));
            }
        }
    }
    Ok(SweepResult {
        configs_checked: outcomes.len(),
        skipped,
        mismatches,
        outcomes,
        elapsed: start.elapsed(),
    })
}

fn check_one(
    index: usize,
    spec: &MixedProductSpec,
    options: &ClassifyOptions,
) -> Result<SpecOutcome> {
    let status = match classify(spec, options) {
        Ok(report) => {
            let mismatches = report.mismatches();
            SpecStatus::Checked {
                report: Box::new(report),
                mismatches,
            }
        }
        Err(e @ Error::Resource { .. }) => SpecStatus::Skipped {
            spec: spec.clone(),
            reason: e.to_string(),
        },
        Err(e) => return Err(e),
    };
    Ok(SpecOutcome { index, status })
}
