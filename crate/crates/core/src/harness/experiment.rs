// Copyright 2026 The qcevo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Multi-seed experiment driver with CSV and JSON output.

use std::fs::{self, File};
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuit::SolutionMatrix;
use crate::error::{Error, Result};
use crate::evolution::{EAConfig, Engine, GenerationRecord, InitMode, Problem, Variant};
use crate::harness::qasm::export_qasm;

pub const CSV_HEADER: &str =
    "generation,best_fitness,mean_fitness,best_fidelity,best_depth,depth_reduction_pct";

const DEPTH_METRIC: &str =
    "genome column count after compaction; identity gates occupy cells and count towards depth";

#[derive(Clone, Debug)]
pub struct ExperimentSpec {
    pub target: SolutionMatrix,
    /// Mode, variant and compaction flag live here.
    pub config: EAConfig,
    pub seeds: Vec<u64>,
    pub out_dir: PathBuf,
    /// Worker threads; 1 runs everything on the calling thread's pool.
    pub threads: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SeedSummary {
    pub seed: u64,
    pub best_fitness: f64,
    pub best_fidelity: f64,
    pub best_depth: usize,
    pub depth_reduction_pct: f64,
    pub wall_time_s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MeanSummary {
    pub best_fitness: f64,
    pub best_fidelity: f64,
    pub best_depth: f64,
    pub depth_reduction_pct: f64,
    pub wall_time_s: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Summary {
    pub seeds: Vec<u64>,
    pub num_qubits: usize,
    pub target_depth: usize,
    pub mode: InitMode,
    pub variant: Variant,
    pub compaction_enabled: bool,
    pub generations: usize,
    pub depth_metric: String,
    pub per_seed: Vec<SeedSummary>,
    pub mean: MeanSummary,
}

pub fn csv_path(out_dir: &Path, seed: u64) -> PathBuf {
    out_dir.join(format!("seed_{seed}.csv"))
}

pub fn csv_row(r: &GenerationRecord) -> String {
    format!(
        "{},{},{},{},{},{}",
        r.generation, r.best_fitness, r.mean_fitness, r.best_fidelity, r.best_depth, r.depth_reduction_pct
    )
}

/// Parses one data row written by [`csv_row`].
pub fn parse_csv_row(line: &str) -> Option<GenerationRecord> {
    let f: Vec<&str> = line.trim().split(',').collect();
    if f.len() != 6 {
        return None;
    }
    Some(GenerationRecord {
        generation: f[0].parse().ok()?,
        best_fitness: f[1].parse().ok()?,
        mean_fitness: f[2].parse().ok()?,
        best_fidelity: f[3].parse().ok()?,
        best_depth: f[4].parse().ok()?,
        depth_reduction_pct: f[5].parse().ok()?,
    })
}

fn run_seed(engine: &Engine, seed: u64, out_dir: &Path) -> Result<SeedSummary> {
    let started = Instant::now();
    let path = csv_path(out_dir, seed);
    let file = File::create(&path).map_err(|e| Error::io(&path, e))?;
    let mut csv = BufWriter::new(file);
    writeln!(csv, "{CSV_HEADER}").map_err(|e| Error::io(&path, e))?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let outcome = engine.run(&mut rng, |rec| {
        writeln!(csv, "{}", csv_row(rec)).map_err(|e| Error::io(&path, e))
    })?;
    csv.flush().map_err(|e| Error::io(&path, e))?;

    let best = &outcome.best;
    let best_path = out_dir.join(format!("best_seed_{seed}.json"));
    fs::write(&best_path, best.solution().to_json()).map_err(|e| Error::io(&best_path, e))?;
    export_qasm(best.solution(), &out_dir.join(format!("best_seed_{seed}.qasm")))?;

    let last = outcome.records.last().expect("generation 0 is always recorded");
    Ok(SeedSummary {
        seed,
        best_fitness: last.best_fitness,
        best_fidelity: last.best_fidelity,
        best_depth: last.best_depth,
        depth_reduction_pct: last.depth_reduction_pct,
        wall_time_s: started.elapsed().as_secs_f64(),
    })
}

/// Runs every seed against the target, writing `seed_<s>.csv`,
/// `best_seed_<s>.{json,qasm}` and `summary.json` into `out_dir`.
pub fn run_experiment(spec: &ExperimentSpec) -> Result<Summary> {
    if spec.seeds.is_empty() {
        return Err(Error::config("at least one seed is required"));
    }
    let problem = Problem::new(spec.target.clone())?;
    let engine = Engine::new(problem, spec.config.clone())?;
    fs::create_dir_all(&spec.out_dir).map_err(|e| Error::io(&spec.out_dir, e))?;

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(spec.threads.max(1))
        .build()
        .map_err(|e| Error::config(format!("thread pool: {e}")))?;
    let per_seed = pool.install(|| {
        spec.seeds
            .par_iter()
            .map(|&seed| run_seed(&engine, seed, &spec.out_dir))
            .collect::<Result<Vec<_>>>()
    })?;

    let k = per_seed.len() as f64;
    let mean_of = |f: fn(&SeedSummary) -> f64| per_seed.iter().map(f).sum::<f64>() / k;
    let summary = Summary {
        seeds: spec.seeds.clone(),
        num_qubits: spec.target.num_qubits(),
        target_depth: spec.target.depth(),
        mode: spec.config.init_mode,
        variant: spec.config.variant,
        compaction_enabled: spec.config.compacts(),
        generations: spec.config.generations,
        depth_metric: DEPTH_METRIC.to_string(),
        mean: MeanSummary {
            best_fitness: mean_of(|s| s.best_fitness),
            best_fidelity: mean_of(|s| s.best_fidelity),
            best_depth: mean_of(|s| s.best_depth as f64),
            depth_reduction_pct: mean_of(|s| s.depth_reduction_pct),
            wall_time_s: mean_of(|s| s.wall_time_s),
        },
        per_seed,
    };
    let path = spec.out_dir.join("summary.json");
    fs::write(&path, serde_json::to_string_pretty(&summary)?).map_err(|e| Error::io(&path, e))?;
    Ok(summary)
}
