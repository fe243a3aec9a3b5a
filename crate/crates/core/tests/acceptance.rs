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

//! End-to-end acceptance checks. Each criterion prints one PASS or FAIL line;
//! the process exits non-zero if any criterion fails.

use std::f64::consts::TAU;
use std::fs;
use std::path::Path;
use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use proptest::prelude::*;
use proptest::test_runner::{Config as PropConfig, TestRunner};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use qcevo::circuit::{random_solution, GateSet};
use qcevo::compactor::compact;
use qcevo::evolution::crossover::{single_point_crossover, uniform_column_crossover};
use qcevo::evolution::{fitness, mutate, Evaluator, MutationKind};
use qcevo::harness::{generate_target, run_experiment, write_target, ExperimentSpec, Summary};
use qcevo::paramopt::{optimize, OptimizerSettings};
use qcevo::{fidelity, simulate, EAConfig, Engine, Gate, InitMode, Problem, SolutionMatrix, Variant};

/// Seed of the shared 4-qubit depth-20 instance used by criteria 1 to 4.
const INSTANCE_SEED: u64 = 0;
const RUN_SEEDS: [u64; 4] = [0, 1, 2, 3];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: String) -> Outcome {
    Outcome { pass, detail }
}

struct Runs {
    hybrid: Summary,
    ea: Summary,
    no_ea_ops: Summary,
    random: Summary,
    ea_uncompacted: Summary,
    target_hybrid: Summary,
    target_no_ea_ops: Summary,
}

fn experiment(target: &SolutionMatrix, out: &Path, mode: InitMode, variant: Variant, compaction: bool) -> Summary {
    let spec = ExperimentSpec {
        target: target.clone(),
        config: EAConfig {
            init_mode: mode,
            variant,
            compaction_enabled: compaction,
            ..EAConfig::default()
        },
        seeds: RUN_SEEDS.to_vec(),
        out_dir: out.to_path_buf(),
        threads: std::thread::available_parallelism().map_or(1, |n| n.get()),
    };
    let started = Instant::now();
    let summary = run_experiment(&spec).expect("experiment runs");
    println!(
        "  ran {:?}/{:?}{}: fidelity {:.5}, reduction {:.2}%, {:.1}s",
        mode,
        variant,
        if compaction { "" } else { " without compaction" },
        summary.mean.best_fidelity,
        summary.mean.depth_reduction_pct,
        started.elapsed().as_secs_f64()
    );
    summary
}

fn full_scale_runs(dir: &Path) -> Runs {
    let (target, _) = generate_target(4, 20, INSTANCE_SEED).expect("target");
    let run = |name: &str, mode, variant, compaction| experiment(&target, &dir.join(name), mode, variant, compaction);
    Runs {
        hybrid: run("hybrid", InitMode::Scratch, Variant::Hybrid, true),
        ea: run("ea", InitMode::Scratch, Variant::EaOnly, true),
        no_ea_ops: run("no_ea_ops", InitMode::Scratch, Variant::NoEaOps, true),
        random: run("random", InitMode::Scratch, Variant::RandomBaseline, true),
        ea_uncompacted: run("ea_nc", InitMode::Scratch, Variant::EaOnly, false),
        target_hybrid: run("t_hybrid", InitMode::Target, Variant::Hybrid, true),
        target_no_ea_ops: run("t_no_ea_ops", InitMode::Target, Variant::NoEaOps, true),
    }
}

fn slowest_seed(s: &Summary) -> f64 {
    s.per_seed.iter().map(|p| p.wall_time_s).fold(0.0, f64::max)
}

fn criterion_1(r: &Runs) -> Outcome {
    let h = &r.hybrid.mean;
    let e = &r.ea.mean;
    let slowest = slowest_seed(&r.hybrid).max(slowest_seed(&r.ea));
    let pass = h.best_fidelity >= 0.90
        && h.depth_reduction_pct >= 60.0
        && e.depth_reduction_pct >= 60.0
        && slowest <= 600.0;
    outcome(
        pass,
        format!(
            "hybrid fidelity {:.5} (>= 0.90), hybrid reduction {:.2}% (>= 60), ea reduction {:.2}% (>= 60), slowest seed {:.1}s (<= 600)",
            h.best_fidelity, h.depth_reduction_pct, e.depth_reduction_pct, slowest
        ),
    )
}

fn criterion_2(r: &Runs) -> Outcome {
    let none = r.no_ea_ops.mean.depth_reduction_pct;
    let hybrid = r.hybrid.mean.depth_reduction_pct;
    let ea = r.ea.mean.depth_reduction_pct;
    let random = r.random.mean.depth_reduction_pct;
    outcome(
        none < hybrid && none < ea && random < hybrid,
        format!("no_ea_ops {none:.2}% < hybrid {hybrid:.2}% and ea {ea:.2}%; random {random:.2}% < hybrid"),
    )
}

fn criterion_3(r: &Runs) -> Outcome {
    let h = &r.target_hybrid.mean;
    let n = &r.target_no_ea_ops;
    let n_exact = n
        .per_seed
        .iter()
        .all(|s| (s.best_fidelity - 1.0).abs() <= 1e-12 && s.depth_reduction_pct == 0.0);
    outcome(
        h.best_fidelity >= 0.99 && h.depth_reduction_pct >= 20.0 && n_exact,
        format!(
            "target hybrid fidelity {:.6} (>= 0.99), reduction {:.2}% (>= 20); target no_ea_ops fidelity {:.12}, reduction {:.2}% (1 and 0 on every seed: {n_exact})",
            h.best_fidelity, h.depth_reduction_pct, n.mean.best_fidelity, n.mean.depth_reduction_pct
        ),
    )
}

fn criterion_4(r: &Runs) -> Outcome {
    let off = r.ea_uncompacted.mean.depth_reduction_pct;
    let on = r.ea.mean.depth_reduction_pct;
    outcome(off <= on, format!("ea without compaction {off:.2}% <= with compaction {on:.2}%"))
}

fn criterion_5() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let gs = GateSet::standard();
    let mut failures = 0;
    let mut worst = 0.0f64;
    for _ in 0..1000 {
        let n = rng.random_range(1..=6);
        let d = rng.random_range(1..=50);
        let m = random_solution(n, (1, d), &gs, &mut rng).unwrap();
        let c = compact(&m);
        let f = fidelity(&simulate(&m).unwrap(), &simulate(&c).unwrap()).unwrap();
        worst = worst.max((1.0 - f).abs());
        if (1.0 - f).abs() > 1e-9 || c.depth() > m.depth() || compact(&c) != c || c.validate().is_err() {
            failures += 1;
        }
    }
    let elapsed = started.elapsed();
    outcome(
        failures == 0 && elapsed <= Duration::from_secs(30),
        format!(
            "1000 circuits, {failures} failures, worst |1 - F| {worst:.2e} (<= 1e-9), {:.2}s (<= 30)",
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_6() -> Outcome {
    let started = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let gs = GateSet::standard();
    let mut failures = Vec::new();
    let draw = |rng: &mut ChaCha8Rng| {
        let n = rng.random_range(1..=6);
        random_solution(n, (1, 12), &gs, rng).unwrap()
    };
    for kind in MutationKind::ALL {
        let mut bad = 0;
        for _ in 0..10_000 {
            let m = draw(&mut rng);
            bad += usize::from(mutate(&m, kind, &gs, &mut rng).validate().is_err());
        }
        if bad > 0 {
            failures.push(format!("{kind:?}: {bad}"));
        }
    }
    let mut sp_bad = 0;
    let mut uc_bad = 0;
    for _ in 0..10_000 {
        let a = draw(&mut rng);
        let n = a.num_qubits();
        let b = random_solution(n, (1, 12), &gs, &mut rng).unwrap();
        sp_bad += usize::from(single_point_crossover(&a, &b, &mut rng).validate().is_err());
        uc_bad += usize::from(uniform_column_crossover(&a, &b, &mut rng).validate().is_err());
    }
    if sp_bad > 0 {
        failures.push(format!("single point: {sp_bad}"));
    }
    if uc_bad > 0 {
        failures.push(format!("uniform column: {uc_bad}"));
    }
    let elapsed = started.elapsed();
    outcome(
        failures.is_empty() && elapsed <= Duration::from_secs(60),
        format!(
            "8 mutation kinds and 2 crossovers x 10000, invalid: [{}], {:.2}s (<= 60)",
            failures.join(", "),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_7() -> Outcome {
    let mut runner = TestRunner::new(PropConfig {
        cases: 10_000,
        ..PropConfig::default()
    });
    let strategy = (0.0f64..=1.0, 2usize..200, 0.0f64..1.0, 0.01f64..100.0, 0.01f64..100.0).prop_map(
        |(f, d, u, alpha, beta)| {
            let delta = 1 + ((u * d as f64) as usize).min(d - 1);
            (f, delta, d, alpha, beta)
        },
    );
    let prop = runner.run(&strategy, |(f, delta, d, alpha, beta)| {
        let got = fitness(f, delta, d, alpha, beta).unwrap();
        let expected = alpha * f - beta * (delta as f64 - 1.0) / (d as f64 - 1.0);
        prop_assert!((got.total - expected).abs() <= 1e-12, "{got:?} vs {expected}");
        Ok(())
    });
    let spot = fitness(0.98, 4, 20, 10.0, 1.0).unwrap().total;
    let spot_expected = 10.0 * 0.98 - 3.0 / 19.0;
    let spot_ok = (spot - spot_expected).abs() <= 1e-12 && (spot - 9.64211).abs() < 5e-6;
    outcome(
        prop.is_ok() && spot_ok,
        format!(
            "10000 random cases {}; spot value {spot:.6} (expected {spot_expected:.6} ~ 9.64211)",
            match &prop {
                Ok(()) => "agree to 1e-12".to_string(),
                Err(e) => format!("failed: {e}"),
            }
        ),
    )
}

fn criterion_8() -> Outcome {
    let started = Instant::now();
    let mut violations = Vec::new();
    let variants = [Variant::Hybrid, Variant::EaOnly, Variant::NoEaOps, Variant::RandomBaseline];
    for variant in variants {
        for run in 0..100u64 {
            let (target, _) = generate_target(3, 8, 1000 + run).unwrap();
            let cfg = EAConfig {
                population_size: 20,
                generations: 50,
                variant,
                max_optimizer_iterations: 100,
                param_opt_interval: 10,
                ..EAConfig::default()
            };
            let engine = Engine::new(Problem::new(target).unwrap(), cfg).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(run);
            let outcome = engine.run(&mut rng, |_| Ok(())).unwrap();
            let mut best_so_far = f64::NEG_INFINITY;
            let monotone = outcome.records.windows(2).all(|w| w[1].best_fitness >= w[0].best_fitness);
            let tracker_monotone = outcome.records.iter().all(|r| {
                let ok = r.best_fitness >= best_so_far;
                best_so_far = best_so_far.max(r.best_fitness);
                ok
            });
            if !(monotone && tracker_monotone) {
                violations.push(format!("{variant:?}#{run}"));
            }
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "4 variants x 100 runs (pop 20, 50 generations), non-monotone runs: [{}], {:.1}s",
            violations.join(", "),
            started.elapsed().as_secs_f64()
        ),
    )
}

fn criterion_9() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let settings = OptimizerSettings {
        max_evaluations: 200,
        ..OptimizerSettings::default()
    };
    let scaffold = |theta: f64| {
        SolutionMatrix::from_columns(1, vec![vec![Gate::Sx], vec![Gate::rz(theta)], vec![Gate::Sx]]).unwrap()
    };
    let mut successes = 0;
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let planted = rng.random_range(0.0..TAU);
        let start = rng.random_range(0.0..TAU);
        let evaluator = Evaluator {
            target_state: simulate(&scaffold(planted)).unwrap(),
            target_depth: 3,
            alpha: 10.0,
            beta: 1.0,
        };
        let ind = evaluator.evaluate(scaffold(start)).unwrap();
        let out = optimize(&ind, &evaluator, &settings).unwrap();
        // Independent recomputation of the objective from the returned genome.
        let obj = 1.0 - fidelity(&simulate(out.individual.solution()).unwrap(), &evaluator.target_state).unwrap();
        worst = worst.max(obj);
        if obj < 1e-4 && out.evaluations <= 200 {
            successes += 1;
        }
    }
    outcome(
        successes >= 19,
        format!("{successes}/20 starts reach objective < 1e-4 within 200 evaluations (>= 19); worst {worst:.2e}"),
    )
}

fn criterion_10(dir: &Path) -> Outcome {
    let (target, state) = generate_target(3, 10, 10).unwrap();
    let target_dir = dir.join("target");
    write_target(&target_dir, &target, &state).unwrap();
    let config = dir.join("small.toml");
    fs::write(&config, "population_size = 30\ngenerations = 60\nparam_opt_interval = 10\n").unwrap();
    let run = |name: &str| {
        let out = dir.join(name);
        let status = Command::new(env!("CARGO_BIN_EXE_qcevo"))
            .args(["evolve", "--variant", "hybrid", "--seeds", "0,1", "--threads", "1"])
            .arg("--target")
            .arg(&target_dir)
            .arg("--config")
            .arg(&config)
            .arg("--out")
            .arg(&out)
            .output()
            .expect("binary runs");
        assert!(status.status.success(), "{}", String::from_utf8_lossy(&status.stderr));
        [0, 1].map(|s| fs::read(out.join(format!("seed_{s}.csv"))).unwrap())
    };
    let a = run("a");
    let b = run("b");
    let identical = a == b;
    outcome(
        identical,
        format!("two single-threaded CLI runs, seeds 0 and 1: CSVs byte-identical = {identical} ({} and {} bytes)", a[0].len(), a[1].len()),
    )
}

fn main() -> ExitCode {
    let dir = tempfile::tempdir().expect("tempdir");
    println!("running full-scale experiments on the 4-qubit depth-20 instance (target seed {INSTANCE_SEED})");
    let runs = full_scale_runs(dir.path());
    let results = [
        ("compaction-enabled scratch reproduction", criterion_1(&runs)),
        ("ablation ordering", criterion_2(&runs)),
        ("target-init mode", criterion_3(&runs)),
        ("compaction ablation", criterion_4(&runs)),
        ("compaction soundness", criterion_5()),
        ("operator validity", criterion_6()),
        ("fitness arithmetic", criterion_7()),
        ("elitist monotonicity", criterion_8()),
        ("optimizer recovery", criterion_9()),
        ("determinism", criterion_10(dir.path())),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        println!("criterion {:>2} {}: {name}: {}", i + 1, if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", results.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
