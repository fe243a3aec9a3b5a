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

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use qcevo::harness::{generate_target, load_target, run_experiment, write_target, ExperimentSpec};
use qcevo::{EAConfig, InitMode, Variant};

#[derive(Parser)]
#[command(name = "qcevo", version, about = "Evolve shallow circuits that prepare a target state")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModeArg {
    Scratch,
    Target,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Hybrid,
    Ea,
    NoEaOps,
    Random,
}

#[derive(Subcommand)]
enum Command {
    /// Draw a random compact target circuit and write it to a directory.
    GenerateTarget {
        #[arg(long)]
        qubits: usize,
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        out: PathBuf,
    },
    /// Run the evolutionary search against a generated target.
    Evolve {
        /// Directory written by generate-target.
        #[arg(long)]
        target: PathBuf,
        #[arg(long, value_enum)]
        mode: Option<ModeArg>,
        #[arg(long, value_enum)]
        variant: Option<VariantArg>,
        #[arg(long, value_delimiter = ',', default_value = "0,1,2,3")]
        seeds: Vec<u64>,
        /// TOML file with EAConfig fields; flags take precedence.
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        no_compaction: bool,
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
}

fn run(cli: Cli) -> qcevo::Result<()> {
    match cli.command {
        Command::GenerateTarget {
            qubits,
            depth,
            seed,
            out,
        } => {
            let (circuit, state) = generate_target(qubits, depth, seed)?;
            write_target(&out, &circuit, &state)?;
            println!("wrote {qubits}-qubit depth-{depth} target to {}", out.display());
        }
        Command::Evolve {
            target,
            mode,
            variant,
            seeds,
            config,
            out,
            no_compaction,
            threads,
        } => {
            let mut cfg = match config {
                Some(path) => {
                    let text = std::fs::read_to_string(&path)
                        .map_err(|e| qcevo::Error::Io { path: path.clone(), source: e })?;
                    EAConfig::from_toml(&text)?
                }
                None => EAConfig::default(),
            };
            if let Some(m) = mode {
                cfg.init_mode = match m {
                    ModeArg::Scratch => InitMode::Scratch,
                    ModeArg::Target => InitMode::Target,
                };
            }
            if let Some(v) = variant {
                cfg.variant = match v {
                    VariantArg::Hybrid => Variant::Hybrid,
                    VariantArg::Ea => Variant::EaOnly,
                    VariantArg::NoEaOps => Variant::NoEaOps,
                    VariantArg::Random => Variant::RandomBaseline,
                };
            }
            if no_compaction {
                cfg.compaction_enabled = false;
            }
            let spec = ExperimentSpec {
                target: load_target(&target)?,
                config: cfg,
                seeds,
                out_dir: out,
                threads,
            };
            let summary = run_experiment(&spec)?;
            for s in &summary.per_seed {
                println!(
                    "seed {}: fidelity {:.5}, depth {} ({:.2}% reduction), {:.1}s",
                    s.seed, s.best_fidelity, s.best_depth, s.depth_reduction_pct, s.wall_time_s
                );
            }
            println!(
                "mean: fidelity {:.5}, depth {:.2} ({:.2}% reduction)",
                summary.mean.best_fidelity, summary.mean.best_depth, summary.mean.depth_reduction_pct
            );
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            let mut source = std::error::Error::source(&e);
            while let Some(s) = source {
                eprintln!("  caused by: {s}");
                source = s.source();
            }
            ExitCode::FAILURE
        }
    }
}
