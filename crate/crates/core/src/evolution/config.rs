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

use serde::{Deserialize, Serialize};

use crate::circuit::GateSet;
use crate::error::{Error, Result};
use crate::evolution::mutation::MutationKind;

/// How the initial population (and fresh individuals) are seeded.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InitMode {
    /// Random genomes.
    #[default]
    Scratch,
    /// Copies of the target circuit.
    Target,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Variant {
    /// Crossover, mutation, and periodic angle optimization.
    #[default]
    Hybrid,
    /// Crossover and mutation only.
    #[serde(alias = "ea")]
    EaOnly,
    /// Angle optimization only; children are plain parent copies.
    #[serde(alias = "no-ea-ops")]
    NoEaOps,
    /// Fresh random genomes every generation, kept as-is.
    #[serde(alias = "random")]
    RandomBaseline,
}

impl Variant {
    pub fn optimizes_parameters(self) -> bool {
        matches!(self, Variant::Hybrid | Variant::NoEaOps)
    }
}

/// Every tunable of a run. Field names double as config-file keys.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EAConfig {
    pub population_size: usize,
    pub generations: usize,
    pub crossover_rate: f64,
    pub mutation_rate: f64,
    pub offspring_rate: f64,
    pub replace_rate: f64,
    pub gateset: GateSet,
    /// Objective-evaluation budget per angle optimization.
    pub max_optimizer_iterations: usize,
    /// Fidelity weight.
    pub alpha: f64,
    /// Depth weight.
    pub beta: f64,
    pub param_opt_interval: usize,
    pub param_opt_fraction: f64,
    pub init_mode: InitMode,
    pub variant: Variant,
    pub compaction_enabled: bool,
    pub seed: u64,
    /// Depth range for random genomes; `None` means `[2, d]`.
    pub initial_depth_range: Option<(usize, usize)>,
    /// Relative weights of the eight mutation kinds, in [`MutationKind::ALL`] order.
    pub mutation_weights: Vec<f64>,
    pub optimizer_initial_radius: f64,
    pub optimizer_tolerance: f64,
}

impl Default for EAConfig {
    fn default() -> Self {
        Self {
            population_size: 200,
            generations: 1000,
            crossover_rate: 0.85,
            mutation_rate: 0.85,
            offspring_rate: 0.3,
            replace_rate: 0.3,
            gateset: GateSet::standard(),
            max_optimizer_iterations: 1000,
            alpha: 10.0,
            beta: 1.0,
            param_opt_interval: 25,
            param_opt_fraction: 0.1,
            init_mode: InitMode::Scratch,
            variant: Variant::Hybrid,
            compaction_enabled: true,
            seed: 0,
            initial_depth_range: None,
            mutation_weights: vec![1.0; MutationKind::ALL.len()],
            optimizer_initial_radius: 0.5,
            optimizer_tolerance: 1e-6,
        }
    }
}

impl EAConfig {
    /// Children created per generation.
    pub fn offspring_count(&self) -> usize {
        (self.offspring_rate * self.population_size as f64).round() as usize
    }

    /// Incumbents replaced per generation.
    pub fn replace_count(&self) -> usize {
        (self.replace_rate * self.population_size as f64).round() as usize
    }

    /// Individuals handed to the angle optimizer per invocation.
    pub fn param_opt_count(&self) -> usize {
        let raw = self.param_opt_fraction * self.population_size as f64;
        // 0.1 * 200 must give 20, not 21.
        ((raw - 1e-9).ceil().max(0.0) as usize).min(self.population_size)
    }

    /// Compaction never touches the random baseline.
    pub fn compacts(&self) -> bool {
        self.compaction_enabled && self.variant != Variant::RandomBaseline
    }

    pub fn depth_range(&self, target_depth: usize) -> (usize, usize) {
        self.initial_depth_range.unwrap_or((2, target_depth.max(2)))
    }

    pub fn from_toml(text: &str) -> Result<Self> {
        let cfg: EAConfig = toml::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        let rates = [
            ("crossover_rate", self.crossover_rate),
            ("mutation_rate", self.mutation_rate),
            ("offspring_rate", self.offspring_rate),
            ("replace_rate", self.replace_rate),
            ("param_opt_fraction", self.param_opt_fraction),
        ];
        for (name, r) in rates {
            if !(0.0..=1.0).contains(&r) {
                return Err(Error::config(format!("{name} must lie in [0, 1], got {r}")));
            }
        }
        if self.population_size < 2 {
            return Err(Error::config("population_size must be at least 2"));
        }
        if !(self.alpha > 0.0 && self.beta > 0.0) {
            return Err(Error::config("alpha and beta must be positive"));
        }
        let (m, n) = (self.offspring_count(), self.replace_count());
        if n > m {
            return Err(Error::config(format!(
                "replace count {n} exceeds offspring count {m}"
            )));
        }
        if n >= self.population_size {
            return Err(Error::config(
                "replace count must leave at least one incumbent in the population",
            ));
        }
        if self.param_opt_interval == 0 {
            return Err(Error::config("param_opt_interval must be at least 1"));
        }
        if self.max_optimizer_iterations == 0 {
            return Err(Error::config("max_optimizer_iterations must be at least 1"));
        }
        if !(self.optimizer_initial_radius > 0.0 && self.optimizer_tolerance > 0.0) {
            return Err(Error::config("optimizer radius and tolerance must be positive"));
        }
        if self.mutation_weights.len() != MutationKind::ALL.len()
            || self.mutation_weights.iter().any(|w| !(*w >= 0.0))
            || self.mutation_weights.iter().sum::<f64>() <= 0.0
        {
            return Err(Error::config(
                "mutation_weights needs eight non-negative weights with a positive sum",
            ));
        }
        if let Some((lo, hi)) = self.initial_depth_range {
            if lo == 0 || lo > hi {
                return Err(Error::config(format!("invalid initial_depth_range [{lo}, {hi}]")));
            }
        }
        Ok(())
    }
}
