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

//! The evolutionary engine.

pub mod config;
pub mod crossover;
mod engine;
pub mod fitness;
pub mod mutation;
pub mod selection;

use crate::circuit::SolutionMatrix;
use crate::error::{Error, Result};
use crate::simulator::{fidelity, simulate, Statevector};

pub use config::{EAConfig, InitMode, Variant};
pub use crossover::{single_point_crossover, uniform_column_crossover};
pub use engine::{Child, ChildOrigin, Engine, GenerationRecord, RunOutcome};
pub use fitness::{fitness, normalized_depth, FitnessBreakdown};
pub use mutation::{mutate, MutationKind};
pub use selection::{select_parents, survivor_replacement_by};

/// The circuit to imitate and the state it prepares.
#[derive(Clone, Debug)]
pub struct Problem {
    target: SolutionMatrix,
    state: Statevector,
}

impl Problem {
    /// The target depth is the column count of `target`, which must be at least 2.
    pub fn new(target: SolutionMatrix) -> Result<Self> {
        target.validate()?;
        if target.depth() < 2 {
            return Err(Error::config(format!(
                "target depth must be at least 2, got {}",
                target.depth()
            )));
        }
        let state = simulate(&target)?;
        Ok(Self { target, state })
    }

    pub fn target(&self) -> &SolutionMatrix {
        &self.target
    }

    pub fn state(&self) -> &Statevector {
        &self.state
    }

    pub fn num_qubits(&self) -> usize {
        self.target.num_qubits()
    }

    pub fn target_depth(&self) -> usize {
        self.target.depth()
    }
}

/// Scores genomes against a target state.
#[derive(Clone, Debug)]
pub struct Evaluator {
    pub target_state: Statevector,
    pub target_depth: usize,
    pub alpha: f64,
    pub beta: f64,
}

impl Evaluator {
    pub fn new(problem: &Problem, cfg: &EAConfig) -> Self {
        Self {
            target_state: problem.state().clone(),
            target_depth: problem.target_depth(),
            alpha: cfg.alpha,
            beta: cfg.beta,
        }
    }

    pub fn evaluate(&self, solution: SolutionMatrix) -> Result<Individual> {
        let state = simulate(&solution)?;
        let f = fidelity(&state, &self.target_state)?;
        let breakdown = fitness(f, solution.depth(), self.target_depth, self.alpha, self.beta)?;
        Ok(Individual {
            solution,
            state,
            fitness: breakdown,
        })
    }
}

/// A genome with its simulated state and score. Built only through
/// [`Evaluator::evaluate`], so the cached values always match the genome.
#[derive(Clone, Debug)]
pub struct Individual {
    solution: SolutionMatrix,
    state: Statevector,
    fitness: FitnessBreakdown,
}

impl Individual {
    pub fn solution(&self) -> &SolutionMatrix {
        &self.solution
    }

    pub fn state(&self) -> &Statevector {
        &self.state
    }

    pub fn fidelity(&self) -> f64 {
        self.fitness.fidelity
    }

    pub fn depth(&self) -> usize {
        self.solution.depth()
    }

    /// Total scalar fitness.
    pub fn fitness(&self) -> f64 {
        self.fitness.total
    }

    pub fn breakdown(&self) -> &FitnessBreakdown {
        &self.fitness
    }

    pub fn into_solution(self) -> SolutionMatrix {
        self.solution
    }
}
