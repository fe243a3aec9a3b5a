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

//! Rotation-angle optimization for individuals of a fixed circuit structure.
//!
//! The objective is `1 - F(U(θ), target)` over the angles of every RZ gate.
//! Only angles change; gate kinds, CX wiring and depth stay untouched.

pub mod cobyla;

use rand::seq::index;
use rand::Rng;
use rayon::prelude::*;

use crate::circuit::{Gate, SolutionMatrix};
use crate::error::{Error, Result};
use crate::evolution::{EAConfig, Evaluator, Individual};
use crate::simulator::{fidelity, simulate, Statevector};

pub use cobyla::{Cobyla, Minimum};

/// The RZ angles of a genome, in row-major (qubit, then column) order.
#[derive(Clone, Debug, PartialEq)]
pub struct ParamVector {
    locations: Vec<(usize, usize)>,
    angles: Vec<f64>,
}

impl ParamVector {
    pub fn from_solution(solution: &SolutionMatrix) -> Self {
        let locations = solution.rz_locations();
        let angles = locations
            .iter()
            .map(|&(q, c)| match solution.gate(q, c) {
                Gate::Rz { theta } => theta,
                _ => unreachable!("rz_locations only lists RZ cells"),
            })
            .collect();
        Self { locations, angles }
    }

    pub fn len(&self) -> usize {
        self.angles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.angles.is_empty()
    }

    pub fn angles(&self) -> &[f64] {
        &self.angles
    }

    pub fn locations(&self) -> &[(usize, usize)] {
        &self.locations
    }

    /// Replaces the angle values; they are wrapped when written back.
    pub fn with_angles(&self, angles: Vec<f64>) -> Result<Self> {
        if angles.len() != self.locations.len() {
            return Err(Error::ParamMismatch {
                expected: self.locations.len(),
                got: angles.len(),
            });
        }
        Ok(Self {
            locations: self.locations.clone(),
            angles,
        })
    }

    /// Writes the angles into `solution`, whose RZ cells must sit exactly at
    /// this vector's locations.
    pub fn write_into(&self, solution: &mut SolutionMatrix) -> Result<()> {
        let locations = solution.rz_locations();
        if locations != self.locations {
            return Err(Error::ParamMismatch {
                expected: locations.len(),
                got: self.locations.len(),
            });
        }
        self.write_unchecked(solution);
        Ok(())
    }

    fn write_unchecked(&self, solution: &mut SolutionMatrix) {
        for (&(q, c), &theta) in self.locations.iter().zip(&self.angles) {
            solution.set_angle(q, c, theta);
        }
    }
}

/// `1 - F(U(θ), target)` for `solution` with `params` installed. `solution`
/// itself is not modified.
pub fn objective(solution: &SolutionMatrix, params: &ParamVector, target: &Statevector) -> Result<f64> {
    let mut scratch = solution.clone();
    params.write_into(&mut scratch)?;
    let state = simulate(&scratch)?;
    Ok(1.0 - fidelity(&state, target)?)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct OptimizerSettings {
    /// Objective evaluations beyond the starting point.
    pub max_evaluations: usize,
    pub initial_radius: f64,
    pub tolerance: f64,
}

impl OptimizerSettings {
    pub fn from_config(cfg: &EAConfig) -> Self {
        Self {
            max_evaluations: cfg.max_optimizer_iterations,
            initial_radius: cfg.optimizer_initial_radius,
            tolerance: cfg.optimizer_tolerance,
        }
    }
}

impl Default for OptimizerSettings {
    fn default() -> Self {
        Self::from_config(&EAConfig::default())
    }
}

#[derive(Clone, Debug)]
pub struct Optimized {
    pub individual: Individual,
    pub initial_objective: f64,
    pub objective: f64,
    pub evaluations: usize,
}

/// Tunes the RZ angles of `individual` towards the evaluator's target,
/// starting from its current angles. The returned individual is never less
/// fit than the input.
pub fn optimize(
    individual: &Individual,
    evaluator: &Evaluator,
    settings: &OptimizerSettings,
) -> Result<Optimized> {
    let params = ParamVector::from_solution(individual.solution());
    let initial_objective = 1.0 - individual.fidelity();
    let unchanged = |evaluations| Optimized {
        individual: individual.clone(),
        initial_objective,
        objective: initial_objective,
        evaluations,
    };
    if params.is_empty() {
        return Ok(unchanged(0));
    }

    let target = &evaluator.target_state;
    let mut scratch = individual.solution().clone();
    let mut failure = None;
    let solver = Cobyla {
        initial_radius: settings.initial_radius,
        final_radius: settings.tolerance,
        max_evaluations: settings.max_evaluations,
    };
    let found = solver.minimize(
        |theta| {
            for (&(q, c), &t) in params.locations().iter().zip(theta) {
                scratch.set_angle(q, c, t);
            }
            match simulate(&scratch).and_then(|s| fidelity(&s, target)) {
                Ok(f) => 1.0 - f,
                Err(e) => {
                    failure.get_or_insert(e);
                    f64::INFINITY
                }
            }
        },
        params.angles(),
    );
    if let Some(e) = failure {
        return Err(e);
    }
    if found.value >= initial_objective {
        return Ok(unchanged(found.evaluations));
    }

    let mut solution = individual.solution().clone();
    params.with_angles(found.x)?.write_unchecked(&mut solution);
    let candidate = evaluator.evaluate(solution)?;
    // Wrapping angles into [0, 2π) flips global phases, which can move the
    // fidelity by an ulp; the incumbent wins such ties.
    if candidate.fitness() < individual.fitness() {
        return Ok(unchanged(found.evaluations));
    }
    Ok(Optimized {
        objective: 1.0 - candidate.fidelity(),
        individual: candidate,
        initial_objective,
        evaluations: found.evaluations,
    })
}

/// Optimizes `ceil(param_opt_fraction * population_size)` distinct
/// individuals chosen uniformly at random, in place. Returns the indices
/// touched, in selection order.
pub fn hybrid_hook<R: Rng + ?Sized>(
    population: &mut [Individual],
    evaluator: &Evaluator,
    cfg: &EAConfig,
    rng: &mut R,
) -> Result<Vec<usize>> {
    let count = cfg.param_opt_count().min(population.len());
    let chosen = index::sample(rng, population.len(), count).into_vec();
    let settings = OptimizerSettings::from_config(cfg);
    let improved = chosen
        .par_iter()
        .map(|&i| optimize(&population[i], evaluator, &settings))
        .collect::<Result<Vec<_>>>()?;
    for (&i, opt) in chosen.iter().zip(improved) {
        population[i] = opt.individual;
    }
    Ok(chosen)
}
