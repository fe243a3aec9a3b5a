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

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;
use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::circuit::{random_solution, SolutionMatrix};
use crate::compactor::compact;
use crate::error::{Error, Result};
use crate::paramopt;

use super::config::{EAConfig, InitMode, Variant};
use super::crossover::{single_point_crossover, uniform_column_crossover};
use super::mutation::{mutate, MutationKind};
use super::selection::{select_parents, survivor_replacement_by};
use super::{Evaluator, Individual, Problem};

/// Metrics of one generation. Field order is the CSV column order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct GenerationRecord {
    pub generation: usize,
    pub best_fitness: f64,
    pub mean_fitness: f64,
    pub best_fidelity: f64,
    pub best_depth: usize,
    pub depth_reduction_pct: f64,
}

/// Where a child's genome came from before mutation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChildOrigin {
    SinglePoint,
    Uniform,
    /// A fresh genome (random, or the target circuit in target mode).
    Fresh,
    /// A copy of one parent.
    Clone,
}

#[derive(Clone, Debug)]
pub struct Child<T = Individual> {
    pub value: T,
    pub origin: ChildOrigin,
    pub mutation: Option<MutationKind>,
}

#[derive(Clone, Debug)]
pub struct RunOutcome {
    pub records: Vec<GenerationRecord>,
    pub population: Vec<Individual>,
    pub best: Individual,
}

/// One configured search against one target.
pub struct Engine {
    problem: Problem,
    cfg: EAConfig,
    evaluator: Evaluator,
    mutation_dist: WeightedIndex<f64>,
}

impl Engine {
    pub fn new(problem: Problem, cfg: EAConfig) -> Result<Self> {
        cfg.validate()?;
        let mutation_dist = WeightedIndex::new(&cfg.mutation_weights)
            .map_err(|e| Error::config(format!("mutation_weights: {e}")))?;
        let evaluator = Evaluator::new(&problem, &cfg);
        Ok(Self {
            problem,
            cfg,
            evaluator,
            mutation_dist,
        })
    }

    pub fn config(&self) -> &EAConfig {
        &self.cfg
    }

    pub fn problem(&self) -> &Problem {
        &self.problem
    }

    pub fn evaluator(&self) -> &Evaluator {
        &self.evaluator
    }

    pub fn evaluate(&self, solution: SolutionMatrix) -> Result<Individual> {
        self.evaluator.evaluate(solution)
    }

    fn evaluate_all(&self, genomes: Vec<SolutionMatrix>) -> Result<Vec<Individual>> {
        genomes.into_par_iter().map(|g| self.evaluate(g)).collect()
    }

    fn random_genome<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<SolutionMatrix> {
        random_solution(
            self.problem.num_qubits(),
            self.cfg.depth_range(self.problem.target_depth()),
            &self.cfg.gateset,
            rng,
        )
    }

    /// A genome for a newcomer that is not bred from parents.
    fn fresh_genome<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<SolutionMatrix> {
        match self.cfg.init_mode {
            InitMode::Scratch => self.random_genome(rng),
            InitMode::Target => Ok(self.problem.target().clone()),
        }
    }

    fn finish(&self, genome: SolutionMatrix) -> SolutionMatrix {
        if self.cfg.compacts() {
            compact(&genome)
        } else {
            genome
        }
    }

    pub fn random_mutation<R: Rng + ?Sized>(&self, rng: &mut R) -> MutationKind {
        MutationKind::ALL[self.mutation_dist.sample(rng)]
    }

    /// Breeds a child genome without scoring it.
    pub fn make_child_genome<R: Rng + ?Sized>(
        &self,
        p1: &SolutionMatrix,
        p2: &SolutionMatrix,
        rng: &mut R,
    ) -> Result<Child<SolutionMatrix>> {
        let (genome, origin) = if rng.random_bool(self.cfg.crossover_rate) {
            if rng.random_bool(0.5) {
                (single_point_crossover(p1, p2, rng), ChildOrigin::SinglePoint)
            } else {
                (uniform_column_crossover(p1, p2, rng), ChildOrigin::Uniform)
            }
        } else if rng.random_bool(0.5) {
            (self.fresh_genome(rng)?, ChildOrigin::Fresh)
        } else {
            let parent = if rng.random_bool(0.5) { p1 } else { p2 };
            (parent.clone(), ChildOrigin::Clone)
        };
        let (genome, mutation) = if rng.random_bool(self.cfg.mutation_rate) {
            let kind = self.random_mutation(rng);
            (mutate(&genome, kind, &self.cfg.gateset, rng), Some(kind))
        } else {
            (genome, None)
        };
        Ok(Child {
            value: self.finish(genome),
            origin,
            mutation,
        })
    }

    /// Crossover or fresh/clone creation, optional mutation, compaction, scoring.
    pub fn make_child<R: Rng + ?Sized>(
        &self,
        p1: &Individual,
        p2: &Individual,
        rng: &mut R,
    ) -> Result<Child> {
        let child = self.make_child_genome(p1.solution(), p2.solution(), rng)?;
        Ok(Child {
            value: self.evaluate(child.value)?,
            origin: child.origin,
            mutation: child.mutation,
        })
    }

    pub fn initial_population<R: Rng + ?Sized>(&self, rng: &mut R) -> Result<Vec<Individual>> {
        let genomes = (0..self.cfg.population_size)
            .map(|_| self.fresh_genome(rng).map(|g| self.finish(g)))
            .collect::<Result<Vec<_>>>()?;
        self.evaluate_all(genomes)
    }

    fn child_genomes<R: Rng + ?Sized>(
        &self,
        population: &[Individual],
        rng: &mut R,
    ) -> Result<Vec<SolutionMatrix>> {
        (0..self.cfg.offspring_count())
            .map(|_| match self.cfg.variant {
                Variant::Hybrid | Variant::EaOnly => {
                    let (a, b) = select_parents(population.len(), rng);
                    self.make_child_genome(population[a].solution(), population[b].solution(), rng)
                        .map(|c| c.value)
                }
                Variant::NoEaOps => {
                    let (a, _) = select_parents(population.len(), rng);
                    Ok(self.finish(population[a].solution().clone()))
                }
                Variant::RandomBaseline => self.random_genome(rng),
            })
            .collect()
    }

    /// Breeds and scores children, replaces the worst incumbents, and runs the
    /// angle optimizer on generations that are multiples of the interval.
    pub fn step_generation<R: Rng + ?Sized>(
        &self,
        population: &mut Vec<Individual>,
        rng: &mut R,
        generation: usize,
    ) -> Result<GenerationRecord> {
        let genomes = self.child_genomes(population, rng)?;
        let children = self.evaluate_all(genomes)?;
        survivor_replacement_by(population, children, self.cfg.replace_count(), Individual::fitness)?;
        if self.cfg.variant.optimizes_parameters()
            && generation > 0
            && generation % self.cfg.param_opt_interval == 0
        {
            paramopt::hybrid_hook(population, &self.evaluator, &self.cfg, rng)?;
        }
        Ok(self.record(population, generation))
    }

    /// Summarizes a population. Ties for best go to the lowest index.
    pub fn record(&self, population: &[Individual], generation: usize) -> GenerationRecord {
        let best = best_index(population);
        let b = &population[best];
        let d = self.problem.target_depth() as f64;
        GenerationRecord {
            generation,
            best_fitness: b.fitness(),
            mean_fitness: population.iter().map(Individual::fitness).sum::<f64>()
                / population.len() as f64,
            best_fidelity: b.fidelity(),
            best_depth: b.depth(),
            depth_reduction_pct: 100.0 * (d - b.depth() as f64) / d,
        }
    }

    /// Runs `cfg.generations` generations, reporting each record (generation 0
    /// included) as soon as it exists.
    pub fn run<R: Rng + ?Sized>(
        &self,
        rng: &mut R,
        mut on_record: impl FnMut(&GenerationRecord) -> Result<()>,
    ) -> Result<RunOutcome> {
        let wrap = |generation: usize| {
            move |e: Error| match e {
                Error::Io { .. } => e,
                e => Error::Generation {
                    generation,
                    source: Box::new(e),
                },
            }
        };
        let mut population = self.initial_population(rng).map_err(wrap(0))?;
        let first = self.record(&population, 0);
        on_record(&first)?;
        let mut records = vec![first];
        for generation in 1..=self.cfg.generations {
            let rec = self
                .step_generation(&mut population, rng, generation)
                .map_err(wrap(generation))?;
            if let Some(bad) = population.iter().find_map(|i| i.solution().validate().err()) {
                return Err(wrap(generation)(bad.into()));
            }
            on_record(&rec)?;
            records.push(rec);
        }
        let best = population[best_index(&population)].clone();
        Ok(RunOutcome {
            records,
            population,
            best,
        })
    }
}

fn best_index(population: &[Individual]) -> usize {
    let mut best = 0;
    for (i, ind) in population.iter().enumerate().skip(1) {
        if ind.fitness() > population[best].fitness() {
            best = i;
        }
    }
    best
}
