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

use rand::Rng;

use crate::error::{Error, Result};

/// Two independent uniform draws of population indices. Fitness plays no
/// part; the draws may coincide.
///
/// # Panics
/// On an empty population.
pub fn select_parents<R: Rng + ?Sized>(population_len: usize, rng: &mut R) -> (usize, usize) {
    assert!(population_len > 0, "cannot select from an empty population");
    (rng.random_range(..population_len), rng.random_range(..population_len))
}

/// Sorts `population` by descending fitness and overwrites its `replace`
/// worst members with the `replace` best of `children`, whether or not they
/// are better. Both sorts are stable.
pub fn survivor_replacement_by<T>(
    population: &mut Vec<T>,
    mut children: Vec<T>,
    replace: usize,
    fitness: impl Fn(&T) -> f64,
) -> Result<()> {
    if replace > children.len() {
        return Err(Error::config(format!(
            "cannot replace {replace} individuals with {} children",
            children.len()
        )));
    }
    if replace > population.len() {
        return Err(Error::config(format!(
            "cannot replace {replace} of {} individuals",
            population.len()
        )));
    }
    population.sort_by(|a, b| fitness(b).total_cmp(&fitness(a)));
    children.sort_by(|a, b| fitness(b).total_cmp(&fitness(a)));
    population.truncate(population.len() - replace);
    population.extend(children.into_iter().take(replace));
    Ok(())
}
