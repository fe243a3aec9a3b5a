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

//! Column-level recombination of two parents of possibly different depth.

use rand::Rng;

use crate::circuit::SolutionMatrix;

/// Single-point crossover with the child depth, the cut, and the parent order
/// fixed by the caller.
///
/// The child takes `child_depth_from_first ? p1.depth() : p2.depth()` columns.
/// Columns `[0, cut)` come from the prefix parent and the rest from the suffix
/// parent. With equal depths `p1` is the prefix parent. Otherwise the parent
/// whose depth the child did not inherit supplies the prefix, so a child as
/// deep as the larger parent starts with the smaller one's columns.
///
/// # Panics
/// If `cut` is not strictly inside `[1, min(depth) - 1]`.
pub fn single_point_crossover_at(
    p1: &SolutionMatrix,
    p2: &SolutionMatrix,
    child_depth_from_first: bool,
    cut: usize,
) -> SolutionMatrix {
    let min = p1.depth().min(p2.depth());
    assert!(cut >= 1 && cut < min, "cut {cut} outside [1, {}]", min - 1);
    let (prefix, suffix) = if p1.depth() == p2.depth() {
        (p1, p2)
    } else if child_depth_from_first {
        (p2, p1)
    } else {
        (p1, p2)
    };
    let columns = prefix.columns()[..cut]
        .iter()
        .chain(&suffix.columns()[cut..])
        .cloned()
        .collect();
    SolutionMatrix::from_columns_unchecked(p1.num_qubits(), columns)
}

/// Picks the child depth from either parent and a cut in `[1, min - 1]`.
/// When the shorter parent has a single column there is no interior cut and
/// the depth-donor parent is copied whole.
pub fn single_point_crossover<R: Rng + ?Sized>(
    p1: &SolutionMatrix,
    p2: &SolutionMatrix,
    rng: &mut R,
) -> SolutionMatrix {
    let from_first = rng.random_bool(0.5);
    let min = p1.depth().min(p2.depth());
    if min < 2 {
        return if from_first { p1.clone() } else { p2.clone() };
    }
    let cut = rng.random_range(1..min);
    single_point_crossover_at(p1, p2, from_first, cut)
}

/// Uniform column crossover with the coin flips supplied by `take_first`,
/// which is asked once per column index shared by both parents. Columns
/// beyond the shorter parent come from the longer one.
pub fn uniform_column_crossover_with(
    p1: &SolutionMatrix,
    p2: &SolutionMatrix,
    child_depth_from_first: bool,
    mut take_first: impl FnMut(usize) -> bool,
) -> SolutionMatrix {
    let depth = if child_depth_from_first { p1.depth() } else { p2.depth() };
    let min = p1.depth().min(p2.depth());
    let longer = if p1.depth() >= p2.depth() { p1 } else { p2 };
    let columns = (0..depth)
        .map(|i| {
            if i < min {
                if take_first(i) {
                    p1.columns()[i].clone()
                } else {
                    p2.columns()[i].clone()
                }
            } else {
                longer.columns()[i].clone()
            }
        })
        .collect();
    SolutionMatrix::from_columns_unchecked(p1.num_qubits(), columns)
}

pub fn uniform_column_crossover<R: Rng + ?Sized>(
    p1: &SolutionMatrix,
    p2: &SolutionMatrix,
    rng: &mut R,
) -> SolutionMatrix {
    let from_first = rng.random_bool(0.5);
    uniform_column_crossover_with(p1, p2, from_first, |_| rng.random_bool(0.5))
}
