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

use crate::error::{Error, Result};

/// `(δ - 1) / (d - 1)`: 0 at the minimum depth of one column, 1 at the target
/// depth. Not clamped, so circuits deeper than the target score above 1.
pub fn normalized_depth(depth: usize, target_depth: usize) -> Result<f64> {
    if target_depth < 2 {
        return Err(Error::config(format!(
            "target depth must be at least 2, got {target_depth}"
        )));
    }
    if depth == 0 {
        return Err(Error::config("circuit depth must be at least 1"));
    }
    Ok((depth as f64 - 1.0) / (target_depth as f64 - 1.0))
}

/// The scalarized objective and its parts.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct FitnessBreakdown {
    pub fidelity: f64,
    pub depth_norm: f64,
    /// `1 - depth_norm`.
    pub depth_score: f64,
    /// `1 - fidelity`.
    pub infidelity: f64,
    pub total: f64,
}

/// `alpha * F - beta * δ_norm`.
pub fn fitness(
    fidelity: f64,
    depth: usize,
    target_depth: usize,
    alpha: f64,
    beta: f64,
) -> Result<FitnessBreakdown> {
    let depth_norm = normalized_depth(depth, target_depth)?;
    Ok(FitnessBreakdown {
        fidelity,
        depth_norm,
        depth_score: 1.0 - depth_norm,
        infidelity: 1.0 - fidelity,
        total: alpha * fidelity - beta * depth_norm,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn normalized_depth_examples() {
        assert_eq!(normalized_depth(1, 20).unwrap(), 0.0);
        assert_eq!(normalized_depth(20, 20).unwrap(), 1.0);
        assert!((normalized_depth(4, 20).unwrap() - 0.157895).abs() < 1e-6);
        assert_eq!(normalized_depth(40, 20).unwrap(), 39.0 / 19.0);
        assert!(matches!(normalized_depth(3, 1), Err(Error::Config(_))));
        assert!(matches!(normalized_depth(0, 5), Err(Error::Config(_))));
    }

    #[test]
    fn fitness_examples() {
        assert_eq!(fitness(1.0, 1, 20, 10.0, 1.0).unwrap().total, 10.0);
        assert_eq!(fitness(0.0, 20, 20, 10.0, 1.0).unwrap().total, -1.0);
        let b = fitness(0.98, 4, 20, 10.0, 1.0).unwrap();
        assert!((b.total - 9.64211).abs() < 1e-5);
        assert!((b.depth_score - 16.0 / 19.0).abs() < 1e-15);
        assert!((b.infidelity - 0.02).abs() < 1e-15);
    }
}
