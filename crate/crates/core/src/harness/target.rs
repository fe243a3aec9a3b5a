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

//! Random target circuits and their on-disk form.

use std::fs;
use std::path::Path;

use num_complex::Complex64;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::circuit::{random_column, GateSet, SolutionMatrix};
use crate::compactor::compact;
use crate::error::{Error, Result};
use crate::harness::qasm::export_qasm;
use crate::simulator::{simulate, Statevector};

pub const CIRCUIT_FILE: &str = "circuit.json";
pub const STATE_FILE: &str = "state.json";
pub const QASM_FILE: &str = "circuit.qasm";

/// Draws a random circuit over the standard gate set that is already at the
/// compaction fixpoint and has exactly `depth` columns, and simulates it.
///
/// Columns are appended one at a time and the circuit is re-compacted after
/// each, so gates that could slide into earlier idle slots do not count
/// towards the depth.
pub fn generate_target(num_qubits: usize, depth: usize, seed: u64) -> Result<(SolutionMatrix, Statevector)> {
    if depth < 2 {
        return Err(Error::config(format!("target depth must be at least 2, got {depth}")));
    }
    if num_qubits == 0 {
        return Err(Error::config("num_qubits must be at least 1"));
    }
    let gateset = GateSet::standard();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut columns = Vec::with_capacity(depth);
    let max_draws = 1000 * depth;
    for _ in 0..max_draws {
        columns.push(random_column(num_qubits, &gateset, &mut rng));
        let m = compact(&SolutionMatrix::from_columns_unchecked(num_qubits, columns));
        if m.depth() == depth {
            let state = simulate(&m)?;
            return Ok((m, state));
        }
        columns = m.columns().to_vec();
    }
    Err(Error::config(format!(
        "could not grow a compact circuit to depth {depth} in {max_draws} draws"
    )))
}

#[derive(Serialize, Deserialize)]
struct StateFile {
    num_qubits: usize,
    /// `[re, im]` pairs; basis index bit `n - 1 - q` is qubit `q`.
    amplitudes: Vec<[f64; 2]>,
}

pub fn write_target(dir: &Path, circuit: &SolutionMatrix, state: &Statevector) -> Result<()> {
    fs::create_dir_all(dir).map_err(|e| Error::io(dir, e))?;
    let path = dir.join(CIRCUIT_FILE);
    fs::write(&path, circuit.to_json()).map_err(|e| Error::io(&path, e))?;
    let file = StateFile {
        num_qubits: state.num_qubits(),
        amplitudes: state.amplitudes().iter().map(|a| [a.re, a.im]).collect(),
    };
    let path = dir.join(STATE_FILE);
    fs::write(&path, serde_json::to_string_pretty(&file)?).map_err(|e| Error::io(&path, e))?;
    export_qasm(circuit, &dir.join(QASM_FILE))
}

/// Loads the circuit written by [`write_target`].
pub fn load_target(dir: &Path) -> Result<SolutionMatrix> {
    let path = dir.join(CIRCUIT_FILE);
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    SolutionMatrix::from_json(&text)
}

pub fn load_state(dir: &Path) -> Result<Statevector> {
    let path = dir.join(STATE_FILE);
    let text = fs::read_to_string(&path).map_err(|e| Error::io(&path, e))?;
    let file: StateFile = serde_json::from_str(&text)?;
    let s = Statevector::from_amplitudes(
        file.amplitudes.iter().map(|[re, im]| Complex64::new(*re, *im)).collect(),
    )?;
    if s.num_qubits() != file.num_qubits {
        return Err(Error::DimensionMismatch {
            left: file.num_qubits,
            right: s.num_qubits(),
        });
    }
    Ok(s)
}
