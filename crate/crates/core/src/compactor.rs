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

//! Semantics-preserving genome simplification.
//!
//! Three local rewrites, looped to a fixpoint: adjacent RZ gates on one qubit
//! are fused, gates slide left across identity cells, and all-identity
//! columns are dropped. The result is not a minimal circuit; it only removes
//! the obvious slack the evolutionary operators leave behind.

use crate::circuit::{Gate, SolutionMatrix};

/// Fuses `RZ(a)` at column `c` with `RZ(b)` at `c + 1` into `RZ(a + b)` and
/// leaves an identity at `c + 1`.
pub fn merge_rotations(matrix: &SolutionMatrix) -> SolutionMatrix {
    let mut out = matrix.clone();
    let n = out.num_qubits();
    let cols = out.columns_mut();
    for q in 0..n {
        let mut c = 0;
        while c + 1 < cols.len() {
            if let (Gate::Rz { theta: a }, Gate::Rz { theta: b }) = (cols[c][q], cols[c + 1][q]) {
                cols[c][q] = Gate::rz(a + b);
                cols[c + 1][q] = Gate::Id;
                c += 2;
            } else {
                c += 1;
            }
        }
    }
    out
}

/// Moves every gate one column earlier while the cells it would land on hold
/// identities, until nothing moves.
pub fn shift_gates_left(matrix: &SolutionMatrix) -> SolutionMatrix {
    let mut out = matrix.clone();
    let n = out.num_qubits();
    let cols = out.columns_mut();
    loop {
        let mut moved = false;
        for c in 1..cols.len() {
            for q in 0..n {
                match cols[c][q] {
                    Gate::Id | Gate::CxTarget { .. } => {}
                    Gate::CxControl { partner } => {
                        if cols[c - 1][q].is_identity() && cols[c - 1][partner].is_identity() {
                            cols[c - 1][q] = cols[c][q];
                            cols[c - 1][partner] = cols[c][partner];
                            cols[c][q] = Gate::Id;
                            cols[c][partner] = Gate::Id;
                            moved = true;
                        }
                    }
                    gate => {
                        if cols[c - 1][q].is_identity() {
                            cols[c - 1][q] = gate;
                            cols[c][q] = Gate::Id;
                            moved = true;
                        }
                    }
                }
            }
        }
        if !moved {
            return out;
        }
    }
}

/// Removes all-identity columns, keeping one if nothing else would remain.
pub fn drop_identity_columns(matrix: &SolutionMatrix) -> SolutionMatrix {
    let mut out = matrix.clone();
    let n = out.num_qubits();
    let cols = out.columns_mut();
    cols.retain(|col| !col.iter().all(Gate::is_identity));
    if cols.is_empty() {
        cols.push(vec![Gate::Id; n]);
    }
    out
}

/// Applies merge, shift, and drop until a full round changes nothing.
pub fn compact(matrix: &SolutionMatrix) -> SolutionMatrix {
    let mut current = matrix.clone();
    loop {
        let next = drop_identity_columns(&shift_gates_left(&merge_rotations(&current)));
        if next == current {
            return next;
        }
        current = next;
    }
}
