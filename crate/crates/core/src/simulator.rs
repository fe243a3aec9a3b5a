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

//! Dense statevector simulation.
//!
//! Basis index bit `n - 1 - q` holds qubit `q`, so qubit 0 is the leftmost
//! digit of a ket: for two qubits `|10⟩` is amplitude index 2.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;

use crate::circuit::{validate_column, Gate, SolutionMatrix};
use crate::error::{Error, Result};

pub type Matrix2 = [[Complex64; 2]; 2];

const ZERO: Complex64 = Complex64::new(0.0, 0.0);
const ONE: Complex64 = Complex64::new(1.0, 0.0);

/// The 2x2 unitary of a single-qubit gate; `None` for CX cells.
pub fn gate_matrix(gate: &Gate) -> Option<Matrix2> {
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    let p = Complex64::new(0.5, 0.5);
    let m = Complex64::new(0.5, -0.5);
    Some(match *gate {
        Gate::Id => [[ONE, ZERO], [ZERO, ONE]],
        Gate::X => [[ZERO, ONE], [ONE, ZERO]],
        Gate::Sx => [[p, m], [m, p]],
        Gate::H => [[h, h], [h, -h]],
        Gate::Rz { theta } => [
            [Complex64::from_polar(1.0, -theta / 2.0), ZERO],
            [ZERO, Complex64::from_polar(1.0, theta / 2.0)],
        ],
        Gate::CxControl { .. } | Gate::CxTarget { .. } => return None,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct Statevector {
    num_qubits: usize,
    amplitudes: Vec<Complex64>,
}

/// `|0…0⟩` on `num_qubits` qubits.
pub fn zero_state(num_qubits: usize) -> Result<Statevector> {
    if num_qubits == 0 {
        return Err(Error::config("statevector needs at least one qubit"));
    }
    let mut amplitudes = vec![ZERO; 1 << num_qubits];
    amplitudes[0] = ONE;
    Ok(Statevector {
        num_qubits,
        amplitudes,
    })
}

impl Statevector {
    /// Wraps raw amplitudes. The length must be `2^n` for some `n ≥ 1` and
    /// the vector must be normalized to within 1e-10.
    pub fn from_amplitudes(amplitudes: Vec<Complex64>) -> Result<Self> {
        let len = amplitudes.len();
        if len < 2 || !len.is_power_of_two() {
            return Err(Error::config(format!(
                "statevector length {len} is not a power of two"
            )));
        }
        let s = Statevector {
            num_qubits: len.trailing_zeros() as usize,
            amplitudes,
        };
        let norm = s.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(Error::config(format!("statevector norm² is {norm}, expected 1")));
        }
        Ok(s)
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Σ|amplitude|².
    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    fn qubit_mask(&self, qubit: usize) -> usize {
        1 << (self.num_qubits - 1 - qubit)
    }

    fn apply_single(&mut self, qubit: usize, u: &Matrix2) {
        let bit = self.qubit_mask(qubit);
        let dim = self.amplitudes.len();
        for block in (0..dim).step_by(bit << 1) {
            for i in block..block + bit {
                let a = self.amplitudes[i];
                let b = self.amplitudes[i | bit];
                self.amplitudes[i] = u[0][0] * a + u[0][1] * b;
                self.amplitudes[i | bit] = u[1][0] * a + u[1][1] * b;
            }
        }
    }

    fn apply_cx(&mut self, control: usize, target: usize) {
        let cbit = self.qubit_mask(control);
        let tbit = self.qubit_mask(target);
        for i in 0..self.amplitudes.len() {
            if i & cbit != 0 && i & tbit == 0 {
                self.amplitudes.swap(i, i | tbit);
            }
        }
    }

    /// Applies one genome column in place.
    pub fn apply_column(&mut self, column: &[Gate]) -> Result<()> {
        validate_column(column, self.num_qubits, 0)?;
        for (q, gate) in column.iter().enumerate() {
            match *gate {
                Gate::Id | Gate::CxTarget { .. } => {}
                Gate::X => {
                    let bit = self.qubit_mask(q);
                    for i in 0..self.amplitudes.len() {
                        if i & bit == 0 {
                            self.amplitudes.swap(i, i | bit);
                        }
                    }
                }
                Gate::Rz { theta } => {
                    let bit = self.qubit_mask(q);
                    let lo = Complex64::from_polar(1.0, -theta / 2.0);
                    let hi = lo.conj();
                    for (i, a) in self.amplitudes.iter_mut().enumerate() {
                        *a *= if i & bit == 0 { lo } else { hi };
                    }
                }
                Gate::CxControl { partner } => self.apply_cx(q, partner),
                Gate::Sx | Gate::H => {
                    let u = gate_matrix(gate).expect("single-qubit gate");
                    self.apply_single(q, &u);
                }
            }
        }
        Ok(())
    }
}

/// Returns `state` after one column has acted on it.
pub fn apply_column(mut state: Statevector, column: &[Gate]) -> Result<Statevector> {
    state.apply_column(column)?;
    Ok(state)
}

/// Runs the circuit on `|0…0⟩`, columns left to right.
pub fn simulate(matrix: &SolutionMatrix) -> Result<Statevector> {
    let mut state = zero_state(matrix.num_qubits())?;
    for column in matrix.columns() {
        state.apply_column(column)?;
    }
    Ok(state)
}

/// Pure-state fidelity `|⟨a|b⟩|`, clamped to `[0, 1]`.
pub fn fidelity(a: &Statevector, b: &Statevector) -> Result<f64> {
    if a.num_qubits != b.num_qubits {
        return Err(Error::DimensionMismatch {
            left: a.num_qubits,
            right: b.num_qubits,
        });
    }
    let overlap: Complex64 = a
        .amplitudes
        .iter()
        .zip(&b.amplitudes)
        .map(|(x, y)| x.conj() * y)
        .sum();
    Ok(overlap.norm().clamp(0.0, 1.0))
}
