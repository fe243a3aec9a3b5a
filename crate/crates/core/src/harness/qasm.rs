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

//! OpenQASM 2.0 export. One-way: the JSON genome stays the canonical format.

use std::fmt::Write as _;
use std::path::Path;

use crate::circuit::{Gate, SolutionMatrix};
use crate::error::{Error, Result};

/// Renders the circuit column by column. Identity cells are skipped unless
/// their whole column is identity, in which case the layer is written out as
/// `id` statements so it survives the export.
pub fn to_qasm(matrix: &SolutionMatrix) -> String {
    let mut out = String::from("OPENQASM 2.0;\ninclude \"qelib1.inc\";\n");
    writeln!(out, "qreg q[{}];", matrix.num_qubits()).unwrap();
    for column in matrix.columns() {
        let idle = column.iter().all(Gate::is_identity);
        for (q, gate) in column.iter().enumerate() {
            match *gate {
                Gate::Id if idle => writeln!(out, "id q[{q}];"),
                Gate::Id | Gate::CxTarget { .. } => Ok(()),
                Gate::X => writeln!(out, "x q[{q}];"),
                Gate::Sx => writeln!(out, "sx q[{q}];"),
                Gate::H => writeln!(out, "h q[{q}];"),
                Gate::Rz { theta } => writeln!(out, "rz({theta}) q[{q}];"),
                Gate::CxControl { partner } => writeln!(out, "cx q[{q}],q[{partner}];"),
            }
            .unwrap();
        }
    }
    out
}

pub fn export_qasm(matrix: &SolutionMatrix, path: &Path) -> Result<()> {
    std::fs::write(path, to_qasm(matrix)).map_err(|e| Error::io(path, e))
}

#[cfg(test)]
mod tests {
    use super::*;

    const HEADER: &str = "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";

    #[test]
    fn idle_layer() {
        let q = to_qasm(&SolutionMatrix::identity(2, 1));
        assert_eq!(q, format!("{HEADER}qreg q[2];\nid q[0];\nid q[1];\n"));
    }

    #[test]
    fn bell_pair() {
        let m = SolutionMatrix::from_columns(
            2,
            vec![
                vec![Gate::H, Gate::Id],
                vec![Gate::CxControl { partner: 1 }, Gate::CxTarget { partner: 0 }],
            ],
        )
        .unwrap();
        assert_eq!(to_qasm(&m), format!("{HEADER}qreg q[2];\nh q[0];\ncx q[0],q[1];\n"));
    }

    #[test]
    fn reversed_cx_and_rotation() {
        let m = SolutionMatrix::from_columns(
            2,
            vec![
                vec![Gate::rz(0.5), Gate::Sx],
                vec![Gate::CxTarget { partner: 1 }, Gate::CxControl { partner: 0 }],
            ],
        )
        .unwrap();
        let q = to_qasm(&m);
        assert!(q.ends_with("rz(0.5) q[0];\nsx q[1];\ncx q[1],q[0];\n"), "{q}");
    }

    #[test]
    fn writes_file() {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("c.qasm");
        export_qasm(&SolutionMatrix::identity(1, 1), &path).unwrap();
        assert!(std::fs::read_to_string(path).unwrap().contains("id q[0];"));
        assert!(export_qasm(&SolutionMatrix::identity(1, 1), &dir.path().join("missing/c.qasm")).is_err());
    }
}
