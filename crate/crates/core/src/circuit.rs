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

//! Gate vocabulary and the qubit-by-time matrix genome.
//!
//! A [`SolutionMatrix`] stores a circuit column by column. Every column holds
//! exactly one [`Gate`] per qubit, and a CNOT occupies two cells of the same
//! column which name each other as partners.

use std::f64::consts::TAU;
use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::{Error, Result};

/// Reduces an angle into `[0, 2π)`.
pub fn wrap_angle(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid rounds tiny negative inputs up to exactly TAU.
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// One cell of the genome.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Gate {
    #[serde(rename = "ID")]
    Id,
    #[serde(rename = "X")]
    X,
    #[serde(rename = "SX")]
    Sx,
    /// Hadamard. Only used by hand-built circuits; never drawn by the EA.
    #[serde(rename = "H")]
    H,
    #[serde(rename = "RZ")]
    Rz { theta: f64 },
    #[serde(rename = "CX_CONTROL")]
    CxControl { partner: usize },
    #[serde(rename = "CX_TARGET")]
    CxTarget { partner: usize },
}

impl Gate {
    /// RZ gate with its angle reduced into `[0, 2π)`.
    pub fn rz(theta: f64) -> Self {
        Gate::Rz {
            theta: wrap_angle(theta),
        }
    }

    pub fn is_identity(&self) -> bool {
        matches!(self, Gate::Id)
    }

    pub fn is_cx(&self) -> bool {
        matches!(self, Gate::CxControl { .. } | Gate::CxTarget { .. })
    }

    pub fn is_single_qubit(&self) -> bool {
        !self.is_cx()
    }

    pub fn partner(&self) -> Option<usize> {
        match *self {
            Gate::CxControl { partner } | Gate::CxTarget { partner } => Some(partner),
            _ => None,
        }
    }

    pub fn tag(&self) -> GateTag {
        match self {
            Gate::Id => GateTag::Id,
            Gate::X => GateTag::X,
            Gate::Sx => GateTag::Sx,
            Gate::H => GateTag::H,
            Gate::Rz { .. } => GateTag::Rz,
            Gate::CxControl { .. } | Gate::CxTarget { .. } => GateTag::Cx,
        }
    }
}

impl fmt::Display for Gate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Gate::Id => write!(f, "ID"),
            Gate::X => write!(f, "X"),
            Gate::Sx => write!(f, "SX"),
            Gate::H => write!(f, "H"),
            Gate::Rz { theta } => write!(f, "RZ({theta:.4})"),
            Gate::CxControl { partner } => write!(f, "C->{partner}"),
            Gate::CxTarget { partner } => write!(f, "T<-{partner}"),
        }
    }
}

/// Gate kinds that can be drawn from a gate set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum GateTag {
    Id,
    X,
    Sx,
    Rz,
    Cx,
    H,
}

impl GateTag {
    fn single<R: Rng + ?Sized>(self, rng: &mut R) -> Option<Gate> {
        Some(match self {
            GateTag::Id => Gate::Id,
            GateTag::X => Gate::X,
            GateTag::Sx => Gate::Sx,
            GateTag::H => Gate::H,
            GateTag::Rz => Gate::Rz {
                theta: rng.random_range(0.0..TAU),
            },
            GateTag::Cx => return None,
        })
    }
}

/// The gates random construction may draw from, sampled uniformly.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<GateTag>", into = "Vec<GateTag>")]
pub struct GateSet {
    tags: Vec<GateTag>,
    singles: Vec<GateTag>,
}

impl GateSet {
    pub fn new(tags: Vec<GateTag>) -> Result<Self> {
        if tags.is_empty() {
            return Err(Error::config("gate set must not be empty"));
        }
        let singles = tags.iter().copied().filter(|t| *t != GateTag::Cx).collect();
        Ok(Self { tags, singles })
    }

    /// ID, X, SX, RZ and CX.
    pub fn standard() -> Self {
        Self::new(vec![
            GateTag::Id,
            GateTag::X,
            GateTag::Sx,
            GateTag::Rz,
            GateTag::Cx,
        ])
        .expect("non-empty")
    }

    pub fn tags(&self) -> &[GateTag] {
        &self.tags
    }

    pub fn contains(&self, tag: GateTag) -> bool {
        self.tags.contains(&tag)
    }

    pub fn choose<R: Rng + ?Sized>(&self, rng: &mut R) -> GateTag {
        self.tags[rng.random_range(..self.tags.len())]
    }

    /// A random single-qubit gate. Falls back to ID when the set holds only CX.
    pub fn random_single<R: Rng + ?Sized>(&self, rng: &mut R) -> Gate {
        if self.singles.is_empty() {
            return Gate::Id;
        }
        let tag = self.singles[rng.random_range(..self.singles.len())];
        tag.single(rng).expect("singles exclude CX")
    }
}

impl Default for GateSet {
    fn default() -> Self {
        Self::standard()
    }
}

impl TryFrom<Vec<GateTag>> for GateSet {
    type Error = Error;

    fn try_from(tags: Vec<GateTag>) -> Result<Self> {
        GateSet::new(tags)
    }
}

impl From<GateSet> for Vec<GateTag> {
    fn from(set: GateSet) -> Self {
        set.tags
    }
}

/// The first broken invariant found in a genome.
#[derive(Clone, Debug, PartialEq, Error)]
pub enum Violation {
    #[error("circuit has zero qubits")]
    NoQubits,
    #[error("circuit has no columns")]
    NoColumns,
    #[error("ragged column {column}: {len} cells for {expected} qubits")]
    RaggedColumn {
        column: usize,
        len: usize,
        expected: usize,
    },
    #[error("unpaired CX at qubit {qubit}, column {column}")]
    UnpairedCx { qubit: usize, column: usize },
    #[error("angle out of range at qubit {qubit}, column {column}: {theta}")]
    AngleOutOfRange {
        qubit: usize,
        column: usize,
        theta: f64,
    },
}

/// Checks one column against a qubit count. `index` is only used for reporting.
pub fn validate_column(column: &[Gate], num_qubits: usize, index: usize) -> Result<(), Violation> {
    if column.len() != num_qubits {
        return Err(Violation::RaggedColumn {
            column: index,
            len: column.len(),
            expected: num_qubits,
        });
    }
    for (q, gate) in column.iter().enumerate() {
        let unpaired = Violation::UnpairedCx {
            qubit: q,
            column: index,
        };
        match *gate {
            Gate::Rz { theta } if !(0.0..TAU).contains(&theta) => {
                return Err(Violation::AngleOutOfRange {
                    qubit: q,
                    column: index,
                    theta,
                });
            }
            Gate::CxControl { partner } => match column.get(partner) {
                Some(Gate::CxTarget { partner: back }) if *back == q && partner != q => {}
                _ => return Err(unpaired),
            },
            Gate::CxTarget { partner } => match column.get(partner) {
                Some(Gate::CxControl { partner: back }) if *back == q && partner != q => {}
                _ => return Err(unpaired),
            },
            _ => {}
        }
    }
    Ok(())
}

/// Draws one random column over `num_qubits` qubits.
///
/// Qubits are filled in index order. When CX is drawn for a qubit, a partner
/// is picked uniformly among the still-unassigned qubits and the control role
/// goes to either side with equal probability. With no free partner, the
/// qubit receives a random single-qubit gate instead.
pub fn random_column<R: Rng + ?Sized>(num_qubits: usize, gateset: &GateSet, rng: &mut R) -> Vec<Gate> {
    let mut cells: Vec<Option<Gate>> = vec![None; num_qubits];
    for q in 0..num_qubits {
        if cells[q].is_some() {
            continue;
        }
        let gate = match gateset.choose(rng) {
            GateTag::Cx => {
                let free: Vec<usize> = (0..num_qubits)
                    .filter(|&p| p != q && cells[p].is_none())
                    .collect();
                if free.is_empty() {
                    gateset.random_single(rng)
                } else {
                    let p = free[rng.random_range(..free.len())];
                    if rng.random_bool(0.5) {
                        cells[p] = Some(Gate::CxTarget { partner: q });
                        Gate::CxControl { partner: p }
                    } else {
                        cells[p] = Some(Gate::CxControl { partner: q });
                        Gate::CxTarget { partner: p }
                    }
                }
            }
            tag => tag.single(rng).expect("not CX"),
        };
        cells[q] = Some(gate);
    }
    cells.into_iter().map(|c| c.expect("every qubit assigned")).collect()
}

/// A circuit genome: `columns[c][q]` is the gate on qubit `q` at time step `c`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionMatrix {
    num_qubits: usize,
    columns: Vec<Vec<Gate>>,
}

impl SolutionMatrix {
    /// Builds a matrix and checks every invariant.
    pub fn from_columns(num_qubits: usize, columns: Vec<Vec<Gate>>) -> Result<Self> {
        let m = Self::from_columns_unchecked(num_qubits, columns);
        m.validate()?;
        Ok(m)
    }

    pub(crate) fn from_columns_unchecked(num_qubits: usize, columns: Vec<Vec<Gate>>) -> Self {
        Self {
            num_qubits,
            columns,
        }
    }

    /// All-identity matrix.
    pub fn identity(num_qubits: usize, depth: usize) -> Self {
        Self {
            num_qubits,
            columns: vec![vec![Gate::Id; num_qubits]; depth],
        }
    }

    pub fn num_qubits(&self) -> usize {
        self.num_qubits
    }

    /// Number of columns.
    pub fn depth(&self) -> usize {
        self.columns.len()
    }

    pub fn columns(&self) -> &[Vec<Gate>] {
        &self.columns
    }

    pub(crate) fn columns_mut(&mut self) -> &mut Vec<Vec<Gate>> {
        &mut self.columns
    }

    pub fn gate(&self, qubit: usize, column: usize) -> Gate {
        self.columns[column][qubit]
    }

    /// Positions of all RZ cells in row-major order (qubit, then column).
    pub fn rz_locations(&self) -> Vec<(usize, usize)> {
        let mut locs = Vec::new();
        for q in 0..self.num_qubits {
            for (c, col) in self.columns.iter().enumerate() {
                if matches!(col[q], Gate::Rz { .. }) {
                    locs.push((q, c));
                }
            }
        }
        locs
    }

    /// Sets the angle of an existing RZ cell, wrapping it into `[0, 2π)`.
    ///
    /// # Panics
    /// If the cell is not an RZ gate.
    pub fn set_angle(&mut self, qubit: usize, column: usize, theta: f64) {
        match &mut self.columns[column][qubit] {
            Gate::Rz { theta: t } => *t = wrap_angle(theta),
            other => panic!("cell ({qubit}, {column}) is {other}, not RZ"),
        }
    }

    pub fn validate(&self) -> Result<(), Violation> {
        if self.num_qubits == 0 {
            return Err(Violation::NoQubits);
        }
        if self.columns.is_empty() {
            return Err(Violation::NoColumns);
        }
        self.columns
            .iter()
            .enumerate()
            .try_for_each(|(c, col)| validate_column(col, self.num_qubits, c))
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("matrix serializes")
    }

    /// Parses and validates a matrix from its JSON form.
    pub fn from_json(text: &str) -> Result<Self> {
        let m: SolutionMatrix = serde_json::from_str(text)?;
        m.validate()?;
        Ok(m)
    }
}

impl fmt::Display for SolutionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for q in 0..self.num_qubits {
            let row: Vec<String> = self.columns.iter().map(|c| c[q].to_string()).collect();
            writeln!(f, "q{q}: {}", row.join(" | "))?;
        }
        Ok(())
    }
}

/// A random genome with depth drawn uniformly from `lo..=hi`.
pub fn random_solution<R: Rng + ?Sized>(
    num_qubits: usize,
    (lo, hi): (usize, usize),
    gateset: &GateSet,
    rng: &mut R,
) -> Result<SolutionMatrix> {
    if num_qubits == 0 {
        return Err(Error::config("num_qubits must be at least 1"));
    }
    if lo == 0 || lo > hi {
        return Err(Error::config(format!("invalid depth range [{lo}, {hi}]")));
    }
    let depth = rng.random_range(lo..=hi);
    let columns = (0..depth)
        .map(|_| random_column(num_qubits, gateset, rng))
        .collect();
    Ok(SolutionMatrix::from_columns_unchecked(num_qubits, columns))
}
