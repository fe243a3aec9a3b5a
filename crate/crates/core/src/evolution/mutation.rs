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
use serde::{Deserialize, Serialize};

use crate::circuit::{random_column, Gate, GateSet, SolutionMatrix};

/// The eight genome edits.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MutationKind {
    MutateGate,
    GateSwap,
    ColumnSwap,
    SwapCtrlTarg,
    AddRandomColumn,
    DeleteColumn,
    AddCx,
    AddSingleGate,
}

impl MutationKind {
    pub const ALL: [MutationKind; 8] = [
        MutationKind::MutateGate,
        MutationKind::GateSwap,
        MutationKind::ColumnSwap,
        MutationKind::SwapCtrlTarg,
        MutationKind::AddRandomColumn,
        MutationKind::DeleteColumn,
        MutationKind::AddCx,
        MutationKind::AddSingleGate,
    ];
}

/// Applies one mutation. Kinds whose precondition fails (no CX to flip, a
/// single column to delete, ...) return the input unchanged.
pub fn mutate<R: Rng + ?Sized>(
    solution: &SolutionMatrix,
    kind: MutationKind,
    gateset: &GateSet,
    rng: &mut R,
) -> SolutionMatrix {
    let mut out = solution.clone();
    let n = out.num_qubits();
    let cols = out.columns_mut();
    match kind {
        MutationKind::MutateGate => {
            let c = rng.random_range(..cols.len());
            let q = rng.random_range(..n);
            // A CX cell takes its partner down with it.
            if let Some(p) = cols[c][q].partner() {
                cols[c][p] = gateset.random_single(rng);
            }
            cols[c][q] = gateset.random_single(rng);
        }
        MutationKind::GateSwap => {
            let eligible: Vec<usize> = (0..cols.len())
                .filter(|&c| cols[c].iter().filter(|g| g.is_single_qubit()).count() >= 2)
                .collect();
            if !eligible.is_empty() {
                let c = eligible[rng.random_range(..eligible.len())];
                let singles: Vec<usize> = (0..n).filter(|&q| cols[c][q].is_single_qubit()).collect();
                let a = rng.random_range(..singles.len());
                let mut b = rng.random_range(..singles.len() - 1);
                if b >= a {
                    b += 1;
                }
                cols[c].swap(singles[a], singles[b]);
            }
        }
        MutationKind::ColumnSwap => {
            if cols.len() >= 2 {
                let a = rng.random_range(..cols.len());
                let mut b = rng.random_range(..cols.len() - 1);
                if b >= a {
                    b += 1;
                }
                cols.swap(a, b);
            }
        }
        MutationKind::SwapCtrlTarg => {
            let pairs: Vec<(usize, usize, usize)> = cols
                .iter()
                .enumerate()
                .flat_map(|(c, col)| {
                    col.iter().enumerate().filter_map(move |(q, g)| match *g {
                        Gate::CxControl { partner } => Some((c, q, partner)),
                        _ => None,
                    })
                })
                .collect();
            if !pairs.is_empty() {
                let (c, control, target) = pairs[rng.random_range(..pairs.len())];
                cols[c][control] = Gate::CxTarget { partner: target };
                cols[c][target] = Gate::CxControl { partner: control };
            }
        }
        MutationKind::AddRandomColumn => {
            let col = random_column(n, gateset, rng);
            let at = rng.random_range(..=cols.len());
            cols.insert(at, col);
        }
        MutationKind::DeleteColumn => {
            if cols.len() > 1 {
                let at = rng.random_range(..cols.len());
                cols.remove(at);
            }
        }
        MutationKind::AddCx => {
            if n >= 2 {
                let control = rng.random_range(..n);
                let mut target = rng.random_range(..n - 1);
                if target >= control {
                    target += 1;
                }
                let mut col = vec![Gate::Id; n];
                col[control] = Gate::CxControl { partner: target };
                col[target] = Gate::CxTarget { partner: control };
                let at = rng.random_range(..=cols.len());
                cols.insert(at, col);
            }
        }
        MutationKind::AddSingleGate => {
            let mut col = vec![Gate::Id; n];
            col[rng.random_range(..n)] = gateset.random_single(rng);
            let at = rng.random_range(..=cols.len());
            cols.insert(at, col);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::circuit::random_solution;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn cx01() -> Vec<Gate> {
        vec![Gate::CxControl { partner: 1 }, Gate::CxTarget { partner: 0 }]
    }

    #[test]
    fn mutate_gate_on_cx_breaks_the_pair() {
        let m = SolutionMatrix::from_columns(2, vec![cx01()]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        for _ in 0..50 {
            let out = mutate(&m, MutationKind::MutateGate, &GateSet::standard(), &mut rng);
            out.validate().unwrap();
            assert!(out.columns()[0].iter().all(Gate::is_single_qubit));
        }
    }

    #[test]
    fn delete_keeps_last_column() {
        let m = SolutionMatrix::from_columns(2, vec![vec![Gate::X, Gate::Sx]]).unwrap();
        let out = mutate(&m, MutationKind::DeleteColumn, &GateSet::standard(), &mut ChaCha8Rng::seed_from_u64(1));
        assert_eq!(out, m);
    }

    #[test]
    fn add_cx_appends_one_pair() {
        let m = SolutionMatrix::from_columns(2, vec![vec![Gate::X, Gate::Id], vec![Gate::Id, Gate::Sx]]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..20 {
            let out = mutate(&m, MutationKind::AddCx, &GateSet::standard(), &mut rng);
            assert_eq!(out.depth(), 3);
            let cx_cols: Vec<_> = out.columns().iter().filter(|c| c.iter().any(Gate::is_cx)).collect();
            assert_eq!(cx_cols.len(), 1);
            assert!(cx_cols[0].iter().all(Gate::is_cx));
            out.validate().unwrap();
        }
    }

    #[test]
    fn add_single_gate_pads_with_identity() {
        let m = SolutionMatrix::identity(4, 2);
        let set = GateSet::new(vec![crate::circuit::GateTag::X]).unwrap();
        let out = mutate(&m, MutationKind::AddSingleGate, &set, &mut ChaCha8Rng::seed_from_u64(3));
        assert_eq!(out.depth(), 3);
        let xs: usize = out.columns().iter().flatten().filter(|g| **g == Gate::X).count();
        assert_eq!(xs, 1);
    }

    #[test]
    fn preconditions_fall_back_to_noop() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let no_cx = SolutionMatrix::identity(3, 2);
        assert_eq!(mutate(&no_cx, MutationKind::SwapCtrlTarg, &GateSet::standard(), &mut rng), no_cx);
        let only_cx = SolutionMatrix::from_columns(2, vec![cx01()]).unwrap();
        assert_eq!(mutate(&only_cx, MutationKind::GateSwap, &GateSet::standard(), &mut rng), only_cx);
        assert_eq!(mutate(&only_cx, MutationKind::ColumnSwap, &GateSet::standard(), &mut rng), only_cx);
        let one_qubit = SolutionMatrix::identity(1, 2);
        assert_eq!(mutate(&one_qubit, MutationKind::AddCx, &GateSet::standard(), &mut rng), one_qubit);
    }

    #[test]
    fn swap_ctrl_targ_flips_roles() {
        let m = SolutionMatrix::from_columns(2, vec![cx01()]).unwrap();
        let out = mutate(&m, MutationKind::SwapCtrlTarg, &GateSet::standard(), &mut ChaCha8Rng::seed_from_u64(5));
        assert_eq!(
            out.columns()[0],
            vec![Gate::CxTarget { partner: 1 }, Gate::CxControl { partner: 0 }]
        );
    }

    #[test]
    fn gate_swap_exchanges_single_qubit_cells() {
        let m = SolutionMatrix::from_columns(2, vec![vec![Gate::X, Gate::H]]).unwrap();
        let out = mutate(&m, MutationKind::GateSwap, &GateSet::standard(), &mut ChaCha8Rng::seed_from_u64(6));
        assert_eq!(out.columns()[0], vec![Gate::H, Gate::X]);
    }

    #[test]
    fn every_kind_keeps_genomes_valid() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let set = GateSet::standard();
        for _ in 0..200 {
            let m = random_solution(rng.random_range(1..=5), (1, 6), &set, &mut rng).unwrap();
            for kind in MutationKind::ALL {
                mutate(&m, kind, &set, &mut rng).validate().unwrap();
            }
        }
    }
}
