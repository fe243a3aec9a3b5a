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

//! Hybrid evolutionary search for shallow quantum circuits.
//!
//! A population of circuit genomes ([`circuit::SolutionMatrix`]) is evolved
//! to maximize `alpha * fidelity - beta * normalized_depth` against a target
//! state. The hybrid variant periodically tunes the RZ angles of a random
//! subset of individuals with a derivative-free optimizer, and every child is
//! simplified by a semantics-preserving compaction pass.

pub mod circuit;
pub mod compactor;
pub mod error;
pub mod evolution;
pub mod harness;
pub mod paramopt;
pub mod simulator;

pub use circuit::{Gate, GateSet, GateTag, SolutionMatrix};
pub use error::{Error, Result};
pub use evolution::{EAConfig, Engine, Individual, InitMode, Problem, Variant};
pub use simulator::{fidelity, simulate, Statevector};
