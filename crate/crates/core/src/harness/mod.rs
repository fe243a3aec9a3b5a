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

//! Experiment driver: target generation, multi-seed runs, metric export.

pub mod experiment;
pub mod qasm;
pub mod target;

pub use experiment::{run_experiment, ExperimentSpec, SeedSummary, Summary, CSV_HEADER};
pub use qasm::{export_qasm, to_qasm};
pub use target::{generate_target, load_target, write_target};
