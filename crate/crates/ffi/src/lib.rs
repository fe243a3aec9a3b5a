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

//! C ABI over the qcevo library.
//!
//! Every fallible function returns a [`QcevoStatus`] and writes its result
//! through an out-pointer. On failure the out-pointer is left untouched and
//! [`qcevo_last_error`] describes the error for the calling thread.
//!
//! Handles are opaque and owned by the caller once returned; each kind has a
//! matching `_free` function. Strings returned through `char **` are released
//! with [`qcevo_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcevo::compactor::compact;
use qcevo::evolution::{fitness, GenerationRecord, RunOutcome};
use qcevo::harness::{generate_target, to_qasm};
use qcevo::{fidelity, simulate, EAConfig, Engine, Error, Problem, SolutionMatrix, Statevector};

/// Result codes. Zero is success.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QcevoStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Config = 3,
    Invariant = 4,
    DimensionMismatch = 5,
    ParamMismatch = 6,
    Io = 7,
    Json = 8,
    Toml = 9,
    OutOfRange = 10,
    Panic = 11,
}

/// A validated circuit genome.
pub struct QcevoCircuit(SolutionMatrix);

/// A normalized statevector.
pub struct QcevoState(Statevector);

/// The records and best individual of one evolutionary run.
pub struct QcevoRun(RunOutcome);

/// One row of per-generation metrics.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QcevoRecord {
    pub generation: usize,
    pub best_fitness: f64,
    pub mean_fitness: f64,
    pub best_fidelity: f64,
    pub best_depth: usize,
    pub depth_reduction_pct: f64,
}

impl From<&GenerationRecord> for QcevoRecord {
    fn from(r: &GenerationRecord) -> Self {
        Self {
            generation: r.generation,
            best_fitness: r.best_fitness,
            mean_fitness: r.mean_fitness,
            best_fidelity: r.best_fidelity,
            best_depth: r.best_depth,
            depth_reduction_pct: r.depth_reduction_pct,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> QcevoStatus {
    match e {
        Error::Config(_) => QcevoStatus::Config,
        Error::Invariant(_) => QcevoStatus::Invariant,
        Error::DimensionMismatch { .. } => QcevoStatus::DimensionMismatch,
        Error::ParamMismatch { .. } => QcevoStatus::ParamMismatch,
        Error::Generation { source, .. } => status_of(source),
        Error::Io { .. } => QcevoStatus::Io,
        Error::Json(_) => QcevoStatus::Json,
        Error::Toml(_) => QcevoStatus::Toml,
    }
}

struct Fail(QcevoStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(QcevoStatus::NullPointer, format!("{what} is null"))
}

/// Runs `body`, converting errors and panics into a status code.
fn guard(body: impl FnOnce() -> Result<(), Fail>) -> QcevoStatus {
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => QcevoStatus::Ok,
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".to_string());
            set_last_error(format!("panic: {msg}"));
            QcevoStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|e| Fail(QcevoStatus::InvalidUtf8, format!("{what}: {e}")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn boxed<T>(value: T) -> *mut T {
    Box::into_raw(Box::new(value))
}

fn c_string(s: String) -> *mut c_char {
    CString::new(s).expect("generated text has no nul bytes").into_raw()
}

/// Message of the last failed call on this thread, or null if none failed.
/// The pointer stays valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn qcevo_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn qcevo_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates a circuit from its JSON form.
///
/// # Safety
/// `json` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_from_json(json: *const c_char, out: *mut *mut QcevoCircuit) -> QcevoStatus {
    guard(|| {
        let text = str_arg(json, "json")?;
        let m = SolutionMatrix::from_json(text)?;
        write_out(out, boxed(QcevoCircuit(m)))
    })
}

/// Serializes a circuit to JSON.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_to_json(circuit: *const QcevoCircuit, out: *mut *mut c_char) -> QcevoStatus {
    guard(|| {
        let c = ref_arg(circuit, "circuit")?;
        write_out(out, c_string(c.0.to_json()))
    })
}

/// Renders a circuit as OpenQASM 2.0.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_to_qasm(circuit: *const QcevoCircuit, out: *mut *mut c_char) -> QcevoStatus {
    guard(|| {
        let c = ref_arg(circuit, "circuit")?;
        write_out(out, c_string(to_qasm(&c.0)))
    })
}

/// Draws a compact random target circuit with exactly `depth` columns.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_generate_target(
    num_qubits: usize,
    depth: usize,
    seed: u64,
    out: *mut *mut QcevoCircuit,
) -> QcevoStatus {
    guard(|| {
        let (m, _) = generate_target(num_qubits, depth, seed)?;
        write_out(out, boxed(QcevoCircuit(m)))
    })
}

/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_num_qubits(circuit: *const QcevoCircuit, out: *mut usize) -> QcevoStatus {
    guard(|| write_out(out, ref_arg(circuit, "circuit")?.0.num_qubits()))
}

/// Column count of the circuit.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_depth(circuit: *const QcevoCircuit, out: *mut usize) -> QcevoStatus {
    guard(|| write_out(out, ref_arg(circuit, "circuit")?.0.depth()))
}

/// Returns a compacted copy; the input is unchanged.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_compact(
    circuit: *const QcevoCircuit,
    out: *mut *mut QcevoCircuit,
) -> QcevoStatus {
    guard(|| {
        let c = ref_arg(circuit, "circuit")?;
        write_out(out, boxed(QcevoCircuit(compact(&c.0))))
    })
}

/// # Safety
/// `circuit` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn qcevo_circuit_free(circuit: *mut QcevoCircuit) {
    if !circuit.is_null() {
        drop(Box::from_raw(circuit));
    }
}

/// Simulates the circuit from `|0…0⟩`.
///
/// # Safety
/// `circuit` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_simulate(circuit: *const QcevoCircuit, out: *mut *mut QcevoState) -> QcevoStatus {
    guard(|| {
        let c = ref_arg(circuit, "circuit")?;
        write_out(out, boxed(QcevoState(simulate(&c.0)?)))
    })
}

/// Number of amplitudes, `2^n`.
///
/// # Safety
/// `state` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_state_len(state: *const QcevoState, out: *mut usize) -> QcevoStatus {
    guard(|| write_out(out, ref_arg(state, "state")?.0.amplitudes().len()))
}

/// Copies amplitudes as interleaved `re, im` pairs into `buf`, which must
/// hold `2 * len` doubles where `len` equals [`qcevo_state_len`].
/// Amplitude index bit `n - 1 - q` belongs to qubit `q`.
///
/// # Safety
/// `state` must be a live handle; `buf` must point to `2 * len` doubles.
#[no_mangle]
pub unsafe extern "C" fn qcevo_state_amplitudes(state: *const QcevoState, buf: *mut f64, len: usize) -> QcevoStatus {
    guard(|| {
        let amps = ref_arg(state, "state")?.0.amplitudes();
        if len != amps.len() {
            return Err(Fail(
                QcevoStatus::OutOfRange,
                format!("buffer holds {len} amplitudes, state has {}", amps.len()),
            ));
        }
        if buf.is_null() {
            return Err(null("buffer"));
        }
        let dst = std::slice::from_raw_parts_mut(buf, 2 * len);
        for (pair, a) in dst.chunks_exact_mut(2).zip(amps) {
            pair[0] = a.re;
            pair[1] = a.im;
        }
        Ok(())
    })
}

/// # Safety
/// `state` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn qcevo_state_free(state: *mut QcevoState) {
    if !state.is_null() {
        drop(Box::from_raw(state));
    }
}

/// Pure-state fidelity `|⟨a|b⟩|`.
///
/// # Safety
/// `a` and `b` must be live handles; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_fidelity(a: *const QcevoState, b: *const QcevoState, out: *mut f64) -> QcevoStatus {
    guard(|| {
        let f = fidelity(&ref_arg(a, "a")?.0, &ref_arg(b, "b")?.0)?;
        write_out(out, f)
    })
}

/// `alpha * fidelity - beta * (depth - 1) / (target_depth - 1)`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_fitness(
    fidelity: f64,
    depth: usize,
    target_depth: usize,
    alpha: f64,
    beta: f64,
    out: *mut f64,
) -> QcevoStatus {
    guard(|| write_out(out, fitness(fidelity, depth, target_depth, alpha, beta)?.total))
}

/// Runs one seeded evolutionary search against `target`. `config_toml` may
/// be null for the default configuration; otherwise it uses the same keys as
/// the command-line config file.
///
/// # Safety
/// `target` must be a live handle; `config_toml` null or nul-terminated;
/// `out` writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_evolve(
    target: *const QcevoCircuit,
    config_toml: *const c_char,
    seed: u64,
    out: *mut *mut QcevoRun,
) -> QcevoStatus {
    guard(|| {
        let t = ref_arg(target, "target")?;
        let cfg = if config_toml.is_null() {
            EAConfig::default()
        } else {
            EAConfig::from_toml(str_arg(config_toml, "config")?)?
        };
        if out.is_null() {
            return Err(null("output pointer"));
        }
        let engine = Engine::new(Problem::new(t.0.clone())?, cfg)?;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let outcome = engine.run(&mut rng, |_| Ok(()))?;
        write_out(out, boxed(QcevoRun(outcome)))
    })
}

/// Number of records, `generations + 1`.
///
/// # Safety
/// `run` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_run_record_count(run: *const QcevoRun, out: *mut usize) -> QcevoStatus {
    guard(|| write_out(out, ref_arg(run, "run")?.0.records.len()))
}

/// # Safety
/// `run` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_run_record(run: *const QcevoRun, index: usize, out: *mut QcevoRecord) -> QcevoStatus {
    guard(|| {
        let records = &ref_arg(run, "run")?.0.records;
        let r = records.get(index).ok_or_else(|| {
            Fail(
                QcevoStatus::OutOfRange,
                format!("record {index} out of range for {} records", records.len()),
            )
        })?;
        write_out(out, QcevoRecord::from(r))
    })
}

/// Copy of the fittest circuit of the final population.
///
/// # Safety
/// `run` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn qcevo_run_best(run: *const QcevoRun, out: *mut *mut QcevoCircuit) -> QcevoStatus {
    guard(|| {
        let best = ref_arg(run, "run")?.0.best.solution().clone();
        write_out(out, boxed(QcevoCircuit(best)))
    })
}

/// # Safety
/// `run` must be null or a live handle; it is invalid afterwards.
#[no_mangle]
pub unsafe extern "C" fn qcevo_run_free(run: *mut QcevoRun) {
    if !run.is_null() {
        drop(Box::from_raw(run));
    }
}
