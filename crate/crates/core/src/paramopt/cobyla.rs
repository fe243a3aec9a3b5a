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

//! Derivative-free minimization by linear approximation on a simplex.
//!
//! This is the unconstrained core of Powell's COBYLA: `n + 1` interpolation
//! points define a linear model of the objective, each iteration steps to the
//! model minimizer on a trust-region sphere of radius `rho`, and `rho` is
//! halved whenever the model stops producing real decrease. Geometry steps
//! keep the simplex from collapsing.

use nalgebra::{DMatrix, DVector};

/// Simplex acceptability: minimum distance from a vertex to the opposite face.
const ALPHA: f64 = 0.25;
/// Simplex acceptability: maximum edge length from the pole.
const BETA: f64 = 2.1;
/// Length of a geometry-improving step, relative to `rho`.
const GAMMA: f64 = 0.5;
const DELTA: f64 = 1.1;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Cobyla {
    pub initial_radius: f64,
    pub final_radius: f64,
    /// Evaluations allowed beyond the one at the starting point.
    pub max_evaluations: usize,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Minimum {
    pub x: Vec<f64>,
    pub value: f64,
    /// Evaluations spent, not counting the starting point.
    pub evaluations: usize,
}

struct Budget<F> {
    f: F,
    used: usize,
    limit: usize,
    best_x: Vec<f64>,
    best_f: f64,
}

impl<F: FnMut(&[f64]) -> f64> Budget<F> {
    fn eval(&mut self, x: &DVector<f64>) -> Option<f64> {
        if self.used >= self.limit {
            return None;
        }
        self.used += 1;
        let v = (self.f)(x.as_slice());
        if v < self.best_f {
            self.best_f = v;
            self.best_x = x.as_slice().to_vec();
        }
        Some(v)
    }
}

impl Cobyla {
    /// Minimizes `f` from `x0`, returning the best point seen. The result is
    /// never worse than `f(x0)`.
    pub fn minimize<F: FnMut(&[f64]) -> f64>(&self, mut f: F, x0: &[f64]) -> Minimum {
        let f_start = f(x0);
        let mut budget = Budget {
            f,
            used: 0,
            limit: self.max_evaluations,
            best_x: x0.to_vec(),
            best_f: f_start,
        };
        self.search(&mut budget, x0, f_start);
        Minimum {
            x: budget.best_x,
            value: budget.best_f,
            evaluations: budget.used,
        }
    }

    fn search<F: FnMut(&[f64]) -> f64>(&self, budget: &mut Budget<F>, x0: &[f64], f_start: f64) {
        let n = x0.len();
        if n == 0 || !f_start.is_finite() {
            return;
        }
        let final_radius = self.final_radius.min(self.initial_radius);
        let mut rho = self.initial_radius;

        // Pole, displacement rows of the other vertices, and the inverse of
        // that displacement matrix (columns are face normals).
        let mut pole = DVector::from_column_slice(x0);
        let mut f_pole = f_start;
        let mut sim = DMatrix::<f64>::identity(n, n) * rho;
        let mut simi = DMatrix::<f64>::identity(n, n) / rho;
        let mut fv = DVector::<f64>::zeros(n);
        for j in 0..n {
            let mut x = pole.clone();
            x[j] += rho;
            let Some(v) = budget.eval(&x) else { return };
            fv[j] = v;
        }

        let mut last_was_geometry = false;
        let mut updates = 0usize;
        loop {
            // Keep the best vertex at the pole.
            let jmin = fv.imin();
            if fv[jmin] < f_pole {
                let shift = sim.row(jmin).transpose();
                pole += &shift;
                std::mem::swap(&mut f_pole, &mut fv[jmin]);
                for i in 0..n {
                    if i != jmin {
                        let row = sim.row(i) - shift.transpose();
                        sim.set_row(i, &row);
                    }
                }
                sim.set_row(jmin, &(-shift.transpose()));
                let col_sum = simi.column_sum();
                simi.set_column(jmin, &(-col_sum));
            }
            if f_pole <= 0.0 {
                return;
            }

            // Numerical drift in the rank-one updates is reset periodically.
            if updates > 4 * n {
                updates = 0;
                match sim.clone().try_inverse() {
                    Some(inv) => simi = inv,
                    None => return,
                }
            }

            let gradient = &simi * (&fv - DVector::from_element(n, f_pole));
            let par_sig = ALPHA * rho;
            let par_eta = BETA * rho;
            let vsig: Vec<f64> = (0..n).map(|j| 1.0 / simi.column(j).norm()).collect();
            let veta: Vec<f64> = (0..n).map(|j| sim.row(j).norm()).collect();
            let acceptable =
                vsig.iter().all(|&s| s >= par_sig) && veta.iter().all(|&e| e <= par_eta);

            if !acceptable && !last_was_geometry {
                let jdrop = if veta.iter().any(|&e| e > par_eta) {
                    argmax(&veta)
                } else {
                    argmin(&vsig)
                };
                let mut step = simi.column(jdrop) * (GAMMA * rho * vsig[jdrop]);
                if gradient.dot(&step) > 0.0 {
                    step = -step;
                }
                let Some(v) = budget.eval(&(&pole + &step)) else { return };
                replace_vertex(&mut sim, &mut simi, &mut fv, jdrop, &step, v);
                updates += 1;
                last_was_geometry = true;
                continue;
            }
            last_was_geometry = false;

            let gnorm = gradient.norm();
            if gnorm.is_finite() && gnorm > 0.0 {
                let step = &gradient * (-rho / gnorm);
                let predicted = rho * gnorm;
                let Some(v) = budget.eval(&(&pole + &step)) else { return };
                let actual = f_pole - v;

                let mut jdrop = None;
                let mut best = if actual <= 0.0 { 1.0 } else { 0.0 };
                let mut sigbar = vec![0.0; n];
                for j in 0..n {
                    let t = step.dot(&simi.column(j)).abs();
                    if t > best {
                        jdrop = Some(j);
                        best = t;
                    }
                    sigbar[j] = t * vsig[j];
                }
                let mut edge_max = DELTA * rho;
                for j in 0..n {
                    if sigbar[j] >= par_sig || sigbar[j] >= vsig[j] {
                        let dist = if actual > 0.0 {
                            (&step - sim.row(j).transpose()).norm()
                        } else {
                            veta[j]
                        };
                        if dist > edge_max {
                            jdrop = Some(j);
                            edge_max = dist;
                        }
                    }
                }
                if let Some(j) = jdrop {
                    replace_vertex(&mut sim, &mut simi, &mut fv, j, &step, v);
                    updates += 1;
                }
                if actual > 0.0 && actual >= 0.1 * predicted {
                    continue;
                }
            }
            if !acceptable {
                continue;
            }
            if rho <= final_radius {
                return;
            }
            rho *= 0.5;
            if rho <= 1.5 * final_radius {
                rho = final_radius;
            }
        }
    }
}

/// Swaps vertex `j` for `pole + step` and updates the inverse in O(n²).
fn replace_vertex(
    sim: &mut DMatrix<f64>,
    simi: &mut DMatrix<f64>,
    fv: &mut DVector<f64>,
    j: usize,
    step: &DVector<f64>,
    value: f64,
) {
    let n = fv.len();
    sim.set_row(j, &step.transpose());
    fv[j] = value;
    let scale = step.dot(&simi.column(j));
    let cj = simi.column(j) / scale;
    simi.set_column(j, &cj);
    for k in 0..n {
        if k != j {
            let t = step.dot(&simi.column(k));
            let ck = simi.column(k) - &cj * t;
            simi.set_column(k, &ck);
        }
    }
}

fn argmax(v: &[f64]) -> usize {
    (0..v.len()).fold(0, |b, i| if v[i] > v[b] { i } else { b })
}

fn argmin(v: &[f64]) -> usize {
    (0..v.len()).fold(0, |b, i| if v[i] < v[b] { i } else { b })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn solver(max: usize) -> Cobyla {
        Cobyla {
            initial_radius: 0.5,
            final_radius: 1e-8,
            max_evaluations: max,
        }
    }

    #[test]
    fn quadratic_bowl() {
        let f = |x: &[f64]| (x[0] - 1.0).powi(2) + 3.0 * (x[1] + 2.0).powi(2) + 0.5 * (x[2] - 0.3).powi(2);
        let m = solver(2000).minimize(f, &[0.0, 0.0, 0.0]);
        assert!(m.value < 1e-10, "{m:?}");
        assert!((m.x[0] - 1.0).abs() < 1e-4);
        assert!((m.x[1] + 2.0).abs() < 1e-4);
    }

    #[test]
    fn rosenbrock() {
        let f = |x: &[f64]| 100.0 * (x[1] - x[0] * x[0]).powi(2) + (1.0 - x[0]).powi(2);
        let m = solver(20_000).minimize(f, &[-1.2, 1.0]);
        // Linear models crawl along the curved valley; only closeness is checked.
        assert!(m.value < 1e-4, "{m:?}");
        assert!((m.x[0] - 1.0).abs() < 1e-2 && (m.x[1] - 1.0).abs() < 2e-2);
    }

    #[test]
    fn respects_budget_and_never_worsens() {
        let f = |x: &[f64]| x.iter().map(|v| v.sin() + 1.0).sum::<f64>();
        let x0 = [0.3, -0.2, 1.0, 2.0];
        let start = f(&x0);
        for max in [1, 2, 5, 17] {
            let mut calls = 0;
            let m = solver(max).minimize(
                |x| {
                    calls += 1;
                    f(x)
                },
                &x0,
            );
            assert!(m.evaluations <= max);
            assert_eq!(calls, m.evaluations + 1);
            assert!(m.value <= start);
            assert_eq!(f(&m.x), m.value);
        }
    }

    #[test]
    fn empty_parameter_vector() {
        let m = solver(10).minimize(|_| 0.5, &[]);
        assert_eq!(m.evaluations, 0);
        assert_eq!(m.value, 0.5);
    }

    #[test]
    fn stops_at_zero() {
        let m = solver(1000).minimize(|x| x[0].abs(), &[0.0]);
        assert_eq!(m.evaluations, 1);
    }
}
