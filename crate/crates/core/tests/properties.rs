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

use std::f64::consts::TAU;

use num_complex::Complex64;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use qcevo::circuit::{random_solution, wrap_angle, GateSet};
use qcevo::compactor::compact;
use qcevo::evolution::crossover::{single_point_crossover, uniform_column_crossover};
use qcevo::evolution::{fitness, mutate, normalized_depth, survivor_replacement_by, MutationKind};
use qcevo::{fidelity, simulate, Gate, SolutionMatrix, Statevector};

fn circuit(seed: u64, n: usize, lo: usize, hi: usize) -> SolutionMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_solution(n, (lo, hi), &GateSet::standard(), &mut rng).unwrap()
}

fn arb_circuit() -> impl Strategy<Value = SolutionMatrix> {
    (any::<u64>(), 1usize..=6, 1usize..=30).prop_map(|(seed, n, d)| circuit(seed, n, 1, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn random_solutions_validate_within_range(seed in any::<u64>(), n in 1usize..=8, lo in 1usize..=10, extra in 0usize..10) {
        let m = circuit(seed, n, lo, lo + extra);
        prop_assert!(m.validate().is_ok());
        prop_assert!((lo..=lo + extra).contains(&m.depth()));
        prop_assert!(m.columns().iter().all(|c| c.len() == n));
    }

    #[test]
    fn cx_partner_is_an_involution(m in arb_circuit()) {
        for (c, col) in m.columns().iter().enumerate() {
            for (q, g) in col.iter().enumerate() {
                if let Some(p) = g.partner() {
                    prop_assert_ne!(p, q);
                    prop_assert_eq!(m.gate(p, c).partner(), Some(q));
                    prop_assert_ne!(matches!(m.gate(p, c), Gate::CxControl { .. }), matches!(g, Gate::CxControl { .. }));
                }
            }
        }
    }

    #[test]
    fn angles_stay_in_range(theta in -1e6f64..1e6) {
        let w = wrap_angle(theta);
        prop_assert!((0.0..TAU).contains(&w));
        prop_assert!(((w - theta) / TAU - ((w - theta) / TAU).round()).abs() < 1e-9);
    }

    #[test]
    fn simulation_preserves_norm(m in arb_circuit()) {
        let s = simulate(&m).unwrap();
        prop_assert!((s.norm_sqr() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn fidelity_ignores_global_phase(m in arb_circuit(), phi in 0.0f64..TAU) {
        let s = simulate(&m).unwrap();
        let rot = Complex64::from_polar(1.0, phi);
        let t = Statevector::from_amplitudes(s.amplitudes().iter().map(|a| a * rot).collect()).unwrap();
        prop_assert!((fidelity(&s, &t).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn fidelity_is_symmetric_and_bounded(a in arb_circuit(), seed in any::<u64>()) {
        let b = circuit(seed, a.num_qubits(), 1, 10);
        let (sa, sb) = (simulate(&a).unwrap(), simulate(&b).unwrap());
        let f = fidelity(&sa, &sb).unwrap();
        prop_assert!((0.0..=1.0).contains(&f));
        prop_assert!((f - fidelity(&sb, &sa).unwrap()).abs() < 1e-15);
    }

    #[test]
    fn compaction_is_sound_monotone_and_idempotent(m in arb_circuit()) {
        let c = compact(&m);
        prop_assert!(c.validate().is_ok());
        prop_assert!(c.depth() <= m.depth());
        prop_assert_eq!(&compact(&c), &c);
        let f = fidelity(&simulate(&m).unwrap(), &simulate(&c).unwrap()).unwrap();
        prop_assert!((f - 1.0).abs() < 1e-9);
    }

    #[test]
    fn operators_preserve_validity(a in arb_circuit(), seed in any::<u64>(), k in 0usize..8) {
        let gs = GateSet::standard();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let b = circuit(seed ^ 0x5eed, a.num_qubits(), 1, 12);
        let kind = MutationKind::ALL[k];
        prop_assert!(mutate(&a, kind, &gs, &mut rng).validate().is_ok());
        let sp = single_point_crossover(&a, &b, &mut rng);
        let uc = uniform_column_crossover(&a, &b, &mut rng);
        prop_assert!(sp.validate().is_ok());
        prop_assert!(uc.validate().is_ok());
        prop_assert!(sp.depth() == a.depth() || sp.depth() == b.depth());
        prop_assert!(uc.depth() == a.depth() || uc.depth() == b.depth());
    }

    #[test]
    fn clones_are_independent(m in arb_circuit(), seed in any::<u64>()) {
        let before = m.clone();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let copy = m.clone();
        let _ = mutate(&copy, MutationKind::AddRandomColumn, &GateSet::standard(), &mut rng);
        prop_assert_eq!(&m, &before);
        prop_assert_eq!(&copy.clone(), &m);
    }

    #[test]
    fn fitness_matches_weighted_sum(f in 0.0f64..=1.0, d in 2usize..100, u in 0.0f64..1.0, alpha in 0.1f64..50.0, beta in 0.1f64..50.0) {
        let delta = 1 + ((u * d as f64) as usize).min(d - 1);
        let b = fitness(f, delta, d, alpha, beta).unwrap();
        let dn = (delta as f64 - 1.0) / (d as f64 - 1.0);
        prop_assert!((b.total - (alpha * f - beta * dn)).abs() < 1e-12);
        prop_assert!((0.0..=1.0).contains(&b.depth_norm));
        prop_assert!((b.depth_score - (1.0 - dn)).abs() < 1e-15);
        prop_assert!((b.infidelity - (1.0 - f)).abs() < 1e-15);
    }

    #[test]
    fn survivors_keep_size_and_best(pop in prop::collection::vec(-10.0f64..10.0, 2..40), kids in prop::collection::vec(-10.0f64..10.0, 0..40), r in 0.0f64..1.0) {
        let n = ((r * kids.len() as f64) as usize).min(pop.len() - 1);
        let best_before = pop.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        let mut p = pop.clone();
        survivor_replacement_by(&mut p, kids.clone(), n, |x| *x).unwrap();
        prop_assert_eq!(p.len(), pop.len());
        let best_after = p.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        prop_assert!(best_after >= best_before);
    }
}

#[test]
fn deeper_than_target_is_penalized_beyond_one() {
    assert!((normalized_depth(30, 20).unwrap() - 29.0 / 19.0).abs() < 1e-15);
    assert!(normalized_depth(5, 1).is_err());
}

#[test]
fn rz_wraps_on_construction() {
    assert_eq!(Gate::rz(TAU), Gate::rz(0.0));
    assert!(matches!(Gate::rz(-0.5), Gate::Rz { theta } if (theta - (TAU - 0.5)).abs() < 1e-15));
}
