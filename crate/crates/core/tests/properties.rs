// Copyright 2026 The zxsimp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

mod common;

use proptest::prelude::*;

use zxsimp::graph_like::to_graph_like;
use zxsimp::random::{random_diagram, rng, DiagramShape};
use zxsimp::semantics::{contract_closed, interpret, proportional_ratio};
use zxsimp::{simplify, Diagram, Dim};

use common::close;

const TOL: f64 = 1e-9;

fn dim_strategy() -> impl Strategy<Value = Dim> {
    prop_oneof![Just(Dim::Qubit), Just(Dim::Qutrit)]
}

fn open(seed: u64, dim: Dim, spiders: usize, inputs: usize, outputs: usize) -> Diagram {
    let shape = DiagramShape {
        inputs,
        outputs,
        hbox_rate: 0.2,
        generic_rate: 0.3,
        ..DiagramShape::closed(spiders, spiders + 1)
    };
    random_diagram(&mut rng(seed), dim, shape)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn sequential_composition_is_matrix_product(seed in any::<u64>(), dim in dim_strategy(), n in 1usize..4, m in 1usize..4) {
        let first = open(seed, dim, n, 1, 2);
        let second = open(seed ^ 0x9e37, dim, m, 2, 1);
        let composed = second.then_after(&first).unwrap();
        let lhs = interpret(&composed).unwrap();
        let rhs = interpret(&second).unwrap().matmul(&interpret(&first).unwrap()).unwrap();
        prop_assert!(lhs.approx_eq(&rhs, TOL));
    }

    #[test]
    fn parallel_composition_is_kronecker(seed in any::<u64>(), dim in dim_strategy(), n in 1usize..3, m in 1usize..3) {
        let a = open(seed, dim, n, 1, 1);
        let b = open(seed.wrapping_add(1), dim, m, 1, 1);
        let lhs = interpret(&a.tensor(&b).unwrap()).unwrap();
        let rhs = interpret(&a).unwrap().kron(&interpret(&b).unwrap());
        prop_assert!(lhs.approx_eq(&rhs, TOL));
    }

    #[test]
    fn adjoint_commutes_with_interpretation(seed in any::<u64>(), dim in dim_strategy(), n in 1usize..4) {
        let a = open(seed, dim, n, 1, 2);
        let lhs = interpret(&a.adjoint()).unwrap();
        let rhs = interpret(&a).unwrap().adjoint();
        prop_assert!(lhs.approx_eq(&rhs, TOL));
    }

    #[test]
    fn json_round_trip_is_lossless(seed in any::<u64>(), dim in dim_strategy(), n in 1usize..5) {
        let a = open(seed, dim, n, 1, 1);
        let b = Diagram::from_json(&a.to_json()).unwrap();
        prop_assert_eq!(&a, &b);
    }

    #[test]
    fn graph_like_conversion_is_exact(seed in any::<u64>(), dim in dim_strategy(), n in 1usize..5) {
        let mut a = open(seed, dim, n, 1, 1);
        if dim == Dim::Qutrit {
            a = zxsimp::qutrit::reduce_h_box_chain(&a).unwrap();
        }
        let g = to_graph_like(&a);
        prop_assert!(g.is_graph_like());
        let lhs = interpret(&a).unwrap();
        let rhs = interpret(&g.to_diagram()).unwrap();
        let ratio = proportional_ratio(&lhs, &rhs, TOL).unwrap();
        prop_assert!(ratio.is_proportional());
        if let Some(r) = ratio.ratio() {
            prop_assert!((r - 1.0).norm() < 1e-8, "ratio {}", r);
        }
    }

    #[test]
    fn simplified_scalar_matches_contraction(seed in any::<u64>(), dim in dim_strategy(), n in 2usize..9) {
        let shape = DiagramShape { hbox_rate: 0.2, ..DiagramShape::closed(n, n + 3) };
        let a = random_diagram(&mut rng(seed), dim, shape);
        let s = simplify(&a).unwrap();
        prop_assert!(!s.partial);
        let z = contract_closed(&a).unwrap();
        prop_assert!(close(s.scalar.to_complex(), z, TOL), "{} vs {}", s.scalar, z);
    }
}
