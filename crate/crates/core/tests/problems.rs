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

use num_complex::Complex64;
use rand::Rng;

use zxsimp::problems::colouring::brute_force_colourings;
use zxsimp::problems::{
    count_colourings, direct_potts_sum, evaluate_potts, jones_at_root, kauffman_bracket, pd_to_signed_graph, t_of_d,
    Graph, Laurent, Method, PdCode, Sign, SignedGraph,
};
use zxsimp::random::{random_signed_graph, random_simple_graph, rng};

use common::{bracket_by_expansion, chromatic, close};

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn single_edge_potts_by_hand() {
    // t(2) = i, so a +-box has -1/t = i on its diagonal: 2·i + 2·1
    let g = SignedGraph::new(2, vec![(0, 1, Sign::Plus)]).unwrap();
    let p = evaluate_potts(&g, 2).unwrap();
    assert_eq!(p.method, Method::Stabilizer);
    assert!(close(p.value, c(2.0, 2.0), 1e-12));
    assert!(close(t_of_d(2), c(0.0, 1.0), 1e-12));
}

#[test]
fn potts_beyond_the_stabilizer_range_uses_the_direct_sum() {
    let g = SignedGraph::new(3, vec![(0, 1, Sign::Plus), (1, 2, Sign::Minus), (0, 2, Sign::Plus)]).unwrap();
    let p = evaluate_potts(&g, 5).unwrap();
    assert_eq!(p.method, Method::Oracle);
    assert!(p.exact.is_none());
    assert!(close(p.value, direct_potts_sum(&g, 5).unwrap(), 1e-12));
    assert!(evaluate_potts(&g, 1).is_err());
    assert!(SignedGraph::new(2, vec![(0, 2, Sign::Plus)]).is_err());
}

#[test]
fn potts_float_and_exact_routes_agree() {
    let mut r = rng(21);
    for d in 2..=4 {
        for _ in 0..30 {
            let n = r.gen_range(2..=6);
            let m = r.gen_range(1..=8);
            let edges = random_signed_graph(&mut r, n, m)
                .into_iter()
                .map(|(u, v, s)| (u, v, if s { Sign::Plus } else { Sign::Minus }))
                .collect();
            let g = SignedGraph::new(n, edges).unwrap();
            let p = evaluate_potts(&g, d).unwrap();
            assert!(close(p.value, direct_potts_sum(&g, d).unwrap(), 1e-9));
        }
    }
}

#[test]
fn hopf_and_trefoil_brackets() {
    let hopf = kauffman_bracket(&PdCode::hopf()).unwrap();
    assert_eq!(hopf, Laurent::from_terms(&[(-1, 4), (-1, -4)]));
    for pd in [PdCode::hopf(), PdCode::trefoil(), PdCode::new(vec![[1, 1, 2, 2]]).unwrap()] {
        assert_eq!(kauffman_bracket(&pd).unwrap().0, bracket_by_expansion(&pd.crossings));
    }
}

#[test]
fn trefoil_jones_polynomial() {
    // V = -t^-4 + t^-3 + t^-1 for this chirality
    for d in 1..=4 {
        let rep = jones_at_root(&PdCode::trefoil(), d).unwrap();
        let t = rep.t;
        let expected = -t.powi(-4) + t.powi(-3) + t.powi(-1);
        assert!(close(rep.value, expected, 1e-9), "d = {d}: {} vs {expected}", rep.value);
    }
}

#[test]
fn unknot_is_one_everywhere() {
    for d in 1..=4 {
        assert!(close(jones_at_root(&PdCode::unknot(), d).unwrap().value, c(1.0, 0.0), 1e-12));
    }
    assert!(jones_at_root(&PdCode::unknot(), 5).is_err());
}

#[test]
fn malformed_pd_codes_are_rejected() {
    assert!(PdCode::from_json("[[1,2,3]]").is_err());
    assert!(PdCode::from_json("[[1,2,3,4]]").is_err());
    assert!(PdCode::from_json("{").is_err());
}

#[test]
fn tait_graph_reports_potts_alongside() {
    let rep = jones_at_root(&PdCode::trefoil(), 3).unwrap();
    let potts = rep.potts.unwrap();
    let direct = direct_potts_sum(&pd_to_signed_graph(&PdCode::trefoil()).unwrap(), 3).unwrap();
    assert!(close(potts.value, direct, 1e-9));
}

#[test]
fn chromatic_families() {
    for n in 3..=8 {
        let cycle: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        for k in [2u32, 3, 4] {
            let k1 = k as i64 - 1;
            let expected = k1.pow(n as u32) + if n % 2 == 0 { k1 } else { -k1 };
            let g = Graph::new(n, cycle.clone()).unwrap();
            assert_eq!(count_colourings(&g, k).unwrap().count as i64, expected, "C{n} k={k}");
        }
    }
    for n in 1..=6 {
        let falling: u64 = (0..n as u64).map(|i| 4u64.saturating_sub(i)).product();
        assert_eq!(count_colourings(&Graph::complete(n), 4).unwrap().count, falling);
    }
}

#[test]
fn petersen_graph() {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    edges.extend((0..5).map(|i| (i, i + 5)));
    edges.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    let g = Graph::new(10, edges.clone()).unwrap();
    let three = count_colourings(&g, 3).unwrap();
    assert_eq!(three.count, chromatic(10, &edges, 3) as u64);
    assert_eq!(three.count, 120);
    assert_eq!(count_colourings(&g, 2).unwrap().count, 0);
}

#[test]
fn random_graphs_against_deletion_contraction() {
    let mut r = rng(22);
    for _ in 0..100 {
        let n = r.gen_range(1..=9);
        let edges = random_simple_graph(&mut r, n, 0.4);
        let g = Graph::new(n, edges.clone()).unwrap();
        for d in 2..=4 {
            let got = count_colourings(&g, d).unwrap().count;
            assert_eq!(got as i64, chromatic(n, &edges, d as i64));
            if n <= 7 {
                assert_eq!(got, brute_force_colourings(&g, d));
            }
        }
    }
}
