//! Solver results against independent exhaustive oracles, plus the derived
//! constants those oracles freeze.

mod common;

use std::collections::BTreeSet;

use romankit_core::constructions::{co_sun, co_sun_hypergraph, exact_cover_reduction, sun};
use romankit_core::domination::{
    bertossi_dominating_set, gamma, gamma_rk, is_dominating_set, is_k_roman,
};
use romankit_core::graph::{cycle, find_split_partition, path, star, Graph, SplitPartition};
use romankit_core::hypergraph::Hypergraph;
use romankit_core::verifier::enumerate_graphs;

use common::{
    brute_edge_cover, brute_gamma, brute_gamma_rk, brute_perfect_matching, brute_split_partition,
};

#[test]
fn gamma_rk_of_p4_frozen_from_oracle() {
    // Oracle over all 3^4 weight vectors.
    let (weight, witness) = brute_gamma_rk(&path(4), 2);
    assert_eq!(weight, 3);
    assert_eq!(witness, vec![0, 2, 0, 1]);
    let cert = gamma_rk(&path(4), 2);
    assert_eq!(cert.gamma_rk, 3);
    assert_eq!(cert.witness.weights(), &[0, 2, 0, 1]);
}

#[test]
fn c5_is_not_split_per_oracle() {
    assert_eq!(brute_split_partition(&cycle(5)), None);
    assert!(find_split_partition(&cycle(5)).is_none());
}

#[test]
fn split_detection_matches_brute_force_up_to_n7() {
    for n in 0..=7 {
        for g in enumerate_graphs(n, true).unwrap() {
            let fast = find_split_partition(&g);
            let slow = brute_split_partition(&g);
            match (fast, slow) {
                (None, None) => {}
                (Some(p), Some((clique, independent))) => {
                    assert_eq!(p.clique, clique, "clique choice for {g:?}");
                    assert_eq!(p.independent, independent);
                }
                (fast, slow) => panic!("split disagreement on {g:?}: {fast:?} vs {slow:?}"),
            }
        }
    }
}

#[test]
fn gamma_matches_oracle_up_to_n6() {
    for n in 0..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            let cert = gamma(&g);
            let (value, witness) = brute_gamma(&g);
            assert_eq!(cert.gamma, value, "gamma value on {g:?}");
            assert_eq!(cert.witness, witness, "gamma witness on {g:?}");
            assert_eq!(is_dominating_set(&g, &cert.witness), Ok(true));
        }
    }
}

#[test]
fn gamma_rk_matches_oracle_up_to_n6() {
    for n in 0..=6 {
        for g in enumerate_graphs(n, true).unwrap() {
            for k in 1..=3 {
                let cert = gamma_rk(&g, k);
                let (value, witness) = brute_gamma_rk(&g, k);
                assert_eq!(cert.gamma_rk, value, "gamma_r{k} on {g:?}");
                assert_eq!(cert.witness.weights(), &witness[..], "witness on {g:?}");
            }
        }
    }
}

#[test]
fn bertossi_on_p4_and_s4_from_derived_gamma() {
    let p4 = path(4);
    assert_eq!(brute_gamma(&p4).0, 2);
    let p = find_split_partition(&p4).unwrap();
    assert_eq!(bertossi_dominating_set(&p4, &p).unwrap(), BTreeSet::from([1, 2]));

    let s4 = sun(4).unwrap();
    assert_eq!(brute_gamma(s4.graph()).0, 2);
    let d = bertossi_dominating_set(s4.graph(), s4.partition()).unwrap();
    assert_eq!(d.len(), 2);
    assert!(d.is_subset(&s4.partition().clique));
    assert_eq!(is_dominating_set(s4.graph(), &d), Ok(true));
}

#[test]
fn closed_neighborhood_in_s3_follows_the_adjacency_rule() {
    // u_1 is adjacent to w_1 and w_3; with u's on 0..3 and w's on 3..6 that
    // is {0, 1, 2, 3, 5}.
    let s3 = sun(3).unwrap();
    assert_eq!(
        s3.graph().closed_neighborhood(0).unwrap(),
        BTreeSet::from([0, 1, 2, 3, 5])
    );
}

#[test]
fn star_gamma_r2_is_two_per_oracle() {
    let g = star(3);
    assert_eq!(brute_gamma_rk(&g, 2).0, 2);
    let p = SplitPartition::new(&g, BTreeSet::from([0]), BTreeSet::from([1, 2, 3])).unwrap();
    let f = romankit_core::domination::normalized_gamma_r2(&g, &p).unwrap();
    assert_eq!(f.weight(), 2);
    assert_eq!(f.value(0), 2);
}

#[test]
fn perfect_matching_matches_oracle() {
    let mut cases: Vec<Hypergraph> = Vec::new();
    for t in 3..=8 {
        cases.push(Hypergraph::from_graph(&cycle(t)));
    }
    cases.push(Hypergraph::from_graph(&Graph::complete(4)));
    cases.push(Hypergraph::from_graph(&star(4)));
    cases.push(
        Hypergraph::new(
            6,
            vec![
                BTreeSet::from([0, 1, 2]),
                BTreeSet::from([2, 3, 4]),
                BTreeSet::from([3, 4, 5]),
                BTreeSet::from([0, 1, 5]),
            ],
        )
        .unwrap(),
    );
    for t in 3..=7 {
        cases.push(co_sun_hypergraph(t).unwrap());
    }
    for h in &cases {
        assert_eq!(h.perfect_matching(), brute_perfect_matching(h), "pm on {h:?}");
    }
}

#[test]
fn co_sun_5_hypergraph_has_no_perfect_matching() {
    // 3-uniform on 5 vertices: 3 does not divide 5.
    let h = co_sun_hypergraph(5).unwrap();
    assert_eq!(brute_perfect_matching(&h), None);
    assert!(!h.pm_exists());
}

#[test]
fn edge_cover_matches_oracle() {
    for t in 3..=12 {
        let h = Hypergraph::from_graph(&cycle(t));
        assert_eq!(h.edge_cover_number().unwrap(), brute_edge_cover(&h).unwrap());
        assert_eq!(h.edge_cover_number().unwrap(), t.div_ceil(2));
    }
    for t in 3..=7 {
        let h = co_sun_hypergraph(t).unwrap();
        assert_eq!(h.edge_cover_number().unwrap(), brute_edge_cover(&h).unwrap());
    }
    // k-uniform with a perfect matching: the cover number is |V|/k.
    let h = Hypergraph::new(
        6,
        vec![
            BTreeSet::from([0, 1, 2]),
            BTreeSet::from([1, 2, 3]),
            BTreeSet::from([3, 4, 5]),
        ],
    )
    .unwrap();
    assert!(h.pm_exists());
    assert_eq!(h.edge_cover_number().unwrap(), 2);
    assert_eq!(brute_edge_cover(&h).unwrap(), 2);
}

#[test]
fn cosun_gamma_r2_values_match_oracle_and_solver() {
    // The exact value is 4 at t = 3 and 3 for t >= 6; the oracle confirms
    // the small cases, the solver covers the larger suns.
    let c3 = co_sun(3).unwrap();
    assert_eq!(brute_gamma_rk(c3.graph(), 2).0, 4);
    assert_eq!(gamma_rk(c3.graph(), 2).gamma_rk, 4);
    assert_eq!(brute_gamma(c3.graph()).0, 3);

    let c6 = co_sun(6).unwrap();
    assert_eq!(brute_gamma_rk(c6.graph(), 2).0, 3);
    for t in 6..=8 {
        let c = co_sun(t).unwrap();
        assert_eq!(gamma_rk(c.graph(), 2).gamma_rk, 3, "co-sun t = {t}");
        assert_eq!(gamma(c.graph()).gamma, 2);
    }
}

#[test]
fn reduction_on_c4_and_c5_matches_matching_oracle() {
    let even = Hypergraph::from_graph(&cycle(4));
    let reduced = exact_cover_reduction(&even, 2).unwrap();
    assert!(brute_perfect_matching(&even).is_some());
    assert_eq!(is_k_roman(reduced.graph(), 2), Ok(true));

    let odd = Hypergraph::from_graph(&cycle(5));
    let reduced = exact_cover_reduction(&odd, 2).unwrap();
    assert_eq!(brute_perfect_matching(&odd), None);
    assert_eq!(is_k_roman(reduced.graph(), 2), Ok(false));

    let triples = Hypergraph::new(
        6,
        vec![BTreeSet::from([0, 1, 2]), BTreeSet::from([3, 4, 5])],
    )
    .unwrap();
    let reduced = exact_cover_reduction(&triples, 3).unwrap();
    assert_eq!(brute_perfect_matching(&triples), Some(vec![0, 1]));
    assert_eq!(is_k_roman(reduced.graph(), 3), Ok(true));
}
