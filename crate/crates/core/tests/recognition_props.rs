mod common;

use common::{describe, ear_graph, unl};
use propeller_core::cutset::SplitKind;
use propeller_core::generators::{random_c0_graph, random_graph, random_member_gluing, Seed};
use propeller_core::graph::{is_2connected, Graph};
use propeller_core::oracle::{graph_from_mask, oracle_c1, oracle_c2, pair_count, par_sweep_labeled, EnumerationBudget};
use propeller_core::recognition::{
    contains_propeller_subgraph_direct, decompose_chordless, is_chordless, is_critically_2connected, is_in_c0,
    is_in_c0_prime, is_in_c1, is_in_c1_with, is_in_c2, is_in_c2_with, Containment, LeafClass, RecognitionOptions, Step,
};
use proptest::prelude::*;
use rand::Rng;
use rayon::prelude::*;

fn with_witness() -> RecognitionOptions {
    RecognitionOptions { witness: true, ..RecognitionOptions::default() }
}

/// Class containments, report shape and witnesses on every graph up to
/// six nodes. No graph this small separates C1 from C2.
#[test]
fn class_chain_and_reports_up_to_six_nodes() {
    let mut strict = (0u64, 0u64);
    for n in 0..=6 {
        let part = par_sweep_labeled(
            n,
            || (0u64, 0u64),
            |(mut a, mut b), _, g| {
                let c0 = is_in_c0(g);
                let (c1, r1) = is_in_c1_with(g, with_witness());
                let (c2, r2) = is_in_c2_with(g, with_witness());
                assert!(!c0 || c1, "C0 but not C1: {}", describe(g));
                assert!(!c1 || c2, "C1 but not C2: {}", describe(g));
                r1.check_shape().unwrap();
                r2.check_shape().unwrap();
                if !c1 {
                    let w = r1.witness.expect("C1 witness");
                    assert!(w.verify(g) && w.containment == Containment::Subgraph, "{}", describe(g));
                }
                if !c2 {
                    let w = r2.witness.expect("C2 witness");
                    assert!(w.verify(g) && w.containment == Containment::Induced, "{}", describe(g));
                }
                a += u64::from(c1 && !c0);
                b += u64::from(c2 && !c1);
                (a, b)
            },
            |x, y| (x.0 + y.0, x.1 + y.1),
        );
        strict = (strict.0 + part.0, strict.1 + part.1);
    }
    assert!(strict.0 > 0 && strict.1 == 0, "{strict:?}");
}

/// A graph has no propeller subgraph exactly when each of its subgraphs
/// has connectivity at most one or is critically 2-connected. Subgraphs
/// are edge subsets of the 7-node masks; a subset-closure pass spreads
/// "some subgraph is bad" upward.
#[test]
fn no_propeller_iff_subgraphs_are_critical_seven_nodes() {
    const N: usize = 7;
    let bits = pair_count(N);
    let size = 1usize << bits;
    let bad: Vec<bool> = (0..size as u64)
        .into_par_iter()
        .map(|mask| {
            let g = graph_from_mask(N, mask);
            let isolated: Vec<usize> = g.nodes().filter(|&v| g.degree(v) == 0).collect();
            let (h, _) = g.without_nodes(&isolated);
            is_2connected(&h) && !is_critically_2connected(&h)
        })
        .collect();
    let mut any_bad = bad;
    for b in 0..bits {
        for mask in 0..size {
            if mask >> b & 1 == 1 && any_bad[mask ^ (1 << b)] {
                any_bad[mask] = true;
            }
        }
    }
    let disagreements = par_sweep_labeled(
        N,
        || 0u64,
        |acc, mask, g| acc + u64::from(oracle_c1(g, unl()).expect_done("small") == any_bad[mask as usize]),
        |a, b| a + b,
    );
    assert_eq!(disagreements, 0);
}

#[test]
fn critical_two_connectivity_examples() {
    assert!(is_critically_2connected(&Graph::cycle(5)));
    assert!(!is_critically_2connected(&Graph::complete(4)));
    assert!(!is_critically_2connected(&Graph::path(4)));
}

#[test]
fn chordless_decomposition_leaves_are_c0_prime() {
    let mut checked = 0;
    let mut with_s2 = 0;
    for s in 0..4000u64 {
        let n = 4 + (s as usize % 12);
        let g = ear_graph(n, 0, Seed(s));
        if is_chordless(&g).is_some() {
            assert!(decompose_chordless(&g).is_err());
            continue;
        }
        let r = decompose_chordless(&g).unwrap();
        r.check_shape().unwrap();
        assert!(r.verdict);
        for leaf in r.leaves() {
            assert!(is_in_c0_prime(&leaf.graph()), "seed {s}");
            assert!(matches!(leaf.leaf, Some(LeafClass::C0Prime | LeafClass::ChordlessCycle)));
        }
        let splits = r.nodes.iter().filter(|x| x.step.is_some()).count();
        with_s2 += usize::from(splits > 0);
        checked += 1;
    }
    assert!(checked > 300 && with_s2 > 50, "{checked} chordless graphs, {with_s2} with a split");
}

#[test]
fn two_disjoint_c4s_split_into_two_cycle_leaves() {
    let g = Graph::cycle(4).disjoint_union(&Graph::cycle(4));
    let r = decompose_chordless(&g).unwrap();
    let leaves: Vec<_> = r.leaves().collect();
    assert_eq!(leaves.len(), 2);
    assert!(leaves.iter().all(|l| l.leaf == Some(LeafClass::ChordlessCycle)));
}

#[test]
fn recognizers_agree_with_oracles_above_base_case_thresholds() {
    let mut members = (0, 0);
    for s in 0..600u64 {
        let n = 12 + (s as usize % 7);
        let g = ear_graph(n, (s % 3) as usize, Seed(s));
        let (c1, r1) = is_in_c1(&g);
        let (c2, r2) = is_in_c2(&g);
        r1.check_shape().unwrap();
        r2.check_shape().unwrap();
        assert_eq!(c1, contains_propeller_subgraph_direct(&g).is_none(), "seed {s}");
        assert_eq!(c1, oracle_c1(&g, unl()).expect_done("sparse"), "seed {s}");
        assert_eq!(c2, oracle_c2(&g, unl()).expect_done("sparse"), "seed {s}");
        members.0 += usize::from(c1);
        members.1 += usize::from(c2);
    }
    assert!(members.0 > 30 && members.1 >= members.0, "{members:?}");
}

/// Two C1 sides glued along an I-cutset: an induced-propeller-free graph
/// that still has a propeller subgraph.
#[rustfmt::skip]
const C2_NOT_C1: [(usize, usize); 21] = [
    (0, 2), (0, 5), (0, 8), (0, 11), (0, 16), (1, 4), (1, 6), (1, 9), (2, 3), (2, 14), (3, 9), (4, 5), (6, 7),
    (6, 10), (6, 13), (7, 8), (10, 12), (10, 15), (11, 12), (13, 16), (14, 15),
];

fn c2_not_c1() -> Graph {
    Graph::from_edges(17, C2_NOT_C1).unwrap()
}

#[test]
fn c1_is_strictly_inside_c2() {
    let g = c2_not_c1();
    assert!(oracle_c2(&g, unl()).expect_done("small"));
    assert!(!oracle_c1(&g, unl()).expect_done("small"));
    let (c1, r1) = is_in_c1_with(&g, with_witness());
    let (c2, r2) = is_in_c2(&g);
    assert!(!c1 && c2);
    assert!(r1.witness.unwrap().verify(&g));
    r2.check_shape().unwrap();
    let i_splits = r2
        .nodes
        .iter()
        .filter(|x| matches!(&x.step, Some(Step::Split { split }) if split.kind == SplitKind::I))
        .count();
    assert!(i_splits >= 1);
}

#[test]
fn member_i_gluings_are_recognized() {
    let mut outside_c1 = 0;
    for s in 0..150u64 {
        let Ok((_, glued)) = random_member_gluing(SplitKind::I, 32, EnumerationBudget::default(), Seed(s)) else {
            continue;
        };
        let g = &glued.graph;
        let (c2, r2) = is_in_c2(g);
        r2.check_shape().unwrap();
        assert_eq!(c2, oracle_c2(g, unl()).expect_done("sparse"), "seed {s}");
        outside_c1 += usize::from(c2 && !is_in_c1(g).0);
    }
    assert!(outside_c1 > 20, "{outside_c1}");
}

#[test]
fn c0_graphs_are_recognized() {
    for s in 0..200u64 {
        let g = random_c0_graph(1 + (s as usize % 30), Seed(s)).unwrap();
        assert!(is_in_c1(&g).0 && is_in_c2(&g).0, "seed {s}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn random_graph_verdicts_are_consistent(seed in any::<u64>()) {
        let mut rng = Seed(seed).rng();
        let n = rng.gen_range(1..=14);
        let m = rng.gen_range(0..=pair_count(n).min(2 * n));
        let g = random_graph(n, m, Seed(seed)).unwrap();
        let (c1, r1) = is_in_c1_with(&g, with_witness());
        let (c2, _) = is_in_c2(&g);
        prop_assert!(!c1 || c2);
        prop_assert_eq!(c1, contains_propeller_subgraph_direct(&g).is_none());
        prop_assert_eq!(r1.root().node_count, n);
        if let Some(w) = r1.witness {
            prop_assert!(w.verify(&g));
        }
    }
}
