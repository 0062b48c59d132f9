use propeller_core::graph::{
    connected_components, cutnodes_and_biconnected_components, induced_subgraph, is_2connected, is_connected,
    shortcut_to_chordless_cycle, two_internally_disjoint_paths, Cycle, Graph, Path,
};
use propeller_core::oracle::{all_cycles, par_sweep_labeled, EnumerationBudget};
use proptest::prelude::*;

fn unl() -> EnumerationBudget {
    EnumerationBudget::unlimited()
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if bits[k] {
                        edges.push((u, v));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, edges).unwrap()
        })
    })
}

fn valid_pair(g: &Graph, x: usize, z: usize, p: &Path, q: &Path) -> bool {
    let ends = |r: &Path| r.nodes().first() == Some(&x) && r.nodes().last() == Some(&z);
    let walk = |r: &Path| r.nodes().windows(2).all(|w| g.has_edge(w[0], w[1]));
    let disjoint = p.interior().iter().all(|v| !q.interior().contains(v));
    ends(p) && ends(q) && walk(p) && walk(q) && disjoint && p.nodes() != q.nodes()
}

/// Returns (checks, failures) over every pair of every labeled graph on n nodes.
fn disjoint_paths_sweep(n: usize) -> (u64, u64) {
    par_sweep_labeled(
        n,
        || (0u64, 0u64),
        |(mut checks, mut bad), _, g| {
            let cycles = all_cycles(g, unl()).expect_done("small");
            let mut every_pair = true;
            for x in 0..n {
                for z in x + 1..n {
                    let found = two_internally_disjoint_paths(g, x, z, None).unwrap();
                    let on_cycle = cycles.iter().any(|c| c.contains(x) && c.contains(z));
                    let ok = match &found {
                        Some((p, q)) => on_cycle && valid_pair(g, x, z, p, q),
                        None => !on_cycle,
                    };
                    every_pair &= found.is_some();
                    checks += 1;
                    bad += u64::from(!ok);
                }
            }
            let menger = n >= 3 && every_pair;
            checks += 1;
            bad += u64::from(menger != is_2connected(g));
            (checks, bad)
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    )
}

#[test]
fn disjoint_paths_match_common_cycles_up_to_six_nodes() {
    for n in 0..=6 {
        let (checks, bad) = disjoint_paths_sweep(n);
        assert_eq!(bad, 0, "n={n}: {bad} of {checks} checks failed");
    }
}

#[test]
#[ignore = "exhaustive over 2^21 graphs; run with --ignored"]
fn disjoint_paths_match_common_cycles_seven_nodes() {
    let (checks, bad) = disjoint_paths_sweep(7);
    assert_eq!(bad, 0, "{bad} of {checks} checks failed");
}

#[test]
fn forbidden_node_is_avoided() {
    // in C6 the two paths between antipodal nodes use every other node
    let g = Graph::cycle(6);
    assert!(two_internally_disjoint_paths(&g, 0, 3, Some(1)).unwrap().is_none());
    let k4 = Graph::complete(4);
    let (p, q) = two_internally_disjoint_paths(&k4, 0, 1, Some(2)).unwrap().unwrap();
    assert!(!p.nodes().contains(&2) && !q.nodes().contains(&2));
    assert!(two_internally_disjoint_paths(&k4, 0, 0, None).is_err());
    assert!(two_internally_disjoint_paths(&k4, 0, 4, None).is_err());
}

#[test]
fn shortcut_output_is_chordless_on_small_graphs() {
    let (checks, bad) = par_sweep_labeled(
        6,
        || (0u64, 0u64),
        |(mut checks, mut bad), _, g| {
            for c in all_cycles(g, unl()).expect_done("small") {
                let s = shortcut_to_chordless_cycle(g, &c).unwrap();
                let inside = s.nodes().iter().all(|&v| c.contains(v));
                checks += 1;
                bad += u64::from(!(s.is_chordless(g) && inside));
            }
            (checks, bad)
        },
        |a, b| (a.0 + b.0, a.1 + b.1),
    );
    assert_eq!(bad, 0, "{bad} of {checks} cycles");
    assert!(checks > 0);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn components_partition_nodes(g in arb_graph(14)) {
        let comps = connected_components(&g);
        let mut all: Vec<usize> = comps.iter().flatten().copied().collect();
        all.sort_unstable();
        prop_assert_eq!(all, g.nodes().collect::<Vec<_>>());
        for c in &comps {
            let (h, _) = induced_subgraph(&g, c).unwrap();
            prop_assert!(is_connected(&h));
        }
        for (u, v) in g.edges() {
            prop_assert!(comps.iter().any(|c| c.contains(&u) && c.contains(&v)));
        }
    }

    #[test]
    fn biconnected_blocks_cover_each_edge_once(g in arb_graph(14)) {
        let bc = cutnodes_and_biconnected_components(&g);
        let mut edges: Vec<(usize, usize)> = bc.blocks.iter().flat_map(|b| b.edges.iter().copied()).collect();
        edges.sort_unstable();
        prop_assert_eq!(edges, g.edges().collect::<Vec<_>>());
        let sum_v: usize = bc.blocks.iter().map(|b| b.nodes.len()).sum();
        prop_assert!(sum_v <= 2 * g.node_count());
        for b in &bc.blocks {
            let (h, _) = induced_subgraph(&g, &b.nodes).unwrap();
            prop_assert!(b.edges.len() == 1 || is_2connected(&h));
        }
    }

    #[test]
    fn cutnodes_raise_component_count(g in arb_graph(12)) {
        let bc = cutnodes_and_biconnected_components(&g);
        let base = connected_components(&g).len();
        for v in g.nodes() {
            let (h, _) = g.without_nodes(&[v]);
            let isolated = usize::from(g.degree(v) == 0);
            let is_cut = connected_components(&h).len() + isolated > base;
            prop_assert_eq!(is_cut, bc.cutnodes.contains(&v), "node {}", v);
        }
    }

    #[test]
    fn two_connected_means_no_cutnode(g in arb_graph(12)) {
        let brute = g.node_count() >= 3
            && is_connected(&g)
            && g.nodes().all(|v| is_connected(&g.without_nodes(&[v]).0));
        prop_assert_eq!(brute, is_2connected(&g));
    }

    #[test]
    fn cycle_is_canonical_under_rotation_and_reversal(n in 3usize..12, shift in 0usize..12, rev in any::<bool>()) {
        let g = Graph::cycle(n);
        let mut nodes: Vec<usize> = (0..n).collect();
        nodes.rotate_left(shift % n);
        if rev {
            nodes.reverse();
        }
        let c = Cycle::new(&g, nodes).unwrap();
        prop_assert_eq!(c, Cycle::new(&g, (0..n).collect()).unwrap());
    }

    #[test]
    fn without_nodes_maps_back(g in arb_graph(12), drop in proptest::collection::vec(0usize..12, 0..4)) {
        let drop: Vec<usize> = drop.into_iter().filter(|&v| v < g.node_count()).collect();
        let (h, back) = g.without_nodes(&drop);
        prop_assert_eq!(h.node_count(), back.len());
        for (a, b) in h.edges() {
            prop_assert!(g.has_edge(back[a], back[b]));
        }
        let kept = g.edges().filter(|(u, v)| !drop.contains(u) && !drop.contains(v)).count();
        prop_assert_eq!(kept, h.edge_count());
    }
}
