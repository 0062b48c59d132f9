mod common;

use common::{describe, ear_graph, unl};
use propeller_core::coloring::{
    edge_color, extreme_decomposition, find_flat_pair, find_pending_or_flat_edge, flat_pairs, vertex_3_color,
    EdgeColoring, FlatPair, VertexColoring,
};
use propeller_core::cutset::{has_k2_cutset, is_proper_cutset, is_proper_s2_split, SplitKind};
use propeller_core::generators::{random_member_gluing, theta, Seed};
use propeller_core::graph::{is_2connected, Graph};
use propeller_core::oracle::{oracle_c2, oracle_chromatic_index, par_sweep_labeled, EnumerationBudget};
use propeller_core::recognition::{is_chordless, is_in_c0, is_in_c2};

fn vertex_ok(g: &Graph, c: &VertexColoring) -> bool {
    c.is_proper(g) && c.colors().len() == g.node_count() && c.colors().iter().all(|&x| x < 3)
}

fn edge_ok(g: &Graph, c: &EdgeColoring) -> bool {
    c.is_proper(g) && c.entries().iter().all(|e| e.2 < g.max_degree())
}

#[test]
fn chordless_and_c2_graphs_are_three_colorable_up_to_six_nodes() {
    for n in 0..=6 {
        par_sweep_labeled(
            n,
            || (),
            |_, _, g| {
                if is_chordless(g).is_none() || oracle_c2(g, unl()).expect_done("small") {
                    let c = vertex_3_color(g).unwrap_or_else(|e| panic!("{e}: {}", describe(g)));
                    assert!(vertex_ok(g, &c), "{}", describe(g));
                }
            },
            |_, _| (),
        );
    }
}

#[test]
fn vertex_coloring_refuses_dense_graphs() {
    assert!(vertex_3_color(&Graph::complete(4)).is_err());
    let c = vertex_3_color(&Graph::cycle(5)).unwrap();
    assert_eq!(c.palette_size(), 3);
    let clash = VertexColoring::new(&Graph::cycle(4), vec![0, 0, 1, 1]).unwrap();
    assert!(!clash.is_proper(&Graph::cycle(4)));
    assert!(VertexColoring::new(&Graph::cycle(4), vec![0, 1]).is_err());
}

#[test]
fn edge_coloring_on_member_gluings() {
    let mut checked = 0;
    for s in 0..120u64 {
        let kind = if s % 2 == 0 { SplitKind::I } else { SplitKind::S2 };
        let Ok((_, glued)) = random_member_gluing(kind, 40, EnumerationBudget::default(), Seed(s)) else {
            continue;
        };
        let g = &glued.graph;
        if !is_in_c2(g).0 || g.max_degree() < 3 {
            continue;
        }
        let c = edge_color(g).unwrap();
        assert!(edge_ok(g, &c), "seed {s}");
        checked += 1;
    }
    assert!(checked > 60, "{checked}");
}

#[test]
fn edge_coloring_small_examples() {
    let t = theta(&[3, 3, 3]).unwrap();
    let c = edge_color(&t).unwrap();
    assert!(edge_ok(&t, &c));
    assert_eq!(c.palette_size(), 3);
    assert_eq!(oracle_chromatic_index(&t, unl()).expect_done("small"), 3);
    // odd cycles need a third color
    let c5 = edge_color(&Graph::cycle(5)).unwrap();
    assert!(c5.is_proper(&Graph::cycle(5)) && c5.palette_size() == 3);
    assert!(edge_color(&Graph::complete(4)).is_err());
}

#[test]
fn flat_pairs_are_flat_and_constructible() {
    for s in 0..500u64 {
        let g = ear_graph(6 + (s as usize % 8), (s % 2) as usize, Seed(s));
        let pairs = flat_pairs(&g);
        for p in &pairs {
            assert_eq!(FlatPair::new(&g, p.e, p.f).unwrap(), *p);
        }
        assert_eq!(find_flat_pair(&g), pairs.first().copied());
        if let Some((u, v)) = find_pending_or_flat_edge(&g) {
            assert!(g.has_edge(u, v));
            assert!(g.degree(u).min(g.degree(v)) == 1 || (g.degree(u) == 2 && g.degree(v) == 2));
        }
    }
    let c6 = Graph::cycle(6);
    assert!(FlatPair::new(&c6, (0, 1), (1, 2)).is_err());
    assert!(FlatPair::new(&c6, (0, 1), (2, 3)).is_err());
    assert!(FlatPair::new(&c6, (0, 1), (3, 4)).is_ok());
}

/// The split returned is proper and the block
/// on that side is in C0 with heavy cutset nodes.
fn check_extreme(g: &Graph) -> Result<(), String> {
    let (split, block) = extreme_decomposition(g).map_err(|e| e.to_string())?;
    let proper = match split.kind {
        SplitKind::S2 => is_proper_s2_split(g, &split),
        SplitKind::I => is_proper_cutset(g, &split.cutset),
        _ => false,
    };
    let heavy = split
        .cutset
        .iter()
        .all(|&v| block.graph.degree(block.back_map.iter().position(|&b| b == Some(v)).unwrap()) >= 3);
    let side_ok = block.back_map.iter().flatten().all(|v| split.cutset.contains(v) || split.side_a.contains(v));
    if proper && heavy && side_ok && is_in_c0(&block.graph) {
        Ok(())
    } else {
        Err(format!("{split:?}"))
    }
}

fn extreme_target(g: &Graph) -> bool {
    is_2connected(g) && !is_in_c0(g) && !has_k2_cutset(g) && oracle_c2(g, unl()).expect_done("small")
}

/// No graph on at most seven nodes meets the preconditions: a 2-connected
/// C2 graph outside C0 without K2-cutsets needs more room.
#[test]
fn extreme_decomposition_has_no_inputs_below_eight_nodes() {
    let mut checked = 0u64;
    for n in 4..=7 {
        checked += par_sweep_labeled(
            n,
            || 0u64,
            |acc, _, g| {
                if !extreme_target(g) {
                    return acc;
                }
                if let Err(e) = check_extreme(g) {
                    panic!("{e}: {}", describe(g));
                }
                acc + 1
            },
            |a, b| a + b,
        );
    }
    assert_eq!(checked, 0);
}

#[test]
fn extreme_decomposition_on_generated_graphs() {
    let mut checked = 0;
    for s in 0..300u64 {
        let g = if s % 3 == 0 {
            ear_graph(8 + (s as usize % 5), 1, Seed(s))
        } else {
            let kind = if s % 3 == 1 { SplitKind::I } else { SplitKind::S2 };
            match random_member_gluing(kind, 24, EnumerationBudget::default(), Seed(s)) {
                Ok((_, glued)) => glued.graph,
                Err(_) => continue,
            }
        };
        if !extreme_target(&g) {
            continue;
        }
        if let Err(e) = check_extreme(&g) {
            panic!("seed {s}: {e}: {}", describe(&g));
        }
        checked += 1;
    }
    assert!(checked > 100, "{checked}");
}

#[test]
fn extreme_decomposition_checks_preconditions() {
    assert!(extreme_decomposition(&Graph::cycle(6)).is_err());
    assert!(extreme_decomposition(&Graph::complete(4)).is_err());
    assert!(extreme_decomposition(&Graph::path(4)).is_err());
}
