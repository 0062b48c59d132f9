#![allow(dead_code)]

use propeller_core::generators::Seed;
use propeller_core::graph::Graph;
use propeller_core::oracle::EnumerationBudget;
use rand::Rng;

pub fn unl() -> EnumerationBudget {
    EnumerationBudget::unlimited()
}

pub fn describe(g: &Graph) -> String {
    format!("n={} edges={:?}", g.node_count(), g.edges().collect::<Vec<_>>())
}

/// A random 2-connected graph on exactly `n >= 3` nodes built from a cycle
/// by adding ears; `extra` more ears of length one or two may follow.
pub fn ear_graph(n: usize, extra: usize, seed: Seed) -> Graph {
    let mut rng = seed.rng();
    let start = rng.gen_range(3..=n);
    let mut edges: Vec<(usize, usize)> = (0..start).map(|i| (i, (i + 1) % start)).collect();
    let mut count = start;
    let has =
        |edges: &[(usize, usize)], a: usize, b: usize| edges.iter().any(|&(x, y)| (x, y) == (a, b) || (x, y) == (b, a));
    while count < n {
        let len = rng.gen_range(1..=n - count);
        let a = rng.gen_range(0..count);
        let mut b = rng.gen_range(0..count);
        if b == a {
            b = (a + 1) % count;
        }
        let mut prev = a;
        for _ in 0..len {
            edges.push((prev, count));
            prev = count;
            count += 1;
        }
        edges.push((prev, b));
    }
    for _ in 0..extra {
        let a = rng.gen_range(0..n);
        let b = rng.gen_range(0..n);
        if a != b && !has(&edges, a, b) {
            edges.push((a, b));
        }
    }
    Graph::from_edges(n, edges).expect("simple by construction")
}
