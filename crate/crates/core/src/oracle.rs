//! Exponential-time reference implementations.
//!
//! Everything here is written to be checked by reading: plain cycle
//! enumeration, plain backtracking. These functions are the ground truth the
//! polynomial algorithms are compared against. Any enumeration can be bounded
//! by an [`EnumerationBudget`]; running out of budget produces
//! [`Capped::Capped`], never a guessed answer.

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Cycle, Graph};
use crate::recognition::{Containment, PropellerWitness};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationBudget {
    pub max_nodes: usize,
    pub max_cycles: u64,
    pub time_cap: Duration,
}

impl EnumerationBudget {
    pub fn new(max_nodes: usize, max_cycles: u64, time_cap: Duration) -> Result<Self> {
        if max_nodes == 0 || max_cycles == 0 || time_cap.is_zero() {
            return Err(Error::InvalidInput("budget caps must be positive".into()));
        }
        Ok(EnumerationBudget { max_nodes, max_cycles, time_cap })
    }

    pub fn unlimited() -> Self {
        EnumerationBudget { max_nodes: usize::MAX, max_cycles: u64::MAX, time_cap: Duration::MAX }
    }
}

impl Default for EnumerationBudget {
    fn default() -> Self {
        EnumerationBudget { max_nodes: 64, max_cycles: 5_000_000, time_cap: Duration::from_secs(30) }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CapReason {
    TooManyNodes { nodes: usize, cap: usize },
    TooManyCycles { cap: u64 },
    TimedOut { cap_ms: u128 },
}

impl std::fmt::Display for CapReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CapReason::TooManyNodes { nodes, cap } => write!(f, "{nodes} nodes exceed the cap of {cap}"),
            CapReason::TooManyCycles { cap } => write!(f, "more than {cap} cycles enumerated"),
            CapReason::TimedOut { cap_ms } => write!(f, "time cap of {cap_ms} ms exceeded"),
        }
    }
}

/// Tri-state outcome of a bounded enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Capped<T> {
    Done(T),
    Capped(CapReason),
}

impl<T> Capped<T> {
    pub fn done(self) -> Option<T> {
        match self {
            Capped::Done(t) => Some(t),
            Capped::Capped(_) => None,
        }
    }

    pub fn is_capped(&self) -> bool {
        matches!(self, Capped::Capped(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Capped<U> {
        match self {
            Capped::Done(t) => Capped::Done(f(t)),
            Capped::Capped(r) => Capped::Capped(r),
        }
    }

    /// Unwraps a result the caller knows to be uncapped.
    pub fn expect_done(self, what: &str) -> T {
        match self {
            Capped::Done(t) => t,
            Capped::Capped(r) => panic!("{what}: {r}"),
        }
    }
}

struct Meter {
    budget: EnumerationBudget,
    start: Instant,
    cycles: u64,
    steps: u64,
}

impl Meter {
    fn start(g: &Graph, budget: EnumerationBudget) -> std::result::Result<Meter, CapReason> {
        if g.node_count() > budget.max_nodes {
            return Err(CapReason::TooManyNodes { nodes: g.node_count(), cap: budget.max_nodes });
        }
        Ok(Meter { budget, start: Instant::now(), cycles: 0, steps: 0 })
    }

    fn step(&mut self) -> std::result::Result<(), CapReason> {
        self.steps += 1;
        if self.steps & 0xfff == 0 && self.start.elapsed() > self.budget.time_cap {
            return Err(CapReason::TimedOut { cap_ms: self.budget.time_cap.as_millis() });
        }
        Ok(())
    }

    fn cycle(&mut self) -> std::result::Result<(), CapReason> {
        self.cycles += 1;
        if self.cycles > self.budget.max_cycles {
            return Err(CapReason::TooManyCycles { cap: self.budget.max_cycles });
        }
        Ok(())
    }
}

/// Calls `visit` once per cycle of `g` (up to rotation and reflection).
/// With `chordless_only`, only chordless cycles are produced and the search
/// only walks induced paths.
///
/// Cycles are found by growing a path from its least node `s` through nodes
/// greater than `s`; reflection duplicates are dropped by requiring the
/// second node to be smaller than the last.
pub fn for_each_cycle<T>(
    g: &Graph,
    budget: EnumerationBudget,
    chordless_only: bool,
    mut visit: impl FnMut(&[usize]) -> ControlFlow<T>,
) -> Capped<Option<T>> {
    let mut meter = match Meter::start(g, budget) {
        Ok(m) => m,
        Err(r) => return Capped::Capped(r),
    };
    let n = g.node_count();
    let mut on_path = vec![false; n];
    let mut path: Vec<usize> = Vec::with_capacity(n);
    // (node, index of next neighbor to try)
    let mut stack: Vec<(usize, usize)> = Vec::with_capacity(n);
    for s in 0..n {
        path.clear();
        path.push(s);
        on_path[s] = true;
        stack.clear();
        stack.push((s, 0));
        while let Some(&mut (v, ref mut next)) = stack.last_mut() {
            if let Err(r) = meter.step() {
                return Capped::Capped(r);
            }
            let nbrs = g.neighbors(v);
            if *next >= nbrs.len() {
                stack.pop();
                path.pop();
                on_path[v] = false;
                continue;
            }
            let w = nbrs[*next];
            *next += 1;
            if w <= s || on_path[w] {
                continue;
            }
            if chordless_only && !extends_induced(g, &path, &on_path, w, s) {
                continue;
            }
            let closes = path.len() >= 2 && g.has_edge(w, s);
            if closes && path[1] < w {
                if let Err(r) = meter.cycle() {
                    return Capped::Capped(r);
                }
                path.push(w);
                let flow = visit(&path);
                path.pop();
                if let ControlFlow::Break(t) = flow {
                    on_path.iter_mut().for_each(|b| *b = false);
                    return Capped::Done(Some(t));
                }
            }
            if chordless_only && closes {
                // any longer cycle through this path would have the chord w-s
                continue;
            }
            path.push(w);
            on_path[w] = true;
            stack.push((w, 0));
        }
        on_path[s] = false;
    }
    Capped::Done(None)
}

/// `w` may extend the induced path `path` (ending at its last node) only if
/// it is adjacent to no interior path node. Adjacency to the start `s` is
/// allowed: it closes a cycle.
fn extends_induced(g: &Graph, path: &[usize], on_path: &[bool], w: usize, s: usize) -> bool {
    let last = *path.last().expect("non-empty path");
    g.neighbors(w).iter().all(|&u| !on_path[u] || u == last || u == s)
}

/// Every cycle exactly once, in canonical orientation.
pub fn all_cycles(g: &Graph, budget: EnumerationBudget) -> Capped<Vec<Cycle>> {
    let mut out = Vec::new();
    for_each_cycle::<()>(g, budget, false, |c| {
        out.push(Cycle::from_nodes_unchecked(c.to_vec()));
        ControlFlow::Continue(())
    })
    .map(|_| out)
}

/// Every chordless cycle exactly once.
pub fn chordless_cycles(g: &Graph, budget: EnumerationBudget) -> Capped<Vec<Cycle>> {
    let mut out = Vec::new();
    for_each_cycle::<()>(g, budget, true, |c| {
        out.push(Cycle::from_nodes_unchecked(c.to_vec()));
        ControlFlow::Continue(())
    })
    .map(|_| out)
}

/// First node (by id) off `cycle` with at least `min_hits` neighbors on it.
fn center_for(g: &Graph, cycle: &[usize], min_hits: usize, mark: &mut [bool]) -> Option<usize> {
    for &v in cycle {
        mark[v] = true;
    }
    let found = g.nodes().find(|&x| !mark[x] && g.neighbors(x).iter().filter(|&&u| mark[u]).count() >= min_hits);
    for &v in cycle {
        mark[v] = false;
    }
    found
}

fn propeller_search(
    g: &Graph,
    budget: EnumerationBudget,
    chordless_only: bool,
    min_hits: usize,
) -> Capped<Option<PropellerWitness>> {
    let mut mark = vec![false; g.node_count()];
    let containment = if chordless_only { Containment::Induced } else { Containment::Subgraph };
    for_each_cycle(g, budget, chordless_only, |c| match center_for(g, c, min_hits, &mut mark) {
        Some(center) => {
            ControlFlow::Break(PropellerWitness { rim: Cycle::from_nodes_unchecked(c.to_vec()), center, containment })
        }
        None => ControlFlow::Continue(()),
    })
}

/// True iff no cycle of `g` (chords allowed) has an off-cycle node with two
/// neighbors on it, i.e. `g` has no propeller subgraph.
pub fn oracle_c1(g: &Graph, budget: EnumerationBudget) -> Capped<bool> {
    propeller_search(g, budget, false, 2).map(|w| w.is_none())
}

/// True iff no chordless cycle of `g` has an off-cycle node with two
/// neighbors on it, i.e. `g` has no induced propeller.
pub fn oracle_c2(g: &Graph, budget: EnumerationBudget) -> Capped<bool> {
    propeller_search(g, budget, true, 2).map(|w| w.is_none())
}

/// An induced propeller whose center has at least `min_rim_neighbors`
/// neighbors on the rim (2 for plain propellers, 4 for 4-propellers).
pub fn find_induced_propeller(
    g: &Graph,
    min_rim_neighbors: usize,
    budget: EnumerationBudget,
) -> Capped<Option<PropellerWitness>> {
    propeller_search(g, budget, true, min_rim_neighbors.max(2))
}

/// A subgraph propeller found by plain cycle enumeration.
pub fn find_subgraph_propeller(g: &Graph, budget: EnumerationBudget) -> Capped<Option<PropellerWitness>> {
    propeller_search(g, budget, false, 2)
}

/// Does some chordless cycle of `h` pass through both `x` and `y`?
pub fn induced_cycle_through_pair(h: &Graph, x: usize, y: usize, budget: EnumerationBudget) -> Result<Capped<bool>> {
    h.check_node(x)?;
    h.check_node(y)?;
    Ok(for_each_cycle(h, budget, true, |c| {
        if c.contains(&x) && c.contains(&y) {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })
    .map(|hit| hit.is_some()))
}

/// Exact chromatic index by trying `k = Δ, Δ+1, …` with full backtracking.
pub fn oracle_chromatic_index(g: &Graph, budget: EnumerationBudget) -> Capped<usize> {
    let mut meter = match Meter::start(g, budget) {
        Ok(m) => m,
        Err(r) => return Capped::Capped(r),
    };
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Capped::Done(0);
    }
    let mut k = g.max_degree();
    loop {
        let mut used = vec![vec![false; k]; g.node_count()];
        match color_edges(&edges, 0, k, &mut used, &mut meter) {
            Ok(true) => return Capped::Done(k),
            Ok(false) => k += 1,
            Err(r) => return Capped::Capped(r),
        }
    }
}

fn color_edges(
    edges: &[(usize, usize)],
    i: usize,
    k: usize,
    used: &mut [Vec<bool>],
    meter: &mut Meter,
) -> std::result::Result<bool, CapReason> {
    if i == edges.len() {
        return Ok(true);
    }
    meter.step()?;
    let (u, v) = edges[i];
    for c in 0..k {
        if used[u][c] || used[v][c] {
            continue;
        }
        used[u][c] = true;
        used[v][c] = true;
        let ok = color_edges(edges, i + 1, k, used, meter)?;
        used[u][c] = false;
        used[v][c] = false;
        if ok {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exact chromatic number by backtracking over `k = 1, 2, …`.
pub fn oracle_chromatic_number(g: &Graph, budget: EnumerationBudget) -> Capped<usize> {
    let mut meter = match Meter::start(g, budget) {
        Ok(m) => m,
        Err(r) => return Capped::Capped(r),
    };
    let n = g.node_count();
    if n == 0 {
        return Capped::Done(0);
    }
    for k in 1..=n {
        let mut color = vec![usize::MAX; n];
        match color_nodes(g, 0, k, 0, &mut color, &mut meter) {
            Ok(true) => return Capped::Done(k),
            Ok(false) => {}
            Err(r) => return Capped::Capped(r),
        }
    }
    Capped::Done(n)
}

fn color_nodes(
    g: &Graph,
    v: usize,
    k: usize,
    highest: usize,
    color: &mut [usize],
    meter: &mut Meter,
) -> std::result::Result<bool, CapReason> {
    if v == g.node_count() {
        return Ok(true);
    }
    meter.step()?;
    // colors above `highest` are interchangeable; try only the first of them
    for c in 0..k.min(highest + 1) {
        if g.neighbors(v).iter().any(|&w| color[w] == c) {
            continue;
        }
        color[v] = c;
        if color_nodes(g, v + 1, k, highest.max(c + 1), color, meter)? {
            return Ok(true);
        }
        color[v] = usize::MAX;
    }
    Ok(false)
}

/// Number of unordered node pairs on `n` nodes.
pub fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Labeled graph on `n` nodes whose edge set is given by `mask` over the
/// pairs `(0,1), (0,2), …, (0,n-1), (1,2), …` in that order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n {
        for v in u + 1..n {
            if mask >> bit & 1 == 1 {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges_dedup(n, edges)
}

/// All `2^(n(n-1)/2)` labeled graphs on `n` nodes in edge-mask order.
pub fn enumerate_labeled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = pair_count(n);
    assert!(pairs < 64, "too many node pairs for mask enumeration");
    (0..1u64 << pairs).map(move |mask| graph_from_mask(n, mask))
}

/// Folds `map` over every labeled graph on `n` nodes, splitting the mask
/// range across the rayon pool.
pub fn par_sweep_labeled<T, M, R>(n: usize, identity: impl Fn() -> T + Sync + Send, map: M, reduce: R) -> T
where
    T: Send,
    M: Fn(T, u64, &Graph) -> T + Sync + Send,
    R: Fn(T, T) -> T + Sync + Send,
{
    let pairs = pair_count(n);
    assert!(pairs < 64, "too many node pairs for mask enumeration");
    (0..1u64 << pairs)
        .into_par_iter()
        .fold(&identity, |acc, mask| map(acc, mask, &graph_from_mask(n, mask)))
        .reduce(&identity, reduce)
}
