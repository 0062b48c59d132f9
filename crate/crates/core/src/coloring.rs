//! Vertex 3-coloring by degree peeling, flat and pending edges, and
//! Δ-edge-coloring of graphs without induced propellers.

use serde::{Deserialize, Serialize};

use crate::cutset::{all_i_splits, all_proper_s2_splits, blocks_of, has_k2_cutset, Block, Split};
use crate::error::{Error, Result};
use crate::graph::{is_2connected, Graph};
use crate::recognition::{is_in_c0, is_in_c2};

/// Color of every node, indexed by node id.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexColoring {
    colors: Vec<usize>,
}

impl VertexColoring {
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.node_count() {
            return Err(Error::InvalidInput("one color per node expected".into()));
        }
        Ok(VertexColoring { colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    /// Number of distinct colors used.
    pub fn palette_size(&self) -> usize {
        let mut seen: Vec<usize> = self.colors.clone();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.node_count() && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Color of every edge `(u, v)` with `u < v`, sorted by edge.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EdgeColoring {
    entries: Vec<(usize, usize, usize)>,
}

impl EdgeColoring {
    pub fn entries(&self) -> &[(usize, usize, usize)] {
        &self.entries
    }

    pub fn color(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.entries.binary_search_by(|&(a, b, _)| (a, b).cmp(&key)).ok().map(|i| self.entries[i].2)
    }

    pub fn palette_size(&self) -> usize {
        let mut seen: Vec<usize> = self.entries.iter().map(|e| e.2).collect();
        seen.sort_unstable();
        seen.dedup();
        seen.len()
    }

    /// Covers exactly the edges of `g`, and edges sharing a node differ.
    pub fn is_proper(&self, g: &Graph) -> bool {
        if !self.entries.iter().map(|&(u, v, _)| (u, v)).eq(g.edges()) {
            return false;
        }
        let mut seen = vec![Vec::new(); g.node_count()];
        for &(u, v, c) in &self.entries {
            for x in [u, v] {
                if seen[x].contains(&c) {
                    return false;
                }
                seen[x].push(c);
            }
        }
        true
    }
}

/// Two flat edges on four distinct nodes that induce only those two edges.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FlatPair {
    pub e: (usize, usize),
    pub f: (usize, usize),
}

impl FlatPair {
    pub fn new(g: &Graph, e: (usize, usize), f: (usize, usize)) -> Result<FlatPair> {
        for (a, b) in [e, f] {
            g.check_node(a)?;
            g.check_node(b)?;
            if !g.has_edge(a, b) {
                return Err(Error::InvalidInput(format!("{a}-{b} is not an edge")));
            }
        }
        if !is_flat_pair(g, e, f) {
            return Err(Error::InvalidInput("edges do not form a flat pair".into()));
        }
        Ok(FlatPair { e, f })
    }
}

fn is_flat(g: &Graph, (u, v): (usize, usize)) -> bool {
    g.degree(u) == 2 && g.degree(v) == 2
}

fn is_flat_pair(g: &Graph, e: (usize, usize), f: (usize, usize)) -> bool {
    let (u, v) = e;
    let (x, y) = f;
    let distinct = u != x && u != y && v != x && v != y;
    distinct && is_flat(g, e) && is_flat(g, f) && [u, v].iter().all(|&a| !g.has_edge(a, x) && !g.has_edge(a, y))
}

/// Peels a minimum-degree node (smallest id on ties) until the graph is
/// empty, then colors greedily in reverse peeling order. Every peeled node
/// must have degree at most 2 at removal time, so three colors suffice.
pub fn vertex_3_color(g: &Graph) -> Result<VertexColoring> {
    let n = g.node_count();
    let mut degree: Vec<usize> = g.nodes().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !removed[v]).min_by_key(|&v| (degree[v], v)).expect("nodes remain");
        if degree[v] > 2 {
            return Err(Error::ClassViolation(format!(
                "every remaining node has degree at least 3 (node {v} has {})",
                degree[v]
            )));
        }
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                degree[w] -= 1;
            }
        }
    }
    let mut colors = vec![usize::MAX; n];
    for &v in order.iter().rev() {
        colors[v] = (0..).find(|c| g.neighbors(v).iter().all(|&w| colors[w] != *c)).expect("unbounded range");
    }
    Ok(VertexColoring { colors })
}

/// Lexicographically least edge with an end of degree 1 or both ends of
/// degree 2.
pub fn find_pending_or_flat_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| g.degree(u) == 1 || g.degree(v) == 1 || is_flat(g, (u, v)))
}

/// Every flat pair `(e, f)` with `e < f`, in lexicographic order.
pub fn flat_pairs(g: &Graph) -> Vec<FlatPair> {
    let flat: Vec<(usize, usize)> = g.edges().filter(|&e| is_flat(g, e)).collect();
    let mut out = Vec::new();
    for (i, &e) in flat.iter().enumerate() {
        for &f in &flat[i + 1..] {
            if is_flat_pair(g, e, f) {
                out.push(FlatPair { e, f });
            }
        }
    }
    out
}

/// First flat pair in lexicographic order.
pub fn find_flat_pair(g: &Graph) -> Option<FlatPair> {
    let flat: Vec<(usize, usize)> = g.edges().filter(|&e| is_flat(g, e)).collect();
    flat.iter()
        .enumerate()
        .find_map(|(i, &e)| flat[i + 1..].iter().find(|&&f| is_flat_pair(g, e, f)).map(|&f| FlatPair { e, f }))
}

/// Edge-colors `g` by removing pending or flat edges until the maximum
/// degree is at most 2, coloring the remaining paths and cycles directly,
/// and adding the removed edges back with the smallest free color.
///
/// With maximum degree at least 3 this uses exactly Δ colors.
pub fn edge_color(g: &Graph) -> Result<EdgeColoring> {
    let mut h = g.clone();
    let mut peeled = Vec::new();
    while h.max_degree() > 2 {
        let e = find_pending_or_flat_edge(&h).ok_or_else(|| {
            Error::ClassViolation("no pending or flat edge while the maximum degree exceeds 2".into())
        })?;
        peeled.push(e);
        h = h.without_edge(e.0, e.1);
    }
    let n = g.node_count();
    let mut at: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut colored: Vec<(usize, usize, usize)> = Vec::with_capacity(g.edge_count());
    for (u, v, c) in color_paths_and_cycles(&h) {
        at[u].push(c);
        at[v].push(c);
        colored.push((u, v, c));
    }
    for &(u, v) in peeled.iter().rev() {
        let c = (0..).find(|c| !at[u].contains(c) && !at[v].contains(c)).expect("unbounded range");
        at[u].push(c);
        at[v].push(c);
        colored.push((u, v, c));
    }
    colored.sort_unstable();
    let coloring = EdgeColoring { entries: colored };
    debug_assert!(coloring.is_proper(g));
    Ok(coloring)
}

/// Alternating colors along every path and cycle of a graph with maximum
/// degree at most 2; odd cycles close with color 2.
fn color_paths_and_cycles(h: &Graph) -> Vec<(usize, usize, usize)> {
    let n = h.node_count();
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    // path ends first, so whatever is still unseen afterwards lies on a cycle
    let starts = (0..n).filter(|&s| h.degree(s) <= 1).chain(0..n);
    for s in starts {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut walk = vec![s];
        let mut prev = None;
        let mut v = s;
        while let Some(w) =
            h.neighbors(v).iter().copied().find(|&w| Some(w) != prev && (!seen[w] || (w == s && walk.len() >= 3)))
        {
            walk.push(w);
            if w == s {
                break;
            }
            seen[w] = true;
            prev = Some(v);
            v = w;
        }
        let k = walk.len() - 1;
        let odd_cycle = k >= 3 && walk[k] == s && k % 2 == 1;
        for i in 0..k {
            let c = if odd_cycle && i == k - 1 { 2 } else { i % 2 };
            let (a, b) = (walk[i], walk[i + 1]);
            out.push((a.min(b), a.max(b), c));
        }
    }
    out
}

/// Finds a proper S2 or proper I split minimizing the size of one side
/// `K'` (ties broken by sorted cutset, then by `K'`), and returns it with
/// `side_a = K'` together with the block of `K'`. That block must be in C0
/// and contain every cutset node with degree at least 3.
pub fn extreme_decomposition(g: &Graph) -> Result<(Split, Block)> {
    if !is_2connected(g) {
        return Err(Error::Precondition("graph is not 2-connected".into()));
    }
    if is_in_c0(g) {
        return Err(Error::Precondition("graph is in C0".into()));
    }
    if has_k2_cutset(g) {
        return Err(Error::Precondition("graph has a K2-cutset".into()));
    }
    if !is_in_c2(g).0 {
        return Err(Error::Precondition("graph has an induced propeller".into()));
    }
    let mut candidates = all_proper_s2_splits(g)?;
    candidates.extend(all_i_splits(g, true)?);
    let best = candidates
        .iter()
        .flat_map(|s| [s.clone(), s.swapped()])
        .min_by(|a, b| {
            let key = |s: &Split| {
                let mut cut = s.cutset.clone();
                cut.sort_unstable();
                (s.side_a.len(), cut, s.side_a.clone())
            };
            key(a).cmp(&key(b))
        })
        .ok_or_else(|| Error::Internal("no proper S2 or I split found".into()))?;
    let block = blocks_of(g, &best)?.swap_remove(0);
    if !is_in_c0(&block.graph) {
        return Err(Error::Internal("block of the smallest side is not in C0".into()));
    }
    for &c in &best.cutset {
        let local = block.back_map.iter().position(|&b| b == Some(c)).expect("cutset node in block");
        if block.graph.degree(local) < 3 {
            return Err(Error::Internal(format!("cutset node {c} has degree below 3 in the block")));
        }
    }
    Ok((best, block))
}
