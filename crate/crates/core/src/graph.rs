//! Simple undirected graphs over dense integer ids, plus the connectivity
//! primitives every other module builds on.

use std::collections::VecDeque;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A finite simple undirected graph on nodes `0..node_count`.
///
/// Adjacency lists are sorted and symmetric. Values are immutable once
/// built; every "modification" returns a fresh graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `node_count` nodes.
    pub fn empty(node_count: usize) -> Self {
        Graph { adj: vec![Vec::new(); node_count] }
    }

    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges (in either orientation) and out-of-range ids.
    pub fn from_edges<I>(node_count: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); node_count];
        for (u, v) in edges {
            for node in [u, v] {
                if node >= node_count {
                    return Err(Error::NodeOutOfRange { node, node_count });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(u.min(w[0]), u.max(w[0])));
            }
        }
        Ok(Graph { adj })
    }

    /// Like [`Graph::from_edges`] but silently merges duplicates. Used by
    /// internal constructions that are correct by construction.
    pub(crate) fn from_edges_dedup<I>(node_count: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); node_count];
        for (u, v) in edges {
            debug_assert!(u != v && u < node_count && v < node_count);
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in adj.iter_mut() {
            list.sort_unstable();
            list.dedup();
        }
        Graph { adj }
    }

    /// The cycle `0-1-…-(n-1)-0`.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "a cycle needs at least three nodes");
        Graph::from_edges_dedup(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path `0-1-…-(n-1)`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges_dedup(n, (1..n).map(|i| (i - 1, i)))
    }

    /// The complete graph on `n` nodes.
    pub fn complete(n: usize) -> Self {
        Graph::from_edges_dedup(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.adj.len()
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj.iter().enumerate().flat_map(|(u, list)| list.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    pub fn check_node(&self, v: usize) -> Result<()> {
        if v < self.node_count() {
            Ok(())
        } else {
            Err(Error::NodeOutOfRange { node: v, node_count: self.node_count() })
        }
    }

    /// Graph with the edge `uv` deleted (node set unchanged).
    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u].retain(|&w| w != v);
        adj[v].retain(|&w| w != u);
        Graph { adj }
    }

    /// Graph with the edge `uv` added (node set unchanged). No-op if present.
    pub fn with_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        if let Err(pos) = adj[u].binary_search(&v) {
            adj[u].insert(pos, v);
        }
        if let Err(pos) = adj[v].binary_search(&u) {
            adj[v].insert(pos, u);
        }
        Graph { adj }
    }

    /// Deletes `removed` and relabels the rest; returns the back-map from new
    /// ids to old ids.
    pub fn without_nodes(&self, removed: &[usize]) -> (Graph, Vec<usize>) {
        let mut keep = vec![true; self.node_count()];
        for &r in removed {
            keep[r] = false;
        }
        let kept: Vec<usize> = self.nodes().filter(|&v| keep[v]).collect();
        self.induced_on_sorted(&kept)
    }

    fn induced_on_sorted(&self, nodes: &[usize]) -> (Graph, Vec<usize>) {
        let mut index = vec![usize::MAX; self.node_count()];
        for (i, &v) in nodes.iter().enumerate() {
            index[v] = i;
        }
        let adj = nodes
            .iter()
            .map(|&v| self.adj[v].iter().filter_map(|&w| (index[w] != usize::MAX).then_some(index[w])).collect())
            .collect();
        (Graph { adj }, nodes.to_vec())
    }

    /// Complement graph; only used for small sanity checks.
    pub fn complement(&self) -> Graph {
        let n = self.node_count();
        Graph::from_edges_dedup(
            n,
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).filter(|&(u, v)| !self.has_edge(u, v)),
        )
    }

    /// Disjoint union; nodes of `other` are shifted by `self.node_count()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let shift = self.node_count();
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|l| l.iter().map(|&w| w + shift).collect()));
        Graph { adj }
    }
}

/// Sequence of distinct nodes, consecutive ones adjacent in the host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Path {
    nodes: Vec<usize>,
}

impl Path {
    pub fn new(g: &Graph, nodes: Vec<usize>) -> Result<Path> {
        if nodes.is_empty() {
            return Err(Error::InvalidInput("empty path".into()));
        }
        check_distinct(g, &nodes)?;
        if let Some(w) = nodes.windows(2).find(|w| !g.has_edge(w[0], w[1])) {
            return Err(Error::InvalidInput(format!("{}-{} is not an edge", w[0], w[1])));
        }
        Ok(Path { nodes })
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.nodes.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.len() <= 1
    }

    pub fn interior(&self) -> &[usize] {
        if self.nodes.len() <= 2 {
            &[]
        } else {
            &self.nodes[1..self.nodes.len() - 1]
        }
    }
}

/// Cyclic sequence of at least three distinct nodes.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Cycle {
    nodes: Vec<usize>,
}

impl Cycle {
    /// Validates that `nodes` is a cycle of `g` and returns it in canonical
    /// orientation (see [`Cycle::canonical`]).
    pub fn new(g: &Graph, nodes: Vec<usize>) -> Result<Cycle> {
        if nodes.len() < 3 {
            return Err(Error::InvalidInput("a cycle needs at least three nodes".into()));
        }
        check_distinct(g, &nodes)?;
        let k = nodes.len();
        for i in 0..k {
            let (a, b) = (nodes[i], nodes[(i + 1) % k]);
            if !g.has_edge(a, b) {
                return Err(Error::InvalidInput(format!("{a}-{b} is not an edge")));
            }
        }
        Ok(Cycle { nodes }.canonical())
    }

    pub(crate) fn from_nodes_unchecked(nodes: Vec<usize>) -> Cycle {
        debug_assert!(nodes.len() >= 3);
        Cycle { nodes }.canonical()
    }

    /// Rotated to start at the smallest node and oriented toward its
    /// smaller cycle neighbor.
    pub fn canonical(mut self) -> Cycle {
        let k = self.nodes.len();
        let start = (0..k).min_by_key(|&i| self.nodes[i]).unwrap_or(0);
        self.nodes.rotate_left(start);
        if k >= 3 && self.nodes[k - 1] < self.nodes[1] {
            self.nodes[1..].reverse();
        }
        self
    }

    pub fn nodes(&self) -> &[usize] {
        &self.nodes
    }

    /// Length, i.e. number of nodes (= number of edges).
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.nodes.contains(&v)
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        let k = self.nodes.len();
        (0..k).map(move |i| {
            let (a, b) = (self.nodes[i], self.nodes[(i + 1) % k]);
            (a.min(b), a.max(b))
        })
    }

    /// Host edges joining two non-consecutive cycle nodes.
    pub fn chords(&self, g: &Graph) -> Vec<(usize, usize)> {
        let k = self.nodes.len();
        let mut out = Vec::new();
        for i in 0..k {
            for j in i + 2..k {
                if i == 0 && j == k - 1 {
                    continue;
                }
                let (a, b) = (self.nodes[i], self.nodes[j]);
                if g.has_edge(a, b) {
                    out.push((a.min(b), a.max(b)));
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn is_chordless(&self, g: &Graph) -> bool {
        self.chords(g).is_empty()
    }

    /// Sorted node set.
    pub fn node_set(&self) -> Vec<usize> {
        let mut s = self.nodes.clone();
        s.sort_unstable();
        s
    }
}

fn check_distinct(g: &Graph, nodes: &[usize]) -> Result<()> {
    let mut seen = vec![false; g.node_count()];
    for &v in nodes {
        g.check_node(v)?;
        if std::mem::replace(&mut seen[v], true) {
            return Err(Error::InvalidInput(format!("node {v} repeated")));
        }
    }
    Ok(())
}

/// Connected components, each sorted, listed by smallest member.
pub fn connected_components(g: &Graph) -> Vec<Vec<usize>> {
    components_avoiding(g, &vec![false; g.node_count()])
}

/// Connected components of `g` minus the nodes flagged in `blocked`.
pub fn components_avoiding(g: &Graph, blocked: &[bool]) -> Vec<Vec<usize>> {
    let n = g.node_count();
    let mut seen = blocked.to_vec();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        queue.push_back(s);
        let mut comp = Vec::new();
        while let Some(v) = queue.pop_front() {
            comp.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        out.push(comp);
    }
    out
}

/// Components of `g` minus `removed`.
pub fn components_without(g: &Graph, removed: &[usize]) -> Vec<Vec<usize>> {
    let mut blocked = vec![false; g.node_count()];
    for &r in removed {
        blocked[r] = true;
    }
    components_avoiding(g, &blocked)
}

pub fn is_connected(g: &Graph) -> bool {
    g.node_count() <= 1 || connected_components(g).len() == 1
}

/// True when `a` and `b` lie in the same component of `g` minus `blocked`.
pub fn reachable_avoiding(g: &Graph, a: usize, b: usize, blocked: &[bool]) -> bool {
    if blocked[a] || blocked[b] {
        return false;
    }
    let mut seen = blocked.to_vec();
    let mut stack = vec![a];
    seen[a] = true;
    while let Some(v) = stack.pop() {
        if v == b {
            return true;
        }
        for &w in g.neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

/// One maximal 2-connected piece (or bridge) of a block/cutnode
/// decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiconnectedBlock {
    pub nodes: Vec<usize>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BlockCutDecomposition {
    pub cutnodes: Vec<usize>,
    pub blocks: Vec<BiconnectedBlock>,
}

/// Hopcroft–Tarjan block decomposition, iterative. Every edge lands in
/// exactly one block; isolated nodes belong to no block.
pub fn cutnodes_and_biconnected_components(g: &Graph) -> BlockCutDecomposition {
    const UNSEEN: usize = usize::MAX;
    let n = g.node_count();
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0; n];
    let mut is_cut = vec![false; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut blocks = Vec::new();
    // (node, parent, next neighbor index)
    let mut stack: Vec<(usize, usize, usize)> = Vec::new();

    for root in 0..n {
        if disc[root] != UNSEEN || g.degree(root) == 0 {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        let mut root_children = 0;
        stack.push((root, UNSEEN, 0));
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < g.degree(v) {
                let w = g.neighbors(v)[*next];
                *next += 1;
                if disc[w] == UNSEEN {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
                continue;
            }
            stack.pop();
            if parent == UNSEEN {
                continue;
            }
            low[parent] = low[parent].min(low[v]);
            if low[v] >= disc[parent] {
                if parent == root {
                    root_children += 1;
                } else {
                    is_cut[parent] = true;
                }
                let mut edges = Vec::new();
                while let Some((a, b)) = edge_stack.pop() {
                    edges.push((a.min(b), a.max(b)));
                    if (a, b) == (parent, v) {
                        break;
                    }
                }
                edges.sort_unstable();
                let mut nodes: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                nodes.sort_unstable();
                nodes.dedup();
                blocks.push(BiconnectedBlock { nodes, edges });
            }
        }
        if root_children >= 2 {
            is_cut[root] = true;
        }
    }
    blocks.sort_by(|a, b| a.nodes.cmp(&b.nodes));
    BlockCutDecomposition { cutnodes: (0..n).filter(|&v| is_cut[v]).collect(), blocks }
}

/// At least three nodes, connected, no cutnode.
pub fn is_2connected(g: &Graph) -> bool {
    let n = g.node_count();
    if n < 3 || !is_connected(g) {
        return false;
    }
    let bc = cutnodes_and_biconnected_components(g);
    bc.cutnodes.is_empty()
}

/// Two `x`–`z` paths sharing only their ends and avoiding `forbidden`,
/// computed as a unit node-capacity flow with two augmentations.
pub fn two_internally_disjoint_paths(
    g: &Graph,
    x: usize,
    z: usize,
    forbidden: Option<usize>,
) -> Result<Option<(Path, Path)>> {
    g.check_node(x)?;
    g.check_node(z)?;
    if x == z {
        return Err(Error::Precondition("endpoints must differ".into()));
    }
    if let Some(f) = forbidden {
        g.check_node(f)?;
        if f == x || f == z {
            return Err(Error::Precondition("forbidden node is an endpoint".into()));
        }
    }
    Ok(disjoint_paths_unchecked(g, x, z, forbidden))
}

pub(crate) fn disjoint_paths_unchecked(
    g: &Graph,
    x: usize,
    z: usize,
    forbidden: Option<usize>,
) -> Option<(Path, Path)> {
    let mut net = UnitFlow::node_split(g, x, z, forbidden);
    let source = 2 * x + 1;
    let sink = 2 * z;
    for _ in 0..2 {
        if !net.augment(source, sink) {
            return None;
        }
    }
    let mut paths = Vec::with_capacity(2);
    for _ in 0..2 {
        let mut nodes = vec![x];
        let mut at = source;
        loop {
            let e = net.take_flow_edge(at)?;
            let to = net.edges[e].to;
            let v = to / 2;
            nodes.push(v);
            if v == z {
                break;
            }
            at = 2 * v + 1;
        }
        paths.push(Path { nodes });
    }
    paths.sort_by(|a, b| (a.nodes.len(), &a.nodes).cmp(&(b.nodes.len(), &b.nodes)));
    let second = paths.pop()?;
    let first = paths.pop()?;
    Some((first, second))
}

struct FlowEdge {
    to: usize,
    cap: u8,
    forward: bool,
    flow: u8,
}

/// Residual network for node-split unit capacities. Node `v` becomes
/// `v_in = 2v` and `v_out = 2v + 1`.
struct UnitFlow {
    edges: Vec<FlowEdge>,
    out: Vec<Vec<usize>>,
}

impl UnitFlow {
    fn node_split(g: &Graph, x: usize, z: usize, forbidden: Option<usize>) -> Self {
        let n = g.node_count();
        let mut net =
            UnitFlow { edges: Vec::with_capacity(4 * (n + 2 * g.edge_count())), out: vec![Vec::new(); 2 * n] };
        let blocked = |v: usize| Some(v) == forbidden;
        for v in 0..n {
            if v != x && v != z && !blocked(v) {
                net.add(2 * v, 2 * v + 1);
            }
            if blocked(v) {
                continue;
            }
            for &w in g.neighbors(v) {
                if !blocked(w) {
                    net.add(2 * v + 1, 2 * w);
                }
            }
        }
        net
    }

    fn add(&mut self, from: usize, to: usize) {
        let id = self.edges.len();
        self.edges.push(FlowEdge { to, cap: 1, forward: true, flow: 0 });
        self.edges.push(FlowEdge { to: from, cap: 0, forward: false, flow: 0 });
        self.out[from].push(id);
        self.out[to].push(id + 1);
    }

    fn augment(&mut self, source: usize, sink: usize) -> bool {
        let mut via = vec![usize::MAX; self.out.len()];
        let mut queue = VecDeque::new();
        queue.push_back(source);
        via[source] = usize::MAX - 1;
        while let Some(a) = queue.pop_front() {
            if a == sink {
                break;
            }
            for &e in &self.out[a] {
                let b = self.edges[e].to;
                if self.edges[e].cap > 0 && via[b] == usize::MAX {
                    via[b] = e;
                    queue.push_back(b);
                }
            }
        }
        if via[sink] == usize::MAX {
            return false;
        }
        let mut at = sink;
        while at != source {
            let e = via[at];
            self.edges[e].cap -= 1;
            self.edges[e ^ 1].cap += 1;
            if self.edges[e].forward {
                self.edges[e].flow += 1;
            } else {
                self.edges[e ^ 1].flow -= 1;
            }
            at = self.edges[e ^ 1].to;
        }
        true
    }

    /// Consumes one unit of flow leaving `from` along an inter-node edge,
    /// stepping through the internal in→out edge of the head.
    fn take_flow_edge(&mut self, from: usize) -> Option<usize> {
        let e = self.out[from].iter().copied().find(|&e| self.edges[e].forward && self.edges[e].flow > 0)?;
        self.edges[e].flow -= 1;
        Some(e)
    }
}

/// Repeatedly replaces a chord-spanned arc by its chord until the cycle is
/// chordless. Among all candidate shortcuts the one with the fewest nodes,
/// then lexicographically smallest node set, wins.
pub fn shortcut_to_chordless_cycle(g: &Graph, c: &Cycle) -> Result<Cycle> {
    let mut current = Cycle::new(g, c.nodes().to_vec())?;
    loop {
        let k = current.len();
        let nodes = current.nodes().to_vec();
        let pos = |v: usize| nodes.iter().position(|&w| w == v).expect("chord endpoint on cycle");
        let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
        for (a, b) in current.chords(g) {
            let (i, j) = {
                let (p, q) = (pos(a), pos(b));
                (p.min(q), p.max(q))
            };
            let inner: Vec<usize> = nodes[i..=j].to_vec();
            let outer: Vec<usize> = nodes[j..].iter().chain(nodes[..=i].iter()).copied().collect();
            for cand in [inner, outer] {
                let mut key = cand.clone();
                key.sort_unstable();
                let better = match &best {
                    None => true,
                    Some((len, set, _)) => (cand.len(), &key) < (*len, set),
                };
                if better {
                    best = Some((cand.len(), key, cand));
                }
            }
        }
        match best {
            None => return Ok(current),
            Some((_, _, cand)) => {
                debug_assert!(cand.len() < k);
                current = Cycle::from_nodes_unchecked(cand);
            }
        }
    }
}

/// Subgraph induced by `s`, relabeled to `0..|s|` in increasing id order.
/// The back-map sends new ids to the original ones.
pub fn induced_subgraph(g: &Graph, s: &[usize]) -> Result<(Graph, Vec<usize>)> {
    for &v in s {
        g.check_node(v)?;
    }
    let mut nodes = s.to_vec();
    nodes.sort_unstable();
    nodes.dedup();
    Ok(g.induced_on_sorted(&nodes))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(n: usize, edges: &[(usize, usize)]) -> Graph {
        Graph::from_edges(n, edges.iter().copied()).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(Error::SelfLoop(0)));
        assert_eq!(Graph::from_edges(3, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert!(matches!(Graph::from_edges(2, [(0, 2)]), Err(Error::NodeOutOfRange { node: 2, node_count: 2 })));
    }

    #[test]
    fn components_examples() {
        assert!(connected_components(&Graph::empty(0)).is_empty());
        assert_eq!(connected_components(&g(4, &[(0, 1), (2, 3)])), vec![vec![0, 1], vec![2, 3]]);
        assert_eq!(connected_components(&Graph::path(3)), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn block_decomposition_examples() {
        let tri = Graph::cycle(3);
        let bc = cutnodes_and_biconnected_components(&tri);
        assert!(bc.cutnodes.is_empty());
        assert_eq!(bc.blocks.len(), 1);

        let bowtie = g(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        let bc = cutnodes_and_biconnected_components(&bowtie);
        assert_eq!(bc.cutnodes, vec![2]);
        assert_eq!(bc.blocks.len(), 2);

        let star = g(4, &[(0, 1), (0, 2), (0, 3)]);
        let bc = cutnodes_and_biconnected_components(&star);
        assert_eq!(bc.cutnodes, vec![0]);
        assert_eq!(bc.blocks.len(), 3);
        assert!(bc.blocks.iter().all(|b| b.edges.len() == 1));
    }

    #[test]
    fn two_connectivity_examples() {
        assert!(is_2connected(&Graph::cycle(4)));
        assert!(!is_2connected(&Graph::path(3)));
        assert!(!is_2connected(&Graph::complete(2)));
        assert!(!is_2connected(&Graph::empty(3)));
    }

    #[test]
    fn disjoint_paths_examples() {
        let c4 = Graph::cycle(4);
        let (p, q) = two_internally_disjoint_paths(&c4, 0, 2, None).unwrap().unwrap();
        assert_eq!(p.nodes(), &[0, 1, 2]);
        assert_eq!(q.nodes(), &[0, 3, 2]);

        assert!(two_internally_disjoint_paths(&Graph::path(3), 0, 2, None).unwrap().is_none());

        let k4 = Graph::complete(4);
        let (p, q) = two_internally_disjoint_paths(&k4, 0, 1, Some(2)).unwrap().unwrap();
        assert_eq!(p.nodes(), &[0, 1]);
        assert_eq!(q.nodes(), &[0, 3, 1]);

        assert!(two_internally_disjoint_paths(&k4, 0, 0, None).is_err());
        assert!(two_internally_disjoint_paths(&k4, 0, 1, Some(1)).is_err());
        assert!(two_internally_disjoint_paths(&k4, 0, 9, None).is_err());
    }

    #[test]
    fn shortcut_examples() {
        let c5 = Graph::cycle(5);
        let cyc = Cycle::new(&c5, vec![0, 1, 2, 3, 4]).unwrap();
        assert_eq!(shortcut_to_chordless_cycle(&c5, &cyc).unwrap(), cyc);

        let c4 = Graph::cycle(4).with_edge(0, 2);
        let cyc = Cycle::new(&c4, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(shortcut_to_chordless_cycle(&c4, &cyc).unwrap().nodes(), &[0, 1, 2]);

        let c6 = Graph::cycle(6).with_edge(0, 2).with_edge(0, 4);
        let cyc = Cycle::new(&c6, (0..6).collect()).unwrap();
        let out = shortcut_to_chordless_cycle(&c6, &cyc).unwrap();
        assert_eq!(out.len(), 3);
        assert!(out.contains(0));
        assert!(out.is_chordless(&c6));

        assert!(shortcut_to_chordless_cycle(&Graph::path(3), &Cycle { nodes: vec![0, 1, 2] }).is_err());
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        let (h, map) = induced_subgraph(&k4, &[0, 1, 2, 3]).unwrap();
        assert_eq!(h, k4);
        assert_eq!(map, vec![0, 1, 2, 3]);
        let (h, _) = induced_subgraph(&k4, &[1, 2, 3]).unwrap();
        assert_eq!(h, Graph::cycle(3));
        let (h, map) = induced_subgraph(&Graph::cycle(5), &[3, 2]).unwrap();
        assert_eq!(h, Graph::path(2));
        assert_eq!(map, vec![2, 3]);
        assert!(induced_subgraph(&k4, &[4]).is_err());
    }

    #[test]
    fn cycle_canonical_form() {
        let c5 = Graph::cycle(5);
        let a = Cycle::new(&c5, vec![3, 2, 1, 0, 4]).unwrap();
        assert_eq!(a.nodes(), &[0, 1, 2, 3, 4]);
        assert!(Cycle::new(&c5, vec![0, 1, 3]).is_err());
    }
}
