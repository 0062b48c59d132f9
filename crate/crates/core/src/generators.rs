//! Instance generators: C0 graphs, gluing along cutsets (the inverse of
//! `blocks_of`), uniform random graphs, and the 4-propeller gadget.

use rand::seq::{index, SliceRandom};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::cutset::{
    has_k2_cutset, i_cutset_split, is_proper_cutset, is_proper_s2_split, proper_k2_unchecked, Split, SplitKind,
};
use crate::error::{Error, Result};
use crate::graph::{components_without, is_2connected, is_connected, Graph};
use crate::oracle::{oracle_c1, oracle_c2, pair_count, Capped, EnumerationBudget};
use crate::recognition::is_in_c0;

/// Seed for every randomized generator; equal seeds give equal outputs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Seed(pub u64);

impl Seed {
    pub fn rng(self) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.0)
    }
}

/// Two branch nodes 0 and 1 joined by internally disjoint paths of the
/// given lengths.
pub fn theta(lengths: &[usize]) -> Result<Graph> {
    if lengths.contains(&0) || lengths.iter().filter(|&&l| l == 1).count() > 1 {
        return Err(Error::InvalidInput("path lengths must be positive, at most one equal to 1".into()));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for &len in lengths {
        let mut prev = 0;
        for _ in 1..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    Graph::from_edges(next, edges)
}

/// A cycle on `rim` nodes plus a hub (node `rim`) adjacent to all of them.
pub fn wheel(rim: usize) -> Result<Graph> {
    if rim < 3 {
        return Err(Error::InvalidInput("a wheel needs a rim of at least 3 nodes".into()));
    }
    let mut edges: Vec<(usize, usize)> = Graph::cycle(rim).edges().collect();
    edges.extend((0..rim).map(|v| (v, rim)));
    Graph::from_edges(rim + 1, edges)
}

/// Uniform simple graph on `n` nodes with exactly `m` edges.
pub fn random_graph(n: usize, m: usize, seed: Seed) -> Result<Graph> {
    let pairs = pair_count(n);
    if m > pairs {
        return Err(Error::InvalidInput(format!("{m} edges do not fit on {n} nodes")));
    }
    let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut rng = seed.rng();
    let picked = index::sample(&mut rng, pairs, m);
    Graph::from_edges(n, picked.iter().map(|i| all[i]))
}

/// Builder that only lets degree-2 chains touch hubs, which keeps the
/// graph in C0.
struct ChainBuilder {
    budget: usize,
    next: usize,
    edges: Vec<(usize, usize)>,
}

impl ChainBuilder {
    fn new(hubs: usize, budget: usize) -> Self {
        ChainBuilder { budget, next: hubs, edges: Vec::new() }
    }

    fn room(&self) -> usize {
        self.budget - self.next
    }

    /// Joins `a` and `b` through `interior` fresh nodes.
    fn chain(&mut self, a: usize, b: usize, interior: usize) {
        let mut prev = a;
        for _ in 0..interior {
            self.edges.push((prev, self.next));
            prev = self.next;
            self.next += 1;
        }
        self.edges.push((prev, b));
    }

    /// Hangs a path of `len` fresh nodes off `a`.
    fn pendant(&mut self, a: usize, len: usize) {
        let mut prev = a;
        for _ in 0..len {
            self.edges.push((prev, self.next));
            prev = self.next;
            self.next += 1;
        }
    }

    /// Uses up the remaining budget by subdividing edges that have an end
    /// of degree at most 2.
    fn fill(mut self, rng: &mut ChaCha8Rng) -> Graph {
        while self.next < self.budget {
            let g = Graph::from_edges_dedup(self.next, self.edges.iter().copied());
            let eligible: Vec<usize> = (0..self.edges.len())
                .filter(|&i| {
                    let (a, b) = self.edges[i];
                    g.degree(a) <= 2 || g.degree(b) <= 2
                })
                .collect();
            match eligible.choose(rng) {
                Some(&i) => {
                    let (a, b) = self.edges.swap_remove(i);
                    self.edges.push((a, self.next));
                    self.edges.push((self.next, b));
                    self.next += 1;
                }
                None => {
                    let anchor = rng.gen_range(0..self.next.max(1));
                    self.pendant(anchor, 1);
                }
            }
        }
        Graph::from_edges_dedup(self.next, self.edges)
    }
}

/// Connected graph in C0 on exactly `n` nodes: hubs tied together by
/// chains with at least two interior nodes, some pendant chains, then
/// random subdivisions. Small `n` gives a path.
pub fn random_c0_graph(n: usize, seed: Seed) -> Result<Graph> {
    if n == 0 {
        return Err(Error::InvalidInput("n must be at least 1".into()));
    }
    if n < 4 {
        return Ok(Graph::path(n));
    }
    let mut rng = seed.rng();
    let hubs = rng.gen_range(1..=n.div_ceil(3).max(1).min(n / 2).max(1));
    let mut b = ChainBuilder::new(hubs, n);
    for i in 1..hubs {
        let j = rng.gen_range(0..i);
        b.chain(i, j, 2);
    }
    while b.room() >= 2 && rng.gen_bool(0.5) {
        let (x, y) = (rng.gen_range(0..hubs), rng.gen_range(0..hubs));
        b.chain(x, y, 2);
    }
    while b.room() >= 1 && rng.gen_bool(0.3) {
        let x = rng.gen_range(0..hubs);
        let len = rng.gen_range(1..=b.room().min(3));
        b.pendant(x, len);
    }
    let g = b.fill(&mut rng);
    finish_c0(g)
}

/// 2-connected graph in C0 on exactly `n ≥ 3` nodes, built from ears
/// between hubs, each ear having at least two interior nodes.
pub fn random_2connected_c0_graph(n: usize, seed: Seed) -> Result<Graph> {
    if n < 3 {
        return Err(Error::InvalidInput("a 2-connected graph needs at least 3 nodes".into()));
    }
    let mut rng = seed.rng();
    if n < 5 {
        return Ok(Graph::cycle(n));
    }
    // h >= 2 hubs need h + 4 + 4(h - 2) = 5h - 4 nodes for the initial ears
    let hubs = if n >= 8 { rng.gen_range(2..=n.div_ceil(5)) } else { 1 };
    let mut b = ChainBuilder::new(hubs, n);
    if hubs == 1 {
        b.chain(0, 0, 2);
    } else {
        b.chain(0, 1, 2);
        b.chain(1, 0, 2);
        for i in 2..hubs {
            let j = rng.gen_range(0..i);
            let mut k = rng.gen_range(0..i - 1);
            if k >= j {
                k += 1;
            }
            b.chain(i, j, 2);
            b.chain(i, k, 2);
        }
        while b.room() >= 2 && rng.gen_bool(0.4) {
            let x = rng.gen_range(0..hubs);
            let mut y = rng.gen_range(0..hubs - 1);
            if y >= x {
                y += 1;
            }
            let interior = 2 + usize::from(b.room() >= 3 && rng.gen_bool(0.3));
            b.chain(x, y, interior);
        }
    }
    let g = b.fill(&mut rng);
    if !is_2connected(&g) {
        return Err(Error::Internal("ear construction lost 2-connectivity".into()));
    }
    finish_c0(g)
}

fn finish_c0(g: Graph) -> Result<Graph> {
    if !is_in_c0(&g) || !is_connected(&g) {
        return Err(Error::Internal("generated graph is not a connected C0 graph".into()));
    }
    Ok(g)
}

/// Random graph with maximum degree at most 3, built by adding random
/// pairs that keep both degrees at most 3.
pub fn random_subcubic_graph(n: usize, attempts: usize, seed: Seed) -> Graph {
    let mut rng = seed.rng();
    let mut adj = vec![Vec::new(); n];
    for _ in 0..attempts {
        if n < 2 {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && adj[u].len() < 3 && adj[v].len() < 3 && !adj[u].contains(&v) {
            adj[u].push(v);
            adj[v].push(u);
        }
    }
    let edges = (0..n).flat_map(|u| adj[u].iter().filter(move |&&v| u < v).map(move |&v| (u, v)));
    Graph::from_edges_dedup(n, edges.collect::<Vec<_>>())
}

/// The 4-propeller gadget: the edges from `x` and `y` to their two
/// neighbors are subdivided by new nodes `a, b` (for `x`) and `c, d` (for
/// `y`), and a new node `v` is joined to all four. New ids are
/// `a = n, b = n+1, c = n+2, d = n+3, v = n+4`. Returns the graph and `v`.
pub fn np_gadget(h: &Graph, x: usize, y: usize) -> Result<(Graph, usize)> {
    h.check_node(x)?;
    h.check_node(y)?;
    if h.max_degree() > 3 {
        return Err(Error::InvalidInput("host graph must have maximum degree at most 3".into()));
    }
    if x == y || h.has_edge(x, y) {
        return Err(Error::InvalidInput("x and y must be distinct and nonadjacent".into()));
    }
    if h.degree(x) != 2 || h.degree(y) != 2 {
        return Err(Error::InvalidInput("x and y must have degree 2".into()));
    }
    let n = h.node_count();
    let v = n + 4;
    let subdivided = [
        (x, h.neighbors(x)[0], n),
        (x, h.neighbors(x)[1], n + 1),
        (y, h.neighbors(y)[0], n + 2),
        (y, h.neighbors(y)[1], n + 3),
    ];
    let mut edges: Vec<(usize, usize)> =
        h.edges().filter(|&(p, q)| !subdivided.iter().any(|&(s, t, _)| (p, q) == (s.min(t), s.max(t)))).collect();
    for (s, t, mid) in subdivided {
        edges.push((s, mid));
        edges.push((mid, t));
        edges.push((mid, v));
    }
    Ok((Graph::from_edges(n + 5, edges)?, v))
}

/// A random host for [`np_gadget`]: a subcubic graph on `n` nodes with two
/// nonadjacent degree-2 nodes `x < y`, or `None` if this seed gives none.
pub fn random_gadget_host(n: usize, seed: Seed) -> Option<(Graph, usize, usize)> {
    let mut rng = seed.rng();
    let attempts = rng.gen_range(n..=3 * n);
    let h = random_subcubic_graph(n, attempts, Seed(rng.gen()));
    let deg2: Vec<usize> = h.nodes().filter(|&v| h.degree(v) == 2).collect();
    let mut pairs: Vec<(usize, usize)> = deg2
        .iter()
        .flat_map(|&a| deg2.iter().filter(move |&&b| a < b).map(move |&b| (a, b)))
        .filter(|&(a, b)| !h.has_edge(a, b))
        .collect();
    pairs.shuffle(&mut rng);
    pairs.first().map(|&(x, y)| (h, x, y))
}

/// One side of a gluing: a graph, its attachment nodes, and its marker
/// nodes in the order `blocks_of` creates them.
///
/// Attachments are `[node]` for One, `[u, v]` for K2 and S2, and
/// `[u, v, w]` with `uv` the edge for I. Markers are `[u', v']` on the path
/// `u-u'-v'-v` for S2, `[u1', u2', v1', v2']` on `u-u1'-u2'-w` and
/// `v-v1'-v2'-w` for I, and empty otherwise.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueSide {
    pub graph: Graph,
    pub attach: Vec<usize>,
    pub markers: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GlueRecipe {
    pub kind: SplitKind,
    pub left: GlueSide,
    pub right: GlueSide,
}

/// Output of [`glue`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Glued {
    pub graph: Graph,
    /// Split of `graph` whose blocks are the two sides again.
    pub split: Split,
    /// Glued id of every left node; `None` for markers.
    pub left_map: Vec<Option<usize>>,
    pub right_map: Vec<Option<usize>>,
    /// The glued graph is 2-connected, has no K2-cutset (K2, One: the
    /// cutset is valid and proper) and the split is proper, so the
    /// block lemmas decide its class from the sides.
    pub hypotheses_hold: bool,
}

fn check_side(kind: SplitKind, side: &GlueSide) -> Result<()> {
    let g = &side.graph;
    let bad = |m: &str| Err(Error::InvalidInput(m.to_string()));
    for &v in side.attach.iter().chain(&side.markers) {
        g.check_node(v)?;
    }
    if side.attach.len() != kind.cutset_size() || kind == SplitKind::Zero {
        return bad("attachment count does not match the gluing kind");
    }
    let a = &side.attach;
    let paths: Vec<[usize; 4]> = match kind {
        SplitKind::S2 => {
            if side.markers.len() != 2 {
                return bad("S2 gluing needs two marker nodes");
            }
            if g.has_edge(a[0], a[1]) {
                return bad("S2 attachments must be nonadjacent");
            }
            vec![[a[0], side.markers[0], side.markers[1], a[1]]]
        }
        SplitKind::I => {
            if side.markers.len() != 4 {
                return bad("I gluing needs four marker nodes");
            }
            if !g.has_edge(a[0], a[1]) || g.has_edge(a[0], a[2]) || g.has_edge(a[1], a[2]) {
                return bad("I attachments must span exactly the edge between the first two");
            }
            vec![[a[0], side.markers[0], side.markers[1], a[2]], [a[1], side.markers[2], side.markers[3], a[2]]]
        }
        SplitKind::K2 => {
            if !side.markers.is_empty() || !g.has_edge(a[0], a[1]) {
                return bad("K2 attachments must be adjacent and carry no markers");
            }
            vec![]
        }
        _ => {
            if !side.markers.is_empty() {
                return bad("One gluing carries no markers");
            }
            vec![]
        }
    };
    for p in paths {
        if !p.windows(2).all(|w| g.has_edge(w[0], w[1])) || g.degree(p[1]) != 2 || g.degree(p[2]) != 2 {
            return bad("marker nodes do not form the expected degree-2 path");
        }
    }
    let mut all: Vec<usize> = side.attach.iter().chain(&side.markers).copied().collect();
    all.sort_unstable();
    all.dedup();
    if all.len() != side.attach.len() + side.markers.len() {
        return bad("attachment and marker nodes must be distinct");
    }
    if g.node_count() <= all.len() {
        return bad("each side needs at least one node besides attachments and markers");
    }
    Ok(())
}

/// Inverse of `blocks_of`: deletes the marker nodes on both sides and
/// identifies the attachment nodes pairwise. Left nodes keep their relative
/// order and come first; remaining right nodes follow.
pub fn glue(recipe: &GlueRecipe) -> Result<Glued> {
    let kind = recipe.kind;
    check_side(kind, &recipe.left)?;
    check_side(kind, &recipe.right)?;
    let mut next = 0;
    let mut left_map = vec![None; recipe.left.graph.node_count()];
    for (v, slot) in left_map.iter_mut().enumerate() {
        if !recipe.left.markers.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut right_map = vec![None; recipe.right.graph.node_count()];
    for (i, &r) in recipe.right.attach.iter().enumerate() {
        right_map[r] = left_map[recipe.left.attach[i]];
    }
    for (v, slot) in right_map.iter_mut().enumerate() {
        if slot.is_none() && !recipe.right.markers.contains(&v) {
            *slot = Some(next);
            next += 1;
        }
    }
    let mut edges = Vec::new();
    for (side, map) in [(&recipe.left, &left_map), (&recipe.right, &right_map)] {
        for (u, v) in side.graph.edges() {
            if let (Some(a), Some(b)) = (map[u], map[v]) {
                edges.push((a, b));
            }
        }
    }
    let graph = Graph::from_edges_dedup(next, edges);
    let cutset: Vec<usize> = recipe.left.attach.iter().map(|&a| left_map[a].expect("attachment kept")).collect();
    let side_of = |side: &GlueSide, map: &[Option<usize>]| -> Vec<usize> {
        let mut out: Vec<usize> =
            (0..side.graph.node_count()).filter(|v| !side.attach.contains(v)).filter_map(|v| map[v]).collect();
        out.sort_unstable();
        out
    };
    let mut split =
        Split { kind, cutset, side_a: side_of(&recipe.left, &left_map), side_b: side_of(&recipe.right, &right_map) };
    if kind != SplitKind::I {
        split.cutset.sort_unstable();
    }
    split.validate(&graph)?;
    let hypotheses_hold = match kind {
        SplitKind::S2 => is_2connected(&graph) && !has_k2_cutset(&graph) && is_proper_s2_split(&graph, &split),
        SplitKind::I => is_2connected(&graph) && !has_k2_cutset(&graph) && is_proper_cutset(&graph, &split.cutset),
        SplitKind::K2 => proper_k2_unchecked(&graph, &split.cutset),
        _ => true,
    };
    Ok(Glued { graph, split, left_map, right_map, hypotheses_hold })
}

/// Appends marker paths to `core`, producing a glue side for S2 (`attach`
/// = `[u, v]`) or I (`attach` = `[u, v, w]`).
pub fn with_markers(core: &Graph, kind: SplitKind, attach: &[usize]) -> Result<GlueSide> {
    let n = core.node_count();
    let mut edges: Vec<(usize, usize)> = core.edges().collect();
    let markers: Vec<usize> = match kind {
        SplitKind::S2 => {
            edges.extend([(attach[0], n), (n, n + 1), (n + 1, attach[1])]);
            vec![n, n + 1]
        }
        SplitKind::I => {
            edges.extend([(attach[0], n), (n, n + 1), (n + 1, attach[2])]);
            edges.extend([(attach[1], n + 2), (n + 2, n + 3), (n + 3, attach[2])]);
            vec![n, n + 1, n + 2, n + 3]
        }
        _ => vec![],
    };
    let side = GlueSide { graph: Graph::from_edges(n + markers.len(), edges)?, attach: attach.to_vec(), markers };
    check_side(kind, &side)?;
    Ok(side)
}

/// A random core for gluing experiments: a 2-connected C0 graph with up to
/// `extra` random chords, which often (not always) leave C2.
pub fn random_core(n: usize, extra: usize, seed: Seed) -> Result<Graph> {
    let mut rng = seed.rng();
    let base = random_2connected_c0_graph(n, Seed(rng.gen()))?;
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    for _ in 0..rng.gen_range(0..=extra) {
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u != v && !edges.contains(&(u.min(v), u.max(v))) {
            edges.push((u.min(v), u.max(v)));
        }
    }
    Graph::from_edges(n, edges)
}

/// Every valid attachment list on `core` for the given kind: `core` minus
/// the attachments has a component adjacent to all of them and (for I) no
/// core node sees two attachments.
fn attachment_candidates(core: &Graph, kind: SplitKind) -> Vec<Vec<usize>> {
    let n = core.node_count();
    let candidates: Vec<Vec<usize>> = match kind {
        SplitKind::S2 => {
            (0..n).flat_map(|u| (u + 1..n).map(move |v| vec![u, v])).filter(|p| !core.has_edge(p[0], p[1])).collect()
        }
        SplitKind::I => core
            .edges()
            .flat_map(|(u, v)| (0..n).map(move |w| vec![u, v, w]))
            .filter(|t| t[2] != t[0] && t[2] != t[1] && !core.has_edge(t[0], t[2]) && !core.has_edge(t[1], t[2]))
            .filter(|t| is_proper_cutset(core, t))
            .collect(),
        _ => return Vec::new(),
    };
    candidates
        .into_iter()
        .filter(|att| {
            components_without(core, att)
                .iter()
                .any(|comp| att.iter().all(|&a| core.neighbors(a).iter().any(|x| comp.binary_search(x).is_ok())))
        })
        .collect()
}

/// Picks random valid attachments on `core` for the given kind.
pub fn random_attachments(core: &Graph, kind: SplitKind, rng: &mut ChaCha8Rng) -> Option<Vec<usize>> {
    attachment_candidates(core, kind).choose(rng).cloned()
}

/// A random gluing of two marked cores along an S2 or I cutset, with at
/// most `max_nodes` nodes in the result. Returns the recipe and the glued
/// graph; callers filter on `hypotheses_hold`.
pub fn random_gluing(
    kind: SplitKind,
    max_nodes: usize,
    extra_chords: usize,
    seed: Seed,
) -> Result<(GlueRecipe, Glued)> {
    if !matches!(kind, SplitKind::S2 | SplitKind::I) {
        return Err(Error::InvalidInput("random gluing supports S2 and I".into()));
    }
    let shared = kind.cutset_size();
    if max_nodes < 2 * 6 - shared {
        return Err(Error::InvalidInput("max_nodes too small for two cores".into()));
    }
    let mut rng = seed.rng();
    for _ in 0..64 {
        let budget = max_nodes + shared;
        let nl = rng.gen_range(6..=(budget - 6).min(budget / 2 + 2));
        let nr = rng.gen_range(6..=(budget - nl));
        let mut sides = Vec::with_capacity(2);
        for n in [nl, nr] {
            let core = random_core(n, extra_chords, Seed(rng.gen()))?;
            match random_attachments(&core, kind, &mut rng) {
                Some(att) => sides.push(with_markers(&core, kind, &att)?),
                None => break,
            }
        }
        if sides.len() < 2 {
            continue;
        }
        let right = sides.pop().expect("two sides");
        let left = sides.pop().expect("two sides");
        let recipe = GlueRecipe { kind, left, right };
        let glued = glue(&recipe)?;
        return Ok((recipe, glued));
    }
    Err(Error::Internal("could not find attachments for a random gluing".into()))
}

/// Like [`random_gluing`] without extra chords, but each side is kept only
/// if the oracle places it in C1 (S2 gluings) or C2 (I gluings), so the
/// glued graph is a member whenever `hypotheses_hold`. Sides on which the
/// oracle hits `budget` are discarded.
pub fn random_member_gluing(
    kind: SplitKind,
    max_nodes: usize,
    budget: EnumerationBudget,
    seed: Seed,
) -> Result<(GlueRecipe, Glued)> {
    if !matches!(kind, SplitKind::S2 | SplitKind::I) {
        return Err(Error::InvalidInput("random gluing supports S2 and I".into()));
    }
    let shared = kind.cutset_size();
    // I sides in C2 need five nodes beyond the cutset; smaller cores than
    // ten nodes rarely admit one
    let min_core = if kind == SplitKind::I { 10 } else { 6 };
    if max_nodes < 2 * min_core - shared {
        return Err(Error::InvalidInput("max_nodes too small for two cores".into()));
    }
    let member = |g: &Graph| {
        let verdict = match kind {
            SplitKind::S2 => oracle_c1(g, budget),
            _ => oracle_c2(g, budget),
        };
        matches!(verdict, Capped::Done(true))
    };
    let mut rng = seed.rng();
    for _ in 0..64 {
        let budget_nodes = max_nodes + shared;
        let nl = rng.gen_range(min_core..=(budget_nodes - min_core).min(budget_nodes / 2 + 2));
        let nr = rng.gen_range(min_core..=(budget_nodes - nl));
        let mut sides = Vec::with_capacity(2);
        for n in [nl, nr] {
            let core = random_core(n, 0, Seed(rng.gen()))?;
            let mut candidates = attachment_candidates(&core, kind);
            candidates.shuffle(&mut rng);
            let side = candidates
                .iter()
                .take(32)
                .map(|att| with_markers(&core, kind, att))
                .find(|side| side.as_ref().map_or(true, |s| member(&s.graph)));
            match side {
                Some(side) => sides.push(side?),
                None => break,
            }
        }
        if sides.len() < 2 {
            continue;
        }
        let right = sides.pop().expect("two sides");
        let left = sides.pop().expect("two sides");
        let recipe = GlueRecipe { kind, left, right };
        let glued = glue(&recipe)?;
        return Ok((recipe, glued));
    }
    Err(Error::Internal("could not find member sides for a random gluing".into()))
}

/// The I-cutset of a glued graph as the canonical split, if the cutset is
/// still an I-cutset there.
pub fn canonical_i_split(glued: &Glued) -> Option<Split> {
    let c = &glued.split.cutset;
    i_cutset_split(&glued.graph, [c[0], c[1], c[2]])
}
