//! Cutsets (0-, 1-, K2-, S2- and I-cutsets), properness tests, and blocks
//! of decomposition with marker nodes.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    components_avoiding, components_without, cutnodes_and_biconnected_components, induced_subgraph, is_2connected,
    reachable_avoiding, Graph,
};
use crate::recognition::{is_chordless, is_in_c0_prime};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SplitKind {
    Zero,
    One,
    K2,
    S2,
    I,
}

impl SplitKind {
    pub fn cutset_size(self) -> usize {
        match self {
            SplitKind::Zero => 0,
            SplitKind::One => 1,
            SplitKind::K2 | SplitKind::S2 => 2,
            SplitKind::I => 3,
        }
    }
}

/// A cutset together with a two-sided partition of the remaining nodes.
///
/// For `I` splits the cutset is stored as `[u, v, w]` where `uv` is the
/// unique edge inside it; all other kinds keep the cutset sorted.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Split {
    pub kind: SplitKind,
    pub cutset: Vec<usize>,
    pub side_a: Vec<usize>,
    pub side_b: Vec<usize>,
}

impl Split {
    /// Checks every structural invariant of the split against `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        let n = g.node_count();
        let bad = |msg: String| Err(Error::InvalidInput(msg));
        if self.cutset.len() != self.kind.cutset_size() {
            return bad(format!("{:?} split needs {} cutset nodes", self.kind, self.kind.cutset_size()));
        }
        if self.side_a.is_empty() || self.side_b.is_empty() {
            return bad("both sides of a split must be nonempty".into());
        }
        let mut owner = vec![0u8; n];
        for (tag, part) in [(1u8, &self.cutset), (2, &self.side_a), (3, &self.side_b)] {
            for &v in part.iter() {
                g.check_node(v)?;
                if owner[v] != 0 {
                    return bad(format!("node {v} appears twice in the split"));
                }
                owner[v] = tag;
            }
        }
        if let Some(v) = owner.iter().position(|&t| t == 0) {
            return bad(format!("node {v} is not covered by the split"));
        }
        for (u, v) in g.edges() {
            if owner[u] + owner[v] == 5 {
                return bad(format!("edge {u}-{v} joins the two sides"));
            }
        }
        match self.kind {
            SplitKind::K2 if !g.has_edge(self.cutset[0], self.cutset[1]) => {
                bad("K2 cutset nodes must be adjacent".into())
            }
            SplitKind::S2 if g.has_edge(self.cutset[0], self.cutset[1]) => {
                bad("S2 cutset nodes must be nonadjacent".into())
            }
            SplitKind::I => {
                let [u, v, w] = [self.cutset[0], self.cutset[1], self.cutset[2]];
                if !g.has_edge(u, v) || g.has_edge(u, w) || g.has_edge(v, w) {
                    return bad("I cutset must span exactly the edge uv".into());
                }
                for side in [&self.side_a, &self.side_b] {
                    if !side_has_attached_component(g, &self.cutset, side) {
                        return bad("each side of an I split needs a component seeing u, v and w".into());
                    }
                }
                Ok(())
            }
            _ => Ok(()),
        }
    }

    /// Same split with the sides exchanged.
    pub fn swapped(&self) -> Split {
        Split { kind: self.kind, cutset: self.cutset.clone(), side_a: self.side_b.clone(), side_b: self.side_a.clone() }
    }
}

fn side_has_attached_component(g: &Graph, cutset: &[usize], side: &[usize]) -> bool {
    let mut blocked = vec![true; g.node_count()];
    for &v in side {
        blocked[v] = false;
    }
    components_avoiding(g, &blocked).iter().any(|comp| sees_all(g, comp, cutset))
}

fn sees_all(g: &Graph, comp: &[usize], targets: &[usize]) -> bool {
    targets.iter().all(|&t| g.neighbors(t).iter().any(|w| comp.binary_search(w).is_ok()))
}

/// Child graph of a decomposition step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Block {
    pub graph: Graph,
    /// Marker node ids inside `graph`; always the highest ids.
    pub marker_nodes: Vec<usize>,
    /// Parent id for every block node, `None` for markers.
    pub back_map: Vec<Option<usize>>,
    pub parent_split: Split,
}

impl Block {
    pub fn is_marker(&self, v: usize) -> bool {
        self.back_map[v].is_none()
    }
}

/// `G[nodes]` plus marker paths. Each marker path is given by its two
/// parent-side endpoints and the number of fresh interior nodes.
fn build_block(g: &Graph, nodes: &[usize], marker_paths: &[(usize, usize, usize)], split: &Split) -> Block {
    let (base, map) = induced_subgraph(g, nodes).expect("split nodes are in range");
    let local = |p: usize| map.binary_search(&p).expect("attachment inside the block");
    let mut edges: Vec<(usize, usize)> = base.edges().collect();
    let mut next = base.node_count();
    let mut marker_nodes = Vec::new();
    for &(from, to, interior) in marker_paths {
        let mut prev = local(from);
        for _ in 0..interior {
            edges.push((prev, next));
            marker_nodes.push(next);
            prev = next;
            next += 1;
        }
        edges.push((prev, local(to)));
    }
    let graph = Graph::from_edges_dedup(next, edges);
    let mut back_map: Vec<Option<usize>> = map.into_iter().map(Some).collect();
    back_map.resize(next, None);
    Block { graph, marker_nodes, back_map, parent_split: split.clone() }
}

fn with_cutset(side: &[usize], cutset: &[usize]) -> Vec<usize> {
    let mut v: Vec<usize> = side.iter().chain(cutset).copied().collect();
    v.sort_unstable();
    v
}

/// Blocks of decomposition of `g` with respect to `s`.
///
/// 0/1 splits yield one induced block per component of `g - cutset`; K2
/// splits yield the two induced sides; S2 and I splits add marker paths
/// (`u-u'-v'-v`, respectively `u-u1-u2-w` and `v-v1-v2-w`).
pub fn blocks_of(g: &Graph, s: &Split) -> Result<Vec<Block>> {
    s.validate(g)?;
    Ok(blocks_of_unchecked(g, s))
}

pub(crate) fn blocks_of_unchecked(g: &Graph, s: &Split) -> Vec<Block> {
    match s.kind {
        SplitKind::Zero | SplitKind::One => components_without(g, &s.cutset)
            .iter()
            .map(|comp| build_block(g, &with_cutset(comp, &s.cutset), &[], s))
            .collect(),
        SplitKind::K2 => [&s.side_a, &s.side_b]
            .into_iter()
            .map(|side| build_block(g, &with_cutset(side, &s.cutset), &[], s))
            .collect(),
        SplitKind::S2 => {
            let (u, v) = (s.cutset[0], s.cutset[1]);
            [&s.side_a, &s.side_b]
                .into_iter()
                .map(|side| build_block(g, &with_cutset(side, &s.cutset), &[(u, v, 2)], s))
                .collect()
        }
        SplitKind::I => {
            let (u, v, w) = (s.cutset[0], s.cutset[1], s.cutset[2]);
            [&s.side_a, &s.side_b]
                .into_iter()
                .map(|side| build_block(g, &with_cutset(side, &s.cutset), &[(u, w, 2), (v, w, 2)], s))
                .collect()
        }
    }
}

fn require_2connected(g: &Graph) -> Result<()> {
    if is_2connected(g) {
        Ok(())
    } else {
        Err(Error::Precondition("graph is not 2-connected".into()))
    }
}

/// Splits `g - cutset` into (component containing the smallest free node,
/// everything else). `None` if `g - cutset` is connected.
fn two_sided(g: &Graph, cutset: &[usize]) -> Option<(Vec<usize>, Vec<usize>)> {
    let comps = components_without(g, cutset);
    if comps.len() < 2 {
        return None;
    }
    let mut rest: Vec<usize> = comps[1..].iter().flatten().copied().collect();
    rest.sort_unstable();
    Some((comps[0].clone(), rest))
}

/// Lexicographically smallest edge whose ends form a cutset.
pub fn find_k2_cutset(g: &Graph) -> Result<Option<Split>> {
    require_2connected(g)?;
    Ok(k2_cutset_unchecked(g))
}

pub(crate) fn k2_cutset_unchecked(g: &Graph) -> Option<Split> {
    g.edges().find_map(|(a, b)| {
        two_sided(g, &[a, b]).map(|(side_a, side_b)| Split { kind: SplitKind::K2, cutset: vec![a, b], side_a, side_b })
    })
}

/// Every K2 split with the canonical two-sided partition, in edge order.
pub fn all_k2_cutsets(g: &Graph) -> Vec<Split> {
    g.edges()
        .filter_map(|(a, b)| {
            two_sided(g, &[a, b]).map(|(side_a, side_b)| Split {
                kind: SplitKind::K2,
                cutset: vec![a, b],
                side_a,
                side_b,
            })
        })
        .collect()
}

/// Whether the ends of some edge separate the graph.
pub fn has_k2_cutset(g: &Graph) -> bool {
    k2_cutset_unchecked(g).is_some()
}

/// No node outside the cutset sees both cutset nodes.
pub fn is_proper_k2(g: &Graph, s: &Split) -> Result<bool> {
    if s.kind != SplitKind::K2 {
        return Err(Error::InvalidInput(format!("expected a K2 split, got {:?}", s.kind)));
    }
    s.validate(g)?;
    Ok(proper_k2_unchecked(g, &s.cutset))
}

pub(crate) fn proper_k2_unchecked(g: &Graph, cutset: &[usize]) -> bool {
    let (a, b) = (cutset[0], cutset[1]);
    !g.neighbors(a).iter().any(|&x| x != b && g.has_edge(x, b))
}

/// Outcome of the constructive S2 search used by the C1 recognizer.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum S2Search {
    InC0,
    NotInC1(S2Rejection),
    Split(Split),
}

/// Why the C1 split search concluded that a propeller exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "rule", rename_all = "snake_case")]
pub enum S2Rejection {
    /// `w` has adjacent neighbors `u`, `v` of degree at least 3.
    AdjacentHeavyNeighbors { w: usize, u: usize, v: usize },
    /// No cutnode of `g - w` separates `u` from `v`.
    NoSeparatingCutnode { w: usize, u: usize, v: usize },
    /// A side of the split `{w, w'}` has at most two nodes.
    SmallSide { cutset: Vec<usize> },
}

/// One round of the C1 core recognizer on a 2-connected, K2-cutset-free
/// graph with at least 7 nodes.
///
/// Picks the smallest node `w` having two neighbors `u < v` of degree ≥ 3.
/// If `uv` is an edge, or `g - w` has no cutnode separating `u` from `v`,
/// a propeller exists. Otherwise the smallest such cutnode `w'` gives the
/// split `({w, w'}, C ∪ C_u, C_v)`, which is rejected when either side has
/// at most two nodes.
pub fn find_proper_s2_split_c1(g: &Graph) -> Result<S2Search> {
    require_2connected(g)?;
    if has_k2_cutset(g) {
        return Err(Error::Precondition("graph has a K2-cutset".into()));
    }
    if g.node_count() < 7 {
        return Err(Error::Precondition("graph has fewer than 7 nodes".into()));
    }
    Ok(s2_split_c1_unchecked(g))
}

pub(crate) fn s2_split_c1_unchecked(g: &Graph) -> S2Search {
    let Some((w, u, v)) = node_with_two_heavy_neighbors(g) else {
        return S2Search::InC0;
    };
    if g.has_edge(u, v) {
        return S2Search::NotInC1(S2Rejection::AdjacentHeavyNeighbors { w, u, v });
    }
    let n = g.node_count();
    let mut blocked = vec![false; n];
    blocked[w] = true;
    let separator = (0..n).find(|&c| {
        if c == w || c == u || c == v {
            return false;
        }
        blocked[c] = true;
        let separates = !reachable_avoiding(g, u, v, &blocked);
        blocked[c] = false;
        separates
    });
    let Some(w2) = separator else {
        return S2Search::NotInC1(S2Rejection::NoSeparatingCutnode { w, u, v });
    };
    let comps = components_without(g, &[w, w2]);
    let mut side_u = Vec::new();
    let mut side_v = Vec::new();
    for comp in comps {
        if comp.binary_search(&v).is_ok() {
            side_v = comp;
        } else {
            side_u.extend(comp);
        }
    }
    side_u.sort_unstable();
    let cutset = vec![w.min(w2), w.max(w2)];
    if side_u.len() <= 2 || side_v.len() <= 2 {
        return S2Search::NotInC1(S2Rejection::SmallSide { cutset });
    }
    S2Search::Split(Split { kind: SplitKind::S2, cutset, side_a: side_u, side_b: side_v })
}

/// Smallest `w` with two neighbors of degree ≥ 3, together with the two
/// smallest such neighbors.
fn node_with_two_heavy_neighbors(g: &Graph) -> Option<(usize, usize, usize)> {
    g.nodes().find_map(|w| {
        let mut heavy = g.neighbors(w).iter().copied().filter(|&x| g.degree(x) >= 3);
        match (heavy.next(), heavy.next()) {
            (Some(u), Some(v)) => Some((w, u, v)),
            _ => None,
        }
    })
}

/// True when `G[{a, b} ∪ side]` is a chordless path from `a` to `b`.
pub fn is_chordless_path_between(g: &Graph, a: usize, b: usize, side: &[usize]) -> bool {
    let nodes = with_cutset(side, &[a, b]);
    let (h, map) = induced_subgraph(g, &nodes).expect("in range");
    let la = map.binary_search(&a).expect("a present");
    let lb = map.binary_search(&b).expect("b present");
    if h.edge_count() + 1 != h.node_count() || !crate::graph::is_connected(&h) {
        return false;
    }
    h.nodes().all(|x| h.degree(x) == if x == la || x == lb { 1 } else { 2 })
}

/// An S2 split is proper when neither side induces, with the cutset, a
/// chordless path between the two cutset nodes.
pub fn is_proper_s2_split(g: &Graph, s: &Split) -> bool {
    s.kind == SplitKind::S2
        && s.validate(g).is_ok()
        && !is_chordless_path_between(g, s.cutset[0], s.cutset[1], &s.side_a)
        && !is_chordless_path_between(g, s.cutset[0], s.cutset[1], &s.side_b)
}

/// Proper S2 split of a 2-connected chordless graph outside C0′, built from
/// an edge `uv` with both ends of degree ≥ 3 and a cutnode `w` of `g - uv`:
/// the split is `({u, w}, C_u - u, C_v)`.
pub fn find_proper_s2_split_chordless(g: &Graph) -> Result<Option<Split>> {
    require_2connected(g)?;
    if is_chordless(g).is_some() {
        return Err(Error::Precondition("graph is not chordless".into()));
    }
    if is_in_c0_prime(g) {
        return Err(Error::Precondition("graph is in C0'".into()));
    }
    Ok(s2_split_chordless_unchecked(g))
}

pub(crate) fn s2_split_chordless_unchecked(g: &Graph) -> Option<Split> {
    let (u, v) = g.edges().find(|&(u, v)| g.degree(u) >= 3 && g.degree(v) >= 3)?;
    let h = g.without_edge(u, v);
    let bc = cutnodes_and_biconnected_components(&h);
    let &w = bc.cutnodes.iter().find(|&&c| c != u && c != v)?;
    let mut side_u = Vec::new();
    let mut side_v = Vec::new();
    for comp in components_without(&h, &[w]) {
        if comp.binary_search(&v).is_ok() {
            side_v.extend(comp);
        } else {
            side_u.extend(comp.into_iter().filter(|&x| x != u));
        }
    }
    side_u.sort_unstable();
    side_v.sort_unstable();
    let split = Split { kind: SplitKind::S2, cutset: vec![u.min(w), u.max(w)], side_a: side_u, side_b: side_v };
    is_proper_s2_split(g, &split).then_some(split)
}

/// Enumeration mode for I-cutset candidates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ICutsetSearch {
    /// Candidates built from an edge `uv` and a node `w` seeing neither.
    Restricted,
    /// Every node triple, filtered by the definition.
    Exhaustive,
}

/// Checks whether `{a, b, c}` is an I-cutset and returns its canonical
/// split: side A is the first component (by smallest member) adjacent to
/// all three cutset nodes, side B is everything else.
pub fn i_cutset_split(g: &Graph, triple: [usize; 3]) -> Option<Split> {
    let [a, b, c] = triple;
    let edges = [(a, b), (a, c), (b, c)];
    let present: Vec<(usize, usize)> = edges.iter().copied().filter(|&(x, y)| g.has_edge(x, y)).collect();
    if present.len() != 1 {
        return None;
    }
    let (x, y) = present[0];
    let (u, v) = (x.min(y), x.max(y));
    let w = a + b + c - u - v;
    let cutset = vec![u, v, w];
    let comps = components_without(g, &cutset);
    let mut attached = comps.iter().enumerate().filter(|(_, comp)| sees_all(g, comp, &cutset));
    let (first, _) = attached.next()?;
    attached.next()?;
    let side_a = comps[first].clone();
    let mut side_b: Vec<usize> =
        comps.iter().enumerate().filter(|&(i, _)| i != first).flat_map(|(_, comp)| comp.iter().copied()).collect();
    side_b.sort_unstable();
    Some(Split { kind: SplitKind::I, cutset, side_a, side_b })
}

/// No node outside `cutset` has two or more neighbors in it.
pub fn is_proper_cutset(g: &Graph, cutset: &[usize]) -> bool {
    g.nodes().filter(|x| !cutset.contains(x)).all(|x| g.neighbors(x).iter().filter(|w| cutset.contains(w)).count() < 2)
}

/// First proper I-cutset by sorted node triple.
pub fn find_proper_i_cutset(g: &Graph, mode: ICutsetSearch) -> Result<Option<Split>> {
    require_2connected(g)?;
    if has_k2_cutset(g) {
        return Err(Error::Precondition("graph has a K2-cutset".into()));
    }
    Ok(proper_i_cutset_unchecked(g, mode))
}

pub(crate) fn proper_i_cutset_unchecked(g: &Graph, mode: ICutsetSearch) -> Option<Split> {
    let check = |t: [usize; 3]| i_cutset_split(g, t).filter(|s| is_proper_cutset(g, &s.cutset));
    let n = g.node_count();
    match mode {
        ICutsetSearch::Restricted => {
            let mut candidates: Vec<[usize; 3]> = Vec::new();
            for (u, v) in g.edges() {
                for w in 0..n {
                    if w != u && w != v && !g.has_edge(u, w) && !g.has_edge(v, w) {
                        let mut t = [u, v, w];
                        t.sort_unstable();
                        candidates.push(t);
                    }
                }
            }
            candidates.sort_unstable();
            candidates.into_iter().find_map(check)
        }
        ICutsetSearch::Exhaustive => {
            (0..n).flat_map(|a| (a + 1..n).flat_map(move |b| (b + 1..n).map(move |c| [a, b, c]))).find_map(check)
        }
    }
}

/// All ways to distribute `comps` over two nonempty sides, keeping only
/// partitions accepted by `keep`. Component counts above 20 are refused.
fn partitions_of_components(
    comps: &[Vec<usize>],
    mut keep: impl FnMut(&[usize], &[usize]) -> bool,
) -> Result<Vec<(Vec<usize>, Vec<usize>)>> {
    let k = comps.len();
    if k > 20 {
        return Err(Error::InvalidInput(format!("{k} components is too many to enumerate splits")));
    }
    let mut out = Vec::new();
    // component 0 always on side A; avoids listing every split twice
    for mask in 0u32..(1 << (k - 1)) {
        let full = (mask << 1) | 1;
        if full == (1 << k) - 1 {
            continue;
        }
        let mut a = Vec::new();
        let mut b = Vec::new();
        for (i, comp) in comps.iter().enumerate() {
            if full >> i & 1 == 1 {
                a.extend(comp)
            } else {
                b.extend(comp)
            }
        }
        a.sort_unstable();
        b.sort_unstable();
        if keep(&a, &b) {
            out.push((a, b));
        }
    }
    Ok(out)
}

/// Every proper S2 split of `g` (each unordered split listed once).
pub fn all_proper_s2_splits(g: &Graph) -> Result<Vec<Split>> {
    let n = g.node_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            if g.has_edge(a, b) {
                continue;
            }
            let comps = components_without(g, &[a, b]);
            if comps.len() < 2 {
                continue;
            }
            let parts = partitions_of_components(&comps, |x, y| {
                !is_chordless_path_between(g, a, b, x) && !is_chordless_path_between(g, a, b, y)
            })?;
            out.extend(parts.into_iter().map(|(side_a, side_b)| Split {
                kind: SplitKind::S2,
                cutset: vec![a, b],
                side_a,
                side_b,
            }));
        }
    }
    Ok(out)
}

/// Every split of every I-cutset of `g`; with `proper_only`, only proper
/// I-cutsets are considered.
pub fn all_i_splits(g: &Graph, proper_only: bool) -> Result<Vec<Split>> {
    let n = g.node_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                let Some(canon) = i_cutset_split(g, [a, b, c]) else { continue };
                if proper_only && !is_proper_cutset(g, &canon.cutset) {
                    continue;
                }
                let cutset = canon.cutset;
                let comps = components_without(g, &cutset);
                let parts = partitions_of_components(&comps, |x, y| {
                    side_has_attached_component(g, &cutset, x) && side_has_attached_component(g, &cutset, y)
                })?;
                out.extend(parts.into_iter().map(|(side_a, side_b)| Split {
                    kind: SplitKind::I,
                    cutset: cutset.clone(),
                    side_a,
                    side_b,
                }));
            }
        }
    }
    Ok(out)
}

/// Block for `side_a` of an S2 split with a single marker node adjacent to
/// both cutset nodes (the graph `G_X` used for chordless graphs).
pub fn single_marker_block(g: &Graph, s: &Split) -> Result<Block> {
    if s.kind != SplitKind::S2 {
        return Err(Error::InvalidInput("single-marker blocks are defined for S2 splits".into()));
    }
    s.validate(g)?;
    Ok(build_block(g, &with_cutset(&s.side_a, &s.cutset), &[(s.cutset[0], s.cutset[1], 1)], s))
}
