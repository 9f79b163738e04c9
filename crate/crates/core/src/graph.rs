//! Simple undirected graphs, the named families used throughout the crate,
//! structural statistics, maximum matchings and simple-cycle listing.
//!
//! Vertices are the dense indices `0..n`. Edges are stored once, as sorted
//! pairs `(u, v)` with `u < v`, and the edge list itself is kept sorted so
//! that an edge's position is a stable key for per-edge data such as gains.

use std::collections::VecDeque;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

/// Largest order accepted by the exact clique search.
pub const CLIQUE_CAP: usize = 32;
/// Largest edge count accepted by the exhaustive matching oracle.
pub const MATCHING_ORACLE_CAP: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("duplicate edge {{{0}, {1}}}")]
    DuplicateEdge(usize, usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("clique search is capped at {CLIQUE_CAP} vertices, graph has {0}")]
    CliqueCapExceeded(usize),
    #[error("matching oracle is capped at {MATCHING_ORACLE_CAP} edges, graph has {0}")]
    OracleCapExceeded(usize),
    #[error("more than {0} simple cycles")]
    CycleCapExceeded(usize),
    #[error("invalid parameter for {family}: {reason}")]
    InvalidFamily { family: &'static str, reason: String },
    #[error("{0:?} is not an edge")]
    NotAnEdge((usize, usize)),
    #[error("edges {0:?} and {1:?} share a vertex")]
    NotAMatching((usize, usize), (usize, usize)),
}

/// Undirected simple graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SimpleGraph {
    n: usize,
    edges: Vec<(usize, usize)>,
    adjacency: Vec<Vec<usize>>,
}

impl SimpleGraph {
    /// Builds a graph from an unordered edge list. Endpoint order in the input
    /// does not matter; loops, duplicates and out-of-range endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: v, n });
                }
            }
            if a == b {
                return Err(GraphError::Loop(a));
            }
            list.push((a.min(b), a.max(b)));
        }
        list.sort_unstable();
        if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
        let mut adjacency = vec![Vec::new(); n];
        for &(u, v) in &list {
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        for nbrs in &mut adjacency {
            nbrs.sort_unstable();
        }
        Ok(Self { n, edges: list, adjacency })
    }

    pub fn empty(n: usize) -> Self {
        Self { n, edges: Vec::new(), adjacency: vec![Vec::new(); n] }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edges `(u, v)`, `u < v`, in lexicographic order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Sorted neighbour list.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of `{u, v}` in [`Self::edges`].
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        if u == v {
            return None;
        }
        self.edges.binary_search(&(u.min(v), u.max(v))).ok()
    }

    /// Edge degree `d(u) + d(v) - 2`.
    pub fn edge_degree(&self, u: usize, v: usize) -> usize {
        self.degree(u) + self.degree(v) - 2
    }

    /// Subgraph induced by `vertices` (relabelled `0..k` in the given order).
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut index = vec![usize::MAX; self.n];
        for (i, &v) in vertices.iter().enumerate() {
            index[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
            .map(|&(u, v)| (index[u], index[v]));
        SimpleGraph::new(vertices.len(), edges).expect("induced subgraph of a simple graph is simple")
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Two-colouring (`false`/`true` per vertex) if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for &w in &self.adjacency[u] {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(|c| c.unwrap()).collect())
    }

    /// Length of a shortest cycle, `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for s in 0..self.n {
            let mut dist = vec![usize::MAX; self.n];
            let mut parent = vec![usize::MAX; self.n];
            dist[s] = 0;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                for &w in &self.adjacency[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        parent[w] = u;
                        queue.push_back(w);
                    } else if parent[u] != w {
                        let len = dist[u] + dist[w] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Clique number by branch and bound; exact up to [`CLIQUE_CAP`] vertices.
    pub fn clique_number(&self) -> Result<usize, GraphError> {
        if self.n > CLIQUE_CAP {
            return Err(GraphError::CliqueCapExceeded(self.n));
        }
        let masks: Vec<u64> = (0..self.n)
            .map(|v| self.adjacency[v].iter().fold(0u64, |m, &w| m | (1 << w)))
            .collect();
        fn expand(size: usize, candidates: u64, masks: &[u64], best: &mut usize) {
            if candidates == 0 {
                *best = (*best).max(size);
                return;
            }
            let mut rest = candidates;
            while rest != 0 {
                if size + rest.count_ones() as usize <= *best {
                    return;
                }
                let v = rest.trailing_zeros() as usize;
                rest &= !(1 << v);
                expand(size + 1, rest & masks[v], masks, best);
            }
        }
        let mut best = 0;
        let all = if self.n == 64 { u64::MAX } else { (1u64 << self.n) - 1 };
        expand(0, all, &masks, &mut best);
        Ok(best)
    }

    /// Whether the graph is complete multipartite (non-adjacency is an
    /// equivalence relation on vertices). Returns the part sizes if so.
    pub fn complete_multipartite_parts(&self) -> Option<Vec<usize>> {
        let mut part = vec![usize::MAX; self.n];
        let mut sizes = Vec::new();
        for v in 0..self.n {
            if part[v] != usize::MAX {
                continue;
            }
            let id = sizes.len();
            let members: Vec<usize> = (0..self.n).filter(|&w| w == v || !self.has_edge(v, w)).collect();
            for &w in &members {
                if part[w] != usize::MAX {
                    return None;
                }
                part[w] = id;
            }
            sizes.push(members.len());
        }
        // Every pair in different parts must be adjacent, every pair in the same part not.
        let expected: usize = {
            let total: usize = sizes.iter().sum();
            (total * total - sizes.iter().map(|s| s * s).sum::<usize>()) / 2
        };
        let consistent = self.edges.iter().all(|&(u, v)| part[u] != part[v]);
        (consistent && expected == self.m()).then_some(sizes)
    }

    /// Part sizes `(a, b)`, `a <= b`, if the graph is complete bipartite with
    /// both parts non-empty.
    pub fn complete_bipartite_parts(&self) -> Option<(usize, usize)> {
        let color = self.bipartition()?;
        let a = color.iter().filter(|&&c| !c).count();
        let b = self.n - a;
        (a > 0 && b > 0 && self.m() == a * b && self.is_connected()).then_some((a.min(b), a.max(b)))
    }

    /// Lists every simple cycle once, as a vertex sequence starting at its
    /// smallest vertex with the second vertex smaller than the last.
    pub fn simple_cycles(&self, cap: usize) -> Result<Vec<Vec<usize>>, GraphError> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        let mut on_path = vec![false; self.n];
        for s in 0..self.n {
            path.push(s);
            on_path[s] = true;
            self.extend_cycles(s, &mut path, &mut on_path, &mut out, cap)?;
            on_path[s] = false;
            path.pop();
        }
        Ok(out)
    }

    fn extend_cycles(
        &self,
        start: usize,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        out: &mut Vec<Vec<usize>>,
        cap: usize,
    ) -> Result<(), GraphError> {
        let last = *path.last().unwrap();
        for &w in &self.adjacency[last] {
            if w == start && path.len() >= 3 && path[1] < last {
                if out.len() == cap {
                    return Err(GraphError::CycleCapExceeded(cap));
                }
                out.push(path.clone());
            } else if w > start && !on_path[w] {
                path.push(w);
                on_path[w] = true;
                self.extend_cycles(start, path, on_path, out, cap)?;
                on_path[w] = false;
                path.pop();
            }
        }
        Ok(())
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.n;
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift)));
        SimpleGraph::new(self.n + other.n, edges).expect("disjoint union of simple graphs is simple")
    }

    /// Adds `extra` isolated vertices.
    pub fn with_isolated(&self, extra: usize) -> SimpleGraph {
        self.disjoint_union(&SimpleGraph::empty(extra))
    }
}

/// Structural summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphStats {
    pub degree_sequence: Vec<usize>,
    pub min_degree: usize,
    pub max_degree: usize,
    /// Maximum over edges of `d(u) + d(v) - 2`; zero for edgeless graphs.
    pub max_edge_degree: usize,
    /// `None` for forests.
    pub girth: Option<usize>,
    pub triangle_free: bool,
    pub clique_number: usize,
    pub bipartition: Option<Vec<bool>>,
    pub connected: bool,
    pub unicyclic: bool,
}

pub fn stats(g: &SimpleGraph) -> Result<GraphStats, GraphError> {
    let degree_sequence: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let clique_number = g.clique_number()?;
    let connected = g.is_connected();
    Ok(GraphStats {
        min_degree: degree_sequence.iter().copied().min().unwrap_or(0),
        max_degree: degree_sequence.iter().copied().max().unwrap_or(0),
        max_edge_degree: g.edges().iter().map(|&(u, v)| g.edge_degree(u, v)).max().unwrap_or(0),
        girth: g.girth(),
        triangle_free: clique_number <= 2,
        clique_number,
        bipartition: g.bipartition(),
        connected,
        unicyclic: connected && g.n() > 0 && g.m() == g.n(),
        degree_sequence,
    })
}

/// Set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    edges: Vec<(usize, usize)>,
}

impl Matching {
    /// Validates that every pair is an edge of `g` and that no two share a vertex.
    pub fn new(g: &SimpleGraph, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, GraphError> {
        let mut list: Vec<(usize, usize)> = edges.into_iter().map(|(a, b)| (a.min(b), a.max(b))).collect();
        list.sort_unstable();
        let mut owner: Vec<Option<(usize, usize)>> = vec![None; g.n()];
        for &e in &list {
            if e.1 >= g.n() || !g.has_edge(e.0, e.1) {
                return Err(GraphError::NotAnEdge(e));
            }
            for v in [e.0, e.1] {
                if let Some(prev) = owner[v] {
                    return Err(GraphError::NotAMatching(prev, e));
                }
                owner[v] = Some(e);
            }
        }
        Ok(Self { edges: list })
    }

    /// Sorted canonical edges.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    fn from_mates(mate: &[Option<usize>]) -> Self {
        let edges = mate
            .iter()
            .enumerate()
            .filter_map(|(v, m)| m.filter(|&w| v < w).map(|w| (v, w)))
            .collect();
        Self { edges }
    }

    fn mates(&self, n: usize) -> Vec<Option<usize>> {
        let mut mate = vec![None; n];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }
}

/// Edmonds' augmenting-path search with blossom contraction.
struct Blossom<'a> {
    g: &'a SimpleGraph,
    mate: Vec<Option<usize>>,
    parent: Vec<Option<usize>>,
    base: Vec<usize>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a SimpleGraph, mate: Vec<Option<usize>>) -> Self {
        let n = g.n();
        Self {
            g,
            mate,
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
        }
    }

    fn lowest_common_base(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.g.n()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                None => break,
                Some(m) => a = self.parent[m].expect("matched vertex in tree has a parent"),
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            let m = self.mate[b].expect("non-root tree vertex is matched");
            b = self.parent[m].expect("matched vertex in tree has a parent");
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            let mv = self.mate[v].expect("blossom path vertex is matched");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[mv]] = true;
            self.parent[v] = Some(child);
            child = mv;
            v = self.parent[mv].expect("blossom path vertex has a parent");
        }
    }

    /// Returns the free endpoint of an augmenting path rooted at `root`.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.g.n();
        self.used.iter_mut().for_each(|u| *u = false);
        self.parent.iter_mut().for_each(|p| *p = None);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.used[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let to_is_outer = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if to_is_outer {
                    let cur = self.lowest_common_base(v, to);
                    self.in_blossom.iter_mut().for_each(|b| *b = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }

    fn augment(&mut self, end: usize) {
        let mut v = Some(end);
        while let Some(x) = v {
            let px = self.parent[x].expect("augmenting path vertex has a parent");
            let next = self.mate[px];
            self.mate[x] = Some(px);
            self.mate[px] = Some(x);
            v = next;
        }
    }
}

/// Maximum matching by Edmonds' blossom algorithm. Exposed vertices are
/// tried as roots in increasing order, so the result is deterministic.
pub fn maximum_matching(g: &SimpleGraph) -> Matching {
    let mut search = Blossom::new(g, vec![None; g.n()]);
    for root in 0..g.n() {
        if search.mate[root].is_none() {
            if let Some(end) = search.find_path(root) {
                search.augment(end);
            }
        }
    }
    Matching::from_mates(&search.mate)
}

/// Whether `matching` admits no augmenting path in `g`.
pub fn is_maximum(g: &SimpleGraph, matching: &Matching) -> bool {
    let mut search = Blossom::new(g, matching.mates(g.n()));
    (0..g.n()).all(|root| search.mate[root].is_some() || search.find_path(root).is_none())
}

/// Exhaustive maximum matching over independent edge subsets. Test oracle.
pub fn maximum_matching_oracle(g: &SimpleGraph) -> Result<Matching, GraphError> {
    if g.m() > MATCHING_ORACLE_CAP {
        return Err(GraphError::OracleCapExceeded(g.m()));
    }
    fn search(edges: &[(usize, usize)], i: usize, used: u64, chosen: &mut Vec<(usize, usize)>, best: &mut Vec<(usize, usize)>) {
        if chosen.len() + (edges.len() - i) <= best.len() {
            return;
        }
        if i == edges.len() {
            *best = chosen.clone();
            return;
        }
        let (u, v) = edges[i];
        let mask = (1u64 << u) | (1u64 << v);
        if used & mask == 0 {
            chosen.push((u, v));
            search(edges, i + 1, used | mask, chosen, best);
            chosen.pop();
        }
        search(edges, i + 1, used, chosen, best);
    }
    let mut best = Vec::new();
    let mut used_bits = Vec::new();
    if g.n() <= 64 {
        search(g.edges(), 0, 0, &mut used_bits, &mut best);
    } else {
        // Only vertices touched by edges matter; relabel them densely.
        let touched: Vec<usize> = (0..g.n()).filter(|&v| g.degree(v) > 0).collect();
        let sub = g.induced(&touched);
        search(sub.edges(), 0, 0, &mut used_bits, &mut best);
        best = best.into_iter().map(|(a, b)| (touched[a], touched[b])).collect();
    }
    Matching::new(g, best)
}

/// Double star `T_{p,q}`: centre edge `{0, 1}`, pendants `2..2+p` on 0 and
/// `2+p..2+p+q` on 1.
pub fn double_star(p: usize, q: usize) -> SimpleGraph {
    book(p, q, 0)
}

/// Book `G_{p,q,r}`: base edge `{0, 1}`, apexes `2..2+r` adjacent to both
/// base vertices, then `p` pendants on 0 and `q` pendants on 1.
pub fn book(p: usize, q: usize, r: usize) -> SimpleGraph {
    let mut edges = vec![(0, 1)];
    let mut next = 2;
    for _ in 0..r {
        edges.push((0, next));
        edges.push((1, next));
        next += 1;
    }
    for _ in 0..p {
        edges.push((0, next));
        next += 1;
    }
    for _ in 0..q {
        edges.push((1, next));
        next += 1;
    }
    SimpleGraph::new(next, edges).expect("book edges are distinct")
}

/// Erdos-Renyi `G(n, p)` from a ChaCha8 stream seeded with `seed`; pairs
/// are visited in lexicographic order.
pub fn random_graph(n: usize, p: f64, seed: u64) -> SimpleGraph {
    random_graph_with(n, p, &mut ChaCha8Rng::seed_from_u64(seed))
}

pub fn random_graph_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p.clamp(0.0, 1.0)) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::new(n, edges).expect("lexicographic pairs are simple")
}

/// Named graph families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Star(usize),
    DoubleStar(usize, usize),
    Book(usize, usize, usize),
    /// The extremal diameter-3 tree with the given maximum edge degree,
    /// realised as `T_{floor(d/2), ceil(d/2)}`.
    TreeT1(usize),
    Empty(usize),
}

pub fn named_family(kind: Family) -> Result<SimpleGraph, GraphError> {
    let invalid = |family, reason: &str| Err(GraphError::InvalidFamily { family, reason: reason.to_string() });
    match kind {
        Family::Path(n) => {
            if n == 0 {
                return invalid("path", "needs at least one vertex");
            }
            Ok(SimpleGraph::new(n, (1..n).map(|i| (i - 1, i))).unwrap())
        }
        Family::Cycle(n) => {
            if n < 3 {
                return invalid("cycle", "needs at least three vertices");
            }
            Ok(SimpleGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
        }
        Family::Complete(n) => {
            if n == 0 {
                return invalid("complete", "needs at least one vertex");
            }
            Ok(SimpleGraph::new(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)))).unwrap())
        }
        Family::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return invalid("complete-bipartite", "both parts must be non-empty");
            }
            Ok(SimpleGraph::new(a + b, (0..a).flat_map(|u| (a..a + b).map(move |v| (u, v)))).unwrap())
        }
        Family::Star(leaves) => Ok(SimpleGraph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).unwrap()),
        Family::DoubleStar(p, q) => Ok(double_star(p, q)),
        Family::Book(p, q, r) => Ok(book(p, q, r)),
        Family::TreeT1(edge_degree) => Ok(double_star(edge_degree / 2, edge_degree.div_ceil(2))),
        Family::Empty(n) => Ok(SimpleGraph::empty(n)),
    }
}
