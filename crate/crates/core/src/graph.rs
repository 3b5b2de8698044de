//! Undirected and directed graph representations with the constructions used
//! throughout the crate: complete graphs, disjoint unions, joins, traversals
//! and component decompositions.
//!
//! Vertices are 0-indexed. `disjoint_union` relabels the second operand by
//! offset `n1`. All types are immutable in normal use (constructors build,
//! algorithms read), so values can be shared freely across threads.

use crate::bitset::{VertexSet, MAX_VERTICES};
use crate::error::{Error, Result};

/// Simple undirected graph, adjacency stored as one vertex-bitset per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

/// Simple directed graph (no loops), out-neighbors as bitsets.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Digraph {
    n: usize,
    out_adj: Vec<VertexSet>,
}

/// A partition of the vertex set into components. Blocks are sorted
/// internally and ordered by their smallest vertex, so two partitions are
/// equal iff they describe the same family of sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComponentPartition {
    blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    fn from_masks(mut masks: Vec<VertexSet>) -> Self {
        masks.sort_by_key(|m| m.lowest().unwrap_or(usize::MAX));
        ComponentPartition {
            blocks: masks.into_iter().map(|m| m.to_vec()).collect(),
        }
    }

    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Indices of blocks with at least two vertices.
    pub fn nontrivial_blocks(&self) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.len() >= 2)
            .map(|(i, _)| i)
            .collect()
    }

    pub fn block_of(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("vertex count must be at least 1"));
    }
    if n > MAX_VERTICES {
        return Err(Error::invalid(format!(
            "vertex count {n} exceeds the supported maximum {MAX_VERTICES}"
        )));
    }
    Ok(())
}

/// Index of the unordered pair (i, j), i < j, in graph6 bit order:
/// (0,1), (0,2), (1,2), (0,3), (1,3), (2,3), ...
pub(crate) fn pair_index(i: usize, j: usize) -> usize {
    debug_assert!(i < j);
    j * (j - 1) / 2 + i
}

/// BFS over bitset adjacency restricted to `alive`; `None` marks vertices
/// unreachable from `src` (the distinguished sentinel, never a large finite
/// number).
fn bfs_masked(adj: &[VertexSet], src: usize, alive: VertexSet) -> Vec<Option<u32>> {
    let n = adj.len();
    let mut dist = vec![None; n];
    if !alive.contains(src) {
        return dist;
    }
    dist[src] = Some(0);
    let mut seen = VertexSet::singleton(src);
    let mut frontier = seen;
    let mut d = 0u32;
    while !frontier.is_empty() {
        d += 1;
        let mut next = VertexSet::EMPTY;
        for v in frontier.iter() {
            next = next | (adj[v] & alive);
        }
        next = next - seen;
        for v in next.iter() {
            dist[v] = Some(d);
        }
        seen = seen | next;
        frontier = next;
    }
    dist
}

/// Connected components of the subgraph induced on `alive`, as masks.
fn component_masks(adj: &[VertexSet], alive: VertexSet) -> Vec<VertexSet> {
    let mut remaining = alive;
    let mut comps = Vec::new();
    while let Some(seed) = remaining.lowest() {
        let mut comp = VertexSet::singleton(seed);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | (adj[v] & alive);
            }
            next = next - comp;
            comp = comp | next;
            frontier = next;
        }
        comps.push(comp);
        remaining = remaining - comp;
    }
    comps
}

impl Graph {
    /// Edgeless graph on `n` vertices (1 ≤ n ≤ 64).
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let all = VertexSet::full(n);
        let adj = (0..n).map(|v| all - VertexSet::singleton(v)).collect();
        Ok(Graph { n, adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Minimum over all vertices of the degree.
    pub fn min_degree(&self) -> usize {
        self.vertices().map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    /// Edges as (u, v) with u < v, lexicographic.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices().flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "edge ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        if self.adj[u].contains(v) {
            return Err(Error::invalid(format!("duplicate edge ({u}, {v})")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Copy of the graph with one edge removed.
    pub fn without_edge(&self, u: usize, v: usize) -> Result<Graph> {
        if !self.has_edge(u, v) {
            return Err(Error::invalid(format!("no edge ({u}, {v}) to remove")));
        }
        let mut g = self.clone();
        g.adj[u].remove(v);
        g.adj[v].remove(u);
        Ok(g)
    }

    /// Copy with one edge added.
    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let mut g = self.clone();
        g.add_edge(u, v)?;
        Ok(g)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut adj = Vec::with_capacity(n);
        adj.extend_from_slice(&self.adj);
        for v in 0..other.n {
            adj.push(VertexSet::from_bits(other.adj[v].bits() << self.n));
        }
        Ok(Graph { n, adj })
    }

    /// Join: disjoint union plus all edges between the two vertex sets.
    pub fn join(&self, other: &Graph) -> Result<Graph> {
        let mut g = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(g.n) - left;
        for v in left.iter() {
            g.adj[v] = g.adj[v] | right;
        }
        for v in right.iter() {
            g.adj[v] = g.adj[v] | left;
        }
        Ok(g)
    }

    /// Graph from a bitmask over the pair indices in graph6 column order:
    /// (0,1), (0,2), (1,2), (0,3), ...
    /// Requires n(n-1)/2 ≤ 64, i.e. n ≤ 11.
    pub fn from_edge_mask(n: usize, mask: u64) -> Result<Graph> {
        check_order(n)?;
        if n * (n - 1) / 2 > 64 {
            return Err(Error::invalid(format!("edge mask overflows for n = {n}")));
        }
        let mut g = Graph::empty(n)?;
        let mut idx = 0;
        for j in 1..n {
            for i in 0..j {
                if (mask >> idx) & 1 == 1 {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
                idx += 1;
            }
        }
        Ok(g)
    }

    /// The pair-index bitmask of this graph (inverse of [`Graph::from_edge_mask`]).
    pub fn edge_mask(&self) -> Result<u64> {
        if self.n * (self.n - 1) / 2 > 64 {
            return Err(Error::invalid(format!(
                "edge mask overflows for n = {}",
                self.n
            )));
        }
        let mut mask = 0u64;
        for (u, v) in self.edges() {
            mask |= 1 << pair_index(u, v);
        }
        Ok(mask)
    }

    /// Shortest-path lengths from `src`; `None` for unreachable vertices.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        bfs_masked(&self.adj, src, VertexSet::full(self.n))
    }

    pub fn is_connected(&self) -> bool {
        let reach = component_masks(&self.adj, VertexSet::full(self.n));
        reach.len() == 1
    }

    pub fn connected_components(&self) -> ComponentPartition {
        ComponentPartition::from_masks(component_masks(&self.adj, VertexSet::full(self.n)))
    }

    /// Components of the graph induced on V minus `removed`.
    pub fn components_avoiding(&self, removed: VertexSet) -> ComponentPartition {
        let alive = VertexSet::full(self.n) - removed;
        ComponentPartition::from_masks(component_masks(&self.adj, alive))
    }

    /// True iff removing `removed` leaves at least two components with
    /// at least two vertices each. Allocation-light form used by the
    /// exhaustive searches.
    pub(crate) fn splits_nontrivially(&self, removed: VertexSet) -> bool {
        let alive = VertexSet::full(self.n) - removed;
        let mut remaining = alive;
        let mut nontrivial = 0;
        while let Some(seed) = remaining.lowest() {
            let mut comp = VertexSet::singleton(seed);
            let mut frontier = comp;
            while !frontier.is_empty() {
                let mut next = VertexSet::EMPTY;
                for v in frontier.iter() {
                    next = next | (self.adj[v] & alive);
                }
                next = next - comp;
                comp = comp | next;
                frontier = next;
            }
            if comp.len() >= 2 {
                nontrivial += 1;
                if nontrivial >= 2 {
                    return true;
                }
            }
            remaining = remaining - comp;
        }
        false
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, edges={:?})",
            self.n,
            self.edges().collect::<Vec<_>>()
        )
    }
}

impl Digraph {
    /// Arcless digraph on `n` vertices (1 ≤ n ≤ 64).
    pub fn empty(n: usize) -> Result<Digraph> {
        check_order(n)?;
        Ok(Digraph {
            n,
            out_adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Complete digraph: every ordered pair of distinct vertices is an arc.
    pub fn complete(n: usize) -> Result<Digraph> {
        check_order(n)?;
        let all = VertexSet::full(n);
        let out_adj = (0..n).map(|v| all - VertexSet::singleton(v)).collect();
        Ok(Digraph { n, out_adj })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn out_neighbors(&self, v: usize) -> VertexSet {
        self.out_adj[v]
    }

    pub fn arc_count(&self) -> usize {
        self.out_adj.iter().map(|a| a.len()).sum()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.out_adj[u].contains(v)
    }

    /// Arcs as ordered pairs (u, v), lexicographic.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.vertices()
            .flat_map(move |u| self.out_adj[u].iter().map(move |v| (u, v)))
    }

    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n || v >= self.n {
            return Err(Error::invalid(format!(
                "arc ({u}, {v}) out of range for {} vertices",
                self.n
            )));
        }
        if u == v {
            return Err(Error::invalid(format!("loop at vertex {u}")));
        }
        if self.out_adj[u].contains(v) {
            return Err(Error::invalid(format!("duplicate arc ({u}, {v})")));
        }
        self.out_adj[u].insert(v);
        Ok(())
    }

    /// Copy with one arc added.
    pub fn with_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        let mut d = self.clone();
        d.add_arc(u, v)?;
        Ok(d)
    }

    /// Copy with one arc removed.
    pub fn without_arc(&self, u: usize, v: usize) -> Result<Digraph> {
        if !self.has_arc(u, v) {
            return Err(Error::invalid(format!("no arc ({u}, {v}) to remove")));
        }
        let mut d = self.clone();
        d.out_adj[u].remove(v);
        Ok(d)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Digraph) -> Result<Digraph> {
        let n = self.n + other.n;
        check_order(n)?;
        let mut out_adj = Vec::with_capacity(n);
        out_adj.extend_from_slice(&self.out_adj);
        for v in 0..other.n {
            out_adj.push(VertexSet::from_bits(other.out_adj[v].bits() << self.n));
        }
        Ok(Digraph { n, out_adj })
    }

    /// Directed join: disjoint union plus both arc directions between every
    /// cross pair.
    pub fn directed_join(&self, other: &Digraph) -> Result<Digraph> {
        let mut d = self.disjoint_union(other)?;
        let left = VertexSet::full(self.n);
        let right = VertexSet::full(d.n) - left;
        for v in left.iter() {
            d.out_adj[v] = d.out_adj[v] | right;
        }
        for v in right.iter() {
            d.out_adj[v] = d.out_adj[v] | left;
        }
        Ok(d)
    }

    /// The reverse digraph (every arc flipped).
    pub fn reverse(&self) -> Digraph {
        let mut out_adj = vec![VertexSet::EMPTY; self.n];
        for (u, v) in self.arcs() {
            out_adj[v].insert(u);
        }
        Digraph { n: self.n, out_adj }
    }

    /// Directed shortest-path lengths from `src`; `None` for unreachable.
    pub fn bfs_distances(&self, src: usize) -> Vec<Option<u32>> {
        bfs_masked(&self.out_adj, src, VertexSet::full(self.n))
    }

    pub fn is_strongly_connected(&self) -> bool {
        self.strong_connectivity_violation().is_none()
    }

    /// An ordered pair (from, to) with no directed path, if one exists.
    pub fn strong_connectivity_violation(&self) -> Option<(usize, usize)> {
        let fwd = self.bfs_distances(0);
        if let Some(v) = fwd.iter().position(|d| d.is_none()) {
            return Some((0, v));
        }
        let bwd = self.reverse().bfs_distances(0);
        if let Some(v) = bwd.iter().position(|d| d.is_none()) {
            return Some((v, 0));
        }
        None
    }

    pub fn strongly_connected_components(&self) -> ComponentPartition {
        ComponentPartition::from_masks(self.scc_masks(VertexSet::full(self.n)))
    }

    /// Strongly connected components of the digraph induced on V minus
    /// `removed`.
    pub fn components_avoiding(&self, removed: VertexSet) -> ComponentPartition {
        ComponentPartition::from_masks(self.scc_masks(VertexSet::full(self.n) - removed))
    }

    /// True iff removing `removed` leaves at least two strongly connected
    /// components with at least two vertices each.
    pub(crate) fn splits_nontrivially(&self, removed: VertexSet) -> bool {
        let alive = VertexSet::full(self.n) - removed;
        let mut nontrivial = 0;
        for comp in self.scc_masks(alive) {
            if comp.len() >= 2 {
                nontrivial += 1;
                if nontrivial >= 2 {
                    return true;
                }
            }
        }
        false
    }

    /// Tarjan over the vertices in `alive`.
    fn scc_masks(&self, alive: VertexSet) -> Vec<VertexSet> {
        struct State<'a> {
            out_adj: &'a [VertexSet],
            alive: VertexSet,
            index: u32,
            idx: Vec<Option<u32>>,
            low: Vec<u32>,
            on_stack: Vec<bool>,
            stack: Vec<usize>,
            comps: Vec<VertexSet>,
        }

        fn connect(v: usize, st: &mut State<'_>) {
            st.idx[v] = Some(st.index);
            st.low[v] = st.index;
            st.index += 1;
            st.stack.push(v);
            st.on_stack[v] = true;

            for w in (st.out_adj[v] & st.alive).iter() {
                if st.idx[w].is_none() {
                    connect(w, st);
                    st.low[v] = st.low[v].min(st.low[w]);
                } else if st.on_stack[w] {
                    st.low[v] = st.low[v].min(st.idx[w].unwrap());
                }
            }

            if st.low[v] == st.idx[v].unwrap() {
                let mut comp = VertexSet::EMPTY;
                loop {
                    let w = st.stack.pop().expect("tarjan stack underflow");
                    st.on_stack[w] = false;
                    comp.insert(w);
                    if w == v {
                        break;
                    }
                }
                st.comps.push(comp);
            }
        }

        let mut st = State {
            out_adj: &self.out_adj,
            alive,
            index: 0,
            idx: vec![None; self.n],
            low: vec![0; self.n],
            on_stack: vec![false; self.n],
            stack: Vec::new(),
            comps: Vec::new(),
        };
        for v in alive.iter() {
            if st.idx[v].is_none() {
                connect(v, &mut st);
            }
        }
        st.comps
    }
}

impl std::fmt::Debug for Digraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Digraph(n={}, arcs={:?})",
            self.n,
            self.arcs().collect::<Vec<_>>()
        )
    }
}
