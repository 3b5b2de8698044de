//! Vertex connectivity and essential connectivity.
//!
//! An essential vertex-cut is a set S whose removal leaves at least two
//! components each containing an edge (equivalently, at least two vertices,
//! since the graphs here are simple). The essential connectivity is the size
//! of a minimum essential cut; complete graphs and stars have none, which is
//! reported as `None` rather than an error. The searches enumerate candidate
//! cuts in increasing size and return a full certificate; exactness matters
//! more than speed at the scales this crate verifies.

use crate::bitset::VertexSet;
use crate::error::{Error, Result};
use crate::graph::{ComponentPartition, Digraph, Graph};

/// A minimum essential vertex-cut together with the component partition of
/// the graph minus the cut that witnesses the essential condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EssentialCutCertificate {
    /// The cut S, sorted ascending. The lexicographically smallest minimum
    /// cut is returned, so certificates are deterministic.
    pub cut: Vec<usize>,
    /// Components of G - S (strongly connected components for digraphs).
    pub partition: ComponentPartition,
    /// Indices into `partition` of the blocks with at least two vertices.
    pub nontrivial_blocks: Vec<usize>,
}

impl EssentialCutCertificate {
    pub fn cut_size(&self) -> usize {
        self.cut.len()
    }

    fn cut_set(&self) -> VertexSet {
        self.cut.iter().copied().collect()
    }
}

/// Visits all k-element subsets of 0..n in lexicographic order until the
/// callback returns true; reports whether any call did.
fn any_combination(n: usize, k: usize, mut f: impl FnMut(&[usize]) -> bool) -> bool {
    if k > n {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        if f(&idx) {
            return true;
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] != i + n - k {
                break;
            }
            if i == 0 {
                return false;
            }
        }
        idx[i] += 1;
        for j in i + 1..k {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

/// Vertex connectivity via Menger's theorem: minimum over non-adjacent pairs
/// (u, v) of the maximum number of internally vertex-disjoint u-v paths,
/// computed as unit-capacity max-flow in the split network. Complete graphs
/// short-circuit to n - 1; disconnected input returns 0.
pub fn vertex_connectivity(g: &Graph) -> usize {
    let n = g.n();
    if n == 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    if g.edge_count() == n * (n - 1) / 2 {
        return n - 1;
    }

    let mut best = usize::MAX;
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) {
                best = best.min(max_vertex_disjoint_paths(g, u, v));
            }
        }
    }
    best
}

/// Max-flow between out(u) and in(v) in the standard vertex-split network:
/// every vertex w becomes in(w) -> out(w) with capacity 1 (unbounded for the
/// terminals), every edge contributes both directed crossings.
fn max_vertex_disjoint_paths(g: &Graph, s: usize, t: usize) -> usize {
    let n = g.n();
    let size = 2 * n;
    let inn = |v: usize| 2 * v;
    let out = |v: usize| 2 * v + 1;
    const BIG: i32 = i32::MAX / 4;

    let mut cap = vec![0i32; size * size];
    for v in 0..n {
        cap[inn(v) * size + out(v)] = if v == s || v == t { BIG } else { 1 };
    }
    for (u, v) in g.edges() {
        cap[out(u) * size + inn(v)] = BIG;
        cap[out(v) * size + inn(u)] = BIG;
    }

    let source = out(s);
    let sink = inn(t);
    let mut flow = 0usize;
    let mut parent = vec![usize::MAX; size];
    loop {
        // BFS for an augmenting path.
        parent.fill(usize::MAX);
        parent[source] = source;
        let mut queue = std::collections::VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if parent[y] == usize::MAX && cap[x * size + y] > 0 {
                    parent[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if parent[sink] == usize::MAX {
            break;
        }
        // Unit capacities on the vertex arcs make each augmentation worth 1.
        let mut y = sink;
        while y != source {
            let x = parent[y];
            cap[x * size + y] -= 1;
            cap[y * size + x] += 1;
            y = x;
        }
        flow += 1;
    }
    flow
}

enum Mode<'a> {
    Undirected(&'a Graph),
    Directed(&'a Digraph),
}

impl Mode<'_> {
    fn n(&self) -> usize {
        match self {
            Mode::Undirected(g) => g.n(),
            Mode::Directed(d) => d.n(),
        }
    }

    fn splits(&self, removed: VertexSet) -> bool {
        match self {
            Mode::Undirected(g) => g.splits_nontrivially(removed),
            Mode::Directed(d) => d.splits_nontrivially(removed),
        }
    }

    fn partition(&self, removed: VertexSet) -> ComponentPartition {
        match self {
            Mode::Undirected(g) => g.components_avoiding(removed),
            Mode::Directed(d) => d.components_avoiding(removed),
        }
    }
}

fn minimum_essential_cut(mode: Mode<'_>, max_size: usize) -> Option<EssentialCutCertificate> {
    let n = mode.n();
    // Two non-trivial components need at least four surviving vertices.
    let cap = max_size.min(n.saturating_sub(4));
    for s in 0..=cap {
        let mut found: Option<VertexSet> = None;
        any_combination(n, s, |cut| {
            let set: VertexSet = cut.iter().copied().collect();
            if mode.splits(set) {
                found = Some(set);
                true
            } else {
                false
            }
        });
        if let Some(set) = found {
            let partition = mode.partition(set);
            let nontrivial_blocks = partition.nontrivial_blocks();
            debug_assert!(nontrivial_blocks.len() >= 2);
            return Some(EssentialCutCertificate {
                cut: set.to_vec(),
                partition,
                nontrivial_blocks,
            });
        }
    }
    None
}

/// Minimum essential vertex-cut of a connected graph, or `None` when no
/// vertex set of any size leaves two non-trivial components (complete graphs,
/// stars). Disconnected input is an error.
pub fn essential_connectivity(g: &Graph) -> Result<Option<EssentialCutCertificate>> {
    if !g.is_connected() {
        return Err(Error::invalid(
            "essential connectivity is defined for connected graphs",
        ));
    }
    Ok(minimum_essential_cut(Mode::Undirected(g), g.n()))
}

/// Minimum vertex set whose removal leaves at least two strongly connected
/// components with at least two vertices each; `None` when unattainable.
/// Input must be strongly connected.
pub fn digraph_essential_connectivity(d: &Digraph) -> Result<Option<EssentialCutCertificate>> {
    if let Some((from, to)) = d.strong_connectivity_violation() {
        return Err(Error::NotStronglyConnected { from, to });
    }
    Ok(minimum_essential_cut(Mode::Directed(d), d.n()))
}

/// Size-bounded search used by the enumeration filters: `Some(s)` iff the
/// minimum essential cut has size `s <= max_size`. Assumes the input is
/// already connected (resp. strongly connected).
pub(crate) fn essential_connectivity_at_most(g: &Graph, max_size: usize) -> Option<usize> {
    let n = g.n();
    let cap = max_size.min(n.saturating_sub(4));
    (0..=cap).find(|&s| {
        any_combination(n, s, |cut| {
            g.splits_nontrivially(cut.iter().copied().collect())
        })
    })
}

pub(crate) fn digraph_essential_connectivity_at_most(
    d: &Digraph,
    max_size: usize,
) -> Option<usize> {
    let n = d.n();
    let cap = max_size.min(n.saturating_sub(4));
    (0..=cap).find(|&s| {
        any_combination(n, s, |cut| {
            d.splits_nontrivially(cut.iter().copied().collect())
        })
    })
}

/// Re-derives the certificate's claims from scratch; used by tests and the
/// verification layer to validate stored certificates.
pub fn certificate_is_sound(g: &Graph, cert: &EssentialCutCertificate) -> bool {
    let recomputed = g.components_avoiding(cert.cut_set());
    recomputed == cert.partition
        && cert.nontrivial_blocks == cert.partition.nontrivial_blocks()
        && cert.nontrivial_blocks.len() >= 2
        && cert.partition.num_blocks() >= 2
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let mut g = Graph::empty(n).unwrap();
        for v in 0..n - 1 {
            g.add_edge(v, v + 1).unwrap();
        }
        g
    }

    fn cycle(n: usize) -> Graph {
        let mut g = path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    fn star(leaves: usize) -> Graph {
        let mut g = Graph::empty(leaves + 1).unwrap();
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    /// Independent oracle: scan every subset mask of the vertex set and take
    /// the minimum essential cut size directly.
    fn brute_essential(g: &Graph) -> Option<usize> {
        let n = g.n();
        let mut best: Option<usize> = None;
        for mask in 0u64..(1 << n) {
            let set = VertexSet::from_bits(mask);
            if g.splits_nontrivially(set) {
                best = Some(best.map_or(set.len(), |b: usize| b.min(set.len())));
            }
        }
        best
    }

    #[test]
    fn vertex_connectivity_known_values() {
        assert_eq!(vertex_connectivity(&Graph::complete(5).unwrap()), 4);
        assert_eq!(vertex_connectivity(&Graph::complete(2).unwrap()), 1);
        assert_eq!(vertex_connectivity(&path(5)), 1);
        assert_eq!(vertex_connectivity(&cycle(6)), 2);
        // Disconnected input.
        let g = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert_eq!(vertex_connectivity(&g), 0);
        // Join clique of size 2 is the unique minimum cut.
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let joined = k2.join(&k2.disjoint_union(&k3).unwrap()).unwrap();
        assert_eq!(vertex_connectivity(&joined), 2);
    }

    #[test]
    fn complete_graph_has_no_essential_cut() {
        for n in 2..=7 {
            let g = Graph::complete(n).unwrap();
            assert!(essential_connectivity(&g).unwrap().is_none());
        }
    }

    #[test]
    fn star_has_no_essential_cut() {
        let g = star(5);
        assert!(essential_connectivity(&g).unwrap().is_none());
    }

    #[test]
    fn joined_cliques_have_the_join_as_cut() {
        // K_2 v (K_2 u K_3): minimum essential cut is the join clique {0, 1}.
        let k2 = Graph::complete(2).unwrap();
        let k3 = Graph::complete(3).unwrap();
        let g = k2.join(&k2.disjoint_union(&k3).unwrap()).unwrap();
        let cert = essential_connectivity(&g).unwrap().unwrap();
        assert_eq!(cert.cut, vec![0, 1]);
        assert_eq!(cert.nontrivial_blocks.len(), 2);
        assert!(certificate_is_sound(&g, &cert));
        assert_eq!(brute_essential(&g), Some(2));
    }

    #[test]
    fn essential_cut_agrees_with_brute_force_on_small_graphs() {
        // Every graph on 5 vertices.
        for mask in 0u64..(1 << 10) {
            let g = Graph::from_edge_mask(5, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            let got = essential_connectivity(&g).unwrap().map(|c| c.cut_size());
            assert_eq!(got, brute_essential(&g), "mask {mask:#b}");
        }
    }

    #[test]
    fn bounded_search_matches_full_search() {
        for mask in [0b1111111111u64, 0b1010110101, 0b1101001011, 0b0111011110] {
            let g = Graph::from_edge_mask(5, mask).unwrap();
            if !g.is_connected() {
                continue;
            }
            let full = essential_connectivity(&g).unwrap().map(|c| c.cut_size());
            assert_eq!(essential_connectivity_at_most(&g, 5), full);
            if let Some(s) = full {
                if s > 0 {
                    assert_eq!(essential_connectivity_at_most(&g, s - 1), None);
                }
            }
        }
    }

    #[test]
    fn disconnected_input_is_invalid() {
        let g = Graph::complete(2)
            .unwrap()
            .disjoint_union(&Graph::complete(2).unwrap())
            .unwrap();
        assert!(matches!(
            essential_connectivity(&g),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn complete_digraph_has_no_essential_cut() {
        for n in 2..=6 {
            let d = Digraph::complete(n).unwrap();
            assert!(digraph_essential_connectivity(&d).unwrap().is_none());
        }
    }

    #[test]
    fn two_complete_digraphs_through_a_middle_vertex() {
        // Two disjoint complete digraphs on 3 vertices joined through one
        // middle vertex (both directions to all): cut = the middle vertex.
        let k3 = Digraph::complete(3).unwrap();
        let blocks = k3.disjoint_union(&k3).unwrap();
        let middle = Digraph::complete(1).unwrap();
        let d = middle.directed_join(&blocks).unwrap();
        assert!(d.is_strongly_connected());
        let cert = digraph_essential_connectivity(&d).unwrap().unwrap();
        assert_eq!(cert.cut, vec![0]);
        assert_eq!(cert.partition.num_blocks(), 2);
        assert_eq!(cert.nontrivial_blocks.len(), 2);
    }

    #[test]
    fn digraph_needs_strong_connectivity() {
        let mut d = Digraph::empty(4).unwrap();
        d.add_arc(0, 1).unwrap();
        d.add_arc(1, 0).unwrap();
        d.add_arc(2, 3).unwrap();
        d.add_arc(3, 2).unwrap();
        assert!(matches!(
            digraph_essential_connectivity(&d),
            Err(Error::NotStronglyConnected { .. })
        ));
    }

    #[test]
    fn returned_cut_disconnects_so_size_bounds_vertex_connectivity() {
        let k2 = Graph::complete(2).unwrap();
        let k4 = Graph::complete(4).unwrap();
        let g = k2.join(&k2.disjoint_union(&k4).unwrap()).unwrap();
        let cert = essential_connectivity(&g).unwrap().unwrap();
        assert!(cert.cut_size() >= vertex_connectivity(&g));
    }

    #[test]
    fn combinations_cover_the_space() {
        let mut seen = Vec::new();
        any_combination(5, 3, |c| {
            seen.push(c.to_vec());
            false
        });
        assert_eq!(seen.len(), 10);
        assert_eq!(seen.first().unwrap(), &[0, 1, 2]);
        assert_eq!(seen.last().unwrap(), &[2, 3, 4]);
        // Lexicographic order.
        let mut sorted = seen.clone();
        sorted.sort();
        assert_eq!(seen, sorted);

        // k = 0 has exactly the empty combination.
        let mut count = 0;
        any_combination(4, 0, |c| {
            assert!(c.is_empty());
            count += 1;
            false
        });
        assert_eq!(count, 1);
    }
}
