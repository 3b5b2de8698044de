//! Constructors for the extremal families that minimize the distance
//! spectral radius under the constraints handled by this crate, plus the
//! closed-form quantities attached to the digraph family.
//!
//! Vertex layout is fixed so certificates and encodings are reproducible:
//! the join clique comes first, then the remaining blocks in the order
//! given, then the degree-δ attachment vertex z where one exists.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::spectral::check_family_params;

/// K_s joined to the disjoint union of cliques with the given sizes.
/// Layout: the join clique occupies vertices `0..s`, then each block in
/// order.
pub fn joined_cliques(s: usize, parts: &[usize]) -> Result<Graph> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(Error::invalid("clique blocks must all be non-empty"));
    }
    let mut blocks = Graph::complete(parts[0])?;
    for &p in &parts[1..] {
        blocks = blocks.disjoint_union(&Graph::complete(p)?)?;
    }
    if s == 0 {
        return Ok(blocks);
    }
    Graph::complete(s)?.join(&blocks)
}

/// The minimizer of the distance spectral radius among connected graphs of
/// order n with essential connectivity `kappa`: the join of K_kappa with
/// K_2 and K_{n-kappa-2}.
pub fn theorem1_extremal(n: usize, kappa: usize) -> Result<Graph> {
    if kappa < 1 {
        return Err(Error::invalid("kappa must be at least 1"));
    }
    if n < kappa + 4 {
        return Err(Error::invalid(format!(
            "order must satisfy n >= kappa + 4 (got n={n}, kappa={kappa})"
        )));
    }
    joined_cliques(kappa, &[2, n - kappa - 2])
}

/// The minimizer among connected graphs of order n with essential
/// connectivity `kappa` and minimum degree `delta`.
///
/// For kappa > delta - 1 the graph is K_kappa v (K_1 u K_{n-kappa-2}) plus
/// an attachment vertex z adjacent to delta - 1 clique vertices and to the
/// K_1 vertex; z occupies the last position. For kappa <= delta - 1 it is
/// K_kappa v (K_{n-delta-1} u K_{delta-kappa+1}).
///
/// The construction re-derives its own minimum degree and essential
/// connectivity and fails with [`Error::ConstructionInfeasible`] when they
/// do not come out as requested, since not every parameter combination is
/// realizable.
pub fn theorem2_extremal(n: usize, kappa: usize, delta: usize) -> Result<Graph> {
    if kappa < 1 {
        return Err(Error::invalid("kappa must be at least 1"));
    }
    if delta < 1 {
        return Err(Error::invalid("delta must be at least 1"));
    }
    if n < kappa + 4 {
        return Err(Error::invalid(format!(
            "order must satisfy n >= kappa + 4 (got n={n}, kappa={kappa})"
        )));
    }

    let g = if kappa > delta - 1 {
        // Join clique 0..kappa, K_1 vertex at kappa, big clique after it,
        // z last.
        let base = joined_cliques(kappa, &[1, n - kappa - 2])?;
        let mut g = base.disjoint_union(&Graph::complete(1)?)?;
        let z = n - 1;
        for u in 0..delta - 1 {
            g.add_edge(z, u)?;
        }
        g.add_edge(z, kappa)?;
        g
    } else {
        if n < delta + 2 {
            return Err(Error::ConstructionInfeasible(format!(
                "no room for a block of size n - delta - 1 (n={n}, delta={delta})"
            )));
        }
        joined_cliques(kappa, &[n - delta - 1, delta - kappa + 1])?
    };

    let got_delta = g.min_degree();
    if got_delta != delta {
        return Err(Error::ConstructionInfeasible(format!(
            "construction for (n={n}, kappa={kappa}, delta={delta}) has minimum degree {got_delta}"
        )));
    }
    let got_kappa = crate::connectivity::essential_connectivity(&g)?.map(|c| c.cut_size());
    if got_kappa != Some(kappa) {
        return Err(Error::ConstructionInfeasible(format!(
            "construction for (n={n}, kappa={kappa}, delta={delta}) has essential connectivity {got_kappa:?}"
        )));
    }
    Ok(g)
}

/// The extremal digraph family member: the complete digraph on k vertices
/// fully joined (both directions) to the disjoint union of complete digraphs
/// on n1 and n - k - n1 vertices, plus all one-way arcs from the first block
/// to the second. Layout: join clique `0..k`, first block, second block.
pub fn theorem3_extremal(n: usize, k: usize, n1: usize) -> Result<Digraph> {
    check_family_params(n, k, n1)?;
    let n2 = n - k - n1;
    let blocks = Digraph::complete(n1)?.disjoint_union(&Digraph::complete(n2)?)?;
    let mut d = Digraph::complete(k)?.directed_join(&blocks)?;
    for u in k..k + n1 {
        for v in k + n1..n {
            d.add_arc(u, v)?;
        }
    }
    Ok(d)
}

/// The quadratic under the square root of the family's closed-form spectral
/// radius, as a function of the first block size x:
/// `f(x) = -4x^2 + 4(n-k)x + 4n - 4`. Minimizing the spectral radius over
/// the family is equivalent to minimizing f over the feasible block sizes.
pub fn lemma_f(x: f64, n: usize, k: usize) -> Result<f64> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if n < k + 4 {
        return Err(Error::invalid(format!(
            "need n >= k + 4 for a non-empty feasible range (got n={n}, k={k})"
        )));
    }
    let hi = (n - k - 2) as f64;
    if !(2.0..=hi).contains(&x) {
        return Err(Error::invalid(format!(
            "x must lie in [2, n-k-2] = [2, {hi}] (got {x})"
        )));
    }
    let (nf, kf) = (n as f64, k as f64);
    Ok(-4.0 * x * x + 4.0 * (nf - kf) * x + 4.0 * nf - 4.0)
}

/// Integer argmin set of [`lemma_f`] over x in [2, n-k-2], ascending.
pub fn lemma_f_argmin(n: usize, k: usize) -> Result<Vec<usize>> {
    lemma_f(2.0, n, k)?;
    let mut best = f64::INFINITY;
    let mut arg = Vec::new();
    for x in 2..=(n - k - 2) {
        let v = lemma_f(x as f64, n, k)?;
        if v < best {
            best = v;
            arg = vec![x];
        } else if v == best {
            arg.push(x);
        }
    }
    Ok(arg)
}
