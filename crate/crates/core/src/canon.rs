//! Exact canonical forms for small graphs and digraphs.
//!
//! The canonical form is the minimum adjacency encoding over all vertex
//! orderings compatible with an iterated-degree color refinement. Refinement
//! colors are isomorphism-invariant, so restricting the candidate orderings
//! to those listing color classes in order never changes the minimum, it
//! only prunes the search. Equality of forms is equivalent to isomorphism:
//! the encoding pins down the whole adjacency relation, so equal minima can
//! only come from graphs that are relabelings of each other.

use crate::error::{Error, Result};
use crate::graph::{pair_index, Digraph, Graph};
use crate::CANONICAL_MAX_N;

/// Isomorphism-invariant byte encoding; equal bytes iff isomorphic inputs.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    bytes: Vec<u8>,
}

impl CanonicalForm {
    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn hex(&self) -> String {
        self.bytes.iter().map(|b| format!("{b:02x}")).collect()
    }
}

impl std::fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "CanonicalForm({})", self.hex())
    }
}

fn check_canon_size(n: usize) -> Result<()> {
    if n > CANONICAL_MAX_N {
        return Err(Error::Unsupported(format!(
            "canonical forms are limited to n <= {CANONICAL_MAX_N} (got {n})"
        )));
    }
    Ok(())
}

/// Iterated color refinement. `signature(v)` must be order-invariant over
/// each vertex's neighborhood; colors are ranks of sorted signatures, which
/// makes them isomorphism-invariant at every round.
fn refine_colors(n: usize, neighbor_colors: impl Fn(usize, &[u32]) -> Vec<u32>) -> Vec<u32> {
    let mut colors = vec![0u32; n];
    loop {
        let keys: Vec<(u32, Vec<u32>)> = (0..n)
            .map(|v| (colors[v], neighbor_colors(v, &colors)))
            .collect();
        let mut sorted: Vec<&(u32, Vec<u32>)> = keys.iter().collect();
        sorted.sort();
        sorted.dedup();
        let next: Vec<u32> = keys
            .iter()
            .map(|k| sorted.binary_search(&k).unwrap() as u32)
            .collect();
        // The new coloring refines the old one (the old color is part of
        // the key), so an unchanged class count means a fixed point.
        let before = colors.iter().collect::<std::collections::BTreeSet<_>>();
        let stable = before.len() == sorted.len();
        colors = next;
        if stable {
            return colors;
        }
    }
}

/// Enumerates every ordering that lists color classes in ascending color
/// order, calling `visit` with each position -> vertex assignment.
fn for_each_class_ordering(colors: &[u32], visit: &mut impl FnMut(&[usize])) {
    let n = colors.len();
    let mut sorted_colors: Vec<u32> = colors.to_vec();
    sorted_colors.sort_unstable();
    sorted_colors.dedup();
    let classes: Vec<Vec<usize>> = sorted_colors
        .iter()
        .map(|c| (0..n).filter(|&v| colors[v] == *c).collect())
        .collect();

    fn fill(
        classes: &[Vec<usize>],
        ci: usize,
        remaining: u64,
        assignment: &mut Vec<usize>,
        visit: &mut impl FnMut(&[usize]),
    ) {
        if remaining == 0 {
            if ci + 1 == classes.len() {
                visit(assignment);
            } else {
                let next = classes[ci + 1].iter().fold(0u64, |m, &v| m | 1 << v);
                fill(classes, ci + 1, next, assignment, visit);
            }
            return;
        }
        let mut rem = remaining;
        while rem != 0 {
            let v = rem.trailing_zeros() as usize;
            rem &= rem - 1;
            assignment.push(v);
            fill(classes, ci, remaining & !(1 << v), assignment, visit);
            assignment.pop();
        }
    }

    let first = classes[0].iter().fold(0u64, |m, &v| m | 1 << v);
    let mut assignment = Vec::with_capacity(n);
    fill(&classes, 0, first, &mut assignment, visit);
}

fn pack_bits(n_header: usize, bits: &[bool]) -> Vec<u8> {
    let mut bytes = Vec::with_capacity(1 + bits.len() / 8 + 1);
    bytes.push(n_header as u8);
    for chunk in bits.chunks(8) {
        let mut b = 0u8;
        for (i, &bit) in chunk.iter().enumerate() {
            if bit {
                b |= 1 << (7 - i);
            }
        }
        bytes.push(b);
    }
    bytes
}

/// Canonical form of an undirected graph (n <= 10).
pub fn canonical_form(g: &Graph) -> Result<CanonicalForm> {
    let n = g.n();
    check_canon_size(n)?;

    let colors = refine_colors(n, |v, cols| {
        let mut nc: Vec<u32> = g.neighbors(v).iter().map(|u| cols[u]).collect();
        nc.sort_unstable();
        nc
    });

    let mut best: Option<Vec<bool>> = None;
    let mut bits = vec![false; n * (n - 1) / 2];
    for_each_class_ordering(&colors, &mut |order| {
        // order[position] = original vertex.
        for (j, &vj) in order.iter().enumerate() {
            for (i, &vi) in order.iter().enumerate().take(j) {
                bits[pair_index(i, j)] = g.has_edge(vi, vj);
            }
        }
        match &best {
            Some(b) if bits.as_slice() >= b.as_slice() => {}
            _ => best = Some(bits.clone()),
        }
    });

    Ok(CanonicalForm {
        bytes: pack_bits(n, &best.expect("at least one ordering")),
    })
}

/// Canonical form of a digraph (n <= 10), using full row-major adjacency
/// bits and in/out-degree aware refinement.
pub fn canonical_form_digraph(d: &Digraph) -> Result<CanonicalForm> {
    let n = d.n();
    check_canon_size(n)?;
    let rev = d.reverse();

    let colors = refine_colors(n, |v, cols| {
        let mut out: Vec<u32> = d.out_neighbors(v).iter().map(|u| cols[u]).collect();
        out.sort_unstable();
        let mut inn: Vec<u32> = rev.out_neighbors(v).iter().map(|u| cols[u]).collect();
        inn.sort_unstable();
        out.push(u32::MAX); // separator between the out and in multisets
        out.extend(inn);
        out
    });

    let mut best: Option<Vec<bool>> = None;
    let mut bits = vec![false; n * n];
    for_each_class_ordering(&colors, &mut |order| {
        for (i, &vi) in order.iter().enumerate() {
            for (j, &vj) in order.iter().enumerate() {
                bits[i * n + j] = vi != vj && d.has_arc(vi, vj);
            }
        }
        match &best {
            Some(b) if bits.as_slice() >= b.as_slice() => {}
            _ => best = Some(bits.clone()),
        }
    });

    let mut bytes = pack_bits(n, &best.expect("at least one ordering"));
    bytes.insert(0, b'>'); // namespace digraph forms apart from graph forms
    Ok(CanonicalForm { bytes })
}
