//! Exhaustive labeled enumeration of small graphs and the chunked scan
//! engine behind the verification campaigns.
//!
//! Enumeration is labeled, not isomorph-free: every adjacency bitmask is
//! visited and filtered for connectivity. Redundant isomorphic copies cannot
//! change a minimum, and the flat mask space splits into contiguous chunks
//! that parallelize trivially. Chunk boundaries are fixed constants and
//! chunk results merge in index order, so a scan returns bit-identical
//! results for every thread count.

use std::collections::BTreeSet;
use std::ops::Range;

use crate::canon::{canonical_form, CanonicalForm};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::spectral::{power_iteration, DistanceMatrix, PowerOutcome};
use crate::MAX_POWER_ITERATIONS;

/// Masks per scan chunk; fixed so chunking does not depend on thread count.
const CHUNK: u64 = 1 << 12;

fn check_enumerable(n: usize, guard: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::invalid("vertex count must be at least 1"));
    }
    if n > 11 {
        return Err(Error::invalid(
            "labeled enumeration indexes edges in a 64-bit mask, so n <= 11",
        ));
    }
    if n > guard {
        return Err(Error::Unsupported(format!(
            "enumeration over 2^{} masks at n = {n} exceeds the cost guard (max n = {guard}); \
             raise the guard explicitly to proceed",
            n * (n - 1) / 2
        )));
    }
    Ok(())
}

/// Every connected labeled graph on n vertices, exactly once, in mask order.
/// Refuses n beyond `guard` ([`crate::ENUMERATION_GUARD`] by default elsewhere).
pub fn enumerate_connected_graphs(n: usize, guard: usize) -> Result<impl Iterator<Item = Graph>> {
    check_enumerable(n, guard)?;
    let total: u64 = 1 << (n * (n - 1) / 2);
    Ok((0..total).filter_map(move |mask| {
        let g = Graph::from_edge_mask(n, mask).expect("mask in range");
        g.is_connected().then_some(g)
    }))
}

/// Number of connected labeled graphs on n vertices.
pub fn connected_graph_count(n: usize, guard: usize) -> Result<u64> {
    Ok(enumerate_connected_graphs(n, guard)?.count() as u64)
}

/// Current best minimum found by a scan: an enclosure of the minimum
/// spectral radius plus the canonical forms of every graph whose enclosure
/// overlaps it. A candidate replaces the incumbent only when its upper bound
/// is strictly below the incumbent's lower bound; overlapping candidates are
/// recorded as ties and resolved by canonical form, never broken silently.
#[derive(Clone, Debug)]
pub(crate) struct Incumbent {
    pub lower: f64,
    pub upper: f64,
    pub forms: BTreeSet<CanonicalForm>,
}

impl Incumbent {
    fn single(lower: f64, upper: f64, form: CanonicalForm) -> Incumbent {
        Incumbent {
            lower,
            upper,
            forms: BTreeSet::from([form]),
        }
    }
}

fn absorb(inc: &mut Option<Incumbent>, g: &Graph, lower: f64, upper: f64) -> Result<()> {
    match inc {
        None => *inc = Some(Incumbent::single(lower, upper, canonical_form(g)?)),
        Some(i) => {
            if upper < i.lower {
                *i = Incumbent::single(lower, upper, canonical_form(g)?);
            } else if lower > i.upper {
                // Strictly worse than the incumbent minimum.
            } else {
                i.forms.insert(canonical_form(g)?);
                i.lower = i.lower.min(lower);
                i.upper = i.upper.min(upper);
            }
        }
    }
    Ok(())
}

fn merge(a: Option<Incumbent>, b: Option<Incumbent>) -> Option<Incumbent> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(x), Some(y)) => Some(if x.upper < y.lower {
            x
        } else if y.upper < x.lower {
            y
        } else {
            let mut forms = x.forms;
            forms.extend(y.forms);
            Incumbent {
                lower: x.lower.min(y.lower),
                upper: x.upper.min(y.upper),
                forms,
            }
        }),
    }
}

#[derive(Clone, Debug, Default)]
pub(crate) struct ScanOutcome {
    /// Graphs that passed the class filter.
    pub members: u64,
    pub incumbent: Option<Incumbent>,
}

fn scan_chunk<F>(n: usize, range: Range<u64>, tol: f64, filter: &F) -> Result<ScanOutcome>
where
    F: Fn(&Graph) -> bool + Sync,
{
    let mut out = ScanOutcome::default();
    for mask in range {
        let g = Graph::from_edge_mask(n, mask).expect("mask in range");
        if !g.is_connected() || !filter(&g) {
            continue;
        }
        out.members += 1;
        let d = DistanceMatrix::from_graph(&g)?;
        // Bail out of the iteration as soon as the lower bound clears the
        // chunk incumbent: such graphs are strictly above the chunk minimum
        // and can never re-enter the merged tie set.
        let cutoff = out.incumbent.as_ref().map(|i| i.upper);
        match power_iteration(&d, tol, cutoff, MAX_POWER_ITERATIONS)? {
            PowerOutcome::AboveCutoff { .. } => {}
            PowerOutcome::Converged(r) => absorb(&mut out.incumbent, &g, r.lower, r.upper)?,
        }
    }
    Ok(out)
}

fn chunk_ranges(total: u64) -> Vec<Range<u64>> {
    let mut ranges = Vec::with_capacity((total / CHUNK + 1) as usize);
    let mut lo = 0;
    while lo < total {
        let hi = (lo + CHUNK).min(total);
        ranges.push(lo..hi);
        lo = hi;
    }
    ranges
}

fn merge_in_order(chunks: Vec<ScanOutcome>) -> ScanOutcome {
    let mut acc = ScanOutcome::default();
    for c in chunks {
        acc.members += c.members;
        acc.incumbent = merge(acc.incumbent.take(), c.incumbent);
    }
    acc
}

/// Minimum distance spectral radius over all connected labeled graphs on n
/// vertices passing `filter`, with the canonical forms of the minimizers.
/// `threads` <= 1 runs sequentially; 0 means every available core.
pub(crate) fn scan_class_minimum<F>(
    n: usize,
    guard: usize,
    tol: f64,
    threads: usize,
    filter: F,
) -> Result<ScanOutcome>
where
    F: Fn(&Graph) -> bool + Sync,
{
    check_enumerable(n, guard)?;
    let total: u64 = 1 << (n * (n - 1) / 2);
    let ranges = chunk_ranges(total);

    #[cfg(feature = "parallel")]
    if threads != 1 {
        return scan_parallel(n, ranges, tol, threads, &filter);
    }
    #[cfg(not(feature = "parallel"))]
    let _ = threads;

    let chunks: Result<Vec<ScanOutcome>> = ranges
        .into_iter()
        .map(|r| scan_chunk(n, r, tol, &filter))
        .collect();
    Ok(merge_in_order(chunks?))
}

/// Runs `work` on the global rayon pool (threads = 0) or on a dedicated
/// pool of the requested size.
#[cfg(feature = "parallel")]
pub(crate) fn with_thread_pool<T: Send>(
    threads: usize,
    work: impl FnOnce() -> T + Send,
) -> Result<T> {
    if threads == 0 {
        return Ok(work());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::invalid(format!("thread pool: {e}")))?;
    Ok(pool.install(work))
}

#[cfg(feature = "parallel")]
fn scan_parallel<F>(
    n: usize,
    ranges: Vec<Range<u64>>,
    tol: f64,
    threads: usize,
    filter: &F,
) -> Result<ScanOutcome>
where
    F: Fn(&Graph) -> bool + Sync,
{
    use rayon::prelude::*;

    let chunks: Result<Vec<ScanOutcome>> = with_thread_pool(threads, || {
        ranges
            .into_par_iter()
            .map(|r| scan_chunk(n, r, tol, filter))
            .collect()
    })?;
    Ok(merge_in_order(chunks?))
}
