//! Distance matrices and their spectral radii.
//!
//! The spectral radius of a distance matrix is computed by power iteration
//! from the all-ones vector. Distance matrices of connected graphs and
//! strongly connected digraphs are nonnegative and irreducible with every
//! off-diagonal entry at least 1, so the iteration converges geometrically
//! to the Perron eigenpair and the Collatz–Wielandt quotients
//! `min_i (Dx)_i / x_i` and `max_i (Dx)_i / x_i` enclose the spectral radius
//! at every step. Those enclosures are what the verification layer uses for
//! strict comparisons.

use crate::error::{Error, Result};
use crate::graph::{Digraph, Graph};
use crate::{DEFAULT_TOLERANCE, MAX_POWER_ITERATIONS};

/// Dense matrix of pairwise shortest-path lengths.
#[derive(Clone, Debug, PartialEq)]
pub struct DistanceMatrix {
    n: usize,
    entries: Vec<u32>,
    values: Vec<f64>,
    symmetric: bool,
}

impl DistanceMatrix {
    /// Distance matrix of a connected graph.
    pub fn from_graph(g: &Graph) -> Result<DistanceMatrix> {
        let parts = g.connected_components();
        if parts.num_blocks() != 1 {
            return Err(Error::NotConnected { partition: parts });
        }
        let n = g.n();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            let row = g.bfs_distances(i);
            for j in 0..n {
                entries[i * n + j] = row[j].expect("connected graph has all distances");
            }
        }
        Ok(DistanceMatrix::new(n, entries, true))
    }

    /// Distance matrix of a strongly connected digraph; entry (i, j) is the
    /// length of a shortest directed path from i to j.
    pub fn from_digraph(d: &Digraph) -> Result<DistanceMatrix> {
        let n = d.n();
        let mut entries = vec![0u32; n * n];
        for i in 0..n {
            let row = d.bfs_distances(i);
            for j in 0..n {
                match row[j] {
                    Some(dist) => entries[i * n + j] = dist,
                    None => return Err(Error::NotStronglyConnected { from: i, to: j }),
                }
            }
        }
        Ok(DistanceMatrix::new(n, entries, false))
    }

    fn new(n: usize, entries: Vec<u32>, symmetric: bool) -> DistanceMatrix {
        let values = entries.iter().map(|&e| f64::from(e)).collect();
        DistanceMatrix {
            n,
            entries,
            values,
            symmetric,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// True iff the matrix came from an undirected graph.
    pub fn is_symmetric(&self) -> bool {
        self.symmetric
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.entries[i * self.n + j]
    }

    pub fn rows(&self) -> Vec<Vec<u32>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// y = D x.
    fn apply(&self, x: &[f64], y: &mut [f64]) {
        for (yi, row) in y.iter_mut().zip(self.values.chunks_exact(self.n)) {
            let mut acc = 0.0;
            for (a, b) in row.iter().zip(x) {
                acc += a * b;
            }
            *yi = acc;
        }
    }
}

/// Spectral radius estimate with its Perron vector and rigorous enclosure.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpectralResult {
    /// Midpoint of the final enclosure.
    #[serde(serialize_with = "crate::jsonnum::f64_sig17")]
    pub lambda1: f64,
    /// Positive eigenvector, unit Euclidean norm.
    #[serde(serialize_with = "crate::jsonnum::f64_vec_sig17")]
    pub perron: Vec<f64>,
    /// Collatz–Wielandt lower bound at the final iterate.
    #[serde(serialize_with = "crate::jsonnum::f64_sig17")]
    pub lower: f64,
    /// Collatz–Wielandt upper bound at the final iterate.
    #[serde(serialize_with = "crate::jsonnum::f64_sig17")]
    pub upper: f64,
    pub iterations: usize,
}

impl SpectralResult {
    pub fn enclosure_width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// JSON-facing wrapper pairing a spectral result with its matrix context.
#[derive(Clone, Debug, serde::Serialize)]
pub struct SpectrumReport {
    pub n: usize,
    pub symmetric: bool,
    #[serde(serialize_with = "crate::jsonnum::f64_sig17")]
    pub lambda1: f64,
    #[serde(serialize_with = "crate::jsonnum::f64_sig17")]
    pub lower: f64,
    #[serde(serialize_with = "crate::jsonnum::f64_sig17")]
    pub upper: f64,
    pub iterations: usize,
    #[serde(serialize_with = "crate::jsonnum::f64_vec_sig17")]
    pub perron: Vec<f64>,
}

impl SpectrumReport {
    pub fn new(matrix: &DistanceMatrix, result: &SpectralResult) -> SpectrumReport {
        SpectrumReport {
            n: matrix.n(),
            symmetric: matrix.is_symmetric(),
            lambda1: result.lambda1,
            lower: result.lower,
            upper: result.upper,
            iterations: result.iterations,
            perron: result.perron.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports always serialize")
    }
}

pub(crate) enum PowerOutcome {
    Converged(SpectralResult),
    /// The lower bound rose above the caller-supplied cutoff, so the true
    /// spectral radius strictly exceeds it; iteration stopped early.
    AboveCutoff {
        #[allow(dead_code)] // diagnostic value, read by tests
        lower: f64,
    },
}

/// Power iteration with optional early exit once the lower bound clears
/// `cutoff`. Deterministic for a given matrix.
pub(crate) fn power_iteration(
    d: &DistanceMatrix,
    tol: f64,
    cutoff: Option<f64>,
    cap: usize,
) -> Result<PowerOutcome> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::invalid(format!(
            "tolerance must be a positive finite number (got {tol})"
        )));
    }
    let n = d.n();
    if n == 1 {
        // 1x1 zero matrix.
        return Ok(PowerOutcome::Converged(SpectralResult {
            lambda1: 0.0,
            perron: vec![1.0],
            lower: 0.0,
            upper: 0.0,
            iterations: 0,
        }));
    }

    let mut x = vec![1.0f64; n];
    let mut y = vec![0.0f64; n];
    let mut lower = 0.0;
    let mut upper = f64::INFINITY;

    for it in 1..=cap {
        d.apply(&x, &mut y);
        lower = f64::INFINITY;
        upper = f64::NEG_INFINITY;
        for (yi, xi) in y.iter().zip(&x) {
            let r = yi / xi;
            lower = lower.min(r);
            upper = upper.max(r);
        }
        let lambda = 0.5 * (lower + upper);
        if upper - lower <= tol * lambda {
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            let perron = x.iter().map(|v| v / norm).collect();
            return Ok(PowerOutcome::Converged(SpectralResult {
                lambda1: lambda,
                perron,
                lower,
                upper,
                iterations: it,
            }));
        }
        if let Some(c) = cutoff {
            if lower > c {
                return Ok(PowerOutcome::AboveCutoff { lower });
            }
        }
        let inf_norm = y.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        for (xi, yi) in x.iter_mut().zip(&y) {
            *xi = yi / inf_norm;
        }
    }

    Err(Error::NonConvergence {
        iterations: cap,
        lower,
        upper,
    })
}

/// Spectral radius of a distance matrix to relative enclosure width `tol`.
pub fn spectral_radius(d: &DistanceMatrix, tol: f64) -> Result<SpectralResult> {
    match power_iteration(d, tol, None, MAX_POWER_ITERATIONS)? {
        PowerOutcome::Converged(r) => Ok(r),
        PowerOutcome::AboveCutoff { .. } => unreachable!("no cutoff was supplied"),
    }
}

/// [`spectral_radius`] at the crate default tolerance.
pub fn spectral_radius_default(d: &DistanceMatrix) -> Result<SpectralResult> {
    spectral_radius(d, DEFAULT_TOLERANCE)
}

/// All eigenvalues of a symmetric distance matrix, sorted descending, via
/// cyclic Jacobi rotations. Serves as an independent cross-check for the
/// power iteration on undirected inputs.
pub fn dense_eigen_oracle(d: &DistanceMatrix) -> Result<Vec<f64>> {
    if !d.is_symmetric() {
        return Err(Error::Unsupported(
            "dense eigenvalue oracle needs a symmetric matrix (undirected source)".into(),
        ));
    }
    let n = d.n();
    let mut a = vec![0.0f64; n * n];
    for i in 0..n {
        for j in 0..n {
            a[i * n + j] = f64::from(d.get(i, j));
        }
    }

    if n == 1 {
        return Ok(vec![a[0]]);
    }

    let frob: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    let target = (frob * 1e-15).max(f64::MIN_POSITIVE);

    let off = |a: &[f64]| -> f64 {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    s += a[i * n + j] * a[i * n + j];
                }
            }
        }
        s.sqrt()
    };

    let mut sweeps = 0;
    while off(&a) > target {
        sweeps += 1;
        if sweeps > 100 {
            return Err(Error::Unsupported(
                "jacobi rotation sweep cap exceeded".into(),
            ));
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                let t = if theta >= 0.0 {
                    1.0 / (theta + (1.0 + theta * theta).sqrt())
                } else {
                    -1.0 / (-theta + (1.0 + theta * theta).sqrt())
                };
                let c = 1.0 / (1.0 + t * t).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
            }
        }
    }

    let mut eig: Vec<f64> = (0..n).map(|i| a[i * n + i]).collect();
    eig.sort_by(|x, y| y.partial_cmp(x).unwrap());
    Ok(eig)
}

/// Closed-form spectral radius of the distance matrix of the extremal
/// digraph family member with parameters (n, k, n1): the largest root of
/// `x^2 - (n-2) x - n1 (n-k-n1) - n + 1 = 0`.
pub fn digraph_family_lambda1_closed_form(n: usize, k: usize, n1: usize) -> Result<f64> {
    check_family_params(n, k, n1)?;
    let (nf, n1f) = (n as f64, n1 as f64);
    let n2f = (n - k - n1) as f64;
    let disc = (nf - 2.0) * (nf - 2.0) + 4.0 * n1f * n2f + 4.0 * nf - 4.0;
    Ok(0.5 * ((nf - 2.0) + disc.sqrt()))
}

pub(crate) fn check_family_params(n: usize, k: usize, n1: usize) -> Result<()> {
    if k < 1 {
        return Err(Error::invalid("k must be at least 1"));
    }
    if n1 < 2 || n < k + n1 + 2 {
        return Err(Error::invalid(format!(
            "n1 must satisfy 2 <= n1 <= n-k-2 (got n={n}, k={k}, n1={n1})"
        )));
    }
    Ok(())
}
