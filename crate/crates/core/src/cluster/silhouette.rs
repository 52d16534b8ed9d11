use rayon::prelude::*;

use super::{cut, ClusterAssignment, ClusterError, Dendrogram};
use crate::matrix::DistanceMatrix;

/// Per-item silhouette widths and their mean.
#[derive(Clone, Debug, PartialEq)]
pub struct SilhouetteReport {
    pub labels: Vec<String>,
    /// `s(i)` in `[-1, 1]`, parallel to `labels`.
    pub per_point: Vec<f64>,
    pub mean: f64,
}

impl SilhouetteReport {
    pub fn get(&self, label: &str) -> Option<f64> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.per_point[i])
    }
}

/// Silhouette of a flat clustering.
///
/// `s(i) = (b - a) / max(a, b)` where `a` is the mean distance from `i` to
/// the rest of its cluster and `b` the smallest mean distance to another
/// cluster. Members of singleton clusters get 0.
pub fn silhouette(
    m: &DistanceMatrix,
    a: &ClusterAssignment,
) -> Result<SilhouetteReport, ClusterError> {
    let n = m.len();
    if a.labels() != m.labels() {
        return Err(ClusterError::LabelMismatch);
    }
    let k = a.k();
    if k < 2 || k + 1 > n {
        return Err(ClusterError::BadK {
            k,
            min: 2,
            max: n.saturating_sub(1),
        });
    }
    let ids = a.clusters();
    let sizes = a.sizes();
    let per_point: Vec<f64> = (0..n)
        .map(|i| {
            let own = ids[i] - 1;
            if sizes[own] == 1 {
                return 0.0;
            }
            let mut sums = vec![0.0; k];
            for (j, &d) in m.row(i).iter().enumerate() {
                if j != i {
                    sums[ids[j] - 1] += d;
                }
            }
            let within = sums[own] / (sizes[own] - 1) as f64;
            let nearest = (0..k)
                .filter(|&c| c != own)
                .map(|c| sums[c] / sizes[c] as f64)
                .fold(f64::INFINITY, f64::min);
            let denom = within.max(nearest);
            if denom == 0.0 {
                0.0
            } else {
                (nearest - within) / denom
            }
        })
        .collect();
    let mean = per_point.iter().sum::<f64>() / n as f64;
    Ok(SilhouetteReport {
        labels: m.labels().to_vec(),
        per_point,
        mean,
    })
}

/// Outcome of scanning every cut of a dendrogram.
#[derive(Clone, Debug, PartialEq)]
pub struct BestCut {
    pub k: usize,
    pub assignment: ClusterAssignment,
    pub report: SilhouetteReport,
    /// Mean silhouette for each `k` in `2..n`, in increasing `k`.
    pub scan: Vec<(usize, f64)>,
}

impl BestCut {
    /// `k,mean_silhouette` lines with a header.
    pub fn scan_csv(&self) -> String {
        let mut out = String::from("k,mean_silhouette\n");
        for (k, s) in &self.scan {
            out.push_str(&format!("{},{:.6}\n", k, s));
        }
        out
    }
}

/// Cuts `d` at the `k` in `2..=n-1` with the highest mean silhouette,
/// preferring the smaller `k` on ties.
pub fn best_cut(m: &DistanceMatrix, d: &Dendrogram) -> Result<BestCut, ClusterError> {
    let n = m.len();
    if n < 3 {
        return Err(ClusterError::TooFewItems {
            needed: 3,
            found: n,
        });
    }
    if d.labels() != m.labels() {
        return Err(ClusterError::LabelMismatch);
    }
    let scored: Vec<(ClusterAssignment, SilhouetteReport)> = (2..n)
        .into_par_iter()
        .map(|k| {
            let a = cut(d, k)?;
            let r = silhouette(m, &a)?;
            Ok((a, r))
        })
        .collect::<Result<_, ClusterError>>()?;
    let scan: Vec<(usize, f64)> = scored.iter().map(|(a, r)| (a.k(), r.mean)).collect();
    let mut best = 0;
    for (i, (_, r)) in scored.iter().enumerate() {
        if r.mean > scored[best].1.mean {
            best = i;
        }
    }
    let (assignment, report) = scored.into_iter().nth(best).expect("n >= 3 gives one cut");
    Ok(BestCut {
        k: assignment.k(),
        assignment,
        report,
        scan,
    })
}
