//! Agglomerative hierarchical clustering over distance matrices.
//!
//! [`agglomerate`] builds a [`Dendrogram`] with the Lance–Williams update
//! for single, complete or average linkage. Dendrograms are cut into `k`
//! clusters with [`cut`], cuts are scored with [`silhouette`], and
//! [`best_cut`] scans every `k` in `2..n` for the highest mean silhouette.

mod export;
mod purity;
mod silhouette;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::matrix::DistanceMatrix;

pub use export::{export_newick, export_svg};
pub use purity::{purity, ClusterPurity, PurityReport};
pub use silhouette::{best_cut, silhouette, BestCut, SilhouetteReport};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClusterError {
    #[error("need at least {needed} items, found {found}")]
    TooFewItems { needed: usize, found: usize },
    #[error("k = {k} is out of range {min}..={max}")]
    BadK { k: usize, min: usize, max: usize },
    #[error("cluster assignment labels do not match the distance matrix")]
    LabelMismatch,
    #[error("no truth class for `{0}`")]
    MissingTruthLabel(String),
    #[error("invalid cluster assignment: {0}")]
    InvalidAssignment(String),
}

/// Between-cluster distance used when merging.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Linkage {
    /// Minimum pairwise distance.
    Single,
    /// Maximum pairwise distance.
    #[default]
    Complete,
    /// Mean pairwise distance (UPGMA).
    Average,
}

impl Linkage {
    pub const ALL: [Linkage; 3] = [Linkage::Single, Linkage::Complete, Linkage::Average];

    // Lance–Williams update for the distance from the merged cluster to k
    fn update(self, d_pk: f64, d_qk: f64, size_p: usize, size_q: usize) -> f64 {
        match self {
            Linkage::Single => d_pk.min(d_qk),
            Linkage::Complete => d_pk.max(d_qk),
            Linkage::Average => {
                (size_p as f64 * d_pk + size_q as f64 * d_qk) / (size_p + size_q) as f64
            }
        }
    }
}

impl fmt::Display for Linkage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Linkage::Single => "single",
            Linkage::Complete => "complete",
            Linkage::Average => "average",
        })
    }
}

impl FromStr for Linkage {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "single" => Ok(Linkage::Single),
            "complete" => Ok(Linkage::Complete),
            "average" => Ok(Linkage::Average),
            other => Err(format!(
                "unknown linkage `{}` (single, complete, average)",
                other
            )),
        }
    }
}

/// One agglomeration step. Nodes `0..n` are leaves; step `t` creates node `n + t`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Merge {
    /// The older of the two merged nodes (smaller id).
    pub left: usize,
    pub right: usize,
    pub height: f64,
    /// Number of leaves under the new node.
    pub size: usize,
}

/// Binary merge tree over labeled leaves.
#[derive(Clone, Debug, PartialEq)]
pub struct Dendrogram {
    labels: Vec<String>,
    merges: Vec<Merge>,
}

impl Dendrogram {
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn merges(&self) -> &[Merge] {
        &self.merges
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn root(&self) -> usize {
        self.labels.len() + self.merges.len() - 1
    }

    pub fn is_leaf(&self, node: usize) -> bool {
        node < self.labels.len()
    }

    /// Merge height of a node; leaves sit at height 0.
    pub fn height(&self, node: usize) -> f64 {
        if self.is_leaf(node) {
            0.0
        } else {
            self.merges[node - self.labels.len()].height
        }
    }

    pub fn children(&self, node: usize) -> Option<(usize, usize)> {
        if self.is_leaf(node) {
            None
        } else {
            let m = &self.merges[node - self.labels.len()];
            Some((m.left, m.right))
        }
    }

    /// Leaf indices in drawing order (left subtree first).
    pub fn leaf_order(&self) -> Vec<usize> {
        let mut out = Vec::with_capacity(self.len());
        let mut stack = vec![self.root()];
        while let Some(node) = stack.pop() {
            match self.children(node) {
                None => out.push(node),
                Some((l, r)) => {
                    stack.push(r);
                    stack.push(l);
                }
            }
        }
        out
    }

    pub fn cut(&self, k: usize) -> Result<ClusterAssignment, ClusterError> {
        cut(self, k)
    }
}

/// Agglomerates all items of `m` under `linkage`.
///
/// Among equally distant candidate pairs the one with the lexicographically
/// smallest (older id, newer id) merges first.
pub fn agglomerate(m: &DistanceMatrix, linkage: Linkage) -> Result<Dendrogram, ClusterError> {
    let n = m.len();
    if n < 2 {
        return Err(ClusterError::TooFewItems {
            needed: 2,
            found: n,
        });
    }
    let mut d: Vec<f64> = (0..n).flat_map(|i| m.row(i).to_vec()).collect();
    let mut active = vec![true; n];
    let mut id = (0..n).collect::<Vec<_>>();
    let mut size = vec![1usize; n];
    let mut merges = Vec::with_capacity(n - 1);

    for step in 0..n - 1 {
        let mut best: Option<(f64, usize, usize, usize, usize)> = None;
        for p in (0..n).filter(|&p| active[p]) {
            for q in (p + 1..n).filter(|&q| active[q]) {
                let dist = d[p * n + q];
                let (lo, hi) = (id[p].min(id[q]), id[p].max(id[q]));
                let better = match best {
                    None => true,
                    Some((bd, blo, bhi, _, _)) => {
                        dist < bd || (dist == bd && (lo, hi) < (blo, bhi))
                    }
                };
                if better {
                    best = Some((dist, lo, hi, p, q));
                }
            }
        }
        let (height, lo, hi, p, q) = best.expect("at least two active clusters");
        for k in (0..n).filter(|&k| active[k] && k != p && k != q) {
            let v = linkage.update(d[p * n + k], d[q * n + k], size[p], size[q]);
            d[p * n + k] = v;
            d[k * n + p] = v;
        }
        active[q] = false;
        size[p] += size[q];
        id[p] = n + step;
        merges.push(Merge {
            left: lo,
            right: hi,
            height,
            size: size[p],
        });
    }
    Ok(Dendrogram {
        labels: m.labels().to_vec(),
        merges,
    })
}

/// Flat clustering into `k` groups by undoing the last `k - 1` merges.
///
/// Clusters are numbered `1..=k` in order of their first leaf.
pub fn cut(d: &Dendrogram, k: usize) -> Result<ClusterAssignment, ClusterError> {
    let n = d.len();
    if k < 1 || k > n {
        return Err(ClusterError::BadK { k, min: 1, max: n });
    }
    let mut parent: Vec<usize> = (0..n + d.merges.len()).collect();
    for (t, m) in d.merges.iter().take(n - k).enumerate() {
        parent[m.left] = n + t;
        parent[m.right] = n + t;
    }
    let root_of = |mut x: usize| {
        while parent[x] != x {
            x = parent[x];
        }
        x
    };
    let mut numbering = std::collections::HashMap::new();
    let clusters = (0..n)
        .map(|leaf| {
            let next = numbering.len() + 1;
            *numbering.entry(root_of(leaf)).or_insert(next)
        })
        .collect();
    Ok(ClusterAssignment {
        labels: d.labels.clone(),
        clusters,
        k,
    })
}

/// Cluster id (`1..=k`) for each labeled item.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClusterAssignment {
    labels: Vec<String>,
    clusters: Vec<usize>,
    k: usize,
}

impl ClusterAssignment {
    /// Ids must cover `1..=k` with no gaps.
    pub fn new(labels: Vec<String>, clusters: Vec<usize>) -> Result<Self, ClusterError> {
        if labels.len() != clusters.len() {
            return Err(ClusterError::InvalidAssignment(format!(
                "{} labels but {} cluster ids",
                labels.len(),
                clusters.len()
            )));
        }
        let k = clusters.iter().copied().max().unwrap_or(0);
        let used: BTreeSet<usize> = clusters.iter().copied().collect();
        if used.len() != k || used.contains(&0) {
            return Err(ClusterError::InvalidAssignment(
                "cluster ids must be exactly 1..=k".into(),
            ));
        }
        Ok(ClusterAssignment {
            labels,
            clusters,
            k,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Cluster ids parallel to [`labels`](Self::labels).
    pub fn clusters(&self) -> &[usize] {
        &self.clusters
    }

    pub fn cluster_of(&self, label: &str) -> Option<usize> {
        self.labels
            .iter()
            .position(|l| l == label)
            .map(|i| self.clusters[i])
    }

    pub fn members(&self, cluster: usize) -> Vec<&str> {
        self.labels
            .iter()
            .zip(&self.clusters)
            .filter(|(_, c)| **c == cluster)
            .map(|(l, _)| l.as_str())
            .collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.k];
        for &c in &self.clusters {
            sizes[c - 1] += 1;
        }
        sizes
    }

    /// The clusters as label sets, independent of numbering.
    pub fn partition(&self) -> BTreeSet<BTreeSet<String>> {
        (1..=self.k)
            .map(|c| self.members(c).into_iter().map(str::to_string).collect())
            .collect()
    }

    /// `label,cluster` lines with a header.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("label,cluster\n");
        for (l, c) in self.labels.iter().zip(&self.clusters) {
            out.push_str(&format!("{},{}\n", crate::text::csv_field(l), c));
        }
        out
    }
}
