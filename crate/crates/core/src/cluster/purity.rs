use std::collections::{BTreeMap, HashMap};

use super::{ClusterAssignment, ClusterError};

#[derive(Clone, Debug, PartialEq)]
pub struct ClusterPurity {
    pub cluster: usize,
    pub size: usize,
    /// Most frequent truth class; ties go to the smallest class name.
    pub majority: String,
    pub purity: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PurityReport {
    pub clusters: Vec<ClusterPurity>,
    /// Size-weighted mean of the per-cluster purities.
    pub overall: f64,
}

impl PurityReport {
    pub fn pure_clusters(&self) -> usize {
        self.clusters.iter().filter(|c| c.purity == 1.0).count()
    }

    /// `cluster,size,majority,purity` lines plus a closing `overall` row.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("cluster,size,majority,purity\n");
        for c in &self.clusters {
            out.push_str(&format!(
                "{},{},{},{:.6}\n",
                c.cluster,
                c.size,
                crate::text::csv_field(&c.majority),
                c.purity
            ));
        }
        let total: usize = self.clusters.iter().map(|c| c.size).sum();
        out.push_str(&format!("overall,{},,{:.6}\n", total, self.overall));
        out
    }
}

/// Share of each cluster held by its majority truth class.
pub fn purity(
    a: &ClusterAssignment,
    truth: &HashMap<String, String>,
) -> Result<PurityReport, ClusterError> {
    let mut counts: Vec<BTreeMap<&str, usize>> = vec![BTreeMap::new(); a.k()];
    for (label, &c) in a.labels().iter().zip(a.clusters()) {
        let class = truth
            .get(label)
            .ok_or_else(|| ClusterError::MissingTruthLabel(label.clone()))?;
        *counts[c - 1].entry(class.as_str()).or_default() += 1;
    }
    let mut clusters = Vec::with_capacity(a.k());
    let mut majority_total = 0;
    for (i, classes) in counts.iter().enumerate() {
        let size: usize = classes.values().sum();
        let (majority, top) =
            classes.iter().fold(
                ("", 0),
                |best, (class, &n)| if n > best.1 { (*class, n) } else { best },
            );
        majority_total += top;
        clusters.push(ClusterPurity {
            cluster: i + 1,
            size,
            majority: majority.to_string(),
            purity: top as f64 / size as f64,
        });
    }
    Ok(PurityReport {
        clusters,
        overall: majority_total as f64 / a.labels().len() as f64,
    })
}
