//! Column statistics for comparing concepts and language groups.
//!
//! All standard deviations use the sample (`n - 1`) denominator.

use std::f64::consts::PI;

use indexmap::IndexMap;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum StatsError {
    #[error("column `{column}` has {len} values, need at least {needed}")]
    ColumnTooShort {
        column: String,
        len: usize,
        needed: usize,
    },
    #[error("need at least {needed} values, found {found}")]
    TooFewValues { needed: usize, found: usize },
    #[error("values have zero variance")]
    ZeroVariance,
    #[error("all values are identical")]
    DegenerateData,
    #[error("empty input")]
    EmptyInput,
    #[error("bin count must be at least 1")]
    BadBins,
    #[error("x has {x} values but y has {y}")]
    LengthMismatch { x: usize, y: usize },
    #[error("x contains a non-positive value, cannot take log10")]
    NonPositiveX,
    #[error("x has zero variance")]
    DegenerateX,
    #[error("non-finite value in input")]
    NonFinite,
    #[error("frame: {0}")]
    Frame(String),
}

/// Named columns of equal length, e.g. one column of pairwise distances per concept.
#[derive(Clone, Debug, PartialEq)]
pub struct AnalysisFrame {
    columns: IndexMap<String, Vec<f64>>,
    row_labels: Option<Vec<String>>,
}

impl AnalysisFrame {
    pub fn new(
        columns: Vec<(String, Vec<f64>)>,
        row_labels: Option<Vec<String>>,
    ) -> Result<Self, StatsError> {
        let mut map = IndexMap::new();
        let mut len = None;
        for (name, values) in columns {
            if values.is_empty() {
                return Err(StatsError::Frame(format!("column `{}` is empty", name)));
            }
            if values.iter().any(|v| !v.is_finite()) {
                return Err(StatsError::NonFinite);
            }
            match len {
                None => len = Some(values.len()),
                Some(l) if l != values.len() => {
                    return Err(StatsError::Frame(format!(
                        "column `{}` has {} rows, expected {}",
                        name,
                        values.len(),
                        l
                    )))
                }
                _ => {}
            }
            if map.insert(name.clone(), values).is_some() {
                return Err(StatsError::Frame(format!("column `{}` repeated", name)));
            }
        }
        if let (Some(labels), Some(l)) = (&row_labels, len) {
            if labels.len() != l {
                return Err(StatsError::Frame(format!(
                    "{} row labels for {} rows",
                    labels.len(),
                    l
                )));
            }
        }
        Ok(AnalysisFrame {
            columns: map,
            row_labels,
        })
    }

    pub fn columns(&self) -> impl Iterator<Item = (&str, &[f64])> {
        self.columns.iter().map(|(k, v)| (k.as_str(), v.as_slice()))
    }

    pub fn column(&self, name: &str) -> Option<&[f64]> {
        self.columns.get(name).map(Vec::as_slice)
    }

    pub fn names(&self) -> impl Iterator<Item = &str> {
        self.columns.keys().map(String::as_str)
    }

    pub fn row_labels(&self) -> Option<&[String]> {
        self.row_labels.as_deref()
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn n_rows(&self) -> usize {
        self.columns.values().next().map_or(0, Vec::len)
    }

    /// Same frame with every column replaced by its t-scores.
    pub fn tscored(&self) -> Result<AnalysisFrame, StatsError> {
        let columns = self
            .columns
            .iter()
            .map(|(k, v)| tscore(v).map(|t| (k.clone(), t)))
            .collect::<Result<IndexMap<_, _>, _>>()?;
        Ok(AnalysisFrame {
            columns,
            row_labels: self.row_labels.clone(),
        })
    }
}

pub fn mean(values: &[f64]) -> f64 {
    values.iter().sum::<f64>() / values.len() as f64
}

/// Sample standard deviation.
pub fn sample_sd(values: &[f64]) -> f64 {
    let m = mean(values);
    let ss: f64 = values.iter().map(|v| (v - m) * (v - m)).sum();
    (ss / (values.len() - 1) as f64).sqrt()
}

#[derive(Clone, Debug, PartialEq)]
pub struct ColumnSummary {
    pub column: String,
    pub mean: f64,
    pub sd: f64,
    /// `mean * sd`
    pub mean_sd: f64,
}

/// `column,mean,sd,mean_sd` lines with a header.
pub fn summary_csv(rows: &[ColumnSummary]) -> String {
    let mut out = String::from("column,mean,sd,mean_sd\n");
    for r in rows {
        out.push_str(&format!(
            "{},{:.6},{:.6},{:.6}\n",
            crate::text::csv_field(&r.column),
            r.mean,
            r.sd,
            r.mean_sd
        ));
    }
    out
}

/// Mean, sample SD and their product for every column.
pub fn mean_sd(frame: &AnalysisFrame) -> Result<Vec<ColumnSummary>, StatsError> {
    frame
        .columns()
        .map(|(name, values)| {
            if values.len() < 2 {
                return Err(StatsError::ColumnTooShort {
                    column: name.to_string(),
                    len: values.len(),
                    needed: 2,
                });
            }
            let m = mean(values);
            let sd = sample_sd(values);
            Ok(ColumnSummary {
                column: name.to_string(),
                mean: m,
                sd,
                mean_sd: m * sd,
            })
        })
        .collect()
}

/// Standard scores shifted and scaled to mean 50, SD 10.
pub fn tscore(values: &[f64]) -> Result<Vec<f64>, StatsError> {
    if values.len() < 2 {
        return Err(StatsError::TooFewValues {
            needed: 2,
            found: values.len(),
        });
    }
    let m = mean(values);
    let sd = sample_sd(values);
    if sd == 0.0 || !sd.is_finite() {
        return Err(StatsError::ZeroVariance);
    }
    Ok(values.iter().map(|v| 50.0 + 10.0 * (v - m) / sd).collect())
}

/// Gaussian kernel density sampled on an even grid.
#[derive(Clone, Debug, PartialEq)]
pub struct DensityCurve {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub bandwidth: f64,
}

impl DensityCurve {
    /// Trapezoidal integral of the curve.
    pub fn integral(&self) -> f64 {
        self.xs
            .windows(2)
            .zip(self.ys.windows(2))
            .map(|(x, y)| (x[1] - x[0]) * (y[0] + y[1]) / 2.0)
            .sum()
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("x,y\n");
        for (x, y) in self.xs.iter().zip(&self.ys) {
            out.push_str(&format!("{:.6},{:.6}\n", x, y));
        }
        out
    }
}

/// Grid size used by the pipeline's density plots.
pub const DEFAULT_GRID_POINTS: usize = 512;

/// Sample quantile with linear interpolation between order statistics.
fn quantile(sorted: &[f64], p: f64) -> f64 {
    let h = (sorted.len() - 1) as f64 * p;
    let lo = h.floor() as usize;
    let hi = h.ceil() as usize;
    sorted[lo] + (h - lo as f64) * (sorted[hi] - sorted[lo])
}

/// Rule-of-thumb bandwidth `0.9 * min(sd, IQR / 1.34) * n^(-1/5)`, falling
/// back to the SD, then `|x[0]|`, then 1 when the spread estimate is zero.
pub fn silverman_bandwidth(values: &[f64]) -> f64 {
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    let sd = sample_sd(values);
    let iqr = quantile(&sorted, 0.75) - quantile(&sorted, 0.25);
    let mut lo = sd.min(iqr / 1.34);
    if lo == 0.0 {
        lo = sd;
    }
    if lo == 0.0 {
        lo = values[0].abs();
    }
    if lo == 0.0 {
        lo = 1.0;
    }
    0.9 * lo * (values.len() as f64).powf(-0.2)
}

/// Kernel density over `[min - 3h, max + 3h]`.
///
/// The tails beyond the grid are cut off, so the integral falls short of 1
/// by up to `Φ(-3) ≈ 0.00135` for very small samples.
pub fn kde(values: &[f64], grid_points: usize) -> Result<DensityCurve, StatsError> {
    if values.len() < 2 {
        return Err(StatsError::TooFewValues {
            needed: 2,
            found: values.len(),
        });
    }
    if grid_points < 2 {
        return Err(StatsError::TooFewValues {
            needed: 2,
            found: grid_points,
        });
    }
    if values.iter().any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let min = values.iter().copied().fold(f64::INFINITY, f64::min);
    let max = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    if min == max {
        return Err(StatsError::DegenerateData);
    }
    let h = silverman_bandwidth(values);
    let (lo, hi) = (min - 3.0 * h, max + 3.0 * h);
    let step = (hi - lo) / (grid_points - 1) as f64;
    let norm = 1.0 / (values.len() as f64 * h * (2.0 * PI).sqrt());
    let xs: Vec<f64> = (0..grid_points).map(|i| lo + step * i as f64).collect();
    let ys = xs
        .iter()
        .map(|&x| {
            values
                .iter()
                .map(|&v| {
                    let z = (x - v) / h;
                    (-0.5 * z * z).exp()
                })
                .sum::<f64>()
                * norm
        })
        .collect();
    Ok(DensityCurve {
        xs,
        ys,
        bandwidth: h,
    })
}

/// Sturges' rule: `ceil(log2(n) + 1)` bins.
pub fn sturges_bins(n: usize) -> usize {
    ((n as f64).log2() + 1.0).ceil().max(1.0) as usize
}

/// Bhattacharyya coefficient `Σ sqrt(p_i q_i)` of two samples binned on a
/// shared equal-width histogram over their combined range. `bins` defaults
/// to Sturges' rule on the combined size.
pub fn bhattacharyya(a: &[f64], b: &[f64], bins: Option<usize>) -> Result<f64, StatsError> {
    if a.is_empty() || b.is_empty() {
        return Err(StatsError::EmptyInput);
    }
    if a.iter().chain(b).any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let bins = bins.unwrap_or_else(|| sturges_bins(a.len() + b.len()));
    if bins == 0 {
        return Err(StatsError::BadBins);
    }
    let lo = a.iter().chain(b).copied().fold(f64::INFINITY, f64::min);
    let hi = a.iter().chain(b).copied().fold(f64::NEG_INFINITY, f64::max);
    let histogram = |values: &[f64]| {
        let mut counts = vec![0usize; bins];
        for &v in values {
            let idx = if hi > lo {
                (((v - lo) / (hi - lo)) * bins as f64).floor() as usize
            } else {
                0
            };
            counts[idx.min(bins - 1)] += 1;
        }
        let n = values.len() as f64;
        counts.into_iter().map(move |c| c as f64 / n)
    };
    let bc: f64 = histogram(a)
        .zip(histogram(b))
        .map(|(p, q)| (p * q).sqrt())
        .sum();
    Ok(bc.clamp(0.0, 1.0))
}

/// Symmetric column-by-column similarity table.
#[derive(Clone, Debug, PartialEq)]
pub struct SimilarityTable {
    pub labels: Vec<String>,
    values: Vec<f64>,
}

impl SimilarityTable {
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.values[i * self.labels.len() + j]
    }

    /// `col_a,col_b,bc` for each unordered pair of distinct columns.
    pub fn pairs_csv(&self) -> String {
        let mut out = String::from("col_a,col_b,bc\n");
        let n = self.labels.len();
        for i in 0..n {
            for j in i + 1..n {
                out.push_str(&format!(
                    "{},{},{:.6}\n",
                    crate::text::csv_field(&self.labels[i]),
                    crate::text::csv_field(&self.labels[j]),
                    self.get(i, j)
                ));
            }
        }
        out
    }

    /// `1 - similarity` as a distance matrix, for clustering.
    pub fn to_distance(&self) -> Result<crate::matrix::DistanceMatrix, crate::matrix::MatrixError> {
        crate::matrix::DistanceMatrix::from_fn(self.labels.clone(), |i, j| {
            (1.0 - self.get(i, j)).max(0.0)
        })
    }
}

/// Bhattacharyya coefficient for every pair of t-scored columns.
pub fn bhatt_matrix(
    frame: &AnalysisFrame,
    bins: Option<usize>,
) -> Result<SimilarityTable, StatsError> {
    if frame.n_columns() < 2 {
        return Err(StatsError::TooFewValues {
            needed: 2,
            found: frame.n_columns(),
        });
    }
    let t = frame.tscored()?;
    let cols: Vec<&[f64]> = t.columns().map(|(_, v)| v).collect();
    let n = cols.len();
    let mut values = vec![1.0; n * n];
    for i in 0..n {
        for j in i + 1..n {
            let bc = bhattacharyya(cols[i], cols[j], bins)?;
            values[i * n + j] = bc;
            values[j * n + i] = bc;
        }
    }
    Ok(SimilarityTable {
        labels: t.names().map(str::to_string).collect(),
        values,
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RegressionResult {
    pub slope: f64,
    pub intercept: f64,
    pub r_squared: f64,
    pub n: usize,
}

impl RegressionResult {
    /// `key=value` lines, each key prefixed with `prefix`.
    pub fn to_report(&self, prefix: &str) -> String {
        format!(
            "{p}n={}\n{p}slope={:.6}\n{p}intercept={:.6}\n{p}r_squared={:.6}\n",
            self.n,
            self.slope,
            self.intercept,
            self.r_squared,
            p = prefix
        )
    }
}

/// Ordinary least squares fit of `y` on `x` (or on `log10(x)`).
pub fn linregress(x: &[f64], y: &[f64], log10_x: bool) -> Result<RegressionResult, StatsError> {
    if x.len() != y.len() {
        return Err(StatsError::LengthMismatch {
            x: x.len(),
            y: y.len(),
        });
    }
    if x.len() < 3 {
        return Err(StatsError::TooFewValues {
            needed: 3,
            found: x.len(),
        });
    }
    if x.iter().chain(y).any(|v| !v.is_finite()) {
        return Err(StatsError::NonFinite);
    }
    let xs: Vec<f64> = if log10_x {
        if x.iter().any(|&v| v <= 0.0) {
            return Err(StatsError::NonPositiveX);
        }
        x.iter().map(|v| v.log10()).collect()
    } else {
        x.to_vec()
    };
    let mx = mean(&xs);
    let my = mean(y);
    let sxx: f64 = xs.iter().map(|v| (v - mx) * (v - mx)).sum();
    if sxx == 0.0 {
        return Err(StatsError::DegenerateX);
    }
    let sxy: f64 = xs.iter().zip(y).map(|(a, b)| (a - mx) * (b - my)).sum();
    let slope = sxy / sxx;
    let intercept = my - slope * mx;
    let ss_tot: f64 = y.iter().map(|v| (v - my) * (v - my)).sum();
    let ss_res: f64 = xs
        .iter()
        .zip(y)
        .map(|(a, b)| {
            let r = b - (intercept + slope * a);
            r * r
        })
        .sum();
    let r_squared = if ss_tot == 0.0 {
        0.0
    } else {
        (1.0 - ss_res / ss_tot).clamp(0.0, 1.0)
    };
    Ok(RegressionResult {
        slope,
        intercept,
        r_squared,
        n: x.len(),
    })
}
