use lingdist::editdist::{self, oc};
use lingdist::stats::{self, StatsError};

use super::{load, require_languages};
use crate::artifacts::{Artifacts, Outcome};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::{inputs, plots, table};

/// Regresses linguistic distance on geographic distance, raw and log10.
pub fn relationship(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let geo_path = cfg
        .geo
        .as_deref()
        .ok_or_else(|| CliError::Usage("relationship needs --geo".to_string()))?;
    let inputs = load(cfg)?;
    let lex = &inputs.lexicon;
    require_languages(cfg, lex, 3, "regression")?;
    let geo = inputs::load_geo(geo_path)?;

    let m = editdist::language_matrix(lex, &inputs.table)
        .map_err(CliError::distance("language distances"))?;
    let names = m.labels();
    let mut rows = Vec::new();
    let (mut xs, mut ys) = (Vec::new(), Vec::new());
    for a in 0..names.len() {
        for b in a + 1..names.len() {
            let km = geo.get(&names[a], &names[b])?;
            let d = m.get(a, b);
            rows.push(vec![
                names[a].clone(),
                names[b].clone(),
                format!("{:.6}", d),
                format!("{:.6}", km),
            ]);
            xs.push(km);
            ys.push(d);
        }
    }

    let raw =
        stats::linregress(&xs, &ys, false).map_err(CliError::stats("regression on distance"))?;
    let log = stats::linregress(&xs, &ys, true).map_err(|e| match e {
        StatsError::NonPositiveX => CliError::NonPositiveDistance {
            path: geo.path().to_path_buf(),
        },
        other => CliError::Stats {
            context: "regression on log10 distance".to_string(),
            source: other,
        },
    })?;

    let mut artifacts = Artifacts::new();
    artifacts.add("languages.oc", oc::to_oc_string(&m));
    let header = [
        "language_a",
        "language_b",
        "linguistic_distance",
        "geo_distance",
    ]
    .map(String::from);
    artifacts.add("pairs.csv", table::to_csv(&header, rows));
    artifacts.add(
        "regression.txt",
        raw.to_report("raw.") + &log.to_report("log10."),
    );
    artifacts.add(
        "scatter.svg",
        plots::scatter_plot(
            &format!(
                "Linguistic vs geographic distance (R² = {:.3})",
                raw.r_squared
            ),
            &xs,
            &ys,
            Some((raw.slope, raw.intercept)),
            "geographic distance (km)",
            "linguistic distance",
        ),
    );
    let log_xs: Vec<f64> = xs.iter().map(|x| x.log10()).collect();
    artifacts.add(
        "scatter_log10.svg",
        plots::scatter_plot(
            &format!(
                "Linguistic vs log10 geographic distance (R² = {:.3})",
                log.r_squared
            ),
            &log_xs,
            &ys,
            Some((log.slope, log.intercept)),
            "log10 geographic distance (km)",
            "linguistic distance",
        ),
    );

    Ok(Outcome {
        artifacts,
        summary: vec![
            format!("{} language pairs", xs.len()),
            format!("raw: R² = {:.6}, slope = {:.6}", raw.r_squared, raw.slope),
            format!("log10: R² = {:.6}, slope = {:.6}", log.r_squared, log.slope),
        ],
        warnings: inputs.warnings,
    })
}
