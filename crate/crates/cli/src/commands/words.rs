use lingdist::cluster::{agglomerate, export_newick, export_svg};
use lingdist::editdist::{self, oc};
use lingdist::stats::{self, AnalysisFrame, DEFAULT_GRID_POINTS};

use super::{load, require_languages};
use crate::artifacts::{Artifacts, Outcome};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::{plots, table};

/// Per-concept distance analysis: one matrix, density curve and summary
/// row per concept, then t-scores and Bhattacharyya coefficients across
/// concepts.
pub fn words_analyse(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let inputs = load(cfg)?;
    let (lex, tab) = (&inputs.lexicon, &inputs.table);
    require_languages(cfg, lex, 3, "per-word analysis")?;
    let concepts = lex.concept_labels();
    if concepts.len() < 2 {
        return Err(CliError::Data(format!(
            "{}: per-word analysis needs at least 2 concepts, found {}",
            cfg.lexicon.display(),
            concepts.len()
        )));
    }

    let mut artifacts = Artifacts::new();
    let mut columns = Vec::with_capacity(concepts.len());
    let mut pairs = Vec::new();
    for (i, concept) in concepts.iter().enumerate() {
        let m = editdist::concept_matrix(lex, i, tab)
            .map_err(CliError::distance(format!("concept `{}`", concept)))?;
        artifacts.add(format!("concepts/{}.oc", concept), oc::to_oc_string(&m));
        if pairs.is_empty() {
            let names = m.labels();
            for a in 0..names.len() {
                for b in a + 1..names.len() {
                    pairs.push((names[a].clone(), names[b].clone()));
                }
            }
        }
        columns.push((concept.clone(), m.upper()));
    }
    let row_labels = pairs.iter().map(|(a, b)| format!("{}|{}", a, b)).collect();
    let frame =
        AnalysisFrame::new(columns, Some(row_labels)).map_err(CliError::stats("distance table"))?;

    let summary = stats::mean_sd(&frame).map_err(CliError::stats("mean and SD"))?;
    artifacts.add("mean_sd.csv", stats::summary_csv(&summary));
    artifacts.add(
        "mean_sd.svg",
        plots::bar_chart(
            "Mean, SD and mean x SD per concept",
            &concepts,
            &[
                ("mean", summary.iter().map(|r| r.mean).collect()),
                ("sd", summary.iter().map(|r| r.sd).collect()),
                ("mean x sd", summary.iter().map(|r| r.mean_sd).collect()),
            ],
            "normalised distance",
        ),
    );

    for (concept, values) in frame.columns() {
        let curve = stats::kde(values, DEFAULT_GRID_POINTS)
            .map_err(CliError::stats(format!("density of `{}`", concept)))?;
        artifacts.add(format!("density/{}.csv", concept), curve.to_csv());
        artifacts.add(
            format!("density/{}.svg", concept),
            plots::density_plot(
                &format!("Distances for `{}`", concept),
                &curve,
                values,
                "normalised distance",
            ),
        );
    }

    let tscored = frame.tscored().map_err(CliError::stats("t-scores"))?;
    let mut header = vec!["language_a".to_string(), "language_b".to_string()];
    header.extend(concepts.iter().cloned());
    let rows = pairs.iter().enumerate().map(|(r, (a, b))| {
        let mut row = vec![a.clone(), b.clone()];
        row.extend(tscored.columns().map(|(_, v)| format!("{:.6}", v[r])));
        row
    });
    artifacts.add("tscores.csv", table::to_csv(&header, rows));

    let bc = stats::bhatt_matrix(&frame, cfg.bins)
        .map_err(CliError::stats("Bhattacharyya coefficients"))?;
    artifacts.add("bhattacharyya.csv", bc.pairs_csv());
    let distance = bc
        .to_distance()
        .map_err(|e| CliError::Data(format!("Bhattacharyya distances: {}", e)))?;
    let tree = agglomerate(&distance, cfg.linkage)
        .map_err(CliError::cluster("Bhattacharyya dendrogram"))?;
    artifacts.add("bhattacharyya.nwk", export_newick(&tree) + "\n");
    artifacts.add("bhattacharyya_dendrogram.svg", export_svg(&tree, None));

    let summary_lines = vec![
        format!(
            "{} languages, {} concepts, {} language pairs",
            lex.len(),
            concepts.len(),
            pairs.len()
        ),
        format!("{} files", artifacts.len()),
    ];
    Ok(Outcome {
        artifacts,
        summary: summary_lines,
        warnings: inputs.warnings,
    })
}
