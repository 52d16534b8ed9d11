use lingdist::cluster::{agglomerate, best_cut, cut, export_newick, export_svg, purity};
use lingdist::editdist::{self, oc};

use super::{load, require_languages};
use crate::artifacts::{Artifacts, Outcome};
use crate::config::RunConfig;
use crate::error::CliError;
use crate::{inputs, table};

/// Clusters languages by mean word distance and scores every cut.
pub fn cluster(cfg: &RunConfig) -> Result<Outcome, CliError> {
    let inputs = load(cfg)?;
    let lex = &inputs.lexicon;
    require_languages(cfg, lex, 3, "clustering")?;
    let truth = cfg.truth.as_deref().map(inputs::load_truth).transpose()?;

    let m = editdist::language_matrix(lex, &inputs.table)
        .map_err(CliError::distance("language distances"))?;
    let tree = agglomerate(&m, cfg.linkage).map_err(CliError::cluster("clustering"))?;
    let best = best_cut(&m, &tree).map_err(CliError::cluster("silhouette scan"))?;
    let chosen = match cfg.k {
        Some(k) => cut(&tree, k).map_err(CliError::cluster("forced cut"))?,
        None => best.assignment.clone(),
    };

    let mut artifacts = Artifacts::new();
    artifacts.add("languages.oc", oc::to_oc_string(&m));
    artifacts.add("dendrogram.nwk", export_newick(&tree) + "\n");
    artifacts.add("dendrogram.svg", export_svg(&tree, Some(&chosen)));
    artifacts.add("silhouette_scan.csv", best.scan_csv());
    let rows = best
        .report
        .labels
        .iter()
        .zip(&best.report.per_point)
        .map(|(l, s)| vec![l.clone(), format!("{:.6}", s)]);
    artifacts.add(
        "silhouette.csv",
        table::to_csv(&["label".to_string(), "silhouette".to_string()], rows),
    );
    artifacts.add("clusters.csv", chosen.to_csv());

    let mut summary = vec![format!(
        "best cut k = {} (mean silhouette {:.6})",
        best.k, best.report.mean
    )];
    if let Some(k) = cfg.k {
        summary.push(format!("forced cut k = {}", k));
    }
    if let Some(truth) = &truth {
        let report = purity(&chosen, truth).map_err(CliError::cluster("purity"))?;
        summary.push(format!(
            "overall purity {:.6}, {} of {} clusters pure",
            report.overall,
            report.pure_clusters(),
            chosen.k()
        ));
        artifacts.add("purity.csv", report.to_csv());
    }
    Ok(Outcome {
        artifacts,
        summary,
        warnings: inputs.warnings,
    })
}
